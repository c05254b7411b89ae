#include "eqobs/cache.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace eqobs {

namespace {

using nlohmann::json;

constexpr int kCacheVersion = 1;

std::string hex_key(uint64_t key) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[key & 0xf];
    key >>= 4;
  }
  return out;
}

bool validate_cached_classes(const PermGroup& g,
                             const std::vector<std::vector<uint32_t>>& classes,
                             const MarksTable& marks) {
  const size_t m = classes.size();
  if (m == 0 || marks.size() != m) return false;
  std::pair<size_t, std::vector<uint32_t>> prev_key{0, {}};
  for (size_t i = 0; i < m; ++i) {
    const auto& members = classes[i];
    if (!std::is_sorted(members.begin(), members.end())) return false;
    if (!is_closed_member_set(g, members)) return false;
    if (static_cast<int64_t>(members.size()) != 0 &&
        g.order() % static_cast<int64_t>(members.size()) != 0)
      return false;
    std::pair<size_t, std::vector<uint32_t>> key{members.size(), members};
    if (i > 0 && !(prev_key < key)) return false; // canonical ordering broken
    prev_key = std::move(key);
  }
  if (classes.front().size() != 1) return false;                          // trivial class
  if (classes.back().size() != static_cast<size_t>(g.order())) return false; // full class
  for (size_t h = 0; h < m; ++h) {
    if (marks[h].size() != m) return false;
    if (marks[h][h] <= 0) return false;
    for (size_t k = h + 1; k < m; ++k)
      if (marks[h][k] != 0) return false; // triangularity w.r.t. the class order
    if (marks[h][0] != g.order() / static_cast<int64_t>(classes[h].size())) return false;
  }
  return true;
}

} // namespace

std::string group_cache_path(const PermGroup& group, const std::string& dir) {
  return (std::filesystem::path(dir) / (hex_key(group.content_key()) + ".json")).string();
}

bool load_group_cache(const GroupPtr& group, const std::string& dir, const Bounds& bounds) {
  if (group->order() > bounds.max_subgroup_enum_order) return false;
  std::ifstream in(group_cache_path(*group, dir));
  if (!in) return false;
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) return false;
  try {
    if (doc.at("version").get<int>() != kCacheVersion) return false;
    if (doc.at("degree").get<uint32_t>() != group->degree()) return false;
    if (doc.at("order").get<int64_t>() != group->order()) return false;
    std::vector<std::vector<uint32_t>> classes;
    for (const json& c : doc.at("classes"))
      classes.push_back(c.at("members").get<std::vector<uint32_t>>());
    MarksTable marks;
    for (const json& row : doc.at("marks")) marks.push_back(row.get<std::vector<int64_t>>());
    if (!validate_cached_classes(*group, classes, marks)) return false;
    group->install_class_data(std::move(classes), std::move(marks));
    return true;
  } catch (const json::exception&) {
    return false;
  } catch (const Error&) {
    return false;
  }
}

void store_group_cache(const GroupPtr& group, const std::string& dir, const Bounds& bounds) {
  const SubgroupClassTable& classes = group->subgroup_classes(bounds);
  const MarksTable& marks = group->table_of_marks(bounds);
  std::filesystem::create_directories(dir);

  json doc;
  doc["version"] = kCacheVersion;
  doc["degree"] = group->degree();
  doc["order"] = group->order();
  doc["description"] = group->description();
  json jclasses = json::array();
  for (size_t i = 0; i < classes.count(); ++i) {
    json c;
    c["name"] = classes.name(i);
    c["members"] = classes.representative(i).members();
    jclasses.push_back(std::move(c));
  }
  doc["classes"] = std::move(jclasses);
  doc["marks"] = marks;

  std::string path = group_cache_path(*group, dir);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ParseError("cannot write cache file '" + tmp + "'");
    out << doc.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

} // namespace eqobs
