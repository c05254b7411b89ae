#include "eqobs/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace eqobs {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("invalid JSON document");
  return doc;
}

int64_t get_int(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(where + ": missing or non-integer field '" + key + "'");
  return j[key].get<int64_t>();
}

std::string get_string(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string())
    throw ParseError(where + ": missing or non-string field '" + key + "'");
  return j[key].get<std::string>();
}

std::vector<Perm> parse_perm_array(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": permutation list must be an array");
  std::vector<Perm> out;
  for (const json& p : arr) {
    if (!p.is_array()) throw ParseError(where + ": permutation must be an array of images");
    std::vector<uint32_t> img;
    for (const json& v : p) {
      if (!v.is_number_unsigned() && !v.is_number_integer())
        throw ParseError(where + ": permutation image must be an integer");
      int64_t x = v.get<int64_t>();
      if (x < 0) throw ParseError(where + ": permutation images are 0-based and nonnegative");
      img.push_back(static_cast<uint32_t>(x));
    }
    out.push_back(Perm::from_images(std::move(img)));
  }
  return out;
}

json perm_to_json(const Perm& p) {
  json arr = json::array();
  for (uint32_t v : p.images()) arr.push_back(v);
  return arr;
}

struct ParsedStrata {
  PosetInput poset;
  std::vector<std::vector<Perm>> isotropy;
  std::vector<int64_t> quotient_euler;
  bool has_quotient_euler = false;
};

ParsedStrata parse_strata_block(const json& doc) {
  ParsedStrata out;
  if (!doc.contains("strata") || !doc["strata"].is_array())
    throw ParseError("missing or malformed 'strata' array");
  for (const json& s : doc["strata"]) {
    std::string id = get_string(s, "id", "stratum");
    out.poset.ids.push_back(id);
    out.poset.dims.push_back(get_int(s, "dim", "stratum '" + id + "'"));
    if (!s.contains("isotropy"))
      throw ParseError("stratum '" + id + "': missing 'isotropy' generator list");
    out.isotropy.push_back(parse_perm_array(s["isotropy"], "stratum '" + id + "' isotropy"));
    if (s.contains("quotient_euler")) {
      out.quotient_euler.push_back(get_int(s, "quotient_euler", "stratum '" + id + "'"));
      out.has_quotient_euler = true;
    } else {
      out.quotient_euler.push_back(0);
    }
  }
  if (doc.contains("order")) {
    if (!doc["order"].is_array()) throw ParseError("'order' must be an array of id pairs");
    for (const json& pair : doc["order"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        throw ParseError("'order' entries must be [lower, upper] id pairs");
      out.poset.order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  if (doc.contains("top")) out.poset.top = get_string(doc, "top", "document");
  if (doc.contains("eu_table")) {
    if (!doc["eu_table"].is_array()) throw ParseError("'eu_table' must be an array");
    for (const json& e : doc["eu_table"]) {
      out.poset.eu.push_back({get_string(e, "lower", "eu_table entry"),
                              get_string(e, "upper", "eu_table entry"),
                              get_int(e, "value", "eu_table entry")});
    }
  }
  return out;
}

// form_data: [{stratum, orbits: [{index, isotropy?}]}]; a missing isotropy
// defaults to the stratum's representative subgroup.
template <typename StratumLookup, typename DefaultIsotropy>
std::vector<FormRecord> parse_form_records(const json& arr, GroupPtr group,
                                           const StratumLookup& lookup,
                                           const DefaultIsotropy& default_iso) {
  if (!arr.is_array()) throw ParseError("'form_data' must be an array");
  std::vector<FormRecord> records;
  for (const json& r : arr) {
    std::string sid = get_string(r, "stratum", "form_data record");
    auto idx = lookup(sid);
    if (!idx) throw ParseError("form_data references unknown stratum '" + sid + "'");
    FormRecord rec{*idx, {}};
    if (!r.contains("orbits") || !r["orbits"].is_array())
      throw ParseError("form_data record for '" + sid + "' needs an 'orbits' array");
    for (const json& o : r["orbits"]) {
      OrbitEntry entry{get_int(o, "index", "orbit entry"), default_iso(*idx)};
      if (o.contains("isotropy"))
        entry.isotropy = Subgroup::from_generators(
            group, parse_perm_array(o["isotropy"], "orbit isotropy"));
      rec.entries.push_back(std::move(entry));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

json strata_to_json(const StratPoset& poset, const std::vector<Subgroup>& isotropy,
                    const std::vector<int64_t>* quotient_euler) {
  json doc;
  json strata = json::array();
  for (size_t i = 0; i < poset.count(); ++i) {
    json s;
    s["id"] = poset.id(i);
    s["dim"] = poset.dim(i);
    json gens = json::array();
    for (const Perm& p : isotropy[i].member_perms()) gens.push_back(perm_to_json(p));
    s["isotropy"] = gens;
    if (quotient_euler) s["quotient_euler"] = (*quotient_euler)[i];
    strata.push_back(std::move(s));
  }
  doc["strata"] = std::move(strata);
  json order = json::array();
  for (size_t i = 0; i < poset.count(); ++i)
    for (size_t j = 0; j < poset.count(); ++j)
      if (i != j && poset.leq(i, j)) order.push_back(json::array({poset.id(i), poset.id(j)}));
  doc["order"] = std::move(order);
  doc["top"] = poset.id(poset.top());
  json eu = json::array();
  for (size_t i = 0; i < poset.count(); ++i)
    for (size_t j = 0; j < poset.count(); ++j)
      if (poset.leq(i, j))
        eu.push_back(json{{"lower", poset.id(i)}, {"upper", poset.id(j)}, {"value", poset.eu(i, j)}});
  doc["eu_table"] = std::move(eu);
  return doc;
}

json form_records_to_json(const std::vector<FormRecord>& records, const StratPoset& poset) {
  json arr = json::array();
  for (const FormRecord& rec : records) {
    json r;
    r["stratum"] = poset.id(rec.stratum);
    json orbits = json::array();
    for (const OrbitEntry& e : rec.entries) {
      json o;
      o["index"] = e.index;
      json gens = json::array();
      for (const Perm& p : e.isotropy.member_perms()) gens.push_back(perm_to_json(p));
      o["isotropy"] = gens;
      orbits.push_back(std::move(o));
    }
    r["orbits"] = std::move(orbits);
    arr.push_back(std::move(r));
  }
  return arr;
}

} // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedGerm load_germ_json(const std::string& json_text, const Bounds& bounds) {
  json doc = parse_json(json_text);
  GroupPtr group = generate_group(get_string(doc, "group", "germ file"), bounds);
  ParsedStrata parsed = parse_strata_block(doc);

  GermInput input{group, 0, std::move(parsed.poset), std::move(parsed.isotropy)};
  if (doc.contains("ambient_dim")) input.ambient_dim = get_int(doc, "ambient_dim", "germ file");

  LoadedGerm out;
  out.report = StratGermData::validate(input, bounds);
  if (!out.report.ok()) throw ValidationError(out.report.joined_errors());
  out.germ = StratGermData::build(input, bounds);

  if (doc.contains("form_data")) {
    FormFlavor flavor = FormFlavor::complex_form;
    if (doc.contains("flavor")) {
      std::string f = get_string(doc, "flavor", "germ file");
      if (f == "real") flavor = FormFlavor::real_form;
      else if (f == "complex") flavor = FormFlavor::complex_form;
      else throw ParseError("flavor must be 'real' or 'complex', got '" + f + "'");
    }
    auto records = parse_form_records(
        doc["form_data"], group,
        [&](const std::string& id) { return out.germ->poset().index_of(id); },
        [&](size_t idx) { return out.germ->isotropy(idx); });
    out.form = FormSingularityData(out.germ, std::move(records), flavor);
  }
  return out;
}

LoadedGerm load_germ_file(const std::string& path, const Bounds& bounds) {
  try {
    return load_germ_json(read_text_file(path), bounds);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string serialize_germ(const StratGermData& germ, const FormSingularityData* form) {
  std::vector<Subgroup> iso;
  for (size_t i = 0; i < germ.poset().count(); ++i) iso.push_back(germ.isotropy(i));
  json doc = strata_to_json(germ.poset(), iso, nullptr);
  doc["group"] = germ.group()->description();
  doc["ambient_dim"] = germ.ambient_dim();
  if (form) {
    doc["form_data"] = form_records_to_json(form->records(), germ.poset());
    doc["flavor"] = form->flavor() == FormFlavor::real_form ? "real" : "complex";
  }
  return doc.dump(2);
}

LoadedVariety load_variety_json(const std::string& json_text, const Bounds& bounds) {
  json doc = parse_json(json_text);
  GroupPtr group = generate_group(get_string(doc, "group", "variety file"), bounds);
  ParsedStrata parsed = parse_strata_block(doc);

  VarietyInput input{group, std::move(parsed.poset), std::move(parsed.isotropy),
                     std::move(parsed.quotient_euler), VarietyKind::compact};
  if (doc.contains("kind")) {
    std::string k = get_string(doc, "kind", "variety file");
    if (k == "compact") input.kind = VarietyKind::compact;
    else if (k == "affine") input.kind = VarietyKind::affine;
    else throw ParseError("kind must be 'compact' or 'affine', got '" + k + "'");
  }

  LoadedVariety out;
  out.report = CompactStratVariety::validate(input, bounds);
  if (!out.report.ok()) throw ValidationError(out.report.joined_errors());
  out.variety = CompactStratVariety::build(input, bounds);

  if (doc.contains("form_data")) {
    auto records = parse_form_records(
        doc["form_data"], group,
        [&](const std::string& id) -> std::optional<size_t> {
          if (out.variety->is_empty()) return std::nullopt;
          return out.variety->poset().index_of(id);
        },
        [&](size_t idx) { return out.variety->isotropy(idx); });
    out.form = GlobalFormData{std::move(records)};
  }
  return out;
}

LoadedVariety load_variety_file(const std::string& path, const Bounds& bounds) {
  try {
    return load_variety_json(read_text_file(path), bounds);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string serialize_variety(const CompactStratVariety& v, const GlobalFormData* form) {
  json doc;
  if (v.is_empty()) {
    doc["strata"] = json::array();
    doc["order"] = json::array();
    doc["eu_table"] = json::array();
  } else {
    std::vector<Subgroup> iso;
    std::vector<int64_t> qe;
    for (size_t i = 0; i < v.stratum_count(); ++i) {
      iso.push_back(v.isotropy(i));
      qe.push_back(v.quotient_euler(i));
    }
    doc = strata_to_json(v.poset(), iso, &qe);
    if (form) doc["form_data"] = form_records_to_json(form->records, v.poset());
  }
  doc["group"] = v.group()->description();
  doc["kind"] = v.kind() == VarietyKind::compact ? "compact" : "affine";
  return doc.dump(2);
}

bool looks_like_variety_json(const std::string& json_text) {
  json doc = parse_json(json_text);
  if (doc.contains("kind")) return true;
  if (doc.contains("strata") && doc["strata"].is_array())
    for (const json& s : doc["strata"])
      if (s.contains("quotient_euler")) return true;
  return false;
}

// ------------------------------------------------------------ expressions

namespace {

class ExprParser {
public:
  ExprParser(const std::string& text, GroupPtr group, const Bounds& bounds)
      : text_(text), group_(std::move(group)), bounds_(bounds) {}

  BurnsideElement parse() {
    BurnsideElement e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing characters in element expression at offset " +
                       std::to_string(pos_));
    return e;
  }

private:
  BurnsideElement expr() {
    BurnsideElement acc = term();
    while (true) {
      skip_ws();
      if (peek() == '+') { ++pos_; acc += term(); }
      else if (peek() == '-') { ++pos_; acc -= term(); }
      else break;
    }
    return acc;
  }

  BurnsideElement term() {
    BurnsideElement acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') { ++pos_; acc = acc * factor(); }
      else break;
    }
    return acc;
  }

  BurnsideElement factor() {
    skip_ws();
    char c = peek();
    if (c == '-') { ++pos_; return -factor(); }
    if (c == '+') { ++pos_; return factor(); }
    if (c == '(') {
      ++pos_;
      BurnsideElement e = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("missing ')' in element expression");
      ++pos_;
      return e;
    }
    if (c == '[') return atom();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      int64_t v = std::stoll(text_.substr(start, pos_ - start));
      return v * BurnsideElement::unit(group_, bounds_);
    }
    throw ParseError("expected a coefficient, '[G/...]' class or '(' in element expression");
  }

  BurnsideElement atom() {
    // [G/H<order>_<k>]
    if (text_.compare(pos_, 3, "[G/") != 0)
      throw ParseError("class terms must look like [G/H<order>_<k>]");
    pos_ += 3;
    size_t end = text_.find(']', pos_);
    if (end == std::string::npos) throw ParseError("missing ']' in class term");
    std::string name = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    const SubgroupClassTable& classes = group_->subgroup_classes(bounds_);
    auto idx = classes.index_by_name(name);
    if (!idx)
      throw ParseError("unknown subgroup class '" + name + "' for group " +
                       group_->description());
    return BurnsideElement::basis(group_, *idx, bounds_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  GroupPtr group_;
  Bounds bounds_;
  size_t pos_ = 0;
};

} // namespace

BurnsideElement parse_element_expr(const std::string& text, GroupPtr group, const Bounds& bounds) {
  ExprParser parser(text, std::move(group), bounds);
  return parser.parse();
}

} // namespace eqobs
