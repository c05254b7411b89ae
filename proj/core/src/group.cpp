#include "eqobs/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <unordered_set>

#include "eqobs/checked.hpp"

namespace eqobs {

namespace {

constexpr uint64_t kFnvOffset = 1469598103934665603ull;
constexpr uint64_t kFnvPrime = 1099511628211ull;

uint64_t fnv_mix(uint64_t h, uint64_t v) {
  h ^= v;
  h *= kFnvPrime;
  return h;
}

// Right-multiplication closure of a generating set.
std::vector<Perm> closure_of(uint32_t degree, const std::vector<Perm>& gens, int64_t max_order) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> list;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  list.push_back(id);
  for (size_t qi = 0; qi < list.size(); ++qi) {
    for (const Perm& g : gens) {
      Perm p = list[qi] * g;
      if (seen.insert(p).second) {
        if (static_cast<int64_t>(list.size()) + 1 > max_order)
          throw BoundError("group order bound exceeded (max " + std::to_string(max_order) + ")");
        list.push_back(std::move(p));
      }
    }
  }
  return list;
}

// Greedy generating subset of a sorted element list. Also proves closure:
// the returned generators close to exactly the input set or we throw.
std::vector<Perm> greedy_generators_checked(uint32_t degree, const std::vector<Perm>& sorted_elems) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> current;
  current.insert(Perm::identity(degree));
  for (const Perm& e : sorted_elems) {
    if (current.count(e)) continue;
    gens.push_back(e);
    auto closed = closure_of(degree, gens, static_cast<int64_t>(sorted_elems.size()));
    current.clear();
    current.insert(closed.begin(), closed.end());
  }
  if (current.size() != sorted_elems.size())
    throw ValidationError("element set is not closed under composition");
  for (const Perm& e : sorted_elems)
    if (!current.count(e)) throw ValidationError("element set is not closed under composition");
  return gens;
}

std::string perms_to_description(const std::vector<Perm>& gens, uint32_t degree) {
  std::string s = "perm:[";
  if (gens.empty()) {
    s += Perm::identity(degree).to_string();
  } else {
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i) s += ",";
      s += gens[i].to_string();
    }
  }
  return s + "]";
}

struct Registry {
  std::mutex mutex;
  std::unordered_map<uint64_t, std::vector<GroupPtr>> by_key;
};

Registry& registry() {
  static Registry r;
  return r;
}

int64_t parse_int(std::string_view s, const std::string& what) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("invalid integer in " + what + ": '" + std::string(s) + "'");
  return v;
}

// Parses `[[1,2,0],[0,2,1]]` into permutations.
std::vector<Perm> parse_perm_list(std::string_view s) {
  std::vector<Perm> result;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= s.size() || s[i] != c)
      throw ParseError(std::string("malformed permutation list: expected '") + c + "'");
    ++i;
  };
  expect('[');
  skip_ws();
  if (i < s.size() && s[i] == ']') {
    ++i;
  } else {
    while (true) {
      expect('[');
      std::vector<uint32_t> img;
      skip_ws();
      if (i < s.size() && s[i] == ']') {
        ++i;
      } else {
        while (true) {
          skip_ws();
          size_t start = i;
          while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) ++i;
          if (start == i) throw ParseError("malformed permutation list: expected digit");
          img.push_back(static_cast<uint32_t>(parse_int(s.substr(start, i - start), "permutation")));
          skip_ws();
          if (i < s.size() && s[i] == ',') { ++i; continue; }
          expect(']');
          break;
        }
      }
      result.push_back(Perm::from_images(std::move(img)));
      skip_ws();
      if (i < s.size() && s[i] == ',') { ++i; continue; }
      expect(']');
      break;
    }
  }
  skip_ws();
  if (i != s.size()) throw ParseError("malformed permutation list: trailing characters");
  return result;
}

} // namespace

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<uint32_t> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_) throw ValidationError("subgroup requires a parent group");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_[0] != parent_->identity_index())
    throw ValidationError("subgroup must contain the identity");
  if (members_.back() >= parent_->order())
    throw ValidationError("subgroup member index out of range");
}

Subgroup Subgroup::from_generator_indices(GroupPtr parent, const std::vector<uint32_t>& gens) {
  std::vector<uint32_t> members{parent->identity_index()};
  std::vector<bool> in(parent->order(), false);
  in[parent->identity_index()] = true;
  for (uint32_t g : gens) {
    if (g >= parent->order()) throw ValidationError("generator index out of range");
    if (!in[g]) { in[g] = true; members.push_back(g); }
  }
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      for (uint32_t p : {parent->product(members[i], members[j]),
                         parent->product(members[j], members[i])}) {
        if (!in[p]) { in[p] = true; members.push_back(p); }
      }
    }
  }
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::from_generators(GroupPtr parent, const std::vector<Perm>& gens) {
  std::vector<uint32_t> idx;
  for (const Perm& p : gens) {
    if (p.degree() != parent->degree())
      throw ValidationError("subgroup generator degree does not match the group");
    auto i = parent->index_of(p);
    if (!i) throw ValidationError("subgroup generator " + p.to_string() + " is not a group element");
    idx.push_back(*i);
  }
  return from_generator_indices(std::move(parent), idx);
}

bool Subgroup::contains(uint32_t elem_index) const {
  return std::binary_search(members_.begin(), members_.end(), elem_index);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(members_.begin(), members_.end(),
                       other.members_.begin(), other.members_.end());
}

Subgroup Subgroup::conjugated_by(uint32_t g) const {
  std::vector<uint32_t> conj(members_.size());
  for (size_t i = 0; i < members_.size(); ++i) conj[i] = parent_->conjugate(g, members_[i]);
  return Subgroup(parent_, std::move(conj));
}

std::vector<Perm> Subgroup::member_perms() const {
  std::vector<Perm> out;
  out.reserve(members_.size());
  for (uint32_t i : members_) out.push_back(parent_->element(i));
  return out;
}

GroupPtr Subgroup::as_group() const {
  return intern_group(parent_->degree(), member_perms());
}

bool Subgroup::operator==(const Subgroup& other) const {
  return parent_ == other.parent_ && members_ == other.members_;
}

bool is_closed_member_set(const PermGroup& g, const std::vector<uint32_t>& sorted_members) {
  if (sorted_members.empty() || sorted_members[0] != g.identity_index()) return false;
  for (uint32_t a : sorted_members) {
    if (a >= g.order()) return false;
    for (uint32_t b : sorted_members) {
      if (!std::binary_search(sorted_members.begin(), sorted_members.end(), g.product(a, b)))
        return false;
    }
  }
  return true;
}

// ---------------------------------------------------- SubgroupClassTable

SubgroupClassTable::SubgroupClassTable(GroupPtr parent, std::vector<Subgroup> reps,
                                       std::vector<int64_t> class_sizes)
    : parent_(std::move(parent)), reps_(std::move(reps)), class_sizes_(std::move(class_sizes)) {
  names_.reserve(reps_.size());
  int64_t prev_order = -1;
  int64_t k = 0;
  for (size_t i = 0; i < reps_.size(); ++i) {
    int64_t ord = reps_[i].order();
    k = (ord == prev_order) ? k + 1 : 0;
    prev_order = ord;
    names_.push_back("H" + std::to_string(ord) + "_" + std::to_string(k));
    by_name_[names_.back()] = i;
  }
}

std::optional<size_t> SubgroupClassTable::index_by_name(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

size_t SubgroupClassTable::class_of(const Subgroup& h) const {
  if (h.parent() != parent_)
    throw ValidationError("subgroup does not belong to this class table's group");
  for (size_t i = 0; i < reps_.size(); ++i) {
    if (reps_[i].order() != h.order()) continue;
    for (int64_t g = 0; g < parent_->order(); ++g) {
      if (h.conjugated_by(static_cast<uint32_t>(g)).members() == reps_[i].members()) return i;
    }
  }
  throw ValidationError("subgroup not conjugate to any class representative");
}

size_t SubgroupClassTable::trivial_class() const { return 0; }
size_t SubgroupClassTable::full_class() const { return reps_.size() - 1; }

bool SubgroupClassTable::is_subconjugate(size_t a, size_t b) const {
  const Subgroup& ha = reps_[a];
  const Subgroup& hb = reps_[b];
  if (ha.order() > hb.order() || hb.order() % ha.order() != 0) return false;
  for (int64_t g = 0; g < parent_->order(); ++g) {
    if (hb.contains_all(ha.conjugated_by(static_cast<uint32_t>(g)))) return true;
  }
  return false;
}

// --------------------------------------------------------------- PermGroup

PermGroup::PermGroup(uint32_t degree, std::vector<Perm> elems, std::string description)
    : degree_(degree), elems_(std::move(elems)), description_(std::move(description)) {
  index_.reserve(elems_.size() * 2);
  for (uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
  inverse_.resize(elems_.size());
  for (uint32_t i = 0; i < elems_.size(); ++i) {
    auto it = index_.find(elems_[i].inverse());
    if (it == index_.end()) throw ValidationError("element set is not closed under inversion");
    inverse_[i] = it->second;
  }
}

std::optional<uint32_t> PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

uint32_t PermGroup::product(uint32_t a, uint32_t b) const {
  return index_.find(elems_[a] * elems_[b])->second;
}

uint32_t PermGroup::inverse(uint32_t a) const { return inverse_[a]; }

uint32_t PermGroup::conjugate(uint32_t g, uint32_t x) const {
  return product(product(g, x), inverse_[g]);
}

const std::vector<uint32_t>& PermGroup::generating_indices() const {
  std::lock_guard lock(cache_mutex_);
  if (!generators_) {
    std::vector<uint32_t> gens;
    std::vector<bool> in(elems_.size(), false);
    std::vector<uint32_t> closed{identity_index()};
    in[identity_index()] = true;
    for (uint32_t e = 0; e < elems_.size(); ++e) {
      if (in[e]) continue;
      gens.push_back(e);
      in[e] = true;
      closed.push_back(e);
      // re-close under right multiplication by the enlarged generating set
      for (size_t qi = 0; qi < closed.size(); ++qi) {
        for (uint32_t g : gens) {
          uint32_t p = product(closed[qi], g);
          if (!in[p]) { in[p] = true; closed.push_back(p); }
        }
      }
    }
    generators_ = std::make_shared<const std::vector<uint32_t>>(std::move(gens));
  }
  return *generators_;
}

uint64_t PermGroup::content_key() const {
  uint64_t h = kFnvOffset;
  h = fnv_mix(h, degree_);
  h = fnv_mix(h, elems_.size());
  for (const Perm& p : elems_)
    for (uint32_t v : p.images()) h = fnv_mix(h, v);
  return h;
}

bool PermGroup::contains_group(const PermGroup& other) const {
  if (other.degree() != degree_) return false;
  for (const Perm& p : other.elements())
    if (!index_.count(p)) return false;
  return true;
}

Subgroup PermGroup::whole_subgroup() const {
  std::vector<uint32_t> all(elems_.size());
  for (uint32_t i = 0; i < elems_.size(); ++i) all[i] = i;
  return Subgroup(shared_from_this(), std::move(all));
}

Subgroup PermGroup::trivial_subgroup() const {
  return Subgroup(shared_from_this(), {identity_index()});
}

const SubgroupClassTable& PermGroup::subgroup_classes(const Bounds& bounds) const {
  if (order() > bounds.max_subgroup_enum_order)
    throw BoundError("subgroup enumeration bound exceeded: group order " +
                     std::to_string(order()) + " > " +
                     std::to_string(bounds.max_subgroup_enum_order));
  {
    std::lock_guard lock(cache_mutex_);
    if (classes_) return *classes_;
  }
  auto computed = std::make_shared<const SubgroupClassTable>(compute_subgroup_classes(*this, bounds));
  std::lock_guard lock(cache_mutex_);
  if (!classes_) classes_ = std::move(computed);
  return *classes_;
}

const MarksTable& PermGroup::table_of_marks(const Bounds& bounds) const {
  const SubgroupClassTable& classes = subgroup_classes(bounds);
  {
    std::lock_guard lock(cache_mutex_);
    if (marks_) return *marks_;
  }
  auto computed = std::make_shared<const MarksTable>(compute_table_of_marks(*this, classes));
  std::lock_guard lock(cache_mutex_);
  if (!marks_) marks_ = std::move(computed);
  return *marks_;
}

const std::vector<ElementClass>& PermGroup::element_classes() const {
  {
    std::lock_guard lock(cache_mutex_);
    if (element_classes_) return *element_classes_;
  }
  std::vector<ElementClass> classes;
  std::vector<bool> seen(elems_.size(), false);
  for (uint32_t x = 0; x < elems_.size(); ++x) {
    if (seen[x]) continue;
    ElementClass c;
    for (uint32_t g = 0; g < elems_.size(); ++g) {
      uint32_t y = conjugate(g, x);
      if (!seen[y]) { seen[y] = true; c.members.push_back(y); }
    }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    c.element_order = elems_[c.representative].order();
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ElementClass& a, const ElementClass& b) {
    return std::tie(a.element_order, a.representative) < std::tie(b.element_order, b.representative);
  });
  int64_t prev_order = -1, k = 0;
  for (auto& c : classes) {
    k = (c.element_order == prev_order) ? k + 1 : 0;
    prev_order = c.element_order;
    c.label = "c" + std::to_string(c.element_order) + "_" + std::to_string(k);
  }
  auto computed = std::make_shared<const std::vector<ElementClass>>(std::move(classes));
  std::lock_guard lock(cache_mutex_);
  if (!element_classes_) element_classes_ = std::move(computed);
  return *element_classes_;
}

namespace {

// Left cosets of H in G. Coset ids are assigned in increasing order of the
// minimal element index, so the layout is deterministic.
struct CosetAction {
  std::vector<uint32_t> coset_of; // element index -> coset id
  std::vector<uint32_t> reps;     // coset id -> minimal representative
};

CosetAction cosets_of(const PermGroup& g, const std::vector<uint32_t>& members) {
  CosetAction ca;
  ca.coset_of.assign(g.order(), UINT32_MAX);
  for (uint32_t e = 0; e < g.order(); ++e) {
    if (ca.coset_of[e] != UINT32_MAX) continue;
    uint32_t id = static_cast<uint32_t>(ca.reps.size());
    ca.reps.push_back(e);
    for (uint32_t h : members) ca.coset_of[g.product(e, h)] = id;
  }
  return ca;
}

} // namespace

const std::vector<int64_t>& PermGroup::basis_product(size_t i, size_t j, const Bounds& bounds) const {
  const SubgroupClassTable& classes = subgroup_classes(bounds);
  if (i > j) std::swap(i, j);
  uint64_t key = static_cast<uint64_t>(i) * classes.count() + j;
  {
    std::lock_guard lock(cache_mutex_);
    auto it = basis_products_.find(key);
    if (it != basis_products_.end()) return *it->second;
  }

  CosetAction a = cosets_of(*this, classes.representative(i).members());
  CosetAction b = cosets_of(*this, classes.representative(j).members());
  const size_t nb = b.reps.size();
  const size_t npoints = a.reps.size() * nb;
  const std::vector<uint32_t>& gens = generating_indices();

  std::vector<int64_t> coeffs(classes.count(), 0);
  std::vector<bool> visited(npoints, false);
  std::vector<uint32_t> stack;
  for (size_t p0 = 0; p0 < npoints; ++p0) {
    if (visited[p0]) continue;
    visited[p0] = true;
    stack.assign(1, static_cast<uint32_t>(p0));
    while (!stack.empty()) {
      uint32_t p = stack.back();
      stack.pop_back();
      uint32_t ra = a.reps[p / nb], rb = b.reps[p % nb];
      for (uint32_t g : gens) {
        uint32_t q = a.coset_of[product(g, ra)] * static_cast<uint32_t>(nb) +
                     b.coset_of[product(g, rb)];
        if (!visited[q]) { visited[q] = true; stack.push_back(q); }
      }
    }
    // stabilizer of the orbit representative
    uint32_t ra = a.reps[p0 / nb], rb = b.reps[p0 % nb];
    std::vector<uint32_t> stab;
    for (uint32_t g = 0; g < order(); ++g) {
      if (a.coset_of[product(g, ra)] == p0 / nb && b.coset_of[product(g, rb)] == p0 % nb)
        stab.push_back(g);
    }
    size_t cls = classes.class_of(Subgroup(shared_from_this(), std::move(stab)));
    coeffs[cls] = checked_add(coeffs[cls], 1);
  }

  auto stored = std::make_shared<const std::vector<int64_t>>(std::move(coeffs));
  std::lock_guard lock(cache_mutex_);
  auto [it, inserted] = basis_products_.emplace(key, std::move(stored));
  return *it->second;
}

const std::vector<std::vector<int64_t>>& PermGroup::basis_character_matrix(const Bounds& bounds) const {
  const SubgroupClassTable& classes = subgroup_classes(bounds);
  const std::vector<ElementClass>& eclasses = element_classes();
  {
    std::lock_guard lock(cache_mutex_);
    if (basis_characters_) return *basis_characters_;
  }
  std::vector<std::vector<int64_t>> mat(classes.count(), std::vector<int64_t>(eclasses.size(), 0));
  for (size_t h = 0; h < classes.count(); ++h) {
    CosetAction ca = cosets_of(*this, classes.representative(h).members());
    for (size_t e = 0; e < eclasses.size(); ++e) {
      uint32_t g = eclasses[e].representative;
      int64_t fixed = 0;
      for (uint32_t c = 0; c < ca.reps.size(); ++c)
        if (ca.coset_of[product(g, ca.reps[c])] == c) ++fixed;
      mat[h][e] = fixed;
    }
  }
  auto computed = std::make_shared<const std::vector<std::vector<int64_t>>>(std::move(mat));
  std::lock_guard lock(cache_mutex_);
  if (!basis_characters_) basis_characters_ = std::move(computed);
  return *basis_characters_;
}

bool PermGroup::install_class_data(std::vector<std::vector<uint32_t>> class_members,
                                   MarksTable marks) const {
  std::vector<Subgroup> reps;
  reps.reserve(class_members.size());
  GroupPtr self = shared_from_this();
  for (auto& members : class_members) reps.emplace_back(self, std::move(members));
  // class sizes are recomputed: |G| / |N_G(H)| conjugates each
  std::vector<int64_t> sizes;
  for (const Subgroup& r : reps)
    sizes.push_back(order() / static_cast<int64_t>(normalizer(*this, r).size()));
  auto table = std::make_shared<const SubgroupClassTable>(self, std::move(reps), std::move(sizes));
  auto marks_ptr = std::make_shared<const MarksTable>(std::move(marks));
  std::lock_guard lock(cache_mutex_);
  if (classes_ || marks_) return false;
  classes_ = std::move(table);
  marks_ = std::move(marks_ptr);
  return true;
}

// ----------------------------------------------------------- construction

GroupPtr intern_group(uint32_t degree, std::vector<Perm> elements, std::string description) {
  if (elements.empty()) throw ValidationError("a group needs at least the identity element");
  for (const Perm& p : elements)
    if (p.degree() != degree) throw ValidationError("inconsistent permutation degrees");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  auto gens = greedy_generators_checked(degree, elements);
  if (description.empty()) description = perms_to_description(gens, degree);

  uint64_t key = kFnvOffset;
  key = fnv_mix(key, degree);
  for (const Perm& p : elements)
    for (uint32_t v : p.images()) key = fnv_mix(key, v);

  Registry& reg = registry();
  std::lock_guard lock(reg.mutex);
  auto& bucket = reg.by_key[key];
  for (const GroupPtr& g : bucket) {
    if (g->degree() == degree && g->elements() == elements) return g;
  }
  GroupPtr created(new PermGroup(degree, std::move(elements), std::move(description)));
  bucket.push_back(created);
  return created;
}

GroupPtr group_from_generators(uint32_t degree, const std::vector<Perm>& gens,
                               const Bounds& bounds, std::string description) {
  for (const Perm& p : gens)
    if (p.degree() != degree) throw ValidationError("inconsistent permutation degrees");
  auto elems = closure_of(degree, gens, bounds.max_group_order);
  return intern_group(degree, std::move(elems), std::move(description));
}

GroupPtr generate_group(const std::string& description, const Bounds& bounds) {
  auto colon = description.find(':');
  if (colon == std::string::npos)
    throw ParseError("group description must look like 'cyclic:n', 'dihedral:n', "
                     "'symmetric:n' or 'perm:[[...],[...]]': '" + description + "'");
  std::string kind = description.substr(0, colon);
  std::string rest = description.substr(colon + 1);

  if (kind == "cyclic") {
    int64_t n = parse_int(rest, "cyclic group order");
    if (n < 1) throw ParseError("cyclic:n requires n >= 1");
    std::vector<uint32_t> rot(n);
    for (int64_t i = 0; i < n; ++i) rot[i] = static_cast<uint32_t>((i + 1) % n);
    return group_from_generators(static_cast<uint32_t>(n), {Perm::from_images(rot)}, bounds,
                                 "cyclic:" + std::to_string(n));
  }
  if (kind == "dihedral") {
    int64_t n = parse_int(rest, "dihedral polygon size");
    if (n < 3) throw ParseError("dihedral:n requires n >= 3 (the n-point realization is "
                                "faithful only from the triangle up)");
    std::vector<uint32_t> rot(n), refl(n);
    for (int64_t i = 0; i < n; ++i) {
      rot[i] = static_cast<uint32_t>((i + 1) % n);
      refl[i] = static_cast<uint32_t>((n - i) % n);
    }
    return group_from_generators(static_cast<uint32_t>(n),
                                 {Perm::from_images(rot), Perm::from_images(refl)}, bounds,
                                 "dihedral:" + std::to_string(n));
  }
  if (kind == "symmetric") {
    int64_t n = parse_int(rest, "symmetric group degree");
    if (n < 1 || n > 6) throw ParseError("symmetric:n supports 1 <= n <= 6");
    std::vector<Perm> gens;
    if (n >= 2) {
      std::vector<uint32_t> swap01(n), rot(n);
      for (int64_t i = 0; i < n; ++i) { swap01[i] = static_cast<uint32_t>(i); rot[i] = static_cast<uint32_t>((i + 1) % n); }
      swap01[0] = 1;
      swap01[1] = 0;
      gens.push_back(Perm::from_images(swap01));
      gens.push_back(Perm::from_images(rot));
    }
    return group_from_generators(static_cast<uint32_t>(n), gens, bounds,
                                 "symmetric:" + std::to_string(n));
  }
  if (kind == "perm") {
    std::vector<Perm> gens = parse_perm_list(rest);
    if (gens.empty()) throw ParseError("perm:[[...]] needs at least one permutation to fix the degree");
    uint32_t degree = gens[0].degree();
    for (const Perm& p : gens)
      if (p.degree() != degree) throw ParseError("inconsistent permutation degrees in perm: description");
    return group_from_generators(degree, gens, bounds, description);
  }
  throw ParseError("unknown group kind '" + kind + "'");
}

// ------------------------------------------------------------ enumeration

namespace {

struct MemberSet {
  std::vector<uint64_t> words;
  bool operator==(const MemberSet&) const = default;
};

struct MemberSetHash {
  size_t operator()(const MemberSet& s) const {
    uint64_t h = kFnvOffset;
    for (uint64_t w : s.words) h = fnv_mix(h, w);
    return static_cast<size_t>(h);
  }
};

MemberSet to_set(const std::vector<uint32_t>& members, size_t n) {
  MemberSet s;
  s.words.assign((n + 63) / 64, 0);
  for (uint32_t m : members) s.words[m >> 6] |= (1ull << (m & 63));
  return s;
}

std::vector<uint32_t> to_members(const MemberSet& s) {
  std::vector<uint32_t> out;
  for (size_t w = 0; w < s.words.size(); ++w) {
    uint64_t bits = s.words[w];
    while (bits) {
      out.push_back(static_cast<uint32_t>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

// Closure of a member set inside the group, via the dense product table.
std::vector<uint32_t> close_members(const std::vector<uint32_t>& mult, size_t n,
                                    std::vector<uint32_t> seed) {
  std::vector<bool> in(n, false);
  std::vector<uint32_t> mem;
  auto add = [&](uint32_t x) {
    if (!in[x]) { in[x] = true; mem.push_back(x); }
  };
  add(0);
  for (uint32_t s : seed) add(s);
  for (size_t i = 0; i < mem.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      add(mult[mem[i] * n + mem[j]]);
      add(mult[mem[j] * n + mem[i]]);
    }
  }
  std::sort(mem.begin(), mem.end());
  return mem;
}

constexpr size_t kSubgroupCountCap = 50000;

} // namespace

SubgroupClassTable compute_subgroup_classes(const PermGroup& g, const Bounds& bounds) {
  if (g.order() > bounds.max_subgroup_enum_order)
    throw BoundError("subgroup enumeration bound exceeded: group order " +
                     std::to_string(g.order()) + " > " +
                     std::to_string(bounds.max_subgroup_enum_order));
  const size_t n = static_cast<size_t>(g.order());

  std::vector<uint32_t> mult(n * n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      mult[a * n + b] = g.product(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
  std::vector<uint32_t> inv(n);
  for (size_t a = 0; a < n; ++a) inv[a] = g.inverse(static_cast<uint32_t>(a));

  // all cyclic subgroups, deduplicated
  std::unordered_map<MemberSet, size_t, MemberSetHash> known;
  std::vector<std::vector<uint32_t>> subs;
  auto try_add = [&](std::vector<uint32_t> members) -> bool {
    MemberSet key = to_set(members, n);
    auto [it, inserted] = known.emplace(std::move(key), subs.size());
    if (inserted) {
      subs.push_back(std::move(members));
      if (subs.size() > kSubgroupCountCap)
        throw BoundError("subgroup enumeration exceeded the internal subgroup-count cap");
    }
    return inserted;
  };
  try_add({0});
  for (uint32_t e = 0; e < n; ++e) {
    std::vector<uint32_t> cyc{0};
    uint32_t x = e;
    while (x != 0) { cyc.push_back(x); x = mult[x * n + e]; }
    std::sort(cyc.begin(), cyc.end());
    try_add(std::move(cyc));
  }

  // close under joins
  for (size_t i = 0; i < subs.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (std::includes(subs[i].begin(), subs[i].end(), subs[j].begin(), subs[j].end()))
        continue;
      std::vector<uint32_t> seed;
      seed.reserve(subs[i].size() + subs[j].size());
      std::set_union(subs[i].begin(), subs[i].end(), subs[j].begin(), subs[j].end(),
                     std::back_inserter(seed));
      try_add(close_members(mult, n, std::move(seed)));
    }
  }

  // group the subgroups into conjugacy classes
  std::vector<bool> classified(subs.size(), false);
  std::vector<std::pair<std::vector<uint32_t>, int64_t>> classes; // rep members, class size
  for (size_t s = 0; s < subs.size(); ++s) {
    if (classified[s]) continue;
    std::vector<size_t> orbit;
    std::vector<uint32_t> rep = subs[s];
    std::unordered_set<size_t> in_orbit;
    for (uint32_t cg = 0; cg < n; ++cg) {
      std::vector<uint32_t> conj(subs[s].size());
      for (size_t m = 0; m < subs[s].size(); ++m)
        conj[m] = mult[mult[cg * n + subs[s][m]] * n + inv[cg]];
      std::sort(conj.begin(), conj.end());
      auto it = known.find(to_set(conj, n));
      if (it == known.end())
        throw ValidationError("internal error: conjugate subgroup missing from enumeration");
      if (in_orbit.insert(it->second).second) {
        classified[it->second] = true;
        if (conj < rep) rep = conj;
      }
    }
    classes.emplace_back(std::move(rep), static_cast<int64_t>(in_orbit.size()));
  }

  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.size(), std::cref(a.first)) <
           std::make_pair(b.first.size(), std::cref(b.first));
  });

  GroupPtr self = g.shared_from_this();
  std::vector<Subgroup> reps;
  std::vector<int64_t> sizes;
  for (auto& [members, size] : classes) {
    reps.emplace_back(self, std::move(members));
    sizes.push_back(size);
  }
  return SubgroupClassTable(std::move(self), std::move(reps), std::move(sizes));
}

MarksTable compute_table_of_marks(const PermGroup& g, const SubgroupClassTable& classes) {
  const size_t m = classes.count();
  MarksTable marks(m, std::vector<int64_t>(m, 0));
  for (size_t h = 0; h < m; ++h) {
    CosetAction ca = cosets_of(g, classes.representative(h).members());
    for (size_t k = 0; k < m; ++k) {
      const std::vector<uint32_t>& kk = classes.representative(k).members();
      int64_t fixed = 0;
      for (uint32_t c = 0; c < ca.reps.size(); ++c) {
        bool all_fix = true;
        for (uint32_t x : kk) {
          if (ca.coset_of[g.product(x, ca.reps[c])] != c) { all_fix = false; break; }
        }
        if (all_fix) ++fixed;
      }
      marks[h][k] = fixed;
    }
  }
  return marks;
}

std::vector<uint32_t> normalizer(const PermGroup& g, const Subgroup& h) {
  std::vector<uint32_t> out;
  for (uint32_t x = 0; x < g.order(); ++x) {
    if (h.conjugated_by(x).members() == h.members()) out.push_back(x);
  }
  return out;
}

} // namespace eqobs
