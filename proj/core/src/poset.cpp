#include "eqobs/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "eqobs/checked.hpp"

namespace eqobs {

std::string ValidationReport::joined_errors() const {
  std::string out;
  for (const auto& i : issues) {
    if (i.severity != ValidationIssue::Severity::error) continue;
    if (!out.empty()) out += "; ";
    out += i.message;
  }
  return out;
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& i : issues) {
    out += (i.severity == ValidationIssue::Severity::error ? "error: " : "warning: ");
    out += i.message;
    out += "\n";
  }
  return out;
}

namespace {

struct Closed {
  std::vector<std::vector<char>> leq;
  bool has_cycle = false;
};

// Reflexive-transitive closure of the relation pairs; a cycle shows up as
// two distinct mutually related indices.
Closed close_relation(size_t n, const std::vector<std::pair<size_t, size_t>>& pairs) {
  Closed c;
  c.leq.assign(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i) c.leq[i][i] = 1;
  for (auto [lo, hi] : pairs) c.leq[lo][hi] = 1;
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) {
      if (!c.leq[i][k]) continue;
      for (size_t j = 0; j < n; ++j)
        if (c.leq[k][j]) c.leq[i][j] = 1;
    }
  for (size_t i = 0; i < n && !c.has_cycle; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && c.leq[i][j] && c.leq[j][i]) { c.has_cycle = true; break; }
  return c;
}

struct Resolved {
  std::unordered_map<std::string, size_t> index;
  std::vector<std::pair<size_t, size_t>> pairs;
  bool usable = true;
};

Resolved resolve_ids(const PosetInput& input, ValidationReport& report) {
  Resolved r;
  for (size_t i = 0; i < input.ids.size(); ++i) {
    if (!r.index.emplace(input.ids[i], i).second) {
      report.error("duplicate stratum id '" + input.ids[i] + "'");
      r.usable = false;
    }
  }
  for (const auto& [lo, hi] : input.order) {
    auto a = r.index.find(lo), b = r.index.find(hi);
    if (a == r.index.end()) {
      report.error("order relation references unknown stratum '" + lo + "'");
      r.usable = false;
      continue;
    }
    if (b == r.index.end()) {
      report.error("order relation references unknown stratum '" + hi + "'");
      r.usable = false;
      continue;
    }
    r.pairs.emplace_back(a->second, b->second);
  }
  return r;
}

} // namespace

ValidationReport StratPoset::validate(const PosetInput& input) {
  ValidationReport report;
  const size_t n = input.ids.size();
  if (input.dims.size() != n) {
    report.error("stratum dimension list does not match the id list");
    return report;
  }
  if (n == 0) {
    report.error("a stratified germ needs at least one stratum");
    return report;
  }
  for (size_t i = 0; i < n; ++i)
    if (input.dims[i] < 0)
      report.error("stratum '" + input.ids[i] + "' has negative dimension");

  Resolved r = resolve_ids(input, report);
  if (!r.usable) return report;

  if (!r.index.count(input.top)) {
    report.error("top stratum '" + input.top + "' is not a declared stratum");
    return report;
  }
  size_t top = r.index[input.top];

  Closed c = close_relation(n, r.pairs);
  if (c.has_cycle) {
    report.error("order relation contains a cycle");
    return report;
  }

  for (size_t i = 0; i < n; ++i) {
    if (!c.leq[i][top])
      report.error("stratum '" + input.ids[i] + "' is not below the top stratum '" +
                   input.top + "' (top must be the unique maximum)");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i != j && c.leq[i][j] && input.dims[i] >= input.dims[j])
        report.error("dimension must strictly increase along the order: '" + input.ids[i] +
                     "' (dim " + std::to_string(input.dims[i]) + ") < '" + input.ids[j] +
                     "' (dim " + std::to_string(input.dims[j]) + ") fails");
    }

  std::set<std::pair<size_t, size_t>> seen_eu;
  for (const auto& e : input.eu) {
    auto a = r.index.find(e.lower), b = r.index.find(e.upper);
    if (a == r.index.end() || b == r.index.end()) {
      report.error("eu_table entry references unknown stratum '" +
                   (a == r.index.end() ? e.lower : e.upper) + "'");
      continue;
    }
    if (!c.leq[a->second][b->second]) {
      report.error("eu_table entry ('" + e.lower + "', '" + e.upper +
                   "') is not on the order relation");
      continue;
    }
    if (a->second == b->second && e.value != 1)
      report.error("eu_table diagonal must be 1 at stratum '" + e.lower + "'");
    if (!seen_eu.emplace(a->second, b->second).second)
      report.error("duplicate eu_table entry ('" + e.lower + "', '" + e.upper + "')");
  }
  return report;
}

StratPoset StratPoset::build(const PosetInput& input) {
  ValidationReport report = validate(input);
  if (!report.ok()) throw ValidationError(report.joined_errors());

  StratPoset p;
  p.ids_ = input.ids;
  p.dims_ = input.dims;
  ValidationReport scratch;
  Resolved r = resolve_ids(input, scratch);
  p.index_ = std::move(r.index);
  p.leq_ = close_relation(p.ids_.size(), r.pairs).leq;
  p.top_ = p.index_.at(input.top);

  const size_t n = p.ids_.size();
  p.eu_.assign(n, std::vector<int64_t>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (p.leq_[i][j]) p.eu_[i][j] = 1; // default; diagonal is forced to 1
  for (const auto& e : input.eu) p.eu_[p.index_.at(e.lower)][p.index_.at(e.upper)] = e.value;

  p.linext_.resize(n);
  std::iota(p.linext_.begin(), p.linext_.end(), 0);
  std::sort(p.linext_.begin(), p.linext_.end(), [&](size_t a, size_t b) {
    if (p.dims_[a] != p.dims_[b]) return p.dims_[a] < p.dims_[b];
    return a < b;
  });
  return p;
}

std::optional<size_t> StratPoset::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PosetFunction::supported_on(const StratPoset& poset) const {
  for (size_t i = 0; i < size(); ++i)
    for (size_t j = 0; j < size(); ++j)
      if (values_[i][j] != 0 && !poset.leq(i, j)) return false;
  return true;
}

PosetFunction zeta(const StratPoset& poset) {
  PosetFunction z(poset.count());
  for (size_t i = 0; i < poset.count(); ++i)
    for (size_t j = 0; j < poset.count(); ++j)
      if (poset.leq(i, j)) z.set(i, j, 1);
  return z;
}

PosetFunction convolve(const StratPoset& poset, const PosetFunction& a, const PosetFunction& b) {
  const size_t n = poset.count();
  PosetFunction c(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (!poset.leq(i, k)) continue;
      int64_t acc = 0;
      for (size_t j = 0; j < n; ++j) {
        if (!poset.leq(i, j) || !poset.leq(j, k)) continue;
        acc = checked_add(acc, checked_mul(a(i, j), b(j, k)));
      }
      c.set(i, k, acc);
    }
  return c;
}

PosetFunction convolution_inverse(const StratPoset& poset, const PosetFunction& f) {
  const size_t n = poset.count();
  for (size_t i = 0; i < n; ++i)
    if (f(i, i) != 1)
      throw ValidationError("convolution inverse requires unit diagonal (stratum '" +
                            poset.id(i) + "' has " + std::to_string(f(i, i)) + ")");
  PosetFunction g(n);
  const std::vector<size_t>& order = poset.linear_extension();
  for (size_t k : order) {
    g.set(k, k, 1);
    // walk i downward so g(j,k) for i < j <= k is already known
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      size_t i = *it;
      if (i == k || !poset.leq(i, k)) continue;
      int64_t acc = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == i || !poset.leq(i, j) || !poset.leq(j, k)) continue;
        acc = checked_add(acc, checked_mul(f(i, j), g(j, k)));
      }
      g.set(i, k, checked_neg(acc));
    }
  }
  return g;
}

PosetFunction mobius(const StratPoset& poset) { return convolution_inverse(poset, zeta(poset)); }

PosetFunction m_tilde(const StratPoset& poset) {
  const size_t n = poset.count();
  PosetFunction mu = mobius(poset);
  PosetFunction m(n);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      if (!poset.leq(j, k)) continue;
      int64_t acc = 0;
      for (size_t i = 0; i < n; ++i) {
        if (!poset.leq(j, i) || !poset.leq(i, k)) continue;
        acc = checked_add(acc, checked_mul(mu(j, i), poset.eu(i, k)));
      }
      m.set(j, k, acc);
    }
  return m;
}

PosetFunction n_from_eu(const StratPoset& poset) {
  return convolution_inverse(poset, m_tilde(poset));
}

PosetFunction m_from_n(const StratPoset& poset, const PosetFunction& n) {
  return convolution_inverse(poset, n);
}

} // namespace eqobs
