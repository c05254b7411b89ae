#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqobs/errors.hpp"

namespace eqobs {

struct ValidationIssue {
  enum class Severity { error, warning };
  Severity severity;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const {
    for (const auto& i : issues)
      if (i.severity == ValidationIssue::Severity::error) return false;
    return true;
  }
  void error(std::string msg) { issues.push_back({ValidationIssue::Severity::error, std::move(msg)}); }
  void warn(std::string msg) { issues.push_back({ValidationIssue::Severity::warning, std::move(msg)}); }
  std::string joined_errors() const;
  std::string to_string() const;
};

/// Raw poset description as it appears in input files: ids, complex
/// dimensions, relation pairs (lower, upper), the open stratum, and the
/// table of Euler obstructions of normal slices.
struct PosetInput {
  std::vector<std::string> ids;
  std::vector<int64_t> dims;
  std::vector<std::pair<std::string, std::string>> order;
  std::string top;
  struct EuEntry {
    std::string lower, upper;
    int64_t value;
  };
  std::vector<EuEntry> eu;
};

/// The immutable combinatorial skeleton of a stratification: a partial order
/// on strata (stored reflexively and transitively closed), dimensions, the
/// unique maximal stratum, and the Eu table supported on the order.
class StratPoset {
public:
  StratPoset() = default; // empty; only useful as a placeholder before build()

  /// Collects every detectable problem with the input. Structural errors
  /// (unknown ids, cycles, bad dimensions, bad Eu entries) are errors.
  static ValidationReport validate(const PosetInput& input);

  /// Builds the closed poset; throws ValidationError with all messages when
  /// validate(input) reports errors. Missing Eu entries default to 1.
  static StratPoset build(const PosetInput& input);

  size_t count() const { return ids_.size(); }
  const std::string& id(size_t i) const { return ids_[i]; }
  std::optional<size_t> index_of(const std::string& id) const;
  int64_t dim(size_t i) const { return dims_[i]; }
  bool leq(size_t i, size_t j) const { return leq_[i][j]; }
  size_t top() const { return top_; }
  /// Eu(V_upper, V_lower); zero off the order relation, 1 on the diagonal.
  int64_t eu(size_t lower, size_t upper) const { return eu_[lower][upper]; }
  /// Indices in a topological order of the relation (lower strata first).
  const std::vector<size_t>& linear_extension() const { return linext_; }

  bool operator==(const StratPoset& other) const {
    return ids_ == other.ids_ && dims_ == other.dims_ && leq_ == other.leq_ &&
           top_ == other.top_ && eu_ == other.eu_;
  }

private:
  std::vector<std::string> ids_;
  std::vector<int64_t> dims_;
  std::vector<std::vector<char>> leq_;
  size_t top_ = 0;
  std::vector<std::vector<int64_t>> eu_;
  std::vector<size_t> linext_;
  std::unordered_map<std::string, size_t> index_;
};

/// An integer function on ordered pairs i <= j of the poset, zero elsewhere.
class PosetFunction {
public:
  explicit PosetFunction(size_t n) : values_(n, std::vector<int64_t>(n, 0)) {}

  size_t size() const { return values_.size(); }
  int64_t operator()(size_t i, size_t j) const { return values_[i][j]; }
  void set(size_t i, size_t j, int64_t v) { values_[i][j] = v; }
  const std::vector<std::vector<int64_t>>& values() const { return values_; }
  bool operator==(const PosetFunction&) const = default;

  /// True when every nonzero entry sits on the order relation.
  bool supported_on(const StratPoset& poset) const;

private:
  std::vector<std::vector<int64_t>> values_;
};

/// zeta(i,j) = 1 iff i <= j.
PosetFunction zeta(const StratPoset& poset);

/// The convolution inverse of zeta in the incidence algebra.
PosetFunction mobius(const StratPoset& poset);

/// Convolution c(i,k) = sum_j a(i,j) b(j,k) over the order relation.
PosetFunction convolve(const StratPoset& poset, const PosetFunction& a, const PosetFunction& b);

/// Inverse of a unitriangular function on the poset; requires diagonal 1.
PosetFunction convolution_inverse(const StratPoset& poset, const PosetFunction& f);

/// m~(j,k) = sum_i mobius(j,i) * Eu(V_k, V_i); unitriangular.
PosetFunction m_tilde(const StratPoset& poset);

/// Predicted radial indices of a generic linear form on normal slices:
/// the convolution inverse of m~.
PosetFunction n_from_eu(const StratPoset& poset);

/// The convolution inverse of an n table (diagonal must be 1).
PosetFunction m_from_n(const StratPoset& poset, const PosetFunction& n);

} // namespace eqobs
