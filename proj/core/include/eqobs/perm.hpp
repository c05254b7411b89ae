#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "eqobs/errors.hpp"

namespace eqobs {

/// A permutation of {0, ..., degree-1} in one-line image notation.
class Perm {
public:
  Perm() = default;

  static Perm identity(uint32_t degree) {
    std::vector<uint32_t> img(degree);
    for (uint32_t i = 0; i < degree; ++i) img[i] = i;
    return Perm(std::move(img));
  }

  /// Validates that `img` is a bijection of {0..degree-1}.
  static Perm from_images(std::vector<uint32_t> img) {
    std::vector<bool> seen(img.size(), false);
    for (uint32_t v : img) {
      if (v >= img.size() || seen[v])
        throw ParseError("malformed permutation: image list is not a bijection");
      seen[v] = true;
    }
    return Perm(std::move(img));
  }

  uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
  uint32_t apply(uint32_t x) const { return img_[x]; }
  const std::vector<uint32_t>& images() const { return img_; }

  /// Composition: (a*b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b) {
    std::vector<uint32_t> img(a.degree());
    for (uint32_t x = 0; x < a.degree(); ++x) img[x] = a.img_[b.img_[x]];
    return Perm(std::move(img));
  }

  Perm inverse() const {
    std::vector<uint32_t> img(degree());
    for (uint32_t x = 0; x < degree(); ++x) img[img_[x]] = x;
    return Perm(std::move(img));
  }

  bool is_identity() const {
    for (uint32_t x = 0; x < degree(); ++x)
      if (img_[x] != x) return false;
    return true;
  }

  /// Multiplicative order of the permutation.
  int64_t order() const {
    Perm p = *this;
    int64_t n = 1;
    while (!p.is_identity()) {
      p = *this * p;
      ++n;
    }
    return n;
  }

  auto operator<=>(const Perm&) const = default;

  std::string to_string() const {
    std::string s = "[";
    for (uint32_t i = 0; i < degree(); ++i) {
      if (i) s += ",";
      s += std::to_string(img_[i]);
    }
    return s + "]";
  }

private:
  explicit Perm(std::vector<uint32_t> img) : img_(std::move(img)) {}
  std::vector<uint32_t> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

} // namespace eqobs
