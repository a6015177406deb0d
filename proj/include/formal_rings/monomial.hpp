#ifndef FORMAL_RINGS_MONOMIAL_HPP
#define FORMAL_RINGS_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "formal_rings/errors.hpp"

namespace formal_rings {

inline constexpr std::size_t kMaxVars = 16;
inline constexpr unsigned kMaxExponent = 255;

/// Exponent vector over at most kMaxVars variables. Unused slots are zero, so
/// a monomial does not know its own arity; the owning container does.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::span<const unsigned> exponents) {
    if (exponents.size() > kMaxVars) throw ShapeMismatch("too many variables");
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
  }
  Monomial(std::initializer_list<unsigned> exponents)
      : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

  static Monomial variable(std::size_t index, unsigned exponent = 1) {
    Monomial m;
    m.set(index, exponent);
    return m;
  }

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }

  void set(std::size_t i, unsigned e) {
    if (i >= kMaxVars) throw ShapeMismatch("variable index out of range");
    if (e > kMaxExponent) throw PrecisionError("exponent exceeds 255");
    degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
    exps_[i] = static_cast<std::uint8_t>(e);
  }

  /// Highest variable index with a nonzero exponent plus one.
  std::size_t support_size() const {
    for (std::size_t i = kMaxVars; i > 0; --i)
      if (exps_[i - 1] != 0) return i;
    return 0;
  }

  std::vector<unsigned> to_vector(std::size_t num_vars) const {
    return std::vector<unsigned>(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(num_vars));
  }

  /// True when every exponent of `other` is at most ours.
  bool divisible_by(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (other.exps_[i] > exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned e = unsigned(a.exps_[i]) + b.exps_[i];
      if (e > kMaxExponent) throw PrecisionError("exponent exceeds 255");
      m.exps_[i] = static_cast<std::uint8_t>(e);
    }
    m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return m;
  }

  /// Exact quotient; caller guarantees divisibility.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
    m.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  /// Graded lexicographic order: lower total degree first; within a degree,
  /// larger exponent of the first variable first (x^2 < xy < y^2).
  friend bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVars) > 0;
  }

  std::size_t hash() const {
    std::uint64_t lo = 0, hi = 0;
    std::memcpy(&lo, exps_.data(), 8);
    std::memcpy(&hi, exps_.data() + 8, 8);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
    h ^= (hi + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2));
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
};

struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Renders a monomial as "x^2*y" using the given names; empty string for 1.
inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const unsigned e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace formal_rings

#endif  // FORMAL_RINGS_MONOMIAL_HPP
