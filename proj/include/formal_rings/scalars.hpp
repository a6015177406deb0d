#ifndef FORMAL_RINGS_SCALARS_HPP
#define FORMAL_RINGS_SCALARS_HPP

#include <concepts>
#include <map>
#include <string>
#include <type_traits>
#include <variant>

#include "formal_rings/errors.hpp"
#include "formal_rings/poly.hpp"
#include "formal_rings/rational.hpp"

namespace formal_rings {

/// The field Q viewed as a coefficient ring. Stateless.
struct RationalRing {
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_rational(const Rational& c) const { return c; }
  friend bool operator==(const RationalRing&, const RationalRing&) { return true; }
};

template <class C>
struct coefficient_traits;

template <>
struct coefficient_traits<Rational> {
  using ring_type = RationalRing;
  static RationalRing ring_of(const Rational&) { return {}; }
  static bool is_unit(const Rational& c) { return !c.is_zero(); }
  static Rational div_exact(const Rational& a, const Rational& b) { return a / b; }
  static std::string to_string(const Rational& c) { return c.to_string(); }
  static bool is_compound(const Rational&) { return false; }
  static Rational scale(const Rational& c, const Rational& k) { return c * k; }
};

template <>
struct coefficient_traits<Poly> {
  using ring_type = PolyRing;
  static PolyRing ring_of(const Poly& p) { return p.ring(); }
  static bool is_unit(const Poly& c) { return c.is_unit(); }
  static Poly div_exact(const Poly& a, const Poly& b) { return formal_rings::div_exact(a, b); }
  static std::string to_string(const Poly& c) { return c.to_string(); }
  static bool is_compound(const Poly& c) { return c.terms().size() > 1; }
  static Poly scale(const Poly& c, const Rational& k) { return c.scaled(k); }
};

template <class C>
using ring_of_t = typename coefficient_traits<C>::ring_type;

/// A coefficient ring element usable inside series.
template <class C>
concept CoefficientType = requires(const C a, const C b, const ring_of_t<C> r, const Rational q) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { r.zero() } -> std::convertible_to<C>;
  { r.one() } -> std::convertible_to<C>;
  { r.from_rational(q) } -> std::convertible_to<C>;
};

template <CoefficientType C>
bool is_unit(const C& c) {
  return coefficient_traits<C>::is_unit(c);
}

template <CoefficientType C>
std::string to_string(const C& c) {
  return coefficient_traits<C>::to_string(c);
}

inline Rational div_exact(const Rational& a, const Rational& b) { return a / b; }

// ---------------------------------------------------------------------------
// Runtime-tagged coefficient, used where the ring is only known at run time
// (file input, command line).

using Coefficient = std::variant<Rational, Poly>;

namespace detail {

template <class Op>
Coefficient dispatch_binary(const Coefficient& a, const Coefficient& b, Op op) {
  if (a.index() != b.index())
    throw RingMismatch("cannot combine a rational with a polynomial; embed explicitly");
  if (const auto* ra = std::get_if<Rational>(&a)) return op(*ra, std::get<Rational>(b));
  return op(std::get<Poly>(a), std::get<Poly>(b));
}

}  // namespace detail

inline Coefficient coef_add(const Coefficient& a, const Coefficient& b) {
  return detail::dispatch_binary(a, b, [](const auto& x, const auto& y) -> Coefficient { return x + y; });
}

inline Coefficient coef_sub(const Coefficient& a, const Coefficient& b) {
  return detail::dispatch_binary(a, b, [](const auto& x, const auto& y) -> Coefficient { return x - y; });
}

inline Coefficient coef_mul(const Coefficient& a, const Coefficient& b) {
  return detail::dispatch_binary(a, b, [](const auto& x, const auto& y) -> Coefficient { return x * y; });
}

inline Coefficient coef_div_exact(const Coefficient& a, const Coefficient& b) {
  return detail::dispatch_binary(a, b, [](const auto& x, const auto& y) -> Coefficient {
    return coefficient_traits<std::decay_t<decltype(x)>>::div_exact(x, y);
  });
}

/// The canonical embedding Q -> Q[params].
inline Coefficient embed(const Coefficient& c, const PolyRing& ring) {
  if (const auto* r = std::get_if<Rational>(&c)) return ring.from_rational(*r);
  const Poly& p = std::get<Poly>(c);
  if (!(p.ring() == ring)) throw RingMismatch("polynomial already lives in a different ring");
  return p;
}

inline std::string coef_to_string(const Coefficient& c) {
  return std::visit([](const auto& x) { return to_string(x); }, c);
}

/// Parses a coefficient in the given ring: a rational when `ring` has no
/// parameters, otherwise a polynomial.
inline Coefficient parse_coefficient(std::string_view text, const PolyRing& ring) {
  if (ring.size() == 0) return Rational::parse(text);
  return Poly::parse(text, ring);
}

}  // namespace formal_rings

#endif  // FORMAL_RINGS_SCALARS_HPP
