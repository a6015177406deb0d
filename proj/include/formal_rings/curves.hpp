#ifndef FORMAL_RINGS_CURVES_HPP
#define FORMAL_RINGS_CURVES_HPP

#include <optional>
#include <vector>

#include "formal_rings/errors.hpp"
#include "formal_rings/fglaw.hpp"
#include "formal_rings/fring.hpp"
#include "formal_rings/series.hpp"

namespace formal_rings {

/// An n-tuple of series in one variable t with gamma(0) = 0.
template <CoefficientType C>
class Curve {
 public:
  explicit Curve(SeriesTuple<C> components) : tuple_(std::move(components)) {
    if (tuple_.num_vars() != 1) throw ShapeMismatch("a curve has components in one variable");
    for (const auto& s : tuple_.components())
      if (!s.constant_term().is_zero()) throw NonzeroConstantTerm("curve");
  }

  explicit Curve(std::vector<Series<C>> components) : Curve(SeriesTuple<C>(std::move(components))) {}

  static Curve zero(const ring_of_t<C>& ring, std::size_t n, unsigned trunc_degree) {
    return Curve(std::vector<Series<C>>(n, Series<C>(ring, 1, trunc_degree)));
  }

  /// The curve (c_1 t^e, ..., c_n t^e).
  static Curve monomial(const ring_of_t<C>& ring, unsigned trunc_degree, const std::vector<C>& coefs, unsigned e) {
    std::vector<Series<C>> out;
    for (const auto& c : coefs) {
      std::vector<typename Series<C>::Term> terms;
      if (e <= trunc_degree) terms.emplace_back(Monomial::variable(0, e), c);
      out.push_back(Series<C>::from_terms(ring, 1, trunc_degree, std::move(terms)));
    }
    return Curve(std::move(out));
  }

  std::size_t dim() const { return tuple_.size(); }
  unsigned trunc_degree() const { return tuple_.trunc_degree(); }
  const Series<C>& operator[](std::size_t i) const { return tuple_[i]; }
  const SeriesTuple<C>& components() const { return tuple_; }

  friend bool operator==(const Curve& a, const Curve& b) { return a.tuple_ == b.tuple_; }

 private:
  SeriesTuple<C> tuple_;
};

namespace detail {

template <CoefficientType C>
void check_curves(std::size_t dim, unsigned degree, const Curve<C>& g) {
  if (g.dim() != dim) throw ShapeMismatch("curve dimension does not match the ring");
  if (g.trunc_degree() != degree) throw PrecisionError("curve precision differs from the ring precision");
}

template <CoefficientType C>
Curve<C> substitute(const SeriesTuple<C>& law, const Curve<C>& a, const Curve<C>& b) {
  std::vector<Series<C>> args(a.components().components());
  args.insert(args.end(), b.components().components().begin(), b.components().components().end());
  return Curve<C>(apply_tuple(law, args));
}

}  // namespace detail

/// gamma1 +_Phi gamma2 = Phi(gamma1(t), gamma2(t)).
template <CoefficientType C>
Curve<C> curve_add(const FormalRing<C>& ring, const Curve<C>& a, const Curve<C>& b) {
  detail::check_curves(ring.dim, ring.trunc_degree(), a);
  detail::check_curves(ring.dim, ring.trunc_degree(), b);
  return detail::substitute(ring.phi(), a, b);
}

/// gamma1 *_Psi gamma2 = Psi(gamma1(t), gamma2(t)).
template <CoefficientType C>
Curve<C> curve_mul(const FormalRing<C>& ring, const Curve<C>& a, const Curve<C>& b) {
  detail::check_curves(ring.dim, ring.trunc_degree(), a);
  detail::check_curves(ring.dim, ring.trunc_degree(), b);
  return detail::substitute(ring.psi(), a, b);
}

/// chi(gamma(t)) with chi the formal inverse of Phi.
template <CoefficientType C>
Curve<C> curve_neg(const FormalRing<C>& ring, const Curve<C>& g) {
  detail::check_curves(ring.dim, ring.trunc_degree(), g);
  if (!ring.log()) throw InvalidArgument("curve negation needs the ring's logarithm");
  const SeriesTuple<C> chi = group_inverse_series(ring.add_law);
  return Curve<C>(detail::apply_tuple(chi, g.components().components()));
}

/// The largest m with gamma in C^m: the minimum t-order over the components.
/// std::nullopt stands for infinity (the zero curve).
template <CoefficientType C>
std::optional<unsigned> filtration_level(const Curve<C>& g) {
  std::optional<unsigned> level;
  for (const auto& s : g.components().components()) {
    const auto o = s.order();
    if (o && (!level || *o < *level)) level = o;
  }
  return level;
}

}  // namespace formal_rings

#endif  // FORMAL_RINGS_CURVES_HPP
