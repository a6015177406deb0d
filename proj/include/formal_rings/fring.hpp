#ifndef FORMAL_RINGS_FRING_HPP
#define FORMAL_RINGS_FRING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "formal_rings/errors.hpp"
#include "formal_rings/fglaw.hpp"
#include "formal_rings/series.hpp"

namespace formal_rings {

/// A formal ring (Phi, Psi) in dimension n: an additive formal group law and
/// a compatible multiplication, both n-tuples in 2n variables.
template <CoefficientType C>
struct FormalRing {
  std::size_t dim;
  FormalGroup<C> add_law;
  SeriesTuple<C> mul_law;

  FormalRing(FormalGroup<C> group, SeriesTuple<C> psi)
      : dim(group.dim), add_law(std::move(group)), mul_law(std::move(psi)) {
    if (mul_law.size() != dim || mul_law.num_vars() != 2 * dim)
      throw ShapeMismatch("multiplication must have n components in 2n variables");
    if (mul_law.trunc_degree() != add_law.law.trunc_degree())
      throw ShapeMismatch("addition and multiplication differ in truncation degree");
    if (!(mul_law.ring() == add_law.law.ring())) throw RingMismatch("addition and multiplication rings differ");
    for (const auto& s : mul_law.components())
      if (!s.constant_term().is_zero()) throw NonzeroConstantTerm("multiplication law");
  }

  const SeriesTuple<C>& phi() const { return add_law.law; }
  const SeriesTuple<C>& psi() const { return mul_law; }
  const std::optional<SeriesTuple<C>>& log() const { return add_law.log; }
  unsigned trunc_degree() const { return mul_law.trunc_degree(); }
  const ring_of_t<C>& ring() const { return mul_law.ring(); }
};

namespace detail {

template <CoefficientType C>
SeriesTuple<C> product_through_log(const SeriesTuple<C>& log, const SeriesTuple<C>& exp, const C* scale) {
  return SeriesTuple<C>(apply_tuple(exp, combine_logs(log, true, scale)));
}

}  // namespace detail

/// Phi = G^{-1}(G(x) + G(y)) and Psi = G^{-1}(G_1(x)G_1(y), ..., G_n(x)G_n(y)).
template <CoefficientType C>
FormalRing<C> product_from_log(const SeriesTuple<C>& log) {
  FormalGroup<C> group = law_from_log(log);
  SeriesTuple<C> psi = detail::product_through_log(log, *group.exp, static_cast<const C*>(nullptr));
  return FormalRing<C>(std::move(group), std::move(psi));
}

/// The a-ring: same Phi, multiplication Psi_a = G^{-1}(a G(x) G(y)).
template <CoefficientType C>
FormalRing<C> psi_scaled(const FormalGroup<C>& group, const C& a) {
  const auto& exp = detail::exponential_of(group);
  return FormalRing<C>(group, detail::product_through_log(*group.log, exp, &a));
}

template <CoefficientType C>
FormalRing<C> psi_scaled(const SeriesTuple<C>& log, const C& a) {
  return psi_scaled(law_from_log(log), a);
}

/// Checks associativity, both distributive laws, commutativity of Psi and
/// Psi(x,0) = 0 up to `degree`. The group axioms of Phi are checked separately
/// by verify_group_axioms.
template <CoefficientType C>
VerificationReport verify_ring_axioms(const FormalRing<C>& ring_, unsigned degree) {
  const std::size_t n = ring_.dim;
  const SeriesTuple<C> phi = truncate(ring_.phi(), degree);
  const SeriesTuple<C> psi = truncate(ring_.psi(), degree);
  const auto& ring = psi.ring();
  VerificationReport report;
  report.max_degree = degree;

  const auto x = detail::block_vars<C>(ring, n, 0, 3, degree);
  const auto z = detail::block_vars<C>(ring, n, 2, 3, degree);
  const auto psi_xy = detail::place_blocks(psi, n, 0, 1, 3);
  const auto psi_yz = detail::place_blocks(psi, n, 1, 2, 3);
  const auto psi_xz = detail::place_blocks(psi, n, 0, 2, 3);
  const auto phi_xy = detail::place_blocks(phi, n, 0, 1, 3);
  const auto phi_yz = detail::place_blocks(phi, n, 1, 2, 3);

  detail::compare_tuples(report, "psi(psi(x,y),z) = psi(x,psi(y,z))", detail::apply_tuple(psi, detail::concat(psi_xy, z)),
                         detail::apply_tuple(psi, detail::concat(x, psi_yz)));
  detail::compare_tuples(report, "psi(x,phi(y,z)) = phi(psi(x,y),psi(x,z))",
                         detail::apply_tuple(psi, detail::concat(x, phi_yz)),
                         detail::apply_tuple(phi, detail::concat(psi_xy, psi_xz)));
  detail::compare_tuples(report, "psi(phi(x,y),z) = phi(psi(x,z),psi(y,z))",
                         detail::apply_tuple(psi, detail::concat(phi_xy, z)),
                         detail::apply_tuple(phi, detail::concat(psi_xz, psi_yz)));
  detail::compare_tuples(report, "psi(x,y) = psi(y,x)", psi.components(), detail::place_blocks(psi, n, 1, 0, 2));

  const auto x1 = detail::block_vars<C>(ring, n, 0, 1, degree);
  const auto zero = detail::zero_block<C>(ring, n, 1, degree);
  detail::compare_tuples(report, "psi(x,0) = 0", detail::apply_tuple(psi, detail::concat(x1, zero)), zero);
  return report;
}

/// A map phi(x) with phi(0) = 0 between two formal rings over the same base.
template <CoefficientType C>
struct RingHomomorphism {
  SeriesTuple<C> map;
  std::shared_ptr<const FormalRing<C>> source;
  std::shared_ptr<const FormalRing<C>> target;

  RingHomomorphism(SeriesTuple<C> f, std::shared_ptr<const FormalRing<C>> from,
                   std::shared_ptr<const FormalRing<C>> to)
      : map(std::move(f)), source(std::move(from)), target(std::move(to)) {
    if (!source || !target) throw InvalidArgument("homomorphism needs source and target rings");
    if (map.size() != source->dim || map.num_vars() != source->dim || target->dim != source->dim)
      throw ShapeMismatch("homomorphism dimension mismatch");
    for (const auto& s : map.components())
      if (!s.constant_term().is_zero()) throw NonzeroConstantTerm("homomorphism");
  }

  /// Linear part equal to the identity.
  bool is_strict() const {
    const auto& ring = map.ring();
    for (std::size_t i = 0; i < map.size(); ++i)
      for (std::size_t j = 0; j < map.size(); ++j)
        if (!(map[i].coefficient(Monomial::variable(j)) == (i == j ? ring.one() : ring.zero()))) return false;
    return true;
  }
};

/// sigma_a(x) = G2^{-1}(a G1(x)); for a = 1 the canonical isomorphism between
/// the rings built from G1 and G2.
template <CoefficientType C>
RingHomomorphism<C> sigma(const SeriesTuple<C>& log1, const SeriesTuple<C>& log2, const C& a) {
  if (log1.size() != log2.size() || log1.trunc_degree() != log2.trunc_degree())
    throw ShapeMismatch("sigma needs logarithms of equal dimension and precision");
  auto r1 = std::make_shared<const FormalRing<C>>(product_from_log(log1));
  auto r2 = std::make_shared<const FormalRing<C>>(product_from_log(log2));
  SeriesTuple<C> f = detail::scaled_through_log(log1, *r2->add_law.exp, a);
  return RingHomomorphism<C>(std::move(f), std::move(r1), std::move(r2));
}

/// Checks f(Phi1(x,y)) = Phi2(f(x),f(y)) and f(Psi1(x,y)) = Psi2(f(x),f(y)).
template <CoefficientType C>
VerificationReport verify_homomorphism(const RingHomomorphism<C>& hom, unsigned degree) {
  const std::size_t n = hom.map.size();
  const SeriesTuple<C> f = truncate(hom.map, degree);
  VerificationReport report;
  report.max_degree = degree;
  std::vector<std::size_t> tx(n), ty(n);
  for (std::size_t i = 0; i < n; ++i) {
    tx[i] = i;
    ty[i] = n + i;
  }
  std::vector<Series<C>> fx, fy;
  for (const auto& s : f.components()) {
    fx.push_back(remap_variables(s, std::span<const std::size_t>(tx), 2 * n));
    fy.push_back(remap_variables(s, std::span<const std::size_t>(ty), 2 * n));
  }
  const auto args = detail::concat(fx, fy);
  auto check = [&](const std::string& name, const SeriesTuple<C>& law1, const SeriesTuple<C>& law2) {
    const auto l1 = truncate(law1, degree);
    const auto l2 = truncate(law2, degree);
    detail::compare_tuples(report, name, detail::apply_tuple(f, l1.components()), detail::apply_tuple(l2, args));
  };
  check("f(phi1(x,y)) = phi2(f(x),f(y))", hom.source->phi(), hom.target->phi());
  check("f(psi1(x,y)) = psi2(f(x),f(y))", hom.source->psi(), hom.target->psi());
  return report;
}

using ParameterAssignment = std::map<std::string, Rational>;

/// Coefficientwise evaluation Q[params] -> Q.
inline Series<Rational> map_base(const ParameterAssignment& assignment, const Series<Poly>& f) {
  return map_coefficients<Rational>(f, RationalRing{}, [&](const Poly& p) { return eval_params(p, assignment); });
}

inline SeriesTuple<Rational> map_base(const ParameterAssignment& assignment, const SeriesTuple<Poly>& t) {
  std::vector<Series<Rational>> out;
  for (const auto& s : t.components()) out.push_back(map_base(assignment, s));
  return SeriesTuple<Rational>(std::move(out));
}

/// Every parameter of the ring must be assigned, even ones absent from the
/// series, so the result never silently depends on a missing value.
inline FormalRing<Rational> map_base(const ParameterAssignment& assignment, const FormalRing<Poly>& r) {
  for (const auto& name : r.ring().parameters())
    if (!assignment.count(name)) throw UnassignedParameter(name);
  std::optional<SeriesTuple<Rational>> log, exp;
  if (r.add_law.log) log = map_base(assignment, *r.add_law.log);
  if (r.add_law.exp) exp = map_base(assignment, *r.add_law.exp);
  FormalGroup<Rational> group(map_base(assignment, r.phi()), std::move(log), std::move(exp));
  return FormalRing<Rational>(std::move(group), map_base(assignment, r.psi()));
}

/// Result of the Newton search for the root of G(x) = 1.
struct UnitApproximation {
  Rational value;
  Rational residual;  // |G(value) - 1| on the truncated polynomial
  std::vector<Rational> residuals;
};

/// Newton iteration for G(x) = 1 on the truncated one-variable polynomial G,
/// starting at x = 1/2. Heuristic: this is numerical evaluation of a formal
/// object. Iterates are rounded to dyadic rationals with `precision_bits`
/// fractional bits to keep numbers small. Throws NonConvergence when the
/// residual stops shrinking above `tolerance` or the budget runs out.
inline UnitApproximation approx_unit_detailed(const SeriesTuple<Rational>& log, unsigned iterations,
                                              const Rational& tolerance = Rational(mpz_class(1), mpz_class("100000000000000000000")),
                                              unsigned precision_bits = 128) {
  if (log.size() != 1 || log.num_vars() != 1) throw ShapeMismatch("approx_unit needs a one-dimensional logarithm");
  if (iterations == 0) throw InvalidArgument("approx_unit needs at least one iteration");
  const Series<Rational>& g = log[0];
  std::vector<Rational> coef(g.max_degree() + 1, Rational(0));
  for (const auto& [m, c] : g.terms()) coef[m.degree()] = c;
  coef[0] -= Rational(1);

  auto eval = [&](const Rational& x, bool derivative) {
    Rational acc(0);
    for (std::size_t k = coef.size(); k-- > 0;) {
      if (derivative) {
        if (k == 0) break;
        acc = acc * x + coef[k] * Rational(static_cast<long>(k));
      } else {
        acc = acc * x + coef[k];
      }
    }
    return acc;
  };
  mpz_class scale = 1;
  scale <<= precision_bits;
  auto round_dyadic = [&](const Rational& x) {
    mpq_class scaled = x.gmp() * scale;
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    mpq_class frac = scaled - mpq_class(r);
    if (frac >= mpq_class(1, 2)) r += 1;
    return Rational(r, scale);
  };

  UnitApproximation out{Rational(1, 2), abs(eval(Rational(1, 2), false)), {}};
  out.residuals.push_back(out.residual);
  for (unsigned it = 0; it < iterations; ++it) {
    if (out.residual.is_zero() || out.residual <= tolerance) return out;
    const Rational d = eval(out.value, true);
    if (d.is_zero()) throw NonConvergence("derivative vanishes at " + out.value.to_string());
    Rational next = out.value - eval(out.value, false) / d;
    if (!next.is_integer() || next.denominator() > scale) next = round_dyadic(next);
    const Rational r = abs(eval(next, false));
    if (r >= out.residual) throw NonConvergence("residual stopped decreasing at " + std::to_string(r.to_double()));
    out.value = next;
    out.residual = r;
    out.residuals.push_back(r);
  }
  if (out.residual.is_zero() || out.residual <= tolerance) return out;
  throw NonConvergence("iteration budget exhausted with residual " + std::to_string(out.residual.to_double()));
}

inline Rational approx_unit(const SeriesTuple<Rational>& log, unsigned iterations) {
  return approx_unit_detailed(log, iterations).value;
}

}  // namespace formal_rings

#endif  // FORMAL_RINGS_FRING_HPP
