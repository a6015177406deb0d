#ifndef FORMAL_RINGS_CATALOG_HPP
#define FORMAL_RINGS_CATALOG_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "formal_rings/errors.hpp"
#include "formal_rings/fglaw.hpp"
#include "formal_rings/fring.hpp"
#include "formal_rings/scalars.hpp"
#include "formal_rings/series.hpp"

namespace formal_rings {

using AnyLog = std::variant<SeriesTuple<Rational>, SeriesTuple<Poly>>;
using AnyRing = std::variant<FormalRing<Rational>, FormalRing<Poly>>;

struct CatalogEntry {
  std::string name;
  std::size_t dim;
  /// Parameter names at the default degree 8 (lazard grows with D).
  std::vector<std::string> parameters;
  /// Built over Q[parameters] when no values are assigned.
  bool symbolic;
  ParameterAssignment defaults;
  std::string description;
};

/// An expected coefficient of one series of a catalog ring.
struct Fixture {
  std::string series;  // log, exp, phi or psi
  std::size_t component;
  std::vector<unsigned> exponents;
  std::string coefficient;
  std::string source;  // published, derived or trivial
  unsigned degree;     // smallest truncation degree at which it is visible
};

namespace detail {

inline const std::vector<CatalogEntry>& registry() {
  static const std::vector<CatalogEntry> entries = {
      {"additive", 1, {}, false, {}, "G(x) = x; Phi = x + y, Psi = xy"},
      {"multiplicative", 1, {"alpha"}, true, {}, "G(s) = log(1 + alpha s)/alpha; Phi = x + y + alpha xy"},
      {"todd", 1, {}, false, {}, "G(s) = -log(1 - s); Phi = x + y - xy"},
      {"c_genus", 1, {}, false, {}, "G(s) = s/(1 - s)"},
      {"l_genus", 1, {}, false, {}, "G(s) = artanh(s)"},
      {"t_q", 1, {"q"}, true, {}, "Phi = (x + y + (q - 1)xy)/(1 + qxy) over Q[q]"},
      {"euler", 1, {}, false, {}, "G(x) = integral of (1 - s^4)^(-1/2)"},
      {"abel", 1, {"a", "b"}, true, {}, "exp(t) = (e^(at) - e^(bt))/(a - b)"},
      {"abel_degenerate", 1, {"a"}, true, {}, "exp(t) = t e^(at)"},
      {"lazard", 1, {"a1", "a2", "a3", "a4", "a5", "a6", "a7"}, true, {},
       "G(x) = sum a_k x^(k+1)/(k+1), a_0 = 1, symbolic a_1..a_(D-1)"},
      {"twodim_mult", 2, {"a", "b"}, false, {{"a", Rational(1)}, {"b", Rational(2)}},
       "two-dimensional biparametric multiplicative law at rational a, b"},
  };
  return entries;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() { return detail::registry(); }

inline const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw InvalidArgument("unknown catalog ring '" + name + "'");
}

/// Parameter names of an entry at truncation degree D.
inline std::vector<std::string> catalog_parameters(const std::string& name, unsigned degree) {
  const auto& e = catalog_entry(name);
  if (name != "lazard") return e.parameters;
  std::vector<std::string> out;
  for (unsigned k = 1; k < degree; ++k) out.push_back("a" + std::to_string(k));
  return out;
}

namespace detail {

template <CoefficientType C>
Series<C> one_var(const ring_of_t<C>& ring, unsigned degree, const std::vector<C>& coefs) {
  return Series<C>::univariate(ring, degree, coefs);
}

/// 1/m! * c^(m-1) for m = 0..D (zero constant term): (e^(c t) - 1)/c.
template <CoefficientType C>
std::vector<C> exp_minus_one_over(const ring_of_t<C>& ring, const C& c, unsigned degree) {
  std::vector<C> out(degree + 1, ring.zero());
  C power = ring.one();
  for (unsigned m = 1; m <= degree; ++m) {
    out[m] = power * ring.from_rational(Rational(1) / factorial(m));
    power = power * c;
  }
  return out;
}

template <CoefficientType C>
SeriesTuple<C> single(Series<C> s) {
  return SeriesTuple<C>(std::vector<Series<C>>{std::move(s)});
}

template <CoefficientType C>
SeriesTuple<C> multiplicative_log(const ring_of_t<C>& ring, const C& alpha, unsigned D) {
  std::vector<C> coefs(D + 1, ring.zero());
  C power = ring.one();
  for (unsigned k = 1; k <= D; ++k) {
    Rational w(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    coefs[k] = power * ring.from_rational(w);
    power = power * alpha;
  }
  return single(one_var<C>(ring, D, coefs));
}

template <CoefficientType C>
SeriesTuple<C> t_q_log(const ring_of_t<C>& ring, const C& q, unsigned D) {
  std::vector<C> coefs(D + 1, ring.zero());
  C partial = ring.zero();
  C power = ring.one();
  for (unsigned n = 0; n + 1 <= D; ++n) {
    partial = partial + power;
    power = power * (-q);
    coefs[n + 1] = partial * ring.from_rational(Rational(1, static_cast<long>(n + 1)));
  }
  return single(one_var<C>(ring, D, coefs));
}

template <CoefficientType C>
SeriesTuple<C> abel_log(const ring_of_t<C>& ring, const C& a, const C& b, unsigned D) {
  // (a^m - b^m)/(a - b) = h_{m-1}(a, b), complete homogeneous.
  std::vector<C> coefs(D + 1, ring.zero());
  std::vector<C> apow{ring.one()}, bpow{ring.one()};
  for (unsigned j = 1; j < D; ++j) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  for (unsigned m = 1; m <= D; ++m) {
    C h = ring.zero();
    for (unsigned i = 0; i < m; ++i) h = h + apow[i] * bpow[m - 1 - i];
    coefs[m] = h * ring.from_rational(Rational(1) / factorial(m));
  }
  return invert_tuple(single(one_var<C>(ring, D, coefs)));
}

template <CoefficientType C>
SeriesTuple<C> abel_degenerate_log(const ring_of_t<C>& ring, const C& a, unsigned D) {
  std::vector<C> coefs(D + 1, ring.zero());
  C power = ring.one();
  for (unsigned m = 1; m <= D; ++m) {
    coefs[m] = power * ring.from_rational(Rational(1) / factorial(m - 1));
    power = power * a;
  }
  return invert_tuple(single(one_var<C>(ring, D, coefs)));
}

template <CoefficientType C>
SeriesTuple<C> lazard_log(const ring_of_t<C>& ring, const std::vector<C>& a, unsigned D) {
  std::vector<C> coefs(D + 1, ring.zero());
  coefs[1] = ring.one();
  for (unsigned k = 1; k < D; ++k) coefs[k + 1] = a[k - 1] * ring.from_rational(Rational(1, static_cast<long>(k + 1)));
  return single(one_var<C>(ring, D, coefs));
}

inline SeriesTuple<Rational> rational_log(const std::vector<Rational>& coefs, unsigned D) {
  return single(one_var<Rational>(RationalRing{}, D, coefs));
}

inline SeriesTuple<Rational> euler_log(unsigned D) {
  std::vector<Rational> coefs(D + 1, Rational(0));
  for (unsigned k = 0; 4 * k + 1 <= D; ++k)
    coefs[4 * k + 1] = binomial(2 * k, k) / pow(Rational(4), k) / Rational(static_cast<long>(4 * k + 1));
  return rational_log(coefs, D);
}

/// The exponential of the two-dimensional law: components
/// (e^{2A(t1+t2)} - 1)/(2A) +- (e^{2B(t1-t2)} - 1)/(2B), A = a + b, B = a - b.
inline SeriesTuple<Rational> twodim_exp(const Rational& a, const Rational& b, unsigned D) {
  const RationalRing q;
  const Rational A = a + b, B = a - b;
  auto u = Series<Rational>::variable(q, 2, D, 0) + Series<Rational>::variable(q, 2, D, 1);
  auto v = Series<Rational>::variable(q, 2, D, 0) - Series<Rational>::variable(q, 2, D, 1);
  auto fa = one_var<Rational>(q, D, exp_minus_one_over<Rational>(q, Rational(2) * A, D));
  auto fb = one_var<Rational>(q, D, exp_minus_one_over<Rational>(q, Rational(2) * B, D));
  auto ea = compose(fa, std::span<const Series<Rational>>(&u, 1));
  auto eb = compose(fb, std::span<const Series<Rational>>(&v, 1));
  return SeriesTuple<Rational>({ea + eb, ea - eb});
}

inline void check_twodim_params(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero() || (a + b).is_zero() || (a - b).is_zero())
    throw InvalidArgument("twodim_mult needs a, b, a + b and a - b nonzero");
}

template <CoefficientType C>
AnyLog build_log(const std::string& name, const ring_of_t<C>& ring, const std::map<std::string, C>& p, unsigned D) {
  auto get = [&](const std::string& k) -> const C& { return p.at(k); };
  if (name == "multiplicative") return multiplicative_log<C>(ring, get("alpha"), D);
  if (name == "t_q") return t_q_log<C>(ring, get("q"), D);
  if (name == "abel") return abel_log<C>(ring, get("a"), get("b"), D);
  if (name == "abel_degenerate") return abel_degenerate_log<C>(ring, get("a"), D);
  if (name == "lazard") {
    std::vector<C> a;
    for (unsigned k = 1; k < D; ++k) a.push_back(get("a" + std::to_string(k)));
    return lazard_log<C>(ring, a, D);
  }
  throw InvalidArgument("unknown catalog ring '" + name + "'");
}

}  // namespace detail

/// The logarithm of a catalog ring at truncation degree D. Symbolic entries
/// stay over Q[params] when no parameter is assigned and become rational when
/// all are; a partial assignment is an error.
inline AnyLog make_log(const std::string& name, const ParameterAssignment& params, unsigned degree) {
  const auto& entry = catalog_entry(name);
  if (degree < 1) throw PrecisionError("degree must be at least 1");
  if (name == "lazard" && degree > kMaxVars + 1)
    throw PrecisionError("lazard supports degree <= 17 (one parameter per degree)");
  const auto names = catalog_parameters(name, degree);
  for (const auto& [k, v] : params)
    if (std::find(names.begin(), names.end(), k) == names.end())
      throw InvalidArgument("ring '" + name + "' has no parameter '" + k + "'");

  const unsigned D = degree;
  if (name == "additive") return detail::rational_log({Rational(0), Rational(1)}, D);
  if (name == "todd") return detail::multiplicative_log<Rational>(RationalRing{}, Rational(-1), D);
  if (name == "c_genus") {
    std::vector<Rational> coefs(D + 1, Rational(1));
    coefs[0] = Rational(0);
    return detail::rational_log(coefs, D);
  }
  if (name == "l_genus") {
    std::vector<Rational> coefs(D + 1, Rational(0));
    for (unsigned k = 1; k <= D; k += 2) coefs[k] = Rational(1, static_cast<long>(k));
    return detail::rational_log(coefs, D);
  }
  if (name == "euler") return detail::euler_log(D);
  if (name == "twodim_mult") {
    ParameterAssignment p = entry.defaults;
    for (const auto& [k, v] : params) p[k] = v;
    detail::check_twodim_params(p.at("a"), p.at("b"));
    return invert_tuple(detail::twodim_exp(p.at("a"), p.at("b"), D));
  }

  if (params.empty()) {
    PolyRing ring(names);
    std::map<std::string, Poly> symbols;
    for (const auto& k : names) symbols.emplace(k, ring.parameter(k));
    return detail::build_log<Poly>(name, ring, symbols, D);
  }
  for (const auto& k : names)
    if (!params.count(k))
      throw UnassignedParameter(k + " (assign all parameters of '" + name + "' or none)");
  return detail::build_log<Rational>(name, RationalRing{}, params, D);
}

inline AnyRing make_ring(const std::string& name, const ParameterAssignment& params, unsigned degree) {
  AnyLog log = make_log(name, params, degree);
  return std::visit([](const auto& g) -> AnyRing { return product_from_log(g); }, log);
}

inline std::size_t ring_dim(const AnyRing& r) {
  return std::visit([](const auto& x) { return x.dim; }, r);
}

/// Expected coefficients, with a source label: published (displayed
/// closed forms and expansions), derived (computed by hand from those) or
/// trivial. Parametric fixtures are for the symbolic ring; twodim_mult
/// fixtures are for its default parameters (1, 2).
inline std::vector<Fixture> fixtures(const std::string& name) {
  catalog_entry(name);
  using V = std::vector<unsigned>;
  if (name == "additive")
    return {{"log", 0, V{1}, "1", "trivial", 1},
            {"phi", 0, V{1, 0}, "1", "trivial", 1},
            {"phi", 0, V{0, 1}, "1", "trivial", 1},
            {"phi", 0, V{1, 1}, "0", "trivial", 2},
            {"psi", 0, V{1, 1}, "1", "trivial", 2},
            {"psi", 0, V{2, 1}, "0", "trivial", 3}};
  if (name == "multiplicative")
    return {{"phi", 0, V{1, 1}, "alpha", "published", 2},
            {"phi", 0, V{2, 1}, "0", "published", 3},
            {"log", 0, V{2}, "-1/2*alpha", "published", 2},
            {"exp", 0, V{2}, "1/2*alpha", "published", 2},
            {"psi", 0, V{1, 1}, "1", "derived", 2},
            {"psi", 0, V{2, 1}, "-1/2*alpha", "derived", 3}};
  if (name == "todd")
    return {{"phi", 0, V{1, 0}, "1", "published", 1},
            {"phi", 0, V{1, 1}, "-1", "published", 2},
            {"phi", 0, V{2, 1}, "0", "published", 3},
            {"phi", 0, V{3, 3}, "0", "published", 6},
            {"log", 0, V{3}, "1/3", "published", 3},
            {"psi", 0, V{2, 1}, "1/2", "derived", 3}};
  if (name == "c_genus")
    return {{"log", 0, V{4}, "1", "published", 4},
            {"exp", 0, V{3}, "1", "published", 3},
            {"phi", 0, V{1, 1}, "-2", "derived", 2},
            {"phi", 0, V{2, 1}, "1", "derived", 3},
            {"psi", 0, V{1, 1}, "1", "derived", 2},
            {"psi", 0, V{2, 1}, "1", "derived", 3},
            {"psi", 0, V{1, 2}, "1", "derived", 3},
            {"psi", 0, V{2, 2}, "0", "derived", 4}};
  if (name == "l_genus")
    return {{"log", 0, V{3}, "1/3", "published", 3},
            {"log", 0, V{4}, "0", "published", 4},
            {"phi", 0, V{1, 1}, "0", "derived", 2},
            {"phi", 0, V{2, 1}, "-1", "derived", 3},
            {"psi", 0, V{1, 1}, "1", "derived", 2},
            {"psi", 0, V{3, 1}, "1/3", "derived", 4}};
  if (name == "t_q")
    return {{"phi", 0, V{1, 1}, "q - 1", "published", 2},
            {"phi", 0, V{2, 1}, "-q", "derived", 3},
            {"log", 0, V{2}, "-1/2*q + 1/2", "derived", 2},
            {"log", 0, V{3}, "1/3*q^2 - 1/3*q + 1/3", "derived", 3}};
  if (name == "euler")
    return {{"log", 0, V{5}, "1/10", "published", 17},
            {"log", 0, V{9}, "1/24", "published", 17},
            {"log", 0, V{13}, "5/208", "published", 17},
            {"log", 0, V{17}, "35/2176", "published", 17},
            {"exp", 0, V{5}, "-1/10", "published", 17},
            {"exp", 0, V{9}, "1/120", "published", 17},
            {"exp", 0, V{13}, "-11/15600", "published", 17},
            {"exp", 0, V{17}, "211/3536000", "published", 17},
            {"psi", 0, V{1, 1}, "1", "published", 14},
            {"psi", 0, V{1, 5}, "1/10", "published", 14},
            {"psi", 0, V{5, 1}, "1/10", "published", 14},
            {"psi", 0, V{1, 9}, "1/24", "published", 14},
            {"psi", 0, V{9, 1}, "1/24", "published", 14},
            {"psi", 0, V{5, 5}, "-9/100", "published", 14},
            {"psi", 0, V{5, 9}, "-11/240", "published", 14},
            {"psi", 0, V{9, 5}, "-11/240", "published", 14},
            {"psi", 0, V{1, 13}, "5/208", "published", 14},
            {"psi", 0, V{13, 1}, "5/208", "published", 14}};
  if (name == "abel")
    return {{"log", 0, V{2}, "-1/2*a - 1/2*b", "published", 4},
            {"log", 0, V{3}, "1/3*a^2 + 5/6*a*b + 1/3*b^2", "published", 4},
            {"exp", 0, V{2}, "1/2*a + 1/2*b", "published", 4},
            {"psi", 0, V{1, 1}, "1", "published", 4},
            {"psi", 0, V{1, 2}, "-1/2*a - 1/2*b", "published", 4},
            {"psi", 0, V{2, 1}, "-1/2*a - 1/2*b", "published", 4},
            {"psi", 0, V{1, 3}, "1/3*a^2 + 5/6*a*b + 1/3*b^2", "published", 4},
            {"psi", 0, V{3, 1}, "1/3*a^2 + 5/6*a*b + 1/3*b^2", "published", 4},
            {"psi", 0, V{2, 2}, "1/4*a^2 + 1/2*a*b + 1/4*b^2 + 1/2*a + 1/2*b", "published", 4}};
  if (name == "abel_degenerate")
    return {{"exp", 0, V{2}, "a", "published", 3},
            {"exp", 0, V{3}, "1/2*a^2", "published", 3},
            {"log", 0, V{2}, "-a", "derived", 3},
            {"log", 0, V{3}, "3/2*a^2", "derived", 3}};
  if (name == "lazard")
    return {{"log", 0, V{2}, "1/2*a1", "published", 3},
            {"log", 0, V{3}, "1/3*a2", "published", 3},
            {"phi", 0, V{1, 1}, "-a1", "derived", 3},
            {"exp", 0, V{2}, "-1/2*a1", "derived", 3}};
  // twodim_mult at a = 1, b = 2.
  return {{"phi", 0, V{1, 0, 0, 0}, "1", "published", 3},
          {"phi", 0, V{0, 0, 1, 0}, "1", "published", 3},
          {"phi", 0, V{1, 0, 1, 0}, "1", "published", 3},
          {"phi", 0, V{1, 0, 0, 1}, "2", "published", 3},
          {"phi", 0, V{0, 1, 1, 0}, "2", "published", 3},
          {"phi", 0, V{0, 1, 0, 1}, "1", "published", 3},
          {"phi", 0, V{2, 0, 0, 0}, "0", "published", 3},
          {"phi", 0, V{2, 0, 1, 0}, "0", "published", 3},
          {"phi", 1, V{0, 1, 0, 0}, "1", "published", 3},
          {"phi", 1, V{0, 0, 0, 1}, "1", "published", 3},
          {"phi", 1, V{1, 0, 1, 0}, "2", "published", 3},
          {"phi", 1, V{1, 0, 0, 1}, "1", "published", 3},
          {"phi", 1, V{0, 1, 1, 0}, "1", "published", 3},
          {"phi", 1, V{0, 1, 0, 1}, "2", "published", 3},
          {"phi", 1, V{0, 2, 0, 1}, "0", "published", 3},
          {"exp", 0, V{1, 0}, "2", "published", 3},
          {"exp", 0, V{0, 1}, "0", "published", 3},
          {"exp", 1, V{0, 1}, "2", "published", 3}};
}

/// A fixture whose computed coefficient differs from the expected one.
struct FixtureMismatch {
  Fixture fixture;
  std::string actual;
};

namespace detail {

template <CoefficientType C>
const SeriesTuple<C>& fixture_series(const FormalRing<C>& r, const std::string& series) {
  if (series == "phi") return r.phi();
  if (series == "psi") return r.psi();
  if (series == "log") return *r.add_law.log;
  if (series == "exp") return *r.add_law.exp;
  throw InvalidArgument("unknown fixture series '" + series + "'");
}

template <CoefficientType C>
C parse_in(const std::string& text, const ring_of_t<C>& ring) {
  if constexpr (std::is_same_v<C, Rational>) {
    return Rational::parse(text);
  } else {
    return Poly::parse(text, ring);
  }
}

}  // namespace detail

/// Builds the ring at the largest fixture degree (or `degree` if larger) and
/// compares every fixture.
inline std::vector<FixtureMismatch> check_fixtures(const std::string& name, unsigned degree = 0) {
  const auto fx = fixtures(name);
  for (const auto& f : fx) degree = std::max(degree, f.degree);
  const AnyRing ring = make_ring(name, {}, degree);
  std::vector<FixtureMismatch> out;
  std::visit(
      [&](const auto& r) {
        using C = typename std::decay_t<decltype(r.phi())>::Ring;
        using Coef = std::conditional_t<std::is_same_v<C, RationalRing>, Rational, Poly>;
        for (const auto& f : fx) {
          const auto& s = detail::fixture_series(r, f.series);
          Monomial m;
          for (std::size_t i = 0; i < f.exponents.size(); ++i) m.set(i, f.exponents[i]);
          const Coef actual = s[f.component].coefficient(m);
          const Coef expected = detail::parse_in<Coef>(f.coefficient, r.ring());
          if (!(actual == expected)) out.push_back({f, to_string(actual)});
        }
      },
      ring);
  return out;
}

namespace detail {

/// exp(s) - 1 and log(1 + s) applied to a series with zero constant term.
inline Series<Rational> expm1_of(const Series<Rational>& s) {
  const unsigned D = s.trunc_degree();
  auto f = Series<Rational>::univariate(RationalRing{}, D, exp_minus_one_over<Rational>(RationalRing{}, Rational(1), D));
  return compose(f, std::span<const Series<Rational>>(&s, 1));
}

inline Series<Rational> log1p_of(const Series<Rational>& s) {
  const unsigned D = s.trunc_degree();
  auto f = multiplicative_log<Rational>(RationalRing{}, Rational(1), D)[0];
  return compose(f, std::span<const Series<Rational>>(&s, 1));
}

}  // namespace detail

/// The displayed closed-form multiplication of the two-dimensional law,
/// (psi + varphi, psi - varphi), expanded over Q at rational a, b.
inline SeriesTuple<Rational> twodim_closed_form_psi(const Rational& a, const Rational& b, unsigned D) {
  detail::check_twodim_params(a, b);
  const RationalRing q;
  auto var = [&](std::size_t i) { return Series<Rational>::variable(q, 4, D, i); };
  const auto x1 = var(0), x2 = var(1), y1 = var(2), y2 = var(3);
  const Rational half(1, 2);
  const auto la_x = detail::log1p_of((x1 + x2).scaled(half * a));
  const auto la_y = detail::log1p_of((y1 + y2).scaled(half * a));
  const auto lb_x = detail::log1p_of((x1 - x2).scaled(half * b));
  const auto lb_y = detail::log1p_of((y1 - y2).scaled(half * b));
  const Series<Rational> one = Series<Rational>::constant(q, 4, D, Rational(1));
  auto exp_of = [&](const Series<Rational>& s) { return one + detail::expm1_of(s); };

  const auto psi_exp = exp_of((lb_x * lb_y).scaled(a / (Rational(2) * b * b))) *
                       exp_of((la_x + la_y).scaled(Rational(1) / (Rational(2) * a)));
  const auto psi = (psi_exp - one).scaled(Rational(1) / a);
  const auto phi_exp = exp_of((la_x * lb_y).scaled(Rational(1) / (Rational(2) * a))) *
                       exp_of((lb_x + la_y).scaled(Rational(1) / (Rational(2) * a)));
  const auto varphi = (phi_exp - one).scaled(Rational(1) / b);
  return SeriesTuple<Rational>({psi + varphi, psi - varphi});
}

/// How the displayed closed form relates to the multiplications
/// Psi_c = G^{-1}(c G(x) G(y)) of the constructed ring.
struct ClosedFormComparison {
  /// The scale c for which Psi_c equals the closed form, if any was found.
  std::optional<Rational> matching_scale;
  /// The lowest monomial where the closed form and Psi_1 differ.
  std::optional<IdentityFailure> first_difference;
  /// Lowest degree of a nonzero term of the closed form.
  unsigned closed_form_order = 0;
};

inline ClosedFormComparison compare_twodim_closed_form(const Rational& a, const Rational& b, unsigned D,
                                                      const std::vector<Rational>& scales) {
  ClosedFormComparison out;
  const auto closed = twodim_closed_form_psi(a, b, D);
  unsigned order = D + 1;
  for (const auto& s : closed.components())
    if (s.order()) order = std::min(order, *s.order());
  out.closed_form_order = order;
  const auto log = std::get<SeriesTuple<Rational>>(make_log("twodim_mult", {{"a", a}, {"b", b}}, D));
  const auto group = law_from_log(log);
  for (const auto& c : scales) {
    const auto ring = psi_scaled(group, c);
    VerificationReport report;
    detail::compare_tuples(report, "closed form = Psi_c", closed.components(), ring.psi().components());
    if (c == Rational(1) && !report.ok()) out.first_difference = report.failures.front();
    if (report.ok() && !out.matching_scale) out.matching_scale = c;
  }
  return out;
}

}  // namespace formal_rings

#endif  // FORMAL_RINGS_CATALOG_HPP
