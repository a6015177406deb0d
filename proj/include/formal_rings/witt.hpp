#ifndef FORMAL_RINGS_WITT_HPP
#define FORMAL_RINGS_WITT_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "formal_rings/errors.hpp"
#include "formal_rings/fglaw.hpp"
#include "formal_rings/fring.hpp"
#include "formal_rings/scalars.hpp"
#include "formal_rings/series.hpp"

namespace formal_rings {

enum class GhostKind { separated, partially_separated, p_typical, universal, custom };

inline std::string to_string(GhostKind k) {
  switch (k) {
    case GhostKind::separated: return "separated";
    case GhostKind::partially_separated: return "partially_separated";
    case GhostKind::p_typical: return "p_typical";
    case GhostKind::universal: return "universal";
    case GhostKind::custom: return "custom";
  }
  return "?";
}

/// A triangular family g_1..g_n, g_k in x_1..x_k, with an invertible
/// constant as coefficient of x_k in g_k.
///
/// Separated families also keep their one-variable pieces chi_i^{(k)};
/// every family that splits as g_k = tau(x_1..x_{k-1}) + omega_k(x_k) keeps
/// tau and omega.
struct GhostFamily {
  std::size_t n = 0;
  GhostKind kind = GhostKind::custom;
  unsigned p = 0;
  /// The ghosts are exact polynomials rather than truncated series.
  bool polynomial = true;
  std::vector<Series<Rational>> ghosts;
  std::vector<std::vector<Series<Rational>>> chi;
  std::vector<Series<Rational>> tau;
  std::vector<Series<Rational>> omega;

  unsigned precision() const { return ghosts.front().trunc_degree(); }
  SeriesTuple<Rational> tuple() const { return SeriesTuple<Rational>(ghosts); }
  bool is_separated() const { return !chi.empty(); }
  bool is_partially_separated() const { return !omega.empty(); }
  Rational diagonal(std::size_t k) const { return ghosts[k].coefficient(Monomial::variable(k)); }
};

namespace detail {

inline bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline Series<Rational> at_precision(const Series<Rational>& s, unsigned degree, bool polynomial) {
  return polynomial ? s.with_exact_precision(degree) : truncate(s, degree);
}

inline Series<Rational> single_var(std::size_t index, std::size_t num_vars, const Series<Rational>& one_var) {
  const std::size_t target[] = {index};
  return remap_variables(one_var, std::span<const std::size_t>(target), num_vars);
}

/// Fills tau/omega from the ghosts when every g_k splits as tau + omega.
inline void split_ghosts(GhostFamily& g) {
  std::vector<Series<Rational>> tau, omega;
  for (std::size_t k = 0; k < g.n; ++k) {
    std::vector<Series<Rational>::Term> t_terms, w_terms;
    for (const auto& [m, c] : g.ghosts[k].terms()) {
      if (m[k] == 0) {
        t_terms.emplace_back(m, c);
      } else if (m.support_size() == k + 1 && m.degree() == m[k]) {
        w_terms.emplace_back(Monomial::variable(0, m[k]), c);
      } else {
        return;
      }
    }
    const unsigned d = g.precision();
    tau.push_back(Series<Rational>::from_terms(RationalRing{}, g.n, d, std::move(t_terms)));
    omega.push_back(Series<Rational>::from_terms(RationalRing{}, 1, d, std::move(w_terms)));
  }
  g.tau = std::move(tau);
  g.omega = std::move(omega);
}

inline void validate_ghosts(const GhostFamily& g) {
  if (g.n == 0) throw InvalidArgument("a ghost family needs n >= 1");
  if (2 * g.n > kMaxVars) throw InvalidArgument("ghost families are limited to n <= 8");
  if (g.ghosts.size() != g.n) throw ShapeMismatch("ghost family needs n ghosts");
  for (std::size_t k = 0; k < g.n; ++k) {
    const auto& s = g.ghosts[k];
    if (s.num_vars() != g.n) throw ShapeMismatch("ghosts live in n variables");
    if (s.trunc_degree() != g.precision()) throw ShapeMismatch("ghosts differ in precision");
    if (s.support_size() > k + 1)
      throw InvalidArgument("ghost g_" + std::to_string(k + 1) + " depends on a later variable");
    if (!s.constant_term().is_zero()) throw NonzeroConstantTerm("ghost");
    if (g.diagonal(k).is_zero())
      throw SingularLinearPart("coefficient of x_" + std::to_string(k + 1) + " in g_" + std::to_string(k + 1) +
                               " is zero");
  }
}

inline std::vector<Series<Rational>> chi_to_ghosts(const std::vector<std::vector<Series<Rational>>>& chi,
                                                   unsigned degree, bool polynomial) {
  const std::size_t n = chi.size();
  std::vector<Series<Rational>> ghosts;
  for (std::size_t k = 0; k < n; ++k) {
    Series<Rational> g(RationalRing{}, n, degree);
    for (std::size_t i = 0; i <= k; ++i) g += single_var(i, n, at_precision(chi[k][i], degree, polynomial));
    ghosts.push_back(std::move(g));
  }
  return ghosts;
}

}  // namespace detail

/// g_k = sum_i chi_i^{(k)}(x_i), with chi[k][i] = chi_{i+1}^{(k+1)} a series in
/// one variable.
inline GhostFamily ghosts_separated(const std::vector<std::vector<Series<Rational>>>& chi, bool polynomial = true) {
  const std::size_t n = chi.size();
  if (n == 0) throw InvalidArgument("a ghost family needs n >= 1");
  unsigned degree = polynomial ? 1 : kMaxExponent;
  for (std::size_t k = 0; k < n; ++k) {
    if (chi[k].size() != k + 1) throw ShapeMismatch("row k of chi needs k entries");
    for (const auto& s : chi[k]) {
      if (s.num_vars() != 1) throw ShapeMismatch("chi entries are one-variable series");
      if (!s.constant_term().is_zero()) throw NonzeroConstantTerm("chi entry");
      degree = polynomial ? std::max(degree, s.max_degree()) : std::min(degree, s.trunc_degree());
    }
    if (chi[k][k].coefficient(Monomial::variable(0)).is_zero())
      throw SingularLinearPart("chi_" + std::to_string(k + 1) + "^(" + std::to_string(k + 1) +
                               ") has no invertible linear coefficient");
  }
  GhostFamily g;
  g.n = n;
  g.kind = GhostKind::separated;
  g.polynomial = polynomial;
  for (const auto& row : chi) {
    std::vector<Series<Rational>> r;
    for (const auto& s : row) r.push_back(detail::at_precision(s, degree, polynomial));
    g.chi.push_back(std::move(r));
  }
  g.ghosts = detail::chi_to_ghosts(g.chi, degree, polynomial);
  for (std::size_t k = 0; k < n; ++k) {
    Series<Rational> t(RationalRing{}, n, degree);
    for (std::size_t i = 0; i < k; ++i) t += detail::single_var(i, n, g.chi[k][i]);
    g.tau.push_back(std::move(t));
    g.omega.push_back(g.chi[k][k]);
  }
  detail::validate_ghosts(g);
  return g;
}

/// g_k = tau_{k-1}(x_1..x_{k-1}) + omega_k(x_k). tau[k] is a series in k
/// variables (ignored for k = 0), omega[k] a one-variable series.
inline GhostFamily ghosts_partially_separated(const std::vector<Series<Rational>>& tau,
                                              const std::vector<Series<Rational>>& omega, bool polynomial = true) {
  const std::size_t n = omega.size();
  if (n == 0) throw InvalidArgument("a ghost family needs n >= 1");
  if (tau.size() != n) throw ShapeMismatch("tau and omega must have the same length");
  unsigned degree = polynomial ? 1 : kMaxExponent;
  auto track = [&](const Series<Rational>& s) {
    degree = polynomial ? std::max(degree, s.max_degree()) : std::min(degree, s.trunc_degree());
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (omega[k].num_vars() != 1) throw ShapeMismatch("omega entries are one-variable series");
    if (!omega[k].constant_term().is_zero()) throw NonzeroConstantTerm("omega");
    if (omega[k].coefficient(Monomial::variable(0)).is_zero())
      throw SingularLinearPart("omega_" + std::to_string(k + 1) + " has no invertible linear coefficient");
    track(omega[k]);
    if (k > 0) {
      if (tau[k].support_size() > k)
        throw InvalidArgument("tau_" + std::to_string(k) + " depends on more than " + std::to_string(k) + " variables");
      if (!tau[k].constant_term().is_zero()) throw NonzeroConstantTerm("tau");
      track(tau[k]);
    }
  }
  GhostFamily g;
  g.n = n;
  g.kind = GhostKind::partially_separated;
  g.polynomial = polynomial;
  for (std::size_t k = 0; k < n; ++k) {
    Series<Rational> t(RationalRing{}, n, degree);
    if (k > 0) {
      std::vector<std::size_t> target(tau[k].num_vars());
      for (std::size_t i = 0; i < target.size(); ++i) target[i] = i;
      if (target.size() > n) throw ShapeMismatch("tau has more variables than the family");
      t = detail::at_precision(remap_variables(tau[k], std::span<const std::size_t>(target), n), degree, polynomial);
    }
    Series<Rational> w = detail::at_precision(omega[k], degree, polynomial);
    g.ghosts.push_back(t + detail::single_var(k, n, w));
    g.tau.push_back(std::move(t));
    g.omega.push_back(std::move(w));
  }
  detail::validate_ghosts(g);
  return g;
}

/// Classical Witt polynomials g_k = sum_{i<=k} p^{i-1} x_i^{p^{k-i}}.
inline GhostFamily ghosts_p_typical(unsigned p, std::size_t n) {
  if (!detail::is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (n == 0) throw InvalidArgument("n must be at least 1");
  std::vector<std::vector<Series<Rational>>> chi(n);
  unsigned long top = 1;
  for (std::size_t k = 1; k < n; ++k) top *= p;
  if (top > kMaxExponent) throw PrecisionError("p^(n-1) exceeds the maximal degree 255");
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      unsigned e = 1;
      for (std::size_t j = i; j < k; ++j) e *= p;
      Rational c = pow(Rational(static_cast<long>(p)), static_cast<unsigned>(i));
      chi[k].push_back(Series<Rational>::from_terms(RationalRing{}, 1, e, {{Monomial::variable(0, e), c}}));
    }
  }
  GhostFamily g = ghosts_separated(chi);
  g.kind = GhostKind::p_typical;
  g.p = p;
  return g;
}

/// g_k = sum_{d | k} d x_d^{k/d}.
inline GhostFamily ghosts_universal(std::size_t n) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  if (n > kMaxExponent) throw PrecisionError("n exceeds the maximal degree 255");
  std::vector<std::vector<Series<Rational>>> chi(n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t d = 1; d <= k; ++d) {
      std::vector<Series<Rational>::Term> terms;
      if (k % d == 0) terms.emplace_back(Monomial::variable(0, static_cast<unsigned>(k / d)), Rational(static_cast<long>(d)));
      chi[k - 1].push_back(Series<Rational>::from_terms(RationalRing{}, 1, static_cast<unsigned>(k), std::move(terms)));
    }
  }
  GhostFamily g = ghosts_separated(chi);
  g.kind = GhostKind::universal;
  return g;
}

/// Arbitrary triangular ghosts; split into tau + omega when possible.
inline GhostFamily ghosts_custom(const std::vector<Series<Rational>>& ghosts, bool polynomial = true) {
  if (ghosts.empty()) throw InvalidArgument("a ghost family needs n >= 1");
  GhostFamily g;
  g.n = ghosts.size();
  g.kind = GhostKind::custom;
  g.polynomial = polynomial;
  unsigned degree = polynomial ? 1 : kMaxExponent;
  for (const auto& s : ghosts)
    degree = polynomial ? std::max(degree, s.max_degree()) : std::min(degree, s.trunc_degree());
  for (const auto& s : ghosts) {
    if (s.num_vars() != g.n) throw ShapeMismatch("ghosts live in n variables");
    g.ghosts.push_back(detail::at_precision(s, degree, polynomial));
  }
  detail::validate_ghosts(g);
  detail::split_ghosts(g);
  return g;
}

/// The laws Phi_1..Phi_n and Psi_1..Psi_n in x_1..x_n, y_1..y_n.
struct WittLaws {
  std::size_t n;
  SeriesTuple<Rational> add_laws;
  SeriesTuple<Rational> mul_laws;
  /// Every law is an exact polynomial (no truncation loss).
  bool exact;

  unsigned trunc_degree() const { return add_laws.trunc_degree(); }
};

enum class WittPrecision { automatic, exact, truncated };
enum class WittSolver { automatic, separated, partially_separated, generic };

namespace detail {

inline std::optional<Rational> linear_coefficient_only(const Series<Rational>& w) {
  if (w.size() != 1 || w.terms()[0].first.degree() != 1) return std::nullopt;
  return w.terms()[0].second;
}

/// Degree bounds for the exact solve, from the ghost degrees and the
/// monomials of tau.
inline std::optional<unsigned> exact_degree_bound(const GhostFamily& g) {
  std::vector<unsigned long> bphi, bpsi;
  unsigned long top = 1;
  for (std::size_t k = 0; k < g.n; ++k) {
    const unsigned long dg = g.ghosts[k].max_degree();
    unsigned long a = dg, m = 2 * dg;
    for (const auto& [mono, c] : g.tau[k].terms()) {
      unsigned long sa = 0, sm = 0;
      for (std::size_t j = 0; j < k; ++j) {
        sa += mono[j] * bphi[j];
        sm += mono[j] * bpsi[j];
      }
      a = std::max(a, sa);
      m = std::max(m, sm);
    }
    bphi.push_back(a);
    bpsi.push_back(m);
    top = std::max({top, a, m});
  }
  if (top > kMaxExponent) return std::nullopt;
  return static_cast<unsigned>(top);
}

class WittSolve {
 public:
  WittSolve(const GhostFamily& g, unsigned degree, bool exact) : g_(g), n_(g.n), d_(degree), exact_(exact) {
    for (std::size_t i = 0; i < n_; ++i) {
      x_.push_back(Series<Rational>::variable(RationalRing{}, 2 * n_, d_, i));
      y_.push_back(Series<Rational>::variable(RationalRing{}, 2 * n_, d_, n_ + i));
    }
  }

  std::pair<SeriesTuple<Rational>, SeriesTuple<Rational>> separated() const {
    std::vector<Series<Rational>> phi, psi;
    for (std::size_t k = 0; k < n_; ++k) {
      Series<Rational> sx(RationalRing{}, 2 * n_, d_), sy = sx, back_phi = sx, back_psi = sx;
      for (std::size_t i = 0; i <= k; ++i) {
        const Series<Rational> c = prec(g_.chi[k][i]);
        sx += one_var(c, x_[i]);
        sy += one_var(c, y_[i]);
        if (i < k) {
          back_phi += one_var(c, phi[i]);
          back_psi += one_var(c, psi[i]);
        }
      }
      phi.push_back(unwind(k, sx + sy - back_phi));
      psi.push_back(unwind(k, sx * sy - back_psi));
    }
    return {SeriesTuple<Rational>(std::move(phi)), SeriesTuple<Rational>(std::move(psi))};
  }

  std::pair<SeriesTuple<Rational>, SeriesTuple<Rational>> partially_separated() const {
    std::vector<Series<Rational>> phi, psi;
    const std::vector<std::size_t> tx = block(0), ty = block(1);
    for (std::size_t k = 0; k < n_; ++k) {
      const Series<Rational> gk = prec(g_.ghosts[k]);
      const Series<Rational> gx = remap_variables(gk, std::span<const std::size_t>(tx), 2 * n_);
      const Series<Rational> gy = remap_variables(gk, std::span<const std::size_t>(ty), 2 * n_);
      const Series<Rational> t = prec(g_.tau[k]);
      phi.push_back(unwind(k, gx + gy - through_tau(t, phi)));
      psi.push_back(unwind(k, gx * gy - through_tau(t, psi)));
    }
    return {SeriesTuple<Rational>(std::move(phi)), SeriesTuple<Rational>(std::move(psi))};
  }

 private:
  Series<Rational> prec(const Series<Rational>& s) const { return at_precision(s, d_, g_.polynomial); }

  std::vector<std::size_t> block(std::size_t b) const {
    std::vector<std::size_t> t(n_);
    for (std::size_t i = 0; i < n_; ++i) t[i] = b * n_ + i;
    return t;
  }

  static Series<Rational> one_var(const Series<Rational>& f, const Series<Rational>& arg) {
    return compose(f, std::span<const Series<Rational>>(&arg, 1), arg.trunc_degree());
  }

  Series<Rational> through_tau(const Series<Rational>& tau, const std::vector<Series<Rational>>& known) const {
    std::vector<Series<Rational>> args(known);
    while (args.size() < n_) args.emplace_back(RationalRing{}, 2 * n_, d_);
    return compose(tau, std::span<const Series<Rational>>(args), d_);
  }

  /// Solves omega_k(z) = rhs for z.
  Series<Rational> unwind(std::size_t k, const Series<Rational>& rhs) const {
    const Series<Rational> w = prec(g_.omega[k]);
    if (auto c = linear_coefficient_only(w)) return rhs.scaled(Rational(1) / *c);
    if (exact_) throw PrecisionError("exact solve needs a linear diagonal");
    const SeriesTuple<Rational> inv = invert_tuple(SeriesTuple<Rational>({w}));
    return one_var(inv[0], rhs);
  }

  const GhostFamily& g_;
  std::size_t n_;
  unsigned d_;
  bool exact_;
  std::vector<Series<Rational>> x_, y_;
};

}  // namespace detail

/// Solves the generalized Witt equations g(Phi(x,y)) = g(x) + g(y) and
/// g(Psi(x,y)) = g(x) g(y) componentwise for i = 1..n.
///
/// When the ghosts are polynomials and each g_k has x_k-part c*x_k, the laws
/// are polynomials and are computed exactly (at a degree bound derived from
/// the ghosts, independent of `degree`); otherwise they are truncated at
/// `degree`.
inline WittLaws witt_laws(const GhostFamily& g, unsigned degree, WittPrecision mode = WittPrecision::automatic,
                          WittSolver solver = WittSolver::automatic) {
  if (solver == WittSolver::automatic)
    solver = g.is_separated() ? WittSolver::separated
             : g.is_partially_separated() ? WittSolver::partially_separated
                                          : WittSolver::generic;
  if (solver == WittSolver::separated && !g.is_separated())
    throw InvalidArgument("ghost family is not separated");
  if (solver == WittSolver::partially_separated && !g.is_partially_separated())
    throw InvalidArgument("ghost family is not partially separated");

  std::optional<unsigned> bound;
  if (g.polynomial && solver != WittSolver::generic) {
    bool linear = true;
    for (const auto& w : g.omega) linear = linear && detail::linear_coefficient_only(w).has_value();
    if (linear) bound = detail::exact_degree_bound(g);
  }
  bool exact = false;
  if (mode == WittPrecision::exact) {
    if (!bound) throw PrecisionError("exact Witt laws are not attainable for this ghost family");
    if (degree < g.precision()) throw PrecisionError("degree is below the ghost degree");
    exact = true;
  } else if (mode == WittPrecision::automatic) {
    exact = bound.has_value();
  }
  const unsigned work = exact ? *bound : degree;
  if (work == 0) throw PrecisionError("degree must be at least 1");

  if (solver == WittSolver::generic) {
    std::vector<Series<Rational>> gs;
    for (const auto& s : g.ghosts) gs.push_back(detail::at_precision(s, work, g.polynomial));
    FormalRing<Rational> r = product_from_log(SeriesTuple<Rational>(std::move(gs)));
    return WittLaws{g.n, r.phi(), r.psi(), false};
  }
  detail::WittSolve solve(g, work, exact);
  auto [phi, psi] = solver == WittSolver::separated ? solve.separated() : solve.partially_separated();
  return WittLaws{g.n, std::move(phi), std::move(psi), exact};
}

/// Phi_i, Psi_i contain no x_j, y_j with j > i.
inline bool is_triangular(const WittLaws& laws) {
  const std::size_t n = laws.n;
  auto ok = [&](const SeriesTuple<Rational>& t) {
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [m, c] : t[i].terms())
        for (std::size_t j = i + 1; j < n; ++j)
          if (m[j] != 0 || m[n + j] != 0) return false;
    return true;
  };
  return ok(laws.add_laws) && ok(laws.mul_laws);
}

/// The laws packaged as an n-dimensional formal ring (without logarithm).
inline FormalRing<Rational> witt_ring(const WittLaws& laws) {
  return FormalRing<Rational>(FormalGroup<Rational>(laws.add_laws), laws.mul_laws);
}

using WittVector = std::vector<Coefficient>;

namespace detail {

template <CoefficientType C>
Series<C> lift(const Series<Rational>& s, const ring_of_t<C>& ring) {
  if constexpr (std::is_same_v<C, Rational>) {
    return s;
  } else {
    return map_coefficients<C>(s, ring, [&](const Rational& c) { return ring.from_rational(c); });
  }
}

/// All entries in one coefficient type: rationals if every entry is rational,
/// otherwise polynomials in the (single) parameter ring that occurs.
inline std::optional<PolyRing> common_poly_ring(std::initializer_list<const WittVector*> vectors) {
  std::optional<PolyRing> ring;
  for (const auto* v : vectors)
    for (const auto& c : *v)
      if (const auto* p = std::get_if<Poly>(&c)) {
        if (ring && !(*ring == p->ring())) throw RingMismatch("Witt vector entries from different parameter rings");
        ring = p->ring();
      }
  return ring;
}

template <CoefficientType C>
std::vector<C> unpack(const WittVector& v, const ring_of_t<C>& ring) {
  std::vector<C> out;
  for (const auto& c : v) {
    if constexpr (std::is_same_v<C, Rational>) {
      out.push_back(std::get<Rational>(c));
    } else {
      out.push_back(std::get<Poly>(embed(c, ring)));
    }
  }
  return out;
}

template <CoefficientType C>
WittVector pack(const std::vector<C>& v) {
  return WittVector(v.begin(), v.end());
}

inline void require_exact(const WittLaws& laws) {
  if (!laws.exact) throw InvalidArgument("Witt vector arithmetic needs exact laws");
}

template <CoefficientType C>
WittVector evaluate_laws(const SeriesTuple<Rational>& laws, const std::vector<C>& a, const std::vector<C>& b,
                         const ring_of_t<C>& ring) {
  std::vector<C> point(a);
  point.insert(point.end(), b.begin(), b.end());
  std::vector<C> out;
  for (const auto& s : laws.components()) out.push_back(evaluate(lift<C>(s, ring), std::span<const C>(point)));
  return pack(out);
}

template <class Fn>
WittVector dispatch(std::initializer_list<const WittVector*> vectors, Fn fn) {
  if (auto ring = common_poly_ring(vectors)) return fn(std::type_identity<Poly>{}, *ring);
  return fn(std::type_identity<Rational>{}, RationalRing{});
}

}  // namespace detail

/// (a_1..a_n) (+) (b_1..b_n) = (Phi_1(a,b), ..., Phi_n(a,b)).
inline WittVector gw_add(const WittLaws& laws, const WittVector& a, const WittVector& b) {
  detail::require_exact(laws);
  if (a.size() != laws.n || b.size() != laws.n) throw ShapeMismatch("Witt vector length does not match the laws");
  return detail::dispatch({&a, &b}, [&](auto tag, const auto& ring) {
    using C = typename decltype(tag)::type;
    return detail::evaluate_laws<C>(laws.add_laws, detail::unpack<C>(a, ring), detail::unpack<C>(b, ring), ring);
  });
}

inline WittVector gw_mul(const WittLaws& laws, const WittVector& a, const WittVector& b) {
  detail::require_exact(laws);
  if (a.size() != laws.n || b.size() != laws.n) throw ShapeMismatch("Witt vector length does not match the laws");
  return detail::dispatch({&a, &b}, [&](auto tag, const auto& ring) {
    using C = typename decltype(tag)::type;
    return detail::evaluate_laws<C>(laws.mul_laws, detail::unpack<C>(a, ring), detail::unpack<C>(b, ring), ring);
  });
}

/// The r with a (+) r = 0, solved entry by entry: Phi_k is linear in y_k.
inline WittVector gw_neg(const WittLaws& laws, const WittVector& a) {
  detail::require_exact(laws);
  if (a.size() != laws.n) throw ShapeMismatch("Witt vector length does not match the laws");
  const std::size_t n = laws.n;
  return detail::dispatch({&a}, [&](auto tag, const auto& ring) {
    using C = typename decltype(tag)::type;
    std::vector<C> point = detail::unpack<C>(a, ring);
    point.resize(2 * n, ring.zero());
    std::vector<C> r;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t free = n + k;
      std::vector<C> by_power;
      for (const auto& [m, c] : laws.add_laws[k].terms()) {
        C term = ring.from_rational(c);
        for (std::size_t v = 0; v < 2 * n; ++v)
          if (v != free && m[v] != 0) for (unsigned e = 0; e < m[v]; ++e) term = term * point[v];
        if (by_power.size() <= m[free]) by_power.resize(m[free] + 1, ring.zero());
        by_power[m[free]] = by_power[m[free]] + term;
      }
      by_power.resize(std::max<std::size_t>(by_power.size(), 2), ring.zero());
      for (std::size_t e = 2; e < by_power.size(); ++e)
        if (!by_power[e].is_zero()) throw InvalidArgument("addition law is not linear in y_" + std::to_string(k + 1));
      if (by_power[1].is_zero()) throw DivisionByZero();
      C rk = -coefficient_traits<C>::div_exact(by_power[0], by_power[1]);
      point[free] = rk;
      r.push_back(std::move(rk));
    }
    return detail::pack(r);
  });
}

/// (g_1(a), ..., g_n(a)).
inline WittVector ghost_map(const GhostFamily& g, const WittVector& a) {
  if (a.size() != g.n) throw ShapeMismatch("Witt vector length does not match the ghost family");
  if (!g.polynomial) throw InvalidArgument("ghost map needs polynomial ghosts");
  return detail::dispatch({&a}, [&](auto tag, const auto& ring) {
    using C = typename decltype(tag)::type;
    const std::vector<C> point = detail::unpack<C>(a, ring);
    std::vector<C> out;
    for (const auto& s : g.ghosts) out.push_back(evaluate(detail::lift<C>(s, ring), std::span<const C>(point)));
    return detail::pack(out);
  });
}

/// Parses "1,0,-3/2" into rational entries.
inline WittVector parse_witt_vector(std::string_view text) {
  WittVector out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    out.emplace_back(Rational::parse(part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string format_witt_vector(const WittVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += coef_to_string(v[i]);
  }
  return out;
}

}  // namespace formal_rings

#endif  // FORMAL_RINGS_WITT_HPP
