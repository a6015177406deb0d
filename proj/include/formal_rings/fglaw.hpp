#ifndef FORMAL_RINGS_FGLAW_HPP
#define FORMAL_RINGS_FGLAW_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "formal_rings/errors.hpp"
#include "formal_rings/series.hpp"

namespace formal_rings {

/// One coefficient at which the two sides of an identity disagree.
struct IdentityFailure {
  std::string identity;
  std::size_t component = 0;
  std::vector<unsigned> exponents;
  std::string lhs;
  std::string rhs;
};

/// Outcome of checking a list of series identities up to a degree. Failures
/// are listed per identity in graded-lex order, so the first failure of an
/// identity is its lowest offending monomial.
struct VerificationReport {
  std::vector<std::string> checked;
  unsigned max_degree = 0;
  std::vector<IdentityFailure> failures;

  bool ok() const { return failures.empty(); }

  std::vector<std::string> failing_identities() const {
    std::vector<std::string> names;
    for (const auto& f : failures)
      if (names.empty() || names.back() != f.identity) names.push_back(f.identity);
    return names;
  }

  const IdentityFailure* first_failure(const std::string& identity) const {
    for (const auto& f : failures)
      if (f.identity == identity) return &f;
    return nullptr;
  }

  void append(const VerificationReport& other) {
    checked.insert(checked.end(), other.checked.begin(), other.checked.end());
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    max_degree = std::max(max_degree, other.max_degree);
  }
};

namespace detail {

template <CoefficientType C>
void compare_series(VerificationReport& report, const std::string& identity, std::size_t component,
                    const Series<C>& lhs, const Series<C>& rhs) {
  const auto& a = lhs.terms();
  const auto& b = rhs.terms();
  const auto zero = lhs.ring().zero();
  std::size_t i = 0, j = 0;
  auto record = [&](const Monomial& m, const C& l, const C& r) {
    report.failures.push_back({identity, component, m.to_vector(lhs.num_vars()), to_string(l), to_string(r)});
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(a[i].first, b[j].first))) {
      record(a[i].first, a[i].second, zero);
      ++i;
    } else if (i == a.size() || grlex_less(b[j].first, a[i].first)) {
      record(b[j].first, zero, b[j].second);
      ++j;
    } else {
      if (!(a[i].second == b[j].second)) record(a[i].first, a[i].second, b[j].second);
      ++i;
      ++j;
    }
  }
}

template <CoefficientType C>
void compare_tuples(VerificationReport& report, const std::string& identity, const std::vector<Series<C>>& lhs,
                    const std::vector<Series<C>>& rhs) {
  report.checked.push_back(identity);
  for (std::size_t i = 0; i < lhs.size(); ++i) compare_series(report, identity, i, lhs[i], rhs[i]);
}

/// The variables of block `block` (0 = x, 1 = y, 2 = z) in a space of
/// `blocks` blocks of size n.
template <CoefficientType C>
std::vector<Series<C>> block_vars(const ring_of_t<C>& ring, std::size_t n, std::size_t block, std::size_t blocks,
                                  unsigned degree) {
  std::vector<Series<C>> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Series<C>::variable(ring, n * blocks, degree, block * n + i));
  return out;
}

template <CoefficientType C>
std::vector<Series<C>> zero_block(const ring_of_t<C>& ring, std::size_t n, std::size_t blocks, unsigned degree) {
  return std::vector<Series<C>>(n, Series<C>(ring, n * blocks, degree));
}

/// Places a law in (x, y) blocks into a larger alphabet: its x block goes to
/// block `first`, its y block to block `second`.
template <CoefficientType C>
std::vector<Series<C>> place_blocks(const SeriesTuple<C>& law, std::size_t n, std::size_t first, std::size_t second,
                                    std::size_t blocks) {
  std::vector<std::size_t> target(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    target[i] = first * n + i;
    target[n + i] = second * n + i;
  }
  std::vector<Series<C>> out;
  for (const auto& s : law.components()) out.push_back(remap_variables(s, std::span<const std::size_t>(target), n * blocks));
  return out;
}

template <CoefficientType C>
std::vector<Series<C>> concat(std::vector<Series<C>> a, const std::vector<Series<C>>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

template <CoefficientType C>
std::vector<Series<C>> apply_tuple(const SeriesTuple<C>& law, const std::vector<Series<C>>& args) {
  std::vector<Series<C>> out;
  for (const auto& s : law.components()) out.push_back(compose(s, std::span<const Series<C>>(args)));
  return out;
}

/// G(x) + G(y) (or a * G(x) * G(y) componentwise when `product`), in 2n variables.
template <CoefficientType C>
std::vector<Series<C>> combine_logs(const SeriesTuple<C>& log, bool product, const C* scale = nullptr) {
  const std::size_t n = log.size();
  std::vector<std::size_t> tx(n), ty(n);
  for (std::size_t i = 0; i < n; ++i) {
    tx[i] = i;
    ty[i] = n + i;
  }
  std::vector<Series<C>> out;
  for (std::size_t i = 0; i < n; ++i) {
    Series<C> a = remap_variables(log[i], std::span<const std::size_t>(tx), 2 * n);
    Series<C> b = remap_variables(log[i], std::span<const std::size_t>(ty), 2 * n);
    Series<C> v = product ? a * b : a + b;
    if (scale) v = v.scaled(*scale);
    out.push_back(std::move(v));
  }
  return out;
}

template <CoefficientType C>
void check_log(const SeriesTuple<C>& log) {
  if (log.num_vars() != log.size()) throw ShapeMismatch("a logarithm needs n components in n variables");
}

}  // namespace detail

/// An n-dimensional formal group law Phi in 2n variables (x_1..x_n, y_1..y_n),
/// optionally remembering the logarithm it came from and its inverse.
template <CoefficientType C>
struct FormalGroup {
  std::size_t dim;
  SeriesTuple<C> law;
  std::optional<SeriesTuple<C>> log;
  std::optional<SeriesTuple<C>> exp;

  explicit FormalGroup(SeriesTuple<C> phi, std::optional<SeriesTuple<C>> logarithm = std::nullopt,
                       std::optional<SeriesTuple<C>> exponential = std::nullopt)
      : dim(phi.size()), law(std::move(phi)), log(std::move(logarithm)), exp(std::move(exponential)) {
    if (law.num_vars() != 2 * dim) throw ShapeMismatch("a group law in dimension n needs 2n variables");
    const auto& ring = law.ring();
    for (std::size_t i = 0; i < dim; ++i) {
      if (!law[i].constant_term().is_zero()) throw NonzeroConstantTerm("group law");
      if (law.trunc_degree() < 1) continue;
      for (std::size_t v = 0; v < 2 * dim; ++v) {
        const C want = (v == i || v == dim + i) ? ring.one() : ring.zero();
        if (!(law[i].coefficient(Monomial::variable(v)) == want))
          throw InvalidArgument("group law component " + std::to_string(i + 1) + " is not x_i + y_i mod degree 2");
      }
    }
  }

  unsigned trunc_degree() const { return law.trunc_degree(); }
};

/// Phi(x, y) = G^{-1}(G(x) + G(y)).
template <CoefficientType C>
FormalGroup<C> law_from_log(const SeriesTuple<C>& log) {
  detail::check_log(log);
  SeriesTuple<C> exp = invert_tuple(log);
  auto sums = detail::combine_logs(log, false);
  SeriesTuple<C> phi(detail::apply_tuple(exp, sums));
  return FormalGroup<C>(std::move(phi), log, std::move(exp));
}

namespace detail {

template <CoefficientType C>
const SeriesTuple<C>& exponential_of(const FormalGroup<C>& group) {
  if (!group.log || !group.exp) throw InvalidArgument("formal group does not carry its logarithm");
  return *group.exp;
}

/// G^{-1}(a * G(x)) with the exponential already available.
template <CoefficientType C>
SeriesTuple<C> scaled_through_log(const SeriesTuple<C>& log, const SeriesTuple<C>& exp, const C& a) {
  std::vector<Series<C>> scaled;
  for (const auto& g : log.components()) scaled.push_back(g.scaled(a));
  return SeriesTuple<C>(apply_tuple(exp, scaled));
}

}  // namespace detail

/// chi(x) = G^{-1}(-G(x)), the formal inverse: Phi(x, chi(x)) = 0.
template <CoefficientType C>
SeriesTuple<C> group_inverse_series(const FormalGroup<C>& group) {
  const auto& exp = detail::exponential_of(group);
  return detail::scaled_through_log(*group.log, exp, -group.law.ring().one());
}

template <CoefficientType C>
SeriesTuple<C> group_inverse_series(const SeriesTuple<C>& log) {
  detail::check_log(log);
  return detail::scaled_through_log(log, invert_tuple(log), -log.ring().one());
}

/// rho_a(x) = G^{-1}(a G(x)), multiplication by a in the formal group.
template <CoefficientType C>
SeriesTuple<C> rho(const FormalGroup<C>& group, const C& a) {
  return detail::scaled_through_log(*group.log, detail::exponential_of(group), a);
}

template <CoefficientType C>
SeriesTuple<C> rho(const SeriesTuple<C>& log, const C& a) {
  detail::check_log(log);
  return detail::scaled_through_log(log, invert_tuple(log), a);
}

/// Checks Phi(x,0) = x, Phi(0,x) = x, commutativity and associativity as exact
/// coefficient identities up to `degree`. Associativity is tested in 3n
/// variables.
template <CoefficientType C>
VerificationReport verify_group_axioms(const FormalGroup<C>& group, unsigned degree) {
  const std::size_t n = group.dim;
  const SeriesTuple<C> phi = truncate(group.law, degree);
  const auto& ring = phi.ring();
  VerificationReport report;
  report.max_degree = degree;

  const auto x = detail::block_vars<C>(ring, n, 0, 1, degree);
  const auto zero = detail::zero_block<C>(ring, n, 1, degree);
  detail::compare_tuples(report, "phi(x,0) = x", detail::apply_tuple(phi, detail::concat(x, zero)), x);
  detail::compare_tuples(report, "phi(0,x) = x", detail::apply_tuple(phi, detail::concat(zero, x)), x);

  detail::compare_tuples(report, "phi(x,y) = phi(y,x)", phi.components(), detail::place_blocks(phi, n, 1, 0, 2));

  const auto z = detail::block_vars<C>(ring, n, 2, 3, degree);
  const auto x3 = detail::block_vars<C>(ring, n, 0, 3, degree);
  const auto xy = detail::place_blocks(phi, n, 0, 1, 3);
  const auto yz = detail::place_blocks(phi, n, 1, 2, 3);
  detail::compare_tuples(report, "phi(phi(x,y),z) = phi(x,phi(y,z))", detail::apply_tuple(phi, detail::concat(xy, z)),
                         detail::apply_tuple(phi, detail::concat(x3, yz)));
  return report;
}

}  // namespace formal_rings

#endif  // FORMAL_RINGS_FGLAW_HPP
