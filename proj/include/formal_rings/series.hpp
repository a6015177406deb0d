#ifndef FORMAL_RINGS_SERIES_HPP
#define FORMAL_RINGS_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "formal_rings/errors.hpp"
#include "formal_rings/monomial.hpp"
#include "formal_rings/scalars.hpp"

namespace formal_rings {

/// Truncated multivariate formal power series: every coefficient of total
/// degree <= trunc_degree is known exactly, everything above is discarded.
///
/// Terms are stored sparsely in ascending graded-lex order without zeros.
template <CoefficientType C>
class Series {
 public:
  using coefficient_type = C;
  using Ring = ring_of_t<C>;
  using Term = std::pair<Monomial, C>;

  Series(Ring ring, std::size_t num_vars, unsigned trunc_degree)
      : ring_(std::move(ring)), num_vars_(num_vars), trunc_degree_(trunc_degree) {
    if (num_vars == 0 || num_vars > kMaxVars) throw ShapeMismatch("number of variables must be in 1..16");
    if (trunc_degree > kMaxExponent) throw PrecisionError("truncation degree above 255");
  }

  /// Builds a series from arbitrary terms: drops degree > D, merges
  /// duplicates and removes zeros.
  static Series from_terms(Ring ring, std::size_t num_vars, unsigned trunc_degree, std::vector<Term> terms) {
    Series s(std::move(ring), num_vars, trunc_degree);
    for (const auto& t : terms)
      if (t.first.support_size() > num_vars) throw ShapeMismatch("exponent vector longer than num_vars");
    std::erase_if(terms, [&](const Term& t) { return t.first.degree() > trunc_degree; });
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_less(a.first, b.first); });
    s.terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (!s.terms_.empty() && s.terms_.back().first == t.first) {
        s.terms_.back().second = s.terms_.back().second + t.second;
      } else {
        if (!s.terms_.empty() && s.terms_.back().second.is_zero()) s.terms_.pop_back();
        s.terms_.push_back(std::move(t));
      }
    }
    if (!s.terms_.empty() && s.terms_.back().second.is_zero()) s.terms_.pop_back();
    return s;
  }

  static Series constant(Ring ring, std::size_t num_vars, unsigned trunc_degree, C value) {
    Series s(std::move(ring), num_vars, trunc_degree);
    if (!value.is_zero()) s.terms_.emplace_back(Monomial(), std::move(value));
    return s;
  }

  static Series variable(Ring ring, std::size_t num_vars, unsigned trunc_degree, std::size_t index) {
    if (index >= num_vars) throw ShapeMismatch("variable index out of range");
    Series s(ring, num_vars, trunc_degree);
    if (trunc_degree >= 1) s.terms_.emplace_back(Monomial::variable(index), ring.one());
    return s;
  }

  /// One-variable series sum_k coefs[k] x^k (coefficients past D ignored).
  static Series univariate(Ring ring, unsigned trunc_degree, const std::vector<C>& coefs) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coefs.size() && k <= trunc_degree; ++k)
      if (!coefs[k].is_zero()) terms.emplace_back(Monomial::variable(0, static_cast<unsigned>(k)), coefs[k]);
    return from_terms(std::move(ring), 1, trunc_degree, std::move(terms));
  }

  const Ring& ring() const { return ring_; }
  std::size_t num_vars() const { return num_vars_; }
  unsigned trunc_degree() const { return trunc_degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return grlex_less(t.first, key); });
    if (it != terms_.end() && it->first == m) return it->second;
    return ring_.zero();
  }

  C constant_term() const { return coefficient(Monomial()); }

  /// Lowest total degree of a nonzero term; nullopt for the zero series.
  std::optional<unsigned> order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first.degree();
  }

  /// Highest total degree present (0 for the zero series).
  unsigned max_degree() const { return terms_.empty() ? 0 : terms_.back().first.degree(); }

  /// Largest variable index + 1 that occurs in some term.
  std::size_t support_size() const {
    std::size_t s = 0;
    for (const auto& t : terms_) s = std::max(s, t.first.support_size());
    return s;
  }

  /// Relabels the precision without touching coefficients. Only valid when
  /// the caller knows the series is an exact polynomial.
  Series with_exact_precision(unsigned trunc_degree) const {
    Series out(ring_, num_vars_, trunc_degree);
    for (const auto& t : terms_)
      if (t.first.degree() <= trunc_degree) out.terms_.push_back(t);
    return out;
  }

  Series operator-() const {
    Series out(ring_, num_vars_, trunc_degree_);
    out.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, -c);
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    a.check_compatible(b);
    return merge(a, b, false, a.trunc_degree_);
  }
  friend Series operator-(const Series& a, const Series& b) {
    a.check_compatible(b);
    return merge(a, b, true, a.trunc_degree_);
  }
  friend Series operator*(const Series& a, const Series& b) {
    a.check_compatible(b);
    return multiply(a, b, a.trunc_degree_);
  }
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series scaled(const C& k) const {
    Series out(ring_, num_vars_, trunc_degree_);
    if (k.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      C v = c * k;
      if (!v.is_zero()) out.terms_.emplace_back(m, std::move(v));
    }
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.num_vars_ == b.num_vars_ && a.trunc_degree_ == b.trunc_degree_ && a.ring_ == b.ring_ &&
           a.terms_ == b.terms_;
  }

  // Internal building blocks that take an explicit output precision.
  static Series merge(const Series& a, const Series& b, bool subtract, unsigned cutoff) {
    Series out(a.ring_, a.num_vars_, cutoff);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms_;
    const auto& tb = b.terms_;
    while (i < ta.size() || j < tb.size()) {
      if (j == tb.size() || (i < ta.size() && grlex_less(ta[i].first, tb[j].first))) {
        if (ta[i].first.degree() <= cutoff) out.terms_.push_back(ta[i]);
        ++i;
      } else if (i == ta.size() || grlex_less(tb[j].first, ta[i].first)) {
        if (tb[j].first.degree() <= cutoff) out.terms_.emplace_back(tb[j].first, subtract ? -tb[j].second : tb[j].second);
        ++j;
      } else {
        if (ta[i].first.degree() <= cutoff) {
          C c = subtract ? ta[i].second - tb[j].second : ta[i].second + tb[j].second;
          if (!c.is_zero()) out.terms_.emplace_back(ta[i].first, std::move(c));
        }
        ++i;
        ++j;
      }
    }
    return out;
  }

  static Series multiply(const Series& a, const Series& b, unsigned cutoff) {
    Series out(a.ring_, a.num_vars_, cutoff);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    const unsigned bmin = b.terms_.front().first.degree();
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 16));
    for (const auto& [ma, ca] : a.terms_) {
      if (ma.degree() + bmin > cutoff) break;
      for (const auto& [mb, cb] : b.terms_) {
        if (ma.degree() + mb.degree() > cutoff) break;
        auto [it, inserted] = acc.try_emplace(ma * mb, ca * cb);
        if (!inserted) it->second = it->second + ca * cb;
      }
    }
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) out.terms_.emplace_back(m, std::move(c));
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& x, const Term& y) { return grlex_less(x.first, y.first); });
    return out;
  }

  void check_compatible(const Series& o) const {
    if (num_vars_ != o.num_vars_) throw ShapeMismatch("series have different numbers of variables");
    if (trunc_degree_ != o.trunc_degree_) throw ShapeMismatch("series have different truncation degrees");
    if (!(ring_ == o.ring_)) throw RingMismatch("series over different coefficient rings");
  }

 private:
  Ring ring_;
  std::size_t num_vars_;
  unsigned trunc_degree_;
  std::vector<Term> terms_;
};

/// Removes every term of total degree > new_degree.
template <CoefficientType C>
Series<C> truncate(const Series<C>& f, unsigned new_degree) {
  if (new_degree > f.trunc_degree())
    throw PrecisionError("cannot raise precision from " + std::to_string(f.trunc_degree()) + " to " +
                         std::to_string(new_degree));
  return f.with_exact_precision(new_degree);
}

/// The degree-d homogeneous component of f.
template <CoefficientType C>
Series<C> homogeneous_part(const Series<C>& f, unsigned d) {
  std::vector<typename Series<C>::Term> terms;
  for (const auto& t : f.terms())
    if (t.first.degree() == d) terms.push_back(t);
  return Series<C>::from_terms(f.ring(), f.num_vars(), f.trunc_degree(), std::move(terms));
}

/// Moves variable i of f to position target[i] in a space of new_num_vars
/// variables. Used to place two-block series into three-block alphabets.
template <CoefficientType C>
Series<C> remap_variables(const Series<C>& f, std::span<const std::size_t> target, std::size_t new_num_vars) {
  if (target.size() != f.num_vars()) throw ShapeMismatch("remap needs one target per variable");
  for (std::size_t t : target)
    if (t >= new_num_vars) throw ShapeMismatch("remap target out of range");
  std::vector<typename Series<C>::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    Monomial out;
    for (std::size_t i = 0; i < f.num_vars(); ++i)
      if (m[i] != 0) out.set(target[i], out[target[i]] + m[i]);
    terms.emplace_back(out, c);
  }
  return Series<C>::from_terms(f.ring(), new_num_vars, f.trunc_degree(), std::move(terms));
}

/// Applies `fn` to every coefficient, producing a series over `ring`.
template <CoefficientType To, CoefficientType From, class Fn>
Series<To> map_coefficients(const Series<From>& f, const ring_of_t<To>& ring, Fn fn) {
  std::vector<typename Series<To>::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, fn(c));
  return Series<To>::from_terms(ring, f.num_vars(), f.trunc_degree(), std::move(terms));
}

/// Ordered list of series sharing arity, precision and coefficient ring; a map
/// between formal spaces.
template <CoefficientType C>
class SeriesTuple {
 public:
  using Ring = ring_of_t<C>;

  explicit SeriesTuple(std::vector<Series<C>> components) : components_(std::move(components)) {
    if (components_.empty()) throw ShapeMismatch("a series tuple needs at least one component");
    for (const auto& s : components_) {
      if (s.num_vars() != components_[0].num_vars()) throw ShapeMismatch("tuple components differ in num_vars");
      if (s.trunc_degree() != components_[0].trunc_degree())
        throw ShapeMismatch("tuple components differ in trunc_degree");
      if (!(s.ring() == components_[0].ring())) throw RingMismatch("tuple components differ in coefficient ring");
    }
  }
  SeriesTuple(std::initializer_list<Series<C>> components)
      : SeriesTuple(std::vector<Series<C>>(components)) {}

  /// (x_1, ..., x_n) in n variables.
  static SeriesTuple identity(const Ring& ring, std::size_t n, unsigned trunc_degree) {
    std::vector<Series<C>> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back(Series<C>::variable(ring, n, trunc_degree, i));
    return SeriesTuple(std::move(comps));
  }

  std::size_t size() const { return components_.size(); }
  const Series<C>& operator[](std::size_t i) const { return components_.at(i); }
  const std::vector<Series<C>>& components() const { return components_; }
  std::size_t num_vars() const { return components_[0].num_vars(); }
  unsigned trunc_degree() const { return components_[0].trunc_degree(); }
  const Ring& ring() const { return components_[0].ring(); }

  friend bool operator==(const SeriesTuple& a, const SeriesTuple& b) { return a.components_ == b.components_; }

 private:
  std::vector<Series<C>> components_;
};

template <CoefficientType C>
SeriesTuple<C> truncate(const SeriesTuple<C>& t, unsigned new_degree) {
  std::vector<Series<C>> out;
  for (const auto& s : t.components()) out.push_back(truncate(s, new_degree));
  return SeriesTuple<C>(std::move(out));
}

template <CoefficientType C>
SeriesTuple<C> remap_variables(const SeriesTuple<C>& t, std::span<const std::size_t> target, std::size_t new_num_vars) {
  std::vector<Series<C>> out;
  for (const auto& s : t.components()) out.push_back(remap_variables(s, target, new_num_vars));
  return SeriesTuple<C>(std::move(out));
}

namespace detail {

template <CoefficientType C>
struct Composer {
  using Term = typename Series<C>::Term;

  std::span<const Series<C>> args;
  std::vector<unsigned> orders;  // order of each argument; 0 marks the zero series
  const typename Series<C>::Ring& ring;
  std::size_t out_vars;

  Series<C> run(const std::vector<const Term*>& terms, std::size_t var, unsigned cutoff) const {
    Series<C> zero(ring, out_vars, cutoff);
    if (terms.empty()) return zero;
    if (var == args.size()) {
      C total = ring.zero();
      for (const Term* t : terms) total = total + t->second;
      return Series<C>::constant(ring, out_vars, cutoff, std::move(total));
    }
    std::map<unsigned, std::vector<const Term*>> buckets;
    for (const Term* t : terms) buckets[t->first[var]].push_back(t);
    const unsigned ord = orders[var];
    if (ord == 0) {
      auto it = buckets.find(0);
      return it == buckets.end() ? zero : run(it->second, var + 1, cutoff);
    }
    // Horner in the current argument; the bucket for exponent e only needs
    // precision cutoff - e * ord.
    const unsigned emax = buckets.rbegin()->first;
    Series<C> acc(ring, out_vars, cutoff);
    bool started = false;
    for (unsigned e = emax + 1; e-- > 0;) {
      if (static_cast<unsigned long>(e) * ord > cutoff) continue;
      const unsigned prec = cutoff - e * ord;
      if (started) acc = Series<C>::multiply(acc, args[var], prec);
      auto it = buckets.find(e);
      if (it != buckets.end()) {
        Series<C> part = run(it->second, var + 1, prec);
        acc = started ? Series<C>::merge(acc, part, false, prec) : part;
        started = true;
      }
    }
    return started ? acc : zero;
  }
};

}  // namespace detail

/// f(g_1, ..., g_m) truncated at `cutoff`. Every g_k must have zero constant
/// term so each output coefficient depends on finitely many terms of f.
template <CoefficientType C>
Series<C> compose(const Series<C>& f, std::span<const Series<C>> args, unsigned cutoff) {
  if (args.size() != f.num_vars())
    throw ShapeMismatch("composition needs " + std::to_string(f.num_vars()) + " arguments, got " +
                        std::to_string(args.size()));
  const std::size_t out_vars = args[0].num_vars();
  unsigned limit = f.trunc_degree();
  std::vector<unsigned> orders;
  for (const auto& g : args) {
    if (g.num_vars() != out_vars) throw ShapeMismatch("composition arguments differ in num_vars");
    if (!(g.ring() == f.ring())) throw RingMismatch("composition over different coefficient rings");
    if (!g.constant_term().is_zero()) throw NonzeroConstantTerm("composition argument");
    limit = std::min(limit, g.trunc_degree());
    orders.push_back(g.order().value_or(0));
  }
  if (cutoff > limit) throw PrecisionError("composition cutoff exceeds available precision");
  std::vector<const typename Series<C>::Term*> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    unsigned long min_deg = 0;
    bool vanishes = false;
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (t.first[k] == 0) continue;
      if (orders[k] == 0) vanishes = true;
      min_deg += static_cast<unsigned long>(t.first[k]) * orders[k];
    }
    if (!vanishes && min_deg <= cutoff) terms.push_back(&t);
  }
  detail::Composer<C> composer{args, orders, f.ring(), out_vars};
  return composer.run(terms, 0, cutoff);
}

template <CoefficientType C>
Series<C> compose(const Series<C>& f, std::span<const Series<C>> args) {
  unsigned limit = f.trunc_degree();
  for (const auto& g : args) limit = std::min(limit, g.trunc_degree());
  return compose(f, args, limit);
}

template <CoefficientType C>
Series<C> compose(const Series<C>& f, const SeriesTuple<C>& args) {
  return compose(f, std::span<const Series<C>>(args.components()));
}

/// Componentwise composition f o g of tuples.
template <CoefficientType C>
SeriesTuple<C> compose(const SeriesTuple<C>& f, const SeriesTuple<C>& g) {
  std::vector<Series<C>> out;
  for (const auto& fi : f.components()) out.push_back(compose(fi, g));
  return SeriesTuple<C>(std::move(out));
}

template <CoefficientType C>
SeriesTuple<C> compose(const SeriesTuple<C>& f, std::span<const Series<C>> args) {
  std::vector<Series<C>> out;
  for (const auto& fi : f.components()) out.push_back(compose(fi, args));
  return SeriesTuple<C>(std::move(out));
}

/// Evaluates a series at a point; only meaningful when the series is an
/// exact polynomial.
template <CoefficientType C>
C evaluate(const Series<C>& f, std::span<const C> point) {
  if (point.size() != f.num_vars()) throw ShapeMismatch("evaluation point has wrong length");
  std::vector<std::vector<C>> powers(point.size());
  auto power = [&](std::size_t k, unsigned e) -> const C& {
    auto& pk = powers[k];
    if (pk.empty()) pk.push_back(f.ring().one());
    while (pk.size() <= e) pk.push_back(pk.back() * point[k]);
    return pk[e];
  };
  C total = f.ring().zero();
  for (const auto& [m, c] : f.terms()) {
    C term = c;
    for (std::size_t k = 0; k < point.size(); ++k)
      if (m[k] != 0) term = term * power(k, m[k]);
    total = total + term;
  }
  return total;
}

namespace detail {

/// Determinant by fraction-free (Bareiss) elimination with exact division.
template <CoefficientType C>
C determinant(std::vector<std::vector<C>> a, const ring_of_t<C>& ring) {
  const std::size_t n = a.size();
  if (n == 0) return ring.one();
  C prev = ring.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return ring.zero();
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = coefficient_traits<C>::div_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = ring.zero();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Inverse of a square matrix whose determinant is a unit of the ring.
template <CoefficientType C>
std::vector<std::vector<C>> inverse_matrix(const std::vector<std::vector<C>>& m, const ring_of_t<C>& ring) {
  const std::size_t n = m.size();
  const C det = determinant(m, ring);
  if (det.is_zero()) throw SingularLinearPart("is singular");
  if (!is_unit(det)) throw SingularLinearPart("is not invertible over the coefficient ring (det = " + to_string(det) + ")");
  const C inv_det = coefficient_traits<C>::div_exact(ring.one(), det);
  std::vector<std::vector<C>> inv(n, std::vector<C>(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<C>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<C> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      C cof = determinant(std::move(minor), ring);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[j][i] = cof * inv_det;
    }
  }
  return inv;
}

}  // namespace detail

/// Compositional inverse H of an n-tuple G in n variables, G(H(x)) = x.
///
/// Works order by order: with J the linear part of G, the degree-d part of H
/// is -J^{-1} times the degree-d part of G(H_{<d}). J must be invertible over
/// the coefficient ring.
template <CoefficientType C>
SeriesTuple<C> invert_tuple(const SeriesTuple<C>& g) {
  const std::size_t n = g.size();
  if (g.num_vars() != n) throw ShapeMismatch("inversion needs n components in n variables");
  for (const auto& gi : g.components())
    if (!gi.constant_term().is_zero()) throw NonzeroConstantTerm("series to invert");
  const auto& ring = g.ring();
  const unsigned D = g.trunc_degree();
  if (D == 0) throw PrecisionError("inversion needs truncation degree >= 1");

  std::vector<std::vector<C>> jac(n, std::vector<C>(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i][j] = g[i].coefficient(Monomial::variable(j));
  const auto jinv = detail::inverse_matrix(jac, ring);

  auto apply_jinv = [&](const std::vector<Series<C>>& v) {
    std::vector<Series<C>> out;
    for (std::size_t i = 0; i < n; ++i) {
      Series<C> acc(ring, n, D);
      for (std::size_t j = 0; j < n; ++j)
        if (!jinv[i][j].is_zero()) acc += v[j].scaled(jinv[i][j]);
      out.push_back(std::move(acc));
    }
    return out;
  };

  std::vector<Series<C>> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(Series<C>::variable(ring, n, D, i));
  std::vector<Series<C>> h = apply_jinv(vars);

  for (unsigned d = 2; d <= D; ++d) {
    std::vector<Series<C>> err;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      Series<C> e = homogeneous_part(compose(g[i], std::span<const Series<C>>(h), d), d);
      any = any || !e.is_zero();
      err.push_back(e.with_exact_precision(D));
    }
    if (!any) continue;
    auto corr = apply_jinv(err);
    for (std::size_t i = 0; i < n; ++i) h[i] -= corr[i];
  }
  return SeriesTuple<C>(std::move(h));
}

/// Names "x" / "x,y" / "x,y,z" for one-dimensional blocks and
/// "x1..xn, y1..yn, z1..zn" otherwise.
inline std::vector<std::string> block_variable_names(std::size_t dim, std::size_t blocks) {
  static const char* letters[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t i = 0; i < dim; ++i)
      names.push_back(dim == 1 ? std::string(letters[b % 4]) : std::string(letters[b % 4]) + std::to_string(i + 1));
  return names;
}

inline std::vector<std::string> default_variable_names(std::size_t num_vars) {
  if (num_vars <= 3) return block_variable_names(1, num_vars);
  return block_variable_names(num_vars, 1);
}

/// Human-readable form, lowest degree first: "x + y - x*y + O(6)".
template <CoefficientType C>
std::string to_string(const Series<C>& f, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    const std::string mono = monomial_to_string(m, names);
    std::string body;
    bool negative = false;
    if (coefficient_traits<C>::is_compound(c)) {
      body = "(" + to_string(c) + ")";
      if (!mono.empty()) body += "*" + mono;
    } else {
      std::string cs = to_string(c);
      if (!cs.empty() && cs[0] == '-') {
        negative = true;
        cs.erase(0, 1);
      }
      if (mono.empty()) {
        body = cs;
      } else if (cs == "1") {
        body = mono;
      } else {
        body = cs + "*" + mono;
      }
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  if (out.empty()) out = "0";
  return out;
}

template <CoefficientType C>
std::string to_string(const Series<C>& f) {
  return to_string(f, default_variable_names(f.num_vars()));
}

}  // namespace formal_rings

#endif  // FORMAL_RINGS_SERIES_HPP
