#ifndef FORMAL_RINGS_POLY_HPP
#define FORMAL_RINGS_POLY_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "formal_rings/errors.hpp"
#include "formal_rings/monomial.hpp"
#include "formal_rings/rational.hpp"

namespace formal_rings {

class Poly;

/// The ring Q[p_1, ..., p_k] over a fixed, ordered list of parameter names.
/// Two rings are equal iff their parameter lists are equal.
class PolyRing {
 public:
  PolyRing() : params_(std::make_shared<const std::vector<std::string>>()) {}
  explicit PolyRing(std::vector<std::string> params) {
    if (params.size() > kMaxVars) throw InvalidArgument("at most 16 parameters are supported");
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (params[i].empty()) throw InvalidArgument("empty parameter name");
      for (std::size_t j = 0; j < i; ++j)
        if (params[i] == params[j]) throw InvalidArgument("duplicate parameter '" + params[i] + "'");
    }
    params_ = std::make_shared<const std::vector<std::string>>(std::move(params));
  }

  const std::vector<std::string>& parameters() const { return *params_; }
  std::size_t size() const { return params_->size(); }

  std::size_t index_of(std::string_view name) const {
    for (std::size_t i = 0; i < params_->size(); ++i)
      if ((*params_)[i] == name) return i;
    throw InvalidArgument("unknown parameter '" + std::string(name) + "'");
  }
  bool has(std::string_view name) const {
    return std::find(params_->begin(), params_->end(), name) != params_->end();
  }

  Poly zero() const;
  Poly one() const;
  Poly from_rational(const Rational& c) const;
  Poly parameter(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.params_ == b.params_ || *a.params_ == *b.params_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> params_;
};

/// Sparse polynomial with rational coefficients in the parameters of its
/// ring. Terms are kept in ascending graded-lex order with no zero entries.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  explicit Poly(PolyRing ring) : ring_(std::move(ring)) {}
  Poly(PolyRing ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    canonicalize();
  }

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }
  Rational constant_term() const {
    if (!terms_.empty() && terms_[0].first.degree() == 0) return terms_[0].second;
    return Rational(0);
  }
  /// Units of Q[params] are the nonzero constants.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].first.degree() == 0; }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.back().first.degree(); }

  Poly operator-() const {
    Poly out(ring_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly out(a.ring_);
    if (a.is_zero() || b.is_zero()) return out;
    if (a.is_unit()) return b.scaled(a.terms_[0].second);
    if (b.is_unit()) return a.scaled(b.terms_[0].second);
    std::vector<Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma * mb, ca * cb);
    out.terms_ = std::move(prods);
    out.canonicalize();
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rational& c) const {
    Poly out(ring_);
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second *= c;
    return out;
  }

  Poly pow(unsigned e) const {
    Poly out = ring_.one();
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!(a.ring_ == b.ring_)) return false;
    return a.terms_ == b.terms_;
  }

  /// Text form: "-1/2*a^2*b + 3*b - 1"; highest degree first.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      const std::string mono = monomial_to_string(m, ring_.parameters());
      Rational mag = abs(c);
      std::string body;
      if (mono.empty()) {
        body = mag.to_string();
      } else if (mag.is_one()) {
        body = mono;
      } else {
        body = mag.to_string() + "*" + mono;
      }
      if (out.empty()) {
        out = (c.sign() < 0 ? "-" : "") + body;
      } else {
        out += (c.sign() < 0 ? " - " : " + ") + body;
      }
    }
    return out;
  }

  /// Parses the text form produced by to_string. Names must belong to `ring`.
  static Poly parse(std::string_view text, const PolyRing& ring);

 private:
  static void check_same(const Poly& a, const Poly& b) {
    if (!(a.ring_ == b.ring_)) throw RingMismatch("polynomials over different parameter lists");
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    check_same(a, b);
    Poly out(a.ring_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && grlex_less(a.terms_[i].first, b.terms_[j].first))) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_less(b.terms_[j].first, a.terms_[i].first)) {
        out.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        Rational c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) out.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grlex_less(x.first, y.first); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().first == t.first) {
        merged.back().second += t.second;
      } else {
        if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
    for (const auto& t : merged)
      if (t.first.support_size() > ring_.size())
        throw ShapeMismatch("monomial uses more parameters than the ring has");
    terms_ = std::move(merged);
  }

  PolyRing ring_;
  std::vector<Term> terms_;
};

inline Poly PolyRing::zero() const { return Poly(*this); }
inline Poly PolyRing::one() const { return from_rational(Rational(1)); }
inline Poly PolyRing::from_rational(const Rational& c) const {
  if (c.is_zero()) return Poly(*this);
  return Poly(*this, {{Monomial(), c}});
}
inline Poly PolyRing::parameter(std::string_view name) const {
  return Poly(*this, {{Monomial::variable(index_of(name)), Rational(1)}});
}

/// Exact division in Q[params]; throws DivisionNotExact when b does not divide a.
inline Poly div_exact(const Poly& a, const Poly& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("polynomials over different parameter lists");
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_unit()) return a.scaled(Rational(1) / b.terms()[0].second);
  const auto& [lead_m, lead_c] = b.terms().back();
  Poly quotient = a.ring().zero();
  Poly rest = a;
  while (!rest.is_zero()) {
    const auto& [rm, rc] = rest.terms().back();
    if (!rm.divisible_by(lead_m))
      throw DivisionNotExact("(" + a.to_string() + ") / (" + b.to_string() + ")");
    Poly t(a.ring(), {{rm / lead_m, rc / lead_c}});
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

inline Poly Poly::parse(std::string_view text, const PolyRing& ring) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg + " in polynomial '" + std::string(text) + "'");
  };
  std::vector<Term> terms;
  skip_ws();
  if (i == text.size()) throw fail("empty input");
  bool first = true;
  while (true) {
    skip_ws();
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Rational coef(sign);
    Monomial mono;
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      if (i >= text.size()) throw fail("unexpected end");
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && text[i] == '/') {
          ++i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        }
        coef *= Rational::parse(text.substr(start, i - start));
      } else if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
        std::size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        const std::string name(text.substr(start, i - start));
        if (!ring.has(name)) throw fail("unknown parameter '" + name + "'");
        unsigned e = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip_ws();
          std::size_t es = i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
          if (es == i) throw fail("expected exponent");
          e = static_cast<unsigned>(std::stoul(std::string(text.substr(es, i - es))));
        }
        const std::size_t idx = ring.index_of(name);
        mono.set(idx, mono[idx] + e);
      } else {
        throw fail(std::string("unexpected character '") + text[i] + "'");
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
      } else {
        need_factor = false;
      }
    }
    terms.emplace_back(mono, coef);
    skip_ws();
    if (i == text.size()) break;
  }
  return Poly(ring, std::move(terms));
}

/// Evaluates p at a rational point. Only parameters that occur in p need a value.
inline Rational eval_params(const Poly& p, const std::map<std::string, Rational>& assignment) {
  const auto& names = p.ring().parameters();
  std::vector<const Rational*> values(names.size(), nullptr);
  Rational total(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (m[k] == 0) continue;
      if (!values[k]) {
        auto it = assignment.find(names[k]);
        if (it == assignment.end()) throw UnassignedParameter(names[k]);
        values[k] = &it->second;
      }
      term *= pow(*values[k], m[k]);
    }
    total += term;
  }
  return total;
}

}  // namespace formal_rings

#endif  // FORMAL_RINGS_POLY_HPP
