#ifndef FORMAL_RINGS_JSON_IO_HPP
#define FORMAL_RINGS_JSON_IO_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "formal_rings/errors.hpp"
#include "formal_rings/fglaw.hpp"
#include "formal_rings/fring.hpp"
#include "formal_rings/series.hpp"
#include "formal_rings/witt.hpp"

namespace formal_rings {

using json = nlohmann::ordered_json;
using AnyTuple = std::variant<SeriesTuple<Rational>, SeriesTuple<Poly>>;

namespace detail {

inline void require_object(const json& j, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + " must be a JSON object");
}

inline void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError("unknown field '" + key + "' in " + what);
  }
}

inline const json& field(const json& j, const char* name, const std::string& what) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(what + " is missing field '" + name + "'");
  return *it;
}

inline unsigned as_unsigned(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(what + " must be a non-negative integer");
  return static_cast<unsigned>(j.get<long long>());
}

inline std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

inline json poly_to_json(const Poly& p) {
  if (p.is_constant()) return p.constant_term().to_string();
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (std::size_t i = 0; i < p.ring().size(); ++i)
      if (m[i] != 0) mono[p.ring().parameters()[i]] = m[i];
    terms.push_back({{"monomial", mono}, {"coefficient", c.to_string()}});
  }
  return {{"poly", terms}};
}

inline Poly poly_from_json(const json& j, const PolyRing& ring) {
  if (j.is_string()) return Poly::parse(j.get<std::string>(), ring);
  require_object(j, "coefficient");
  reject_unknown(j, {"poly"}, "coefficient");
  const json& terms = field(j, "poly", "coefficient");
  if (!terms.is_array()) throw ParseError("'poly' must be an array");
  std::vector<Poly::Term> out;
  for (const auto& t : terms) {
    require_object(t, "poly term");
    reject_unknown(t, {"monomial", "coefficient"}, "poly term");
    const json& mono = field(t, "monomial", "poly term");
    require_object(mono, "monomial");
    Monomial m;
    for (const auto& [name, e] : mono.items()) {
      if (!ring.has(name)) throw ParseError("unknown parameter '" + name + "' in monomial");
      m.set(ring.index_of(name), as_unsigned(e, "parameter exponent"));
    }
    out.emplace_back(m, Rational::parse(as_string(field(t, "coefficient", "poly term"), "coefficient")));
  }
  return Poly(ring, std::move(out));
}

template <CoefficientType C>
json coefficient_to_json(const C& c) {
  if constexpr (std::is_same_v<C, Rational>) {
    return c.to_string();
  } else {
    return poly_to_json(c);
  }
}

template <CoefficientType C>
std::vector<std::string> parameter_names(const ring_of_t<C>& ring) {
  if constexpr (std::is_same_v<C, Rational>) {
    return {};
  } else {
    return ring.parameters();
  }
}

}  // namespace detail

template <CoefficientType C>
json to_json(const SeriesTuple<C>& t) {
  json comps = json::array();
  for (const auto& s : t.components()) {
    json terms = json::array();
    for (const auto& [m, c] : s.terms())
      terms.push_back({{"exponents", m.to_vector(s.num_vars())}, {"coefficient", detail::coefficient_to_json(c)}});
    comps.push_back({{"terms", terms}});
  }
  return {{"num_vars", t.num_vars()},
          {"trunc_degree", t.trunc_degree()},
          {"parameters", detail::parameter_names<C>(t.ring())},
          {"components", comps}};
}

template <CoefficientType C>
json to_json(const Series<C>& s) {
  return to_json(SeriesTuple<C>({s}));
}

/// Reads the SeriesTuple interchange form; rational when no parameters are
/// declared, otherwise over Q[parameters].
inline AnyTuple tuple_from_json(const json& j) {
  detail::require_object(j, "series tuple");
  detail::reject_unknown(j, {"num_vars", "trunc_degree", "parameters", "components"}, "series tuple");
  const std::size_t n = detail::as_unsigned(detail::field(j, "num_vars", "series tuple"), "num_vars");
  const unsigned D = detail::as_unsigned(detail::field(j, "trunc_degree", "series tuple"), "trunc_degree");
  std::vector<std::string> params;
  if (auto it = j.find("parameters"); it != j.end()) {
    if (!it->is_array()) throw ParseError("'parameters' must be an array");
    for (const auto& p : *it) params.push_back(detail::as_string(p, "parameter name"));
  }
  const json& comps = detail::field(j, "components", "series tuple");
  if (!comps.is_array()) throw ParseError("'components' must be an array");

  auto build = [&](auto tag, const auto& ring) {
    using C = typename decltype(tag)::type;
    std::vector<Series<C>> out;
    for (const auto& c : comps) {
      detail::require_object(c, "component");
      detail::reject_unknown(c, {"terms"}, "component");
      const json& terms = detail::field(c, "terms", "component");
      if (!terms.is_array()) throw ParseError("'terms' must be an array");
      std::vector<typename Series<C>::Term> ts;
      for (const auto& t : terms) {
        detail::require_object(t, "term");
        detail::reject_unknown(t, {"exponents", "coefficient"}, "term");
        const json& e = detail::field(t, "exponents", "term");
        if (!e.is_array() || e.size() != n) throw ParseError("exponent vector length must equal num_vars");
        Monomial m;
        for (std::size_t i = 0; i < n; ++i) m.set(i, detail::as_unsigned(e[i], "exponent"));
        if (m.degree() > D) throw ParseError("term of degree above trunc_degree");
        const json& cj = detail::field(t, "coefficient", "term");
        if constexpr (std::is_same_v<C, Rational>) {
          ts.emplace_back(m, Rational::parse(detail::as_string(cj, "coefficient")));
        } else {
          ts.emplace_back(m, detail::poly_from_json(cj, ring));
        }
      }
      out.push_back(Series<C>::from_terms(ring, n, D, std::move(ts)));
    }
    return SeriesTuple<C>(std::move(out));
  };
  if (params.empty()) return build(std::type_identity<Rational>{}, RationalRing{});
  return build(std::type_identity<Poly>{}, PolyRing(params));
}

template <CoefficientType C>
json to_json(const FormalGroup<C>& g) {
  return {{"dim", g.dim}, {"law", to_json(g.law)}, {"log", g.log ? to_json(*g.log) : json(nullptr)}};
}

template <CoefficientType C>
json to_json(const FormalRing<C>& r) {
  return {{"dim", r.dim},
          {"phi", to_json(r.phi())},
          {"psi", to_json(r.psi())},
          {"log", r.log() ? to_json(*r.log()) : json(nullptr)}};
}

using AnyGroup = std::variant<FormalGroup<Rational>, FormalGroup<Poly>>;
using AnyFormalRing = std::variant<FormalRing<Rational>, FormalRing<Poly>>;

namespace detail {

template <CoefficientType C>
SeriesTuple<C> same_kind(const AnyTuple& t, const std::string& what) {
  if (const auto* p = std::get_if<SeriesTuple<C>>(&t)) return *p;
  throw RingMismatch(what + " uses a different coefficient ring");
}

template <class Fn>
auto with_tuple(const AnyTuple& t, Fn fn) {
  return std::visit(fn, t);
}

}  // namespace detail

inline AnyGroup group_from_json(const json& j) {
  detail::require_object(j, "formal group");
  detail::reject_unknown(j, {"dim", "law", "log"}, "formal group");
  const std::size_t dim = detail::as_unsigned(detail::field(j, "dim", "formal group"), "dim");
  const AnyTuple law = tuple_from_json(detail::field(j, "law", "formal group"));
  std::optional<AnyTuple> log;
  if (auto it = j.find("log"); it != j.end() && !it->is_null()) log = tuple_from_json(*it);
  return std::visit(
      [&](const auto& phi) -> AnyGroup {
        using C = typename std::decay_t<decltype(phi)>::Ring;
        using Coef = std::conditional_t<std::is_same_v<C, RationalRing>, Rational, Poly>;
        std::optional<SeriesTuple<Coef>> g;
        if (log) g = detail::same_kind<Coef>(*log, "log");
        FormalGroup<Coef> out(phi, g);
        if (out.dim != dim) throw ShapeMismatch("dim does not match the law");
        return out;
      },
      law);
}

inline AnyFormalRing ring_from_json(const json& j) {
  detail::require_object(j, "formal ring");
  detail::reject_unknown(j, {"dim", "phi", "psi", "log"}, "formal ring");
  const std::size_t dim = detail::as_unsigned(detail::field(j, "dim", "formal ring"), "dim");
  const AnyTuple phi = tuple_from_json(detail::field(j, "phi", "formal ring"));
  const AnyTuple psi = tuple_from_json(detail::field(j, "psi", "formal ring"));
  std::optional<AnyTuple> log;
  if (auto it = j.find("log"); it != j.end() && !it->is_null()) log = tuple_from_json(*it);
  return std::visit(
      [&](const auto& law) -> AnyFormalRing {
        using C = typename std::decay_t<decltype(law)>::Ring;
        using Coef = std::conditional_t<std::is_same_v<C, RationalRing>, Rational, Poly>;
        std::optional<SeriesTuple<Coef>> g;
        if (log) g = detail::same_kind<Coef>(*log, "log");
        FormalRing<Coef> out(FormalGroup<Coef>(law, g), detail::same_kind<Coef>(psi, "psi"));
        if (out.dim != dim) throw ShapeMismatch("dim does not match the laws");
        return out;
      },
      phi);
}

inline json to_json(const GhostFamily& g) {
  json j = {{"n", g.n}, {"kind", to_string(g.kind)}};
  if (g.kind == GhostKind::p_typical) j["p"] = g.p;
  if (g.kind != GhostKind::p_typical && g.kind != GhostKind::universal) {
    j["ghosts"] = to_json(g.tuple());
    j["polynomial"] = g.polynomial;
  }
  return j;
}

/// {"n": 2, "kind": "p_typical", "p": 2}, {"n": 3, "kind": "universal"} or
/// {"kind": "custom", "ghosts": SeriesTuple | [SeriesTuple, ...]}.
inline GhostFamily ghosts_from_json(const json& j) {
  detail::require_object(j, "ghost family");
  detail::reject_unknown(j, {"n", "kind", "p", "ghosts", "polynomial"}, "ghost family");
  const std::string kind = detail::as_string(detail::field(j, "kind", "ghost family"), "kind");
  std::optional<std::size_t> n;
  if (auto it = j.find("n"); it != j.end()) n = detail::as_unsigned(*it, "n");
  if (kind == "p_typical" || kind == "p-typical") {
    if (!n) throw ParseError("p_typical ghost family needs 'n'");
    return ghosts_p_typical(detail::as_unsigned(detail::field(j, "p", "ghost family"), "p"), *n);
  }
  if (kind == "universal") {
    if (!n) throw ParseError("universal ghost family needs 'n'");
    return ghosts_universal(*n);
  }
  if (kind != "custom" && kind != "separated" && kind != "partially_separated")
    throw ParseError("unknown ghost kind '" + kind + "'");
  bool polynomial = true;
  if (auto it = j.find("polynomial"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError("'polynomial' must be a boolean");
    polynomial = it->get<bool>();
  }
  const json& gj = detail::field(j, "ghosts", "ghost family");
  std::vector<Series<Rational>> ghosts;
  auto take = [&](const json& t) {
    const AnyTuple tuple = tuple_from_json(t);
    const auto* q = std::get_if<SeriesTuple<Rational>>(&tuple);
    if (!q) throw RingMismatch("ghosts must have rational coefficients");
    for (const auto& s : q->components()) ghosts.push_back(s);
  };
  if (gj.is_array()) {
    for (const auto& t : gj) take(t);
  } else {
    take(gj);
  }
  if (n && *n != ghosts.size()) throw ShapeMismatch("'n' does not match the number of ghosts");
  return ghosts_custom(ghosts, polynomial);
}

inline json to_json(const WittLaws& laws) {
  return {{"n", laws.n}, {"exact", laws.exact}, {"phi", to_json(laws.add_laws)}, {"psi", to_json(laws.mul_laws)}};
}

inline json to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"identity", f.identity},
                        {"component", f.component},
                        {"exponents", f.exponents},
                        {"lhs", f.lhs},
                        {"rhs", f.rhs}});
  return {{"max_degree", r.max_degree}, {"checked", r.checked}, {"ok", r.ok()}, {"failures", failures}};
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace formal_rings

#endif  // FORMAL_RINGS_JSON_IO_HPP
