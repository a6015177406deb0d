#ifndef FORMAL_RINGS_CLI_HPP
#define FORMAL_RINGS_CLI_HPP

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "formal_rings/catalog.hpp"
#include "formal_rings/errors.hpp"
#include "formal_rings/fglaw.hpp"
#include "formal_rings/fring.hpp"
#include "formal_rings/json_io.hpp"
#include "formal_rings/witt.hpp"

namespace formal_rings::cli {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

namespace detail {

struct Options {
  std::string ring;
  std::vector<std::string> params;
  unsigned degree = 8;
  std::string law = "both";
  std::string log;
  bool json = false;
  std::string out;
  std::string ghosts;
  unsigned p = 0;
  std::size_t n = 0;
  std::string to;
  std::string scale = "1";
  std::vector<std::string> operands;
};

/// What a command produced: text for stdout and an exit code.
struct Outcome {
  std::string text;
  int code = kExitOk;
};

inline ParameterAssignment parse_params(const std::vector<std::string>& items) {
  ParameterAssignment out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidArgument("--param expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    if (out.count(name)) throw InvalidArgument("parameter '" + name + "' given twice");
    out.emplace(name, Rational::parse(item.substr(eq + 1)));
  }
  return out;
}

inline std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

using Loaded = std::variant<AnyTuple, AnyFormalRing, AnyGroup>;

/// Parses a JSON document holding a logarithm (SeriesTuple), a formal ring
/// or a formal group.
inline Loaded load_json(const std::string& text) {
  const json j = parse_json_text(text);
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.contains("components")) return tuple_from_json(j);
  if (j.contains("psi")) return ring_from_json(j);
  if (j.contains("law")) return group_from_json(j);
  throw ParseError("JSON is neither a series tuple, a formal ring nor a formal group");
}

inline AnyFormalRing ring_from_log(const AnyTuple& log) {
  return std::visit([](const auto& g) -> AnyFormalRing { return product_from_log(g); }, log);
}

inline AnyFormalRing resolve_ring(const Options& o, std::istream& in) {
  if (!o.ring.empty() && !o.log.empty()) throw InvalidArgument("give either --ring or --log, not both");
  if (!o.ring.empty()) return make_ring(o.ring, parse_params(o.params), o.degree);
  if (o.log.empty()) throw InvalidArgument("one of --ring or --log is required");
  const Loaded loaded = load_json(read_source(o.log, in));
  if (const auto* t = std::get_if<AnyTuple>(&loaded)) return ring_from_log(*t);
  if (const auto* r = std::get_if<AnyFormalRing>(&loaded)) return *r;
  throw InvalidArgument("a formal group has no multiplication; pass a logarithm or a formal ring");
}

template <CoefficientType C>
std::string format_tuple(const std::string& name, const SeriesTuple<C>& t, const std::vector<std::string>& vars,
                         const std::string& args) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << name;
    if (t.size() > 1) os << "_" << i + 1;
    os << "(" << args << ") = " << to_string(t[i], vars) << " + O(" << t.trunc_degree() + 1 << ")\n";
  }
  return os.str();
}

inline std::string arg_list(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ",") + n;
  return s;
}

inline std::string describe(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& name : r.failing_identities()) {
    std::size_t count = 0;
    for (const auto& f : r.failures) count += f.identity == name;
    const IdentityFailure& f = *r.first_failure(name);
    os << "FAILED " << name << ": component " << f.component + 1 << ", exponents [";
    for (std::size_t i = 0; i < f.exponents.size(); ++i) os << (i ? "," : "") << f.exponents[i];
    os << "]: lhs " << f.lhs << " != rhs " << f.rhs << " (" << count << " coefficient" << (count == 1 ? "" : "s")
       << " differ)\n";
  }
  return os.str();
}

inline Outcome cmd_list(const Options& o) {
  std::ostringstream os;
  if (o.json) {
    json arr = json::array();
    for (const auto& e : catalog())
      arr.push_back({{"name", e.name},
                     {"dim", e.dim},
                     {"parameters", e.parameters},
                     {"fixtures", fixtures(e.name).size()},
                     {"description", e.description}});
    os << arr.dump(2) << "\n";
    return {os.str()};
  }
  os << "name             dim  parameters  fixtures  description\n";
  for (const auto& e : catalog()) {
    std::string params = e.name == "lazard" ? "a1..a(D-1)" : arg_list(e.parameters);
    if (params.empty()) params = "-";
    os << e.name << std::string(17 - std::min<std::size_t>(16, e.name.size()), ' ') << e.dim << "    " << params
       << std::string(12 - std::min<std::size_t>(11, params.size()), ' ') << fixtures(e.name).size()
       << std::string(fixtures(e.name).size() < 10 ? 9 : 8, ' ') << e.description << "\n";
  }
  return {os.str()};
}

inline void check_law_flag(const std::string& law) {
  if (law != "phi" && law != "psi" && law != "both") throw InvalidArgument("--law must be phi, psi or both");
}

inline Outcome cmd_expand(const Options& o, std::istream& in) {
  check_law_flag(o.law);
  const AnyFormalRing ring = resolve_ring(o, in);
  return std::visit(
      [&](const auto& r) -> Outcome {
        if (o.json) {
          if (o.law == "phi") return {to_json(r.phi()).dump(2) + "\n"};
          if (o.law == "psi") return {to_json(r.psi()).dump(2) + "\n"};
          return {to_json(r).dump(2) + "\n"};
        }
        const auto vars = block_variable_names(r.dim, 2);
        const std::string args = r.dim == 1 ? "x,y" : "x,y";
        std::string text;
        if (o.law != "psi") text += format_tuple("phi", r.phi(), vars, args);
        if (o.law != "phi") text += format_tuple("psi", r.psi(), vars, args);
        return {text};
      },
      ring);
}

inline Outcome cmd_verify(const Options& o, std::istream& in) {
  if (!o.ring.empty() && !o.log.empty()) throw InvalidArgument("give either --ring or --log, not both");
  std::optional<Loaded> loaded;
  if (!o.log.empty()) loaded = load_json(read_source(o.log, in));
  if (loaded && std::holds_alternative<AnyGroup>(*loaded)) {
    return std::visit(
        [&](const auto& g) -> Outcome {
          const unsigned D = std::min(o.degree, g.trunc_degree());
          const VerificationReport rep = verify_group_axioms(g, D);
          if (o.json) return {to_json(rep).dump(2) + "\n", rep.ok() ? kExitOk : kExitVerificationFailed};
          if (rep.ok()) return {"4 group identities OK (degree " + std::to_string(D) + ")\n"};
          return {describe(rep), kExitVerificationFailed};
        },
        std::get<AnyGroup>(*loaded));
  }
  AnyFormalRing ring = [&]() -> AnyFormalRing {
    if (!loaded) return resolve_ring(o, in);
    if (const auto* t = std::get_if<AnyTuple>(&*loaded)) return ring_from_log(*t);
    return std::get<AnyFormalRing>(*loaded);
  }();
  return std::visit(
      [&](const auto& r) -> Outcome {
        const unsigned D = std::min(o.degree, r.trunc_degree());
        VerificationReport rep = verify_group_axioms(r.add_law, D);
        rep.append(verify_ring_axioms(r, D));
        if (o.json) return {to_json(rep).dump(2) + "\n", rep.ok() ? kExitOk : kExitVerificationFailed};
        if (rep.ok()) return {"4 group identities + 5 ring identities OK (degree " + std::to_string(D) + ")\n"};
        return {describe(rep), kExitVerificationFailed};
      },
      ring);
}

inline Outcome cmd_invert(const Options& o, std::istream& in) {
  AnyTuple log = [&]() -> AnyTuple {
    if (!o.ring.empty() && !o.log.empty()) throw InvalidArgument("give either --ring or --log, not both");
    if (!o.ring.empty()) return make_log(o.ring, parse_params(o.params), o.degree);
    if (o.log.empty()) throw InvalidArgument("one of --ring or --log is required");
    const Loaded loaded = load_json(read_source(o.log, in));
    if (const auto* t = std::get_if<AnyTuple>(&loaded)) return *t;
    throw InvalidArgument("invert expects a series tuple");
  }();
  return std::visit(
      [&](const auto& g) -> Outcome {
        const auto inv = invert_tuple(g);
        if (o.json) return {to_json(inv).dump(2) + "\n"};
        const auto vars = block_variable_names(g.num_vars(), 1);
        const auto t_names = g.num_vars() == 1 ? std::vector<std::string>{"t"} : [&] {
          std::vector<std::string> v;
          for (std::size_t i = 0; i < g.num_vars(); ++i) v.push_back("t" + std::to_string(i + 1));
          return v;
        }();
        return {format_tuple("inv", inv, t_names, arg_list(t_names))};
      },
      log);
}

inline GhostFamily resolve_ghosts(const Options& o, std::istream& in) {
  if (o.ghosts.empty()) throw InvalidArgument("--ghosts is required");
  if (o.ghosts == "p-typical" || o.ghosts == "p_typical") {
    if (o.p == 0) throw InvalidArgument("--p is required for p-typical ghosts");
    if (o.n == 0) throw InvalidArgument("--n is required");
    return ghosts_p_typical(o.p, o.n);
  }
  if (o.ghosts == "universal") {
    if (o.n == 0) throw InvalidArgument("--n is required");
    return ghosts_universal(o.n);
  }
  return ghosts_from_json(parse_json_text(read_source(o.ghosts, in)));
}

inline Outcome cmd_witt_laws(const Options& o, std::istream& in) {
  const GhostFamily g = resolve_ghosts(o, in);
  const WittLaws laws = witt_laws(g, o.degree);
  if (o.json) return {to_json(laws).dump(2) + "\n"};
  const auto vars = block_variable_names(g.n, 2);
  std::string text = laws.exact ? "exact polynomial laws\n" : "laws truncated at degree " + std::to_string(o.degree) + "\n";
  for (std::size_t i = 0; i < g.n; ++i)
    text += "Phi_" + std::to_string(i + 1) + " = " + to_string(laws.add_laws[i], vars) + "\n";
  for (std::size_t i = 0; i < g.n; ++i)
    text += "Psi_" + std::to_string(i + 1) + " = " + to_string(laws.mul_laws[i], vars) + "\n";
  return {text};
}

inline Outcome cmd_witt(const Options& o, std::istream& in) {
  const GhostFamily g = resolve_ghosts(o, in);
  if (o.operands.empty()) throw InvalidArgument("witt needs an operation: add, mul, neg or ghost");
  const std::string op = o.operands[0];
  const std::size_t arity = (op == "neg" || op == "ghost") ? 1 : (op == "add" || op == "mul") ? 2 : 0;
  if (arity == 0) throw InvalidArgument("unknown witt operation '" + op + "'");
  if (o.operands.size() != arity + 1)
    throw InvalidArgument("witt " + op + " takes " + std::to_string(arity) + " vector(s)");
  const WittVector a = parse_witt_vector(o.operands[1]);
  WittVector result;
  if (op == "ghost") {
    result = ghost_map(g, a);
  } else {
    const WittLaws laws = witt_laws(g, o.degree);
    if (op == "neg") {
      result = gw_neg(laws, a);
    } else {
      const WittVector b = parse_witt_vector(o.operands[2]);
      result = op == "add" ? gw_add(laws, a, b) : gw_mul(laws, a, b);
    }
  }
  if (o.json) {
    json arr = json::array();
    for (const auto& c : result) arr.push_back(coef_to_string(c));
    return {arr.dump() + "\n"};
  }
  return {format_witt_vector(result) + "\n"};
}

inline Outcome cmd_iso(const Options& o) {
  if (o.ring.empty() || o.to.empty()) throw InvalidArgument("iso needs --ring SOURCE and --to TARGET");
  const ParameterAssignment params = parse_params(o.params);
  auto params_for = [&](const std::string& name) {
    ParameterAssignment out;
    const auto names = catalog_parameters(name, o.degree);
    for (const auto& [k, v] : params)
      if (std::find(names.begin(), names.end(), k) != names.end()) out.emplace(k, v);
    return out;
  };
  for (const auto& [k, v] : params) {
    const auto a = catalog_parameters(o.ring, o.degree), b = catalog_parameters(o.to, o.degree);
    if (std::find(a.begin(), a.end(), k) == a.end() && std::find(b.begin(), b.end(), k) == b.end())
      throw InvalidArgument("neither ring has parameter '" + k + "'");
  }
  const AnyLog l1 = make_log(o.ring, params_for(o.ring), o.degree);
  const AnyLog l2 = make_log(o.to, params_for(o.to), o.degree);
  const auto* r1 = std::get_if<SeriesTuple<Rational>>(&l1);
  const auto* r2 = std::get_if<SeriesTuple<Rational>>(&l2);
  if (!r1 || !r2) throw InvalidArgument("iso needs rational rings; assign the parameters with --param");
  if (r1->size() != r2->size()) throw ShapeMismatch("rings differ in dimension");
  const Rational a = Rational::parse(o.scale);
  const RingHomomorphism<Rational> hom = sigma(*r1, *r2, a);
  const VerificationReport rep = verify_homomorphism(hom, o.degree);
  const int code = rep.ok() ? kExitOk : kExitVerificationFailed;
  if (o.json) return {json{{"map", to_json(hom.map)}, {"report", to_json(rep)}}.dump(2) + "\n", code};
  const auto vars = block_variable_names(hom.map.size(), 1);
  std::string text = format_tuple("sigma", hom.map, vars, arg_list(vars));
  text += rep.ok() ? "homomorphism identities OK (degree " + std::to_string(o.degree) + ")\n" : describe(rep);
  return {text, code};
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when a verification
/// fails and 2 on input errors.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Formal group laws and formal rings over Q and Q[params]", "formal-rings"};
  app.require_subcommand(1);
  detail::Options o;

  auto add_ring_flags = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "catalog ring name (see 'list')");
    sub->add_option("--param", o.params, "parameter assignment name=value (repeatable)");
    sub->add_option("--log", o.log, "JSON file with a logarithm, formal ring or formal group ('-' for stdin)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--degree", o.degree, "truncation degree")->check(CLI::Range(1u, 255u));
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--out", o.out, "write the result to FILE");
  };
  auto add_witt_flags = [&](CLI::App* sub) {
    sub->add_option("--ghosts", o.ghosts, "p-typical, universal or a JSON file")->required();
    sub->add_option("--p", o.p, "prime for p-typical ghosts");
    sub->add_option("--n", o.n, "number of components");
  };

  CLI::App* list = app.add_subcommand("list", "list the catalog rings");
  list->add_flag("--json", o.json, "machine-readable output");
  list->add_option("--out", o.out, "write the result to FILE");

  CLI::App* expand = app.add_subcommand("expand", "expand Phi and Psi of a ring");
  add_ring_flags(expand);
  add_common(expand);
  expand->add_option("--law", o.law, "phi, psi or both");

  CLI::App* verify = app.add_subcommand("verify", "check the group and ring identities");
  add_ring_flags(verify);
  add_common(verify);

  CLI::App* invert = app.add_subcommand("invert", "compositional inverse of a logarithm");
  add_ring_flags(invert);
  add_common(invert);

  CLI::App* witt = app.add_subcommand("witt", "Witt vector arithmetic: add A B | mul A B | neg A | ghost A");
  add_witt_flags(witt);
  add_common(witt);
  witt->add_option("operands", o.operands, "operation and comma-separated vectors");

  CLI::App* witt_laws_cmd = app.add_subcommand("witt-laws", "solve the Witt equations for Phi_i and Psi_i");
  add_witt_flags(witt_laws_cmd);
  add_common(witt_laws_cmd);

  CLI::App* iso = app.add_subcommand("iso", "sigma(x) = G2^{-1}(a G1(x)) between two catalog rings");
  iso->add_option("--ring", o.ring, "source ring")->required();
  iso->add_option("--to", o.to, "target ring")->required();
  iso->add_option("--param", o.params, "parameter assignment name=value (repeatable)");
  iso->add_option("--scale", o.scale, "the scalar a (default 1)");
  add_common(iso);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    detail::Outcome result;
    if (list->parsed()) result = detail::cmd_list(o);
    else if (expand->parsed()) result = detail::cmd_expand(o, in);
    else if (verify->parsed()) result = detail::cmd_verify(o, in);
    else if (invert->parsed()) result = detail::cmd_invert(o, in);
    else if (witt->parsed()) result = detail::cmd_witt(o, in);
    else if (witt_laws_cmd->parsed()) result = detail::cmd_witt_laws(o, in);
    else result = detail::cmd_iso(o);
    if (!o.out.empty()) {
      std::ofstream f(o.out);
      if (!f) throw InvalidArgument("cannot write '" + o.out + "'");
      f << result.text;
    } else {
      out << result.text;
    }
    return result.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, std::cin, out, err);
}

}  // namespace formal_rings::cli

#endif  // FORMAL_RINGS_CLI_HPP
