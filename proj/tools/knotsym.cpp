// Command-line front end: reduce, invariant, eq, crossings, cycles, apply,
// from-gauss, validate. Exit codes: 0 success (or "equal"), 1 domain
// failure (or "unequal"), 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "knotsym/cycles.hpp"
#include "knotsym/gauss.hpp"
#include "knotsym/moves.hpp"
#include "knotsym/reduce.hpp"
#include "knotsym/symbol.hpp"

namespace {

using json = nlohmann::json;
using namespace knotsym;

struct Options {
  bool as_json = false;
  bool with_trace = false;
  std::size_t closure_cap = kDefaultClosureCap;
  std::string file;
};

std::vector<std::string> file_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::SyntaxError, "cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Positional symbol arguments, or lines of --file when none were given.
std::vector<std::string> symbol_inputs(const Options& opt,
                                       const std::vector<std::string>& args,
                                       std::size_t want) {
  std::vector<std::string> inputs = args;
  if (inputs.empty() && !opt.file.empty()) {
    auto lines = file_lines(opt.file);
    inputs.assign(lines.begin(),
                  lines.begin() + std::min(lines.size(), want));
  }
  if (inputs.size() < want)
    throw CLI::ValidationError("expected " + std::to_string(want) +
                               " symbol(s), got " +
                               std::to_string(inputs.size()));
  return inputs;
}

void emit(const Options& opt, const json& structured,
          const std::string& plain) {
  if (opt.as_json)
    std::cout << structured.dump() << "\n";
  else
    std::cout << plain << (plain.empty() || plain.back() != '\n' ? "\n" : "");
}

int parse_theta(const std::string& s) {
  if (s == "+1" || s == "+" || s == "1") return +1;
  if (s == "-1" || s == "-") return -1;
  throw Error(Errc::SyntaxError, "theta must be +1 or -1, got: " + s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

int int_arg(const std::string& s) {
  std::size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size()) throw Error(Errc::SyntaxError, "bad integer: " + s);
  return v;
}

Symbol apply_named_move(const Symbol& a, const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::vector<std::string> args =
      colon == std::string::npos ? std::vector<std::string>{}
                                 : split(name.substr(colon + 1), ',');
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw Error(Errc::SyntaxError,
                  "move " + head + " takes " + std::to_string(k) +
                      " argument(s)");
  };
  if (head == "iso") {
    want(0);
    return apply_iso(a);
  }
  if (head == "beta") {
    want(1);
    return apply_beta(a, int_arg(args[0]));
  }
  if (head == "r1+") {
    want(3);
    return apply_omega1_plus(a, int_arg(args[0]), parse_theta(args[1]),
                             parse_orientation(args[2]));
  }
  if (head == "r1-") {
    want(1);
    auto gon = one_gon_at(a, int_arg(args[0]));
    if (!gon) throw Error(Errc::NotAOneGon, "no 1-gon at arc " + args[0]);
    return apply_omega1_minus(a, *gon);
  }
  if (head == "r2+") {
    want(4);
    return apply_omega2_plus(a, MainArc{int_arg(args[0]), +1},
                             MainArc{int_arg(args[1]), +1},
                             parse_theta(args[2]), parse_orientation(args[3]));
  }
  if (head == "r2-") {
    want(2);
    auto gon = two_gon_at(a, int_arg(args[0]), int_arg(args[1]));
    if (!gon)
      throw Error(Errc::NotATwoGon,
                  "no 2-gon on arcs " + args[0] + ", " + args[1]);
    return apply_omega2_minus(a, *gon);
  }
  if (head == "r3") {
    want(2);
    int alpha = int_arg(args[0]), gamma = int_arg(args[1]);
    if (!a.ring().contains(alpha) || a.partner(alpha) != gamma)
      throw Error(Errc::NotAThreeGon,
                  "(" + args[0] + "," + args[1] + ") is not a crossing");
    const Crossing& pivot = a.crossing_of(alpha);
    for (const GonWitness& gon : find_three_gons(a)) {
      if (std::find(gon.crossings.begin(), gon.crossings.end(), pivot) !=
          gon.crossings.end())
        return apply_omega3(a, gon);
    }
    throw Error(Errc::NotAThreeGon,
                "crossing (" + args[0] + "," + args[1] + ") sits in no 3-gon");
  }
  throw Error(Errc::SyntaxError, "unknown move: " + head);
}

json arcs_json(const std::vector<MainArc>& arcs) {
  json out = json::array();
  for (const MainArc& arc : arcs) out.push_back(to_string(arc));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Based-symbol calculator for oriented knot diagrams"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.as_json, "structured output");
  app.add_flag("--trace", opt.with_trace, "include the reduction trace");
  app.add_option("--closure-cap", opt.closure_cap,
                 "abort closures beyond this many symbols");
  app.add_option("--file", opt.file, "read symbols from a file, one per line");

  std::vector<std::string> args;

  auto* validate_cmd =
      app.add_subcommand("validate", "check a symbol and print its canonical form");
  validate_cmd->add_option("symbol", args, "symbol text");

  auto* reduce_cmd =
      app.add_subcommand("reduce", "remove kinks and slides until none is left");
  reduce_cmd->add_option("symbol", args, "symbol text");

  auto* invariant_cmd =
      app.add_subcommand("invariant", "print the full reduced set");
  invariant_cmd->add_option("symbol", args, "symbol text");

  auto* eq_cmd = app.add_subcommand("eq", "decide whether two symbols encode the same knot");
  eq_cmd->add_option("symbols", args, "two symbol texts");

  auto* crossings_cmd =
      app.add_subcommand("crossings", "print the crossing number");
  crossings_cmd->add_option("symbol", args, "symbol text");

  auto* cycles_cmd =
      app.add_subcommand("cycles", "print both cycles through an arc");
  std::string arc_text;
  cycles_cmd->add_option("symbol", args, "symbol text");
  cycles_cmd->add_option("--arc", arc_text, "main arc, e.g. 15+ or 10-")
      ->required();

  auto* apply_cmd = app.add_subcommand("apply", "apply one named move");
  std::string move_text;
  apply_cmd->add_option("symbol", args, "symbol text");
  apply_cmd
      ->add_option("--move", move_text,
                   "beta:a | iso | r1+:a,t,phi | r1-:i | r2+:a,b,t,phi | "
                   "r2-:a,b | r3:o,u")
      ->required();

  auto* gauss_cmd = app.add_subcommand(
      "from-gauss", "convert an oriented signed Gauss code to a symbol");
  gauss_cmd->add_option("code", args, "e.g. \"O1+ U2+ O3+ U1+ O2+ U3+\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (validate_cmd->parsed()) {
    Symbol s = parse_symbol(symbol_inputs(opt, args, 1)[0]);
    emit(opt, json{{"symbol", serialize_symbol(s)}, {"order", s.order()}},
         serialize_symbol(s));
    return 0;
  }

  if (reduce_cmd->parsed()) {
    Symbol s = parse_symbol(symbol_inputs(opt, args, 1)[0]);
    ReductionTrace trace;
    Symbol reduced = reduce_once(s, trace);
    json out{{"input", serialize_symbol(s)},
             {"reduced", serialize_symbol(reduced)},
             {"order", reduced.order()}};
    std::string plain;
    if (opt.with_trace) {
      json jtrace = json::array();
      for (const ReductionStep& step : trace.steps) {
        jtrace.push_back({{"move", step.move},
                          {"symbol", serialize_symbol(step.result)}});
        plain += step.move + " -> " + serialize_symbol(step.result) + "\n";
      }
      out["trace"] = jtrace;
    }
    plain += serialize_symbol(reduced);
    emit(opt, out, plain);
    return 0;
  }

  if (invariant_cmd->parsed()) {
    Symbol s = parse_symbol(symbol_inputs(opt, args, 1)[0]);
    ReducedSet r = reduced_set(s, opt.closure_cap);
    json members = json::array();
    std::string plain;
    for (const Symbol& m : r.members) {
      members.push_back(serialize_symbol(m));
      plain += serialize_symbol(m) + "\n";
    }
    emit(opt,
         json{{"order", r.order},
              {"count", r.members.size()},
              {"members", members}},
         plain);
    return 0;
  }

  if (eq_cmd->parsed()) {
    auto inputs = symbol_inputs(opt, args, 2);
    bool equal = knots_equal(parse_symbol(inputs[0]), parse_symbol(inputs[1]),
                             opt.closure_cap);
    emit(opt, json{{"equal", equal}}, equal ? "true" : "false");
    return equal ? 0 : 1;
  }

  if (crossings_cmd->parsed()) {
    Symbol s = parse_symbol(symbol_inputs(opt, args, 1)[0]);
    int n = crossing_number(s);
    emit(opt, json{{"crossings", n}}, std::to_string(n));
    return 0;
  }

  if (cycles_cmd->parsed()) {
    Symbol s = parse_symbol(symbol_inputs(opt, args, 1)[0]);
    MainArc arc = parse_arc(arc_text);
    Cycle ca = cycle(s, arc, Orientation::Alpha);
    Cycle cd = cycle(s, arc, Orientation::Delta);
    emit(opt,
         json{{"arc", to_string(arc)},
              {"alpha", arcs_json(ca.arcs)},
              {"delta", arcs_json(cd.arcs)}},
         "alpha " + to_string(ca) + "\ndelta " + to_string(cd));
    return 0;
  }

  if (apply_cmd->parsed()) {
    Symbol s = parse_symbol(symbol_inputs(opt, args, 1)[0]);
    Symbol result = apply_named_move(s, move_text);
    emit(opt,
         json{{"input", serialize_symbol(s)},
              {"move", move_text},
              {"result", serialize_symbol(result)}},
         serialize_symbol(result));
    return 0;
  }

  if (gauss_cmd->parsed()) {
    std::string code_text;
    if (!args.empty())
      code_text = args[0];
    else if (!opt.file.empty())
      code_text = file_lines(opt.file).at(0);
    else
      throw CLI::ValidationError("expected a Gauss code");
    Symbol s = from_gauss(parse_gauss(code_text));
    emit(opt, json{{"code", code_text}, {"symbol", serialize_symbol(s)}},
         serialize_symbol(s));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
