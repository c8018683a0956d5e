// Command-line front end. run_cli returns the process exit code:
// 0 success, 1 verification failure, 2 usage or input error.
#ifndef KNOTCAT_CLI_HPP
#define KNOTCAT_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "cylinder.hpp"

namespace knotcat {

namespace cli_detail {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string braid;
  int strands = 0;
  std::string op = "artin";
  int wada_n = 1;
  std::string method = "burau";
  std::string group = "s3";
  int q = 3;
  int dim = 1;
  std::vector<int> lambdas, mus;
  std::string moves = "conj,stab+,stab-";
  std::string invariant = "alexander";
  std::string suite = "structural";
  std::string corpus_file;
  bool regenerate = false;
  bool text = false;
};

// Strand count from -n, or one more than the largest generator index.
inline BraidWord braid_from(const Options& o) {
  try {
    if (o.strands > 0) return BraidWord::parse(o.braid, o.strands);
    BraidWord probe = BraidWord::parse(o.braid, 1 << 20);
    int n = 1;
    for (int l : probe.letters) n = std::max(n, std::abs(l) + 1);
    return BraidWord(n, probe.letters);
  } catch (const BraidError& e) {
    throw UsageError(std::string("--braid/-n: ") + e.what());
  }
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

inline std::string presentation_text(const Presentation& p) {
  std::ostringstream s;
  const Quiver& q = *p.quiver;
  s << p.name << "\n";
  for (auto& a : q.arrows()) {
    if (a.inverse_atom) continue;
    s << "  " << a.name << " : " << q.object(a.source).name << " -> " << q.object(a.target).name << "  deg "
      << a.degree << "\n";
  }
  for (auto& [a, d] : p.differential)
    if (!d.is_zero()) s << "  d(" << q.arrow(a).name << ") = " << d.str() << "\n";
  return s.str();
}

inline Json closure_json(const ClosurePresentation& cp) {
  Json j{{"op", cp.op}, {"kind", kind_name(cp.kind)}, {"generators", cp.generators}};
  if (cp.kind == ClosureKind::Group) {
    Json r = Json::array();
    for (auto& w : cp.relators)
      if (!w.empty()) r.push_back(word_string(w));
    j["relators"] = r;
  } else if (cp.kind == ClosureKind::ModuleMatrix) {
    Json m = Json::array();
    for (auto& row : cp.matrix) {
      Json jr = Json::array();
      for (auto& c : row) jr.push_back(c.str());
      m.push_back(jr);
    }
    j["matrix"] = m;
  } else {
    j["category"] = to_json(*cp.category);
    Json r = Json::array();
    for (auto& e : cp.relations) r.push_back(to_json(e));
    j["relations"] = r;
  }
  return j;
}

inline std::string closure_text(const ClosurePresentation& cp) {
  std::ostringstream s;
  s << kind_name(cp.kind) << " closure under " << cp.op << "\n  generators:";
  for (auto& g : cp.generators) s << " " << g;
  s << "\n";
  for (auto& w : cp.relators)
    if (!w.empty()) s << "  relator " << word_string(w) << "\n";
  if (!cp.matrix.empty()) s << "  matrix " << matrix_string(cp.matrix) << "\n";
  for (auto& e : cp.relations) s << "  relation " << e.str() << " = 0\n";
  return s.str();
}

inline Json report_json(const VerificationReport& r) {
  Json entries = Json::array();
  for (auto& e : r.entries)
    entries.push_back(Json{{"check", e.check}, {"generator", e.generator}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"pass", e.pass}});
  return Json{{"title", r.title}, {"applicable", r.applicable}, {"passed", r.passed()}, {"notes", r.notes},
              {"entries", entries}};
}

inline Json count_json(const CountReport& c) {
  return Json{{"invariant", c.invariant}, {"target", c.target}, {"count", c.count}};
}

inline Json alex_json(const AlexPoly& a) {
  Json j{{"method", a.method}, {"symmetric", a.symmetric}};
  j["polynomial"] = a.polynomial ? Json(a.polynomial->str()) : Json(nullptr);
  Json g = Json::array();
  for (auto& x : a.ideal_generators) g.push_back(x.str());
  j["ideal_generators"] = g;
  return j;
}

inline YBOperator operator_from(const Options& o) {
  try {
    OperatorParams params;
    params.N = o.wada_n;
    return catalog_operator(o.op, params);
  } catch (const OperatorError& e) {
    throw UsageError(std::string("--op: ") + e.what());
  }
}

struct Output {
  Json json;
  std::string text;
  int code = 0;
};

inline Output run_closure(const Options& o) {
  ClosurePresentation cp = categorical_closure(operator_from(o), braid_from(o));
  return {closure_json(cp), closure_text(cp)};
}

inline Output run_dga(const Options& o) {
  KnotDGA k = knot_dga_at_1(knot_dg_category(braid_from(o)));
  return {to_json(*k.dga), presentation_text(*k.dga)};
}

inline Output run_fnc(const Options& o) {
  LinkDGCategory c = fnc_link_dg_category(braid_from(o));
  Json j = to_json(*c.dg);
  j["components"] = c.component_objects;
  return {j, presentation_text(*c.dg)};
}

inline Output run_hc0(const Options& o) {
  AlgebraPresentation h = hc0_presentation(braid_from(o));
  std::string t = h.name + "\n";
  for (auto& r : h.relations) t += "  " + r.str() + " = 0\n";
  return {to_json(h), t};
}

inline Output run_alex(const Options& o) {
  if (o.method != "burau" && o.method != "fox") throw UsageError("--method: expected burau or fox, got '" + o.method + "'");
  AlexPoly a = alexander_polynomial(braid_from(o), o.method);
  std::string t = a.str() + "\n";
  for (auto& g : a.ideal_generators)
    if (!a.polynomial) t += "  minor " + g.str() + "\n";
  return {alex_json(a), t};
}

inline Output run_homcount(const Options& o) {
  FiniteGroup g;
  try {
    g = finite_group(o.group);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--group: ") + e.what());
  }
  CountReport c = finite_hom_count(knot_group_presentation(braid_from(o)), g);
  Json j = count_json(c);
  j["budget"] = kEnumerationBudget;
  return {j, std::to_string(c.count) + "\n"};
}

inline Output run_points(const Options& o) {
  if (o.q < 2 || o.q > 256) throw UsageError("-q: field size must be a prime power in [2, 256]");
  if (o.dim < 1 || o.dim > 2) throw UsageError("--dim: expected 1 or 2");
  AlgebraPresentation h = hc0_presentation(braid_from(o));
  PointReport r;
  try {
    r = point_count(h, o.q, o.lambdas, o.mus, o.dim);
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    std::string flag = what.rfind("lambda", 0) == 0 ? "--lambda: " : what.rfind("mu", 0) == 0 ? "--mu: " : "-q: ";
    throw UsageError(flag + what);
  }
  Json j = to_json(r);
  j["budget"] = kEnumerationBudget;
  std::string t = std::to_string(r.total) + "\n";
  for (auto& [k, c] : r.per_units)
    t += "  lambda=" + std::to_string(k.first) + " mu=" + std::to_string(k.second) + " : " + std::to_string(c) + "\n";
  return {j, t};
}

inline Output run_verify(const Options& o) {
  YBOperator op = operator_from(o);
  std::vector<VerificationReport> reps{verify_yang_baxter(op)};
  if (op.coproduct) reps.push_back(verify_reidemeister(op));
  Json arr = Json::array();
  std::string t;
  bool ok = true;
  for (auto& r : reps) {
    arr.push_back(report_json(r));
    ok = ok && r.passed();
    t += (r.passed() ? "PASS " : "FAIL ") + r.title + " (" + std::to_string(r.entries.size()) + " checks)\n";
    for (auto& e : r.failures()) t += "  " + e.check + " " + e.generator + ": " + e.lhs + " vs " + e.rhs + "\n";
  }
  return {Json{{"op", op.name}, {"passed", ok}, {"reports", arr}}, t, ok ? 0 : 1};
}

inline Output run_invariance(const Options& o) {
  NamedInvariant inv;
  try {
    inv = named_invariant(o.invariant);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--invariant: ") + e.what());
  }
  std::vector<Representative> reps;
  try {
    reps = markov_representatives(braid_from(o), split_list(o.moves));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--moves: ") + e.what());
  }
  InvarianceReport r = invariance_suite(inv, reps);
  std::string t = (r.all_equal ? "EQUAL " : "DIFFER ") + r.invariant + "\n";
  for (auto& [rep, v] : r.values) t += "  " + rep.label + " [" + rep.braid.str() + "] : " + v + "\n";
  return {to_json(r), t, r.all_equal ? 0 : 1};
}

inline Output run_corpus_command(const Options& o) {
  std::string path = o.corpus_file.empty() ? default_corpus_path() : o.corpus_file;
  if (o.regenerate) {
    std::vector<CorpusEntry> es = regenerate_corpus();
    Json j = to_json(es);
    std::ofstream f(path);
    if (!f) throw UsageError("--file: cannot write " + path);
    f << j.dump(2) << "\n";
    return {j, "wrote " + path + "\n"};
  }
  if (o.suite != "structural" && o.suite != "invariance" && o.suite != "oracles")
    throw UsageError("--suite: expected structural, invariance or oracles, got '" + o.suite + "'");
  SuiteReport r = run_corpus(o.suite, load_corpus(path));
  std::string t;
  for (auto& row : r.rows)
    t += std::string(row.pass ? "PASS " : "FAIL ") + row.check + " " + row.subject + " : " + row.detail + "\n";
  return {to_json(r), t, r.passed() ? 0 : 1};
}

}  // namespace cli_detail

// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  Options o;
  CLI::App app{"knotcat: braid closures, knot DG categories and their invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_flag = false;
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", json_flag, "JSON output (default)");
  fmt->add_flag("--text", o.text, "plain text output");
  fmt->require_option(0, 1);

  auto braid_opts = [&](CLI::App* s) {
    s->add_option("--braid", o.braid, "braid word, e.g. \"s1 s2^-1\"")->required();
    s->add_option("-n,--strands", o.strands, "strand count (default: largest index + 1)")->check(CLI::PositiveNumber);
  };
  auto* closure = app.add_subcommand("closure", "categorical closure of a braid under an operator");
  braid_opts(closure);
  closure->add_option("--op", o.op, "catalog operator")->required();
  closure->add_option("--N", o.wada_n, "parameter of wada_n");
  auto* dga = app.add_subcommand("dga", "knot DGA at the marked strand");
  braid_opts(dga);
  auto* fnc = app.add_subcommand("fnc", "fully noncommutative link DG category");
  braid_opts(fnc);
  auto* hc0 = app.add_subcommand("hc0", "degree-0 homology presentation");
  braid_opts(hc0);
  auto* alex = app.add_subcommand("alex", "Alexander polynomial");
  braid_opts(alex);
  alex->add_option("--method", o.method, "burau or fox");
  auto* hom = app.add_subcommand("homcount", "count homomorphisms of the link group to a finite group");
  braid_opts(hom);
  hom->add_option("--group", o.group, "s3, s4 or z3");
  auto* pts = app.add_subcommand("points", "count points of the HC0 variety over a finite field");
  braid_opts(pts);
  pts->add_option("-q", o.q, "field size (prime power)");
  pts->add_option("--lambda", o.lambdas, "lambda values (default: all units)")->delimiter(',');
  pts->add_option("--mu", o.mus, "mu values (default: all units)")->delimiter(',');
  pts->add_option("--dim", o.dim, "matrix size, 1 or 2");
  auto* ver = app.add_subcommand("verify", "braid-relation and Reidemeister checks for an operator");
  ver->add_option("--op", o.op, "catalog operator")->required();
  ver->add_option("--N", o.wada_n, "parameter of wada_n");
  auto* inv = app.add_subcommand("invariance", "compare an invariant across Markov moves");
  braid_opts(inv);
  inv->add_option("--moves", o.moves, "comma-separated moves: conj, stab+, stab-");
  inv->add_option("--invariant", o.invariant, "alexander, alexander_fox, homcount_<group>, hc0_points_q3, hc0_points_q5");
  auto* corpus = app.add_subcommand("corpus", "run a suite over the shipped corpus");
  corpus->add_option("--suite", o.suite, "structural, invariance or oracles");
  corpus->add_option("--file", o.corpus_file, "corpus file");
  corpus->add_flag("--regenerate", o.regenerate, "recompute expected values with the oracles and write the file");

  for (auto& a : args) {
    if (a.empty() || a[0] == '-') continue;
    if (!app.get_subcommand_no_throw(a)) {
      err << "usage error: unknown subcommand '" << a << "'\n";
      return 2;
    }
    break;
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    Output r;
    if (name == "closure") r = run_closure(o);
    else if (name == "dga") r = run_dga(o);
    else if (name == "fnc") r = run_fnc(o);
    else if (name == "hc0") r = run_hc0(o);
    else if (name == "alex") r = run_alex(o);
    else if (name == "homcount") r = run_homcount(o);
    else if (name == "points") r = run_points(o);
    else if (name == "verify") r = run_verify(o);
    else if (name == "invariance") r = run_invariance(o);
    else r = run_corpus_command(o);
    if (o.text) out << r.text;
    else out << r.json.dump(2) << "\n";
    return r.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ClosureError& e) {
    err << "usage error: --braid: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace knotcat

#endif
