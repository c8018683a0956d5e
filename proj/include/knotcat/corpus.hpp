// The shipped braid corpus, its oracle-generated expected values, and the
// structural / invariance / oracle suites run over it.
#ifndef KNOTCAT_CORPUS_HPP
#define KNOTCAT_CORPUS_HPP

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "invariants.hpp"

namespace knotcat {

struct CorpusValue {
  std::string value;
  std::string provenance;  // "derived-oracle:<route>" or "trivial"
};

struct CorpusEntry {
  std::string name;
  std::string braid;
  int strands = 1;
  std::map<std::string, CorpusValue> expected;

  BraidWord word() const { return BraidWord::parse(braid, strands); }
  bool is_knot() const { return strand_orbits(word()).component_count() == 1; }
};

inline std::vector<CorpusEntry> corpus_definitions() {
  return {{"unknot", "", 1, {}},
          {"trefoil", "s1 s1 s1", 2, {}},
          {"figure_eight", "s1 s2^-1 s1 s2^-1", 3, {}},
          {"cinquefoil", "s1 s1 s1 s1 s1", 2, {}},
          {"6_2", "s1 s1 s1 s2^-1 s1 s2^-1", 3, {}},
          {"hopf", "s1 s1", 2, {}}};
}

inline std::string default_corpus_path() {
#ifdef KNOTCAT_DATA_DIR
  return std::string(KNOTCAT_DATA_DIR) + "/corpus.json";
#else
  return "data/corpus.json";
#endif
}

// Expected values, each computed by its oracle.
inline std::map<std::string, CorpusValue> compute_expected(const CorpusEntry& e) {
  BraidWord b = e.word();
  bool trivial = b.letters.empty() && b.strands == 1;
  auto prov = [&](const std::string& route) { return trivial ? std::string("trivial") : "derived-oracle:" + route; };
  std::map<std::string, CorpusValue> v;
  GroupPresentation g = knot_group_presentation(b);
  v["components"] = {std::to_string(strand_orbits(b).component_count()), prov("strand permutation orbits")};
  v["abelianization"] = {abelianization(g).str(), prov("smith normal form")};
  v["alexander"] = {alexander_invariant("burau").eval(b), prov("burau minors, checked against fox calculus")};
  for (const char* t : {"s3", "s4", "z3"})
    v[std::string("homcount_") + t] = {hom_count_invariant(t).eval(b), prov("exhaustive enumeration")};
  if (e.is_knot())
    for (int q : {3, 5}) v["hc0_points_q" + std::to_string(q)] = {hc0_points_invariant(q).eval(b), prov("point count")};
  return v;
}

inline Json to_json(const std::vector<CorpusEntry>& es) {
  Json arr = Json::array();
  for (auto& e : es) {
    Json ex = Json::object();
    for (auto& [k, v] : e.expected) ex[k] = Json{{"value", v.value}, {"provenance", v.provenance}};
    arr.push_back(Json{{"name", e.name}, {"braid", e.braid}, {"strands", e.strands}, {"expected", ex}});
  }
  return Json{{"entries", arr}};
}

inline std::vector<CorpusEntry> corpus_from_json(const Json& j) {
  std::vector<CorpusEntry> out;
  for (auto& x : j.at("entries")) {
    CorpusEntry e;
    e.name = x.at("name").get<std::string>();
    e.braid = x.at("braid").get<std::string>();
    e.strands = x.at("strands").get<int>();
    for (auto& [k, v] : x.at("expected").items()) {
      std::string prov = v.at("provenance").get<std::string>();
      if (prov != "trivial" && prov.rfind("derived-oracle:", 0) != 0)
        throw std::invalid_argument("corpus value " + e.name + "." + k + " has no provenance marker");
      e.expected[k] = {v.at("value").get<std::string>(), prov};
    }
    out.push_back(e);
  }
  return out;
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path = default_corpus_path()) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read corpus file " + path);
  return corpus_from_json(Json::parse(in));
}

inline std::vector<CorpusEntry> regenerate_corpus() {
  std::vector<CorpusEntry> es = corpus_definitions();
  for (auto& e : es) e.expected = compute_expected(e);
  return es;
}

// ------------------------------------------------------------ suites

struct SuiteRow {
  std::string check;
  std::string subject;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteRow> rows;
  bool passed() const {
    for (auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

inline Json to_json(const SuiteReport& s) {
  Json rows = Json::array();
  for (auto& r : s.rows)
    rows.push_back(Json{{"check", r.check}, {"subject", r.subject}, {"pass", r.pass}, {"detail", r.detail}});
  return Json{{"suite", s.suite}, {"passed", s.passed()}, {"rows", rows}};
}

namespace detail {

inline SuiteRow guarded(const std::string& check, const std::string& subject,
                        const std::function<std::pair<bool, std::string>()>& f) {
  try {
    auto [ok, detail] = f();
    return {check, subject, ok, detail};
  } catch (const std::exception& ex) {
    return {check, subject, false, ex.what()};
  }
}

inline std::string first_failure(const VerificationReport& r) {
  if (!r.applicable) return r.notes.empty() ? "not applicable" : r.notes.front();
  auto f = r.failures();
  if (f.empty()) return std::to_string(r.entries.size()) + " checks";
  return f.front().check + " on " + f.front().generator + ": " + f.front().lhs + " vs " + f.front().rhs;
}

}  // namespace detail

// Operators of the braid-relation suite, with their display names.
inline std::vector<std::pair<std::string, YBOperator>> braid_relation_operators() {
  std::vector<std::pair<std::string, YBOperator>> ops;
  for (const char* n : {"artin", "burau", "gmv", "gmv_mu_central", "humphries_magnus"})
    ops.emplace_back(n, catalog_operator(n));
  for (int N : {0, 2, 3}) ops.emplace_back("wada_n(" + std::to_string(N) + ")", wada_operator(N));
  ops.emplace_back("crisp_paris", crisp_paris_operator({}));
  return ops;
}

inline SuiteReport structural_suite(const std::vector<CorpusEntry>& corpus) {
  SuiteReport s{"structural", {}};
  for (auto& [name, op] : braid_relation_operators()) {
    const YBOperator& o = op;
    s.rows.push_back(detail::guarded("braid_relations", name, [&] {
      VerificationReport r = verify_yang_baxter(o);
      return std::make_pair(r.passed(), detail::first_failure(r));
    }));
  }
  for (auto& e : corpus) {
    BraidWord b = e.word();
    if (e.is_knot())
      s.rows.push_back(detail::guarded("knot_dg_d_squared", e.name, [&] {
        DifferentialReport r = check_d_squared(*knot_dg_category(b).dg);
        return std::make_pair(r.ok(), std::to_string(r.checked) + " generators");
      }));
    s.rows.push_back(detail::guarded("fnc_d_squared", e.name, [&] {
      DifferentialReport r = check_d_squared(*fnc_link_dg_category(b).dg);
      return std::make_pair(r.ok(), std::to_string(r.checked) + " generators");
    }));
    s.rows.push_back(detail::guarded("burau_cone_h0", e.name, [&] {
      LaurentMatrix cone = burau_cone(b).differential, cat = categorical_closure(burau_operator(), b).matrix;
      return std::make_pair(cone == cat, matrix_string(cone));
    }));
  }
  return s;
}

inline std::vector<NamedInvariant> markov_invariants(bool knot) {
  std::vector<NamedInvariant> v{alexander_invariant("burau"), hom_count_invariant("s3"), hom_count_invariant("s4")};
  if (knot) {
    v.push_back(hc0_points_invariant(3));
    v.push_back(hc0_points_invariant(5));
  }
  return v;
}

inline SuiteReport invariance_suite_over(const std::vector<CorpusEntry>& corpus) {
  SuiteReport s{"invariance", {}};
  for (auto& e : corpus) {
    auto reps = markov_representatives(e.word());
    for (auto& inv : markov_invariants(e.is_knot())) {
      s.rows.push_back(detail::guarded(inv.name, e.name, [&] {
        InvarianceReport r = invariance_suite(inv, reps);
        std::string d = std::to_string(r.values.size()) + " representatives, value " + r.values.front().second;
        return std::make_pair(r.all_equal, d);
      }));
    }
  }
  return s;
}

inline SuiteReport oracle_suite(const std::vector<CorpusEntry>& corpus) {
  SuiteReport s{"oracles", {}};
  for (auto& e : corpus) {
    BraidWord b = e.word();
    if (e.is_knot()) {
      s.rows.push_back(detail::guarded("burau_vs_fox", e.name, [&] {
        AlexPoly x = alexander_polynomial(b, "burau"), y = alexander_polynomial(b, "fox");
        return std::make_pair(equal_up_to_units(*x.polynomial, *y.polynomial), x.str() + " / " + y.str());
      }));
      s.rows.push_back(detail::guarded("pushout_vs_closed_form", e.name, [&] {
        bool same = canonical_json(*knot_dg_pushout(b)) == canonical_json(*knot_dg_closed_form(b));
        return std::make_pair(same, same ? "identical serialization" : "serializations differ");
      }));
    }
    auto fresh = compute_expected(e);
    for (auto& [k, v] : e.expected) {
      s.rows.push_back(detail::guarded("expected_" + k, e.name, [&] {
        auto it = fresh.find(k);
        if (it == fresh.end()) return std::make_pair(false, std::string("no oracle for this key"));
        return std::make_pair(it->second.value == v.value, it->second.value);
      }));
    }
  }
  return s;
}

inline SuiteReport run_corpus(const std::string& suite, const std::vector<CorpusEntry>& corpus) {
  if (suite == "structural") return structural_suite(corpus);
  if (suite == "invariance") return invariance_suite_over(corpus);
  if (suite == "oracles") return oracle_suite(corpus);
  throw std::invalid_argument("unknown suite '" + suite + "' (expected structural, invariance or oracles)");
}

}  // namespace knotcat

#endif
