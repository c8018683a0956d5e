// Markov-invariance harness: evaluates a named invariant on several braid
// representatives of one link and compares the results.
#ifndef KNOTCAT_INVARIANCE_HPP
#define KNOTCAT_INVARIANCE_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hc0.hpp"

namespace knotcat {

// Canonical string form of an invariant value; equal strings mean equal values.
using Invariant = std::function<std::string(const BraidWord&)>;

struct NamedInvariant {
  std::string name;
  Invariant eval;
};

inline std::string point_table_string(const PointReport& r) {
  std::string s = "q=" + std::to_string(r.q) + " dim=" + std::to_string(r.dim) + " total=" + std::to_string(r.total) + " [";
  bool first = true;
  for (auto& [k, c] : r.per_units) {
    s += (first ? "" : " ") + std::to_string(k.first) + "," + std::to_string(k.second) + ":" + std::to_string(c);
    first = false;
  }
  return s + "]";
}

inline NamedInvariant alexander_invariant(const std::string& method = "burau") {
  return {"alexander_" + method, [method](const BraidWord& b) {
            AlexPoly a = alexander_polynomial(b, method);
            if (a.polynomial) return a.polynomial->str();
            return "gcd " + normalize_alexander(laurent_gcd(a.ideal_generators)).str();
          }};
}

inline NamedInvariant hom_count_invariant(const std::string& group) {
  return {"homcount_" + group, [group](const BraidWord& b) {
            return std::to_string(finite_hom_count(knot_group_presentation(b), finite_group(group)).count);
          }};
}

inline NamedInvariant hc0_points_invariant(int q, int dim = 1) {
  return {"hc0_points_q" + std::to_string(q) + (dim > 1 ? "_d" + std::to_string(dim) : ""),
          [q, dim](const BraidWord& b) { return point_table_string(point_count(hc0_presentation(b), q, {}, {}, dim)); }};
}

inline NamedInvariant named_invariant(const std::string& name) {
  if (name == "alexander" || name == "alexander_burau") return alexander_invariant("burau");
  if (name == "alexander_fox") return alexander_invariant("fox");
  if (name.rfind("homcount_", 0) == 0) return hom_count_invariant(name.substr(9));
  if (name == "hc0_points_q3") return hc0_points_invariant(3);
  if (name == "hc0_points_q5") return hc0_points_invariant(5);
  throw std::invalid_argument("unknown invariant '" + name +
                              "' (expected alexander, alexander_fox, homcount_<group>, hc0_points_q3 or hc0_points_q5)");
}

struct Representative {
  std::string label;
  BraidWord braid;
};

// Conjugate by the first generator that changes the word; braids on fewer
// than three strands are stabilized first so that a nontrivial conjugate exists.
inline Representative auto_conjugate(const BraidWord& b) {
  BraidWord base = b;
  std::string label;
  while (base.strands < 3) {
    base = markov_move(base, MarkovMove::stabilize(true));
    label += "stab+,";
  }
  for (int g = 1; g < base.strands; ++g) {
    MarkovMove m = MarkovMove::conjugate({g});
    BraidWord c = markov_move(base, m);
    if (c.letters != base.letters) return {label + m.str(), c};
  }
  return {label + "conj()", base};
}

// Moves: "conj", "stab+", "stab-". The original braid always comes first.
inline std::vector<Representative> markov_representatives(const BraidWord& b,
                                                          const std::vector<std::string>& moves = {"conj", "stab+",
                                                                                                   "stab-"}) {
  std::vector<Representative> reps{{"original", b}};
  for (auto& m : moves) {
    if (m == "conj") reps.push_back(auto_conjugate(b));
    else if (m == "stab+") reps.push_back({"stab+", markov_move(b, MarkovMove::stabilize(true))});
    else if (m == "stab-") reps.push_back({"stab-", markov_move(b, MarkovMove::stabilize(false))});
    else throw std::invalid_argument("unknown move '" + m + "' (expected conj, stab+ or stab-)");
  }
  return reps;
}

struct InvarianceReport {
  std::string invariant;
  std::vector<std::pair<Representative, std::string>> values;
  bool all_equal = true;
};

inline InvarianceReport invariance_suite(const NamedInvariant& inv, const std::vector<Representative>& reps) {
  InvarianceReport r;
  r.invariant = inv.name;
  for (auto& rep : reps) {
    r.values.emplace_back(rep, inv.eval(rep.braid));
    if (r.values.back().second != r.values.front().second) r.all_equal = false;
  }
  return r;
}

inline Json to_json(const InvarianceReport& r) {
  Json j{{"invariant", r.invariant}, {"all_equal", r.all_equal}};
  Json v = Json::array();
  for (auto& [rep, val] : r.values)
    v.push_back(Json{{"label", rep.label}, {"braid", rep.braid.str()}, {"strands", rep.braid.strands}, {"value", val}});
  j["values"] = v;
  return j;
}

}  // namespace knotcat

#endif
