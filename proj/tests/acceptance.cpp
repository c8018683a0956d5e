// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "knotcat/corpus.hpp"

using namespace knotcat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

bool same_images(const Substitution& a, const Substitution& b) {
  const Quiver& q = *a.source()->quiver;
  if (q.arrow_count() != b.source()->quiver->arrow_count()) return false;
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    const std::string& name = q.arrow(static_cast<ArrowId>(i)).name;
    if (to_json(a.image(name)).dump() != to_json(b.image(name)).dump()) return false;
  }
  return a.object_map() == b.object_map();
}

std::vector<CorpusEntry> knots(const std::vector<CorpusEntry>& corpus) {
  std::vector<CorpusEntry> k;
  for (auto& e : corpus)
    if (e.is_knot()) k.push_back(e);
  return k;
}

Outcome criterion_braid_relations(const std::vector<CorpusEntry>&) {
  Outcome o;
  int n = 0;
  for (auto& [name, op] : braid_relation_operators()) {
    VerificationReport r = verify_yang_baxter(op);
    o.require(r.passed(), name + ": " + detail::first_failure(r));
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " operators";
  return o;
}

Outcome criterion_reidemeister(const std::vector<CorpusEntry>&) {
  Outcome o;
  VerificationReport g = verify_reidemeister(gmv_operator());
  o.require(g.passed(), "gmv: " + detail::first_failure(g));
  o.require(g.torsion.has_value(), "gmv: no torsion computed");
  if (g.torsion) {
    const Presentation& A1 = *g.torsion->source();
    o.require(g.torsion->image("a1") == A1.parse("T1 a1"), "gmv torsion on a1: " + g.torsion->image("a1").str());
    o.require(g.torsion->image("a1*") == A1.parse("a1* T1^-1"),
              "gmv torsion on a1*: " + g.torsion->image("a1*").str());
  }
  for (YBOperator op : {artin_operator(), burau_operator()}) {
    VerificationReport r = verify_reidemeister(op);
    o.require(r.passed(), op.name + ": " + detail::first_failure(r));
    o.require(r.torsion && same_images(*r.torsion, Substitution::identity(r.torsion->source())),
              op.name + ": torsion is not trivial");
  }
  if (o.pass) o.detail = "gmv torsion a -> T a, a* -> a* T^-1; artin, burau trivial";
  return o;
}

Outcome criterion_d_squared(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  o.require(check_d_squared(*knot_cylinder().cyl).ok(), "Cyl(B)");
  int n = 1;
  for (auto& e : corpus) {
    if (e.is_knot()) {
      o.require(check_d_squared(*knot_dg_category(e.word()).dg).ok(), "knot DG of " + e.name);
      ++n;
    }
    o.require(check_d_squared(*fnc_link_dg_category(e.word()).dg).ok(), "FNC of " + e.name);
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " presentations";
  return o;
}

Outcome criterion_cylinder_homotopy(const std::vector<CorpusEntry>&) {
  Outcome o;
  auto bad = check_cylinder_homotopy(knot_cylinder());
  o.require(bad.empty(), bad.empty() ? "" : "fails on " + bad.front().generator);
  if (o.pass) o.detail = "all generators of Cyl(B)";
  return o;
}

Outcome criterion_pushout(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  for (auto& e : knots(corpus))
    o.require(canonical_json(*knot_dg_pushout(e.word())) == canonical_json(*knot_dg_closed_form(e.word())), e.name);
  if (o.pass) o.detail = std::to_string(knots(corpus).size()) + " knots";
  return o;
}

Outcome criterion_transport(const std::vector<CorpusEntry>&) {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    auto bad = hm_transport_mismatches(n);
    o.require(bad.empty(), bad.empty() ? "" : bad.front());
  }
  if (o.pass) o.detail = "n = 2, 3, 4";
  return o;
}

Outcome criterion_unknot_hc0(const std::vector<CorpusEntry>&) {
  Outcome o;
  AlgebraPresentation h = hc0_presentation(BraidWord::parse("", 1));
  o.require(h.relations.size() == 1, std::to_string(h.relations.size()) + " relations");
  if (h.relations.size() == 1) {
    Element expected = h.algebra->parse("[lambda*mu - lambda - mu + 1] e_1");
    o.require(h.relations[0] == expected, "relation " + h.relations[0].str());
  }
  std::uint64_t c = point_count(h, 5, {}, {}).total;
  o.require(c == 7, "F5 count " + std::to_string(c));
  if (o.pass) o.detail = "(lambda - 1)(mu - 1), F5 count 7";
  return o;
}

Outcome criterion_alexander(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  std::map<std::string, std::string> seen;
  for (auto& e : knots(corpus)) {
    AlexPoly bu = alexander_polynomial(e.word(), "burau"), fx = alexander_polynomial(e.word(), "fox");
    o.require(bu.polynomial && fx.polynomial && equal_up_to_units(*bu.polynomial, *fx.polynomial),
              e.name + ": routes disagree");
    o.require(bu.symmetric && fx.symmetric, e.name + ": not symmetric");
    if (bu.polynomial) seen[e.name] = bu.polynomial->str();
  }
  o.require(seen["trefoil"] == "t^2 - t + 1", "trefoil " + seen["trefoil"]);
  o.require(seen["figure_eight"] == "t^2 - 3*t + 1", "figure_eight " + seen["figure_eight"]);
  if (o.pass) o.detail = "trefoil " + seen["trefoil"] + ", figure_eight " + seen["figure_eight"];
  return o;
}

Outcome criterion_markov(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  std::vector<NamedInvariant> invs{hom_count_invariant("s3"), hom_count_invariant("s4"), hc0_points_invariant(3),
                                   hc0_points_invariant(5), alexander_invariant("burau")};
  int rows = 0;
  std::string trefoil_s3;
  for (auto& e : knots(corpus)) {
    auto reps = markov_representatives(e.word());
    o.require(reps.size() >= 4, e.name + ": too few representatives");
    for (auto& inv : invs) {
      InvarianceReport r = invariance_suite(inv, reps);
      o.require(r.all_equal, e.name + " " + inv.name);
      if (e.name == "trefoil" && inv.name == "homcount_s3") trefoil_s3 = r.values.front().second;
      ++rows;
    }
  }
  o.require(trefoil_s3 == "12", "trefoil |Hom(pi, S3)| = " + trefoil_s3);
  if (o.pass) o.detail = std::to_string(rows) + " invariant rows, trefoil S3 count 12";
  return o;
}

Outcome criterion_peripheral(const std::vector<CorpusEntry>&) {
  Outcome o;
  int rows = 0;
  for (auto [w, n] : {std::pair<const char*, int>{"", 1}, {"s1 s1 s1", 2}}) {
    BraidWord b = BraidWord::parse(w, n);
    AlgebraPresentation h = hc0_presentation(b), c = peripheral_presentation(b).object1;
    for (int q : {3, 5})
      for (int dim : {1, 2}) {
        PointReport ph = point_count(h, q, {}, {}, dim), pc = point_count(c, q, {}, {}, dim);
        o.require(ph.per_units == pc.per_units, "longitude convention finding: " + b.str() + " q=" +
                                                    std::to_string(q) + " dim=" + std::to_string(dim) + " " +
                                                    point_table_string(ph) + " vs " + point_table_string(pc));
        ++rows;
      }
  }
  if (o.pass) o.detail = std::to_string(rows) + " point tables, unknot and trefoil";
  return o;
}

Outcome criterion_negative_controls(const std::vector<CorpusEntry>&) {
  Outcome o;
  Cylinder cy = knot_cylinder();
  auto bad = std::make_shared<Presentation>(*cy.cyl);
  bad->differential[bad->quiver->arrow_id("eta")] = bad->parse("xi - xi' + b* a' - a* b");
  DifferentialReport d = check_d_squared(*bad);
  o.require(!d.ok() && !d.issues.front().residue.is_zero(), "corrupted d(eta) was accepted");
  VerificationReport yb = verify_yang_baxter(negative_control_operator());
  o.require(!yb.passed() && !yb.failures().empty(), "negative control passed the braid relation");
  ConfluenceReport cr = check_local_confluence(gmv_mu_central_algebra(1, MuCentralRules::Bare)->rules);
  o.require(!cr.confluent(), "bare rules reported confluent");
  if (o.pass)
    o.detail = "d^2 residue " + d.issues.front().residue.str() + "; YB witness on " + yb.failures().front().generator +
               "; " + std::to_string(cr.unresolved.size()) + " unresolved critical pairs";
  return o;
}

Outcome criterion_structural(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  YBOperator burau = burau_operator();
  for (auto& e : corpus)
    o.require(burau_cone(e.word()).differential == categorical_closure(burau, e.word()).matrix, e.name);
  YBOperator w1 = wada_operator(1), gmv = gmv_operator();
  for (int n : {2, 3, 4})
    for (int k = 1; k < n; ++k)
      for (bool inv : {false, true})
        o.require(same_images(w1.generator(n, k, inv), gmv.generator(n, k, inv)),
                  "wada_n(1) differs from gmv on s" + std::to_string(k) + " in B" + std::to_string(n));
  if (o.pass) o.detail = std::to_string(corpus.size()) + " cones; wada_n(1) = gmv for n <= 4";
  return o;
}

}  // namespace

int main() {
  std::vector<CorpusEntry> corpus = load_corpus();
  std::vector<std::pair<std::string, std::function<Outcome(const std::vector<CorpusEntry>&)>>> criteria{
      {"braid relations", criterion_braid_relations},
      {"reidemeister", criterion_reidemeister},
      {"d^2 = 0", criterion_d_squared},
      {"cylinder homotopy", criterion_cylinder_homotopy},
      {"pushout = closed form", criterion_pushout},
      {"transport", criterion_transport},
      {"unknot HC0", criterion_unknot_hc0},
      {"alexander oracles", criterion_alexander},
      {"markov invariance", criterion_markov},
      {"peripheral consistency", criterion_peripheral},
      {"negative controls", criterion_negative_controls},
      {"structural consistency", criterion_structural}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(corpus);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << t
              << "): " << o.detail << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
