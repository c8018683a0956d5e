#include <gtest/gtest.h>

#include "knotcat/closure.hpp"

using namespace knotcat;

namespace {

const std::vector<std::pair<std::string, BraidWord>>& knots() {
  static const std::vector<std::pair<std::string, BraidWord>> k{
      {"unknot", BraidWord::parse("", 1)},
      {"trefoil", BraidWord::parse("s1 s1 s1", 2)},
      {"figure_eight", BraidWord::parse("s1 s2^-1 s1 s2^-1", 3)},
      {"cinquefoil", BraidWord::parse("s1 s1 s1 s1 s1", 2)},
      {"6_2", BraidWord::parse("s1 s1 s1 s2^-1 s1 s2^-1", 3)}};
  return k;
}

// Substitution images read as free-group words, independent of the closure code.
Word free_image(const Substitution& s, int i) { return element_to_word(s.image("x" + std::to_string(i))); }

}  // namespace

TEST(GroupClosure, TrefoilRelators) {
  BraidWord b = BraidWord::parse("s1 s1 s1", 2);
  ClosurePresentation cp = categorical_closure(artin_operator(), b);
  EXPECT_EQ(cp.kind, ClosureKind::Group);
  EXPECT_EQ(cp.generators, (std::vector<std::string>{"x1", "x2"}));
  ASSERT_EQ(cp.relators.size(), 2u);
  Substitution beta = braid_action_endo(artin_operator(), b);
  Word b1 = free_image(beta, 1);
  EXPECT_EQ(word_string(b1), "x1 x2 x1 x2 x1^-1 x2^-1 x1^-1");
  EXPECT_EQ(cp.relators[0], concat_words(b1, {-1}));
  EXPECT_EQ(cp.relators[1], concat_words(free_image(beta, 2), {-2}));
}

TEST(GroupClosure, IdentityBraidGivesFreeGroup) {
  ClosurePresentation cp = categorical_closure(artin_operator(), BraidWord::parse("", 3));
  EXPECT_EQ(cp.generators.size(), 3u);
  for (auto& r : cp.relators) EXPECT_TRUE(r.empty());
}

TEST(ModuleClosure, BurauOfOneCrossing) {
  ClosurePresentation cp = categorical_closure(burau_operator(), BraidWord::parse("s1", 2));
  EXPECT_EQ(cp.kind, ClosureKind::ModuleMatrix);
  EXPECT_EQ(matrix_string(cp.matrix), "[[t, -t], [-1, 1]]");
}

TEST(ModuleClosure, BurauConeMatchesClosureMatrix) {
  for (auto& [name, b] : knots()) {
    EXPECT_EQ(burau_cone(b).differential, categorical_closure(burau_operator(), b).matrix) << name;
  }
  BraidWord hopf = BraidWord::parse("s1 s1", 2);
  EXPECT_EQ(burau_cone(hopf).differential, categorical_closure(burau_operator(), hopf).matrix);
}

TEST(ModuleClosure, ConeRelationsHaveCorankOneForKnots) {
  for (auto& [name, b] : knots()) {
    if (b.letters.empty()) continue;
    EXPECT_EQ(burau_cone(b).h0_free_rank_bound(), 1) << name;
  }
}

TEST(CategoryClosure, GmvCollapsesObjectsAlongOrbits) {
  ClosurePresentation knot = categorical_closure(gmv_operator(), BraidWord::parse("s1 s1 s1", 2));
  EXPECT_EQ(knot.category->quiver->object_count(), 2u);
  ClosurePresentation link = categorical_closure(gmv_operator(), BraidWord::parse("s1 s1", 2));
  EXPECT_EQ(link.category->quiver->object_count(), 3u);
  EXPECT_EQ(knot.relations.size(), knot.generators.size());
}

TEST(Psi, GmvWithThetaLambda) {
  Substitution psi = writhe_adjusted_psi(gmv_operator(), BraidWord::parse("s1", 2), "theta_lambda");
  EXPECT_EQ(psi.image("a1"), psi.source()->parse("[lambda^-1] T1 T2^-1 a2"));
}

TEST(Psi, TrivialCasesReduceToBeta) {
  YBOperator artin = artin_operator();
  for (auto& [name, b] : knots()) {
    if (b.strands < 2) continue;
    Substitution psi = writhe_adjusted_psi(artin, b, "");
    Substitution beta = braid_action_endo(artin, b);
    EXPECT_TRUE(psi.differences(beta).empty()) << name;
  }
  BraidWord w0 = BraidWord::parse("s1 s2^-1", 3);
  EXPECT_TRUE(writhe_adjusted_psi(gmv_op(), w0).differences(braid_action_endo(gmv_op(), w0)).empty());
}

TEST(KnotDG, PushoutAgreesWithClosedForm) {
  for (auto& [name, b] : knots())
    EXPECT_EQ(canonical_json(*knot_dg_pushout(b)), canonical_json(*knot_dg_closed_form(b))) << name;
}

TEST(KnotDG, DSquaredVanishes) {
  for (auto& [name, b] : knots()) {
    DifferentialReport r = check_d_squared(*knot_dg_category(b).dg);
    EXPECT_TRUE(r.ok()) << name;
  }
}

TEST(KnotDG, TrefoilShape) {
  BraidWord b = BraidWord::parse("s1 s1 s1", 2);
  LinkDGCategory c = knot_dg_category(b);
  EXPECT_EQ(c.component_objects, (std::vector<std::string>{"1"}));
  EXPECT_EQ(c.writhes, (std::vector<int>{3}));
  const Presentation& P = *c.dg;
  const Quiver& q = *P.quiver;
  EXPECT_EQ(q.arrow(q.arrow_id("b2")).degree, 1);
  EXPECT_EQ(q.arrow(q.arrow_id("eta1")).degree, 2);
  Substitution psi = writhe_adjusted_psi(mu_central_op(), b, "theta_lambda");
  for (int i : {1, 2}) {
    std::string a = "a" + std::to_string(i);
    EXPECT_EQ(P.d(q.arrow_id("b" + std::to_string(i))).str(), psi.source()->nf(psi.image(a) - psi.source()->arrow(a)).str());
  }
  EXPECT_EQ(P.d(q.arrow_id("eta1")).degree(), 1);
}

TEST(KnotDG, RejectsLinks) {
  EXPECT_THROW(knot_dg_category(BraidWord::parse("s1 s1", 2)), ClosureError);
}

TEST(KnotDGA, DSquaredOnTrefoil) {
  KnotDGA k = knot_dga_at_1(knot_dg_category(BraidWord::parse("s1 s1 s1", 2)));
  EXPECT_TRUE(check_d_squared(*k.dga).ok());
  EXPECT_EQ(k.dga->quiver->object_count(), 1u);
}

TEST(KnotDGA, UnknotDifferentials) {
  KnotDGA k = knot_dga_at_1(knot_dg_category(BraidWord::parse("", 1)));
  const Presentation& D = *k.dga;
  for (auto& [a, d] : D.differential) EXPECT_TRUE(d.is_zero() || d.degree() + 1 == D.quiver->arrow(a).degree);
}

TEST(FNC, DSquaredIncludingHopf) {
  for (auto& [name, b] : knots()) EXPECT_TRUE(check_d_squared(*fnc_link_dg_category(b).dg).ok()) << name;
  LinkDGCategory hopf = fnc_link_dg_category(BraidWord::parse("s1 s1", 2));
  EXPECT_EQ(hopf.component_objects.size(), 2u);
  EXPECT_TRUE(check_d_squared(*hopf.dg).ok());
}

TEST(FNC, CentralSpecializationGivesKnotDG) {
  for (auto& [name, b] : knots()) EXPECT_TRUE(fnc_specialization_mismatches(b).empty()) << name;
}

// Reading the Humphries-Magnus generators with the wrong rescaling
// (a_ij = A_ij for every pair) must produce mismatches.
TEST(Transport, WrongRescalingIsDetected) {
  const int n = 3;
  YBOperator hm = humphries_magnus_operator();
  const YBOperator& gm = mu_central_op();
  PresentationPtr A = gm.algebra(n), H = hm.algebra(n);
  auto q = std::make_shared<Quiver>();
  q->add_object("1");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) q->add_arrow(dga_name('A', i, j), 0, 0, 0);
  PresentationPtr D = make_presentation("A_ij", q);
  DgaTranslator tr(A, D);
  auto lower = [&](const Element& x) {
    Element out(H->quiver, 0, 0);
    for (auto& [p, c] : x.terms()) {
      Element t = Element::identity(H->quiver, 0, c);
      for (ArrowId a : p) {
        std::string nm = q->arrow(a).name;
        t = t * H->arrow("a" + nm.substr(1));
      }
      out += t;
    }
    return out;
  };
  int mismatches = 0;
  Substitution s = gm.generator(n, 1), h = hm.generator(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Element img = A->nf(-(s.image("a" + std::to_string(i) + "*") * s.image("a" + std::to_string(j))));
      if (lower(tr.translate(img)) != h.image(hm_name(i, j))) ++mismatches;
    }
  EXPECT_GT(mismatches, 0);
}
