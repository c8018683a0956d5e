#include <gtest/gtest.h>

#include "knotcat/closure.hpp"

using namespace knotcat;

namespace {

bool same_images(const Substitution& a, const Substitution& b) {
  const Quiver& qa = *a.source()->quiver;
  const Quiver& qb = *b.source()->quiver;
  if (qa.arrow_count() != qb.arrow_count()) return false;
  for (std::size_t i = 0; i < qa.arrow_count(); ++i) {
    const std::string& name = qa.arrow(static_cast<ArrowId>(i)).name;
    if (to_json(a.image(name)).dump() != to_json(b.image(name)).dump()) return false;
  }
  return a.object_map() == b.object_map();
}

}  // namespace

TEST(Catalog, GeneratorImages) {
  YBOperator artin = artin_operator();
  Substitution s = artin.generator(2, 1);
  EXPECT_EQ(s.image("x1"), s.source()->parse("x1 x2 x1^-1"));
  EXPECT_EQ(s.image("x2"), s.source()->parse("x1"));

  LaurentMatrix m = matrix_of(burau_operator().generator(2, 1));
  EXPECT_EQ(matrix_string(m), "[[-t + 1, t], [1, 0]]");

  Substitution w2 = wada_operator(2).generator(2, 1);
  EXPECT_EQ(w2.image("a1"), w2.source()->parse("T1 T1 a2"));
  EXPECT_EQ(w2.image("a1*"), w2.source()->parse("a2* T1^-1 T1^-1"));

  Substitution g = gmv_operator().generator(3, 1);
  EXPECT_EQ(g.image("a3"), g.source()->parse("a3"));
  EXPECT_EQ(g.image("a1"), g.source()->parse("T1 a2"));
}

TEST(Catalog, NamesResolve) {
  for (auto& n : catalog_names()) EXPECT_NO_THROW(catalog_operator(n)) << n;
  EXPECT_THROW(catalog_operator("nonsense"), OperatorError);
  EXPECT_EQ(catalog_operator("wada_n", {3, {}}).name, "wada_n(3)");
}

TEST(BraidAction, IteratesAndReduces) {
  YBOperator artin = artin_operator();
  Substitution b = braid_action_endo(artin, BraidWord::parse("s1 s1", 2));
  EXPECT_EQ(b.image("x1"), b.source()->parse("x1 x2 x1 x2^-1 x1^-1"));
  Substitution id = braid_action_endo(gmv_operator(), BraidWord::parse("", 3));
  EXPECT_TRUE(same_images(id, Substitution::identity(id.source())));
}

TEST(BraidAction, InverseLettersUndoGenerators) {
  for (const char* name : {"artin", "gmv", "humphries_magnus"}) {
    YBOperator op = catalog_operator(name);
    Substitution b = braid_action_endo(op, BraidWord::parse("s1 s2^-1 s2 s1^-1", 3));
    EXPECT_TRUE(same_images(b, Substitution::identity(b.source()))) << name;
  }
}

TEST(YangBaxter, GmvBothSidesOnA1) {
  YBOperator gmv = gmv_operator();
  auto s = [&](int k) { return gmv.generator(3, k); };
  Substitution lhs = compose(s(1), compose(s(2), s(1)));
  Substitution rhs = compose(s(2), compose(s(1), s(2)));
  Element expected = lhs.source()->parse("T1 T2 a3");
  EXPECT_EQ(lhs.image("a1"), expected);
  EXPECT_EQ(rhs.image("a1"), expected);
}

TEST(YangBaxter, EveryCatalogOperatorPasses) {
  std::vector<YBOperator> ops{artin_operator(),   burau_operator(),  gmv_operator(),
                              gmv_mu_central_operator(), humphries_magnus_operator(), wada_operator(0),
                              wada_operator(2),   wada_operator(3),  crisp_paris_operator({})};
  for (auto& op : ops) {
    VerificationReport r = verify_yang_baxter(op);
    EXPECT_TRUE(r.passed()) << op.name;
    EXPECT_FALSE(r.entries.empty()) << op.name;
  }
}

TEST(YangBaxter, NegativeControlFailsWithWitness) {
  VerificationReport r = verify_yang_baxter(negative_control_operator());
  ASSERT_FALSE(r.passed());
  auto f = r.failures();
  ASSERT_FALSE(f.empty());
  EXPECT_EQ(f.front().check, "braid_relation");
  EXPECT_FALSE(f.front().generator.empty());
  EXPECT_NE(f.front().lhs, f.front().rhs);
}

TEST(Reidemeister, GmvTorsionAndWitnesses) {
  VerificationReport r = verify_reidemeister(gmv_operator());
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.torsion.has_value());
  const Presentation& A1 = *r.torsion->source();
  EXPECT_EQ(r.torsion->image("a1"), A1.parse("T1 a1"));
  EXPECT_EQ(r.torsion->image("a1*"), A1.parse("a1* T1^-1"));
  bool saw_inverse = false;
  for (auto& e : r.entries) saw_inverse = saw_inverse || e.check == "sigma_R_inverse";
  EXPECT_TRUE(saw_inverse);
}

TEST(Reidemeister, ArtinAndBurauHaveTrivialTorsion) {
  for (YBOperator op : {artin_operator(), burau_operator()}) {
    VerificationReport r = verify_reidemeister(op);
    EXPECT_TRUE(r.passed()) << op.name;
    ASSERT_TRUE(r.torsion.has_value());
    EXPECT_TRUE(same_images(*r.torsion, Substitution::identity(r.torsion->source()))) << op.name;
  }
}

TEST(Reidemeister, WadaTorsionIsAPower) {
  VerificationReport r = verify_reidemeister(wada_operator(2));
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.torsion.has_value());
  EXPECT_EQ(r.torsion->image("a1"), r.torsion->source()->parse("T1 T1 a1"));
}

TEST(Reidemeister, NotApplicableWithoutCoproduct) {
  VerificationReport r = verify_reidemeister(humphries_magnus_operator());
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.notes.empty());
}

TEST(SigmaNatural, ThetaLambdaIdentityAndOneSided) {
  YBOperator gmv = gmv_operator();
  PresentationPtr A1 = gmv.algebra(1);
  EXPECT_TRUE(verify_sigma_natural(gmv, gmv.coloring("theta_lambda")).passed());
  EXPECT_TRUE(verify_sigma_natural(gmv, Substitution::identity(A1)).passed());
  VerificationReport bad = verify_sigma_natural(gmv, one_sided_theta(A1));
  EXPECT_FALSE(bad.passed());
  EXPECT_FALSE(bad.failures().empty());
}

TEST(Wada, NEqualsOneIsGmv) {
  YBOperator w1 = wada_operator(1), gmv = gmv_operator();
  for (int n : {2, 3, 4})
    for (int k = 1; k < n; ++k)
      for (bool inv : {false, true}) EXPECT_TRUE(same_images(w1.generator(n, k, inv), gmv.generator(n, k, inv)));
}

TEST(Wada, QuantumIntegerIdentity) {
  PresentationPtr A = gmv_mu_central_algebra(1);
  Laurent mu = Laurent::variable("mu");
  for (int N = -2; N <= 3; ++N) {
    Element tn = A->id("0");
    Element step = N >= 0 ? A->arrow("T1") : A->arrow("T1^-1");
    for (int i = 0; i < std::abs(N); ++i) tn = A->nf(tn * step);
    Element rhs = A->nf(A->id("0") + quantum_integer(N, mu) * (A->arrow("a1") * A->arrow("a1*")));
    EXPECT_EQ(tn, rhs) << "N = " << N;
  }
}

TEST(HumphriesMagnus, GeneratorImages) {
  Substitution s = humphries_magnus_operator().generator(3, 1);
  const Presentation& H = *s.source();
  EXPECT_EQ(s.image("a1_2"), H.parse("-a2_1"));
  EXPECT_EQ(s.image("a1_3"), H.parse("a2_3 - a2_1 a1_3"));
  EXPECT_EQ(s.image("a3_2"), H.parse("a3_1"));
}

TEST(HumphriesMagnus, MatchesTransportedGmvAction) {
  for (int n = 2; n <= 4; ++n) EXPECT_TRUE(hm_transport_mismatches(n).empty()) << n;
}

TEST(CrispParis, RejectsBadData) {
  CrispParisData bad;
  bad.x = "2*T";
  EXPECT_THROW(crisp_paris_operator(bad), OperatorError);
  CrispParisData unknown;
  unknown.y = "S";
  EXPECT_THROW(crisp_paris_operator(unknown), OperatorError);
}

TEST(CrispParis, ShippedInstanceMatchesGmvImages) {
  YBOperator cp = crisp_paris_operator({}), gmv = gmv_operator();
  Substitution a = cp.generator(2, 1), b = gmv.generator(2, 1);
  for (const char* g : {"a1", "a1*", "a2", "a2*"})
    EXPECT_EQ(a.image(g).str(), b.image(g).str()) << g;
  EXPECT_TRUE(verify_reidemeister(cp).passed());
}
