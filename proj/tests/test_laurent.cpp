#include <gtest/gtest.h>

#include <random>

#include "knotcat/laurent.hpp"

using namespace knotcat;

namespace {

constexpr long long kPrime = 1000003;

long long mod_pow(long long b, long long e) {
  long long r = 1;
  b %= kPrime;
  while (e > 0) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

// Evaluates at t = tv, mu = mv, lambda = lv modulo a prime.
long long eval(const Laurent& p, long long tv, long long mv, long long lv) {
  return p.evaluate_mod(kPrime, [&](int var, int e) {
    long long base = var == Variables::id("t") ? tv : var == Variables::id("mu") ? mv : lv;
    if (e < 0) base = mod_pow(base, kPrime - 2), e = -e;
    return mod_pow(base, e);
  });
}

Laurent random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), ex(-3, 3), nterms(0, 4);
  Laurent r;
  for (int i = nterms(rng); i > 0; --i)
    r += Laurent(coeff(rng)) * Laurent::variable("t", ex(rng)) * Laurent::variable("mu", ex(rng)) *
         Laurent::variable("lambda", ex(rng));
  return r;
}

}  // namespace

TEST(Laurent, ParsesAndPrintsCanonically) {
  Laurent p = Laurent::parse("t^2 - 3*t + 1");
  EXPECT_EQ(p.str(), "t^2 - 3*t + 1");
  EXPECT_EQ(Laurent::parse("1 - 3*t + t^2"), p);
  EXPECT_EQ(Laurent::parse("mu - 1").str(), "mu - 1");
  EXPECT_EQ(Laurent::parse("0").str(), "0");
  EXPECT_TRUE(Laurent::parse("t - t").is_zero());
}

TEST(Laurent, RoundTripsThroughStrings) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Laurent p = random_poly(rng);
    EXPECT_EQ(Laurent::parse(p.str()), p) << p.str();
  }
}

TEST(Laurent, RingOperationsMatchEvaluation) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> pt(2, kPrime - 1);
  for (int i = 0; i < 200; ++i) {
    Laurent a = random_poly(rng), b = random_poly(rng);
    long long t = pt(rng), m = pt(rng), l = pt(rng);
    long long ea = eval(a, t, m, l), eb = eval(b, t, m, l);
    EXPECT_EQ(eval(a * b, t, m, l), ea * eb % kPrime);
    EXPECT_EQ(eval(a + b, t, m, l), (ea + eb) % kPrime);
    EXPECT_EQ(eval(a - b, t, m, l), ((ea - eb) % kPrime + kPrime) % kPrime);
  }
}

TEST(Laurent, UnitsAndPowers) {
  Laurent t = Laurent::variable("t");
  EXPECT_TRUE(t.is_unit());
  EXPECT_EQ(t.unit_inverse(), Laurent::variable("t", -1));
  EXPECT_EQ((-t).unit_inverse(), -Laurent::variable("t", -1));
  EXPECT_EQ(t.pow(-3), Laurent::variable("t", -3));
  EXPECT_EQ((t + Laurent(1)).pow(3), Laurent::parse("t^3 + 3*t^2 + 3*t + 1"));
  EXPECT_FALSE((t + Laurent(1)).is_unit());
  EXPECT_THROW((t + Laurent(1)).unit_inverse(), std::domain_error);
  EXPECT_THROW(Laurent(2).unit_inverse(), std::domain_error);
}

TEST(Laurent, QuantumIntegers) {
  Laurent q = Laurent::variable("mu");
  EXPECT_EQ(quantum_integer(0, q), Laurent());
  EXPECT_EQ(quantum_integer(1, q), Laurent(1));
  EXPECT_EQ(quantum_integer(3, q), Laurent::parse("mu^2 + mu + 1"));
  // (q - 1)[k]_q = q^k - 1 for every k, including negative k.
  for (int k = -4; k <= 4; ++k) EXPECT_EQ((q - Laurent(1)) * quantum_integer(k, q), q.pow(k) - Laurent(1)) << k;
}

TEST(Laurent, NormalizationUpToUnits) {
  Laurent p = Laurent::parse("t^2 - t + 1");
  EXPECT_EQ(normalize_up_to_units(-Laurent::variable("t", -5) * p), p);
  EXPECT_EQ(normalize_up_to_units(Laurent::variable("t", 3) * p), p);
  EXPECT_EQ(normalize_up_to_units(Laurent()), Laurent());
}

TEST(Laurent, ExponentQueries) {
  Laurent p = Laurent::parse("t^-2*mu + 3*t^4");
  int t = Variables::id("t");
  EXPECT_EQ(p.min_exponent(t), -2);
  EXPECT_EQ(p.max_exponent(t), 4);
  EXPECT_EQ(p.constant_term(), 0);
  EXPECT_EQ((p + Laurent(5)).constant_term(), 5);
}

TEST(Laurent, RejectsMalformedInput) {
  EXPECT_THROW(Laurent::parse("t^"), ParseError);
  EXPECT_THROW(Laurent::parse("(t + 1"), ParseError);
}
