#include <gtest/gtest.h>

#include <random>

#include "bingbound/bingbound.hpp"
#include "support/oracle.hpp"

using namespace bingbound;

namespace {

const KnotCatalog cat = KnotCatalog::shipped();

class RandomKnots {
 public:
  explicit RandomKnots(unsigned seed) : rng_(seed) {}

  KnotExpression expression(int depth) {
    const int choice = depth <= 0 ? 0 : std::uniform_int_distribution<int>(0, 5)(rng_);
    switch (choice) {
      case 1: return KnotExpression::sum(expression(depth - 1), expression(depth - 1));
      case 2: return KnotExpression::reverse(expression(depth - 1));
      case 3: return KnotExpression::mirror(expression(depth - 1));
      case 4: return KnotExpression::multiple(std::uniform_int_distribution<unsigned long>(1, 3)(rng_), expression(depth - 1));
      default: return KnotExpression::atom(atoms_[std::uniform_int_distribution<std::size_t>(0, atoms_.size() - 1)(rng_)]);
    }
  }

  Rational theta() {
    const long b = std::uniform_int_distribution<long>(2, 90)(rng_);
    return make_rational(std::uniform_int_distribution<long>(1, b - 1)(rng_), b);
  }

 private:
  std::mt19937 rng_;
  std::vector<std::string> atoms_{"T(2,3)", "T(2,5)", "T(3,4)", "4_1", "twist(-2)", "twist(2)", "twist(3)", "unknot"};
};

}  // namespace

TEST(Properties, StructuralPathMatchesEvaluatedMatrix) {
  RandomKnots gen(11);
  for (int i = 0; i < 60; ++i) {
    const KnotExpression e = gen.expression(3);
    const Rational theta = gen.theta();
    EXPECT_EQ(signature_at(e, cat, theta), matrix_inertia_at(evaluate(e, cat), theta))
        << to_string(e) << " at " << theta;
  }
}

TEST(Properties, SumReverseMirror) {
  RandomKnots gen(12);
  for (int i = 0; i < 60; ++i) {
    const KnotExpression a = gen.expression(2), b = gen.expression(2);
    const Rational theta = gen.theta();
    const SeifertMatrix va = evaluate(a, cat), vb = evaluate(b, cat);
    const Inertia ia = matrix_inertia_at(va, theta), ib = matrix_inertia_at(vb, theta);
    EXPECT_EQ(matrix_inertia_at(connected_sum(va, vb), theta), ia + ib);
    EXPECT_EQ(matrix_inertia_at(va.reversed(), theta), ia);
    EXPECT_EQ(matrix_inertia_at(va.mirrored(), theta), swapped(ia));
  }
}

TEST(Properties, ConjugateSymmetry) {
  RandomKnots gen(13);
  for (int i = 0; i < 40; ++i) {
    const KnotExpression e = gen.expression(2);
    const Rational theta = gen.theta();
    EXPECT_EQ(signature_at(e, cat, theta), signature_at(e, cat, Rational(1 - theta)));
  }
}

TEST(Properties, AgreesWithEigenvalueOracle) {
  RandomKnots gen(14);
  for (int i = 0; i < 40; ++i) {
    const KnotExpression e = gen.expression(2);
    const SeifertMatrix v = evaluate(e, cat);
    if (v.size() > 16) continue;
    const Rational theta = gen.theta();
    const oracle::Counts ref = oracle::inertia(v, theta.get_d());
    const Inertia got = matrix_inertia_at(v, theta);
    EXPECT_EQ(got.positive, ref.positive) << to_string(e) << " at " << theta;
    EXPECT_EQ(got.negative, ref.negative) << to_string(e) << " at " << theta;
    EXPECT_EQ(got.zero, ref.zero) << to_string(e) << " at " << theta;
  }
}

TEST(Properties, SignatureBoundedByGenus) {
  RandomKnots gen(15);
  for (int i = 0; i < 40; ++i) {
    const KnotExpression e = gen.expression(2);
    const long s = murasugi_signature(e, cat);
    EXPECT_LE(std::abs(s), 2 * g3_certify(e, cat).upper) << to_string(e);
  }
}

TEST(Properties, AlexanderSymmetricAndNormalized) {
  RandomKnots gen(16);
  for (int i = 0; i < 40; ++i) {
    const KnotExpression e = gen.expression(2);
    const AlexanderPolynomial d = alexander(e, cat);
    EXPECT_EQ(d.at_one(), 1);
    EXPECT_EQ(d, d.inverted());
    EXPECT_EQ(d, alexander_of_matrix(evaluate(e, cat))) << to_string(e);
  }
}

TEST(Properties, PrintedExpressionsRoundTrip) {
  RandomKnots gen(17);
  for (int i = 0; i < 100; ++i) {
    const KnotExpression e = gen.expression(4);
    const KnotExpression back = parse_expression(to_string(e));
    EXPECT_EQ(back, e);
    EXPECT_EQ(evaluate(back, cat), evaluate(e, cat));
  }
}
