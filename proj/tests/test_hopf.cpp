#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace wittlang;
using testing_support::make_elem;

namespace {

FieldPtr f2() { return gf::make_field(2); }

HopfMonomial x(int n, int d, int i, int j, int lambda) { return HopfMonomial::generator(n, d, {i, j, lambda}); }

TensorPoly tensor(const FieldPtr& f, std::initializer_list<std::pair<HopfMonomial, HopfMonomial>> terms) {
  TensorPoly t(f);
  for (const auto& [l, r] : terms) t.add_term({l, r}, f->one());
  return t;
}

// Evaluation of comult(X_{ij lambda}) on (a, b) straight from the convolution
// sum, with X_{..0} = delta.
Coeffs convolution_value(const TruncElem& a, const TruncElem& b, const Generator& g) {
  const gf::Field& f = *a.field();
  auto entry = [&](const TruncElem& m, int i, int j, int lambda) {
    if (lambda == 0) return i == j ? f.one() : f.zero();
    return m.entry(lambda, i - 1, j - 1);
  };
  Coeffs acc = f.zero();
  for (int l = 1; l <= a.n(); ++l)
    for (int nu = 0; nu <= g.lambda; ++nu) acc = f.add(acc, f.mul(entry(a, g.i, l, nu), entry(b, l, g.j, g.lambda - nu)));
  return acc;
}

}  // namespace

TEST(Comult, PrimitiveAtLevelOne) {
  const auto f = f2();
  for (const auto& g : all_generators(2, 1)) {
    const auto m = HopfMonomial::generator(2, 1, g);
    EXPECT_EQ(comult(f, 2, 1, g), tensor(f, {{m, HopfMonomial::unit(2, 1)}, {HopfMonomial::unit(2, 1), m}}));
  }
}

TEST(Comult, X112AtN1) {
  const auto f = f2();
  const auto one = HopfMonomial::unit(1, 2);
  const auto expected = tensor(f, {{x(1, 2, 1, 1, 2), one}, {one, x(1, 2, 1, 1, 2)}, {x(1, 2, 1, 1, 1), x(1, 2, 1, 1, 1)}});
  EXPECT_EQ(comult(f, 1, 2, {1, 1, 2}), expected);
}

TEST(Comult, X122AtN2) {
  const auto f = f2();
  const auto one = HopfMonomial::unit(2, 2);
  const auto expected = tensor(f, {{x(2, 2, 1, 2, 2), one},
                                   {one, x(2, 2, 1, 2, 2)},
                                   {x(2, 2, 1, 1, 1), x(2, 2, 1, 2, 1)},
                                   {x(2, 2, 1, 2, 1), x(2, 2, 2, 2, 1)}});
  EXPECT_EQ(comult(f, 2, 2, {1, 2, 2}), expected);
}

TEST(Comult, OutOfRangeIsDomainError) {
  EXPECT_THROW(comult(f2(), 2, 2, {3, 1, 1}), DomainError);
  EXPECT_THROW(comult(f2(), 2, 2, {1, 1, 0}), DomainError);
  EXPECT_THROW(comult(f2(), 2, 2, {1, 1, 3}), DomainError);
}

TEST(Counit, Examples) {
  const auto f = f2();
  EXPECT_EQ(counit(*f, HopfMonomial::unit(1, 1)), f->one());
  EXPECT_EQ(counit(*f, x(1, 1, 1, 1, 1)), f->zero());
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      EXPECT_EQ(counit_left(comult(f, 2, 2, {i, j, 2})), as_poly(f, x(2, 2, i, j, 2)));
}

TEST(Evaluate, Examples) {
  const auto f = f2();
  EXPECT_EQ(evaluate(x(2, 1, 1, 2, 1), make_elem(f, {{{0, 1}, {0, 0}}})).value(), f->one());
  EXPECT_EQ(evaluate(x(2, 1, 1, 1, 1) * x(2, 1, 2, 2, 1), make_elem(f, {{{1, 0}, {0, 1}}})).value(), f->one());
  auto f3 = gf::make_field(3);
  const auto one_plus_s = make_elem(f3, {{{1}}, {{0}}});
  EXPECT_EQ(evaluate(x(1, 2, 1, 1, 2), lmul(one_plus_s, one_plus_s)).value(), f3->one());
  EXPECT_THROW(evaluate(x(1, 2, 1, 1, 2), TruncElem::identity(f3, 1, 1)), SpecError);
}

TEST(Evaluate, MultiplicativeInMonomial) {
  auto f9 = gf::make_field(3, 2);
  std::mt19937_64 rng(17);
  const auto gens = all_generators(2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_element(f9, 2, 2, rng);
    const auto m1 = HopfMonomial::generator(2, 2, gens[pick(rng)]) * HopfMonomial::generator(2, 2, gens[pick(rng)]);
    const auto m2 = HopfMonomial::generator(2, 2, gens[pick(rng)]);
    EXPECT_EQ(evaluate(m1 * m2, a), evaluate(m1, a) * evaluate(m2, a));
  }
}

TEST(Pairing, IdentityRightFactor) {
  std::mt19937_64 rng(2);
  const auto f = gf::make_field(5);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_element(f, 2, 3, rng);
    for (const auto& g : all_generators(2, 3)) EXPECT_TRUE(pairing_check(g, a, TruncElem::identity(f, 2, 3)));
  }
}

TEST(Pairing, X111OnL11F2) {
  const auto elems = enumerate_group(f2(), 1, 1);
  for (const auto& a : elems)
    for (const auto& b : elems) EXPECT_TRUE(pairing_check({1, 1, 1}, a, b));
}

TEST(Pairing, TensorEvaluationMatchesConvolutionSum) {
  std::mt19937_64 rng(21);
  const auto f = gf::make_field(3, 2);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_element(f, 2, 3, rng);
    const auto b = random_element(f, 2, 3, rng);
    for (const auto& g : all_generators(2, 3)) {
      ASSERT_EQ(evaluate_tensor(comult(f, 2, 3, g), a, b), convolution_value(a, b, g));
      ASSERT_EQ(evaluate_raw(HopfMonomial::generator(2, 3, g), testing_support::oracle_mul(a, b)),
                convolution_value(a, b, g));
    }
  }
}

TEST(Antipode, Examples) {
  const auto f = f2();
  EXPECT_EQ(antipode_eval(x(1, 1, 1, 1, 1), make_elem(f, {{{1}}})).value(), f->one());
  auto f7 = gf::make_field(7);
  for (int a = 0; a < 7; ++a) {
    EXPECT_EQ(antipode_eval(x(1, 2, 1, 1, 2), make_elem(f7, {{{a}}, {{0}}})).value(), f7->from_int(a * a));
  }
}

TEST(Antipode, IdentityOnL12F2) {
  for (const auto& a : enumerate_group(f2(), 1, 2)) {
    for (const auto& g : all_generators(1, 2)) EXPECT_TRUE(antipode_check(HopfMonomial::generator(1, 2, g), a));
    EXPECT_TRUE(antipode_check(HopfMonomial::unit(1, 2), a));
    EXPECT_TRUE(antipode_check(x(1, 2, 1, 1, 1) * x(1, 2, 1, 1, 2), a));
  }
}

TEST(HopfLaws, CoassociativityAndCounitSmallShapes) {
  const auto f = gf::make_field(3);
  for (int n = 1; n <= 2; ++n)
    for (int d = 1; d <= 3; ++d)
      for (const auto& g : all_generators(n, d)) {
        EXPECT_TRUE(coassociative(f, n, d, g));
        EXPECT_TRUE(counit_law(f, n, d, g));
      }
}

TEST(HopfLaws, CoassociativityOnProducts) {
  const auto f = f2();
  const auto m = x(2, 2, 1, 2, 1) * x(2, 2, 2, 1, 2);
  const auto t = comult(f, m);
  EXPECT_EQ(comult_left(t), comult_right(t));
}

TEST(TensorPolyTest, ZeroCoefficientsCancel) {
  const auto f = f2();
  TensorPoly t(f);
  const auto m = x(1, 1, 1, 1, 1);
  t.add_term({m, m}, f->one());
  t.add_term({m, m}, f->one());
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(t.to_string(), "0");
}
