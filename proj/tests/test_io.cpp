#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "wittlang/io.hpp"

using namespace wittlang;
using io::json;
using testing_support::make_elem;

TEST(IoField, SpecRoundTrip) {
  const auto spec = gf::make_field_spec(3, 4);
  EXPECT_EQ(io::field_spec_from_json(io::to_json(spec)), spec);
  EXPECT_EQ(io::to_json(gf::FieldSpec{2, 2, {1, 1, 1}}), json::parse(R"({"p":2,"r":2,"modulus":[1,1,1]})"));
}

TEST(IoField, SpecRejectsReducibleAndMalformed) {
  EXPECT_THROW(io::field_spec_from_json(json::parse(R"({"p":2,"r":2,"modulus":[1,0,1]})")), DomainError);
  EXPECT_THROW(io::field_spec_from_json(json::parse(R"({"p":2})")), SpecError);
}

TEST(IoField, ElemRoundTrip) {
  const auto f = gf::make_field(5, 2);
  for (std::uint64_t i = 0; i < f->size(); ++i) {
    const gf::FieldElem a{f, f->to_vector(f->element(i))};
    EXPECT_EQ(io::field_elem_from_json(io::to_json(a), f), a);
  }
  EXPECT_THROW(io::field_elem_from_json(json::parse(R"({"coeffs":[1,2,3]})"), f), SpecError);
}

TEST(IoField, PackUnpack) {
  const auto f = gf::make_field(3, 2);
  for (std::uint64_t i = 0; i < f->size(); ++i) {
    const Coeffs c = f->element(i);
    EXPECT_EQ(io::unpack(*f, io::pack(*f, c)), c);
    EXPECT_EQ(io::unpack(*f, f->to_vector(c)), c);
  }
  EXPECT_EQ(io::pack(*f, f->from_vector(std::vector<int>{2, 1})), 5);
  EXPECT_THROW(io::unpack(*f, 9), SpecError);
  EXPECT_THROW(io::unpack(*f, -1), SpecError);
}

TEST(IoElem, TruncRoundTrip) {
  std::mt19937_64 rng(4);
  for (auto [p, r, n, d] : std::vector<std::tuple<int, int, int, int>>{{2, 1, 2, 2}, {3, 2, 3, 2}, {2, 4, 1, 5}}) {
    const auto f = gf::make_field(p, r);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_element(f, n, d, rng);
      const auto back = io::trunc_elem_from_json(json::parse(io::to_json(a).dump()));
      EXPECT_EQ(back, a);
    }
  }
}

TEST(IoElem, TruncAcceptsListEntries) {
  const auto j = json::parse(R"({"n":1,"d":2,"field":{"p":2,"r":2,"modulus":[1,1,1]},"coeffs":[[[[0,1]]],[[3]]]})");
  const auto a = io::trunc_elem_from_json(j);
  const auto& f = *a.field();
  EXPECT_EQ(a.entry(1, 0, 0), f.generator());
  EXPECT_EQ(a.entry(2, 0, 0), f.add(f.one(), f.generator()));
}

TEST(IoElem, TruncRejectsBadShapes) {
  const std::string field = R"("field":{"p":2,"r":1,"modulus":[1,1]})";
  EXPECT_THROW(io::trunc_elem_from_json(json::parse(R"({"n":2,"d":1,)" + field + R"(,"coeffs":[[[1,0]]]})")),
               SpecError);
  EXPECT_THROW(io::trunc_elem_from_json(json::parse(R"({"n":1,"d":2,)" + field + R"(,"coeffs":[[[1]]]})")), SpecError);
  EXPECT_THROW(io::trunc_elem_from_json(json::parse(R"({"n":1,"d":1,)" + field + R"(,"coeffs":[[[2]]]})")), SpecError);
  EXPECT_THROW(io::trunc_elem_from_json(json::parse(R"({"n":0,"d":1,)" + field + R"(,"coeffs":[[]]})")), DomainError);
}

TEST(IoElem, PuncturedRoundTrip) {
  const auto f = gf::make_field(2);
  const PuncturedElem a{-3, make_elem(f, {{{1}}, {{0}}})};
  const auto j = io::to_json(a);
  EXPECT_EQ(j.at("nu"), -3);
  EXPECT_EQ(io::punctured_elem_from_json(j), a);
}

TEST(IoHopf, TensorRoundTrip) {
  const auto f = gf::make_field(3);
  for (int n = 1; n <= 2; ++n)
    for (int d = 1; d <= 3; ++d)
      for (const auto& g : all_generators(n, d)) {
        const auto t = comult(f, n, d, g);
        EXPECT_EQ(io::tensor_from_json(json::parse(io::to_json(t).dump()), f, n, d), t);
      }
}

TEST(IoHopf, MonomialRejectsBadGenerator) {
  EXPECT_THROW(io::monomial_from_json(json::parse("[[1,1]]"), 1, 1), SpecError);
  EXPECT_THROW(io::monomial_from_json(json::parse("[[2,1,1]]"), 1, 1), DomainError);
}

TEST(IoReports, TargetAndTheta) {
  const auto t = build_s3_f2();
  const auto jt = io::to_json(t);
  EXPECT_EQ(jt.at("n"), 3);
  EXPECT_EQ(jt.at("deltas").size(), 3u);
  EXPECT_EQ(jt.at("basis").size(), 9u);
  const auto img = theta_image(t, 1, parse_order(t, {"23", "12", "13"}));
  const auto ji = io::to_json(t, img);
  EXPECT_EQ(ji.at("order"), json::parse("[2,1,3]"));
  EXPECT_EQ(ji.at("order_names"), json::parse(R"(["23","12","13"])"));
  EXPECT_EQ(ji.at("image_size"), 6);
  EXPECT_EQ(ji.at("image").size(), 6u);
}

TEST(IoReports, SubgroupAndSignature) {
  const auto s3 = symmetric_group(3);
  const auto j = io::to_json(s3, whole_group(s3));
  EXPECT_EQ(j.at("order"), 6);
  EXPECT_TRUE(j.at("normal").get<bool>());
  const auto sig = io::to_json(signature(s3, whole_group(s3)));
  EXPECT_EQ(sig.at("element_orders"), json::parse(R"({"1":1,"2":3,"3":2})"));
}

TEST(IoReports, LangReport) {
  const auto f = gf::make_field(2, 2);
  const auto ctx = make_lang_context(f, 2, 1, 1);
  const auto j = io::lang_report(lang_fibers(ctx), lang_kernel(ctx));
  EXPECT_EQ(j.at("kernel_size"), 2);
  EXPECT_EQ(j.at("fiber_count"), 2);
  EXPECT_EQ(j.at("group_size"), 4);
  EXPECT_EQ(j.at("elements").size(), 2u);
  EXPECT_EQ(io::trunc_elem_from_json(j.at("elements")[1]), lang_kernel(ctx)[1]);
}

TEST(IoReports, FiltrationCsvAndJson) {
  const auto rows = match_filtrations(2, 3);
  EXPECT_EQ(io::to_csv(rows), "D,as_count,witt_count,equal\n1,1,1,true\n2,1,1,true\n3,3,3,true\n");
  const auto j = io::to_json(rows);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[2], json::parse(R"({"D":3,"as_count":3,"witt_count":3,"equal":true})"));
}
