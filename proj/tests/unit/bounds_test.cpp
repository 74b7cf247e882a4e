#include <gtest/gtest.h>

#include "bingbound/bounds/bounds.hpp"

using namespace bingbound;

namespace {
const KnotCatalog cat = KnotCatalog::shipped();
KnotExpression ex(const char* s) { return parse_expression(s); }
}  // namespace

TEST(ConcordanceBound, Examples) {
  EXPECT_EQ(concordance_bound(ex("T(2,3)"), 2, nu_sigma(), cat), Rational(4));
  EXPECT_EQ(concordance_bound(ex("4_1"), 3, nu_sigma(), cat), Rational(0));
  for (unsigned n = 1; n <= 8; ++n)
    EXPECT_EQ(concordance_bound(ex("D(T(2,3))"), n, nu_tau(), cat), Rational(1L << n));
  EXPECT_EQ(concordance_bound(ex("T(2,3)"), 3, nu_sigma_p(1, 6), cat), Rational(4));
  EXPECT_THROW(concordance_bound(ex("T(2,3)"), 0, nu_sigma(), cat), Error);
}

TEST(ConcordanceBound, DoublesWithDepthAndMatchesCompanion) {
  for (const char* name : {"T(2,3)", "T(2,5)", "T(3,4)", "twist(-2)", "4_1"}) {
    for (const auto& nu : {nu_sigma(), nu_sigma_p(1, 3)}) {
      Rational prev = -1;
      for (unsigned n = 1; n <= 4; ++n) {
        const Rational b = concordance_bound(ex(name), n, nu, cat);
        EXPECT_EQ(b, abs_of(nu(reduce_to_companion(n, ex(name)).companion, cat)));
        if (prev >= 0) {
          EXPECT_EQ(b, 2 * prev);
        }
        prev = b;
      }
    }
  }
}

TEST(ConcordanceBound, TauNeedsAtomValues) {
  try {
    concordance_bound(ex("4_1"), 2, nu_tau(), cat);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TauUnknownForAtom);
  }
}

TEST(S3Genus, Examples) {
  const S3Bound a = s3_boundary_genus(ex("4_1"), 3, cat);
  EXPECT_EQ(a.lower, 8);
  EXPECT_EQ(a.upper, 8);
  EXPECT_EQ(a.status, CertificateStatus::Exact);
  const S3Bound b = s3_boundary_genus(ex("T(2,5)"), 1, cat);
  EXPECT_EQ(b.lower, 4);
  EXPECT_EQ(b.upper, 4);
  const S3Bound c = s3_boundary_genus(ex("unknot"), 5, cat);
  EXPECT_EQ(c.lower, 0);
  EXPECT_EQ(c.upper, 0);
  const S3Bound d = s3_boundary_genus(ex("[[0,1],[0,0]]"), 2, cat);
  EXPECT_EQ(d.lower, 0);
  EXPECT_EQ(d.upper, 4);
  EXPECT_EQ(d.status, CertificateStatus::Interval);
}

TEST(S3Genus, SignatureBelowGenusForCatalog) {
  for (const auto& name : KnotCatalog::standard_sample()) {
    if (!cat.resolve(name)->matrix) continue;
    const KnotExpression k = KnotExpression::atom(name);
    EXPECT_LE(concordance_bound(k, 2, nu_sigma(), cat), Rational(s3_boundary_genus(k, 2, cat).upper)) << name;
  }
}

TEST(B4Profile, ShapeAndLimits) {
  const B4Profile p = b4_profile(2);
  EXPECT_EQ(p.genera, (std::vector<long>{1, 0, 0, 0}));
  EXPECT_EQ(p.clasp, 2);
  EXPECT_EQ(b4_profile(3).genera.size(), 8u);
  EXPECT_THROW(b4_profile(0), Error);
  EXPECT_THROW(b4_profile(25), Error);
}

TEST(InfiniteOrder, Examples) {
  EXPECT_EQ(infinite_order_check(ex("T(2,3)"), cat).infinite, std::optional<bool>(true));
  const OrderCheck f = infinite_order_check(ex("4_1"), cat);
  EXPECT_FALSE(f.infinite.has_value());
  EXPECT_EQ(f.notes, std::vector<std::string>{"FigureEightOpenProblem"});
  const OrderCheck u = infinite_order_check(ex("unknot"), cat);
  EXPECT_FALSE(u.infinite.has_value());
  EXPECT_TRUE(u.notes.empty());
  EXPECT_FALSE(infinite_order_check(ex("T(2,3) # mirror(T(2,3))"), cat).infinite.has_value());
  EXPECT_EQ(infinite_order_check(ex("twist(-2)"), cat).infinite, std::optional<bool>(true));
}

TEST(FullReport, TrefoilDepthThree) {
  const GenusBoundReport r = full_report(ex("T(2,3)"), 3, {nu_sigma()}, cat);
  const auto j = to_json(r);
  EXPECT_EQ(j["lower_concordance"], "8/1");
  EXPECT_EQ(j["lower_concordance_int"], "8");
  EXPECT_EQ(j["lower_s3"], "8");
  EXPECT_EQ(j["upper_s3"], "8");
  EXPECT_EQ(j["s3_status"], "Exact");
  EXPECT_EQ(j["b4_profile"]["clasp"], 2);
  EXPECT_EQ(j["b4_profile"]["genera"].size(), 8u);
  EXPECT_EQ(j["infinite_order"], true);
  EXPECT_EQ(j["companion"], "4*(T(2,3) # rev(T(2,3)))");
  EXPECT_EQ(j["trace_digest"].get<std::string>().size(), 16u);
}

TEST(FullReport, TauOnlyKnot) {
  const auto j = to_json(full_report(ex("D(T(2,3))"), 2, {nu_tau(), nu_sigma()}, cat));
  EXPECT_EQ(j["lower_concordance"], "4/1");
  EXPECT_EQ(j["nu_name"], "tau");
  EXPECT_EQ(j["lower_s3"], "Unknown");
  EXPECT_EQ(j["upper_s3"], "Unknown");
  EXPECT_EQ(j["b4_profile"]["genera"].size(), 4u);
  EXPECT_EQ(j["nus"][1]["value"], "Unknown");
  EXPECT_NE(j["nus"][1]["error"].get<std::string>().find("NoMatrixForAtom"), std::string::npos);
}

TEST(FullReport, MaximumOverNus) {
  const auto j = to_json(full_report(ex("T(3,4)"), 1, builtin_nus(), cat));
  // sigma/2 = -3, sigma_{1/3}/2 = -2, tau = 3
  EXPECT_EQ(j["nus"][0]["bound"], "6/1");
  EXPECT_EQ(j["nus"][1]["bound"], "4/1");
  EXPECT_EQ(j["nus"][2]["bound"], "6/1");
  EXPECT_EQ(j["lower_concordance"], "6/1");
  EXPECT_EQ(j["nu_name"], "sigma");
}

TEST(FullReport, UnknotAndFigureEight) {
  const auto u = to_json(full_report(ex("unknot"), 1, {nu_sigma()}, cat));
  EXPECT_EQ(u["lower_concordance"], "0/1");
  EXPECT_EQ(u["lower_s3"], "0");
  EXPECT_EQ(u["infinite_order"], "Unknown");
  const auto f = to_json(full_report(ex("4_1"), 2, {nu_sigma()}, cat));
  EXPECT_EQ(f["notes"][0], "FigureEightOpenProblem");
  EXPECT_EQ(f["infinite_order"], "Unknown");
}
