#include <gtest/gtest.h>

#include <sstream>

#include "bingbound/bing/covering.hpp"
#include "bingbound/seifert/evaluate.hpp"

using namespace bingbound;

namespace {
ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::Inconsistent;
}
const KnotExpression trefoil = parse_expression("T(2,3)");
}  // namespace

TEST(BingTree, FullTreeShape) {
  EXPECT_EQ(full_tree(0).serialize(), "*");
  EXPECT_EQ(full_tree(1).serialize(), "(* *)");
  EXPECT_EQ(full_tree(2).serialize(), "((* *) (* *))");
  EXPECT_EQ(full_tree(5).leaf_count(), 32u);
  EXPECT_EQ(full_tree(5).depth(), 5u);
  EXPECT_EQ(full_tree(2).cherries(), (std::vector<std::string>{"L", "R"}));
}

TEST(BingTree, ParseSerializeRoundTrip) {
  for (const char* text : {"*", "(* *)", "((* *!) *)", "(*! (* (* *)))", "((* *) (* *))!"}) {
    EXPECT_EQ(BingTree::parse(text).serialize(), text);
  }
  EXPECT_EQ(BingTree::parse("((* *!) *)").mark(), std::optional<std::string>("LR"));
  EXPECT_THROW(BingTree::parse("(* *"), ParseError);
  EXPECT_THROW(BingTree::parse("(*)"), ParseError);
  EXPECT_THROW(BingTree::parse("(*! *!)"), ParseError);
  EXPECT_THROW(BingTree::parse("(* *) x"), ParseError);
}

TEST(BingTree, DigestIsFnv1a) {
  EXPECT_EQ(fnv1a64_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(full_tree(1).digest(), fnv1a64_hex("(* *)"));
  EXPECT_NE(full_tree(2).digest(), full_tree(2).with_mark("L").digest());
}

TEST(BingTree, Locators) {
  const BingTree t = full_tree(2);
  EXPECT_TRUE(t.node_at("LR")->leaf());
  EXPECT_EQ(kind_of([&] { t.node_at("LRL"); }), ErrorKind::BadLocator);
  EXPECT_EQ(kind_of([&] { t.node_at("X"); }), ErrorKind::BadLocator);
}

TEST(CoveringB, PrunesCherryAndMarksLeaf) {
  const BingTree t = apply_covering_B(full_tree(2), "L");
  EXPECT_EQ(t.serialize(), "(*! (* *))");
  EXPECT_EQ(kind_of([&] { apply_covering_B(full_tree(2), ""); }), ErrorKind::NotACherry);
  EXPECT_EQ(kind_of([&] { apply_covering_B(full_tree(2), "LL"); }), ErrorKind::NotACherry);
  EXPECT_EQ(kind_of([&] { apply_covering_B(full_tree(1), ""); }), ErrorKind::WouldTrivialize);
  EXPECT_EQ(kind_of([&] { apply_covering_B(full_tree(2), "Q"); }), ErrorKind::BadLocator);
}

TEST(CoveringA, PromotesSiblingAndDoublesKnot) {
  const auto [t, k] = apply_covering_A(full_tree(1), "L", trefoil);
  EXPECT_EQ(t.serialize(), "*");
  EXPECT_EQ(to_string(k), "T(2,3) # rev(T(2,3))");
  const auto [t2, k2] = apply_covering_A(BingTree::parse("(* (* *))"), "L", k);
  EXPECT_EQ(t2.serialize(), "(* *)");
  EXPECT_EQ(to_string(k2), "2*(T(2,3) # rev(T(2,3)))");
  const auto [t3, k3] = apply_covering_A(t2, "R", k2);
  EXPECT_EQ(to_string(k3), "4*(T(2,3) # rev(T(2,3)))");
  EXPECT_EQ(kind_of([&] { apply_covering_A(full_tree(2), "L", trefoil); }), ErrorKind::NotDepthOneLeaf);
  EXPECT_EQ(kind_of([&] { apply_covering_A(full_tree(1), "LL", trefoil); }), ErrorKind::NotDepthOneLeaf);
  EXPECT_EQ(kind_of([&] { apply_covering_A(full_tree(1), "", trefoil); }), ErrorKind::NotDepthOneLeaf);
}

TEST(Reduction, StepCountsAndCompanion) {
  for (unsigned n = 1; n <= 6; ++n) {
    const Reduction r = reduce_to_companion(n, trefoil);
    EXPECT_TRUE(r.tree.is_single_node());
    EXPECT_EQ(r.trace.count(CoveringRule::B), (1u << n) - n - 1);
    EXPECT_EQ(r.trace.count(CoveringRule::A), n);
    const std::string expected = n == 1 ? "T(2,3) # rev(T(2,3))"
                                        : std::to_string(1u << (n - 1)) + "*(T(2,3) # rev(T(2,3)))";
    EXPECT_EQ(to_string(r.companion), expected);
  }
  EXPECT_EQ(kind_of([] { reduce_to_companion(0, trefoil); }), ErrorKind::DomainError);
}

TEST(Reduction, DepthTwoTrace) {
  const Reduction r = reduce_to_companion(2, trefoil);
  ASSERT_EQ(r.trace.steps.size(), 3u);
  EXPECT_EQ(r.trace.steps[0].rule, CoveringRule::B);
  EXPECT_EQ(r.trace.steps[0].marked, "L");
  EXPECT_EQ(r.trace.steps[0].tree_after, "(*! (* *))");
  EXPECT_EQ(r.trace.steps[1].rule, CoveringRule::A);
  EXPECT_EQ(r.trace.steps[1].tree_after, "(* *)");
  EXPECT_EQ(r.trace.steps[2].tree_after, "*");
}

TEST(Reduction, PartialTree) {
  const Reduction r = reduce_tree(BingTree::parse("((* *) *)"), trefoil);
  EXPECT_TRUE(r.tree.is_single_node());
  EXPECT_EQ(r.trace.count(CoveringRule::B), 1u);
  EXPECT_EQ(r.trace.count(CoveringRule::A), 1u);
}

TEST(Reduction, ReplayAndTamperDetection) {
  const Reduction r = reduce_to_companion(3, trefoil);
  const auto [tree, knot] = replay(r.trace);
  EXPECT_EQ(tree, r.tree);
  EXPECT_EQ(knot, r.companion);

  RewriteTrace bad = r.trace;
  bad.steps[2].digest_after = "0000000000000000";
  EXPECT_EQ(kind_of([&] { replay(bad); }), ErrorKind::TraceMismatch);
  bad = r.trace;
  bad.steps.back().knot_after = "T(2,3)";
  EXPECT_EQ(kind_of([&] { replay(bad); }), ErrorKind::TraceMismatch);
  bad = r.trace;
  bad.steps[0].tree_before = "(* *)";
  EXPECT_EQ(kind_of([&] { replay(bad); }), ErrorKind::TraceMismatch);
}

TEST(Reduction, JsonlRoundTrip) {
  const Reduction r = reduce_to_companion(3, parse_expression("4_1"));
  std::ostringstream out;
  r.trace.write_jsonl(out);
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
  EXPECT_EQ(text.rfind("{\"step\":1,\"rule\":\"B\",\"marked\":\"LL\",", 0), 0u);
  std::istringstream in(text);
  const RewriteTrace back = RewriteTrace::read_jsonl(in, r.trace.initial_tree, r.trace.initial_knot);
  std::ostringstream again;
  back.write_jsonl(again);
  EXPECT_EQ(again.str(), text);
  std::istringstream garbage("{\"rule\":\"C\"}\n");
  EXPECT_EQ(kind_of([&] { RewriteTrace::read_jsonl(garbage, "*", "unknot"); }), ErrorKind::Parse);
}

TEST(Reduction, CompanionIsBlockMultiple) {
  const KnotCatalog cat = KnotCatalog::shipped();
  for (const char* name : {"T(2,3)", "4_1", "twist(-2)"}) {
    const KnotExpression k = parse_expression(name);
    const SeifertMatrix pair = connected_sum(evaluate(k, cat), evaluate(k, cat).reversed());
    SeifertMatrix expected = pair;
    for (int i = 1; i < 4; ++i) expected = connected_sum(expected, pair);
    EXPECT_EQ(evaluate(reduce_to_companion(3, k).companion, cat), expected);
  }
}
