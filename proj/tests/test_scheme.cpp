#include <gtest/gtest.h>

#include <map>
#include <regex>
#include <sstream>

#include "minus_one/verify.hpp"

using namespace minus_one;

namespace {

const PrecisionContext ctx(50);

void expect_all_pass(const std::vector<CheckResult>& rs) {
  ASSERT_FALSE(rs.empty());
  for (const auto& r : rs) EXPECT_EQ(r.status, Status::pass) << r.id << " | " << r.check << " | " << r.notes;
}

}  // namespace

TEST(Catalog, EdgeCounts) {
  std::map<EdgeKind, int> kinds;
  for (const auto& e : edge_catalog()) ++kinds[e.kind];
  EXPECT_EQ(edge_catalog().size(), 33u);
  EXPECT_EQ(kinds[EdgeKind::q_limit], 7);
  EXPECT_EQ(kinds[EdgeKind::limit], 10);
  EXPECT_EQ(kinds[EdgeKind::specialization], 10);
  EXPECT_EQ(kinds[EdgeKind::christoffel] + kinds[EdgeKind::geronimus], 6);
}

TEST(Catalog, NamedEdges) {
  const SchemeEdge& a = find_edge("cbi:big-minus1-jacobi");
  EXPECT_EQ(a.kind, EdgeKind::limit);
  EXPECT_EQ(a.direction, Direction::to_zero);
  EXPECT_EQ(find_edge("generalized-hermite:hermite").kind, EdgeKind::specialization);
  EXPECT_EQ(find_edge("chihara:generalized-gegenbauer").kind, EdgeKind::specialization);
  EXPECT_THROW(find_edge("hermite:cbi"), UnknownIdError);
  for (const auto& e : edge_catalog()) EXPECT_FALSE(e.anchor.empty()) << e.id();
}

// Limit Relations: every edge at every base point.
TEST(Edges, ExactSpecializations) {
  for (const auto& e : edge_catalog()) {
    if (e.kind == EdgeKind::specialization) expect_all_pass(verify_edge(e, ctx));
  }
}

TEST(Edges, Limits) {
  for (const auto& e : edge_catalog()) {
    if (e.kind == EdgeKind::limit || e.kind == EdgeKind::q_limit) expect_all_pass(verify_edge(e, ctx));
  }
}

TEST(Edges, KernelPairsBothDirections) {
  for (const auto& e : edge_catalog()) {
    if (e.kind != EdgeKind::christoffel && e.kind != EdgeKind::geronimus) continue;
    expect_all_pass(verify_edge(e, ctx));
  }
}

TEST(Edges, KernelRecurrenceMap) {
  for (const auto& e : edge_catalog()) {
    if (e.kind != EdgeKind::christoffel) continue;
    const CheckResult r = verify_kernel_recurrence_map(e, ctx);
    EXPECT_EQ(r.status, Status::pass) << r.id << " " << r.notes;
  }
}

TEST(Limits, GegenbauerToHermiteIsFirstOrder) {
  const SchemeEdge& e = find_edge("gegenbauer:hermite");
  const LimitReport r = limit_ladder(e, edge_base(e, e.base_points.front(), ctx), 6, ctx);
  EXPECT_TRUE(r.monotone);
  EXPECT_NEAR(r.order.to_double(), 1.0, 0.05);
  EXPECT_LE(r.extrapolated.to_double(), 1e-8);
}

TEST(Limits, WrongTargetIsRejected) {
  SchemeEdge e = find_edge("gegenbauer:hermite");
  e.target = FamilyId::generalized_hermite;
  e.target_params = [](const ParameterVector&, const Real&, const PrecisionContext& c) {
    ParameterVector p;
    p.set("alpha", CNum(c.ratio(1, 4)));
    return p;
  };
  const ParameterVector base = edge_base(e, e.base_points.front(), ctx);
  const CheckResult r = judge_limit(e, base, limit_ladder(e, base, 6, ctx), LimitCriteria{});
  EXPECT_EQ(r.status, Status::fail);
}

TEST(Squares, BothPathsAgree) {
  for (const auto& s : commuting_squares()) expect_all_pass(verify_commuting_square(s, ctx));
}

TEST(OpenQuestions, RecordedWithAdoptedResolution) {
  const auto rs = open_questions(ctx);
  ASSERT_EQ(rs.size(), 4u);
  expect_all_pass(rs);
  for (const auto& r : rs) EXPECT_NE(r.notes.find("adopted"), std::string::npos) << r.check;
}

TEST(Export, DotHasFifteenNodes) {
  const std::string dot = export_dot();
  const std::regex node(R"(^\s*"[a-z0-9-]+" \[label=)");
  int nodes = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) nodes += std::regex_search(line, node) ? 1 : 0;
  EXPECT_EQ(nodes, 15);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
}

TEST(Export, JsonEdgesMatchCatalog) {
  const auto j = export_json();
  EXPECT_EQ(j["edges"].size(), edge_catalog().size());
  for (const auto& e : j["edges"]) EXPECT_TRUE(e.contains("anchor"));
}
