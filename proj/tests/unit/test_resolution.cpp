#include <gtest/gtest.h>

#include <numeric>

#include "arrfiber/hjcf.hpp"
#include "arrfiber/resolution.hpp"
#include "test_util.hpp"

using namespace arrfiber;

TEST(WeightData, Examples) {
  const WeightData a = weight_data(4, 12);
  EXPECT_EQ(a.g, 4);
  EXPECT_EQ(a.w1, 3);
  EXPECT_EQ(a.w2, 3);
  EXPECT_EQ(a.w3, 1);
  EXPECT_EQ(a.N, 12);
  EXPECT_EQ(a.alpha, 3);
  EXPECT_EQ(a.bprime, 1);
  EXPECT_EQ(a.beta, 2);
  EXPECT_EQ(a.b, 4);
  EXPECT_EQ(a.genus0, 3);

  const WeightData b = weight_data(3, 5);
  EXPECT_EQ(b.g, 1);
  EXPECT_EQ(b.alpha, 5);
  EXPECT_EQ(b.bprime, 3);
  EXPECT_EQ(b.beta, 3);
  EXPECT_EQ(b.b, 2);
  EXPECT_EQ(b.genus0, 0);

  const WeightData c = weight_data(2, 7);
  EXPECT_EQ(c.beta, 3);
  EXPECT_EQ(c.b, 1);
  EXPECT_EQ(c.genus0, 0);

  EXPECT_ERROR_KIND(weight_data(1, 5), BadMultiplicity);
  EXPECT_ERROR_KIND(weight_data(6, 5), BadMultiplicity);
}

TEST(WeightData, GenusFormulaIdentity) {
  for (std::int64_t r = 2; r <= 60; ++r) {
    for (std::int64_t d = r; d <= 60; ++d) {
      const WeightData w = weight_data(r, d);
      ASSERT_EQ(std::gcd(std::gcd(w.w1, w.w2), w.w3), 1);
      mpq_class closed(mpz_class((r - 2) * (std::gcd(r, d) - 1)), 2);
      closed.canonicalize();
      ASSERT_EQ(genus_from_weights(w), closed) << r << " " << d;
      ASSERT_EQ(w.genus0, closed);
      ASSERT_GT(w.b, 0);
    }
  }
}

TEST(WeightData, CentralMinusOneCurveExactlyWhenDIsOneModR) {
  for (std::int64_t r = 3; r <= 60; ++r) {
    for (std::int64_t d = r; d <= 60; ++d) {
      const WeightData w = weight_data(r, d);
      ASSERT_EQ(w.genus0 == 0 && w.b == 1, d % r == 1) << r << " " << d;
    }
  }
}

TEST(Graph, Examples) {
  const ResolutionGraph star = build_resolution_graph(3, 5);
  EXPECT_EQ(star.shape(), GraphShape::Star);
  EXPECT_EQ(star.central_weight(), 2);
  EXPECT_EQ(star.central_genus(), 0);
  EXPECT_EQ(star.arm_count(), 3u);
  EXPECT_EQ(star.arm_weights(), (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(star.vertex_count(), 7u);
  EXPECT_TRUE(star.minimal());

  const ResolutionGraph blown = build_resolution_graph(3, 7);
  EXPECT_EQ(blown.shape(), GraphShape::BlownDownStar);
  EXPECT_EQ(blown.arm_weights(), (std::vector<std::int64_t>{3, 2}));
  EXPECT_EQ(blown.vertex_count(), 6u);
  EXPECT_FALSE(blown.has_central());

  const ResolutionGraph chain = build_resolution_graph(2, 5);
  EXPECT_EQ(chain.shape(), GraphShape::Chain);
  EXPECT_EQ(chain.vertex_count(), 4u);
  for (const auto& v : chain.vertices()) EXPECT_EQ(v.weight, 2);

  EXPECT_ERROR_KIND(build_resolution_graph(5, 4), BadMultiplicity);
}

TEST(Graph, ShapesAndCountsOverSweep) {
  for (std::int64_t r = 2; r <= 30; ++r) {
    for (std::int64_t d = r; d <= 90; ++d) {
      const ResolutionGraph g = build_resolution_graph(r, d);
      std::size_t expected = 0;
      if (r == 2) {
        ASSERT_EQ(g.shape(), GraphShape::Chain);
        expected = static_cast<std::size_t>(d - 1);
      } else if (d % r == 1) {
        ASSERT_EQ(g.shape(), GraphShape::BlownDownStar);
        ASSERT_EQ(g.arm_weights().front(), r);
        expected = static_cast<std::size_t>(r) * g.lambda();
      } else {
        ASSERT_EQ(g.shape(), GraphShape::Star);
        const WeightData w = weight_data(r, d);
        ASSERT_EQ(g.arm_weights(), hj_expand(w.alpha, w.beta).terms);
        expected = 1 + static_cast<std::size_t>(r) * g.lambda();
      }
      ASSERT_EQ(g.vertex_count(), expected);
      for (const auto& v : g.vertices()) {
        if (v.label != "c") ASSERT_GE(v.weight, 2);
      }
    }
  }
}

TEST(IntersectionMatrix, Chain) {
  const auto m = intersection_matrix(build_resolution_graph(2, 4));
  EXPECT_EQ(m, IntersectionMatrix::from_rows({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}));
}

TEST(IntersectionMatrix, Star35) {
  const auto m = intersection_matrix(build_resolution_graph(3, 5));
  ASSERT_EQ(m.size(), 7u);
  const std::vector<std::int64_t> diag{-2, -2, -3, -2, -3, -2, -3};
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(m(i, i), diag[i]);
  for (std::size_t j = 1; j < 7; ++j) EXPECT_EQ(m(0, j), j % 2 == 1 ? 1 : 0) << j;
  EXPECT_EQ(m(1, 2), 1);
  EXPECT_EQ(m(2, 3), 0);
}

TEST(IntersectionMatrix, BlownDown37) {
  const auto m = intersection_matrix(build_resolution_graph(3, 7));
  ASSERT_EQ(m.size(), 6u);
  const std::vector<std::int64_t> diag{-3, -2, -3, -2, -3, -2};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(m(i, i), diag[i]);
  EXPECT_EQ(m(0, 2), 1);
  EXPECT_EQ(m(0, 4), 1);
  EXPECT_EQ(m(2, 4), 1);
  EXPECT_EQ(m(0, 1), 1);
  EXPECT_EQ(m(1, 3), 0);
  // E_1 = sum of the roots: E_1^2 = 3 (-3) + 6 = -3 = -r.
  std::int64_t e1sq = 0;
  for (std::size_t i : {0, 2, 4})
    for (std::size_t j : {0, 2, 4}) e1sq += m(i, j);
  EXPECT_EQ(e1sq, -3);
}

TEST(IntersectionMatrix, BlowDownRootSquareIsMinusR) {
  for (std::int64_t r = 3; r <= 12; ++r) {
    for (std::int64_t d = r + 1; d <= 90; d += r) {
      const ResolutionGraph g = build_resolution_graph(r, d);
      const auto m = intersection_matrix(g);
      std::int64_t e1sq = 0;
      for (std::size_t a = 0; a < g.arm_count(); ++a)
        for (std::size_t b = 0; b < g.arm_count(); ++b) e1sq += m(g.arm_vertex(a, 0), g.arm_vertex(b, 0));
      ASSERT_EQ(e1sq, -r) << r << " " << d;
      // One common point through all the roots.
      std::size_t common = 0;
      for (const auto& p : g.meeting_points()) common += p.size() == static_cast<std::size_t>(r);
      ASSERT_EQ(common, 1u);
    }
  }
}

TEST(IntersectionMatrix, ShapeInvariants) {
  for (std::int64_t r = 2; r <= 12; ++r) {
    for (std::int64_t d = r; d <= 40; ++d) {
      const auto m = intersection_matrix(build_resolution_graph(r, d));
      ASSERT_TRUE(m.symmetric());
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          if (i == j) continue;
          ASSERT_TRUE(m(i, j) == 0 || m(i, j) == 1);
        }
      }
    }
  }
}

TEST(NegativeDefinite, Examples) {
  EXPECT_TRUE(check_negative_definite(IntersectionMatrix::from_rows({{-2, 1}, {1, -2}})));
  EXPECT_FALSE(check_negative_definite(IntersectionMatrix::from_rows({{0}})));
  EXPECT_FALSE(check_negative_definite(IntersectionMatrix::from_rows({{-1, 2}, {2, -1}})));
  EXPECT_TRUE(check_negative_definite(intersection_matrix(build_resolution_graph(3, 5))));
  EXPECT_ERROR_KIND(check_negative_definite(IntersectionMatrix::from_rows({{-2, 1}, {0, -2}})), NotSymmetric);
  EXPECT_ERROR_KIND(IntersectionMatrix::from_rows({{-2, 1}, {0}}), BadParameter);
}

TEST(NegativeDefinite, AllGraphsUpTo60) {
  for (std::int64_t r = 2; r <= 60; ++r) {
    for (std::int64_t d = r; d <= 60; ++d) {
      ASSERT_TRUE(check_negative_definite(intersection_matrix(build_resolution_graph(r, d)))) << r << " " << d;
    }
  }
}

TEST(Dot, Star35) {
  const std::string dot = to_dot(build_resolution_graph(3, 5));
  EXPECT_EQ(dot.rfind("graph resolution_r3_d5 {", 0), 0u);
  EXPECT_NE(dot.find("c [label=\"w=2 g=0\"]"), std::string::npos) << dot;
  EXPECT_NE(dot.find("a1_2 [label=\"w=3\"]"), std::string::npos) << dot;
  EXPECT_NE(dot.find("c -- a1_1"), std::string::npos);
  EXPECT_NE(dot.find("a3_1 -- a3_2"), std::string::npos);
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  EXPECT_EQ(nodes, 7u);
  EXPECT_EQ(dot, to_dot(build_resolution_graph(3, 5)));
}
