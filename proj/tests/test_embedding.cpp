#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "quintet/elliptic_embedding.hpp"

using namespace quintet::elliptic;

TEST_CASE("cubic root and half-period") {
  double e0 = real_root();
  REQUIRE(curve_rhs(e0) == Catch::Approx(0.0).margin(1e-14));
  REQUIRE(e0 == Catch::Approx(-1.3247179572447460).epsilon(1e-12));

  auto emb = embed_real(2, 1e-9);
  REQUIRE(emb.half_period > 0);
  REQUIRE(emb.half_period == Catch::Approx(4.7070877612).epsilon(1e-8));
}

TEST_CASE("parameter zero is the point at infinity, half the two-torsion point") {
  auto emb = embed_real(2, 1e-9);
  REQUIRE(emb.points[0].at_infinity);
  // residue 7 of 14 is the order-2 point (e0, 0)
  REQUIRE(emb.points[7].x == Catch::Approx(emb.e0).epsilon(1e-10));
  REQUIRE(emb.points[7].y == Catch::Approx(0.0).margin(1e-7));
}

TEST_CASE("negation is reflection across the x-axis") {
  for (long long m : {2LL, 5LL, 15LL}) {
    auto emb = embed_real(m, 1e-9);
    for (long long t = 1; t < emb.order; ++t) {
      const auto& p = emb.points[static_cast<std::size_t>(t)];
      const auto& q = emb.points[static_cast<std::size_t>(emb.order - t)];
      REQUIRE(p.x == Catch::Approx(q.x).margin(1e-12));
      REQUIRE(p.y == Catch::Approx(-q.y).margin(1e-12));
    }
  }
}

TEST_CASE("mapped points satisfy the curve equation") {
  auto emb = embed_real(2, 1e-9);
  for (long long t = 1; t < emb.order; ++t) {
    const auto& p = emb.points[static_cast<std::size_t>(t)];
    double scale = std::max(1.0, std::abs(p.x * p.x * p.x));
    REQUIRE(std::abs(p.y * p.y - curve_rhs(p.x)) / scale < 10 * emb.quadrature_tolerance);
  }
}

TEST_CASE("embedding preconditions") {
  REQUIRE_THROWS_AS(embed_real(0, 1e-9), std::invalid_argument);
  REQUIRE_THROWS_AS(embed_real(16, 1e-9), std::invalid_argument);  // 7m = 112 > 105
  REQUIRE_THROWS_AS(embed_real(2, 0.0), std::invalid_argument);
}

TEST_CASE("collinearity matches the index sum") {
  auto emb = embed_real(2, 1e-9);

  // indices 1 + 2 + 11 = 14 ≡ 0: a genuine line
  auto yes = collinearity_check(emb, 1, 2, 11);
  REQUIRE(yes.collinear);
  REQUIRE(std::abs(yes.det) < collinear_det_threshold);

  // 1 + 2 + 3 = 6 not divisible by 14
  auto no = collinearity_check(emb, 1, 2, 3);
  REQUIRE_FALSE(no.collinear);
  REQUIRE(std::abs(no.det) > separation_det_margin);

  REQUIRE_THROWS_AS(collinearity_check(emb, 1, 1, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(collinearity_check(emb, 0, 1, 2), std::invalid_argument);
}

TEST_CASE("vertical lines through the identity pair mirrored residues") {
  auto emb = embed_real(3, 1e-9);
  REQUIRE(vertical_pair_check(emb, 4, 17));        // 4 + 17 = 21 ≡ 0
  REQUIRE_FALSE(vertical_pair_check(emb, 4, 16));  // 4 + 16 = 20
}

TEST_CASE("full scans agree with the group predicate and find no four on a line") {
  for (long long m = 1; m <= 6; ++m) {
    auto emb = embed_real(m, 1e-9);
    auto scan = scan_geometry(emb);
    REQUIRE(scan.mismatches == 0);
    REQUIRE_FALSE(scan.four_collinear_found);
    REQUIRE(scan.gap_ok);
    REQUIRE(scan.gap_ratio >= 1e3);
    long long n = emb.order;
    REQUIRE(scan.triples_checked == (n - 1) * (n - 2) * (n - 3) / 6);
  }
}
