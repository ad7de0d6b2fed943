#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <set>
#include <vector>

#include "quintet/fewnomial.hpp"

using namespace quintet::fewnomial;

namespace {

// Independent interpolation oracle: expand the Lagrange basis polynomial
// through the nodes for q(x) = x^k and read off the x^{s-1} coefficient.
// Exact rational polynomial arithmetic throughout.
Rational top_coefficient_of_interpolant(const std::vector<Rational>& nodes, int k) {
  int s = static_cast<int>(nodes.size());
  Rational top = 0;
  for (int j = 0; j < s; ++j) {
    // numerator polynomial prod_{l != j} (x - alpha_l), coefficients low-to-high
    std::vector<Rational> poly{1};
    Rational denom = 1;
    for (int l = 0; l < s; ++l) {
      if (l == j) continue;
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] -= nodes[l] * poly[i];
      }
      poly = next;
      denom *= nodes[j] - nodes[l];
    }
    top += rational_pow(nodes[j], k) * poly.back() / denom;
  }
  return top;
}

}  // namespace

TEST_CASE("spec layout") {
  auto spec = make_spec(2, 20);
  REQUIRE(spec.s == 4);
  REQUIRE(spec.exponents == std::vector<BigInt>{0, 1, 20, 400});
  REQUIRE(spec.lambda.front() == 0);
  REQUIRE(spec.lambda.back() == 1);
  for (int j = 1; j < spec.s; ++j) REQUIRE(spec.lambda[j - 1] < spec.lambda[j]);

  auto tiny = make_spec(1, 2);
  REQUIRE(tiny.s == 3);
  REQUIRE(tiny.d == 2);

  REQUIRE_THROWS_AS(make_spec(0, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(make_spec(1, 1), std::invalid_argument);
}

TEST_CASE("alternating weight sums: two-point case") {
  std::vector<Rational> nodes{Rational(0), Rational(1)};
  REQUIRE(vandermonde_sum(nodes, 0) == 0);
  REQUIRE(vandermonde_sum(nodes, 1) == 1);
}

TEST_CASE("alternating weight sums at the f_{2,20} nodes") {
  std::vector<Rational> nodes{Rational(0), Rational(1, 400), Rational(1, 20), Rational(1)};
  REQUIRE(vandermonde_sum(nodes, 0) == 0);
  REQUIRE(vandermonde_sum(nodes, 1) == 0);
  REQUIRE(vandermonde_sum(nodes, 2) == 0);
  REQUIRE(vandermonde_sum(nodes, 3) == 1);
  REQUIRE_THROWS_AS(vandermonde_sum({Rational(1), Rational(1)}, 0), std::invalid_argument);
}

TEST_CASE("alternating weight sums match the interpolation oracle on random nodes") {
  std::uint64_t state = 2024;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (int trial = 0; trial < 50; ++trial) {
    int s = 2 + static_cast<int>(next() % 7);  // up to 8 nodes
    std::set<Rational> uniq;
    while (static_cast<int>(uniq.size()) < s) {
      long long num = static_cast<long long>(next() % 2000) - 1000;
      long long den = 1 + static_cast<long long>(next() % 60);
      uniq.insert(Rational(num, den));
    }
    std::vector<Rational> nodes(uniq.begin(), uniq.end());
    for (int k = 0; k < s; ++k) {
      Rational expected = top_coefficient_of_interpolant(nodes, k);
      REQUIRE(vandermonde_sum(nodes, k) == expected);
      if (k < s - 1) REQUIRE(expected == 0);
    }
    REQUIRE(vandermonde_sum(nodes, s - 1) == 1);
  }
}

TEST_CASE("reference instance N=2 K=20") {
  auto inst = build_instance(2, 20, 256);
  REQUIRE(inst.spec.s == 4);

  double c[4];
  for (int j = 0; j < 4; ++j) c[j] = static_cast<double>(inst.coeff[j]);
  REQUIRE(c[0] == Catch::Approx(-8000.0).epsilon(1e-9));
  REQUIRE(c[1] == Catch::Approx(8647.7946547).epsilon(1e-9));
  REQUIRE(c[2] == Catch::Approx(-717.2170502).epsilon(1e-8));
  REQUIRE(c[3] == Catch::Approx(16000.0).epsilon(1e-9));

  REQUIRE(static_cast<double>(inst.x0) == Catch::Approx(0.9762209).margin(1e-6));

  auto h = height_M(inst);
  REQUIRE(static_cast<double>(h.M) == Catch::Approx(2.9491).margin(1e-3));
}

TEST_CASE("endpoint coefficients") {
  for (int N : {1, 2, 3}) {
    for (long long K : {5, 10, 50}) {
      auto inst = build_instance(N, K);
      PrecisionScope scope(inst.precision_bits);
      BigFloat inv = 1 / BigFloat(inst.weights.delta.front());
      BigFloat first = (inst.spec.s - 1) % 2 == 1 ? -inv : inv;
      REQUIRE(static_cast<double>(abs(inst.coeff.front() - first) / abs(first)) < 1e-30);
      REQUIRE(static_cast<double>(abs(inst.coeff.back() - 2 * inv) / (2 * inv)) < 1e-30);
      REQUIRE(inst.spec.s == N + 2);
    }
  }
}

TEST_CASE("precision guard") {
  REQUIRE_THROWS_AS(build_instance(2, 20, 64), std::invalid_argument);
  REQUIRE_THROWS_AS(build_instance(16, 1024, 200), quintet::NeedsMorePrecision);
}

TEST_CASE("exact derivative identities and numeric residuals") {
  for (int N : {1, 2, 3, 4}) {
    auto inst = build_instance(N, 20);
    for (int k = 0; k <= N; ++k) {
      REQUIRE(derivative_exact(inst.spec, k) == 0);
      REQUIRE(static_cast<double>(derivative_residual(inst, k)) < 1e-20);
    }
    REQUIRE(derivative_exact(inst.spec, N + 1) == 1);
    REQUIRE(static_cast<double>(derivative_residual(inst, N + 1)) > 1e-3);
  }
}

TEST_CASE("printed digits survive a double-precision rebuild") {
  REQUIRE(certify_digits(build_instance(2, 20), 40));
  REQUIRE(certify_digits(build_instance(3, 50), 40));
}

TEST_CASE("doubling the precision collapses the residual") {
  auto lo = build_instance(2, 20, 256);
  auto hi = build_instance(2, 20, 512);
  double r_lo = static_cast<double>(derivative_residual(lo, 2));
  double r_hi = static_cast<double>(derivative_residual(hi, 2));
  REQUIRE(r_lo < 1e-20);
  // shrink factor of at least 2^{bits/2}
  REQUIRE(r_hi <= r_lo * std::ldexp(1.0, -128));
}

TEST_CASE("height trend toward 2 sqrt 2") {
  double prev = 1e9;
  for (long long K : {10, 100, 1000}) {
    auto h = height_M(build_instance(1, K));
    double M = static_cast<double>(h.M);
    REQUIRE(M < prev);
    REQUIRE(M > 2 * std::sqrt(2.0));
    prev = M;
  }
  auto h = height_M(build_instance(1, 10000));
  REQUIRE(static_cast<double>(h.limit_gap) < 1e-2);

  REQUIRE(static_cast<double>(height_M(build_instance(3, 50)).M) < 3.0);
}

TEST_CASE("height envelope within 50/K for K >= 100") {
  for (int N : {1, 2, 3}) {
    for (long long K : {100, 400, 2000}) {
      auto h = height_M(build_instance(N, K));
      REQUIRE(static_cast<double>(h.limit_gap) <= 50.0 / static_cast<double>(K));
    }
  }
}

TEST_CASE("discrepancy violation arithmetic") {
  auto inst = build_instance(2, 20);
  auto rep = discrepancy_violation(inst, 1.0);
  REQUIRE(rep.lhs == Catch::Approx(2.5));
  REQUIRE(rep.rhs == Catch::Approx(std::sqrt(4.0 * std::log(rep.measured_M))).epsilon(1e-12));
  REQUIRE(rep.violated);

  // N = 9 with K pushed until M < 3
  long long K9 = smallest_K_below_3(9);
  auto rep9 = discrepancy_violation(build_instance(9, K9), 1.0);
  REQUIRE(rep9.measured_M < 3.0);
  REQUIRE(rep9.violated);

  // small N with a huge constant is not violated
  auto rep1 = discrepancy_violation(build_instance(1, 100), 10.0);
  REQUIRE_FALSE(rep1.violated);
}

TEST_CASE("doubling search lands on a sub-3 height") {
  long long K = smallest_K_below_3(16);
  REQUIRE(static_cast<double>(height_M(build_instance(16, K)).M) < 3.0);
  if (K > 2) {
    REQUIRE(static_cast<double>(height_M(build_instance(16, K - 1)).M) >= 3.0);
  }
}

TEST_CASE("root oracle counts sectors with multiplicity") {
  using C = std::complex<double>;
  REQUIRE(sector_zero_count({C(1), C(0), C(1)}, 0, M_PI) == 1);
  REQUIRE(sector_zero_count({C(1), C(0), C(1)}, M_PI, 2 * M_PI) == 1);
  REQUIRE(sector_zero_count({C(-1), C(3), C(-3), C(1)}, 0, 1e-6) == 3);

  auto inst = build_instance(1, 3, 256);
  std::vector<C> dense(4, C(0));
  dense[0] = C(static_cast<double>(inst.coeff[0]));
  dense[1] = C(static_cast<double>(inst.coeff[1]));
  dense[3] = C(static_cast<double>(inst.coeff[2]));
  REQUIRE(sector_zero_count(dense, 0, 1e-6) == 2);                    // double root at x0
  REQUIRE(sector_zero_count(dense, M_PI - 1e-3, M_PI + 1e-3) == 1);   // -2 x0

  REQUIRE_THROWS_AS(sector_zero_count({C(0), C(1)}, 0, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(sector_zero_count(std::vector<C>(70, C(1)), 0, 1), std::invalid_argument);
}
