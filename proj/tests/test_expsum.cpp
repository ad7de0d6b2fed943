#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "quintet/expsum.hpp"

using namespace quintet::expsum;

namespace {
const std::array<std::uint64_t, 4> test_seed = {0x1111, 0x2222, 0x3333, 0x4444};
}

TEST_CASE("eta is deterministic and rejects oversized words") {
  ScrambleOracle oracle(test_seed);
  Word empty;
  int b = oracle.eta(empty);
  for (int i = 0; i < 10; ++i) REQUIRE(oracle.eta(empty) == b);

  Word w = Word::low_bits_of(0b01, 2);
  REQUIRE(oracle.eta(w) == oracle.eta(w));

  Word toolong;
  toolong.len = 129;
  REQUIRE_THROWS_AS(oracle.eta(toolong), std::invalid_argument);
  REQUIRE_THROWS_AS(ScrambleOracle(test_seed, 47), std::invalid_argument);
  REQUIRE_THROWS_AS(ScrambleOracle(test_seed, 65), std::invalid_argument);
}

TEST_CASE("eta bias stays near one half") {
  ScrambleOracle oracle(test_seed);
  std::uint64_t state = 99, ones = 0;
  const int trials = 1000000;
  for (int i = 0; i < trials; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    Word w = Word::low_bits_of(state >> 8, static_cast<int>(state % 49));
    ones += static_cast<std::uint64_t>(oracle.eta(w));
  }
  double bias = static_cast<double>(ones) / trials;
  REQUIRE(bias > 0.49);
  REQUIRE(bias < 0.51);
}

TEST_CASE("distinct seeds give essentially independent bits") {
  ScrambleOracle a(test_seed);
  ScrambleOracle b({0xdead, 0xbeef, 0xcafe, 0xf00d});
  int agree = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    Word w = Word::low_bits_of(static_cast<std::uint64_t>(i) * 2654435761u, 32);
    if (a.eta(w) == b.eta(w)) ++agree;
  }
  double rate = static_cast<double>(agree) / trials;
  REQUIRE(rate > 0.49);
  REQUIRE(rate < 0.51);
}

TEST_CASE("all-zero oracle reproduces the radical-inverse sequence") {
  auto zero = ScrambleOracle::all_zero();
  REQUIRE(x_n(zero, 0).value() == 0.0);
  REQUIRE(x_n(zero, 1).value() == 0.5);
  REQUIRE(x_n(zero, 2).value() == 0.25);
  REQUIRE(x_n(zero, 3).value() == 0.75);
  for (std::uint64_t n = 0; n < 1 << 12; ++n) {
    std::uint64_t expect = 0;
    for (int i = 0; i < 64; ++i)
      if ((n >> i) & 1) expect |= std::uint64_t(1) << (63 - i);
    REQUIRE(x_n(zero, n).fixed == expect);
  }
}

TEST_CASE("scrambled points are deterministic and land in [0,1)") {
  ScrambleOracle oracle(test_seed);
  auto p5 = x_n(oracle, 5);
  REQUIRE(x_n(oracle, 5).fixed == p5.fixed);
  for (std::uint64_t n = 0; n < 2000; ++n) {
    double v = x_n(oracle, n).value();
    REQUIRE(v >= 0.0);
    REQUIRE(v < 1.0);
  }
}

TEST_CASE("digit map examples and bijectivity") {
  auto zero = ScrambleOracle::all_zero();
  // identity scrambling: w = (1,0) read most-significant-first gives 2
  REQUIRE(j_r(zero, Word::low_bits_of(0b01, 2)) == 2);
  REQUIRE(j_r(zero, Word()) == 0);

  for (std::uint64_t s = 0; s < 5; ++s) {
    ScrambleOracle oracle(seed_variant(test_seed, s));
    for (int r = 0; r <= 12; ++r) {
      std::vector<bool> seen(std::size_t(1) << r, false);
      for (std::uint64_t w = 0; w < (std::uint64_t(1) << r); ++w) {
        std::uint64_t j = j_r(oracle, Word::low_bits_of(w, r));
        REQUIRE(j < (std::uint64_t(1) << r));
        REQUIRE_FALSE(seen[j]);
        seen[j] = true;
      }
    }
  }
}

TEST_CASE("dyadic decomposition") {
  auto blocks = decompose(2026);
  std::vector<std::uint64_t> starts;
  std::vector<int> rs;
  for (const auto& b : blocks) {
    starts.push_back(b.start());
    rs.push_back(b.r);
  }
  REQUIRE(starts == std::vector<std::uint64_t>{0, 1024, 1536, 1792, 1920, 1984, 2016, 2024});
  REQUIRE(rs == std::vector<int>{10, 9, 8, 7, 6, 5, 3, 1});

  REQUIRE(decompose(1).size() == 1);
  REQUIRE(decompose(1)[0].r == 0);
  REQUIRE(decompose(1024).size() == 1);

  for (std::uint64_t N = 1; N <= 1 << 12; ++N) {
    std::uint64_t pos = 0;
    int prev = 99;
    for (const auto& b : decompose(N)) {
      REQUIRE(b.start() == pos);
      REQUIRE(b.r < prev);
      prev = b.r;
      pos += b.length();
    }
    REQUIRE(pos == N);
  }
}

TEST_CASE("block sums match direct sums over dyadic blocks") {
  ScrambleOracle oracle(test_seed);
  std::uint64_t state = 7;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 13;
  };
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t P = next() % (1 << 16);
    int r = static_cast<int>(next() % 13);
    std::uint64_t k = 1 + next() % 4096;
    auto block = block_sum(oracle, P, r, k);
    std::complex<long double> direct(0, 0);
    for (std::uint64_t n = P << r; n < ((P + 1) << r); ++n)
      direct += unit_term(x_n(oracle, n).fixed, k);
    double err = std::abs(std::complex<double>(static_cast<double>(direct.real()),
                                               static_cast<double>(direct.imag())) -
                          block);
    double bound = 2 * M_PI * static_cast<double>(k) * std::ldexp(1.0, r - 64) + 1e-9;
    REQUIRE(err <= bound);
  }
}

TEST_CASE("block sum basics") {
  ScrambleOracle oracle(test_seed);
  auto single = block_sum(oracle, 12345, 0, 7);
  REQUIRE(std::abs(single) == Catch::Approx(1.0).margin(1e-12));

  // all-zero oracle, full block [0, 8), k = 8: every term is e(8 * j/8 + tail) with
  // zero tail, so the sum is exactly 8
  auto zero = ScrambleOracle::all_zero();
  auto b = block_sum(zero, 0, 3, 8);
  std::complex<long double> direct(0, 0);
  for (std::uint64_t n = 0; n < 8; ++n) direct += unit_term(x_n(zero, n).fixed, 8);
  REQUIRE(std::abs(b - std::complex<double>(static_cast<double>(direct.real()),
                                            static_cast<double>(direct.imag()))) < 1e-9);
  REQUIRE(b.real() == Catch::Approx(8.0).margin(1e-9));
}

TEST_CASE("partial sums and running sup") {
  ScrambleOracle oracle(test_seed);
  auto series = sup_partial_sums(oracle, 17, 1);
  REQUIRE(series.sup_abs == Catch::Approx(1.0).margin(1e-12));

  auto zero = ScrambleOracle::all_zero();
  auto s8 = sup_partial_sums(zero, 1, 8);
  std::complex<long double> acc(0, 0);
  long double sup = 0;
  for (std::uint64_t n = 0; n < 8; ++n) {
    double x = x_n(zero, n).value();
    acc += std::complex<long double>(std::cos(2 * M_PI * x), std::sin(2 * M_PI * x));
    sup = std::max(sup, std::abs(acc));
  }
  REQUIRE(s8.sup_abs == Catch::Approx(static_cast<double>(sup)).margin(1e-9));

  // sup is monotone in the horizon and dominates the final sum
  auto s64 = sup_partial_sums(oracle, 3, 64);
  auto s128 = sup_partial_sums(oracle, 3, 128);
  REQUIRE(s64.sup_abs <= s128.sup_abs);
  REQUIRE(s128.sup_abs >= std::abs(s128.running_sum) - 1e-12);
}

TEST_CASE("block sums over a decomposition reassemble the partial sum") {
  ScrambleOracle oracle(test_seed);
  for (std::uint64_t N : {37ull, 100ull, 1000ull, 2026ull}) {
    std::uint64_t k = 5;
    std::complex<long double> via_blocks(0, 0);
    for (const auto& b : decompose(N)) {
      auto bs = block_sum(oracle, b.P, b.r, k);
      via_blocks += std::complex<long double>(bs.real(), bs.imag());
    }
    std::complex<long double> direct(0, 0);
    for (std::uint64_t n = 0; n < N; ++n) direct += unit_term(x_n(oracle, n).fixed, k);
    REQUIRE(std::abs(direct - via_blocks) < 1e-9);
  }
}

TEST_CASE("deterministic baseline recursion") {
  // t_3 = i and t_4 = -i: partial sums at k = 1 cancel at N = 2 and N = 4,
  // so the running sup stays at 1
  REQUIRE(clunie_baseline(1, 2) == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(clunie_baseline(1, 4) == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(clunie_baseline(3, 1 << 16) <= 3.0 + 1e-9);
  for (std::uint64_t k = 1; k <= 16; ++k)
    REQUIRE(clunie_baseline(k, 1 << 12) <= static_cast<double>(k) + 1e-9);
}

TEST_CASE("envelope value") {
  REQUIRE(envelope(1) == Catch::Approx(std::sqrt(std::log(2.0))));
  REQUIRE(envelope(8) == Catch::Approx(std::sqrt(8.0 * std::log(16.0))));
}

TEST_CASE("seed parsing") {
  auto o = ScrambleOracle::from_hex("0x00000000000000010000000000000002000000000000000300000000000000ff");
  REQUIRE(o.seed() == std::array<std::uint64_t, 4>{1, 2, 3, 0xff});
  auto short_seed = ScrambleOracle::from_hex("ff");
  REQUIRE(short_seed.seed() == std::array<std::uint64_t, 4>{0, 0, 0, 0xff});
  REQUIRE_THROWS_AS(ScrambleOracle::from_hex(""), std::invalid_argument);
}
