#pragma once

// Sparse polynomial family with support {0, 1, K, K^2, ..., K^N} and
// alternating Lagrange-weight coefficients
//   c_j = (-1)^{s-j} e^{-lambda_j tau} / Delta_j,
// where lambda_j = m_j / K^N, Delta_j = prod_{l != j} |lambda_j - lambda_l|,
// A_1 = sqrt(Delta_s / Delta_1), T = 1/(sqrt 2 A_1), tau = 2 log T.
//
// The alternating-sign sums sum_j (-1)^{s-j} alpha_j^k / Delta_j vanish for
// k <= s-2 and equal 1 at k = s-1 (top Lagrange coefficient of x^k), which
// makes x0 = e^{tau/d} a root of multiplicity exactly s-1 = N+1.  The
// normalized coefficient sum M = (sum |c_j|) / sqrt(|c_1 c_s|) stays
// bounded (it tends to 2*sqrt(2) for fixed N as K grows), while the root
// multiplicity grows linearly in N; that combination is what the checks
// here quantify.
//
// Weights Delta_j are exact rationals; everything transcendental runs in
// MPFR at a per-instance precision sized to the dynamic range of
// Delta_1 = K^{-N(N+1)/2}.

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "quintet/errors.hpp"

namespace quintet::fewnomial {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using BigFloat = boost::multiprecision::mpfr_float;

inline unsigned digits10_for_bits(int bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 4;
}

// Scoped working precision for the dynamic-precision floats.  Instances
// must not be built concurrently from several threads.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10_for_bits(bits));
  }
  ~PrecisionScope() { BigFloat::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Rational rational_pow(const Rational& base, int k) {
  Rational acc = 1;
  for (int i = 0; i < k; ++i) acc *= base;
  return acc;
}

struct FewnomialSpec {
  int N = 0;
  long long K = 0;
  int s = 0;                        // N + 2 nonzero terms
  BigInt d;                         // degree K^N
  Rational epsilon;                 // 1/K
  std::vector<BigInt> exponents;    // 0, 1, K, ..., K^{N-1}, K^N
  std::vector<Rational> lambda;     // exponents / d, strictly increasing 0..1
};

inline FewnomialSpec make_spec(int N, long long K) {
  if (N < 1) throw std::invalid_argument("make_spec: N must be >= 1");
  if (K < 2) throw std::invalid_argument("make_spec: K must be >= 2");
  FewnomialSpec spec;
  spec.N = N;
  spec.K = K;
  spec.s = N + 2;
  spec.epsilon = Rational(1, K);
  spec.exponents.push_back(0);
  BigInt power = 1;
  for (int i = 1; i <= N; ++i) {
    spec.exponents.push_back(power);  // K^{i-1}
    power *= K;
  }
  spec.exponents.push_back(power);  // K^N
  spec.d = power;
  for (const auto& m : spec.exponents) spec.lambda.emplace_back(Rational(m) / Rational(spec.d));
  return spec;
}

// Exact alternating-sign weight sum over arbitrary nodes.  Returns
//   sum_j (-1)^{s-j} alpha_j^k / Delta_j,
// which is 0 for 0 <= k <= s-2 and 1 for k = s-1.
inline Rational vandermonde_sum(const std::vector<Rational>& alphas, int k) {
  if (k < 0) throw std::invalid_argument("vandermonde_sum: k must be >= 0");
  int s = static_cast<int>(alphas.size());
  if (s < 2) throw std::invalid_argument("vandermonde_sum: need at least two nodes");
  for (int j = 1; j < s; ++j)
    if (!(alphas[static_cast<std::size_t>(j - 1)] < alphas[static_cast<std::size_t>(j)]))
      throw std::invalid_argument("vandermonde_sum: nodes must be strictly increasing");
  Rational total = 0;
  for (int j = 0; j < s; ++j) {
    Rational delta = 1;
    for (int l = 0; l < s; ++l) {
      if (l == j) continue;
      delta *= abs(alphas[static_cast<std::size_t>(j)] - alphas[static_cast<std::size_t>(l)]);
    }
    Rational term = rational_pow(alphas[static_cast<std::size_t>(j)], k) / delta;
    // (-1)^{s-j} with 1-based j: j_1 = j + 1
    if ((s - (j + 1)) % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

struct WeightSet {
  std::vector<Rational> delta;     // Delta_j, exact
  std::vector<Rational> p_signed;  // P_j = (-1)^{s-j} Delta_j
  BigFloat a1;                     // sqrt(Delta_s / Delta_1)
  BigFloat t_value;                // 1 / (sqrt 2 * a1)
  BigFloat tau;                    // 2 log T
  int precision_bits = 0;
};

struct FewnomialInstance {
  FewnomialSpec spec;
  WeightSet weights;
  std::vector<BigFloat> coeff;  // c_j
  BigFloat x0;                  // e^{tau/d}
  int precision_bits = 0;
};

// Precision large enough to resolve the Delta_1^{-1}-sized cancellations
// with a wide margin.
inline int default_precision_bits(int N, long long K) {
  double bits = 4.0 * N * (N + 1) * std::log2(static_cast<double>(K)) + 128;
  return static_cast<int>(std::ceil(bits));
}

inline int minimum_precision_bits(int N, long long K) {
  double bits = 0.5 * N * (N + 1) * std::log2(static_cast<double>(K)) + 96;
  return static_cast<int>(std::ceil(bits));
}

inline FewnomialInstance build_instance(int N, long long K, int precision_bits = 0) {
  FewnomialSpec spec = make_spec(N, K);
  if (precision_bits == 0) precision_bits = default_precision_bits(N, K);
  if (precision_bits < 128) throw std::invalid_argument("build_instance: precision_bits must be >= 128");
  if (precision_bits < minimum_precision_bits(N, K))
    throw NeedsMorePrecision("build_instance: requested precision cannot resolve Delta_1 for N=" +
                             std::to_string(N) + " K=" + std::to_string(K));

  FewnomialInstance inst;
  inst.spec = spec;
  inst.precision_bits = precision_bits;
  inst.weights.precision_bits = precision_bits;

  int s = spec.s;
  for (int j = 0; j < s; ++j) {
    Rational delta = 1;
    for (int l = 0; l < s; ++l) {
      if (l == j) continue;
      delta *= abs(spec.lambda[static_cast<std::size_t>(j)] - spec.lambda[static_cast<std::size_t>(l)]);
    }
    inst.weights.delta.push_back(delta);
    inst.weights.p_signed.push_back((s - (j + 1)) % 2 == 1 ? -delta : delta);
  }

  PrecisionScope scope(precision_bits);
  const Rational& delta_first = inst.weights.delta.front();
  const Rational& delta_last = inst.weights.delta.back();
  inst.weights.a1 = sqrt(BigFloat(Rational(delta_last / delta_first)));
  inst.weights.t_value = 1 / (sqrt(BigFloat(2)) * inst.weights.a1);
  inst.weights.tau = 2 * log(inst.weights.t_value);

  for (int j = 0; j < s; ++j) {
    BigFloat lam(inst.spec.lambda[static_cast<std::size_t>(j)]);
    BigFloat c = exp(-lam * inst.weights.tau) / BigFloat(inst.weights.delta[static_cast<std::size_t>(j)]);
    if ((s - (j + 1)) % 2 == 1) c = -c;
    inst.coeff.push_back(c);
  }
  inst.x0 = exp(inst.weights.tau / BigFloat(spec.d));
  return inst;
}

// Double-precision-pair certification: rebuilding at twice the working
// precision must agree with every coefficient and with x0 to the given
// number of significant decimal digits (relative error below
// 10^-(digits+2)), which certifies the digits printed by reports.
inline bool certify_digits(const FewnomialInstance& inst, int digits = 40) {
  FewnomialInstance wide = build_instance(inst.spec.N, inst.spec.K, inst.precision_bits * 2);
  PrecisionScope scope(inst.precision_bits * 2);
  BigFloat tol = pow(BigFloat(10), -(digits + 2));
  for (int j = 0; j < inst.spec.s; ++j) {
    BigFloat rel = abs(inst.coeff[static_cast<std::size_t>(j)] - wide.coeff[static_cast<std::size_t>(j)]) /
                   abs(wide.coeff[static_cast<std::size_t>(j)]);
    if (rel > tol) return false;
  }
  return abs(inst.x0 - wide.x0) / wide.x0 <= tol;
}

struct HeightReport {
  BigFloat M;
  BigFloat limit_gap;  // |M - 2 sqrt 2|
};

inline HeightReport height_M(const FewnomialInstance& inst) {
  PrecisionScope scope(inst.precision_bits);
  BigFloat sum = 0;
  for (const auto& c : inst.coeff) sum += abs(c);
  BigFloat M = sum / sqrt(abs(inst.coeff.front() * inst.coeff.back()));
  BigFloat gap = abs(M - 2 * sqrt(BigFloat(2)));
  return {M, gap};
}

// Exact-rational derivative route: the e^{lambda_j tau} factors cancel
// against the coefficients, leaving the alternating weight sum at the
// lambda nodes.  Exactly 0 for k <= N and exactly 1 at k = N+1.
inline Rational derivative_exact(const FewnomialSpec& spec, int k) {
  if (k < 0 || k > spec.N + 1) throw std::invalid_argument("derivative_exact: k out of range");
  return vandermonde_sum(spec.lambda, k);
}

// Floating route: evaluates f^{(k)}(x0) through the sparse representation
// and normalizes by the term-magnitude sum, exposing the cancellation.
inline BigFloat derivative_residual(const FewnomialInstance& inst, int k) {
  if (k < 0 || k > inst.spec.N + 1) throw std::invalid_argument("derivative_residual: k out of range");
  PrecisionScope scope(inst.precision_bits);
  BigFloat total = 0, magnitude = 0;
  for (int j = 0; j < inst.spec.s; ++j) {
    BigInt falling = 1;
    for (int t = 0; t < k; ++t) falling *= inst.spec.exponents[static_cast<std::size_t>(j)] - t;
    if (falling == 0) continue;
    // x0^{m_j - k} = exp(tau * (m_j - k) / d)
    Rational shift = Rational(inst.spec.exponents[static_cast<std::size_t>(j)] - k) / Rational(inst.spec.d);
    BigFloat term = inst.coeff[static_cast<std::size_t>(j)] * BigFloat(falling) * exp(inst.weights.tau * BigFloat(shift));
    total += term;
    magnitude += abs(term);
  }
  if (magnitude == 0) throw NumericFailure("derivative_residual: zero magnitude");
  return abs(total) / magnitude;
}

struct ViolationReport {
  double lhs = 0;       // N + 1/2: multiplicity excess over the uniform share
  double rhs = 0;       // C sqrt((N+2) log M)
  double measured_M = 0;
  bool violated = false;
};

// The positive root of multiplicity N+1 puts N+1 zero arguments in a
// sector whose uniform share is 1/2; a bound of shape
// C sqrt(nonzero_terms * log M) fails once N + 1/2 exceeds it.
inline ViolationReport discrepancy_violation(const FewnomialInstance& inst, double C) {
  HeightReport h = height_M(inst);
  ViolationReport rep;
  rep.measured_M = static_cast<double>(h.M);
  rep.lhs = inst.spec.N + 0.5;
  rep.rhs = C * std::sqrt((inst.spec.N + 2) * std::log(rep.measured_M));
  rep.violated = rep.lhs > rep.rhs;
  return rep;
}

// Doubling search, then binary refinement, for the least K with measured
// M < 3 (M decreases toward 2 sqrt 2 in K for fixed N).
inline long long smallest_K_below_3(int N, long long K_cap = 1 << 20) {
  auto M_of = [&](long long K) {
    FewnomialInstance inst = build_instance(N, K);
    return static_cast<double>(height_M(inst).M);
  };
  long long K = 2;
  while (K <= K_cap && !(M_of(K) < 3.0)) K *= 2;
  if (K > K_cap) throw BudgetExceeded("smallest_K_below_3: no K below cap");
  long long lo = std::max<long long>(2, K / 2), hi = K;  // M(lo) >= 3 or lo == 2
  while (lo + 1 < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (M_of(mid) < 3.0)
      hi = mid;
    else
      lo = mid;
  }
  return (lo == 2 && M_of(2) < 3.0) ? 2 : hi;
}

// ---------------------------------------------------------------------
// small-degree root oracle
// ---------------------------------------------------------------------

// All complex roots of a dense polynomial (degree <= 64) by Durand-Kerner
// iteration, with clustering so that a numerically split multiple root is
// reported once at the cluster centroid with its multiplicity.
struct RootCluster {
  std::complex<double> center;
  int multiplicity = 0;
};

inline std::vector<RootCluster> dense_roots(const std::vector<std::complex<double>>& coeffs) {
  int degree = static_cast<int>(coeffs.size()) - 1;
  if (degree < 1 || degree > 64) throw std::invalid_argument("dense_roots: degree must be in [1, 64]");
  if (std::abs(coeffs.front()) == 0 || std::abs(coeffs.back()) == 0)
    throw std::invalid_argument("dense_roots: need nonzero constant and leading coefficients");

  std::vector<std::complex<double>> monic(coeffs.begin(), coeffs.end());
  for (auto& c : monic) c /= coeffs.back();

  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (int i = degree; i >= 0; --i) acc = acc * z + monic[static_cast<std::size_t>(i)];
    return acc;
  };
  // backward error: |p(z)| relative to the magnitude sum of its terms.
  // Steps stagnate at eps^(1/multiplicity) around a multiple root, so the
  // residual, not the step size, is the stopping signal.
  auto backward_error = [&](std::complex<double> z) {
    double mag = 0, power = 1;
    for (int i = 0; i <= degree; ++i) {
      mag += std::abs(monic[static_cast<std::size_t>(i)]) * power;
      power *= std::abs(z);
    }
    return std::abs(eval(z)) / std::max(mag, 1e-300);
  };

  double radius = std::max(0.5, std::pow(std::abs(monic.front()), 1.0 / degree));
  std::vector<std::complex<double>> z(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    double ang = 2 * M_PI * i / degree + 0.4;
    z[static_cast<std::size_t>(i)] = std::polar(radius, ang);
  }

  bool converged = false;
  double worst = 0;
  for (int sweep = 0; sweep < 2000 && !converged; ++sweep) {
    for (int i = 0; i < degree; ++i) {
      std::complex<double> denom = 1;
      for (int j = 0; j < degree; ++j)
        if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      if (std::abs(denom) == 0) { denom = 1e-30; }
      z[static_cast<std::size_t>(i)] -= eval(z[static_cast<std::size_t>(i)]) / denom;
    }
    worst = 0;
    for (int i = 0; i < degree; ++i)
      worst = std::max(worst, backward_error(z[static_cast<std::size_t>(i)]));
    converged = worst < 1e-12;
  }
  if (!converged)
    throw NumericFailure("dense_roots: no convergence at degree " + std::to_string(degree) +
                         ", residual " + std::to_string(worst));

  // greedy clustering; multiple roots split by ~eps^{1/multiplicity},
  // which for backward error 1e-12 and multiplicity up to ~6 stays well
  // inside the 1e-2-separated root sets this oracle is used on
  std::vector<int> owner(static_cast<std::size_t>(degree), -1);
  std::vector<RootCluster> clusters;
  for (int i = 0; i < degree; ++i) {
    if (owner[static_cast<std::size_t>(i)] != -1) continue;
    std::vector<int> group{i};
    owner[static_cast<std::size_t>(i)] = static_cast<int>(clusters.size());
    for (int j = i + 1; j < degree; ++j) {
      if (owner[static_cast<std::size_t>(j)] != -1) continue;
      double tol = 5e-3 * std::max(1.0, std::abs(z[static_cast<std::size_t>(i)]));
      if (std::abs(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]) < tol) {
        owner[static_cast<std::size_t>(j)] = static_cast<int>(clusters.size());
        group.push_back(j);
      }
    }
    std::complex<double> centroid = 0;
    for (int g : group) centroid += z[static_cast<std::size_t>(g)];
    centroid /= static_cast<double>(group.size());

    // A mu-fold root is a simple root of the (mu-1)-th derivative; Newton
    // there recovers it to machine precision (the raw DK points only get
    // within eps^(1/mu)).
    int mu = static_cast<int>(group.size());
    std::vector<std::complex<double>> dpoly = monic;
    for (int d = 0; d < mu - 1; ++d) {
      std::vector<std::complex<double>> next(dpoly.size() - 1);
      for (std::size_t i = 1; i < dpoly.size(); ++i)
        next[i - 1] = dpoly[i] * static_cast<double>(i);
      dpoly = next;
    }
    for (int it = 0; it < 60; ++it) {
      std::complex<double> value = 0, slope = 0;
      for (std::size_t i = dpoly.size(); i-- > 0;) {
        slope = slope * centroid + value;
        value = value * centroid + dpoly[i];
      }
      if (std::abs(slope) == 0) break;
      std::complex<double> step = value / slope;
      centroid -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(centroid))) break;
    }

    if (std::abs(centroid.imag()) < 1e-9 * std::max(1.0, std::abs(centroid.real())))
      centroid = {centroid.real(), 0.0};
    clusters.push_back({centroid, mu});
  }
  return clusters;
}

// Zeros with principal argument in [alpha, beta), counted with
// multiplicity.  Arguments within 1e-9 of a full turn wrap to 0.
inline int sector_zero_count(const std::vector<std::complex<double>>& coeffs, double alpha,
                             double beta) {
  auto clusters = dense_roots(coeffs);
  int count = 0;
  for (const auto& c : clusters) {
    double arg = std::arg(c.center);
    if (arg < 0) arg += 2 * M_PI;
    if (2 * M_PI - arg < 1e-9) arg = 0;
    if (arg >= alpha && arg < beta) count += c.multiplicity;
  }
  return count;
}

}  // namespace quintet::fewnomial
