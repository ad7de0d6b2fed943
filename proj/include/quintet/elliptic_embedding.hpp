#pragma once

// Numerical embedding of the cyclic configuration into the real locus of
//   y^2 = x^3 - x + 1.
// The cubic has one real root e0, so the real locus is a single closed
// loop and carries a cyclic subgroup of any order 7m.  Parametrize the
// loop by the incomplete integral
//   J(x) = int_{e0}^{x} dt / sqrt(t^3 - t + 1),   Omega = J(inf),
// whose full loop length is 2*Omega.  Residue t maps to loop parameter
// t/(7m); inversion of J places the point, and the chord-tangent relation
// "three collinear points have parameters summing to 0" becomes a 3x3
// determinant test on affine coordinates.
//
// Two substitutions make the integrand smooth on a finite box:
//   t = e0 + u^2        kills the sqrt singularity at e0,
//   u = v / (1 - v)     folds the infinite tail to v in [0, 1],
// giving  J = int_0^v 2 dw / sqrt(P(w)),
//   P(w) = w^4 + 3 e0 w^2 (1-w)^2 + (3 e0^2 - 1)(1-w)^4,
// with P > 0 on [0, 1].

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "quintet/errors.hpp"

namespace quintet::elliptic {

inline double curve_rhs(double x) { return x * x * x - x + 1.0; }

// Real root of x^3 - x + 1 (about -1.3247).
inline double real_root() {
  double x = -1.5;
  for (int i = 0; i < 80; ++i) {
    double fx = curve_rhs(x);
    double dfx = 3 * x * x - 1;
    double nx = x - fx / dfx;
    if (nx == x) break;
    x = nx;
  }
  return x;
}

namespace detail {

struct LoopIntegrand {
  double e0;
  double c0;  // 3*e0^2 - 1
  double operator()(double v) const {
    double w = 1.0 - v;
    double p = v * v * v * v + 3.0 * e0 * v * v * w * w + c0 * w * w * w * w;
    return 2.0 / std::sqrt(p);
  }
};

inline double simpson(const LoopIntegrand& f, double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const LoopIntegrand& f, double a, double b, double fa, double fm,
                            double fb, double whole, double tol, int depth) {
  if (depth > 60) throw NumericFailure("adaptive quadrature did not converge");
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(f, a, m, fa, flm, fm);
  double right = simpson(f, m, b, fm, frm, fb);
  if (std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2, depth + 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, tol / 2, depth + 1);
}

inline double integrate(const LoopIntegrand& f, double a, double b, double tol) {
  if (a >= b) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_step(f, a, b, fa, fm, fb, simpson(f, a, b, fa, fm, fb), tol, 0);
}

}  // namespace detail

struct RealEmbedding {
  long long m = 0;
  long long order = 0;          // 7m
  double e0 = 0;                // real root of x^3 - x + 1
  double half_period = 0;       // int_{e0}^{inf} dt/sqrt(t^3 - t + 1)
  double quadrature_tolerance = 0;

  struct Point {
    double x = 0, y = 0;
    bool at_infinity = false;
  };
  std::vector<Point> points;    // indexed by residue; points[0] = O
};

inline constexpr long long default_embedding_cap = 105;

// Builds the order-7m subgroup on the real loop.  The sign convention puts
// y >= 0 on loop parameters in (0, 1/2); negation is then the mirror
// (x, -y), matching parameter negation mod 7m.
inline RealEmbedding embed_real(long long m, double tol, long long cap = default_embedding_cap) {
  if (m < 1) throw std::invalid_argument("embed_real: m must be positive");
  if (7 * m > cap) throw std::invalid_argument("embed_real: 7m exceeds the embedding cap");
  if (!(tol > 0)) throw std::invalid_argument("embed_real: tolerance must be positive");

  RealEmbedding emb;
  emb.m = m;
  emb.order = 7 * m;
  emb.e0 = real_root();
  emb.quadrature_tolerance = tol;
  detail::LoopIntegrand f{emb.e0, 3 * emb.e0 * emb.e0 - 1};
  double qtol = std::min(tol, 1e-13);
  emb.half_period = detail::integrate(f, 0.0, 1.0, qtol);

  emb.points.assign(static_cast<std::size_t>(emb.order), RealEmbedding::Point{});
  emb.points[0].at_infinity = true;

  // Invert G(v) = int_0^v 2 dw / sqrt(P) = half_period - z by bisection,
  // then a few Newton polish steps (G' is the integrand itself).
  auto invert = [&](double target) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
      double mid = 0.5 * (lo + hi);
      if (detail::integrate(f, 0.0, mid, qtol) < target)
        lo = mid;
      else
        hi = mid;
    }
    double v = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
      double g = detail::integrate(f, 0.0, v, qtol) - target;
      double step = g / f(v);
      double nv = v - step;
      if (nv <= 0.0 || nv >= 1.0) break;
      v = nv;
    }
    return v;
  };

  long long half = emb.order / 2;
  for (long long t = 1; t <= half; ++t) {
    double z = 2.0 * emb.half_period * static_cast<double>(t) / static_cast<double>(emb.order);
    double v = invert(emb.half_period - z);
    double u = v / (1.0 - v);
    double x = emb.e0 + u * u;
    double fx = curve_rhs(x);
    double y = fx > 0 ? std::sqrt(fx) : 0.0;
    emb.points[static_cast<std::size_t>(t)] = {x, y, false};
    if (t != emb.order - t)
      emb.points[static_cast<std::size_t>(emb.order - t)] = {x, -y, false};
  }
  return emb;
}

inline constexpr double collinear_det_threshold = 1e-6;
// Non-collinear triples of the lattice can be genuinely close to a line
// (e.g. two adjacent parameters near the tangent direction of a third), so
// there is no universal 1e-3 floor; at 7m = 105 the true minimum is about
// 5e-5.  The scan instead asserts a 1e3 gap between the two populations
// and this 10x margin above the classification threshold.
inline constexpr double separation_det_margin = 10 * collinear_det_threshold;

struct CollinearityResult {
  double det = 0;
  bool collinear = false;
};

// 3x3 homogeneous determinant with rows scaled to unit max-norm; the three
// residues must be distinct and affine (nonzero).
inline CollinearityResult collinearity_check(const RealEmbedding& emb, long long t1, long long t2,
                                             long long t3) {
  if (t1 == t2 || t1 == t3 || t2 == t3)
    throw std::invalid_argument("collinearity_check: residues must be distinct");
  if (t1 == 0 || t2 == 0 || t3 == 0)
    throw std::invalid_argument("collinearity_check: residues must be affine (nonzero)");
  double row[3][3];
  long long ts[3] = {t1, t2, t3};
  for (int i = 0; i < 3; ++i) {
    const auto& p = emb.points[static_cast<std::size_t>(ts[i])];
    double scale = std::max({std::abs(p.x), std::abs(p.y), 1.0});
    row[i][0] = p.x / scale;
    row[i][1] = p.y / scale;
    row[i][2] = 1.0 / scale;
  }
  double det = row[0][0] * (row[1][1] * row[2][2] - row[1][2] * row[2][1]) -
               row[0][1] * (row[1][0] * row[2][2] - row[1][2] * row[2][0]) +
               row[0][2] * (row[1][0] * row[2][1] - row[1][1] * row[2][0]);
  return {det, std::abs(det) < collinear_det_threshold};
}

// A line through the point at infinity is vertical, so {O, t2, t3} are
// collinear exactly when the affine points mirror each other.
inline bool vertical_pair_check(const RealEmbedding& emb, long long t2, long long t3) {
  const auto& p = emb.points[static_cast<std::size_t>(t2)];
  const auto& q = emb.points[static_cast<std::size_t>(t3)];
  double scale = std::max({std::abs(p.x), std::abs(q.x), 1.0});
  return std::abs(p.x - q.x) / scale < collinear_det_threshold;
}

struct GeometryScan {
  long long order = 0;
  long long triples_checked = 0;
  long long zero_triples_checked = 0;
  long long mismatches = 0;
  double max_collinear_det = 0;
  double min_noncollinear_det = std::numeric_limits<double>::infinity();
  double max_curve_residual = 0;
  bool four_collinear_found = false;
  bool gap_ok = false;
  double gap_ratio = 0;
  bool all_agree() const { return mismatches == 0 && !four_collinear_found; }
};

// Exhaustive agreement scan between the numeric determinant classifier and
// the group predicate t1+t2+t3 ≡ 0 (mod 7m), over every triple of distinct
// residues, plus the no-four-collinear confirmation.  Any 4-point line
// would contain a collinear triple, so only extensions of (numerically)
// collinear triples need a fourth-point test.
inline GeometryScan scan_geometry(const RealEmbedding& emb) {
  GeometryScan scan;
  scan.order = emb.order;
  long long n = emb.order;

  for (long long t = 1; t < n; ++t) {
    const auto& p = emb.points[static_cast<std::size_t>(t)];
    // residual relative to the natural scale of the curve equation
    double scale = std::max(1.0, std::abs(p.x * p.x * p.x));
    scan.max_curve_residual =
        std::max(scan.max_curve_residual, std::abs(p.y * p.y - curve_rhs(p.x)) / scale);
  }

  for (long long a = 1; a < n; ++a) {
    for (long long b = a + 1; b < n; ++b) {
      for (long long c = b + 1; c < n; ++c) {
        auto res = collinearity_check(emb, a, b, c);
        bool group_collinear = (a + b + c) % n == 0;
        ++scan.triples_checked;
        double mag = std::abs(res.det);
        if (group_collinear) {
          scan.max_collinear_det = std::max(scan.max_collinear_det, mag);
          if (!res.collinear) ++scan.mismatches;
        } else {
          scan.min_noncollinear_det = std::min(scan.min_noncollinear_det, mag);
          if (res.collinear) ++scan.mismatches;
        }
        if (group_collinear && res.collinear) {
          // fourth-point extension test
          for (long long d = 1; d < n; ++d) {
            if (d == a || d == b || d == c) continue;
            if (collinearity_check(emb, a, b, d).collinear) scan.four_collinear_found = true;
          }
        }
      }
    }
  }

  // Triples through O: vertical-line rule.
  for (long long b = 1; b < n; ++b) {
    for (long long c = b + 1; c < n; ++c) {
      bool group_collinear = (b + c) % n == 0;
      bool numeric = vertical_pair_check(emb, b, c);
      ++scan.zero_triples_checked;
      if (group_collinear != numeric) ++scan.mismatches;
    }
  }

  scan.gap_ratio = scan.max_collinear_det > 0
                       ? scan.min_noncollinear_det / scan.max_collinear_det
                       : std::numeric_limits<double>::infinity();
  scan.gap_ok = scan.gap_ratio >= 1e3 && scan.min_noncollinear_det > separation_det_margin;
  return scan;
}

}  // namespace quintet::elliptic
