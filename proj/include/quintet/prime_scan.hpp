#pragma once

// Primality property P_a(n): n - a*k^2 is prime for every k >= 1 with
// gcd(k, n) = 1 and a*k^2 < n.  Deciders, range sweeps, and the small
// quadratic-residue witness-prime explorer live here.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quintet/errors.hpp"
#include "quintet/parallel.hpp"

namespace quintet::primes {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin over the full 64-bit range: the witness set
// {2,...,37} has no strong pseudoprime below 3.3 * 10^24.
inline bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  std::uint64_t d = x - 1;
  int r = 0;
  while ((d & 1) == 0) { d >>= 1; ++r; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t y = powmod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      y = mulmod(y, y, x);
      if (y == x - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

// Odd-only sieve usable as a fast primality lookup below a fixed bound.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit) : limit_(limit), odd_composite_((limit >> 1) + 1, 0) {
    for (std::uint64_t p = 3; p * p <= limit; p += 2) {
      if (odd_composite_[p >> 1]) continue;
      for (std::uint64_t q = p * p; q <= limit; q += 2 * p) odd_composite_[q >> 1] = 1;
    }
  }
  bool contains(std::uint64_t x) const {
    if (x < 2) return false;
    if (x == 2) return true;
    if ((x & 1) == 0) return false;
    return x <= limit_ ? !odd_composite_[x >> 1] : is_prime(x);
  }

 private:
  std::uint64_t limit_;
  std::vector<std::uint8_t> odd_composite_;
};

struct PropertyResult {
  std::uint64_t a = 1;
  std::uint64_t n = 0;
  bool holds = false;
  std::optional<std::uint64_t> failing_k;  // smallest violating k, if any
  std::uint64_t checked_count = 0;         // qualifying k actually tested
};

// Decides P_a(n).  k runs over 1 <= k with a*k^2 < n; k sharing a factor
// with n are skipped unless require_coprime is false (the easier variant
// where the coprimality condition is dropped).
template <typename PrimePred>
PropertyResult holds_P_with(std::uint64_t a, std::uint64_t n, PrimePred&& prime,
                            bool require_coprime = true) {
  if (a < 1) throw std::invalid_argument("holds_P: a must be >= 1");
  if (n < 2) throw std::invalid_argument("holds_P: n must be >= 2");
  if (a > (std::uint64_t(1) << 62) / std::max<std::uint64_t>(n, 1))
    throw std::invalid_argument("holds_P: a*n exceeds the 64-bit working range");
  PropertyResult res;
  res.a = a;
  res.n = n;
  res.holds = true;
  for (std::uint64_t k = 1; a * k * k < n; ++k) {
    if (require_coprime && std::gcd(k, n) != 1) continue;
    ++res.checked_count;
    std::uint64_t value = n - a * k * k;
    if (!prime(value)) {
      res.holds = false;
      res.failing_k = k;
      break;
    }
  }
  return res;
}

inline PropertyResult holds_P(std::uint64_t a, std::uint64_t n, bool require_coprime = true) {
  return holds_P_with(a, n, [](std::uint64_t v) { return is_prime(v); }, require_coprime);
}

// Ascending list of all n <= n_max with P_a(n).  Chunked across workers;
// the merged output does not depend on the worker count.
inline std::vector<std::uint64_t> sweep(std::uint64_t a, std::uint64_t n_max,
                                        bool require_coprime = true, int workers = 1) {
  if (n_max < 2) throw std::invalid_argument("sweep: n_max must be >= 2");
  PrimeTable table(n_max + 1);
  const std::uint64_t chunk = 1 << 16;
  std::size_t nchunks = static_cast<std::size_t>((n_max - 1 + chunk) / chunk);
  std::vector<std::vector<std::uint64_t>> found(nchunks);
  parallel_for(nchunks, workers, [&](std::size_t c) {
    std::uint64_t lo = 2 + c * chunk;
    std::uint64_t hi = std::min<std::uint64_t>(n_max, lo + chunk - 1);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      auto r = holds_P_with(a, n, [&](std::uint64_t v) { return table.contains(v); },
                            require_coprime);
      if (r.holds) found[c].push_back(n);
    }
  });
  std::vector<std::uint64_t> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

// Factorization helper: trial division, then Brent-cycle Pollard rho under
// an iteration budget (inputs here are at most 64-bit, usually tiny).
namespace detail {

inline std::uint64_t pollard_rho(std::uint64_t n, std::uint64_t c, std::uint64_t budget) {
  std::uint64_t x = 2, y = 2, d = 1;
  std::uint64_t steps = 0;
  auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
  while (d == 1) {
    if (++steps > budget) return 0;
    x = f(x);
    y = f(f(y));
    d = std::gcd(x > y ? x - y : y - x, n);
  }
  return d == n ? 0 : d;
}

inline void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes, std::uint64_t budget) {
  if (n == 1) return;
  if (is_prime(n)) { primes.push_back(n); return; }
  for (std::uint64_t p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) { primes.push_back(p); n /= p; }
    if (n == 1) return;
  }
  if (n == 1) return;
  if (is_prime(n)) { primes.push_back(n); return; }
  for (std::uint64_t c = 1; c < 40; ++c) {
    std::uint64_t d = pollard_rho(n, c, budget);
    if (d != 0) {
      factor_into(d, primes, budget);
      factor_into(n / d, primes, budget);
      return;
    }
  }
  throw BudgetExceeded("factorization budget exceeded for " + std::to_string(n));
}

}  // namespace detail

inline std::vector<std::uint64_t> factorize(std::uint64_t n, std::uint64_t budget = 40000000) {
  std::vector<std::uint64_t> primes;
  detail::factor_into(n, primes, budget);
  std::sort(primes.begin(), primes.end());
  return primes;
}

// Squarefree part d of n, i.e. n = u^2 * d with d squarefree.
inline std::uint64_t squarefree_part(std::uint64_t n, std::uint64_t budget = 40000000) {
  auto primes = factorize(n, budget);
  std::uint64_t d = 1;
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    if ((j - i) & 1) d *= primes[i];
    i = j;
  }
  return d;
}

struct WitnessRecord {
  std::uint64_t a = 0;
  std::uint64_t n = 0;
  std::uint64_t squarefree_d = 1;   // squarefree part of a*n
  std::uint64_t witness = 0;        // least odd prime p with p ∤ an and a*x^2 ≡ n (mod p) solvable
  bool square_case = false;         // a*n a perfect square (every eligible p works)
  double power_bound = 0;           // (4an)^{3/8}
  double log_bound = 0;             // log(an)
  bool within_power_bound = false;  // witness <= (4an)^{3/8}
};

// Finds the least odd prime p not dividing a*n such that the congruence
// a*x^2 ≡ n (mod p) has a solution.  When a*n is a square this holds for
// every eligible p; otherwise solvability is the Euler criterion on the
// squarefree part d of a*n.
inline WitnessRecord witness_prime(std::uint64_t a, std::uint64_t n,
                                   std::uint64_t budget = 40000000) {
  if (a < 1 || n < 1 || a * n < 2) throw std::invalid_argument("witness_prime: need a*n >= 2");
  WitnessRecord rec;
  rec.a = a;
  rec.n = n;
  std::uint64_t an = a * n;
  rec.squarefree_d = squarefree_part(an, budget);
  rec.square_case = (rec.squarefree_d == 1);
  rec.power_bound = std::pow(4.0 * static_cast<double>(an), 3.0 / 8.0);
  rec.log_bound = std::log(static_cast<double>(an));
  for (std::uint64_t p = 3;; p += 2) {
    if (!is_prime(p) || an % p == 0) continue;
    if (rec.square_case || powmod(rec.squarefree_d % p, (p - 1) / 2, p) == 1) {
      rec.witness = p;
      break;
    }
  }
  rec.within_power_bound = static_cast<double>(rec.witness) <= rec.power_bound;
  return rec;
}

// Exhaustive solvability recheck of a*x^2 ≡ n (mod p); p is small.
inline bool congruence_solvable(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x)
    if (mulmod(a % p, mulmod(x, x, p), p) == n % p) return true;
  return false;
}

}  // namespace quintet::primes
