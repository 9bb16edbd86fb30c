#include "z4seq/numtheory.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

#include "z4seq/error.hpp"

namespace z4seq {

namespace {

__extension__ typedef unsigned __int128 u128;

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d,
                          unsigned s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

std::uint64_t pollard_brent(std::uint64_t n, std::uint64_t c) {
  auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
  std::uint64_t y = 2, x = 2, q = 1, g = 1, ys = 2;
  std::uint64_t r = 1;
  constexpr std::uint64_t kBatch = 128;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
      k += kBatch;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t d = pollard_brent(n, c);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  // -(a+1) avoids overflow at INT64_MIN.
  std::uint64_t neg = static_cast<std::uint64_t>(-(a + 1)) % m;
  return (m - 1 - neg) % m;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This base set is deterministic for n < 3.3e24.
  for (std::uint64_t a : kBases) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> acc;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++acc[p];
      n /= p;
    }
  }
  factor_into(n, acc);
  std::vector<PrimePower> out;
  out.reserve(acc.size());
  for (auto [p, k] : acc) out.push_back({p, k});
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

std::uint64_t mult_order(std::int64_t a, std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 2");
  std::uint64_t base = reduce_mod(a, n);
  if (gcd_u64(base, n) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(a) + ", " +
                                           std::to_string(n) + ") != 1");
  }
  std::uint64_t order = euler_phi(n);
  for (const auto& pp : factorize(order)) {
    for (unsigned k = 0; k < pp.exponent; ++k) {
      if (pow_mod(base, order / pp.prime, n) != 1) break;
      order /= pp.prime;
    }
  }
  return order;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t prime) {
  if (g % prime == 0) return false;
  for (std::uint64_t r : prime_divisors(prime - 1)) {
    if (pow_mod(g, (prime - 1) / r, prime) == 1) return false;
  }
  return true;
}

OddPrime::OddPrime(std::uint64_t value) : value_(value) {
  if (value < 3 || !is_prime(value)) {
    throw Error(ErrorCode::NotPrime, std::to_string(value) + " is not an odd prime");
  }
}

std::uint64_t common_primitive_root(OddPrime p, OddPrime q) {
  if (p == q) throw Error(ErrorCode::EqualPrimes, "p and q must differ");
  const std::uint64_t limit = p.value() * q.value();
  for (std::uint64_t g = 2; g < limit; ++g) {
    if (is_primitive_root(g, p) && is_primitive_root(g, q)) return g;
  }
  throw Error(ErrorCode::NoCommonRoot, "no common primitive root below pq");
}

std::uint64_t crt_pair(std::int64_t a, OddPrime p, std::int64_t b, OddPrime q) {
  if (p == q) throw Error(ErrorCode::EqualPrimes, "p and q must differ");
  const std::uint64_t n = p.value() * q.value();
  const std::uint64_t ar = reduce_mod(a, p), br = reduce_mod(b, q);
  // x = ar + p * t with t = (br - ar) * p^{-1} (mod q).
  const std::uint64_t p_inv = pow_mod(p % q, q - 2, q);
  const std::uint64_t diff = (br + q - ar % q) % q;
  const std::uint64_t t = mul_mod(diff, p_inv, q);
  return (ar + p.value() * t) % n;
}

}  // namespace z4seq
