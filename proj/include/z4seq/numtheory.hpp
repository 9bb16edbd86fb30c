#pragma once

#include <cstdint>
#include <vector>

namespace z4seq {

// Exact integer arithmetic on 64-bit magnitudes. Products are formed in
// 128 bits, so every modulus below 2^63 is safe.

bool is_prime(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Least non-negative residue of a signed value.
std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

// Ascending prime factorization (trial division plus Pollard rho).
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

// Smallest k >= 1 with a^k = 1 (mod n). Throws NotCoprime.
std::uint64_t mult_order(std::int64_t a, std::uint64_t n);

bool is_primitive_root(std::uint64_t g, std::uint64_t prime);

/// An odd prime. Construction is the only validation point.
class OddPrime {
 public:
  /// Throws Error(NotPrime) unless `value` is an odd prime.
  explicit OddPrime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  operator std::uint64_t() const noexcept { return value_; }

  friend bool operator==(OddPrime, OddPrime) = default;

 private:
  std::uint64_t value_;
};

/// Smallest positive g that is a primitive root modulo both p and q.
std::uint64_t common_primitive_root(OddPrime p, OddPrime q);

/// Unique x in [0, pq) with x = a (mod p) and x = b (mod q).
std::uint64_t crt_pair(std::int64_t a, OddPrime p, std::int64_t b, OddPrime q);

}  // namespace z4seq
