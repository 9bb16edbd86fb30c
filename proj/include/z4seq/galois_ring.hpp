#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace z4seq {

inline constexpr int kDefaultRMax = 64;

class GaloisRing;

/// Element of GR(4, 4^r), stored as two bit-planes: bit i of `lo` and `hi`
/// are the low and high bits of the Z4 coefficient of x^i.
///
/// An element refers to its ring by pointer and must not outlive it.
class GrElement {
 public:
  GrElement() = default;

  const GaloisRing* ring() const noexcept { return ring_; }
  int degree() const noexcept;

  std::uint8_t coeff(int i) const noexcept {
    return static_cast<std::uint8_t>(((lo_ >> i) & 1U) | (((hi_ >> i) & 1U) << 1U));
  }
  std::vector<std::uint8_t> coefficients() const;
  std::uint64_t low_plane() const noexcept { return lo_; }
  std::uint64_t high_plane() const noexcept { return hi_; }
  bool is_zero() const noexcept { return (lo_ | hi_) == 0; }

  GrElement& operator+=(const GrElement& other);
  GrElement& operator-=(const GrElement& other);
  GrElement& operator*=(const GrElement& other);

  friend GrElement operator+(GrElement a, const GrElement& b) { return a += b; }
  friend GrElement operator-(GrElement a, const GrElement& b) { return a -= b; }
  friend GrElement operator*(GrElement a, const GrElement& b) { return a *= b; }
  friend GrElement operator-(const GrElement& a) noexcept {
    return GrElement(a.ring_, a.lo_, a.hi_ ^ a.lo_);
  }
  /// Z4 scalar multiple; c is reduced mod 4.
  friend GrElement operator*(int c, const GrElement& a) noexcept;

  friend bool operator==(const GrElement& a, const GrElement& b) noexcept {
    return a.ring_ == b.ring_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  GrElement pow(std::uint64_t exponent) const;
  GrElement square() const { return *this * *this; }

 private:
  friend class GaloisRing;
  GrElement(const GaloisRing* ring, std::uint64_t lo, std::uint64_t hi) noexcept
      : ring_(ring), lo_(lo), hi_(hi) {}

  void check_same_ring(const GrElement& other) const;

  const GaloisRing* ring_ = nullptr;
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

/// GR(4, 4^r) = Z4[x] / (h(x)), h the Graeffe lift of the smallest primitive
/// binary polynomial of degree r. The class of x generates the Teichmuller
/// group G1 of order 2^r - 1.
class GaloisRing {
 public:
  int degree() const noexcept { return r_; }
  /// Monic modulus coefficients, degree 0..r.
  const std::vector<std::uint8_t>& modulus() const noexcept { return modulus_; }
  /// The primitive binary polynomial the modulus lifts, degree 0..r.
  const std::vector<std::uint8_t>& binary_modulus() const noexcept { return binary_; }
  std::uint64_t mask() const noexcept { return mask_; }
  /// 2^r - 1, the order of the Teichmuller group.
  std::uint64_t unit_order() const noexcept { return mask_; }

  GrElement zero() const noexcept { return GrElement(this, 0, 0); }
  GrElement one() const noexcept { return GrElement(this, 1, 0); }
  GrElement constant(int c) const noexcept;
  /// The residue class of x.
  GrElement generator() const noexcept;
  GrElement from_coefficients(std::span<const std::uint8_t> coeffs) const;
  GrElement from_planes(std::uint64_t lo, std::uint64_t hi) const noexcept {
    return GrElement(this, lo & mask_, hi & mask_);
  }

  GrElement multiply(const GrElement& a, const GrElement& b) const noexcept;

  struct Key {
   private:
    friend std::shared_ptr<const GaloisRing> make_ring(int, int);
    Key() = default;
  };
  GaloisRing(Key, int r, std::vector<std::uint8_t> binary,
             std::vector<std::uint8_t> modulus);

 private:
  int r_;
  std::uint64_t mask_;
  std::vector<std::uint8_t> binary_;
  std::vector<std::uint8_t> modulus_;
  // x^(r+j) mod h for j = 0..r-2, as (lo, hi) planes.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> reduction_;
};

/// Throws DegreeTooLarge when r > r_max (r_max itself is capped at 64).
std::shared_ptr<const GaloisRing> make_ring(int r, int r_max = kDefaultRMax);

/// Smallest primitive polynomial of degree r over GF(2), ordered by the
/// integer whose bit i is the coefficient of x^i. Returns degree 0..r.
std::vector<std::uint8_t> smallest_primitive_binary(int r);

/// Lift h with h(x^2) = (-1)^r f(x) f(-x) (mod 4).
std::vector<std::uint8_t> graeffe_lift(std::span<const std::uint8_t> binary);

struct TeichmullerParts {
  GrElement unit_part;  // a1
  GrElement two_part;   // a2
};

/// a = a1 + 2 a2 with a1, a2 in {0} U G1.
TeichmullerParts teichmuller_decompose(const GrElement& a);

/// t^(2^r) = t, i.e. t lies in the Teichmuller set.
bool is_teichmuller(const GrElement& a);

/// a1^(2^s) + 2 a2^(2^s); requires s | r (NotDivisor).
GrElement frobenius(const GrElement& a, int s);

/// Sum of the r/s conjugates of a under frobenius(., s); requires s | r.
GrElement trace(const GrElement& a, int s);

/// Trace from the subring GR(4, 4^m) down to GR(4, 4^s). Requires s | m,
/// m | r, and a fixed by frobenius(., m) (NotInSubring otherwise).
GrElement trace(const GrElement& a, int s, int m);

/// True when a is fixed by frobenius(., s), i.e. lies in GR(4, 4^s).
bool in_subring(const GrElement& a, int s);

/// a^T = 1 and a^(T/l) != 1 for every prime l | T.
bool has_order(const GrElement& a, std::uint64_t order);

/// x^((2^r - 1) / T), a primitive T-th root of unity. Requires T | 2^r - 1.
GrElement root_of_unity(const GaloisRing& ring, std::uint64_t period);

/// The Z4 value when every coefficient of degree >= 1 vanishes.
std::optional<std::uint8_t> is_constant(const GrElement& a);

/// "(c0,c1,...,c_{r-1})"
std::string to_string(const GrElement& a);

}  // namespace z4seq
