#include "z4seq/galois_ring.hpp"

#include <sstream>

#include "z4seq/error.hpp"
#include "z4seq/numtheory.hpp"

namespace z4seq {

namespace {

__extension__ typedef unsigned __int128 u128;

// Z4 addition on bit-planes: the carry out of bit 0 flips bit 1.
template <typename W>
inline void planes_add(W& lo, W& hi, W blo, W bhi) noexcept {
  const W carry = lo & blo;
  lo ^= blo;
  hi ^= bhi ^ carry;
}

inline std::uint64_t mask_for(int r) noexcept {
  return r >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

// ---- GF(2)[x] / (f) with deg f = r <= 64; f_low holds f - x^r. ----

std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f_low,
                         int r) noexcept {
  u128 prod = 0;
  while (b != 0) {
    const int i = __builtin_ctzll(b);
    prod ^= static_cast<u128>(a) << i;
    b &= b - 1;
  }
  for (int d = 2 * r - 2; d >= r; --d) {
    if ((prod >> d) & 1U) {
      prod ^= static_cast<u128>(1) << d;
      prod ^= static_cast<u128>(f_low) << (d - r);
    }
  }
  return static_cast<std::uint64_t>(prod) & mask_for(r);
}

std::uint64_t gf2_powmod_x(std::uint64_t exp, std::uint64_t f_low, int r) noexcept {
  const std::uint64_t x = r == 1 ? (f_low & 1U) : 2U;
  std::uint64_t result = 1, base = x;
  while (exp != 0) {
    if (exp & 1U) result = gf2_mulmod(result, base, f_low, r);
    base = gf2_mulmod(base, base, f_low, r);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------- GrElement

int GrElement::degree() const noexcept { return ring_ ? ring_->degree() : 0; }

std::vector<std::uint8_t> GrElement::coefficients() const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(degree()));
  for (int i = 0; i < degree(); ++i) out[static_cast<std::size_t>(i)] = coeff(i);
  return out;
}

void GrElement::check_same_ring(const GrElement& other) const {
  if (ring_ != other.ring_) {
    throw Error(ErrorCode::RingMismatch, "operands belong to different rings");
  }
}

GrElement& GrElement::operator+=(const GrElement& other) {
  check_same_ring(other);
  planes_add(lo_, hi_, other.lo_, other.hi_);
  return *this;
}

GrElement& GrElement::operator-=(const GrElement& other) {
  check_same_ring(other);
  planes_add(lo_, hi_, other.lo_, other.hi_ ^ other.lo_);
  return *this;
}

GrElement& GrElement::operator*=(const GrElement& other) {
  check_same_ring(other);
  if (ring_ != nullptr) *this = ring_->multiply(*this, other);
  return *this;
}

GrElement operator*(int c, const GrElement& a) noexcept {
  switch (((c % 4) + 4) % 4) {
    case 0: return GrElement(a.ring_, 0, 0);
    case 1: return a;
    case 2: return GrElement(a.ring_, 0, a.lo_);
    default: return -a;
  }
}

GrElement GrElement::pow(std::uint64_t exponent) const {
  GrElement result = ring_->one();
  GrElement base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = ring_->multiply(result, base);
    exponent >>= 1U;
    if (exponent != 0) base = ring_->multiply(base, base);
  }
  return result;
}

// --------------------------------------------------------------- GaloisRing

GaloisRing::GaloisRing(Key, int r, std::vector<std::uint8_t> binary,
                       std::vector<std::uint8_t> modulus)
    : r_(r), mask_(mask_for(r)), binary_(std::move(binary)), modulus_(std::move(modulus)) {
  // x^r = -(h_0 + h_1 x + ... + h_{r-1} x^{r-1}).
  std::uint64_t lo = 0, hi = 0;
  for (int i = 0; i < r_; ++i) {
    const std::uint8_t c = static_cast<std::uint8_t>((4 - modulus_[static_cast<std::size_t>(i)]) % 4);
    lo |= static_cast<std::uint64_t>(c & 1U) << i;
    hi |= static_cast<std::uint64_t>((c >> 1U) & 1U) << i;
  }
  const std::uint64_t t0_lo = lo, t0_hi = hi;
  for (int j = 0; j + 2 <= r_; ++j) {
    reduction_.emplace_back(lo, hi);
    // Multiply by x; the coefficient pushed to degree r folds back via x^r.
    const int top = r_ - 1;
    const std::uint64_t c_lo = (lo >> top) & 1U, c_hi = (hi >> top) & 1U;
    lo = (lo << 1U) & mask_;
    hi = (hi << 1U) & mask_;
    const int c = static_cast<int>(c_lo | (c_hi << 1U));
    const GrElement t0 = c * GrElement(this, t0_lo, t0_hi);
    planes_add(lo, hi, t0.lo_, t0.hi_);
  }
}

GrElement GaloisRing::constant(int c) const noexcept { return c * one(); }

GrElement GaloisRing::generator() const noexcept {
  if (r_ == 1) return constant(4 - modulus_[0]);
  return GrElement(this, 2, 0);
}

GrElement GaloisRing::from_coefficients(std::span<const std::uint8_t> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(r_)) {
    throw Error(ErrorCode::InvalidArgument, "too many coefficients for ring degree");
  }
  std::uint64_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const unsigned c = coeffs[i] % 4U;
    lo |= static_cast<std::uint64_t>(c & 1U) << i;
    hi |= static_cast<std::uint64_t>((c >> 1U) & 1U) << i;
  }
  return GrElement(this, lo, hi);
}

GrElement GaloisRing::multiply(const GrElement& a, const GrElement& b) const noexcept {
  // (A0 + 2A1)(B0 + 2B1) = (A0 + 2A1) B0 + 2 A0 B1  (mod 4).
  u128 lo = 0, hi = 0;
  std::uint64_t b0 = b.lo_;
  while (b0 != 0) {
    const int i = __builtin_ctzll(b0);
    planes_add<u128>(lo, hi, static_cast<u128>(a.lo_) << i, static_cast<u128>(a.hi_) << i);
    b0 &= b0 - 1;
  }
  std::uint64_t b1 = b.hi_;
  while (b1 != 0) {
    const int i = __builtin_ctzll(b1);
    hi ^= static_cast<u128>(a.lo_) << i;
    b1 &= b1 - 1;
  }

  std::uint64_t rlo = static_cast<std::uint64_t>(lo) & mask_;
  std::uint64_t rhi = static_cast<std::uint64_t>(hi) & mask_;
  const std::uint64_t top_lo = static_cast<std::uint64_t>(lo >> r_);
  const std::uint64_t top_hi = static_cast<std::uint64_t>(hi >> r_);
  std::uint64_t nonzero = top_lo | top_hi;
  while (nonzero != 0) {
    const int j = __builtin_ctzll(nonzero);
    nonzero &= nonzero - 1;
    const auto [tlo, thi] = reduction_[static_cast<std::size_t>(j)];
    switch (((top_lo >> j) & 1U) | (((top_hi >> j) & 1U) << 1U)) {
      case 1: planes_add(rlo, rhi, tlo, thi); break;
      case 2: planes_add(rlo, rhi, std::uint64_t{0}, tlo); break;
      case 3: planes_add(rlo, rhi, tlo, thi ^ tlo); break;
      default: break;
    }
  }
  return GrElement(this, rlo, rhi);
}

std::vector<std::uint8_t> smallest_primitive_binary(int r) {
  if (r < 1 || r > 64) throw Error(ErrorCode::InvalidArgument, "degree out of range");
  const std::uint64_t order = mask_for(r);
  const std::vector<std::uint64_t> divisors = order > 1 ? prime_divisors(order)
                                                        : std::vector<std::uint64_t>{};
  const std::uint64_t limit = mask_for(r);
  for (std::uint64_t f_low = 1;; f_low += 2) {
    bool primitive = gf2_powmod_x(order, f_low, r) == 1;
    for (std::size_t k = 0; primitive && k < divisors.size(); ++k) {
      if (gf2_powmod_x(order / divisors[k], f_low, r) == 1) primitive = false;
    }
    if (primitive) {
      std::vector<std::uint8_t> f(static_cast<std::size_t>(r) + 1, 0);
      for (int i = 0; i < r; ++i) f[static_cast<std::size_t>(i)] = (f_low >> i) & 1U;
      f[static_cast<std::size_t>(r)] = 1;
      return f;
    }
    if (f_low >= limit - 1) break;
  }
  throw Error(ErrorCode::InternalError, "no primitive binary polynomial found");
}

std::vector<std::uint8_t> graeffe_lift(std::span<const std::uint8_t> binary) {
  const std::size_t r = binary.size() - 1;
  std::vector<int> prod(2 * r + 1, 0);
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t j = 0; j <= r; ++j) {
      const int sign = (j % 2 == 0) ? 1 : -1;
      prod[i + j] += binary[i] * binary[j] * sign;
    }
  }
  const int outer = (r % 2 == 0) ? 1 : -1;
  std::vector<std::uint8_t> h(r + 1);
  for (std::size_t i = 0; i <= r; ++i) {
    h[i] = static_cast<std::uint8_t>((((outer * prod[2 * i]) % 4) + 4) % 4);
  }
  return h;
}

std::shared_ptr<const GaloisRing> make_ring(int r, int r_max) {
  const int cap = r_max < kDefaultRMax ? r_max : kDefaultRMax;
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "ring degree must be >= 1");
  if (r > cap) {
    throw Error(ErrorCode::DegreeTooLarge, "ring degree " + std::to_string(r) +
                                               " exceeds cap " + std::to_string(cap));
  }
  auto binary = smallest_primitive_binary(r);
  auto modulus = graeffe_lift(binary);
  auto ring = std::make_shared<const GaloisRing>(GaloisRing::Key{}, r, std::move(binary),
                                                 std::move(modulus));
  if (!has_order(ring->generator(), ring->unit_order())) {
    throw Error(ErrorCode::InternalError, "x does not generate the Teichmuller group");
  }
  return ring;
}

TeichmullerParts teichmuller_decompose(const GrElement& a) {
  const int r = a.degree();
  GrElement a1 = a;
  for (int i = 0; i < r; ++i) a1 = a1.square();
  // a - a1 has even coefficients; halve by moving the high plane down.
  const GrElement diff = a - a1;
  GrElement a2 = a.ring()->from_planes(diff.high_plane(), 0);
  for (int i = 0; i < r; ++i) a2 = a2.square();
  return {a1, a2};
}

bool is_teichmuller(const GrElement& a) {
  GrElement t = a;
  for (int i = 0; i < a.degree(); ++i) t = t.square();
  return t == a;
}

namespace {

void require_divides(int s, int r) {
  if (s < 1 || r % s != 0) {
    throw Error(ErrorCode::NotDivisor,
                std::to_string(s) + " does not divide " + std::to_string(r));
  }
}

GrElement repeated_square(GrElement a, int times) {
  for (int i = 0; i < times; ++i) a = a.square();
  return a;
}

// Sum of frobenius(., s)^k (a) for k < terms, given the parts of a.
GrElement conjugate_sum(const TeichmullerParts& parts, int s, int terms) {
  GrElement u = parts.unit_part, v = parts.two_part;
  GrElement sum = u + 2 * v;
  for (int k = 1; k < terms; ++k) {
    u = repeated_square(u, s);
    v = repeated_square(v, s);
    sum += u + 2 * v;
  }
  return sum;
}

}  // namespace

GrElement frobenius(const GrElement& a, int s) {
  require_divides(s, a.degree());
  const auto parts = teichmuller_decompose(a);
  return repeated_square(parts.unit_part, s) + 2 * repeated_square(parts.two_part, s);
}

bool in_subring(const GrElement& a, int s) { return frobenius(a, s) == a; }

GrElement trace(const GrElement& a, int s) {
  require_divides(s, a.degree());
  return conjugate_sum(teichmuller_decompose(a), s, a.degree() / s);
}

GrElement trace(const GrElement& a, int s, int m) {
  require_divides(m, a.degree());
  require_divides(s, m);
  const auto parts = teichmuller_decompose(a);
  const GrElement fixed =
      repeated_square(parts.unit_part, m) + 2 * repeated_square(parts.two_part, m);
  if (!(fixed == a)) {
    throw Error(ErrorCode::NotInSubring,
                "element does not lie in GR(4, 4^" + std::to_string(m) + ")");
  }
  return conjugate_sum(parts, s, m / s);
}

bool has_order(const GrElement& a, std::uint64_t order) {
  if (order == 0) return false;
  const GrElement one = a.ring()->one();
  if (!(a.pow(order) == one)) return false;
  if (order == 1) return true;
  for (std::uint64_t l : prime_divisors(order)) {
    if (a.pow(order / l) == one) return false;
  }
  return true;
}

GrElement root_of_unity(const GaloisRing& ring, std::uint64_t period) {
  if (period == 0 || ring.unit_order() % period != 0) {
    throw Error(ErrorCode::PeriodNotDividing,
                std::to_string(period) + " does not divide 2^" +
                    std::to_string(ring.degree()) + " - 1");
  }
  GrElement beta = ring.generator().pow(ring.unit_order() / period);
  if (!has_order(beta, period)) {
    throw Error(ErrorCode::InternalError, "root of unity has the wrong order");
  }
  return beta;
}

std::optional<std::uint8_t> is_constant(const GrElement& a) {
  if (((a.low_plane() | a.high_plane()) >> 1U) != 0) return std::nullopt;
  return a.coeff(0);
}

std::string to_string(const GrElement& a) {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < a.degree(); ++i) {
    if (i) out << ',';
    out << static_cast<int>(a.coeff(i));
  }
  out << ')';
  return out.str();
}

}  // namespace z4seq
