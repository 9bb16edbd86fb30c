#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "z4seq/cyclotomy.hpp"
#include "z4seq/galois_ring.hpp"
#include "z4seq/sequence.hpp"

namespace z4seq {

/// A ring holding primitive T-th roots of unity together with the canonical
/// one, beta = x^((2^r - 1) / T).
struct SpectralContext {
  std::shared_ptr<const GaloisRing> ring;
  GrElement beta;
  std::uint64_t period = 0;
};

/// Ring of degree ord_T(2); throws DegreeTooLarge above r_max.
SpectralContext context_for_period(std::uint64_t period, int r_max = kDefaultRMax);
SpectralContext canonical_context(const CyclotomicSystem& system,
                                  int r_max = kDefaultRMax);

/// gamma^0 .. gamma^(order-1), indexed modulo the order.
class PowerTable {
 public:
  PowerTable(const GrElement& gamma, std::uint64_t order);
  const GrElement& at(std::uint64_t exponent) const noexcept {
    return powers_[exponent % powers_.size()];
  }
  std::uint64_t order() const noexcept { return powers_.size(); }

 private:
  std::vector<GrElement> powers_;
};

/// D_i(gamma) = sum of gamma^u over u in D_i, evaluated directly.
GrElement class_sum(const CyclotomicSystem& system, int i, const GrElement& gamma);
/// D_i(beta^k) read from a power table of beta (order pq).
GrElement class_sum(const CyclotomicSystem& system, int i, const PowerTable& beta_powers,
                    std::uint64_t k = 1);

/// (D_i(gamma), D_{i+1}(gamma), D_{i+2}(gamma), D_{i+3}(gamma)).
struct ClassSumVector {
  int base = 0;
  std::array<GrElement, 4> values;

  /// The vector for base index base + shift.
  ClassSumVector rotated(int shift) const;
  GrElement dot(const ClassSumVector& other) const;
};

ClassSumVector class_sum_vector(const CyclotomicSystem& system, int base,
                                const GrElement& gamma);

/// Coefficients rho_0..rho_{T-1} with s_u = sum_i rho_i beta^(iu).
struct DefiningPolynomial {
  std::shared_ptr<const GaloisRing> ring;
  GrElement beta;
  std::vector<GrElement> coeffs;

  std::size_t period() const noexcept { return coeffs.size(); }
  /// G(beta^u).
  GrElement evaluate(std::uint64_t u) const;
  std::size_t nonzero_count() const;
};

/// rho_i = sum_u s_u beta^(-iu). Requires ord(beta) = T, T | 2^r - 1 and
/// T = 1 (mod 4) so that the inverse transform needs no 1/T factor.
DefiningPolynomial dft(const QuaternarySequence& seq,
                       const std::shared_ptr<const GaloisRing>& ring,
                       const GrElement& beta);
DefiningPolynomial dft(const QuaternarySequence& seq, const SpectralContext& ctx);

struct RhoInfo {
  GrElement rho;
  bool in_z4 = false;
};

/// rho = D_1(beta) + 2 D_2(beta) + 3 D_3(beta).
RhoInfo rho_constancy(const CyclotomicSystem& system, const SpectralContext& ctx);

/// The closed-form defining polynomial of (e_u) for the system's case.
DefiningPolynomial defining_poly_formula(const CyclotomicSystem& system,
                                         const SpectralContext& ctx);

/// C_i(beta) . C_j(beta)^T + (q-1)/4.
GrElement inner_product_check(const CyclotomicSystem& system, const SpectralContext& ctx,
                              int i, int j);

std::size_t lc_by_count(const DefiningPolynomial& defpoly);

/// Closed-form linear complexity of (e_u).
std::uint64_t lc_by_theorem(const CyclotomicSystem& system);

struct AnalysisReport {
  std::uint64_t p = 0, q = 0;
  CaseTag case_tag = CaseTag::Case1;
  int two_class = 0;
  int ring_degree = 0;
  std::shared_ptr<const GaloisRing> ring;
  GrElement rho;
  bool rho_in_z4 = false;
  std::uint64_t lc_formula = 0;
  std::uint64_t lc_dft_count = 0;
  std::uint64_t lc_reeds_sloane = 0;
  bool agree = false;
};

AnalysisReport analyze(const CyclotomicSystem& system, int r_max = kDefaultRMax);

}  // namespace z4seq
