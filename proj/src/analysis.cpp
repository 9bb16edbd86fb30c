#include "z4seq/analysis.hpp"

#include <algorithm>
#include <string>

#include "z4seq/error.hpp"
#include "z4seq/lfsr.hpp"
#include "z4seq/numtheory.hpp"

namespace z4seq {

SpectralContext context_for_period(std::uint64_t period, int r_max) {
  if (period % 2 == 0) {
    throw Error(ErrorCode::PeriodNotDividing, "even periods have no roots of unity here");
  }
  const std::uint64_t r = period == 1 ? 1 : mult_order(2, period);
  const int cap = std::min(r_max, kDefaultRMax);
  if (r > static_cast<std::uint64_t>(cap)) {
    throw Error(ErrorCode::DegreeTooLarge, "ord_" + std::to_string(period) + "(2) = " +
                                               std::to_string(r) + " exceeds cap " +
                                               std::to_string(cap));
  }
  SpectralContext ctx;
  ctx.ring = make_ring(static_cast<int>(r), cap);
  ctx.beta = root_of_unity(*ctx.ring, period);
  ctx.period = period;
  return ctx;
}

SpectralContext canonical_context(const CyclotomicSystem& system, int r_max) {
  return context_for_period(system.n(), r_max);
}

PowerTable::PowerTable(const GrElement& gamma, std::uint64_t order) {
  powers_.reserve(order);
  GrElement cur = gamma.ring()->one();
  for (std::uint64_t k = 0; k < order; ++k) {
    powers_.push_back(cur);
    cur *= gamma;
  }
}

GrElement class_sum(const CyclotomicSystem& system, int i, const GrElement& gamma) {
  return class_sum(system, i, PowerTable(gamma, system.n()), 1);
}

GrElement class_sum(const CyclotomicSystem& system, int i, const PowerTable& beta_powers,
                    std::uint64_t k) {
  const std::uint64_t n = system.n();
  GrElement acc = beta_powers.at(0).ring()->zero();
  k %= n;
  for (std::uint32_t u : system.members(i)) acc += beta_powers.at(mul_mod(u, k, n));
  return acc;
}

ClassSumVector ClassSumVector::rotated(int shift) const {
  ClassSumVector out;
  out.base = ((base + shift) % 4 + 4) % 4;
  for (int k = 0; k < 4; ++k) {
    out.values[static_cast<std::size_t>(k)] =
        values[static_cast<std::size_t>(((k + shift) % 4 + 4) % 4)];
  }
  return out;
}

GrElement ClassSumVector::dot(const ClassSumVector& other) const {
  GrElement acc = values[0].ring()->zero();
  for (std::size_t k = 0; k < 4; ++k) acc += values[k] * other.values[k];
  return acc;
}

ClassSumVector class_sum_vector(const CyclotomicSystem& system, int base,
                                const GrElement& gamma) {
  const PowerTable table(gamma, system.n());
  ClassSumVector out;
  out.base = ((base % 4) + 4) % 4;
  for (int k = 0; k < 4; ++k) {
    out.values[static_cast<std::size_t>(k)] = class_sum(system, base + k, table, 1);
  }
  return out;
}

GrElement DefiningPolynomial::evaluate(std::uint64_t u) const {
  const std::uint64_t t = period();
  const GrElement x = beta.pow(u % t);
  GrElement acc = ring->zero();
  GrElement power = ring->one();
  for (std::uint64_t i = 0; i < t; ++i) {
    acc += coeffs[i] * power;
    power *= x;
  }
  return acc;
}

std::size_t DefiningPolynomial::nonzero_count() const {
  std::size_t count = 0;
  for (const auto& c : coeffs) count += c.is_zero() ? 0 : 1;
  return count;
}

namespace {

void check_transform_preconditions(std::uint64_t period, const GaloisRing& ring,
                                   const GrElement& beta) {
  if (beta.ring() != &ring) {
    throw Error(ErrorCode::RingMismatch, "beta does not belong to the ring");
  }
  if (ring.unit_order() % period != 0) {
    throw Error(ErrorCode::PeriodNotDividing,
                std::to_string(period) + " does not divide 2^" +
                    std::to_string(ring.degree()) + " - 1");
  }
  if (!has_order(beta, period)) {
    throw Error(ErrorCode::PeriodMismatch,
                "beta is not a primitive " + std::to_string(period) + "-th root of unity");
  }
  if (period % 4 != 1) {
    throw Error(ErrorCode::PeriodNotCongruent1Mod4,
                "period " + std::to_string(period) + " is not 1 mod 4");
  }
}

}  // namespace

DefiningPolynomial dft(const QuaternarySequence& seq,
                       const std::shared_ptr<const GaloisRing>& ring,
                       const GrElement& beta) {
  const std::uint64_t t = seq.period();
  check_transform_preconditions(t, *ring, beta);
  const PowerTable table(beta, t);
  DefiningPolynomial out{ring, beta, std::vector<GrElement>(t, ring->zero())};
  const auto s = seq.digits();
  for (std::uint64_t i = 0; i < t; ++i) {
    GrElement acc = ring->zero();
    std::uint64_t step = 0;  // i * u mod t
    for (std::uint64_t u = 0; u < t; ++u) {
      if (s[u] != 0) acc += static_cast<int>(s[u]) * table.at(t - step);
      step += i;
      if (step >= t) step -= t;
    }
    out.coeffs[i] = acc;
  }
  return out;
}

DefiningPolynomial dft(const QuaternarySequence& seq, const SpectralContext& ctx) {
  return dft(seq, ctx.ring, ctx.beta);
}

RhoInfo rho_constancy(const CyclotomicSystem& system, const SpectralContext& ctx) {
  const PowerTable table(ctx.beta, system.n());
  GrElement rho = ctx.ring->zero();
  for (int i = 1; i < 4; ++i) rho += i * class_sum(system, i, table);
  const bool in_z4 = is_constant(rho).has_value();
  return {rho, in_z4};
}

DefiningPolynomial defining_poly_formula(const CyclotomicSystem& system,
                                         const SpectralContext& ctx) {
  const std::uint64_t n = system.n();
  check_transform_preconditions(n, *ctx.ring, ctx.beta);
  const GrElement rho = rho_constancy(system, ctx).rho;
  const GaloisRing& ring = *ctx.ring;
  const bool case1 = system.case_tag() == CaseTag::Case1;

  std::array<GrElement, 4> class_coeff;
  for (int i = 0; i < 4; ++i) {
    class_coeff[static_cast<std::size_t>(i)] = rho + ring.constant(case1 ? -i : 2 - i);
  }
  const GrElement two = ring.constant(2);

  DefiningPolynomial out{ctx.ring, ctx.beta, std::vector<GrElement>(n, ring.zero())};
  for (std::uint64_t u = 0; u < n; ++u) {
    const ClassLabel label = system.label_at(u);
    if (is_unit_class(label)) {
      out.coeffs[u] = class_coeff[static_cast<std::size_t>(label)];
    } else if (label == ClassLabel::Q) {
      out.coeffs[u] = case1 ? ring.zero() : two;
    } else {
      out.coeffs[u] = two;  // R and P
    }
  }
  return out;
}

GrElement inner_product_check(const CyclotomicSystem& system, const SpectralContext& ctx,
                              int i, int j) {
  const ClassSumVector c0 = class_sum_vector(system, 0, ctx.beta);
  const auto quarter = static_cast<int>(((system.q() - 1) / 4) % 4);
  return c0.rotated(i).dot(c0.rotated(j)) + ctx.ring->constant(quarter);
}

std::size_t lc_by_count(const DefiningPolynomial& defpoly) { return defpoly.nonzero_count(); }

std::uint64_t lc_by_theorem(const CyclotomicSystem& system) {
  const std::uint64_t p = system.p(), q = system.q();
  if (system.case_tag() == CaseTag::Case2) return p * q;
  switch (locate_two(system)) {
    case 0: return q + 3 * (p - 1) * (q - 1) / 4;
    case 2: return p * q - p + 1;
    default:
      throw Error(ErrorCode::InternalCaseError,
                  "2 lies in D1 or D3 although q = 1 (mod 8)");
  }
}

AnalysisReport analyze(const CyclotomicSystem& system, int r_max) {
  AnalysisReport report;
  report.p = system.p();
  report.q = system.q();
  report.case_tag = system.case_tag();
  report.two_class = locate_two(system);
  report.lc_formula = lc_by_theorem(system);

  const SpectralContext ctx = canonical_context(system, r_max);
  report.ring = ctx.ring;
  report.ring_degree = ctx.ring->degree();
  const RhoInfo rho = rho_constancy(system, ctx);
  report.rho = rho.rho;
  report.rho_in_z4 = rho.in_z4;

  const QuaternarySequence seq = generate(system);
  report.lc_dft_count = lc_by_count(dft(seq, ctx));
  report.lc_reeds_sloane = linear_complexity(seq);
  report.agree = report.lc_formula == report.lc_dft_count &&
                 report.lc_dft_count == report.lc_reeds_sloane;
  return report;
}

}  // namespace z4seq
