#include "z4seq/trace_repr.hpp"

#include <array>
#include <string>

#include "z4seq/error.hpp"
#include "z4seq/numtheory.hpp"
#include "z4seq/sequence.hpp"

namespace z4seq {

namespace {

[[noreturn]] void precondition_failed(const std::string& what) {
  throw Error(ErrorCode::TraceFormulaPreconditionFailed, what);
}

// g^i * base mod n for i < count: coset representatives of <2> in base*Z_m^*.
std::vector<std::uint64_t> line_reps(const CyclotomicSystem& s, std::uint64_t base,
                                     std::uint64_t count) {
  std::vector<std::uint64_t> reps;
  for (std::uint64_t i = 0; i < count; ++i) {
    reps.push_back(mul_mod(pow_mod(s.g(), i, s.n()), base, s.n()));
  }
  return reps;
}

bool covers_once(const std::vector<std::uint32_t>& mult,
                 const std::vector<bool>& target) {
  for (std::size_t u = 0; u < mult.size(); ++u) {
    if (mult[u] != (target[u] ? 1U : 0U)) return false;
  }
  return true;
}

std::vector<std::uint32_t> cover(std::uint64_t n, const std::vector<std::uint64_t>& reps,
                                 std::uint64_t multiplier, std::uint64_t coset_size) {
  std::vector<std::uint32_t> mult(n, 0);
  for (std::uint64_t r : reps) {
    std::uint64_t v = r;
    for (std::uint64_t k = 0; k < coset_size; ++k) {
      ++mult[v];
      v = mul_mod(v, multiplier, n);
    }
  }
  return mult;
}

std::vector<std::uint64_t> class_reps(const CyclotomicSystem& s, int i,
                                      std::uint64_t rep_bound) {
  std::vector<std::uint64_t> reps;
  for (std::uint64_t t = 0; t < rep_bound; ++t) {
    for (int j = 0; j < 4; ++j) reps.push_back(s.representative(t, i, j));
  }
  return reps;
}

class TraceEvaluator {
 public:
  TraceEvaluator(const CyclotomicSystem& s, const SpectralContext& ctx, const TraceParams& tp)
      : s_(s), ctx_(ctx), tp_(tp), beta_(ctx.beta, s.n()) {
    q_line_ = line_reps(s, s.p(), (s.q() - 1) / tp.ell_q);
    if (s.case_tag() == CaseTag::Case2) p_line_ = line_reps(s, s.q(), (s.p() - 1) / tp.ell_p);
    for (int i = 0; i < 4; ++i) {
      classes_[static_cast<std::size_t>(i)] = class_reps(s, i, tp.class_rep_bound);
    }
  }

  std::uint8_t operator()(std::uint64_t u) const {
    const GaloisRing& ring = *ctx_.ring;
    const std::uint64_t n = s_.n();
    const int ell = static_cast<int>(tp_.ell);
    GrElement acc = ring.constant(2);
    for (std::uint64_t rep : q_line_) {
      acc += 2 * trace(beta_.at(mul_mod(u, rep, n)), 1, static_cast<int>(tp_.ell_q));
    }
    for (std::uint64_t rep : p_line_) {
      acc += 2 * trace(beta_.at(mul_mod(u, rep, n)), 1, static_cast<int>(tp_.ell_p));
    }
    const bool case1 = s_.case_tag() == CaseTag::Case1;
    for (int i = 0; i < 4; ++i) {
      GrElement inner = ring.zero();
      for (std::uint64_t rep : classes_[static_cast<std::size_t>(i)]) {
        const GrElement t = trace(beta_.at(mul_mod(u, rep, n)), tp_.inner_degree, ell);
        if (!in_subring(t, tp_.inner_degree)) {
          throw Error(ErrorCode::InternalError, "inner trace left its subring");
        }
        inner += t;
      }
      const GrElement coeff = tp_.rho + ring.constant(case1 ? -i : 2 - i);
      acc += coeff * inner;
    }
    const auto value = is_constant(acc);
    if (!value) {
      throw Error(ErrorCode::NonConstantResult,
                  "trace expression at u = " + std::to_string(u) + " is " + to_string(acc));
    }
    return *value;
  }

 private:
  const CyclotomicSystem& s_;
  const SpectralContext& ctx_;
  const TraceParams& tp_;
  PowerTable beta_;
  std::vector<std::uint64_t> q_line_, p_line_;
  std::array<std::vector<std::uint64_t>, 4> classes_;
};

}  // namespace

std::vector<std::uint32_t> class_cover_multiplicity(const CyclotomicSystem& system, int i,
                                                    std::uint64_t rep_bound, int step,
                                                    std::uint64_t coset_size) {
  const std::uint64_t multiplier = pow_mod(2, static_cast<std::uint64_t>(step), system.n());
  return cover(system.n(), class_reps(system, i, rep_bound), multiplier, coset_size);
}

TraceParams trace_params(const CyclotomicSystem& system, const SpectralContext& ctx) {
  const std::uint64_t n = system.n(), e = system.e();
  TraceParams tp;
  tp.ell = mult_order(2, n);
  tp.ell_p = mult_order(2, system.p());
  tp.ell_q = mult_order(2, system.q());
  if (static_cast<std::uint64_t>(ctx.ring->degree()) != tp.ell) {
    throw Error(ErrorCode::InvalidArgument, "ring degree must equal ord_pq(2)");
  }

  const std::string ell_text = std::to_string(tp.ell);
  if (system.case_tag() == CaseTag::Case1) {
    const int two = locate_two(system);
    if (two == 0) {
      tp.epsilon = 1;
    } else if (two == 2) {
      tp.epsilon = 2;
    } else {
      throw Error(ErrorCode::InternalCaseError, "2 lies in D1 or D3 in Case1");
    }
    tp.inner_degree = tp.epsilon;
    if (tp.ell % static_cast<std::uint64_t>(tp.epsilon) != 0) {
      precondition_failed("epsilon = " + std::to_string(tp.epsilon) +
                          " does not divide ell = " + ell_text);
    }
    const std::uint64_t num = e * static_cast<std::uint64_t>(tp.epsilon);
    if (num % (4 * tp.ell) != 0) {
      precondition_failed("4*ell/epsilon = " + std::to_string(4 * tp.ell / tp.epsilon) +
                          " does not divide e = " + std::to_string(e));
    }
    tp.class_rep_bound = num / (4 * tp.ell);
  } else {
    tp.inner_degree = 4;
    if (tp.ell % 4 != 0) precondition_failed("4 does not divide ell = " + ell_text);
    if (e % tp.ell != 0) {
      precondition_failed("ell = " + ell_text + " does not divide e = " + std::to_string(e));
    }
    tp.class_rep_bound = e / tp.ell;
  }

  const std::uint64_t coset = tp.ell / static_cast<std::uint64_t>(tp.inner_degree);
  for (int i = 0; i < 4; ++i) {
    const auto mult = class_cover_multiplicity(system, i, tp.class_rep_bound, tp.inner_degree,
                                               coset);
    std::vector<bool> target(n, false);
    for (std::uint32_t u : system.members(i)) target[u] = true;
    if (!covers_once(mult, target)) {
      precondition_failed("representatives do not cover D" + std::to_string(i) +
                          " exactly once");
    }
  }
  auto check_line = [&](std::uint64_t base, std::uint64_t m, std::uint64_t ell_m,
                        ClassLabel label) {
    const auto mult = cover(n, line_reps(system, base, (m - 1) / ell_m), 2, ell_m);
    std::vector<bool> target(n, false);
    for (std::uint64_t u = 0; u < n; ++u) target[u] = system.label_at(u) == label;
    if (!covers_once(mult, target)) {
      precondition_failed("cyclotomic cosets of 2 do not cover " +
                          std::string(label_name(label)));
    }
  };
  check_line(system.p(), system.q(), tp.ell_q, ClassLabel::P);
  if (system.case_tag() == CaseTag::Case2) {
    check_line(system.q(), system.p(), tp.ell_p, ClassLabel::Q);
  }

  tp.rho = rho_constancy(system, ctx).rho;
  return tp;
}

std::uint8_t eval_trace_repr(const CyclotomicSystem& system, const SpectralContext& ctx,
                             const TraceParams& params, std::uint64_t u) {
  return TraceEvaluator(system, ctx, params)(u % system.n());
}

TraceCheck check_trace_repr(const CyclotomicSystem& system, const SpectralContext& ctx) {
  TraceCheck result;
  TraceParams tp;
  try {
    tp = trace_params(system, ctx);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::TraceFormulaPreconditionFailed) throw;
    result.precondition_failure = err.what();
    return result;
  }
  result.preconditions_hold = true;
  const QuaternarySequence seq = generate(system);
  const TraceEvaluator eval(system, ctx, tp);
  for (std::uint64_t u = 0; u < system.n(); ++u) {
    ++result.checked;
    if (eval(u) != seq[u]) {
      result.first_mismatch = u;
      return result;
    }
  }
  result.passed = true;
  return result;
}

}  // namespace z4seq
