#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z4seq/analysis.hpp"
#include "z4seq/cyclotomy.hpp"
#include "z4seq/galois_ring.hpp"

namespace z4seq {

/// Parameters of the trace representation of (e_u).
///
/// Each class sum D_i(beta^u) is rebuilt from traces TR_d^ell(beta^{u r})
/// over representatives r = g^{4t+i} h^j (t < class_rep_bound, j < 4), where
/// d = inner_degree is epsilon in Case1 and 4 in Case2. The representatives
/// must hit every coset of <2^d> inside D_i exactly once.
struct TraceParams {
  std::uint64_t ell = 0;    // ord_pq(2)
  std::uint64_t ell_p = 0;  // ord_p(2)
  std::uint64_t ell_q = 0;  // ord_q(2)
  int epsilon = 0;          // 1 if 2 in D0, 2 if 2 in D2; 0 in Case2
  int inner_degree = 0;
  std::uint64_t class_rep_bound = 0;
  GrElement rho;
};

/// Derives the parameters and checks every divisibility and coverage
/// condition the formula needs. Throws TraceFormulaPreconditionFailed naming
/// the first condition that fails; requires the ring degree to equal ell.
TraceParams trace_params(const CyclotomicSystem& system, const SpectralContext& ctx);

/// How often each element of D_i is produced by the representatives
/// g^{4t+i} h^j (t < rep_bound, j < 4) times the powers of 2^step below
/// coset_size. Index = residue mod pq; zero outside the covered set.
std::vector<std::uint32_t> class_cover_multiplicity(const CyclotomicSystem& system, int i,
                                                    std::uint64_t rep_bound, int step,
                                                    std::uint64_t coset_size);

/// The trace expression at index u, projected to Z4. Throws
/// NonConstantResult if the evaluated ring element is not in Z4.
std::uint8_t eval_trace_repr(const CyclotomicSystem& system, const SpectralContext& ctx,
                             const TraceParams& params, std::uint64_t u);

struct TraceCheck {
  bool preconditions_hold = false;
  std::string precondition_failure;
  bool passed = false;
  std::optional<std::uint64_t> first_mismatch;
  std::uint64_t checked = 0;
};

/// Evaluates the representation at every u in [0, pq) against generate().
/// A failed precondition is reported in the result, not thrown.
TraceCheck check_trace_repr(const CyclotomicSystem& system, const SpectralContext& ctx);

}  // namespace z4seq
