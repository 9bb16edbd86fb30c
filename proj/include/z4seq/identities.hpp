#pragma once

#include <string>
#include <vector>

#include "z4seq/analysis.hpp"
#include "z4seq/cyclotomy.hpp"

namespace z4seq {

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample when failed
};

/// Structural and Galois-ring identities of a cyclotomic system, each
/// evaluated directly:
///   partition               class sizes and disjoint cover of Z_pq
///   h4-in-D0                h^4 lies in D0
///   multiplicative-shift    u D_i = D_{i+j} for every u in D_j
///   class-reductions        D_i mod q hits each element of g^i * (quartic residues) p-1 times,
///                           D_i mod p hits each unit (q-1)/4 times
///   root-of-unity-sums      sum_j b^{jp} = 0, sum_k b^{kq} = 0, sum D_i(b) = 1
///   class-sums-order-q      D_i(b^{kp}) = 0 for 0 <= k < q
///   class-sums-order-p      D_i(b^{kq}) = 3(q-1)/4 for 1 <= k < p
///   solution-counts         w in D0 with g^a + w = 0 mod p, q, pq
///   inner-products          C_i . C_j + (q-1)/4 is the case's 0/1 pattern
///   rho-constancy           rho in Z4 iff 2 in D0
///   two-location            2 in D0 u D2 iff Case1
std::vector<IdentityCheck> check_identities(const CyclotomicSystem& system,
                                            const SpectralContext& ctx);

}  // namespace z4seq
