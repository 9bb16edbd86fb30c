#include "z4seq/identities.hpp"

#include <map>
#include <set>
#include <string>

#include "z4seq/numtheory.hpp"

namespace z4seq {

namespace {

IdentityCheck pass(std::string name) { return {std::move(name), true, {}}; }
IdentityCheck fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

IdentityCheck check_partition(const CyclotomicSystem& s) {
  std::map<ClassLabel, std::uint64_t> sizes;
  for (ClassLabel label : s.labels()) ++sizes[label];
  for (int i = 0; i < 4; ++i) {
    if (sizes[static_cast<ClassLabel>(i)] != s.e() || s.members(i).size() != s.e()) {
      return fail("partition", "|D" + std::to_string(i) + "| != e");
    }
  }
  if (sizes[ClassLabel::P] != s.q() - 1) return fail("partition", "|P| != q-1");
  if (sizes[ClassLabel::Q] != s.p() - 1) return fail("partition", "|Q| != p-1");
  if (sizes[ClassLabel::R] != 1 || s.label_at(0) != ClassLabel::R) {
    return fail("partition", "R != {0}");
  }
  for (std::uint64_t u = 1; u < s.n(); ++u) {
    const bool unit = gcd_u64(u, s.n()) == 1;
    if (unit != is_unit_class(s.label_at(u))) {
      return fail("partition", "unit classes disagree at " + std::to_string(u));
    }
  }
  return pass("partition");
}

IdentityCheck check_h4(const CyclotomicSystem& s) {
  const std::uint64_t h4 = pow_mod(s.h(), 4, s.n());
  if (s.label_at(h4) != ClassLabel::D0) {
    return fail("h4-in-D0", "h^4 = " + std::to_string(h4));
  }
  return pass("h4-in-D0");
}

IdentityCheck check_shift(const CyclotomicSystem& s) {
  const std::uint64_t n = s.n();
  for (int j = 0; j < 4; ++j) {
    for (std::uint32_t u : s.members(j)) {
      for (int i = 0; i < 4; ++i) {
        const auto expected = static_cast<ClassLabel>((i + j) % 4);
        for (std::uint32_t v : s.members(i)) {
          if (s.label_at(mul_mod(u, v, n)) != expected) {
            return fail("multiplicative-shift",
                        std::to_string(u) + " * D" + std::to_string(i));
          }
        }
      }
    }
  }
  return pass("multiplicative-shift");
}

IdentityCheck check_reductions(const CyclotomicSystem& s) {
  const std::uint64_t p = s.p(), q = s.q();
  std::set<std::uint64_t> quartic;
  for (std::uint64_t x = 1; x < q; ++x) quartic.insert(pow_mod(x, 4, q));
  for (int i = 0; i < 4; ++i) {
    std::map<std::uint64_t, std::uint64_t> mod_q, mod_p;
    for (std::uint32_t u : s.members(i)) {
      ++mod_q[u % q];
      ++mod_p[u % p];
    }
    if (mod_q.size() != quartic.size()) return fail("class-reductions", "mod q image size");
    // h = 1 mod q, so D_i mod q is the coset g^i * (quartic residues).
    const std::uint64_t shift = pow_mod(s.g(), static_cast<std::uint64_t>(i), q);
    for (auto [r, c] : mod_q) {
      if (!quartic.contains(mul_mod(r, pow_mod(shift, q - 2, q), q)) || c != p - 1) {
        return fail("class-reductions", "D" + std::to_string(i) + " mod q");
      }
    }
    if (mod_p.size() != p - 1) return fail("class-reductions", "mod p image size");
    for (auto [r, c] : mod_p) {
      if (r == 0 || c != (q - 1) / 4) {
        return fail("class-reductions", "D" + std::to_string(i) + " mod p");
      }
    }
  }
  return pass("class-reductions");
}

IdentityCheck check_root_sums(const CyclotomicSystem& s, const PowerTable& beta) {
  const GaloisRing& ring = *beta.at(0).ring();
  GrElement sum_p = ring.zero(), sum_q = ring.zero(), sum_units = ring.zero();
  for (std::uint64_t j = 0; j < s.q(); ++j) sum_p += beta.at(j * s.p());
  for (std::uint64_t k = 0; k < s.p(); ++k) sum_q += beta.at(k * s.q());
  for (int i = 0; i < 4; ++i) sum_units += class_sum(s, i, beta);
  if (!sum_p.is_zero()) return fail("root-of-unity-sums", "sum of b^(jp) = " + to_string(sum_p));
  if (!sum_q.is_zero()) return fail("root-of-unity-sums", "sum of b^(kq) = " + to_string(sum_q));
  if (!(sum_units == ring.one())) {
    return fail("root-of-unity-sums", "sum of D_i(b) = " + to_string(sum_units));
  }
  return pass("root-of-unity-sums");
}

IdentityCheck check_class_sums(const CyclotomicSystem& s, const PowerTable& beta) {
  for (int i = 0; i < 4; ++i) {
    for (std::uint64_t k = 0; k < s.q(); ++k) {
      const GrElement v = class_sum(s, i, beta, k * s.p());
      if (!v.is_zero()) {
        return fail("class-sums-order-q", "D" + std::to_string(i) + "(b^" +
                                              std::to_string(k * s.p()) + ") = " + to_string(v));
      }
    }
  }
  return pass("class-sums-order-q");
}

IdentityCheck check_class_sums_p(const CyclotomicSystem& s, const PowerTable& beta) {
  const GaloisRing& ring = *beta.at(0).ring();
  const GrElement expected = ring.constant(static_cast<int>((3 * (s.q() - 1) / 4) % 4));
  for (int i = 0; i < 4; ++i) {
    for (std::uint64_t k = 1; k < s.p(); ++k) {
      const GrElement v = class_sum(s, i, beta, k * s.q());
      if (!(v == expected)) {
        return fail("class-sums-order-p", "D" + std::to_string(i) + "(b^" +
                                              std::to_string(k * s.q()) + ") = " + to_string(v));
      }
    }
  }
  return pass("class-sums-order-p");
}

IdentityCheck check_solution_counts(const CyclotomicSystem& s) {
  const std::uint64_t p = s.p(), q = s.q();
  for (int a = 0; a < 4; ++a) {
    const std::string tag = "a=" + std::to_string(a) + ": ";
    const std::uint64_t mod_p = count_solutions(s, a, SolutionModulus::ModP);
    if (mod_p != (q - 1) / 4) return fail("solution-counts", tag + "mod p count " + std::to_string(mod_p));
    const std::uint64_t mod_q = count_solutions(s, a, SolutionModulus::ModQ);
    const std::uint64_t expected_q = ((a + (q - 1) / 2) % 4 == 0) ? p - 1 : 0;
    if (mod_q != expected_q) return fail("solution-counts", tag + "mod q count " + std::to_string(mod_q));
    const std::uint64_t mod_pq = count_solutions(s, a, SolutionModulus::ModPQ);
    if (mod_pq > 1 || (mod_pq == 1 && mod_q == 0)) {
      return fail("solution-counts", tag + "mod pq count " + std::to_string(mod_pq));
    }
  }
  return pass("solution-counts");
}

IdentityCheck check_inner_products(const CyclotomicSystem& s, const SpectralContext& ctx) {
  const ClassSumVector c0 = class_sum_vector(s, 0, ctx.beta);
  const auto quarter = static_cast<int>(((s.q() - 1) / 4) % 4);
  const bool case1 = s.case_tag() == CaseTag::Case1;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const GrElement v = c0.rotated(i).dot(c0.rotated(j)) + ctx.ring->constant(quarter);
      const bool hit = case1 ? i == j : (i % 4) == ((j + 2) % 4);
      if (!(v == ctx.ring->constant(hit ? 1 : 0))) {
        return fail("inner-products", "(" + std::to_string(i) + "," + std::to_string(j) +
                                          ") = " + to_string(v));
      }
    }
  }
  return pass("inner-products");
}

IdentityCheck check_rho(const CyclotomicSystem& s, const SpectralContext& ctx) {
  const RhoInfo info = rho_constancy(s, ctx);
  const bool two_in_d0 = locate_two(s) == 0;
  if (info.in_z4 != two_in_d0) {
    return fail("rho-constancy", "rho = " + to_string(info.rho) + ", 2 in D" +
                                     std::to_string(locate_two(s)));
  }
  return pass("rho-constancy");
}

IdentityCheck check_two(const CyclotomicSystem& s) {
  const int i = locate_two(s);
  const bool even = i % 2 == 0;
  if (even != (s.case_tag() == CaseTag::Case1)) {
    return fail("two-location", "2 in D" + std::to_string(i) + " under " +
                                    std::string(case_name(s.case_tag())));
  }
  return pass("two-location");
}

}  // namespace

std::vector<IdentityCheck> check_identities(const CyclotomicSystem& system,
                                            const SpectralContext& ctx) {
  const PowerTable beta(ctx.beta, system.n());
  return {
      check_partition(system),
      check_h4(system),
      check_shift(system),
      check_reductions(system),
      check_root_sums(system, beta),
      check_class_sums(system, beta),
      check_class_sums_p(system, beta),
      check_solution_counts(system),
      check_inner_products(system, ctx),
      check_rho(system, ctx),
      check_two(system),
  };
}

}  // namespace z4seq
