#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "z4seq/numtheory.hpp"

namespace z4seq {

// Residue labels of Z_pq: the four generalized cyclotomic classes D0..D3,
// the nonzero multiples of p (P), of q (Q), and zero (R).
enum class ClassLabel : std::uint8_t { D0 = 0, D1 = 1, D2 = 2, D3 = 3, P, Q, R };

std::string_view label_name(ClassLabel label) noexcept;

constexpr bool is_unit_class(ClassLabel label) noexcept {
  return static_cast<std::uint8_t>(label) < 4;
}

// Case1: q = 1 (mod 8), p = 5 (mod 8).  Case2: q = 5 (mod 8), p = 1 (mod 4).
enum class CaseTag : std::uint8_t { Case1, Case2 };

std::string_view case_name(CaseTag tag) noexcept;

enum class SolutionModulus : std::uint8_t { ModP, ModQ, ModPQ };

/// Order-4 generalized cyclotomic system modulo pq. Immutable once built;
/// build_system() is the single place admissibility is checked.
class CyclotomicSystem {
 public:
  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t n() const noexcept { return p_ * q_; }
  std::uint64_t e() const noexcept { return e_; }
  std::uint64_t g() const noexcept { return g_; }
  std::uint64_t h() const noexcept { return h_; }
  CaseTag case_tag() const noexcept { return case_; }

  /// Members of D_i (index taken mod 4), ascending.
  std::span<const std::uint32_t> members(int i) const noexcept {
    return classes_[static_cast<std::size_t>(((i % 4) + 4) % 4)];
  }
  std::span<const ClassLabel> labels() const noexcept { return class_of_; }
  ClassLabel label_at(std::uint64_t u) const noexcept { return class_of_[u % n()]; }

  /// g^{4t+i} h^j mod pq, the representative the construction enumerates.
  std::uint64_t representative(std::uint64_t t, int i, int j) const;

 private:
  friend CyclotomicSystem build_system(OddPrime p, OddPrime q);
  CyclotomicSystem() = default;

  std::uint64_t p_ = 0, q_ = 0, e_ = 0, g_ = 0, h_ = 0;
  CaseTag case_ = CaseTag::Case1;
  std::vector<ClassLabel> class_of_;
  std::array<std::vector<std::uint32_t>, 4> classes_;
};

/// Throws NotPrime, EqualPrimes or GcdNotFour for inadmissible input.
CyclotomicSystem build_system(OddPrime p, OddPrime q);
CyclotomicSystem build_system(std::uint64_t p, std::uint64_t q);

/// True when (p, q) passes every check build_system performs.
bool is_admissible(std::uint64_t p, std::uint64_t q);

ClassLabel classify(const CyclotomicSystem& system, std::int64_t u);
CaseTag case_of(const CyclotomicSystem& system);

/// Index i in {0,1,2,3} with 2 in D_i.
int locate_two(const CyclotomicSystem& system);

/// Number of w in D_0 with g^a + w = 0 modulo p, q, or pq (enumerated).
std::uint64_t count_solutions(const CyclotomicSystem& system, int a,
                              SolutionModulus target);

}  // namespace z4seq
