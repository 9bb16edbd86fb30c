#include "z4seq/cyclotomy.hpp"

#include <algorithm>
#include <string>

#include "z4seq/error.hpp"

namespace z4seq {

std::string_view label_name(ClassLabel label) noexcept {
  switch (label) {
    case ClassLabel::D0: return "D0";
    case ClassLabel::D1: return "D1";
    case ClassLabel::D2: return "D2";
    case ClassLabel::D3: return "D3";
    case ClassLabel::P: return "P";
    case ClassLabel::Q: return "Q";
    case ClassLabel::R: return "R";
  }
  return "?";
}

std::string_view case_name(CaseTag tag) noexcept {
  return tag == CaseTag::Case1 ? "Case1" : "Case2";
}

std::uint64_t CyclotomicSystem::representative(std::uint64_t t, int i,
                                               int j) const {
  const std::uint64_t mod = n();
  const std::uint64_t exp = 4 * t + static_cast<std::uint64_t>(((i % 4) + 4) % 4);
  return mul_mod(pow_mod(g_, exp, mod), pow_mod(h_, static_cast<std::uint64_t>(j), mod),
                 mod);
}

CyclotomicSystem build_system(OddPrime p, OddPrime q) {
  if (p == q) throw Error(ErrorCode::EqualPrimes, "p and q must differ");
  const std::uint64_t gp = gcd_u64(p - 1, q - 1);
  if (gp != 4) {
    throw Error(ErrorCode::GcdNotFour,
                "gcd(p-1, q-1) = " + std::to_string(gp) + ", expected 4");
  }
  if (p.value() * q.value() >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::InvalidArgument, "pq exceeds the supported range");
  }

  CyclotomicSystem s;
  s.p_ = p;
  s.q_ = q;
  s.e_ = (p - 1) * (q - 1) / 4;
  s.g_ = common_primitive_root(p, q);
  s.h_ = crt_pair(static_cast<std::int64_t>(s.g_), p, 1, q);
  if (q % 8 == 1 && p % 8 == 5) {
    s.case_ = CaseTag::Case1;
  } else if (q % 8 == 5 && p % 4 == 1) {
    s.case_ = CaseTag::Case2;
  } else {
    throw Error(ErrorCode::InternalCaseError, "prime pair fits neither case");
  }

  const std::uint64_t n = s.n();
  if (n % 4 != 1) throw Error(ErrorCode::InternalError, "pq is not 1 mod 4");

  s.class_of_.assign(n, ClassLabel::D0);
  std::vector<bool> seen(n, false);
  s.class_of_[0] = ClassLabel::R;
  seen[0] = true;
  for (std::uint64_t j = 1; j < q; ++j) {
    s.class_of_[j * p] = ClassLabel::P;
    seen[j * p] = true;
  }
  for (std::uint64_t j = 1; j < p; ++j) {
    s.class_of_[j * q] = ClassLabel::Q;
    seen[j * q] = true;
  }

  const std::uint64_t g4 = pow_mod(s.g_, 4, n);
  for (int i = 0; i < 4; ++i) {
    auto& cls = s.classes_[static_cast<std::size_t>(i)];
    cls.reserve(s.e_);
    std::uint64_t gi = pow_mod(s.g_, static_cast<std::uint64_t>(i), n);
    for (std::uint64_t t = 0; t < s.e_ / 4; ++t) {
      std::uint64_t v = gi;
      for (int j = 0; j < 4; ++j) {
        if (seen[v]) {
          throw Error(ErrorCode::InternalError,
                      "cyclotomic classes overlap at " + std::to_string(v));
        }
        seen[v] = true;
        s.class_of_[v] = static_cast<ClassLabel>(i);
        cls.push_back(static_cast<std::uint32_t>(v));
        v = mul_mod(v, s.h_, n);
      }
      gi = mul_mod(gi, g4, n);
    }
    std::sort(cls.begin(), cls.end());
  }
  for (std::uint64_t u = 0; u < n; ++u) {
    if (!seen[u]) {
      throw Error(ErrorCode::InternalError,
                  "residue " + std::to_string(u) + " is not covered");
    }
  }
  return s;
}

CyclotomicSystem build_system(std::uint64_t p, std::uint64_t q) {
  return build_system(OddPrime(p), OddPrime(q));
}

bool is_admissible(std::uint64_t p, std::uint64_t q) {
  return p != q && p >= 3 && q >= 3 && is_prime(p) && is_prime(q) &&
         gcd_u64(p - 1, q - 1) == 4;
}

ClassLabel classify(const CyclotomicSystem& system, std::int64_t u) {
  return system.label_at(reduce_mod(u, system.n()));
}

CaseTag case_of(const CyclotomicSystem& system) { return system.case_tag(); }

int locate_two(const CyclotomicSystem& system) {
  const ClassLabel label = system.label_at(2);
  if (!is_unit_class(label)) {
    throw Error(ErrorCode::InternalError, "2 is not a unit modulo pq");
  }
  return static_cast<int>(label);
}

std::uint64_t count_solutions(const CyclotomicSystem& system, int a,
                              SolutionModulus target) {
  const std::uint64_t n = system.n();
  const std::uint64_t ga = pow_mod(system.g(), static_cast<std::uint64_t>(a), n);
  std::uint64_t modulus = n;
  if (target == SolutionModulus::ModP) modulus = system.p();
  if (target == SolutionModulus::ModQ) modulus = system.q();
  std::uint64_t count = 0;
  for (std::uint32_t w : system.members(0)) {
    if ((ga + w) % modulus == 0) ++count;
  }
  return count;
}

}  // namespace z4seq
