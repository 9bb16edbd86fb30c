#include <doctest.h>

#include <set>

#include "z4seq/cyclotomy.hpp"
#include "z4seq/error.hpp"
#include "z4seq/numtheory.hpp"

using namespace z4seq;

namespace {

ErrorCode code_of(std::uint64_t p, std::uint64_t q) {
  try {
    build_system(p, q);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("system for (5,13)") {
  const auto s = build_system(5, 13);
  CHECK(s.g() == 2);
  CHECK(s.h() == 27);
  CHECK(s.e() == 12);
  CHECK(pow_mod(s.h(), 4, 65) == 1);
  CHECK(s.case_tag() == CaseTag::Case2);
  CHECK(classify(s, 0) == ClassLabel::R);
  CHECK(classify(s, 10) == ClassLabel::P);
  CHECK(classify(s, 13) == ClassLabel::Q);
  CHECK(classify(s, 1) == ClassLabel::D0);
  CHECK(classify(s, -64) == ClassLabel::D0);
  CHECK(locate_two(s) == 1);
}

TEST_CASE("inadmissible pairs") {
  CHECK(code_of(3, 13) == ErrorCode::GcdNotFour);
  CHECK(code_of(7, 13) == ErrorCode::GcdNotFour);
  CHECK(code_of(13, 13) == ErrorCode::EqualPrimes);
  CHECK(code_of(15, 13) == ErrorCode::NotPrime);
  CHECK_FALSE(is_admissible(3, 13));
  CHECK(is_admissible(5, 13));
}

TEST_CASE("case tags and location of 2") {
  CHECK(case_of(build_system(5, 17)) == CaseTag::Case1);
  CHECK(case_of(build_system(13, 17)) == CaseTag::Case1);
  CHECK(case_of(build_system(17, 5)) == CaseTag::Case2);
  CHECK(locate_two(build_system(5, 17)) == 2);
  CHECK(locate_two(build_system(13, 17)) == 2);
  CHECK(locate_two(build_system(17, 5)) == 3);
  CHECK(locate_two(build_system(5, 113)) == 0);
}

TEST_CASE("partition and multiplicative shift") {
  for (auto [p, q] : {std::pair{5, 13}, {5, 17}, {17, 13}, {29, 5}}) {
    const auto s = build_system(p, q);
    const std::uint64_t n = s.n();
    std::set<std::uint32_t> seen;
    for (int i = 0; i < 4; ++i) {
      CHECK(s.members(i).size() == s.e());
      for (auto u : s.members(i)) {
        CHECK(seen.insert(u).second);
        CHECK(s.label_at(u) == static_cast<ClassLabel>(i));
      }
    }
    std::size_t pc = 0, qc = 0, rc = 0;
    for (std::uint64_t u = 0; u < n; ++u) {
      const auto l = s.label_at(u);
      pc += l == ClassLabel::P;
      qc += l == ClassLabel::Q;
      rc += l == ClassLabel::R;
    }
    CHECK(seen.size() + pc + qc + rc == n);
    CHECK(pc == s.q() - 1);
    CHECK(qc == s.p() - 1);
    CHECK(rc == 1);
    // sampled u in D_j: u * D_i = D_{i+j}
    for (int j = 0; j < 4; ++j) {
      const std::uint32_t u = s.members(j)[s.e() / 2];
      for (int i = 0; i < 4; ++i) {
        for (auto v : s.members(i)) {
          CHECK(s.label_at(mul_mod(u, v, n)) == static_cast<ClassLabel>((i + j) % 4));
        }
      }
    }
  }
}

TEST_CASE("solution counts") {
  for (auto [p, q] : {std::pair{5, 13}, {5, 17}, {13, 17}, {17, 5}}) {
    const auto s = build_system(p, q);
    for (int a = 0; a < 4; ++a) {
      CHECK(count_solutions(s, a, SolutionModulus::ModP) == (s.q() - 1) / 4);
      const auto mq = count_solutions(s, a, SolutionModulus::ModQ);
      CHECK(mq == ((a + (s.q() - 1) / 2) % 4 == 0 ? s.p() - 1 : 0));
      CHECK(count_solutions(s, a, SolutionModulus::ModPQ) <= (mq ? 1U : 0U));
    }
  }
}

TEST_CASE("two lies in D0 or D2 exactly in Case1") {
  for (std::uint64_t p = 5; p < 60; ++p) {
    for (std::uint64_t q = 5; q < 60; ++q) {
      if (!is_admissible(p, q)) continue;
      const auto s = build_system(p, q);
      const bool even = locate_two(s) % 2 == 0;
      CHECK(even == (s.case_tag() == CaseTag::Case1));
    }
  }
}
