#include <doctest.h>

#include <random>

#include "z4seq/analysis.hpp"
#include "z4seq/error.hpp"
#include "z4seq/identities.hpp"
#include "z4seq/lfsr.hpp"
#include "z4seq/numtheory.hpp"
#include "z4seq/sequence.hpp"

using namespace z4seq;

namespace {

ErrorCode dft_error(const QuaternarySequence& seq, const std::shared_ptr<const GaloisRing>& ring,
                    const GrElement& beta) {
  try {
    dft(seq, ring, beta);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("linear complexity of known pairs") {
  struct Row {
    std::uint64_t p, q, lc;
  };
  // Case2 gives pq; Case1 with 2 in D2 gives pq - p + 1; 2 in D0 gives q + 3(p-1)(q-1)/4.
  for (const Row& row : {Row{5, 13, 65}, Row{13, 5, 65}, Row{5, 17, 81}, Row{17, 5, 85},
                         Row{13, 17, 209}, Row{17, 13, 221}, Row{5, 113, 449}}) {
    const auto s = build_system(row.p, row.q);
    const auto rep = analyze(s);
    CHECK(rep.lc_formula == row.lc);
    CHECK(rep.lc_dft_count == row.lc);
    CHECK(rep.lc_reeds_sloane == row.lc);
    CHECK(rep.agree);
  }
}

TEST_CASE("rho and the defining polynomial for (5,13)") {
  const auto s = build_system(5, 13);
  const auto ctx = canonical_context(s);
  CHECK(ctx.ring->degree() == 12);
  const auto rho = rho_constancy(s, ctx);
  CHECK_FALSE(rho.in_z4);
  // frozen from an independent implementation
  CHECK(to_string(rho.rho) == "(3,1,1,0,2,0,3,0,2,0,2,0)");
  const auto poly = dft(generate(s), ctx);
  CHECK(to_string(poly.coeffs[1]) == "(1,1,1,0,2,0,3,0,2,0,2,0)");
  CHECK(poly.coeffs == defining_poly_formula(s, ctx).coeffs);
  const auto seq = generate(s);
  for (std::uint64_t u = 0; u < s.n(); ++u) {
    CHECK(is_constant(poly.evaluate(u)) == std::optional<std::uint8_t>(seq[u]));
  }
}

TEST_CASE("rho lies in Z4 exactly when 2 is in D0") {
  const auto s = build_system(5, 113);
  const auto ctx = canonical_context(s);
  CHECK(ctx.ring->degree() == 28);
  CHECK(rho_constancy(s, ctx).in_z4);
  CHECK_FALSE(rho_constancy(build_system(5, 17), canonical_context(build_system(5, 17))).in_z4);
}

TEST_CASE("defining polynomial formula matches the transform") {
  for (auto [p, q] : {std::pair{5, 17}, {17, 5}, {13, 17}, {5, 29}, {29, 5}, {41, 5}}) {
    const auto s = build_system(p, q);
    const auto ctx = canonical_context(s);
    CHECK(dft(generate(s), ctx).coeffs == defining_poly_formula(s, ctx).coeffs);
  }
}

TEST_CASE("identity suite") {
  for (auto [p, q] : {std::pair{5, 13}, {5, 17}, {13, 17}, {17, 13}, {5, 113}}) {
    const auto s = build_system(p, q);
    for (const auto& c : check_identities(s, canonical_context(s))) {
      INFO(p, " ", q, " ", c.name, " ", c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("inner products") {
  // Case1: identity pattern; Case2: shifted by two
  const auto s1 = build_system(5, 17);
  const auto c1 = canonical_context(s1);
  const auto s2 = build_system(5, 13);
  const auto c2 = canonical_context(s2);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(is_constant(inner_product_check(s1, c1, i, j)) ==
            std::optional<std::uint8_t>(i == j ? 1 : 0));
      CHECK(is_constant(inner_product_check(s2, c2, i, j)) ==
            std::optional<std::uint8_t>((i + 2) % 4 == j ? 1 : 0));
    }
  }
}

TEST_CASE("count is independent of the chosen root") {
  const auto s = build_system(5, 13);
  const auto ctx = canonical_context(s);
  const auto seq = generate(s);
  for (std::uint64_t m : {2ULL, 7ULL, 64ULL, 38ULL}) {
    REQUIRE(gcd_u64(m, 65) == 1);
    CHECK(lc_by_count(dft(seq, ctx.ring, ctx.beta.pow(m))) == 65);
  }
}

TEST_CASE("transform preconditions") {
  const auto ring = make_ring(4);
  const QuaternarySequence seq5({1, 2, 3, 0, 1});
  const auto beta5 = root_of_unity(*ring, 5);
  CHECK(dft_error(seq5, make_ring(4), beta5) == ErrorCode::RingMismatch);
  CHECK(dft_error(QuaternarySequence({1, 2, 3, 0, 1, 2, 3}), ring, beta5) ==
        ErrorCode::PeriodNotDividing);
  CHECK(dft_error(seq5, ring, beta5.pow(5)) == ErrorCode::PeriodMismatch);
  CHECK(dft_error(QuaternarySequence({1, 2, 3}), ring, root_of_unity(*ring, 3)) ==
        ErrorCode::PeriodNotCongruent1Mod4);
  CHECK(lc_by_count(dft(seq5, ring, beta5)) == linear_complexity(seq5));
}

TEST_CASE("random periodic sequences: count equals synthesis") {
  std::mt19937_64 rng(31);
  for (std::uint64_t period : {5ULL, 17ULL, 85ULL}) {
    const auto ctx = context_for_period(period);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint8_t> d(period);
      for (auto& x : d) x = static_cast<std::uint8_t>(rng() & 3);
      const QuaternarySequence seq(d);
      CHECK(lc_by_count(dft(seq, ctx)) == linear_complexity(seq));
    }
  }
}

TEST_CASE("ring degree cap") {
  try {
    analyze(build_system(5, 73), 32);
    FAIL("expected DegreeTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeTooLarge);
  }
}
