#include <doctest.h>

#include "z4seq/error.hpp"
#include "z4seq/sequence.hpp"
#include "z4seq/trace_repr.hpp"

using namespace z4seq;

TEST_CASE("parameters") {
  const auto s = build_system(5, 13);
  const auto tp = trace_params(s, canonical_context(s));
  CHECK(tp.ell == 12);
  CHECK(tp.ell_p == 4);
  CHECK(tp.ell_q == 12);
  CHECK(tp.epsilon == 0);
  CHECK(tp.inner_degree == 4);
  CHECK(tp.class_rep_bound == 1);

  const auto s1 = build_system(5, 17);
  const auto tp1 = trace_params(s1, canonical_context(s1));
  CHECK(tp1.epsilon == 2);
  CHECK(tp1.class_rep_bound == 1);

  const auto s0 = build_system(5, 113);
  const auto tp0 = trace_params(s0, canonical_context(s0));
  CHECK(tp0.epsilon == 1);
  CHECK(tp0.class_rep_bound == 1);
}

TEST_CASE("representation reproduces the sequence") {
  for (auto [p, q] : {std::pair{5, 13}, {13, 5}, {5, 17}, {17, 5}, {13, 17}, {17, 13}, {5, 29},
                      {29, 5}, {5, 41}, {41, 5}, {5, 113}}) {
    const auto s = build_system(p, q);
    const auto tc = check_trace_repr(s, canonical_context(s));
    INFO(p, " ", q, " ", tc.precondition_failure);
    CHECK(tc.preconditions_hold);
    CHECK(tc.passed);
    CHECK(tc.checked == s.n());
  }
}

TEST_CASE("single index evaluation") {
  const auto s = build_system(13, 17);
  const auto ctx = canonical_context(s);
  const auto tp = trace_params(s, ctx);
  const auto seq = generate(s);
  for (std::uint64_t u : {0ULL, 1ULL, 2ULL, 13ULL, 17ULL, 220ULL}) {
    CHECK(eval_trace_repr(s, ctx, tp, u) == seq[u]);
  }
}

TEST_CASE("non-integral bound is reported") {
  const auto s = build_system(5, 73);
  const auto tc = check_trace_repr(s, canonical_context(s));
  CHECK_FALSE(tc.preconditions_hold);
  CHECK_FALSE(tc.passed);
  CHECK(tc.precondition_failure.find("does not divide") != std::string::npos);
  try {
    trace_params(s, canonical_context(s));
    FAIL("expected a precondition failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TraceFormulaPreconditionFailed);
  }
}

TEST_CASE("Case2 coverage count") {
  // t < e/ell covers each element of D_i once; four times that bound
  // covers each element four times, which vanishes mod 4.
  const auto s = build_system(5, 13);
  const std::uint64_t coset = 12 / 4;
  for (int i = 0; i < 4; ++i) {
    const auto once = class_cover_multiplicity(s, i, 1, 4, coset);
    const auto four = class_cover_multiplicity(s, i, 4, 4, coset);
    for (std::uint32_t u : s.members(i)) {
      CHECK(once[u] == 1);
      CHECK(four[u] == 4);
    }
  }
}
