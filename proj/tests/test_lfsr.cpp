#include <doctest.h>

#include <random>

#include "z4seq/error.hpp"
#include "z4seq/lfsr.hpp"
#include "z4seq/sequence.hpp"

using namespace z4seq;

namespace {

std::vector<std::uint8_t> random_digits(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> d(n);
  for (auto& x : d) x = static_cast<std::uint8_t>(rng() & 3);
  return d;
}

// Shortest L such that some c with c_0 = 1 and deg c <= L annihilates the
// window: sum_i c_i s_{k-i} = 0 for L <= k < n.
std::size_t brute_force_length(const std::vector<std::uint8_t>& s) {
  const std::size_t n = s.size();
  for (std::size_t len = 0;; ++len) {
    if (len >= n) return len;
    std::vector<std::uint8_t> c(len + 1, 0);
    c[0] = 1;
    const std::size_t combos = std::size_t{1} << (2 * len);
    for (std::size_t code = 0; code < combos; ++code) {
      for (std::size_t i = 0; i < len; ++i) c[i + 1] = (code >> (2 * i)) & 3;
      bool ok = true;
      for (std::size_t k = len; k < n && ok; ++k) {
        unsigned acc = 0;
        for (std::size_t i = 0; i <= len; ++i) acc += c[i] * s[k - i];
        ok = acc % 4 == 0;
      }
      if (ok) return len;
    }
  }
}

}  // namespace

TEST_CASE("small cases") {
  CHECK(reeds_sloane(std::vector<std::uint8_t>{0, 0, 0}).length == 0);
  CHECK(reeds_sloane(std::vector<std::uint8_t>{0, 0, 1}).length == 3);
  CHECK(reeds_sloane(std::vector<std::uint8_t>{1, 1, 1, 1}).length == 1);
  CHECK(reeds_sloane(std::vector<std::uint8_t>{2, 2, 2, 2}).length == 1);
  CHECK_THROWS_AS(reeds_sloane(std::vector<std::uint8_t>{}), Error);
}

TEST_CASE("exhaustive agreement with brute force up to length 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::uint8_t> s(n, 0);
    for (std::size_t code = 0; code < (std::size_t{1} << (2 * n)); ++code) {
      for (std::size_t i = 0; i < n; ++i) s[i] = (code >> (2 * i)) & 3;
      const auto res = reeds_sloane(s);
      REQUIRE(res.length == brute_force_length(s));
      CHECK(res.annihilates);
      CHECK(recurrence_holds(res.connection, s));
    }
  }
}

TEST_CASE("random windows against brute force and the linear algebra oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_digits(rng, 6 + rng() % 4);
    const auto res = reeds_sloane(s);
    CHECK(res.length == brute_force_length(s));
    CHECK(res.length == snf_min_window_length(s));
  }
}

TEST_CASE("periodic sequences against the linear algebra oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t period = 1 + rng() % 64;
    const QuaternarySequence seq(random_digits(rng, period));
    CHECK(linear_complexity(seq) == snf_min_length(seq.digits()));
  }
  const QuaternarySequence short_period({1, 1, 3, 1, 1, 3});
  CHECK(linear_complexity(short_period) == snf_min_length(short_period.digits()));
  CHECK(linear_complexity(QuaternarySequence({2, 2, 2})) == 1);
}

TEST_CASE("two periods suffice") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const QuaternarySequence seq(random_digits(rng, 3 + rng() % 30));
    const auto two = reeds_sloane(seq.unroll(2 * seq.period())).length;
    CHECK(two == reeds_sloane(seq.unroll(4 * seq.period())).length);
    CHECK(two <= seq.period());
  }
}

TEST_CASE("linear system solvability over Z4") {
  CHECK(z4_system_solvable({{2}}, {2}));
  CHECK_FALSE(z4_system_solvable({{2}}, {1}));
  CHECK(z4_system_solvable({{1, 2}, {2, 0}}, {3, 2}));
  CHECK_FALSE(z4_system_solvable({{2, 2}, {2, 2}}, {0, 2}));
  CHECK_FALSE(z4_system_solvable({{0}}, {1}));
  CHECK_THROWS_AS(snf_min_length(std::vector<std::uint8_t>(65, 1)), Error);
}
