#include <doctest.h>

#include <random>

#include "z4seq/error.hpp"
#include "z4seq/galois_ring.hpp"

using namespace z4seq;

namespace {

GrElement random_element(const GaloisRing& ring, std::mt19937_64& rng) {
  return ring.from_planes(rng(), rng());
}

std::vector<std::uint8_t> v(std::initializer_list<int> xs) {
  std::vector<std::uint8_t> out;
  for (int x : xs) out.push_back(static_cast<std::uint8_t>(x));
  return out;
}

}  // namespace

TEST_CASE("basic irreducible moduli") {
  // lifts of the smallest primitive binary polynomials, low degree first
  CHECK(make_ring(1)->modulus() == v({3, 1}));
  CHECK(make_ring(2)->modulus() == v({1, 1, 1}));
  CHECK(make_ring(3)->modulus() == v({3, 1, 2, 1}));
  CHECK(make_ring(4)->modulus() == v({1, 3, 2, 0, 1}));
  CHECK(make_ring(8)->modulus() == v({1, 2, 3, 1, 3, 2, 2, 0, 1}));
  CHECK(make_ring(12)->modulus() == v({1, 3, 2, 2, 1, 2, 3, 0, 2, 2, 0, 0, 1}));
  CHECK(smallest_primitive_binary(8) == v({1, 0, 1, 1, 1, 0, 0, 0, 1}));
  CHECK(graeffe_lift(v({1, 1, 0, 1})) == v({3, 1, 2, 1}));
}

TEST_CASE("ring construction limits") {
  CHECK_THROWS_AS(make_ring(0), Error);
  try {
    make_ring(40, 32);
    FAIL("expected DegreeTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeTooLarge);
  }
  for (int r : {5, 16, 28, 36, 63, 64}) {
    const auto ring = make_ring(r);
    CHECK(has_order(ring->generator(), ring->unit_order()));
  }
}

TEST_CASE("ring axioms") {
  std::mt19937_64 rng(7);
  for (int r : {1, 2, 7, 12, 24, 64}) {
    const auto ring = make_ring(r);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_element(*ring, rng);
      const auto b = random_element(*ring, rng);
      const auto c = random_element(*ring, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == ring->zero());
      CHECK(a + (-a) == ring->zero());
      CHECK(a * ring->one() == a);
      CHECK(4 * a == ring->zero());
      CHECK(3 * a == a + a + a);
      CHECK(a.pow(4) == a.square().square());
    }
  }
}

TEST_CASE("mixing rings throws") {
  const auto r1 = make_ring(4);
  const auto r2 = make_ring(4);
  CHECK_THROWS_AS(r1->one() + r2->one(), Error);
}

TEST_CASE("teichmuller decomposition") {
  std::mt19937_64 rng(11);
  for (int r : {3, 8, 12, 33}) {
    const auto ring = make_ring(r);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_element(*ring, rng);
      const auto [a1, a2] = teichmuller_decompose(a);
      CHECK(is_teichmuller(a1));
      CHECK(is_teichmuller(a2));
      CHECK(a1 + 2 * a2 == a);
    }
    CHECK(is_teichmuller(ring->generator()));
    CHECK_FALSE(is_teichmuller(ring->constant(3)));
  }
}

TEST_CASE("frobenius and trace") {
  std::mt19937_64 rng(13);
  const auto ring = make_ring(12);
  const GrElement x = ring->generator();
  // Teichmuller elements map to their 2^s-th power
  CHECK(frobenius(x, 1) == x.pow(2));
  CHECK(frobenius(x, 12) == x);
  CHECK_THROWS_AS(frobenius(x, 5), Error);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_element(*ring, rng);
    const auto b = random_element(*ring, rng);
    CHECK(frobenius(a * b, 2) == frobenius(a, 2) * frobenius(b, 2));
    CHECK(frobenius(a + b, 3) == frobenius(a, 3) + frobenius(b, 3));
    for (int s : {1, 2, 3, 4, 6}) {
      const auto t = trace(a, s);
      CHECK(in_subring(t, s));
      CHECK(trace(a + b, s) == t + trace(b, s));
    }
    // transitivity through an intermediate subring
    CHECK(trace(trace(a, 4), 2, 4) == trace(a, 2));
    CHECK(trace(trace(a, 6), 1, 6) == trace(a, 1));
  }
  CHECK(is_constant(trace(ring->one(), 1)) == std::optional<std::uint8_t>(0));
  CHECK(is_constant(trace(ring->one(), 4)) == std::optional<std::uint8_t>(3));
  CHECK_THROWS_AS(trace(x, 1, 4), Error);
}

TEST_CASE("roots of unity") {
  const auto ring = make_ring(12);
  const auto beta = root_of_unity(*ring, 65);
  CHECK(has_order(beta, 65));
  CHECK(beta == ring->generator().pow(4095 / 65));
  CHECK(to_string(beta) == "(3,1,0,0,2,3,1,2,0,2,0,2)");
  CHECK_THROWS_AS(root_of_unity(*ring, 17), Error);
  GrElement sum = ring->zero();
  for (int k = 0; k < 65; ++k) sum += beta.pow(static_cast<std::uint64_t>(k));
  CHECK(sum.is_zero());
}
