#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace z4seq {

class QuaternarySequence;

/// A linear recurrence sum_{i=0}^{L} c_i s_{t-i} = 0 (t >= L) over Z4 with
/// c_0 = 1. `connection` holds c_0..c_L; c_L may be zero or a zero divisor.
struct LfsrResult {
  std::size_t length = 0;
  std::vector<std::uint8_t> connection{1};
  bool annihilates = false;
};

/// Shortest linear recurrence over Z4 generating the given prefix, via
/// Reeds-Sloane synthesis (one Berlekamp-Massey chain per 2-adic level).
LfsrResult reeds_sloane(std::span<const std::uint8_t> digits);

/// reeds_sloane on two periods: the linear complexity of the periodic
/// sequence.
std::size_t linear_complexity(const QuaternarySequence& seq);

/// True when the recurrence holds at every t in [L, n).
bool recurrence_holds(std::span<const std::uint8_t> connection,
                      std::span<const std::uint8_t> digits);

// ---- Smith-normal-form oracle (shares no code with the synthesis) ----

inline constexpr std::size_t kOracleMaxPeriod = 64;

/// Decides whether A x = b has a solution over Z4.
bool z4_system_solvable(std::vector<std::vector<std::uint8_t>> a,
                        std::vector<std::uint8_t> b);

/// Smallest L such that an order-L recurrence with c_0 = 1 annihilates the
/// periodic extension of one period `digits`. Throws OracleTooLarge above
/// kOracleMaxPeriod.
std::size_t snf_min_length(std::span<const std::uint8_t> digits);

/// Same question for the finite window only (no wrap-around).
std::size_t snf_min_window_length(std::span<const std::uint8_t> digits);

}  // namespace z4seq
