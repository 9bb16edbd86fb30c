#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace z4seq {

class CyclotomicSystem;

/// One period of a sequence over Z4.
class QuaternarySequence {
 public:
  QuaternarySequence() = default;
  /// Throws InvalidArgument on an empty period or a digit outside 0..3.
  explicit QuaternarySequence(std::vector<std::uint8_t> digits);

  std::size_t period() const noexcept { return digits_.size(); }
  std::span<const std::uint8_t> digits() const noexcept { return digits_; }
  std::uint8_t operator[](std::size_t u) const noexcept { return digits_[u % digits_.size()]; }

  /// Consecutive terms starting at index 0, wrapping around the period.
  std::vector<std::uint8_t> unroll(std::size_t length) const;

  friend bool operator==(const QuaternarySequence&, const QuaternarySequence&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

/// e_u = 2 on Q and R, 0 on P, i on D_i.
QuaternarySequence generate(const CyclotomicSystem& system);

std::array<std::size_t, 4> digit_histogram(const QuaternarySequence& seq);

/// One line of digits followed by '\n'.
std::string to_digit_line(const QuaternarySequence& seq);
/// Accepts an optional trailing newline (and '\r'); throws ParseError otherwise.
QuaternarySequence parse_digit_line(std::string_view text);

/// "index,digit" header followed by one row per term.
std::string to_csv(const QuaternarySequence& seq);

}  // namespace z4seq
