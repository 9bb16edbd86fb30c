#include "z4seq/sequence.hpp"

#include <string>

#include "z4seq/cyclotomy.hpp"
#include "z4seq/error.hpp"

namespace z4seq {

QuaternarySequence::QuaternarySequence(std::vector<std::uint8_t> digits)
    : digits_(std::move(digits)) {
  if (digits_.empty()) throw Error(ErrorCode::InvalidArgument, "empty period");
  for (std::uint8_t d : digits_) {
    if (d > 3) throw Error(ErrorCode::InvalidArgument, "digit outside Z4");
  }
}

std::vector<std::uint8_t> QuaternarySequence::unroll(std::size_t length) const {
  std::vector<std::uint8_t> out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = digits_[i % digits_.size()];
  return out;
}

QuaternarySequence generate(const CyclotomicSystem& system) {
  std::vector<std::uint8_t> digits(system.n());
  const auto labels = system.labels();
  for (std::size_t u = 0; u < digits.size(); ++u) {
    switch (labels[u]) {
      case ClassLabel::Q:
      case ClassLabel::R: digits[u] = 2; break;
      case ClassLabel::P: digits[u] = 0; break;
      default: digits[u] = static_cast<std::uint8_t>(labels[u]); break;
    }
  }
  return QuaternarySequence(std::move(digits));
}

std::array<std::size_t, 4> digit_histogram(const QuaternarySequence& seq) {
  std::array<std::size_t, 4> counts{};
  for (std::uint8_t d : seq.digits()) ++counts[d];
  return counts;
}

std::string to_digit_line(const QuaternarySequence& seq) {
  std::string line;
  line.reserve(seq.period() + 1);
  for (std::uint8_t d : seq.digits()) line.push_back(static_cast<char>('0' + d));
  line.push_back('\n');
  return line;
}

QuaternarySequence parse_digit_line(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty digit line");
  std::vector<std::uint8_t> digits;
  digits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '3') {
      throw Error(ErrorCode::ParseError,
                  "invalid digit at offset " + std::to_string(i));
    }
    digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return QuaternarySequence(std::move(digits));
}

std::string to_csv(const QuaternarySequence& seq) {
  std::string out = "index,digit\n";
  for (std::size_t u = 0; u < seq.period(); ++u) {
    out += std::to_string(u);
    out += ',';
    out += static_cast<char>('0' + seq.digits()[u]);
    out += '\n';
  }
  return out;
}

}  // namespace z4seq
