#include "z4seq/lfsr.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "z4seq/error.hpp"
#include "z4seq/sequence.hpp"

namespace z4seq {

namespace {

using Poly = std::vector<std::uint8_t>;

int degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

// a - c * x^shift * b
Poly combine(const Poly& a, const Poly& b, unsigned c, std::size_t shift) {
  Poly out(std::max(a.size(), b.size() + shift), 0);
  std::copy(a.begin(), a.end(), out.begin());
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i + shift] = static_cast<std::uint8_t>((out[i + shift] + 4 * 4 - c * b[i]) % 4);
  }
  return out;
}

// A pair (a, b) with a S = b (mod x^k); its length is max(deg a, 1 + deg b).
struct Pair {
  Poly a, b;

  std::size_t length() const {
    const int len = std::max(degree(a), 1 + degree(b));
    return len < 0 ? 0 : static_cast<std::size_t>(len);
  }

  // Coefficient of x^k in a S - b.
  unsigned discrepancy(std::span<const std::uint8_t> s, std::size_t k) const {
    unsigned acc = 0;
    const std::size_t top = std::min(a.size(), k + 1);
    for (std::size_t i = 0; i < top; ++i) acc += a[i] * s[k - i];
    if (k < b.size()) acc += 4 - b[k];
    return acc % 4;
  }
};

Pair combine(const Pair& x, const Pair& y, unsigned c, std::size_t shift) {
  return {combine(x.a, y.a, c, shift), combine(x.b, y.b, c, shift)};
}

// 2-adic valuation of a nonzero Z4 value and its unit part.
unsigned valuation(unsigned d) { return (d % 2 == 1) ? 0 : 1; }
unsigned unit_part(unsigned d) { return (d % 2 == 1) ? d : d / 2; }

// A pair that failed at step k with discrepancy 2^v * theta.
struct Failure {
  Pair pair;
  std::size_t step;
  unsigned theta;
  std::size_t length;
};

constexpr std::size_t kLevels = 2;  // constant term 1 or 2

}  // namespace

LfsrResult reeds_sloane(std::span<const std::uint8_t> s) {
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty input sequence");

  // chains[level] has constant term 2^level.
  std::array<Pair, kLevels> chains{Pair{{1}, {}}, Pair{{2}, {}}};
  // Best earlier failure per discrepancy valuation, ranked by step - length.
  std::array<std::optional<Failure>, kLevels> failures;

  for (std::size_t k = 0; k < s.size(); ++k) {
    std::array<unsigned, kLevels> disc{};
    for (std::size_t lv = 0; lv < kLevels; ++lv) disc[lv] = chains[lv].discrepancy(s, k);

    std::array<Pair, kLevels> next = chains;
    for (std::size_t lv = 0; lv < kLevels; ++lv) {
      const unsigned d = disc[lv];
      if (d == 0) continue;
      const unsigned v = valuation(d), theta = unit_part(d);

      // Absorbing the discrepancy into b always works and costs length k+1.
      Pair best = chains[lv];
      best.b = combine(best.b, Poly{static_cast<std::uint8_t>(d)}, 3, k);
      std::size_t best_len = best.length();
      auto consider = [&](Pair candidate) {
        const std::size_t len = candidate.length();
        if (len < best_len) {
          best_len = len;
          best = std::move(candidate);
        }
      };
      // Same-step pairs from higher levels keep the constant term's valuation.
      for (std::size_t hv = lv + 1; hv < kLevels; ++hv) {
        if (disc[hv] == 0 || valuation(disc[hv]) > v) continue;
        const unsigned c = (1U << (v - valuation(disc[hv]))) * theta * unit_part(disc[hv]);
        consider(combine(chains[lv], chains[hv], c % 4, 0));
      }
      // Shifted earlier failures with valuation <= v.
      for (unsigned fv = 0; fv <= v; ++fv) {
        if (!failures[fv]) continue;
        const Failure& f = *failures[fv];
        // Unit inverses in Z4 are self-inverse.
        const unsigned c = (1U << (v - fv)) * theta * f.theta;
        consider(combine(chains[lv], f.pair, c % 4, k - f.step));
      }
      next[lv] = std::move(best);
    }

    for (std::size_t lv = 0; lv < kLevels; ++lv) {
      const unsigned d = disc[lv];
      if (d == 0) continue;
      const unsigned v = valuation(d);
      const std::size_t len = chains[lv].length();
      auto& slot = failures[v];
      if (!slot || k - len > slot->step - slot->length) {
        slot = Failure{chains[lv], k, unit_part(d), len};
      }
    }

    // 2 * (level-0 pair) is a level-1 pair.
    Pair doubled = combine(Pair{}, next[0], 2, 0);
    if (doubled.length() < next[1].length()) next[1] = std::move(doubled);

    chains = std::move(next);
  }

  LfsrResult result;
  result.length = chains[0].length();
  result.connection.assign(result.length + 1, 0);
  const Poly& a = chains[0].a;
  for (std::size_t i = 0; i < a.size() && i <= result.length; ++i) result.connection[i] = a[i];
  result.annihilates = recurrence_holds(result.connection, s);
  return result;
}

std::size_t linear_complexity(const QuaternarySequence& seq) {
  return reeds_sloane(seq.unroll(2 * seq.period())).length;
}

bool recurrence_holds(std::span<const std::uint8_t> connection,
                      std::span<const std::uint8_t> digits) {
  if (connection.empty()) return false;
  const std::size_t order = connection.size() - 1;
  for (std::size_t t = order; t < digits.size(); ++t) {
    unsigned acc = 0;
    for (std::size_t i = 0; i <= order; ++i) acc += connection[i] * digits[t - i];
    if (acc % 4 != 0) return false;
  }
  return true;
}

// ------------------------------------------------------------------ oracle

bool z4_system_solvable(std::vector<std::vector<std::uint8_t>> a,
                        std::vector<std::uint8_t> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  auto sub_row = [&](std::size_t dst, std::size_t src, unsigned c) {
    for (std::size_t j = 0; j < cols; ++j) {
      a[dst][j] = static_cast<std::uint8_t>((a[dst][j] + 4 * 4 - c * a[src][j]) % 4);
    }
    b[dst] = static_cast<std::uint8_t>((b[dst] + 4 * 4 - c * b[src]) % 4);
  };
  auto sub_col = [&](std::size_t dst, std::size_t src, unsigned c) {
    for (std::size_t i = 0; i < rows; ++i) {
      a[i][dst] = static_cast<std::uint8_t>((a[i][dst] + 4 * 4 - c * a[i][src]) % 4);
    }
  };

  std::size_t rank = 0;
  std::vector<std::uint8_t> diag;
  while (rank < rows && rank < cols) {
    // Prefer a unit pivot; otherwise every remaining entry is in {0, 2}.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = rank; i < rows && !pivot; ++i) {
      for (std::size_t j = rank; j < cols; ++j) {
        if (a[i][j] % 2 == 1) {
          pivot = {i, j};
          break;
        }
      }
    }
    for (std::size_t i = rank; i < rows && !pivot; ++i) {
      for (std::size_t j = rank; j < cols; ++j) {
        if (a[i][j] == 2) {
          pivot = {i, j};
          break;
        }
      }
    }
    if (!pivot) break;

    auto [pi, pj] = *pivot;
    std::swap(a[rank], a[pi]);
    std::swap(b[rank], b[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][rank], a[i][pj]);

    const std::size_t t = rank;
    if (a[t][t] == 3) {
      // Scale the pivot row by the unit 3 (its own inverse).
      for (std::size_t j = 0; j < cols; ++j) a[t][j] = static_cast<std::uint8_t>((3 * a[t][j]) % 4);
      b[t] = static_cast<std::uint8_t>((3 * b[t]) % 4);
    }
    // For a unit pivot (now 1) the multiplier is the entry itself; for the
    // pivot 2 every entry to clear is 2 and the multiplier is 1.
    const bool unit = a[t][t] == 1;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != t && a[i][t] != 0) sub_row(i, t, unit ? a[i][t] : 1U);
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (j != t && a[t][j] != 0) sub_col(j, t, unit ? a[t][j] : 1U);
    }
    diag.push_back(a[t][t]);
    ++rank;
  }

  for (std::size_t i = 0; i < rows; ++i) {
    if (i < rank) {
      if (diag[i] == 2 && b[i] % 2 != 0) return false;
    } else if (b[i] != 0) {
      return false;
    }
  }
  return true;
}

namespace {

std::size_t min_length_by_systems(std::span<const std::uint8_t> s, bool periodic) {
  const std::size_t n = s.size();
  for (std::size_t order = 0;; ++order) {
    std::vector<std::vector<std::uint8_t>> a;
    std::vector<std::uint8_t> rhs;
    const std::size_t first = periodic ? 0 : order;
    for (std::size_t t = first; t < n; ++t) {
      std::vector<std::uint8_t> row(order);
      for (std::size_t i = 1; i <= order; ++i) {
        row[i - 1] = periodic ? s[(t + order * n - i) % n] : s[t - i];
      }
      a.push_back(std::move(row));
      rhs.push_back(static_cast<std::uint8_t>((4 - s[t]) % 4));
    }
    if (a.empty()) return order;
    if (order == 0) {
      bool all_zero = true;
      for (std::uint8_t v : rhs) all_zero = all_zero && v == 0;
      if (all_zero) return 0;
      continue;
    }
    if (z4_system_solvable(std::move(a), std::move(rhs))) return order;
  }
}

}  // namespace

std::size_t snf_min_length(std::span<const std::uint8_t> digits) {
  if (digits.size() > kOracleMaxPeriod) {
    throw Error(ErrorCode::OracleTooLarge,
                "period " + std::to_string(digits.size()) + " exceeds oracle cap " +
                    std::to_string(kOracleMaxPeriod));
  }
  if (digits.empty()) throw Error(ErrorCode::InvalidArgument, "empty period");
  return min_length_by_systems(digits, true);
}

std::size_t snf_min_window_length(std::span<const std::uint8_t> digits) {
  if (digits.size() > kOracleMaxPeriod) {
    throw Error(ErrorCode::OracleTooLarge, "window exceeds oracle cap");
  }
  return min_length_by_systems(digits, false);
}

}  // namespace z4seq
