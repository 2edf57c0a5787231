#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace arbor {

// Longest label that fits a tactile node or box.
inline constexpr std::size_t kMaxBrailleCells = 3;

struct BrailleLabel {
  // Unicode braille patterns, U+2800..U+28FF.
  std::vector<char32_t> cells;
  std::string print;

  /// The cells as a UTF-8 string.
  std::string text() const;
};

/// Uncontracted UEB: digits go through numeric mode (number sign, then the
/// a-j patterns), capitals take the capital sign, a letter a-j right after a
/// digit takes the grade 1 indicator, '-' is the minus sign.
/// Throws EmptyLabel, UntranscribableCharacter, or LabelTooLong when the
/// result exceeds kMaxBrailleCells.
BrailleLabel transcribe_braille(std::string_view label);

/// Dots raised in a cell, as the 1..6 dot numbers in ascending order.
std::vector<int> braille_dots(char32_t cell);

}  // namespace arbor
