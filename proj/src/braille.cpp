#include "arbor/braille.hpp"

#include <array>
#include <cctype>

#include "arbor/error.hpp"

namespace arbor {
namespace {

constexpr char32_t kBlank = 0x2800;
constexpr char32_t kNumberSign = 0x283C;   // dots 3456
constexpr char32_t kCapitalSign = 0x2820;  // dot 6
constexpr char32_t kGrade1 = 0x2830;       // dots 56
constexpr std::array<char32_t, 2> kMinus = {0x2810, 0x2824};  // dot 5, dots 36

// a..z as dot bitmasks (bit k = dot k+1).
constexpr std::array<unsigned, 26> kLetters = {
    0x01, 0x03, 0x09, 0x19, 0x11, 0x0B, 0x1B, 0x13, 0x0A, 0x1A,  // a-j
    0x05, 0x07, 0x0D, 0x1D, 0x15, 0x0F, 0x1F, 0x17, 0x0E, 0x1E,  // k-t
    0x25, 0x27, 0x3A, 0x2D, 0x3D, 0x35,                          // u-z
};

char32_t letter(char c) { return kBlank + kLetters[static_cast<std::size_t>(c - 'a')]; }

// Digits reuse a-j: 1..9 -> a..i, 0 -> j.
char32_t digit(char c) { return c == '0' ? letter('j') : letter(static_cast<char>('a' + (c - '1'))); }

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

}  // namespace

std::string BrailleLabel::text() const {
  std::string out;
  for (char32_t c : cells) append_utf8(out, c);
  return out;
}

BrailleLabel transcribe_braille(std::string_view label) {
  if (label.empty()) throw Error(ErrorCode::EmptyLabel, "label is empty");

  BrailleLabel out;
  out.print = std::string(label);
  bool numeric = false;
  for (char c : label) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isdigit(u)) {
      if (!numeric) out.cells.push_back(kNumberSign);
      numeric = true;
      out.cells.push_back(digit(c));
    } else if (std::islower(u)) {
      if (numeric && c <= 'j') out.cells.push_back(kGrade1);
      numeric = false;
      out.cells.push_back(letter(c));
    } else if (std::isupper(u)) {
      numeric = false;
      out.cells.push_back(kCapitalSign);
      out.cells.push_back(letter(static_cast<char>(std::tolower(u))));
    } else if (c == '-') {
      numeric = false;
      out.cells.insert(out.cells.end(), kMinus.begin(), kMinus.end());
    } else {
      throw Error(ErrorCode::UntranscribableCharacter,
                  "label '" + out.print + "' contains a character with no braille mapping");
    }
  }
  if (out.cells.size() > kMaxBrailleCells) {
    throw Error(ErrorCode::LabelTooLong,
                "label '" + out.print + "' needs " + std::to_string(out.cells.size()) +
                    " braille cells; at most " + std::to_string(kMaxBrailleCells) + " fit");
  }
  return out;
}

std::vector<int> braille_dots(char32_t cell) {
  std::vector<int> dots;
  const unsigned bits = static_cast<unsigned>(cell - kBlank);
  for (int d = 0; d < 8; ++d) {
    if (bits & (1u << d)) dots.push_back(d + 1);
  }
  return dots;
}

}  // namespace arbor
