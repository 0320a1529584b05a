#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

// The four primitive letters. Higher generators x_i (i >= 2) are parser
// sugar and expand to x0^{1-i} x1 x0^{i-1}.
enum class Letter : std::uint8_t { X0, X0Inv, X1, X1Inv };

using GroupWord = std::vector<Letter>;

Letter inverse(Letter g);
bool is_inverse_pair(Letter a, Letter b);

// Formal inverse: reverse the word and invert each letter.
GroupWord inverse_word(const GroupWord& w);

// x_i = x0^{1-i} x1 x0^{i-1}. pre: i >= 2.
GroupWord expand_higher_generator(int i);

// Grammar (whitespace and '*' are separators):
//   word := term*
//   term := atom ("^" int)?
//   atom := "x" digits | "X" digits | "(" word ")"
// Capital X means inverse; "x0^-2" and "X0^2" parse identically.
// Exponent 0 yields the empty word. Throws ParseError with a position.
GroupWord parse_word(std::string_view text);

// Run-length form, e.g. "x0^-2 x1 x0^3 x1^-2"; parse(format(w)) == w.
std::string format_word(const GroupWord& w);

}  // namespace thompson
