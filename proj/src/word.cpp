#include "thompson/word.hpp"

#include <cctype>
#include <stdexcept>

#include "thompson/errors.hpp"

namespace thompson {

Letter inverse(Letter g) {
  switch (g) {
    case Letter::X0: return Letter::X0Inv;
    case Letter::X0Inv: return Letter::X0;
    case Letter::X1: return Letter::X1Inv;
    case Letter::X1Inv: return Letter::X1;
  }
  throw std::logic_error("bad letter");
}

bool is_inverse_pair(Letter a, Letter b) { return inverse(a) == b; }

GroupWord inverse_word(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

GroupWord expand_higher_generator(int i) {
  if (i < 2) throw std::domain_error("expand_higher_generator requires i >= 2");
  GroupWord out;
  out.reserve(2 * (i - 1) + 1);
  for (int k = 0; k < i - 1; ++k) out.push_back(Letter::X0Inv);
  out.push_back(Letter::X1);
  for (int k = 0; k < i - 1; ++k) out.push_back(Letter::X0);
  return out;
}

namespace {

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '*';
}

void append_power(GroupWord& out, const GroupWord& seg, long long k) {
  const GroupWord& base = k >= 0 ? seg : inverse_word(seg);
  long long reps = k >= 0 ? k : -k;
  for (long long r = 0; r < reps; ++r)
    out.insert(out.end(), base.begin(), base.end());
}

long long parse_int(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  bool neg = false;
  if (pos < text.size() && text[pos] == '-') {
    neg = true;
    ++pos;
  }
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw ParseError("expected digits", pos);
  long long value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1'000'000) throw ParseError("exponent too large", start);
    ++pos;
  }
  return neg ? -value : value;
}

GroupWord generator_letters(long long index, bool inv, std::size_t err_pos) {
  if (index == 0) return {inv ? Letter::X0Inv : Letter::X0};
  if (index == 1) return {inv ? Letter::X1Inv : Letter::X1};
  if (index > 64) throw ParseError("generator index too large", err_pos);
  GroupWord w = expand_higher_generator(static_cast<int>(index));
  return inv ? inverse_word(w) : w;
}

GroupWord parse_sequence(std::string_view text, std::size_t& pos, int depth) {
  GroupWord out;
  for (;;) {
    while (pos < text.size() && is_separator(text[pos])) ++pos;
    if (pos >= text.size()) {
      if (depth > 0) throw ParseError("unmatched '('", pos);
      return out;
    }
    char c = text[pos];
    if (c == ')') {
      if (depth == 0) throw ParseError("unmatched ')'", pos);
      return out;
    }
    GroupWord atom;
    if (c == '(') {
      ++pos;
      atom = parse_sequence(text, pos, depth + 1);
      ++pos;  // consume ')' (parse_sequence returned on it)
    } else if (c == 'x' || c == 'X') {
      std::size_t at = pos;
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected generator index after 'x'", pos);
      long long index = parse_int(text, pos);
      atom = generator_letters(index, c == 'X', at);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = parse_int(text, pos);
    }
    append_power(out, atom, exponent);
  }
}

}  // namespace

GroupWord parse_word(std::string_view text) {
  std::size_t pos = 0;
  return parse_sequence(text, pos, 0);
}

std::string format_word(const GroupWord& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long run = static_cast<long long>(j - i);
    const char* base = (w[i] == Letter::X0 || w[i] == Letter::X0Inv) ? "x0" : "x1";
    bool inv = (w[i] == Letter::X0Inv || w[i] == Letter::X1Inv);
    if (!out.empty()) out += ' ';
    out += base;
    long long e = inv ? -run : run;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace thompson
