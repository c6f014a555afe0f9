// Text forms of quaternions and words, e.g. "1-i-j-k" and "(3,3,1,1,k,0)".
//
//   literal := ["-"] term { ("+" | "-") term }
//   term    := [unsigned-integer] [basis]      basis in {i, j, k}
//
// A term without basis is the complete part; each basis appears at most once.
// Printing is canonical: order 1, i, j, k, zero components omitted, unit
// coefficients omitted before a basis, no whitespace, "0" for zero.
#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lipschitz/quaternion.hpp"
#include "lipschitz/residue.hpp"

namespace lipschitz {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline Quaternion parse_quaternion(std::string_view text) {
  const std::string_view s = detail::trim(text);
  const std::string whole(s);
  if (s.empty()) throw ParseError("empty quaternion literal", whole);

  std::array<std::int64_t, 4> comp{};
  std::array<bool, 4> seen{};
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '-') {
    negative = true;
    ++pos;
  }

  while (true) {
    const std::size_t term_start = pos;
    std::int64_t coeff = 0;
    bool has_digits = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      const int digit = s[pos] - '0';
      if (coeff > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        throw ParseError("coefficient out of range in \"" + whole + "\"", std::string(s.substr(term_start)));
      }
      coeff = coeff * 10 + digit;
      has_digits = true;
      ++pos;
    }
    int slot = 0;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
      slot = 1 + (s[pos] - 'i');
      ++pos;
      if (!has_digits) coeff = 1;
    } else if (!has_digits) {
      const std::string tok = pos < s.size() ? std::string(1, s[pos]) : std::string("<end>");
      throw ParseError("expected a term at '" + tok + "' in \"" + whole + "\"", tok);
    }
    if (seen[slot]) {
      const std::string tok(s.substr(term_start, pos - term_start));
      throw ParseError("repeated " + std::string(slot == 0 ? "complete part" : "basis") + " term '" + tok +
                           "' in \"" + whole + "\"",
                       tok);
    }
    seen[slot] = true;
    comp[slot] = negative ? -coeff : coeff;

    if (pos == s.size()) break;
    if (s[pos] != '+' && s[pos] != '-') {
      const std::string tok(1, s[pos]);
      throw ParseError("unexpected '" + tok + "' in \"" + whole + "\"", tok);
    }
    negative = s[pos] == '-';
    ++pos;
  }
  return {comp[0], comp[1], comp[2], comp[3]};
}

inline std::string format_quaternion(const Quaternion& q) {
  static constexpr std::array<const char*, 4> basis{"", "i", "j", "k"};
  std::string out;
  const auto c = q.components();
  for (std::size_t slot = 0; slot < 4; ++slot) {
    const std::int64_t v = c[slot];
    if (v == 0) continue;
    if (v < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    // magnitude via unsigned arithmetic so INT64_MIN prints correctly
    const std::uint64_t mag = v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    if (mag != 1 || slot == 0) out += std::to_string(mag);
    out += basis[slot];
  }
  return out.empty() ? "0" : out;
}

inline std::string format_residue(const Residue& x) { return format_quaternion(x.rep()); }

/// "(a,b,c)" -> {a, b, c}; "()" is the empty word.
inline std::vector<Quaternion> parse_word(std::string_view text) {
  const std::string_view s = detail::trim(text);
  const std::string whole(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("word must be parenthesized, e.g. (1,i,0): \"" + whole + "\"", whole);
  }
  std::vector<Quaternion> out;
  std::string_view body = s.substr(1, s.size() - 2);
  if (detail::trim(body).empty()) return out;
  while (true) {
    const auto comma = body.find(',');
    out.push_back(parse_quaternion(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

inline std::string format_word(std::span<const Quaternion> w) {
  std::string out = "(";
  for (std::size_t l = 0; l < w.size(); ++l) {
    if (l) out += ',';
    out += format_quaternion(w[l]);
  }
  return out + ")";
}

inline std::string format_word(std::span<const Residue> w) {
  std::vector<Quaternion> reps;
  reps.reserve(w.size());
  for (const auto& x : w) reps.push_back(x.rep());
  return format_word(std::span<const Quaternion>(reps));
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << format_quaternion(q); }
inline std::ostream& operator<<(std::ostream& os, const Residue& x) { return os << format_quaternion(x.rep()); }

}  // namespace lipschitz
