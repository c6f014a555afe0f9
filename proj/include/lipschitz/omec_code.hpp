// Codes of length n = (p-1)/2 correcting one error of quaternion Mannheim
// weight one, with parity check row (1, a, a^2, ..., a^(n-1)).
//
// Convention: a received symbol multiplies the matrix entry from the left,
// S = sum_l r[l] * a^l. Error positions are 0-indexed.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lipschitz/decode_report.hpp"
#include "lipschitz/metric.hpp"
#include "lipschitz/residue.hpp"

namespace lipschitz {

/// Raised when a code cannot be built from the given parameters.
class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OmecCode {
 public:
  /// Builds the code for generator alpha with alpha^(p-1) = 1. A requested
  /// length other than (p-1)/2 (the (p^r-1)/2 extension family) is rejected.
  static OmecCode build(const Modulus& m, const Residue& alpha, std::optional<std::size_t> length = std::nullopt) {
    if (!(alpha.modulus() == m)) throw CodeError("generator belongs to a different modulus");
    if (alpha.is_zero()) throw CodeError("generator must be nonzero");
    const auto n = static_cast<std::size_t>((m.p() - 1) / 2);
    if (length && *length != n) {
      throw CodeError("length " + std::to_string(*length) + " is not (p-1)/2 = " + std::to_string(n) +
                      "; extension lengths (p^r-1)/2 with r > 1 are not supported");
    }
    if (!(pow(alpha, static_cast<std::uint64_t>(m.p() - 1)) == m.one())) {
      throw CodeError("generator does not satisfy alpha^(p-1) = 1");
    }

    OmecCode c(m, alpha, n);
    c.h_row_.reserve(n);
    for (std::size_t l = 0; l < n; ++l) c.h_row_.push_back(pow(alpha, l));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (are_left_associates(c.h_row_[a], c.h_row_[b])) {
          throw CodeError("parity check entries alpha^" + std::to_string(a) + " and alpha^" + std::to_string(b) +
                          " are associates; error locations would be ambiguous");
        }

    // alpha^-l as the complementary power alpha^(p-1-l).
    for (std::size_t l = 0; l < n; ++l) c.inverse_powers_.push_back(pow(alpha, static_cast<std::uint64_t>(m.p() - 1) - l));

    for (std::size_t l = 0; l + 1 < n; ++l) {
      Word row = zero_word(m, n);
      row[0] = neg(c.h_row_[l + 1]);
      row[l + 1] = m.one();
      c.g_rows_.push_back(std::move(row));
    }
    return c;
  }

  const Modulus& modulus() const { return modulus_; }
  const Residue& alpha() const { return alpha_; }
  std::size_t length() const { return n_; }
  std::size_t message_length() const { return n_ - 1; }
  const Word& h_row() const { return h_row_; }
  const std::vector<Word>& g_rows() const { return g_rows_; }

  /// Systematic encoding: word[l+1] = msg[l], word[0] = -sum_l msg[l] * a^(l+1).
  Word encode(std::span<const Residue> msg) const {
    if (msg.size() != message_length()) {
      throw std::invalid_argument("expected n-1 = " + std::to_string(message_length()) + " symbols, got " +
                                  std::to_string(msg.size()));
    }
    Word w = zero_word(modulus_, n_);
    Residue check = modulus_.zero();
    for (std::size_t l = 0; l < msg.size(); ++l) {
      check = add(check, mul(msg[l], h_row_[l + 1]));
      w[l + 1] = msg[l];
    }
    w[0] = neg(check);
    return w;
  }

  Residue syndrome(std::span<const Residue> r) const {
    require_length(r.size());
    Residue s = modulus_.zero();
    for (std::size_t l = 0; l < n_; ++l) s = add(s, mul(r[l], h_row_[l]));
    return s;
  }

  /// Scans l for a unit-weight value S * a^-l. Exactly one qualifying l is a
  /// correction; none, or more than one, is uncorrectable.
  DecodeReport decode(std::span<const Residue> r) const {
    const Residue s = syndrome(r);
    DecodeReport report;
    report.corrected.assign(r.begin(), r.end());
    if (s.is_zero()) {
      report.kind = DecodeKind::NoError;
      return report;
    }
    std::vector<ErrorEntry> hits;
    for (std::size_t l = 0; l < n_; ++l) {
      Residue v = mul(s, inverse_powers_[l]);
      if (qm_weight(v) == 1) hits.push_back({l, v});
    }
    if (hits.size() != 1) {
      report.kind = DecodeKind::Uncorrectable;
      return report;
    }
    const ErrorEntry& e = hits.front();
    report.corrected[e.position] = sub(report.corrected[e.position], e.value);
    report.kind = DecodeKind::Single;
    report.errors = std::move(hits);
    return report;
  }

 private:
  OmecCode(Modulus m, Residue alpha, std::size_t n) : modulus_(std::move(m)), alpha_(std::move(alpha)), n_(n) {}

  void require_length(std::size_t got) const {
    if (got != n_) {
      throw std::invalid_argument("expected n = " + std::to_string(n_) + " symbols, got " + std::to_string(got));
    }
  }

  Modulus modulus_;
  Residue alpha_;
  std::size_t n_;
  Word h_row_;
  Word inverse_powers_;
  std::vector<Word> g_rows_;
};

}  // namespace lipschitz
