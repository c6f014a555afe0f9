// Double-error-correcting negacyclic codes over H(Z)_pi.
//
// The parity check has rows (b^0, b^(2j+1), b^(2(2j+1)), ...) for j = 0..t,
// where b has order 2n, so b^n = -1 and the code is an ideal of
// H(Z)_pi[x] / (x^n + 1). Only t = 1 is decoded: two syndromes s1 and s3.
//
// Symbols multiply b-powers from the left throughout. Positions are 0-indexed.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lipschitz/decode_report.hpp"
#include "lipschitz/metric.hpp"
#include "lipschitz/omec_code.hpp"
#include "lipschitz/residue.hpp"

namespace lipschitz {

struct Syndromes {
  Residue s1;
  Residue s3;

  bool is_zero() const { return s1.is_zero() && s3.is_zero(); }
  friend bool operator==(const Syndromes&, const Syndromes&) = default;
};

/// Which side the denominator 3*s1 sits on when the locator value
/// eps = (s1^3 - s3) / (3 s1) is formed.
///   Left:  the unique e with (3 s1) * e = s1^3 - s3
///   Right: the unique e with e * (3 s1) = s1^3 - s3
enum class EpsilonSide { Left, Right };

/// Left is the only side that yields a unique solution on the worked
/// two-error example (Right has two solutions there). Neither side gives the
/// value -2k that the example reports for the root product; see
/// DecCode::root_product for that quantity.
inline constexpr EpsilonSide kEpsilonSide = EpsilonSide::Left;

struct Classification {
  DecodeKind kind = DecodeKind::Uncorrectable;
  std::vector<ErrorEntry> errors;  // sorted by position
};

/// Sum_i poly[i] * z^i with coefficients on the left.
inline Residue evaluate_left(std::span<const Residue> poly, const Residue& z) {
  Residue acc = z.modulus().zero();
  for (std::size_t i = 0; i < poly.size(); ++i) acc = add(acc, mul(poly[i], pow(z, i)));
  return acc;
}

class DecCode {
 public:
  /// n is taken from the order of beta (order = 2n) unless a length is given,
  /// in which case the order must equal twice that length.
  static DecCode build(const Modulus& m, const Residue& beta, std::size_t t = 1,
                       std::optional<std::size_t> length = std::nullopt) {
    if (!(beta.modulus() == m)) throw CodeError("generator belongs to a different modulus");
    if (beta.is_zero()) throw CodeError("generator must be nonzero");
    if (t != 1) throw CodeError("only t = 1 (two syndrome rows s1, s3) is supported; got t = " + std::to_string(t));
    const auto ord = order(beta);
    if (!ord) throw CodeError("generator has no finite order");
    if (length && *ord != 2 * *length) {
      throw CodeError("generator has order " + std::to_string(*ord) + ", expected 2n = " + std::to_string(2 * *length));
    }
    if (*ord % 2 != 0) throw CodeError("generator order " + std::to_string(*ord) + " is odd; need order 2n");
    const std::size_t n = *ord / 2;
    if (n <= t) throw CodeError("code length n = " + std::to_string(n) + " must exceed t = " + std::to_string(t));
    if (!(pow(beta, n) == neg(m.one()))) throw CodeError("generator does not satisfy b^n = -1");

    DecCode c(m, beta, n, t);
    for (std::size_t j = 0; j <= t; ++j) {
      Word row;
      for (std::size_t l = 0; l < n; ++l) row.push_back(pow(beta, (2 * j + 1) * l));
      c.h_rows_.push_back(std::move(row));
    }

    // Candidate roots u * b^e, u in {1, i, j, k}, e in [0, 2n): position
    // e mod n, value +-u (b^(l+n) = -b^l).
    const std::array<Quaternion, 4> basis{Quaternion{1}, Quaternion::i(), Quaternion::j(), Quaternion::k()};
    for (const auto& u : basis) {
      for (std::size_t e = 0; e < 2 * n; ++e) {
        const std::size_t pos = e % n;
        Residue value = m.reduce(e < n ? u : neg(u));
        Residue root = mul(u, pow(beta, e));
        Residue s3_part = mul(value, c.h_rows_[1][pos]);
        c.roots_[root.rep()].push_back(c.candidates_.size());
        c.candidates_.push_back({u, e, pos, value, root, s3_part});
      }
    }
    for (std::size_t e = 0; e < 4 * n; ++e) c.beta_powers_.push_back(pow(beta, e));
    return c;
  }

  const Modulus& modulus() const { return modulus_; }
  const Residue& beta() const { return beta_; }
  std::size_t length() const { return n_; }
  std::size_t designed_errors() const { return t_; }
  std::size_t message_length() const { return n_ - 2 * t_; }
  const std::vector<Word>& h_rows() const { return h_rows_; }

  /// (x - b)(x - b^3) = x^2 - (b + b^3) x + b * b^3, ascending coefficients.
  Word generator_poly() const {
    const Residue b1 = pow(beta_, 1);
    const Residue b3 = pow(beta_, 3);
    return {mul(b1, b3), neg(add(b1, b3)), modulus_.one()};
  }

  /// Codeword of m(x) * g(x), message coefficients on the left.
  Word encode(std::span<const Residue> msg) const {
    if (msg.size() != message_length()) {
      throw std::invalid_argument("expected n-2 = " + std::to_string(message_length()) + " symbols, got " +
                                  std::to_string(msg.size()));
    }
    const Word g = generator_poly();
    Word w = zero_word(modulus_, n_);
    for (std::size_t a = 0; a < msg.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b) w[a + b] = add(w[a + b], mul(msg[a], g[b]));
    return w;
  }

  Syndromes syndromes(std::span<const Residue> r) const {
    require_length(r.size());
    Residue s1 = modulus_.zero();
    Residue s3 = modulus_.zero();
    for (std::size_t l = 0; l < n_; ++l) {
      s1 = add(s1, mul(r[l], h_rows_[0][l]));
      s3 = add(s3, mul(r[l], h_rows_[1][l]));
    }
    return {s1, s3};
  }

  bool is_codeword(std::span<const Residue> w) const { return syndromes(w).is_zero(); }

  /// x * w(x) mod (x^n + 1): shift right, the wrapped symbol is negated.
  Word negacyclic_shift(std::span<const Residue> w) const {
    require_length(w.size());
    Word out;
    out.reserve(n_);
    out.push_back(neg(w[n_ - 1]));
    for (std::size_t l = 1; l < n_; ++l) out.push_back(w[l - 1]);
    return out;
  }

  /// Locator value from the syndromes; nullopt when 3*s1 does not determine a
  /// unique quotient on the requested side.
  std::optional<Residue> epsilon(const Residue& s1, const Residue& s3, EpsilonSide side = kEpsilonSide) const {
    const Residue num = sub(pow(s1, 3), s3);
    const Residue den = scale(s1, 3);
    if (den.is_zero()) return std::nullopt;
    std::optional<Residue> found;
    for (const auto& q : modulus_.residue_reps()) {
      Residue e = modulus_.reduce(q);
      const Residue lhs = side == EpsilonSide::Left ? mul(den, e) : mul(e, den);
      if (lhs == num) {
        if (found) return std::nullopt;
        found = e;
      }
    }
    return found;
  }

  /// Two-error search over pairs of candidate roots z = u * b^e. Pairs must
  /// satisfy z1 + z2 = s1. When eps is available the pairs are first pruned
  /// to (u1 u2) b^(e1+e2) = eps or (u2 u1) b^(e1+e2) = eps, falling back to
  /// the unpruned search if nothing survives. Every accepted pair is checked
  /// against both raw syndrome equations. Returns nullopt unless exactly one
  /// pattern verifies.
  std::optional<std::pair<ErrorEntry, ErrorEntry>> locate_double(const Residue& s1, const Residue& s3) const {
    const auto eps = epsilon(s1, s3);
    if (eps) {
      if (auto hit = search_pairs(s1, s3, &*eps); hit.count > 0) return hit.unique();
    }
    return search_pairs(s1, s3, nullptr).unique();
  }

  /// Product of the roots v1 * b^l1 and v2 * b^l2 of a two-error pattern,
  /// taken as (v1 v2) * b^(l1 + l2) with the units on the left. This is the
  /// unit-adjusted b^(l1 + l2) form of eps.
  Residue root_product(const ErrorEntry& first, const ErrorEntry& second) const {
    return mul(mul(first.value, second.value), beta_powers_[first.position + second.position]);
  }

  Classification classify(const Residue& s1, const Residue& s3) const {
    Classification out;
    if (s1.is_zero() && s3.is_zero()) {
      out.kind = DecodeKind::NoError;
      return out;
    }
    for (std::size_t l = 0; l < n_; ++l) {
      for (const auto& u : units()) {
        if (mul(u, h_rows_[0][l]) == s1 && mul(u, h_rows_[1][l]) == s3) {
          out.kind = DecodeKind::Single;
          out.errors.push_back({l, modulus_.reduce(u)});
          return out;
        }
      }
    }
    if (auto pair = locate_double(s1, s3)) {
      out.kind = DecodeKind::Double;
      out.errors = {pair->first, pair->second};
      return out;
    }
    out.kind = DecodeKind::Uncorrectable;
    return out;
  }

  DecodeReport decode(std::span<const Residue> r) const {
    const Syndromes s = syndromes(r);
    Classification c = classify(s.s1, s.s3);
    DecodeReport report;
    report.kind = c.kind;
    report.corrected.assign(r.begin(), r.end());
    for (const auto& e : c.errors) report.corrected[e.position] = sub(report.corrected[e.position], e.value);
    if (!c.errors.empty() && !is_codeword(report.corrected)) {
      report.kind = DecodeKind::Uncorrectable;
      report.corrected.assign(r.begin(), r.end());
      return report;
    }
    report.errors = std::move(c.errors);
    return report;
  }

 private:
  struct Candidate {
    Quaternion unit;        // u in {1, i, j, k}
    std::size_t exponent;   // e in [0, 2n)
    std::size_t position;
    Residue value;
    Residue root;     // u * b^e
    Residue s3_part;  // value * b^(3 position)
  };

  struct PairSearch {
    std::size_t count = 0;
    std::optional<std::pair<ErrorEntry, ErrorEntry>> first;
    std::optional<std::pair<ErrorEntry, ErrorEntry>> unique() const {
      return count == 1 ? first : std::nullopt;
    }
  };

  DecCode(Modulus m, Residue beta, std::size_t n, std::size_t t)
      : modulus_(std::move(m)), beta_(std::move(beta)), n_(n), t_(t) {}

  PairSearch search_pairs(const Residue& s1, const Residue& s3, const Residue* eps) const {
    PairSearch result;
    std::vector<std::pair<ErrorEntry, ErrorEntry>> seen;
    for (std::size_t a = 0; a < candidates_.size(); ++a) {
      const Candidate& c1 = candidates_[a];
      const auto partners = roots_.find(sub(s1, c1.root).rep());
      if (partners == roots_.end()) continue;
      for (const std::size_t b : partners->second) {
        if (b <= a) continue;
        const Candidate& c2 = candidates_[b];
        if (c1.position == c2.position) continue;
        if (eps) {
          const Residue& power = beta_powers_[c1.exponent + c2.exponent];
          if (!(mul(c1.unit * c2.unit, power) == *eps) && !(mul(c2.unit * c1.unit, power) == *eps)) continue;
        }
        if (!(add(c1.s3_part, c2.s3_part) == s3)) continue;
        std::pair<ErrorEntry, ErrorEntry> hit{{c1.position, c1.value}, {c2.position, c2.value}};
        if (hit.second.position < hit.first.position) std::swap(hit.first, hit.second);
        if (std::find(seen.begin(), seen.end(), hit) != seen.end()) continue;
        seen.push_back(hit);
        if (!result.first) result.first = hit;
        ++result.count;
      }
    }
    return result;
  }

  void require_length(std::size_t got) const {
    if (got != n_) {
      throw std::invalid_argument("expected n = " + std::to_string(n_) + " symbols, got " + std::to_string(got));
    }
  }

  Modulus modulus_;
  Residue beta_;
  std::size_t n_;
  std::size_t t_;
  std::vector<Word> h_rows_;
  std::vector<Candidate> candidates_;
  std::map<Quaternion, std::vector<std::size_t>> roots_;  // root class -> candidate indices
  Word beta_powers_;  // b^0 .. b^(4n-1)
};

}  // namespace lipschitz
