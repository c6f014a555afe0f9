// Residue classes of Lipschitz integers under right congruence modulo a
// quaternion prime pi: q1 ~ q2 iff q1 - q2 = beta * pi for some Lipschitz beta.
//
// Classes are carried as canonical representatives. Because {beta * pi} is a
// left ideal only, a product x*y of classes depends on the representative of
// the left factor x; every product here is taken on canonical representatives
// and then reduced, which makes all results deterministic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lipschitz/quaternion.hpp"

namespace lipschitz {

/// Raised for a modulus whose norm is not an odd rational prime.
class ModulusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// floor(a / b) for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b) < 0) --q;
  return q;
}

inline bool is_odd_prime(std::int64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::int64_t isqrt(std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct ModulusState {
  Quaternion pi;
  Quaternion conj_pi;
  std::int64_t p = 0;

  // Lazily built tables; each is written exactly once under its once_flag.
  mutable std::once_flag residues_once;
  mutable std::vector<Quaternion> residues;
  mutable std::once_flag min_reps_once;
  mutable std::vector<Quaternion> min_reps;  // aligned with residues
};

}  // namespace detail

class Residue;

/// A validated quaternion prime pi with p = N(pi) an odd rational prime.
/// Cheap to copy; copies share the same immutable state and caches.
class Modulus {
 public:
  explicit Modulus(const Quaternion& pi) {
    if (pi.is_zero()) throw ModulusError("modulus must be nonzero");
    const std::int64_t p = norm(pi);
    if (!detail::is_odd_prime(p)) {
      throw ModulusError("not a quaternion prime modulus for this artifact: norm " + std::to_string(p) +
                         " is not an odd rational prime");
    }
    auto state = std::make_shared<detail::ModulusState>();
    state->pi = pi;
    state->conj_pi = conjugate(pi);
    state->p = p;
    state_ = std::move(state);
  }

  const Quaternion& pi() const { return state_->pi; }
  const Quaternion& conj_pi() const { return state_->conj_pi; }
  std::int64_t p() const { return state_->p; }

  Residue reduce(const Quaternion& q) const;
  Residue zero() const;
  Residue one() const;

  /// Canonical representatives of all p^2 classes, sorted lexicographically.
  const std::vector<Quaternion>& residue_reps() const;

  const detail::ModulusState& state() const { return *state_; }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.state_ == b.state_ || a.state_->pi == b.state_->pi;
  }

 private:
  std::shared_ptr<const detail::ModulusState> state_;
};

inline Modulus make_modulus(const Quaternion& pi) { return Modulus(pi); }

/// A congruence class mod pi, held by its canonical representative.
class Residue {
 public:
  const Quaternion& rep() const { return rep_; }
  const Modulus& modulus() const { return modulus_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend bool operator==(const Residue& a, const Residue& b) { return a.rep_ == b.rep_ && a.modulus_ == b.modulus_; }
  /// Orders by representative only; meaningful within one modulus.
  friend bool operator<(const Residue& a, const Residue& b) { return a.rep_ < b.rep_; }

 private:
  friend Residue canonical_reduce(const Quaternion& q, const Modulus& m);
  Residue(const Quaternion& rep, Modulus m) : rep_(rep), modulus_(std::move(m)) {}

  Quaternion rep_;
  Modulus modulus_;
};

/// rep = q - beta*pi with beta = round(q * conj(pi) / p) componentwise,
/// round(x) = floor(x + 1/2). The rule commutes with integer translation of
/// beta, so the result is constant on each class and idempotent.
inline Residue canonical_reduce(const Quaternion& q, const Modulus& m) {
  const std::int64_t p = m.p();
  const Quaternion t = mul(q, m.conj_pi());
  auto round_div = [p](std::int64_t x) {
    return detail::floor_div(detail::checked_add(detail::checked_mul(x, 2), p), 2 * p);
  };
  const Quaternion beta{round_div(t.a0), round_div(t.a1), round_div(t.a2), round_div(t.a3)};
  return Residue(sub(q, mul(beta, m.pi())), m);
}

inline Residue Modulus::reduce(const Quaternion& q) const { return canonical_reduce(q, *this); }
inline Residue Modulus::zero() const { return canonical_reduce(Quaternion{}, *this); }
inline Residue Modulus::one() const { return canonical_reduce(Quaternion{1}, *this); }

inline const std::vector<Quaternion>& Modulus::residue_reps() const {
  const auto& s = *state_;
  std::call_once(s.residues_once, [this, &s] {
    // Canonical representatives are delta*pi with |delta_i| <= 1/2, so their
    // norm is at most p and every component lies within isqrt(p).
    const std::int64_t box = detail::isqrt(s.p);
    std::set<Quaternion> seen;
    for (std::int64_t a0 = -box; a0 <= box; ++a0)
      for (std::int64_t a1 = -box; a1 <= box; ++a1)
        for (std::int64_t a2 = -box; a2 <= box; ++a2)
          for (std::int64_t a3 = -box; a3 <= box; ++a3) seen.insert(reduce({a0, a1, a2, a3}).rep());
    if (static_cast<std::int64_t>(seen.size()) != s.p * s.p) {
      throw std::logic_error("residue enumeration found " + std::to_string(seen.size()) + " classes, expected p^2");
    }
    s.residues.assign(seen.begin(), seen.end());
  });
  return s.residues;
}

/// True iff q1 - q2 is a left multiple beta*pi. Since pi*conj(pi) = p this is
/// the same as p dividing every component of (q1 - q2)*conj(pi).
inline bool congruent(const Quaternion& q1, const Quaternion& q2, const Modulus& m) {
  const Quaternion d = mul(sub(q1, q2), m.conj_pi());
  for (auto c : d.components()) {
    if (c % m.p() != 0) return false;
  }
  return true;
}

/// Lexicographically least nonnegative (a0, a1, a2, a3) with a0^2+a1^2+a2^2+a3^2 = p.
inline Quaternion find_prime_over(std::int64_t p) {
  if (!detail::is_odd_prime(p)) throw ModulusError(std::to_string(p) + " is not an odd rational prime");
  const std::int64_t bound = detail::isqrt(p) + 1;
  for (std::int64_t a0 = 0; a0 <= bound; ++a0)
    for (std::int64_t a1 = 0; a1 <= bound; ++a1)
      for (std::int64_t a2 = 0; a2 <= bound; ++a2)
        for (std::int64_t a3 = 0; a3 <= bound; ++a3)
          if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == p) return {a0, a1, a2, a3};
  throw std::logic_error("no four-square representation found for " + std::to_string(p));
}

inline std::vector<Residue> enumerate_residues(const Modulus& m) {
  std::vector<Residue> out;
  out.reserve(m.residue_reps().size());
  for (const auto& q : m.residue_reps()) out.push_back(m.reduce(q));
  return out;
}

namespace detail {
inline void require_same_modulus(const Residue& x, const Residue& y) {
  if (!(x.modulus() == y.modulus())) throw std::invalid_argument("residues belong to different moduli");
}
}  // namespace detail

inline Residue add(const Residue& x, const Residue& y) {
  detail::require_same_modulus(x, y);
  return x.modulus().reduce(add(x.rep(), y.rep()));
}

inline Residue sub(const Residue& x, const Residue& y) {
  detail::require_same_modulus(x, y);
  return x.modulus().reduce(sub(x.rep(), y.rep()));
}

inline Residue neg(const Residue& x) { return x.modulus().reduce(neg(x.rep())); }

/// Product of canonical representatives, x on the left, then reduced.
inline Residue mul(const Residue& x, const Residue& y) {
  detail::require_same_modulus(x, y);
  return x.modulus().reduce(mul(x.rep(), y.rep()));
}

/// u*x for a plain quaternion u on the left.
inline Residue mul(const Quaternion& u, const Residue& x) { return x.modulus().reduce(mul(u, x.rep())); }

inline Residue scale(const Residue& x, std::int64_t c) { return x.modulus().reduce(scale(x.rep(), c)); }

/// x^k as the iterated product ((x*x)*x)..., x^0 = 1.
inline Residue pow(const Residue& x, std::uint64_t k) {
  Residue acc = x.modulus().one();
  for (std::uint64_t s = 0; s < k; ++s) acc = mul(acc, x);
  return acc;
}

/// Least m >= 1 with x^m = 1, searching m <= p^2; nullopt when no power reaches 1.
inline std::optional<std::uint64_t> order(const Residue& x) {
  if (x.is_zero()) throw std::invalid_argument("order of the zero class is undefined");
  const Residue one = x.modulus().one();
  const auto limit = static_cast<std::uint64_t>(x.modulus().p() * x.modulus().p());
  Residue acc = x;
  for (std::uint64_t m = 1; m <= limit; ++m) {
    if (acc == one) return m;
    acc = mul(acc, x);
  }
  return std::nullopt;
}

/// A two-sided inverse y (x*y = y*x = 1) found by search over all classes.
inline std::optional<Residue> inverse(const Residue& x) {
  if (x.is_zero()) throw std::invalid_argument("the zero class has no inverse");
  const Modulus& m = x.modulus();
  const Residue one = m.one();
  for (const auto& q : m.residue_reps()) {
    Residue y = m.reduce(q);
    if (mul(x, y) == one && mul(y, x) == one) return y;
  }
  return std::nullopt;
}

/// {u*x : u a unit}, deduplicated and sorted.
inline std::vector<Residue> left_associates(const Residue& x) {
  std::vector<Residue> out;
  for (const auto& u : units()) out.push_back(mul(u, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool are_left_associates(const Residue& x, const Residue& y) {
  for (const auto& u : units()) {
    if (mul(u, x) == y) return true;
  }
  return false;
}

inline Residue operator+(const Residue& x, const Residue& y) { return add(x, y); }
inline Residue operator-(const Residue& x, const Residue& y) { return sub(x, y); }
inline Residue operator-(const Residue& x) { return neg(x); }
inline Residue operator*(const Residue& x, const Residue& y) { return mul(x, y); }

/// A word of symbols over one modulus.
using Word = std::vector<Residue>;

inline Word reduce_word(std::span<const Quaternion> qs, const Modulus& m) {
  Word w;
  w.reserve(qs.size());
  for (const auto& q : qs) w.push_back(m.reduce(q));
  return w;
}

inline Word zero_word(const Modulus& m, std::size_t n) { return Word(n, m.zero()); }

inline Word add(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw std::invalid_argument("word length mismatch");
  Word out;
  out.reserve(a.size());
  for (std::size_t l = 0; l < a.size(); ++l) out.push_back(add(a[l], b[l]));
  return out;
}

inline Word sub(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw std::invalid_argument("word length mismatch");
  Word out;
  out.reserve(a.size());
  for (std::size_t l = 0; l < a.size(); ++l) out.push_back(sub(a[l], b[l]));
  return out;
}

}  // namespace lipschitz
