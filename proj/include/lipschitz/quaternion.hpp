// Exact arithmetic on Lipschitz integer quaternions a0 + a1 i + a2 j + a3 k.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lipschitz {

/// Raised when an exact integer operation would leave the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("quaternion component overflow in addition");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("quaternion component overflow in subtraction");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("quaternion component overflow in multiplication");
  return out;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

}  // namespace detail

/// A Lipschitz integer quaternion. a0 is the complete (real) part and
/// (a1, a2, a3) the vector part. Ordering is lexicographic on (a0, a1, a2, a3).
struct Quaternion {
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t a3 = 0;

  constexpr Quaternion() = default;
  constexpr Quaternion(std::int64_t real, std::int64_t i = 0, std::int64_t j = 0, std::int64_t k = 0)
      : a0(real), a1(i), a2(j), a3(k) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr std::array<std::int64_t, 4> components() const { return {a0, a1, a2, a3}; }

  constexpr bool is_zero() const { return a0 == 0 && a1 == 0 && a2 == 0 && a3 == 0; }
  constexpr bool is_real() const { return a1 == 0 && a2 == 0 && a3 == 0; }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
  friend constexpr auto operator<=>(const Quaternion&, const Quaternion&) = default;
};

inline Quaternion add(const Quaternion& q, const Quaternion& r) {
  using detail::checked_add;
  return {checked_add(q.a0, r.a0), checked_add(q.a1, r.a1), checked_add(q.a2, r.a2), checked_add(q.a3, r.a3)};
}

inline Quaternion sub(const Quaternion& q, const Quaternion& r) {
  using detail::checked_sub;
  return {checked_sub(q.a0, r.a0), checked_sub(q.a1, r.a1), checked_sub(q.a2, r.a2), checked_sub(q.a3, r.a3)};
}

inline Quaternion neg(const Quaternion& q) {
  using detail::checked_neg;
  return {checked_neg(q.a0), checked_neg(q.a1), checked_neg(q.a2), checked_neg(q.a3)};
}

inline Quaternion scale(const Quaternion& q, std::int64_t c) {
  using detail::checked_mul;
  return {checked_mul(q.a0, c), checked_mul(q.a1, c), checked_mul(q.a2, c), checked_mul(q.a3, c)};
}

/// Hamilton product q*r; q is the left factor. Written in complete/vector form:
/// (s, u)(t, v) = (st - u.v, s v + t u + u x v).
inline Quaternion mul(const Quaternion& q, const Quaternion& r) {
  using detail::checked_add;
  using detail::checked_mul;
  using detail::checked_sub;
  auto m = checked_mul;
  const std::int64_t dot = checked_add(checked_add(m(q.a1, r.a1), m(q.a2, r.a2)), m(q.a3, r.a3));
  const std::int64_t real = checked_sub(m(q.a0, r.a0), dot);
  const std::int64_t x = checked_add(checked_add(m(q.a0, r.a1), m(r.a0, q.a1)), checked_sub(m(q.a2, r.a3), m(q.a3, r.a2)));
  const std::int64_t y = checked_add(checked_add(m(q.a0, r.a2), m(r.a0, q.a2)), checked_sub(m(q.a3, r.a1), m(q.a1, r.a3)));
  const std::int64_t z = checked_add(checked_add(m(q.a0, r.a3), m(r.a0, q.a3)), checked_sub(m(q.a1, r.a2), m(q.a2, r.a1)));
  return {real, x, y, z};
}

inline Quaternion conjugate(const Quaternion& q) {
  using detail::checked_neg;
  return {q.a0, checked_neg(q.a1), checked_neg(q.a2), checked_neg(q.a3)};
}

/// N(q) = a0^2 + a1^2 + a2^2 + a3^2.
inline std::int64_t norm(const Quaternion& q) {
  using detail::checked_add;
  using detail::checked_mul;
  std::int64_t n = 0;
  for (auto c : q.components()) n = checked_add(n, checked_mul(c, c));
  return n;
}

/// |a0| + |a1| + |a2| + |a3|, the raw Mannheim-style absolute sum of this representative.
inline std::int64_t abs_sum(const Quaternion& q) {
  using detail::checked_abs;
  using detail::checked_add;
  std::int64_t s = 0;
  for (auto c : q.components()) s = checked_add(s, checked_abs(c));
  return s;
}

/// The eight units +-1, +-i, +-j, +-k.
inline constexpr std::array<Quaternion, 8> units() {
  return {Quaternion{1}, Quaternion{-1}, Quaternion{0, 1}, Quaternion{0, -1},
          Quaternion{0, 0, 1}, Quaternion{0, 0, -1}, Quaternion{0, 0, 0, 1}, Quaternion{0, 0, 0, -1}};
}

inline Quaternion operator+(const Quaternion& q, const Quaternion& r) { return add(q, r); }
inline Quaternion operator-(const Quaternion& q, const Quaternion& r) { return sub(q, r); }
inline Quaternion operator-(const Quaternion& q) { return neg(q); }
inline Quaternion operator*(const Quaternion& q, const Quaternion& r) { return mul(q, r); }

}  // namespace lipschitz
