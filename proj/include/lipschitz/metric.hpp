// Quaternion Mannheim (Lipschitz) weight: the least |a0|+|a1|+|a2|+|a3| over
// all representatives of a class, and the distance it induces.
#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

#include "lipschitz/quaternion.hpp"
#include "lipschitz/residue.hpp"

namespace lipschitz {

struct WeightedRep {
  Quaternion rep;
  std::int64_t weight = 0;

  friend bool operator==(const WeightedRep&, const WeightedRep&) = default;
};

/// Half-width B of the beta box searched for a class whose canonical
/// representative has absolute sum w0: B = ceil((w0 + p) / p) + 1.
inline std::int64_t weight_search_bound(const Residue& x) {
  const std::int64_t p = x.modulus().p();
  const std::int64_t w0 = abs_sum(x.rep());
  return (w0 + p + p - 1) / p + 1;
}

/// Exhaustive search of rep - beta*pi over beta in [-(B+widen), B+widen]^4.
/// Ties go to the lexicographically least representative.
inline WeightedRep search_min_weight_rep(const Residue& x, std::int64_t widen = 0) {
  const Modulus& m = x.modulus();
  const std::int64_t b = weight_search_bound(x) + widen;
  WeightedRep best{x.rep(), abs_sum(x.rep())};
  for (std::int64_t b0 = -b; b0 <= b; ++b0)
    for (std::int64_t b1 = -b; b1 <= b; ++b1)
      for (std::int64_t b2 = -b; b2 <= b; ++b2)
        for (std::int64_t b3 = -b; b3 <= b; ++b3) {
          const Quaternion cand = sub(x.rep(), mul(Quaternion{b0, b1, b2, b3}, m.pi()));
          const std::int64_t w = abs_sum(cand);
          if (w < best.weight || (w == best.weight && cand < best.rep)) best = {cand, w};
        }
  return best;
}

namespace detail {

inline const std::vector<Quaternion>& min_rep_table(const Modulus& m) {
  const auto& reps = m.residue_reps();
  const auto& s = m.state();
  std::call_once(s.min_reps_once, [&] {
    std::vector<Quaternion> table;
    table.reserve(reps.size());
    for (const auto& q : reps) table.push_back(search_min_weight_rep(m.reduce(q)).rep);
    s.min_reps = std::move(table);
  });
  return s.min_reps;
}

inline std::size_t residue_index(const Residue& x) {
  const auto& reps = x.modulus().residue_reps();
  auto it = std::lower_bound(reps.begin(), reps.end(), x.rep());
  if (it == reps.end() || *it != x.rep()) throw std::logic_error("residue is not in canonical form");
  return static_cast<std::size_t>(it - reps.begin());
}

}  // namespace detail

/// Minimal-weight representative of the class of x. Results are memoized per
/// modulus; the first call enumerates the whole residue system.
inline WeightedRep min_weight_rep(const Residue& x) {
  const auto& table = detail::min_rep_table(x.modulus());
  const Quaternion& rep = table[detail::residue_index(x)];
  return {rep, abs_sum(rep)};
}

inline std::int64_t qm_weight(const Residue& x) { return min_weight_rep(x).weight; }

inline std::int64_t qm_distance(const Residue& x, const Residue& y) { return qm_weight(sub(x, y)); }

inline std::int64_t vector_qm_weight(std::span<const Residue> w) {
  std::int64_t total = 0;
  for (const auto& x : w) total += qm_weight(x);
  return total;
}

/// All classes of weight exactly w, sorted by canonical representative.
inline std::vector<Residue> residues_of_weight(const Modulus& m, std::int64_t w) {
  std::vector<Residue> out;
  for (const auto& q : m.residue_reps()) {
    Residue x = m.reduce(q);
    if (qm_weight(x) == w) out.push_back(x);
  }
  return out;
}

}  // namespace lipschitz
