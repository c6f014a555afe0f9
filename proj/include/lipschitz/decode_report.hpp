#pragma once

#include <cstddef>
#include <vector>

#include "lipschitz/residue.hpp"

namespace lipschitz {

enum class DecodeKind { NoError, Single, Double, Uncorrectable };

inline const char* to_string(DecodeKind k) {
  switch (k) {
    case DecodeKind::NoError: return "no error";
    case DecodeKind::Single: return "single";
    case DecodeKind::Double: return "double";
    case DecodeKind::Uncorrectable: return "uncorrectable";
  }
  return "?";
}

/// One corrupted symbol: 0-indexed position and the additive error value.
struct ErrorEntry {
  std::size_t position = 0;
  Residue value;

  friend bool operator==(const ErrorEntry&, const ErrorEntry&) = default;
};

struct DecodeReport {
  DecodeKind kind = DecodeKind::Uncorrectable;
  Word corrected;                  // the received word when uncorrectable
  std::vector<ErrorEntry> errors;  // sorted by position
};

}  // namespace lipschitz
