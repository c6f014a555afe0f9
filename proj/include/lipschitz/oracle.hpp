// Brute-force ground truth for the algebraic decoders. Everything here works
// from a syndrome function alone and enumerates error patterns in a fixed
// order: total weight, then positions (lexicographic), then values
// (lexicographic by canonical representative).
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lipschitz/decode_report.hpp"
#include "lipschitz/metric.hpp"
#include "lipschitz/omec_code.hpp"
#include "lipschitz/residue.hpp"
#include "lipschitz/text.hpp"

namespace lipschitz {

/// Maps a word to its syndrome vector (one Residue per parity row).
using SyndromeFn = std::function<std::vector<Residue>(std::span<const Residue>)>;

struct ErrorPattern {
  std::vector<ErrorEntry> entries;  // sorted by position, positions distinct
  std::int64_t total_weight = 0;

  Word apply_to(const Modulus& m, std::size_t n) const {
    Word w = zero_word(m, n);
    for (const auto& e : entries) w[e.position] = e.value;
    return w;
  }

  friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;
};

namespace detail {

inline bool pattern_less(const ErrorPattern& a, const ErrorPattern& b) {
  if (a.total_weight != b.total_weight) return a.total_weight < b.total_weight;
  const std::size_t k = std::min(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (a.entries[i].position != b.entries[i].position) return a.entries[i].position < b.entries[i].position;
  }
  if (a.entries.size() != b.entries.size()) return a.entries.size() < b.entries.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (!(a.entries[i].value == b.entries[i].value)) return a.entries[i].value < b.entries[i].value;
  }
  return false;
}

inline void extend_patterns(const std::map<std::int64_t, std::vector<Residue>>& alphabet, std::size_t n,
                            std::int64_t remaining, std::size_t next_pos, ErrorPattern& current,
                            std::vector<ErrorPattern>& out, std::int64_t exact_weight) {
  if (current.total_weight == exact_weight) {
    if (!current.entries.empty()) out.push_back(current);
    return;
  }
  for (std::size_t pos = next_pos; pos < n; ++pos) {
    for (const auto& [w, values] : alphabet) {
      if (w > remaining) break;
      for (const auto& v : values) {
        current.entries.push_back({pos, v});
        current.total_weight += w;
        extend_patterns(alphabet, n, remaining - w, pos + 1, current, out, exact_weight);
        current.total_weight -= w;
        current.entries.pop_back();
      }
    }
  }
}

}  // namespace detail

/// Per-symbol error alphabet: classes grouped by their qm weight, for weights
/// 1..max_symbol_weight. Weight one is exactly the eight units.
inline std::map<std::int64_t, std::vector<Residue>> error_alphabet(const Modulus& m, std::int64_t max_symbol_weight) {
  std::map<std::int64_t, std::vector<Residue>> alphabet;
  for (std::int64_t w = 1; w <= max_symbol_weight; ++w) {
    auto values = residues_of_weight(m, w);
    if (!values.empty()) alphabet.emplace(w, std::move(values));
  }
  return alphabet;
}

/// All nonzero patterns of total weight exactly w over length n, in
/// enumeration order. Symbol values come from classes of weight at most
/// max_symbol_weight.
inline std::vector<ErrorPattern> patterns_of_weight(const Modulus& m, std::size_t n, std::int64_t w,
                                                    std::int64_t max_symbol_weight) {
  std::vector<ErrorPattern> out;
  if (w <= 0) return out;
  const auto alphabet = error_alphabet(m, std::min(w, max_symbol_weight));
  ErrorPattern current;
  detail::extend_patterns(alphabet, n, w, 0, current, out, w);
  std::sort(out.begin(), out.end(), detail::pattern_less);
  return out;
}

/// Unit-valued patterns with total weight <= w_max, empty pattern first.
inline std::vector<ErrorPattern> unit_patterns_up_to(const Modulus& m, std::size_t n, std::int64_t w_max) {
  std::vector<ErrorPattern> out{ErrorPattern{}};
  for (std::int64_t w = 1; w <= w_max; ++w) {
    auto layer = patterns_of_weight(m, n, w, 1);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// First unit-valued error pattern (weight <= w_max, enumeration order) whose
/// syndromes equal those of r. The received word only enters via syndrome_fn.
inline std::optional<ErrorPattern> brute_decode(const SyndromeFn& syndrome_fn, std::span<const Residue> r,
                                                std::int64_t w_max) {
  if (r.empty()) return std::nullopt;
  const Modulus& m = r.front().modulus();
  const auto target = syndrome_fn(r);
  for (const auto& pattern : unit_patterns_up_to(m, r.size(), w_max)) {
    const Word e = pattern.apply_to(m, r.size());
    if (syndrome_fn(e) == target) return pattern;
  }
  return std::nullopt;
}

/// brute_decode with the pattern syndromes computed once up front; answers
/// are identical to brute_decode for the same (syndrome_fn, n, w_max).
class BruteForceDecoder {
 public:
  BruteForceDecoder(SyndromeFn syndrome_fn, const Modulus& m, std::size_t n, std::int64_t w_max)
      : syndrome_fn_(std::move(syndrome_fn)), modulus_(m), n_(n), patterns_(unit_patterns_up_to(m, n, w_max)) {
    table_.reserve(patterns_.size());
    for (const auto& p : patterns_) table_.push_back(syndrome_fn_(p.apply_to(modulus_, n_)));
  }

  std::optional<ErrorPattern> decode(std::span<const Residue> r) const {
    const auto target = syndrome_fn_(r);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] == target) return patterns_[i];
    }
    return std::nullopt;
  }

  const std::vector<ErrorPattern>& patterns() const { return patterns_; }

 private:
  SyndromeFn syndrome_fn_;
  Modulus modulus_;
  std::size_t n_;
  std::vector<ErrorPattern> patterns_;
  std::vector<std::vector<Residue>> table_;
};

/// A nonzero word of total weight <= w whose syndromes all vanish, if any.
/// Symbol values range over every class of weight <= w.
inline std::optional<Word> min_distance_at_most(const SyndromeFn& syndrome_fn, const Modulus& m, std::size_t n,
                                                std::int64_t w) {
  for (std::int64_t total = 1; total <= w; ++total) {
    for (const auto& pattern : patterns_of_weight(m, n, total, total)) {
      const Word word = pattern.apply_to(m, n);
      const auto s = syndrome_fn(word);
      if (std::all_of(s.begin(), s.end(), [](const Residue& x) { return x.is_zero(); })) return word;
    }
  }
  return std::nullopt;
}

inline constexpr std::size_t kMaxEnumeratedMessages = 10000;

/// Every codeword, one per message, in lexicographic message order.
inline std::vector<Word> enumerate_codewords(const OmecCode& code) {
  const auto& reps = code.modulus().residue_reps();
  const std::size_t k = code.message_length();
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > kMaxEnumeratedMessages / reps.size()) {
      throw std::length_error("message space too large to enumerate (limit " +
                              std::to_string(kMaxEnumeratedMessages) + ")");
    }
    count *= reps.size();
  }
  std::vector<Word> out;
  out.reserve(count);
  std::vector<std::size_t> digits(k, 0);
  for (std::size_t c = 0; c < count; ++c) {
    Word msg;
    for (auto d : digits) msg.push_back(code.modulus().reduce(reps[d]));
    out.push_back(code.encode(msg));
    for (std::size_t i = k; i-- > 0;) {
      if (++digits[i] < reps.size()) break;
      digits[i] = 0;
    }
  }
  return out;
}

struct CorrectionReport {
  std::size_t cases = 0;
  std::size_t decoder_recovered = 0;
  std::size_t oracle_recovered = 0;
  std::size_t agreements = 0;
  std::vector<std::string> mismatches;  // capped transcript

  bool all_passed() const {
    return decoder_recovered == cases && oracle_recovered == cases && agreements == cases;
  }
};

using DecoderFn = std::function<DecodeReport(std::span<const Residue>)>;

/// Runs the algebraic decoder and the brute-force oracle on every
/// (codeword, unit-valued error pattern of weight <= error_weight) pair.
inline CorrectionReport exhaustive_correction_suite(const DecoderFn& decoder, const SyndromeFn& syndrome_fn,
                                                    std::span<const Word> codewords, std::int64_t error_weight,
                                                    std::size_t max_transcript = 20) {
  CorrectionReport report;
  if (codewords.empty()) return report;
  const Modulus& m = codewords.front().front().modulus();
  const std::size_t n = codewords.front().size();
  const BruteForceDecoder oracle(syndrome_fn, m, n, error_weight);

  for (const auto& c : codewords) {
    for (const auto& pattern : oracle.patterns()) {
      ++report.cases;
      const Word received = add(c, pattern.apply_to(m, n));
      const DecodeReport got = decoder(received);
      const auto truth = oracle.decode(received);

      const bool decoder_ok = got.kind != DecodeKind::Uncorrectable && got.corrected == c && got.errors == pattern.entries;
      const bool oracle_ok = truth && *truth == pattern;
      const bool agree = truth && got.kind != DecodeKind::Uncorrectable && got.errors == truth->entries;
      report.decoder_recovered += decoder_ok;
      report.oracle_recovered += oracle_ok;
      report.agreements += agree;
      if ((!decoder_ok || !oracle_ok || !agree) && report.mismatches.size() < max_transcript) {
        std::ostringstream msg;
        msg << "codeword " << format_word(std::span<const Residue>(c)) << " errors {";
        for (const auto& e : pattern.entries) msg << " (" << e.position << ", " << e.value << ")";
        msg << " }: decoder " << (decoder_ok ? "ok" : "wrong") << " (" << to_string(got.kind) << "), oracle "
            << (oracle_ok ? "ok" : "wrong");
        report.mismatches.push_back(msg.str());
      }
    }
  }
  return report;
}

/// count codewords encoded from pseudo-random messages of length k. The
/// zero message comes first. Uses raw mt19937_64 output so the sample is
/// identical on every platform.
template <typename Encoder>
std::vector<Word> sample_codewords(const Encoder& encode, const Modulus& m, std::size_t k, std::size_t count,
                                   std::uint64_t seed) {
  const auto& reps = m.residue_reps();
  std::mt19937_64 rng(seed);
  std::vector<Word> out;
  out.reserve(count);
  if (count > 0) out.push_back(encode(zero_word(m, k)));
  while (out.size() < count) {
    Word msg;
    for (std::size_t i = 0; i < k; ++i) msg.push_back(m.reduce(reps[rng() % reps.size()]));
    out.push_back(encode(msg));
  }
  return out;
}

}  // namespace lipschitz
