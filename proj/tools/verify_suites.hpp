// Worked-value and exhaustive-verification suites behind `lqcode verify`.
#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lipschitz/lipschitz.hpp"

namespace lqcode {

using namespace lipschitz;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tables", "examples", "omec7", "dec13", "mindist"};
  return names;
}

inline constexpr std::size_t kDecSampleSize = 200;
inline constexpr std::uint64_t kDecSampleSeed = 0x5eed13;

inline OmecCode omec7() {
  const Modulus m(Quaternion{2, 1, 1, 1});
  return OmecCode::build(m, m.reduce({1, -1, -1, -1}));
}

inline DecCode dec13() {
  const Modulus m(Quaternion{1, 2, 2, 2});
  return DecCode::build(m, m.reduce({2}));
}

inline SyndromeFn omec_syndrome_fn(const OmecCode& code) {
  return [code](std::span<const Residue> w) { return std::vector<Residue>{code.syndrome(w)}; };
}

inline SyndromeFn dec_syndrome_fn(const DecCode& code) {
  return [code](std::span<const Residue> w) {
    const Syndromes s = code.syndromes(w);
    return std::vector<Residue>{s.s1, s.s3};
  };
}

inline std::vector<Word> dec13_sample(const DecCode& code) {
  return sample_codewords([&](const Word& msg) { return code.encode(msg); }, code.modulus(), code.message_length(),
                          kDecSampleSize, kDecSampleSeed);
}

class CheckLog {
 public:
  explicit CheckLog(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    ++total_;
    passed_ += ok;
    out_ << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out_ << ": " << detail;
    out_ << '\n';
  }

  bool all_passed() const { return passed_ == total_; }
  void summary() const { out_ << passed_ << "/" << total_ << " checks passed\n"; }

 private:
  std::ostream& out_;
  int total_ = 0;
  int passed_ = 0;
};

inline std::string words_text(const Word& w) { return format_word(std::span<const Residue>(w)); }

inline void check_power_table(CheckLog& log, const std::string& name, const Quaternion& pi, const Quaternion& gen,
                              const std::vector<std::string>& expected) {
  const Modulus m(pi);
  const Residue g = m.reduce(gen);
  for (std::size_t s = 0; s < expected.size(); ++s) {
    const std::string got = format_residue(pow(g, s));
    log.check(name + " s=" + std::to_string(s), got == expected[s], "got " + got + ", table " + expected[s]);
  }
}

inline void run_tables(CheckLog& log) {
  check_power_table(log, "powers of 1-i-j-k mod 2+i+j+k", {2, 1, 1, 1}, {1, -1, -1, -1},
                    {"1", "1-i-j-k", "-i-j-k", "-1", "-1+i+j+k", "i+j+k", "1", "1-i-j-k"});
  check_power_table(log, "powers of 2 mod 1+2i+2j+2k", {1, 2, 2, 2}, {2},
                    {"1", "2", "-2+i+j+k", "1-i-j-k", "3", "i+j+k", "-1", "-2", "2-i-j-k", "-1+i+j+k", "-3",
                     "-i-j-k", "1", "2", "-2+i+j+k", "1-i-j-k"});
}

inline void run_examples(CheckLog& log) {
  {
    const Modulus m(Quaternion{1, 1, 1, 0});
    std::vector<Residue> expected{m.zero()};
    for (const auto& u : units()) expected.push_back(m.reduce(u));
    std::sort(expected.begin(), expected.end());
    const auto got = enumerate_residues(m);
    log.check("residues of 1+i+j are 0 and the units", got == expected, std::to_string(got.size()) + " classes");
  }
  {
    const OmecCode code = omec7();
    const Modulus& m = code.modulus();
    const Word r = reduce_word(parse_word("(1-i-j-k,1+i,-1+i+j+k)"), m);
    const Residue s = code.syndrome(r);
    log.check("omec7 word (1-i-j-k,1+i,-1+i+j+k) syndrome", congruent(s.rep(), {1, 1, 1, -1}, m), "S = " + format_residue(s));
    log.check("omec7 word (1-i-j-k,1+i,-1+i+j+k) S = i*alpha", s == mul(Quaternion::i(), code.alpha()));
    const DecodeReport rep = code.decode(r);
    const bool value_ok = rep.kind == DecodeKind::Single && rep.errors.size() == 1 && rep.errors[0].position == 1 &&
                          rep.errors[0].value == m.reduce(Quaternion::i());
    log.check("omec7 word (1-i-j-k,1+i,-1+i+j+k) error i at position 1", value_ok);
    const Word expected = reduce_word(parse_word("(1-i-j-k,1,-1+i+j+k)"), m);
    log.check("omec7 word (1-i-j-k,1+i,-1+i+j+k) corrected word", rep.corrected == expected, words_text(rep.corrected));
  }
  {
    const DecCode code = dec13();
    const Modulus& m = code.modulus();
    const Word r = reduce_word(parse_word("(3,3,1,1,k,0)"), m);
    const Syndromes s = code.syndromes(r);
    log.check("dec13 word (3,3,1,1,k,0) s1 = 1-i-j+2k (mod pi)", congruent(s.s1.rep(), {1, -1, -1, 2}, m), format_residue(s.s1));
    log.check("dec13 word (3,3,1,1,k,0) s3 = -1+i+j+2k (mod pi)", congruent(s.s3.rep(), {-1, 1, 1, 2}, m), format_residue(s.s3));
    const Classification c = code.classify(s.s1, s.s3);
    log.check("dec13 word (3,3,1,1,k,0) not a single error", c.kind == DecodeKind::Double, to_string(c.kind));

    const auto eps = code.epsilon(s.s1, s.s3);
    const Residue minus_2k = m.reduce({0, 0, 0, -2});
    log.check("dec13 word (3,3,1,1,k,0) eps from (s1^3 - s3)/(3 s1) = -2k", eps && *eps == minus_2k,
              "got " + (eps ? format_residue(*eps) : std::string("unavailable")));

    const DecodeReport rep = code.decode(r);
    const std::vector<ErrorEntry> expected_errors{{3, m.one()}, {4, m.reduce(Quaternion::k())}};
    log.check("dec13 word (3,3,1,1,k,0) errors (3, 1), (4, k)", rep.kind == DecodeKind::Double && rep.errors == expected_errors);
    if (rep.errors.size() == 2) {
      const Residue prod = code.root_product(rep.errors[0], rep.errors[1]);
      log.check("dec13 word (3,3,1,1,k,0) root product b^3 * b^4 k = -2k", prod == minus_2k, format_residue(prod));
    }
    const Word expected = reduce_word(parse_word("(3,3,1,0,0,0)"), m);
    log.check("dec13 word (3,3,1,1,k,0) corrected word", rep.corrected == expected, words_text(rep.corrected));
  }
}

inline void run_omec7(CheckLog& log) {
  const OmecCode code = omec7();
  const auto codewords = enumerate_codewords(code);
  const auto report = exhaustive_correction_suite([&](std::span<const Residue> r) { return code.decode(r); },
                                                  omec_syndrome_fn(code), codewords, 1);
  std::ostringstream detail;
  detail << codewords.size() << " codewords, " << report.cases << " cases, decoder " << report.decoder_recovered
         << ", oracle " << report.oracle_recovered << ", agree " << report.agreements;
  log.check("omec7 exhaustive one-error correction", report.all_passed(), detail.str());
  for (const auto& line : report.mismatches) log.check("omec7 case", false, line);
}

inline void run_dec13(CheckLog& log) {
  const DecCode code = dec13();
  const auto codewords = dec13_sample(code);
  const auto report = exhaustive_correction_suite([&](std::span<const Residue> r) { return code.decode(r); },
                                                  dec_syndrome_fn(code), codewords, 2);
  std::ostringstream detail;
  detail << codewords.size() << " codewords, " << report.cases << " cases, decoder " << report.decoder_recovered
         << ", oracle " << report.oracle_recovered << ", agree " << report.agreements;
  log.check("dec13 double-error correction", report.all_passed(), detail.str());
  for (const auto& line : report.mismatches) log.check("dec13 case", false, line);
}

inline void run_mindist(CheckLog& log) {
  {
    const OmecCode code = omec7();
    const auto witness = min_distance_at_most(omec_syndrome_fn(code), code.modulus(), code.length(), 2);
    log.check("mindist omec p=7 d >= 3", !witness, witness ? "witness " + words_text(*witness) : "");
  }
  {
    const DecCode code = dec13();
    const auto witness = min_distance_at_most(dec_syndrome_fn(code), code.modulus(), code.length(), 3);
    log.check("mindist dec p=13 d >= 4", !witness, witness ? "witness " + words_text(*witness) : "");
  }
}

/// Runs one named suite; false when the name is unknown.
inline bool run_suite(const std::string& name, CheckLog& log) {
  if (name == "tables") {
    run_tables(log);
  } else if (name == "examples") {
    run_examples(log);
  } else if (name == "omec7") {
    run_omec7(log);
  } else if (name == "dec13") {
    run_dec13(log);
  } else if (name == "mindist") {
    run_mindist(log);
  } else {
    return false;
  }
  return true;
}

}  // namespace lqcode
