// lqcode: command-line front end for quaternion Mannheim codes.
//
// Exit status: 0 success / correctable, 1 uncorrectable word or failed
// verification, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lipschitz/lipschitz.hpp"
#include "verify_suites.hpp"

namespace {

using namespace lipschitz;

constexpr int kExitOk = 0;
constexpr int kExitUncorrectable = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CodeOptions {
  std::string family;
  std::string pi;
  std::string generator;
  std::size_t t = 1;
};

struct Code {
  std::optional<OmecCode> omec;
  std::optional<DecCode> dec;

  const Modulus& modulus() const { return omec ? omec->modulus() : dec->modulus(); }
};

Code build_code(const CodeOptions& opt) {
  const Modulus m(parse_quaternion(opt.pi));
  const Residue gen = m.reduce(parse_quaternion(opt.generator));
  Code code;
  if (opt.family == "omec") {
    code.omec = OmecCode::build(m, gen);
  } else {
    code.dec = DecCode::build(m, gen, opt.t);
  }
  return code;
}

Word read_word(const std::string& text, const Modulus& m, std::size_t expected, const char* what) {
  const auto qs = parse_word(text);
  if (qs.size() != expected) {
    throw UsageError(std::string("expected ") + what + " = " + std::to_string(expected) + " symbols, got " +
                     std::to_string(qs.size()));
  }
  return reduce_word(qs, m);
}

std::string word_text(const Word& w) { return format_word(std::span<const Residue>(w)); }

int cmd_tables(const std::string& pi, const std::string& gen, std::size_t count, std::ostream& out) {
  const Modulus m(parse_quaternion(pi));
  const Residue g = m.reduce(parse_quaternion(gen));
  Residue acc = m.one();
  for (std::size_t s = 0; s < count; ++s) {
    out << s << '\t' << acc << '\n';
    acc = mul(acc, g);
  }
  return kExitOk;
}

int cmd_encode(const CodeOptions& opt, const std::string& message, std::ostream& out) {
  const Code code = build_code(opt);
  if (code.omec) {
    out << word_text(code.omec->encode(read_word(message, code.modulus(), code.omec->message_length(), "n-1"))) << '\n';
  } else {
    out << word_text(code.dec->encode(read_word(message, code.modulus(), code.dec->message_length(), "n-2"))) << '\n';
  }
  return kExitOk;
}

int cmd_decode(const CodeOptions& opt, const std::string& received, std::ostream& out) {
  const Code code = build_code(opt);
  const std::size_t n = code.omec ? code.omec->length() : code.dec->length();
  const Word r = read_word(received, code.modulus(), n, "n");
  const DecodeReport rep = code.omec ? code.omec->decode(r) : code.dec->decode(r);
  out << to_string(rep.kind);
  for (const auto& e : rep.errors) out << "; position " << e.position << " value " << e.value;
  if (rep.kind == DecodeKind::Single || rep.kind == DecodeKind::Double) out << "; corrected " << word_text(rep.corrected);
  out << '\n';
  return rep.kind == DecodeKind::Uncorrectable ? kExitUncorrectable : kExitOk;
}

int cmd_verify(const std::string& suite, std::ostream& out) {
  lqcode::CheckLog log(out);
  if (suite == "all") {
    for (const auto& name : lqcode::suite_names()) lqcode::run_suite(name, log);
  } else if (!lqcode::run_suite(suite, log)) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  log.summary();
  return log.all_passed() ? kExitOk : kExitUncorrectable;
}

void add_code_options(CLI::App* cmd, CodeOptions& opt) {
  cmd->add_option("--family", opt.family, "code family")->required()->check(CLI::IsMember({"omec", "dec"}));
  cmd->add_option("--pi", opt.pi, "quaternion prime modulus, e.g. 2+i+j+k")->required();
  cmd->add_option("--alpha,--beta,--gen", opt.generator, "generating element")->required();
  cmd->add_option("--t", opt.t, "designed number of correctable errors (dec only)")->default_val(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Error-correcting codes over Lipschitz integers modulo a quaternion prime"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "also write the report to this file");

  std::string pi, gen, word, suite;
  std::size_t count = 8;
  CodeOptions code_opt;

  auto* tables = app.add_subcommand("tables", "print powers gen^s mod pi");
  tables->add_option("--pi", pi, "quaternion prime modulus")->required();
  tables->add_option("--gen,--alpha,--beta", gen, "element to raise")->required();
  tables->add_option("--count", count, "number of rows")->default_val(8);

  auto* encode = app.add_subcommand("encode", "encode a message word");
  add_code_options(encode, code_opt);
  encode->add_option("message", word, "message word, e.g. (1,-1+i+j+k)")->required();

  auto* decode = app.add_subcommand("decode", "decode a received word");
  add_code_options(decode, code_opt);
  decode->add_option("received", word, "received word, e.g. (3,3,1,1,k,0)")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite: tables, examples, omec7, dec13, mindist, all");
  verify->add_option("suite", suite, "suite name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostringstream out;
  int status = kExitOk;
  try {
    if (*tables) {
      status = cmd_tables(pi, gen, count, out);
    } else if (*encode) {
      status = cmd_encode(code_opt, word, out);
    } else if (*decode) {
      status = cmd_decode(code_opt, word, out);
    } else if (*verify) {
      status = cmd_verify(suite, out);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (offending token '" << e.token() << "')\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::cout << out.str();
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    file << out.str();
    if (!file) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
  }
  return status;
}
