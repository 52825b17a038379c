// metafix: fixed points of IA-endomorphisms of free metabelian groups.
//
//   metafix analyze FILE [--bound K] [--json] [--no-verify]
//   metafix braid -n N "A[1,2] A[2,3]^-1" [--bound K] [--json]
//   metafix verify FILE WORD [--json]
//   metafix selftest --seed S [--rounds R]
//
// Exit codes: 0 analysis done, 2 input error, 3 internal invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "metafix/braid.hpp"
#include "metafix/endomorphism.hpp"
#include "metafix/error.hpp"
#include "metafix/report.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kInvariant = 3;

struct InputError {
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError{path + ": cannot open file"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

metafix::Endomorphism load(const std::string& path) {
  std::string text = slurp(path);
  try {
    return metafix::Endomorphism::parse(text);
  } catch (const metafix::ParseError& e) {
    throw InputError{path + ": " + e.what()};
  }
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed points of IA-endomorphisms of free metabelian groups"};
  app.require_subcommand(1);
  app.fallthrough();

  int bound = 2;
  bool as_json = false;
  bool no_verify = false;
  app.add_option("--bound", bound, "Probe cosets x^a M' with max |a_i| <= K")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", as_json, "Emit a JSON report");
  app.add_flag("--no-verify", no_verify, "Skip the word-problem re-check of witnesses (testing only)");

  std::string file, word_text;
  std::size_t strands = 0;
  std::uint64_t seed = 0;
  std::size_t rounds = 20;

  auto* analyze = app.add_subcommand("analyze", "Analyze an endomorphism file");
  analyze->add_option("file", file, "Endomorphism file, one `xI -> word` line per generator")->required();

  auto* braid = app.add_subcommand("braid", "Analyze a pure braid given as a word in the A[i,j]");
  braid->add_option("-n,--strands", strands, "Number of strands")->required()->check(CLI::Range(2, 64));
  braid->add_option("word", word_text, "Braid word, e.g. \"A[1,2] A[2,3]^-1\"; empty by default");

  auto* verify = app.add_subcommand("verify", "Check whether a word is fixed in M_n");
  verify->add_option("file", file, "Endomorphism file")->required();
  verify->add_option("word", word_text, "Word in x1..xn")->required();

  auto* selftest = app.add_subcommand("selftest", "Randomized identity checks");
  selftest->add_option("--seed", seed, "Random seed")->required();
  selftest->add_option("--rounds", rounds, "Random instances per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  metafix::AnalyzeOptions opts{bound, !no_verify};
  try {
    if (*analyze) {
      metafix::Report r = metafix::analyze(load(file), opts);
      if (as_json)
        emit(metafix::to_json(r));
      else
        std::cout << metafix::to_text(r);
    } else if (*braid) {
      metafix::BraidWord b = metafix::BraidWord::parse(word_text, strands);
      metafix::Report r = metafix::analyze_braid(b, opts);
      if (as_json)
        emit(metafix::to_json(r));
      else
        std::cout << metafix::to_text(r);
    } else if (*verify) {
      metafix::Endomorphism phi = load(file);
      metafix::VerifyResult v = metafix::verify_word(phi, metafix::Word::parse(word_text, phi.rank()));
      if (as_json)
        emit(metafix::to_json(v));
      else
        std::cout << metafix::to_text(v);
    } else if (*selftest) {
      bool ok = true;
      for (const auto& c : metafix::run_selftest(seed, rounds)) {
        ok = ok && c.failures == 0;
        std::cout << (c.failures ? "FAIL " : "ok   ") << c.name << " (" << c.cases - c.failures << "/" << c.cases
                  << ")\n";
      }
      if (!ok) return kInvariant;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kInputError;
  } catch (const metafix::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  } catch (const metafix::Error& e) {
    // Parse, dimension and precondition errors all come from the input.
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
