#pragma once

// Analysis reports for the command-line tool and the Python module.
//
// JSON layout (keys sorted, polynomials and words in their textual syntax):
//   input     {kind, rank, images[, strands, word]}
//   ia        bool
//   jacobian  rows of polynomials
//   det_JmI, rank_JmI
//   fix       null for non-IA input, else {bound, rank_class, all_verified,
//             mprime: null | {kernel, witness, verified, normal},
//             cosets: [{a, status, witness, verified}]}
//   braid     null, or {strands, word, gassner_unreduced, gassner_reduced,
//             det_GmI, alexander_vanishes, mprime_witness, consistent}
//   timing_ms wall time of the analysis; the only nondeterministic field

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "metafix/braid.hpp"
#include "metafix/endomorphism.hpp"
#include "metafix/fixpoint.hpp"
#include "metafix/lamatrix.hpp"
#include "metafix/laurent.hpp"
#include "metafix/metabelian.hpp"

namespace metafix {

struct BraidSummary {
  BraidWord word;
  LaMatrix unreduced;
  LaMatrix reduced;
  LaurentPoly det_GmI;
  bool alexander_vanishes = false;
  bool mprime_witness = false;
  /// alexander_vanishes == (rank(J - I) <= n - 2) == mprime_witness
  bool consistent = false;
};

struct Report {
  Endomorphism phi;
  bool ia = false;
  LaMatrix jacobian;
  LaurentPoly det_JmI;
  std::size_t rank_JmI = 0;
  std::optional<FixReport> fix;  // detectors are skipped for non-IA input
  std::optional<BraidSummary> braid;
  double timing_ms = 0;
};

struct AnalyzeOptions {
  int bound = 2;
  bool verify = true;
};

Report analyze(const Endomorphism& phi, const AnalyzeOptions& opts = {});
Report analyze_braid(const BraidWord& b, const AnalyzeOptions& opts = {});

nlohmann::json to_json(const Report& r);
/// Inverse of to_json. Every witness is re-verified; a witness that is not
/// fixed raises InvariantViolation, malformed documents raise ParseError.
Report report_from_json(const nlohmann::json& j);
std::string to_text(const Report& r);

struct VerifyResult {
  bool fixed = false;
  bool trivial = false;  // g is the identity of M_n
  MagnusElement displacement = MagnusElement::identity(0);  // phi(g) g^-1
};

VerifyResult verify_word(const Endomorphism& phi, const Word& g);
nlohmann::json to_json(const VerifyResult& v);
std::string to_text(const VerifyResult& v);

struct SelftestCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

/// Randomized identities (det(J - I) = 0, product rule, Magnus
/// homomorphism, witness verification, Gassner homomorphism).
std::vector<SelftestCheck> run_selftest(std::uint64_t seed, std::size_t rounds = 20);

}  // namespace metafix
