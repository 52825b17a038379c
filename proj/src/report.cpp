#include "metafix/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "metafix/error.hpp"
#include "metafix/fox.hpp"
#include "metafix/random.hpp"

namespace metafix {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kListed = 12;  // cosets listed in text output

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json matrix_json(const LaMatrix& m) { return m.to_strings(); }

json polys_json(const PolyVector& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

Report core(const Endomorphism& phi, const AnalyzeOptions& opts) {
  Report r;
  r.phi = phi;
  const std::size_t n = phi.rank();
  r.ia = phi.is_ia();
  r.jacobian = jacobian_abel(phi);
  LaMatrix jmi = r.jacobian - LaMatrix::identity(n, n);
  r.det_JmI = det(jmi);
  r.rank_JmI = rank(jmi);
  if (r.ia) r.fix = search_fixed(phi, {opts.bound, opts.verify});
  return r;
}

// ----- reading back -------------------------------------------------------

[[noreturn]] void bad(const std::string& what) { throw ParseError("report: " + what, 0); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception&) {
    bad(std::string("wrong type for '") + key + "'");
  }
}

LaMatrix matrix_from(const json& j, std::size_t nvars) {
  if (!j.is_array()) bad("matrix is not an array");
  std::vector<PolyVector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) bad("matrix row is not an array");
    PolyVector r;
    for (const auto& e : row) r.push_back(LaurentPoly::parse(e.get<std::string>(), nvars));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return LaMatrix(0, 0, nvars);
  return LaMatrix::from_rows(std::move(rows), nvars);
}

std::optional<Word> word_or_null(const json& j, std::size_t n) {
  if (j.is_null()) return std::nullopt;
  return Word::parse(j.get<std::string>(), n);
}

void require_fixed(const Endomorphism& phi, const Word& g, const std::string& where) {
  if (!verify_fixed(phi, g)) throw InvariantViolation("report: witness " + where + " is not fixed: " + g.to_string());
}

std::string a_text(const std::vector<int>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

void matrix_text(std::ostringstream& os, const LaMatrix& m) {
  for (const auto& row : m.to_strings()) {
    os << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : " ") << row[j];
    os << " ]\n";
  }
}

}  // namespace

Report analyze(const Endomorphism& phi, const AnalyzeOptions& opts) {
  auto t0 = Clock::now();
  Report r = core(phi, opts);
  r.timing_ms = ms_since(t0);
  return r;
}

Report analyze_braid(const BraidWord& b, const AnalyzeOptions& opts) {
  auto t0 = Clock::now();
  Report r = core(braid_to_automorphism(b), opts);
  const std::size_t n = b.strands();
  BraidSummary s{b, r.jacobian, gassner_reduce(r.jacobian), LaurentPoly(n)};
  s.det_GmI = det(s.reduced - LaMatrix::identity(n - 1, n));
  s.alexander_vanishes = s.det_GmI.is_zero();
  s.mprime_witness = r.fix->mprime.has_value();
  bool low = r.rank_JmI + 2 <= n;
  s.consistent = s.alexander_vanishes == low && low == s.mprime_witness;
  r.braid = std::move(s);
  r.timing_ms = ms_since(t0);
  return r;
}

json to_json(const Report& r) {
  const std::size_t n = r.phi.rank();
  json j;
  json input = {{"kind", r.braid ? "braid" : "endomorphism"}, {"rank", n}};
  json imgs = json::array();
  for (const Word& w : r.phi.images()) imgs.push_back(w.to_string());
  input["images"] = imgs;
  if (r.braid) {
    input["strands"] = r.braid->word.strands();
    input["word"] = r.braid->word.to_string();
  }
  j["input"] = input;
  j["ia"] = r.ia;
  j["jacobian"] = matrix_json(r.jacobian);
  j["det_JmI"] = r.det_JmI.to_string();
  j["rank_JmI"] = r.rank_JmI;
  if (r.fix) {
    const FixReport& f = *r.fix;
    json fix = {{"bound", f.bound}, {"rank_class", to_string(f.rank_class)}, {"all_verified", f.all_verified()}};
    if (f.mprime)
      fix["mprime"] = {{"kernel", polys_json(f.mprime->kernel)},
                       {"witness", f.mprime->witness.to_string()},
                       {"verified", f.mprime_verified},
                       {"normal", f.mprime_normal}};
    else
      fix["mprime"] = nullptr;
    json cosets = json::array();
    for (const CosetResult& c : f.cosets) {
      cosets.push_back({{"a", c.a},
                        {"status", to_string(c.status)},
                        {"witness", c.witness ? json(c.witness->to_string()) : json(nullptr)},
                        {"verified", c.verified}});
    }
    fix["cosets"] = cosets;
    j["fix"] = fix;
  } else {
    j["fix"] = nullptr;
  }
  if (r.braid) {
    const BraidSummary& b = *r.braid;
    j["braid"] = {{"strands", b.word.strands()},
                  {"word", b.word.to_string()},
                  {"gassner_unreduced", matrix_json(b.unreduced)},
                  {"gassner_reduced", matrix_json(b.reduced)},
                  {"det_GmI", b.det_GmI.to_string()},
                  {"alexander_vanishes", b.alexander_vanishes},
                  {"mprime_witness", b.mprime_witness},
                  {"consistent", b.consistent}};
  } else {
    j["braid"] = nullptr;
  }
  j["timing_ms"] = r.timing_ms;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  const json& input = field(j, "input");
  const std::size_t n = get<std::size_t>(input, "rank");
  std::vector<Word> imgs;
  for (const auto& s : field(input, "images")) imgs.push_back(Word::parse(s.get<std::string>(), n));
  if (imgs.size() != n) bad("image count does not match rank");
  r.phi = Endomorphism(std::move(imgs));
  r.ia = get<bool>(j, "ia");
  r.jacobian = matrix_from(field(j, "jacobian"), n);
  r.det_JmI = LaurentPoly::parse(get<std::string>(j, "det_JmI"), n);
  r.rank_JmI = get<std::size_t>(j, "rank_JmI");
  r.timing_ms = get<double>(j, "timing_ms");

  const json& fj = field(j, "fix");
  if (!fj.is_null()) {
    FixReport f;
    f.ia = r.ia;
    f.rank_JmI = r.rank_JmI;
    f.bound = get<int>(fj, "bound");
    std::string cls = get<std::string>(fj, "rank_class");
    if (cls == to_string(RankClass::n_minus_1))
      f.rank_class = RankClass::n_minus_1;
    else if (cls == to_string(RankClass::at_most_n_minus_2))
      f.rank_class = RankClass::at_most_n_minus_2;
    else
      bad("unknown rank_class '" + cls + "'");
    const json& mj = field(fj, "mprime");
    if (!mj.is_null()) {
      MprimeWitness w;
      for (const auto& p : field(mj, "kernel")) w.kernel.push_back(LaurentPoly::parse(p.get<std::string>(), n));
      w.witness = Word::parse(get<std::string>(mj, "witness"), n);
      require_fixed(r.phi, w.witness, "in M'");
      f.mprime = std::move(w);
      f.mprime_verified = get<bool>(mj, "verified");
      f.mprime_normal = get<bool>(mj, "normal");
    }
    for (const auto& cj : field(fj, "cosets")) {
      CosetResult c;
      c.a = get<std::vector<int>>(cj, "a");
      std::string st = get<std::string>(cj, "status");
      if (st == "found")
        c.status = CosetStatus::found;
      else if (st == "none")
        c.status = CosetStatus::none;
      else if (st == "undecided")
        c.status = CosetStatus::undecided;
      else
        bad("unknown coset status '" + st + "'");
      c.witness = word_or_null(field(cj, "witness"), n);
      if (c.witness) require_fixed(r.phi, *c.witness, "at coset " + a_text(c.a));
      c.verified = get<bool>(cj, "verified");
      f.cosets.push_back(std::move(c));
    }
    r.fix = std::move(f);
  }

  const json& bj = field(j, "braid");
  if (!bj.is_null()) {
    std::size_t strands = get<std::size_t>(bj, "strands");
    BraidSummary b{BraidWord::parse(get<std::string>(bj, "word"), strands),
                   matrix_from(field(bj, "gassner_unreduced"), n), matrix_from(field(bj, "gassner_reduced"), n),
                   LaurentPoly::parse(get<std::string>(bj, "det_GmI"), n)};
    b.alexander_vanishes = get<bool>(bj, "alexander_vanishes");
    b.mprime_witness = get<bool>(bj, "mprime_witness");
    b.consistent = get<bool>(bj, "consistent");
    r.braid = std::move(b);
  }
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  const std::size_t n = r.phi.rank();
  if (r.braid) os << "braid on " << n << " strands: " << (r.braid->word.length() ? r.braid->word.to_string() : "(empty)") << "\n";
  os << "endomorphism of rank " << n << ":\n";
  for (std::size_t i = 0; i < n; ++i) os << "  x" << i + 1 << " -> " << r.phi.image(i).to_string() << "\n";
  os << "IA: " << (r.ia ? "yes" : "no") << "\n";
  os << "J^a:\n";
  matrix_text(os, r.jacobian);
  os << "det(J^a - I) = " << r.det_JmI.to_string() << "\n";
  os << "rank(J^a - I) = " << r.rank_JmI;
  if (r.fix) os << " (class " << to_string(r.fix->rank_class) << ")";
  os << "\n";
  if (!r.fix) {
    os << "not IA: fixed-point detectors skipped\n";
  } else {
    const FixReport& f = *r.fix;
    if (f.mprime) {
      os << "fixed point in M': " << f.mprime->witness.to_string();
      if (f.mprime_verified) os << " (verified" << (f.mprime_normal ? ", conjugates fixed)" : ")");
      os << "\n";
    } else {
      os << "fixed point in M': none\n";
    }
    std::size_t found = 0, none = 0, undecided = 0;
    for (const auto& c : f.cosets)
      (c.status == CosetStatus::found ? found : c.status == CosetStatus::none ? none : undecided)++;
    os << "cosets with max|a_i| <= " << f.bound << ": " << f.cosets.size() << " probed, " << found << " found, "
       << none << " none, " << undecided << " undecided\n";
    // Smallest |a|_1 first.
    std::vector<const CosetResult*> listed;
    for (const auto& c : f.cosets)
      if (c.status != CosetStatus::none) listed.push_back(&c);
    auto l1 = [](const CosetResult* c) {
      int s = 0;
      for (int e : c->a) s += std::abs(e);
      return s;
    };
    std::stable_sort(listed.begin(), listed.end(),
                     [&](const CosetResult* x, const CosetResult* y) { return l1(x) < l1(y); });
    std::size_t shown = 0;
    for (const CosetResult* cp : listed) {
      const CosetResult& c = *cp;
      if (shown++ == kListed) {
        os << "  ... " << listed.size() - kListed << " more (see --json)\n";
        break;
      }
      os << "  " << a_text(c.a) << " " << to_string(c.status);
      if (c.witness) os << ": " << c.witness->to_string() << (c.verified ? " (verified)" : "");
      os << "\n";
    }
  }
  if (r.braid) {
    const BraidSummary& b = *r.braid;
    os << "reduced Gassner matrix:\n";
    matrix_text(os, b.reduced);
    os << "det(G - I) = " << b.det_GmI.to_string() << "\n";
    os << "Alexander polynomial vanishes: " << (b.alexander_vanishes ? "yes" : "no") << "\n";
    os << "bridge: " << (b.consistent ? "consistent" : "INCONSISTENT") << " (vanishes=" << b.alexander_vanishes
       << ", rank<=n-2=" << (r.rank_JmI + 2 <= n) << ", M' witness=" << b.mprime_witness << ")\n";
  }
  os << std::fixed << std::setprecision(2) << "time: " << r.timing_ms << " ms\n";
  return os.str();
}

VerifyResult verify_word(const Endomorphism& phi, const Word& g) {
  if (g.rank() != phi.rank()) throw DimensionError("verify: word rank differs from the endomorphism");
  Word d = phi.apply(g) * g.inverse();
  return {is_trivial_in_M(d), is_trivial_in_M(g), magnus_of_word(d)};
}

json to_json(const VerifyResult& v) {
  return {{"fixed", v.fixed},
          {"trivial", v.trivial},
          {"displacement", {{"abelian", v.displacement.abelian()}, {"coords", polys_json(v.displacement.coords())}}}};
}

std::string to_text(const VerifyResult& v) {
  std::ostringstream os;
  os << "fixed: " << (v.fixed ? "true" : "false") << (v.trivial ? " (trivial element)" : "") << "\n";
  os << "phi(g) g^-1 = (" << a_text(v.displacement.abelian()) << ", [";
  const auto& c = v.displacement.coords();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i].to_string();
  os << "])\n";
  return os.str();
}

std::vector<SelftestCheck> run_selftest(std::uint64_t seed, std::size_t rounds) {
  gen::Rng rng(seed);
  SelftestCheck det_check{"det(J^a - I) = 0 for IA maps"}, product{"J^a(phi psi) = J^a(psi) J^a(phi)"},
      hom{"Magnus coordinates are multiplicative"}, witness{"M' witnesses are fixed and nontrivial"},
      gassner{"Gassner matrices are multiplicative"};
  auto record = [](SelftestCheck& c, bool ok) {
    ++c.cases;
    if (!ok) ++c.failures;
  };
  for (std::size_t t = 0; t < rounds; ++t) {
    std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 4));
    Endomorphism phi = gen::random_ia(rng, n), psi = gen::random_ia(rng, n);
    record(det_check, det(jacobian_abel(phi) - LaMatrix::identity(n, n)).is_zero());
    record(product, jacobian_abel(compose(phi, psi)) == jacobian_abel(psi) * jacobian_abel(phi));
    Word u = gen::random_word(rng, n, 20), v = gen::random_word(rng, n, 20);
    record(hom, magnus_of_word(u * v) == magnus_of_word(u) * magnus_of_word(v));
    if (n >= 3) {
      Endomorphism low = gen::random_low_rank_ia(rng, n);
      auto w = find_fixed_in_Mprime(low, false);
      record(witness, w && verify_fixed(low, w->witness) && !is_trivial_in_M(w->witness));
    }
    BraidWord b = gen::random_braid(rng, n, 3), c = gen::random_braid(rng, n, 3);
    record(gassner, gassner_unreduced(b * c) == gassner_unreduced(b) * gassner_unreduced(c));
  }
  return {det_check, product, hom, witness, gassner};
}

}  // namespace metafix
