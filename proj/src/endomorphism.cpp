#include "metafix/endomorphism.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "metafix/error.hpp"

namespace metafix {

Endomorphism::Endomorphism(std::vector<Word> images) : images_(std::move(images)) {
  for (const Word& w : images_)
    if (w.rank() != images_.size())
      throw DimensionError("image word rank " + std::to_string(w.rank()) +
                           " does not match endomorphism rank " + std::to_string(images_.size()));
}

Endomorphism Endomorphism::identity(std::size_t rank) {
  std::vector<Word> imgs;
  for (std::size_t i = 0; i < rank; ++i) imgs.push_back(Word::generator(rank, i));
  return Endomorphism(std::move(imgs));
}

Word Endomorphism::apply(const Word& w) const {
  if (w.rank() != rank()) throw DimensionError("word rank does not match endomorphism rank");
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const auto& img = images_[l.gen].letters();
    if (l.sign > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(it->inverse());
    }
  }
  return Word::reduce(rank(), out);
}

bool Endomorphism::is_ia() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    std::vector<int> a = images_[i].exponent_sums();
    for (std::size_t k = 0; k < rank(); ++k)
      if (a[k] != (k == i ? 1 : 0)) return false;
  }
  return true;
}

std::string Endomorphism::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rank(); ++i)
    out += "x" + std::to_string(i + 1) + " -> " + images_[i].to_string() + "\n";
  return out;
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  if (phi.rank() != psi.rank()) throw DimensionError("compose: rank mismatch");
  std::vector<Word> imgs;
  imgs.reserve(psi.rank());
  for (const Word& y : psi.images()) imgs.push_back(phi.apply(y));
  return Endomorphism(std::move(imgs));
}

namespace {

struct MappingLine {
  std::size_t line;
  std::size_t lhs_col;
  std::size_t rhs_col;
  std::string lhs;
  std::string rhs;
};

std::string_view trim_left(std::string_view s, std::size_t& col) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++col;
  }
  return s;
}

}  // namespace

Endomorphism Endomorphism::parse(std::string_view text) {
  std::vector<MappingLine> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view s(raw);
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    std::size_t col = 1;
    s = trim_left(s, col);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) continue;
    auto arrow = s.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected 'xI -> <word>'", col, lineno);
    std::string_view lhs = s.substr(0, arrow);
    while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.remove_suffix(1);
    lines.push_back({lineno, col, col + arrow + 2, std::string(lhs), std::string(s.substr(arrow + 2))});
  }
  const std::size_t n = lines.size();
  if (n == 0) throw ParseError("no mapping lines", 1, lineno ? lineno : 1);
  std::vector<std::optional<Word>> images(n);
  for (const MappingLine& ml : lines) {
    const std::string& lhs = ml.lhs;
    bool ok = lhs.size() >= 2 && lhs[0] == 'x';
    for (std::size_t k = 1; ok && k < lhs.size(); ++k) ok = std::isdigit(static_cast<unsigned char>(lhs[k])) != 0;
    if (!ok || lhs.size() > 10) throw ParseError("left-hand side must be a generator xI", ml.lhs_col, ml.line);
    std::size_t idx = std::stoul(lhs.substr(1));
    if (idx < 1 || idx > n)
      throw ParseError("generator " + lhs + " out of range 1.." + std::to_string(n) +
                           " (rank is the number of mapping lines)",
                       ml.lhs_col, ml.line);
    if (images[idx - 1]) throw ParseError("duplicate mapping for " + lhs, ml.lhs_col, ml.line);
    try {
      images[idx - 1] = Word::parse(ml.rhs, n);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), ml.rhs_col + e.column() - 1, ml.line);
    }
  }
  std::vector<Word> out;
  for (auto& w : images) out.push_back(std::move(*w));
  return Endomorphism(std::move(out));
}

}  // namespace metafix
