#include "metafix/word.hpp"

#include <cctype>
#include <cstdlib>

#include "metafix/error.hpp"

namespace metafix {

Word Word::reduce(std::size_t rank, std::span<const Letter> letters) {
  Word w(rank);
  w.letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.gen >= rank)
      throw DimensionError("generator x" + std::to_string(l.gen + 1) + " exceeds rank " +
                           std::to_string(rank));
    if (!w.letters_.empty() && w.letters_.back() == l.inverse())
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word Word::generator(std::size_t rank, std::size_t gen, int power) {
  if (gen >= rank) throw DimensionError("generator index exceeds rank");
  Word w(rank);
  Letter l{gen, power < 0 ? -1 : 1};
  w.letters_.assign(static_cast<std::size_t>(std::abs(power)), l);
  return w;
}

Word Word::monomial(std::span<const int> exps) {
  Word w(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    Letter l{i, exps[i] < 0 ? -1 : 1};
    for (int k = 0; k < std::abs(exps[i]); ++k) w.letters_.push_back(l);
  }
  return w;
}

Word Word::commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word Word::pow(long e) const {
  Word base = e < 0 ? inverse() : *this;
  std::vector<Letter> all;
  all.reserve(base.length() * static_cast<std::size_t>(std::labs(e)));
  for (long k = 0; k < std::labs(e); ++k) all.insert(all.end(), base.letters_.begin(), base.letters_.end());
  return reduce(rank_, all);
}

Word operator*(const Word& u, const Word& v) {
  if (u.rank_ != v.rank_) throw DimensionError("word rank mismatch");
  // Cancel the suffix of u against the prefix of v.
  std::size_t i = u.letters_.size(), j = 0;
  while (i > 0 && j < v.letters_.size() && u.letters_[i - 1] == v.letters_[j].inverse()) {
    --i;
    ++j;
  }
  Word w(u.rank_);
  w.letters_.reserve(i + v.letters_.size() - j);
  w.letters_.insert(w.letters_.end(), u.letters_.begin(), u.letters_.begin() + static_cast<long>(i));
  w.letters_.insert(w.letters_.end(), v.letters_.begin() + static_cast<long>(j), v.letters_.end());
  return w;
}

Word& Word::operator*=(const Word& v) {
  if (rank_ != v.rank_) throw DimensionError("word rank mismatch");
  std::size_t j = 0;
  while (!letters_.empty() && j < v.letters_.size() && letters_.back() == v.letters_[j].inverse()) {
    letters_.pop_back();
    ++j;
  }
  letters_.insert(letters_.end(), v.letters_.begin() + static_cast<long>(j), v.letters_.end());
  return *this;
}

std::vector<int> Word::exponent_sums() const {
  std::vector<int> a(rank_, 0);
  for (const Letter& l : letters_) a[l.gen] += l.sign;
  return a;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long e = static_cast<long>(j - i) * letters_[i].sign;
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(letters_[i].gen + 1);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class WordParser {
 public:
  WordParser(std::string_view s, std::size_t rank) : s_(s), rank_(rank) {}

  Word run() {
    Word w = sequence();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == 'x' || c == '[' || c == '(' || c == '1';
  }

  Word sequence() {
    Word w(rank_);
    while (at_factor_start()) w *= factor();
    return w;
  }

  long integer() {
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected integer");
    }
    if (pos_ - digits > 9) {
      pos_ = digits;
      fail("integer too large");
    }
    long v = std::stol(std::string(s_.substr(digits, pos_ - digits)));
    return neg ? -v : v;
  }

  long optional_exponent() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      bool paren = pos_ < s_.size() && s_[pos_] == '(';
      if (paren) ++pos_;
      long e = integer();
      if (paren) {
        if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
        ++pos_;
      }
      return e;
    }
    return 1;
  }

  Word factor() {
    skip();
    char c = s_[pos_];
    Word base(rank_);
    if (c == 'x') {
      ++pos_;
      std::size_t at = pos_;
      long idx = integer();
      if (idx < 1 || static_cast<std::size_t>(idx) > rank_) {
        pos_ = at;
        fail("generator x" + std::to_string(idx) + " out of range 1.." + std::to_string(rank_));
      }
      base = Word::generator(rank_, static_cast<std::size_t>(idx - 1));
    } else if (c == '1') {
      ++pos_;
    } else if (c == '(') {
      ++pos_;
      base = sequence();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
    } else {  // '['
      ++pos_;
      base = sequence();
      int parts = 1;
      while (true) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          base = Word::commutator(base, sequence());
          ++parts;
        } else {
          break;
        }
      }
      if (pos_ >= s_.size() || s_[pos_] != ']') fail("expected ']'");
      if (parts < 2) fail("commutator needs at least two entries");
      ++pos_;
    }
    return base.pow(optional_exponent());
  }

  std::string_view s_;
  std::size_t rank_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Word::parse(std::string_view text, std::size_t rank) { return WordParser(text, rank).run(); }

}  // namespace metafix
