#pragma once

// Words in the free group F_n on x_1 ... x_n. Generator indices are 0-based in
// the API and 1-based (x1 ... xn) in text.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace metafix {

struct Letter {
  std::size_t gen = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word of a fixed ambient rank.
class Word {
 public:
  explicit Word(std::size_t rank = 0) : rank_(rank) {}

  /// Freely reduces `letters`. Throws DimensionError on an index >= rank.
  static Word reduce(std::size_t rank, std::span<const Letter> letters);
  static Word generator(std::size_t rank, std::size_t gen, int power = 1);
  /// x_1^{a_1} ... x_n^{a_n}
  static Word monomial(std::span<const int> exps);
  static Word commutator(const Word& a, const Word& b);  // a^-1 b^-1 a b

  /// Parses the word grammar: whitespace-separated factors `xK`, `xK^E`,
  /// `[w1,w2,...]` (left-normed commutators), `(w)^E`; `1` is the empty word.
  static Word parse(std::string_view text, std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(long e) const;
  friend Word operator*(const Word& u, const Word& v);
  /// In place; amortized linear in |v|.
  Word& operator*=(const Word& v);

  /// Image in the abelianization Z^n.
  std::vector<int> exponent_sums() const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

}  // namespace metafix
