#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "metafix/word.hpp"

namespace metafix {

/// Endomorphism of F_n (and of the free metabelian group M_n) given by the
/// images x_i -> y_i.
class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(std::vector<Word> images);

  static Endomorphism identity(std::size_t rank);

  /// Parses the endomorphism file format: one line `xI -> <word>` per
  /// generator, `#` starts a comment, blank lines are ignored. The rank is the
  /// number of mapping lines.
  static Endomorphism parse(std::string_view text);

  std::size_t rank() const { return images_.size(); }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(std::size_t i) const { return images_.at(i); }

  /// Substitutes the images into `w` and freely reduces.
  Word apply(const Word& w) const;

  /// Identical in the abelianization: exponent_sums(y_i) = e_i for all i.
  bool is_ia() const;

  /// Renders the file format (one mapping per line).
  std::string to_string() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<Word> images_;
};

/// (phi o psi)(x) = phi(psi(x)).
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);

}  // namespace metafix
