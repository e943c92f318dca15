#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidband {

/// One letter x_g^e of a word over a free group. Generator indices are
/// 1-based; the exponent is +1 or -1.
struct SignedLetter {
  int generator = 1;
  int exponent = +1;

  SignedLetter inverse() const noexcept { return {generator, -exponent}; }
  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

/// A freely reduced word over the free group of a given rank.
///
/// Reduction happens at construction, so a FreeWord always holds the unique
/// reduced representative of its group element and operator== is equality
/// in the group. Values are immutable after construction.
class FreeWord {
 public:
  /// The identity of F_0.
  FreeWord() = default;

  /// The identity of F_rank.
  explicit FreeWord(int rank);

  /// Reduces an arbitrary letter sequence. Throws std::invalid_argument if a
  /// letter falls outside [1, rank] or an exponent is not +-1.
  FreeWord(int rank, std::span<const SignedLetter> raw);

  static FreeWord generator(int rank, int index, int exponent = +1);

  int rank() const noexcept { return rank_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  bool is_identity() const noexcept { return letters_.empty(); }
  std::span<const SignedLetter> letters() const noexcept { return letters_; }
  const SignedLetter& letter(int pos) const { return letters_.at(pos); }

  FreeWord inverse() const;

  /// The same element viewed in F_new_rank. Throws if a used generator
  /// exceeds the new rank.
  FreeWord with_rank(int new_rank) const;

  /// Group multiplication with reduction at the seam.
  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  friend FreeWord substitute(const FreeWord&, std::span<const FreeWord>);

  void push_reduced(SignedLetter letter);
  void append_reduced(std::span<const SignedLetter> letters, bool invert);

  int rank_ = 0;
  std::vector<SignedLetter> letters_;
};

/// Reduces a raw letter sequence; same contract as the FreeWord constructor.
FreeWord reduce(int rank, std::span<const SignedLetter> raw);

/// True iff concatenating the parts causes no cancellation, i.e. the length
/// of the product is the sum of the lengths.
bool is_star_product(std::span<const FreeWord> parts);

/// w = conjugator * core * conjugator^{-1} with no cancellation in the
/// concatenation; core is cyclically reduced.
struct CyclicForm {
  FreeWord conjugator;
  FreeWord core;
};
CyclicForm cyclic_reduce(const FreeWord& w);

/// True iff w is conjugate to the single positive letter x_generator,
/// i.e. its cyclic core is exactly that letter.
bool is_conjugate_of_generator(const FreeWord& w, int generator);

/// Image of w under the homomorphism x_i -> images[i-1]. Requires one image
/// per generator of w's rank; the images share a (possibly different) rank.
FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images);

/// Prints as whitespace-separated tokens "x<k>" / "x<k>^-1"; the identity
/// prints as "1". parse_free_word(to_string(w), w.rank()) == w.
std::string to_string(const FreeWord& w);

/// Parses whitespace-separated tokens x<k> / v<k> with an optional integer
/// exponent ("x2", "x2^-1", "x2^3"); "1" is the empty word. Exponents other
/// than +-1 are expanded into letter sequences. With rank = 0 the rank is
/// inferred as the largest generator index used.
FreeWord parse_free_word(std::string_view text, int rank = 0);

}  // namespace braidband
