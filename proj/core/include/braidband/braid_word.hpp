#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidband {

/// One Artin generator letter sigma_index^exponent, 1 <= index <= strands-1.
struct ArtinLetter {
  int index = 1;
  int exponent = +1;

  ArtinLetter inverse() const noexcept { return {index, -exponent}; }
  friend bool operator==(const ArtinLetter&, const ArtinLetter&) = default;
};

/// A word in the Artin generators of the braid group on a fixed number of
/// strands. Only free cancellation of adjacent sigma^{+1} sigma^{-1} pairs is
/// applied (at construction and composition); no braid-relation rewriting
/// happens, so operator== is equality of freely reduced words. Equality in
/// the braid group is braid_equal().
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::span<const ArtinLetter> letters);

  int strands() const noexcept { return strands_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  bool is_identity_word() const noexcept { return letters_.empty(); }
  std::span<const ArtinLetter> letters() const noexcept { return letters_; }

  BraidWord inverse() const;

  /// Concatenation with free cancellation at the seam.
  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  void push_reduced(ArtinLetter letter);

  int strands_ = 1;
  std::vector<ArtinLetter> letters_;
};

/// A band generator a_{ij}^exponent, the conjugate sigma ladder mapping to
/// the transposition (i j). Stored with i < j; a(j,i) normalizes to a(i,j).
struct BandGenerator {
  int i;
  int j;
  int exponent;

  BandGenerator(int a, int b, int exponent = +1);

  BandGenerator inverse() const noexcept { return BandGenerator(i, j, -exponent); }
  friend bool operator==(const BandGenerator&, const BandGenerator&) = default;
};

/// a_{ij} = sigma_i ... sigma_{j-2} sigma_{j-1} sigma_{j-2}^{-1} ... sigma_i^{-1},
/// inverted as a whole when the exponent is -1. For j = i+1 this is sigma_i.
BraidWord expand_band(const BandGenerator& band, int strands);

/// The equivalent ladder from the other side:
/// a_{ij} = sigma_{j-1}^{-1} ... sigma_{i+1}^{-1} sigma_i sigma_{i+1} ... sigma_{j-1}.
BraidWord expand_band_alt(const BandGenerator& band, int strands);

/// A permutation of {1..n}. operator() applies it; composition (p*q)(k) = p(q(k)).
class Permutation {
 public:
  explicit Permutation(int n);
  static Permutation from_images(std::vector<int> images);
  static Permutation transposition(int n, int a, int b);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_.at(k - 1); }

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Image under the canonical morphism to S_n (sigma_i -> (i, i+1)).
Permutation permutation_of(const BraidWord& word);

/// Equality in the braid group, decided through the faithful Hurwitz action
/// on the trivial tuple (v_1, ..., v_n).
bool braid_equal(const BraidWord& lhs, const BraidWord& rhs);

/// Tokens "s<i>" / "s<i>^-1"; the empty word prints as "1".
std::string to_string(const BraidWord& word);

/// Token "a(<i>,<j>)" or "a(<i>,<j>)^-1".
std::string to_string(const BandGenerator& band);

/// Parses whitespace-separated tokens s<i> / a(<i>,<j>), each with an
/// optional integer exponent; band tokens are expanded into Artin letters.
/// The leftmost token acts last. "1" is the empty word.
BraidWord parse_braid_word(std::string_view text, int strands);

}  // namespace braidband
