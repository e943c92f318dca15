#pragma once

#include <span>
#include <string>
#include <vector>

#include "braidband/braid_word.hpp"

namespace braidband {

/// One syllable of a normal form in <u, v | u^3 = v^2 = 1>: u^1, u^2 or v.
struct FPSyllable {
  bool is_u = true;
  int exponent = 1;  // u: 1 or 2; v: always 1

  friend bool operator==(const FPSyllable&, const FPSyllable&) = default;
};

/// An element of Z/3 * Z/2 in free-product normal form: an alternating
/// syllable sequence with no two adjacent syllables from the same factor.
/// The empty sequence is the identity; normal forms are unique, so
/// operator== is group equality.
class FPElement {
 public:
  FPElement() = default;

  static FPElement u(int exponent = 1);
  static FPElement v();

  bool is_identity() const noexcept { return syllables_.empty(); }
  std::span<const FPSyllable> syllables() const noexcept { return syllables_; }

  FPElement inverse() const;

  FPElement& operator*=(const FPElement& rhs);
  friend FPElement operator*(FPElement lhs, const FPElement& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const FPElement&, const FPElement&) = default;

 private:
  void push_merged(FPSyllable syllable);

  std::vector<FPSyllable> syllables_;
};

/// The homomorphism B_3 -> Z/3 * Z/2 with sigma_1 -> uv, sigma_2 -> vu.
FPElement theta(const BraidWord& word);

/// The strand-collapsing homomorphism B_4 -> B_3 with sigma_1, sigma_3 ->
/// sigma_1 and sigma_2 -> sigma_2 (letterwise, then free cancellation).
BraidWord exotic(const BraidWord& word);

/// Certifies that two braid words on 4 strands generate a free subgroup, as
/// far as words up to the given length can tell: every nonempty freely
/// reduced abstract word in the generators must map to a nonidentity element
/// under theta(exotic(.)).
bool certify_free(const BraidWord& left, const BraidWord& right, int max_word_length);

/// Prints syllables as "u", "u^2", "v" separated by spaces; identity is "1".
std::string to_string(const FPElement& element);

}  // namespace braidband
