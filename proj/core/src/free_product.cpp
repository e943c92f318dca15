#include "braidband/free_product.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace braidband {

FPElement FPElement::u(int exponent) {
  FPElement element;
  const int reduced = ((exponent % 3) + 3) % 3;
  if (reduced != 0) element.syllables_.push_back({true, reduced});
  return element;
}

FPElement FPElement::v() {
  FPElement element;
  element.syllables_.push_back({false, 1});
  return element;
}

void FPElement::push_merged(FPSyllable syllable) {
  if (!syllables_.empty() && syllables_.back().is_u == syllable.is_u) {
    const int order = syllable.is_u ? 3 : 2;
    const int merged = (syllables_.back().exponent + syllable.exponent) % order;
    syllables_.pop_back();
    if (merged != 0) syllables_.push_back({syllable.is_u, merged});
  } else {
    syllables_.push_back(syllable);
  }
}

FPElement& FPElement::operator*=(const FPElement& rhs) {
  for (const FPSyllable& syllable : rhs.syllables_) push_merged(syllable);
  return *this;
}

FPElement FPElement::inverse() const {
  FPElement result;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    result.syllables_.push_back({it->is_u, it->is_u ? 3 - it->exponent : 1});
  }
  return result;
}

FPElement theta(const BraidWord& word) {
  if (word.strands() != 3) {
    throw std::invalid_argument("theta is defined on braid words with 3 strands");
  }
  const FPElement sigma1 = FPElement::u() * FPElement::v();
  const FPElement sigma2 = FPElement::v() * FPElement::u();
  const std::array<FPElement, 4> images = {sigma1, sigma1.inverse(), sigma2,
                                           sigma2.inverse()};
  FPElement result;
  for (const ArtinLetter& letter : word.letters()) {
    result *= images[2 * (letter.index - 1) + (letter.exponent < 0 ? 1 : 0)];
  }
  return result;
}

BraidWord exotic(const BraidWord& word) {
  if (word.strands() != 4) {
    throw std::invalid_argument("the exotic homomorphism is defined on 4 strands");
  }
  std::vector<ArtinLetter> letters;
  letters.reserve(word.letters().size());
  for (const ArtinLetter& letter : word.letters()) {
    letters.push_back({letter.index == 3 ? 1 : letter.index, letter.exponent});
  }
  return BraidWord(3, letters);
}

namespace {

// Depth-first over freely reduced abstract words in two generator symbols;
// letter codes 0..3 encode g1, g1^{-1}, g2, g2^{-1}.
bool all_images_nontrivial(const std::array<FPElement, 4>& images, const FPElement& prefix,
                           int last_letter, int remaining) {
  if (remaining == 0) return true;
  for (int code = 0; code < 4; ++code) {
    if (last_letter >= 0 && code == (last_letter ^ 1)) continue;  // no g g^{-1}
    const FPElement extended = prefix * images[code];
    if (extended.is_identity()) return false;
    if (!all_images_nontrivial(images, extended, code, remaining - 1)) return false;
  }
  return true;
}

}  // namespace

bool certify_free(const BraidWord& left, const BraidWord& right, int max_word_length) {
  if (max_word_length < 0) throw std::invalid_argument("word length bound must be >= 0");
  const std::array<FPElement, 4> images = {
      theta(exotic(left)),
      theta(exotic(left)).inverse(),
      theta(exotic(right)),
      theta(exotic(right)).inverse(),
  };
  return all_images_nontrivial(images, FPElement(), -1, max_word_length);
}

std::string to_string(const FPElement& element) {
  if (element.is_identity()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const FPSyllable& syllable : element.syllables()) {
    if (!first) out << ' ';
    first = false;
    if (syllable.is_u) {
      out << 'u';
      if (syllable.exponent == 2) out << "^2";
    } else {
      out << 'v';
    }
  }
  return out.str();
}

}  // namespace braidband
