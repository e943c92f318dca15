#include "braidband/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "braidband/errors.hpp"
#include "braidband/hurwitz.hpp"

namespace braidband {

namespace {

void check_artin_letter(int strands, const ArtinLetter& letter) {
  if (letter.exponent != 1 && letter.exponent != -1) {
    throw std::invalid_argument("Artin letter exponent must be +1 or -1");
  }
  if (letter.index < 1 || letter.index >= strands) {
    throw std::invalid_argument("Artin letter index " + std::to_string(letter.index) +
                                " outside [1, " + std::to_string(strands - 1) + "]");
  }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
}

BraidWord::BraidWord(int strands, std::span<const ArtinLetter> letters) : BraidWord(strands) {
  letters_.reserve(letters.size());
  for (const ArtinLetter& letter : letters) {
    check_artin_letter(strands_, letter);
    push_reduced(letter);
  }
}

void BraidWord::push_reduced(ArtinLetter letter) {
  if (!letters_.empty() && letters_.back() == letter.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord result(strands_);
  result.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    result.letters_.push_back(it->inverse());
  }
  return result;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (strands_ != rhs.strands_) {
    throw std::invalid_argument("cannot compose braid words on different strand counts");
  }
  for (const ArtinLetter& letter : rhs.letters_) push_reduced(letter);
  return *this;
}

BandGenerator::BandGenerator(int a, int b, int exponent) : i(a), j(b), exponent(exponent) {
  if (i > j) std::swap(i, j);
  if (i < 1 || i == j) {
    throw std::invalid_argument("band generator needs two distinct strands >= 1");
  }
  if (exponent != 1 && exponent != -1) {
    throw std::invalid_argument("band generator exponent must be +1 or -1");
  }
}

BraidWord expand_band(const BandGenerator& band, int strands) {
  if (band.j > strands) {
    throw std::invalid_argument("band generator a(" + std::to_string(band.i) + "," +
                                std::to_string(band.j) + ") does not fit on " +
                                std::to_string(strands) + " strands");
  }
  std::vector<ArtinLetter> letters;
  letters.reserve(2 * (band.j - band.i) - 1);
  for (int k = band.i; k <= band.j - 1; ++k) letters.push_back({k, +1});
  for (int k = band.j - 2; k >= band.i; --k) letters.push_back({k, -1});
  BraidWord word(strands, letters);
  return band.exponent < 0 ? word.inverse() : word;
}

BraidWord expand_band_alt(const BandGenerator& band, int strands) {
  if (band.j > strands) {
    throw std::invalid_argument("band generator a(" + std::to_string(band.i) + "," +
                                std::to_string(band.j) + ") does not fit on " +
                                std::to_string(strands) + " strands");
  }
  std::vector<ArtinLetter> letters;
  letters.reserve(2 * (band.j - band.i) - 1);
  for (int k = band.j - 1; k >= band.i + 1; --k) letters.push_back({k, -1});
  for (int k = band.i; k <= band.j - 1; ++k) letters.push_back({k, +1});
  BraidWord word(strands, letters);
  return band.exponent < 0 ? word.inverse() : word;
}

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  images_.resize(n);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size(), false);
  for (int image : images) {
    if (image < 1 || image > static_cast<int>(images.size()) || seen[image - 1]) {
      throw std::invalid_argument("image list is not a bijection");
    }
    seen[image - 1] = true;
  }
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  p.images_.at(a - 1) = b;
  p.images_.at(b - 1) = a;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation result(size());
  for (int k = 1; k <= size(); ++k) result.images_[images_[k - 1] - 1] = k;
  return result;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("cannot compose permutations of different sizes");
  }
  Permutation result(p.size());
  for (int k = 1; k <= p.size(); ++k) result.images_[k - 1] = p(q(k));
  return result;
}

Permutation permutation_of(const BraidWord& word) {
  // Rightmost letter acts first, so walk the word from the right and
  // post-compose each transposition.
  Permutation result(word.strands());
  std::span<const ArtinLetter> letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    result = Permutation::transposition(word.strands(), it->index, it->index + 1) * result;
  }
  return result;
}

bool braid_equal(const BraidWord& lhs, const BraidWord& rhs) {
  if (lhs.strands() != rhs.strands()) {
    throw std::invalid_argument("cannot compare braid words on different strand counts");
  }
  const GTuple trivial = trivial_tuple(lhs.strands());
  return apply_braid(lhs, trivial) == apply_braid(rhs, trivial);
}

std::string to_string(const BraidWord& word) {
  if (word.is_identity_word()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const ArtinLetter& letter : word.letters()) {
    if (!first) out << ' ';
    first = false;
    out << 's' << letter.index;
    if (letter.exponent < 0) out << "^-1";
  }
  return out.str();
}

std::string to_string(const BandGenerator& band) {
  std::ostringstream out;
  out << "a(" << band.i << ',' << band.j << ')';
  if (band.exponent < 0) out << "^-1";
  return out.str();
}

namespace {

struct Token {
  std::string_view text;
  std::size_t position;
};

std::vector<Token> split_tokens(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t k = 0;
  while (k < text.size()) {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    std::size_t start = k;
    while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    if (k > start) tokens.push_back({text.substr(start, k - start), start});
  }
  return tokens;
}

int parse_int(std::string_view text, std::string_view whole, std::size_t position,
              const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(std::string("expected ") + what, std::string(whole), position);
  }
  return value;
}

// Splits "...^<int>" off a token; the body is everything before the caret.
std::pair<std::string_view, int> split_exponent(std::string_view token,
                                                std::string_view whole,
                                                std::size_t position) {
  std::size_t caret = token.find('^');
  if (caret == std::string_view::npos) return {token, 1};
  int exponent =
      parse_int(token.substr(caret + 1), whole, position + caret + 1, "an exponent");
  return {token.substr(0, caret), exponent};
}

void append_power(std::vector<ArtinLetter>& letters, const BraidWord& base, int exponent) {
  const BraidWord word = exponent < 0 ? base.inverse() : base;
  for (int c = 0; c < std::abs(exponent); ++c) {
    letters.insert(letters.end(), word.letters().begin(), word.letters().end());
  }
}

}  // namespace

BraidWord parse_braid_word(std::string_view text, int strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
  std::vector<ArtinLetter> letters;
  for (const Token& token : split_tokens(text)) {
    if (token.text == "1") continue;
    auto [body, exponent] = split_exponent(token.text, text, token.position);
    if (body.size() >= 2 && body.front() == 's') {
      int index = parse_int(body.substr(1), text, token.position + 1, "a strand index");
      if (index < 1 || index >= strands) {
        throw ParseError("strand index outside [1, " + std::to_string(strands - 1) + "]",
                         std::string(text), token.position);
      }
      int sign = exponent < 0 ? -1 : +1;
      for (int c = 0; c < std::abs(exponent); ++c) letters.push_back({index, sign});
    } else if (body.size() >= 6 && body.starts_with("a(") && body.back() == ')') {
      std::string_view inner = body.substr(2, body.size() - 3);
      std::size_t comma = inner.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError("expected a(<i>,<j>)", std::string(text), token.position);
      }
      int i = parse_int(inner.substr(0, comma), text, token.position + 2, "a strand index");
      int j = parse_int(inner.substr(comma + 1), text, token.position + 3 + comma,
                        "a strand index");
      if (i < 1 || j < 1 || i == j || std::max(i, j) > strands) {
        throw ParseError("band generator strands must be distinct and within " +
                             std::to_string(strands) + " strands",
                         std::string(text), token.position);
      }
      append_power(letters, expand_band(BandGenerator(i, j), strands), exponent);
    } else {
      throw ParseError("expected a braid token s<i>, a(<i>,<j>) or 1", std::string(text),
                       token.position);
    }
  }
  return BraidWord(strands, letters);
}

}  // namespace braidband
