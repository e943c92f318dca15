#include "braidband/free_word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "braidband/errors.hpp"

namespace braidband {

namespace {

void check_letter(int rank, const SignedLetter& letter) {
  if (letter.exponent != 1 && letter.exponent != -1) {
    throw std::invalid_argument("letter exponent must be +1 or -1");
  }
  if (letter.generator < 1 || letter.generator > rank) {
    throw std::invalid_argument("generator index " + std::to_string(letter.generator) +
                                " outside rank " + std::to_string(rank));
  }
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("rank must be non-negative");
}

FreeWord::FreeWord(int rank, std::span<const SignedLetter> raw) : FreeWord(rank) {
  letters_.reserve(raw.size());
  for (const SignedLetter& letter : raw) {
    check_letter(rank_, letter);
    push_reduced(letter);
  }
}

FreeWord FreeWord::generator(int rank, int index, int exponent) {
  FreeWord w(rank);
  check_letter(rank, {index, exponent});
  w.letters_.push_back({index, exponent});
  return w;
}

void FreeWord::push_reduced(SignedLetter letter) {
  if (!letters_.empty() && letters_.back() == letter.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

void FreeWord::append_reduced(std::span<const SignedLetter> letters, bool invert) {
  if (!invert) {
    for (const SignedLetter& letter : letters) push_reduced(letter);
  } else {
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) push_reduced(it->inverse());
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord result(rank_);
  result.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    result.letters_.push_back(it->inverse());
  }
  return result;
}

FreeWord FreeWord::with_rank(int new_rank) const {
  FreeWord result(new_rank);
  for (const SignedLetter& letter : letters_) check_letter(new_rank, letter);
  result.letters_ = letters_;
  return result;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  if (rank_ != rhs.rank_) {
    throw std::invalid_argument("cannot multiply words of different ranks");
  }
  // Both sides are reduced, so cancellation can only telescope at the seam.
  append_reduced(rhs.letters_, /*invert=*/false);
  return *this;
}

FreeWord reduce(int rank, std::span<const SignedLetter> raw) { return FreeWord(rank, raw); }

bool is_star_product(std::span<const FreeWord> parts) {
  if (parts.empty()) return true;
  FreeWord acc = parts.front();
  long sum = acc.length();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    acc *= parts[k];
    sum += parts[k].length();
  }
  return acc.length() == sum;
}

CyclicForm cyclic_reduce(const FreeWord& w) {
  std::span<const SignedLetter> letters = w.letters();
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  CyclicForm form{FreeWord(w.rank()), FreeWord(w.rank())};
  form.conjugator = FreeWord(w.rank(), letters.subspan(0, lo));
  form.core = FreeWord(w.rank(), letters.subspan(lo, hi - lo));
  return form;
}

bool is_conjugate_of_generator(const FreeWord& w, int generator) {
  const FreeWord core = cyclic_reduce(w).core;
  return core.length() == 1 && core.letter(0) == SignedLetter{generator, +1};
}

FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images) {
  if (static_cast<int>(images.size()) != w.rank()) {
    throw std::invalid_argument("substitute needs one image per generator");
  }
  int image_rank = 0;
  if (!images.empty()) {
    image_rank = images.front().rank();
    for (const FreeWord& image : images) {
      if (image.rank() != image_rank) {
        throw std::invalid_argument("substitution images must share a rank");
      }
    }
  }
  FreeWord result(image_rank);
  for (const SignedLetter& letter : w.letters()) {
    result.append_reduced(images[letter.generator - 1].letters(), letter.exponent < 0);
  }
  return result;
}

std::string to_string(const FreeWord& w) {
  if (w.is_identity()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const SignedLetter& letter : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << 'x' << letter.generator;
    if (letter.exponent < 0) out << "^-1";
  }
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

// "<digits>" or "<digits>^<int>"; returns {index, exponent}.
std::pair<int, int> parse_index_exponent(std::string_view tail, std::string_view whole,
                                         std::size_t position) {
  std::size_t caret = tail.find('^');
  std::string_view index_text = caret == std::string_view::npos ? tail : tail.substr(0, caret);
  int index = parse_int(index_text, whole, position, "a generator index");
  int exponent = 1;
  if (caret != std::string_view::npos) {
    exponent = parse_int(tail.substr(caret + 1), whole, position + caret + 1, "an exponent");
  }
  return {index, exponent};
}

}  // namespace

FreeWord parse_free_word(std::string_view text, int rank) {
  std::vector<SignedLetter> letters;
  int max_index = 0;
  for (const Token& token : split_tokens(text)) {
    if (token.text == "1") continue;
    char head = token.text.front();
    if (head != 'x' && head != 'v') {
      throw ParseError("expected a word token x<k>, v<k> or 1", std::string(text),
                       token.position);
    }
    auto [index, exponent] =
        parse_index_exponent(token.text.substr(1), text, token.position + 1);
    if (index < 1) {
      throw ParseError("generator index must be >= 1", std::string(text), token.position);
    }
    if (rank > 0 && index > rank) {
      throw ParseError("generator index exceeds rank " + std::to_string(rank),
                       std::string(text), token.position);
    }
    max_index = std::max(max_index, index);
    int sign = exponent < 0 ? -1 : +1;
    for (int c = 0; c < std::abs(exponent); ++c) letters.push_back({index, sign});
  }
  return FreeWord(rank > 0 ? rank : max_index, letters);
}

}  // namespace braidband
