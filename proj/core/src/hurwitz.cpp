#include "braidband/hurwitz.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include <nlohmann/json.hpp>

#include "braidband/errors.hpp"

namespace braidband {

GTuple::GTuple(std::vector<FreeWord> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("a tuple needs at least one entry");
  rank_ = entries_.front().rank();
  for (const FreeWord& entry : entries_) {
    if (entry.rank() != rank_) {
      throw std::invalid_argument("tuple entries must share a rank");
    }
  }
}

int GTuple::total_length() const noexcept {
  int sum = 0;
  for (const FreeWord& entry : entries_) sum += entry.length();
  return sum;
}

GTuple trivial_tuple(int n) {
  std::vector<FreeWord> entries;
  entries.reserve(n);
  for (int k = 1; k <= n; ++k) entries.push_back(FreeWord::generator(n, k));
  return GTuple(std::move(entries));
}

GTuple apply_artin(int index, int exponent, const GTuple& tuple) {
  if (index < 1 || index >= tuple.size()) {
    throw std::invalid_argument("Hurwitz move index outside [1, n-1]");
  }
  if (exponent != 1 && exponent != -1) {
    throw std::invalid_argument("Hurwitz move exponent must be +1 or -1");
  }
  std::vector<FreeWord> entries(tuple.entries().begin(), tuple.entries().end());
  const FreeWord& left = tuple[index - 1];
  const FreeWord& right = tuple[index];
  if (exponent > 0) {
    entries[index - 1] = right;
    entries[index] = right.inverse() * left * right;
  } else {
    entries[index - 1] = left * right * left.inverse();
    entries[index] = left;
  }
  return GTuple(std::move(entries));
}

GTuple apply_braid(const BraidWord& word, const GTuple& tuple) {
  if (word.strands() != tuple.size()) {
    throw std::invalid_argument("braid strand count must match tuple length");
  }
  GTuple result = tuple;
  std::span<const ArtinLetter> letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    result = apply_artin(it->index, it->exponent, result);
  }
  return result;
}

FreeWord product(const GTuple& tuple) {
  FreeWord result(tuple.rank());
  for (const FreeWord& entry : tuple.entries()) result *= entry;
  return result;
}

GTuple permute(const Permutation& p, const GTuple& tuple) {
  if (p.size() != tuple.size()) {
    throw std::invalid_argument("permutation size must match tuple length");
  }
  const Permutation inv = p.inverse();
  std::vector<FreeWord> entries;
  entries.reserve(tuple.size());
  for (int k = 1; k <= tuple.size(); ++k) entries.push_back(tuple[inv(k) - 1]);
  return GTuple(std::move(entries));
}

GTuple bullet(const BraidWord& word, const GTuple& tuple) {
  if (tuple.rank() != tuple.size()) {
    throw std::invalid_argument("bullet action needs rank == tuple length");
  }
  if (word.strands() != tuple.size()) {
    throw std::invalid_argument("braid strand count must match tuple length");
  }
  const GTuple s = apply_braid(word.inverse(), trivial_tuple(tuple.size()));
  std::vector<FreeWord> entries;
  entries.reserve(tuple.size());
  for (const FreeWord& entry : tuple.entries()) {
    entries.push_back(substitute(entry, s.entries()));
  }
  return GTuple(std::move(entries));
}

OrbitResult orbit_bfs(const GTuple& start, int max_word_length) {
  if (max_word_length < 0) throw std::invalid_argument("word length budget must be >= 0");
  OrbitResult result;
  std::unordered_set<std::string> seen;
  seen.insert(to_string(start));
  result.tuples.push_back(start);
  std::size_t level_begin = 0;
  for (int depth = 1; depth <= max_word_length; ++depth) {
    const std::size_t level_end = result.tuples.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int index = 1; index < start.size(); ++index) {
        for (int exponent : {+1, -1}) {
          GTuple next = apply_artin(index, exponent, result.tuples[k]);
          if (seen.insert(to_string(next)).second) {
            result.tuples.push_back(std::move(next));
          }
        }
      }
    }
    if (result.tuples.size() == level_end) return result;  // closed under the moves
    level_begin = level_end;
  }
  result.truncated = level_begin < result.tuples.size();
  return result;
}

std::string to_string(const GTuple& tuple) {
  std::ostringstream out;
  out << '(';
  for (int k = 0; k < tuple.size(); ++k) {
    if (k > 0) out << ", ";
    out << to_string(tuple[k]);
  }
  out << ')';
  return out.str();
}

GTuple parse_tuple(std::string_view text, int rank) {
  std::size_t open = text.find_first_not_of(" \t\n\r");
  std::size_t close = text.find_last_not_of(" \t\n\r");
  if (open == std::string_view::npos || text[open] != '(' || text[close] != ')' ||
      close <= open) {
    throw ParseError("expected a parenthesized tuple (w1, w2, ...)", std::string(text),
                     open == std::string_view::npos ? 0 : open);
  }
  std::string_view inner = text.substr(open + 1, close - open - 1);

  std::vector<std::pair<std::string_view, std::size_t>> parts;
  std::size_t begin = 0;
  while (true) {
    std::size_t comma = inner.find(',', begin);
    std::size_t end = comma == std::string_view::npos ? inner.size() : comma;
    parts.emplace_back(inner.substr(begin, end - begin), open + 1 + begin);
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }

  // Two passes so that every entry ends up in the common (largest) rank.
  int common_rank = rank;
  if (common_rank == 0) {
    for (const auto& [part, offset] : parts) {
      try {
        common_rank = std::max(common_rank, parse_free_word(part).rank());
      } catch (const ParseError& err) {
        throw ParseError(err.what(), std::string(text), offset + err.position());
      }
    }
  }
  std::vector<FreeWord> entries;
  entries.reserve(parts.size());
  for (const auto& [part, offset] : parts) {
    try {
      entries.push_back(parse_free_word(part, common_rank));
    } catch (const ParseError& err) {
      throw ParseError(err.what(), std::string(text), offset + err.position());
    }
  }
  return GTuple(std::move(entries));
}

std::string tuple_json(const GTuple& tuple) {
  nlohmann::json entries = nlohmann::json::array();
  for (const FreeWord& entry : tuple.entries()) {
    nlohmann::json letters = nlohmann::json::array();
    for (const SignedLetter& letter : entry.letters()) {
      letters.push_back({letter.generator, letter.exponent});
    }
    entries.push_back(std::move(letters));
  }
  return entries.dump();
}

}  // namespace braidband
