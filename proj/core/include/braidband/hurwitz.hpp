#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidband/braid_word.hpp"
#include "braidband/free_word.hpp"

namespace braidband {

/// A tuple of words over a common free group: the coordinate form of a
/// homomorphism F_n -> F_m. Entries are 0-indexed; strand and generator
/// numbers in the algebra stay 1-based.
class GTuple {
 public:
  explicit GTuple(std::vector<FreeWord> entries);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int rank() const noexcept { return rank_; }
  const FreeWord& operator[](std::size_t k) const { return entries_[k]; }
  std::span<const FreeWord> entries() const noexcept { return entries_; }

  /// Sum of the entry lengths, l(t).
  int total_length() const noexcept;

  friend bool operator==(const GTuple&, const GTuple&) = default;

 private:
  int rank_ = 0;
  std::vector<FreeWord> entries_;
};

/// (v_1, ..., v_n) over F_n.
GTuple trivial_tuple(int n);

/// One Hurwitz move:
///   sigma_i      (.., g_i, g_{i+1}, ..) -> (.., g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}, ..)
///   sigma_i^{-1} (.., g_i, g_{i+1}, ..) -> (.., g_i g_{i+1} g_i^{-1}, g_i, ..)
GTuple apply_artin(int index, int exponent, const GTuple& tuple);

/// Hurwitz action of a braid word; the rightmost letter acts first, so
/// apply_braid(a * b, t) == apply_braid(a, apply_braid(b, t)).
GTuple apply_braid(const BraidWord& word, const GTuple& tuple);

/// Product of the entries, left to right. Invariant under apply_braid.
FreeWord product(const GTuple& tuple);

/// Entry k of the result is entry p^{-1}(k) of the input.
GTuple permute(const Permutation& p, const GTuple& tuple);

/// The substitution action in the rank == size regime: with
/// s = apply_braid(word.inverse(), trivial), entry k of the result is
/// substitute(tuple[k], s). bullet(b, trivial) == apply_braid(b^{-1}, trivial).
GTuple bullet(const BraidWord& word, const GTuple& tuple);

/// Everything reachable from `start` by braid words of length at most
/// max_word_length, in deterministic discovery order. `truncated` is set when
/// the final level still produced new tuples, i.e. the orbit may go on.
struct OrbitResult {
  std::vector<GTuple> tuples;
  bool truncated = false;
};
OrbitResult orbit_bfs(const GTuple& start, int max_word_length);

/// Prints as "(w1, w2, ...)" with the word grammar for entries.
std::string to_string(const GTuple& tuple);

/// Parses "(w1, w2, ...)"; rank = 0 infers the common rank as the largest
/// generator index used anywhere in the tuple.
GTuple parse_tuple(std::string_view text, int rank = 0);

/// JSON export: array of entries, each an array of [generator, exponent] pairs.
std::string tuple_json(const GTuple& tuple);

}  // namespace braidband
