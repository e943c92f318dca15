#pragma once

// Randomized value generators shared by the property tests and the
// acceptance suite. All draws go through a caller-owned engine so every
// test run is reproducible from its seed.

#include <random>
#include <stdexcept>
#include <vector>

#include "braidband/braid_word.hpp"
#include "braidband/free_word.hpp"
#include "braidband/hurwitz.hpp"
#include "braidband/young.hpp"

namespace braidband::testing {

using Rng = std::mt19937;

inline int draw(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// A freely reduced word of exactly the given length (no letter is followed
/// by its inverse).
inline FreeWord random_reduced_word(Rng& rng, int rank, int length) {
  std::vector<SignedLetter> letters;
  letters.reserve(length);
  for (int k = 0; k < length; ++k) {
    while (true) {
      SignedLetter letter{draw(rng, 1, rank), draw(rng, 0, 1) ? +1 : -1};
      if (!letters.empty() && letter == letters.back().inverse()) continue;
      letters.push_back(letter);
      break;
    }
  }
  return FreeWord(rank, letters);
}

/// An arbitrary (not reduced) letter sequence.
inline std::vector<SignedLetter> random_raw_letters(Rng& rng, int rank, int length) {
  std::vector<SignedLetter> letters;
  letters.reserve(length);
  for (int k = 0; k < length; ++k) {
    letters.push_back({draw(rng, 1, rank), draw(rng, 0, 1) ? +1 : -1});
  }
  return letters;
}

inline BraidWord random_braid_word(Rng& rng, int strands, int length) {
  std::vector<ArtinLetter> letters;
  letters.reserve(length);
  for (int k = 0; k < length; ++k) {
    letters.push_back({draw(rng, 1, strands - 1), draw(rng, 0, 1) ? +1 : -1});
  }
  return BraidWord(strands, letters);
}

inline GTuple random_tuple(Rng& rng, int size, int rank, int max_entry_length) {
  std::vector<FreeWord> entries;
  entries.reserve(size);
  for (int k = 0; k < size; ++k) {
    entries.push_back(random_reduced_word(rng, rank, draw(rng, 0, max_entry_length)));
  }
  return GTuple(std::move(entries));
}

/// A random set partition of {1..n} via independent block labels.
inline Partition random_partition(Rng& rng, int n) {
  std::vector<std::vector<int>> blocks(n);
  for (int element = 1; element <= n; ++element) {
    blocks[draw(rng, 0, n - 1)].push_back(element);
  }
  std::erase_if(blocks, [](const std::vector<int>& block) { return block.empty(); });
  return Partition(n, std::move(blocks));
}

/// A random partition of {1..n} that has at least one block of size >= 2.
inline Partition random_partition_with_pair(Rng& rng, int n) {
  while (true) {
    Partition partition = random_partition(rng, n);
    for (const auto& block : partition.blocks()) {
      if (block.size() >= 2) return partition;
    }
  }
}

/// A uniformly chosen band generator a(i,j)^{+-1} with i, j co-blocked.
inline BandGenerator random_admissible_factor(Rng& rng, const Partition& partition) {
  std::vector<std::pair<int, int>> pairs;
  for (const std::vector<int>& block : partition.blocks()) {
    for (std::size_t a = 0; a < block.size(); ++a) {
      for (std::size_t b = a + 1; b < block.size(); ++b) {
        pairs.emplace_back(block[a], block[b]);
      }
    }
  }
  if (pairs.empty()) throw std::logic_error("partition has no co-blocked pair");
  const auto [i, j] = pairs[draw(rng, 0, static_cast<int>(pairs.size()) - 1)];
  return BandGenerator(i, j, draw(rng, 0, 1) ? +1 : -1);
}

/// A product of `count` random admissible band generators for the partition.
inline BraidWord random_admissible_product(Rng& rng, const Partition& partition, int count,
                                           std::vector<BandGenerator>* factors = nullptr) {
  BraidWord word(partition.size());
  for (int k = 0; k < count; ++k) {
    const BandGenerator factor = random_admissible_factor(rng, partition);
    if (factors) factors->push_back(factor);
    word *= expand_band(factor, partition.size());
  }
  return word;
}

/// A conjugate C x C^{-1} of a single positive letter, reduced.
inline FreeWord random_generator_conjugate(Rng& rng, int rank, int max_conjugator_length) {
  const FreeWord conjugator =
      random_reduced_word(rng, rank, draw(rng, 0, max_conjugator_length));
  const FreeWord core = FreeWord::generator(rank, draw(rng, 1, rank));
  return conjugator * core * conjugator.inverse();
}

}  // namespace braidband::testing
