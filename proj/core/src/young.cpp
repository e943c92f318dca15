#include "braidband/young.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "braidband/errors.hpp"

namespace braidband {

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  if (n < 1) throw std::invalid_argument("partition ground set must be nonempty");
  std::vector<int> owner(n, -1);
  for (std::vector<int>& block : blocks) {
    if (block.empty()) throw std::invalid_argument("partition blocks must be nonempty");
    std::sort(block.begin(), block.end());
    for (int element : block) {
      if (element < 1 || element > n) {
        throw std::invalid_argument("partition element " + std::to_string(element) +
                                    " outside {1.." + std::to_string(n) + "}");
      }
      if (owner[element - 1] != -1) {
        throw std::invalid_argument("partition blocks must be disjoint");
      }
      owner[element - 1] = 0;
    }
  }
  for (int k = 0; k < n; ++k) {
    if (owner[k] == -1) {
      throw std::invalid_argument("partition must cover {1.." + std::to_string(n) + "}");
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
  block_of_.resize(n);
  for (int s = 0; s < static_cast<int>(blocks_.size()); ++s) {
    for (int element : blocks_[s]) block_of_[element - 1] = s;
  }
}

Partition Partition::from_blocks(std::vector<std::vector<int>> blocks) {
  int n = 0;
  for (const std::vector<int>& block : blocks) n += static_cast<int>(block.size());
  return Partition(n, std::move(blocks));
}

int Partition::block_of(int element) const {
  if (element < 1 || element > n_) {
    throw std::invalid_argument("element outside the partition ground set");
  }
  return block_of_[element - 1] + 1;
}

GTuple canonical_tuple(const Partition& partition) {
  const int rank = partition.block_count();
  std::vector<FreeWord> entries;
  entries.reserve(partition.size());
  for (int element = 1; element <= partition.size(); ++element) {
    entries.push_back(FreeWord::generator(rank, partition.block_of(element)));
  }
  return GTuple(std::move(entries));
}

Partition partition_from_tuple(const GTuple& tuple) {
  std::vector<std::vector<int>> blocks;
  for (int k = 0; k < tuple.size(); ++k) {
    bool placed = false;
    for (std::vector<int>& block : blocks) {
      if (tuple[block.front() - 1] == tuple[k]) {
        block.push_back(k + 1);
        placed = true;
        break;
      }
    }
    if (!placed) blocks.push_back({k + 1});
  }
  return Partition(tuple.size(), std::move(blocks));
}

bool is_noncrossing(const Partition& partition) {
  const int n = partition.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          if (partition.same_block(i, k) && partition.same_block(j, l) &&
              !partition.same_block(i, j)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool is_member(const BraidWord& braid, const Partition& partition) {
  if (braid.strands() != partition.size()) {
    throw std::invalid_argument("braid strand count must match the partition ground set");
  }
  const GTuple fixed = canonical_tuple(partition);
  return apply_braid(braid, fixed) == fixed;
}

Factorization::Factorization(int strands, std::vector<BandGenerator> factors,
                             const Partition& partition)
    : strands_(strands), factors_(std::move(factors)) {
  if (partition.size() != strands) {
    throw std::invalid_argument("partition ground set must match the strand count");
  }
  for (const BandGenerator& factor : factors_) {
    if (factor.j > strands) {
      throw std::invalid_argument("factor does not fit on the strand count");
    }
    if (!partition.same_block(factor.i, factor.j)) {
      throw std::invalid_argument("factor " + to_string(factor) +
                                  " crosses partition blocks");
    }
  }
}

BraidWord Factorization::to_braid_word() const {
  BraidWord word(strands_);
  for (const BandGenerator& factor : factors_) word *= expand_band(factor, strands_);
  return word;
}

namespace {

// First subword v_i^e v_j^{-e} with i, j co-blocked: entries in order,
// positions left to right.
std::optional<BandGenerator> find_admissible_factor(const GTuple& tuple,
                                                    const Partition& partition) {
  for (int k = 0; k < tuple.size(); ++k) {
    std::span<const SignedLetter> letters = tuple[k].letters();
    for (std::size_t pos = 0; pos + 1 < letters.size(); ++pos) {
      const SignedLetter& first = letters[pos];
      const SignedLetter& second = letters[pos + 1];
      if (first.exponent == -second.exponent &&
          partition.same_block(first.generator, second.generator)) {
        // Undo the move that created v_i^e v_j^{-e}: bullet by a(i,j)^{-e}.
        return BandGenerator(first.generator, second.generator, -first.exponent);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Factorization decompose(const BraidWord& braid, const Partition& partition,
                        DecomposeTrace* trace) {
  if (!is_member(braid, partition)) {
    throw MembershipError("braid is not in the Young subgroup of " + to_string(partition));
  }
  const int n = partition.size();
  const GTuple trivial = trivial_tuple(n);
  GTuple tuple = apply_braid(braid, trivial);
  if (trace) {
    trace->initial = tuple;
    trace->steps.clear();
  }

  const long cap = 4L * tuple.total_length() * tuple.total_length();
  std::vector<BandGenerator> reversed_factors;
  long iterations = 0;
  while (!(tuple == trivial)) {
    std::optional<BandGenerator> factor = find_admissible_factor(tuple, partition);
    if (!factor) {
      // Unreachable after the membership check above; kept as a guard on the
      // contract between the two membership routes.
      throw MembershipError("no admissible subword left although the tuple is not trivial");
    }
    tuple = bullet(expand_band(*factor, n), tuple);
    reversed_factors.push_back(*factor);
    if (trace) trace->steps.push_back({*factor, tuple});
    if (++iterations > cap) {
      throw std::logic_error("decompose exceeded its iteration cap; this is a bug");
    }
  }
  std::vector<BandGenerator> factors(reversed_factors.rbegin(), reversed_factors.rend());
  return Factorization(n, std::move(factors), partition);
}

bool in_orbit(const GTuple& candidate, const GTuple& base) {
  if (candidate.size() != base.size() || candidate.rank() != base.rank()) {
    throw std::invalid_argument("candidate and base tuples must have equal shape");
  }
  std::vector<int> base_letters;
  for (const FreeWord& entry : base.entries()) {
    if (entry.length() != 1 || entry.letter(0).exponent != 1) {
      throw std::invalid_argument("base entries must be single positive letters");
    }
    base_letters.push_back(entry.letter(0).generator);
  }
  std::vector<int> candidate_cores;
  for (const FreeWord& entry : candidate.entries()) {
    const FreeWord core = cyclic_reduce(entry).core;
    if (core.length() != 1 || core.letter(0).exponent != 1) return false;
    candidate_cores.push_back(core.letter(0).generator);
  }
  std::sort(base_letters.begin(), base_letters.end());
  std::sort(candidate_cores.begin(), candidate_cores.end());
  return candidate_cores == base_letters && product(candidate) == product(base);
}

BraidWord connect(const GTuple& target, const GTuple& base) {
  if (!in_orbit(target, base)) {
    throw OrbitError("target tuple is not in the Hurwitz orbit of the base");
  }
  const int n = base.size();
  GTuple tuple = target;
  std::vector<ArtinLetter> witness;  // inverses of the applied moves, in order
  while (tuple.total_length() > n) {
    bool moved = false;
    for (int index = 1; index < n && !moved; ++index) {
      for (int exponent : {-1, +1}) {
        GTuple next = apply_artin(index, exponent, tuple);
        if (next.total_length() < tuple.total_length()) {
          tuple = std::move(next);
          witness.push_back({index, -exponent});
          moved = true;
          break;
        }
      }
    }
    if (!moved) {
      throw OrbitError("no length-reducing Hurwitz move although the tuple is not minimal");
    }
  }
  if (!(tuple == base)) {
    throw OrbitError("length-minimal tuple differs from the base; orbit test was violated");
  }
  return BraidWord(n, witness);
}

namespace {

// Conjugator and core letter of a word required to be C * p * C^{-1}.
std::pair<FreeWord, int> conjugate_frame(const FreeWord& word) {
  CyclicForm form = cyclic_reduce(word);
  if (form.core.length() != 1 || form.core.letter(0).exponent != 1) {
    throw std::invalid_argument("pair entries must be conjugates of single positive letters");
  }
  return {std::move(form.conjugator), form.core.letter(0).generator};
}

}  // namespace

std::optional<PairSplit> pair_split(const FreeWord& left, const FreeWord& right) {
  if (left.rank() != right.rank()) {
    throw std::invalid_argument("pair entries must share a rank");
  }
  auto [left_conj, p] = conjugate_frame(left);
  auto [right_conj, q] = conjugate_frame(right);

  std::size_t shared = 0;
  while (shared < left_conj.letters().size() && shared < right_conj.letters().size() &&
         left_conj.letters()[shared] == right_conj.letters()[shared]) {
    ++shared;
  }
  const int rank = left.rank();
  PairSplit split{
      FreeWord(rank, left_conj.letters().subspan(0, shared)),
      FreeWord(rank, left_conj.letters().subspan(shared)),
      FreeWord(rank, right_conj.letters().subspan(shared)),
      p,
      q,
  };

  const FreeWord p_word = FreeWord::generator(rank, p);
  const FreeWord q_word = FreeWord::generator(rank, q);
  const FreeWord parts[] = {split.prefix,          split.left_tail,
                            p_word,                split.left_tail.inverse(),
                            split.right_tail,      q_word,
                            split.right_tail.inverse(), split.prefix.inverse()};
  if (!is_star_product(parts)) return std::nullopt;
  return split;
}

bool pair_is_locally_minimal(const FreeWord& left, const FreeWord& right) {
  if (left.rank() != right.rank()) {
    throw std::invalid_argument("pair entries must share a rank");
  }
  conjugate_frame(left);
  conjugate_frame(right);
  const GTuple pair(std::vector<FreeWord>{left, right});
  const int length = pair.total_length();
  return apply_artin(1, +1, pair).total_length() >= length &&
         apply_artin(1, -1, pair).total_length() >= length;
}

Partition parse_partition(std::string_view text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    std::size_t position = err.byte > 0 ? err.byte - 1 : 0;
    throw ParseError("invalid partition JSON", std::string(text), position);
  }
  if (!parsed.is_array()) {
    throw ParseError("expected a JSON array of blocks", std::string(text), 0);
  }
  std::vector<std::vector<int>> blocks;
  for (const nlohmann::json& block : parsed) {
    if (!block.is_array() || block.empty()) {
      throw ParseError("each block must be a nonempty array", std::string(text), 0);
    }
    std::vector<int> elements;
    for (const nlohmann::json& element : block) {
      if (!element.is_number_integer()) {
        throw ParseError("block elements must be integers", std::string(text), 0);
      }
      elements.push_back(element.get<int>());
    }
    blocks.push_back(std::move(elements));
  }
  try {
    return Partition::from_blocks(std::move(blocks));
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what(), std::string(text), 0);
  }
}

std::string to_string(const Partition& partition) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const std::vector<int>& block : partition.blocks()) blocks.push_back(block);
  return blocks.dump();
}

std::string to_string(const Factorization& factorization) {
  if (factorization.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const BandGenerator& factor : factorization.factors()) {
    if (!first) out << ' ';
    first = false;
    out << to_string(factor);
  }
  return out.str();
}

std::string factorization_json(const Factorization& factorization) {
  nlohmann::json factors = nlohmann::json::array();
  for (const BandGenerator& factor : factorization.factors()) {
    factors.push_back({{"i", factor.i}, {"j", factor.j}, {"exponent", factor.exponent}});
  }
  return factors.dump();
}

}  // namespace braidband
