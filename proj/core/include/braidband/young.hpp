#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidband/braid_word.hpp"
#include "braidband/free_word.hpp"
#include "braidband/hurwitz.hpp"

namespace braidband {

/// A partition of {1..n} into disjoint nonempty blocks, kept in canonical
/// form: each block sorted, blocks ordered by their minimum.
class Partition {
 public:
  Partition(int n, std::vector<std::vector<int>> blocks);

  /// n is taken to be the number of elements listed.
  static Partition from_blocks(std::vector<std::vector<int>> blocks);

  int size() const noexcept { return n_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

  /// 1-based index of the block containing the element, in canonical order.
  int block_of(int element) const;
  bool same_block(int a, int b) const { return block_of(a) == block_of(b); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;  // element -> block index, 0-based storage
};

/// The tuple t with t_i = x_s for i in block s; rank = number of blocks.
/// Its stabilizer under the Hurwitz action is the Young subgroup B_Q.
GTuple canonical_tuple(const Partition& partition);

/// Blocks are the equality classes of the entries.
Partition partition_from_tuple(const GTuple& tuple);

/// False iff some i < j < k < l has i,k in one block and j,l in another.
bool is_noncrossing(const Partition& partition);

/// Membership in the Young subgroup B_Q: true iff the braid fixes the
/// canonical tuple of Q.
bool is_member(const BraidWord& braid, const Partition& partition);

/// A product of band generators whose strand pairs each lie inside one
/// block of a partition. The word order is the group order: the leftmost
/// factor acts last.
class Factorization {
 public:
  Factorization(int strands, std::vector<BandGenerator> factors, const Partition& partition);

  int strands() const noexcept { return strands_; }
  std::span<const BandGenerator> factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

  /// Expands every factor and composes them in word order.
  BraidWord to_braid_word() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  int strands_ = 1;
  std::vector<BandGenerator> factors_;
};

/// One rewriting step of decompose(): the band factor that was prepended and
/// the working tuple after its bullet action.
struct DecomposeStep {
  BandGenerator factor;
  GTuple tuple;
};
struct DecomposeTrace {
  std::optional<GTuple> initial;  // b applied to the trivial tuple
  std::vector<DecomposeStep> steps;
};

/// Writes a member of B_Q as a product of admissible band generators.
///
/// Works over fresh variables v_1..v_n: starting from t = b(v_1,...,v_n),
/// repeatedly find the first entry containing a subword v_i^e v_j^{-e} with
/// i, j in one block of Q (entries scanned in order, leftmost position
/// first), apply the bullet action of a(i,j)^{-e} and prepend a(i,j)^{-e}
/// to the factor list, until the tuple is trivial.
///
/// Throws MembershipError when the braid is not in B_Q. A safety cap of
/// 4 * l(t)^2 iterations guards the loop; exceeding it throws
/// std::logic_error (termination is guaranteed for members, so the cap can
/// only flag an implementation bug).
Factorization decompose(const BraidWord& braid, const Partition& partition,
                        DecomposeTrace* trace = nullptr);

/// Orbit test against a base tuple of single positive letters: true iff the
/// multiset of cyclic cores of the candidate equals the multiset of base
/// letters and the entry products agree. Throws std::invalid_argument when a
/// base entry is not a single positive letter or the shapes differ.
bool in_orbit(const GTuple& candidate, const GTuple& base);

/// A braid word b with apply_braid(b, base) == target, found by greedy
/// length reduction: while l(t) > n, apply the first Hurwitz move (smallest
/// position, exponent -1 before +1) that strictly shortens the tuple. The
/// witness is one valid choice, not a canonical one. Throws OrbitError when
/// target is not in the orbit of base.
BraidWord connect(const GTuple& target, const GTuple& base);

/// The decomposition of a locally minimal pair of generator conjugates:
/// left  = prefix * left_tail  * p * left_tail^{-1}  * prefix^{-1}
/// right = prefix * right_tail * q * right_tail^{-1} * prefix^{-1}
/// with no cancellation anywhere in
/// prefix left_tail p left_tail^{-1} right_tail q right_tail^{-1} prefix^{-1}.
struct PairSplit {
  FreeWord prefix;      // Z, the common conjugator prefix
  FreeWord left_tail;   // A
  FreeWord right_tail;  // B
  int left_letter;      // p
  int right_letter;     // q
};

/// Tries the split above with prefix = the longest common prefix of the two
/// conjugators (the only candidate). Returns nullopt when the no-cancellation
/// condition fails. Both entries must be conjugates of single positive
/// letters; otherwise std::invalid_argument.
std::optional<PairSplit> pair_split(const FreeWord& left, const FreeWord& right);

/// True iff neither Hurwitz move on the pair strictly decreases total
/// length. Equivalent to pair_split succeeding.
bool pair_is_locally_minimal(const FreeWord& left, const FreeWord& right);

/// JSON array-of-arrays form, e.g. [[1,3],[2,4]].
Partition parse_partition(std::string_view text);
std::string to_string(const Partition& partition);

/// Tokens "a(i,j)" / "a(i,j)^-1" in word order; the empty product is "1".
std::string to_string(const Factorization& factorization);

/// JSON array of {"i": ..., "j": ..., "exponent": ...} in word order.
std::string factorization_json(const Factorization& factorization);

}  // namespace braidband
