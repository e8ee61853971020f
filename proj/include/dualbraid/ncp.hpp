#pragma once

// Simple elements of the dual Garside structure on B_n, realized as
// noncrossing partitions of {1..n}.
//
// A block {i_1 < ... < i_k} stands for the subsimple [i_k, ..., i_1], whose
// induced permutation is the descending cycle i_m -> i_{m-1}, i_1 -> i_k.
// A simple element is stored as that permutation; the permutation determines
// the partition (its cycles) and conversely.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualbraid/braid_word.hpp"

namespace dualbraid {

class InvalidPartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class NoncrossingPartition {
 public:
  NoncrossingPartition() = default;

  static NoncrossingPartition identity(int n);
  /// The Garside element: the single block {1..n}.
  static NoncrossingPartition delta(int n);
  /// Validating constructor from 1-based blocks (any order inside blocks).
  /// Throws InvalidPartition on overlap, gaps, out-of-range points or crossings.
  static NoncrossingPartition from_blocks(const std::vector<std::vector<int>>& blocks, int n);
  /// Validating constructor from a permutation; every cycle must be a
  /// descending cycle of its support and the supports must not cross.
  static NoncrossingPartition from_permutation(const Permutation& p);
  /// The single-block subsimple on the given points (plus singletons elsewhere).
  static NoncrossingPartition subsimple(const std::vector<int>& points, int n);
  /// Band generator a(i, j) as a simple element.
  static NoncrossingPartition generator(int i, int j, int n);

  int strands() const { return static_cast<int>(perm_.size()); }
  /// 1-based image of the induced permutation.
  int image(int point) const { return perm_[point - 1] + 1; }
  Permutation permutation() const;
  const std::vector<std::uint8_t>& raw() const { return perm_; }

  /// Blocks in canonical order: ascending minimum, each block descending.
  /// Includes singletons.
  std::vector<std::vector<int>> blocks() const;
  /// For each point (0-based), the 0-based minimum of its block.
  std::vector<int> block_minima() const;
  int block_count() const;
  /// Number of band generators in the canonical word: n - #blocks.
  int exponent_sum() const { return strands() - block_count(); }
  bool is_identity() const;
  bool is_delta() const;

  /// Canonical generator word: subsimples of non-singleton blocks in
  /// ascending-minimum order.
  BraidWord word() const;
  /// "[12,10,1][9,8,2][7,6,4,3]"; the identity prints as "1".
  std::string to_string() const;

  friend bool operator==(const NoncrossingPartition&, const NoncrossingPartition&) = default;
  friend auto operator<=>(const NoncrossingPartition&, const NoncrossingPartition&) = default;

 private:
  explicit NoncrossingPartition(std::vector<std::uint8_t> perm) : perm_(std::move(perm)) {}
  static NoncrossingPartition from_labels(const std::vector<int>& labels);

  friend NoncrossingPartition meet(const NoncrossingPartition&, const NoncrossingPartition&);
  friend NoncrossingPartition join(const NoncrossingPartition&, const NoncrossingPartition&);
  friend NoncrossingPartition right_complement(const NoncrossingPartition&);
  friend NoncrossingPartition left_complement(const NoncrossingPartition&);
  friend NoncrossingPartition tau(const NoncrossingPartition&, long);
  friend NoncrossingPartition compose_unchecked(const NoncrossingPartition&,
                                                const NoncrossingPartition&);
  friend NoncrossingPartition left_quotient_unchecked(const NoncrossingPartition&,
                                                      const NoncrossingPartition&);
  friend std::vector<NoncrossingPartition> enumerate_simples(int, int);
  friend std::vector<NoncrossingPartition> enumerate_below(const NoncrossingPartition&);

  // 0-based images; strand counts above 255 are rejected.
  std::vector<std::uint8_t> perm_;
};

using Simple = NoncrossingPartition;

inline constexpr int kMaxStrands = 255;
inline constexpr int kDefaultSimpleEnumerationBound = 14;

/// True iff a(p,q) a(i,j) is simple (q < p, j < i).
bool pair_is_simple(const BandGenerator& first, const BandGenerator& second);

/// Prefix order on simples: every block of a lies inside a block of b.
bool refines(const NoncrossingPartition& a, const NoncrossingPartition& b);
/// gcd: the common refinement.
NoncrossingPartition meet(const NoncrossingPartition& a, const NoncrossingPartition& b);
/// lcm: the finest noncrossing partition coarser than both.
NoncrossingPartition join(const NoncrossingPartition& a, const NoncrossingPartition& b);
/// The unique simple d with a d = delta.
NoncrossingPartition right_complement(const NoncrossingPartition& a);
/// The unique simple y with y a = delta.
NoncrossingPartition left_complement(const NoncrossingPartition& a);
/// Rotation delta^-k a delta^k: every point shifted by +k mod n.
NoncrossingPartition tau(const NoncrossingPartition& a, long power = 1);
/// a b if it is simple (b refines the right complement of a).
std::optional<NoncrossingPartition> simple_product(const NoncrossingPartition& a,
                                                   const NoncrossingPartition& b);
/// a^-1 b if a is a prefix of b.
std::optional<NoncrossingPartition> left_quotient(const NoncrossingPartition& a,
                                                  const NoncrossingPartition& b);

// Hot-path variants whose preconditions the caller guarantees:
// compose_unchecked needs b <= right_complement(a); left_quotient_unchecked needs a <= b.
NoncrossingPartition compose_unchecked(const NoncrossingPartition& a, const NoncrossingPartition& b);
NoncrossingPartition left_quotient_unchecked(const NoncrossingPartition& a,
                                             const NoncrossingPartition& b);

/// All noncrossing partitions of {1..n}, ordered by their restricted growth
/// strings (block labels read left to right). Catalan(n) elements.
std::vector<NoncrossingPartition> enumerate_simples(int n, int bound = kDefaultSimpleEnumerationBound);
/// All simples below a (every noncrossing refinement of a), in the order
/// induced by enumerate_simples on each block.
std::vector<NoncrossingPartition> enumerate_below(const NoncrossingPartition& a);

/// Exact C(dr, d-1)/d. Throws std::overflow_error past 64 bits.
std::uint64_t zeta(int d, int r);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t catalan(int n);

/// All r-tuples (c_0, ..., c_{r-1}) with c_0 ... c_{r-1} = target, built from
/// multi-chains 1 <= a_1 <= ... <= a_{r-1} <= target via c_k = a_k^-1 a_{k+1}.
std::vector<std::vector<NoncrossingPartition>> enumerate_compositions(
    const NoncrossingPartition& target, int r);

}  // namespace dualbraid
