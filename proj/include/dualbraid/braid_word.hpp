#pragma once

// Band generators, braid words and induced permutations for B_n.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dualbraid {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Signed band generator a(upper, lower)^sign with 1 <= lower < upper.
struct BandGenerator {
  int upper = 2;
  int lower = 1;
  int sign = 1;

  BandGenerator inverse() const { return {upper, lower, -sign}; }
  friend bool operator==(const BandGenerator&, const BandGenerator&) = default;
};

/// A permutation of {1..n}. Storage is 0-based; apply() takes 1-based points.
///
/// Composition follows pi_{xy} = pi_x o pi_y: the right operand acts first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> zero_based_images);

  static Permutation identity(int n) { return Permutation(n); }
  static Permutation transposition(int n, int i, int j);
  /// The permutation of delta: i -> i-1 mod n.
  static Permutation delta(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point - 1] + 1; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  Permutation power(long exponent) const;
  bool is_identity() const;
  /// 1-based fixed points in increasing order.
  std::vector<int> fixed_points() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// A word over signed band generators of B_n.
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<BandGenerator> letters);

  int strands() const { return n_; }
  const std::vector<BandGenerator>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(const BandGenerator& g);
  void append(const BraidWord& other);

  BraidWord inverse() const;
  BraidWord power(long exponent) const;

  friend BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_;
  std::vector<BandGenerator> letters_;
};

// Defining words for the named elements.
BraidWord delta_word(int n);
/// Delta = s1 (s2 s1) ... (s_{n-1} ... s1).
BraidWord half_twist_word(int n);
/// epsilon = delta s1.
BraidWord epsilon_word(int n);
/// [i_k, ..., i_1] = a(i_k, i_{k-1}) ... a(i_2, i_1); indices must strictly decrease.
BraidWord subsimple_word(int n, const std::vector<int>& descending);

/// Parses the ASCII braid-word grammar:
///   word := term { ["*"] term }
///   term := atom [ "^" signed-int ]
///   atom := "a(" int "," int ")" | "s" int | "d" | "D" | "e"
///         | "[" int { "," int } "]" | "(" word ")"
/// An empty (all-whitespace) input is the identity.
BraidWord parse_word(std::string_view text, int n);

/// Canonical printer: letters as a(i,j) or a(i,j)^-1 separated by single spaces.
std::string to_string(const BraidWord& w);

Permutation permutation_of(const BraidWord& w);
long exponent_sum(const BraidWord& w);

}  // namespace dualbraid
