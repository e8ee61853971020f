#pragma once

// Left normal forms delta^r a_1 ... a_l over the dual Garside structure.

#include <string>
#include <utility>
#include <vector>

#include "dualbraid/braid_word.hpp"
#include "dualbraid/ncp.hpp"

namespace dualbraid {

class NormalForm {
 public:
  explicit NormalForm(int strands = 2);

  static NormalForm identity(int n) { return NormalForm(n); }
  static NormalForm delta_power(int n, long power);
  /// Normal form of a single simple element (possibly 1 or delta).
  static NormalForm from_simple(const Simple& s);
  /// Normal form of delta^inf s_1 ... s_k for arbitrary simples s_i.
  static NormalForm from_factors(int n, long inf, const std::vector<Simple>& factors);

  int strands() const { return n_; }
  long infimum() const { return inf_; }
  long supremum() const { return inf_ + canonical_length(); }
  long canonical_length() const { return static_cast<long>(factors_.size()); }
  const std::vector<Simple>& factors() const { return factors_; }

  bool is_identity() const { return inf_ == 0 && factors_.empty(); }
  bool is_delta_power() const { return factors_.empty(); }

  /// x * s for a simple s, restoring left-weightedness by one right-to-left sweep.
  void right_multiply(const Simple& s);
  /// x * delta^k = delta^k tau^k(x).
  void right_multiply_delta(long k);

  /// Checks the stored form: factors in (1, delta), consecutive pairs left-weighted.
  bool is_valid() const;

  long exponent_sum() const;
  Permutation permutation() const;
  /// Expands to a band-generator word (delta powers as delta words).
  BraidWord word() const;

  /// "d^3 · [4,3,2,1]".
  std::string to_string() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  /// Structural order for set membership; see canonical_less for output order.
  friend bool operator<(const NormalForm& x, const NormalForm& y);

 private:
  int n_;
  long inf_ = 0;
  std::vector<Simple> factors_;
};

/// Output order: (inf, canonical text) lexicographically.
bool canonical_less(const NormalForm& x, const NormalForm& y);

NormalForm normalize(const BraidWord& w);
NormalForm multiply(const NormalForm& x, const NormalForm& y);
NormalForm invert(const NormalForm& x);
NormalForm power(const NormalForm& x, long m);
inline bool equals(const NormalForm& x, const NormalForm& y) { return x == y; }
/// tau^k(x) = delta^-k x delta^k.
NormalForm tau_nf(const NormalForm& x, long k);
/// g^-1 x g.
NormalForm conjugate(const NormalForm& x, const NormalForm& g);
/// s^-1 x s for a simple s.
NormalForm conjugate(const NormalForm& x, const Simple& s);

/// A result together with the element c such that c^-1 x c = result.
struct Conjugation {
  NormalForm result;
  NormalForm conjugator;
};

struct ConjugatorTrace {
  std::vector<NormalForm> steps;
  NormalForm product;

  explicit ConjugatorTrace(int n) : product(NormalForm::identity(n)) {}
  void push(const NormalForm& step) {
    steps.push_back(step);
    product = multiply(product, step);
  }
};

/// delta^r a_2 ... a_l tau^-r(a_1), conjugator tau^-r(a_1). Identity move when l = 0.
Conjugation cycling(const NormalForm& x);
/// a_l delta^r a_1 ... a_{l-1}, conjugator a_l^-1. Identity move when l = 0.
Conjugation decycling(const NormalForm& x);
/// Conjugation by tau^-u(prefix) where prefix <= a_1 and u = inf(x).
/// Throws std::invalid_argument if prefix is not a prefix of a_1 or l = 0.
Conjugation partial_cycling(const NormalForm& x, const Simple& prefix);

inline constexpr long kDefaultCyclingCap = 100000;

/// An element of the super summit set of x plus the accumulated conjugator.
std::pair<NormalForm, ConjugatorTrace> sss_representative(const NormalForm& x,
                                                          long cap = kDefaultCyclingCap);

inline constexpr int kDefaultBruteForceBound = 9;

/// Closure of sss_representative(x) under conjugation by every simple element,
/// keeping conjugates with the same inf and sup. Canonically sorted.
std::vector<NormalForm> sss_brute_force(const NormalForm& x, int bound = kDefaultBruteForceBound);
/// Single-threaded reference for sss_brute_force.
std::vector<NormalForm> sss_brute_force_serial(const NormalForm& x,
                                               int bound = kDefaultBruteForceBound);

}  // namespace dualbraid
