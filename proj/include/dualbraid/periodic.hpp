#pragma once

// Conjugacy decision and search for periodic braids: conjugates of powers of
// delta and of epsilon = delta s1.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualbraid/ncp.hpp"
#include "dualbraid/normal_form.hpp"

namespace dualbraid {

struct PeriodicClass {
  enum class Kind { delta, epsilon, central, non_periodic };
  Kind kind = Kind::non_periodic;
  /// delta: conjugate to delta^m; epsilon: conjugate to epsilon^m;
  /// central: equal to delta^m with n | m.
  long m = 0;

  friend bool operator==(const PeriodicClass&, const PeriodicClass&) = default;
};

std::string to_string(PeriodicClass::Kind kind);

PeriodicClass classify_periodic(const NormalForm& x);

/// epsilon^k in normal form: delta^k [k+1,...,1] reduced through powers of the
/// center when k >= n-1.
NormalForm epsilon_power(int n, long k);

struct ExponentReduction {
  long d = 0;
  long p = 0;
  long q = 0;
};

/// d = gcd(k, n-1) with (n-1) p + k q = d; smallest |q|, then smallest |p|,
/// then positive q. Throws std::invalid_argument for k = 0.
ExponentReduction reduce_exponent(long k, int n);

/// delta^{np} x^q.
NormalForm transport(const NormalForm& x, long p, long q);

/// Thrown when a supposed super summit element of epsilon^d fails a step of
/// the characterization.
class CharacterizationError : public std::runtime_error {
 public:
  enum class Claim {
    not_one_pure,      // pi_x(1) != 1, or no unique fixed point
    shape,             // inf != d or len != 1
    not_epsilon,       // d = 1 and x != epsilon
    first_block,       // the block of 1 does not end at d+1
    support,           // a block straddles two of the sets S_k
    condition_product  // b_0 tau^-d(b_1) ... != [d+1,...,2]
  };
  CharacterizationError(Claim claim, const std::string& what)
      : std::runtime_error(what), claim_(claim) {}
  Claim claim() const noexcept { return claim_; }

 private:
  Claim claim_;
};

std::string to_string(CharacterizationError::Claim claim);

/// For x in the super summit set of epsilon^d: the shift u in 0..n-1 and
/// tau^u(x), the 1-pure conjugate. Throws CharacterizationError(not_one_pure)
/// unless pi_x has exactly one fixed point.
std::pair<long, NormalForm> purify(const NormalForm& x);

/// a = a(d+1,1) b_0 ... b_{r-1} with b_k supported on S_k = kd + {2..d+1}.
struct Decomposition {
  int n = 0;
  int d = 0;
  int r = 0;
  std::vector<Simple> b;

  /// The simple a = a(d+1,1) b_0 ... b_{r-1}.
  Simple simple() const;
  /// delta^d a.
  NormalForm element() const;
};

/// Decomposes a 1-pure super summit element of epsilon^d (n = rd + 1).
/// Throws CharacterizationError naming the first failed claim.
Decomposition characterize(const NormalForm& x, int d);

/// c = tau^-d(b_1...b_{r-1}) tau^-2d(b_2...b_{r-1}) ... tau^-(r-1)d(b_{r-1}),
/// checked to satisfy c^-1 alpha c = epsilon^d for alpha = dec.element().
Simple conjugator_from_decomposition(const Decomposition& dec);

struct ConjugacyCertificate {
  int n = 0;
  long k = 0;
  /// "epsilon", "delta" or "central".
  std::string target;
  NormalForm gamma{2};
  bool verified = false;
};

/// Either a certificate or the reason the input is not conjugate to the target.
struct CspOutcome {
  std::optional<ConjugacyCertificate> certificate;
  std::string reason;

  bool conjugate() const { return certificate.has_value(); }
};

/// Finds gamma with gamma^-1 x gamma = epsilon^k.
CspOutcome solve_csp(const NormalForm& x, long k);
/// Finds gamma with gamma^-1 x gamma = delta^m.
CspOutcome solve_csp_delta(const NormalForm& x, long m);

/// f(x) = x^{k/d}. Throws std::invalid_argument unless d divides k.
NormalForm stable_map_f(const NormalForm& x, long k, long d);
/// g(x) = delta^{np} x^q.
NormalForm stable_map_g(const NormalForm& x, int n, long p, long q);

/// Whether x (a conjugate of epsilon^d) lies in the stable super summit set.
bool is_stable_sss(const NormalForm& x, int d);

/// S_k = kd + {2, ..., d+1} for k = 0..(n-1)/d - 1.
std::vector<std::vector<int>> round_reduction_blocks(int n, int d);

}  // namespace dualbraid
