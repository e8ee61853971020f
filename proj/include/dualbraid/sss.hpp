#pragma once

// Closed-form generation and counting of the super summit set of epsilon^d
// in B_n, n = rd + 1.

#include <cstdint>
#include <vector>

#include "dualbraid/normal_form.hpp"

namespace dualbraid {

struct SssTable {
  int n = 0;
  int d = 0;
  int r = 0;
  /// Sorted by canonical_less, no duplicates.
  std::vector<NormalForm> elements;
};

inline constexpr std::uint64_t kDefaultSssCountBound = 5'000'000;

/// n C(n-1, d-1) / d. Requires d | n-1 and (n-1)/d >= 2.
std::uint64_t count_sss(int n, int d);

/// The 1-pure elements delta^d a(d+1,1) b_0 ... b_{r-1}, one per
/// r-composition of [d+1, ..., 2], in composition order.
std::vector<NormalForm> one_pure_sss(int n, int d);

/// All tau-shifts of the 1-pure elements. Throws BoundExceeded past `bound`
/// elements and std::logic_error on a duplicate or a count mismatch.
SssTable enumerate_sss(int n, int d, std::uint64_t bound = kDefaultSssCountBound);
/// Single-threaded reference for enumerate_sss.
SssTable enumerate_sss_serial(int n, int d, std::uint64_t bound = kDefaultSssCountBound);

/// True iff x purifies and characterizes as a super summit element of epsilon^d.
bool verify_membership(const NormalForm& x, int n, int d);

}  // namespace dualbraid
