#pragma once

#include <vector>

#include "dualbraid/ncp.hpp"
#include "dualbraid/normal_form.hpp"

namespace support {

/// Simple from its non-singleton blocks.
inline dualbraid::Simple S(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<std::vector<int>> all = blocks;
  std::vector<char> used(n + 1, 0);
  for (const auto& b : blocks)
    for (int v : b) used[v] = 1;
  for (int v = 1; v <= n; ++v)
    if (!used[v]) all.push_back({v});
  return dualbraid::Simple::from_blocks(all, n);
}

inline dualbraid::NormalForm nf(const char* text, int n) {
  return dualbraid::normalize(dualbraid::parse_word(text, n));
}

/// c^-1 x c computed directly from the group operations.
inline dualbraid::NormalForm conj(const dualbraid::NormalForm& x, const dualbraid::NormalForm& c) {
  return dualbraid::multiply(dualbraid::invert(c), dualbraid::multiply(x, c));
}

}  // namespace support
