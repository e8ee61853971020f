#pragma once

// Test-only brute-force references. Nothing here calls the lattice or
// normal-form code it is used to check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "dualbraid/braid_word.hpp"

namespace oracle {

using Labels = std::vector<int>;  // restricted growth string, 0-based block ids

/// Every set partition of {0..n-1} as a restricted growth string.
inline std::vector<Labels> set_partitions(int n) {
  std::vector<Labels> out;
  Labels cur(n, 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      cur[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) return {Labels{}};
  cur[0] = 0;
  rec(rec, 1, 1);
  return out;
}

/// The defining forbidden quadruple i1 < j1 < i2 < j2.
inline bool crosses(const Labels& l) {
  const int n = static_cast<int>(l.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (l[a] == l[c] && l[b] == l[d] && l[a] != l[b]) return true;
  return false;
}

inline std::vector<Labels> noncrossing_partitions(int n) {
  std::vector<Labels> out;
  for (auto& p : set_partitions(n))
    if (!crosses(p)) out.push_back(p);
  return out;
}

/// Every block of a inside a block of b.
inline bool is_refinement(const Labels& a, const Labels& b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[i] == a[j] && b[i] != b[j]) return false;
  return true;
}

/// Number of multi-chains p_1 <= ... <= p_{r-1} in NC(d) (the top is forced).
inline std::uint64_t multichains(int d, int r) {
  const auto nc = noncrossing_partitions(d);
  // count[k][x] = chains of length k ending at x
  std::vector<std::uint64_t> count(nc.size(), 1);
  if (r == 1) return 1;
  for (int len = 2; len <= r - 1; ++len) {
    std::vector<std::uint64_t> next(nc.size(), 0);
    for (std::size_t y = 0; y < nc.size(); ++y)
      for (std::size_t x = 0; x < nc.size(); ++x)
        if (is_refinement(nc[x], nc[y])) next[y] += count[x];
    count = next;
  }
  std::uint64_t total = 0;
  for (auto c : count) total += c;
  return total;
}

/// Permutation of a product of transpositions, right factor first.
inline std::vector<int> transposition_product(int n, const std::vector<std::pair<int, int>>& ts) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  for (int i = 1; i <= n; ++i) {
    int x = i;
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
      if (x == it->first)
        x = it->second;
      else if (x == it->second)
        x = it->first;
    }
    p[i - 1] = x;
  }
  return p;
}

/// Free group word over x_1..x_n; letter -k is x_k^-1.
using FreeWord = std::vector<int>;

inline void free_push(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter)
    w.pop_back();
  else
    w.push_back(letter);
}

/// Images of x_1..x_n under the Artin action of a band word, each band
/// letter expanded as a(i,j) = s_{i-1}..s_{j+1} s_j s_{j+1}^-1..s_{i-1}^-1.
/// Faithful, so two words are equal braids iff their images agree.
inline std::vector<FreeWord> artin_action(const dualbraid::BraidWord& w) {
  const int n = w.strands();
  std::vector<FreeWord> img(n);
  for (int k = 0; k < n; ++k) img[k] = {k + 1};
  auto apply_sigma = [&](int i, int sign) {
    // images of the generators under s_i^sign
    auto gen = [&](int k) -> FreeWord {
      if (sign > 0) {
        if (k == i) return {i, i + 1, -i};
        if (k == i + 1) return {i};
      } else {
        if (k == i) return {i + 1};
        if (k == i + 1) return {-(i + 1), i, i + 1};
      }
      return {k};
    };
    for (auto& word : img) {
      FreeWord out;
      for (int letter : word) {
        FreeWord g = gen(std::abs(letter));
        if (letter > 0) {
          for (int x : g) free_push(out, x);
        } else {
          for (auto it = g.rbegin(); it != g.rend(); ++it) free_push(out, -*it);
        }
      }
      word = std::move(out);
    }
  };
  for (const auto& g : w.letters()) {
    std::vector<std::pair<int, int>> sigmas;
    for (int k = g.upper - 1; k > g.lower; --k) sigmas.emplace_back(k, 1);
    sigmas.emplace_back(g.lower, 1);
    for (int k = g.lower + 1; k < g.upper; ++k) sigmas.emplace_back(k, -1);
    if (g.sign < 0) {
      std::reverse(sigmas.begin(), sigmas.end());
      for (auto& s : sigmas) s.second = -s.second;
    }
    for (auto [i, sign] : sigmas) apply_sigma(i, sign);
  }
  return img;
}

inline dualbraid::BraidWord random_word(std::mt19937_64& rng, int n, int max_len,
                                        bool allow_negative = true) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> pt(1, n);
  std::bernoulli_distribution neg(0.5);
  dualbraid::BraidWord w(n);
  const int len = len_dist(rng);
  for (int k = 0; k < len; ++k) {
    int i = pt(rng), j = pt(rng);
    while (j == i) j = pt(rng);
    w.push_back({std::max(i, j), std::min(i, j), (allow_negative && neg(rng)) ? -1 : 1});
  }
  return w;
}

}  // namespace oracle
