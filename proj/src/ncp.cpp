#include "dualbraid/ncp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dualbraid {

namespace {

void check_strands(int n) {
  if (n < 1 || n > kMaxStrands)
    throw std::invalid_argument("strand count " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxStrands));
}

void check_same(const NoncrossingPartition& a, const NoncrossingPartition& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("simple elements over different n");
}

// Stack scan: a revisited label must be the innermost open block.
bool labels_noncrossing(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> remaining(n, 0);
  for (int l : labels) ++remaining[l];
  std::vector<int> stack;
  std::vector<char> opened(n, 0);
  for (int i = 0; i < n; ++i) {
    const int l = labels[i];
    if (opened[l]) {
      if (stack.empty() || stack.back() != l) return false;
    } else {
      opened[l] = 1;
      stack.push_back(l);
    }
    if (--remaining[l] == 0) stack.pop_back();
  }
  return true;
}

}  // namespace

NoncrossingPartition NoncrossingPartition::identity(int n) {
  check_strands(n);
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return NoncrossingPartition(std::move(p));
}

NoncrossingPartition NoncrossingPartition::delta(int n) {
  check_strands(n);
  std::vector<std::uint8_t> p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>((i + n - 1) % n);
  return NoncrossingPartition(std::move(p));
}

// Labels may be any values in 0..n-1; points sharing a label form a block.
NoncrossingPartition NoncrossingPartition::from_labels(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> top(n, -1), prev(n, -1);
  for (int i = 0; i < n; ++i) top[labels[i]] = i;
  std::vector<std::uint8_t> p(n);
  for (int i = 0; i < n; ++i) {
    const int l = labels[i];
    p[i] = static_cast<std::uint8_t>(prev[l] < 0 ? top[l] : prev[l]);
    prev[l] = i;
  }
  return NoncrossingPartition(std::move(p));
}

NoncrossingPartition NoncrossingPartition::from_blocks(const std::vector<std::vector<int>>& blocks,
                                                       int n) {
  check_strands(n);
  std::vector<int> labels(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidPartition("empty block");
    for (int v : blocks[b]) {
      if (v < 1 || v > n)
        throw InvalidPartition("point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (labels[v - 1] >= 0) throw InvalidPartition("point " + std::to_string(v) + " repeated");
      labels[v - 1] = blocks[b].front() - 1;
    }
  }
  for (int i = 0; i < n; ++i)
    if (labels[i] < 0) throw InvalidPartition("point " + std::to_string(i + 1) + " not covered");
  if (!labels_noncrossing(labels)) throw InvalidPartition("blocks cross");
  return from_labels(labels);
}

NoncrossingPartition NoncrossingPartition::from_permutation(const Permutation& perm) {
  const int n = perm.size();
  check_strands(n);
  std::vector<int> labels(n, -1);
  for (int i = 0; i < n; ++i) {
    if (labels[i] >= 0) continue;
    for (int j = i; labels[j] < 0; j = perm.images()[j]) labels[j] = i;
  }
  if (!labels_noncrossing(labels)) throw InvalidPartition("permutation cycles cross");
  NoncrossingPartition s = from_labels(labels);
  if (s.permutation() != perm)
    throw InvalidPartition("permutation cycles are not descending cycles of their supports");
  return s;
}

NoncrossingPartition NoncrossingPartition::subsimple(const std::vector<int>& points, int n) {
  std::vector<std::vector<int>> blocks{points};
  std::vector<char> used(n + 1, 0);
  for (int v : points)
    if (v >= 1 && v <= n) used[v] = 1;
  for (int v = 1; v <= n; ++v)
    if (!used[v]) blocks.push_back({v});
  return from_blocks(blocks, n);
}

NoncrossingPartition NoncrossingPartition::generator(int i, int j, int n) {
  if (i == j) throw InvalidPartition("generator needs distinct points");
  return subsimple({i, j}, n);
}

Permutation NoncrossingPartition::permutation() const {
  return Permutation(std::vector<int>(perm_.begin(), perm_.end()));
}

std::vector<int> NoncrossingPartition::block_minima() const {
  const int n = strands();
  std::vector<int> labels(n, -1);
  for (int i = 0; i < n; ++i) {
    if (labels[i] >= 0) continue;
    for (int j = i; labels[j] < 0; j = perm_[j]) labels[j] = i;
  }
  return labels;
}

std::vector<std::vector<int>> NoncrossingPartition::blocks() const {
  const auto labels = block_minima();
  std::vector<std::vector<int>> out;
  std::vector<int> slot(strands(), -1);
  for (int i = 0; i < strands(); ++i) {
    if (labels[i] == i) {
      slot[i] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[labels[i]]].push_back(i + 1);
  }
  for (auto& b : out) std::reverse(b.begin(), b.end());
  return out;
}

int NoncrossingPartition::block_count() const {
  int count = 0;
  for (int i = 0; i < strands(); ++i) {
    // a block's minimum is the unique point whose image is not below it
    if (perm_[i] >= i) ++count;
  }
  return count;
}

bool NoncrossingPartition::is_identity() const {
  for (int i = 0; i < strands(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

bool NoncrossingPartition::is_delta() const {
  const int n = strands();
  for (int i = 0; i < n; ++i)
    if (perm_[i] != (i + n - 1) % n) return false;
  return true;
}

BraidWord NoncrossingPartition::word() const {
  BraidWord w(strands());
  for (const auto& b : blocks())
    if (b.size() > 1) w.append(subsimple_word(strands(), b));
  return w;
}

std::string NoncrossingPartition::to_string() const {
  std::string out;
  for (const auto& b : blocks()) {
    if (b.size() < 2) continue;
    out += '[';
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(b[k]);
    }
    out += ']';
  }
  return out.empty() ? "1" : out;
}

bool pair_is_simple(const BandGenerator& first, const BandGenerator& second) {
  const int p = first.upper, q = first.lower, i = second.upper, j = second.lower;
  return p < j || i <= q || (q < j && i <= p) || (j <= q && p < i);
}

bool refines(const NoncrossingPartition& a, const NoncrossingPartition& b) {
  check_same(a, b);
  const auto lb = b.block_minima();
  for (int i = 0; i < a.strands(); ++i)
    if (lb[i] != lb[a.raw()[i]]) return false;
  return true;
}

NoncrossingPartition meet(const NoncrossingPartition& a, const NoncrossingPartition& b) {
  check_same(a, b);
  const int n = a.strands();
  const auto la = a.block_minima();
  const auto lb = b.block_minima();
  std::vector<int> first(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) {
    int& f = first[static_cast<std::size_t>(la[i]) * n + lb[i]];
    if (f < 0) f = i;
    labels[i] = f;
  }
  return NoncrossingPartition::from_labels(labels);
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

NoncrossingPartition join(const NoncrossingPartition& a, const NoncrossingPartition& b) {
  check_same(a, b);
  const int n = a.strands();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int x, int y) {
    x = find_root(parent, x);
    y = find_root(parent, y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  };
  for (int i = 0; i < n; ++i) {
    unite(i, a.raw()[i]);
    unite(i, b.raw()[i]);
  }
  // Merge crossing pairs of blocks until none remain. Two blocks X, Y cross
  // iff their interleaving, read left to right, has at least four runs.
  for (bool merged = true; merged;) {
    merged = false;
    std::vector<int> roots;
    for (int i = 0; i < n; ++i)
      if (find_root(parent, i) == i) roots.push_back(i);
    for (std::size_t x = 0; x < roots.size() && !merged; ++x) {
      for (std::size_t y = x + 1; y < roots.size() && !merged; ++y) {
        int runs = 0, last = -1;
        for (int i = 0; i < n; ++i) {
          const int r = find_root(parent, i);
          if ((r == roots[x] || r == roots[y]) && r != last) {
            ++runs;
            last = r;
          }
        }
        if (runs >= 4) merged = unite(roots[x], roots[y]);
      }
    }
  }
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = find_root(parent, i);
  return NoncrossingPartition::from_labels(labels);
}

NoncrossingPartition right_complement(const NoncrossingPartition& a) {
  // pi = pi_a^-1 o pi_delta
  const int n = a.strands();
  std::vector<std::uint8_t> inv(n), p(n);
  for (int i = 0; i < n; ++i) inv[a.perm_[i]] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < n; ++i) p[i] = inv[(i + n - 1) % n];
  return NoncrossingPartition(std::move(p));
}

NoncrossingPartition left_complement(const NoncrossingPartition& a) {
  // pi = pi_delta o pi_a^-1
  const int n = a.strands();
  std::vector<std::uint8_t> inv(n), p(n);
  for (int i = 0; i < n; ++i) inv[a.perm_[i]] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>((inv[i] + n - 1) % n);
  return NoncrossingPartition(std::move(p));
}

NoncrossingPartition tau(const NoncrossingPartition& a, long power) {
  const int n = a.strands();
  const int k = static_cast<int>(((power % n) + n) % n);
  if (k == 0) return a;
  std::vector<std::uint8_t> p(n);
  for (int i = 0; i < n; ++i) p[(i + k) % n] = static_cast<std::uint8_t>((a.perm_[i] + k) % n);
  return NoncrossingPartition(std::move(p));
}

NoncrossingPartition compose_unchecked(const NoncrossingPartition& a, const NoncrossingPartition& b) {
  const int n = a.strands();
  std::vector<std::uint8_t> p(n);
  for (int i = 0; i < n; ++i) p[i] = a.perm_[b.perm_[i]];
  return NoncrossingPartition(std::move(p));
}

NoncrossingPartition left_quotient_unchecked(const NoncrossingPartition& a,
                                             const NoncrossingPartition& b) {
  const int n = a.strands();
  std::vector<std::uint8_t> inv(n), p(n);
  for (int i = 0; i < n; ++i) inv[a.perm_[i]] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < n; ++i) p[i] = inv[b.perm_[i]];
  return NoncrossingPartition(std::move(p));
}

std::optional<NoncrossingPartition> simple_product(const NoncrossingPartition& a,
                                                   const NoncrossingPartition& b) {
  check_same(a, b);
  if (!refines(b, right_complement(a))) return std::nullopt;
  return compose_unchecked(a, b);
}

std::optional<NoncrossingPartition> left_quotient(const NoncrossingPartition& a,
                                                  const NoncrossingPartition& b) {
  check_same(a, b);
  if (!refines(a, b)) return std::nullopt;
  return left_quotient_unchecked(a, b);
}

std::vector<NoncrossingPartition> enumerate_simples(int n, int bound) {
  if (n < 1) throw std::invalid_argument("enumerate_simples: n must be positive");
  if (n > bound || n > kMaxStrands)
    throw BoundExceeded("enumerate_simples: n=" + std::to_string(n) + " exceeds bound " +
                        std::to_string(bound));
  // Depth-first over restricted growth strings. Point i either opens a new
  // block or joins a block on the open stack, closing every block above it.
  std::vector<NoncrossingPartition> out;
  out.reserve(static_cast<std::size_t>(catalan(n)));
  std::vector<int> labels(n);
  std::vector<int> stack;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(NoncrossingPartition::from_labels(labels));
      return;
    }
    // joining an existing block, innermost last so labels grow in order
    for (std::size_t s = 0; s < stack.size(); ++s) {
      std::vector<int> saved(stack.begin() + static_cast<long>(s) + 1, stack.end());
      stack.resize(s + 1);
      labels[i] = stack[s];
      self(self, i + 1);
      stack.insert(stack.end(), saved.begin(), saved.end());
    }
    labels[i] = i;
    stack.push_back(i);
    self(self, i + 1);
    stack.pop_back();
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.block_minima() < y.block_minima();
  });
  return out;
}

std::vector<NoncrossingPartition> enumerate_below(const NoncrossingPartition& a) {
  const int n = a.strands();
  const auto blocks = a.blocks();
  std::vector<std::vector<NoncrossingPartition>> local;
  for (const auto& b : blocks) local.push_back(enumerate_simples(static_cast<int>(b.size()), kMaxStrands));
  std::vector<NoncrossingPartition> out;
  std::vector<std::size_t> choice(blocks.size(), 0);
  for (;;) {
    std::vector<int> labels(n);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      // blocks are descending; relabel local point m (0-based) to the
      // (m+1)-th smallest point of the block
      const auto& b = blocks[k];
      const auto mins = local[k][choice[k]].block_minima();
      const int size = static_cast<int>(b.size());
      for (int m = 0; m < size; ++m) labels[b[size - 1 - m] - 1] = b[size - 1 - mins[m]] - 1;
    }
    out.push_back(NoncrossingPartition::from_labels(labels));
    std::size_t k = blocks.size();
    while (k > 0) {
      --k;
      if (++choice[k] < local[k].size()) break;
      choice[k] = 0;
      if (k == 0) return out;
    }
    if (blocks.empty()) return out;
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > UINT64_MAX) throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t zeta(int d, int r) {
  if (d < 1 || r < 1) throw std::invalid_argument("zeta needs d >= 1 and r >= 1");
  const std::uint64_t c = binomial(static_cast<std::uint64_t>(d) * r, d - 1);
  if (c % d != 0) throw std::logic_error("zeta: binomial not divisible by d");
  return c / d;
}

std::uint64_t catalan(int n) {
  // Catalan(n) = C(2n, n)/(n+1) = zeta(n, 2)
  return zeta(n, 2);
}

std::vector<std::vector<NoncrossingPartition>> enumerate_compositions(
    const NoncrossingPartition& target, int r) {
  if (r < 1) throw std::invalid_argument("enumerate_compositions needs r >= 1");
  const int n = target.strands();
  const auto below = enumerate_below(target);
  std::vector<std::vector<NoncrossingPartition>> out;
  // chain[0] = 1, chain[r] = target
  std::vector<NoncrossingPartition> chain(static_cast<std::size_t>(r) + 1);
  chain[0] = NoncrossingPartition::identity(n);
  chain[r] = target;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == r) {
      std::vector<NoncrossingPartition> comp;
      comp.reserve(r);
      for (int j = 0; j < r; ++j) comp.push_back(left_quotient_unchecked(chain[j], chain[j + 1]));
      out.push_back(std::move(comp));
      return;
    }
    for (const auto& c : below) {
      if (!refines(chain[k - 1], c)) continue;
      chain[k] = c;
      self(self, k + 1);
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace dualbraid
