#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "dualbraid/ncp.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dualbraid;
using support::S;

namespace {

oracle::Labels labels_of(const Simple& s) {
  const auto mins = s.block_minima();
  return oracle::Labels(mins.begin(), mins.end());
}

}  // namespace

TEST_CASE("from_blocks") {
  const Simple a = Simple::from_blocks({{12, 10, 1}, {9, 8, 2}, {7, 6, 4, 3}, {11}, {5}}, 12);
  CHECK(a.to_string() == "[12,10,1][9,8,2][7,6,4,3]");
  CHECK(a.blocks() ==
        std::vector<std::vector<int>>{{12, 10, 1}, {9, 8, 2}, {7, 6, 4, 3}, {5}, {11}});
  CHECK_THROWS_AS(Simple::from_blocks({{1, 3}, {2, 4}}, 4), InvalidPartition);
  CHECK_THROWS_AS(Simple::from_blocks({{1, 2}, {2, 3}}, 3), InvalidPartition);
  CHECK_THROWS_AS(Simple::from_blocks({{1, 2}}, 3), InvalidPartition);
  CHECK_THROWS_AS(Simple::from_blocks({{1, 4}, {}, {2, 3}}, 4), InvalidPartition);
  const Simple id = Simple::from_blocks({{1}, {2}, {3}, {4}, {5}}, 5);
  CHECK(id.is_identity());
  CHECK(id == Simple::identity(5));
  CHECK(id.to_string() == "1");
  CHECK(Simple::from_blocks({{1, 2, 3, 4}}, 4).is_delta());
}

TEST_CASE("from_permutation rejects non-simple permutations") {
  CHECK(Simple::from_permutation(Permutation::delta(5)).is_delta());
  // ascending 3-cycle 1->2->3->1
  CHECK_THROWS_AS(Simple::from_permutation(Permutation({1, 2, 0})), InvalidPartition);
  // crossing transpositions (1 3)(2 4)
  CHECK_THROWS_AS(Simple::from_permutation(Permutation({2, 3, 0, 1})), InvalidPartition);
}

TEST_CASE("pair_is_simple examples") {
  CHECK(pair_is_simple({2, 1, 1}, {4, 3, 1}));
  CHECK_FALSE(pair_is_simple({3, 1, 1}, {4, 2, 1}));
  CHECK(pair_is_simple({4, 1, 1}, {4, 2, 1}));
  CHECK_FALSE(pair_is_simple({2, 1, 1}, {2, 1, 1}));
}

TEST_CASE("pair_is_simple agrees with the simple elements") {
  for (int n = 2; n <= 6; ++n) {
    // oracle: a positive 2-letter word is simple iff some simple shares its
    // permutation and has exponent sum 2
    std::map<std::vector<std::uint8_t>, int> by_perm;
    for (const auto& s : enumerate_simples(n)) by_perm[s.raw()] = s.exponent_sum();
    for (int p = 2; p <= n; ++p)
      for (int q = 1; q < p; ++q)
        for (int i = 2; i <= n; ++i)
          for (int j = 1; j < i; ++j) {
            const auto perm = oracle::transposition_product(n, {{p, q}, {i, j}});
            std::vector<std::uint8_t> key;
            for (int v : perm) key.push_back(static_cast<std::uint8_t>(v - 1));
            const auto it = by_perm.find(key);
            const bool simple = it != by_perm.end() && it->second == 2;
            CHECK(pair_is_simple({p, q, 1}, {i, j, 1}) == simple);
            const Simple a = Simple::generator(p, q, n), b = Simple::generator(i, j, n);
            CHECK(simple_product(a, b).has_value() == simple);
          }
  }
}

TEST_CASE("canonical words of simples are pairwise simple") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& s : enumerate_simples(n)) {
      const BraidWord word = s.word();
      const auto& w = word.letters();
      CHECK(static_cast<int>(w.size()) == s.exponent_sum());
      CHECK(permutation_of(s.word()) == s.permutation());
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) CHECK(pair_is_simple(w[i], w[j]));
    }
}

TEST_CASE("refines examples") {
  const Simple d4 = Simple::delta(4);
  for (const auto& b : enumerate_simples(4)) {
    CHECK(refines(Simple::identity(4), b));
    CHECK(refines(b, d4));
  }
  CHECK_FALSE(refines(S({{2, 1}}, 3), S({{3, 2}}, 3)));
}

TEST_CASE("generator below a simple iff both points share a block") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& a : enumerate_simples(n)) {
      const auto mins = a.block_minima();
      for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
          CHECK(refines(Simple::generator(i, j, n), a) == (mins[i - 1] == mins[j - 1]));
    }
}

TEST_CASE("meet and join examples") {
  for (const auto& x : enumerate_simples(4)) {
    CHECK(meet(x, Simple::delta(4)) == x);
    CHECK(join(x, Simple::identity(4)) == x);
  }
  CHECK(meet(S({{3, 2}}, 3), S({{3, 1}}, 3)).is_identity());
  CHECK(join(S({{2, 1}}, 3), S({{3, 2}}, 3)) == S({{3, 2, 1}}, 3));
  CHECK(join(S({{3, 1}}, 4), S({{4, 2}}, 4)).is_delta());
}

TEST_CASE("meet and join are the greatest lower and least upper bounds") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_simples(n);
    std::vector<oracle::Labels> lab;
    for (const auto& s : all) lab.push_back(labels_of(s));
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < all.size(); ++b) {
        // brute force: the unique bound comparable with every other bound
        std::vector<std::size_t> lower, upper;
        for (std::size_t c = 0; c < all.size(); ++c) {
          if (oracle::is_refinement(lab[c], lab[a]) && oracle::is_refinement(lab[c], lab[b]))
            lower.push_back(c);
          if (oracle::is_refinement(lab[a], lab[c]) && oracle::is_refinement(lab[b], lab[c]))
            upper.push_back(c);
        }
        std::size_t glb = all.size(), lub = all.size();
        for (auto c : lower) {
          bool top = true;
          for (auto e : lower) top = top && oracle::is_refinement(lab[e], lab[c]);
          if (top) glb = c;
        }
        for (auto c : upper) {
          bool bottom = true;
          for (auto e : upper) bottom = bottom && oracle::is_refinement(lab[c], lab[e]);
          if (bottom) lub = c;
        }
        REQUIRE(glb < all.size());
        REQUIRE(lub < all.size());
        CHECK(meet(all[a], all[b]) == all[glb]);
        CHECK(join(all[a], all[b]) == all[lub]);
      }
  }
}

TEST_CASE("lattice laws") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_simples(n);
    for (const auto& a : all) {
      CHECK(meet(a, a) == a);
      CHECK(join(a, a) == a);
      for (const auto& b : all) {
        const Simple m = meet(a, b), j = join(a, b);
        CHECK(m == meet(b, a));
        CHECK(j == join(b, a));
        CHECK(meet(a, j) == a);
        CHECK(join(a, m) == a);
        const bool r = refines(a, b);
        CHECK(r == (m == a));
        CHECK(r == (j == b));
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_simples(n);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) {
          CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
          CHECK(join(join(a, b), c) == join(a, join(b, c)));
        }
  }
}

TEST_CASE("tau preserves the lattice operations") {
  for (int n = 2; n <= 6; ++n) {
    const auto all = enumerate_simples(n);
    for (const auto& a : all) {
      CHECK(tau(a, n) == a);
      CHECK(tau(tau(a, 3), -3) == a);
      for (const auto& b : all) {
        CHECK(refines(a, b) == refines(tau(a), tau(b)));
        CHECK(tau(meet(a, b)) == meet(tau(a), tau(b)));
        CHECK(tau(join(a, b)) == join(tau(a), tau(b)));
      }
    }
  }
}

TEST_CASE("tau examples") {
  CHECK(tau(S({{2, 1}}, 4), 1) == S({{3, 2}}, 4));
  CHECK(tau(S({{10, 8}}, 13), -6) == S({{4, 2}}, 13));
  CHECK(tau(S({{4, 1}}, 4), 1) == S({{2, 1}}, 4));
}

TEST_CASE("complements") {
  CHECK(right_complement(Simple::identity(5)).is_delta());
  CHECK(right_complement(Simple::delta(5)).is_identity());
  CHECK(right_complement(S({{2, 1}}, 3)) == S({{3, 1}}, 3));
  CHECK(left_complement(Simple::delta(5)).is_identity());
  CHECK(left_complement(S({{2, 1}}, 3)) == S({{3, 2}}, 3));

  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_simples(n);
    std::set<Simple> images;
    for (const auto& a : all) {
      const Simple rc = right_complement(a);
      const auto prod = simple_product(a, rc);
      REQUIRE(prod.has_value());
      CHECK(prod->is_delta());
      CHECK(right_complement(rc) == tau(a));
      CHECK(left_complement(a) == tau(rc, -1));
      const auto lprod = simple_product(left_complement(a), a);
      REQUIRE(lprod.has_value());
      CHECK(lprod->is_delta());
      images.insert(rc);
      // blocks reconstructed from the permutation are noncrossing and carry
      // the right number of generators
      CHECK(Simple::from_permutation(rc.permutation()) == rc);
      CHECK(rc.exponent_sum() == n - 1 - a.exponent_sum());
    }
    CHECK(images.size() == all.size());
  }
}

TEST_CASE("simple_product") {
  CHECK(simple_product(S({{3, 2}}, 13), S({{4, 2}}, 13)) == S({{4, 3, 2}}, 13));
  CHECK_FALSE(simple_product(S({{2, 1}}, 2), S({{2, 1}}, 2)).has_value());
  for (int n = 2; n <= 5; ++n) {
    const auto all = enumerate_simples(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto p = simple_product(a, b);
        if (!p) continue;
        // agrees with the group product read off the generator words
        CHECK(p->permutation() == permutation_of(a.word() * b.word()));
        CHECK(p->exponent_sum() == a.exponent_sum() + b.exponent_sum());
        CHECK(left_quotient(a, *p) == b);
      }
  }
}

TEST_CASE("enumerate_simples") {
  const auto three = enumerate_simples(3);
  REQUIRE(three.size() == 5);
  std::set<std::string> names;
  for (const auto& s : three) names.insert(s.to_string());
  CHECK(names == std::set<std::string>{"1", "[2,1]", "[3,2]", "[3,1]", "[3,2,1]"});
  CHECK(enumerate_simples(1).size() == 1);
  CHECK(enumerate_simples(4).size() == 14);
  CHECK_THROWS_AS(enumerate_simples(15), BoundExceeded);

  for (int n = 1; n <= 8; ++n) {
    std::set<oracle::Labels> expected;
    for (const auto& l : oracle::noncrossing_partitions(n)) {
      // canonical labels: minimum of each block
      oracle::Labels m(l.size());
      for (std::size_t i = 0; i < l.size(); ++i) {
        std::size_t j = 0;
        while (l[j] != l[i]) ++j;
        m[i] = static_cast<int>(j);
      }
      expected.insert(m);
    }
    std::set<oracle::Labels> got;
    for (const auto& s : enumerate_simples(n)) got.insert(labels_of(s));
    CHECK(got == expected);
  }
  // frozen from the brute-force filter above
  CHECK(oracle::noncrossing_partitions(4).size() == 14);
  for (int n = 1; n <= 10; ++n) CHECK(enumerate_simples(n).size() == catalan(n));
}

TEST_CASE("enumerate_below") {
  const Simple a = S({{12, 10, 1}, {9, 8, 2}, {7, 6, 4, 3}}, 12);
  const auto below = enumerate_below(a);
  CHECK(below.size() == 5 * 5 * 14);
  for (const auto& b : below) CHECK(refines(b, a));
  CHECK(std::set<Simple>(below.begin(), below.end()).size() == below.size());
}

TEST_CASE("zeta") {
  for (int r = 1; r <= 10; ++r) CHECK(zeta(1, r) == 1);
  // brute-force multi-chain count in NC(3), frozen
  CHECK(oracle::multichains(3, 4) == 22);
  CHECK(zeta(3, 4) == 22);
  for (int d = 1; d <= 8; ++d) CHECK(zeta(d, 2) == enumerate_simples(d).size());
  for (int d = 1; d <= 5; ++d)
    for (int r = 1; r <= 4; ++r) CHECK(zeta(d, r) == oracle::multichains(d, r));
  CHECK(zeta(6, 2) == 132);
  CHECK_THROWS(zeta(0, 3));
}

TEST_CASE("enumerate_compositions") {
  const auto trivial = enumerate_compositions(Simple::identity(4), 3);
  REQUIRE(trivial.size() == 1);
  for (const auto& c : trivial[0]) CHECK(c.is_identity());

  const Simple d3 = Simple::delta(3);
  const auto two = enumerate_compositions(d3, 2);
  CHECK(two.size() == 5);
  for (const auto& c : two) CHECK(c[1] == right_complement(c[0]));

  CHECK(enumerate_compositions(d3, 4).size() == 22);
  for (int d = 1; d <= 5; ++d)
    for (int r = 1; r <= 4; ++r) {
      const auto comps = enumerate_compositions(Simple::delta(d), r);
      CHECK(comps.size() == zeta(d, r));
      std::set<std::vector<Simple>> unique(comps.begin(), comps.end());
      CHECK(unique.size() == comps.size());
      for (const auto& c : comps) {
        Simple acc = Simple::identity(d);
        for (const auto& f : c) {
          auto next = simple_product(acc, f);
          REQUIRE(next.has_value());
          acc = *next;
        }
        CHECK(acc.is_delta());
      }
    }
}
