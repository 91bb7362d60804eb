#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ordcount/poset.hpp"

using namespace ordcount;

namespace {

// All posets on {0..n-1}, n small, by filtering relation matrices.
std::vector<Poset> all_posets(int n) {
  std::vector<Poset> out;
  int pairs = n * (n - 1);
  for (int mask = 0; mask < (1 << pairs); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j)
          leq[i][j] = true;
        else
          leq[i][j] = (mask >> bit++) & 1;
      }
    try {
      out.emplace_back(n, [&](int i, int j) { return leq[i][j]; });
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("poset construction validates axioms") {
  CHECK_NOTHROW(Poset::chain(5));
  CHECK_NOTHROW(Poset::antichain(4));
  CHECK_THROWS_AS(Poset(2, [](int, int) { return true; }),
                  std::invalid_argument);  // not antisymmetric
}

TEST_CASE("lower/upper complements on chains") {
  Poset c = Poset::chain(3);
  CHECK(lower_complement(c, 0) == full_subset(3));  // vacuous forall
  CHECK(upper_complement(c, 0) == full_subset(3));
  CHECK(lower_complement(c, subset_with(0, 2)) == 0b011);
  CHECK(lower_complement(c, 0b101) == 0);
  CHECK(upper_complement(c, subset_with(0, 0)) == 0b110);
  Poset a = Poset::antichain(2);
  CHECK(upper_complement(a, subset_with(0, 0)) == 0);
}

TEST_CASE("incremented join and successor on chains") {
  Poset c = Poset::chain(3);
  CHECK(incremented_join(c, subset_with(0, 0)) == 1);
  CHECK_FALSE(incremented_join(c, subset_with(0, 2)).has_value());
  CHECK(successor(c, 0) == 1);
  CHECK_FALSE(successor(c, 2).has_value());
}

TEST_CASE("incremented join is never in S; Galois connection") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : all_posets(n)) {
      for (Subset s = 0; s <= full_subset(n); ++s) {
        auto ij = incremented_join(p, s);
        if (ij) CHECK_FALSE(subset_has(s, *ij));
        Subset lo = lower_complement(p, s);
        Subset up = upper_complement(p, s);
        CHECK((s & ~upper_complement(p, lo)) == 0);  // S within (S-down)-up
        CHECK((s & ~lower_complement(p, up)) == 0);
        if (s == full_subset(n)) break;
      }
    }
  }
}

TEST_CASE("on total orders v+S = join of S+ when all successors exist") {
  for (int n = 1; n <= 5; ++n) {
    Poset c = Poset::chain(n);
    for (Subset s = 1; s <= full_subset(n); ++s) {
      bool all_succ = true;
      Subset splus = 0;
      for (int x : subset_elements(s)) {
        auto sx = successor(c, x);
        if (!sx) {
          all_succ = false;
          break;
        }
        splus = subset_with(splus, *sx);
      }
      if (!all_succ) continue;
      auto lhs = incremented_join(c, s);
      auto rhs = join(c, splus);
      CHECK(lhs.has_value() == rhs.has_value());
      if (lhs && rhs) CHECK(*lhs == *rhs);
    }
  }
}

TEST_CASE("L-laws pass on every finite total order") {
  for (int n = 0; n <= 6; ++n) {
    auto r = check_L_laws(Poset::chain(n));
    CHECK(r.all_passed());
  }
}

TEST_CASE("L-laws on antichain: L1-L3 vacuous, L4-L7 not applicable") {
  auto r = check_L_laws(Poset::antichain(2));
  CHECK(r.all_passed());
  CHECK(r.find("L4 x = v+ of {x}-down")->status == CheckStatus::not_applicable);
  CHECK(r.find("L7 x<y iff x+<y+")->status == CheckStatus::not_applicable);
}

TEST_CASE("any poset failing an L-law claim is non-total") {
  // contrapositive search: L1-L3 hold on all posets of size <= 4
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : all_posets(n)) {
      auto r = check_L_laws(p);
      for (const char* law : {"L1 x < x+", "L2 nothing strictly between x and x+",
                              "L3 x<y iff x+ <= y"})
        CHECK(r.find(law)->status == CheckStatus::pass);
      if (!r.all_passed()) CHECK_FALSE(p.is_total());
    }
  }
}

TEST_CASE("lemma max on chain examples") {
  Poset c = Poset::chain(3);
  // S={0,1}: max=1, v+S = 2
  CHECK(incremented_join(c, 0b011) == 2);
  auto r = check_lemma_max(c, 0b011);
  CHECK(r.all_passed());
  // S={1,2}: v+ of S-down = v+{0} = 1 = min S
  CHECK(incremented_join(c, lower_complement(c, 0b110)) == 1);
  CHECK(min_element(c, 0b110) == 1);
}

TEST_CASE("lemma max exhaustive on all posets of size <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : all_posets(n)) CHECK(check_lemma_max_all(p).all_passed());
}

TEST_CASE("lemma max exhaustive on chains up to 6") {
  for (int n = 0; n <= 6; ++n)
    CHECK(check_lemma_max_all(Poset::chain(n)).all_passed());
}
