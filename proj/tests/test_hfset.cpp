#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ordcount/hfset.hpp"

using namespace ordcount;

namespace {

// Independent structural-equality oracle on raw (uninterned) literal trees.
struct Raw {
  std::vector<Raw> elems;
};

bool raw_equal(const Raw& a, const Raw& b);

bool raw_member(const Raw& x, const Raw& s) {
  return std::any_of(s.elems.begin(), s.elems.end(),
                     [&](const Raw& e) { return raw_equal(e, x); });
}

bool raw_subset(const Raw& a, const Raw& b) {
  return std::all_of(a.elems.begin(), a.elems.end(),
                     [&](const Raw& e) { return raw_member(e, b); });
}

bool raw_equal(const Raw& a, const Raw& b) {
  return raw_subset(a, b) && raw_subset(b, a);
}

Raw to_raw(HFSet x) {
  Raw r;
  for (auto c : x.children()) r.elems.push_back(to_raw(c));
  return r;
}

HFSet random_hf(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> width(0, depth > 0 ? 3 : 0);
  int w = width(rng);
  std::vector<HFSet> cs;
  for (int i = 0; i < w; ++i) cs.push_back(random_hf(rng, depth - 1));
  return HFSet::make(cs);
}

}  // namespace

TEST_CASE("canonicalize basics") {
  CHECK(parse_hf("{}") == HFSet::empty());
  CHECK(parse_hf("{{},{}}") == hf_singleton(HFSet::empty()));
  CHECK(parse_hf("{{{}},{}}") == parse_hf("{{},{{}}}"));
  CHECK(parse_hf(" { { } , { { } } } ") == parse_hf("{{},{{}}}"));
}

TEST_CASE("canonicalize is idempotent and extensional") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    HFSet x = random_hf(rng, 3);
    CHECK(parse_hf(to_string(x)) == x);  // printer/parser round-trip
    HFSet y = random_hf(rng, 3);
    // equality of handles agrees with the brute-force extensionality oracle
    CHECK((x == y) == raw_equal(to_raw(x), to_raw(y)));
  }
}

TEST_CASE("pair") {
  HFSet e = HFSet::empty();
  CHECK(hf_pair(e, e) == hf_singleton(e));
  CHECK(hf_pair(e, hf_singleton(e)) == parse_hf("{{},{{}}}"));
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    HFSet a = random_hf(rng, 3), b = random_hf(rng, 3);
    CHECK(hf_pair(a, b) == hf_pair(b, a));
  }
}

TEST_CASE("union") {
  CHECK(hf_union(HFSet::empty()) == HFSet::empty());
  CHECK(hf_union(parse_hf("{{{}},{{},{{}}}}")) == parse_hf("{{},{{}}}"));
  std::mt19937 rng(13);
  for (int i = 0; i < 50; ++i) {
    HFSet x = random_hf(rng, 3);
    CHECK(hf_union(hf_singleton(x)) == x);
    // element-wise merge oracle
    std::vector<HFSet> merged;
    for (auto c : hf_singleton(x).children())
      for (auto g : c.children()) merged.push_back(g);
    CHECK(HFSet::make(merged) == x);
  }
}

TEST_CASE("image_union") {
  HFSet e = HFSet::empty();
  std::vector<std::pair<HFSet, HFSet>> f;
  CHECK(hf_image_union(f, e) == e);

  HFSet one = hf_singleton(e);
  HFSet I = parse_hf("{{},{{}}}");
  f = {{e, one}, {one, one}};
  CHECK(hf_image_union(f, I) == one);  // U{{0}} = {0}

  f = {{e, hf_singleton(one)}};
  // U f{0} = U{{{0}}} = {{0}}
  CHECK(hf_image_union(f, hf_singleton(e)) == hf_singleton(one));

  CHECK_THROWS_AS(hf_image_union(f, I), std::domain_error);
}

TEST_CASE("is_transitive, both characterizations agree") {
  CHECK(hf_is_transitive(HFSet::empty()));
  CHECK(hf_is_transitive(parse_hf("{{},{{}}}")));
  CHECK_FALSE(hf_is_transitive(parse_hf("{{{}}}")));
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    HFSet x = random_hf(rng, 3);
    CHECK(hf_is_transitive(x) == hf_union_subset_characterization(x));
  }
}

TEST_CASE("restricted power set") {
  std::vector<HFSet> X = {HFSet::empty(), parse_hf("{{}}"), parse_hf("{{{}}}")};
  std::vector<HFSet> A;
  CHECK(in_restricted_powerset(A, X, UniverseTag::FIN));  // empty A
  A = {X[0], X[2]};
  CHECK(in_restricted_powerset(A, X, UniverseTag::FIN));  // finite subsets admitted
  CHECK(in_restricted_powerset(A, X, UniverseTag::CNT));
  A = {parse_hf("{{},{{}}}")};
  CHECK_FALSE(in_restricted_powerset(A, X, UniverseTag::FIN));  // not a subset
}

TEST_CASE("lemma suite: P_U closure properties") {
  std::mt19937 rng(23);
  for (auto u : {UniverseTag::FIN, UniverseTag::CNT}) {
    for (int i = 0; i < 200; ++i) {
      std::vector<HFSet> X;
      for (int k = 0; k < 5; ++k) X.push_back(random_hf(rng, 3));
      std::sort(X.begin(), X.end());
      X.erase(std::unique(X.begin(), X.end()), X.end());
      // subsets (Lemma: A subset of admitted B is admitted)
      std::vector<HFSet> B(X.begin(), X.begin() + X.size() / 2 + 1);
      std::vector<HFSet> A(B.begin(), B.begin() + B.size() / 2);
      REQUIRE(in_restricted_powerset(B, X, u));
      CHECK(in_restricted_powerset(A, X, u));
      // binary unions
      std::vector<HFSet> AB = A;
      AB.insert(AB.end(), B.begin(), B.end());
      CHECK(in_restricted_powerset(AB, X, u));
    }
  }
}

TEST_CASE("lemma: images land in P_U Y") {
  std::mt19937 rng(29);
  for (int i = 0; i < 100; ++i) {
    std::vector<HFSet> X, Y;
    for (int k = 0; k < 4; ++k) {
      X.push_back(random_hf(rng, 2));
      Y.push_back(random_hf(rng, 2));
    }
    // f maps index-wise X -> Y; image of admitted A is admitted
    std::vector<HFSet> A = {X[0], X[2]};
    std::vector<HFSet> fA = {Y[0], Y[2]};
    CHECK(in_restricted_powerset(fA, Y, UniverseTag::FIN));
  }
}

TEST_CASE("lemma: products via Kuratowski pairs") {
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    std::vector<HFSet> A, B;
    for (int k = 0; k < 3; ++k) {
      A.push_back(random_hf(rng, 2));
      B.push_back(random_hf(rng, 2));
    }
    std::vector<HFSet> product, XY;
    for (auto a : A)
      for (auto b : B) product.push_back(kuratowski_pair(a, b));
    XY = product;  // X x Y contains A x B when A=X, B=Y
    CHECK(in_restricted_powerset(product, XY, UniverseTag::FIN));
  }
}

TEST_CASE("Kuratowski round-trip up to rank 4") {
  std::mt19937 rng(37);
  for (int i = 0; i < 300; ++i) {
    HFSet x = random_hf(rng, 3), y = random_hf(rng, 3);
    auto d = kuratowski_decode(kuratowski_pair(x, y));
    REQUIRE(d.has_value());
    CHECK(d->first == x);
    CHECK(d->second == y);
  }
}

TEST_CASE("rank") {
  CHECK(HFSet::empty().rank() == 0);
  CHECK(parse_hf("{{}}").rank() == 1);
  CHECK(parse_hf("{{},{{}}}").rank() == 2);
  // U{x,{x}} bumps rank by exactly 1 on transitive x
  std::mt19937 rng(41);
  for (int i = 0; i < 100; ++i) {
    HFSet x = random_hf(rng, 3);
    if (!hf_is_transitive(x)) continue;
    HFSet s = hf_union(hf_pair(x, hf_singleton(x)));
    CHECK(s.rank() == x.rank() + 1);
  }
}

TEST_CASE("resource limits") {
  auto saved = HFSet::limits();
  HFSet::limits().max_rank = 3;
  CHECK_THROWS_AS(parse_hf("{{{{{}}}}}"), ResourceError);
  HFSet::limits() = saved;
  CHECK_NOTHROW(parse_hf("{{{{{}}}}}"));
}
