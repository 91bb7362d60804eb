#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordcount/morphism.hpp"

using namespace ordcount;

namespace {

FiniteLSS one_point() {
  FiniteLSS T;
  T.n = 1;
  T.s = {0};
  T.L = {{Subset{0}, 0}, {full_subset(1), 0}};
  return T;
}

}  // namespace

TEST_CASE("json round-trip") {
  Morphism m{{0, 1, 2, 0}};
  CHECK(Morphism::from_json(m.to_json()).map == m.map);
}

TEST_CASE("identity is a morphism") {
  for (auto S : {FiniteLSS::clock(12), FiniteLSS::peano_segment(5), one_point()})
    CHECK(is_morphism(identity_morphism(S.n), S, S).all_passed());
}

TEST_CASE("n mod 12 from the Peano segment to the clock") {
  auto P = FiniteLSS::peano_segment(6);
  auto C = FiniteLSS::clock(12);
  Morphism f{{0, 1, 2, 3, 4, 5}};
  auto r = is_morphism(f, P, C);
  CHECK(r.all_passed());
  // the capped top is excused, not silently passed
  CHECK(r.find("f after s1 = s2 after f")->status == CheckStatus::bounded_pass);
  CHECK(r.find("L2(fI) = f(L1(I))")->status == CheckStatus::pass);
}

TEST_CASE("constant map that breaks the successor equation") {
  auto C = FiniteLSS::clock(12);
  Morphism f{std::vector<int>(12, 0)};
  auto r = is_morphism(f, C, C);
  CHECK_FALSE(r.all_passed());
  CHECK(r.find("f after s1 = s2 after f")->status == CheckStatus::fail);
  CHECK_FALSE(r.find("f after s1 = s2 after f")->witness.empty());
}

TEST_CASE("composition of morphisms is a morphism") {
  auto P = FiniteLSS::peano_segment(4);
  auto C = FiniteLSS::clock(12);
  auto O = one_point();
  Morphism f{{0, 1, 2, 3}};          // P -> C
  Morphism g{std::vector<int>(12, 0)};  // C -> one point (all to the point)
  CHECK(is_morphism(f, P, C).all_passed());
  CHECK(is_morphism(g, C, O).all_passed());
  CHECK(is_morphism(compose(g, f), P, O).all_passed());
}

TEST_CASE("initial morphism from the natural segment is n mod 12") {
  auto f = initial_morphism(OrdinalCarrier::finite_chain(6), FiniteLSS::clock(12),
                            CnfOrdinal::natural(5));
  CHECK(morphism_on_segment(f, 6).map == std::vector<int>{0, 1, 2, 3, 4, 5});
  auto r = is_morphism(morphism_on_segment(f, 6), FiniteLSS::peano_segment(6),
                       FiniteLSS::clock(12));
  CHECK(r.all_passed());
}

TEST_CASE("initial morphism with a Cnf source wraps at the limit") {
  auto f = initial_morphism(parse_carrier("cnf:w*2"), FiniteLSS::clock(12),
                            parse_cnf("w+3"));
  CHECK(f.eval(CnfOrdinal::natural(25)) == 1);  // 25 mod 12
  CHECK(f.eval(parse_cnf("w")) == 0);   // L of the full image
  CHECK(f.eval(parse_cnf("w+3")) == 3);
  CHECK(verify_recursion(f, target_from_counting(FiniteLSS::clock(12)))
            .all_passed());
}

TEST_CASE("bound 0 gives the base case f(0) = L(empty)") {
  auto f = initial_morphism(OrdinalCarrier::finite_chain(3), FiniteLSS::clock(5),
                            CnfOrdinal::zero());
  CHECK(f.eval(CnfOrdinal::zero()) == 0);
  CHECK_FALSE(f.eval(CnfOrdinal::natural(1)).has_value());
}

TEST_CASE("limit clause needs L: Peano target rejects the first limit") {
  auto T = FiniteLSS::peano_segment(3);  // dom L = {empty} only
  CHECK_NOTHROW(
      initial_morphism(parse_carrier("cnf:w*2"), T, CnfOrdinal::natural(5)));
  try {
    initial_morphism(parse_carrier("cnf:w*2"), T, parse_cnf("w+1"));
    FAIL("expected domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("w") != std::string::npos);
  }
}

TEST_CASE("non-counting targets are rejected up front") {
  FiniteLSS bad = FiniteLSS::clock(4);
  bad.L.push_back({subset_with(0, 2), 1});
  CHECK_THROWS_AS(initial_morphism(OrdinalCarrier::finite_chain(3), bad,
                                   CnfOrdinal::natural(2)),
                  std::invalid_argument);
}

TEST_CASE("primitive recursion coincidence on a FIN triple") {
  // target (X, 0, s) with L(empty)=0 only: the initial morphism is the
  // classical f(0)=0, f(n+1)=s(f(n))
  auto T = FiniteLSS::peano_segment(5);
  auto f = initial_morphism(OrdinalCarrier::finite_chain(8), T,
                            CnfOrdinal::natural(7));
  std::vector<int> classical;
  int v = 0;
  for (int i = 0; i < 8; ++i) {
    classical.push_back(v);
    v = T.s[static_cast<std::size_t>(v)];
  }
  CHECK(morphism_on_segment(f, 8).map == classical);
}

TEST_CASE("uniqueness by brute force") {
  auto r = uniqueness_check(6, FiniteLSS::clock(12));
  CHECK(r.all_passed());
  CHECK(r.find("exactly one satisfying table")->status == CheckStatus::pass);
  CHECK(r.find("table equals the constructed initial morphism")->status ==
        CheckStatus::pass);
  CHECK(uniqueness_check(4, one_point()).all_passed());
  CHECK_THROWS_AS(uniqueness_check(9, FiniteLSS::clock(3)),
                  std::invalid_argument);
}
