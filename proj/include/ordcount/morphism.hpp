#ifndef ORDCOUNT_MORPHISM_HPP
#define ORDCOUNT_MORPHISM_HPP

#include <vector>

#include <json.hpp>

#include "ordcount/carrier.hpp"
#include "ordcount/lss.hpp"
#include "ordcount/report.hpp"

namespace ordcount {

// A candidate morphism of finite counting systems: a total table from source
// positions to target positions.
struct Morphism {
  std::vector<int> map;

  static Morphism from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;  // {"map": [...]}
};

// Checks f(s1(x)) = s2(f(x)) pointwise and L2(fI) = f(L1(I)) on dom L1.
// Equation failures caused only by source boundary caps downgrade to
// bounded_pass.
CheckReport is_morphism(const Morphism& f, const FiniteLSS& S1,
                        const FiniteLSS& S2);

Morphism identity_morphism(int n);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f

// Recursion data of a finite counting-system target: T = s, V = L on the
// image subset.
RecursionTarget target_from_counting(const FiniteLSS& T);

// The initial morphism on {y <= bound}: clause (i) steps through the target
// successor, clause (ii) applies the target's L to the accumulated image.
// Requires the target to pass C1-C2 (throws std::invalid_argument) and
// surfaces transfinite_recursion's domain_error when L is undefined at a
// limit the bound reaches.
RecFunction initial_morphism(const OrdinalCarrier& O, const FiniteLSS& T,
                             const CnfOrdinal& bound);

// Flattens the segment {0..len-1} of an initial morphism into a table.
Morphism morphism_on_segment(const RecFunction& f, int len);

// Brute-force enumeration of all tables {0..len-1} -> target satisfying the
// morphism equations; asserts exactly one exists and that it equals the
// constructed initial morphism.
CheckReport uniqueness_check(int len, const FiniteLSS& T);

}  // namespace ordcount

#endif
