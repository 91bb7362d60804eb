#ifndef ORDCOUNT_VN_HPP
#define ORDCOUNT_VN_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordcount/hfset.hpp"

namespace ordcount {

// A von Neumann ordinal internal to the FIN universe: a transitive set
// totally ordered by the element-or-equal relation (total implies well-order
// on finite carriers).
struct VNOrdinal {
  HFSet value;
  bool operator==(const VNOrdinal&) const = default;
};

VNOrdinal vn_zero();
VNOrdinal vn_succ(VNOrdinal n);          // U{n,{n}}
VNOrdinal vn_from_nat(unsigned n);       // memoized numeral table
std::optional<unsigned> vn_to_nat(VNOrdinal x);

bool is_vn_ordinal(HFSet x);

// Element-or-equal as subset inclusion (Fact 2); also available in the raw
// element-or-equal form for cross-checking.
bool vn_leq(VNOrdinal x, VNOrdinal y);
bool vn_leq_membership(VNOrdinal x, VNOrdinal y);

// min(y\x), which coincides with x `intersect` y (Fact 1). Precondition:
// y\x nonempty.
VNOrdinal vn_min_diff(VNOrdinal x, VNOrdinal y);

// v+X = U{UX, X}, the concrete incremented-join formula.
VNOrdinal vn_incremented_join(std::span<const VNOrdinal> xs);

std::string vn_print(VNOrdinal x, bool raw = false);

}  // namespace ordcount

#endif
