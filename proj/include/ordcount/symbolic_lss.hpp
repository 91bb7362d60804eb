#ifndef ORDCOUNT_SYMBOLIC_LSS_HPP
#define ORDCOUNT_SYMBOLIC_LSS_HPP

#include <optional>

#include "ordcount/carrier.hpp"
#include "ordcount/cnf.hpp"
#include "ordcount/report.hpp"

namespace ordcount {

// The symbolic counting system (O, join, succ) below a Cnf bound: s is
// cnf_succ and L is the join (= incremented join) of a successor-closed
// subset denoted by generators. All universal checks here are bounded
// verification: sampled below `bound`, with the truncation stated in the
// report.
struct SymbolicLSS {
  CnfOrdinal bound;
  UniverseTag universe = UniverseTag::CNT;

  static SymbolicLSS below(CnfOrdinal bound,
                           UniverseTag u = UniverseTag::CNT);
};

SymbolicLSS sym_from_ordinal_system(const OrdinalCarrier& c);

// L on generator sets: empty set maps to 0, otherwise gen_sup; sets whose
// sup escapes the bound are outside the bounded domain.
std::optional<CnfOrdinal> sym_L(const SymbolicLSS& S, const GenSuccSet& I);

// Closures of generator sets are down-sets: closure(I) = {x | x < result}.
CnfOrdinal sym_closure_bound(const SymbolicLSS& S, const GenSuccSet& I);
bool sym_closure_member(const SymbolicLSS& S, const GenSuccSet& I,
                        const CnfOrdinal& x);

bool sym_leq_s(const CnfOrdinal& x, const CnfOrdinal& y);  // finite distance
// y is expressible as L of a finitely generated set (mu + w shape).
bool sym_in_imL_form(const CnfOrdinal& y);
bool sym_leq_L(const SymbolicLSS& S, const CnfOrdinal& x, const CnfOrdinal& y);
// specialization order x in closure{y}; coincides with cnf_leq.
bool sym_leq(const CnfOrdinal& x, const CnfOrdinal& y);

CheckReport sym_check_C1_C2(const SymbolicLSS& S, CheckOptions opt = {});
// C3-C5 plus Properties 0-3 on samples.
CheckReport sym_check_C3_C4_C5(const SymbolicLSS& S, CheckOptions opt = {});
// Specialization order vs the Cnf order; s as order successor; L as join;
// limit elements vs im L (with the expressibility gap noted).
CheckReport sym_spo_check(const SymbolicLSS& S, CheckOptions opt = {});
// from_ordinal_system round-trip: the derived order is the carrier order.
CheckReport sym_roundtrip_check(const OrdinalCarrier& c, CheckOptions opt = {});

}  // namespace ordcount

#endif
