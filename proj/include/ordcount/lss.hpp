#ifndef ORDCOUNT_LSS_HPP
#define ORDCOUNT_LSS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ordcount/poset.hpp"
#include "ordcount/report.hpp"

namespace ordcount {

// A finite limit-successor system (X, L, s): s total on {0..n-1}, L an
// explicit partial table on subsets. Non-counting systems are representable
// on purpose; the C-axioms are checkable properties, not constructor
// constraints.
//
// `boundary` marks capped elements (s(x) = x standing in for a successor the
// finite segment cannot hold). Universal claims that a boundary element
// falsifies are reported as bounded passes with the witness, not failures.
struct FiniteLSS {
  int n = 0;
  std::vector<int> s;
  std::vector<std::pair<Subset, int>> L;  // no duplicate subsets
  Subset boundary = 0;

  static FiniteLSS peano_segment(int n);  // s capped at n-1, L(empty)=0
  static FiniteLSS clock(int n);          // s = +1 mod n, L(empty)=L(all)=0
  static FiniteLSS from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  std::optional<int> L_at(Subset I) const;
  bool successor_closed(Subset I) const;
  Subset s_preimage(Subset I) const;   // s^-1 I
  Subset s_inf(Subset I) const;        // s^-infinity I
  Subset L_pre_union(Subset I) const;  // U L^-1 I
};

struct ClosureResult {
  Subset set = 0;
  int iterations = 0;  // k-passes used by the alternating fixpoint
};

// Least closed superset by the alternating s/L fixpoint.
ClosureResult closure_iterated(const FiniteLSS& S, Subset I);
// Two-pass formula valid on counting systems; cross-checked against the
// iterated closure and throws std::logic_error on disagreement.
ClosureResult closure_two_term(const FiniteLSS& S, Subset I);

bool leq_s(const FiniteLSS& S, int x, int y);  // orbit walk, cycle-safe
bool leq_L(const FiniteLSS& S, int x, int y);  // scan dom L
bool specialization_leq(const FiniteLSS& S, int x, int y);
// x <=s y or x <=L z <=s y; agrees with specialization_leq on counting
// systems.
bool specialization_leq_two_case(const FiniteLSS& S, int x, int y);

CheckReport check_C1_C2(const FiniteLSS& S);
// C3-C5 plus Properties 0-3; boundary-only counterexamples downgrade to
// bounded_pass.
CheckReport check_C3_C4_C5(const FiniteLSS& S);

// Materializes the specialization order; requires C1-C5 to hold at scale
// (throws std::logic_error with the witness otherwise). The report covers
// antisymmetry/totality, s as the order successor, L as (incremented) join,
// and limit elements = im L.
std::pair<Poset, CheckReport> spo_order(const FiniteLSS& S);

FiniteLSS lss_from_finite_segment(int n);  // counting system of a segment

// FIN degeneration: dom L = {empty}, and (X, L(empty), s) satisfies
// Dedekind's axioms.
CheckReport peano_degeneration_check(const FiniteLSS& S);

// Hasse diagram of the specialization preorder.
std::string to_dot(const FiniteLSS& S);

}  // namespace ordcount

#endif
