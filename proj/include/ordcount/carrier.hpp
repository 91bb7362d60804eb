#ifndef ORDCOUNT_CARRIER_HPP
#define ORDCOUNT_CARRIER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordcount/cnf.hpp"
#include "ordcount/hfset.hpp"
#include "ordcount/report.hpp"

namespace ordcount {

enum class CarrierKind { finite_chain, vn_segment, cnf };

// A pluggable ordinal-system carrier. Finite chains and VN segments are
// finite negative/boundary controls; the Cnf carrier is the desk-scale
// infinite model. Elements are addressed as CnfOrdinals throughout (finite
// carriers use the naturals 0..bound-1).
struct OrdinalCarrier {
  CarrierKind kind = CarrierKind::finite_chain;
  std::uint64_t bound = 0;   // finite carriers: carrier size
  CnfOrdinal cnf_bound;      // cnf carrier: sample bound
  UniverseTag universe = UniverseTag::FIN;

  static OrdinalCarrier finite_chain(std::uint64_t n,
                                     UniverseTag u = UniverseTag::FIN);
  static OrdinalCarrier vn_segment(std::uint64_t n,
                                   UniverseTag u = UniverseTag::FIN);
  static OrdinalCarrier cnf(CnfOrdinal sample_bound,
                            UniverseTag u = UniverseTag::CNT);

  bool is_finite() const { return kind != CarrierKind::cnf; }
  bool contains(const CnfOrdinal& x) const;
  std::string describe() const;
};

// `chain:5`, `vn:7`, `cnf:w*3` with optional `@FIN` / `@CNT` suffix.
OrdinalCarrier parse_carrier(std::string_view text);

struct CheckOptions {
  unsigned seed = 12345;
  int cases = 500;
};

// (O1') each {x}-down is U-small.
CheckReport check_O1prime(const OrdinalCarrier& c, CheckOptions opt = {});
// (O2) incremented joins of U-small sets exist.
CheckReport check_O2(const OrdinalCarrier& c, CheckOptions opt = {});
// (O1 & O2) <-> (O1 & O2a & O2b) on the same sampled families.
CheckReport check_O2ab_equivalence(const OrdinalCarrier& c, CheckOptions opt = {});

enum class LimitClass { successor_ordinal, limit_ordinal };

struct LimitEvidence {
  bool not_a_successor = false;
  bool downset_successor_closed = false;
  bool join_of_downset = false;
};

// Evaluates the three equivalent limit criteria and asserts their agreement
// (disagreement throws logic_error: it signals a carrier bug).
LimitClass classify_limit(const OrdinalCarrier& c, const CnfOrdinal& x,
                          LimitEvidence* evidence = nullptr);

// I1/I2 check for a decidable subset; locates the least counterexample when
// the subset is proper.
CheckReport transfinite_induction_check(
    const OrdinalCarrier& c, const std::function<bool(const CnfOrdinal&)>& member,
    CheckOptions opt = {});

// Recursion data (X, V, T): T total on a finite target, V on subsets of it.
// V returns nullopt where undefined; the image argument arrives sorted.
struct RecursionTarget {
  int size = 0;
  std::vector<int> step;  // T
  std::function<std::optional<int>(const std::vector<int>&)> limit_value;  // V
};

RecursionTarget clock_target(int modulus);  // T = +1 mod m, V = const 0
RecursionTarget parse_recursion_target(const nlohmann::json& j);

// One limit stage of the computed function: values at base, base+1, ... are
// prefix[0], prefix[1], ...; past the prefix the orbit cycles from
// cycle_start (finite targets make every stage eventually periodic).
struct RecStage {
  CnfOrdinal base;
  std::vector<int> prefix;
  std::size_t cycle_start = 0;
};

struct RecFunction {
  CnfOrdinal bound;
  std::vector<RecStage> stages;

  std::optional<int> eval(const CnfOrdinal& x) const;
  nlohmann::json to_json() const;  // array of (ordinal-literal, target-index)
};

// Computes the unique f on {y | y <= bound} by ascending evaluation:
// successor points step through T, limit points apply V to the accumulated
// image. Cnf bounds must lie below w^2 (finitely many limit stages).
// Throws std::domain_error naming the limit ordinal if V is undefined there.
RecFunction transfinite_recursion(const OrdinalCarrier& c,
                                  const RecursionTarget& t,
                                  const CnfOrdinal& bound);

// Post-hoc R1/R2 scan of a computed table.
CheckReport verify_recursion(const RecFunction& f, const RecursionTarget& t);

// Brute-force count of tables on the finite segment {0..len-1} satisfying
// R1-R2 against the target; the uniqueness oracle.
std::size_t count_recursion_tables(int len, const RecursionTarget& t,
                                   std::vector<int>* unique_table = nullptr);

}  // namespace ordcount

#endif
