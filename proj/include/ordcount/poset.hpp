#ifndef ORDCOUNT_POSET_HPP
#define ORDCOUNT_POSET_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ordcount/report.hpp"

namespace ordcount {

// Subsets of a finite carrier are bitsets; carriers are capped at 64 so that
// exhaustive quantification over subsets stays a word loop.
using Subset = std::uint64_t;

inline bool subset_has(Subset s, int i) { return (s >> i) & 1u; }
inline Subset subset_with(Subset s, int i) { return s | (Subset{1} << i); }
inline Subset full_subset(int n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}
int subset_count(Subset s);
std::vector<int> subset_elements(Subset s);

// Finite poset over an indexed carrier. The relation is verified to be
// reflexive, antisymmetric and transitive on construction.
class Poset {
 public:
  Poset(int n, const std::function<bool(int, int)>& leq);

  int size() const { return n_; }
  bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i) * n_ + j]; }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  bool is_total() const;

  static Poset chain(int n);      // 0 < 1 < ... < n-1
  static Poset antichain(int n);

 private:
  int n_;
  std::vector<char> leq_;
};

// S-down: elements strictly below every member of S. Empty S gives the whole
// carrier (vacuous quantifier).
Subset lower_complement(const Poset& p, Subset s);
// S-up: elements strictly above every member of S.
Subset upper_complement(const Poset& p, Subset s);

// Least element of S, when it exists.
std::optional<int> min_element(const Poset& p, Subset s);
std::optional<int> max_element(const Poset& p, Subset s);
std::optional<int> join(const Poset& p, Subset s);

// Incremented join: min of the upper complement. Partiality is a first-class
// empty return, never an error.
std::optional<int> incremented_join(const Poset& p, Subset s);
std::optional<int> successor(const Poset& p, int x);

// L1-L3 on any poset; L4-L7 only when total (reported "not applicable"
// otherwise). Exhaustive over the carrier.
CheckReport check_L_laws(const Poset& p);

// Parts (i)-(iii) of the max lemma for one subset, converse clauses only
// asserted on total orders.
CheckReport check_lemma_max(const Poset& p, Subset s);
// Same, quantified over all subsets (carrier size <= 20).
CheckReport check_lemma_max_all(const Poset& p);

}  // namespace ordcount

#endif
