#ifndef ORDCOUNT_CNF_HPP
#define ORDCOUNT_CNF_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ordcount {

// Ordinal below epsilon_0 in Cantor normal form: a strictly-decreasing list
// of (exponent, coefficient) terms. The empty list is 0; a natural n is the
// single term (0, n).
class CnfOrdinal {
 public:
  CnfOrdinal() = default;

  static CnfOrdinal zero() { return {}; }
  static CnfOrdinal natural(std::uint64_t n);
  static CnfOrdinal omega();
  static CnfOrdinal omega_power(const CnfOrdinal& e, std::uint64_t coeff = 1);

  const std::vector<std::pair<CnfOrdinal, std::uint64_t>>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  // Ordinal sum with a single term, left-to-right: absorbs smaller trailing
  // terms. Used by the parser to canonicalize arbitrary sums.
  void add_term(const CnfOrdinal& exponent, std::uint64_t coeff);

  bool operator==(const CnfOrdinal&) const = default;

 private:
  std::vector<std::pair<CnfOrdinal, std::uint64_t>> terms_;
};

// -1 / 0 / +1, total well-order.
int cnf_cmp(const CnfOrdinal& a, const CnfOrdinal& b);
inline bool cnf_lt(const CnfOrdinal& a, const CnfOrdinal& b) {
  return cnf_cmp(a, b) < 0;
}
inline bool cnf_leq(const CnfOrdinal& a, const CnfOrdinal& b) {
  return cnf_cmp(a, b) <= 0;
}

CnfOrdinal cnf_succ(const CnfOrdinal& a);
// Defined exactly on successors (a with a nonzero finite part).
std::optional<CnfOrdinal> cnf_pred(const CnfOrdinal& a);
bool cnf_is_limit(const CnfOrdinal& a);  // 0 counts as a limit

// a = limit_part(a) + finite_part(a).
CnfOrdinal cnf_limit_part(const CnfOrdinal& a);
std::uint64_t cnf_finite_part(const CnfOrdinal& a);
// limit_part(a) + omega: the sup of {a+n | n in N}.
CnfOrdinal cnf_plus_omega(const CnfOrdinal& a);

// x - g when finite, i.e. when x = g + n for a natural n.
std::optional<std::uint64_t> cnf_sub_finite(const CnfOrdinal& x,
                                            const CnfOrdinal& g);

// Finitely generated successor-closed subset: denotes {g + n | g in gens, n in N}.
struct GenSuccSet {
  std::vector<CnfOrdinal> generators;
};

// The least limit ordinal strictly above every member of the denoted set;
// both the join and the incremented join of that set. Precondition: nonempty.
CnfOrdinal gen_sup(const GenSuccSet& I);
bool gen_member(const CnfOrdinal& x, const GenSuccSet& I);

// Text syntax: `w^e*c + ...`, e.g. `w*2+3`, `w^w`, `w^(w+1)*2`, `0`, `17`.
// Non-canonical sums are canonicalized by ordinal addition.
CnfOrdinal parse_cnf(std::string_view text);
std::string to_string(const CnfOrdinal& a);

// Uniform-ish sampler for property suites: random CNF with natural exponents
// <= max_exp and coefficients <= max_coeff, rejected against the bound.
CnfOrdinal cnf_random_below(const CnfOrdinal& bound, std::mt19937& rng,
                            unsigned max_exp = 3, unsigned max_coeff = 5);

}  // namespace ordcount

#endif
