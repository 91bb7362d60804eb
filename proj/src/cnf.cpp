#include "ordcount/cnf.hpp"

#include <cctype>
#include <stdexcept>

namespace ordcount {

CnfOrdinal CnfOrdinal::natural(std::uint64_t n) {
  CnfOrdinal a;
  if (n > 0) a.terms_.push_back({zero(), n});
  return a;
}

CnfOrdinal CnfOrdinal::omega() { return omega_power(natural(1)); }

CnfOrdinal CnfOrdinal::omega_power(const CnfOrdinal& e, std::uint64_t coeff) {
  CnfOrdinal a;
  if (coeff > 0) a.terms_.push_back({e, coeff});
  return a;
}

void CnfOrdinal::add_term(const CnfOrdinal& exponent, std::uint64_t coeff) {
  if (coeff == 0) return;
  while (!terms_.empty() && cnf_lt(terms_.back().first, exponent))
    terms_.pop_back();
  if (!terms_.empty() && terms_.back().first == exponent)
    terms_.back().second += coeff;
  else
    terms_.push_back({exponent, coeff});
}

int cnf_cmp(const CnfOrdinal& a, const CnfOrdinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cnf_cmp(ta[i].first, tb[i].first);
    if (c != 0) return c;
    if (ta[i].second != tb[i].second)
      return ta[i].second < tb[i].second ? -1 : 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

CnfOrdinal cnf_succ(const CnfOrdinal& a) {
  CnfOrdinal r = a;
  r.add_term(CnfOrdinal::zero(), 1);
  return r;
}

std::optional<CnfOrdinal> cnf_pred(const CnfOrdinal& a) {
  if (cnf_is_limit(a)) return std::nullopt;
  CnfOrdinal r = cnf_limit_part(a);
  std::uint64_t k = cnf_finite_part(a);
  if (k > 1) r.add_term(CnfOrdinal::zero(), k - 1);
  return r;
}

bool cnf_is_limit(const CnfOrdinal& a) { return cnf_finite_part(a) == 0; }

CnfOrdinal cnf_limit_part(const CnfOrdinal& a) {
  CnfOrdinal r;
  for (const auto& [e, c] : a.terms())
    if (!e.is_zero()) r.add_term(e, c);
  return r;
}

std::uint64_t cnf_finite_part(const CnfOrdinal& a) {
  if (!a.terms().empty() && a.terms().back().first.is_zero())
    return a.terms().back().second;
  return 0;
}

CnfOrdinal cnf_plus_omega(const CnfOrdinal& a) {
  CnfOrdinal r = cnf_limit_part(a);
  r.add_term(CnfOrdinal::natural(1), 1);
  return r;
}

std::optional<std::uint64_t> cnf_sub_finite(const CnfOrdinal& x,
                                            const CnfOrdinal& g) {
  if (cnf_limit_part(x) != cnf_limit_part(g)) return std::nullopt;
  std::uint64_t fx = cnf_finite_part(x), fg = cnf_finite_part(g);
  if (fx < fg) return std::nullopt;
  return fx - fg;
}

CnfOrdinal gen_sup(const GenSuccSet& I) {
  if (I.generators.empty())
    throw std::invalid_argument("gen_sup: empty generator set");
  CnfOrdinal best;
  bool first = true;
  for (const auto& g : I.generators) {
    CnfOrdinal s = cnf_plus_omega(g);
    if (first || cnf_lt(best, s)) best = s;
    first = false;
  }
  return best;
}

bool gen_member(const CnfOrdinal& x, const GenSuccSet& I) {
  for (const auto& g : I.generators)
    if (cnf_sub_finite(x, g)) return true;
  return false;
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::uint64_t parse_nat(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw std::invalid_argument("cnf: expected a natural number");
  std::uint64_t n = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    n = n * 10 + static_cast<std::uint64_t>(s[i] - '0');
    ++i;
  }
  return n;
}

CnfOrdinal parse_sum(std::string_view s, std::size_t& i, int depth);

// exponent := nat | 'w' ['^' exponent] | '(' sum ')'
// No coefficient here: in `w^w*2` the *2 belongs to the outer term.
CnfOrdinal parse_exponent(std::string_view s, std::size_t& i, int depth) {
  if (depth > 32) throw std::invalid_argument("cnf: nesting too deep");
  skip_ws(s, i);
  if (i < s.size() && s[i] == '(') {
    ++i;
    CnfOrdinal e = parse_sum(s, i, depth + 1);
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ')')
      throw std::invalid_argument("cnf: missing ')'");
    ++i;
    return e;
  }
  if (i < s.size() && s[i] == 'w') {
    ++i;
    CnfOrdinal inner = CnfOrdinal::natural(1);
    skip_ws(s, i);
    if (i < s.size() && s[i] == '^') {
      ++i;
      inner = parse_exponent(s, i, depth + 1);
    }
    return CnfOrdinal::omega_power(inner);
  }
  return CnfOrdinal::natural(parse_nat(s, i));
}

// term := nat | 'w' ['^' exponent] ['*' nat]
CnfOrdinal parse_term(std::string_view s, std::size_t& i, int depth) {
  if (depth > 32) throw std::invalid_argument("cnf: nesting too deep");
  skip_ws(s, i);
  if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    return CnfOrdinal::natural(parse_nat(s, i));
  }
  if (i >= s.size() || s[i] != 'w')
    throw std::invalid_argument("cnf: expected term");
  ++i;
  CnfOrdinal exponent = CnfOrdinal::natural(1);
  skip_ws(s, i);
  if (i < s.size() && s[i] == '^') {
    ++i;
    exponent = parse_exponent(s, i, depth + 1);
  }
  std::uint64_t coeff = 1;
  skip_ws(s, i);
  if (i < s.size() && s[i] == '*') {
    ++i;
    coeff = parse_nat(s, i);
    if (coeff == 0) throw std::invalid_argument("cnf: zero coefficient");
  }
  return CnfOrdinal::omega_power(exponent, coeff);
}

CnfOrdinal parse_sum(std::string_view s, std::size_t& i, int depth) {
  CnfOrdinal acc = parse_term(s, i, depth);
  while (true) {
    skip_ws(s, i);
    if (i < s.size() && s[i] == '+') {
      ++i;
      CnfOrdinal t = parse_term(s, i, depth);
      for (const auto& [e, c] : t.terms()) acc.add_term(e, c);
    } else {
      break;
    }
  }
  return acc;
}

}  // namespace

CnfOrdinal parse_cnf(std::string_view text) {
  std::size_t i = 0;
  CnfOrdinal r = parse_sum(text, i, 0);
  skip_ws(text, i);
  if (i != text.size())
    throw std::invalid_argument("cnf: trailing characters");
  return r;
}

std::string to_string(const CnfOrdinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    if (!first) out += "+";
    first = false;
    if (e.is_zero()) {
      out += std::to_string(c);
      continue;
    }
    out += "w";
    if (!(e == CnfOrdinal::natural(1))) {
      out += "^";
      if (e.terms().size() == 1 && e.terms()[0].second == 1 &&
          !e.terms()[0].first.is_zero() && e.terms()[0].first == CnfOrdinal::natural(1)) {
        out += "w";  // plain w^w
      } else if (e.terms().size() == 1 && e.terms()[0].first.is_zero()) {
        out += std::to_string(e.terms()[0].second);
      } else {
        out += "(" + to_string(e) + ")";
      }
    }
    if (c != 1) out += "*" + std::to_string(c);
  }
  return out;
}

CnfOrdinal cnf_random_below(const CnfOrdinal& bound, std::mt19937& rng,
                            unsigned max_exp, unsigned max_coeff) {
  if (bound.is_zero())
    throw std::invalid_argument("cnf_random_below: empty range");
  std::uniform_int_distribution<unsigned> coeff(0, max_coeff);
  for (int tries = 0; tries < 1000; ++tries) {
    CnfOrdinal a;
    for (int e = static_cast<int>(max_exp); e >= 0; --e) {
      unsigned c = coeff(rng);
      if (c > 0)
        a.add_term(CnfOrdinal::natural(static_cast<std::uint64_t>(e)), c);
    }
    if (cnf_lt(a, bound)) return a;
  }
  return CnfOrdinal::zero();
}

}  // namespace ordcount
