#include "ordcount/morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordcount {

Morphism Morphism::from_json(const nlohmann::json& j) {
  Morphism m;
  m.map = j.at("map").get<std::vector<int>>();
  return m;
}

nlohmann::json Morphism::to_json() const { return {{"map", map}}; }

CheckReport is_morphism(const Morphism& f, const FiniteLSS& S1,
                        const FiniteLSS& S2) {
  CheckReport r;
  r.subject = "morphism check";
  if (static_cast<int>(f.map.size()) != S1.n)
    throw std::invalid_argument("is_morphism: table size mismatch");
  for (int v : f.map)
    if (v < 0 || v >= S2.n)
      throw std::invalid_argument("is_morphism: table value out of range");

  bool eq_s = true, eq_s_boundary = true;
  std::string ws;
  for (int x = 0; x < S1.n; ++x) {
    int lhs = f.map[static_cast<std::size_t>(S1.s[static_cast<std::size_t>(x)])];
    int rhs = S2.s[static_cast<std::size_t>(f.map[static_cast<std::size_t>(x)])];
    if (lhs != rhs) {
      eq_s = false;
      if (!subset_has(S1.boundary, x)) eq_s_boundary = false;
      if (ws.empty())
        ws = "f(s(" + std::to_string(x) + ")) = " + std::to_string(lhs) +
             " but s(f(" + std::to_string(x) + ")) = " + std::to_string(rhs);
    }
  }
  if (eq_s)
    r.add("f after s1 = s2 after f", CheckStatus::pass);
  else if (eq_s_boundary)
    r.add("f after s1 = s2 after f", CheckStatus::bounded_pass, "",
          "holds away from the source boundary cap; capped witness: " + ws);
  else
    r.add("f after s1 = s2 after f", CheckStatus::fail, ws);

  bool eq_L = true;
  std::string wl;
  for (const auto& [I, v] : S1.L) {
    Subset fI = 0;
    for (int i : subset_elements(I))
      fI = subset_with(fI, f.map[static_cast<std::size_t>(i)]);
    auto lv = S2.L_at(fI);
    if (!lv) {
      eq_L = false;
      wl = "image of I is outside dom L2";
    } else if (*lv != f.map[static_cast<std::size_t>(v)]) {
      eq_L = false;
      wl = "L2(fI) = " + std::to_string(*lv) + " but f(L1(I)) = " +
           std::to_string(f.map[static_cast<std::size_t>(v)]);
    }
  }
  r.add("L2(fI) = f(L1(I))", eq_L ? CheckStatus::pass : CheckStatus::fail, wl);
  return r;
}

Morphism identity_morphism(int n) {
  Morphism m;
  for (int i = 0; i < n; ++i) m.map.push_back(i);
  return m;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism m;
  for (int v : f.map) m.map.push_back(g.map.at(static_cast<std::size_t>(v)));
  return m;
}

RecursionTarget target_from_counting(const FiniteLSS& T) {
  RecursionTarget t;
  t.size = T.n;
  t.step = T.s;
  t.limit_value = [T](const std::vector<int>& img) -> std::optional<int> {
    Subset I = 0;
    for (int i : img) I = subset_with(I, i);
    return T.L_at(I);
  };
  return t;
}

RecFunction initial_morphism(const OrdinalCarrier& O, const FiniteLSS& T,
                             const CnfOrdinal& bound) {
  auto pre = check_C1_C2(T);
  if (!pre.all_passed())
    throw std::invalid_argument(
        "initial_morphism: target is not a counting system");
  return transfinite_recursion(O, target_from_counting(T), bound);
}

Morphism morphism_on_segment(const RecFunction& f, int len) {
  Morphism m;
  for (int i = 0; i < len; ++i) {
    auto v = f.eval(CnfOrdinal::natural(static_cast<std::uint64_t>(i)));
    if (!v) throw std::invalid_argument("morphism_on_segment: beyond the bound");
    m.map.push_back(*v);
  }
  return m;
}

CheckReport uniqueness_check(int len, const FiniteLSS& T) {
  CheckReport r;
  r.subject = "uniqueness over tables of length " + std::to_string(len);
  if (len > 8) throw std::invalid_argument("uniqueness_check: segment too long");
  auto t = target_from_counting(T);
  std::vector<int> table;
  std::size_t count = count_recursion_tables(len, t, &table);
  r.add("exactly one satisfying table",
        count == 1 ? CheckStatus::pass : CheckStatus::fail,
        count == 1 ? "" : std::to_string(count) + " tables found");
  if (count == 1 && len > 0) {
    auto f = initial_morphism(OrdinalCarrier::finite_chain(
                                  static_cast<std::uint64_t>(len)),
                              T, CnfOrdinal::natural(
                                     static_cast<std::uint64_t>(len - 1)));
    bool same = morphism_on_segment(f, len).map == table;
    r.add("table equals the constructed initial morphism",
          same ? CheckStatus::pass : CheckStatus::fail);
  }
  return r;
}

}  // namespace ordcount
