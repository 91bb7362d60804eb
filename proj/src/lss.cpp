#include "ordcount/lss.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordcount {

namespace {

std::string elem_list(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_elements(s)) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(i);
  }
  return out + "}";
}

}  // namespace

FiniteLSS FiniteLSS::peano_segment(int n) {
  FiniteLSS S;
  S.n = n;
  for (int i = 0; i < n; ++i)
    S.s.push_back(std::min(i + 1, n - 1));
  if (n > 0) {
    S.L.push_back({Subset{0}, 0});
    S.boundary = subset_with(0, n - 1);
  }
  return S;
}

FiniteLSS FiniteLSS::clock(int n) {
  FiniteLSS S;
  S.n = n;
  for (int i = 0; i < n; ++i) S.s.push_back((i + 1) % n);
  if (n > 0) {
    S.L.push_back({Subset{0}, 0});
    S.L.push_back({full_subset(n), 0});
  }
  return S;
}

FiniteLSS FiniteLSS::from_json(const nlohmann::json& j) {
  FiniteLSS S;
  S.n = j.at("size").get<int>();
  if (S.n < 0 || S.n > 64)
    throw std::invalid_argument("lss: size must be in 0..64");
  S.s = j.at("s").get<std::vector<int>>();
  if (static_cast<int>(S.s.size()) != S.n)
    throw std::invalid_argument("lss: s must have `size` entries");
  for (int v : S.s)
    if (v < 0 || v >= S.n) throw std::invalid_argument("lss: s out of range");
  if (j.contains("L"))
    for (const auto& e : j.at("L")) {
      Subset I = 0;
      for (int i : e.at("set").get<std::vector<int>>()) {
        if (i < 0 || i >= S.n)
          throw std::invalid_argument("lss: L set index out of range");
        I = subset_with(I, i);
      }
      int v = e.at("value").get<int>();
      if (v < 0 || v >= S.n)
        throw std::invalid_argument("lss: L value out of range");
      if (S.L_at(I)) throw std::invalid_argument("lss: duplicate L subset");
      S.L.push_back({I, v});
    }
  if (j.contains("boundary"))
    for (int i : j.at("boundary").get<std::vector<int>>()) {
      if (i < 0 || i >= S.n)
        throw std::invalid_argument("lss: boundary index out of range");
      S.boundary = subset_with(S.boundary, i);
    }
  return S;
}

nlohmann::json FiniteLSS::to_json() const {
  nlohmann::json j;
  j["size"] = n;
  j["s"] = s;
  j["L"] = nlohmann::json::array();
  for (const auto& [I, v] : L)
    j["L"].push_back({{"set", subset_elements(I)}, {"value", v}});
  if (boundary) j["boundary"] = subset_elements(boundary);
  return j;
}

std::optional<int> FiniteLSS::L_at(Subset I) const {
  for (const auto& [J, v] : L)
    if (J == I) return v;
  return std::nullopt;
}

bool FiniteLSS::successor_closed(Subset I) const {
  for (int i : subset_elements(I))
    if (!subset_has(I, s[static_cast<std::size_t>(i)])) return false;
  return true;
}

Subset FiniteLSS::s_preimage(Subset I) const {
  Subset r = 0;
  for (int i = 0; i < n; ++i)
    if (subset_has(I, s[static_cast<std::size_t>(i)])) r = subset_with(r, i);
  return r;
}

Subset FiniteLSS::s_inf(Subset I) const {
  Subset r = I;
  while (true) {
    Subset next = r | s_preimage(r);
    if (next == r) return r;
    r = next;
  }
}

Subset FiniteLSS::L_pre_union(Subset I) const {
  Subset r = 0;
  for (const auto& [A, v] : L)
    if (subset_has(I, v)) r |= A;
  return r;
}

ClosureResult closure_iterated(const FiniteLSS& S, Subset I) {
  ClosureResult r;
  r.set = S.s_inf(I);
  while (true) {
    Subset next = S.s_inf(r.set | S.L_pre_union(r.set));
    if (next == r.set) break;
    r.set = next;
    ++r.iterations;
  }
  return r;
}

ClosureResult closure_two_term(const FiniteLSS& S, Subset I) {
  ClosureResult r;
  Subset a = S.s_inf(I);
  r.set = a | S.L_pre_union(a);
  r.iterations = 1;
  if (r.set != closure_iterated(S, I).set)
    throw std::logic_error(
        "closure_two_term: disagrees with the iterated closure on " +
        elem_list(I) + " (system is not a counting system)");
  return r;
}

bool leq_s(const FiniteLSS& S, int x, int y) {
  Subset visited = 0;
  int z = x;
  while (!subset_has(visited, z)) {
    if (z == y) return true;
    visited = subset_with(visited, z);
    z = S.s[static_cast<std::size_t>(z)];
  }
  return z == y;
}

bool leq_L(const FiniteLSS& S, int x, int y) {
  for (const auto& [A, v] : S.L)
    if (v == y && subset_has(A, x)) return true;
  return false;
}

bool specialization_leq(const FiniteLSS& S, int x, int y) {
  return subset_has(closure_iterated(S, subset_with(0, y)).set, x);
}

bool specialization_leq_two_case(const FiniteLSS& S, int x, int y) {
  if (leq_s(S, x, y)) return true;
  for (int z = 0; z < S.n; ++z)
    if (leq_L(S, x, z) && leq_s(S, z, y)) return true;
  return false;
}

CheckReport check_C1_C2(const FiniteLSS& S) {
  CheckReport r;
  r.subject = "C1-C2";
  if (S.n > 20) throw std::invalid_argument("check_C1_C2: carrier too large");

  bool c1 = true, c1_boundary = true;
  std::string w1;
  for (Subset I = 0; I <= full_subset(S.n) && S.n > 0; ++I) {
    bool closed = S.successor_closed(I);
    bool in_dom = S.L_at(I).has_value();
    if (closed != in_dom) {
      c1 = false;
      // subsets that are closed only through a capped self-loop are finite
      // truncations of genuinely infinite successor-closed sets
      if (!(closed && (I & S.boundary) != 0)) c1_boundary = false;
      if (w1.empty())
        w1 = elem_list(I) + (closed ? " successor-closed but L undefined"
                                    : " in dom L but not successor-closed");
    }
    if (I == full_subset(S.n)) break;
  }
  if (c1)
    r.add("C1 dom L = successor-closed subsets", CheckStatus::pass);
  else if (c1_boundary)
    r.add("C1 dom L = successor-closed subsets", CheckStatus::bounded_pass, "",
          "closed-but-undefined subsets all touch the boundary cap: " + w1);
  else
    r.add("C1 dom L = successor-closed subsets", CheckStatus::fail, w1);

  bool c2 = true;
  std::string w2;
  for (const auto& [I, vi] : S.L)
    for (const auto& [J, vj] : S.L)
      if (closure_iterated(S, I).set == closure_iterated(S, J).set && vi != vj) {
        c2 = false;
        if (w2.empty())
          w2 = elem_list(I) + " and " + elem_list(J) +
               " have equal closures but different L values";
      }
  r.add("C2 equal closures give equal limits",
        c2 ? CheckStatus::pass : CheckStatus::fail, w2);
  return r;
}

namespace {

// Least successor-closed, L-image-closed subset; C5 holds iff it is the
// whole carrier.
Subset c5_least_fixed_point(const FiniteLSS& S) {
  Subset J = 0;
  while (true) {
    Subset next = J;
    for (int i : subset_elements(J))
      next = subset_with(next, S.s[static_cast<std::size_t>(i)]);
    for (const auto& [A, v] : S.L)
      if ((A & ~J) == 0) next = subset_with(next, v);
    if (next == J) return J;
    J = next;
  }
}

void add_bounded(CheckReport& r, const std::string& name, bool ok,
                 bool boundary_only, const std::string& witness) {
  if (ok)
    r.add(name, CheckStatus::pass);
  else if (boundary_only)
    r.add(name, CheckStatus::bounded_pass, "",
          "holds away from the boundary; capped witness: " + witness);
  else
    r.add(name, CheckStatus::fail, witness);
}

}  // namespace

CheckReport check_C3_C4_C5(const FiniteLSS& S) {
  CheckReport r;
  r.subject = "C3-C5";

  // C3: s^-1{L(I)} = empty = I n {s(L(I))}
  bool c3 = true, c3_boundary = true;
  std::string w3;
  for (const auto& [I, v] : S.L) {
    Subset pre = S.s_preimage(subset_with(0, v));
    if (pre != 0) {
      c3 = false;
      if ((pre & ~S.boundary) != 0) c3_boundary = false;
      if (w3.empty())
        w3 = "s-preimage of L" + elem_list(I) + "=" + std::to_string(v) +
             " is " + elem_list(pre);
    }
    if (subset_has(I, S.s[static_cast<std::size_t>(v)])) {
      c3 = false;
      if (!subset_has(S.boundary, v)) c3_boundary = false;
      if (w3.empty())
        w3 = "s(L(I)) lies in I for I=" + elem_list(I);
    }
  }
  add_bounded(r, "C3 limits are not successors", c3, c3_boundary, w3);

  // C4: s injective, and L(I)=L(J) => equal closures
  bool c4 = true, c4_boundary = true;
  std::string w4;
  for (int x = 0; x < S.n; ++x)
    for (int y = x + 1; y < S.n; ++y)
      if (S.s[static_cast<std::size_t>(x)] == S.s[static_cast<std::size_t>(y)]) {
        c4 = false;
        if (!subset_has(S.boundary, x) && !subset_has(S.boundary, y))
          c4_boundary = false;
        if (w4.empty())
          w4 = "s(" + std::to_string(x) + ") = s(" + std::to_string(y) + ")";
      }
  for (const auto& [I, vi] : S.L)
    for (const auto& [J, vj] : S.L)
      if (vi == vj && closure_iterated(S, I).set != closure_iterated(S, J).set) {
        c4 = false;
        c4_boundary = false;
        if (w4.empty())
          w4 = "L" + elem_list(I) + " = L" + elem_list(J) +
               " with different closures";
      }
  add_bounded(r, "C4 s injective, L reflects closures", c4, c4_boundary, w4);

  // C5 via the least fixed point
  Subset lfp = c5_least_fixed_point(S);
  bool c5 = lfp == full_subset(S.n);
  r.add("C5 induction", c5 ? CheckStatus::pass : CheckStatus::fail,
        c5 ? "" : "least closed-under-s-and-L subset is " + elem_list(lfp));

  // Properties 0-3 of the specialization preorder
  bool p0 = true, p0b = true;
  std::string wp0;
  for (int x = 0; x < S.n; ++x) {
    Subset visited = subset_with(0, x);
    int z = S.s[static_cast<std::size_t>(x)];
    while (true) {
      if (z == x) {
        p0 = false;
        if (!subset_has(S.boundary, x)) p0b = false;
        if (wp0.empty()) wp0 = "s-orbit of " + std::to_string(x) + " returns";
        break;
      }
      if (subset_has(visited, z)) break;
      visited = subset_with(visited, z);
      z = S.s[static_cast<std::size_t>(z)];
    }
  }
  add_bounded(r, "Property 0: no s-cycles", p0, p0b, wp0);

  auto lt = [&](int a, int b) {
    return a != b && specialization_leq(S, a, b) && !specialization_leq(S, b, a);
  };
  bool p1 = true, p1b = true, p2 = true, p2b = true;
  std::string wp1, wp2;
  for (int x = 0; x < S.n; ++x)
    for (int y = 0; y < S.n; ++y) {
      int sx = S.s[static_cast<std::size_t>(x)];
      if (lt(x, y) && !specialization_leq(S, sx, y)) {
        p1 = false;
        if (!subset_has(S.boundary, x)) p1b = false;
        if (wp1.empty())
          wp1 = "x=" + std::to_string(x) + " < y=" + std::to_string(y);
      }
      if (lt(y, sx) && !specialization_leq(S, y, x)) {
        p2 = false;
        if (!subset_has(S.boundary, x)) p2b = false;
        if (wp2.empty())
          wp2 = "y=" + std::to_string(y) + " < s(" + std::to_string(x) + ")";
      }
    }
  add_bounded(r, "Property 1: x < y gives s(x) <= y", p1, p1b, wp1);
  add_bounded(r, "Property 2: y < s(x) gives y <= x", p2, p2b, wp2);

  bool p3 = true, p3b = true;
  std::string wp3;
  for (const auto& [I, v] : S.L)
    for (int y = 0; y < S.n; ++y) {
      bool above = true;
      for (int x : subset_elements(I))
        if (!lt(x, y)) above = false;
      if (above && !specialization_leq(S, v, y)) {
        p3 = false;
        if (!subset_has(S.boundary, y)) p3b = false;
        if (wp3.empty())
          wp3 = "y=" + std::to_string(y) + " bounds I=" + elem_list(I) +
                " but not L(I)";
      }
    }
  add_bounded(r, "Property 3: L(I) below strict bounds of I", p3, p3b, wp3);
  return r;
}

std::pair<Poset, CheckReport> spo_order(const FiniteLSS& S) {
  auto pre = check_C1_C2(S);
  auto axioms = check_C3_C4_C5(S);
  if (!pre.all_passed() || !axioms.all_passed()) {
    const CheckReport& bad = pre.all_passed() ? axioms : pre;
    std::string witness;
    for (const auto& e : bad.checks)
      if (e.status == CheckStatus::fail) witness = e.name + ": " + e.witness;
    throw std::logic_error("spo_order: axioms fail at scale (" + witness + ")");
  }

  // Poset construction itself validates reflexivity/antisymmetry/transitivity.
  Poset p(S.n, [&](int i, int j) { return specialization_leq(S, i, j); });

  CheckReport r;
  r.subject = "specialization order";
  r.add("antisymmetric partial order", CheckStatus::pass);
  r.add("total", p.is_total() ? CheckStatus::pass : CheckStatus::fail);
  for (const auto& e : axioms.checks)
    if (e.status == CheckStatus::bounded_pass)
      r.note_truncation(e.name + " held only away from the boundary");

  bool succ_ok = true, succ_boundary = true;
  std::string ws;
  for (int x = 0; x < S.n; ++x) {
    auto sx = successor(p, x);
    int actual = S.s[static_cast<std::size_t>(x)];
    if (!sx || *sx != actual) {
      succ_ok = false;
      if (!subset_has(S.boundary, x)) succ_boundary = false;
      if (ws.empty()) ws = "at x=" + std::to_string(x);
    }
  }
  add_bounded(r, "s is the successor of the order", succ_ok, succ_boundary, ws);

  bool joins = true;
  std::string wj;
  for (const auto& [I, v] : S.L) {
    auto j = join(p, I);
    auto ij = incremented_join(p, I);
    bool jv = I == 0 ? (ij && *ij == v)  // empty join is degenerate; v+ of
                                         // the empty set is the least element
                     : (j && *j == v && ij && *ij == v);
    if (!jv) {
      joins = false;
      if (wj.empty()) wj = "L" + elem_list(I) + " = " + std::to_string(v);
    }
  }
  r.add("L(I) is the (incremented) join", joins ? CheckStatus::pass : CheckStatus::fail,
        wj);

  // limit elements (no predecessor in the order) = im L
  Subset limits = 0, imL = 0;
  for (int x = 0; x < S.n; ++x) {
    bool has_pred = false;
    for (int y = 0; y < S.n; ++y)
      if (successor(p, y) == std::optional<int>(x)) has_pred = true;
    if (!has_pred) limits = subset_with(limits, x);
  }
  for (const auto& [I, v] : S.L) imL = subset_with(imL, v);
  r.add("limit elements = image of L", limits == imL ? CheckStatus::pass : CheckStatus::fail,
        limits == imL ? "" : "limits " + elem_list(limits) + " vs im L " + elem_list(imL));
  return {p, r};
}

FiniteLSS lss_from_finite_segment(int n) { return FiniteLSS::peano_segment(n); }

CheckReport peano_degeneration_check(const FiniteLSS& S) {
  CheckReport r;
  r.subject = "Peano degeneration (FIN)";
  if (S.n == 0) {
    r.add("dom L = {empty}", CheckStatus::pass, "",
          "empty system: no L(empty) over the empty universe");
    return r;
  }
  bool dom_ok = S.L.size() == 1 && S.L[0].first == 0;
  r.add("dom L = {empty}", dom_ok ? CheckStatus::pass : CheckStatus::fail,
        dom_ok ? "" : "extra subsets in dom L");
  if (!dom_ok) return r;
  int zero = S.L[0].second;
  r.add("0 = L(empty)", CheckStatus::pass, "", "0 is element " + std::to_string(zero));

  bool z = true, zb = true;
  std::string wz;
  for (int x = 0; x < S.n; ++x)
    if (S.s[static_cast<std::size_t>(x)] == zero) {
      z = false;
      if (!subset_has(S.boundary, x)) zb = false;
      wz = "s(" + std::to_string(x) + ") = 0";
    }
  add_bounded(r, "D1: 0 not in im s", z, zb, wz);

  bool inj = true, injb = true;
  std::string wi;
  for (int x = 0; x < S.n; ++x)
    for (int y = x + 1; y < S.n; ++y)
      if (S.s[static_cast<std::size_t>(x)] == S.s[static_cast<std::size_t>(y)]) {
        inj = false;
        if (!subset_has(S.boundary, x) && !subset_has(S.boundary, y)) injb = false;
        if (wi.empty())
          wi = "s(" + std::to_string(x) + ") = s(" + std::to_string(y) + ")";
      }
  add_bounded(r, "D2: s injective", inj, injb, wi);

  Subset closed = subset_with(0, zero);
  while (true) {
    Subset next = closed;
    for (int i : subset_elements(closed))
      next = subset_with(next, S.s[static_cast<std::size_t>(i)]);
    if (next == closed) break;
    closed = next;
  }
  bool ind = closed == full_subset(S.n);
  r.add("D3: induction", ind ? CheckStatus::pass : CheckStatus::fail,
        ind ? "" : "0-and-s closure is " + elem_list(closed));
  return r;
}

std::string to_dot(const FiniteLSS& S) {
  std::string out = "digraph spo {\n  rankdir=BT;\n";
  for (int x = 0; x < S.n; ++x)
    out += "  n" + std::to_string(x) + " [label=\"" + std::to_string(x) + "\"];\n";
  auto lt = [&](int a, int b) {
    return a != b && specialization_leq(S, a, b) && !specialization_leq(S, b, a);
  };
  for (int x = 0; x < S.n; ++x)
    for (int y = 0; y < S.n; ++y) {
      if (!lt(x, y)) continue;
      bool covering = true;
      for (int z = 0; z < S.n; ++z)
        if (lt(x, z) && lt(z, y)) covering = false;
      if (covering)
        out += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
    }
  return out + "}\n";
}

}  // namespace ordcount
