#include "ordcount/poset.hpp"

#include <bit>
#include <string>

namespace ordcount {

int subset_count(Subset s) { return std::popcount(s); }

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

Poset::Poset(int n, const std::function<bool(int, int)>& leq) : n_(n) {
  if (n < 0 || n > 64) throw std::invalid_argument("Poset: carrier size 0..64");
  leq_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq_[static_cast<std::size_t>(i) * n + j] = leq(i, j);
  for (int i = 0; i < n; ++i)
    if (!this->leq(i, i)) throw std::invalid_argument("Poset: not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && this->leq(i, j) && this->leq(j, i))
        throw std::invalid_argument("Poset: not antisymmetric");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (this->leq(i, j) && this->leq(j, k) && !this->leq(i, k))
          throw std::invalid_argument("Poset: not transitive");
}

bool Poset::is_total() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!leq(i, j) && !leq(j, i)) return false;
  return true;
}

Poset Poset::chain(int n) {
  return Poset(n, [](int i, int j) { return i <= j; });
}

Poset Poset::antichain(int n) {
  return Poset(n, [](int i, int j) { return i == j; });
}

Subset lower_complement(const Poset& p, Subset s) {
  Subset out = 0;
  for (int x = 0; x < p.size(); ++x) {
    bool all = true;
    for (int y : subset_elements(s))
      if (!p.lt(x, y)) {
        all = false;
        break;
      }
    if (all) out = subset_with(out, x);
  }
  return out;
}

Subset upper_complement(const Poset& p, Subset s) {
  Subset out = 0;
  for (int x = 0; x < p.size(); ++x) {
    bool all = true;
    for (int y : subset_elements(s))
      if (!p.lt(y, x)) {
        all = false;
        break;
      }
    if (all) out = subset_with(out, x);
  }
  return out;
}

std::optional<int> min_element(const Poset& p, Subset s) {
  for (int x : subset_elements(s)) {
    bool least = true;
    for (int y : subset_elements(s))
      if (!p.leq(x, y)) {
        least = false;
        break;
      }
    if (least) return x;
  }
  return std::nullopt;
}

std::optional<int> max_element(const Poset& p, Subset s) {
  for (int x : subset_elements(s)) {
    bool greatest = true;
    for (int y : subset_elements(s))
      if (!p.leq(y, x)) {
        greatest = false;
        break;
      }
    if (greatest) return x;
  }
  return std::nullopt;
}

std::optional<int> join(const Poset& p, Subset s) {
  Subset uppers = 0;
  for (int x = 0; x < p.size(); ++x) {
    bool all = true;
    for (int y : subset_elements(s))
      if (!p.leq(y, x)) {
        all = false;
        break;
      }
    if (all) uppers = subset_with(uppers, x);
  }
  return min_element(p, uppers);
}

std::optional<int> incremented_join(const Poset& p, Subset s) {
  return min_element(p, upper_complement(p, s));
}

std::optional<int> successor(const Poset& p, int x) {
  return incremented_join(p, subset_with(0, x));
}

CheckReport check_L_laws(const Poset& p) {
  CheckReport r;
  r.subject = "L-laws";
  const int n = p.size();
  std::vector<std::optional<int>> succ(n);
  for (int x = 0; x < n; ++x) succ[x] = successor(p, x);
  const bool total = p.is_total();

  auto law = [&](const char* name, bool applicable,
                 const std::function<std::optional<std::string>()>& find) {
    if (!applicable) {
      r.add(name, CheckStatus::not_applicable, "", "requires a total order");
      return;
    }
    auto w = find();
    if (w)
      r.add(name, CheckStatus::fail, *w);
    else
      r.add(name, CheckStatus::pass);
  };

  law("L1 x < x+", true, [&]() -> std::optional<std::string> {
    for (int x = 0; x < n; ++x)
      if (succ[x] && !p.lt(x, *succ[x])) return "x=" + std::to_string(x);
    return std::nullopt;
  });
  law("L2 nothing strictly between x and x+", true,
      [&]() -> std::optional<std::string> {
        for (int x = 0; x < n; ++x)
          if (succ[x])
            for (int z = 0; z < n; ++z)
              if (p.lt(x, z) && p.lt(z, *succ[x]))
                return "x=" + std::to_string(x) + " z=" + std::to_string(z);
        return std::nullopt;
      });
  law("L3 x<y iff x+ <= y", true, [&]() -> std::optional<std::string> {
    for (int x = 0; x < n; ++x)
      if (succ[x])
        for (int y = 0; y < n; ++y)
          if (p.lt(x, y) != p.leq(*succ[x], y))
            return "x=" + std::to_string(x) + " y=" + std::to_string(y);
    return std::nullopt;
  });
  law("L4 x = v+ of {x}-down", total, [&]() -> std::optional<std::string> {
    for (int x = 0; x < n; ++x) {
      auto v = incremented_join(p, lower_complement(p, subset_with(0, x)));
      if (v && *v != x) return "x=" + std::to_string(x);
    }
    return std::nullopt;
  });
  law("L5 x<y+ iff x<=y", total, [&]() -> std::optional<std::string> {
    for (int y = 0; y < n; ++y)
      if (succ[y])
        for (int x = 0; x < n; ++x)
          if (p.lt(x, *succ[y]) != p.leq(x, y))
            return "x=" + std::to_string(x) + " y=" + std::to_string(y);
    return std::nullopt;
  });
  law("L6 x+=y+ iff x=y", total, [&]() -> std::optional<std::string> {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (succ[x] && succ[y] && (*succ[x] == *succ[y]) != (x == y))
          return "x=" + std::to_string(x) + " y=" + std::to_string(y);
    return std::nullopt;
  });
  law("L7 x<y iff x+<y+", total, [&]() -> std::optional<std::string> {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (succ[x] && succ[y] && p.lt(x, y) != p.lt(*succ[x], *succ[y]))
          return "x=" + std::to_string(x) + " y=" + std::to_string(y);
    return std::nullopt;
  });
  return r;
}

CheckReport check_lemma_max(const Poset& p, Subset s) {
  CheckReport r;
  r.subject = "lemma-max";
  const bool total = p.is_total();
  auto mx = max_element(p, s);
  auto j = join(p, s);
  auto ij = incremented_join(p, s);

  // (i) no largest element: join exists iff incremented join exists, equal.
  if (!mx || s == 0) {
    bool ok = (j.has_value() == ij.has_value()) && (!j || *j == *ij);
    r.add("(i) no-max: join <-> incremented join",
          ok ? CheckStatus::pass : CheckStatus::fail,
          ok ? "" : "S=" + std::to_string(s));
  } else {
    r.add("(i) no-max: join <-> incremented join", CheckStatus::not_applicable,
          "", "S has a largest element");
  }
  // (i) converse: join = incremented join forces no largest element.
  if (j && ij && *j == *ij && mx && s != 0)
    r.add("(i) converse", CheckStatus::fail, "S=" + std::to_string(s));
  else
    r.add("(i) converse", CheckStatus::pass);

  // (ii) max x: incremented join exists iff x+ exists, equal.
  if (mx) {
    auto sx = successor(p, *mx);
    bool ok = (ij.has_value() == sx.has_value()) && (!ij || *ij == *sx);
    r.add("(ii) max: v+S = (max S)+", ok ? CheckStatus::pass : CheckStatus::fail,
          ok ? "" : "S=" + std::to_string(s));
  } else {
    r.add("(ii) max: v+S = (max S)+", CheckStatus::not_applicable, "",
          "S has no largest element");
  }
  // (ii) converse (total order): v+S = x+ forces x = max S.
  if (total && ij) {
    bool bad = false;
    for (int x = 0; x < p.size(); ++x) {
      auto sx = successor(p, x);
      if (sx && *sx == *ij && (!mx || *mx != x)) bad = true;
    }
    r.add("(ii) converse", bad ? CheckStatus::fail : CheckStatus::pass,
          bad ? "S=" + std::to_string(s) : "");
  } else if (!total) {
    r.add("(ii) converse", CheckStatus::not_applicable, "",
          "requires a total order");
  } else {
    r.add("(ii) converse", CheckStatus::pass);
  }

  // (iii) v+ of S-down = min S, when defined.
  auto ijl = incremented_join(p, lower_complement(p, s));
  auto mn = min_element(p, s);
  if (ijl) {
    bool ok = mn && *mn == *ijl;
    r.add("(iii) v+(S-down) = min S", ok ? CheckStatus::pass : CheckStatus::fail,
          ok ? "" : "S=" + std::to_string(s));
  } else {
    r.add("(iii) v+(S-down) = min S", CheckStatus::not_applicable, "",
          "v+(S-down) undefined");
  }
  if (total && mn) {
    bool ok = ijl && *ijl == *mn;
    r.add("(iii) converse", ok ? CheckStatus::pass : CheckStatus::fail,
          ok ? "" : "S=" + std::to_string(s));
  } else if (!total) {
    r.add("(iii) converse", CheckStatus::not_applicable, "",
          "requires a total order");
  } else {
    r.add("(iii) converse", CheckStatus::pass);
  }
  return r;
}

CheckReport check_lemma_max_all(const Poset& p) {
  CheckReport out;
  out.subject = "lemma-max (all subsets)";
  if (p.size() > 20) throw std::invalid_argument("carrier too large");
  for (Subset s = 0; s <= full_subset(p.size()) && p.size() > 0; ++s) {
    auto r = check_lemma_max(p, s);
    for (const auto& c : r.checks)
      if (c.status == CheckStatus::fail) {
        out.add(c.name, CheckStatus::fail, c.witness);
        return out;
      }
    if (s == full_subset(p.size())) break;
  }
  out.add("all parts, all subsets", CheckStatus::pass);
  return out;
}

}  // namespace ordcount
