#include "ordcount/search.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "ordcount/hfset.hpp"

namespace ordcount {

SearchSpec SearchSpec::all_required(int n) {
  SearchSpec s;
  s.size = n;
  s.req.fill(AxiomReq::require);
  return s;
}

std::array<bool, 5> axiom_vector(const FiniteLSS& S, std::string* witness) {
  std::array<bool, 5> v{};
  auto ok = [&](const CheckEntry* e) {
    bool good = e->status == CheckStatus::pass ||
                e->status == CheckStatus::bounded_pass ||
                e->status == CheckStatus::not_applicable;
    if (!good && witness && witness->empty())
      *witness = e->name + ": " + e->witness;
    return good;
  };
  auto r12 = check_C1_C2(S);
  v[0] = ok(r12.find("C1 dom L = successor-closed subsets"));
  v[1] = ok(r12.find("C2 equal closures give equal limits"));
  auto r345 = check_C3_C4_C5(S);
  v[2] = ok(r345.find("C3 limits are not successors"));
  v[3] = ok(r345.find("C4 s injective, L reflects closures"));
  v[4] = ok(r345.find("C5 induction"));
  return v;
}

std::vector<std::uint64_t> canonical_encoding(const FiniteLSS& S) {
  int n = S.n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> enc;
    for (int i = 0; i < n; ++i) {
      // x is the preimage of position i under the relabeling
      int x = 0;
      while (perm[static_cast<std::size_t>(x)] != i) ++x;
      enc.push_back(static_cast<std::uint64_t>(
          perm[static_cast<std::size_t>(S.s[static_cast<std::size_t>(x)])]));
    }
    std::vector<std::uint64_t> table;
    for (const auto& [I, v] : S.L) {
      Subset pI = 0;
      for (int i : subset_elements(I))
        pI = subset_with(pI, perm[static_cast<std::size_t>(i)]);
      table.push_back((pI << 8) |
                      static_cast<std::uint64_t>(perm[static_cast<std::size_t>(v)]));
    }
    std::sort(table.begin(), table.end());
    enc.insert(enc.end(), table.begin(), table.end());
    if (best.empty() || enc < best) best = enc;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) best.push_back(0);  // empty system
  return best;
}

namespace {

bool injective(const std::vector<int>& s) {
  std::set<int> seen(s.begin(), s.end());
  return seen.size() == s.size();
}

std::vector<Subset> successor_closed_subsets(const FiniteLSS& S) {
  std::vector<Subset> out;
  for (Subset I = 0; S.n > 0; ++I) {
    if (S.successor_closed(I)) out.push_back(I);
    if (I == full_subset(S.n)) break;
  }
  if (S.n == 0) out.push_back(0);
  return out;
}

bool req_matches(const SearchSpec& spec, const std::array<bool, 5>& v) {
  for (std::size_t i = 0; i < 5; ++i) {
    if (spec.req[i] == AxiomReq::require && !v[i]) return false;
    if (spec.req[i] == AxiomReq::forbid && v[i]) return false;
  }
  return true;
}

struct Shard {
  std::vector<CatalogEntry> entries;
  std::uint64_t tables = 0;
  bool over_budget = false;
};

void emit(const SearchSpec& spec, Shard& shard, FiniteLSS S) {
  std::string w;
  auto v = axiom_vector(S, &w);
  if (!req_matches(spec, v)) return;
  shard.entries.push_back({std::move(S), v, std::move(w)});
}

// enumerate L values over the fixed successor-closed domain with local C3
// pruning when C3 is required
void assign(const SearchSpec& spec, Shard& shard, FiniteLSS& S,
            const std::vector<Subset>& dom, std::size_t k,
            std::size_t shard_budget) {
  if (++shard.tables > shard_budget) {
    shard.over_budget = true;
    return;
  }
  if (k == dom.size()) {
    emit(spec, shard, S);
    return;
  }
  Subset I = dom[k];
  for (int v = 0; v < S.n && !shard.over_budget; ++v) {
    if (spec.req[2] == AxiomReq::require) {
      if (S.s_preimage(subset_with(0, v)) != 0) continue;
      if (subset_has(I, S.s[static_cast<std::size_t>(v)])) continue;
    }
    S.L.push_back({I, v});
    assign(spec, shard, S, dom, k + 1, shard_budget);
    S.L.pop_back();
  }
}

void run_code(const SearchSpec& spec, Shard& shard, std::uint64_t code,
              std::size_t shard_budget) {
  int n = spec.size;
  FiniteLSS S;
  S.n = n;
  std::uint64_t c = code;
  for (int i = 0; i < n; ++i) {
    S.s.push_back(static_cast<int>(c % static_cast<std::uint64_t>(n)));
    c /= static_cast<std::uint64_t>(n);
  }
  if (spec.req[3] == AxiomReq::require && !injective(S.s)) return;

  if (spec.req[0] == AxiomReq::require) {
    auto dom = successor_closed_subsets(S);
    assign(spec, shard, S, dom, 0, shard_budget);
  } else {
    // sampled partial tables, seeded per successor map for determinism
    // under any job split
    std::mt19937 rng(spec.seed ^ static_cast<unsigned>(code * 2654435761u));
    for (int t = 0; t < 16 && !shard.over_budget; ++t) {
      FiniteLSS R = S;
      for (Subset I = 0;; ++I) {
        if (rng() % 4 == 0 && !R.L_at(I))
          R.L.push_back({I, static_cast<int>(rng() % n)});
        if (I == full_subset(n)) break;
      }
      if (++shard.tables > shard_budget) {
        shard.over_budget = true;
        return;
      }
      emit(spec, shard, R);
    }
  }
}

std::uint64_t pow_u64(int base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::uint64_t>(base);
  return r;
}

}  // namespace

Catalog search_enumerate(const SearchSpec& spec) {
  if (spec.size < 0 || spec.size > 5)
    throw ResourceError("search: size must be 0..5");
  Catalog cat;
  if (spec.size == 0) {
    cat.raw_successor_maps = 1;
    Shard shard;
    emit(spec, shard, FiniteLSS{});
    cat.entries = std::move(shard.entries);
    return cat;
  }

  std::uint64_t total = pow_u64(spec.size, spec.size);
  cat.raw_successor_maps = total;
  int jobs = std::max(1, spec.jobs);
  std::vector<Shard> shards(static_cast<std::size_t>(jobs));
  std::size_t shard_budget = spec.budget / static_cast<std::size_t>(jobs);

  auto work = [&](int j) {
    // contiguous code stripes keep the merged order equal to sequential order
    std::uint64_t lo = total * static_cast<std::uint64_t>(j) /
                       static_cast<std::uint64_t>(jobs);
    std::uint64_t hi = total * static_cast<std::uint64_t>(j + 1) /
                       static_cast<std::uint64_t>(jobs);
    for (std::uint64_t code = lo; code < hi; ++code) {
      run_code(spec, shards[static_cast<std::size_t>(j)], code, shard_budget);
      if (shards[static_cast<std::size_t>(j)].over_budget) break;
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }

  std::set<std::vector<std::uint64_t>> seen;
  for (auto& shard : shards) {
    if (shard.over_budget) throw ResourceError("search: table budget exceeded");
    cat.tables_examined += shard.tables;
    for (auto& e : shard.entries) {
      if (spec.dedup && !seen.insert(canonical_encoding(e.system)).second)
        continue;
      cat.entries.push_back(std::move(e));
    }
  }
  return cat;
}

std::string Catalog::to_jsonl() const {
  std::string out;
  for (const auto& e : entries) {
    nlohmann::json j;
    j["system"] = e.system.to_json();
    j["axioms"] = {{"C1", e.axioms[0]},
                   {"C2", e.axioms[1]},
                   {"C3", e.axioms[2]},
                   {"C4", e.axioms[3]},
                   {"C5", e.axioms[4]}};
    if (!e.witness.empty()) j["witness"] = e.witness;
    out += j.dump() + "\n";
  }
  return out;
}

FiniteLSS two_segment_system(int k) {
  FiniteLSS S;
  S.n = 2 * k;
  for (int i = 0; i < k; ++i) S.s.push_back(std::min(i + 1, k - 1));
  for (int i = 0; i < k; ++i) S.s.push_back(std::min(k + i + 1, 2 * k - 1));
  S.L = {{Subset{0}, 0}};
  S.boundary = subset_with(subset_with(0, k - 1), 2 * k - 1);
  return S;
}

FiniteLSS merge_system() {
  // 0 -> 1 -> 2 (capped) with a second start 3 -> 1: s is non-injective off
  // the cap; L({2}) = 3 seeds the extra start so induction still exhausts
  // the carrier.
  FiniteLSS S;
  S.n = 4;
  S.s = {1, 2, 2, 1};
  S.L = {{Subset{0}, 0}, {subset_with(0, 2), 3}};
  S.boundary = subset_with(0, 2);
  return S;
}

CheckReport independence_report(int max_size) {
  CheckReport r;
  r.subject = "axiom independence (C3/C4/C5)";

  auto smallest = [&](std::array<AxiomReq, 5> req) -> std::vector<CatalogEntry> {
    for (int n = 1; n <= max_size; ++n) {
      SearchSpec spec;
      spec.size = n;
      spec.req = req;
      auto cat = search_enumerate(spec);
      if (!cat.entries.empty()) return cat.entries;
    }
    return {};
  };

  std::array<AxiomReq, 5> c3{AxiomReq::require, AxiomReq::require,
                             AxiomReq::forbid, AxiomReq::require,
                             AxiomReq::require};
  auto w3 = smallest(c3);
  r.add("C3 independent of C1,C2,C4,C5",
        w3.empty() ? CheckStatus::fail : CheckStatus::pass,
        w3.empty() ? "no witness below cap"
                   : "size " + std::to_string(w3.front().system.n) + ": " +
                         w3.front().witness);

  // An uncapped finite witness for C4 cannot exist: the full carrier is
  // successor-closed, C1 defines L on it, and s(L(X)) always lands back in
  // X, sinking C3. The constructed capped merge system stands in.
  std::array<AxiomReq, 5> c4{AxiomReq::require, AxiomReq::require,
                             AxiomReq::require, AxiomReq::forbid,
                             AxiomReq::require};
  bool no_finite_c4 = smallest(c4).empty();
  std::string mw;
  auto mv = axiom_vector(merge_system(), &mw);
  bool merge_ok = mv[0] && mv[1] && mv[2] && !mv[3] && mv[4];
  r.add("C4 independent of C1,C2,C3,C5",
        (no_finite_c4 && merge_ok) ? CheckStatus::bounded_pass
                                   : CheckStatus::fail,
        merge_ok ? "" : mw,
        "no uncapped finite witness exists; capped merge system violates C4 "
        "with the rest holding away from the cap");

  std::array<AxiomReq, 5> c5{AxiomReq::require, AxiomReq::require,
                             AxiomReq::require, AxiomReq::require,
                             AxiomReq::forbid};
  bool no_finite_c5 = smallest(c5).empty();
  auto two = two_segment_system(3);
  std::string tw;
  auto tv = axiom_vector(two, &tw);
  bool two_ok = tv[0] && tv[1] && tv[2] && tv[3] && !tv[4];
  r.add("C5 independent of C1,C2,C3,C4",
        (no_finite_c5 && two_ok) ? CheckStatus::bounded_pass
                                 : CheckStatus::fail,
        two_ok ? "" : tw,
        "no uncapped finite witness exists; two capped segments violate C5 "
        "with the rest holding away from the caps");
  return r;
}

}  // namespace ordcount
