#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordcount/carrier.hpp"
#include "ordcount/hfset.hpp"
#include "ordcount/lss.hpp"
#include "ordcount/morphism.hpp"
#include "ordcount/search.hpp"
#include "ordcount/symbolic_lss.hpp"

using namespace ordcount;

namespace {

struct Output {
  bool json = false;
  std::vector<CheckReport> reports;
  nlohmann::json payload;  // extra machine output (tables, closures, ...)
  bool has_payload = false;

  int finish() const {
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.all_passed();
    if (json) {
      nlohmann::json out;
      out["reports"] = nlohmann::json::array();
      for (const auto& r : reports) out["reports"].push_back(r.to_json());
      if (has_payload) out["result"] = payload;
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& r : reports) std::cout << r.pretty();
      if (has_payload) {
        if (payload.is_string())
          std::cout << payload.get<std::string>();
        else
          std::cout << payload.dump() << "\n";
      }
    }
    return ok ? 0 : 1;
  }
};

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

HFSet random_hf(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> width(0, depth > 0 ? 3 : 0);
  int w = width(rng);
  std::vector<HFSet> cs;
  for (int i = 0; i < w; ++i) cs.push_back(random_hf(rng, depth - 1));
  return HFSet::make(cs);
}

CheckReport universe_lemma_suite(unsigned seed, int cases) {
  CheckReport r;
  r.subject = "restricted power set lemma suite";
  std::mt19937 rng(seed);
  bool subsets = true, unions = true, images = true, products = true,
       transitive = true;
  for (auto u : {UniverseTag::FIN, UniverseTag::CNT})
    for (int i = 0; i < cases; ++i) {
      std::vector<HFSet> X;
      for (int k = 0; k < 5; ++k) X.push_back(random_hf(rng, 3));
      std::sort(X.begin(), X.end());
      X.erase(std::unique(X.begin(), X.end()), X.end());
      std::vector<HFSet> B(X.begin(), X.begin() + X.size() / 2 + 1);
      std::vector<HFSet> A(B.begin(), B.begin() + B.size() / 2);
      if (!in_restricted_powerset(B, X, u) || !in_restricted_powerset(A, X, u))
        subsets = false;
      std::vector<HFSet> AB = A;
      AB.insert(AB.end(), B.begin(), B.end());
      if (!in_restricted_powerset(AB, X, u)) unions = false;
      std::vector<HFSet> Y, fA;
      for (std::size_t k = 0; k < X.size(); ++k) Y.push_back(random_hf(rng, 2));
      for (std::size_t k = 0; k < A.size() && k < Y.size(); ++k)
        fA.push_back(Y[k]);
      if (!in_restricted_powerset(fA, Y, u)) images = false;
      std::vector<HFSet> prod;
      for (const auto& a : A)
        for (const auto& b : B) prod.push_back(kuratowski_pair(a, b));
      if (!in_restricted_powerset(prod, prod, u)) products = false;
      HFSet x = random_hf(rng, 3);
      if (hf_is_transitive(x) != hf_union_subset_characterization(x))
        transitive = false;
    }
  auto st = [](bool b) { return b ? CheckStatus::pass : CheckStatus::fail; };
  r.add("subsets of admitted sets are admitted", st(subsets));
  r.add("binary unions stay admitted", st(unions));
  r.add("images land in the restricted power set", st(images));
  r.add("products via Kuratowski pairs stay admitted", st(products));
  r.add("transitivity = union-subset characterization", st(transitive));
  r.note_truncation(std::to_string(cases) + " random cases per universe tag");
  return r;
}

Subset parse_subset(const std::string& text, int n) {
  auto j = nlohmann::json::parse(text);
  Subset I = 0;
  for (int i : j.get<std::vector<int>>()) {
    if (i < 0 || i >= n)
      throw std::invalid_argument("subset index out of range");
    I = subset_with(I, i);
  }
  return I;
}

void apply_axiom_list(SearchSpec& spec, const std::string& list, AxiomReq req) {
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() == 2 && tok[0] == 'C' && tok[1] >= '1' && tok[1] <= '5')
      spec.req[static_cast<std::size_t>(tok[1] - '1')] = req;
    else
      throw CLI::ValidationError("axiom list", "expected C1..C5, got " + tok);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"checkers for ordinal and counting systems"};
  app.require_subcommand(1);

  Output out;
  unsigned seed = 12345;
  int cases = 500;
  app.add_flag("--json", out.json, "machine-readable output");

  auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "PRNG seed for property suites");
    cmd->add_option("--cases", cases, "cases per property suite");
  };

  // check-universe-lemmas
  auto* lem = app.add_subcommand("check-universe-lemmas",
                                 "restricted power set lemma suite");
  add_sampling(lem);
  lem->callback([&] { out.reports.push_back(universe_lemma_suite(seed, cases)); });

  // check-ordinal <carrier>
  std::string carrier_text;
  auto* ord = app.add_subcommand("check-ordinal",
                                 "ordinal-system axioms on a carrier");
  ord->add_option("carrier", carrier_text, "chain:N | vn:N | cnf:EXPR [@FIN|@CNT]")
      ->required();
  add_sampling(ord);
  ord->callback([&] {
    auto c = parse_carrier(carrier_text);
    CheckOptions opt{seed, cases};
    out.reports.push_back(check_O1prime(c, opt));
    out.reports.push_back(check_O2(c, opt));
    out.reports.push_back(check_O2ab_equivalence(c, opt));
    CheckReport lim;
    lim.subject = "limit classification on " + c.describe();
    bool agreed = true;
    std::string sample_note;
    std::mt19937 rng(seed);
    for (int i = 0; i < 32; ++i) {
      CnfOrdinal x = c.is_finite()
                         ? CnfOrdinal::natural(c.bound ? rng() % c.bound : 0)
                         : cnf_random_below(c.cnf_bound, rng);
      if (!c.contains(x)) continue;
      try {
        LimitEvidence ev;
        auto k = classify_limit(c, x, &ev);
        sample_note = to_string(x) + " -> " +
                      (k == LimitClass::limit_ordinal ? "limit" : "successor");
      } catch (const std::logic_error&) {
        agreed = false;
      }
    }
    lim.add("three limit criteria agree",
            agreed ? CheckStatus::pass : CheckStatus::fail, "", sample_note);
    out.reports.push_back(lim);
  });

  // closure <system.json> <subset>
  std::string sys_path, subset_text;
  auto* clo = app.add_subcommand("closure", "closure of a subset");
  clo->add_option("system", sys_path, "FiniteLSS json")->required();
  clo->add_option("subset", subset_text, "json array of indices")->required();
  clo->callback([&] {
    auto S = FiniteLSS::from_json(load_json(sys_path));
    auto r = closure_iterated(S, parse_subset(subset_text, S.n));
    out.payload = subset_elements(r.set);
    out.has_payload = true;
  });

  // spo <system.json> [--dot]
  bool want_dot = false;
  auto* spo = app.add_subcommand("spo", "specialization order of a system");
  spo->add_option("system", sys_path, "FiniteLSS json")->required();
  spo->add_flag("--dot", want_dot, "emit the Hasse diagram as DOT");
  spo->callback([&] {
    auto S = FiniteLSS::from_json(load_json(sys_path));
    auto [p, r] = spo_order(S);
    (void)p;
    out.reports.push_back(std::move(r));
    if (want_dot) {
      out.payload = to_dot(S);
      out.has_payload = true;
    }
  });

  // check-counting <system.json>
  auto* cnt = app.add_subcommand("check-counting",
                                 "counting-system axioms C1-C5");
  cnt->add_option("system", sys_path, "FiniteLSS json")->required();
  cnt->callback([&] {
    auto S = FiniteLSS::from_json(load_json(sys_path));
    out.reports.push_back(check_C1_C2(S));
    out.reports.push_back(check_C3_C4_C5(S));
  });

  // recursion <carrier> <target.json> <bound>
  std::string target_path, bound_text;
  auto* rec = app.add_subcommand("recursion", "transfinite recursion table");
  rec->add_option("carrier", carrier_text, "source carrier")->required();
  rec->add_option("target", target_path, "recursion target json")->required();
  rec->add_option("bound", bound_text, "cnf ordinal bound")->required();
  rec->callback([&] {
    auto c = parse_carrier(carrier_text);
    auto t = parse_recursion_target(load_json(target_path));
    auto f = transfinite_recursion(c, t, parse_cnf(bound_text));
    out.reports.push_back(verify_recursion(f, t));
    out.payload = f.to_json();
    out.has_payload = true;
  });

  // initial-morphism <target.json> <bound> [--carrier]
  std::string src_carrier = "cnf:w^2";
  auto* ini = app.add_subcommand("initial-morphism",
                                 "initial morphism into a finite counting system");
  ini->add_option("target", target_path, "FiniteLSS json")->required();
  ini->add_option("bound", bound_text, "cnf ordinal bound")->required();
  ini->add_option("--carrier", src_carrier, "source carrier (default cnf:w^2)");
  ini->callback([&] {
    auto T = FiniteLSS::from_json(load_json(target_path));
    auto c = parse_carrier(src_carrier);
    auto f = initial_morphism(c, T, parse_cnf(bound_text));
    out.reports.push_back(verify_recursion(f, target_from_counting(T)));
    out.payload = f.to_json();
    out.has_payload = true;
  });

  // uniqueness <target.json> <len>
  int seg_len = 0;
  auto* uni = app.add_subcommand("uniqueness",
                                 "brute-force morphism uniqueness on a segment");
  uni->add_option("target", target_path, "FiniteLSS json")->required();
  uni->add_option("len", seg_len, "segment length")->required();
  uni->callback([&] {
    auto T = FiniteLSS::from_json(load_json(target_path));
    out.reports.push_back(uniqueness_check(seg_len, T));
  });

  // search
  SearchSpec spec;
  std::string require_list, forbid_list;
  bool independence = false, no_dedup = false;
  auto* sea = app.add_subcommand("search", "enumerate finite systems");
  sea->add_option("--size", spec.size, "carrier size (0..5)");
  sea->add_option("--require", require_list, "axioms that must hold, e.g. C1,C2");
  sea->add_option("--forbid", forbid_list, "axioms that must fail");
  sea->add_option("--jobs", spec.jobs, "worker threads");
  sea->add_option("--budget", spec.budget, "table budget");
  sea->add_option("--seed", spec.seed, "seed for sampled regimes");
  sea->add_flag("--no-dedup", no_dedup, "keep isomorphic duplicates");
  sea->add_flag("--independence", independence,
                "report C3/C4/C5 independence witnesses instead");
  sea->callback([&] {
    if (independence) {
      out.reports.push_back(independence_report());
      return;
    }
    if (!require_list.empty())
      apply_axiom_list(spec, require_list, AxiomReq::require);
    if (!forbid_list.empty()) apply_axiom_list(spec, forbid_list, AxiomReq::forbid);
    spec.dedup = !no_dedup;
    auto cat = search_enumerate(spec);
    std::cout << cat.to_jsonl();
    CheckReport r;
    r.subject = "search size " + std::to_string(spec.size);
    r.add("systems found: " + std::to_string(cat.entries.size()),
          CheckStatus::pass, "",
          std::to_string(cat.tables_examined) + " tables over " +
              std::to_string(cat.raw_successor_maps) + " successor maps");
    out.reports.push_back(std::move(r));
  });

  // peano-check <system.json>
  auto* pea = app.add_subcommand("peano-check",
                                 "Dedekind degeneration of a FIN counting system");
  pea->add_option("system", sys_path, "FiniteLSS json")->required();
  pea->callback([&] {
    auto S = FiniteLSS::from_json(load_json(sys_path));
    auto pre = check_C3_C4_C5(S);
    if (!pre.all_passed()) {
      out.reports.push_back(std::move(pre));
      return;
    }
    out.reports.push_back(peano_degeneration_check(S));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return out.finish();
}
