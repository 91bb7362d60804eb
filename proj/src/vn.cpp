#include "ordcount/vn.hpp"

#include <mutex>
#include <stdexcept>

namespace ordcount {

VNOrdinal vn_zero() { return {HFSet::empty()}; }

VNOrdinal vn_succ(VNOrdinal n) {
  return {hf_union(hf_pair(n.value, hf_singleton(n.value)))};
}

namespace {
std::vector<VNOrdinal>& numerals() {
  static std::vector<VNOrdinal> table{vn_zero()};
  return table;
}
std::mutex numerals_mu;
}  // namespace

VNOrdinal vn_from_nat(unsigned n) {
  std::lock_guard lock(numerals_mu);
  auto& t = numerals();
  while (t.size() <= n) t.push_back(vn_succ(t.back()));
  return t[n];
}

std::optional<unsigned> vn_to_nat(VNOrdinal x) {
  if (!is_vn_ordinal(x.value)) return std::nullopt;
  return static_cast<unsigned>(x.value.size());
}

bool is_vn_ordinal(HFSet x) {
  if (!hf_is_transitive(x)) return false;
  // Total under element-or-equal: any two distinct elements are related by
  // membership one way or the other.
  auto cs = x.children();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (!cs[i].contains(cs[j]) && !cs[j].contains(cs[i])) return false;
  return true;
}

bool vn_leq(VNOrdinal x, VNOrdinal y) { return hf_subset(x.value, y.value); }

bool vn_leq_membership(VNOrdinal x, VNOrdinal y) {
  return x.value == y.value || y.value.contains(x.value);
}

VNOrdinal vn_min_diff(VNOrdinal x, VNOrdinal y) {
  HFSet diff = hf_difference(y.value, x.value);
  if (diff.is_empty())
    throw std::invalid_argument("vn_min_diff: y\\x is empty");
  // min under the element order
  HFSet best = diff.children()[0];
  for (auto c : diff.children())
    if (c != best && best.contains(c)) best = c;
  // Fact 1: the minimum equals the intersection.
  if (best != hf_intersect(x.value, y.value))
    throw std::logic_error("vn_min_diff: Fact 1 violated");
  return {best};
}

VNOrdinal vn_incremented_join(std::span<const VNOrdinal> xs) {
  std::vector<HFSet> elems;
  elems.reserve(xs.size());
  for (auto& x : xs) elems.push_back(x.value);
  HFSet X = HFSet::make(elems);
  return {hf_union(hf_pair(hf_union(X), X))};
}

std::string vn_print(VNOrdinal x, bool raw) {
  if (raw) return to_string(x.value);
  auto n = vn_to_nat(x);
  if (!n) return to_string(x.value);
  return std::to_string(*n);
}

}  // namespace ordcount
