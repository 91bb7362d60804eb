#include "ordcount/hfset.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace ordcount {
namespace {

struct Node {
  std::vector<HFSet> children;  // canonical: sorted, duplicate-free
  std::uint32_t rank = 0;
  std::size_t hash = 0;
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& k) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto id : k) {
      h ^= id;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

struct Interner {
  mutable std::shared_mutex mu;
  std::vector<Node> nodes;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> index;

  Interner() {
    nodes.push_back(Node{{}, 0, 0x9e3779b97f4a7c15ull});  // the empty set
    index.emplace(std::vector<std::uint32_t>{}, 0);
  }
};

Interner& interner() {
  static Interner it;
  return it;
}

Limits g_limits;

}  // namespace

Limits& HFSet::limits() { return g_limits; }

int HFSet::compare(HFSet a, HFSet b) {
  if (a.id() == b.id()) return 0;
  if (a.rank() != b.rank()) return a.rank() < b.rank() ? -1 : 1;
  auto ca = a.children(), cb = b.children();
  std::size_t n = std::min(ca.size(), cb.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(ca[i], cb[i]);
    if (c != 0) return c;
  }
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  return 0;
}

HFSet HFSet::make(std::span<const HFSet> children) {
  std::vector<HFSet> cs(children.begin(), children.end());
  std::sort(cs.begin(), cs.end(),
            [](HFSet a, HFSet b) { return compare(a, b) < 0; });
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

  std::vector<std::uint32_t> key;
  key.reserve(cs.size());
  std::uint32_t rank = 0;
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto c : cs) {
    key.push_back(c.id());
    rank = std::max(rank, c.rank() + 1);
    h ^= c.hash() + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  if (rank > g_limits.max_rank)
    throw ResourceError("HFSet rank limit exceeded (" +
                        std::to_string(g_limits.max_rank) + ")");

  auto& it = interner();
  {
    std::shared_lock lock(it.mu);
    auto f = it.index.find(key);
    if (f != it.index.end()) return HFSet(f->second);
  }
  std::unique_lock lock(it.mu);
  auto f = it.index.find(key);
  if (f != it.index.end()) return HFSet(f->second);
  if (it.nodes.size() >= g_limits.max_nodes)
    throw ResourceError("HFSet node limit exceeded");
  std::uint32_t id = static_cast<std::uint32_t>(it.nodes.size());
  it.nodes.push_back(Node{std::move(cs), rank, h});
  it.index.emplace(std::move(key), id);
  return HFSet(id);
}

HFSet HFSet::make(std::initializer_list<HFSet> children) {
  return make(std::span<const HFSet>(children.begin(), children.size()));
}

std::uint32_t HFSet::rank() const {
  auto& it = interner();
  std::shared_lock lock(it.mu);
  return it.nodes[id_].rank;
}

std::span<const HFSet> HFSet::children() const {
  auto& it = interner();
  std::shared_lock lock(it.mu);
  // Nodes are never erased and the vector only grows; the inner child vector
  // is stable once published.
  const auto& cs = it.nodes[id_].children;
  return {cs.data(), cs.size()};
}

std::size_t HFSet::hash() const {
  auto& it = interner();
  std::shared_lock lock(it.mu);
  return it.nodes[id_].hash;
}

bool HFSet::contains(HFSet x) const {
  auto cs = children();
  return std::binary_search(cs.begin(), cs.end(), x, [](HFSet a, HFSet b) {
    return compare(a, b) < 0;
  });
}

HFSet hf_pair(HFSet x, HFSet y) { return HFSet::make({x, y}); }

HFSet hf_singleton(HFSet x) { return HFSet::make({x}); }

HFSet hf_union(HFSet x) {
  std::vector<HFSet> elems;
  for (auto c : x.children())
    for (auto g : c.children()) elems.push_back(g);
  return HFSet::make(elems);
}

HFSet hf_image_union(std::span<const std::pair<HFSet, HFSet>> f, HFSet I) {
  std::vector<HFSet> images;
  for (auto a : I.children()) {
    bool found = false;
    for (const auto& [k, v] : f) {
      if (k == a) {
        images.push_back(v);
        found = true;
        break;
      }
    }
    if (!found)
      throw std::domain_error("image_union: f undefined on " + to_string(a));
  }
  return hf_union(HFSet::make(images));
}

bool hf_is_transitive(HFSet x) {
  for (auto c : x.children())
    for (auto g : c.children())
      if (!x.contains(g)) return false;
  return true;
}

bool hf_union_subset_characterization(HFSet x) {
  return hf_subset(hf_union(x), x);
}

bool hf_subset(HFSet a, HFSet b) {
  for (auto c : a.children())
    if (!b.contains(c)) return false;
  return true;
}

HFSet hf_intersect(HFSet a, HFSet b) {
  std::vector<HFSet> elems;
  for (auto c : a.children())
    if (b.contains(c)) elems.push_back(c);
  return HFSet::make(elems);
}

HFSet hf_difference(HFSet a, HFSet b) {
  std::vector<HFSet> elems;
  for (auto c : a.children())
    if (!b.contains(c)) elems.push_back(c);
  return HFSet::make(elems);
}

HFSet hf_binary_union(HFSet a, HFSet b) {
  std::vector<HFSet> elems(a.children().begin(), a.children().end());
  elems.insert(elems.end(), b.children().begin(), b.children().end());
  return HFSet::make(elems);
}

HFSet kuratowski_pair(HFSet x, HFSet y) {
  return hf_pair(hf_pair(x, y), hf_singleton(x));
}

std::optional<std::pair<HFSet, HFSet>> kuratowski_decode(HFSet p) {
  auto cs = p.children();
  if (cs.empty() || cs.size() > 2) return std::nullopt;
  if (cs.size() == 1) {
    // {{x}} encodes (x,x)
    auto inner = cs[0].children();
    if (inner.size() != 1) return std::nullopt;
    return std::pair{inner[0], inner[0]};
  }
  // {{x,y},{x}}: the singleton names the first coordinate
  HFSet a = cs[0], b = cs[1];
  if (a.size() == 1 && b.size() == 2) {
    HFSet x = a.children()[0];
    if (!b.contains(x)) return std::nullopt;
    HFSet y = b.children()[0] == x ? b.children()[1] : b.children()[0];
    return std::pair{x, y};
  }
  if (b.size() == 1 && a.size() == 2) {
    HFSet x = b.children()[0];
    if (!a.contains(x)) return std::nullopt;
    HFSet y = a.children()[0] == x ? a.children()[1] : a.children()[0];
    return std::pair{x, y};
  }
  return std::nullopt;
}

bool in_restricted_powerset(std::span<const HFSet> A, std::span<const HFSet> X,
                            UniverseTag u) {
  for (auto a : A) {
    bool in = false;
    for (auto x : X)
      if (a == x) {
        in = true;
        break;
      }
    if (!in) return false;
  }
  // Representable collections are finite, so both FIN and CNT admit them.
  (void)u;
  return true;
}

namespace {

HFSet parse_at(std::string_view s, std::size_t& i, std::uint32_t depth) {
  if (depth > g_limits.max_rank + 1)
    throw ResourceError("HFSet literal nesting limit exceeded");
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i >= s.size() || s[i] != '{')
    throw std::invalid_argument("HFSet literal: expected '{'");
  ++i;
  std::vector<HFSet> elems;
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) throw std::invalid_argument("HFSet literal: unterminated");
    if (s[i] == '}') {
      ++i;
      break;
    }
    if (s[i] == ',') {
      ++i;
      continue;
    }
    elems.push_back(parse_at(s, i, depth + 1));
  }
  return HFSet::make(elems);
}

}  // namespace

HFSet parse_hf(std::string_view text) {
  std::size_t i = 0;
  HFSet r = parse_at(text, i, 0);
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (i != text.size())
    throw std::invalid_argument("HFSet literal: trailing characters");
  return r;
}

std::string to_string(HFSet x) {
  std::string out = "{";
  bool first = true;
  for (auto c : x.children()) {
    if (!first) out += ",";
    first = false;
    out += to_string(c);
  }
  out += "}";
  return out;
}

}  // namespace ordcount
