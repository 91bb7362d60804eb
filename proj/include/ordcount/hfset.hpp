#ifndef ORDCOUNT_HFSET_HPP
#define ORDCOUNT_HFSET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordcount {

// The two built-in universes. Universes are membership predicates, not
// extensions: closure under pairing and indexed unions makes every nonempty
// universe infinite.
enum class UniverseTag { FIN, CNT };

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::uint32_t max_rank = 16;
  std::size_t max_nodes = 1'000'000;
};

// Canonical, interned hereditarily finite set. A handle is an index into a
// process-wide intern table; equality of handles is structural equality.
// Values are immutable after interning; the table supports concurrent reads
// and serialized writes.
class HFSet {
 public:
  HFSet() : id_(0) {}  // the empty set

  static HFSet empty() { return HFSet(); }

  // Canonicalizes: sorts children, drops duplicates, interns.
  static HFSet make(std::span<const HFSet> children);
  static HFSet make(std::initializer_list<HFSet> children);

  bool operator==(const HFSet&) const = default;

  std::uint32_t rank() const;
  std::span<const HFSet> children() const;
  std::size_t size() const { return children().size(); }
  bool is_empty() const { return id_ == 0; }
  bool contains(HFSet x) const;

  std::uint32_t id() const { return id_; }
  std::size_t hash() const;

  // Total order on canonical forms: rank-major, then recursively lexicographic
  // on the sorted child lists. Enables dedup and deterministic printing.
  static int compare(HFSet a, HFSet b);
  bool operator<(const HFSet& o) const { return compare(*this, o) < 0; }

  static Limits& limits();

 private:
  explicit HFSet(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

// {x,y}; pair(x,x) = {x}.
HFSet hf_pair(HFSet x, HFSet y);
HFSet hf_singleton(HFSet x);

// Union of all elements of x.
HFSet hf_union(HFSet x);

// U{f(a) | a in I}; f is a finite association list. Throws std::domain_error
// if f is undefined on some element of I.
HFSet hf_image_union(std::span<const std::pair<HFSet, HFSet>> f, HFSet I);

// X is transitive iff every element of an element is an element;
// equivalently UX is a subset of X. Both characterizations computed.
bool hf_is_transitive(HFSet x);
bool hf_union_subset_characterization(HFSet x);

bool hf_subset(HFSet a, HFSet b);
HFSet hf_intersect(HFSet a, HFSet b);
HFSet hf_difference(HFSet a, HFSet b);
HFSet hf_binary_union(HFSet a, HFSet b);

// Kuratowski encoding (x,y) = {{x,y},{x}} - the product encoding used for
// the cartesian-product lemma.
HFSet kuratowski_pair(HFSet x, HFSet y);
std::optional<std::pair<HFSet, HFSet>> kuratowski_decode(HFSet p);

// Restricted power set membership: A in P_U(X) iff A is a subset of X and A
// is admitted by the universe. Every representable collection is finite, so
// both FIN and CNT admit it; the subset condition is the live one.
bool in_restricted_powerset(std::span<const HFSet> A, std::span<const HFSet> X,
                            UniverseTag u);

// Text literal syntax: `{}`, `{{},{{}}}`, whitespace-insensitive.
HFSet parse_hf(std::string_view text);
std::string to_string(HFSet x);

}  // namespace ordcount

#endif
