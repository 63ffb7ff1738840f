#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace matreg {

inline constexpr int kMaxGround = 32;

/// Subset of {1..32}; element e lives in bit e-1.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> elements);

  static ElementSet from_elements(const std::vector<int>& elements);
  /// {1..n}
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr ElementSet singleton(int e) { return ElementSet(std::uint32_t{1} << (e - 1)); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return e >= 1 && e <= 32 && ((bits_ >> (e - 1)) & 1U); }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Largest element, 0 when empty.
  constexpr int max_element() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }
  constexpr int min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  constexpr ElementSet with(int e) const { return ElementSet(bits_ | singleton(e).bits_); }
  constexpr ElementSet without(int e) const { return ElementSet(bits_ & ~singleton(e).bits_); }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  /// set difference
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

  std::vector<int> elements() const;
  /// "{1 2 3}"
  std::string to_string() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) f(std::countr_zero(rest) + 1);
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic order on the sorted element tuples: {} < {1} < {1 2} < {1 2 3} < {1 3} < {2}.
bool canonical_less(ElementSet a, ElementSet b);

struct CanonicalLess {
  bool operator()(ElementSet a, ElementSet b) const { return canonical_less(a, b); }
};

/// Sorts canonically and removes duplicates.
void canonicalize(std::vector<ElementSet>& sets);

/// Keeps only inclusion-maximal members, canonically ordered.
std::vector<ElementSet> maximal_members(std::vector<ElementSet> sets);

/// Calls f on every subset of `set` (including empty and `set` itself).
template <typename F>
void for_each_subset(ElementSet set, F&& f) {
  const std::uint32_t full = set.bits();
  std::uint32_t sub = full;
  while (true) {
    f(ElementSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

/// All k-subsets of {1..n}, canonically ordered.
std::vector<ElementSet> k_subsets(int n, int k);

/// Canonically ordered family of element subsets over a ground set {1..n}.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  SubsetFamily(int n, std::vector<ElementSet> members);

  int ground_size() const { return n_; }
  const std::vector<ElementSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<ElementSet> members_;
};

}  // namespace matreg
