#include "matreg/element_set.hpp"

#include <algorithm>

#include "matreg/error.hpp"

namespace matreg {

ElementSet::ElementSet(std::initializer_list<int> elements) {
  for (int e : elements) {
    if (e < 1 || e > kMaxGround) throw Error(ErrorKind::OutOfRange, "element " + std::to_string(e));
    bits_ |= std::uint32_t{1} << (e - 1);
  }
}

ElementSet ElementSet::from_elements(const std::vector<int>& elements) {
  ElementSet s;
  for (int e : elements) {
    if (e < 1 || e > kMaxGround) throw Error(ErrorKind::OutOfRange, "element " + std::to_string(e));
    s = s.with(e);
  }
  return s;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int e) { out.push_back(e); });
  return out;
}

std::string ElementSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int e) {
    if (!first) s += ' ';
    s += std::to_string(e);
    first = false;
  });
  return s + "}";
}

bool canonical_less(ElementSet a, ElementSet b) {
  const std::uint32_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int pos = std::countr_zero(diff);
  // Both sets agree below `pos`; exactly one of them holds `pos`.
  const std::uint32_t above = pos >= 31 ? 0U : ~((std::uint32_t{2} << pos) - 1);
  if ((a.bits() >> pos) & 1U) {
    // b continues with something larger than pos, or ends (then b is a prefix of a).
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

void canonicalize(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<ElementSet> maximal_members(std::vector<ElementSet> sets) {
  // Larger sets first so that a candidate only needs checking against kept ones.
  std::sort(sets.begin(), sets.end(), [](ElementSet a, ElementSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ElementSet> kept;
  for (ElementSet s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](ElementSet k) { return s.subset_of(k); });
    if (!dominated) kept.push_back(s);
  }
  canonicalize(kept);
  return kept;
}

std::vector<ElementSet> k_subsets(int n, int k) {
  std::vector<ElementSet> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {ElementSet()};
  // Gosper's hack walks k-subsets in increasing integer order.
  std::uint32_t s = (std::uint32_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    out.emplace_back(s);
    const std::uint32_t c = s & (~s + 1);
    const std::uint64_t r = std::uint64_t{s} + c;
    if (r >= limit) break;
    s = static_cast<std::uint32_t>((((r ^ s) >> 2) / c) | r);
  }
  canonicalize(out);
  return out;
}

SubsetFamily::SubsetFamily(int n, std::vector<ElementSet> members) : n_(n), members_(std::move(members)) {
  const ElementSet ground = ElementSet::full(n);
  for (ElementSet m : members_) {
    if (!m.subset_of(ground)) {
      throw Error(ErrorKind::OutOfRange,
                  "member " + m.to_string() + " is not contained in {1.." + std::to_string(n) + "}");
    }
  }
  canonicalize(members_);
}

std::string SubsetFamily::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ' ';
    s += members_[i].to_string();
  }
  return s;
}

}  // namespace matreg
