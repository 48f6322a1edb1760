#pragma once
// Subgroups as element bitsets over a parent group, plus generating sets and
// closure. The bitset is the canonical identity used for deduplication.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "pg/group.hpp"

namespace pg {

struct Bits {
  std::vector<uint64_t> w;

  static Bits sized(uint32_t n) {
    Bits b;
    b.w.assign((n + 63) / 64, 0);
    return b;
  }
  bool test(uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(uint32_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  bool operator==(const Bits& o) const { return w == o.w; }
  // subset test: this ⊆ o
  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t x : w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct Subgroup {
  const FiniteGroup* G = nullptr;
  Bits bits;
  std::vector<uint32_t> members;  // ascending element indices
  std::vector<uint32_t> gens;

  uint32_t order() const { return static_cast<uint32_t>(members.size()); }
  bool contains(uint32_t x) const { return bits.test(x); }
  bool same_set(const Subgroup& o) const { return bits == o.bits; }
};

inline Subgroup closure(const FiniteGroup& G, std::vector<uint32_t> gens) {
  Subgroup S;
  S.G = &G;
  S.bits = Bits::sized(G.size());
  std::deque<uint32_t> queue;
  S.bits.set(0);
  queue.push_back(0);
  std::vector<uint32_t> mem{0};
  // right-multiplication orbit of the identity under the generators
  while (!queue.empty()) {
    uint32_t x = queue.front();
    queue.pop_front();
    for (uint32_t g : gens) {
      uint32_t y = G.mult(x, g);
      if (!S.bits.test(y)) {
        S.bits.set(y);
        queue.push_back(y);
        mem.push_back(y);
      }
    }
  }
  std::sort(mem.begin(), mem.end());
  S.members = std::move(mem);
  gens.erase(std::remove(gens.begin(), gens.end(), 0u), gens.end());
  S.gens = std::move(gens);
  return S;
}

inline Subgroup whole_group(const FiniteGroup& G) {
  Subgroup S = closure(G, G.generators());
  if (S.order() != G.size()) throw std::logic_error("declared generators do not generate the group");
  return S;
}

inline Subgroup trivial_subgroup(const FiniteGroup& G) { return closure(G, {}); }

// closure of a set of candidate elements, with greedy reduction to a small
// generating set so later per-generator loops stay cheap
inline Subgroup closure_of_elements(const FiniteGroup& G, const std::vector<uint32_t>& elems) {
  Subgroup S = closure(G, {});
  std::vector<uint32_t> kept;
  for (uint32_t x : elems) {
    if (S.contains(x)) continue;
    kept.push_back(x);
    S = closure(G, kept);
  }
  return S;
}

// A subgroup viewed as a group in its own right, with re-indexed elements.
class SubgroupView : public FiniteGroup {
 public:
  explicit SubgroupView(std::shared_ptr<const FiniteGroup> parent, const Subgroup& S)
      : parent_(std::move(parent)), members_(S.members) {
    tosub_.assign(parent_->size(), UINT32_MAX);
    for (uint32_t i = 0; i < members_.size(); ++i) tosub_[members_[i]] = i;
    if (members_.empty() || members_[0] != 0)
      throw std::invalid_argument("SubgroupView: membership list lacks the identity");
    for (uint32_t g : S.gens) gens_.push_back(tosub_[g]);
    if (gens_.empty()) gens_.push_back(0);
  }

  uint32_t size() const override { return static_cast<uint32_t>(members_.size()); }
  int prime() const override { return parent_->prime(); }
  uint32_t mult(uint32_t a, uint32_t b) const override {
    return tosub_[parent_->mult(members_[a], members_[b])];
  }
  uint32_t inverse(uint32_t a) const override { return tosub_[parent_->inverse(members_[a])]; }
  const std::vector<uint32_t>& generators() const override { return gens_; }

  uint32_t to_parent(uint32_t x) const { return members_[x]; }

 private:
  std::shared_ptr<const FiniteGroup> parent_;
  std::vector<uint32_t> members_;
  std::vector<uint32_t> tosub_;
  std::vector<uint32_t> gens_;
};

}  // namespace pg
