#pragma once
// Test-only oracles, independent of the pc-presentation path: groups given by
// explicit multiplication tables or permutation actions, and a brute-force
// subgroup enumerator that closes subsets pair by pair.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pg/group.hpp"
#include "pg/subgroup.hpp"

namespace pgtest {

class TableGroup : public pg::FiniteGroup {
 public:
  TableGroup(int p, std::vector<std::vector<uint32_t>> table, std::vector<uint32_t> gens)
      : p_(p), table_(std::move(table)), gens_(std::move(gens)) {
    const uint32_t n = static_cast<uint32_t>(table_.size());
    inv_.assign(n, 0);
    for (uint32_t a = 0; a < n; ++a) {
      bool found = false;
      for (uint32_t b = 0; b < n; ++b)
        if (table_[a][b] == 0) {
          inv_[a] = b;
          found = true;
        }
      if (!found) throw std::invalid_argument("TableGroup: row without inverse");
    }
  }
  uint32_t size() const override { return static_cast<uint32_t>(table_.size()); }
  int prime() const override { return p_; }
  uint32_t mult(uint32_t a, uint32_t b) const override { return table_[a][b]; }
  uint32_t inverse(uint32_t a) const override { return inv_[a]; }
  const std::vector<uint32_t>& generators() const override { return gens_; }

 private:
  int p_;
  std::vector<std::vector<uint32_t>> table_;
  std::vector<uint32_t> gens_, inv_;
};

// Group generated by permutations, elements enumerated by closure. The
// identity permutation gets index 0.
inline std::shared_ptr<TableGroup> perm_group(int p, const std::vector<std::vector<int>>& perm_gens) {
  const size_t deg = perm_gens.at(0).size();
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, uint32_t> index;
  std::vector<std::vector<int>> elems{id};
  index[id] = 0;
  for (size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : perm_gens) {
      std::vector<int> prod(deg);
      for (size_t t = 0; t < deg; ++t) prod[t] = g[elems[i][t]];
      if (!index.count(prod)) {
        index[prod] = static_cast<uint32_t>(elems.size());
        elems.push_back(prod);
      }
    }
  std::vector<std::vector<uint32_t>> table(elems.size(), std::vector<uint32_t>(elems.size()));
  for (size_t a = 0; a < elems.size(); ++a)
    for (size_t b = 0; b < elems.size(); ++b) {
      std::vector<int> prod(deg);
      for (size_t t = 0; t < deg; ++t) prod[t] = elems[b][elems[a][t]];  // apply a then b
      table[a][b] = index.at(prod);
    }
  std::vector<uint32_t> gens;
  for (const auto& g : perm_gens) gens.push_back(index.at(g));
  return std::make_shared<TableGroup>(p, std::move(table), std::move(gens));
}

// Dihedral group of order 2^n as symmetries of a 2^{n-1}-gon.
inline std::shared_ptr<TableGroup> dihedral_2n(int n) {
  const int m = 1 << (n - 1);
  std::vector<int> rot(m), flip(m);
  for (int i = 0; i < m; ++i) {
    rot[i] = (i + 1) % m;
    flip[i] = (m - i) % m;
  }
  return perm_group(2, {rot, flip});
}

// Quaternion group by its multiplication table over {1,-1,i,-i,j,-j,k,-k}.
inline std::shared_ptr<TableGroup> quaternion8() {
  // encode q = (sign, axis) with axis in {1=one, i, j, k}
  auto mulq = [](int a, int b) {
    // unit table for {1,i,j,k}: value and sign
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    int sa = a & 1 ? -1 : 1, sb = b & 1 ? -1 : 1;
    int xa = a >> 1, xb = b >> 1;
    int ax = axis[xa][xb], s = sa * sb * sign[xa][xb];
    return ax * 2 + (s < 0 ? 1 : 0);
  };
  std::vector<std::vector<uint32_t>> table(8, std::vector<uint32_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) table[a][b] = static_cast<uint32_t>(mulq(a, b));
  return std::make_shared<TableGroup>(2, std::move(table), std::vector<uint32_t>{2, 4});
}

// Every subgroup, found independently of the lattice descent: saturate the
// collection of subgroups by closing (subgroup, extra element) pairs.
inline std::vector<pg::Subgroup> all_subgroups_bruteforce(const pg::FiniteGroup& G) {
  using pg::Subgroup;
  std::vector<Subgroup> pool;
  std::map<std::vector<uint64_t>, size_t> seen;
  auto add = [&](Subgroup S) -> bool {
    auto key = S.bits.w;
    if (seen.count(key)) return false;
    seen[key] = pool.size();
    pool.push_back(std::move(S));
    return true;
  };
  add(pg::closure(G, {}));
  for (uint32_t x = 1; x < G.size(); ++x) add(pg::closure(G, {x}));
  for (size_t i = 0; i < pool.size(); ++i) {
    std::vector<uint32_t> gens = pool[i].gens;
    for (uint32_t x = 1; x < G.size(); ++x) {
      if (pool[i].contains(x)) continue;
      std::vector<uint32_t> g2 = gens;
      g2.push_back(x);
      add(pg::closure(G, g2));
    }
  }
  return pool;
}

}  // namespace pgtest
