#pragma once
// Subgroup-lattice enumeration with canonical deduplication: maximal
// subgroups via hyperplanes over H/Phi(H), the Gamma_i layers above Phi(G),
// subgroups of a given index by recursive maximal descent, and the derived
// classification quantities (A_t index, mu-triple, alpha_1 by brute force and
// by Hall's enumeration principle).

#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pg/structure.hpp"

namespace pg {

struct LatticeGuardExceeded : std::runtime_error {
  size_t partial_count;
  explicit LatticeGuardExceeded(size_t n)
      : std::runtime_error("subgroup enumeration guard exceeded after " + std::to_string(n) +
                           " distinct subgroups"),
        partial_count(n) {}
};

struct AtVerdict {
  int t = 0;
  // generators of a witnessing non-abelian subgroup of index p^{t-1}; empty for t = 0
  std::vector<uint32_t> witness_gens;
};

struct MuTriple {
  long long mu0 = 0, mu1 = 0, mu2 = 0;
  bool well_defined = true;  // false if some maximal subgroup has A_t index > 2
};

class Lattice {
 public:
  explicit Lattice(std::shared_ptr<const FiniteGroup> G, size_t guard = 100000)
      : G_(std::move(G)), guard_(guard) {
    root_ = intern(whole_group(*G_));
  }

  const FiniteGroup& group() const { return *G_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return G_; }
  uint32_t root() const { return root_; }
  const Subgroup& sub(uint32_t id) const { return nodes_[id].sub; }
  size_t node_count() const { return nodes_.size(); }

  uint32_t intern(Subgroup S) {
    uint64_t h = S.bits.hash();
    auto range = index_.equal_range(h);
    for (auto it = range.first; it != range.second; ++it)
      if (nodes_[it->second].sub.bits == S.bits) return it->second;
    if (nodes_.size() >= guard_) throw LatticeGuardExceeded(nodes_.size());
    nodes_.push_back(Node{std::move(S)});
    uint32_t id = static_cast<uint32_t>(nodes_.size() - 1);
    index_.emplace(h, id);
    return id;
  }

  uint32_t frattini(uint32_t id) {
    Node& nd = nodes_[id];
    if (nd.frattini == UINT32_MAX) {
      Subgroup F = frattini_of(nd.sub);
      uint32_t f = intern(std::move(F));
      nodes_[id].frattini = f;  // nodes_ may have reallocated
    }
    return nodes_[id].frattini;
  }

  int dmin(uint32_t id) {
    Node& nd = nodes_[id];
    if (nd.d < 0) {
      if (nd.sub.order() == 1) {
        nd.d = 0;
      } else {
        uint32_t f = frattini(id);
        nodes_[id].d = log_p(nodes_[id].sub.order() / nodes_[f].sub.order(), G_->prime());
      }
    }
    return nodes_[id].d;
  }

  // the (p^d-1)/(p-1) maximal subgroups of a nontrivial subgroup
  const std::vector<uint32_t>& maximals(uint32_t id) {
    if (!nodes_[id].maximal_done) {
      std::vector<uint32_t> out = compute_maximals(id);
      nodes_[id].maximal = std::move(out);
      nodes_[id].maximal_done = true;
    }
    return nodes_[id].maximal;
  }

  bool abelian(uint32_t id) {
    Node& nd = nodes_[id];
    if (nd.abelian < 0) nd.abelian = is_abelian_subgroup(nd.sub) ? 1 : 0;
    return nd.abelian == 1;
  }

  int at_index(uint32_t id) {
    Node& nd = nodes_[id];
    if (nd.at >= 0) return nd.at;
    if (abelian(id)) {
      nodes_[id].at = 0;
      return 0;
    }
    int best = 0;
    for (uint32_t m : maximals(id)) best = std::max(best, at_index(m));
    nodes_[id].at = best + 1;
    return best + 1;
  }

  AtVerdict at_verdict(uint32_t id) {
    AtVerdict v;
    v.t = at_index(id);
    if (v.t == 0) return v;
    // walk down to a non-abelian subgroup of index p^{t-1}
    uint32_t cur = id;
    for (int step = 1; step < v.t; ++step) {
      for (uint32_t m : maximals(cur))
        if (at_index(m) == v.t - step) {
          cur = m;
          break;
        }
    }
    v.witness_gens = nodes_[cur].sub.gens;
    return v;
  }

  // All three conditions of the minimal non-abelian criterion, with mutual
  // agreement asserted: (1) every maximal subgroup abelian, (2) d=2 and
  // |H'|=p, (3) d=2 and Phi(H)=Z(H).
  bool minimal_nonabelian(uint32_t id) {
    Node& nd = nodes_[id];
    if (nd.mna >= 0) return nd.mna == 1;
    bool c1 = !abelian(id);
    if (c1)
      for (uint32_t m : maximals(id))
        if (!abelian(m)) {
          c1 = false;
          break;
        }
    bool two_generated = nodes_[id].sub.order() > 1 && dmin(id) == 2;
    Subgroup D = derived_subgroup(nodes_[id].sub);
    bool c2 = two_generated && D.order() == static_cast<uint32_t>(G_->prime());
    Subgroup Z = center_of(nodes_[id].sub);
    bool c3 = two_generated && nodes_[frattini(id)].sub.bits == Z.bits;
    if (c1 != c2 || c2 != c3)
      throw std::logic_error("minimal non-abelian criteria disagree on a subgroup of order " +
                             std::to_string(nodes_[id].sub.order()));
    nodes_[id].mna = c1 ? 1 : 0;
    return c1;
  }

  // every subgroup, by breadth-first maximal descent from the whole group
  const std::vector<uint32_t>& all_subgroups() {
    if (!all_done_) {
      std::deque<uint32_t> queue{root_};
      std::vector<bool> seen(1, false);
      seen.resize(nodes_.size(), false);
      seen[root_] = true;
      std::vector<uint32_t> order{root_};
      while (!queue.empty()) {
        uint32_t id = queue.front();
        queue.pop_front();
        if (nodes_[id].sub.order() == 1) continue;
        for (uint32_t m : maximals(id)) {
          if (m >= seen.size()) seen.resize(nodes_.size(), false);
          if (!seen[m]) {
            seen[m] = true;
            order.push_back(m);
            queue.push_back(m);
          }
        }
      }
      all_ = std::move(order);
      all_done_ = true;
    }
    return all_;
  }

  // subgroups of index p^t, each exactly once
  std::vector<uint32_t> subgroups_of_index(int t) {
    if (t < 0) throw std::invalid_argument("subgroups_of_index: t >= 0");
    std::vector<uint32_t> level{root_};
    for (int step = 0; step < t; ++step) {
      std::vector<uint32_t> next;
      std::vector<bool> seen(nodes_.size(), false);
      for (uint32_t id : level)
        for (uint32_t m : maximals(id)) {
          if (m >= seen.size()) seen.resize(nodes_.size() + 64, false);
          if (!seen[m]) {
            seen[m] = true;
            next.push_back(m);
          }
        }
      level = std::move(next);
    }
    return level;
  }

  // Gamma_i = subgroups between Phi(G) and G of index p^i; count is the
  // Gaussian binomial [d choose i]_p
  std::vector<uint32_t> gamma_layer(int i) {
    const int d = dmin(root_);
    if (i < 1 || i > d) throw std::invalid_argument("gamma_layer: 1 <= i <= d(G)");
    const int p = G_->prime();
    uint32_t f = frattini(root_);
    std::vector<uint32_t> basis = frattini_basis_lift();
    std::vector<uint32_t> out;
    for (const auto& rows : subspaces(d, d - i, p)) {
      std::vector<uint32_t> gens = nodes_[f].sub.gens;
      for (const auto& row : rows) {
        uint32_t x = 0;
        for (int c = 0; c < d; ++c)
          if (row[c]) x = G_->mult(x, G_->power(basis[c], row[c]));
        gens.push_back(x);
      }
      out.push_back(intern(closure(*G_, gens)));
    }
    return out;
  }

  // number of minimal non-abelian subgroups contained in the given subgroup
  long long alpha1_of(uint32_t id) {
    flag_all();
    long long n = 0;
    for (uint32_t a : a1_nodes_)
      if (nodes_[a].sub.bits.subset_of(nodes_[id].sub.bits)) ++n;
    return n;
  }

  long long alpha1_bruteforce() {
    flag_all();
    return static_cast<long long>(a1_nodes_.size());
  }

  // Hall's enumeration principle over the Gamma layers. The sum counts the
  // A_1-subgroups that lie in some maximal subgroup; the group itself is the
  // only subgroup missed, hence the correction term.
  long long alpha1_hall() {
    const int d = dmin(root_);
    const int p = G_->prime();
    long long total = minimal_nonabelian(root_) ? 1 : 0;
    long long sign = 1;
    for (int i = 1; i <= d; ++i) {
      long long pw = 1;
      for (int t = 0; t < i * (i - 1) / 2; ++t) pw *= p;
      long long layer = 0;
      for (uint32_t id : gamma_layer(i)) layer += alpha1_of(id);
      total += sign * pw * layer;
      sign = -sign;
    }
    return total;
  }

  MuTriple mu_triple() {
    MuTriple mu;
    for (uint32_t m : maximals(root_)) {
      switch (at_index(m)) {
        case 0: ++mu.mu0; break;
        case 1: ++mu.mu1; break;
        case 2: ++mu.mu2; break;
        default: mu.well_defined = false;
      }
    }
    return mu;
  }

  // id list of flagged minimal non-abelian subgroups (post: flag_all ran)
  const std::vector<uint32_t>& a1_subgroups() {
    flag_all();
    return a1_nodes_;
  }

 private:
  struct Node {
    Subgroup sub;
    std::vector<uint32_t> maximal;
    bool maximal_done = false;
    int8_t abelian = -1;
    int8_t mna = -1;
    int at = -1;
    int d = -1;
    uint32_t frattini = UINT32_MAX;
  };

  std::vector<uint32_t> frattini_basis_lift() {
    uint32_t f = frattini(root_);
    Subgroup span = nodes_[f].sub;
    std::vector<uint32_t> basis;
    std::vector<uint32_t> gens = span.gens;
    for (uint32_t x : nodes_[root_].sub.members) {
      if (span.contains(x)) continue;
      basis.push_back(x);
      gens.push_back(x);
      span = closure(*G_, gens);
      if (span.order() == nodes_[root_].sub.order()) break;
    }
    if (static_cast<int>(basis.size()) != dmin(root_))
      throw std::logic_error("frattini basis lift has wrong rank");
    return basis;
  }

  std::vector<uint32_t> compute_maximals(uint32_t id) {
    const int p = G_->prime();
    if (nodes_[id].sub.order() == 1)
      throw std::invalid_argument("maximal_subgroups of the trivial subgroup");
    uint32_t f = frattini(id);
    int d = dmin(id);
    // basis lifts of H/Phi(H)
    Subgroup span = nodes_[f].sub;
    std::vector<uint32_t> basis;
    {
      std::vector<uint32_t> gens = span.gens;
      for (uint32_t x : nodes_[id].sub.members) {
        if (span.contains(x)) continue;
        basis.push_back(x);
        gens.push_back(x);
        span = closure(*G_, gens);
        if (span.order() == nodes_[id].sub.order()) break;
      }
    }
    if (static_cast<int>(basis.size()) != d) throw std::logic_error("basis lift has wrong rank");
    std::vector<uint32_t> out;
    // one maximal subgroup per functional phi (up to scalar): generated by
    // Phi(H) and a basis of ker(phi)
    for (const auto& phi : projective_functionals(d, p)) {
      int pivot = 0;
      while (phi[pivot] == 0) ++pivot;
      std::vector<uint32_t> gens = nodes_[f].sub.gens;
      for (int s = 0; s < d; ++s) {
        if (s == pivot) continue;
        // e_s - phi_s/phi_pivot * e_pivot lies in the kernel; phi[pivot]=1
        int coef = (p - phi[s]) % p;
        gens.push_back(G_->mult(basis[s], G_->power(basis[pivot], coef)));
      }
      Subgroup M = closure(*G_, gens);
      if (M.order() * p != nodes_[id].sub.order())
        throw std::logic_error("hyperplane closure has wrong index");
      out.push_back(intern(std::move(M)));
    }
    return out;
  }

  static std::vector<std::vector<int>> projective_functionals(int d, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(d, 0);
    std::function<void(int, bool)> rec = [&](int pos, bool lead) {
      if (pos == d) {
        if (lead) out.push_back(v);
        return;
      }
      if (!lead) {
        v[pos] = 0;
        rec(pos + 1, false);
        v[pos] = 1;  // leading coefficient normalized to 1
        rec(pos + 1, true);
        v[pos] = 0;
      } else {
        for (int c = 0; c < p; ++c) {
          v[pos] = c;
          rec(pos + 1, true);
        }
        v[pos] = 0;
      }
    };
    rec(0, false);
    return out;
  }

  // all reduced row-echelon k x d matrices over F_p (the k-dim subspaces)
  static std::vector<std::vector<std::vector<int>>> subspaces(int d, int k, int p) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> cols(k);
    std::function<void(int, int)> choose = [&](int idx, int from) {
      if (idx == k) {
        // fill free entries
        std::vector<std::vector<int>> rows(k, std::vector<int>(d, 0));
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < k; ++r) {
          rows[r][cols[r]] = 1;
          for (int c = cols[r] + 1; c < d; ++c) {
            bool is_pivot = false;
            for (int r2 = 0; r2 < k; ++r2)
              if (cols[r2] == c) is_pivot = true;
            if (!is_pivot) free_pos.push_back({r, c});
          }
        }
        long long count = 1;
        for (size_t t = 0; t < free_pos.size(); ++t) count *= p;
        for (long long mask = 0; mask < count; ++mask) {
          long long m = mask;
          for (auto [r, c] : free_pos) {
            rows[r][c] = static_cast<int>(m % p);
            m /= p;
          }
          out.push_back(rows);
        }
        return;
      }
      for (int c = from; c <= d - (k - idx); ++c) {
        cols[idx] = c;
        choose(idx + 1, c + 1);
      }
    };
    if (k == 0) {
      out.push_back({});
      return out;
    }
    choose(0, 0);
    return out;
  }

  void flag_all() {
    if (flags_done_) return;
    for (uint32_t id : all_subgroups())
      if (nodes_[id].sub.order() > 1 && minimal_nonabelian(id)) a1_nodes_.push_back(id);
    flags_done_ = true;
  }

  std::shared_ptr<const FiniteGroup> G_;
  size_t guard_;
  std::vector<Node> nodes_;
  std::unordered_multimap<uint64_t, uint32_t> index_;
  uint32_t root_ = 0;
  bool all_done_ = false;
  std::vector<uint32_t> all_;
  bool flags_done_ = false;
  std::vector<uint32_t> a1_nodes_;
};

}  // namespace pg
