#pragma once
// Characteristic subgroups and structure invariants: G', Z(G), Phi(G), lower
// central series, Omega_s, Mho_s, abelian invariants, quotients,
// metacyclicity. Everything works element-level on any FiniteGroup backend.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pg/subgroup.hpp"

namespace pg {

inline bool is_abelian_subgroup(const Subgroup& H) {
  const FiniteGroup& G = *H.G;
  for (size_t i = 0; i < H.gens.size(); ++i)
    for (size_t j = i + 1; j < H.gens.size(); ++j)
      if (G.mult(H.gens[i], H.gens[j]) != G.mult(H.gens[j], H.gens[i])) return false;
  return true;
}

// [H, K] for K given by generators within the same parent; equals the
// subgroup generated by {[h,k] : h in H, k in K-gens}.
inline Subgroup commutator_subgroup(const Subgroup& H, const std::vector<uint32_t>& kgens) {
  const FiniteGroup& G = *H.G;
  std::vector<uint32_t> vals;
  for (uint32_t h : H.members)
    for (uint32_t k : kgens) vals.push_back(G.commutator(h, k));
  return closure_of_elements(G, vals);
}

inline Subgroup derived_subgroup(const Subgroup& H) { return commutator_subgroup(H, H.gens); }

inline Subgroup center_of(const Subgroup& H) {
  const FiniteGroup& G = *H.G;
  std::vector<uint32_t> zs;
  for (uint32_t x : H.members) {
    bool central = true;
    for (uint32_t g : H.gens)
      if (G.mult(x, g) != G.mult(g, x)) {
        central = false;
        break;
      }
    if (central) zs.push_back(x);
  }
  Subgroup Z;
  Z.G = &G;
  Z.bits = Bits::sized(G.size());
  for (uint32_t x : zs) Z.bits.set(x);
  Z.members = std::move(zs);
  Z.gens.assign(Z.members.begin(), Z.members.end());
  Z.gens.erase(std::remove(Z.gens.begin(), Z.gens.end(), 0u), Z.gens.end());
  return Z;
}

// Phi(H) = H' Mho_1(H) for p-groups
inline Subgroup frattini_of(const Subgroup& H) {
  const FiniteGroup& G = *H.G;
  const int p = G.prime();
  std::vector<uint32_t> vals;
  for (uint32_t h : H.members)
    for (uint32_t g : H.gens) vals.push_back(G.commutator(h, g));
  for (uint32_t h : H.members) vals.push_back(G.power(h, p));
  return closure_of_elements(G, vals);
}

inline int log_p(long long n, int p) {
  int e = 0;
  while (n > 1) {
    if (n % p) throw std::logic_error("log_p: not a p-power");
    n /= p;
    ++e;
  }
  return e;
}

inline int minimal_generators(const Subgroup& H) {
  if (H.order() == 1) return 0;
  Subgroup Phi = frattini_of(H);
  return log_p(H.order() / Phi.order(), H.G->prime());
}

inline std::vector<Subgroup> lower_central_series(const Subgroup& H) {
  std::vector<Subgroup> series{H};
  while (series.back().order() > 1) {
    Subgroup next = commutator_subgroup(series.back(), H.gens);
    if (next.order() == series.back().order())
      throw std::logic_error("lower central series stalled; group is not nilpotent?");
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  if (series.back().order() != 1) series.push_back(trivial_subgroup(*H.G));
  return series;
}

inline int nilpotency_class(const Subgroup& H) {
  return static_cast<int>(lower_central_series(H).size()) - 1;
}

inline Subgroup omega(const Subgroup& H, int s) {
  if (s < 1) throw std::invalid_argument("omega: s >= 1");
  const FiniteGroup& G = *H.G;
  std::vector<uint32_t> vals;
  for (uint32_t x : H.members)
    if (G.order_exp(x) <= s) vals.push_back(x);
  return closure_of_elements(G, vals);
}

inline Subgroup mho(const Subgroup& H, int s) {
  if (s < 1) throw std::invalid_argument("mho: s >= 1");
  const FiniteGroup& G = *H.G;
  long long q = 1;
  for (int t = 0; t < s; ++t) q *= G.prime();
  std::vector<uint32_t> vals;
  for (uint32_t x : H.members) vals.push_back(G.power(x, q));
  return closure_of_elements(G, vals);
}

inline int exponent_exp(const Subgroup& H) {
  int e = 0;
  for (uint32_t x : H.members) e = std::max(e, H.G->order_exp(x));
  return e;
}

// Abelian type (p^{e1} >= p^{e2} >= ...) recovered from the element-order
// census: the number of elements of order dividing p^j determines the type.
inline std::vector<int> abelian_invariants(const Subgroup& H) {
  if (!is_abelian_subgroup(H)) throw std::invalid_argument("abelian_invariants: subgroup is not abelian");
  const FiniteGroup& G = *H.G;
  const int p = G.prime();
  if (H.order() == 1) return {};
  int maxe = 0;
  std::vector<int> ordexp(H.members.size());
  for (size_t i = 0; i < H.members.size(); ++i) {
    ordexp[i] = G.order_exp(H.members[i]);
    maxe = std::max(maxe, ordexp[i]);
  }
  // m_j = log_p #{x : x^{p^j} = 1}; d_j = m_j - m_{j-1} = #parts >= j
  std::vector<long long> cnt(maxe + 1, 0);
  for (int e : ordexp) ++cnt[e];
  std::vector<int> m(maxe + 1, 0);
  long long acc = 0;
  for (int j = 0; j <= maxe; ++j) {
    acc += cnt[j];
    m[j] = log_p(acc, p);
  }
  std::vector<int> type;
  for (int j = 1; j <= maxe; ++j) {
    int d = m[j] - m[j - 1];
    // d parts of size >= j; extend/record
    while (static_cast<int>(type.size()) < d) type.push_back(0);
    for (int i = 0; i < d; ++i) type[i] = j;
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

inline std::shared_ptr<CosetGroup> quotient(const std::shared_ptr<const FiniteGroup>& G,
                                            const Subgroup& N) {
  return std::make_shared<CosetGroup>(G, N.members);
}

inline bool is_cyclic_group(const FiniteGroup& Q) {
  for (uint32_t x = 0; x < Q.size(); ++x) {
    long long o = 1;
    for (int t = Q.order_exp(x); t > 0; --t) o *= Q.prime();
    if (o == Q.size()) return true;
  }
  return false;
}

inline bool is_normal_subgroup(const Subgroup& N) {
  const FiniteGroup& G = *N.G;
  for (uint32_t x : N.gens)
    for (uint32_t g : G.generators())
      if (!N.contains(G.conjugate(x, g))) return false;
  return true;
}

// Exhaustive metacyclicity test: some cyclic normal subgroup with cyclic
// quotient. The parent must be the whole group.
inline bool is_metacyclic(const std::shared_ptr<const FiniteGroup>& G) {
  if (G->size() > kOrderGuard) throw std::invalid_argument("is_metacyclic: size bound exceeded");
  Bits seen = Bits::sized(G->size());
  for (uint32_t x = 0; x < G->size(); ++x) {
    if (seen.test(x)) continue;
    Subgroup C = closure(*G, {x});
    for (uint32_t m : C.members) seen.set(m);
    if (!is_normal_subgroup(C)) continue;
    if (is_cyclic_group(*quotient(G, C))) return true;
  }
  return false;
}

struct StructureRecord {
  long long order = 0;
  int d = 0;
  int c = 0;
  int exp_exp = 0;  // exp(G) = p^exp_exp
  long long derived_order = 0;
  std::vector<int> derived_type;  // abelian invariants (empty list when G' trivial)
  bool derived_abelian = true;
  std::vector<int> center_type;
  std::vector<int> frattini_type;  // only when Phi abelian
  bool frattini_abelian = true;
  std::vector<int> abelianization_type;
  std::vector<long long> lcs_orders;
};

inline StructureRecord structure_record(const std::shared_ptr<const FiniteGroup>& G) {
  StructureRecord R;
  Subgroup whole = whole_group(*G);
  R.order = G->size();
  R.exp_exp = exponent_exp(whole);
  auto lcs = lower_central_series(whole);
  R.c = static_cast<int>(lcs.size()) - 1;
  for (auto& s : lcs) R.lcs_orders.push_back(s.order());
  Subgroup D = lcs.size() > 1 ? lcs[1] : trivial_subgroup(*G);
  R.derived_order = D.order();
  R.derived_abelian = is_abelian_subgroup(D);
  if (R.derived_abelian) R.derived_type = abelian_invariants(D);
  Subgroup Z = center_of(whole);
  R.center_type = abelian_invariants(Z);
  Subgroup Phi = frattini_of(whole);
  R.d = log_p(R.order / Phi.order(), G->prime());
  R.frattini_abelian = is_abelian_subgroup(Phi);
  if (R.frattini_abelian) R.frattini_type = abelian_invariants(Phi);
  auto Q = quotient(G, D);
  R.abelianization_type = abelian_invariants(whole_group(*Q));
  return R;
}

// Direct check of the metabelian commutator expansion
//   [a^m, b^n] = prod_{i<=m, j<=n} [ia, jb]^{C(m,i) C(n,j)}
// where [ia,jb] = [a,b,a,...,a,b,...,b] with i-1 copies of a and j-1 of b.
inline bool verify_metabelian_identity(const FiniteGroup& G, uint32_t a, uint32_t b, int m, int n) {
  Subgroup D = derived_subgroup(whole_group(G));
  if (!is_abelian_subgroup(D)) throw std::invalid_argument("verify_metabelian_identity: G is not metabelian");
  auto binom = [](long long n_, long long k_) {
    if (k_ < 0 || k_ > n_) return 0ll;
    long long r = 1;
    for (long long t = 1; t <= k_; ++t) r = r * (n_ - t + 1) / t;
    return r;
  };
  uint32_t lhs = G.commutator(G.power(a, m), G.power(b, n));
  uint32_t rhs = 0;
  for (int i = 1; i <= m; ++i) {
    uint32_t base = G.commutator(a, b);
    for (int t = 1; t < i; ++t) base = G.commutator(base, a);
    for (int j = 1; j <= n; ++j) {
      if (j > 1) base = G.commutator(base, b);
      long long e = binom(m, i) * binom(n, j);
      rhs = G.mult(rhs, G.power(base, e));
    }
  }
  return lhs == rhs;
}

}  // namespace pg
