#pragma once
// Weighted power-commutator presentations with relative order p, and the
// collection-from-the-left normal form engine that works directly on
// exponent vectors.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pg {

using ExpVec = std::vector<int>;  // exponent vector, digits in [0,p)

inline bool is_zero(const ExpVec& v) {
  for (int x : v)
    if (x) return false;
  return true;
}

// Definition of a pc generator introduced during refinement: either the tail
// of a power relation g_j^p or of a commutator relation [g_j, g_l].
struct GenDef {
  enum Kind { None, Power, Commutator } kind = None;
  int j = -1, l = -1;
};

struct PcPresentation {
  int p = 0;
  int n = 0;                            // pc generators, each of relative order p
  std::vector<int> weight;              // p-central weight, nondecreasing
  std::vector<ExpVec> power;            // power[i]: normal word for g_i^p (support > i)
  std::vector<std::vector<ExpVec>> comm;  // comm[j][l], l<j: normal word for [g_j,g_l]
  std::vector<GenDef> defs;
  bool consistent = false;

  long long order() const {
    long long o = 1;
    for (int i = 0; i < n; ++i) o *= p;
    return o;
  }

  const ExpVec& comm_word(int j, int l) const { return comm[j][l]; }

  static PcPresentation empty(int p) {
    PcPresentation P;
    P.p = p;
    return P;
  }

  void add_generator(int w) {
    ++n;
    weight.push_back(w);
    for (auto& v : power) v.push_back(0);
    for (auto& row : comm)
      for (auto& v : row) v.push_back(0);
    power.emplace_back(n, 0);
    comm.emplace_back();
    for (int l = 0; l + 1 < n; ++l) comm.back().emplace_back(n, 0);
    defs.push_back(GenDef{});
  }

  // Sanity: every relation word must be a normal word in later generators.
  void validate_normal_words() const {
    for (int i = 0; i < n; ++i)
      for (int t = 0; t <= i; ++t)
        if (power[i][t]) throw std::logic_error("power word of g" + std::to_string(i) + " touches g" + std::to_string(t));
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < j; ++l)
        for (int t = 0; t <= l; ++t)
          if (comm[j][l][t])
            throw std::logic_error("commutator word [g" + std::to_string(j) + ",g" + std::to_string(l) +
                                   "] touches g" + std::to_string(t));
  }
};

// Collection from the left. The collector is usable on presentations that are
// not yet known to be consistent (as needed while lifting); it only requires
// the normal-word condition, which guarantees termination.
class Collector {
 public:
  explicit Collector(const PcPresentation& P) : P_(P), conj1_(P.n * P.n) {}

  int p() const { return P_.p; }
  int n() const { return P_.n; }

  ExpVec identity() const { return ExpVec(P_.n, 0); }

  ExpVec unit(int i) const {
    ExpVec v(P_.n, 0);
    v[i] = 1;
    return v;
  }

  // r <- normal form of r * g_i^e
  void mul_gen(ExpVec& r, int i, long long e) const {
    e %= P_.p;
    if (e < 0) e += P_.p;
    if (e == 0) return;
    guard_++;
    if (guard_ > kGuard) throw std::runtime_error("collection step guard exceeded; malformed pc table");
    int last = last_support(r);
    if (last <= i) {
      append_at(r, i, static_cast<int>(e));
      guard_--;
      return;
    }
    // split r = prefix (digits <= i) * suffix (digits > i)
    ExpVec suffix(P_.n, 0);
    for (int t = i + 1; t < P_.n; ++t) {
      suffix[t] = r[t];
      r[t] = 0;
    }
    append_at(r, i, static_cast<int>(e));
    ExpVec cs = conj_elem(suffix, i, static_cast<int>(e));
    mul_elem(r, cs);
    guard_--;
  }

  // r <- normal form of r * y, y already a normal word
  void mul_elem(ExpVec& r, const ExpVec& y) const {
    for (int j = 0; j < P_.n; ++j)
      if (y[j]) mul_gen(r, j, y[j]);
  }

  ExpVec mul(const ExpVec& a, const ExpVec& b) const {
    ExpVec r = a;
    mul_elem(r, b);
    return r;
  }

  ExpVec inverse(const ExpVec& y) const {
    ExpVec v(P_.n, 0);
    for (int i = 0; i < P_.n; ++i) {
      ExpVec prod = y;
      mul_elem(prod, v);
      int k = (P_.p - prod[i]) % P_.p;
      if (k) mul_gen(v, i, k);
    }
    return v;
  }

  ExpVec conjugate(const ExpVec& y, const ExpVec& g) const {
    ExpVec r = inverse(g);
    mul_elem(r, y);
    mul_elem(r, g);
    return r;
  }

  ExpVec commutator(const ExpVec& a, const ExpVec& b) const {
    ExpVec r = inverse(a);
    mul_elem(r, inverse(b));
    mul_elem(r, a);
    mul_elem(r, b);
    return r;
  }

  ExpVec elem_pow(ExpVec base, long long e) const {
    if (e < 0) {
      base = inverse(base);
      e = -e;
    }
    ExpVec acc = identity();
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  void reset_cache() const {
    conj1_.assign(static_cast<size_t>(P_.n) * P_.n, std::nullopt);
  }

 private:
  static constexpr long long kGuard = 400000000;

  int last_support(const ExpVec& r) const {
    for (int t = P_.n - 1; t >= 0; --t)
      if (r[t]) return t;
    return -1;
  }

  // r has support <= i; multiply by g_i^e with 0 < e < p
  void append_at(ExpVec& r, int i, int e) const {
    int s = r[i] + e;
    if (s < P_.p) {
      r[i] = s;
      return;
    }
    r[i] = s - P_.p;
    mul_elem(r, P_.power[i]);  // support > i
  }

  const ExpVec& conj1(int j, int i) const {
    auto& slot = conj1_[static_cast<size_t>(j) * P_.n + i];
    if (!slot) {
      ExpVec r = unit(j);
      mul_elem(r, P_.comm[j][i]);
      slot = std::move(r);
    }
    return *slot;
  }

  // y^(g_i^e) for a normal word y with support > i, 0 < e < p
  ExpVec conj_elem(const ExpVec& y, int i, int e) const {
    ExpVec cur = y;
    for (int step = 0; step < e; ++step) {
      ExpVec out(P_.n, 0);
      for (int j = i + 1; j < P_.n; ++j) {
        if (!cur[j]) continue;
        if (is_zero(P_.comm[j][i])) {
          mul_gen(out, j, cur[j]);
        } else {
          const ExpVec& c = conj1(j, i);
          for (int t = 0; t < cur[j]; ++t) mul_elem(out, c);
        }
      }
      cur = std::move(out);
    }
    return cur;
  }

  const PcPresentation& P_;
  mutable std::vector<std::optional<ExpVec>> conj1_;
  mutable long long guard_ = 0;
};

struct ConsistencyFailure {
  std::string what;  // description of the failing test word
};

// Full consistency check: the standard overlap tests, unfiltered. When all of
// them hold, the presented group has order exactly p^n and the exponent
// vectors are pairwise distinct normal forms.
inline std::optional<ConsistencyFailure> find_consistency_failure(const PcPresentation& P) {
  Collector C(P);
  auto mismatch = [&](const ExpVec& a, const ExpVec& b) { return a != b; };

  for (int k = 0; k < P.n; ++k)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < j; ++l) {
        // (g_k g_j) g_l  vs  g_k (g_j g_l)
        ExpVec lhs = C.unit(k);
        C.mul_gen(lhs, j, 1);
        C.mul_gen(lhs, l, 1);
        ExpVec inner = C.unit(j);
        C.mul_gen(inner, l, 1);
        ExpVec rhs = C.unit(k);
        C.mul_elem(rhs, inner);
        if (mismatch(lhs, rhs))
          return ConsistencyFailure{"associativity triple (" + std::to_string(k) + "," + std::to_string(j) +
                                    "," + std::to_string(l) + ")"};
      }

  for (int j = 0; j < P.n; ++j) {
    ExpVec pj = C.unit(j);
    C.mul_gen(pj, j, P.p - 1);  // g_j^p collected
    for (int l = 0; l < j; ++l) {
      // g_j^p g_l  vs  g_j^{p-1} (g_j g_l)
      ExpVec lhs = pj;
      C.mul_gen(lhs, l, 1);
      ExpVec gjl = C.unit(j);
      C.mul_gen(gjl, l, 1);
      ExpVec rhs(P.n, 0);
      if (P.p > 1) {
        rhs = ExpVec(P.n, 0);
        rhs[j] = P.p - 1;
      }
      C.mul_elem(rhs, gjl);
      if (mismatch(lhs, rhs))
        return ConsistencyFailure{"power overlap (g" + std::to_string(j) + "^p) g" + std::to_string(l)};
    }
    for (int l = j + 1; l < P.n; ++l) {
      // g_l (g_j^p) vs (g_l g_j) g_j^{p-1}
      ExpVec lhs = C.unit(l);
      C.mul_elem(lhs, pj);
      ExpVec rhs = C.unit(l);
      C.mul_gen(rhs, j, 1);
      C.mul_gen(rhs, j, P.p - 1);
      if (mismatch(lhs, rhs))
        return ConsistencyFailure{"power overlap g" + std::to_string(l) + " (g" + std::to_string(j) + "^p)"};
    }
    // g_j (g_j^p) vs (g_j^p) g_j
    ExpVec lhs = C.unit(j);
    C.mul_elem(lhs, pj);
    ExpVec rhs = pj;
    C.mul_gen(rhs, j, 1);
    if (mismatch(lhs, rhs))
      return ConsistencyFailure{"power overlap g" + std::to_string(j) + "^{p+1}"};
  }
  return std::nullopt;
}

inline bool check_consistency(PcPresentation& P) {
  P.validate_normal_words();
  auto fail = find_consistency_failure(P);
  P.consistent = !fail.has_value();
  return P.consistent;
}

}  // namespace pg
