#pragma once
// Exact arithmetic and number-theoretic predicates over the prime field F_p.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pg {

inline long long mod_ll(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Deterministic primality check by trial division; fields here are tiny.
inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  explicit PrimeField(int p) : p_(p) {
    if (p < 2 || p > 97 || !is_prime(p))
      throw std::invalid_argument("PrimeField: p must be a prime in [2,97], got " + std::to_string(p));
  }

  int p() const { return p_; }
  int reduce(long long a) const { return static_cast<int>(mod_ll(a, p_)); }

  int add(long long a, long long b) const { return reduce(a + b); }
  int sub(long long a, long long b) const { return reduce(a - b); }
  int mul(long long a, long long b) const { return reduce(reduce(a) * static_cast<long long>(reduce(b))); }

  int pow(long long a, long long e) const {
    long long base = reduce(a), acc = 1;
    if (e < 0) {
      base = inv(base);
      e = -e;
    }
    while (e > 0) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<int>(acc);
  }

  int inv(long long a) const {
    int r = reduce(a);
    if (r == 0) throw std::domain_error("PrimeField::inv of zero");
    return pow(r, p_ - 2);
  }

  // Legendre symbol by exhausting squares; 0 iff p | a.
  int legendre(long long a) const {
    int r = reduce(a);
    if (r == 0) return 0;
    for (int x = 1; x < p_; ++x)
      if (x * x % p_ == r) return +1;
    return -1;
  }

  bool is_square(long long a) const { return legendre(a) >= 0; }      // 0 counts as a square
  bool is_nonsquare(long long a) const { return legendre(a) == -1; }  // strict non-residue

  // The fixed quadratic non-residue: smallest positive non-residue mod p.
  int fixed_nonresidue() const {
    if (p_ == 2) throw std::domain_error("no quadratic non-residue mod 2");
    for (int x = 2; x < p_; ++x)
      if (legendre(x) == -1) return x;
    throw std::logic_error("unreachable: odd p has a non-residue");
  }

  // Smallest positive primitive root mod p.
  int primitive_root() const {
    for (int g = 1; g < p_; ++g) {
      int x = g, ord = 1;
      while (x != 1) {
        x = static_cast<int>(static_cast<long long>(x) * g % p_);
        ++ord;
      }
      if (ord == p_ - 1) return g;
    }
    throw std::logic_error("unreachable: F_p* is cyclic");
  }

  // Coset representatives of (F_p*)^3 in F_p*, smallest member of each coset,
  // ascending. One representative when gcd(3,p-1)=1, three otherwise.
  std::vector<int> cube_coset_reps() const {
    std::vector<bool> seen(p_, false);
    std::vector<int> reps;
    for (int x = 1; x < p_; ++x) {
      if (seen[x]) continue;
      reps.push_back(x);
      for (int y = 1; y < p_; ++y) seen[mul(x, pow(y, 3))] = true;
    }
    return reps;
  }

  bool is_cube(long long a) const {
    int r = reduce(a);
    for (int x = 0; x < p_; ++x)
      if (pow(x, 3) == r) return true;
    return false;
  }

 private:
  int p_;
};

// |{(x,y) in F_p^2 : x^2 + r y^2 = u}| by exhaustive count. For u != 0 the
// value is p-1 when -r is a nonzero square and p+1 when -r is a non-square.
inline long long count_conic_solutions(long long r, long long u, const PrimeField& F) {
  if (F.p() == 2) throw std::invalid_argument("count_conic_solutions: p must be odd");
  const int p = F.p(), rr = F.reduce(r), uu = F.reduce(u);
  long long n = 0;
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      if ((x * x + static_cast<long long>(rr) * y * y) % p == uu) ++n;
  return n;
}

// One solution of x^2 + s xy + r y^2 + w x + v y + u = 0, provided the form is
// nondegenerate (s^2 - 4r != 0). Existence is Lemma-level fact; we search and
// verify by substitution.
inline std::pair<int, int> solve_general_conic(long long s, long long r, long long w, long long v,
                                               long long u, const PrimeField& F) {
  if (F.p() == 2) throw std::invalid_argument("solve_general_conic: p must be odd");
  if (F.reduce(s * s - 4 * r) == 0)
    throw std::invalid_argument("solve_general_conic: requires s^2 - 4r != 0 (mod p)");
  const int p = F.p();
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      long long val = F.reduce(static_cast<long long>(x) * x + s * x % p * y + r * y % p * y +
                               w * x + v * y + u);
      if (val == 0) return {x, y};
    }
  throw std::logic_error("solve_general_conic: no solution found; nondegenerate conic must have one");
}

// ---------------------------------------------------------------------------
// Parameter-isomorphism predicates for the parameterized families of Sec. 5.
// Each implements the iff condition of the corresponding lemma, checking the
// existential conditions by exhausting the quantified units.
// ---------------------------------------------------------------------------

// G(i,j) ~ G(i',j')  iff  exist r,s in F_p*: j' = s^2 j and i' = r^2 s i.
inline bool cong0_equivalent(int i1, int j1, int i2, int j2, const PrimeField& F) {
  for (int r = 1; r < F.p(); ++r)
    for (int s = 1; s < F.p(); ++s)
      if (F.reduce(j2) == F.mul(F.mul(s, s), j1) && F.reduce(i2) == F.mul(F.mul(F.mul(r, r), s), i1))
        return true;
  return false;
}

// G(i,j) ~ G(i',j')  iff  exist r,s in F_p*: j' = r s j and i' = r^3 i.
inline bool cong0a_equivalent(int i1, int j1, int i2, int j2, const PrimeField& F) {
  for (int r = 1; r < F.p(); ++r)
    for (int s = 1; s < F.p(); ++s)
      if (F.reduce(j2) == F.mul(F.mul(r, s), j1) && F.reduce(i2) == F.mul(F.pow(r, 3), i1))
        return true;
  return false;
}

// G(r,s) ~ G(r',s') at fixed nu1, nu2: exist i,l in {1,-1}, k in F_p with
// r' = i r and, for l = 1, s' = s + i k nu2 nu1^{-1} r; for l = -1,
// s' + s = 2 nu2 + i k nu2 nu1^{-1} r.
inline bool cong1_equivalent(int r1, int s1, int r2, int s2, int nu1, int nu2, const PrimeField& F) {
  const int q = F.mul(nu2, F.inv(nu1));
  for (int i : {1, F.p() - 1}) {
    if (F.reduce(r2) != F.mul(i, r1)) continue;
    for (int k = 0; k < F.p(); ++k) {
      const int t = F.mul(F.mul(i, k), F.mul(q, r1));
      if (F.reduce(s2) == F.add(s1, t)) return true;                       // l = 1
      if (F.add(s2, s1) == F.add(F.mul(2, nu2), t)) return true;           // l = -1
    }
  }
  return false;
}

// G(nu,t) ~ G(nu',t')  iff  (nu',t') = (nu,t).
inline bool cong2_equivalent(int nu1, int t1, int nu2, int t2, const PrimeField& F) {
  return F.reduce(nu1) == F.reduce(nu2) && F.reduce(t1) == F.reduce(t2);
}

// G(nu,s,t) ~ G(nu',s',t'): nu' = nu and exist i in F_p*, k in F_p, l = +-1
// with t' i = t and, for l = 1, s' = s - i^{-1} t k nu; for l = -1,
// s' + s = 2 nu + i^{-1} t k nu.
inline bool cong3_equivalent(int nu1, int s1, int t1, int nu2, int s2, int t2, const PrimeField& F) {
  if (F.reduce(nu1) != F.reduce(nu2)) return false;
  for (int i = 1; i < F.p(); ++i) {
    if (F.mul(t2, i) != F.reduce(t1)) continue;
    for (int k = 0; k < F.p(); ++k) {
      const int t = F.mul(F.mul(F.inv(i), t1), F.mul(k, nu1));
      if (F.reduce(s2) == F.sub(s1, t)) return true;                       // l = 1
      if (F.add(s2, s1) == F.add(F.mul(2, nu1), t)) return true;           // l = -1
    }
  }
  return false;
}

// G(nu,k) ~ G(nu',k')  iff  nu' = nu and k' = +-k.
inline bool cong4_equivalent(int nu1, int k1, int nu2, int k2, const PrimeField& F) {
  return F.reduce(nu1) == F.reduce(nu2) &&
         (F.reduce(k2) == F.reduce(k1) || F.reduce(k2) == F.reduce(-k1));
}

// family ids used by the catalog and the CLI
inline bool param_equivalent(const std::string& family, const std::vector<int>& a,
                             const std::vector<int>& b, const PrimeField& F) {
  auto need = [&](size_t n) {
    if (a.size() != n || b.size() != n)
      throw std::invalid_argument("param_equivalent: family " + family + " takes " +
                                  std::to_string(n) + " parameters");
  };
  if (family == "cong0") { need(2); return cong0_equivalent(a[0], a[1], b[0], b[1], F); }
  if (family == "cong0a") { need(2); return cong0a_equivalent(a[0], a[1], b[0], b[1], F); }
  if (family == "cong1") { need(4); return a[2] == b[2] && a[3] == b[3] &&
        cong1_equivalent(a[0], a[1], b[0], b[1], a[2], a[3], F); }
  if (family == "cong2") { need(2); return cong2_equivalent(a[0], a[1], b[0], b[1], F); }
  if (family == "cong3") { need(3); return cong3_equivalent(a[0], a[1], a[2], b[0], b[1], b[2], F); }
  if (family == "cong4") { need(2); return cong4_equivalent(a[0], a[1], b[0], b[1], F); }
  throw std::invalid_argument("param_equivalent: unknown family " + family);
}

// Smallest positive pair (m,n), m scanned first, with
// (m-1)^2 - nu^{-1} (n+nu)^2 = r (mod p). Used by one catalog family.
inline std::pair<int, int> k3_smallest_mn(int r, int nu, const PrimeField& F) {
  const int ninv = F.inv(nu);
  for (int m = 1; m <= F.p(); ++m)
    for (int n = 1; n <= F.p(); ++n) {
      long long lhs = F.sub(F.mul(m - 1, m - 1), F.mul(ninv, F.mul(n + nu, n + nu)));
      if (lhs == F.reduce(r)) return {m, n};
    }
  throw std::logic_error("k3_smallest_mn: no solution; the congruence is solvable for every r");
}

}  // namespace pg
