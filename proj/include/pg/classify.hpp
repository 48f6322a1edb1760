#pragma once
// Classification utilities on top of the lattice: Redei-type identification
// of minimal non-abelian groups, invariant fingerprints, and the packaged
// analysis record the verifier and CLI report.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pg/lattice.hpp"

namespace pg {

struct A1Type {
  enum Kind { Q8, Mnm, Mnm1 } kind;
  int n = 0, m = 0;  // unused for Q8

  std::string to_string(int p) const {
    std::ostringstream os;
    if (kind == Q8) return "Q8";
    os << "M" << p << "(" << n << "," << m << (kind == Mnm1 ? ",1" : "") << ")";
    return os.str();
  }
};

// element-order census: count[k] = #elements of order p^k
inline std::vector<long long> order_census(const FiniteGroup& G) {
  std::vector<long long> census;
  for (uint32_t x = 0; x < G.size(); ++x) {
    int e = G.order_exp(x);
    if (e >= static_cast<int>(census.size())) census.resize(e + 1, 0);
    ++census[e];
  }
  return census;
}

inline long long conjugacy_class_count(const FiniteGroup& G) {
  std::vector<bool> seen(G.size(), false);
  long long classes = 0;
  for (uint32_t x = 0; x < G.size(); ++x) {
    if (seen[x]) continue;
    ++classes;
    std::vector<uint32_t> stack{x};
    seen[x] = true;
    while (!stack.empty()) {
      uint32_t y = stack.back();
      stack.pop_back();
      for (uint32_t g : G.generators()) {
        uint32_t z = G.conjugate(y, g);
        if (!seen[z]) {
          seen[z] = true;
          stack.push_back(z);
        }
      }
    }
  }
  return classes;
}

// Redei identification of a minimal non-abelian group given as a subgroup.
inline A1Type a1_type(const std::shared_ptr<const FiniteGroup>& parent, const Subgroup& H);

struct Fingerprint {
  long long order = 0;
  int d = 0, c = 0, exp_exp = 0;
  std::vector<int> abelianization;
  std::vector<int> center_type;
  long long derived_order = 0;
  std::vector<int> derived_type;  // empty when G' non-abelian (order still recorded)
  std::vector<long long> census;
  long long conj_classes = 0;
  std::optional<std::array<long long, 3>> mu;
  std::optional<long long> alpha1;

  bool operator==(const Fingerprint& o) const {
    return order == o.order && d == o.d && c == o.c && exp_exp == o.exp_exp &&
           abelianization == o.abelianization && center_type == o.center_type &&
           derived_order == o.derived_order && derived_type == o.derived_type &&
           census == o.census && conj_classes == o.conj_classes && mu == o.mu && alpha1 == o.alpha1;
  }
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }

  std::string to_string() const {
    std::ostringstream os;
    auto type = [&](const std::vector<int>& t) {
      os << "(";
      for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
      os << ")";
    };
    os << "order=" << order << " d=" << d << " c=" << c << " expExp=" << exp_exp << " ab=";
    type(abelianization);
    os << " Z=";
    type(center_type);
    os << " |G'|=" << derived_order << " G'=";
    type(derived_type);
    os << " census=[";
    for (size_t i = 0; i < census.size(); ++i) os << (i ? "," : "") << census[i];
    os << "] classes=" << conj_classes;
    if (mu) os << " mu=(" << (*mu)[0] << "," << (*mu)[1] << "," << (*mu)[2] << ")";
    if (alpha1) os << " alpha1=" << *alpha1;
    return os.str();
  }
};

// cheap isomorphism-invariant part (no lattice enumeration)
inline Fingerprint fingerprint_basic(const std::shared_ptr<const FiniteGroup>& G) {
  Fingerprint f;
  StructureRecord R = structure_record(G);
  f.order = R.order;
  f.d = R.d;
  f.c = R.c;
  f.exp_exp = R.exp_exp;
  f.abelianization = R.abelianization_type;
  f.center_type = R.center_type;
  f.derived_order = R.derived_order;
  f.derived_type = R.derived_type;
  f.census = order_census(*G);
  f.conj_classes = conjugacy_class_count(*G);
  return f;
}

inline Fingerprint fingerprint_full(const std::shared_ptr<const FiniteGroup>& G, Lattice& L) {
  Fingerprint f = fingerprint_basic(G);
  if (L.at_index(L.root()) == 3) {
    MuTriple mu = L.mu_triple();
    if (mu.well_defined) f.mu = std::array<long long, 3>{mu.mu0, mu.mu1, mu.mu2};
  }
  f.alpha1 = L.alpha1_bruteforce();
  return f;
}

inline A1Type a1_type(const std::shared_ptr<const FiniteGroup>& parent, const Subgroup& H) {
  auto V = std::make_shared<SubgroupView>(parent, H);
  {
    Lattice LH(V);
    if (!LH.minimal_nonabelian(LH.root()))
      throw std::invalid_argument("a1_type: subgroup is not minimal non-abelian");
  }
  const int p = V->prime();
  const int logo = log_p(V->size(), p);
  Fingerprint fh = fingerprint_basic(V);

  if (p == 2 && V->size() == 8) {
    // Q8 iff a unique involution
    if (fh.census.size() > 1 && fh.census[1] == 1) return A1Type{A1Type::Q8, 0, 0};
  }
  // candidate comparison against freshly built reference groups
  auto matches = [&](const GroupTemplate& T) {
    auto R = group_of_template(T);
    return fingerprint_basic(R) == fh;
  };
  for (int n = 2; n < logo; ++n) {
    int m = logo - n;
    if (m < 1) continue;
    GroupTemplate T;
    T.p = p;
    T.label = "Mp(n,m) probe";
    T.gen_names = {"a", "b"};
    T.rel_exp = {n, m};
    T.add_power(0, {});
    T.add_power(1, {});
    long long sh = 1;
    for (int t = 0; t < n - 1; ++t) sh *= p;
    T.add_commutator(0, 1, {Term::g(0, sh)}, "[a,b]=a^(p^(n-1))");
    if (matches(T)) return A1Type{A1Type::Mnm, n, m};
  }
  for (int n = 1; n < logo - 1; ++n) {
    int m = logo - 1 - n;
    if (m < 1 || m > n) continue;
    GroupTemplate T;
    T.p = p;
    T.label = "Mp(n,m,1) probe";
    T.gen_names = {"a", "b", "c"};
    T.rel_exp = {n, m, 1};
    T.add_power(0, {});
    T.add_power(1, {});
    T.add_power(2, {});
    T.add_commutator(0, 1, {Term::g(2)}, "[a,b]=c");
    T.add_commutator(2, 0, {}, "[c,a]=1");
    T.add_commutator(2, 1, {}, "[c,b]=1");
    if (matches(T)) return A1Type{A1Type::Mnm1, n, m};
  }
  throw std::logic_error("a1_type: no Redei type matched; the classification is exhaustive");
}

}  // namespace pg
