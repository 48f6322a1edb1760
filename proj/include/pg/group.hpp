#pragma once
// Concrete finite-group backends. PcGroup realizes a consistent pc
// presentation as a group on dense element indices with precomputed
// generator-multiplication tables; CosetGroup realizes a quotient by a
// normal subgroup on top of any backend.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pg/collect.hpp"
#include "pg/pquotient.hpp"

namespace pg {

class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;
  virtual uint32_t size() const = 0;
  virtual int prime() const = 0;
  // identity is element 0
  virtual uint32_t mult(uint32_t a, uint32_t b) const = 0;
  virtual uint32_t inverse(uint32_t a) const = 0;
  virtual const std::vector<uint32_t>& generators() const = 0;

  uint32_t conjugate(uint32_t x, uint32_t g) const { return mult(mult(inverse(g), x), g); }
  uint32_t commutator(uint32_t a, uint32_t b) const {
    return mult(mult(inverse(a), inverse(b)), mult(a, b));
  }
  uint32_t power(uint32_t x, long long e) const {
    if (e < 0) return power(inverse(x), -e);
    uint32_t acc = 0, base = x;
    while (e > 0) {
      if (e & 1) acc = mult(acc, base);
      base = mult(base, base);
      e >>= 1;
    }
    return acc;
  }
  // exponent of the element order: ord(x) = p^k
  int order_exp(uint32_t x) const {
    int k = 0;
    while (x != 0) {
      x = power(x, prime());
      ++k;
    }
    return k;
  }
};

constexpr long long kOrderGuard = 1000000;  // desk-scale bound on |G|

class PcGroup : public FiniteGroup {
 public:
  explicit PcGroup(PcPresentation pres, std::vector<ExpVec> eps = {},
                   std::vector<std::string> gen_names = {})
      : P_(std::move(pres)), eps_(std::move(eps)), names_(std::move(gen_names)) {
    if (!P_.consistent) {
      PcPresentation copy = P_;
      if (!check_consistency(copy))
        throw std::invalid_argument("PcGroup: presentation is not consistent: " +
                                    find_consistency_failure(copy)->what);
      P_.consistent = true;
    }
    long long o = 1;
    for (int i = 0; i < P_.n; ++i) {
      o *= P_.p;
      if (o > kOrderGuard) throw std::invalid_argument("PcGroup: order exceeds the desk-scale guard");
    }
    size_ = static_cast<uint32_t>(o);
    build_tables();
  }

  uint32_t size() const override { return size_; }
  int prime() const override { return P_.p; }
  int npc() const { return P_.n; }
  const PcPresentation& presentation() const { return P_; }

  uint32_t mult(uint32_t a, uint32_t b) const override {
    uint32_t r = a;
    for (int i = 0; i < P_.n && b; ++i) {
      int e = static_cast<int>(b % P_.p);
      b /= P_.p;
      for (int t = 0; t < e; ++t) r = rmul_[i][r];
    }
    return r;
  }

  uint32_t inverse(uint32_t a) const override { return inv_[a]; }

  const std::vector<uint32_t>& generators() const override { return gens_; }

  uint32_t pack(const ExpVec& v) const {
    uint32_t idx = 0;
    for (int i = P_.n - 1; i >= 0; --i) idx = idx * P_.p + static_cast<uint32_t>(v[i]);
    return idx;
  }
  ExpVec unpack(uint32_t idx) const {
    ExpVec v(P_.n, 0);
    for (int i = 0; i < P_.n && idx; ++i) {
      v[i] = static_cast<int>(idx % P_.p);
      idx /= P_.p;
    }
    return v;
  }

  // image of template generator t under the refinement epimorphism
  uint32_t template_image(int t) const {
    if (t < 0 || t >= static_cast<int>(eps_.size()))
      throw std::out_of_range("PcGroup::template_image");
    return pack(eps_[t]);
  }
  int template_gens() const { return static_cast<int>(eps_.size()); }
  const std::vector<std::string>& template_names() const { return names_; }

 private:
  void build_tables() {
    Collector C(P_);
    rmul_.assign(P_.n, std::vector<uint32_t>(size_));
    for (uint32_t x = 0; x < size_; ++x) {
      ExpVec v = unpack(x);
      for (int i = 0; i < P_.n; ++i) {
        ExpVec r = v;
        C.mul_gen(r, i, 1);
        rmul_[i][x] = pack(r);
      }
    }
    inv_.assign(size_, 0);
    for (uint32_t x = 0; x < size_; ++x) {
      // digit-wise solve of x * y = 1
      uint32_t y = 0;
      uint32_t prod = x;
      uint32_t stride = 1;
      for (int i = 0; i < P_.n; ++i) {
        int d = static_cast<int>(prod / stride % P_.p);
        int k = (P_.p - d) % P_.p;
        for (int t = 0; t < k; ++t) {
          y = rmul_[i][y];
          prod = rmul_[i][prod];
        }
        stride *= P_.p;
      }
      inv_[x] = y;
    }
    gens_.clear();
    uint32_t stride = 1;
    for (int i = 0; i < P_.n; ++i) {
      gens_.push_back(stride);
      stride *= P_.p;
    }
  }

  PcPresentation P_;
  std::vector<ExpVec> eps_;
  std::vector<std::string> names_;
  uint32_t size_ = 0;
  std::vector<std::vector<uint32_t>> rmul_;
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> gens_;
};

// Quotient by a normal subgroup, with coset arithmetic through
// representatives in the parent group.
class CosetGroup : public FiniteGroup {
 public:
  CosetGroup(std::shared_ptr<const FiniteGroup> parent, const std::vector<uint32_t>& normal_members)
      : parent_(std::move(parent)) {
    const uint32_t n = parent_->size();
    cid_.assign(n, UINT32_MAX);
    for (uint32_t x = 0; x < n; ++x) {
      if (cid_[x] != UINT32_MAX) continue;
      uint32_t id = static_cast<uint32_t>(rep_.size());
      rep_.push_back(x);
      for (uint32_t m : normal_members) cid_[parent_->mult(m, x)] = id;
      if (cid_[x] != id) throw std::invalid_argument("CosetGroup: membership list is not a subgroup");
    }
    for (uint32_t g : parent_->generators()) {
      uint32_t im = cid_[g];
      if (im != 0) gens_.push_back(im);
    }
    if (gens_.empty()) gens_.push_back(0);
    // well-definedness spot check on the generators catches non-normal input
    for (uint32_t m : normal_members)
      for (uint32_t g : parent_->generators())
        if (cid_[parent_->conjugate(m, g)] != 0)
          throw std::invalid_argument("CosetGroup: subgroup is not normal");
  }

  uint32_t size() const override { return static_cast<uint32_t>(rep_.size()); }
  int prime() const override { return parent_->prime(); }
  uint32_t mult(uint32_t a, uint32_t b) const override {
    return cid_[parent_->mult(rep_[a], rep_[b])];
  }
  uint32_t inverse(uint32_t a) const override { return cid_[parent_->inverse(rep_[a])]; }
  const std::vector<uint32_t>& generators() const override { return gens_; }

  uint32_t coset_of(uint32_t parent_elem) const { return cid_[parent_elem]; }
  uint32_t representative(uint32_t coset) const { return rep_[coset]; }
  const FiniteGroup& parent() const { return *parent_; }

 private:
  std::shared_ptr<const FiniteGroup> parent_;
  std::vector<uint32_t> cid_, rep_, gens_;
};

// Block-diagonal pc presentation of A x B.
inline PcPresentation direct_product_pc(const PcPresentation& A, const PcPresentation& B) {
  if (A.p != B.p) throw std::invalid_argument("direct product of groups over different primes");
  PcPresentation P = PcPresentation::empty(A.p);
  const int n = A.n + B.n;
  for (int i = 0; i < A.n; ++i) P.add_generator(A.weight[i]);
  for (int i = 0; i < B.n; ++i) P.add_generator(B.weight[i]);
  auto embedA = [&](const ExpVec& v) {
    ExpVec w(n, 0);
    for (int i = 0; i < A.n; ++i) w[i] = v[i];
    return w;
  };
  auto embedB = [&](const ExpVec& v) {
    ExpVec w(n, 0);
    for (int i = 0; i < B.n; ++i) w[A.n + i] = v[i];
    return w;
  };
  for (int i = 0; i < A.n; ++i) {
    P.power[i] = embedA(A.power[i]);
    for (int l = 0; l < i; ++l) P.comm[i][l] = embedA(A.comm[i][l]);
  }
  for (int i = 0; i < B.n; ++i) {
    P.power[A.n + i] = embedB(B.power[i]);
    for (int l = 0; l < i; ++l) P.comm[A.n + i][A.n + l] = embedB(B.comm[i][l]);
  }
  P.consistent = A.consistent && B.consistent;
  return P;
}

inline ExpVec embed_left(const PcPresentation& A, const PcPresentation& B, const ExpVec& v) {
  ExpVec w(A.n + B.n, 0);
  for (int i = 0; i < A.n; ++i) w[i] = v[i];
  return w;
}
inline ExpVec embed_right(const PcPresentation& A, const PcPresentation& B, const ExpVec& v) {
  ExpVec w(A.n + B.n, 0);
  for (int i = 0; i < B.n; ++i) w[A.n + i] = v[i];
  return w;
}

inline bool is_central_element(const FiniteGroup& G, uint32_t z) {
  for (uint32_t g : G.generators())
    if (G.mult(z, g) != G.mult(g, z)) return false;
  return true;
}

// (A x B) / <(zA, zB^{-1})>, identifying the central cyclic subgroups
// generated by zA and zB. Both must be central and of the same order.
inline std::shared_ptr<const FiniteGroup> central_product(const std::shared_ptr<PcGroup>& A,
                                                          const std::shared_ptr<PcGroup>& B,
                                                          uint32_t zA, uint32_t zB) {
  if (!is_central_element(*A, zA) || !is_central_element(*B, zB))
    throw std::invalid_argument("central_product: identification words are not central");
  if (A->order_exp(zA) != B->order_exp(zB))
    throw std::invalid_argument("central_product: identified elements have different orders");
  auto D = std::make_shared<PcGroup>(direct_product_pc(A->presentation(), B->presentation()));
  ExpVec vz = embed_left(A->presentation(), B->presentation(), A->unpack(zA));
  ExpVec wz = embed_right(A->presentation(), B->presentation(), B->unpack(B->inverse(zB)));
  uint32_t d = D->mult(D->pack(vz), D->pack(wz));
  std::vector<uint32_t> members;
  uint32_t x = 0;
  do {
    members.push_back(x);
    x = D->mult(x, d);
  } while (x != 0);
  return std::make_shared<CosetGroup>(D, members);
}

struct PcGroupBuildError : std::runtime_error {
  explicit PcGroupBuildError(const std::string& m) : std::runtime_error(m) {}
};

// Template -> concrete group, through the p-quotient refinement.
inline std::shared_ptr<PcGroup> group_of_template(const GroupTemplate& T, int class_cap = 6) {
  RefinedGroup R = refine_to_pc(T, class_cap);
  if (R.pc.order() != T.expected_order())
    throw PcGroupBuildError("presentation " + T.label + " defines a group of order " +
                            std::to_string(R.pc.order()) + ", expected " +
                            std::to_string(T.expected_order()));
  return std::make_shared<PcGroup>(std::move(R.pc), std::move(R.eps), T.gen_names);
}

}  // namespace pg
