#pragma once
// Refinement of a presentation template into a consistent weighted pc
// presentation: the p-quotient construction, class by class. Each lift
// attaches central tails to the relation slots, enforces the consistency
// overlaps and the defining relations as linear conditions over F_p, and
// keeps the surviving tails as the next layer of generators. The output is
// certified afterwards by the full consistency check and a relation echo.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pg/collect.hpp"
#include "pg/fp.hpp"
#include "pg/presentation.hpp"

namespace pg {

class RefineError : public std::runtime_error {
 public:
  explicit RefineError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RefinedGroup {
  PcPresentation pc;
  std::vector<ExpVec> eps;  // image of each template generator
};

inline ExpVec eval_word(const Collector& C, const std::vector<ExpVec>& eps, const Word& w) {
  ExpVec r = C.identity();
  for (const Term& t : w) {
    ExpVec f;
    if (t.kind == Term::Gen) {
      f = eps[t.gen];
    } else {
      ExpVec u = eval_word(C, eps, t.left);
      ExpVec v = eval_word(C, eps, t.right);
      f = C.commutator(u, v);
    }
    if (t.exp == 1) {
      C.mul_elem(r, f);
    } else {
      C.mul_elem(r, C.elem_pow(f, t.exp));
    }
  }
  return r;
}

namespace detail {

// Reduced row echelon form over F_p. Columns are tail indices.
class FpEchelon {
 public:
  FpEchelon(int p, int ncols) : p_(p), ncols_(ncols), pivot_row_(ncols, -1) {}

  void add(std::vector<int> row) {
    for (int c = 0; c < ncols_; ++c) {
      if (row[c] == 0) continue;
      int r = pivot_row_[c];
      if (r < 0) {
        normalize(row, c);
        pivot_row_[c] = static_cast<int>(rows_.size());
        pivot_col_.push_back(c);
        rows_.push_back(std::move(row));
        return;
      }
      int f = p_ - row[c];
      for (int t = c; t < ncols_; ++t) row[t] = (row[t] + f * rows_[r][t]) % p_;
    }
  }

  // Back-substitute so pivot rows reference only free columns.
  void finish() {
    for (int idx = static_cast<int>(rows_.size()) - 1; idx >= 0; --idx) {
      int c = pivot_col_[idx];
      for (auto& other : rows_) {
        if (&other == &rows_[idx]) continue;
        int e = other[c];
        if (!e) continue;
        int f = p_ - e;
        for (int t = 0; t < ncols_; ++t) other[t] = (other[t] + f * rows_[idx][t]) % p_;
      }
    }
  }

  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
  // pivot col = sum over free cols of coeff[t] * t with coeff = -row entries
  std::vector<int> expression(int col) const {
    const auto& row = rows_[pivot_row_[col]];
    std::vector<int> expr(ncols_, 0);
    for (int t = 0; t < ncols_; ++t)
      if (t != col && row[t]) expr[t] = (p_ - row[t]) % p_;
    return expr;
  }

 private:
  void normalize(std::vector<int>& row, int c) {
    int inv = 1, v = row[c];
    for (int x = 1; x < p_; ++x)
      if (v * x % p_ == 1) {
        inv = x;
        break;
      }
    for (int t = c; t < ncols_; ++t) row[t] = row[t] * inv % p_;
  }

  int p_, ncols_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> pivot_col_;
  std::vector<int> pivot_row_;
};

}  // namespace detail

class PQuotient {
 public:
  explicit PQuotient(const GroupTemplate& T, int class_cap = 6) : T_(T), cap_(class_cap) {
    if (T.p < 2) throw RefineError("template has no prime");
  }

  RefinedGroup run() {
    initial_class();
    int cls = 1;
    while (true) {
      if (cls >= cap_)
        throw RefineError("class cap " + std::to_string(cap_) + " exceeded refining " + T_.label);
      if (!lift(cls)) break;
      ++cls;
    }
    finalize();
    return {P_, eps_};
  }

 private:
  // Exponent sum of a word per template generator, modulo p. Commutator
  // factors vanish in the weight-1 quotient.
  std::vector<int> abelianized(const Word& w) const {
    std::vector<int> v(T_.ngens(), 0);
    const int p = T_.p;
    for (const Term& t : w)
      if (t.kind == Term::Gen) v[t.gen] = static_cast<int>(mod_ll(v[t.gen] + t.exp, p));
    return v;
  }

  void initial_class() {
    const int p = T_.p, k = T_.ngens();
    // Row-reduce the abelianized relations, pivoting on the highest
    // generator index so listed-first (primary) generators survive.
    std::vector<std::vector<int>> rows;
    for (const auto& rel : T_.relations) {
      auto a = abelianized(rel.lhs), b = abelianized(rel.rhs);
      std::vector<int> r(k, 0);
      bool nz = false;
      for (int i = 0; i < k; ++i) {
        r[i] = (a[i] - b[i] % p + p) % p;
        nz |= r[i] != 0;
      }
      if (nz) rows.push_back(std::move(r));
    }
    std::vector<int> pivot_row(k, -1);
    std::vector<std::vector<int>> red;
    for (auto row : rows) {
      for (int c = k - 1; c >= 0; --c) {
        if (!row[c]) continue;
        if (pivot_row[c] < 0) {
          int inv = 1;
          for (int x = 1; x < p; ++x)
            if (row[c] * x % p == 1) { inv = x; break; }
          for (auto& e : row) e = e * inv % p;
          pivot_row[c] = static_cast<int>(red.size());
          red.push_back(row);
          row.clear();
          break;
        }
        int f = p - row[c];
        const auto& pr = red[pivot_row[c]];
        for (int t = 0; t < k; ++t) row[t] = (row[t] + f * pr[t]) % p;
      }
    }
    // reduced echelon: clear every pivot column from the other rows
    for (int c = 0; c < k; ++c) {
      if (pivot_row[c] < 0) continue;
      const auto pr = red[pivot_row[c]];
      for (int r2 = 0; r2 < static_cast<int>(red.size()); ++r2) {
        if (r2 == pivot_row[c]) continue;
        auto& r = red[r2];
        int e = r[c];
        if (!e) continue;
        int f = p - e;
        for (int t = 0; t < k; ++t) r[t] = (r[t] + f * pr[t]) % p;
      }
    }

    P_ = PcPresentation::empty(p);
    owner_.assign(k, -1);
    std::vector<int> pc_of_gen(k, -1);
    for (int t = 0; t < k; ++t) {
      if (pivot_row[t] >= 0) continue;  // eliminated
      P_.add_generator(1);
      pc_of_gen[t] = P_.n - 1;
      owner_[t] = P_.n - 1;
    }
    eps_.assign(k, ExpVec(P_.n, 0));
    for (int t = 0; t < k; ++t) {
      if (owner_[t] >= 0) {
        eps_[t][owner_[t]] = 1;
        continue;
      }
      const auto& row = red[pivot_row[t]];
      for (int s = 0; s < k; ++s) {
        if (s == t || !row[s]) continue;
        if (pc_of_gen[s] < 0)
          throw RefineError("class-1 elimination of '" + T_.gen_names[t] +
                            "' references an eliminated generator in " + T_.label);
        eps_[t][pc_of_gen[s]] = (p - row[s]) % p;
      }
    }
    if (P_.n == 0) throw RefineError("template " + T_.label + " has trivial p-quotient");
  }

  struct TailSlot {
    enum Kind { Power, Comm, Eps } kind;
    int j = -1, l = -1;  // Power: j; Comm: (j,l); Eps: template gen j
  };

  bool lift(int cls) {
    const int p = T_.p, n = P_.n;
    std::vector<bool> power_is_def(n, false);
    std::vector<std::vector<bool>> comm_is_def(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
      if (P_.defs[i].kind == GenDef::Power) power_is_def[P_.defs[i].j] = true;
      if (P_.defs[i].kind == GenDef::Commutator) comm_is_def[P_.defs[i].j][P_.defs[i].l] = true;
    }

    // Epimorphism tails lead so that the echelon pivots eliminate them
    // preferentially; relation tails are the candidates for new generators.
    std::vector<TailSlot> slots;
    for (int t = 0; t < T_.ngens(); ++t)
      if (owner_[t] < 0) slots.push_back({TailSlot::Eps, t, -1});
    for (int j = 0; j < n; ++j)
      if (!power_is_def[j]) slots.push_back({TailSlot::Power, j, -1});
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < j; ++l)
        if (!comm_is_def[j][l] && P_.weight[j] + P_.weight[l] <= cls + 1)
          slots.push_back({TailSlot::Comm, j, l});

    const int T = static_cast<int>(slots.size());
    if (T == 0) return false;

    for (int s = 0; s < T; ++s) P_.add_generator(cls + 1);
    for (auto& e : eps_) e.resize(P_.n, 0);
    for (int s = 0; s < T; ++s) {
      const auto& sl = slots[s];
      const int tail = n + s;
      if (sl.kind == TailSlot::Power) P_.power[sl.j][tail] = 1;
      if (sl.kind == TailSlot::Comm) P_.comm[sl.j][sl.l][tail] = 1;
      if (sl.kind == TailSlot::Eps) eps_[sl.j][tail] = 1;
    }

    // Gather linear conditions on the tails.
    Collector C(P_);
    detail::FpEchelon sys(p, T);
    auto push_delta = [&](ExpVec lhs, const ExpVec& rhs, const char* what) {
      C.mul_elem(lhs, C.inverse(rhs));
      for (int i = 0; i < n; ++i)
        if (lhs[i])
          throw RefineError(std::string("lift invariant violated (") + what + ") in " + T_.label);
      std::vector<int> row(lhs.begin() + n, lhs.end());
      sys.add(std::move(row));
    };

    for (int k2 = 0; k2 < P_.n; ++k2)
      for (int j = 0; j < k2; ++j) {
        if (P_.weight[k2] + P_.weight[j] >= cls + 1) break;
        for (int l = 0; l < j; ++l) {
          if (P_.weight[k2] + P_.weight[j] + P_.weight[l] > cls + 1) continue;
          ExpVec lhs = C.unit(k2);
          C.mul_gen(lhs, j, 1);
          C.mul_gen(lhs, l, 1);
          ExpVec inner = C.unit(j);
          C.mul_gen(inner, l, 1);
          ExpVec rhs = C.unit(k2);
          C.mul_elem(rhs, inner);
          push_delta(std::move(lhs), rhs, "triple");
        }
      }

    for (int j = 0; j < P_.n; ++j) {
      ExpVec pj = C.unit(j);
      C.mul_gen(pj, j, p - 1);  // g_j^p
      for (int l = 0; l < j; ++l) {
        if (P_.weight[j] + P_.weight[l] + 1 <= cls + 1) {
          ExpVec lhs = pj;
          C.mul_gen(lhs, l, 1);
          ExpVec gjl = C.unit(j);
          C.mul_gen(gjl, l, 1);
          ExpVec rhs(P_.n, 0);
          rhs[j] = p - 1;
          C.mul_elem(rhs, gjl);
          push_delta(std::move(lhs), rhs, "power-left");
        }
      }
      for (int l = j + 1; l < P_.n; ++l) {
        if (P_.weight[l] + P_.weight[j] + 1 > cls + 1) continue;
        ExpVec lhs = C.unit(l);
        C.mul_elem(lhs, pj);
        ExpVec rhs = C.unit(l);
        C.mul_gen(rhs, j, 1);
        C.mul_gen(rhs, j, p - 1);
        push_delta(std::move(lhs), rhs, "power-right");
      }
      ExpVec lhs = C.unit(j);
      C.mul_elem(lhs, pj);
      ExpVec rhs = pj;
      C.mul_gen(rhs, j, 1);
      push_delta(std::move(lhs), rhs, "power-self");
    }

    for (const auto& rel : T_.relations) {
      ExpVec lhs = eval_word(C, eps_, rel.lhs);
      ExpVec rhs = eval_word(C, eps_, rel.rhs);
      ExpVec delta = lhs;
      C.mul_elem(delta, C.inverse(rhs));
      for (int i = 0; i < n; ++i)
        if (delta[i])
          throw RefineError("relation '" + rel.text + "' fails below the new layer in " + T_.label);
      std::vector<int> row(delta.begin() + n, delta.end());
      sys.add(std::move(row));
    }

    sys.finish();

    // Substitute solved tails, then drop them.
    std::vector<int> keep;  // surviving tail slot indices
    for (int s = 0; s < T; ++s)
      if (!sys.is_pivot(s)) keep.push_back(s);

    auto substitute = [&](ExpVec& v) {
      for (int s = 0; s < T; ++s) {
        if (!sys.is_pivot(s)) continue;
        int e = v[n + s];
        if (!e) continue;
        v[n + s] = 0;
        auto expr = sys.expression(s);
        for (int t2 = 0; t2 < T; ++t2)
          if (expr[t2]) v[n + t2] = (v[n + t2] + e * expr[t2]) % p;
      }
    };
    for (auto& v : P_.power) substitute(v);
    for (auto& row : P_.comm)
      for (auto& v : row) substitute(v);
    for (auto& v : eps_) substitute(v);

    for (int s = 0; s < T; ++s)
      if (!sys.is_pivot(s) && slots[s].kind == TailSlot::Eps)
        throw RefineError("epimorphism image of '" + T_.gen_names[slots[s].j] +
                          "' stayed undetermined in " + T_.label);

    // Compact: old generators plus surviving tails.
    std::vector<int> newindex(P_.n, -1);
    for (int i = 0; i < n; ++i) newindex[i] = i;
    int next = n;
    for (int s : keep) newindex[n + s] = next++;

    PcPresentation Q = PcPresentation::empty(p);
    for (int t2 = 0; t2 < next; ++t2) Q.add_generator(1);
    Q.weight.assign(next, 0);
    for (int i = 0; i < P_.n; ++i)
      if (newindex[i] >= 0) Q.weight[newindex[i]] = P_.weight[i];
    auto compact = [&](const ExpVec& v) {
      ExpVec w(next, 0);
      for (int i = 0; i < P_.n; ++i)
        if (v[i]) {
          if (newindex[i] < 0) throw RefineError("dropped tail still referenced in " + T_.label);
          w[newindex[i]] = v[i];
        }
      return w;
    };
    for (int i = 0; i < n; ++i) {
      Q.power[i] = compact(P_.power[i]);
      for (int l = 0; l < i; ++l) Q.comm[i][l] = compact(P_.comm[i][l]);
      Q.defs[i] = P_.defs[i];
    }
    for (size_t kk = 0; kk < keep.size(); ++kk) {
      int i = n + static_cast<int>(kk);
      Q.power[i] = ExpVec(next, 0);
      for (int l = 0; l < i; ++l) Q.comm[i][l] = ExpVec(next, 0);
      const auto& sl = slots[keep[kk]];
      GenDef d;
      d.kind = sl.kind == TailSlot::Power ? GenDef::Power : GenDef::Commutator;
      d.j = sl.j;
      d.l = sl.l;
      Q.defs[i] = d;
    }
    for (auto& e : eps_) e = compact(e);
    P_ = std::move(Q);
    return !keep.empty();
  }

  void finalize() {
    P_.validate_normal_words();
    if (!check_consistency(P_))
      throw RefineError("refined presentation of " + T_.label + " failed the consistency check: " +
                        find_consistency_failure(P_)->what);
    Collector C(P_);
    for (const auto& rel : T_.relations) {
      ExpVec lhs = eval_word(C, eps_, rel.lhs);
      ExpVec rhs = eval_word(C, eps_, rel.rhs);
      if (lhs != rhs)
        throw RefineError("relation echo failed for '" + rel.text + "' in " + T_.label);
    }
  }

  const GroupTemplate& T_;
  int cap_;
  PcPresentation P_;
  std::vector<ExpVec> eps_;
  std::vector<int> owner_;
};

inline RefinedGroup refine_to_pc(const GroupTemplate& T, int class_cap = 6) {
  return PQuotient(T, class_cap).run();
}

}  // namespace pg
