#pragma once
// Concrete presentation templates: named generators with p-power relative
// orders plus power, commutator and free-form relations. This is the
// executable form of the presentations used throughout the catalog; all
// parameters are already bound to integers.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pg {

struct Term;
using Word = std::vector<Term>;

struct Term {
  enum Kind { Gen, Comm } kind = Gen;
  int gen = -1;        // Kind::Gen
  Word left, right;    // Kind::Comm: [left, right]
  long long exp = 1;

  static Term g(int gen, long long e = 1) {
    Term t;
    t.kind = Gen;
    t.gen = gen;
    t.exp = e;
    return t;
  }
  static Term comm(Word l, Word r, long long e = 1) {
    Term t;
    t.kind = Comm;
    t.left = std::move(l);
    t.right = std::move(r);
    t.exp = e;
    return t;
  }
};

inline Word word_of(std::initializer_list<Term> ts) { return Word(ts); }

struct TemplateRelation {
  Word lhs, rhs;     // lhs = rhs
  std::string text;  // for diagnostics and the relation echo report
};

struct GroupTemplate {
  int p = 0;
  std::vector<std::string> gen_names;
  std::vector<int> rel_exp;  // generator i has relative order p^rel_exp[i]
  std::vector<TemplateRelation> relations;
  std::string label;  // catalog id / diagnostic tag

  int ngens() const { return static_cast<int>(gen_names.size()); }

  int gen_index(const std::string& name) const {
    for (int i = 0; i < ngens(); ++i)
      if (gen_names[i] == name) return i;
    throw std::invalid_argument("unknown generator '" + name + "' in template " + label);
  }

  long long expected_order() const {
    long long o = 1;
    int total = 0;
    for (int e : rel_exp) total += e;
    for (int t = 0; t < total; ++t) o *= p;
    return o;
  }

  void add_power(int gen, Word rhs, std::string text = {}) {
    long long e = 1;
    for (int t = 0; t < rel_exp[gen]; ++t) e *= p;
    relations.push_back({{Term::g(gen, e)}, std::move(rhs), std::move(text)});
  }

  void add_commutator(int u, int t, Word rhs, std::string text = {}) {
    relations.push_back({{Term::comm({Term::g(u)}, {Term::g(t)})}, std::move(rhs), std::move(text)});
  }
};

}  // namespace pg
