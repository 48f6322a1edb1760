#pragma once
// Shared template builders for groups used across the test suites.

#include <string>
#include <vector>

#include "pg/group.hpp"
#include "pg/presentation.hpp"

namespace pgtest {

using pg::GroupTemplate;
using pg::Term;
using pg::Word;

inline GroupTemplate cyclic(int p, int m) {
  GroupTemplate T;
  T.p = p;
  T.label = "C_" + std::to_string(p) + "^" + std::to_string(m);
  T.gen_names = {"a"};
  T.rel_exp = {m};
  T.add_power(0, {});
  return T;
}

inline GroupTemplate elementary(int p, int rank) {
  GroupTemplate T;
  T.p = p;
  T.label = "C_p^" + std::to_string(rank);
  for (int i = 0; i < rank; ++i) {
    T.gen_names.push_back(std::string(1, static_cast<char>('a' + i)));
    T.rel_exp.push_back(1);
  }
  for (int i = 0; i < rank; ++i) T.add_power(i, {});
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < i; ++j) T.add_commutator(i, j, {});
  return T;
}

inline GroupTemplate q8() {
  GroupTemplate T;
  T.p = 2;
  T.label = "Q8";
  T.gen_names = {"a", "b"};
  T.rel_exp = {2, 1};
  T.add_power(0, {});
  T.add_power(1, {Term::g(0, 2)}, "b^2=a^2");
  T.add_commutator(1, 0, {Term::g(0, 2)}, "[b,a]=a^2");
  return T;
}

inline GroupTemplate mpnm(int p, int n, int m) {
  GroupTemplate T;
  T.p = p;
  T.label = "M" + std::to_string(p) + "(" + std::to_string(n) + "," + std::to_string(m) + ")";
  T.gen_names = {"a", "b"};
  T.rel_exp = {n, m};
  T.add_power(0, {});
  T.add_power(1, {});
  long long sh = 1;
  for (int t = 0; t < n - 1; ++t) sh *= p;
  T.add_commutator(0, 1, {Term::g(0, sh)}, "[a,b]=a^(p^(n-1))");
  return T;
}

inline GroupTemplate mpnm1(int p, int n, int m) {
  GroupTemplate T;
  T.p = p;
  T.label = "M" + std::to_string(p) + "(" + std::to_string(n) + "," + std::to_string(m) + ",1)";
  T.gen_names = {"a", "b", "c"};
  T.rel_exp = {n, m, 1};
  for (int i = 0; i < 3; ++i) T.add_power(i, {});
  T.add_commutator(0, 1, {Term::g(2)}, "[a,b]=c");
  T.add_commutator(2, 0, {}, "[c,a]=1");
  T.add_commutator(2, 1, {}, "[c,b]=1");
  return T;
}

inline GroupTemplate dihedral(int n) {  // order 2^n
  return mpnm(2, n - 1, 1);
}

// The exponent-4 group of order 2^6 whose derived subgroup is C_2^3
// (entry (22) of the A_2 list); a stress test for the refinement because no
// generator ordering makes its relations triangular.
inline GroupTemplate suzuki64() {
  GroupTemplate T;
  T.p = 2;
  T.label = "A2-22";
  T.gen_names = {"a", "b", "d"};
  T.rel_exp = {2, 2, 2};
  for (int i = 0; i < 3; ++i) T.add_power(i, {});
  T.add_commutator(0, 1, {Term::g(2, 2)}, "[a,b]=d^2");
  T.add_commutator(2, 0, {Term::g(1, 2), Term::g(2, 2)}, "[d,a]=b^2d^2");
  T.add_commutator(2, 1, {Term::g(0, 2), Term::g(1, 2)}, "[d,b]=a^2b^2");
  T.relations.push_back({{Term::comm({Term::g(0, 2)}, {Term::g(1)})}, {}, "[a^2,b]=1"});
  T.relations.push_back({{Term::comm({Term::g(1, 2)}, {Term::g(0)})}, {}, "[b^2,a]=1"});
  return T;
}

}  // namespace pgtest
