#include <algorithm>
#include <set>

#include "doctest.h"
#include "xmodkit/errors.hpp"
#include "xmodkit/group_hom.hpp"
#include "xmodkit/perm_group.hpp"
#include "xmodkit/transversal.hpp"

using namespace xmodkit;

TEST_CASE("permutation arithmetic") {
  Perm x = Perm::from_cycles(3, {{0, 1, 2}});
  CHECK(x.order() == 3);
  CHECK((x * x * x).is_identity());
  CHECK(x.inverse() * x == Perm(3));
  CHECK(x.to_cycle_string() == "(0 1 2)");
  CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), PreconditionError);
}

TEST_CASE("group closure from generators") {
  PermGroup c3 = PermGroup::from_generators(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  CHECK(c3.order() == 3);

  PermGroup d6 = PermGroup::dihedral(6);
  CHECK(d6.order() == 12);

  PermGroup t = PermGroup::from_generators(4, {});
  CHECK(t.order() == 1);
  CHECK(t.degree() == 4);
}

TEST_CASE("element indexing and multiplication agree with permutations") {
  for (PermGroup g : {PermGroup::dihedral(4), PermGroup::symmetric(3), PermGroup::cyclic(6)}) {
    for (long long a = 0; a < g.order(); ++a)
      for (long long b = 0; b < g.order(); ++b) {
        Perm p = g.elements()[a] * g.elements()[b];
        CHECK(g.elements()[g.mult((int)a, (int)b)] == p);
      }
    for (long long a = 0; a < g.order(); ++a)
      CHECK(g.mult(g.inv((int)a), (int)a) == g.identity());
  }
}

TEST_CASE("spanning tree words evaluate back to their element") {
  PermGroup g = PermGroup::dihedral(5);
  for (long long i = 0; i < g.order(); ++i)
    CHECK(g.eval_word(g.word_of((int)i)) == (int)i);
}

TEST_CASE("lagrange and subgroup order divide") {
  PermGroup s4 = PermGroup::symmetric(4);
  long long fact = 24;
  CHECK(s4.order() == fact);
  PermGroup v = normal_closure(s4, {s4.index_of(Perm::from_cycles(4, {{0, 1}, {2, 3}}))});
  CHECK(v.order() == 4);
  CHECK(s4.order() % v.order() == 0);
}

TEST_CASE("normal closure examples") {
  PermGroup s3 = PermGroup::symmetric(3);
  PermGroup whole = normal_closure(s3, {s3.index_of(Perm::from_cycles(3, {{0, 1}}))});
  CHECK(whole.order() == 6);

  PermGroup any = PermGroup::cyclic(5);
  CHECK(normal_closure(any, {}).order() == 1);

  // center of the dihedral group of order 8, by brute-force conjugation oracle
  PermGroup d4 = PermGroup::dihedral(4);
  Perm x = d4.generators()[0];
  PermGroup n = normal_closure(d4, {d4.index_of(x * x)});
  CHECK(n.order() == 2);
  std::set<Perm> brute;
  for (const Perm& g : d4.elements()) brute.insert(g.inverse() * (x * x) * g);
  for (const Perm& p : brute) CHECK(n.contains(p));
}

TEST_CASE("quotient groups") {
  PermGroup c4 = PermGroup::cyclic(4);
  PermGroup c2 = subgroup_generated(c4, {c4.mult_gen(c4.generator_index(0), 0)});
  CHECK(c2.order() == 2);
  Quotient q = quotient_group(c4, c2);
  CHECK(q.group.order() == 2);

  PermGroup d6 = PermGroup::dihedral(6);
  PermGroup rot = subgroup_generated(d6, {d6.generator_index(0)});
  Quotient q2 = quotient_group(d6, rot);
  CHECK(q2.group.order() == 2);

  Quotient q3 = quotient_group(d6, PermGroup::trivial(d6.degree()));
  CHECK(q3.group.order() == d6.order());
  CHECK(q3.projection.is_bijective());

  // order is multiplicative across the projection
  CHECK(q2.group.order() * rot.order() == d6.order());

  PermGroup refl = subgroup_generated(d6, {d6.generator_index(1)});
  CHECK_THROWS_AS(quotient_group(d6, refl), NotNormalError);
}

TEST_CASE("homomorphism construction validates relations") {
  PermGroup c4 = PermGroup::cyclic(4);
  PermGroup c2 = PermGroup::cyclic(2);
  // c4 -> c2 sending the generator to the generator is a homomorphism
  GroupHom f(c4, c2, {c2.generator_index(0)});
  CHECK(f.is_surjective());
  CHECK(f.kernel_element_indices().size() == 2);
  // c2 -> c4 sending the involution to a generator of order 4 is not
  CHECK(!GroupHom::try_build(c2, c4, {c4.generator_index(0)}).has_value());
}

TEST_CASE("abelianization invariants") {
  CHECK(abelianization(PermGroup::cyclic(6)).group.invariant_factors() ==
        std::vector<long long>{6});
  CHECK(abelianization(PermGroup::dihedral(6)).group.invariant_factors() ==
        std::vector<long long>{2, 2});
  CHECK(abelianization(PermGroup::dihedral(5)).group.invariant_factors() ==
        std::vector<long long>{2});
  CHECK(abelianization(PermGroup::symmetric(3)).group.invariant_factors() ==
        std::vector<long long>{2});

  // brute-force commutator subgroup oracle
  PermGroup d4 = PermGroup::dihedral(4);
  std::set<Perm> comms;
  for (const Perm& a : d4.elements())
    for (const Perm& b : d4.elements())
      comms.insert(a.inverse() * b.inverse() * a * b);
  PermGroup derived = commutator_subgroup(d4);
  for (const Perm& c : comms) CHECK(derived.contains(c));
  CHECK(abelianization(d4).group.order() == d4.order() / derived.order());
}

TEST_CASE("isomorphism oracle") {
  CHECK(groups_isomorphic(PermGroup::dihedral(3), PermGroup::symmetric(3)));
  PermGroup c2xc2 = direct_product(PermGroup::cyclic(2), PermGroup::cyclic(2));
  CHECK(!groups_isomorphic(PermGroup::cyclic(4), c2xc2));
  CHECK(groups_isomorphic(PermGroup::dihedral(2), c2xc2));
  CHECK_THROWS_AS(groups_isomorphic(PermGroup::symmetric(3), PermGroup::symmetric(3), 5),
                  TooLargeError);
}

TEST_CASE("transversal of the reflection subgroup consists of rotations") {
  PermGroup d6 = PermGroup::dihedral(6);
  PermGroup c2 = PermGroup::cyclic(2);
  GroupHom iota(c2, d6, {d6.generator_index(1)});
  Transversal t(d6, iota);
  REQUIRE(t.size() == 6);
  // representatives are exactly the powers of the rotation x
  Perm x = d6.generators()[0];
  std::set<Perm> powers;
  Perm acc(d6.degree());
  for (int i = 0; i < 6; ++i) {
    powers.insert(acc);
    acc = acc * x;
  }
  for (int i = 0; i < 6; ++i) CHECK(powers.count(d6.elements()[t.rep(i)]) == 1);
  CHECK(t.rep(0) == d6.identity());
  CHECK(d6.elements()[t.rep(1)] == x);
}

TEST_CASE("transversal factorization is exact") {
  PermGroup d6 = PermGroup::dihedral(6);
  PermGroup c2 = PermGroup::cyclic(2);
  GroupHom iota(c2, d6, {d6.generator_index(1)});
  Transversal t(d6, iota);
  for (int i = 0; i < t.size(); ++i)
    for (long long e = 0; e < d6.order(); ++e) {
      int lhs = d6.mult(t.rep(i), (int)e);
      int rhs = d6.mult(iota.apply(t.xi(i, (int)e)), t.rep(t.eta(i, (int)e)));
      CHECK(lhs == rhs);
    }

  // whole-group case: a single representative
  GroupHom id = GroupHom::identity(d6);
  Transversal whole(d6, id);
  CHECK(whole.size() == 1);
  for (long long e = 0; e < d6.order(); ++e)
    CHECK(whole.iota().apply(whole.xi(0, (int)e)) == (int)e);

  // index-two case, checked over all pairs
  PermGroup c4 = PermGroup::cyclic(4);
  PermGroup h = subgroup_generated(c4, {c4.mult_gen(c4.generator_index(0), 0)});
  GroupHom incl(PermGroup::cyclic(2), c4, {c4.index_of(h.generators()[0])});
  Transversal t2(c4, incl);
  CHECK(t2.size() == 2);
  for (int i = 0; i < 2; ++i)
    for (long long e = 0; e < 4; ++e) {
      int lhs = c4.mult(t2.rep(i), (int)e);
      int rhs = c4.mult(incl.apply(t2.xi(i, (int)e)), t2.rep(t2.eta(i, (int)e)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("automorphism group of s3 is inner") {
  PermGroup s3 = PermGroup::symmetric(3);
  PermGroup aut = automorphism_group(s3);
  CHECK(aut.order() == 6);
  CHECK_THROWS_AS(automorphism_group(PermGroup::symmetric(4)), TooLargeError);
}
