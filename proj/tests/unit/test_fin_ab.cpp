#include <random>
#include <set>

#include "doctest.h"
#include "xmodkit/fin_ab.hpp"
#include "xmodkit/group_hom.hpp"
#include "xmodkit/perm_group.hpp"

using namespace xmodkit;

TEST_CASE("smith form of simple lattices") {
  // Z^2 / <(2,0),(0,4)> = C2 x C4
  FinAbGroup g(2, {{2, 0}, {0, 4}});
  CHECK(g.order() == 8);
  CHECK(g.invariant_factors() == std::vector<long long>{2, 4});

  // relations (2,2),(2,-2) give C2 x C4 as well
  FinAbGroup h(2, {{2, 2}, {2, -2}});
  CHECK(h.order() == 8);
  CHECK(h.invariant_factors() == std::vector<long long>{2, 4});

  CHECK_THROWS_AS(FinAbGroup(2, {{2, 0}}), PreconditionError);  // infinite
}

TEST_CASE("canonical forms respect the group laws") {
  FinAbGroup g(3, {{6, 0, 0}, {0, 4, 2}, {2, 2, 2}});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Vec x(3), y(3);
    for (int i = 0; i < 3; ++i) {
      x[i] = (long long)(rng() % 41) - 20;
      y[i] = (long long)(rng() % 41) - 20;
    }
    Vec cx = g.canonical(x), cy = g.canonical(y);
    // canonical is idempotent through lift
    CHECK(g.canonical(g.lift(cx)) == cx);
    // x + (-x) = 0
    CHECK(g.is_zero(g.add(cx, g.neg(cx))));
    // addition commutes with canonicalization
    Vec sum_coords(3);
    for (int i = 0; i < 3; ++i) sum_coords[i] = x[i] + y[i];
    CHECK(g.canonical(sum_coords) == g.add(cx, cy));
  }
  // reported order equals the number of distinct canonical vectors
  std::set<Vec> seen;
  for (const Vec& v : g.all_elements()) seen.insert(v);
  CHECK((long long)seen.size() == g.order());
}

TEST_CASE("element orders in invariant factor coordinates") {
  FinAbGroup g(2, {{2, 0}, {0, 6}});
  CHECK(g.element_order(g.zero()) == 1);
  Vec a = g.canonical({1, 0});
  Vec b = g.canonical({0, 1});
  CHECK(g.element_order(a) == 2);
  CHECK(g.element_order(b) == 6);
  CHECK(g.element_order(g.add(a, b)) == 6);
}

TEST_CASE("tensor products by smith form") {
  // C2 (x) Z^3 = C2^3
  FinAbGroup t = tensor_product(1, {{2}}, 3, {});
  CHECK(t.invariant_factors() == std::vector<long long>{2, 2, 2});
  // C6 (x) C4 = C2
  FinAbGroup u = tensor_product(1, {{6}}, 1, {{4}});
  CHECK(u.invariant_factors() == std::vector<long long>{2});
  // C3 (x) C4 = 0
  FinAbGroup v = tensor_product(1, {{3}}, 1, {{4}});
  CHECK(v.trivial());
}

TEST_CASE("discrete log structure of concrete abelian groups") {
  PermGroup g = direct_product(PermGroup::cyclic(2), PermGroup::cyclic(4));
  std::vector<int> gens{g.generator_index(0), g.generator_index(1)};
  DlogAbelian dl = dlog_abelian((int)g.order(), g.identity(), gens,
                                [&](int e, int j) { return g.mult_gen(e, j); });
  CHECK(dl.group.order() == 8);
  CHECK(dl.group.invariant_factors() == std::vector<long long>{2, 4});
  // dlog is a homomorphism onto the abstract group
  for (long long a = 0; a < g.order(); ++a)
    for (long long b = 0; b < g.order(); ++b)
      CHECK(dl.group.add(dl.dlog[a], dl.dlog[b]) == dl.dlog[g.mult((int)a, (int)b)]);
}
