#pragma once

#include <functional>
#include <map>
#include <vector>

#include "xmodkit/errors.hpp"

namespace xmodkit {

using Vec = std::vector<long long>;
using IntMat = std::vector<Vec>;

// Smith normal form data for an integer matrix A (rows x cols) whose rows
// span a lattice L in Z^cols. V and Vinv are unimodular cols x cols matrices
// with L * V = span{ diag[i] * e_i }, so y = x * V turns lattice membership
// into independent congruences.
struct SmithForm {
  Vec diag;   // length cols, nonnegative, diag[i] | diag[i+1] on nonzeros
  IntMat v;
  IntMat v_inv;
};

SmithForm smith_form(IntMat a, int cols);

Vec mat_apply_row(const Vec& x, const IntMat& m);  // x * m, x a row vector
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_identity(int n);

// A finite abelian group presented as Z^rank modulo the lattice spanned by
// the relation rows. Throws if the quotient is infinite. Elements are handled
// as canonical vectors in Smith coordinates (entry i reduced mod diag[i]).
class FinAbGroup {
 public:
  FinAbGroup();  // trivial group
  FinAbGroup(int rank, IntMat relations);

  int rank() const { return rank_; }
  long long order() const { return order_; }
  const Vec& diag() const { return snf_.diag; }
  const std::vector<long long>& invariant_factors() const { return invariant_factors_; }
  bool trivial() const { return order_ == 1; }

  // generator coordinates -> canonical Smith coordinates
  Vec canonical(const Vec& x) const;
  // canonical Smith coordinates -> a representative in generator coordinates
  Vec lift(const Vec& y) const;

  Vec reduce(Vec y) const;  // Smith coordinates mod diag
  Vec zero() const { return Vec(rank_, 0); }
  Vec add(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec scalar(long long k, const Vec& a) const;
  bool is_zero(const Vec& canon) const;
  long long element_order(const Vec& canon) const;

  // All canonical vectors; guarded against accidentally huge groups.
  std::vector<Vec> all_elements(long long max_order = 2000000) const;

 private:
  int rank_ = 0;
  IntMat relations_;
  SmithForm snf_;
  long long order_ = 1;
  std::vector<long long> invariant_factors_;
};

// Tensor product over Z of two finitely presented abelian groups, returned in
// invariant-factor form. The result must be finite (e.g. one side finite).
FinAbGroup tensor_product(int rank_a, const IntMat& rels_a, int rank_b,
                          const IntMat& rels_b);

// Structure computation for a concretely enumerated finite abelian group:
// elements are ids 0..n-1, with a designated identity and generator list, and
// mult(e, j) returning the id of (element e) * (generator j). Runs a breadth
// first search recording exponent vectors; collisions yield the relation
// lattice. Every element must be reachable from the generators.
struct DlogAbelian {
  FinAbGroup group;
  std::vector<Vec> dlog;  // element id -> canonical Smith vector
};

DlogAbelian dlog_abelian(int n_elements, int identity_id,
                         const std::vector<int>& generator_ids,
                         const std::function<int(int, int)>& mult);

// Incremental integer lattice basis: rows are reduced to a row echelon form
// with gcd pivots as they are added. Used to keep relation sets small.
class LatticeBasis {
 public:
  explicit LatticeBasis(int dim) : dim_(dim) {}
  void add(Vec row);
  const IntMat& rows() const { return rows_; }
  int dim() const { return dim_; }

 private:
  int dim_;
  IntMat rows_;  // kept sorted by pivot column, one pivot per column
};

}  // namespace xmodkit
