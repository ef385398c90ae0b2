#include "xmodkit/fin_ab.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "xmodkit/checked_int.hpp"

namespace xmodkit {

namespace {

long long gcd_ll(long long a, long long b) {
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

// Extended gcd: returns g and coefficients with s*a + t*b = g, g >= 0.
long long ext_gcd(long long a, long long b, long long& s, long long& t) {
  long long old_r = a, r = b;
  long long old_s = 1, s1 = 0;
  long long old_t = 0, t1 = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp;
    tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s1; old_s = s1; s1 = tmp;
    tmp = old_t - q * t1; old_t = t1; t1 = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  s = old_s;
  t = old_t;
  return old_r;
}

struct SnfWork {
  IntMat a;  // rows x cols, reduced in place
  IntMat v, v_inv;
  int rows, cols;

  void col_swap(int i, int j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
    v_inv[i].swap(v_inv[j]);
  }

  // col_i += c * col_j
  void col_add(int i, int j, long long c) {
    if (c == 0) return;
    for (auto& row : a) row[i] = checked_add(row[i], checked_mul(c, row[j]));
    for (auto& row : v) row[i] = checked_add(row[i], checked_mul(c, row[j]));
    for (int k = 0; k < cols; ++k)
      v_inv[j][k] = checked_sub(v_inv[j][k], checked_mul(c, v_inv[i][k]));
  }

  void col_negate(int i) {
    for (auto& row : a) row[i] = -row[i];
    for (auto& row : v) row[i] = -row[i];
    for (int k = 0; k < cols; ++k) v_inv[i][k] = -v_inv[i][k];
  }

  // General unimodular column mix used by the gcd step:
  //   (col_i, col_j) <- (s*col_i + t*col_j, u*col_i + w*col_j)
  // with s*w - t*u = +-1. Inverse transform updates v_inv rows.
  void col_mix(int i, int j, long long s, long long t, long long u, long long w) {
    long long det = checked_sub(checked_mul(s, w), checked_mul(t, u));
    if (det != 1 && det != -1) throw InternalError("column mix is not unimodular");
    auto mix = [&](IntMat& m) {
      for (auto& row : m) {
        long long x = row[i], y = row[j];
        row[i] = checked_add(checked_mul(s, x), checked_mul(t, y));
        row[j] = checked_add(checked_mul(u, x), checked_mul(w, y));
      }
    };
    mix(a);
    mix(v);
    // rows of v_inv transform by the inverse matrix [[w,-t],[-u,s]]/det
    for (int k = 0; k < cols; ++k) {
      long long x = v_inv[i][k], y = v_inv[j][k];
      v_inv[i][k] = det * checked_sub(checked_mul(w, x), checked_mul(u, y));
      v_inv[j][k] = det * checked_add(checked_mul(-t, x), checked_mul(s, y));
    }
  }

  void row_swap(int i, int j) { a[i].swap(a[j]); }

  void row_add(int i, int j, long long c) {
    if (c == 0) return;
    for (int k = 0; k < cols; ++k)
      a[i][k] = checked_add(a[i][k], checked_mul(c, a[j][k]));
  }

  void row_mix(int i, int j, long long s, long long t, long long u, long long w) {
    for (int k = 0; k < cols; ++k) {
      long long x = a[i][k], y = a[j][k];
      a[i][k] = checked_add(checked_mul(s, x), checked_mul(t, y));
      a[j][k] = checked_add(checked_mul(u, x), checked_mul(w, y));
    }
  }
};

}  // namespace

SmithForm smith_form(IntMat a, int cols) {
  int rows = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != cols)
      throw PreconditionError("relation row has wrong length");

  SnfWork w{std::move(a), mat_identity(cols), mat_identity(cols), rows, cols};

  int k = 0;
  int limit = std::min(rows, cols);
  while (k < limit) {
    // find a pivot of minimal absolute value in the trailing submatrix
    int pr = -1, pc = -1;
    long long best = 0;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j) {
        long long x = w.a[i][j] < 0 ? -w.a[i][j] : w.a[i][j];
        if (x != 0 && (pr < 0 || x < best)) { pr = i; pc = j; best = x; }
      }
    if (pr < 0) break;  // trailing submatrix is zero
    if (pr != k) w.row_swap(k, pr);
    if (pc != k) w.col_swap(k, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      // clear column k with row gcd steps
      for (int i = k + 1; i < rows; ++i) {
        if (w.a[i][k] == 0) continue;
        long long p = w.a[k][k], q = w.a[i][k];
        if (q % p == 0) {
          w.row_add(i, k, -(q / p));
        } else {
          long long s, t;
          long long g = ext_gcd(p, q, s, t);
          w.row_mix(k, i, s, t, -(q / g), p / g);
          clean = false;
        }
      }
      // clear row k with column gcd steps
      for (int j = k + 1; j < cols; ++j) {
        if (w.a[k][j] == 0) continue;
        long long p = w.a[k][k], q = w.a[k][j];
        if (q % p == 0) {
          w.col_add(j, k, -(q / p));
        } else {
          long long s, t;
          long long g = ext_gcd(p, q, s, t);
          w.col_mix(k, j, s, t, -(q / g), p / g);
          clean = false;
        }
      }
    }
    ++k;
  }

  // normalize signs
  for (int i = 0; i < std::min(rows, cols); ++i)
    if (w.a[i][i] < 0) w.col_negate(i);

  // enforce the divisibility chain d_i | d_{i+1}
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < std::min(rows, cols); ++i) {
      long long di = w.a[i][i], dj = w.a[i + 1][i + 1];
      if (di == 0 && dj != 0) {  // move the zero to the end
        w.col_swap(i, i + 1);
        w.row_swap(i, i + 1);
        changed = true;
        continue;
      }
      if (di == 0 || dj == 0) continue;
      if (dj % di != 0) {
        // fold column i+1 into column i, then re-diagonalize the 2x2 block
        w.col_add(i, i + 1, 1);  // a[i+1][i] becomes dj
        long long s, t;
        long long g = ext_gcd(di, dj, s, t);
        w.row_mix(i, i + 1, s, t, -(dj / g), di / g);
        // now a[i][i] = g, a[i][i+1] = t*dj; clear the off-diagonal entry
        long long off = w.a[i][i + 1];
        w.col_add(i + 1, i, -(off / g));
        if (w.a[i][i + 1] != 0 || w.a[i + 1][i] != 0)
          throw InternalError("divisibility fix-up left off-diagonal residue");
        if (w.a[i][i] < 0) w.col_negate(i);
        if (w.a[i + 1][i + 1] < 0) w.col_negate(i + 1);
        changed = true;
      }
    }
  }

  SmithForm out;
  out.diag.assign(cols, 0);
  for (int i = 0; i < std::min(rows, cols); ++i) out.diag[i] = w.a[i][i];
  out.v = std::move(w.v);
  out.v_inv = std::move(w.v_inv);

  // sanity: v * v_inv must be the identity
  IntMat prod = mat_mul(out.v, out.v_inv);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j)
      if (prod[i][j] != (i == j ? 1 : 0))
        throw InternalError("smith transform inverse check failed");
  return out;
}

Vec mat_apply_row(const Vec& x, const IntMat& m) {
  if (m.empty()) return {};
  int cols = static_cast<int>(m[0].size());
  Vec out(cols, 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < cols; ++j)
      out[j] = checked_add(out[j], checked_mul(x[i], m[i][j]));
  }
  return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  IntMat out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(mat_apply_row(row, b));
  return out;
}

IntMat mat_identity(int n) {
  IntMat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

FinAbGroup::FinAbGroup() : FinAbGroup(0, IntMat{}) {}

FinAbGroup::FinAbGroup(int rank, IntMat relations)
    : rank_(rank), relations_(std::move(relations)) {
  snf_ = smith_form(relations_, rank_);
  order_ = 1;
  for (int i = 0; i < rank_; ++i) {
    if (snf_.diag[i] == 0)
      throw PreconditionError("relation lattice has infinite quotient");
    order_ = checked_mul(order_, snf_.diag[i]);
  }
  for (long long d : snf_.diag)
    if (d > 1) invariant_factors_.push_back(d);
}

Vec FinAbGroup::reduce(Vec y) const {
  for (int i = 0; i < rank_; ++i) {
    long long d = snf_.diag[i];
    y[i] %= d;
    if (y[i] < 0) y[i] += d;
  }
  return y;
}

Vec FinAbGroup::canonical(const Vec& x) const {
  if (static_cast<int>(x.size()) != rank_)
    throw PreconditionError("vector has wrong rank");
  return reduce(mat_apply_row(x, snf_.v));
}

Vec FinAbGroup::lift(const Vec& y) const { return mat_apply_row(y, snf_.v_inv); }

Vec FinAbGroup::add(const Vec& a, const Vec& b) const {
  Vec out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = checked_add(a[i], b[i]);
  return reduce(std::move(out));
}

Vec FinAbGroup::neg(const Vec& a) const {
  Vec out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = -a[i];
  return reduce(std::move(out));
}

Vec FinAbGroup::scalar(long long k, const Vec& a) const {
  Vec out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = checked_mul(k, a[i]);
  return reduce(std::move(out));
}

bool FinAbGroup::is_zero(const Vec& canon) const {
  for (long long x : canon)
    if (x != 0) return false;
  return true;
}

long long FinAbGroup::element_order(const Vec& canon) const {
  long long ord = 1;
  for (int i = 0; i < rank_; ++i) {
    if (canon[i] == 0) continue;
    long long d = snf_.diag[i];
    long long o = d / gcd_ll(d, canon[i]);
    ord = checked_mul(ord / gcd_ll(ord, o), o);  // lcm
  }
  return ord;
}

std::vector<Vec> FinAbGroup::all_elements(long long max_order) const {
  if (order_ > max_order) throw TooLargeError("abelian group too large to enumerate");
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(order_));
  Vec cur(rank_, 0);
  while (true) {
    out.push_back(cur);
    int i = rank_ - 1;
    while (i >= 0) {
      if (++cur[i] < snf_.diag[i]) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

FinAbGroup tensor_product(int rank_a, const IntMat& rels_a, int rank_b,
                          const IntMat& rels_b) {
  int rank = rank_a * rank_b;
  IntMat rows;
  auto cell = [&](int i, int j) { return i * rank_b + j; };
  for (const auto& r : rels_a)
    for (int j = 0; j < rank_b; ++j) {
      Vec row(rank, 0);
      for (int i = 0; i < rank_a; ++i) row[cell(i, j)] = r[i];
      rows.push_back(std::move(row));
    }
  for (const auto& r : rels_b)
    for (int i = 0; i < rank_a; ++i) {
      Vec row(rank, 0);
      for (int j = 0; j < rank_b; ++j) row[cell(i, j)] = r[j];
      rows.push_back(std::move(row));
    }
  return FinAbGroup(rank, std::move(rows));
}

void LatticeBasis::add(Vec row) {
  if (static_cast<int>(row.size()) != dim_)
    throw PreconditionError("lattice row has wrong length");
  for (int c = 0; c < dim_ && !std::all_of(row.begin(), row.end(),
                                           [](long long x) { return x == 0; });
       ++c) {
    if (row[c] == 0) continue;
    // find existing pivot row for column c
    int pivot = -1;
    for (size_t i = 0; i < rows_.size(); ++i) {
      int pc = 0;
      while (pc < dim_ && rows_[i][pc] == 0) ++pc;
      if (pc == c) { pivot = static_cast<int>(i); break; }
    }
    if (pivot < 0) {
      if (row[c] < 0)
        for (auto& x : row) x = -x;
      rows_.push_back(row);
      std::sort(rows_.begin(), rows_.end(), [this](const Vec& a, const Vec& b) {
        int pa = 0, pb = 0;
        while (pa < dim_ && a[pa] == 0) ++pa;
        while (pb < dim_ && b[pb] == 0) ++pb;
        return pa < pb;
      });
      return;
    }
    long long p = rows_[pivot][c], q = row[c];
    if (q % p == 0) {
      long long f = q / p;
      for (int k = 0; k < dim_; ++k)
        row[k] = checked_sub(row[k], checked_mul(f, rows_[pivot][k]));
    } else {
      long long s, t;
      long long g = ext_gcd(p, q, s, t);
      Vec np(dim_), nr(dim_);
      for (int k = 0; k < dim_; ++k) {
        np[k] = checked_add(checked_mul(s, rows_[pivot][k]), checked_mul(t, row[k]));
        nr[k] = checked_sub(checked_mul(p / g, row[k]), checked_mul(q / g, rows_[pivot][k]));
      }
      rows_[pivot] = std::move(np);
      row = std::move(nr);
    }
  }
}

DlogAbelian dlog_abelian(int n_elements, int identity_id,
                         const std::vector<int>& generator_ids,
                         const std::function<int(int, int)>& mult) {
  int k = static_cast<int>(generator_ids.size());
  std::vector<Vec> vec_of(n_elements);
  std::vector<char> seen(n_elements, 0);
  LatticeBasis basis(k);

  vec_of[identity_id] = Vec(k, 0);
  seen[identity_id] = 1;
  std::vector<int> queue{identity_id};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int e = queue[qi];
    for (int j = 0; j < k; ++j) {
      int f = mult(e, j);
      Vec cand = vec_of[e];
      cand[j] = checked_add(cand[j], 1);
      if (!seen[f]) {
        seen[f] = 1;
        vec_of[f] = std::move(cand);
        queue.push_back(f);
      } else {
        Vec rel(k);
        for (int c = 0; c < k; ++c) rel[c] = checked_sub(cand[c], vec_of[f][c]);
        basis.add(std::move(rel));
      }
    }
  }
  for (int e = 0; e < n_elements; ++e)
    if (!seen[e])
      throw PreconditionError("generators do not generate the abelian group");

  DlogAbelian out{FinAbGroup(k, basis.rows()), {}};
  if (out.group.order() != n_elements)
    throw InternalError("discrete log relation lattice has wrong index");
  out.dlog.resize(n_elements);
  for (int e = 0; e < n_elements; ++e) out.dlog[e] = out.group.canonical(vec_of[e]);
  return out;
}

}  // namespace xmodkit
