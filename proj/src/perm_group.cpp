#include "xmodkit/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "xmodkit/checked_int.hpp"
#include "xmodkit/errors.hpp"

namespace xmodkit {

namespace {
// Cayley tables are only materialized for groups up to this order; beyond it
// index multiplication falls back to the regular-representation shortcut or
// a binary search over the sorted element list.
constexpr long long kCayleyMaxOrder = 1024;
}  // namespace

struct PermGroup::Data {
  int degree = 1;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // sorted lexicographically
  std::vector<int> gen_index;  // position of each generator in elements
  int identity_index = 0;

  std::vector<int> bfs_order;             // discovery order, identity first
  std::vector<std::pair<int, int>> via;   // per element: (parent idx, gen pos)

  std::vector<int> inverse;                // per element
  std::vector<std::vector<int>> gen_table; // [element][gen pos] -> element
  std::vector<std::vector<int>> cayley;    // empty unless order small
  bool regular_indexable = false;          // elements[i][0] == i for all i
  bool abelian = false;
};

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens) {
  if (degree < 1) throw PreconditionError("degree must be at least 1");
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw PreconditionError("generator degree mismatch");

  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->generators = std::move(gens);
  int k = static_cast<int>(d->generators.size());

  // Closure by breadth first search. Levels are expanded in a fixed order
  // (candidates sorted by image vector) so the discovery order is canonical.
  Perm id(degree);
  std::map<Perm, std::pair<Perm, int>> via_by_perm;  // element -> (parent, gen pos)
  std::set<Perm> seen{id};
  std::vector<Perm> discovery{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::pair<Perm, std::pair<Perm, int>>> candidates;
    for (const Perm& e : frontier)
      for (int j = 0; j < k; ++j) {
        Perm p = e * d->generators[j];
        if (!seen.count(p)) candidates.push_back({std::move(p), {e, j}});
      }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Perm> next;
    for (auto& c : candidates) {
      if (seen.count(c.first)) continue;
      seen.insert(c.first);
      via_by_perm.emplace(c.first, std::move(c.second));
      discovery.push_back(c.first);
      next.push_back(std::move(c.first));
    }
    frontier = std::move(next);
  }

  d->elements.assign(seen.begin(), seen.end());  // set iteration is sorted
  long long n = static_cast<long long>(d->elements.size());

  auto index_of = [&](const Perm& p) {
    auto it = std::lower_bound(d->elements.begin(), d->elements.end(), p);
    return static_cast<int>(it - d->elements.begin());
  };

  d->identity_index = index_of(id);
  d->gen_index.resize(k);
  for (int j = 0; j < k; ++j) d->gen_index[j] = index_of(d->generators[j]);

  d->via.assign(n, {-1, -1});
  d->bfs_order.reserve(n);
  for (const Perm& p : discovery) {
    int idx = index_of(p);
    d->bfs_order.push_back(idx);
    auto it = via_by_perm.find(p);
    if (it != via_by_perm.end())
      d->via[idx] = {index_of(it->second.first), it->second.second};
  }

  d->gen_table.assign(n, std::vector<int>(k));
  for (long long i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j)
      d->gen_table[i][j] = index_of(d->elements[i] * d->generators[j]);

  d->inverse.resize(n);
  for (long long i = 0; i < n; ++i) d->inverse[i] = index_of(d->elements[i].inverse());

  d->regular_indexable = (static_cast<long long>(degree) == n);
  if (d->regular_indexable)
    for (long long i = 0; i < n; ++i)
      if (d->elements[i][0] != i) { d->regular_indexable = false; break; }

  if (n <= kCayleyMaxOrder) {
    d->cayley.assign(n, std::vector<int>(n));
    for (long long i = 0; i < n; ++i) d->cayley[i][d->identity_index] = static_cast<int>(i);
    for (int j : d->bfs_order) {
      if (j == d->identity_index) continue;
      auto [pj, g] = d->via[j];
      for (long long i = 0; i < n; ++i)
        d->cayley[i][j] = d->gen_table[d->cayley[i][pj]][g];
    }
  }

  d->abelian = true;
  for (int a = 0; a < k && d->abelian; ++a)
    for (int b = a + 1; b < k; ++b)
      if (!(d->generators[a] * d->generators[b] == d->generators[b] * d->generators[a])) {
        d->abelian = false;
        break;
      }

  PermGroup g;
  g.d_ = std::move(d);
  return g;
}

PermGroup PermGroup::cyclic(int n) {
  if (n < 1) throw PreconditionError("cyclic group order must be positive");
  if (n == 1) return trivial(1);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return from_generators(n, {Perm(std::move(img))});
}

PermGroup PermGroup::dihedral(int n) {
  if (n < 1) throw PreconditionError("dihedral parameter must be positive");
  if (n == 1) return from_generators(2, {Perm(2), Perm::from_cycles(2, {{0, 1}})});
  if (n == 2)
    return from_generators(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})});
  std::vector<int> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = (i + 1) % n;
    y[i] = (n - i) % n;
  }
  return from_generators(n, {Perm(std::move(x)), Perm(std::move(y))});
}

PermGroup PermGroup::symmetric(int n) {
  if (n < 1) throw PreconditionError("symmetric degree must be positive");
  if (n == 1) return trivial(1);
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return from_generators(n, {Perm::from_cycles(n, {{0, 1}}), Perm(std::move(cyc))});
}

PermGroup PermGroup::trivial(int degree) { return from_generators(degree, {}); }

int PermGroup::degree() const { return d_->degree; }
long long PermGroup::order() const { return static_cast<long long>(d_->elements.size()); }
const std::vector<Perm>& PermGroup::generators() const { return d_->generators; }
const std::vector<Perm>& PermGroup::elements() const { return d_->elements; }
int PermGroup::identity() const { return d_->identity_index; }
int PermGroup::generator_index(int gen_pos) const { return d_->gen_index[gen_pos]; }

int PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(d_->elements.begin(), d_->elements.end(), p);
  if (it == d_->elements.end() || !(*it == p)) return -1;
  return static_cast<int>(it - d_->elements.begin());
}

int PermGroup::mult(int a, int b) const {
  if (!d_->cayley.empty()) return d_->cayley[a][b];
  if (d_->regular_indexable) return d_->elements[b][a];
  int idx = index_of(d_->elements[a] * d_->elements[b]);
  if (idx < 0) throw InternalError("product escaped the element list");
  return idx;
}

int PermGroup::inv(int a) const { return d_->inverse[a]; }

int PermGroup::conj(int a, int b) const { return mult(mult(d_->inverse[b], a), b); }

int PermGroup::mult_gen(int a, int gen_pos) const { return d_->gen_table[a][gen_pos]; }

long long PermGroup::element_order(int a) const {
  long long n = 1;
  int acc = a;
  while (acc != d_->identity_index) {
    acc = mult(acc, a);
    ++n;
  }
  return n;
}

int PermGroup::power(int a, long long e) const {
  long long n = order();
  e %= n;  // exponent of the group divides its order
  if (e < 0) e += n;
  int acc = d_->identity_index;
  for (long long i = 0; i < e; ++i) acc = mult(acc, a);
  return acc;
}

const std::vector<int>& PermGroup::bfs_order() const { return d_->bfs_order; }
std::pair<int, int> PermGroup::via(int idx) const { return d_->via[idx]; }

std::vector<std::pair<int, int>> PermGroup::word_of(int idx) const {
  std::vector<std::pair<int, int>> letters;
  while (idx != d_->identity_index) {
    auto [parent, gen] = d_->via[idx];
    letters.push_back({gen, 1});
    idx = parent;
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

int PermGroup::eval_word(const std::vector<std::pair<int, int>>& letters) const {
  int acc = d_->identity_index;
  for (auto [gen, exp] : letters) {
    if (gen < 0 || gen >= static_cast<int>(d_->generators.size()))
      throw PreconditionError("word references an unknown generator");
    int g = d_->gen_index[gen];
    if (exp < 0) g = d_->inverse[g];
    int reps = exp < 0 ? -exp : exp;
    for (int i = 0; i < reps; ++i) acc = mult(acc, g);
  }
  return acc;
}

bool PermGroup::is_abelian() const { return d_->abelian; }

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree() != g.degree()) return false;
  for (const Perm& p : elements())
    if (!g.contains(p)) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
  if (!is_subgroup_of(g)) return false;
  for (const Perm& n : elements())
    for (const Perm& x : g.generators())
      if (!contains(x.inverse() * n * x)) return false;
  return true;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<int>& seed_indices) {
  std::vector<Perm> gens;
  for (int idx : seed_indices) gens.push_back(g.elements()[idx]);
  while (true) {
    PermGroup current = PermGroup::from_generators(g.degree(), gens);
    bool grew = false;
    for (const Perm& n : current.elements()) {
      for (const Perm& x : g.generators()) {
        Perm c = x.inverse() * n * x;
        if (!current.contains(c)) {
          gens.push_back(c);
          grew = true;
        }
      }
      if (grew) break;
    }
    if (!grew) return current;
  }
}

PermGroup subgroup_generated(const PermGroup& g, const std::vector<int>& element_indices) {
  std::vector<Perm> gens;
  for (int idx : element_indices) gens.push_back(g.elements()[idx]);
  return PermGroup::from_generators(g.degree(), gens);
}

PermGroup commutator_subgroup(const PermGroup& g) {
  std::vector<int> seeds;
  int k = static_cast<int>(g.generators().size());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int ga = g.generator_index(a), gb = g.generator_index(b);
      seeds.push_back(g.mult(g.mult(g.inv(ga), g.inv(gb)), g.mult(ga, gb)));
    }
  return normal_closure(g, seeds);
}

std::vector<int> center_elements(const PermGroup& g) {
  std::vector<int> out;
  for (long long i = 0; i < g.order(); ++i) {
    bool central = true;
    for (size_t j = 0; j < g.generators().size() && central; ++j) {
      int gj = g.generator_index(static_cast<int>(j));
      if (g.mult(static_cast<int>(i), gj) != g.mult(gj, static_cast<int>(i)))
        central = false;
    }
    if (central) out.push_back(static_cast<int>(i));
  }
  return out;
}

Perm embed_left(const Perm& p, int total_degree) {
  std::vector<int> img(total_degree);
  for (int i = 0; i < total_degree; ++i) img[i] = i;
  for (int i = 0; i < p.degree(); ++i) img[i] = p[i];
  return Perm(std::move(img));
}

Perm embed_right(const Perm& p, int offset, int total_degree) {
  std::vector<int> img(total_degree);
  for (int i = 0; i < total_degree; ++i) img[i] = i;
  for (int i = 0; i < p.degree(); ++i) img[offset + i] = offset + p[i];
  return Perm(std::move(img));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  int deg = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) gens.push_back(embed_left(g, deg));
  for (const Perm& g : b.generators()) gens.push_back(embed_right(g, a.degree(), deg));
  return PermGroup::from_generators(deg, std::move(gens));
}

bool is_p_group(const PermGroup& g, long long p) {
  long long n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace xmodkit
