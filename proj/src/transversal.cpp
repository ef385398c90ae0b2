#include "xmodkit/transversal.hpp"

#include <algorithm>

#include "xmodkit/errors.hpp"

namespace xmodkit {

Transversal::Transversal(const PermGroup& q, const GroupHom& iota)
    : q_(q), iota_(iota), image_(iota.image_subgroup()) {
  if (!iota.target().same_object(q))
    throw PreconditionError("transversal requires iota mapping into the given group");

  long long n = q.order();
  std::vector<int> h_indices;
  for (const Perm& p : image_.elements()) h_indices.push_back(q.index_of(p));

  coset_pos_.assign(n, -1);
  auto claim_coset = [&](int rep_idx) {
    for (int h : h_indices) coset_pos_[q.mult(h, rep_idx)] = static_cast<int>(reps_.size());
    reps_.push_back(rep_idx);
  };

  claim_coset(q.identity());
  std::vector<int> frontier{q.identity()};

  // Edge set: generators of Q and their inverses.
  std::vector<int> edges;
  for (size_t j = 0; j < q.generators().size(); ++j) {
    int g = q.generator_index(static_cast<int>(j));
    edges.push_back(g);
    if (q.inv(g) != g) edges.push_back(q.inv(g));
  }

  while (!frontier.empty()) {
    std::vector<int> candidates;
    for (int t : frontier)
      for (int e : edges) {
        int c = q.mult(t, e);
        if (coset_pos_[c] < 0) candidates.push_back(c);
      }
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return q.elements()[a] < q.elements()[b];
    });
    std::vector<int> next;
    for (int c : candidates) {
      if (coset_pos_[c] >= 0) continue;
      claim_coset(c);
      next.push_back(c);
    }
    frontier = std::move(next);
  }

  // iota(P) element -> minimal P preimage
  std::vector<int> preimage(n, -1);
  for (long long e = iota.source().order() - 1; e >= 0; --e)
    preimage[iota.apply(static_cast<int>(e))] = static_cast<int>(e);

  int l = size();
  xi_.assign(l, std::vector<int>(n));
  eta_.assign(l, std::vector<int>(n));
  for (int t = 0; t < l; ++t)
    for (long long e = 0; e < n; ++e) {
      int tq = q.mult(reps_[t], static_cast<int>(e));
      int u = coset_pos_[tq];
      int h = q.mult(tq, q.inv(reps_[u]));
      int p = preimage[h];
      if (p < 0) throw InternalError("coset factorization escaped the image");
      xi_[t][static_cast<int>(e)] = p;
      eta_[t][static_cast<int>(e)] = u;
    }
}

}  // namespace xmodkit
