#include "xmodkit/group_hom.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "xmodkit/errors.hpp"

namespace xmodkit {

std::optional<std::vector<int>> GroupHom::build_table(const PermGroup& src,
                                                      const PermGroup& tgt,
                                                      const std::vector<int>& gen_images) {
  long long n = src.order();
  std::vector<int> table(n, -1);
  table[src.identity()] = tgt.identity();
  // Fill along the spanning tree, then verify every Cayley edge.
  for (int idx : src.bfs_order()) {
    if (idx == src.identity()) continue;
    auto [parent, gen] = src.via(idx);
    table[idx] = tgt.mult(table[parent], gen_images[gen]);
  }
  for (long long a = 0; a < n; ++a)
    for (size_t j = 0; j < gen_images.size(); ++j) {
      int ag = src.mult_gen(static_cast<int>(a), static_cast<int>(j));
      if (table[ag] != tgt.mult(table[a], gen_images[j])) return std::nullopt;
    }
  return table;
}

GroupHom::GroupHom(PermGroup source, PermGroup target, std::vector<int> gen_image_indices)
    : source_(std::move(source)), target_(std::move(target)),
      gen_images_(std::move(gen_image_indices)) {
  if (gen_images_.size() != source_.generators().size())
    throw PreconditionError("one image per source generator required");
  auto table = build_table(source_, target_, gen_images_);
  if (!table) throw PreconditionError("generator images do not define a homomorphism");
  table_ = std::move(*table);
}

std::optional<GroupHom> GroupHom::try_build(PermGroup source, PermGroup target,
                                            std::vector<int> gen_image_indices) {
  auto table = build_table(source, target, gen_image_indices);
  if (!table) return std::nullopt;
  GroupHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.gen_images_ = std::move(gen_image_indices);
  h.table_ = std::move(*table);
  return h;
}

GroupHom GroupHom::identity(const PermGroup& g) {
  std::vector<int> imgs;
  for (size_t j = 0; j < g.generators().size(); ++j)
    imgs.push_back(g.generator_index(static_cast<int>(j)));
  return GroupHom(g, g, std::move(imgs));
}

bool GroupHom::is_injective() const {
  std::set<int> values(table_.begin(), table_.end());
  return static_cast<long long>(values.size()) == source_.order();
}

bool GroupHom::is_surjective() const {
  std::set<int> values(table_.begin(), table_.end());
  return static_cast<long long>(values.size()) == target_.order();
}

std::vector<int> GroupHom::kernel_element_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < table_.size(); ++i)
    if (table_[i] == target_.identity()) out.push_back(static_cast<int>(i));
  return out;
}

PermGroup GroupHom::kernel_subgroup() const {
  return subgroup_generated(source_, kernel_element_indices());
}

PermGroup GroupHom::image_subgroup() const {
  std::vector<Perm> gens;
  for (int idx : gen_images_) gens.push_back(target_.elements()[idx]);
  return PermGroup::from_generators(target_.degree(), std::move(gens));
}

std::vector<int> GroupHom::preimages(int target_index) const {
  std::vector<int> out;
  for (size_t i = 0; i < table_.size(); ++i)
    if (table_[i] == target_index) out.push_back(static_cast<int>(i));
  return out;
}

GroupHom GroupHom::corestrict(const PermGroup& new_target) const {
  std::vector<int> imgs;
  for (int idx : gen_images_) {
    int j = new_target.index_of(target_.elements()[idx]);
    if (j < 0) throw PreconditionError("image escapes the new target subgroup");
    imgs.push_back(j);
  }
  return GroupHom(source_, new_target, std::move(imgs));
}

GroupHom compose(const GroupHom& first, const GroupHom& second) {
  if (!first.target().same_object(second.source()))
    throw PreconditionError("composition requires matching middle group");
  std::vector<int> imgs;
  for (int idx : first.gen_images()) imgs.push_back(second.apply(idx));
  return GroupHom(first.source(), second.target(), std::move(imgs));
}

Quotient quotient_group(const PermGroup& g, const PermGroup& n) {
  if (!n.is_normal_in(g)) throw NotNormalError("subgroup is not normal");

  // Right cosets, labeled by their minimal element index in g.
  long long order = g.order();
  std::vector<int> coset_min(order, -1);
  std::vector<int> n_indices;
  for (const Perm& p : n.elements()) n_indices.push_back(g.index_of(p));
  std::vector<int> coset_reps;
  for (long long e = 0; e < order; ++e) {
    if (coset_min[e] >= 0) continue;
    int rep = static_cast<int>(e);
    for (int ni : n_indices) {
      int x = g.mult(ni, rep);
      coset_min[x] = rep;
    }
    coset_reps.push_back(rep);
  }
  std::map<int, int> coset_pos;
  for (size_t i = 0; i < coset_reps.size(); ++i) coset_pos[coset_reps[i]] = static_cast<int>(i);

  int index = static_cast<int>(coset_reps.size());
  std::vector<Perm> action;
  for (size_t j = 0; j < g.generators().size(); ++j) {
    std::vector<int> img(index);
    for (int c = 0; c < index; ++c) {
      int moved = g.mult_gen(coset_reps[c], static_cast<int>(j));
      img[c] = coset_pos.at(coset_min[moved]);
    }
    action.push_back(Perm(std::move(img)));
  }
  PermGroup q = PermGroup::from_generators(std::max(index, 1), action);
  if (q.order() * n.order() != g.order())
    throw InternalError("coset action kernel is larger than the subgroup");
  std::vector<int> imgs;
  for (const Perm& p : action) imgs.push_back(q.index_of(p));
  return Quotient{q, GroupHom(g, q, std::move(imgs))};
}

Abelianization abelianization(const PermGroup& g) {
  Quotient q = quotient_group(g, commutator_subgroup(g));
  const PermGroup& a = q.group;
  std::vector<int> gen_ids;
  for (size_t j = 0; j < a.generators().size(); ++j)
    gen_ids.push_back(a.generator_index(static_cast<int>(j)));
  DlogAbelian dl = dlog_abelian(
      static_cast<int>(a.order()), a.identity(), gen_ids,
      [&](int e, int j) { return a.mult_gen(e, j); });
  return Abelianization{std::move(dl.group), std::move(q.projection), std::move(dl.dlog)};
}

namespace {

std::vector<long long> order_profile(const PermGroup& g) {
  std::vector<long long> orders;
  for (long long i = 0; i < g.order(); ++i) orders.push_back(g.element_order(static_cast<int>(i)));
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

bool groups_isomorphic(const PermGroup& g, const PermGroup& h, long long bound) {
  if (g.order() > bound || h.order() > bound)
    throw TooLargeError("isomorphism oracle order bound exceeded");
  if (g.order() != h.order()) return false;
  if (g.is_abelian() != h.is_abelian()) return false;
  if (order_profile(g) != order_profile(h)) return false;
  if (g.is_abelian())
    return abelianization(g).group.invariant_factors() ==
           abelianization(h).group.invariant_factors();

  int k = static_cast<int>(g.generators().size());
  std::vector<std::vector<int>> candidates(k);
  for (int j = 0; j < k; ++j) {
    long long ord = g.element_order(g.generator_index(j));
    for (long long i = 0; i < h.order(); ++i)
      if (h.element_order(static_cast<int>(i)) == ord)
        candidates[j].push_back(static_cast<int>(i));
  }
  long long combos = 1;
  for (int j = 0; j < k; ++j) {
    combos *= static_cast<long long>(candidates[j].size());
    if (combos > 2000000) throw TooLargeError("isomorphism search space too large");
  }

  std::vector<int> choice(k, 0);
  std::vector<int> imgs(k);
  while (true) {
    for (int j = 0; j < k; ++j) imgs[j] = candidates[j][choice[j]];
    auto hom = GroupHom::try_build(g, h, imgs);
    if (hom && hom->is_bijective()) return true;
    int j = k - 1;
    while (j >= 0) {
      if (++choice[j] < static_cast<int>(candidates[j].size())) break;
      choice[j] = 0;
      --j;
    }
    if (j < 0) return false;
  }
}

PermGroup automorphism_group(const PermGroup& g, long long max_order) {
  if (g.order() > max_order)
    throw TooLargeError("automorphism group construction gated to small groups");
  int k = static_cast<int>(g.generators().size());
  long long n = g.order();
  std::vector<std::vector<int>> candidates(k);
  for (int j = 0; j < k; ++j) {
    long long ord = g.element_order(g.generator_index(j));
    for (long long i = 0; i < n; ++i)
      if (g.element_order(static_cast<int>(i)) == ord)
        candidates[j].push_back(static_cast<int>(i));
  }
  std::vector<Perm> auts;
  std::vector<int> choice(k, 0);
  std::vector<int> imgs(k);
  if (k == 0) return PermGroup::trivial(static_cast<int>(n));
  while (true) {
    for (int j = 0; j < k; ++j) imgs[j] = candidates[j][choice[j]];
    auto hom = GroupHom::try_build(g, g, imgs);
    if (hom && hom->is_bijective()) {
      std::vector<int> img(hom->table().begin(), hom->table().end());
      auts.push_back(Perm(std::move(img)));
    }
    int j = k - 1;
    while (j >= 0) {
      if (++choice[j] < static_cast<int>(candidates[j].size())) break;
      choice[j] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return PermGroup::from_generators(static_cast<int>(n), std::move(auts));
}

}  // namespace xmodkit
