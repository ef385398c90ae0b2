#pragma once

#include <optional>
#include <vector>

#include "xmodkit/fin_ab.hpp"
#include "xmodkit/perm_group.hpp"

namespace xmodkit {

// A homomorphism between two permutation groups, stored as a full image table
// indexed by source element. Construction verifies multiplicativity over the
// whole source, so an instance is always a genuine homomorphism.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(PermGroup source, PermGroup target, std::vector<int> gen_image_indices);

  // Returns nothing if the generator assignment does not extend to a
  // homomorphism.
  static std::optional<GroupHom> try_build(PermGroup source, PermGroup target,
                                           std::vector<int> gen_image_indices);

  static GroupHom identity(const PermGroup& g);

  const PermGroup& source() const { return source_; }
  const PermGroup& target() const { return target_; }
  const std::vector<int>& gen_images() const { return gen_images_; }

  int apply(int source_index) const { return table_[source_index]; }
  const std::vector<int>& table() const { return table_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  std::vector<int> kernel_element_indices() const;
  PermGroup kernel_subgroup() const;
  PermGroup image_subgroup() const;
  std::vector<int> preimages(int target_index) const;

  // Same map with the target replaced by a subgroup containing the image.
  GroupHom corestrict(const PermGroup& new_target) const;

 private:
  PermGroup source_, target_;
  std::vector<int> gen_images_;
  std::vector<int> table_;

  static std::optional<std::vector<int>> build_table(const PermGroup& src,
                                                     const PermGroup& tgt,
                                                     const std::vector<int>& gen_images);
};

GroupHom compose(const GroupHom& first, const GroupHom& second);  // apply first, then second

struct Quotient {
  PermGroup group;
  GroupHom projection;
};

// Quotient of g by a normal subgroup n, realized by the action of g on the
// right cosets of n. Throws NotNormalError if n is not normal.
Quotient quotient_group(const PermGroup& g, const PermGroup& n);

struct Abelianization {
  FinAbGroup group;
  GroupHom projection;          // g -> g/[g,g] as a permutation group
  std::vector<Vec> dlog;        // quotient element index -> canonical vector
  Vec vector_of(int g_element_index) const { return dlog[projection.apply(g_element_index)]; }
};

Abelianization abelianization(const PermGroup& g);

// Brute-force isomorphism test: searches generator-image assignments with
// element-order pruning. A desk-scale oracle, guarded by the order bound.
bool groups_isomorphic(const PermGroup& g, const PermGroup& h, long long bound = 512);

// All automorphisms of g, realized as a permutation group acting on the
// element indices of g. Brute force, guarded by max_order.
PermGroup automorphism_group(const PermGroup& g, long long max_order = 24);

}  // namespace xmodkit
