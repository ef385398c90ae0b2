#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xmodkit/perm.hpp"

namespace xmodkit {

// A finite permutation group with its full element list. Elements are stored
// sorted lexicographically by image vector, so indices are canonical. The
// closure search also records, for every element, a spanning-tree edge
// (parent, generator) which lets other components express elements as words
// in the generators. Immutable after construction; copies share state.
class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup from_generators(int degree, std::vector<Perm> gens);
  static PermGroup cyclic(int n);
  static PermGroup dihedral(int n);  // order 2n, generators n-cycle x and reflection y
  static PermGroup symmetric(int n);
  static PermGroup trivial(int degree = 1);

  bool valid() const { return d_ != nullptr; }
  int degree() const;
  long long order() const;
  const std::vector<Perm>& generators() const;
  const std::vector<Perm>& elements() const;

  int identity() const;
  int index_of(const Perm& p) const;  // -1 if absent
  bool contains(const Perm& p) const { return index_of(p) >= 0; }
  int generator_index(int gen_pos) const;

  int mult(int a, int b) const;
  int inv(int a) const;
  int conj(int a, int b) const;        // b^-1 a b
  int mult_gen(int a, int gen_pos) const;
  long long element_order(int a) const;
  int power(int a, long long e) const;

  // Spanning-tree data from the closure search.
  const std::vector<int>& bfs_order() const;            // indices, identity first
  std::pair<int, int> via(int idx) const;               // (parent index, generator pos)
  std::vector<std::pair<int, int>> word_of(int idx) const;  // letters (gen pos, +1)
  int eval_word(const std::vector<std::pair<int, int>>& letters) const;

  bool is_abelian() const;
  bool same_object(const PermGroup& other) const { return d_ == other.d_; }

  // Subgroup predicates; "subgroup" means same degree with elements contained.
  bool is_subgroup_of(const PermGroup& g) const;
  bool is_normal_in(const PermGroup& g) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

// Smallest normal subgroup of g containing the seed elements.
PermGroup normal_closure(const PermGroup& g, const std::vector<int>& seed_indices);

// Subgroup generated by the given elements of g.
PermGroup subgroup_generated(const PermGroup& g, const std::vector<int>& element_indices);

PermGroup commutator_subgroup(const PermGroup& g);
std::vector<int> center_elements(const PermGroup& g);

// Direct product acting on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
Perm embed_left(const Perm& p, int total_degree);
Perm embed_right(const Perm& p, int offset, int total_degree);

bool is_p_group(const PermGroup& g, long long p);

}  // namespace xmodkit
