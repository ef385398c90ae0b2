#pragma once

#include <vector>

#include "xmodkit/group_hom.hpp"

namespace xmodkit {

// An ordered right transversal of iota(P) in Q together with the coset
// factorization t*q = iota(xi(t,q)) * eta(t,q). Representatives are found by
// a breadth first search over cosets multiplying by the generators of Q and
// their inverses, candidates within a level sorted by image vector; the first
// representative is always the identity.
//
// When iota is not injective, xi returns the minimal preimage; the
// factorization identity still holds exactly.
class Transversal {
 public:
  Transversal(const PermGroup& q, const GroupHom& iota);

  const PermGroup& q() const { return q_; }
  const PermGroup& p() const { return iota_.source(); }
  const GroupHom& iota() const { return iota_; }
  const PermGroup& image() const { return image_; }

  int size() const { return static_cast<int>(reps_.size()); }
  int rep(int pos) const { return reps_[pos]; }          // Q element index
  const std::vector<int>& reps() const { return reps_; }
  int coset_of(int q_element) const { return coset_pos_[q_element]; }

  // t * q = iota(xi) * eta with xi in P and eta a representative position.
  int xi(int t_pos, int q_element) const { return xi_[t_pos][q_element]; }
  int eta(int t_pos, int q_element) const { return eta_[t_pos][q_element]; }

 private:
  PermGroup q_;
  GroupHom iota_;
  PermGroup image_;
  std::vector<int> reps_;
  std::vector<int> coset_pos_;        // Q element -> rep position
  std::vector<std::vector<int>> xi_;  // [rep pos][Q element] -> P element
  std::vector<std::vector<int>> eta_; // [rep pos][Q element] -> rep position
};

}  // namespace xmodkit
