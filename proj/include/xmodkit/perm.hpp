#pragma once

#include <compare>
#include <string>
#include <vector>

namespace xmodkit {

// A permutation of {0, ..., degree-1} stored as its image vector.
// Products compose left to right: (a * b) applies a first, then b,
// so points transform as x^(a*b) = (x^a)^b.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity
  explicit Perm(std::vector<int> images);
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  long long order() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  std::string to_cycle_string() const;

 private:
  std::vector<int> images_;
};

}  // namespace xmodkit
