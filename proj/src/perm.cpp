#include "xmodkit/perm.hpp"

#include <numeric>
#include <sstream>

#include "xmodkit/errors.hpp"

namespace xmodkit {

Perm::Perm(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw PreconditionError("image vector is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw ParseError("cycle point out of range");
      if (img[from] != from) throw ParseError("point repeated across cycles");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  std::vector<int> img(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) img[i] = rhs.images_[images_[i]];
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<int>(i);
  Perm p;
  p.images_ = std::move(img);
  return p;
}

long long Perm::order() const {
  long long n = 1;
  Perm acc = *this;
  while (!acc.is_identity()) {
    acc = acc * *this;
    ++n;
  }
  return n;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    int p = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << p;
      seen[p] = true;
      p = images_[p];
      first = false;
    } while (p != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace xmodkit
