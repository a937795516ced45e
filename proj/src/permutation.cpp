#include "evoaut/permutation.hpp"

#include "evoaut/error.hpp"

namespace evoaut {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw Error(ErrorKind::InvalidArgument, "not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = i;
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> w(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) w[images_[i]] = i;
  return Permutation(std::move(w));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw Error(ErrorKind::DimensionMismatch, "permutation sizes differ");
  std::vector<std::size_t> w(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) w[i] = images_[other.images_[i]];
  return Permutation(std::move(w));
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += "(";
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out += " ";
      out += std::to_string(i + 1);
      first = false;
      i = images_[i];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace evoaut
