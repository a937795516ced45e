#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace evoaut {

/// Bijection of {0, ..., n-1}, stored as its image word.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// (this ∘ other)(i) = this(other(i)).
  Permutation after(const Permutation& other) const;

  /// Cycle notation with 1-based points, "()" for the identity.
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

}  // namespace evoaut
