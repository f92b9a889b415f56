#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace raq {

/*
 * A permutation of {0, ..., n-1}, stored as its image sequence.
 * Composition is function composition: (a * b)(x) = a(b(x)).
 */
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  bool is_involution() const;
  Perm inverse() const;
  int order() const;

  // Sorted cycle lengths >= 2; the shape invariant under conjugation.
  std::vector<int> cycle_type() const;

  // 1-based disjoint cycle notation, "()" for the identity.
  std::string cycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

} // namespace raq
