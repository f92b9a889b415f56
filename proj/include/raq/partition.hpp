#pragma once

#include <string>
#include <vector>

namespace raq {

/*
 * A partition of {0, ..., n-1} in canonical form: block ids are assigned by
 * first occurrence, so the block of 0 has id 0, the next unseen element opens
 * id 1, and so on.  Two partitions are equal iff their id vectors are equal.
 */
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> block_ids);

  static Partition singletons(int n);
  static Partition all(int n);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(id_.size()); }
  int block_of(int x) const { return id_[x]; }
  int block_count() const { return blocks_; }
  bool same_block(int x, int y) const { return id_[x] == id_[y]; }

  bool is_singletons() const { return blocks_ == size(); }
  bool is_all() const { return blocks_ <= 1; }

  // Blocks listed by id; elements ascending within each block.
  std::vector<std::vector<int>> blocks() const;

  // Refinement order: *this <= other iff every block of *this lies in a
  // block of other.
  bool leq(const Partition& other) const;

  Partition meet(const Partition& other) const;
  Partition join(const Partition& other) const;

  const std::vector<int>& ids() const { return id_; }

  // "{1,3}{2,4}" with 1-based elements, for diagnostics.
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> id_;
  int blocks_ = 0;

  void normalize();
};

} // namespace raq
