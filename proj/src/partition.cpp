#include "raq/partition.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

} // namespace

namespace raq {

Partition::Partition(std::vector<int> block_ids) : id_(std::move(block_ids)) { normalize(); }

void Partition::normalize() {
  std::vector<int> relabel(id_.size(), -1);
  int next = 0;
  for (int& v : id_) {
    if (v < 0 || v >= static_cast<int>(id_.size()))
      throw std::invalid_argument("partition block id out of range");
    if (relabel[v] < 0) relabel[v] = next++;
    v = relabel[v];
  }
  blocks_ = next;
}

Partition Partition::singletons(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return Partition(std::move(id));
}

Partition Partition::all(int n) { return Partition(std::vector<int>(n, 0)); }

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> id(n, -1);
  int next = 0;
  for (const auto& b : blocks) {
    for (int x : b) {
      if (x < 0 || x >= n || id[x] >= 0)
        throw std::invalid_argument("blocks do not form a partition");
      id[x] = next;
    }
    ++next;
  }
  for (int v : id)
    if (v < 0) throw std::invalid_argument("blocks do not cover every element");
  return Partition(std::move(id));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int i = 0; i < size(); ++i) out[id_[i]].push_back(i);
  return out;
}

bool Partition::leq(const Partition& other) const {
  if (size() != other.size()) throw std::invalid_argument("partition size mismatch");
  std::vector<int> image(blocks_, -1);
  for (int i = 0; i < size(); ++i) {
    int& img = image[id_[i]];
    if (img < 0)
      img = other.id_[i];
    else if (img != other.id_[i])
      return false;
  }
  return true;
}

Partition Partition::meet(const Partition& other) const {
  if (size() != other.size()) throw std::invalid_argument("partition size mismatch");
  int n = size();
  std::vector<int> id(n);
  std::vector<int> pair_label(static_cast<std::size_t>(blocks_) * other.blocks_, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int key = id_[i] * other.blocks_ + other.id_[i];
    if (pair_label[key] < 0) pair_label[key] = next++;
    id[i] = pair_label[key];
  }
  return Partition(std::move(id));
}

Partition Partition::join(const Partition& other) const {
  if (size() != other.size()) throw std::invalid_argument("partition size mismatch");
  int n = size();
  UnionFind uf(n);
  std::vector<int> rep_a(blocks_, -1), rep_b(other.blocks_, -1);
  for (int i = 0; i < n; ++i) {
    int& ra = rep_a[id_[i]];
    if (ra < 0) ra = i; else uf.unite(ra, i);
    int& rb = rep_b[other.id_[i]];
    if (rb < 0) rb = i; else uf.unite(rb, i);
  }
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = uf.find(i);
  return Partition(std::move(id));
}

std::string Partition::to_string() const {
  std::string out;
  for (const auto& b : blocks()) {
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(b[i] + 1);
    }
    out += '}';
  }
  return out;
}

} // namespace raq
