#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "raq/partition.hpp"
#include "raq/perm.hpp"

namespace raq {

/*
 * A permutation group given by generators, with a deterministic
 * Schreier-Sims stabilizer chain built on demand.  Intended for small
 * degrees (a few dozen points); orders must fit in 64 bits.
 */
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> generators);

  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  bool contains(const Perm& p) const;
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  // All elements, sorted; throws std::length_error if the order exceeds limit.
  const std::vector<Perm>& elements(std::uint64_t limit = 1000000) const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool same_group(const PermGroup& other) const;
  // Checks g s g^-1 in *this for generators s and ambient generators g.
  bool is_normal_in(const PermGroup& ambient) const;

  std::vector<std::vector<int>> orbits() const;
  Partition orbit_partition() const;
  std::vector<int> orbit_of(int point) const;

  // Stabilizer of a point via Schreier generators (no element expansion).
  PermGroup stabilizer(int point) const;
  PermGroup pointwise_stabilizer(const std::vector<int>& points) const;

private:
  int degree_ = 0;
  std::vector<Perm> gens_;

  struct Chain;
  mutable std::shared_ptr<Chain> chain_;
  mutable std::shared_ptr<std::vector<Perm>> elements_cache_;
  const Chain& chain() const;
};

PermGroup subgroup_join(const PermGroup& a, const PermGroup& b);
PermGroup intersection(const PermGroup& a, const PermGroup& b,
                       std::uint64_t limit = 1000000);

// Smallest subgroup containing seed and normalized by ambient.
PermGroup normal_closure(const PermGroup& ambient, const std::vector<Perm>& seed);

// [H, K] as a subgroup of ambient: the normal closure of the generator
// commutators.  H and K must be normal in ambient for this to be the full
// commutator subgroup.
PermGroup commutator_subgroup(const PermGroup& h, const PermGroup& k,
                              const PermGroup& ambient);

PermGroup center(const PermGroup& g, std::uint64_t limit = 1000000);

struct GroupSeriesReport {
  bool solvable = false;
  bool nilpotent = false;
  int derived_length = -1;        // -1 when not solvable
  int nilpotency_class = -1;      // -1 when not nilpotent
  std::vector<std::uint64_t> derived_orders;
  std::vector<std::uint64_t> lower_central_orders;
};

GroupSeriesReport series_report(const PermGroup& g);

// Sylow decomposition of a nilpotent group: for each prime p dividing the
// order, the subgroup generated by the p-parts of the generators.
std::vector<std::pair<int, PermGroup>> sylow_components(const PermGroup& g);

// Elements of g mapping every block of the partition into itself.  Each
// generator must permute the blocks.
PermGroup action_kernel_on_blocks(const PermGroup& g, const Partition& blocks);

// The induced permutation group on block indices.
PermGroup block_action_image(const PermGroup& g, const Partition& blocks);

// All subgroups of g that are normal in ambient; exhaustive, so g must be
// small (order <= limit).
std::vector<PermGroup> all_normal_subgroups(const PermGroup& g, const PermGroup& ambient,
                                            std::uint64_t limit = 10000);

} // namespace raq
