#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raq/partition.hpp"
#include "raq/perm.hpp"
#include "raq/perm_group.hpp"

namespace raq {

/*
 * A finite left quasigroup (Q, *, \): every left translation
 * L_a = x -> a*x is a bijection and a\b is the unique solution of a*x = b.
 * Elements are 0-based internally; all file and CLI interfaces are 1-based.
 * Immutable after construction.
 */
class LeftQuasigroup {
public:
  static LeftQuasigroup from_table(const std::vector<std::vector<int>>& mult);

  int order() const { return n_; }
  int mul(int a, int b) const { return mult_[a * n_ + b]; }
  int ldiv(int a, int b) const { return ldiv_[a * n_ + b]; }
  const Perm& translation(int a) const { return trans_[a]; }
  const std::vector<Perm>& translations() const { return trans_; }

  std::vector<std::vector<int>> table() const;
  // Flat row-major entries; the lexicographic key used for canonical forms.
  const std::vector<int>& flat() const { return mult_; }

  bool is_rack() const;
  bool is_quandle() const;
  bool is_involutory() const;
  bool is_latin() const;
  bool is_medial() const;
  bool is_class_c() const;

  bool operator==(const LeftQuasigroup&) const;

private:
  LeftQuasigroup() = default;
  int n_ = 0;
  std::vector<int> mult_, ldiv_;
  std::vector<Perm> trans_;
};

// Left multiplication group <L_a> and displacement group <L_a L_b^-1>.
PermGroup lmlt(const LeftQuasigroup& q);
PermGroup dis(const LeftQuasigroup& q);

// lambda_Q: a ~ b iff L_a = L_b.  A congruence for quandles; for general
// left quasigroups it is just a partition.
Partition cayley_kernel(const LeftQuasigroup& q);

// sigma_Q: a ~ b iff the Dis(Q)-stabilizers of a and b coincide.
Partition sigma_partition(const LeftQuasigroup& q);

// O_Q: orbits of Dis(Q).
Partition orbit_partition(const LeftQuasigroup& q);

bool is_connected(const LeftQuasigroup& q);
bool is_faithful(const LeftQuasigroup& q);

struct StructureReport {
  int order = 0;
  bool is_rack = false, is_quandle = false, is_involutory = false;
  bool is_latin = false, is_medial = false, is_faithful = false;
  bool is_connected = false, is_class_c = false;
  std::uint64_t lmlt_order = 0, dis_order = 0;
  Partition cayley_kernel, sigma, orbits;
};

StructureReport structure_report(const LeftQuasigroup& q);

// Compatibility of a partition with * and \ (the latter is implied for
// finite algebras but checked explicitly).
bool is_congruence(const LeftQuasigroup& q, const Partition& p);

struct Quotient {
  LeftQuasigroup algebra;
  std::vector<int> block_of; // element -> quotient element
};

// Q/alpha; alpha must be a congruence.  Quotient elements are blocks ordered
// by their minimum element.
Quotient quotient(const LeftQuasigroup& q, const Partition& alpha);

// Pair (a1, a2) encoded as a1 * n2 + a2.
LeftQuasigroup direct_product(const LeftQuasigroup& a, const LeftQuasigroup& b);

struct Subalgebra {
  LeftQuasigroup algebra;
  std::vector<int> embedding; // subalgebra element -> element of q
};

Subalgebra subalgebra_generated(const LeftQuasigroup& q, const std::vector<int>& gens);

// An isomorphism q1 -> q2 as an image vector, or nullopt.
std::optional<std::vector<int>> isomorphism(const LeftQuasigroup& q1,
                                            const LeftQuasigroup& q2);

// Lexicographically least multiplication table over all relabellings
// (row-major comparison).
LeftQuasigroup canonical_form(const LeftQuasigroup& q);

// True iff the table already equals its canonical form; cheaper than
// computing the form because the search aborts on the first improvement.
bool is_canonical_table(const std::vector<int>& flat, int n);

} // namespace raq
