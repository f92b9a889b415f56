#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raq/left_quasigroup.hpp"
#include "raq/partition.hpp"
#include "raq/perm_group.hpp"

namespace raq {

// Whether g acts alpha-semiregularly: every fixed-point set of a group
// element is a union of alpha-blocks.  Needs the full element list, so g
// must be small; throws std::length_error past the limit.
bool semiregular(const PermGroup& g, const Partition& alpha,
                 std::uint64_t limit = 1000000);

/*
 * Abelianness and centrality of a congruence, decided through the
 * displacement group: alpha is abelian iff Dis_alpha is abelian and acts
 * alpha-semiregularly, central iff Dis_alpha lies in the center of Dis(Q)
 * and Dis(Q) acts alpha-semiregularly.  On faithful quandles the
 * semiregularity conditions are implied and skipped.  The equivalence is a
 * theorem for racks and class-C left quasigroups only; for anything else the
 * default is to refuse, and allow_non_ltt downgrades the result to a
 * necessary condition (false is then still conclusive, true is not).
 */
bool is_abelian_congruence(const LeftQuasigroup& q, const Partition& alpha,
                           bool allow_non_ltt = false);
bool is_central_congruence(const LeftQuasigroup& q, const Partition& alpha,
                           bool allow_non_ltt = false);

// The center of a rack: the largest central congruence, computed as
// con(Z(Dis(Q))) meet sigma_Q and recomputed from the mediation identity
// (u*a)*(b*v) = (u*b)*(a*v); disagreement between the two routes is a hard
// error.
Partition center_congruence(const LeftQuasigroup& q);

/*
 * The commutator [alpha,beta] of two congruences of a rack or class-C left
 * quasigroup.  When every factor of q is faithful this is con([Dis_alpha,
 * Dis_beta]), verified to coincide with the orbit congruence of that group
 * and to be symmetric.  Otherwise all congruences delta <= alpha meet beta
 * are scanned for the quotient condition ([Dis_{alpha/delta},
 * Dis_{beta/delta}] trivial and Dis_{beta/delta} acting alpha/delta-
 * semiregularly) and the meet of the passers is returned after itself
 * passing the condition.  max_order bounds the congruence lattice.
 */
Partition commutator_pair(const LeftQuasigroup& q, const Partition& alpha,
                          const Partition& beta, int max_order = 16);

/*
 * Solvability and nilpotence of a rack, with lengths.  The congruence route
 * iterates [gamma,gamma] (derived series) and [gamma,1] (lower central
 * series) from 1_Q; the group route reads series_report(Dis(Q)).  The two
 * routes must agree on the booleans, and the lengths must satisfy
 * group <= 2*quandle - 1 and quandle <= group + 1.  If the congruence
 * lattice exceeds its bound the group route alone decides the booleans,
 * chain lengths are -1 and chain_route_used is false.
 */
struct SolvabilityReport {
  bool quandle_solvable = false;
  bool quandle_nilpotent = false;
  int quandle_solv_len = -1;
  int quandle_nilp_len = -1;
  bool group_solvable = false;
  bool group_nilpotent = false;
  int group_solv_len = -1;
  int group_nilp_len = -1;
  bool chain_route_used = false;
};

SolvabilityReport solvability_report(const LeftQuasigroup& q, int max_order = 16);

/*
 * Factorization of a connected faithful nilpotent quandle into connected
 * quandles of prime power order: Dis(Q) splits into its Sylow components,
 * each contributing the coset quandle of the conjugation by the translation
 * at the base point 0 on its fixed subgroup.  The stabilizer of the base
 * point is verified to equal that fixed subgroup, the factors are rebuilt
 * into a direct product, and iso maps product elements to q; the
 * decomposition is repeated at a second base point and the factor multisets
 * compared.  Verification failures are hard errors.
 */
struct PrimeDecomposition {
  std::vector<int> primes;
  std::vector<LeftQuasigroup> factors;
  LeftQuasigroup product;
  std::vector<int> iso; // product element -> element of q
};

PrimeDecomposition prime_decomposition(const LeftQuasigroup& q);

// Both halves of the congruence-subgroup duality condition: Dis_alpha =
// Dis^alpha for every congruence, and every factor faithful.  evidence lists
// each violating congruence.
struct CdsgReport {
  bool cdsg = false;
  std::vector<std::string> evidence;
};

CdsgReport cdsg_check(const LeftQuasigroup& q);

} // namespace raq
