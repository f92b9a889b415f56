#pragma once

#include <string>
#include <vector>

#include "raq/left_quasigroup.hpp"
#include "raq/perm_group.hpp"

namespace raq {

// Least congruence identifying a and b (union-find closure under the four
// one-sided compatibility rules).
Partition principal_congruence(const LeftQuasigroup& q, int a, int b);

// All congruences as the join-closure of the principal ones, sorted from
// finest to coarsest (block count descending, ties by block ids).  Exhaustive,
// so the order is bounded.
std::vector<Partition> congruence_lattice(const LeftQuasigroup& q, int max_order = 16);

/*
 * Dis_alpha: for racks the subgroup generated by L_a L_b^-1 over pairs
 * a alpha b (normality in LMlt is then automatic and asserted); for other
 * left quasigroups the normal closure of those generators in LMlt(Q).
 */
PermGroup dis_rel(const LeftQuasigroup& q, const Partition& alpha);

// Dis^alpha: kernel of the Dis(Q) action on alpha-blocks.
PermGroup dis_ker(const LeftQuasigroup& q, const Partition& alpha);

// con N = {(a,b) : L_a L_b^-1 in N} for N a subgroup of Dis(Q) normal in
// LMlt(Q).  Q must be a rack; the result is then a congruence, which is
// re-verified.
Partition con_of(const LeftQuasigroup& q, const PermGroup& n);

// O_N: the orbit relation of N (N normal in LMlt), verified as a congruence.
Partition orbit_congruence(const LeftQuasigroup& q, const PermGroup& n);

// Norm(Q): all subgroups of Dis(Q) normal in LMlt(Q), sorted by order.
std::vector<PermGroup> norm_subgroups(const LeftQuasigroup& q);

struct GaloisLaw {
  std::string name;
  bool holds = true;
  std::vector<std::string> violations;
};

/*
 * Audit of the congruence-subgroup connection on a rack:
 *   (i)    Dis_alpha <= N  iff  alpha <= con N
 *   (ii)   alpha <= con Dis_alpha
 *   (iii)  Dis_{con N} <= N <= Dis^{con N}
 *   (iv)   Dis^{alpha^beta} = Dis^alpha n Dis^beta;
 *          Dis_{alpha v beta} = Dis_alpha . Dis_beta
 *   (v)    [Dis^alpha, LMlt(Q)] <= Dis_alpha
 *   (vi)   O_N <= con N
 *   (vii)  Q/alpha faithful  iff  alpha = con Dis^alpha
 *   (viii) the two characterizations of CDSg agree: the maps alpha -> Dis_alpha
 *          and N -> con N are mutually inverse bijections Con(Q) <-> Norm(Q)
 *          exactly when Dis_alpha = Dis^alpha for every alpha and every factor
 *          of Q is faithful
 * All eight are theorems, so a failure on a rack is an implementation bug.
 */
struct GaloisAudit {
  std::vector<Partition> congruences;
  std::vector<PermGroup> norm;
  std::vector<GaloisLaw> laws;
  bool all_hold = true;
  bool cdsg = false;
};

GaloisAudit galois_audit(const LeftQuasigroup& q);

// CDSg conditions by themselves: Dis_alpha = Dis^alpha for every congruence
// and every factor faithful; evidence lists each violating congruence.
bool is_cdsg(const LeftQuasigroup& q, std::vector<std::string>* evidence = nullptr);

} // namespace raq
