#pragma once

#include <array>
#include <functional>
#include <vector>

#include "raq/left_quasigroup.hpp"
#include "raq/partition.hpp"
#include "raq/perm.hpp"
#include "raq/perm_group.hpp"

namespace raq {

// a*b = sigma(b).  Always a rack; a quandle exactly when sigma is the
// identity (the projection quandle).
LeftQuasigroup permutation_rack(const Perm& sigma);

/*
 * Affine quandle on Z_{m_1} x ... x Z_{m_k}: a*b = a + M(b-a), where the
 * integer matrix M acts on column vectors mod the moduli (entry (i,j) reduced
 * mod m_i).  M must define an automorphism of the group.  Elements are
 * indexed in mixed radix with the first coordinate most significant.
 */
LeftQuasigroup affine_quandle(const std::vector<int>& moduli,
                              const std::vector<std::vector<int>>& mult);

// affine_quandle on Z_n with multiplier -1, i.e. a*b = 2a - b.
LeftQuasigroup dihedral_quandle(int n);

// Quandle on the listed permutations with a*b = a b a^-1.  The list must be
// repeat-free and closed under conjugation by its own members.
LeftQuasigroup conjugation_quandle(const std::vector<Perm>& c);

struct CosetQuandle {
  LeftQuasigroup algebra;
  std::vector<Perm> reps; // minimal representative of each coset, ascending
};

/*
 * Quandle on the left cosets of h in g with aH * bH = a f(a^-1 b) H.  f must
 * be an automorphism of g (checked on all element pairs) fixing h pointwise.
 * Cosets are indexed by their minimal representative in element order, so the
 * construction is deterministic.
 */
CosetQuandle coset_quandle(const PermGroup& g,
                           const std::function<Perm(const Perm&)>& f,
                           const PermGroup& h);

/*
 * Data for an extension of a rack by the abelian group
 * Z_{m_1} x ... x Z_{m_k}: phi and psi assign to each base pair (a,b) a k x k
 * integer matrix acting on fiber vectors mod the moduli, theta assigns a
 * fiber vector; all three are indexed at position a*n+b.  psi values must be
 * invertible.  claim_quandle adds the pair of diagonal conditions
 * theta_{a,a} = 0 and phi_{a,a} + psi_{a,a} = 1.
 */
struct ExtensionData {
  LeftQuasigroup base;
  std::vector<int> moduli;
  std::vector<std::vector<std::vector<int>>> phi;
  std::vector<std::vector<std::vector<int>>> psi;
  std::vector<std::vector<int>> theta;
  bool claim_quandle = true;
};

struct Extension {
  LeftQuasigroup algebra;
  Partition kernel; // of the canonical projection onto the base
};

/*
 * Builds (a,s)*(b,t) = (a*b, phi_{a,b}(s) + psi_{a,b}(t) + theta_{a,b}) on
 * base x fiber, with pair (a,s) indexed base-major as a*|fiber| + s.  The
 * four rack cocycle equations (and the quandle pair when claimed) are checked
 * by exhaustive scan; a violation raises an error naming the equation and a
 * witness triple (a,b,c).  On success the kernel of the canonical projection
 * is returned and verified abelian, and central when phi and psi are
 * constant.
 */
Extension abelian_extension(const ExtensionData& data);

// Abelian extension of dihedral_quandle(3) by Z_m with phi_{a,b} = 2 on the
// diagonal and -1 off it, psi = -1 everywhere, and theta_{a,b} = u exactly
// when a+2 = b mod 3.  Order 3m.
LeftQuasigroup galkin_quandle(int m, int u);

struct Reconstruction {
  ExtensionData data;
  std::vector<int> iso; // element of e -> index into the rebuilt extension
};

/*
 * Writes a quandle e as a central extension of e/O_N, for n a subgroup of
 * Dis(e) normal in LMlt(e) and central in Dis(e) such that e/O_N is
 * connected.  Follows a fixed recipe: the block of 0 carries the abelian
 * group a + b = f(b) for any displacement f with f(0) = a (well defined by
 * semiregularity), psi is the translation by 0 restricted to that block,
 * phi = 1 - psi, block transversals are found by breadth-first search over
 * the Dis(e) generators in listed order (inverses appended), and theta is
 * read off the resulting dynamical cocycle at (0,0).  The returned data is
 * revalidated through abelian_extension and the element map is verified to
 * be an isomorphism; any failure there is a hard error.
 */
Reconstruction central_reconstruction(const LeftQuasigroup& e, const PermGroup& n);

struct Q4ModuleSolution {
  int lambda = 0;
  int k = 0;
  int l = 0;
  std::array<int, 4> nu{};
};

/*
 * Exhaustive scan of the reduced module family over Z_7 for the latin
 * quandle q4 with rows 1342 / 4213 / 2431 / 3124: psi takes the value lambda
 * on the first row, first column and diagonal and k or l elsewhere in a
 * pattern invariant under the translation by 1, phi analogously with
 * diagonal 1-lambda and free values nu_0..nu_3.  Iterates lambda, k, l over
 * the units and nu_i over all residues, keeping every tuple that satisfies
 * the three theta-free cocycle equations together with the quandle diagonal
 * condition.  Returns the solutions in scan order.
 */
std::vector<Q4ModuleSolution> q4_z7_module_search();

} // namespace raq
