#include "raq/constructions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "raq/commutator.hpp"
#include "raq/congruence.hpp"

namespace raq {

namespace {

int modnorm(long long x, int m) { return static_cast<int>(((x % m) + m) % m); }

int fiber_size(const std::vector<int>& moduli) {
  int p = 1;
  for (int m : moduli) p *= m;
  return p;
}

// Mixed radix, first coordinate most significant.
int pack(const std::vector<int>& v, const std::vector<int>& moduli) {
  int idx = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) idx = idx * moduli[i] + v[i];
  return idx;
}

std::vector<int> unpack(int idx, const std::vector<int>& moduli) {
  std::vector<int> v(moduli.size());
  for (int i = static_cast<int>(moduli.size()) - 1; i >= 0; --i) {
    v[i] = idx % moduli[i];
    idx /= moduli[i];
  }
  return v;
}

using Matrix = std::vector<std::vector<int>>;

std::vector<int> apply_matrix(const Matrix& m, const std::vector<int>& v,
                              const std::vector<int>& moduli) {
  std::size_t k = moduli.size();
  std::vector<int> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < k; ++j) s += static_cast<long long>(m[i][j]) * v[j];
    out[i] = modnorm(s, moduli[i]);
  }
  return out;
}

Matrix compose(const Matrix& a, const Matrix& b, const std::vector<int>& moduli) {
  std::size_t k = moduli.size();
  Matrix c(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      long long s = 0;
      for (std::size_t t = 0; t < k; ++t) s += static_cast<long long>(a[i][t]) * b[t][j];
      c[i][j] = modnorm(s, moduli[i]);
    }
  return c;
}

Matrix matrix_sum(const Matrix& a, const Matrix& b, const std::vector<int>& moduli) {
  std::size_t k = moduli.size();
  Matrix c(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c[i][j] = modnorm(a[i][j] + b[i][j], moduli[i]);
  return c;
}

// Entry-wise congruence mod the row modulus decides equality of the induced
// maps, provided both matrices respect the moduli.
bool matrix_eq(const Matrix& a, const Matrix& b, const std::vector<int>& moduli) {
  for (std::size_t i = 0; i < moduli.size(); ++i)
    for (std::size_t j = 0; j < moduli.size(); ++j)
      if (modnorm(a[i][j] - b[i][j], moduli[i]) != 0) return false;
  return true;
}

bool vector_eq(const std::vector<int>& a, const std::vector<int>& b,
               const std::vector<int>& moduli) {
  for (std::size_t i = 0; i < moduli.size(); ++i)
    if (modnorm(a[i] - b[i], moduli[i]) != 0) return false;
  return true;
}

std::vector<int> vector_sum(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& moduli) {
  std::vector<int> c(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) c[i] = modnorm(a[i] + b[i], moduli[i]);
  return c;
}

std::string pair1(int a, int b) {
  return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

std::string triple1(int a, int b, int c) {
  return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
         std::to_string(c + 1) + ")";
}

int element_order(const std::vector<std::vector<int>>& plus, int zero, int x) {
  int ord = 1, y = x;
  while (y != zero) {
    y = plus[y][x];
    ++ord;
  }
  return ord;
}

/*
 * Basis of a finite abelian group given by its addition table: a maximal
 * order element generates a direct summand, so it is split off and the
 * quotient is decomposed recursively; quotient basis elements are lifted to
 * representatives of the same order, which exist because a maximal cyclic
 * subgroup is pure.  Moduli come out in descending order.
 */
void abelian_basis(const std::vector<std::vector<int>>& plus, int zero,
                   std::vector<int>& basis, std::vector<int>& moduli) {
  int sz = static_cast<int>(plus.size());
  if (sz == 1) return;
  int g1 = -1, m1 = 0;
  for (int x = 0; x < sz; ++x) {
    int o = element_order(plus, zero, x);
    if (o > m1) {
      m1 = o;
      g1 = x;
    }
  }
  std::vector<int> cyc;
  for (int y = zero;;) {
    cyc.push_back(y);
    y = plus[y][g1];
    if (y == zero) break;
  }
  if (m1 == sz) {
    basis.push_back(g1);
    moduli.push_back(m1);
    return;
  }
  std::vector<int> coset_key(sz);
  for (int x = 0; x < sz; ++x) {
    int k = sz;
    for (int c : cyc) k = std::min(k, plus[x][c]);
    coset_key[x] = k;
  }
  std::vector<int> reps(coset_key.begin(), coset_key.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<int> coset_index(sz, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) coset_index[reps[i]] = static_cast<int>(i);
  int qn = static_cast<int>(reps.size());
  std::vector<std::vector<int>> qplus(qn, std::vector<int>(qn));
  for (int i = 0; i < qn; ++i)
    for (int j = 0; j < qn; ++j) qplus[i][j] = coset_index[coset_key[plus[reps[i]][reps[j]]]];
  int qzero = coset_index[coset_key[zero]];
  std::vector<int> qbasis, qmoduli;
  abelian_basis(qplus, qzero, qbasis, qmoduli);
  basis.push_back(g1);
  moduli.push_back(m1);
  for (std::size_t i = 0; i < qbasis.size(); ++i) {
    int d = qmoduli[i];
    int cand = reps[qbasis[i]];
    bool found = false;
    for (int t = 0; t < m1; ++t) {
      if (element_order(plus, zero, cand) == d) {
        found = true;
        break;
      }
      cand = plus[cand][g1];
    }
    if (!found) throw std::logic_error("abelian basis lifting failed");
    basis.push_back(cand);
    moduli.push_back(d);
  }
}

} // namespace

LeftQuasigroup permutation_rack(const Perm& sigma) {
  int n = sigma.degree();
  if (n < 1) throw std::invalid_argument("permutation rack needs degree at least 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = sigma(b);
  return LeftQuasigroup::from_table(t);
}

LeftQuasigroup affine_quandle(const std::vector<int>& moduli,
                              const std::vector<std::vector<int>>& mult) {
  std::size_t k = moduli.size();
  if (k == 0) throw std::invalid_argument("affine quandle needs at least one modulus");
  for (int m : moduli)
    if (m < 1) throw std::invalid_argument("moduli must be positive");
  if (mult.size() != k) throw std::invalid_argument("multiplier matrix shape mismatch");
  for (const auto& row : mult)
    if (row.size() != k) throw std::invalid_argument("multiplier matrix shape mismatch");
  Matrix m(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      m[i][j] = modnorm(mult[i][j], moduli[i]);
      if (modnorm(static_cast<long long>(m[i][j]) * moduli[j], moduli[i]) != 0)
        throw std::invalid_argument("multiplier does not respect the moduli");
    }
  int n = fiber_size(moduli);
  std::set<int> image;
  for (int x = 0; x < n; ++x) image.insert(pack(apply_matrix(m, unpack(x, moduli), moduli), moduli));
  if (static_cast<int>(image.size()) != n)
    throw std::invalid_argument("multiplier is not invertible over the moduli");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    std::vector<int> u = unpack(a, moduli);
    for (int b = 0; b < n; ++b) {
      std::vector<int> v = unpack(b, moduli);
      std::vector<int> d(k);
      for (std::size_t i = 0; i < k; ++i) d[i] = modnorm(v[i] - u[i], moduli[i]);
      std::vector<int> w = apply_matrix(m, d, moduli);
      for (std::size_t i = 0; i < k; ++i) w[i] = modnorm(u[i] + w[i], moduli[i]);
      t[a][b] = pack(w, moduli);
    }
  }
  LeftQuasigroup q = LeftQuasigroup::from_table(t);
  if (!q.is_quandle()) throw std::logic_error("affine construction failed the quandle axioms");
  return q;
}

LeftQuasigroup dihedral_quandle(int n) {
  if (n < 1) throw std::invalid_argument("dihedral quandle needs a positive modulus");
  return affine_quandle({n}, {{n - 1}});
}

LeftQuasigroup conjugation_quandle(const std::vector<Perm>& c) {
  int n = static_cast<int>(c.size());
  if (n < 1) throw std::invalid_argument("conjugation quandle needs at least one element");
  int deg = c[0].degree();
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) {
    if (c[i].degree() != deg) throw std::invalid_argument("degree mismatch in the element list");
    if (!index.emplace(c[i], i).second)
      throw std::invalid_argument("repeated element in the conjugation quandle");
  }
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    Perm ai = c[a].inverse();
    for (int b = 0; b < n; ++b) {
      auto it = index.find(c[a] * c[b] * ai);
      if (it == index.end())
        throw std::invalid_argument("the list is not closed under conjugation at " + pair1(a, b));
      t[a][b] = it->second;
    }
  }
  LeftQuasigroup q = LeftQuasigroup::from_table(t);
  if (!q.is_quandle()) throw std::logic_error("conjugation construction failed the quandle axioms");
  return q;
}

CosetQuandle coset_quandle(const PermGroup& g,
                           const std::function<Perm(const Perm&)>& f,
                           const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("h is not a subgroup of g");
  const std::vector<Perm>& elems = g.elements();
  std::set<Perm> in_g(elems.begin(), elems.end());
  std::set<Perm> image;
  for (const Perm& x : elems) {
    Perm y = f(x);
    if (!in_g.count(y)) throw std::invalid_argument("f does not map g into itself");
    image.insert(y);
  }
  if (image.size() != elems.size()) throw std::invalid_argument("f is not injective on g");
  for (const Perm& x : elems)
    for (const Perm& y : elems)
      if (f(x * y) != f(x) * f(y)) throw std::invalid_argument("f is not a homomorphism on g");
  for (const Perm& x : h.elements())
    if (f(x) != x) throw std::invalid_argument("h is not fixed pointwise by f");

  const std::vector<Perm>& hel = h.elements();
  auto coset_rep = [&](const Perm& x) {
    Perm best = x * hel[0];
    for (std::size_t i = 1; i < hel.size(); ++i) best = std::min(best, x * hel[i]);
    return best;
  };
  std::vector<Perm> reps;
  std::map<Perm, int> rep_index;
  for (const Perm& x : elems) {
    Perm r = coset_rep(x);
    if (rep_index.emplace(r, static_cast<int>(reps.size())).second) reps.push_back(r);
  }
  int n = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    Perm ai = reps[i].inverse();
    for (int j = 0; j < n; ++j) t[i][j] = rep_index.at(coset_rep(reps[i] * f(ai * reps[j])));
  }
  LeftQuasigroup q = LeftQuasigroup::from_table(t);
  if (!q.is_quandle()) throw std::logic_error("coset construction failed the quandle axioms");
  return {q, reps};
}

Extension abelian_extension(const ExtensionData& data) {
  const LeftQuasigroup& base = data.base;
  int n = base.order();
  if (!base.is_rack()) throw std::invalid_argument("extension base must be a rack");
  if (data.claim_quandle && !base.is_quandle())
    throw std::invalid_argument("quandle claim requires a quandle base");
  const std::vector<int>& moduli = data.moduli;
  std::size_t k = moduli.size();
  if (k == 0) throw std::invalid_argument("extension needs at least one modulus");
  for (int m : moduli)
    if (m < 1) throw std::invalid_argument("moduli must be positive");
  std::size_t np = static_cast<std::size_t>(n) * n;
  if (data.phi.size() != np || data.psi.size() != np || data.theta.size() != np)
    throw std::invalid_argument("phi/psi/theta must hold one entry per base pair");

  auto normalize_matrix = [&](const Matrix& src, const char* name, int a, int b) {
    if (src.size() != k) throw std::invalid_argument(std::string(name) + " at " + pair1(a, b) + " has the wrong shape");
    Matrix m(k, std::vector<int>(k));
    for (std::size_t i = 0; i < k; ++i) {
      if (src[i].size() != k)
        throw std::invalid_argument(std::string(name) + " at " + pair1(a, b) + " has the wrong shape");
      for (std::size_t j = 0; j < k; ++j) {
        m[i][j] = modnorm(src[i][j], moduli[i]);
        if (modnorm(static_cast<long long>(m[i][j]) * moduli[j], moduli[i]) != 0)
          throw std::invalid_argument(std::string(name) + " at " + pair1(a, b) +
                                      " does not respect the moduli");
      }
    }
    return m;
  };

  int fs = fiber_size(moduli);
  std::vector<Matrix> phi(np), psi(np);
  std::vector<std::vector<int>> theta(np);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::size_t p = static_cast<std::size_t>(a) * n + b;
      phi[p] = normalize_matrix(data.phi[p], "phi", a, b);
      psi[p] = normalize_matrix(data.psi[p], "psi", a, b);
      if (data.theta[p].size() != k)
        throw std::invalid_argument("theta at " + pair1(a, b) + " has the wrong shape");
      theta[p].resize(k);
      for (std::size_t i = 0; i < k; ++i) theta[p][i] = modnorm(data.theta[p][i], moduli[i]);
      std::set<int> image;
      for (int s = 0; s < fs; ++s)
        image.insert(pack(apply_matrix(psi[p], unpack(s, moduli), moduli), moduli));
      if (static_cast<int>(image.size()) != fs)
        throw std::invalid_argument("psi at " + pair1(a, b) + " is not invertible");
    }

  auto at = [&](int a, int b) { return static_cast<std::size_t>(a) * n + b; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::size_t bc = at(b, c), abac = at(base.mul(a, b), base.mul(a, c));
        std::vector<int> lhs = vector_sum(apply_matrix(psi[at(a, base.mul(b, c))], theta[bc], moduli),
                                          theta[at(a, base.mul(b, c))], moduli);
        std::vector<int> rhs = vector_sum(
            vector_sum(apply_matrix(psi[abac], theta[at(a, c)], moduli),
                       apply_matrix(phi[abac], theta[at(a, b)], moduli), moduli),
            theta[abac], moduli);
        if (!vector_eq(lhs, rhs, moduli))
          throw std::invalid_argument("extension equation ext1 fails at (a,b,c)=" + triple1(a, b, c));
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::size_t abac = at(base.mul(a, b), base.mul(a, c));
        if (!matrix_eq(compose(psi[at(a, base.mul(b, c))], psi[at(b, c)], moduli),
                       compose(psi[abac], psi[at(a, c)], moduli), moduli))
          throw std::invalid_argument("extension equation ext2 fails at (a,b,c)=" + triple1(a, b, c));
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::size_t abac = at(base.mul(a, b), base.mul(a, c));
        if (!matrix_eq(compose(psi[at(a, base.mul(b, c))], phi[at(b, c)], moduli),
                       compose(phi[abac], psi[at(a, b)], moduli), moduli))
          throw std::invalid_argument("extension equation ext3 fails at (a,b,c)=" + triple1(a, b, c));
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::size_t abac = at(base.mul(a, b), base.mul(a, c));
        if (!matrix_eq(phi[at(a, base.mul(b, c))],
                       matrix_sum(compose(phi[abac], phi[at(a, b)], moduli),
                                  compose(psi[abac], phi[at(a, c)], moduli), moduli),
                       moduli))
          throw std::invalid_argument("extension equation ext4 fails at (a,b,c)=" + triple1(a, b, c));
      }
  if (data.claim_quandle) {
    Matrix identity(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1 % moduli[i];
    std::vector<int> zero(k, 0);
    for (int a = 0; a < n; ++a) {
      std::size_t p = at(a, a);
      if (!vector_eq(theta[p], zero, moduli) ||
          !matrix_eq(matrix_sum(phi[p], psi[p], moduli), identity, moduli))
        throw std::invalid_argument("extension equation ext_qua fails at a=" + std::to_string(a + 1));
    }
  }

  int total = n * fs;
  std::vector<std::vector<int>> t(total, std::vector<int>(total));
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < fs; ++s) {
      std::vector<int> sv = unpack(s, moduli);
      for (int b = 0; b < n; ++b) {
        std::size_t p = at(a, b);
        std::vector<int> left = vector_sum(apply_matrix(phi[p], sv, moduli), theta[p], moduli);
        for (int u = 0; u < fs; ++u) {
          std::vector<int> r = vector_sum(left, apply_matrix(psi[p], unpack(u, moduli), moduli), moduli);
          t[a * fs + s][b * fs + u] = base.mul(a, b) * fs + pack(r, moduli);
        }
      }
    }
  LeftQuasigroup algebra = LeftQuasigroup::from_table(t);
  if (!algebra.is_rack()) throw std::logic_error("validated extension failed the rack axioms");
  if (data.claim_quandle && !algebra.is_quandle())
    throw std::logic_error("validated extension failed the quandle axioms");

  std::vector<int> ids(total);
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < fs; ++s) ids[a * fs + s] = a;
  Partition kernel{std::vector<int>(ids)};
  if (!is_congruence(algebra, kernel)) throw std::logic_error("extension kernel is not a congruence");
  bool constant = true;
  for (std::size_t p = 1; p < np && constant; ++p)
    constant = matrix_eq(phi[p], phi[0], moduli) && matrix_eq(psi[p], psi[0], moduli);
  if (!is_abelian_congruence(algebra, kernel))
    throw std::logic_error("extension kernel failed the abelian check");
  if (constant && !is_central_congruence(algebra, kernel))
    throw std::logic_error("extension kernel failed the central check");
  return {algebra, kernel};
}

LeftQuasigroup galkin_quandle(int m, int u) {
  if (m < 1) throw std::invalid_argument("fiber modulus must be positive");
  if (u < 0 || u >= m) throw std::invalid_argument("fiber element out of range");
  LeftQuasigroup base = dihedral_quandle(3);
  ExtensionData data{base, {m}, {}, {}, {}, true};
  data.phi.resize(9);
  data.psi.resize(9);
  data.theta.resize(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      std::size_t p = static_cast<std::size_t>(a) * 3 + b;
      data.phi[p] = {{a == b ? 2 % m : m - 1}};
      data.psi[p] = {{m - 1}};
      data.theta[p] = {(a + 2) % 3 == b ? u : 0};
    }
  return abelian_extension(data).algebra;
}

Reconstruction central_reconstruction(const LeftQuasigroup& e, const PermGroup& n) {
  if (!e.is_quandle()) throw std::invalid_argument("central reconstruction needs a quandle");
  PermGroup d = dis(e);
  if (!n.is_subgroup_of(d)) throw std::invalid_argument("n is not a subgroup of Dis");
  if (!n.is_normal_in(lmlt(e))) throw std::invalid_argument("n is not normal in LMlt");
  if (!n.is_subgroup_of(center(d))) throw std::invalid_argument("n is not central in Dis");
  Partition alpha = orbit_congruence(e, n);
  Quotient quot = quotient(e, alpha);
  if (!is_connected(quot.algebra)) throw std::invalid_argument("the quotient by O_N is not connected");
  if (!semiregular(d, alpha)) throw std::logic_error("Dis fails to act semiregularly on a central orbit congruence");

  std::vector<int> fiber = alpha.blocks()[0];
  int fs = static_cast<int>(fiber.size());
  std::vector<int> pos(e.order(), -1);
  for (int i = 0; i < fs; ++i) pos[fiber[i]] = i;
  const std::vector<Perm>& nel = n.elements();
  std::vector<const Perm*> shift(fs, nullptr);
  for (int i = 0; i < fs; ++i) {
    for (const Perm& f : nel)
      if (f(0) == fiber[i]) {
        shift[i] = &f;
        break;
      }
    if (!shift[i]) throw std::logic_error("N is not transitive on the block of 0");
  }
  std::vector<std::vector<int>> plus(fs, std::vector<int>(fs));
  for (int i = 0; i < fs; ++i)
    for (int j = 0; j < fs; ++j) plus[i][j] = pos[(*shift[i])(fiber[j])];
  int zero = pos[0];
  for (int i = 0; i < fs; ++i) {
    if (plus[zero][i] != i || plus[i][zero] != i)
      throw std::logic_error("block group structure has no identity");
    for (int j = 0; j < fs; ++j) {
      if (plus[i][j] != plus[j][i]) throw std::logic_error("block group structure is not commutative");
      for (int l = 0; l < fs; ++l)
        if (plus[plus[i][j]][l] != plus[i][plus[j][l]])
          throw std::logic_error("block group structure is not associative");
    }
  }

  std::vector<int> basis, moduli;
  abelian_basis(plus, zero, basis, moduli);
  if (moduli.empty()) moduli.push_back(1);
  std::size_t k = moduli.size();
  std::vector<std::vector<int>> coords(fs);
  {
    std::vector<std::vector<int>> multiples(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      int y = zero;
      for (int t = 0; t < moduli[i]; ++t) {
        multiples[i].push_back(y);
        y = plus[y][basis[i]];
      }
    }
    std::vector<char> seen(fs, 0);
    int tuples = fiber_size(moduli);
    for (int idx = 0; idx < tuples; ++idx) {
      std::vector<int> v = unpack(idx, moduli);
      int elt = zero;
      for (std::size_t i = 0; i < basis.size(); ++i) elt = plus[elt][multiples[i][v[i]]];
      if (seen[elt]) throw std::logic_error("abelian basis is not independent");
      seen[elt] = 1;
      coords[elt] = v;
    }
    if (tuples != fs) throw std::logic_error("abelian basis does not span the block");
  }

  const Perm& l0 = e.translation(0);
  std::vector<int> psi_pos(fs);
  for (int i = 0; i < fs; ++i) {
    int y = l0(fiber[i]);
    if (pos[y] < 0) throw std::logic_error("the translation by 0 leaves its block");
    psi_pos[i] = pos[y];
  }
  Matrix psi_m(k, std::vector<int>(k, 0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const std::vector<int>& col = coords[psi_pos[basis[j]]];
    for (std::size_t i = 0; i < k; ++i) psi_m[i][j] = col[i];
  }
  for (int i = 0; i < fs; ++i)
    if (!vector_eq(coords[psi_pos[i]], apply_matrix(psi_m, coords[i], moduli), moduli))
      throw std::logic_error("the translation by 0 is not additive on the block");
  Matrix phi_m(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      phi_m[i][j] = modnorm((i == j ? 1 : 0) - psi_m[i][j], moduli[i]);

  int blocks = quot.algebra.order();
  std::vector<Perm> trans(blocks);
  std::vector<char> have(blocks, 0);
  std::vector<Perm> steps = d.generators();
  {
    std::size_t g = steps.size();
    for (std::size_t i = 0; i < g; ++i) steps.push_back(steps[i].inverse());
  }
  std::vector<std::vector<int>> block_members = alpha.blocks();
  std::queue<int> bfs;
  trans[0] = Perm::identity(e.order());
  have[0] = 1;
  bfs.push(0);
  while (!bfs.empty()) {
    int cur = bfs.front();
    bfs.pop();
    for (const Perm& g : steps) {
      int nb = alpha.block_of(g(block_members[cur][0]));
      if (!have[nb]) {
        trans[nb] = g * trans[cur];
        have[nb] = 1;
        bfs.push(nb);
      }
    }
  }
  for (int b = 0; b < blocks; ++b)
    if (!have[b]) throw std::logic_error("transversal search failed on a connected quotient");

  std::size_t np = static_cast<std::size_t>(blocks) * blocks;
  ExtensionData data{quot.algebra, moduli, std::vector<std::vector<std::vector<int>>>(np, phi_m),
                     std::vector<std::vector<std::vector<int>>>(np, psi_m),
                     std::vector<std::vector<int>>(np), true};
  for (int a = 0; a < blocks; ++a)
    for (int b = 0; b < blocks; ++b) {
      int z = e.mul(trans[a](0), trans[b](0));
      int w = trans[quot.algebra.mul(a, b)].inverse()(z);
      if (pos[w] < 0) throw std::logic_error("the dynamical cocycle leaves the block of 0");
      data.theta[static_cast<std::size_t>(a) * blocks + b] = coords[pos[w]];
    }

  Extension ext = [&] {
    try {
      return abelian_extension(data);
    } catch (const std::invalid_argument& err) {
      throw std::logic_error(std::string("reconstructed extension data failed validation: ") + err.what());
    }
  }();

  int tuples = fiber_size(moduli);
  std::vector<int> iso(e.order());
  std::vector<char> hit(e.order(), 0);
  for (int x = 0; x < e.order(); ++x) {
    int b = quot.block_of[x];
    int w = trans[b].inverse()(x);
    if (pos[w] < 0) throw std::logic_error("a transversal fails to map its block onto the block of 0");
    iso[x] = b * tuples + pack(coords[pos[w]], moduli);
    if (hit[iso[x]]) throw std::logic_error("central reconstruction map is not injective");
    hit[iso[x]] = 1;
  }
  for (int x = 0; x < e.order(); ++x)
    for (int y = 0; y < e.order(); ++y)
      if (ext.algebra.mul(iso[x], iso[y]) != iso[e.mul(x, y)])
        throw std::logic_error("central reconstruction isomorphism failed");
  return {data, iso};
}

std::vector<Q4ModuleSolution> q4_z7_module_search() {
  static const int mul[4][4] = {{0, 2, 3, 1}, {3, 1, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}};
  std::vector<Q4ModuleSolution> out;
  for (int lambda = 1; lambda < 7; ++lambda)
    for (int k = 1; k < 7; ++k)
      for (int l = 1; l < 7; ++l)
        for (int code = 0; code < 7 * 7 * 7 * 7; ++code) {
          std::array<int, 4> nu{};
          int rest = code;
          for (int i = 3; i >= 0; --i) {
            nu[i] = rest % 7;
            rest /= 7;
          }
          int d = modnorm(1 - lambda, 7);
          int nm[4][4] = {{d, nu[0], nu[0], nu[0]},
                          {nu[1], d, nu[2], nu[3]},
                          {nu[1], nu[3], d, nu[2]},
                          {nu[1], nu[2], nu[3], d}};
          int em[4][4] = {{lambda, lambda, lambda, lambda},
                         {lambda, lambda, k, l},
                         {lambda, l, lambda, k},
                         {lambda, k, l, lambda}};
          bool ok = true;
          for (int a = 0; a < 4 && ok; ++a)
            for (int b = 0; b < 4 && ok; ++b)
              for (int c = 0; c < 4 && ok; ++c) {
                int bc = mul[b][c], ab = mul[a][b], ac = mul[a][c];
                if (modnorm(em[a][bc] * em[b][c] - em[ab][ac] * em[a][c], 7) != 0 ||
                    modnorm(em[a][bc] * nm[b][c] - nm[ab][ac] * em[a][b], 7) != 0 ||
                    modnorm(nm[a][bc] - (nm[ab][ac] * nm[a][b] + em[ab][ac] * nm[a][c]), 7) != 0)
                  ok = false;
              }
          for (int a = 0; a < 4 && ok; ++a)
            if (modnorm(nm[a][a] + em[a][a] - 1, 7) != 0) ok = false;
          if (ok) out.push_back({lambda, k, l, nu});
        }
  return out;
}

} // namespace raq
