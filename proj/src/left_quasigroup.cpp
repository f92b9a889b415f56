#include "raq/left_quasigroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace raq {

LeftQuasigroup LeftQuasigroup::from_table(const std::vector<std::vector<int>>& mult) {
  int n = static_cast<int>(mult.size());
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  LeftQuasigroup q;
  q.n_ = n;
  q.mult_.assign(static_cast<std::size_t>(n) * n, -1);
  q.ldiv_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mult[a].size()) != n)
      throw std::invalid_argument("row " + std::to_string(a + 1) + " has wrong length");
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
      int v = mult[a][b];
      if (v < 0 || v >= n)
        throw std::invalid_argument("entry out of range in row " + std::to_string(a + 1));
      if (seen[v])
        throw std::invalid_argument("row " + std::to_string(a + 1) +
                                    " is not a permutation: value " +
                                    std::to_string(v + 1) + " repeats");
      seen[v] = 1;
      q.mult_[a * n + b] = v;
      q.ldiv_[a * n + v] = b;
    }
    q.trans_.emplace_back(std::vector<int>(mult[a]));
  }
  return q;
}

std::vector<std::vector<int>> LeftQuasigroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

bool LeftQuasigroup::operator==(const LeftQuasigroup& o) const {
  return n_ == o.n_ && mult_ == o.mult_;
}

bool LeftQuasigroup::is_rack() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      const Perm& lc = trans_[mul(a, b)];
      for (int z = 0; z < n_; ++z)
        if (mul(a, mul(b, z)) != lc(mul(a, z))) return false;
    }
  return true;
}

bool LeftQuasigroup::is_quandle() const {
  for (int a = 0; a < n_; ++a)
    if (mul(a, a) != a) return false;
  return is_rack();
}

bool LeftQuasigroup::is_involutory() const {
  for (const Perm& t : trans_)
    if (!t.is_involution()) return false;
  return true;
}

bool LeftQuasigroup::is_latin() const {
  for (int b = 0; b < n_; ++b) {
    std::vector<char> seen(n_, 0);
    for (int a = 0; a < n_; ++a) {
      int v = mul(a, b);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

bool LeftQuasigroup::is_medial() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
          if (mul(mul(x, y), mul(u, v)) != mul(mul(x, u), mul(y, v))) return false;
  return true;
}

bool LeftQuasigroup::is_class_c() const {
  // Both defining identities are equivalent to
  // L_{a*b} = L_a^-1 L_b^-1 L_a for all a, b.
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      int c = mul(a, b);
      for (int z = 0; z < n_; ++z)
        if (mul(b, mul(a, mul(c, z))) != mul(a, z)) return false;
    }
  return true;
}

PermGroup lmlt(const LeftQuasigroup& q) {
  return PermGroup(q.order(), q.translations());
}

PermGroup dis(const LeftQuasigroup& q) {
  std::vector<Perm> gens;
  Perm l0_inv = q.translation(0).inverse();
  for (int a = 1; a < q.order(); ++a) gens.push_back(q.translation(a) * l0_inv);
  return PermGroup(q.order(), std::move(gens));
}

Partition cayley_kernel(const LeftQuasigroup& q) {
  std::map<Perm, int> row_label;
  std::vector<int> id(q.order());
  for (int a = 0; a < q.order(); ++a) {
    auto it = row_label.try_emplace(q.translation(a),
                                    static_cast<int>(row_label.size())).first;
    id[a] = it->second;
  }
  return Partition(std::move(id));
}

Partition sigma_partition(const LeftQuasigroup& q) {
  int n = q.order();
  PermGroup d = dis(q);
  std::vector<PermGroup> stabs;
  stabs.reserve(n);
  for (int a = 0; a < n; ++a) stabs.push_back(d.stabilizer(a));
  std::vector<int> id(n, -1);
  int next = 0;
  for (int a = 0; a < n; ++a) {
    if (id[a] >= 0) continue;
    id[a] = next;
    for (int b = a + 1; b < n; ++b)
      if (id[b] < 0 && stabs[a].order() == stabs[b].order() &&
          stabs[a].is_subgroup_of(stabs[b]))
        id[b] = next;
    ++next;
  }
  return Partition(std::move(id));
}

Partition orbit_partition(const LeftQuasigroup& q) { return dis(q).orbit_partition(); }

bool is_connected(const LeftQuasigroup& q) {
  return lmlt(q).orbit_partition().is_all();
}

bool is_faithful(const LeftQuasigroup& q) { return cayley_kernel(q).is_singletons(); }

StructureReport structure_report(const LeftQuasigroup& q) {
  StructureReport r;
  r.order = q.order();
  r.is_rack = q.is_rack();
  r.is_quandle = r.is_rack && q.is_quandle();
  r.is_involutory = q.is_involutory();
  r.is_latin = q.is_latin();
  r.is_medial = q.is_medial();
  r.is_class_c = q.is_class_c();
  r.cayley_kernel = cayley_kernel(q);
  r.is_faithful = r.cayley_kernel.is_singletons();
  r.is_connected = is_connected(q);
  r.lmlt_order = lmlt(q).order();
  PermGroup d = dis(q);
  r.dis_order = d.order();
  r.sigma = sigma_partition(q);
  r.orbits = d.orbit_partition();
  if (r.is_rack && r.is_medial != d.is_abelian())
    throw std::logic_error("mediality and Dis commutativity disagree on a rack");
  return r;
}

bool is_congruence(const LeftQuasigroup& q, const Partition& p) {
  int n = q.order();
  if (p.size() != n) throw std::invalid_argument("partition size mismatch");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!p.same_block(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!p.same_block(q.mul(c, a), q.mul(c, b))) return false;
        if (!p.same_block(q.mul(a, c), q.mul(b, c))) return false;
        if (!p.same_block(q.ldiv(c, a), q.ldiv(c, b))) return false;
        if (!p.same_block(q.ldiv(a, c), q.ldiv(b, c))) return false;
      }
    }
  return true;
}

Quotient quotient(const LeftQuasigroup& q, const Partition& alpha) {
  if (!is_congruence(q, alpha))
    throw std::invalid_argument("partition is not a congruence: " + alpha.to_string());
  auto blocks = alpha.blocks();
  int k = alpha.block_count();
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i][j] = alpha.block_of(q.mul(blocks[i][0], blocks[j][0]));
  Quotient out{LeftQuasigroup::from_table(t), alpha.ids()};
  return out;
}

LeftQuasigroup direct_product(const LeftQuasigroup& a, const LeftQuasigroup& b) {
  int n1 = a.order(), n2 = b.order(), n = n1 * n2;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = 0; x2 < n2; ++x2)
      for (int y1 = 0; y1 < n1; ++y1)
        for (int y2 = 0; y2 < n2; ++y2)
          t[x1 * n2 + x2][y1 * n2 + y2] = a.mul(x1, y1) * n2 + b.mul(x2, y2);
  return LeftQuasigroup::from_table(t);
}

Subalgebra subalgebra_generated(const LeftQuasigroup& q, const std::vector<int>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generating set");
  int n = q.order();
  std::vector<char> in(n, 0);
  std::vector<int> work;
  for (int g : gens) {
    if (g < 0 || g >= n) throw std::invalid_argument("generator out of range");
    if (!in[g]) {
      in[g] = 1;
      work.push_back(g);
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) {
      for (int v : {q.mul(work[i], work[j]), q.ldiv(work[i], work[j])})
        if (!in[v]) {
          in[v] = 1;
          work.push_back(v);
        }
    }
  std::vector<int> emb;
  for (int x = 0; x < n; ++x)
    if (in[x]) emb.push_back(x);
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < emb.size(); ++i) pos[emb[i]] = static_cast<int>(i);
  int k = static_cast<int>(emb.size());
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i][j] = pos[q.mul(emb[i], emb[j])];
  return Subalgebra{LeftQuasigroup::from_table(t), std::move(emb)};
}

namespace {

struct ElementSignature {
  bool idempotent;
  std::vector<int> cycle_type;
  int column_fixed;
  auto operator<=>(const ElementSignature&) const = default;
};

std::vector<ElementSignature> signatures(const LeftQuasigroup& q) {
  int n = q.order();
  std::vector<ElementSignature> sig(n);
  for (int a = 0; a < n; ++a) {
    sig[a].idempotent = q.mul(a, a) == a;
    sig[a].cycle_type = q.translation(a).cycle_type();
    sig[a].column_fixed = 0;
    for (int x = 0; x < n; ++x)
      if (q.mul(x, a) == x) ++sig[a].column_fixed;
  }
  return sig;
}

bool extend_isomorphism(const LeftQuasigroup& q1, const LeftQuasigroup& q2,
                        std::vector<int>& phi, std::vector<char>& used,
                        const std::vector<ElementSignature>& s1,
                        const std::vector<ElementSignature>& s2) {
  int n = q1.order();
  int a = -1;
  for (int i = 0; i < n; ++i)
    if (phi[i] < 0) { a = i; break; }
  if (a < 0) return true;

  for (int b = 0; b < n; ++b) {
    if (used[b] || s1[a] != s2[b]) continue;
    std::vector<int> phi2 = phi;
    std::vector<char> used2 = used;
    phi2[a] = b;
    used2[b] = 1;
    // Close under products until stable.
    bool ok = true, changed = true;
    while (ok && changed) {
      changed = false;
      for (int i = 0; i < n && ok; ++i) {
        if (phi2[i] < 0) continue;
        for (int j = 0; j < n; ++j) {
          if (phi2[j] < 0) continue;
          int src = q1.mul(i, j), dst = q2.mul(phi2[i], phi2[j]);
          if (phi2[src] < 0) {
            if (used2[dst]) { ok = false; break; }
            phi2[src] = dst;
            used2[dst] = 1;
            changed = true;
          } else if (phi2[src] != dst) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok && extend_isomorphism(q1, q2, phi2, used2, s1, s2)) {
      phi = phi2;
      return true;
    }
  }
  return false;
}

} // namespace

std::optional<std::vector<int>> isomorphism(const LeftQuasigroup& q1,
                                            const LeftQuasigroup& q2) {
  if (q1.order() != q2.order()) return std::nullopt;
  auto s1 = signatures(q1), s2 = signatures(q2);
  auto m1 = s1, m2 = s2;
  std::sort(m1.begin(), m1.end());
  std::sort(m2.begin(), m2.end());
  if (m1 != m2) return std::nullopt;
  std::vector<int> phi(q1.order(), -1);
  std::vector<char> used(q1.order(), 0);
  if (extend_isomorphism(q1, q2, phi, used, s1, s2)) return phi;
  return std::nullopt;
}

namespace {

/*
 * Search over relabellings psi (new label -> old element) for a table that
 * is row-major lexicographically smaller than `best`.  Partial assignments
 * are pruned with the computable prefix of row 0: an entry whose old element
 * has no label yet will receive a label > k after k+1 assignments.
 */
struct CanonicalSearch {
  int n;
  const std::vector<int>& t;
  std::vector<int> best;
  bool test_only;
  bool improved = false;
  std::vector<int> psi, pi;

  CanonicalSearch(int n_, const std::vector<int>& flat, bool test_only_)
      : n(n_), t(flat), best(flat), test_only(test_only_), psi(n_, -1), pi(n_, -1) {}

  bool prefix_allows(int k) const {
    for (int j = 0; j <= k; ++j) {
      int e = t[psi[0] * n + psi[j]];
      int bestv = best[j];
      if (pi[e] >= 0) {
        if (pi[e] < bestv) return true;
        if (pi[e] > bestv) return false;
      } else {
        // unknown entry, eventual label >= k+1
        if (k + 1 > bestv) return false;
        return true;
      }
    }
    return true;
  }

  void at_leaf() {
    std::vector<int> cand(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cand[i * n + j] = pi[t[psi[i] * n + psi[j]]];
    if (cand < best) {
      improved = true;
      if (!test_only) best = std::move(cand);
    }
  }

  void rec(int k) {
    if (test_only && improved) return;
    if (k == n) {
      at_leaf();
      return;
    }
    for (int o = 0; o < n; ++o) {
      if (pi[o] >= 0) continue;
      psi[k] = o;
      pi[o] = k;
      if (prefix_allows(k)) rec(k + 1);
      pi[o] = -1;
      psi[k] = -1;
      if (test_only && improved) return;
    }
  }
};

} // namespace

LeftQuasigroup canonical_form(const LeftQuasigroup& q) {
  CanonicalSearch s(q.order(), q.flat(), false);
  s.rec(0);
  // Repeat until a fixpoint: pruning is relative to the running best, so one
  // pass already yields the global minimum, but re-run defensively.
  while (s.improved) {
    CanonicalSearch again(q.order(), s.best, false);
    again.rec(0);
    if (!again.improved) break;
    s.best = again.best;
  }
  int n = q.order();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = s.best[i * n + j];
  return LeftQuasigroup::from_table(rows);
}

bool is_canonical_table(const std::vector<int>& flat, int n) {
  CanonicalSearch s(n, flat, true);
  s.rec(0);
  return !s.improved;
}

} // namespace raq
