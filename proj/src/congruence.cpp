#include "raq/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace raq {

namespace {

struct MergeClosure {
  std::vector<int> parent;
  std::vector<std::pair<int, int>> work;

  explicit MergeClosure(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    work.emplace_back(x, y);
  }

  Partition partition() {
    std::vector<int> ids(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i) ids[i] = find(static_cast<int>(i));
    return Partition(std::move(ids));
  }
};

void close_under_compatibility(const LeftQuasigroup& q, MergeClosure& mc) {
  int n = q.order();
  while (!mc.work.empty()) {
    auto [x, y] = mc.work.back();
    mc.work.pop_back();
    for (int z = 0; z < n; ++z) {
      mc.unite(q.mul(x, z), q.mul(y, z));
      mc.unite(q.mul(z, x), q.mul(z, y));
      mc.unite(q.ldiv(x, z), q.ldiv(y, z));
      mc.unite(q.ldiv(z, x), q.ldiv(z, y));
    }
  }
}

std::vector<std::pair<int, int>> block_pairs(const Partition& alpha) {
  std::vector<std::pair<int, int>> out;
  for (const auto& block : alpha.blocks())
    for (std::size_t i = 1; i < block.size(); ++i) out.emplace_back(block[0], block[i]);
  return out;
}

std::string law_violation(const std::string& what, const Partition* alpha,
                          const Partition* beta, std::size_t n_index, bool has_n) {
  std::string s = what;
  if (alpha) s += " alpha=" + alpha->to_string();
  if (beta) s += " beta=" + beta->to_string();
  if (has_n) s += " N=#" + std::to_string(n_index);
  return s;
}

} // namespace

Partition principal_congruence(const LeftQuasigroup& q, int a, int b) {
  int n = q.order();
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("element out of range");
  MergeClosure mc(n);
  mc.unite(a, b);
  close_under_compatibility(q, mc);
  return mc.partition();
}

std::vector<Partition> congruence_lattice(const LeftQuasigroup& q, int max_order) {
  int n = q.order();
  if (n > max_order) throw std::length_error("order exceeds the congruence lattice bound");

  std::map<std::vector<int>, Partition> seen;
  std::vector<Partition> out;
  auto add = [&](Partition p) {
    if (seen.emplace(p.ids(), p).second) out.push_back(std::move(p));
  };

  add(Partition::singletons(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) add(principal_congruence(q, a, b));

  // Join-closure; the transitive closure of a union of congruences is again
  // a congruence, so Partition::join stays inside Con(Q).
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(out[i].join(out[j]));

  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return a.ids() < b.ids();
  });
  return out;
}

PermGroup dis_rel(const LeftQuasigroup& q, const Partition& alpha) {
  if (alpha.size() != q.order()) throw std::invalid_argument("partition size mismatch");
  if (!is_congruence(q, alpha)) throw std::invalid_argument("not a congruence");
  std::vector<Perm> gens;
  for (auto [a, b] : block_pairs(alpha))
    gens.push_back(q.translation(a) * q.translation(b).inverse());
  if (q.is_rack()) {
    PermGroup g(q.order(), std::move(gens));
    if (!g.is_normal_in(lmlt(q)))
      throw std::logic_error("Dis_alpha is not normal in LMlt on a rack");
    return g;
  }
  return normal_closure(lmlt(q), gens);
}

PermGroup dis_ker(const LeftQuasigroup& q, const Partition& alpha) {
  if (alpha.size() != q.order()) throw std::invalid_argument("partition size mismatch");
  return action_kernel_on_blocks(dis(q), alpha);
}

Partition con_of(const LeftQuasigroup& q, const PermGroup& n) {
  if (!q.is_rack()) throw std::invalid_argument("con N is defined for racks");
  if (!n.is_subgroup_of(dis(q))) throw std::invalid_argument("N is not a subgroup of Dis");
  if (!n.is_normal_in(lmlt(q))) throw std::invalid_argument("N is not normal in LMlt");

  int size = q.order();
  std::vector<int> ids(size, -1);
  std::vector<int> reps;
  for (int a = 0; a < size; ++a) {
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (n.contains(q.translation(a) * q.translation(reps[r]).inverse())) {
        ids[a] = static_cast<int>(r);
        break;
      }
    if (ids[a] < 0) {
      ids[a] = static_cast<int>(reps.size());
      reps.push_back(a);
    }
  }
  Partition p(std::move(ids));
  if (!is_congruence(q, p)) throw std::logic_error("con N failed to be a congruence on a rack");
  return p;
}

Partition orbit_congruence(const LeftQuasigroup& q, const PermGroup& n) {
  if (n.degree() != q.order()) throw std::invalid_argument("degree mismatch");
  if (!n.is_normal_in(lmlt(q))) throw std::invalid_argument("N is not normal in LMlt");
  Partition p = n.orbit_partition();
  if (!is_congruence(q, p)) throw std::logic_error("O_N failed to be a congruence");
  return p;
}

std::vector<PermGroup> norm_subgroups(const LeftQuasigroup& q) {
  return all_normal_subgroups(dis(q), lmlt(q));
}

bool is_cdsg(const LeftQuasigroup& q, std::vector<std::string>* evidence) {
  bool ok = true;
  for (const Partition& alpha : congruence_lattice(q)) {
    if (!dis_rel(q, alpha).same_group(dis_ker(q, alpha))) {
      ok = false;
      if (evidence) evidence->push_back("Dis_alpha != Dis^alpha for alpha=" + alpha.to_string());
    }
    if (!is_faithful(quotient(q, alpha).algebra)) {
      ok = false;
      if (evidence) evidence->push_back("Q/alpha not faithful for alpha=" + alpha.to_string());
    }
  }
  return ok;
}

GaloisAudit galois_audit(const LeftQuasigroup& q) {
  if (!q.is_rack()) throw std::invalid_argument("the galois audit requires a rack");

  GaloisAudit audit;
  audit.congruences = congruence_lattice(q);
  audit.norm = norm_subgroups(q);
  const auto& cons = audit.congruences;
  const auto& norm = audit.norm;
  std::size_t nc = cons.size(), nn = norm.size();

  std::vector<PermGroup> dis_lo(nc), dis_hi(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    dis_lo[i] = dis_rel(q, cons[i]);
    dis_hi[i] = dis_ker(q, cons[i]);
  }
  std::vector<Partition> con_n(nn), orb_n(nn);
  for (std::size_t j = 0; j < nn; ++j) {
    con_n[j] = con_of(q, norm[j]);
    orb_n[j] = orbit_congruence(q, norm[j]);
  }
  std::map<std::vector<int>, std::size_t> con_index;
  for (std::size_t i = 0; i < nc; ++i) con_index[cons[i].ids()] = i;

  PermGroup ml = lmlt(q);
  audit.laws.assign(8, {});
  auto fail = [&](int law, std::string msg) {
    audit.laws[law].holds = false;
    if (audit.laws[law].violations.size() < 5)
      audit.laws[law].violations.push_back(std::move(msg));
  };
  audit.laws[0].name = "(i) Dis_a <= N iff a <= con N";
  audit.laws[1].name = "(ii) a <= con Dis_a";
  audit.laws[2].name = "(iii) Dis_{con N} <= N <= Dis^{con N}";
  audit.laws[3].name = "(iv) kernel meets and relative joins";
  audit.laws[4].name = "(v) [Dis^a, LMlt] <= Dis_a";
  audit.laws[5].name = "(vi) O_N <= con N";
  audit.laws[6].name = "(vii) Q/a faithful iff a = con Dis^a";
  audit.laws[7].name = "(viii) CDSg characterizations agree";

  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nn; ++j)
      if (dis_lo[i].is_subgroup_of(norm[j]) != cons[i].leq(con_n[j]))
        fail(0, law_violation("galois property fails", &cons[i], nullptr, j, true));

  for (std::size_t i = 0; i < nc; ++i)
    if (!cons[i].leq(con_of(q, dis_lo[i])))
      fail(1, law_violation("closure fails", &cons[i], nullptr, 0, false));

  for (std::size_t j = 0; j < nn; ++j) {
    std::size_t i = con_index.at(con_n[j].ids());
    if (!dis_lo[i].is_subgroup_of(norm[j]) || !norm[j].is_subgroup_of(dis_hi[i]))
      fail(2, law_violation("kernel sandwich fails", nullptr, nullptr, j, true));
  }

  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      std::size_t mi = con_index.at(cons[i].meet(cons[j]).ids());
      std::size_t ji = con_index.at(cons[i].join(cons[j]).ids());
      if (!dis_hi[mi].same_group(intersection(dis_hi[i], dis_hi[j])))
        fail(3, law_violation("kernel meet fails", &cons[i], &cons[j], 0, false));
      if (!dis_lo[ji].same_group(subgroup_join(dis_lo[i], dis_lo[j])))
        fail(3, law_violation("relative join fails", &cons[i], &cons[j], 0, false));
    }

  for (std::size_t i = 0; i < nc; ++i)
    if (!commutator_subgroup(dis_hi[i], ml, ml).is_subgroup_of(dis_lo[i]))
      fail(4, law_violation("commutator bound fails", &cons[i], nullptr, 0, false));

  for (std::size_t j = 0; j < nn; ++j)
    if (!orb_n[j].leq(con_n[j]))
      fail(5, law_violation("orbit bound fails", nullptr, nullptr, j, true));

  for (std::size_t i = 0; i < nc; ++i) {
    bool faithful_factor = is_faithful(quotient(q, cons[i]).algebra);
    bool fixed = cons[i] == con_of(q, dis_hi[i]);
    if (faithful_factor != fixed)
      fail(6, law_violation("faithful-quotient criterion fails", &cons[i], nullptr, 0, false));
  }

  // (viii): lattice-isomorphism reading of CDSg versus the two conditions.
  bool mutually_inverse = true;
  for (std::size_t i = 0; i < nc && mutually_inverse; ++i)
    if (!(con_of(q, dis_lo[i]) == cons[i])) mutually_inverse = false;
  for (std::size_t j = 0; j < nn && mutually_inverse; ++j) {
    std::size_t i = con_index.at(con_n[j].ids());
    if (!dis_lo[i].same_group(norm[j])) mutually_inverse = false;
  }
  audit.cdsg = is_cdsg(q);
  if (mutually_inverse != audit.cdsg)
    fail(7, std::string("lattice isomorphism ") + (mutually_inverse ? "holds" : "fails") +
                " but conditions say " + (audit.cdsg ? "CDSg" : "not CDSg"));

  for (const auto& law : audit.laws)
    if (!law.holds) audit.all_hold = false;
  return audit;
}

} // namespace raq
