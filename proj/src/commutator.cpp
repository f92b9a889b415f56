#include "raq/commutator.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "raq/congruence.hpp"
#include "raq/constructions.hpp"

namespace raq {

namespace {

void check_congruence_arg(const LeftQuasigroup& q, const Partition& alpha) {
  if (alpha.size() != q.order())
    throw std::invalid_argument("partition size does not match the algebra");
  if (!is_congruence(q, alpha)) throw std::invalid_argument("the partition is not a congruence");
}

void check_ltt(const LeftQuasigroup& q, bool allow_non_ltt) {
  if (!q.is_rack() && !q.is_class_c() && !allow_non_ltt)
    throw std::invalid_argument("the displacement criterion needs a rack or a class-C algebra");
}

} // namespace

bool semiregular(const PermGroup& g, const Partition& alpha, std::uint64_t limit) {
  if (g.degree() != alpha.size())
    throw std::invalid_argument("partition size does not match the degree");
  const std::vector<Perm>& els = g.elements(limit);
  std::vector<std::vector<int>> blocks = alpha.blocks();
  for (const Perm& p : els)
    for (const std::vector<int>& blk : blocks) {
      int fixed = 0;
      for (int x : blk)
        if (p(x) == x) ++fixed;
      if (fixed != 0 && fixed != static_cast<int>(blk.size())) return false;
    }
  return true;
}

bool is_abelian_congruence(const LeftQuasigroup& q, const Partition& alpha,
                           bool allow_non_ltt) {
  check_congruence_arg(q, alpha);
  check_ltt(q, allow_non_ltt);
  PermGroup da = dis_rel(q, alpha);
  if (!da.is_abelian()) return false;
  if (q.is_quandle() && is_faithful(q)) return true;
  return semiregular(da, alpha);
}

bool is_central_congruence(const LeftQuasigroup& q, const Partition& alpha,
                           bool allow_non_ltt) {
  check_congruence_arg(q, alpha);
  check_ltt(q, allow_non_ltt);
  PermGroup d = dis(q);
  PermGroup da = dis_rel(q, alpha);
  if (!da.is_subgroup_of(center(d))) return false;
  if (q.is_quandle() && is_faithful(q)) return true;
  return semiregular(d, alpha);
}

Partition center_congruence(const LeftQuasigroup& q) {
  if (!q.is_rack()) throw std::invalid_argument("the center is defined here for racks only");
  int n = q.order();
  Partition sigma = sigma_partition(q);
  Partition route1 = con_of(q, center(dis(q))).meet(sigma);

  std::vector<std::vector<char>> med(n, std::vector<char>(n, 1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < a; ++b) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u)
        for (int v = 0; v < n && ok; ++v)
          if (q.mul(q.mul(u, a), q.mul(b, v)) != q.mul(q.mul(u, b), q.mul(a, v))) ok = false;
      med[a][b] = med[b][a] = ok ? 1 : 0;
    }
  std::vector<int> id(n, -1);
  int next = 0;
  for (int a = 0; a < n; ++a) {
    if (id[a] >= 0) continue;
    std::queue<int> bq;
    bq.push(a);
    id[a] = next;
    while (!bq.empty()) {
      int x = bq.front();
      bq.pop();
      for (int y = 0; y < n; ++y)
        if (med[x][y] && id[y] < 0) {
          id[y] = next;
          bq.push(y);
        }
    }
    ++next;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((id[a] == id[b]) != (med[a][b] != 0))
        throw std::logic_error("the mediation relation is not transitive");
  Partition route2 = Partition(std::move(id)).meet(sigma);
  if (!(route1 == route2)) throw std::logic_error("center routes disagree");
  return route1;
}

Partition commutator_pair(const LeftQuasigroup& q, const Partition& alpha,
                          const Partition& beta, int max_order) {
  check_congruence_arg(q, alpha);
  check_congruence_arg(q, beta);
  check_ltt(q, false);
  std::vector<Partition> lat = congruence_lattice(q, max_order);

  bool faithful_factors = q.is_rack();
  if (faithful_factors)
    for (const Partition& delta : lat)
      if (!is_faithful(quotient(q, delta).algebra)) {
        faithful_factors = false;
        break;
      }

  if (faithful_factors) {
    PermGroup lm = lmlt(q);
    PermGroup da = dis_rel(q, alpha);
    PermGroup db = dis_rel(q, beta);
    PermGroup comm = commutator_subgroup(da, db, lm);
    if (!comm.same_group(commutator_subgroup(db, da, lm)))
      throw std::logic_error("the commutator subgroup is not symmetric");
    Partition gamma = con_of(q, comm);
    if (!(orbit_congruence(q, comm) == gamma))
      throw std::logic_error("commutator congruence differs from the orbit congruence on faithful factors");
    if (!gamma.leq(alpha.meet(beta))) throw std::logic_error("the commutator exceeds the meet");
    return gamma;
  }

  Partition target = alpha.meet(beta);
  auto passes = [&](const Partition& delta) {
    Quotient qt = quotient(q, delta);
    std::vector<std::vector<int>> blocks = delta.blocks();
    int m = qt.algebra.order();
    std::vector<int> aid(m), bid(m);
    for (int i = 0; i < m; ++i) {
      aid[i] = alpha.block_of(blocks[i][0]);
      bid[i] = beta.block_of(blocks[i][0]);
    }
    Partition ad{std::move(aid)}, bd{std::move(bid)};
    PermGroup dad = dis_rel(qt.algebra, ad);
    PermGroup dbd = dis_rel(qt.algebra, bd);
    if (!commutator_subgroup(dad, dbd, lmlt(qt.algebra)).is_trivial()) return false;
    return semiregular(dbd, ad);
  };
  std::vector<const Partition*> passers;
  for (const Partition& delta : lat)
    if (delta.leq(target) && passes(delta)) passers.push_back(&delta);
  if (passers.empty()) throw std::logic_error("no congruence satisfies the quotient condition");
  Partition result = *passers[0];
  for (std::size_t i = 1; i < passers.size(); ++i) result = result.meet(*passers[i]);
  if (!passes(result))
    throw std::logic_error("the meet of the passing congruences fails the condition");
  return result;
}

SolvabilityReport solvability_report(const LeftQuasigroup& q, int max_order) {
  if (!q.is_rack()) throw std::invalid_argument("solvability is defined here for racks only");
  SolvabilityReport r;
  GroupSeriesReport g = series_report(dis(q));
  r.group_solvable = g.solvable;
  r.group_nilpotent = g.nilpotent;
  r.group_solv_len = g.derived_length;
  r.group_nilp_len = g.nilpotency_class;

  int n = q.order();
  try {
    Partition top = Partition::all(n);
    Partition cur = top;
    int steps = 0;
    r.quandle_solvable = false;
    while (true) {
      if (cur.is_singletons()) {
        r.quandle_solvable = true;
        r.quandle_solv_len = steps;
        break;
      }
      if (steps > n) break;
      Partition nxt = commutator_pair(q, cur, cur, max_order);
      if (nxt == cur) break;
      cur = nxt;
      ++steps;
    }
    cur = top;
    steps = 0;
    r.quandle_nilpotent = false;
    while (true) {
      if (cur.is_singletons()) {
        r.quandle_nilpotent = true;
        r.quandle_nilp_len = steps;
        break;
      }
      if (steps > n) break;
      Partition nxt = commutator_pair(q, cur, top, max_order);
      if (nxt == cur) break;
      cur = nxt;
      ++steps;
    }
    r.chain_route_used = true;
  } catch (const std::length_error&) {
    r.chain_route_used = false;
    r.quandle_solvable = r.group_solvable;
    r.quandle_nilpotent = r.group_nilpotent;
    r.quandle_solv_len = -1;
    r.quandle_nilp_len = -1;
  }

  if (r.chain_route_used) {
    if (r.quandle_solvable != r.group_solvable)
      throw std::logic_error("solvability routes disagree");
    if (r.quandle_nilpotent != r.group_nilpotent)
      throw std::logic_error("nilpotence routes disagree");
    if (r.quandle_solvable && r.quandle_solv_len >= 1 &&
        r.group_solv_len > 2 * r.quandle_solv_len - 1)
      throw std::logic_error("derived length bound violated");
    if (r.quandle_solvable && r.quandle_solv_len > r.group_solv_len + 1)
      throw std::logic_error("solvable length bound violated");
    if (r.quandle_nilpotent && r.quandle_nilp_len >= 1 &&
        r.group_nilp_len > 2 * r.quandle_nilp_len - 1)
      throw std::logic_error("nilpotency class bound violated");
    if (r.quandle_nilpotent && r.quandle_nilp_len > r.group_nilp_len + 1)
      throw std::logic_error("nilpotence length bound violated");
  }
  return r;
}

namespace {

PrimeDecomposition decompose_at(const LeftQuasigroup& q, int e) {
  PermGroup d = dis(q);
  Perm le = q.translation(e);
  Perm lei = le.inverse();
  auto conj = [&le, &lei](const Perm& x) { return le * x * lei; };

  PermGroup stab = d.stabilizer(e);
  const std::vector<Perm>& dels = d.elements();
  std::uint64_t fixed_count = 0;
  for (const Perm& x : dels)
    if (conj(x) == x) {
      ++fixed_count;
      if (!stab.contains(x))
        throw std::logic_error("the stabilizer is not the fixed subgroup of the conjugation");
    }
  if (stab.order() != fixed_count)
    throw std::logic_error("the stabilizer is not the fixed subgroup of the conjugation");

  std::vector<int> primes;
  std::vector<LeftQuasigroup> factors;
  std::vector<std::vector<Perm>> rep_lists;
  for (const auto& [p, sp] : sylow_components(d)) {
    for (const Perm& g : sp.generators())
      if (!sp.contains(conj(g)))
        throw std::logic_error("a Sylow component is not invariant under the conjugation");
    std::vector<Perm> hp_el;
    for (const Perm& x : sp.elements())
      if (conj(x) == x) hp_el.push_back(x);
    CosetQuandle cq = coset_quandle(sp, conj, PermGroup(d.degree(), std::move(hp_el)));
    primes.push_back(p);
    factors.push_back(cq.algebra);
    rep_lists.push_back(cq.reps);
  }

  if (factors.empty()) {
    std::vector<int> iso(q.order());
    for (int i = 0; i < q.order(); ++i) iso[i] = i;
    return {std::move(primes), std::move(factors), q, std::move(iso)};
  }
  LeftQuasigroup prod = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) prod = direct_product(prod, factors[i]);
  std::vector<int> iso(prod.order());
  std::vector<char> hit(q.order(), 0);
  for (int idx = 0; idx < prod.order(); ++idx) {
    int t = idx;
    std::vector<int> digit(factors.size());
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
      digit[i] = t % factors[i].order();
      t /= factors[i].order();
    }
    Perm g = Perm::identity(d.degree());
    for (std::size_t i = 0; i < rep_lists.size(); ++i) g = g * rep_lists[i][digit[i]];
    iso[idx] = g(e);
    if (hit[iso[idx]]) throw std::logic_error("prime decomposition map is not injective");
    hit[iso[idx]] = 1;
  }
  for (int x = 0; x < prod.order(); ++x)
    for (int y = 0; y < prod.order(); ++y)
      if (q.mul(iso[x], iso[y]) != iso[prod.mul(x, y)])
        throw std::logic_error("prime decomposition isomorphism failed");
  return {std::move(primes), std::move(factors), std::move(prod), std::move(iso)};
}

} // namespace

PrimeDecomposition prime_decomposition(const LeftQuasigroup& q) {
  if (!q.is_quandle()) throw std::invalid_argument("prime decomposition needs a quandle");
  if (!is_connected(q)) throw std::invalid_argument("prime decomposition needs a connected quandle");
  if (!is_faithful(q)) throw std::invalid_argument("prime decomposition needs a faithful quandle");
  if (!series_report(dis(q)).nilpotent)
    throw std::invalid_argument("prime decomposition needs a nilpotent quandle");
  PrimeDecomposition main = decompose_at(q, 0);
  if (q.order() > 1) {
    PrimeDecomposition alt = decompose_at(q, 1);
    auto key = [](const std::vector<LeftQuasigroup>& fs) {
      std::vector<std::vector<int>> flats;
      for (const LeftQuasigroup& f : fs) flats.push_back(canonical_form(f).flat());
      std::sort(flats.begin(), flats.end());
      return flats;
    };
    if (key(main.factors) != key(alt.factors))
      throw std::logic_error("prime factors differ between base points");
  }
  return main;
}

CdsgReport cdsg_check(const LeftQuasigroup& q) {
  CdsgReport r;
  r.cdsg = is_cdsg(q, &r.evidence);
  return r;
}

} // namespace raq
