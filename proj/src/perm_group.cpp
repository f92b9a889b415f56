#include "raq/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace raq {

namespace {

Perm perm_pow(const Perm& p, std::uint64_t e) {
  Perm acc = Perm::identity(p.degree());
  Perm base = p;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) throw std::length_error("group order overflow");
  return a * b;
}

} // namespace

struct PermGroup::Chain {
  int degree = 0;
  std::vector<int> base;
  std::vector<Perm> strong;
  // reps[i][x]: coset representative u with u(base[i]) = x, for x in the
  // orbit of base[i] under the level-i group.
  std::vector<std::vector<std::optional<Perm>>> reps;
  std::vector<std::vector<int>> orbit; // discovery order
  std::uint64_t order = 1;

  Chain(int deg, const std::vector<Perm>& gens, const std::vector<int>& preferred_base);

  std::pair<Perm, std::size_t> strip(Perm p, std::size_t from) const {
    for (std::size_t i = from; i < base.size(); ++i) {
      int x = p(base[i]);
      if (!reps[i][x]) return {std::move(p), i};
      p = reps[i][x]->inverse() * p;
    }
    return {std::move(p), base.size()};
  }

  bool contains(const Perm& p) const { return strip(p, 0).first.is_identity(); }

private:
  std::vector<Perm> level_gens(std::size_t i) const {
    std::vector<Perm> out;
    for (const Perm& g : strong) {
      bool fixes = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g(base[j]) != base[j]) { fixes = false; break; }
      if (fixes) out.push_back(g);
    }
    return out;
  }

  void rebuild_levels() {
    reps.assign(base.size(), {});
    orbit.assign(base.size(), {});
    for (std::size_t i = 0; i < base.size(); ++i) {
      auto gens = level_gens(i);
      reps[i].assign(degree, std::nullopt);
      reps[i][base[i]] = Perm::identity(degree);
      orbit[i].push_back(base[i]);
      for (std::size_t q = 0; q < orbit[i].size(); ++q) {
        int x = orbit[i][q];
        for (const Perm& g : gens) {
          int y = g(x);
          if (!reps[i][y]) {
            reps[i][y] = g * *reps[i][x];
            orbit[i].push_back(y);
          }
        }
      }
    }
  }
};

PermGroup::Chain::Chain(int deg, const std::vector<Perm>& gens,
                        const std::vector<int>& preferred_base)
    : degree(deg) {
  for (int p : preferred_base)
    if (std::find(base.begin(), base.end(), p) == base.end()) base.push_back(p);
  for (const Perm& g : gens)
    if (!g.is_identity()) strong.push_back(g);

  for (;;) {
    // Every non-identity strong generator must move some base point.
    bool extended = false;
    for (const Perm& g : strong) {
      bool fixes_base = true;
      for (int b : base)
        if (g(b) != b) { fixes_base = false; break; }
      if (fixes_base) {
        for (int x = 0; x < degree; ++x)
          if (g(x) != x) { base.push_back(x); break; }
        extended = true;
        break;
      }
    }
    rebuild_levels();
    if (extended) continue;

    // Schreier verification, deepest level first.
    Perm residue;
    bool found = false;
    for (std::size_t i = base.size(); i-- > 0 && !found;) {
      auto gens_i = level_gens(i);
      for (std::size_t q = 0; q < orbit[i].size() && !found; ++q) {
        int x = orbit[i][q];
        for (const Perm& g : gens_i) {
          Perm s = reps[i][g(x)]->inverse() * (g * *reps[i][x]);
          auto [r, stuck] = strip(std::move(s), i + 1);
          if (!r.is_identity()) {
            residue = std::move(r);
            found = true;
            break;
          }
        }
      }
    }
    if (!found) break;
    strong.push_back(std::move(residue));
  }

  order = 1;
  for (const auto& o : orbit) order = checked_mul(order, o.size());
}

const PermGroup::Chain& PermGroup::chain() const {
  if (!chain_) chain_ = std::make_shared<Chain>(degree_, gens_, std::vector<int>{});
  return *chain_;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch");
  return chain().contains(p);
}

std::uint64_t PermGroup::order() const { return chain().order; }

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
  return true;
}

const std::vector<Perm>& PermGroup::elements(std::uint64_t limit) const {
  const Chain& c = chain();
  if (c.order > limit) throw std::length_error("group too large to expand");
  if (!elements_cache_) {
    std::vector<Perm> out;
    out.reserve(c.order);
    std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t lvl, const Perm& acc) {
      if (lvl == c.base.size()) {
        out.push_back(acc);
        return;
      }
      for (int x : c.orbit[lvl]) rec(lvl + 1, acc * *c.reps[lvl][x]);
    };
    rec(0, Perm::identity(degree_));
    std::sort(out.begin(), out.end());
    elements_cache_ = std::make_shared<std::vector<Perm>>(std::move(out));
  }
  return *elements_cache_;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const Perm& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

bool PermGroup::is_normal_in(const PermGroup& ambient) const {
  for (const Perm& g : ambient.generators()) {
    Perm gi = g.inverse();
    for (const Perm& s : gens_)
      if (!contains(g * s * gi)) return false;
  }
  return true;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree_, 0);
  for (int start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::vector<int> orb{start};
    seen[start] = 1;
    for (std::size_t q = 0; q < orb.size(); ++q)
      for (const Perm& g : gens_) {
        int y = g(orb[q]);
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

Partition PermGroup::orbit_partition() const {
  return Partition::from_blocks(degree_, orbits());
}

std::vector<int> PermGroup::orbit_of(int point) const {
  for (auto& o : orbits())
    if (std::find(o.begin(), o.end(), point) != o.end()) return o;
  throw std::invalid_argument("point out of range");
}

PermGroup PermGroup::stabilizer(int point) const {
  if (point < 0 || point >= degree_) throw std::invalid_argument("point out of range");
  std::vector<std::optional<Perm>> rep(degree_);
  std::vector<int> orb{point};
  rep[point] = Perm::identity(degree_);
  for (std::size_t q = 0; q < orb.size(); ++q)
    for (const Perm& g : gens_) {
      int y = g(orb[q]);
      if (!rep[y]) {
        rep[y] = g * *rep[orb[q]];
        orb.push_back(y);
      }
    }
  std::vector<Perm> sgens;
  std::set<Perm> seen;
  for (int x : orb)
    for (const Perm& g : gens_) {
      Perm s = rep[g(x)]->inverse() * (g * *rep[x]);
      if (!s.is_identity() && seen.insert(s).second) sgens.push_back(std::move(s));
    }
  return PermGroup(degree_, std::move(sgens));
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int>& points) const {
  Chain c(degree_, gens_, points);
  std::vector<Perm> keep;
  for (const Perm& g : c.strong) {
    bool fixes = true;
    for (int p : points)
      if (g(p) != p) { fixes = false; break; }
    if (fixes) keep.push_back(g);
  }
  return PermGroup(degree_, std::move(keep));
}

PermGroup subgroup_join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<Perm> gens = a.generators();
  for (const Perm& g : b.generators()) gens.push_back(g);
  return PermGroup(a.degree(), std::move(gens));
}

PermGroup intersection(const PermGroup& a, const PermGroup& b, std::uint64_t limit) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& big = a.order() <= b.order() ? b : a;
  std::vector<Perm> gens;
  for (const Perm& e : small.elements(limit))
    if (!e.is_identity() && big.contains(e)) gens.push_back(e);
  return PermGroup(a.degree(), std::move(gens));
}

PermGroup normal_closure(const PermGroup& ambient, const std::vector<Perm>& seed) {
  std::vector<Perm> gens;
  for (const Perm& s : seed) {
    if (!ambient.contains(s)) throw std::invalid_argument("seed element not in ambient group");
    if (!s.is_identity()) gens.push_back(s);
  }
  PermGroup h(ambient.degree(), gens);
  for (;;) {
    std::vector<Perm> missing;
    for (const Perm& g : ambient.generators()) {
      Perm gi = g.inverse();
      for (const Perm& s : gens) {
        Perm c = g * s * gi;
        if (!h.contains(c)) {
          missing.push_back(std::move(c));
          break;
        }
      }
      if (!missing.empty()) break;
    }
    if (missing.empty()) return h;
    for (Perm& c : missing) gens.push_back(std::move(c));
    h = PermGroup(ambient.degree(), gens);
  }
}

PermGroup commutator_subgroup(const PermGroup& h, const PermGroup& k,
                              const PermGroup& ambient) {
  if (!h.is_subgroup_of(ambient) || !k.is_subgroup_of(ambient))
    throw std::invalid_argument("commutator arguments must lie in the ambient group");
  std::vector<Perm> seed;
  for (const Perm& a : h.generators())
    for (const Perm& b : k.generators()) {
      Perm c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) seed.push_back(std::move(c));
    }
  return normal_closure(ambient, seed);
}

PermGroup center(const PermGroup& g, std::uint64_t limit) {
  std::vector<Perm> gens;
  for (const Perm& e : g.elements(limit)) {
    if (e.is_identity()) continue;
    bool central = true;
    for (const Perm& s : g.generators())
      if (!(e * s == s * e)) { central = false; break; }
    if (central) gens.push_back(e);
  }
  return PermGroup(g.degree(), std::move(gens));
}

GroupSeriesReport series_report(const PermGroup& g) {
  GroupSeriesReport rep;
  const int max_len = 64;

  PermGroup d = g;
  rep.derived_orders.push_back(d.order());
  for (int i = 0; i < max_len; ++i) {
    PermGroup next = commutator_subgroup(d, d, d);
    if (next.order() == d.order()) break;
    d = next;
    rep.derived_orders.push_back(d.order());
    if (d.is_trivial()) break;
  }
  if (rep.derived_orders.back() == 1) {
    rep.solvable = true;
    rep.derived_length = static_cast<int>(rep.derived_orders.size()) - 1;
  }

  PermGroup l = g;
  rep.lower_central_orders.push_back(l.order());
  for (int i = 0; i < max_len; ++i) {
    PermGroup next = commutator_subgroup(l, g, g);
    if (next.order() == l.order()) break;
    l = next;
    rep.lower_central_orders.push_back(l.order());
    if (l.is_trivial()) break;
  }
  if (rep.lower_central_orders.back() == 1) {
    rep.nilpotent = true;
    rep.nilpotency_class = static_cast<int>(rep.lower_central_orders.size()) - 1;
  }
  return rep;
}

std::vector<std::pair<int, PermGroup>> sylow_components(const PermGroup& g) {
  std::uint64_t n = g.order();
  std::vector<int> primes;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(static_cast<int>(p));
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(static_cast<int>(m));

  std::vector<std::pair<int, PermGroup>> out;
  std::uint64_t product = 1;
  for (int p : primes) {
    std::vector<Perm> gens;
    for (const Perm& x : g.generators()) {
      std::uint64_t o = x.order();
      std::uint64_t pa = 1;
      while (o % p == 0) {
        o /= p;
        pa *= p;
      }
      if (pa == 1) continue;
      // exponent e with e = 0 mod o, e = 1 mod pa
      std::uint64_t e = o;
      while (e % pa != 1) e += o;
      Perm xp = perm_pow(x, e);
      if (!xp.is_identity()) gens.push_back(std::move(xp));
    }
    PermGroup sp(g.degree(), std::move(gens));
    if (!sp.is_normal_in(g))
      throw std::logic_error("sylow decomposition failed; group is not nilpotent");
    product = checked_mul(product, sp.order());
    out.emplace_back(p, std::move(sp));
  }
  if (product != n)
    throw std::logic_error("sylow decomposition failed; group is not nilpotent");
  return out;
}

PermGroup action_kernel_on_blocks(const PermGroup& g, const Partition& blocks) {
  int n = g.degree();
  if (blocks.size() != n) throw std::invalid_argument("partition size mismatch");
  int k = blocks.block_count();

  std::vector<Perm> ext_gens;
  for (const Perm& p : g.generators()) {
    std::vector<int> induced(k, -1);
    for (int a = 0; a < n; ++a) {
      int from = blocks.block_of(a), to = blocks.block_of(p(a));
      if (induced[from] < 0)
        induced[from] = to;
      else if (induced[from] != to)
        throw std::invalid_argument("generator does not permute the blocks");
    }
    std::vector<int> img(n + k);
    for (int a = 0; a < n; ++a) img[a] = p(a);
    for (int j = 0; j < k; ++j) img[n + j] = n + induced[j];
    ext_gens.emplace_back(std::move(img));
  }

  PermGroup ext(n + k, std::move(ext_gens));
  std::vector<int> block_points(k);
  for (int j = 0; j < k; ++j) block_points[j] = n + j;
  PermGroup stab = ext.pointwise_stabilizer(block_points);

  std::vector<Perm> gens;
  for (const Perm& p : stab.generators()) {
    std::vector<int> img(p.images().begin(), p.images().begin() + n);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup block_action_image(const PermGroup& g, const Partition& blocks) {
  int n = g.degree();
  if (blocks.size() != n) throw std::invalid_argument("partition size mismatch");
  int k = blocks.block_count();
  std::vector<Perm> gens;
  for (const Perm& p : g.generators()) {
    std::vector<int> induced(k, -1);
    for (int a = 0; a < n; ++a) {
      int from = blocks.block_of(a), to = blocks.block_of(p(a));
      if (induced[from] < 0)
        induced[from] = to;
      else if (induced[from] != to)
        throw std::invalid_argument("generator does not permute the blocks");
    }
    gens.emplace_back(std::move(induced));
  }
  return PermGroup(k, std::move(gens));
}

std::vector<PermGroup> all_normal_subgroups(const PermGroup& g, const PermGroup& ambient,
                                            std::uint64_t limit) {
  const auto& elems = g.elements(limit);
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> found;

  auto try_add = [&](PermGroup cand) {
    if (!cand.is_subgroup_of(g)) return;
    auto key = cand.elements(limit);
    if (seen.insert(key).second) found.push_back(std::move(cand));
  };

  try_add(PermGroup::trivial(g.degree()));
  for (const Perm& x : elems) {
    if (x.is_identity()) continue;
    PermGroup n = normal_closure(ambient, {x});
    if (n.order() <= g.order()) try_add(std::move(n));
  }

  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      try_add(subgroup_join(found[i], found[j]));

  std::sort(found.begin(), found.end(), [&](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements(limit) < b.elements(limit);
  });
  return found;
}

} // namespace raq
