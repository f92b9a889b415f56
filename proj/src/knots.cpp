#include "raq/knots.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "raq/enumeration.hpp"
#include "raq/perm_group.hpp"

namespace raq {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct XRecord {
  int a, b, c, d;
};
struct CRecord {
  int over, in, out, sign;
};

std::vector<int> fields_of(const std::string& tok, char kind) {
  if (tok.size() < 4 || tok[1] != '[' || tok.back() != ']')
    bad("malformed PD record: " + tok);
  std::vector<int> out;
  std::string body = tok.substr(2, tok.size() - 3);
  std::istringstream in(body);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (kind == 'C' && out.size() == 3) {
      if (piece == "+")
        out.push_back(1);
      else if (piece == "-")
        out.push_back(-1);
      else
        bad("malformed PD record: " + tok + " (sign must be + or -)");
      continue;
    }
    try {
      std::size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size() || v < 1) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      bad("malformed PD record: " + tok);
    }
  }
  if (out.size() != 4) bad("malformed PD record: " + tok);
  return out;
}

// Arc-level invariant shared by both syntaxes: every arc is under_in of
// exactly one crossing and under_out of exactly one, or of none at all (the
// closure arc of a crossingless component).
void check_wiring(int arcs, const std::vector<Crossing>& cs) {
  std::vector<int> ins(arcs, 0), outs(arcs, 0);
  for (const auto& c : cs) {
    ++ins[c.under_in_arc];
    ++outs[c.under_out_arc];
  }
  for (int a = 0; a < arcs; ++a) {
    if (ins[a] > 1 || outs[a] > 1 || ins[a] != outs[a])
      bad("inconsistent arc wiring: arc " + std::to_string(a + 1) + " is under_in of " +
          std::to_string(ins[a]) + " crossings and under_out of " + std::to_string(outs[a]));
  }
}

LinkDiagram from_x_records(const std::vector<XRecord>& recs) {
  int edges = 2 * static_cast<int>(recs.size());
  for (const auto& r : recs)
    for (int e : {r.a, r.b, r.c, r.d})
      if (e > edges)
        bad("edge " + std::to_string(e) + " exceeds the edge count " + std::to_string(edges));

  // The walk successor of each edge.  Under-passes contribute a -> c; the
  // over strand contributes incoming -> outgoing, with the incoming edge
  // picked by the successor rule.
  std::vector<int> succ(edges + 1, 0), pred(edges + 1, 0);
  std::vector<std::pair<int, int>> over(recs.size());
  auto claim = [&](int x, int y) {
    if (succ[x] == y)
      bad("inconsistent PD wiring: edges " + std::to_string(x) + " -> " + std::to_string(y) +
          " appear at two crossings; for two-edge components use C[...] records");
    if (succ[x] != 0)
      bad("inconsistent PD wiring: edge " + std::to_string(x) + " leaves two crossings");
    if (pred[y] != 0)
      bad("inconsistent PD wiring: edge " + std::to_string(y) + " enters two crossings");
    succ[x] = y;
    pred[y] = x;
  };
  for (const auto& r : recs) claim(r.a, r.c);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    int b = recs[i].b, d = recs[i].d;
    int in, out;
    if (d == b + 1) {
      in = b;
      out = d;
    } else if (b == d + 1) {
      in = d;
      out = b;
    } else {
      in = std::max(b, d);
      out = std::min(b, d);
    }
    claim(in, out);
    over[i] = {in, out};
  }
  for (int e = 1; e <= edges; ++e)
    if (succ[e] == 0) bad("inconsistent PD wiring: edge " + std::to_string(e) + " never ends");

  // Components must be consecutive integer ranges walked upward with a
  // single wrap from the top back to the bottom.
  std::vector<int> comp(edges + 1, -1);
  std::vector<int> comp_size;
  for (int m = 1; m <= edges; ++m) {
    if (comp[m] != -1) continue;
    int id = static_cast<int>(comp_size.size());
    int x = m, count = 0;
    for (;;) {
      comp[x] = id;
      ++count;
      int y = succ[x];
      if (y == m) break;
      if (y != x + 1)
        bad("edges are not numbered consecutively along components near edge " +
            std::to_string(x));
      x = y;
    }
    comp_size.push_back(count);
  }
  for (std::size_t i = 0; i < recs.size(); ++i) {
    auto [in, out] = over[i];
    if (comp_size[comp[in]] == 2)
      bad("ambiguous over strand on edges " + std::to_string(out) + "," + std::to_string(in) +
          " of a two-edge component; use C[...] records");
  }

  // Arcs: over-passes keep the strand on one arc, under-passes break it.
  UnionFind uf(edges + 1);
  for (auto [in, out] : over) uf.unite(in, out);
  std::map<int, int> arc_id;
  for (int e = 1; e <= edges; ++e) {
    int r = uf.find(e);
    if (!arc_id.count(r)) arc_id[r] = 0;
  }
  {
    std::map<int, int> least;
    for (int e = 1; e <= edges; ++e) {
      int r = uf.find(e);
      if (!least.count(r)) least[r] = e;
    }
    std::vector<std::pair<int, int>> order; // (least edge, root)
    for (auto [r, m] : least) order.push_back({m, r});
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i) arc_id[order[i].second] = static_cast<int>(i);
  }
  int narcs = static_cast<int>(arc_id.size());

  LinkDiagram d;
  d.arcs = narcs;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    Crossing c;
    c.over_arc = arc_id[uf.find(over[i].first)];
    c.under_in_arc = arc_id[uf.find(recs[i].a)];
    c.under_out_arc = arc_id[uf.find(recs[i].c)];
    c.sign = (over[i].first == recs[i].d) ? 1 : -1;
    d.crossings.push_back(c);
  }
  std::vector<std::vector<int>> blocks_by_comp(comp_size.size());
  std::vector<int> arc_comp(narcs, -1);
  for (int e = 1; e <= edges; ++e) arc_comp[arc_id[uf.find(e)]] = comp[e];
  for (int a = 0; a < narcs; ++a) blocks_by_comp[arc_comp[a]].push_back(a);
  std::vector<std::vector<int>> blocks;
  for (auto& b : blocks_by_comp)
    if (!b.empty()) blocks.push_back(b);
  d.components = Partition::from_blocks(narcs, blocks);
  check_wiring(d.arcs, d.crossings);
  return d;
}

LinkDiagram from_c_records(const std::vector<CRecord>& recs) {
  int narcs = 0;
  for (const auto& r : recs) narcs = std::max({narcs, r.over, r.in, r.out});
  std::vector<bool> seen(narcs + 1, false);
  for (const auto& r : recs) seen[r.over] = seen[r.in] = seen[r.out] = true;
  for (int a = 1; a <= narcs; ++a)
    if (!seen[a]) bad("arc " + std::to_string(a) + " never appears; arcs must be numbered 1..n");

  LinkDiagram d;
  d.arcs = narcs;
  for (const auto& r : recs)
    d.crossings.push_back({r.over - 1, r.in - 1, r.out - 1, r.sign});
  check_wiring(d.arcs, d.crossings);
  UnionFind uf(narcs);
  for (const auto& c : d.crossings) uf.unite(c.under_in_arc, c.under_out_arc);
  std::map<int, std::vector<int>> by_root;
  for (int a = 0; a < narcs; ++a) by_root[uf.find(a)].push_back(a);
  std::vector<std::vector<int>> blocks;
  for (auto& [r, b] : by_root) blocks.push_back(b);
  d.components = Partition::from_blocks(narcs, blocks);
  return d;
}

} // namespace

LinkDiagram parse_pd(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) bad("empty PD code");
  bool unknot = false, xs = false, cs = false;
  std::vector<XRecord> xrecs;
  std::vector<CRecord> crecs;
  for (const auto& tok : tokens) {
    if (tok == "unknot") {
      unknot = true;
    } else if (tok[0] == 'X') {
      auto f = fields_of(tok, 'X');
      xrecs.push_back({f[0], f[1], f[2], f[3]});
      xs = true;
    } else if (tok[0] == 'C') {
      auto f = fields_of(tok, 'C');
      crecs.push_back({f[0], f[1], f[2], f[3]});
      cs = true;
    } else {
      bad("malformed PD record: " + tok);
    }
  }
  if (unknot && (xs || cs)) bad("unknot cannot be combined with crossing records");
  if (xs && cs) bad("X[...] and C[...] records cannot be mixed");
  if (unknot) {
    LinkDiagram d;
    d.arcs = 1;
    d.components = Partition::all(1);
    return d;
  }
  return xs ? from_x_records(xrecs) : from_c_records(crecs);
}

ColoringCount count_colorings(const LinkDiagram& d, const LeftQuasigroup& q) {
  if (!q.is_quandle()) throw std::invalid_argument("coloring requires a quandle");
  for (const auto& c : d.crossings)
    for (int a : {c.over_arc, c.under_in_arc, c.under_out_arc})
      if (a < 0 || a >= d.arcs) throw std::invalid_argument("crossing references a missing arc");

  int n = q.order();
  int arcs = d.arcs;
  // Static arc order: prefer an arc whose color is forced by already ordered
  // arcs (under_out from over+under_in or the reverse; the over arc is never
  // forced), then any arc touching an ordered crossing, then the least arc.
  std::vector<int> order, pos(arcs, -1);
  for (int step = 0; step < arcs; ++step) {
    int best = -1, best_score = -1;
    for (int a = 0; a < arcs; ++a) {
      if (pos[a] != -1) continue;
      int score = 0;
      for (const auto& c : d.crossings) {
        auto in = [&](int x) { return pos[x] != -1; };
        if (a == c.under_out_arc && in(c.over_arc) && in(c.under_in_arc)) score = 2;
        if (a == c.under_in_arc && in(c.over_arc) && in(c.under_out_arc)) score = 2;
        if (score < 2 &&
            (a == c.over_arc || a == c.under_in_arc || a == c.under_out_arc) &&
            (in(c.over_arc) || in(c.under_in_arc) || in(c.under_out_arc)))
          score = std::max(score, 1);
      }
      if (score > best_score) {
        best_score = score;
        best = a;
      }
    }
    pos[best] = step;
    order.push_back(best);
  }
  // Crossings become checkable once their last arc is placed.
  std::vector<std::vector<int>> ready(arcs);
  for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const auto& c = d.crossings[ci];
    int last = std::max({pos[c.over_arc], pos[c.under_in_arc], pos[c.under_out_arc]});
    ready[last].push_back(static_cast<int>(ci));
  }

  std::vector<int> color(arcs, -1);
  std::uint64_t count = 0;
  auto consistent = [&](int step) {
    for (int ci : ready[step]) {
      const auto& c = d.crossings[ci];
      int o = color[c.over_arc], i = color[c.under_in_arc], u = color[c.under_out_arc];
      int want = c.sign > 0 ? q.mul(o, i) : q.ldiv(o, i);
      if (u != want) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int step) -> void {
    if (step == arcs) {
      ++count;
      return;
    }
    int a = order[step];
    for (int v = 0; v < n; ++v) {
      color[a] = v;
      if (consistent(step)) self(self, step + 1);
    }
    color[a] = -1;
  };
  if (arcs == 0)
    count = 1;
  else
    rec(rec, 0);
  return {count, count > static_cast<std::uint64_t>(n)};
}

ColorabilityReport solvable_colorability_check(const LinkDiagram& d, int max_order) {
  if (max_order < 1 || max_order > 8)
    throw std::invalid_argument("max_order must be between 1 and 8");
  ColorabilityReport report;
  for (int n = 1; n <= max_order; ++n) {
    EnumSpec spec;
    spec.order = n;
    spec.kind = EnumKind::quandle;
    enumerate(spec, [&](const LeftQuasigroup& q) {
      bool latin = q.is_latin();
      bool conn_solv = is_connected(q) && series_report(dis(q)).solvable;
      if (!latin && !conn_solv) return;
      ++report.checked;
      auto cc = count_colorings(d, q);
      if (cc.nontrivial) report.hits.push_back({q, cc.colorings, latin, conn_solv});
    });
  }
  return report;
}

} // namespace raq
