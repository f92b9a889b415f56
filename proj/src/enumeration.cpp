#include "raq/enumeration.hpp"

#include <array>
#include <stdexcept>

namespace raq {

EnumKind enum_kind_from_string(const std::string& s) {
  if (s == "leftquasigroup") return EnumKind::leftquasigroup;
  if (s == "rack") return EnumKind::rack;
  if (s == "quandle") return EnumKind::quandle;
  if (s == "classC" || s == "classc") return EnumKind::classc;
  throw std::invalid_argument("unknown kind: " + s);
}

std::string to_string(EnumKind kind) {
  switch (kind) {
    case EnumKind::leftquasigroup: return "leftquasigroup";
    case EnumKind::rack: return "rack";
    case EnumKind::quandle: return "quandle";
    case EnumKind::classc: return "classC";
  }
  return "";
}

namespace {

/*
 * Does some relabeling make the table prefix strictly smaller?  Rows
 * 0..filled-1 are complete; the relabeled table is compared cell by cell in
 * row-major order, branching over the partial permutation pi as needed, and
 * a win is reported only when every earlier compared cell is equal and both
 * sides of the deciding cell are determined by the filled rows.  Pruning on
 * a win is therefore sound for every completion of the prefix.
 */
struct PrefixTest {
  int n, filled;
  const std::vector<int>& t;
  std::array<int, 8> pi{}, ipi{};

  PrefixTest(int n_, int filled_, const std::vector<int>& t_) : n(n_), filled(filled_), t(t_) {
    pi.fill(-1);
    ipi.fill(-1);
  }

  bool win_from(int i, int j) {
    if (i >= filled) return false;
    if (ipi[i] < 0) {
      for (int a = 0; a < filled; ++a) {
        if (pi[a] >= 0) continue;
        pi[a] = i;
        ipi[i] = a;
        if (win_from(i, j)) return true;
        pi[a] = -1;
        ipi[i] = -1;
      }
      return false;
    }
    if (ipi[j] < 0) {
      for (int b = 0; b < n; ++b) {
        if (pi[b] >= 0) continue;
        pi[b] = j;
        ipi[j] = b;
        if (win_from(i, j)) return true;
        pi[b] = -1;
        ipi[j] = -1;
      }
      return false;
    }
    int x = t[ipi[i] * n + ipi[j]];
    int v = t[i * n + j];
    if (pi[x] < 0) {
      for (int u = 0; u < v; ++u)
        if (ipi[u] < 0) return true;
      if (ipi[v] >= 0) return false;
      pi[x] = v;
      ipi[v] = x;
      bool win = next(i, j);
      pi[x] = -1;
      ipi[v] = -1;
      return win;
    }
    if (pi[x] < v) return true;
    if (pi[x] > v) return false;
    return next(i, j);
  }

  bool next(int i, int j) { return j + 1 < n ? win_from(i, j + 1) : win_from(i + 1, 0); }
};

struct Searcher {
  int n;
  EnumKind kind;
  EnumFilters fl;
  std::vector<int> t;
  std::array<int, 8> row_used{}, col_used{};
  std::vector<int> trail;
  std::uint64_t emitted = 0;
  const std::function<void(const LeftQuasigroup&)>* sink = nullptr;

  Searcher(const EnumSpec& spec) : n(spec.order), kind(spec.kind), fl(spec.filters) {
    t.assign(n * n, -1);
  }

  bool row_law() const { return kind != EnumKind::leftquasigroup; }

  bool set_cell(int r, int c, int v) {
    int p = r * n + c;
    if (t[p] >= 0) return t[p] == v;
    if (row_used[r] & (1 << v)) return false;
    if (fl.latin && (col_used[c] & (1 << v))) return false;
    t[p] = v;
    row_used[r] |= 1 << v;
    if (fl.latin) col_used[c] |= 1 << v;
    trail.push_back(p);
    if (fl.involutory && !set_cell(r, v, c)) return false;
    return true;
  }

  void rollback(std::size_t mark) {
    while (trail.size() > mark) {
      int p = trail.back();
      trail.pop_back();
      int v = t[p];
      t[p] = -1;
      row_used[p / n] &= ~(1 << v);
      if (fl.latin) col_used[p % n] &= ~(1 << v);
    }
  }

  // Rows a and b are complete, so row t[a][b] is L_a L_b L_a^-1 for racks
  // and quandles and L_a^-1 L_b^-1 L_a for class C; check it or force it.
  bool force_row(int a, int b) {
    int e = t[a * n + b];
    std::array<int, 8> ainv{}, binv{};
    for (int z = 0; z < n; ++z) ainv[t[a * n + z]] = z;
    if (kind == EnumKind::classc)
      for (int z = 0; z < n; ++z) binv[t[b * n + z]] = z;
    for (int z = 0; z < n; ++z) {
      int w = kind == EnumKind::classc ? ainv[binv[t[a * n + z]]]
                                       : t[a * n + t[b * n + ainv[z]]];
      if (!set_cell(e, z, w)) return false;
    }
    return true;
  }

  bool row_hooks(int r) {
    for (int b = 0; b <= r; ++b)
      if (!force_row(r, b)) return false;
    for (int a = 0; a < r; ++a)
      if (!force_row(a, r)) return false;
    return true;
  }

  void fill_cell(int pos) {
    if (pos == n * n) {
      leaf();
      return;
    }
    if (t[pos] >= 0) {
      cross(pos);
      return;
    }
    int r = pos / n, c = pos % n;
    for (int v = 0; v < n; ++v) {
      if (row_used[r] & (1 << v)) continue;
      if (fl.latin && (col_used[c] & (1 << v))) continue;
      std::size_t mark = trail.size();
      if (set_cell(r, c, v)) cross(pos);
      rollback(mark);
    }
  }

  void cross(int pos) {
    int r = pos / n, c = pos % n;
    if (c + 1 < n) {
      fill_cell(pos + 1);
      return;
    }
    std::size_t mark = trail.size();
    bool ok = !row_law() || row_hooks(r);
    if (ok && r + 1 < n && PrefixTest(n, r + 1, t).win_from(0, 0)) ok = false;
    if (ok) fill_cell(pos + 1);
    rollback(mark);
  }

  void leaf() {
    if (!is_canonical_table(t, n)) return;
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = t[i * n + j];
    LeftQuasigroup q = LeftQuasigroup::from_table(rows);
    bool kind_ok = true;
    switch (kind) {
      case EnumKind::leftquasigroup: break;
      case EnumKind::rack: kind_ok = q.is_rack(); break;
      case EnumKind::quandle: kind_ok = q.is_quandle(); break;
      case EnumKind::classc: kind_ok = q.is_class_c(); break;
    }
    if (!kind_ok || (fl.latin && !q.is_latin()) || (fl.involutory && !q.is_involutory()))
      throw std::logic_error("enumeration emitted a table outside its kind");
    if (fl.connected && !is_connected(q)) return;
    if (fl.medial && !q.is_medial()) return;
    if (fl.faithful && !is_faithful(q)) return;
    if (fl.not_rack && q.is_rack()) return;
    ++emitted;
    if (sink && *sink) (*sink)(q);
  }
};

} // namespace

std::uint64_t enumerate(const EnumSpec& spec,
                        const std::function<void(const LeftQuasigroup&)>& sink) {
  if (spec.order < 1) throw std::invalid_argument("enumeration order must be at least 1");
  if (spec.filters.not_rack &&
      (spec.kind == EnumKind::rack || spec.kind == EnumKind::quandle))
    throw std::invalid_argument("the not_rack filter contradicts the kind");
  int cap = spec.kind != EnumKind::leftquasigroup ? 8 : spec.filters.latin ? 6 : 4;
  if (spec.order > cap)
    throw std::invalid_argument("unsupported size tier: order " + std::to_string(spec.order) +
                                " exceeds " + std::to_string(cap) + " for " +
                                to_string(spec.kind));
  Searcher s(spec);
  if (!spec.count_only && sink) s.sink = &sink;
  if (spec.kind == EnumKind::quandle)
    for (int i = 0; i < spec.order; ++i)
      if (!s.set_cell(i, i, i)) throw std::logic_error("diagonal preset failed");
  s.fill_cell(0);
  return s.emitted;
}

std::vector<std::uint64_t> census(const std::vector<int>& orders, EnumKind kind,
                                  const EnumFilters& filters) {
  std::vector<std::uint64_t> out;
  out.reserve(orders.size());
  for (int n : orders) {
    EnumSpec spec;
    spec.order = n;
    spec.kind = kind;
    spec.filters = filters;
    spec.count_only = true;
    out.push_back(enumerate(spec));
  }
  return out;
}

} // namespace raq
