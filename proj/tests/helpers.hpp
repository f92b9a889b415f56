#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "raq/left_quasigroup.hpp"
#include "raq/perm.hpp"

namespace testutil {

// Permutation of degree n from 0-based cycles.
inline raq::Perm cyc(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return raq::Perm(img);
}

// Reference closure: multiply until stable.
inline std::set<raq::Perm> naive_closure(int n, const std::vector<raq::Perm>& gens) {
  std::set<raq::Perm> elems{raq::Perm::identity(n)};
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<raq::Perm> cur(elems.begin(), elems.end());
    for (const auto& a : cur)
      for (const auto& g : gens)
        if (elems.insert(a * g).second) changed = true;
  }
  return elems;
}

// Table rows given 1-based, as in the file format.
inline raq::LeftQuasigroup table1(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<int>> t(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int v : rows[i]) t[i].push_back(v - 1);
  return raq::LeftQuasigroup::from_table(t);
}

// Dihedral rack on Z_n: a*b = 2a - b.
inline raq::LeftQuasigroup dihedral(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = ((2 * a - b) % n + n) % n;
  return raq::LeftQuasigroup::from_table(t);
}

// Transport the table along pi: new(pi(a), pi(b)) = pi(a*b).
inline raq::LeftQuasigroup relabel(const raq::LeftQuasigroup& q, const std::vector<int>& pi) {
  int n = q.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[pi[a]][pi[b]] = pi[q.mul(a, b)];
  return raq::LeftQuasigroup::from_table(t);
}

// a*b = b.
inline raq::LeftQuasigroup projection(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = b;
  return raq::LeftQuasigroup::from_table(t);
}

// Every left quasigroup of order n passing keep(rows), one canonical
// representative per isomorphism class, in lexicographic order.
template <class Pred>
std::vector<raq::LeftQuasigroup> brute_force_classes(int n, Pred keep) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  int m = static_cast<int>(perms.size());
  std::vector<int> choice(n, 0);
  std::set<std::vector<int>> seen;
  while (true) {
    std::vector<std::vector<int>> rows(n);
    for (int a = 0; a < n; ++a) rows[a] = perms[choice[a]];
    if (keep(rows))
      seen.insert(raq::canonical_form(raq::LeftQuasigroup::from_table(rows)).flat());
    int i = n - 1;
    while (i >= 0 && choice[i] == m - 1) {
      choice[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++choice[i];
  }
  std::vector<raq::LeftQuasigroup> out;
  for (const auto& flat : seen) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) rows[a][b] = flat[a * n + b];
    out.push_back(raq::LeftQuasigroup::from_table(rows));
  }
  return out;
}

// Left self-distributivity on raw rows.
inline bool rows_are_rack(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& sc = rows[rows[a][b]];
      for (int x = 0; x < n; ++x)
        if (rows[a][rows[b][x]] != sc[rows[a][x]]) return false;
    }
  return true;
}

} // namespace testutil
