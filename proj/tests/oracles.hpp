#pragma once

// Independent reference implementations used to cross-check the library
// engines. Everything here enumerates exhaustively and shares no code with
// the search/enumeration paths it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mq/group.hpp"
#include "mq/knot.hpp"
#include "mq/multirack.hpp"

namespace oracle {

// Number of element maps f with N.apply(phi[s], f(u), f(v)) == f(M.apply(s,u,v))
// for all s,u,v, by running an odometer over all |N|^|M| maps.
inline std::uint64_t count_homomorphisms(const mq::MultiRack& m_src, const mq::MultiRack& n_dst,
                                         const std::vector<int>& phi) {
  const int m = m_src.order(), n = n_dst.order();
  std::vector<int> f(m, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (int s = 0; s < m_src.label_count() && ok; ++s)
      for (int u = 0; u < m && ok; ++u)
        for (int v = 0; v < m && ok; ++v)
          if (n_dst.apply(phi[s], f[u], f[v]) != f[m_src.apply(s, u, v)]) ok = false;
    if (ok) ++count;
    int pos = m - 1;
    while (pos >= 0 && f[pos] == n - 1) f[pos--] = 0;
    if (pos < 0) break;
    ++f[pos];
  }
  return count;
}

inline std::uint64_t count_homomorphisms_all_phi(const mq::MultiRack& m_src,
                                                 const mq::MultiRack& n_dst) {
  const int ks = m_src.label_count(), kd = n_dst.label_count();
  std::vector<int> phi(ks, 0);
  std::uint64_t total = 0;
  while (true) {
    total += count_homomorphisms(m_src, n_dst, phi);
    int pos = ks - 1;
    while (pos >= 0 && phi[pos] == kd - 1) phi[pos--] = 0;
    if (pos < 0) break;
    ++phi[pos];
  }
  return total;
}

// Full enumeration of all m^generators arc assignments, checking the
// over-strand gluings and every crossing relation directly.
inline std::uint64_t count_colorings(const mq::QuandlePresentation& p, const mq::OpTable& t) {
  const int m = static_cast<int>(t.size());
  std::vector<int> g(p.generator_count, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& [a, b] : p.over_strand)
      if (g[a] != g[b]) {
        ok = false;
        break;
      }
    if (ok)
      for (const mq::Relation& r : p.relations) {
        const bool holds = r.sign > 0 ? t[g[r.in]][g[r.over]] == g[r.out]
                                      : t[g[r.out]][g[r.over]] == g[r.in];
        if (!holds) {
          ok = false;
          break;
        }
      }
    if (ok) ++count;
    int pos = p.generator_count - 1;
    while (pos >= 0 && g[pos] == m - 1) g[pos--] = 0;
    if (pos < 0) break;
    ++g[pos];
  }
  return count;
}

inline bool is_rack_table(const mq::OpTable& t) {
  const int m = static_cast<int>(t.size());
  for (int v = 0; v < m; ++v) {
    std::vector<char> seen(m, 0);
    for (int u = 0; u < m; ++u) {
      if (seen[t[u][v]]) return false;
      seen[t[u][v]] = 1;
    }
  }
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      for (int w = 0; w < m; ++w)
        if (t[t[u][v]][w] != t[t[u][w]][t[v][w]]) return false;
  return true;
}

inline bool is_quandle_table(const mq::OpTable& t) {
  const int m = static_cast<int>(t.size());
  for (int u = 0; u < m; ++u)
    if (t[u][u] != u) return false;
  return is_rack_table(t);
}

inline std::vector<int> relabeled_flat(const mq::OpTable& t, const std::vector<int>& sigma) {
  const int m = static_cast<int>(t.size());
  std::vector<int> inv(m);
  for (int i = 0; i < m; ++i) inv[sigma[i]] = i;
  std::vector<int> flat;
  flat.reserve(m * m);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) flat.push_back(sigma[t[inv[u]][inv[v]]]);
  return flat;
}

inline std::vector<int> canonical_key(const mq::OpTable& t) {
  const int m = static_cast<int>(t.size());
  std::vector<int> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> key = relabeled_flat(t, sigma);
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

// Single-operation quandles of order m up to relabeling, by brute force.
// m <= 3 scans every m^(m*m) table; m = 4 scans the diagonal-fixing column
// products. Classing is by minimal relabeled form, independent of the
// library's search-based classing.
inline int quandle_class_count(int m) {
  std::vector<mq::OpTable> found;
  if (m <= 3) {
    mq::OpTable t(m, std::vector<int>(m, 0));
    while (true) {
      if (is_quandle_table(t)) found.push_back(t);
      int pos = m * m - 1;
      while (pos >= 0 && t[pos / m][pos % m] == m - 1) {
        t[pos / m][pos % m] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++t[pos / m][pos % m];
    }
  } else {
    std::vector<std::vector<std::vector<int>>> column_choices(m);
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
      for (int v = 0; v < m; ++v)
        if (p[v] == v) column_choices[v].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<int> pick(m, 0);
    while (true) {
      mq::OpTable t(m, std::vector<int>(m));
      for (int v = 0; v < m; ++v)
        for (int u = 0; u < m; ++u) t[u][v] = column_choices[v][pick[v]][u];
      if (is_quandle_table(t)) found.push_back(t);
      int pos = m - 1;
      while (pos >= 0 && pick[pos] + 1 == static_cast<int>(column_choices[pos].size()))
        pick[pos--] = 0;
      if (pos < 0) break;
      ++pick[pos];
    }
  }
  std::vector<std::vector<int>> keys;
  for (const auto& t : found) keys.push_back(canonical_key(t));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return static_cast<int>(keys.size());
}

// Every m x m table passing the given predicate, by a full m^(m*m) scan.
inline std::vector<mq::OpTable> all_tables_where(int m, bool (*pred)(const mq::OpTable&)) {
  std::vector<mq::OpTable> found;
  mq::OpTable t(m, std::vector<int>(m, 0));
  while (true) {
    if (pred(t)) found.push_back(t);
    int pos = m * m - 1;
    while (pos >= 0 && t[pos / m][pos % m] == m - 1) {
      t[pos / m][pos % m] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++t[pos / m][pos % m];
  }
  return found;
}

// Single-operation racks of order m <= 3 up to relabeling.
inline int rack_class_count(int m) {
  std::vector<std::vector<int>> keys;
  for (const auto& t : all_tables_where(m, is_rack_table)) keys.push_back(canonical_key(t));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return static_cast<int>(keys.size());
}

// Two-label multi-quandles of order m <= 3 up to isomorphism: scan all pairs
// of quandle tables, keep those satisfying the mutual exchange identity both
// ways, and class by the minimal relabeled-and-reordered concatenation.
inline int quandle_pair_class_count(int m) {
  const std::vector<mq::OpTable> singles = all_tables_where(m, is_quandle_table);
  std::vector<int> sigma(m);
  std::vector<std::vector<int>> keys;
  for (const auto& a : singles)
    for (const auto& b : singles) {
      bool ok = true;
      for (int u = 0; u < m && ok; ++u)
        for (int v = 0; v < m && ok; ++v)
          for (int w = 0; w < m && ok; ++w)
            if (b[a[u][v]][w] != a[b[u][w]][b[v][w]] || a[b[u][v]][w] != b[a[u][w]][a[v][w]])
              ok = false;
      if (!ok) continue;
      std::iota(sigma.begin(), sigma.end(), 0);
      std::vector<int> best;
      do {
        for (int order = 0; order < 2; ++order) {
          std::vector<int> key = relabeled_flat(order ? b : a, sigma);
          const std::vector<int> second = relabeled_flat(order ? a : b, sigma);
          key.insert(key.end(), second.begin(), second.end());
          if (best.empty() || key < best) best = std::move(key);
        }
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      keys.push_back(std::move(best));
    }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return static_cast<int>(keys.size());
}

// Single-label isomorphism by trying every carrier bijection.
inline bool tables_isomorphic(const mq::OpTable& a, const mq::OpTable& b) {
  if (a.size() != b.size()) return false;
  const int m = static_cast<int>(a.size());
  std::vector<int> f(m);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < m && ok; ++u)
      for (int v = 0; v < m && ok; ++v)
        if (b[f[u]][f[v]] != f[a[u][v]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

// Group isomorphism by trying every bijection.
inline bool groups_isomorphic(const mq::FiniteGroup& a, const mq::FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (f[a.mul(x, y)] != b.mul(f[x], f[y])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

// Element order by repeated multiplication, independent of power().
inline int element_order(const mq::FiniteGroup& g, int v) {
  int x = v, k = 1;
  while (x != g.identity()) {
    x = g.mul(x, v);
    ++k;
  }
  return k;
}

}  // namespace oracle
