#include <algorithm>
#include <numeric>

#include "mq/multirack.hpp"

// Backtracking searches over element maps. Shared machinery: committing
// Phi(u) = x forces Phi(u |>_s v) = x |>_phi(s) Phi(v) for every already
// assigned v and every label, so assignments propagate through the tables and
// conflicts surface early.

namespace mq {
namespace {

using Fingerprint = std::vector<int>;

// Cycle type of the column permutation u -> T[u][v], sorted ascending.
std::vector<int> column_cycle_type(const OpTable& t, int v) {
  const int m = static_cast<int>(t.size());
  std::vector<char> seen(m, 0);
  std::vector<int> lengths;
  for (int start = 0; start < m; ++start) {
    if (seen[start]) continue;
    int len = 0;
    int x = start;
    while (!seen[x]) {
      seen[x] = 1;
      x = t[x][v];
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

// Sorted multiplicities of the values in row u.
std::vector<int> row_profile(const OpTable& t, int u) {
  const int m = static_cast<int>(t.size());
  std::vector<int> count(m, 0);
  for (int v = 0; v < m; ++v) ++count[t[u][v]];
  std::erase(count, 0);
  std::sort(count.begin(), count.end());
  return count;
}

void append(Fingerprint& fp, const std::vector<int>& part) {
  fp.insert(fp.end(), part.begin(), part.end());
  fp.push_back(-1);
}

// Relabeling-invariant fingerprint of one operation table.
Fingerprint label_fingerprint(const OpTable& t) {
  const int m = static_cast<int>(t.size());
  Fingerprint fp;
  int diag_fixed = 0;
  for (int u = 0; u < m; ++u)
    if (t[u][u] == u) ++diag_fixed;
  fp.push_back(diag_fixed);

  std::vector<std::vector<int>> types;
  for (int v = 0; v < m; ++v) types.push_back(column_cycle_type(t, v));
  std::sort(types.begin(), types.end());
  for (const auto& ty : types) append(fp, ty);

  std::vector<std::vector<int>> rows;
  for (int u = 0; u < m; ++u) rows.push_back(row_profile(t, u));
  std::sort(rows.begin(), rows.end());
  for (const auto& r : rows) append(fp, r);
  return fp;
}

// Relabeling-invariant profile of one element within one table.
Fingerprint element_fingerprint(const OpTable& t, int u) {
  const int m = static_cast<int>(t.size());
  Fingerprint fp;
  fp.push_back(t[u][u] == u ? 1 : 0);
  append(fp, row_profile(t, u));
  append(fp, column_cycle_type(t, u));
  int occurrences = 0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (t[a][b] == u) ++occurrences;
  fp.push_back(occurrences);
  return fp;
}

struct Budget {
  std::uint64_t used = 0;
  std::uint64_t limit = 0;

  void spend() {
    if (++used > limit)
      throw Error(ErrorCode::SearchLimitExceeded,
                  "node budget " + std::to_string(limit) + " exhausted");
  }
};

// Element-map search common to isomorphism and homomorphism counting.
struct ElementSearch {
  const MultiRack& source;
  const MultiRack& target;
  std::vector<const OpTable*> src_tables;  // per source label
  std::vector<const OpTable*> dst_tables;  // same order, through phi
  bool injective = false;
  Budget* budget = nullptr;

  std::vector<int> assign;                  // source elem -> target elem or -1
  std::vector<int> used;                    // target elem -> source elem or -1
  std::vector<std::pair<int, int>> trail;   // committed assignments, in order

  ElementSearch(const MultiRack& m, const MultiRack& n, const std::vector<int>& phi,
                bool inj, Budget* b)
      : source(m), target(n), injective(inj), budget(b) {
    for (int s = 0; s < m.label_count(); ++s) {
      src_tables.push_back(&m.table(s));
      dst_tables.push_back(&n.table(phi[s]));
    }
    assign.assign(m.order(), -1);
    used.assign(n.order(), -1);
  }

  // Commits u -> x plus everything it forces; false on conflict.
  bool commit(int u, int x) {
    std::vector<std::pair<int, int>> queue{{u, x}};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const auto [a, b] = queue[qi];
      if (assign[a] != -1) {
        if (assign[a] != b) return false;
        continue;
      }
      if (injective && used[b] != -1) return false;
      assign[a] = b;
      used[b] = a;
      trail.push_back({a, b});
      for (std::size_t i = 0; i < trail.size(); ++i) {
        const auto [c, d] = trail[i];
        for (std::size_t s = 0; s < src_tables.size(); ++s) {
          const OpTable& ms = *src_tables[s];
          const OpTable& nt = *dst_tables[s];
          queue.push_back({ms[a][c], nt[b][d]});
          queue.push_back({ms[c][a], nt[d][b]});
        }
      }
    }
    return true;
  }

  void rollback(std::size_t mark) {
    while (trail.size() > mark) {
      const auto [a, b] = trail.back();
      trail.pop_back();
      assign[a] = -1;
      used[b] = -1;
    }
  }
};

std::vector<int> identity_order(int m) {
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

MorphismWitness witness_from(const MultiRack& m, const MultiRack& n,
                             const std::vector<int>& assign, const std::vector<int>& phi) {
  MorphismWitness w;
  w.element_map = assign;
  for (int s = 0; s < m.label_count(); ++s) w.label_map[m.labels()[s]] = n.labels()[phi[s]];
  return w;
}

bool iso_dfs(ElementSearch& es, const std::vector<std::vector<int>>& candidates,
             const std::vector<int>& order, std::size_t depth) {
  if (depth == order.size()) return true;
  const int u = order[depth];
  if (es.assign[u] != -1) return iso_dfs(es, candidates, order, depth + 1);
  for (int x : candidates[u]) {
    if (es.used[x] != -1) continue;
    es.budget->spend();
    const std::size_t mark = es.trail.size();
    if (es.commit(u, x) && iso_dfs(es, candidates, order, depth + 1)) return true;
    es.rollback(mark);
  }
  return false;
}

// All bijections between label sets compatible with the table fingerprints.
bool phi_dfs(const MultiRack& m, const MultiRack& n,
             const std::vector<Fingerprint>& mfp, const std::vector<Fingerprint>& nfp,
             std::vector<int>& phi, std::vector<char>& taken, int s, Budget& budget,
             std::optional<MorphismWitness>& result) {
  const int k = m.label_count();
  if (s == k) {
    // Candidate element maps under this label correspondence.
    const int order_m = m.order();
    std::vector<std::vector<Fingerprint>> mprof(order_m), nprof(n.order());
    for (int u = 0; u < order_m; ++u)
      for (int l = 0; l < k; ++l) mprof[u].push_back(element_fingerprint(m.table(l), u));
    for (int x = 0; x < n.order(); ++x)
      for (int l = 0; l < k; ++l) nprof[x].push_back(element_fingerprint(n.table(phi[l]), x));

    std::vector<std::vector<int>> candidates(order_m);
    for (int u = 0; u < order_m; ++u) {
      for (int x = 0; x < n.order(); ++x)
        if (mprof[u] == nprof[x]) candidates[u].push_back(x);
      if (candidates[u].empty()) return false;
    }
    std::vector<int> order = identity_order(order_m);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return candidates[a].size() < candidates[b].size() || (candidates[a].size() == candidates[b].size() && a < b);
    });

    ElementSearch es(m, n, phi, /*injective=*/true, &budget);
    if (iso_dfs(es, candidates, order, 0)) {
      result = witness_from(m, n, es.assign, phi);
      return true;
    }
    return false;
  }
  for (int t = 0; t < k; ++t) {
    if (taken[t] || mfp[s] != nfp[t]) continue;
    budget.spend();
    phi[s] = t;
    taken[t] = 1;
    if (phi_dfs(m, n, mfp, nfp, phi, taken, s + 1, budget, result)) return true;
    taken[t] = 0;
  }
  return false;
}

std::uint64_t hom_dfs(ElementSearch& es, const std::vector<int>& order, std::size_t depth) {
  if (depth == order.size()) return 1;
  const int u = order[depth];
  if (es.assign[u] != -1) return hom_dfs(es, order, depth + 1);
  std::uint64_t total = 0;
  for (int x = 0; x < es.target.order(); ++x) {
    es.budget->spend();
    const std::size_t mark = es.trail.size();
    if (es.commit(u, x)) total += hom_dfs(es, order, depth + 1);
    es.rollback(mark);
  }
  return total;
}

}  // namespace

std::optional<MorphismWitness> find_isomorphism(const MultiRack& m, const MultiRack& n,
                                                const SearchOptions& options) {
  if (m.order() != n.order() || m.label_count() != n.label_count()) return std::nullopt;
  const int k = m.label_count();
  std::vector<Fingerprint> mfp, nfp;
  for (int s = 0; s < k; ++s) {
    mfp.push_back(label_fingerprint(m.table(s)));
    nfp.push_back(label_fingerprint(n.table(s)));
  }
  Budget budget{0, options.node_budget};
  std::vector<int> phi(k, -1);
  std::vector<char> taken(k, 0);
  std::optional<MorphismWitness> result;
  phi_dfs(m, n, mfp, nfp, phi, taken, 0, budget, result);
  return result;
}

std::uint64_t count_homomorphisms(const MultiRack& source, const MultiRack& target,
                                  const std::optional<std::map<std::string, std::string>>& fixed_label_map,
                                  const SearchOptions& options) {
  const int k_src = source.label_count();
  const int k_dst = target.label_count();
  Budget budget{0, options.node_budget};

  const std::vector<int> order = identity_order(source.order());
  std::uint64_t total = 0;
  auto count_under = [&](const std::vector<int>& phi) {
    ElementSearch es(source, target, phi, /*injective=*/false, &budget);
    total += hom_dfs(es, order, 0);
  };

  if (fixed_label_map) {
    std::vector<int> phi(k_src, -1);
    for (const auto& [from, to] : *fixed_label_map) {
      if (!source.has_label(from))
        throw Error(ErrorCode::ShapeMismatch, "label map key '" + from + "' is not a source label");
      if (!target.has_label(to))
        throw Error(ErrorCode::ShapeMismatch, "label map value '" + to + "' is not a target label");
      phi[source.label_index(from)] = target.label_index(to);
    }
    for (int s = 0; s < k_src; ++s)
      if (phi[s] < 0)
        throw Error(ErrorCode::ShapeMismatch,
                    "label map is not total: '" + source.labels()[s] + "' unmapped");
    count_under(phi);
  } else {
    // Every function from source labels to target labels, odometer order.
    std::vector<int> phi(k_src, 0);
    while (true) {
      budget.spend();
      count_under(phi);
      int pos = k_src - 1;
      while (pos >= 0 && phi[pos] == k_dst - 1) phi[pos--] = 0;
      if (pos < 0) break;
      ++phi[pos];
    }
  }
  return total;
}

}  // namespace mq
