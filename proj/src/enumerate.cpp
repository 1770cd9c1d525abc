#include <algorithm>
#include <numeric>

#include "mq/multirack.hpp"

// Exhaustive generation of small multi-quandles. A single operation table is
// stored column-wise: column v is the permutation u -> u |> v, and the
// self-distributivity law reads  c_w c_v c_w^-1 = c_{c_w(v)},  which prunes
// the column-by-column search hard (most columns are forced after two picks).

namespace mq {
namespace {

using Perm = std::vector<int>;

std::vector<Perm> all_perms(int m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm conjugate_perm(const Perm& outer, const Perm& inner) {
  // outer o inner o outer^-1
  const int m = static_cast<int>(outer.size());
  Perm inv(m), out(m);
  for (int i = 0; i < m; ++i) inv[outer[i]] = i;
  for (int i = 0; i < m; ++i) out[i] = outer[inner[inv[i]]];
  return out;
}

// Checks the law on all assigned column pairs; either fails or reports what
// the not-yet-assigned columns are forced to be.
bool consistent(int m, const std::vector<Perm>& cols, int assigned, std::vector<Perm>& forced,
                std::vector<char>& has_forced) {
  forced.assign(m, {});
  has_forced.assign(m, 0);
  for (int v = 0; v < assigned; ++v)
    for (int w = 0; w < assigned; ++w) {
      const int target = cols[w][v];
      const Perm want = conjugate_perm(cols[w], cols[v]);
      if (target < assigned) {
        if (cols[target] != want) return false;
      } else if (has_forced[target]) {
        if (forced[target] != want) return false;
      } else {
        has_forced[target] = 1;
        forced[target] = want;
      }
    }
  return true;
}

void generate_tables(int m, bool quandle, std::vector<std::vector<Perm>>& out) {
  const std::vector<Perm> perms = all_perms(m);
  std::vector<std::vector<const Perm*>> candidates(m);
  for (int v = 0; v < m; ++v)
    for (const Perm& p : perms)
      if (!quandle || p[v] == v) candidates[v].push_back(&p);

  std::vector<Perm> cols(m);
  std::vector<Perm> forced;
  std::vector<char> has_forced;

  auto dfs = [&](auto&& self, int v) -> void {
    if (v == m) {
      out.push_back(cols);
      return;
    }
    // A column already pinned by the law only needs re-validation.
    if (consistent(m, cols, v, forced, has_forced) && has_forced[v]) {
      if (quandle && forced[v][v] != v) return;
      cols[v] = forced[v];
      if (consistent(m, cols, v + 1, forced, has_forced)) self(self, v + 1);
      return;
    }
    for (const Perm* p : candidates[v]) {
      cols[v] = *p;
      if (consistent(m, cols, v + 1, forced, has_forced)) self(self, v + 1);
    }
  };
  dfs(dfs, 0);
}

OpTable table_from_columns(const std::vector<Perm>& cols) {
  const int m = static_cast<int>(cols.size());
  OpTable t(m, std::vector<int>(m));
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) t[u][v] = cols[v][u];
  return t;
}

bool mutual_exchange(const OpTable& a, const OpTable& b) {
  const int m = static_cast<int>(a.size());
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      for (int w = 0; w < m; ++w) {
        if (b[a[u][v]][w] != a[b[u][w]][b[v][w]]) return false;
        if (a[b[u][v]][w] != b[a[u][w]][a[v][w]]) return false;
      }
  return true;
}

std::vector<int> flatten(const std::vector<OpTable>& tables) {
  std::vector<int> flat;
  for (const auto& t : tables)
    for (const auto& row : t) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

std::vector<OpTable> relabel(const std::vector<OpTable>& tables, const Perm& sigma) {
  const int m = static_cast<int>(sigma.size());
  Perm inv(m);
  for (int i = 0; i < m; ++i) inv[sigma[i]] = i;
  std::vector<OpTable> out;
  out.reserve(tables.size());
  for (const auto& t : tables) {
    OpTable r(m, std::vector<int>(m));
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) r[u][v] = sigma[t[inv[u]][inv[v]]];
    out.push_back(std::move(r));
  }
  return out;
}

// Minimal concatenated tables over carrier relabelings and label reorderings.
std::vector<OpTable> canonical_form(const std::vector<OpTable>& tables, const std::vector<Perm>& perms) {
  std::vector<OpTable> best;
  std::vector<int> best_key;
  std::vector<std::vector<OpTable>> orderings{tables};
  if (tables.size() == 2) orderings.push_back({tables[1], tables[0]});
  for (const auto& ord : orderings)
    for (const Perm& sigma : perms) {
      std::vector<OpTable> cand = relabel(ord, sigma);
      std::vector<int> key = flatten(cand);
      if (best_key.empty() || key < best_key) {
        best_key = std::move(key);
        best = std::move(cand);
      }
    }
  return best;
}

MultiRack pack(int order, const std::vector<OpTable>& tables) {
  TableFamily family;
  family.order = order;
  static const char* names[] = {"a", "b"};
  for (std::size_t i = 0; i < tables.size(); ++i) {
    family.labels.push_back(names[i]);
    family.tables.push_back(tables[i]);
  }
  return MultiRack::create(std::move(family), false);
}

}  // namespace

std::vector<MultiRack> enumerate_multiquandles(int order, int label_count,
                                               const EnumerateOptions& options) {
  if (order < 1 || order > 5)
    throw Error(ErrorCode::SizeLimitExceeded, "enumeration supports order 1..5");
  if (label_count < 1 || label_count > 2)
    throw Error(ErrorCode::SizeLimitExceeded, "enumeration supports 1 or 2 labels");

  std::vector<std::vector<Perm>> column_families;
  generate_tables(order, options.require_quandle, column_families);
  std::vector<OpTable> singles;
  singles.reserve(column_families.size());
  for (const auto& cols : column_families) singles.push_back(table_from_columns(cols));

  std::vector<std::vector<OpTable>> families;
  if (label_count == 1) {
    for (auto& t : singles) families.push_back({t});
  } else {
    for (std::size_t i = 0; i < singles.size(); ++i)
      for (std::size_t j = i; j < singles.size(); ++j)
        if (mutual_exchange(singles[i], singles[j])) families.push_back({singles[i], singles[j]});
  }

  // Isomorphism classing: keep a family only if it matches no kept one.
  std::vector<MultiRack> reps;
  for (const auto& tables : families) {
    MultiRack candidate = pack(order, tables);
    bool known = false;
    for (const MultiRack& rep : reps)
      if (find_isomorphism(candidate, rep).has_value()) {
        known = true;
        break;
      }
    if (!known) reps.push_back(std::move(candidate));
  }

  // Deterministic output: canonical representative of each class, sorted.
  const std::vector<Perm> perms = all_perms(order);
  std::vector<std::vector<OpTable>> canon;
  canon.reserve(reps.size());
  for (const MultiRack& rep : reps) canon.push_back(canonical_form(rep.family().tables, perms));
  std::sort(canon.begin(), canon.end(),
            [](const auto& a, const auto& b) { return flatten(a) < flatten(b); });

  std::vector<MultiRack> out;
  out.reserve(canon.size());
  for (const auto& tables : canon) out.push_back(pack(order, tables));
  return out;
}

}  // namespace mq
