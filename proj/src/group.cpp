#include "mq/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mq {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::EmptyLabelSet: return "EmptyLabelSet";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SearchLimitExceeded: return "SearchLimitExceeded";
    case ErrorCode::LabelNotFound: return "LabelNotFound";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::SNotInCenter: return "SNotInCenter";
    case ErrorCode::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorCode::MalformedPD: return "MalformedPD";
    case ErrorCode::ArcCountMismatch: return "ArcCountMismatch";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "UnknownError";
}

namespace {

// Greedy generating set: repeatedly adjoin the least element outside the
// closure of the current set under the table product.
std::vector<int> greedy_generators(const std::vector<std::vector<int>>& t, int identity) {
  const int n = static_cast<int>(t.size());
  std::vector<char> closed(n, 0);
  closed[identity] = 1;
  std::vector<int> members{identity};
  std::vector<int> gens;

  auto close_over = [&]() {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        int p = t[members[i]][members[j]];
        if (!closed[p]) {
          closed[p] = 1;
          members.push_back(p);
        }
        p = t[members[j]][members[i]];
        if (!closed[p]) {
          closed[p] = 1;
          members.push_back(p);
        }
      }
    }
  };

  close_over();
  for (int x = 0; x < n; ++x) {
    if (closed[x]) continue;
    gens.push_back(x);
    closed[x] = 1;
    members.push_back(x);
    close_over();
  }
  return gens;
}

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::MalformedInput, "Cayley table is empty");
  if (n > kMaxOrder)
    throw Error(ErrorCode::SizeLimitExceeded,
                "group order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::MalformedInput, "Cayley table is not square");
    for (int x : row)
      if (x < 0 || x >= n)
        throw Error(ErrorCode::MalformedInput,
                    "table entry " + std::to_string(x) + " out of range 0.." + std::to_string(n - 1));
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");

  std::vector<int> inverses(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == identity && table[b][a] == identity) {
        inverses[a] = b;
        break;
      }
    }
    if (inverses[a] < 0)
      throw Error(ErrorCode::NoInverse,
                  "element " + std::to_string(a) + " has no two-sided inverse");
  }

  if (n <= kFullAssociativityOrder) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw Error(ErrorCode::NotAssociative, "witness triple " + triple(a, b, c));
  } else {
    // Light's test: elements g with (a*g)*b = a*(g*b) for all a,b form a set
    // closed under the product, so checking a generating set proves the whole
    // table associative.
    for (int g : greedy_generators(table, identity))
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (table[table[a][g]][b] != table[a][table[g][b]])
            throw Error(ErrorCode::NotAssociative, "witness triple " + triple(a, g, b));
  }

  FiniteGroup g;
  g.order_ = n;
  g.cayley_ = std::move(table);
  g.identity_ = identity;
  g.inverses_ = std::move(inverses);
  return g;
}

int FiniteGroup::power(int v, long long k) const {
  if (k < 0) {
    v = inv(v);
    k = -k;
  }
  int acc = identity_;
  int base = v;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int v) const {
  int x = v;
  int k = 1;
  while (x != identity_) {
    x = mul(x, v);
    ++k;
  }
  return k;
}

int FiniteGroup::exponent() const {
  long long e = 1;
  for (int v = 0; v < order_; ++v) e = std::lcm(e, static_cast<long long>(element_order(v)));
  return static_cast<int>(e);  // divides the group order
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1 || n > kMaxOrder)
    throw Error(ErrorCode::SizeLimitExceeded, "cyclic order must be in 1.." + std::to_string(kMaxOrder));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_cayley(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1 || 2 * n > kMaxOrder)
    throw Error(ErrorCode::SizeLimitExceeded, "dihedral parameter out of range");
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a) {
    const int alpha = a / n, i = a % n;
    for (int b = 0; b < m; ++b) {
      const int beta = b / n, j = b % n;
      // (s^alpha r^i)(s^beta r^j) = s^(alpha+beta) r^(i*(-1)^beta + j)
      const int flip = (alpha + beta) % 2;
      const int rot = ((beta ? n - i : i) + j) % n;
      t[a][b] = flip * n + rot;
    }
  }
  return from_cayley(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6)
    throw Error(ErrorCode::SizeLimitExceeded, "symmetric group parameter must be in 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const int m = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;

  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<int> comp(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];  // right-to-left
      t[a][b] = index[comp];
    }
  return from_cayley(std::move(t));
}

FiniteGroup FiniteGroup::quaternion8() {
  // Axes 0:1 1:i 2:j 3:k, element index = 2*axis + (sign < 0).
  static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sg[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  // sg[a][b] is the sign of e_a * e_b: i*i = -1, i*j = k, j*i = -k, ...
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int axa = a / 2, axb = b / 2;
      int sign = ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1) * sg[axa][axb];
      t[a][b] = 2 * ax[axa][axb] + (sign < 0 ? 1 : 0);
    }
  return from_cayley(std::move(t));
}

FiniteGroup standard_group(StandardKind kind, int n) {
  switch (kind) {
    case StandardKind::Cyclic: return FiniteGroup::cyclic(n);
    case StandardKind::Dihedral: return FiniteGroup::dihedral(n);
    case StandardKind::Symmetric: return FiniteGroup::symmetric(n);
    case StandardKind::Quaternion8: return FiniteGroup::quaternion8();
  }
  throw Error(ErrorCode::MalformedInput, "unknown standard group kind");
}

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.members.empty()) return false;
  if (!std::is_sorted(h.members.begin(), h.members.end())) return false;
  for (int x : h.members)
    if (x < 0 || x >= g.order()) return false;
  if (!h.contains(g.identity())) return false;
  for (int a : h.members) {
    if (!h.contains(g.inv(a))) return false;
    for (int b : h.members)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const int> gens) {
  for (int x : gens)
    if (x < 0 || x >= g.order())
      throw Error(ErrorCode::MalformedInput, "generator index " + std::to_string(x) + " out of range");

  std::vector<char> in(g.order(), 0);
  std::vector<int> work{g.identity()};
  in[g.identity()] = 1;
  for (int x : gens) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
    const int xi = g.inv(x);
    if (!in[xi]) {
      in[xi] = 1;
      work.push_back(xi);
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) {
      const int p = g.mul(work[i], work[j]);
      if (!in[p]) {
        in[p] = 1;
        work.push_back(p);
      }
    }
  std::sort(work.begin(), work.end());
  return Subgroup{std::move(work)};
}

Subgroup center(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> z;
  for (int s : h.members) {
    bool central = true;
    for (int x : h.members)
      if (g.mul(s, x) != g.mul(x, s)) {
        central = false;
        break;
      }
    if (central) z.push_back(s);
  }
  return Subgroup{std::move(z)};  // members scanned in sorted order
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int conj_by) {
  std::vector<int> out;
  out.reserve(h.members.size());
  for (int x : h.members) out.push_back(g.conjugate(conj_by, x));
  std::sort(out.begin(), out.end());
  return Subgroup{std::move(out)};
}

CosetSpace left_cosets(const FiniteGroup& g, const Subgroup& h) {
  CosetSpace cs;
  cs.block_of.assign(g.order(), -1);
  for (int u = 0; u < g.order(); ++u) {
    if (cs.block_of[u] >= 0) continue;
    const int b = cs.block_count++;
    cs.representatives.push_back(u);
    for (int x : h.members) cs.block_of[g.mul(u, x)] = b;  // the coset uH
  }
  return cs;
}

}  // namespace mq
