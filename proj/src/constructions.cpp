#include "mq/constructions.hpp"

#include <numeric>
#include <set>

namespace mq {

std::string conjugation_label(int s) { return "g:" + std::to_string(s); }
std::string power_label(int n) { return "n:" + std::to_string(n); }
std::string coset_label(int s) { return "coset-s:" + std::to_string(s); }
std::string alexander_label(long long unit) { return "t:" + std::to_string(unit); }

MultiRack trivial_quandle(int m) {
  if (m < 1) throw Error(ErrorCode::MalformedInput, "carrier must be non-empty");
  TableFamily family;
  family.order = m;
  family.labels = {"triv"};
  OpTable t(m, std::vector<int>(m));
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) t[u][v] = u;
  family.tables.push_back(std::move(t));
  return MultiRack::create(std::move(family), true);
}

AutomorphismFamily make_automorphism_family(
    FiniteGroup group, std::vector<std::pair<std::string, std::vector<int>>> maps) {
  const int n = group.order();
  std::set<std::string> labels;
  for (const auto& [label, f] : maps) {
    if (!labels.insert(label).second)
      throw Error(ErrorCode::MalformedInput, "duplicate map label '" + label + "'");
    if (static_cast<int>(f.size()) != n)
      throw Error(ErrorCode::MalformedInput, "map '" + label + "' has the wrong domain size");
    std::vector<char> hit(n, 0);
    for (int x : f) {
      if (x < 0 || x >= n || hit[x])
        throw Error(ErrorCode::NotAutomorphism, "map '" + label + "' is not a bijection");
      hit[x] = 1;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (f[group.mul(a, b)] != group.mul(f[a], f[b]))
          throw Error(ErrorCode::NotAutomorphism,
                      "map '" + label + "' breaks f(ab)=f(a)f(b) at a=" + std::to_string(a) +
                          " b=" + std::to_string(b));
  }
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j)
      for (int x = 0; x < n; ++x)
        if (maps[i].second[maps[j].second[x]] != maps[j].second[maps[i].second[x]])
          throw Error(ErrorCode::NotCommuting,
                      "maps '" + maps[i].first + "' and '" + maps[j].first +
                          "' disagree at element " + std::to_string(x));
  return AutomorphismFamily{std::move(group), std::move(maps)};
}

AutomorphismFamily alexander_family(int modulus, std::span<const long long> units) {
  if (modulus < 1) throw Error(ErrorCode::MalformedInput, "modulus must be positive");
  std::vector<std::pair<std::string, std::vector<int>>> maps;
  std::set<long long> seen;
  for (long long unit : units) {
    const long long r = ((unit % modulus) + modulus) % modulus;
    if (std::gcd(r, static_cast<long long>(modulus)) != 1)
      throw Error(ErrorCode::NotInvertible,
                  "unit " + std::to_string(unit) + " is not invertible mod " + std::to_string(modulus));
    if (!seen.insert(r).second) continue;
    std::vector<int> f(modulus);
    for (int x = 0; x < modulus; ++x) f[x] = static_cast<int>((r * x) % modulus);
    maps.emplace_back(alexander_label(r), std::move(f));
  }
  return make_automorphism_family(FiniteGroup::cyclic(modulus), std::move(maps));
}

MultiRack automorphism_multiquandle(const AutomorphismFamily& family) {
  const FiniteGroup& g = family.group;
  const int n = g.order();
  TableFamily out;
  out.order = n;
  for (const auto& [label, f] : family.maps) {
    OpTable t(n, std::vector<int>(n));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) t[u][v] = g.mul(f[g.mul(u, g.inv(v))], v);  // f_s(u v^-1) v
    out.labels.push_back(label);
    out.tables.push_back(std::move(t));
  }
  return MultiRack::create(std::move(out), true);
}

MultiRack conjugation_power_multiquandle(const FiniteGroup& g,
                                         std::optional<std::vector<long long>> powers) {
  const int n = g.order();
  const int e = g.exponent();
  std::vector<int> residues;
  if (powers) {
    std::set<int> seen;
    for (long long k : *powers) {
      const int r = static_cast<int>(((k % e) + e) % e);
      if (seen.insert(r).second) residues.push_back(r);
    }
    if (residues.empty()) throw Error(ErrorCode::EmptyLabelSet, "no powers given");
  } else {
    residues.resize(e);
    std::iota(residues.begin(), residues.end(), 0);
  }

  TableFamily out;
  out.order = n;
  for (int r : residues) {
    OpTable t(n, std::vector<int>(n));
    for (int v = 0; v < n; ++v) {
      const int vn = g.power(v, r);
      const int vninv = g.inv(vn);
      for (int u = 0; u < n; ++u) t[u][v] = g.mul(g.mul(vninv, u), vn);  // v^-n u v^n
    }
    out.labels.push_back(power_label(r));
    out.tables.push_back(std::move(t));
  }
  return MultiRack::create(std::move(out), true);
}

MultiRack conjugation_multirack(const FiniteGroup& g) {
  const int n = g.order();
  TableFamily out;
  out.order = n;
  for (int s = 0; s < n; ++s) {
    OpTable t(n, std::vector<int>(n));
    for (int v = 0; v < n; ++v) {
      const int vs = g.conjugate(v, s);  // v s v^-1
      for (int u = 0; u < n; ++u) t[u][v] = g.mul(vs, u);
    }
    out.labels.push_back(conjugation_label(s));
    out.tables.push_back(std::move(t));
  }
  return MultiRack::create(std::move(out), false);
}

WellDefinednessFailure::WellDefinednessFailure(int s_, int u_, int v_, int g_, int h_)
    : Error(ErrorCode::WellDefinednessFailure,
            "p((u g) |>_s (v h)) != p(u |>_s v) at s=" + std::to_string(s_) +
                " u=" + std::to_string(u_) + " v=" + std::to_string(v_) +
                " g=" + std::to_string(g_) + " h=" + std::to_string(h_)),
      s(s_), u(u_), v(v_), g(g_), h(h_) {}

MultiRack coset_multiquandle(const FiniteGroup& g, const Subgroup& h,
                             std::optional<std::vector<int>> chosen, bool require_central) {
  if (!is_subgroup(g, h)) throw Error(ErrorCode::MalformedInput, "H is not a subgroup");
  const Subgroup z = center(g, h);

  std::vector<int> selection;
  if (chosen) {
    std::set<int> seen;
    for (int s : *chosen) {
      if (s < 0 || s >= g.order())
        throw Error(ErrorCode::MalformedInput, "element " + std::to_string(s) + " out of range");
      if (require_central && !z.contains(s))
        throw Error(ErrorCode::SNotInCenter,
                    "element " + std::to_string(s) + " is not in Z(H)");
      if (seen.insert(s).second) selection.push_back(s);
    }
    if (selection.empty()) throw Error(ErrorCode::EmptyLabelSet, "no operation elements chosen");
  } else {
    selection = z.members;  // never empty: the identity is central
  }

  const CosetSpace cosets = left_cosets(g, h);

  // Lemma-level check, run before the tables are trusted: the operation on G
  // must be constant on coset pairs.
  for (int s : selection) {
    for (int v = 0; v < g.order(); ++v) {
      for (int hh : h.members) {
        const int vh = g.mul(v, hh);
        const int cvh = g.mul(g.mul(vh, s), g.inv(vh));  // (vh) s (vh)^-1
        const int cv = g.mul(g.mul(v, s), g.inv(v));
        for (int u = 0; u < g.order(); ++u) {
          const int base = cosets.block_of[g.mul(cv, u)];
          for (int gg : h.members)
            if (cosets.block_of[g.mul(cvh, g.mul(u, gg))] != base)
              throw WellDefinednessFailure(s, u, v, gg, hh);
        }
      }
    }
  }

  TableFamily out;
  out.order = cosets.block_count;
  for (int s : selection) {
    OpTable t(cosets.block_count, std::vector<int>(cosets.block_count));
    for (int b2 = 0; b2 < cosets.block_count; ++b2) {
      const int v = cosets.representatives[b2];
      const int cv = g.mul(g.mul(v, s), g.inv(v));
      for (int b1 = 0; b1 < cosets.block_count; ++b1) {
        const int u = cosets.representatives[b1];
        t[b1][b2] = cosets.block_of[g.mul(cv, u)];  // (v s v^-1 u) H
      }
    }
    out.labels.push_back(coset_label(s));
    out.tables.push_back(std::move(t));
  }
  return MultiRack::create(std::move(out), true);
}

MorphismWitness conjugate_coset_isomorphism(const FiniteGroup& g, const Subgroup& h, int conj_by) {
  if (!is_subgroup(g, h)) throw Error(ErrorCode::MalformedInput, "H is not a subgroup");
  if (conj_by < 0 || conj_by >= g.order())
    throw Error(ErrorCode::MalformedInput, "conjugating element out of range");

  const Subgroup k = conjugate_subgroup(g, h, conj_by);
  const CosetSpace src = left_cosets(g, h);
  const CosetSpace dst = left_cosets(g, k);

  MorphismWitness w;
  w.element_map.resize(src.block_count);
  const int ginv = g.inv(conj_by);
  for (int b = 0; b < src.block_count; ++b)
    w.element_map[b] = dst.block_of[g.mul(src.representatives[b], ginv)];  // uH -> (u g^-1) K
  for (int s : center(g, h).members)
    w.label_map[coset_label(s)] = coset_label(g.conjugate(conj_by, s));    // s -> g s g^-1
  return w;
}

}  // namespace mq
