#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mq/group.hpp"
#include "mq/multirack.hpp"

namespace mq {

/// A finite group together with a family of pairwise commuting automorphisms,
/// each given as an explicit permutation of the elements.
struct AutomorphismFamily {
  FiniteGroup group;
  std::vector<std::pair<std::string, std::vector<int>>> maps;  // label -> permutation
};

/// Validates the maps: each must satisfy f(ab) = f(a)f(b) (NotAutomorphism with
/// a witness pair) and every two must commute as functions (NotCommuting).
AutomorphismFamily make_automorphism_family(
    FiniteGroup group, std::vector<std::pair<std::string, std::vector<int>>> maps);

/// Z/n with one multiplication-by-unit map per entry; units are reduced mod n
/// and deduplicated. Labels are "t:<unit>". Throws NotInvertible when a unit
/// shares a factor with n.
AutomorphismFamily alexander_family(int modulus, std::span<const long long> units);

/// u |> v = u on m points, single label "triv".
MultiRack trivial_quandle(int m);

/// u |>_s v = f_s(u v^-1) v, one label per map.
MultiRack automorphism_multiquandle(const AutomorphismFamily& family);

/// u |>_n v = v^-n u v^n. Labels "n:<k>" for k = n mod exponent(G); all
/// residues when powers is absent, otherwise the given powers reduced and
/// deduplicated (empty reduction throws EmptyLabelSet).
MultiRack conjugation_power_multiquandle(const FiniteGroup& g,
                                         std::optional<std::vector<long long>> powers = {});

/// u |>_s v = v s v^-1 u with one label "g:<s>" per group element. A
/// multi-rack; fails the quandle diagonal at every s != identity when G is
/// nontrivial.
MultiRack conjugation_multirack(const FiniteGroup& g);

class WellDefinednessFailure : public Error {
 public:
  WellDefinednessFailure(int s, int u, int v, int g, int h);

  // Witness: p((u g) |>_s (v h)) != p(u |>_s v) in the parent group.
  int s, u, v, g, h;
};

/// The coset multi-quandle on G/H: uH |>_s vH = (v s v^-1 u)H for s in Z(H)
/// (all of Z(H) when chosen is absent). Labels "coset-s:<s>". Chosen elements
/// outside Z(H) throw SNotInCenter; with require_central = false the center
/// membership check is skipped and well-definedness itself decides, throwing
/// WellDefinednessFailure with a replayable witness (u, v, g, h) when the
/// operation does not descend to cosets. Well-definedness is always verified
/// exhaustively over all u, v in G and g, h in H before the table is accepted.
MultiRack coset_multiquandle(const FiniteGroup& g, const Subgroup& h,
                             std::optional<std::vector<int>> chosen = {},
                             bool require_central = true);

/// Isomorphism witness between coset_multiquandle(G, H) and
/// coset_multiquandle(G, gHg^-1): Phi(uH) = (u g^-1)(gHg^-1), phi(s) = g s g^-1.
MorphismWitness conjugate_coset_isomorphism(const FiniteGroup& g, const Subgroup& h, int conj_by);

// Label spellings used by the constructions above.
std::string conjugation_label(int s);        // "g:<s>"
std::string power_label(int n);              // "n:<k>"
std::string coset_label(int s);              // "coset-s:<s>"
std::string alexander_label(long long unit); // "t:<unit reduced>"

}  // namespace mq
