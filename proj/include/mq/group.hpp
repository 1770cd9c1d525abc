#pragma once

#include <span>
#include <string>
#include <vector>

#include "mq/errors.hpp"

namespace mq {

/// Finite group given by its Cayley table over elements 0..n-1.
///
/// Entry cayley[a][b] is the product a*b (row index = left factor). Validation
/// finds the two-sided identity, the inverse of every element, and proves
/// associativity: by the full all-triples scan for order <= 200, and by a
/// generating-set (Light) test above that, up to the construction cap 5040.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 5040;
  static constexpr int kFullAssociativityOrder = 200;

  /// Validates and wraps a Cayley table. Throws NoIdentity, NoInverse or
  /// NotAssociative (with a witness in the message), SizeLimitExceeded, or
  /// MalformedInput for a non-square/out-of-range table.
  static FiniteGroup from_cayley(std::vector<std::vector<int>> table);

  // Standard catalog. Element indexing conventions:
  //   cyclic n     : k is the residue k, product = addition mod n
  //   dihedral n   : order 2n; index a*n+i is s^a r^i with r^n = s^2 = e,
  //                  s r s = r^-1  (r = rotation, s = reflection)
  //   symmetric n  : permutations of {0..n-1} in lexicographic one-line
  //                  order; product p*q composes right-to-left, (p*q)(x) = p(q(x))
  //   quaternion8  : 0:1  1:-1  2:i  3:-i  4:j  5:-j  6:k  7:-k
  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int n);
  static FiniteGroup symmetric(int n);  // n <= 6
  static FiniteGroup quaternion8();

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return cayley_[a][b]; }
  int inv(int a) const { return inverses_[a]; }

  /// v^k by binary powering; negative k routes through the inverse table.
  int power(int v, long long k) const;

  /// Multiplicative order of a single element.
  int element_order(int v) const;

  /// Least e > 0 with v^e = identity for every v (lcm of element orders).
  int exponent() const;

  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

  const std::vector<std::vector<int>>& cayley() const { return cayley_; }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  std::vector<std::vector<int>> cayley_;
  int identity_ = 0;
  std::vector<int> inverses_;
};

enum class StandardKind { Cyclic, Dihedral, Symmetric, Quaternion8 };

FiniteGroup standard_group(StandardKind kind, int n = 0);

/// Subgroup of a parent group, stored as a sorted member list.
struct Subgroup {
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
};

/// True iff members is non-empty, contains the identity, and is closed under
/// product and inverse.
bool is_subgroup(const FiniteGroup& g, const Subgroup& h);

/// Smallest subgroup containing gens; empty gens yields {identity}.
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const int> gens);

/// Z(H) = { s in H : sh = hs for all h in H }, as a subgroup of the parent.
Subgroup center(const FiniteGroup& g, const Subgroup& h);

/// gHg^-1.
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int conj_by);

/// The left coset partition G/H together with the projection u -> uH.
struct CosetSpace {
  int block_count = 0;
  std::vector<int> block_of;         // element index -> block index (the projection p)
  std::vector<int> representatives;  // one element per block, the least member
};

CosetSpace left_cosets(const FiniteGroup& g, const Subgroup& h);

}  // namespace mq
