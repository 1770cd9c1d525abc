#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mq/multirack.hpp"

namespace mq {

/// One PD crossing: arc labels (a,b,c,d) listed counterclockwise from the
/// incoming under-strand a. The under-strand runs a -> c; the over-strand is
/// b -> d at a positive crossing (d = b+1 cyclically) and d -> b at a negative
/// one (b = d+1 cyclically).
struct Crossing {
  std::array<int, 4> arcs;  // 1-based labels as written in the PD code
  int sign = 0;             // +1 or -1
};

/// Oriented knot diagram in PD notation. Arc labels are the 2c strand
/// segments between consecutive crossing visits; the zero-crossing unknot has
/// a single arc.
struct KnotDiagram {
  std::vector<Crossing> crossings;
  int arc_count = 0;
};

/// Parses "X[a,b,c,d];X[...]..." or the literal "unknot". Throws MalformedPD
/// when the text does not match the grammar, and ArcCountMismatch when the
/// labels do not form a closed single-strand traversal (a label not appearing
/// exactly twice in 1..2c, a broken under-strand, or an unorientable
/// crossing).
KnotDiagram parse_pd(std::string_view text);

/// One crossing relation between generators (0-based arc indices):
///   sign > 0 :  g[out] = g[in] |> g[over]
///   sign < 0 :  g[in]  = g[out] |> g[over]
struct Relation {
  int in = 0;
  int over = 0;
  int out = 0;
  int sign = 0;
};

/// Wirtinger-style presentation read off the diagram: one generator per arc,
/// one relation per crossing, plus one over-strand gluing per crossing (the
/// over-strand is not cut, so its two arc labels must take equal values).
struct QuandlePresentation {
  int generator_count = 0;
  std::vector<Relation> relations;
  std::vector<std::pair<int, int>> over_strand;  // equal-value generator pairs
};

QuandlePresentation wirtinger_presentation(const KnotDiagram& diagram);

/// Number of assignments of target elements to generators satisfying every
/// relation and every over-strand gluing, using only the distinguished
/// meridian operation of the target; negative relations use the inverse
/// operation that non-degeneracy guarantees. Throws LabelNotFound for an
/// unknown label and AxiomViolation when the target is not a quandle.
std::uint64_t count_colorings(const QuandlePresentation& presentation, const MultiRack& target,
                              const std::string& meridian_label);

/// Componentwise count_colorings over (target, meridian label) pairs.
std::vector<std::uint64_t> invariant_profile(
    const KnotDiagram& diagram,
    const std::vector<std::pair<const MultiRack*, std::string>>& targets);

}  // namespace mq
