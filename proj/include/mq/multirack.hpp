#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mq/errors.hpp"

namespace mq {

using OpTable = std::vector<std::vector<int>>;  // table[u][v] = u |> v

/// Unvalidated carrier-plus-tables data: order m, one m x m table per label.
/// This is what files parse into and what the verifier consumes.
struct TableFamily {
  int order = 0;
  std::vector<std::string> labels;
  std::vector<OpTable> tables;  // parallel to labels

  const OpTable& table_for(const std::string& label) const;  // throws LabelNotFound
};

/// Throws MalformedInput / EmptyLabelSet unless the family is well-shaped:
/// order >= 1, labels non-empty and duplicate-free, one m x m table per label,
/// entries in 0..m-1.
void check_shape(const TableFamily& family);

enum class Axiom { NonDegenerate, Exchange, QuandleDiagonal };

const char* to_string(Axiom axiom);

/// One reproducible axiom failure. Field use per axiom:
///   NonDegenerate  : label s, right argument v, distinct u and w with
///                    T_s[u][v] == T_s[w][v]
///   Exchange       : labels s,t and elements u,v,w with
///                    T_t[T_s[u][v]][w] != T_s[T_t[u][w]][T_t[v][w]]
///   QuandleDiagonal: label s and element u with T_s[u][u] != u
struct Violation {
  Axiom axiom = Axiom::NonDegenerate;
  std::string s;
  std::string t;
  int u = -1;
  int v = -1;
  int w = -1;

  std::string describe() const;
};

struct VerificationReport {
  bool passed = true;
  std::vector<Violation> violations;
};

struct VerifyOptions {
  bool check_quandle = false;
  std::size_t max_violations = 10;
};

/// Exhaustive axiom check: non-degeneracy over all (s,v), the exchange
/// identity over all ordered label pairs (s,t) and all (u,v,w), and the
/// diagonal law u |>_s u = u when check_quandle is set. Scanning stops once
/// max_violations have been recorded.
VerificationReport verify(const TableFamily& family, const VerifyOptions& options = {});

/// True iff the witness tuple reproduces its violation against the tables.
bool replay_violation(const TableFamily& family, const Violation& violation);

class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(VerificationReport report);

  const VerificationReport& report() const noexcept { return report_; }

 private:
  VerificationReport report_;
};

/// A verified multi-rack: carrier {0..m-1} with a labeled family of
/// non-degenerate operations satisfying the exchange identity. Immutable
/// after construction.
class MultiRack {
 public:
  /// Verifies and wraps the family; throws AxiomViolation with the report on
  /// failure. With require_quandle the diagonal law is enforced as well.
  static MultiRack create(TableFamily family, bool require_quandle = false);

  int order() const { return family_.order; }
  int label_count() const { return static_cast<int>(family_.labels.size()); }
  const std::vector<std::string>& labels() const { return family_.labels; }
  const TableFamily& family() const { return family_; }

  int label_index(const std::string& label) const;  // throws LabelNotFound
  bool has_label(const std::string& label) const;

  int apply(int label_idx, int u, int v) const { return family_.tables[label_idx][u][v]; }
  int apply(const std::string& label, int u, int v) const {
    return apply(label_index(label), u, v);
  }
  const OpTable& table(int label_idx) const { return family_.tables[label_idx]; }

  /// Diagonal law holds on every label (checked at construction).
  bool is_quandle() const { return is_quandle_; }

 private:
  explicit MultiRack(TableFamily family);

  TableFamily family_;
  std::map<std::string, int> label_index_;
  bool is_quandle_ = false;
};

/// Same carrier, tables filtered to the given labels (kept in the multi-rack's
/// own label order). Throws EmptyLabelSet / LabelNotFound.
MultiRack restrict_operations(const MultiRack& m, std::span<const std::string> keep);

/// Pair of maps (element map Phi, label map phi) witnessing a morphism.
struct MorphismWitness {
  std::vector<int> element_map;                 // source element -> target element
  std::map<std::string, std::string> label_map; // source label -> target label
};

MorphismWitness identity_witness(const MultiRack& m);

/// Exhaustive equivariance check: Phi(u) |>_{phi(s)} Phi(v) = Phi(u |>_s v)
/// for all u, v, s. Throws ShapeMismatch if the witness does not fit.
bool is_morphism(const MultiRack& source, const MultiRack& target, const MorphismWitness& w);

/// Componentwise composition (first w1, then w2). Throws ShapeMismatch when
/// w1's codomain does not fit w2's domain.
MorphismWitness compose(const MorphismWitness& w1, const MorphismWitness& w2);

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000;
};

/// Backtracking isomorphism search with invariant pruning. Returns a witness
/// with bijective maps, or nullopt when exhaustive search proves there is
/// none. Throws SearchLimitExceeded when the node budget runs out, so
/// absent-by-budget is never reported as proven-absent.
std::optional<MorphismWitness> find_isomorphism(const MultiRack& m, const MultiRack& n,
                                                const SearchOptions& options = {});

/// Number of element maps Phi such that (Phi, phi) is a morphism, summed over
/// all label maps phi unless one is fixed. Backtracking with forward checking;
/// throws SearchLimitExceeded on budget exhaustion.
std::uint64_t count_homomorphisms(
    const MultiRack& source, const MultiRack& target,
    const std::optional<std::map<std::string, std::string>>& fixed_label_map = std::nullopt,
    const SearchOptions& options = {});

struct EnumerateOptions {
  bool require_quandle = true;
};

/// All multi-quandles (or multi-racks) with the given carrier order and label
/// count, one canonical representative per isomorphism class, in lexicographic
/// order of the canonical concatenated tables. Guard rails: order <= 5,
/// label_count <= 2 (SizeLimitExceeded otherwise). Labels are "a" and "b".
std::vector<MultiRack> enumerate_multiquandles(int order, int label_count,
                                               const EnumerateOptions& options = {});

}  // namespace mq
