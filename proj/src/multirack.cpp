#include "mq/multirack.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mq {

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::NonDegenerate: return "NonDegenerate";
    case Axiom::Exchange: return "Exchange";
    case Axiom::QuandleDiagonal: return "QuandleDiagonal";
  }
  return "UnknownAxiom";
}

const OpTable& TableFamily::table_for(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return tables[i];
  throw Error(ErrorCode::LabelNotFound, "label '" + label + "'");
}

void check_shape(const TableFamily& family) {
  if (family.order < 1)
    throw Error(ErrorCode::MalformedInput, "carrier must be non-empty");
  if (family.labels.empty())
    throw Error(ErrorCode::EmptyLabelSet, "a multi-rack needs at least one operation");
  std::set<std::string> seen;
  for (const auto& l : family.labels)
    if (!seen.insert(l).second)
      throw Error(ErrorCode::MalformedInput, "duplicate label '" + l + "'");
  if (family.tables.size() != family.labels.size())
    throw Error(ErrorCode::MalformedInput, "one table per label required");
  const int m = family.order;
  for (const auto& t : family.tables) {
    if (static_cast<int>(t.size()) != m)
      throw Error(ErrorCode::MalformedInput, "table row count does not match order");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != m)
        throw Error(ErrorCode::MalformedInput, "table column count does not match order");
      for (int x : row)
        if (x < 0 || x >= m)
          throw Error(ErrorCode::MalformedInput,
                      "table entry " + std::to_string(x) + " out of range 0.." + std::to_string(m - 1));
    }
  }
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(axiom);
  switch (axiom) {
    case Axiom::NonDegenerate:
      os << " s=" << s << " v=" << v << ": u=" << u << " and u=" << w
         << " map to the same value";
      break;
    case Axiom::Exchange:
      os << " s=" << s << " t=" << t << " u=" << u << " v=" << v << " w=" << w;
      break;
    case Axiom::QuandleDiagonal:
      os << " s=" << s << " u=" << u;
      break;
  }
  return os.str();
}

VerificationReport verify(const TableFamily& family, const VerifyOptions& options) {
  check_shape(family);
  VerificationReport report;
  const int m = family.order;
  const int k = static_cast<int>(family.labels.size());

  auto record = [&](Violation v) {
    report.passed = false;
    if (report.violations.size() < options.max_violations) report.violations.push_back(std::move(v));
    return report.violations.size() >= options.max_violations;
  };

  // Non-degeneracy: u -> u |>_s v must be a bijection for every (s, v).
  std::vector<int> first_seen(m);
  for (int s = 0; s < k; ++s) {
    const OpTable& t = family.tables[s];
    for (int v = 0; v < m; ++v) {
      std::fill(first_seen.begin(), first_seen.end(), -1);
      for (int u = 0; u < m; ++u) {
        const int val = t[u][v];
        if (first_seen[val] >= 0) {
          if (record({Axiom::NonDegenerate, family.labels[s], "", first_seen[val], v, u}))
            return report;
        } else {
          first_seen[val] = u;
        }
      }
    }
  }

  // Exchange identity over all ordered label pairs, s = t included.
  for (int s = 0; s < k; ++s) {
    const OpTable& ts = family.tables[s];
    for (int t = 0; t < k; ++t) {
      const OpTable& tt = family.tables[t];
      for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
          for (int w = 0; w < m; ++w)
            if (tt[ts[u][v]][w] != ts[tt[u][w]][tt[v][w]]) {
              if (record({Axiom::Exchange, family.labels[s], family.labels[t], u, v, w}))
                return report;
            }
    }
  }

  if (options.check_quandle) {
    for (int s = 0; s < k; ++s)
      for (int u = 0; u < m; ++u)
        if (family.tables[s][u][u] != u) {
          if (record({Axiom::QuandleDiagonal, family.labels[s], "", u, -1, -1})) return report;
        }
  }

  return report;
}

bool replay_violation(const TableFamily& family, const Violation& violation) {
  const int m = family.order;
  auto in_range = [m](int x) { return x >= 0 && x < m; };
  try {
    switch (violation.axiom) {
      case Axiom::NonDegenerate: {
        const OpTable& t = family.table_for(violation.s);
        return in_range(violation.u) && in_range(violation.v) && in_range(violation.w) &&
               violation.u != violation.w && t[violation.u][violation.v] == t[violation.w][violation.v];
      }
      case Axiom::Exchange: {
        const OpTable& ts = family.table_for(violation.s);
        const OpTable& tt = family.table_for(violation.t);
        if (!in_range(violation.u) || !in_range(violation.v) || !in_range(violation.w)) return false;
        return tt[ts[violation.u][violation.v]][violation.w] !=
               ts[tt[violation.u][violation.w]][tt[violation.v][violation.w]];
      }
      case Axiom::QuandleDiagonal: {
        const OpTable& t = family.table_for(violation.s);
        return in_range(violation.u) && t[violation.u][violation.u] != violation.u;
      }
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

namespace {

std::string summarize(const VerificationReport& report) {
  std::ostringstream os;
  os << report.violations.size() << " violation(s)";
  if (!report.violations.empty()) os << "; first: " << report.violations.front().describe();
  return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(VerificationReport report)
    : Error(ErrorCode::AxiomViolation, summarize(report)), report_(std::move(report)) {}

MultiRack::MultiRack(TableFamily family) : family_(std::move(family)) {
  for (std::size_t i = 0; i < family_.labels.size(); ++i)
    label_index_[family_.labels[i]] = static_cast<int>(i);
  is_quandle_ = true;
  for (const auto& t : family_.tables)
    for (int u = 0; u < family_.order; ++u)
      if (t[u][u] != u) {
        is_quandle_ = false;
        return;
      }
}

MultiRack MultiRack::create(TableFamily family, bool require_quandle) {
  check_shape(family);
  VerifyOptions options;
  options.check_quandle = require_quandle;
  VerificationReport report = verify(family, options);
  if (!report.passed) throw AxiomViolation(std::move(report));
  return MultiRack(std::move(family));
}

int MultiRack::label_index(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) throw Error(ErrorCode::LabelNotFound, "label '" + label + "'");
  return it->second;
}

bool MultiRack::has_label(const std::string& label) const {
  return label_index_.count(label) != 0;
}

MultiRack restrict_operations(const MultiRack& m, std::span<const std::string> keep) {
  if (keep.empty())
    throw Error(ErrorCode::EmptyLabelSet, "restriction to an empty operation set");
  std::set<std::string> wanted;
  for (const auto& l : keep) {
    m.label_index(l);  // throws LabelNotFound
    wanted.insert(l);
  }
  TableFamily out;
  out.order = m.order();
  for (int i = 0; i < m.label_count(); ++i) {
    if (!wanted.count(m.labels()[i])) continue;
    out.labels.push_back(m.labels()[i]);
    out.tables.push_back(m.table(i));
  }
  return MultiRack::create(std::move(out), false);
}

MorphismWitness identity_witness(const MultiRack& m) {
  MorphismWitness w;
  w.element_map.resize(m.order());
  for (int u = 0; u < m.order(); ++u) w.element_map[u] = u;
  for (const auto& l : m.labels()) w.label_map[l] = l;
  return w;
}

namespace {

// Label map as an index vector, shape-checked against both sides.
std::vector<int> label_map_indices(const MultiRack& source, const MultiRack& target,
                                   const std::map<std::string, std::string>& label_map) {
  std::vector<int> phi(source.label_count(), -1);
  for (const auto& [from, to] : label_map) {
    if (!source.has_label(from))
      throw Error(ErrorCode::ShapeMismatch, "label map key '" + from + "' is not a source label");
    if (!target.has_label(to))
      throw Error(ErrorCode::ShapeMismatch, "label map value '" + to + "' is not a target label");
    phi[source.label_index(from)] = target.label_index(to);
  }
  for (int s = 0; s < source.label_count(); ++s)
    if (phi[s] < 0)
      throw Error(ErrorCode::ShapeMismatch,
                  "label map is not total: '" + source.labels()[s] + "' unmapped");
  return phi;
}

}  // namespace

bool is_morphism(const MultiRack& source, const MultiRack& target, const MorphismWitness& w) {
  if (static_cast<int>(w.element_map.size()) != source.order())
    throw Error(ErrorCode::ShapeMismatch, "element map size does not match source order");
  for (int x : w.element_map)
    if (x < 0 || x >= target.order())
      throw Error(ErrorCode::ShapeMismatch, "element map value out of target range");
  const std::vector<int> phi = label_map_indices(source, target, w.label_map);

  for (int s = 0; s < source.label_count(); ++s) {
    const OpTable& ms = source.table(s);
    const OpTable& nt = target.table(phi[s]);
    for (int u = 0; u < source.order(); ++u)
      for (int v = 0; v < source.order(); ++v)
        if (nt[w.element_map[u]][w.element_map[v]] != w.element_map[ms[u][v]]) return false;
  }
  return true;
}

MorphismWitness compose(const MorphismWitness& w1, const MorphismWitness& w2) {
  MorphismWitness out;
  out.element_map.reserve(w1.element_map.size());
  for (int x : w1.element_map) {
    if (x < 0 || x >= static_cast<int>(w2.element_map.size()))
      throw Error(ErrorCode::ShapeMismatch, "element maps do not compose");
    out.element_map.push_back(w2.element_map[x]);
  }
  for (const auto& [from, mid] : w1.label_map) {
    auto it = w2.label_map.find(mid);
    if (it == w2.label_map.end())
      throw Error(ErrorCode::ShapeMismatch, "label maps do not compose at '" + mid + "'");
    out.label_map[from] = it->second;
  }
  return out;
}

}  // namespace mq
