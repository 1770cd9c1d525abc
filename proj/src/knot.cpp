#include "mq/knot.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace mq {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed(std::string_view term) {
  throw Error(ErrorCode::MalformedPD, "cannot parse crossing '" + std::string(term) + "'");
}

std::array<int, 4> parse_crossing(std::string_view term) {
  std::string_view rest = trim(term);
  if (rest.empty() || (rest.front() != 'X' && rest.front() != 'x')) malformed(term);
  rest.remove_prefix(1);
  rest = trim(rest);
  if (rest.empty() || rest.front() != '[' || rest.back() != ']') malformed(term);
  rest.remove_prefix(1);
  rest.remove_suffix(1);

  std::array<int, 4> labels{};
  int field = 0;
  std::size_t pos = 0;
  while (field < 4) {
    while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < rest.size() && std::isdigit(static_cast<unsigned char>(rest[pos]))) ++pos;
    if (pos == start || pos - start > 8) malformed(term);
    labels[field] = std::stoi(std::string(rest.substr(start, pos - start)));
    while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
    ++field;
    if (field < 4) {
      if (pos >= rest.size() || rest[pos] != ',') malformed(term);
      ++pos;
    }
  }
  if (pos != rest.size()) malformed(term);
  return labels;
}

}  // namespace

KnotDiagram parse_pd(std::string_view text) {
  const std::string_view body = trim(text);
  if (body == "unknot") return KnotDiagram{{}, 1};
  if (body.empty()) throw Error(ErrorCode::MalformedPD, "empty PD code");

  std::vector<std::array<int, 4>> quads;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t semi = body.find(';', start);
    const std::string_view term =
        body.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    quads.push_back(parse_crossing(term));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }

  const int arc_count = 2 * static_cast<int>(quads.size());
  std::map<int, int> occurrences;
  for (const auto& q : quads)
    for (int l : q) ++occurrences[l];
  for (const auto& [label, count] : occurrences)
    if (label < 1 || label > arc_count)
      throw Error(ErrorCode::ArcCountMismatch,
                  "arc label " + std::to_string(label) + " outside 1.." + std::to_string(arc_count));
  for (int l = 1; l <= arc_count; ++l) {
    const auto it = occurrences.find(l);
    const int count = it == occurrences.end() ? 0 : it->second;
    if (count != 2)
      throw Error(ErrorCode::ArcCountMismatch, "arc label " + std::to_string(l) + " appears " +
                                                   std::to_string(count) + " time(s), expected 2");
  }

  const auto succ = [arc_count](int l) { return l % arc_count + 1; };
  KnotDiagram d;
  d.arc_count = arc_count;
  for (const auto& q : quads) {
    const auto [a, b, c, dd] = q;
    if (c != succ(a))
      throw Error(ErrorCode::ArcCountMismatch,
                  "under-strand enters as arc " + std::to_string(a) + " and must leave as arc " +
                      std::to_string(succ(a)) + ", got " + std::to_string(c));
    int sign = 0;
    if (dd == succ(b))
      sign = +1;  // over-strand runs b -> d
    else if (b == succ(dd))
      sign = -1;  // over-strand runs d -> b
    else
      throw Error(ErrorCode::ArcCountMismatch,
                  "over-strand arcs " + std::to_string(b) + "," + std::to_string(dd) +
                      " are not consecutive; crossing cannot be oriented");
    d.crossings.push_back(Crossing{q, sign});
  }
  return d;
}

QuandlePresentation wirtinger_presentation(const KnotDiagram& diagram) {
  QuandlePresentation p;
  p.generator_count = diagram.arc_count;
  for (const auto& [arcs, sign] : diagram.crossings) {
    const int in = arcs[0] - 1, out = arcs[2] - 1;
    const int over_in = sign > 0 ? arcs[1] - 1 : arcs[3] - 1;
    const int over_out = sign > 0 ? arcs[3] - 1 : arcs[1] - 1;
    p.relations.push_back(Relation{in, over_in, out, sign});
    p.over_strand.emplace_back(over_in, over_out);
  }
  return p;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct ColoringProblem {
  int class_count = 0;
  int m = 0;
  const OpTable* table = nullptr;
  OpTable inverse;                 // inverse[j][y] = u with table[u][j] == y
  std::vector<Relation> relations; // on class indices

  bool satisfied(const Relation& r, const std::vector<int>& color) const {
    const OpTable& t = *table;
    if (r.sign > 0) return t[color[r.in]][color[r.over]] == color[r.out];
    return t[color[r.out]][color[r.over]] == color[r.in];
  }
};

// Forces colors through relations with a known over-strand; false on conflict.
bool propagate(const ColoringProblem& prob, std::vector<int>& color, std::vector<int>& trail) {
  bool changed = true;
  auto set_color = [&](int cls, int val) {
    if (color[cls] == val) return true;
    if (color[cls] != -1) return false;
    color[cls] = val;
    trail.push_back(cls);
    changed = true;
    return true;
  };
  while (changed) {
    changed = false;
    for (const Relation& r : prob.relations) {
      const int over = color[r.over];
      if (over == -1) continue;
      const OpTable& t = *prob.table;
      if (r.sign > 0) {
        if (color[r.in] != -1 && !set_color(r.out, t[color[r.in]][over])) return false;
        if (color[r.out] != -1 && !set_color(r.in, prob.inverse[over][color[r.out]])) return false;
      } else {
        if (color[r.out] != -1 && !set_color(r.in, t[color[r.out]][over])) return false;
        if (color[r.in] != -1 && !set_color(r.out, prob.inverse[over][color[r.in]])) return false;
      }
    }
  }
  return true;
}

std::uint64_t coloring_dfs(const ColoringProblem& prob, std::vector<int>& color, int next) {
  while (next < prob.class_count && color[next] != -1) ++next;
  if (next == prob.class_count) {
    for (const Relation& r : prob.relations)
      if (!prob.satisfied(r, color)) return 0;
    return 1;
  }
  std::uint64_t total = 0;
  for (int val = 0; val < prob.m; ++val) {
    std::vector<int> trail;
    color[next] = val;
    trail.push_back(next);
    if (propagate(prob, color, trail)) total += coloring_dfs(prob, color, next + 1);
    for (int cls : trail) color[cls] = -1;
  }
  return total;
}

}  // namespace

std::uint64_t count_colorings(const QuandlePresentation& presentation, const MultiRack& target,
                              const std::string& meridian_label) {
  const int label = target.label_index(meridian_label);  // throws LabelNotFound
  if (!target.is_quandle()) {
    VerifyOptions options;
    options.check_quandle = true;
    throw AxiomViolation(verify(target.family(), options));
  }

  UnionFind uf(presentation.generator_count);
  for (const auto& [a, b] : presentation.over_strand) uf.unite(a, b);

  std::vector<int> class_of(presentation.generator_count, -1);
  int classes = 0;
  for (int gen = 0; gen < presentation.generator_count; ++gen) {
    const int root = uf.find(gen);
    if (class_of[root] == -1) class_of[root] = classes++;
    class_of[gen] = class_of[root];
  }

  ColoringProblem prob;
  prob.class_count = classes;
  prob.m = target.order();
  prob.table = &target.table(label);
  prob.inverse.assign(prob.m, std::vector<int>(prob.m));
  for (int j = 0; j < prob.m; ++j)
    for (int u = 0; u < prob.m; ++u) prob.inverse[j][(*prob.table)[u][j]] = u;
  for (const Relation& r : presentation.relations)
    prob.relations.push_back(Relation{class_of[r.in], class_of[r.over], class_of[r.out], r.sign});

  std::vector<int> color(classes, -1);
  return coloring_dfs(prob, color, 0);
}

std::vector<std::uint64_t> invariant_profile(
    const KnotDiagram& diagram,
    const std::vector<std::pair<const MultiRack*, std::string>>& targets) {
  const QuandlePresentation presentation = wirtinger_presentation(diagram);
  std::vector<std::uint64_t> out;
  out.reserve(targets.size());
  for (const auto& [target, label] : targets)
    out.push_back(count_colorings(presentation, *target, label));
  return out;
}

}  // namespace mq
