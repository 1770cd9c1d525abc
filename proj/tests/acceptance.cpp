// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. The randomized mutation criterion takes an explicit --seed.

#include <chrono>
#include <cstdint>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mq/constructions.hpp"
#include "mq/group.hpp"
#include "mq/io.hpp"
#include "mq/knot.hpp"
#include "mq/multirack.hpp"
#include "oracles.hpp"

using namespace mq;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  Criterion(int id_, std::string name_, double budget_) : id(id_), name(std::move(name_)), budget_seconds(budget_) {}

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }

  void finish() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds && ok) {
      ok = false;
      detail = "runtime " + std::to_string(elapsed) + "s over budget";
    }
    if (!ok) ++g_failures;
    std::printf("%s criterion %d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), elapsed,
                ok ? "" : ("  [" + detail + "]").c_str());
  }
};

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

std::vector<CatalogEntry> catalog_groups() {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 12; ++n) out.push_back({"cyclic" + std::to_string(n), FiniteGroup::cyclic(n)});
  for (int n = 1; n <= 6; ++n) out.push_back({"dihedral" + std::to_string(n), FiniteGroup::dihedral(n)});
  out.push_back({"S3", FiniteGroup::symmetric(3)});
  out.push_back({"S4", FiniteGroup::symmetric(4)});
  out.push_back({"Q8", FiniteGroup::quaternion8()});
  return out;
}

// All subgroups generated by at most two elements, deduplicated.
std::vector<Subgroup> two_generated_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  auto add = [&](Subgroup h) {
    if (seen.insert(h.members).second) out.push_back(std::move(h));
  };
  add(subgroup_generated(g, {}));
  for (int a = 0; a < g.order(); ++a) {
    const std::vector<int> one{a};
    add(subgroup_generated(g, one));
    for (int b = a; b < g.order(); ++b) {
      const std::vector<int> two{a, b};
      add(subgroup_generated(g, two));
    }
  }
  return out;
}

MultiRack dihedral_r3() {
  return automorphism_multiquandle(alexander_family(3, std::vector<long long>{-1}));
}

void criterion1() {
  Criterion c(1, "Theorem 3.3 sweep: coset multi-quandles verify over the catalog", 30.0);
  int checked = 0;
  for (const auto& [name, g] : catalog_groups()) {
    for (const Subgroup& h : two_generated_subgroups(g)) {
      try {
        const MultiRack q = coset_multiquandle(g, h);
        VerifyOptions options;
        options.check_quandle = true;
        c.require(verify(q.family(), options).passed, name + ": verification report not clean");
        ++checked;
      } catch (const Error& e) {
        c.require(false, name + ": " + e.what());
      }
    }
  }
  c.require(checked > 100, "catalog unexpectedly small");
  c.finish();
}

void criterion2() {
  Criterion c(2, "Lemma 3.1 sweep: conjugation multi-racks verify; diagonal fails off identity", 30.0);
  for (const auto& [name, g] : catalog_groups()) {
    try {
      const MultiRack m = conjugation_multirack(g);
      c.require(verify(m.family()).passed, name + ": rack axioms failed");

      VerifyOptions all;
      all.check_quandle = true;
      all.max_violations = static_cast<std::size_t>(-1);
      const VerificationReport report = verify(m.family(), all);
      std::set<std::pair<std::string, int>> witnessed;
      for (const Violation& v : report.violations) {
        c.require(v.axiom == Axiom::QuandleDiagonal, name + ": unexpected axiom failure");
        c.require(replay_violation(m.family(), v), name + ": witness does not replay");
        witnessed.insert({v.s, v.u});
      }
      for (int s = 0; s < g.order(); ++s) {
        if (s == g.identity()) continue;
        // the literal remark: s |>_s s = s^2 != s
        c.require(witnessed.count({conjugation_label(s), s}) == 1,
                  name + ": missing witness u=s at s=" + std::to_string(s));
      }
      if (g.order() > 1) c.require(!report.passed, name + ": quandle check should fail");
    } catch (const Error& e) {
      c.require(false, name + ": " + e.what());
    }
  }
  c.finish();
}

void criterion3() {
  Criterion c(3, "Lemma 3.2 negative control: SNotInCenter and well-definedness witness", 30.0);
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const Subgroup h = subgroup_generated(s3, std::vector<int>{2});  // <(12)>
  const int s13 = 5;                                               // (13)

  bool rejected = false;
  try {
    coset_multiquandle(s3, h, std::vector<int>{s13});
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::SNotInCenter;
  }
  c.require(rejected, "requesting s=(13) was not rejected with SNotInCenter");

  bool tripped = false;
  try {
    coset_multiquandle(s3, h, std::vector<int>{s13}, /*require_central=*/false);
  } catch (const WellDefinednessFailure& e) {
    const CosetSpace cs = left_cosets(s3, h);
    auto op = [&](int x, int y) { return s3.mul(s3.mul(s3.mul(y, e.s), s3.inv(y)), x); };
    const int lhs = cs.block_of[op(s3.mul(e.u, e.g), s3.mul(e.v, e.h))];
    const int rhs = cs.block_of[op(e.u, e.v)];
    tripped = lhs != rhs;
  }
  c.require(tripped, "forcing the raw table did not produce a replayable witness");
  c.finish();
}

void criterion4() {
  Criterion c(4, "Base-point independence: conjugate coset isomorphisms over the catalog", 5.0);
  for (const auto& [name, g] : catalog_groups()) {
    std::map<std::vector<int>, MultiRack> cache;
    auto coset_of = [&](const Subgroup& h) -> const MultiRack& {
      auto it = cache.find(h.members);
      if (it == cache.end()) it = cache.emplace(h.members, coset_multiquandle(g, h)).first;
      return it->second;
    };
    for (const Subgroup& h : two_generated_subgroups(g)) {
      for (int conj = 0; conj < g.order(); ++conj) {
        const MorphismWitness w = conjugate_coset_isomorphism(g, h, conj);
        const MultiRack& src = coset_of(h);
        const MultiRack& dst = coset_of(conjugate_subgroup(g, h, conj));
        c.require(is_morphism(src, dst, w), name + ": witness fails equivariance");
        std::set<int> image(w.element_map.begin(), w.element_map.end());
        c.require(static_cast<int>(image.size()) == src.order(), name + ": element map not bijective");
        std::set<std::string> label_image;
        for (const auto& [from, to] : w.label_map) label_image.insert(to);
        c.require(label_image.size() == w.label_map.size() &&
                      static_cast<int>(w.label_map.size()) == src.label_count(),
                  name + ": label map not bijective");
      }
    }
  }

  // the named instance: Q(S3, <(12)>) and Q(S3, <(13)>)
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const MultiRack q12 = coset_multiquandle(s3, subgroup_generated(s3, std::vector<int>{2}));
  const MultiRack q13 = coset_multiquandle(s3, subgroup_generated(s3, std::vector<int>{5}));
  const auto witness = find_isomorphism(q12, q13);
  c.require(witness.has_value() && is_morphism(q12, q13, *witness),
            "Q(S3,<(12)>) and Q(S3,<(13)>) not identified as isomorphic");
  c.finish();
}

void criterion5() {
  Criterion c(5, "Dihedral identification: Q(S3,<(12)>)|s=(12) is R3", 1.0);
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const Subgroup h = subgroup_generated(s3, std::vector<int>{2});
  const MultiRack q = coset_multiquandle(s3, h, std::vector<int>{2});
  const MultiRack r3 = dihedral_r3();
  const auto w = find_isomorphism(q, r3);
  c.require(w.has_value(), "no isomorphism found");
  if (w) c.require(is_morphism(q, r3, *w), "returned witness is not a morphism");
  c.finish();
}

void criterion6() {
  Criterion c(6, "Coloring invariants match the naive oracle", 10.0);
  const MultiRack r3 = dihedral_r3();
  const MultiRack r5 = automorphism_multiquandle(alexander_family(5, std::vector<long long>{-1}));
  const struct {
    const char* pd;
    const MultiRack* target;
    const char* label;
    std::uint64_t expected;
  } cases[] = {
      {"unknot", &r3, "t:2", 3},
      {"X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]", &r3, "t:2", 9},
      {"X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]", &r3, "t:2", 3},
      {"X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]", &r5, "t:4", 25},
  };
  for (const auto& k : cases) {
    const QuandlePresentation p = wirtinger_presentation(parse_pd(k.pd));
    const std::uint64_t engine = count_colorings(p, *k.target, k.label);
    const std::uint64_t naive =
        oracle::count_colorings(p, k.target->table(k.target->label_index(k.label)));
    c.require(engine == k.expected,
              std::string(k.pd) + ": engine count " + std::to_string(engine) + " != expected " +
                  std::to_string(k.expected));
    c.require(engine == naive, std::string(k.pd) + ": engine disagrees with the oracle");
  }
  // trefoil distinguished from the unknot
  const QuandlePresentation trefoil =
      wirtinger_presentation(parse_pd("X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"));
  const QuandlePresentation unknot = wirtinger_presentation(parse_pd("unknot"));
  c.require(count_colorings(trefoil, r3, "t:2") != count_colorings(unknot, r3, "t:2"),
            "trefoil not distinguished from the unknot");
  c.finish();
}

void criterion7() {
  Criterion c(7, "Enumeration: 1,1,3,7 quandles for orders 1..4, against the naive oracle", 60.0);
  const int expected[] = {1, 1, 3, 7};  // published census values
  for (int m = 1; m <= 4; ++m) {
    const auto engine = enumerate_multiquandles(m, 1);
    c.require(static_cast<int>(engine.size()) == expected[m - 1],
              "order " + std::to_string(m) + ": engine count " + std::to_string(engine.size()));
    const int naive = oracle::quandle_class_count(m);
    c.require(static_cast<int>(engine.size()) == naive,
              "order " + std::to_string(m) + ": oracle count " + std::to_string(naive) + " differs");
    for (const MultiRack& q : engine)
      c.require(verify(q.family(), {true, 10}).passed, "enumerated structure fails verification");
  }
  c.finish();
}

void criterion8(unsigned seed) {
  Criterion c(8, "Mutation robustness: 100 seeded single-entry mutations x 5 structures", 30.0);
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const FiniteGroup s4 = FiniteGroup::symmetric(4);
  const MultiRack fixtures[] = {
      trivial_quandle(4),
      dihedral_r3(),
      conjugation_power_multiquandle(s3),
      coset_multiquandle(s4, subgroup_generated(s4, std::vector<int>{1})),
      conjugation_multirack(FiniteGroup::quaternion8()),
  };
  std::mt19937 rng(seed);
  for (const MultiRack& m : fixtures) {
    for (int trial = 0; trial < 100; ++trial) {
      TableFamily mutated = m.family();
      const int s = std::uniform_int_distribution<int>(0, m.label_count() - 1)(rng);
      const int u = std::uniform_int_distribution<int>(0, m.order() - 1)(rng);
      const int v = std::uniform_int_distribution<int>(0, m.order() - 1)(rng);
      const int old = mutated.tables[s][u][v];
      int fresh = old;
      while (fresh == old) fresh = std::uniform_int_distribution<int>(0, m.order() - 1)(rng);
      mutated.tables[s][u][v] = fresh;

      const VerificationReport report = verify(mutated);
      c.require(!report.passed, "mutation went undetected");
      c.require(!report.violations.empty(), "failed verification reported no witness");
      for (const Violation& v2 : report.violations)
        c.require(replay_violation(mutated, v2), "reported witness does not replay");
    }
  }
  c.finish();
}

void criterion9() {
  Criterion c(9, "Morphism category laws and homomorphism counts vs oracle", 30.0);
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const MultiRack t1 = trivial_quandle(1);
  const MultiRack t2 = trivial_quandle(2);
  const MultiRack r3 = dihedral_r3();
  const MultiRack r5 = automorphism_multiquandle(alexander_family(5, std::vector<long long>{-1}));
  const MultiRack flip = MultiRack::create(TableFamily{2, {"a"}, {{{1, 1}, {0, 0}}}}, false);
  const MultiRack q = coset_multiquandle(s3, subgroup_generated(s3, std::vector<int>{2}));
  const MultiRack conj = conjugation_power_multiquandle(s3, std::vector<long long>{1});

  // homomorphism counts against the full-enumeration oracle (|N|^|M| <= 1e6)
  const struct {
    const MultiRack* src;
    const MultiRack* dst;
  } pairs[] = {
      {&t1, &r3}, {&t2, &t2}, {&r3, &r3}, {&r3, &r5}, {&flip, &flip},
      {&flip, &r3}, {&r3, &q}, {&t2, &q}, {&q, &r3}, {&r3, &conj},
  };
  for (const auto& [src, dst] : pairs) {
    c.require(count_homomorphisms(*src, *dst) == oracle::count_homomorphisms_all_phi(*src, *dst),
              "count_homomorphisms disagrees with the oracle");
  }

  // category laws on brute-forced morphism sets between small fixtures
  auto all_morphisms = [](const MultiRack& a, const MultiRack& b) {
    std::vector<MorphismWitness> out;
    std::vector<int> f(a.order(), 0);
    while (true) {
      for (int lt = 0; lt < b.label_count(); ++lt) {
        MorphismWitness w;
        w.element_map = f;
        for (const auto& l : a.labels()) w.label_map[l] = b.labels()[lt];
        if (a.label_count() == 1 && is_morphism(a, b, w)) out.push_back(w);
      }
      int pos = a.order() - 1;
      while (pos >= 0 && f[pos] == b.order() - 1) f[pos--] = 0;
      if (pos < 0) break;
      ++f[pos];
    }
    return out;
  };
  const auto ends_r3 = all_morphisms(r3, r3);
  c.require(ends_r3.size() == 9, "R3 endomorphism monoid should have 9 elements");
  const MorphismWitness id = identity_witness(r3);
  for (const auto& w1 : ends_r3) {
    c.require(compose(id, w1).element_map == w1.element_map, "left identity law");
    c.require(compose(w1, id).element_map == w1.element_map, "right identity law");
    for (const auto& w2 : ends_r3) {
      const MorphismWitness w12 = compose(w1, w2);
      c.require(is_morphism(r3, r3, w12), "composite of morphisms is not a morphism");
      for (const auto& w3 : ends_r3) {
        c.require(compose(compose(w1, w2), w3).element_map ==
                      compose(w1, compose(w2, w3)).element_map,
                  "associativity of composition");
      }
    }
  }
  // and across different carriers: flip -> flip -> R3
  const auto ends_flip = all_morphisms(flip, flip);
  const auto flip_to_r3 = all_morphisms(flip, r3);
  for (const auto& w1 : ends_flip)
    for (const auto& w2 : flip_to_r3)
      c.require(is_morphism(flip, r3, compose(w1, w2)), "cross-carrier composite fails");
  c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  unsigned seed = 20240915;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::stoul(argv[++i]);
  }

  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8(seed);
  criterion9();

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
