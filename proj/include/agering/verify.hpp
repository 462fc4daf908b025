#pragma once

// Runs every identity over one representation and collects the results.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "agering/age.hpp"
#include "agering/character_table.hpp"
#include "agering/crring.hpp"
#include "agering/obstruction.hpp"

namespace agering {

struct CheckRecord {
  std::string name;
  std::uint64_t instances = 0;
  bool sampled = false;
  std::vector<std::string> failures;
};

/// A pair and an irreducible of its twisting group that occurs in V
/// (t > 0) but contributes nothing to the obstruction (h = 0).
struct TightWitness {
  ElementId g1 = 0;
  ElementId g2 = 0;
  std::string irrep;
  std::uint32_t degree = 0;
  std::int64_t t = 0;
};

struct VerificationReport {
  std::string input;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  std::vector<TightWitness> tight;
  double seconds = 0;

  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failures.size();
    return n;
  }
  bool passed() const { return failure_count() == 0; }
  const CheckRecord* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "character_table",   "conjugation_invariance", "additivity", "determinant",
      "dual_identity",     "sector_classes",     "inequality", "h_consistency",
      "symmetry",          "chen_hu",            "cotangent",         "associativity_identity",
      "ring"};
  return names;
}

struct SuiteOptions {
  std::set<std::string> checks;  // empty: all
  std::uint64_t pair_cap = 100000;
  std::uint64_t triple_cap = 1000000;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  NamedCharacters names;

  bool wants(const std::string& name) const { return checks.empty() || checks.count(name) > 0; }
};

namespace detail {

/// Either every pair in index order or `samples` seeded uniform pairs.
inline std::vector<std::pair<ElementId, ElementId>> pair_plan(std::size_t n, const SuiteOptions& o,
                                                              bool& sampled) {
  std::vector<std::pair<ElementId, ElementId>> out;
  const std::uint64_t total = static_cast<std::uint64_t>(n) * n;
  sampled = total > o.pair_cap;
  if (!sampled) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) out.emplace_back(a, b);
    return out;
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
  for (std::uint64_t t = 0; t < o.samples; ++t) {
    const ElementId a = pick(rng);
    out.emplace_back(a, pick(rng));
  }
  return out;
}

inline void record(CheckRecord& c, const std::string& failure) {
  if (c.failures.size() < 50) c.failures.push_back(failure);
}

}  // namespace detail

/// The inequality over every listed pair and every irreducible of its twisting
/// group: h_i is a non-negative integer. Throws NegativeH or NotAnInteger on
/// a violation. Returns the tight witnesses (h_i = 0, t_i > 0) in pair order.
inline std::vector<TightWitness> scan_inequality(
    const SectorCalculator& calc, const std::vector<std::pair<ElementId, ElementId>>& pairs,
    unsigned threads = 1) {
  const auto work = [&](std::size_t begin, std::size_t end, std::vector<TightWitness>& out) {
    std::vector<std::int64_t> hs;
    for (std::size_t k = begin; k < end; ++k) {
      const auto [g1, g2] = pairs[k];
      const SubgroupData& sd = calc.subgroup(g1, g2);
      calc.scaled_h(sd, g1, g2, hs);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        if (hs[i] < 0 || hs[i] % calc.scale() != 0) {
          calc.decompose(g1, g2);  // throws with the full witness
          throw Error(ErrorKind::InternalInconsistency, "inconsistent h evaluation");
        }
        if (hs[i] == 0 && sd.multiplicities[i] > 0) {
          out.push_back(TightWitness{g1, g2, sd.labels[i], sd.table.dims[i], sd.multiplicities[i]});
        }
      }
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || pairs.size() < 1000) {
    std::vector<TightWitness> out;
    work(0, pairs.size(), out);
    return out;
  }
  std::vector<std::vector<TightWitness>> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (pairs.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        work(std::min(pairs.size(), t * chunk), std::min(pairs.size(), (t + 1) * chunk), parts[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<TightWitness> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

/// All |G|^2 pairs.
inline std::vector<TightWitness> scan_inequality(const Representation& v) {
  SectorCalculator calc(v);
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId a = 0; a < v.group()->order(); ++a)
    for (ElementId b = 0; b < v.group()->order(); ++b) pairs.emplace_back(a, b);
  return scan_inequality(calc, pairs);
}

inline VerificationReport run_suite(const Representation& v, const SuiteOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const GroupPtr& gp = v.group();
  const FiniteGroup& g = *gp;
  const std::size_t n = g.order();
  VerificationReport rep;
  rep.input = v.label();
  rep.seed = opt.seed;

  SectorCalculator calc(v, opt.names);
  const Representation vd = dual(v);
  const SectorCalculator calc_dual(vd);
  const Representation vsum = direct_sum(v, vd);
  const SectorCalculator calc_sum(vsum);

  bool pairs_sampled = false;
  const auto pairs = detail::pair_plan(n, opt, pairs_sampled);

  const auto begin_check = [&](const std::string& name) -> CheckRecord& {
    rep.checks.push_back(CheckRecord{name, 0, false, {}});
    return rep.checks.back();
  };

  if (opt.wants("character_table")) {
    CheckRecord& c = begin_check("character_table");
    c.instances = 1;
    try {
      const CharacterTable t = character_table(gp);
      if (t.size() != g.classes().size()) detail::record(c, "row count differs from class count");
    } catch (const Error& e) {
      detail::record(c, e.what());
    }
  }

  if (opt.wants("conjugation_invariance")) {
    CheckRecord& c = begin_check("conjugation_invariance");
    c.sampled = pairs_sampled;
    for (const auto& [x, by] : pairs) {
      ++c.instances;
      if (calc.age(x) != calc.age(g.conjugate(x, by))) {
        detail::record(c, "iota(" + g.word(x) + ") changes under conjugation by " + g.word(by));
      }
    }
  }

  if (opt.wants("additivity")) {
    CheckRecord& c = begin_check("additivity");
    for (ElementId x = 0; x < n; ++x) {
      ++c.instances;
      if (calc_sum.age(x) != calc.age(x) + calc_dual.age(x)) {
        detail::record(c, "iota_{V+V*}(" + g.word(x) + ") is not additive");
      }
    }
  }

  if (opt.wants("determinant")) {
    CheckRecord& c = begin_check("determinant");
    for (ElementId x = 0; x < n; ++x) {
      ++c.instances;
      if (!determinant_matches_age(v, x)) {
        detail::record(c, "exp(2 pi i iota) != det at " + g.word(x));
      }
    }
  }

  if (opt.wants("dual_identity")) {
    CheckRecord& c = begin_check("dual_identity");
    for (ElementId x = 0; x < n; ++x) {
      ++c.instances;
      const Rational lhs = calc.age(x) + calc_dual.age(x);
      const Rational rhs(static_cast<long>(v.dim()) - calc.age_record(x).fixed_dim());
      if (lhs != rhs) detail::record(c, "iota_V + iota_V* != dim V - dim V^g at " + g.word(x));
    }
  }

  if (opt.wants("sector_classes") && static_cast<std::uint64_t>(n) * n <= opt.pair_cap) {
    CheckRecord& c = begin_check("sector_classes");
    const auto tcs = tuple_classes(g, 2);
    std::uint64_t covered = 0;
    for (const auto& tc : tcs) {
      ++c.instances;
      covered += tc.members.size();
      if (tc.members.size() * tc.centralizer.size() != n) {
        detail::record(c, "orbit-stabilizer fails for a pair class");
      }
      const std::size_t cls = g.class_of(g.mul(tc.representative[0], tc.representative[1]));
      for (const auto& m : tc.members) {
        if (g.class_of(g.mul(m[0], m[1])) != cls) {
          detail::record(c, "product map is not constant on a pair class");
          break;
        }
      }
    }
    if (covered != static_cast<std::uint64_t>(n) * n) detail::record(c, "pair classes do not cover G^2");
  }

  if (opt.wants("inequality")) {
    CheckRecord& c = begin_check("inequality");
    c.sampled = pairs_sampled;
    rep.tight = scan_inequality(calc, pairs, opt.threads);
    c.instances = pairs.size();
  }

  if (opt.wants("h_consistency")) {
    CheckRecord& c = begin_check("h_consistency");
    c.sampled = pairs_sampled;
    for (const auto& [a, b] : pairs) {
      ++c.instances;
      const Rational scalar = calc.h_scalar(a, b);
      const std::int64_t rank = calc.rank(a, b);
      if (scalar != Rational(static_cast<long>(rank))) {
        detail::record(c, "h_V = " + scalar.to_string() + " but sum t_i h_i = " +
                              std::to_string(rank) + " at " + calc.pair_name(a, b));
      }
    }
  }

  if (opt.wants("symmetry")) {
    CheckRecord& c = begin_check("symmetry");
    c.sampled = pairs_sampled;
    for (const auto& [a, b] : pairs) {
      ++c.instances;
      const std::int64_t rank = calc.rank(a, b);
      if (calc.rank(b, a) != rank) detail::record(c, "rank not symmetric at " + calc.pair_name(a, b));
      for (auto s : g.generators()) {
        if (calc.rank(g.conjugate(a, s), g.conjugate(b, s)) != rank) {
          detail::record(c, "rank not conjugation invariant at " + calc.pair_name(a, b));
        }
      }
    }
  }

  if (opt.wants("chen_hu")) {
    CheckRecord& c = begin_check("chen_hu");
    c.sampled = pairs_sampled;
    for (const auto& [a, b] : pairs) {
      if (!calc.subgroup(a, b).abelian()) continue;
      ++c.instances;
      const std::int64_t lines = chen_hu_rank(calc, a, b);
      const std::int64_t rank = calc.rank(a, b);
      if (lines != rank) {
        detail::record(c, "line count " + std::to_string(lines) + " != rank " +
                              std::to_string(rank) + " at " + calc.pair_name(a, b));
      }
    }
  }

  if (opt.wants("cotangent")) {
    CheckRecord& c = begin_check("cotangent");
    c.sampled = pairs_sampled;
    for (const auto& [a, b] : pairs) {
      ++c.instances;
      const RankCheck rc = cotangent_check(calc, calc_sum, a, b);
      if (!rc.holds()) {
        detail::record(c, std::to_string(rc.lhs) + " != " + std::to_string(rc.rhs) + " at " +
                              calc.pair_name(a, b));
      }
    }
  }

  if (opt.wants("associativity_identity")) {
    CheckRecord& c = begin_check("associativity_identity");
    const auto check = [&](ElementId a, ElementId b, ElementId d) {
      ++c.instances;
      const auto [lhs, rhs] = associativity_sides(calc, a, b, d);
      if (lhs != rhs) {
        detail::record(c, lhs.to_string() + " != " + rhs.to_string() + " at (" + g.word(a) + ", " +
                              g.word(b) + ", " + g.word(d) + ")");
      }
    };
    const std::uint64_t total = static_cast<std::uint64_t>(n) * n * n;
    if (total <= opt.triple_cap) {
      for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
          for (ElementId d = 0; d < n; ++d) check(a, b, d);
    } else {
      c.sampled = true;
      std::mt19937_64 rng(opt.seed + 1);
      std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
      for (std::uint64_t t = 0; t < opt.samples; ++t) {
        const ElementId a = pick(rng), b = pick(rng), d = pick(rng);
        check(a, b, d);
      }
    }
  }

  if (opt.wants("ring")) {
    CheckRecord& c = begin_check("ring");
    const CRRing ring = build_cr_ring(v);
    const RingReport rr = check_ring(ring, opt.triple_cap, opt.samples, opt.seed + 2);
    c.instances = rr.triples_checked;
    c.sampled = rr.sampled;
    for (const auto& w : rr.witnesses) detail::record(c, w);
    if (is_special_linear(v)) {
      for (ElementId x = 0; x < n; ++x) {
        const Rational half = ring.degrees[x] * Rational(1, 2);
        if (!half.is_integer()) detail::record(c, "SL input with odd degree at " + g.word(x));
      }
    }
  }

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace agering
