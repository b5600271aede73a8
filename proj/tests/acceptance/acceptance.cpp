// One PASS/FAIL line per acceptance criterion. Exit code 1 if any line fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "goodsg/goodsg.hpp"
#include "goodsg_cli.hpp"
#include "support/invariants.hpp"

using namespace goodsg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail, double secs) {
  char t[32];
  std::snprintf(t, sizeof t, "%.2fs", secs);
  std::cout << (ok ? "PASS " : "FAIL ") << name << " [" << t << "] " << detail << std::endl;
  if (!ok) ++failures;
}

void note(const std::string& s) { std::cout << "     " << s << "\n"; }

GoodSemigroup sample() { return read_semigroup(GOODSG_SAMPLES "/three_branch.gs"); }

struct Case {
  GoodSemigroup s;
  ExtPoint w;
};

/// 100 semigroups, 25 per (kind, d), conductor coordinates at most 12, each with at least 3 omegas.
std::vector<GoodSemigroup> sweep_corpus() {
  std::vector<GoodSemigroup> out;
  for (auto kind : {CorpusKind::ClosureRepair, CorpusKind::Product})
    for (std::size_t d : {2U, 3U}) {
      CorpusSpec spec;
      spec.seed = 2024;
      spec.d = d;
      spec.count = 25;
      spec.kind = kind;
      spec.max_conductor = 12;
      for (auto& s : generate_corpus(spec)) out.push_back(std::move(s));
    }
  return out;
}

std::vector<Case> sweep_cases(const std::vector<GoodSemigroup>& corpus) {
  std::vector<Case> out;
  for (const auto& s : corpus)
    for (const auto& w : pick_omegas(s, 3)) out.push_back({s, w});
  return out;
}

void golden_listing() {
  const auto t0 = Clock::now();
  const std::string file = GOODSG_SAMPLES "/three_branch.gs";
  const char* argv[] = {"goodsg", "apery", file.c_str(), "--omega", "(1,2,3)"};
  std::ostringstream out, err;
  const int code = cli::run(5, argv, out, err);
  const double secs = seconds_since(t0);
  const std::string want = read_file(GOODSG_TEST_DATA "/three_branch_omega_1_2_3.levels");
  const auto reps = std::count_if(want.begin(), want.end(), [](char ch) { return ch == '('; }) - 6;
  report(code == 0 && out.str() == want && secs < 1.0, "golden-listing",
         "three-branch sample, omega=(1,2,3): 6 levels, " + std::to_string(reps) + " representatives, byte-exact", secs);
}

/// gen_secs: corpus generation, counted against the time budget.
void level_count_thresholds(const std::vector<Case>& cases, std::size_t corpus_size, double gen_secs) {
  const auto t0 = Clock::now();
  std::size_t checked = 0, bad = 0;
  std::vector<std::string> first;
  const auto s = sample();
  std::vector<Case> all;
  for (std::size_t k = 1; k < s.small().size(); ++k) all.push_back({s, s.small()[k]});
  all.insert(all.end(), cases.begin(), cases.end());
  for (const auto& c : all) {
    const auto r = theorem_main_check(apery(c.s, c.w), c.w);
    ++checked;
    if (!r.passed()) {
      ++bad;
      if (first.size() < 3) first.push_back(to_string(c.w) + " " + r.summary());
    }
  }
  const double secs = seconds_since(t0) + gen_secs;
  report(bad == 0 && secs < 60.0 && corpus_size >= 100, "level-count-and-dimension-thresholds",
         std::to_string(s.small().size() - 1) + " sample omegas + " + std::to_string(corpus_size) +
             " corpus semigroups, " + std::to_string(checked) + " cases, " + std::to_string(bad) + " violations",
         secs);
  for (const auto& f : first) note(f);
}

void grid_oracle(const std::vector<Case>& cases) {
  const auto t0 = Clock::now();
  std::size_t grids = 0, bad = 0;
  std::vector<std::string> first;
  for (const auto& c : cases) {
    const auto e = principal_ideal(c.s, c.w);
    const auto p = compute_levels(complement(e), e);
    std::uint32_t pad = 0;
    for (auto v : c.w) pad = std::max(pad, v.value());
    pad += 2;
    for (auto q : {pad, 2 * pad}) {
      const auto g = brute_force_partition(e, q);
      auto diffs = oracle_diff(p, g);
      for (const auto& r : ray_constancy_violations(g)) diffs.push_back("ray " + r);
      ++grids;
      if (!diffs.empty()) {
        ++bad;
        if (first.size() < 3) first.push_back(to_string(c.w) + " padding " + std::to_string(q) + ": " + diffs[0]);
      }
    }
  }
  const double secs = seconds_since(t0);
  report(bad == 0 && secs < 120.0, "grid-oracle-equivalence",
         std::to_string(cases.size()) + " cases at padding P and 2P, " + std::to_string(grids) + " grids, " +
             std::to_string(bad) + " disagreements",
         secs);
  for (const auto& f : first) note(f);
}

void invariant_suite() {
  const auto t0 = Clock::now();
  std::vector<goodsg::testing::CheckResult> acc;
  std::size_t instances = 0;
  auto run = [&](const GoodIdeal& e) {
    const auto p = compute_levels(complement(e), e);
    goodsg::testing::merge_results(acc, goodsg::testing::run_invariants(e, p));
    ++instances;
  };
  const auto s = sample();
  run(principal_ideal(s, parse_point("(1,2,3)")));
  for (auto kind : {CorpusKind::ClosureRepair, CorpusKind::Product})
    for (std::size_t d : {2U, 3U}) {
      CorpusSpec spec;
      spec.seed = 77;
      spec.d = d;
      spec.count = 10;
      spec.kind = kind;
      spec.max_conductor = d == 2 ? 8 : 5;
      for (const auto& g : generate_corpus(spec)) {
        const auto ws = pick_omegas(g, 2);
        for (const auto& w : ws) run(principal_ideal(g, w));
        try {
          run(ideal_from_generators(g, {ws[0], ws[1]}));
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::NotGoodIdeal) throw;
        }
      }
    }
  bool ok = instances >= 20;
  std::size_t tuples = 0, bad = 0;
  for (const auto& r : acc) {
    tuples += r.checked;
    bad += r.failed;
    ok = ok && r.passed() && r.checked > 0;
  }
  report(ok, "invariant-suite",
         std::to_string(acc.size()) + " properties on " + std::to_string(instances) + " ideals, " +
             std::to_string(tuples) + " tuples, " + std::to_string(bad) + " counterexamples",
         seconds_since(t0));
  for (const auto& r : acc) {
    note(r.name + ": " + std::to_string(r.checked) + " checked, " + std::to_string(r.failed) + " failed" +
         (r.checked == 0 ? " (vacuous)" : ""));
    for (const auto& ex : r.examples) note("  " + ex);
  }
}

void plane_lines(const std::vector<Case>& cases) {
  const auto t0 = Clock::now();
  std::size_t checked = 0, bad = 0;
  std::vector<std::string> first;
  for (const auto& c : cases) {
    if (c.s.dim() != 2) continue;
    const std::size_t top = std::max(c.w[0].value(), c.w[1].value());
    const auto p = apery(c.s, c.w);
    ++checked;
    bool ok = true;
    for (std::size_t i = 1; i <= p.size(); ++i) {
      const bool lines = std::any_of(p.level(i).begin(), p.level(i).end(),
                                     [](const ExtPoint& r) { return r.inf_set().size() == 1; });
      ok = ok && lines == (i + top > p.size());
    }
    if (!ok) {
      ++bad;
      if (first.size() < 3) first.push_back(serialize_semigroup(c.s) + " omega " + to_string(c.w));
    }
  }
  report(bad == 0 && checked > 0, "plane-lines-exactly-in-top-levels",
         std::to_string(checked) + " d=2 cases, lines exactly in the top max(w1,w2) levels, " + std::to_string(bad) +
             " violations",
         seconds_since(t0));
  for (const auto& f : first) note(f);
}

/// Direct enumeration of the axioms for a candidate small set X with c = max X.
bool axioms_hold(std::size_t d, const std::vector<ExtPoint>& raw) {
  std::set<ExtPoint> x(raw.begin(), raw.end());
  ExtPoint c(d);
  for (const auto& p : x) c = join(c, p);
  const ExtPoint zero(d);
  if (!x.count(zero) || !x.count(c)) return false;
  auto in_s = [&](const ExtPoint& p) { return x.count(meet(p, c)) > 0; };
  for (const auto& a : x)
    for (const auto& b : x)
      if (!x.count(meet(a, b)) || !in_s(a + b)) return false;
  for (std::size_t i = 0; i < d; ++i) {
    if (c[i].value() == 0) continue;
    ExtPoint lower = c;
    lower[i] = c[i].value() - 1;
    if (x.count(lower)) return false;
  }
  // G2 over S cap [0, c+1] with witnesses searched in [0, c+2].
  const Box near(c + ExtPoint(d, 1));
  const Box far(c + ExtPoint(d, 2));
  std::vector<ExtPoint> pts;
  for (std::size_t k = 0; k < near.size(); ++k)
    if (in_s(near.point(k))) pts.push_back(near.point(k));
  std::vector<ExtPoint> eps;
  for (std::size_t k = 0; k < far.size(); ++k)
    if (in_s(far.point(k))) eps.push_back(far.point(k));
  for (std::size_t p = 0; p < pts.size(); ++p)
    for (std::size_t q = p + 1; q < pts.size(); ++q) {
      const auto& a = pts[p];
      const auto& b = pts[q];
      for (std::size_t i = 0; i < d; ++i) {
        if (a[i] != b[i]) continue;
        const bool found = std::any_of(eps.begin(), eps.end(), [&](const ExtPoint& e) {
          if (!(e[i] > a[i])) return false;
          for (std::size_t j = 0; j < d; ++j) {
            const ExtNat m = std::min(a[j], b[j]);
            if (e[j] < m || (a[j] != b[j] && e[j] != m)) return false;
          }
          return true;
        });
        if (!found) return false;
      }
    }
  return true;
}

void mutation_harness() {
  const auto t0 = Clock::now();
  std::vector<GoodSemigroup> pool;
  for (std::size_t d : {2U, 3U}) {
    CorpusSpec spec;
    spec.seed = 31;
    spec.d = d;
    spec.count = 10;
    spec.max_conductor = d == 2 ? 7 : 5;
    for (auto& s : generate_corpus(spec)) pool.push_back(std::move(s));
  }
  pool.push_back(sample());
  std::mt19937_64 rng(12345);
  std::size_t mutants = 0, broken = 0, false_pass = 0, false_alarm = 0;
  std::vector<std::string> first;
  while (mutants < 100) {
    const auto& s = pool[rng() % pool.size()];
    std::vector<ExtPoint> x = s.small();
    const bool erase = mutants % 2 == 0;
    if (erase) {
      x.erase(x.begin() + 1 + static_cast<std::ptrdiff_t>(rng() % (x.size() - 1)));
    } else {
      const Box box(s.conductor());
      const ExtPoint p = box.point(rng() % box.size());
      if (std::find(x.begin(), x.end(), p) != x.end()) continue;
      x.push_back(p);
    }
    ++mutants;
    const bool valid = axioms_hold(s.dim(), x);
    const auto rep = GoodSemigroup::validate_small(s.dim(), x);
    const auto* f = rep.first_failure();
    if (!valid) {
      ++broken;
      if (!f || f->witness.empty()) {
        ++false_pass;
        if (first.size() < 3) first.push_back("missed: " + serialize_semigroup(s) + (erase ? " deletion" : " insertion"));
      }
    } else if (f) {
      ++false_alarm;
      if (first.size() < 3) first.push_back("false alarm: " + f->name + " " + f->witness);
    }
  }
  report(false_pass == 0 && false_alarm == 0, "validator-mutation-sensitivity",
         std::to_string(mutants) + " mutants (50 deletions, 50 insertions), " + std::to_string(broken) +
             " break an axiom, " + std::to_string(false_pass) + " false passes, " + std::to_string(false_alarm) +
             " false alarms",
         seconds_since(t0));
  for (const auto& f : first) note(f);
}

}  // namespace

int main() {
  try {
    golden_listing();
    const auto t0 = Clock::now();
    const auto corpus = sweep_corpus();
    const auto cases = sweep_cases(corpus);
    level_count_thresholds(cases, corpus.size(), seconds_since(t0));
    grid_oracle(cases);
    invariant_suite();
    plane_lines(cases);
    mutation_harness();
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << "\n";
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
