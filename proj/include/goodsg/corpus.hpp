#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "goodsg/error.hpp"
#include "goodsg/ext_point.hpp"
#include "goodsg/ideal.hpp"
#include "goodsg/semigroup.hpp"

namespace goodsg {

/// Numerical semigroup N \ gaps.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_gaps(std::vector<std::uint32_t> gaps) {
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    if (!gaps.empty() && gaps.front() == 0)
      throw Error(ErrorKind::InvalidNumericalSemigroup, "0 cannot be a gap");
    NumericalSemigroup ns;
    ns.gaps_ = std::move(gaps);
    ns.conductor_ = ns.gaps_.empty() ? 0 : ns.gaps_.back() + 1;
    for (std::uint32_t a = 1; a < ns.conductor_; ++a)
      for (std::uint32_t b = a; a + b < ns.conductor_; ++b)
        if (ns.contains(a) && ns.contains(b) && !ns.contains(a + b))
          throw Error(ErrorKind::InvalidNumericalSemigroup,
                      std::to_string(a) + " + " + std::to_string(b) + " is a gap");
    return ns;
  }

  static NumericalSemigroup from_generators(const std::vector<std::uint32_t>& gens) {
    std::uint32_t g = 0;
    for (auto x : gens) g = std::gcd(g, x);
    if (g != 1) throw Error(ErrorKind::InvalidNumericalSemigroup, "generators must have gcd 1");
    const std::uint32_t top = *std::max_element(gens.begin(), gens.end());
    // Frobenius number is below top^2.
    std::vector<char> in(std::size_t{top} * top + 1, 0);
    in[0] = 1;
    for (std::size_t v = 1; v < in.size(); ++v)
      for (auto x : gens)
        if (x <= v && in[v - x]) {
          in[v] = 1;
          break;
        }
    std::vector<std::uint32_t> gaps;
    for (std::size_t v = 0; v < in.size(); ++v)
      if (!in[v]) gaps.push_back(static_cast<std::uint32_t>(v));
    return from_gaps(gaps);
  }

  bool contains(std::uint32_t v) const { return !std::binary_search(gaps_.begin(), gaps_.end(), v); }
  std::uint32_t conductor() const noexcept { return conductor_; }
  const std::vector<std::uint32_t>& gaps() const noexcept { return gaps_; }

 private:
  std::vector<std::uint32_t> gaps_;
  std::uint32_t conductor_ = 0;
};

/// N_1 x ... x N_d, one gap list per factor.
inline GoodSemigroup product_semigroup(const std::vector<std::vector<std::uint32_t>>& gap_lists) {
  if (gap_lists.empty() || gap_lists.size() > kMaxDim) throw Error(ErrorKind::Usage, "bad number of factors");
  std::vector<NumericalSemigroup> fs;
  ExtPoint c(gap_lists.size());
  for (std::size_t i = 0; i < gap_lists.size(); ++i) {
    fs.push_back(NumericalSemigroup::from_gaps(gap_lists[i]));
    c[i] = fs.back().conductor();
  }
  Box box(c);
  std::vector<ExtPoint> small;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    const ExtPoint x = box.point(idx);
    bool ok = true;
    for (std::size_t i = 0; i < x.dim() && ok; ++i) ok = fs[i].contains(x[i].value());
    if (ok) small.push_back(x);
  }
  return GoodSemigroup::from_small_elements(gap_lists.size(), std::move(small));
}

enum class CorpusKind { Product, ClosureRepair };

inline std::string to_string(CorpusKind k) { return k == CorpusKind::Product ? "product" : "closure-repair"; }

inline CorpusKind parse_corpus_kind(const std::string& s) {
  if (s == "product") return CorpusKind::Product;
  if (s == "closure-repair") return CorpusKind::ClosureRepair;
  throw Error(ErrorKind::Usage, "unknown corpus kind '" + s + "'");
}

struct CorpusSpec {
  std::uint64_t seed = 1;
  std::size_t d = 2;
  std::size_t count = 10;
  CorpusKind kind = CorpusKind::ClosureRepair;
  std::uint32_t max_conductor = 8;  // per coordinate
  std::size_t min_nonzero = 3;      // nonzero small elements required
  std::size_t attempts = 200;
};

namespace detail {

inline std::uint32_t draw(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
  return lo + static_cast<std::uint32_t>(rng() % (std::uint64_t{hi} - lo + 1));
}

/// Closes x under (a + b) ^ hi and a ^ b inside the box.
inline void close_in_box(ClippedSet& x) {
  auto elems = x.elements();
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      for (const auto& y : {meet(elems[k] + elems[j], x.box().hi()), meet(elems[k], elems[j])}) {
        if (!x.contains(y)) {
          x.insert(y);
          elems.push_back(y);
        }
      }
    }
}

/// Inserts the least admissible epsilon for the first failing (a, b, i); false if none fails.
inline bool repair_g2_once(ClippedSet& x) {
  const auto elems = x.elements();
  const Box& box = x.box();
  const std::size_t d = box.dim();
  std::map<std::uint64_t, std::vector<std::uint8_t>> tables;
  for (std::size_t p = 0; p < elems.size(); ++p)
    for (std::size_t q = p + 1; q < elems.size(); ++q) {
      const auto& a = elems[p];
      const auto& b = elems[q];
      IndexSet eq;
      for (std::size_t j = 0; j < d; ++j)
        if (a[j] == b[j]) eq.insert(j);
      for (auto i : eq.members()) {
        if (a[i] >= box.hi()[i]) continue;
        ExtPoint eps = meet(a, b);
        eps[i] = a[i].value() + 1;
        auto it = tables.find(eq.bits());
        if (it == tables.end()) it = tables.emplace(eq.bits(), orthant_table(box, x.marks(), eq)).first;
        if (!it->second[box.index(eps)]) {
          x.insert(eps);
          return true;
        }
      }
    }
  return false;
}

inline std::optional<GoodSemigroup> try_closure_repair(std::mt19937_64& rng, const CorpusSpec& spec) {
  const std::size_t d = spec.d;
  ExtPoint hi(d);
  for (std::size_t i = 0; i < d; ++i) hi[i] = draw(rng, 2, std::max<std::uint32_t>(2, spec.max_conductor));
  ClippedSet x(hi);
  x.insert(ExtPoint(d));
  x.insert(hi);
  // Small generators keep sums inside the box; an occasional zero coordinate gives non-local instances.
  const auto ngen = draw(rng, 2, 4);
  for (std::uint32_t k = 0; k < ngen; ++k) {
    ExtPoint g(d);
    for (std::size_t i = 0; i < d; ++i) g[i] = draw(rng, 1, std::max<std::uint32_t>(1, hi[i].value() * 2 / 3));
    if (draw(rng, 0, 5) == 0) g[draw(rng, 0, static_cast<std::uint32_t>(d - 1))] = 0;
    x.insert(g);
  }
  do {
    close_in_box(x);
  } while (repair_g2_once(x));
  const ExtPoint c = descend_conductor(x);
  std::vector<ExtPoint> small;
  for (const auto& e : x.elements())
    if (leq(e, c)) small.push_back(e);
  try {
    return GoodSemigroup::from_small_elements(d, std::move(small));
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline std::optional<GoodSemigroup> try_product(std::mt19937_64& rng, const CorpusSpec& spec) {
  std::vector<std::vector<std::uint32_t>> gaps;
  for (std::size_t i = 0; i < spec.d; ++i) {
    const auto m = draw(rng, 0, 5) == 0 ? 1 : draw(rng, 2, std::min<std::uint32_t>(5, spec.max_conductor + 1));
    std::vector<std::uint32_t> gens{m, draw(rng, m, m + 4), draw(rng, m, m + 6)};
    if (m == 1) gens = {1};
    try {
      auto ns = NumericalSemigroup::from_generators(gens);
      if (ns.conductor() > spec.max_conductor) return std::nullopt;
      gaps.push_back(ns.gaps());
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return product_semigroup(gaps);
}

}  // namespace detail

/// One validated semigroup drawn from rng; GenerationExhausted after spec.attempts misses.
inline GoodSemigroup random_good_semigroup(std::mt19937_64& rng, const CorpusSpec& spec) {
  if (spec.d == 0 || spec.d > kMaxDim) throw Error(ErrorKind::Usage, "dimension must be in 1..16");
  for (std::size_t t = 0; t < spec.attempts; ++t) {
    auto s = spec.kind == CorpusKind::Product ? detail::try_product(rng, spec) : detail::try_closure_repair(rng, spec);
    if (!s) continue;
    if (s->small().size() < spec.min_nonzero + 1) continue;
    bool fits = true;
    for (auto v : s->conductor()) fits = fits && v.value() <= spec.max_conductor;
    if (fits) return *s;
  }
  throw Error(ErrorKind::GenerationExhausted, "no valid semigroup after " + std::to_string(spec.attempts) + " attempts");
}

/// Deterministic corpus: instance k uses its own stream derived from (seed, k).
inline std::vector<GoodSemigroup> generate_corpus(const CorpusSpec& spec) {
  std::vector<GoodSemigroup> out;
  for (std::size_t k = 0; k < spec.count; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(spec.d)};
    std::mt19937_64 rng(seq);
    out.push_back(random_good_semigroup(rng, spec));
  }
  return out;
}

/// The `count` nonzero small elements with least coordinate sum (ties lexicographic),
/// plus the least such element with no zero coordinate when it is not already among them.
inline std::vector<ExtPoint> pick_omegas(const GoodSemigroup& s, std::size_t count) {
  std::vector<ExtPoint> nz(s.small().begin() + 1, s.small().end());
  auto sum = [](const ExtPoint& p) {
    std::uint64_t t = 0;
    for (auto v : p) t += v.value();
    return t;
  };
  std::stable_sort(nz.begin(), nz.end(), [&](const ExtPoint& a, const ExtPoint& b) { return sum(a) < sum(b); });
  auto interior = std::find_if(nz.begin(), nz.end(), [](const ExtPoint& p) {
    return std::none_of(p.begin(), p.end(), [](ExtNat v) { return v == ExtNat(0); });
  });
  std::vector<ExtPoint> out(nz.begin(), nz.begin() + static_cast<std::ptrdiff_t>(std::min(count, nz.size())));
  if (interior != nz.end() && std::find(out.begin(), out.end(), *interior) == out.end()) out.push_back(*interior);
  return out;
}

}  // namespace goodsg
