#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "goodsg/error.hpp"
#include "goodsg/ext_point.hpp"
#include "goodsg/ideal.hpp"
#include "goodsg/semigroup.hpp"

namespace goodsg {

struct WitnessPart {
  ExtPoint point;
  IndexSet f;

  friend bool operator==(const WitnessPart&, const WitnessPart&) = default;
};

/// center = complete infimum of the parts; part k lies in Delta_{f_k}(center).
struct CompleteInfimum {
  ExtPoint center;
  std::vector<WitnessPart> parts;
};

inline std::string to_string(const CompleteInfimum& w) {
  std::string out = to_string(w.center) + " =";
  for (std::size_t k = 0; k < w.parts.size(); ++k)
    out += (k ? " ~ " : " ") + to_string(w.parts[k].point) + " F=" + to_string(w.parts[k].f);
  return out;
}

/// A_1 .. A_N; levels[0] is A_1.
class LevelPartition {
 public:
  LevelPartition() = default;
  LevelPartition(ExtPoint ideal_conductor, std::vector<std::vector<ExtPoint>> levels)
      : conductor_(std::move(ideal_conductor)), levels_(std::move(levels)) {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      std::sort(levels_[i].begin(), levels_[i].end());
      for (const auto& p : levels_[i]) index_.emplace(p, i + 1);
    }
  }

  std::size_t size() const noexcept { return levels_.size(); }
  const std::vector<ExtPoint>& level(std::size_t i) const { return levels_.at(i - 1); }
  const std::vector<std::vector<ExtPoint>>& levels() const noexcept { return levels_; }
  const ExtPoint& ideal_conductor() const noexcept { return conductor_; }
  std::size_t total() const noexcept { return index_.size(); }

  /// Level of an already canonical representative, 0 if absent.
  std::size_t find(const ExtPoint& rep) const {
    auto it = index_.find(rep);
    return it == index_.end() ? 0 : it->second;
  }

 private:
  ExtPoint conductor_;
  std::vector<std::vector<ExtPoint>> levels_;
  std::map<ExtPoint, std::size_t> index_;
};

/// Level of any point (finite or representative) of S \ E.
inline std::size_t level_of(const LevelPartition& p, const ExtPoint& a) {
  const auto rep = saturate(a, p.ideal_conductor());
  const auto lvl = p.find(rep);
  if (lvl == 0) throw Error(ErrorKind::NotInComplement, to_string(a) + " is not in S \\ E");
  return lvl;
}

namespace detail {

/// Complete infimum search at representative level. Parts must be >= a on a's
/// finite coordinates and INF on a's INF coordinates; the sets of finite
/// coordinates where parts exceed a must partition the finite coordinates.
/// With self_ok, a itself may be a part whose block holds only INF coordinates.
inline std::optional<CompleteInfimum> find_complete_infimum(std::span<const ExtPoint> ref, const ExtPoint& a,
                                                            bool self_ok) {
  const std::size_t d = a.dim();
  const IndexSet inf = a.inf_set();
  std::vector<std::size_t> fin;
  for (std::size_t i = 0; i < d; ++i)
    if (!inf.contains(i)) fin.push_back(i);
  const std::uint32_t full = fin.size() >= 32 ? ~0U : (1U << fin.size()) - 1;
  const bool allow_whole = self_ok && !inf.empty();

  auto finish = [&](std::vector<std::pair<ExtPoint, IndexSet>> blocks) {
    CompleteInfimum w{a, {}};
    for (auto& [pt, p] : blocks) w.parts.push_back({pt, orthogonal(p, d)});
    std::sort(w.parts.begin(), w.parts.end(), [](const WitnessPart& x, const WitnessPart& y) {
      return std::tie(x.point, x.f) < std::tie(y.point, y.f);
    });
    return w;
  };

  if (fin.empty()) {
    if (!self_ok || inf.size() < 2) return std::nullopt;
    std::vector<std::pair<ExtPoint, IndexSet>> blocks;
    for (auto j : inf.members()) blocks.emplace_back(a, IndexSet::single(j));
    return finish(std::move(blocks));
  }

  // Lexicographically smallest candidate per strict-set mask.
  std::vector<std::pair<std::uint32_t, const ExtPoint*>> cand;
  for (const auto& b : ref) {
    if (b == a) continue;
    bool ok = true;
    std::uint32_t q = 0;
    for (std::size_t k = 0; k < fin.size() && ok; ++k) {
      const auto i = fin[k];
      if (b[i] < a[i]) ok = false;
      else if (b[i] > a[i]) q |= 1U << k;
    }
    for (auto j : inf.members())
      if (b[j].is_finite()) ok = false;
    if (!ok || q == 0) continue;
    if (q == full && !allow_whole) continue;
    cand.emplace_back(q, &b);
  }
  std::sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) {
    const auto px = std::popcount(x.first), py = std::popcount(y.first);
    if (px != py) return px < py;
    if (x.first != y.first) return x.first < y.first;
    return *x.second < *y.second;
  });
  cand.erase(std::unique(cand.begin(), cand.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
             cand.end());

  std::vector<std::size_t> chosen;
  std::unordered_set<std::uint32_t> dead;
  auto dfs = [&](auto&& self, std::uint32_t covered) -> bool {
    if (covered == full) return true;
    if (dead.count(covered)) return false;
    const std::uint32_t low = ~covered & (covered + 1);
    for (std::size_t k = 0; k < cand.size(); ++k) {
      const auto q = cand[k].first;
      if (!(q & low) || (q & covered)) continue;
      chosen.push_back(k);
      if (self(self, covered | q)) return true;
      chosen.pop_back();
    }
    dead.insert(covered);
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;

  auto to_indices = [&](std::uint32_t q) {
    IndexSet s;
    for (std::size_t k = 0; k < fin.size(); ++k)
      if (q >> k & 1U) s.insert(fin[k]);
    return s;
  };
  std::vector<std::pair<ExtPoint, IndexSet>> blocks;
  for (auto k : chosen) blocks.emplace_back(*cand[k].second, to_indices(cand[k].first));
  if (blocks.size() == 1) {
    blocks.emplace_back(a, inf);
  } else {
    blocks.front().second = blocks.front().second | inf;
  }
  return finish(std::move(blocks));
}

}  // namespace detail

/// Checks the defining conditions of a complete infimum. INF coordinates of the
/// center must be INF in every part and count as matched on either side.
inline bool is_complete_infimum(const CompleteInfimum& w) {
  if (w.parts.size() < 2) return false;
  const std::size_t d = w.center.dim();
  IndexSet common = IndexSet::full(d);
  for (const auto& p : w.parts) {
    if (p.point.dim() != d || p.f == IndexSet::full(d)) return false;
    for (std::size_t i = 0; i < d; ++i) {
      if (w.center[i].is_inf()) {
        if (p.point[i].is_finite()) return false;
      } else if (p.f.contains(i) ? p.point[i] != w.center[i] : !(p.point[i] > w.center[i])) {
        return false;
      }
    }
    common = common & p.f;
  }
  if (!common.empty()) return false;
  for (std::size_t x = 0; x < w.parts.size(); ++x)
    for (std::size_t y = x + 1; y < w.parts.size(); ++y)
      for (std::size_t i = 0; i < d; ++i)
        if (w.center[i].is_finite() && std::min(w.parts[x].point[i], w.parts[y].point[i]) != w.center[i])
          return false;
  return true;
}

/// Witness that a is a complete infimum of elements of reference; a must be in it.
inline std::optional<CompleteInfimum> complete_infimum_witness(std::span<const ExtPoint> reference, const ExtPoint& a) {
  if (std::find(reference.begin(), reference.end(), a) == reference.end())
    throw Error(ErrorKind::PreconditionViolated, to_string(a) + " is not in the reference set");
  return detail::find_complete_infimum(reference, a, true);
}

inline LevelPartition compute_levels(const ComplementSet& a) {
  const auto& reps = a.reps;
  const std::size_t n = reps.size();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> dominator(n, n);
  std::vector<std::vector<ExtPoint>> stages;
  std::size_t remaining = n;

  while (remaining > 0) {
    if (stages.size() > n) throw Error(ErrorKind::InternalInconsistency, "level iteration did not terminate");
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < n; ++k)
      if (alive[k]) live.push_back(k);

    std::vector<std::size_t> top;
    for (auto k : live) {
      if (dominator[k] < n && alive[dominator[k]]) continue;
      dominator[k] = n;
      for (auto j : live)
        if (dominates_ext(reps[j], reps[k])) {
          dominator[k] = j;
          break;
        }
      if (dominator[k] == n) top.push_back(k);
    }

    std::vector<ExtPoint> top_pts;
    for (auto k : top) top_pts.push_back(reps[k]);
    std::vector<ExtPoint> stage;
    for (std::size_t t = 0; t < top.size(); ++t)
      if (!detail::find_complete_infimum(top_pts, top_pts[t], true)) {
        stage.push_back(top_pts[t]);
        alive[top[t]] = 0;
      }
    if (stage.empty())
      throw Error(ErrorKind::InternalInconsistency,
                  "every maximal element is a complete infimum (" + std::to_string(top.size()) + " elements)");
    remaining -= stage.size();
    stages.push_back(std::move(stage));
  }
  std::reverse(stages.begin(), stages.end());
  return LevelPartition(a.ideal_conductor, std::move(stages));
}

inline LevelPartition compute_levels(const ComplementSet& a, const GoodIdeal& e) {
  if (a.ideal_conductor != e.conductor())
    throw Error(ErrorKind::Usage, "complement does not belong to this ideal");
  return compute_levels(a);
}

inline LevelPartition apery(const GoodSemigroup& s, const ExtPoint& w) {
  auto e = principal_ideal(s, w);
  return compute_levels(complement(e), e);
}

/// Decomposes a as b ~ beta_1 ~ ... with beta_k in Delta_{G_k}(a), G_k maximal
/// among the non-empty Delta sets avoiding one index of F.
inline CompleteInfimum propG2_decomposition(std::span<const ExtPoint> reference, const ExtPoint& a,
                                            const ExtPoint& b) {
  detail::require_same_dim(a, b);
  const std::size_t d = a.dim();
  if (std::find(reference.begin(), reference.end(), a) == reference.end())
    throw Error(ErrorKind::PreconditionViolated, to_string(a) + " is not in the reference set");
  IndexSet f;
  for (std::size_t i = 0; i < d; ++i)
    if (b[i] == a[i]) f.insert(i);
  if (f.empty() || f == IndexSet::full(d) || !in_delta(b, f, a))
    throw Error(ErrorKind::PreconditionViolated, to_string(b) + " is not in any Delta_F(" + to_string(a) + ")");

  const IndexSet fhat = orthogonal(f, d);
  std::map<std::uint64_t, const ExtPoint*> nonempty;
  for (const auto& x : reference) {
    IndexSet g;
    for (std::size_t i = 0; i < d; ++i)
      if (x[i] == a[i]) g.insert(i);
    if (g == IndexSet::full(d) || !fhat.subset_of(g) || !in_delta(x, g, a)) continue;
    auto [it, fresh] = nonempty.emplace(g.bits(), &x);
    if (!fresh && x < *it->second) it->second = &x;
  }

  CompleteInfimum w{a, {{b, f}}};
  std::vector<std::uint64_t> used;
  for (auto i : f.members()) {
    std::vector<std::uint64_t> maximal;
    for (const auto& [g, pt] : nonempty) {
      if (IndexSet::from_bits(g).contains(i)) continue;
      bool is_max = true;
      for (const auto& [h, pt2] : nonempty)
        if (h != g && !IndexSet::from_bits(h).contains(i) && IndexSet::from_bits(g).subset_of(IndexSet::from_bits(h)))
          is_max = false;
      if (is_max) maximal.push_back(g);
    }
    if (maximal.size() != 1)
      throw Error(ErrorKind::PreconditionViolated,
                  "no unique maximal Delta set avoiding index " + std::to_string(i + 1));
    if (std::find(used.begin(), used.end(), maximal[0]) != used.end()) continue;
    used.push_back(maximal[0]);
    w.parts.push_back({*nonempty[maximal[0]], IndexSet::from_bits(maximal[0])});
  }
  if (!is_complete_infimum(w))
    throw Error(ErrorKind::PreconditionViolated, "reference does not behave like a good ideal at " + to_string(a));
  return w;
}

}  // namespace goodsg
