#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "goodsg/error.hpp"
#include "goodsg/ext_point.hpp"
#include "goodsg/ideal.hpp"
#include "goodsg/levels.hpp"

namespace goodsg {

/// Levels computed cell by cell on the grid [0, c_E + padding]. The outermost
/// face value of each axis stands for "arbitrarily large".
struct GridPartition {
  Box box;
  ExtPoint ideal_conductor;
  std::vector<std::uint16_t> level;  // 0 outside S \ E
  std::size_t n = 0;

  std::size_t level_at(const ExtPoint& x) const {
    if (!box.inside(x)) throw Error(ErrorKind::Usage, to_string(x) + " outside grid " + to_string(box.hi()));
    return level[box.index(x)];
  }
};

namespace detail {

/// All set partitions of {0..d-1} into at least two blocks, as block masks.
inline std::vector<std::vector<IndexSet>> set_partitions(std::size_t d) {
  std::vector<std::vector<IndexSet>> out;
  std::vector<IndexSet> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d) {
      if (cur.size() >= 2) out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].insert(i);
      rec(i + 1);
      cur[b].erase(i);
    }
    cur.push_back(IndexSet::single(i));
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

}  // namespace detail

inline GridPartition brute_force_partition(const GoodIdeal& e, const ExtPoint& padding,
                                           std::size_t max_cells = 4'000'000) {
  detail::require_same_dim(padding, e.conductor());
  detail::require_finite(padding, "padding");
  const std::size_t d = e.dim();
  const GoodSemigroup& s = e.parent();
  const ExtPoint hi = e.conductor() + padding;
  Box box;
  try {
    box = Box(hi, max_cells);
  } catch (const Error&) {
    throw Error(ErrorKind::GridTooLarge, "grid " + to_string(hi) + " exceeds " + std::to_string(max_cells) + " cells");
  }

  GridPartition g{box, e.conductor(), std::vector<std::uint16_t>(box.size(), 0), 0};
  std::vector<std::uint8_t> alive(box.size(), 0);
  std::size_t remaining = 0;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    const ExtPoint x = box.point(idx);
    if (!s.contains(x)) continue;
    bool in_e = false;
    for (const auto& gen : e.generators())
      if (leq(gen, x) && s.contains(x - gen)) in_e = true;
    if (!in_e) {
      alive[idx] = 1;
      ++remaining;
    }
  }

  // Query cell: x pushed one step up along `axes`, except on the outer face.
  auto shifted = [&](std::size_t idx, IndexSet axes) {
    std::size_t q = idx;
    for (auto j : axes.members())
      if (box.coord(idx, j) < hi[j].value()) q += box.stride(j);
    return q;
  };

  const auto partitions = detail::set_partitions(d);
  const IndexSet all = IndexSet::full(d);
  std::vector<std::vector<std::size_t>> removed;
  while (remaining > 0) {
    if (removed.size() > box.size()) throw Error(ErrorKind::InternalInconsistency, "grid iteration did not terminate");
    const auto up = orthant_table(box, alive, all);
    std::vector<std::uint8_t> top(box.size(), 0);
    std::vector<std::size_t> top_cells;
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
      if (!alive[idx]) continue;
      const auto q = shifted(idx, all);
      if (q == idx || !up[q]) {
        top[idx] = 1;
        top_cells.push_back(idx);
      }
    }
    std::vector<std::vector<std::uint8_t>> reach(std::size_t{1} << d);
    for (std::uint64_t p = 1; p + 1 < (std::uint64_t{1} << d); ++p)
      reach[p] = orthant_table(box, top, IndexSet::from_bits(p));

    std::vector<std::size_t> stage;
    for (auto idx : top_cells) {
      bool infimum = false;
      for (const auto& part : partitions) {
        bool ok = true;
        for (auto blk : part)
          if (!reach[blk.bits()][shifted(idx, blk)]) {
            ok = false;
            break;
          }
        if (ok) {
          infimum = true;
          break;
        }
      }
      if (!infimum) stage.push_back(idx);
    }
    if (stage.empty()) throw Error(ErrorKind::InternalInconsistency, "grid stage without removable cells");
    for (auto idx : stage) alive[idx] = 0;
    remaining -= stage.size();
    removed.push_back(std::move(stage));
  }
  g.n = removed.size();
  for (std::size_t k = 0; k < removed.size(); ++k)
    for (auto idx : removed[k]) g.level[idx] = static_cast<std::uint16_t>(g.n - k);
  return g;
}

inline GridPartition brute_force_partition(const GoodIdeal& e, std::uint32_t padding,
                                           std::size_t max_cells = 4'000'000) {
  return brute_force_partition(e, ExtPoint(e.dim(), padding), max_cells);
}

/// Cells where the grid and the representative partition disagree.
inline std::vector<std::string> oracle_diff(const LevelPartition& p, const GridPartition& g, std::size_t limit = 20) {
  std::vector<std::string> out;
  if (p.size() != g.n)
    out.push_back("N: levels=" + std::to_string(p.size()) + " oracle=" + std::to_string(g.n));
  std::size_t extra = 0;
  for (std::size_t idx = 0; idx < g.box.size(); ++idx) {
    const ExtPoint x = g.box.point(idx);
    const std::size_t want = p.find(saturate(x, p.ideal_conductor()));
    if (want == g.level[idx]) continue;
    if (out.size() < limit)
      out.push_back(to_string(x) + ": levels=" + std::to_string(want) + " oracle=" + std::to_string(g.level[idx]));
    else
      ++extra;
  }
  if (extra) out.push_back("... " + std::to_string(extra) + " more");
  return out;
}

/// Cells beyond c_E whose level differs from their clip to c_E.
inline std::vector<std::string> ray_constancy_violations(const GridPartition& g, std::size_t limit = 20) {
  std::vector<std::string> out;
  for (std::size_t idx = 0; idx < g.box.size() && out.size() < limit; ++idx) {
    const ExtPoint x = g.box.point(idx);
    const ExtPoint y = meet(x, g.ideal_conductor);
    if (x == y) continue;
    const auto ly = g.level[g.box.index(y)];
    if (g.level[idx] != ly)
      out.push_back(to_string(x) + " has " + std::to_string(g.level[idx]) + ", " + to_string(y) + " has " +
                    std::to_string(ly));
  }
  return out;
}

}  // namespace goodsg
