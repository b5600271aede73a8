#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "goodsg/error.hpp"
#include "goodsg/ext_point.hpp"
#include "goodsg/ideal.hpp"
#include "goodsg/levels.hpp"

namespace goodsg {

/// alpha(U): free coordinates U carry values, INF off U. Dimension d - |U|.
struct Subspace {
  ExtPoint base;

  static Subspace from_rep(const ExtPoint& rep) { return Subspace{rep}; }

  IndexSet u() const { return base.finite_set(); }
  std::size_t dimension() const { return base.inf_set().size(); }

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace& a, const Subspace& b) { return a.base <=> b.base; }
};

inline std::string to_string(const Subspace& s) { return to_string(s.base); }

/// Canonical representative of a point of S \ E: clip to c_E, INF where the clip bites.
inline ExtPoint canonical_representative(const GoodIdeal& e, const ExtPoint& a) {
  detail::require_same_dim(a, e.conductor());
  const ExtPoint x = meet(finitize(a, e.conductor()), e.conductor());
  if (!e.parent().contains(x) || e.contains(x))
    throw Error(ErrorKind::NotInComplement, to_string(a) + " is not in S \\ E");
  return saturate(x, e.conductor());
}

/// (alpha ^ beta)(U cup V).
inline Subspace subspace_meet(const Subspace& x, const Subspace& y) { return Subspace{meet(x.base, y.base)}; }

/// Coordinate sum on the common U; needs the same U.
inline Subspace subspace_sum(const Subspace& x, const Subspace& y) {
  detail::require_same_dim(x.base, y.base);
  if (x.u() != y.u()) throw Error(ErrorKind::MixedU, to_string(x) + " + " + to_string(y));
  return Subspace{x.base + y.base};
}

/// Order of U-subspaces: <= on U. Needs the same U.
inline bool subspace_leq(const Subspace& x, const Subspace& y) {
  detail::require_same_dim(x.base, y.base);
  if (x.u() != y.u()) throw Error(ErrorKind::MixedU, to_string(x) + " <= " + to_string(y));
  return leq(x.base, y.base);
}

/// Point-set containment of inner(U) in outer(V) for the conductor c: V inside U,
/// agreement on V, and inner at least c on U \ V.
inline bool subspace_contains(const Subspace& outer, const Subspace& inner, const ExtPoint& c) {
  detail::require_same_dim(outer.base, inner.base);
  detail::require_same_dim(outer.base, c);
  const IndexSet v = outer.u();
  if (!v.subset_of(inner.u())) return false;
  for (auto i : v.members())
    if (outer.base[i] != inner.base[i]) return false;
  for (auto i : (inner.u() - v).members())
    if (inner.base[i] < c[i]) return false;
  return true;
}

/// Subspaces of A_i sorted by dimension (descending) then lexicographically.
inline std::vector<Subspace> subspaces_of_level(const LevelPartition& p, std::size_t i) {
  if (i == 0 || i > p.size())
    throw Error(ErrorKind::Usage, "level " + std::to_string(i) + " outside 1.." + std::to_string(p.size()));
  std::vector<Subspace> out;
  for (const auto& rep : p.level(i)) out.push_back(Subspace::from_rep(rep));
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dimension() != b.dimension()) return a.dimension() > b.dimension();
    return a.base < b.base;
  });
  return out;
}

/// U-subspaces among the representatives with the same k-th coordinate as x.
inline std::vector<Subspace> h_k_set(std::span<const ExtPoint> reps, const Subspace& x, std::size_t k) {
  if (k >= x.base.dim() || !x.u().contains(k))
    throw Error(ErrorKind::IndexNotInU, "index " + std::to_string(k + 1) + " not in " + to_string(x.u()));
  std::vector<Subspace> out;
  for (const auto& r : reps)
    if (r.dim() == x.base.dim() && r.finite_set() == x.u() && r[k] == x.base[k]) out.push_back(Subspace{r});
  std::sort(out.begin(), out.end());
  return out;
}

struct TheoremReport {
  std::size_t n = 0;
  std::size_t expected = 0;
  std::vector<std::size_t> prefix;                 // s_1 .. s_d
  std::vector<std::size_t> max_dimension;          // per level, index 0 = A_1
  std::vector<std::string> violations;

  bool passed() const { return n == expected && violations.empty(); }
  std::string summary() const {
    return "N=" + std::to_string(n) + " expected=" + std::to_string(expected) + (passed() ? " PASS" : " FAIL");
  }
};

/// N = w_1 + ... + w_d, and (w sorted decreasingly, s_k prefix sums) level i
/// holds a subspace of dimension d - k exactly when i >= N - s_k + 1.
inline TheoremReport theorem_main_check(const LevelPartition& p, const ExtPoint& w) {
  detail::require_finite(w, "omega");
  const std::size_t d = w.dim();
  std::vector<std::size_t> ws;
  for (auto x : w) ws.push_back(x.value());
  std::sort(ws.rbegin(), ws.rend());
  TheoremReport r;
  std::size_t acc = 0;
  for (auto x : ws) r.prefix.push_back(acc += x);
  r.expected = acc;
  r.n = p.size();
  for (const auto& lvl : p.levels()) {
    std::size_t m = 0;
    for (const auto& rep : lvl) m = std::max(m, rep.inf_set().size());
    r.max_dimension.push_back(m);
  }
  if (r.n != r.expected)
    r.violations.push_back("N=" + std::to_string(r.n) + " but sum of omega is " + std::to_string(r.expected));
  for (std::size_t k = 1; k <= d; ++k) {
    const std::size_t dim = d - k;
    for (std::size_t i = 1; i <= r.n; ++i) {
      const bool has = r.max_dimension[i - 1] >= dim;
      const bool want = i + r.prefix[k - 1] >= r.n + 1;
      if (has != want)
        r.violations.push_back("level " + std::to_string(i) + (has ? " has" : " lacks") + " dimension " +
                               std::to_string(dim));
    }
  }
  return r;
}

}  // namespace goodsg
