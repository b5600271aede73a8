#pragma once

#include <memory>
#include <string>
#include <vector>

#include "goodsg/ext_point.hpp"
#include "goodsg/semigroup.hpp"

namespace goodsg {

namespace detail {

/// Every x with x_i = c_i - 1 and c_j <= x_j <= hi_j (j != i) is in the set.
inline bool slab_inside(const ClippedSet& set, const ExtPoint& c, std::size_t i) {
  const Box& box = set.box();
  ExtPoint lo = c;
  lo[i] = c[i].value() - 1;
  ExtPoint x = lo;
  while (true) {
    if (!set.contains_index(box.index(x))) return false;
    std::size_t j = box.dim();
    while (j-- > 0) {
      if (j == i) continue;
      if (x[j] < box.hi()[j]) {
        x[j] = x[j].value() + 1;
        break;
      }
      x[j] = lo[j];
    }
    if (j == static_cast<std::size_t>(-1)) return true;
  }
}

/// Smallest c <= hi with c + N^d inside the set (membership clipped at hi).
inline ExtPoint descend_conductor(const ClippedSet& set) {
  ExtPoint c = set.box().hi();
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < c.dim(); ++i)
      while (c[i].value() > 0 && slab_inside(set, c, i)) {
        c[i] = c[i].value() - 1;
        moved = true;
      }
  }
  return c;
}

}  // namespace detail

/// Proper good ideal E of S given by finitely many generators (E = union of g + S).
class GoodIdeal {
 public:
  static GoodIdeal principal(const GoodSemigroup& s, const ExtPoint& w) { return from_generators(s, {w}); }

  static GoodIdeal from_generators(const GoodSemigroup& s, std::vector<ExtPoint> gens) {
    if (gens.empty()) throw Error(ErrorKind::Usage, "at least one generator required");
    detail::check_points(s.dim(), gens, "generator");
    gens = detail::sorted_unique(std::move(gens));
    const std::size_t d = s.dim();
    for (const auto& g : gens) {
      if (g == ExtPoint(d)) throw Error(ErrorKind::ZeroGenerator, "generator 0 gives E = S");
      if (!s.contains(g)) throw Error(ErrorKind::NotInSemigroup, to_string(g) + " is not in S");
    }

    // Membership is constant along rays beyond B = max(g) + c.
    ExtPoint bound(d);
    for (const auto& g : gens) bound = join(bound, g);
    bound = bound + s.conductor();
    detail::ClippedSet wide(bound);
    const Box& box = wide.box();
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
      const ExtPoint x = box.point(idx);
      for (const auto& g : gens)
        if (leq(g, x) && s.contains(x - g)) {
          wide.insert(x);
          break;
        }
    }
    auto elems = wide.elements();
    if (auto w = wide.g1_witness(elems)) throw Error(ErrorKind::NotGoodIdeal, "G1: " + *w);
    if (auto w = wide.g2_witness(elems)) throw Error(ErrorKind::NotGoodIdeal, "G2: " + *w);

    GoodIdeal e;
    e.parent_ = std::make_shared<const GoodSemigroup>(s);
    e.gens_ = std::move(gens);
    e.conductor_ = detail::descend_conductor(wide);
    e.set_ = detail::ClippedSet(e.conductor_);
    for (const auto& x : elems)
      if (leq(x, e.conductor_)) e.set_.insert(x);
    e.truncated_ = e.set_.elements();
    return e;
  }

  const GoodSemigroup& parent() const noexcept { return *parent_; }
  const std::vector<ExtPoint>& generators() const noexcept { return gens_; }
  const ExtPoint& conductor() const noexcept { return conductor_; }
  std::size_t dim() const noexcept { return conductor_.dim(); }
  /// E cap [0, c_E], sorted.
  const std::vector<ExtPoint>& truncated() const noexcept { return truncated_; }

  ExtPoint gamma() const {
    ExtPoint g(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (conductor_[i].value() == 0) throw Error(ErrorKind::Usage, "gamma has a negative coordinate");
      g[i] = conductor_[i].value() - 1;
    }
    return g;
  }

  bool contains(const ExtPoint& x) const {
    detail::require_same_dim(x, conductor_);
    detail::require_finite(x, "point");
    return set_.contains(x);
  }

  /// Re-checks G1, G2, properness and conductor minimality on E cap [0, c_E].
  ValidationReport validate() const {
    ValidationReport rep;
    rep.conductor = conductor_;
    rep.checks.push_back({"proper", !contains(ExtPoint(dim())), "", ErrorKind::NotProper});
    AxiomCheck g1{"G1", true, "", ErrorKind::NotGoodIdeal};
    if (auto w = set_.g1_witness(truncated_)) g1 = {"G1", false, *w, ErrorKind::NotGoodIdeal};
    rep.checks.push_back(g1);
    AxiomCheck g2{"G2", true, "", ErrorKind::NotGoodIdeal};
    if (auto w = set_.g2_witness(truncated_)) g2 = {"G2", false, *w, ErrorKind::NotGoodIdeal};
    rep.checks.push_back(g2);
    rep.checks.push_back(
        {"conductor-minimal", detail::descend_conductor(set_) == conductor_, "", ErrorKind::ConductorNotMinimal});
    return rep;
  }

 private:
  std::shared_ptr<const GoodSemigroup> parent_;
  std::vector<ExtPoint> gens_;
  ExtPoint conductor_;
  detail::ClippedSet set_;
  std::vector<ExtPoint> truncated_;
};

inline GoodIdeal principal_ideal(const GoodSemigroup& s, const ExtPoint& w) { return GoodIdeal::principal(s, w); }

inline GoodIdeal ideal_from_generators(const GoodSemigroup& s, std::vector<ExtPoint> gens) {
  return GoodIdeal::from_generators(s, std::move(gens));
}

/// S \ E as canonical representatives: points of [0, c_E] with coordinates equal
/// to c_E,i replaced by INF. Sorted lexicographically.
struct ComplementSet {
  ExtPoint ideal_conductor;
  std::vector<ExtPoint> reps;

  std::size_t size() const noexcept { return reps.size(); }
};

inline ComplementSet complement(const GoodIdeal& e) {
  ComplementSet a{e.conductor(), {}};
  Box box(e.conductor());
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    const ExtPoint x = box.point(idx);
    if (e.parent().contains(x) && !e.contains(x)) a.reps.push_back(saturate(x, e.conductor()));
  }
  return a;
}

}  // namespace goodsg
