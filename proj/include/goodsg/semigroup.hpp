#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goodsg/error.hpp"
#include "goodsg/ext_point.hpp"

namespace goodsg {

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;
  ErrorKind kind = ErrorKind::Usage;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool local = false;
  std::optional<ExtPoint> conductor;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
  }
  const AxiomCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
  std::string to_text() const {
    std::string out;
    for (const auto& c : checks) {
      out += c.name + ": " + (c.passed ? "pass" : "FAIL");
      if (!c.passed && !c.witness.empty()) out += " " + c.witness;
      out += '\n';
    }
    if (conductor) out += "conductor: " + to_string(*conductor) + '\n';
    out += std::string("local: ") + (local ? "yes" : "no") + '\n';
    return out;
  }
};

namespace detail {

/// Finite set held as a bitmap over [0, hi] where membership of a point x is
/// decided by x clipped to hi.
class ClippedSet {
 public:
  ClippedSet() = default;
  explicit ClippedSet(const ExtPoint& hi) : box_(hi), mark_(box_.size(), 0) {}

  const Box& box() const noexcept { return box_; }
  const std::vector<std::uint8_t>& marks() const noexcept { return mark_; }
  void insert(const ExtPoint& p) { mark_[box_.index(p)] = 1; }
  bool contains(const ExtPoint& p) const {
    detail::require_same_dim(p, box_.hi());
    return mark_[box_.clipped_index(p)] != 0;
  }
  bool contains_index(std::size_t idx) const noexcept { return mark_[idx] != 0; }

  std::vector<ExtPoint> elements() const {
    std::vector<ExtPoint> out;
    for (std::size_t i = 0; i < box_.size(); ++i)
      if (mark_[i]) out.push_back(box_.point(i));
    return out;
  }

  /// First pair a < b (lexicographic) whose meet is missing.
  std::optional<std::string> g1_witness(const std::vector<ExtPoint>& elems) const {
    for (std::size_t x = 0; x < elems.size(); ++x)
      for (std::size_t y = x + 1; y < elems.size(); ++y) {
        auto m = meet(elems[x], elems[y]);
        if (!contains(m))
          return to_string(elems[x]) + " meet " + to_string(elems[y]) + " = " + to_string(m) + " missing";
      }
    return std::nullopt;
  }

  /// First (a, b, i) with a_i = b_i < hi_i and no admissible epsilon.
  std::optional<std::string> g2_witness(const std::vector<ExtPoint>& elems) const {
    const std::size_t d = box_.dim();
    std::map<std::uint64_t, std::vector<std::uint8_t>> tables;
    auto table = [&](IndexSet axes) -> const std::vector<std::uint8_t>& {
      auto it = tables.find(axes.bits());
      if (it == tables.end()) it = tables.emplace(axes.bits(), orthant_table(box_, mark_, axes)).first;
      return it->second;
    };
    for (std::size_t x = 0; x < elems.size(); ++x)
      for (std::size_t y = x + 1; y < elems.size(); ++y) {
        const auto& a = elems[x];
        const auto& b = elems[y];
        IndexSet eq;
        for (std::size_t j = 0; j < d; ++j)
          if (a[j] == b[j]) eq.insert(j);
        for (auto i : eq.members()) {
          if (a[i] >= box_.hi()[i]) continue;
          ExtPoint q(d);
          for (std::size_t j = 0; j < d; ++j) q[j] = std::min(a[j], b[j]);
          q[i] = a[i].value() + 1;
          if (!table(eq)[box_.index(q)])
            return to_string(a) + " " + to_string(b) + " i=" + std::to_string(i + 1);
        }
      }
    return std::nullopt;
  }

 private:
  Box box_;
  std::vector<std::uint8_t> mark_;
};

inline void check_points(std::size_t d, const std::vector<ExtPoint>& pts, std::string_view what) {
  if (d == 0 || d > kMaxDim)
    throw Error(ErrorKind::Usage, "dimension must be in 1.." + std::to_string(kMaxDim));
  for (const auto& p : pts) {
    if (p.dim() != d)
      throw Error(ErrorKind::Usage, std::string(what) + " " + to_string(p) + " has dimension " +
                                        std::to_string(p.dim()) + ", expected " + std::to_string(d));
    require_finite(p, what);
  }
}

inline std::vector<ExtPoint> sorted_unique(std::vector<ExtPoint> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

/// Good semigroup given by its small elements S cap [0, c].
class GoodSemigroup {
 public:
  static ValidationReport validate_small(std::size_t d, std::vector<ExtPoint> elements) {
    detail::check_points(d, elements, "element");
    elements = detail::sorted_unique(std::move(elements));
    ValidationReport rep;
    ExtPoint top(d);
    for (const auto& e : elements) top = join(top, e);
    auto has = [&](const ExtPoint& p) { return std::binary_search(elements.begin(), elements.end(), p); };

    rep.checks.push_back({"zero", has(ExtPoint(d)), has(ExtPoint(d)) ? "" : "(0,...,0) missing",
                          ErrorKind::MissingZero});
    rep.checks.push_back({"maximum", has(top), has(top) ? "" : "componentwise max " + to_string(top) + " missing",
                          ErrorKind::NoUniqueMaximum});

    detail::ClippedSet set(top);
    for (const auto& e : elements) set.insert(e);

    AxiomCheck g1{"G1", true, "", ErrorKind::G1Violation};
    if (auto w = set.g1_witness(elements)) g1 = {"G1", false, *w, ErrorKind::G1Violation};
    rep.checks.push_back(g1);

    AxiomCheck closure{"closure", true, "", ErrorKind::NotAMonoid};
    for (std::size_t x = 0; x < elements.size() && closure.passed; ++x)
      for (std::size_t y = x; y < elements.size(); ++y) {
        auto s = elements[x] + elements[y];
        if (!set.contains(s)) {
          closure = {"closure", false,
                     to_string(elements[x]) + " + " + to_string(elements[y]) + " = " + to_string(s) + " missing",
                     ErrorKind::NotAMonoid};
          break;
        }
      }
    rep.checks.push_back(closure);

    AxiomCheck g2{"G2", true, "", ErrorKind::G2Violation};
    if (auto w = set.g2_witness(elements)) g2 = {"G2", false, *w, ErrorKind::G2Violation};
    rep.checks.push_back(g2);

    AxiomCheck cmin{"conductor-minimal", true, "", ErrorKind::ConductorNotMinimal};
    for (std::size_t i = 0; i < d; ++i) {
      if (top[i].value() == 0) continue;
      ExtPoint lower = top;
      lower[i] = top[i].value() - 1;
      if (has(lower)) {
        cmin = {"conductor-minimal", false, to_string(lower) + " + N^d lies in S", ErrorKind::ConductorNotMinimal};
        break;
      }
    }
    rep.checks.push_back(cmin);

    rep.conductor = top;
    // A zero conductor coordinate puts (0,..,k,..) in S for the other axes.
    const bool zero_axis = d >= 2 && std::any_of(top.begin(), top.end(), [](ExtNat x) { return x == ExtNat(0); });
    rep.local = !zero_axis && std::none_of(elements.begin(), elements.end(), [&](const ExtPoint& e) {
      if (e == ExtPoint(d)) return false;
      return std::any_of(e.begin(), e.end(), [](ExtNat x) { return x == ExtNat(0); });
    });
    return rep;
  }

  static GoodSemigroup from_small_elements(std::size_t d, std::vector<ExtPoint> elements,
                                           std::optional<ExtPoint> declared_conductor = std::nullopt) {
    auto rep = validate_small(d, elements);
    if (const auto* f = rep.first_failure()) throw Error(f->kind, f->witness);
    if (declared_conductor && *declared_conductor != *rep.conductor)
      throw Error(ErrorKind::ConductorMismatch,
                  "declared " + to_string(*declared_conductor) + ", actual " + to_string(*rep.conductor));
    GoodSemigroup s;
    s.small_ = detail::sorted_unique(std::move(elements));
    s.conductor_ = *rep.conductor;
    s.local_ = rep.local;
    s.set_ = detail::ClippedSet(s.conductor_);
    for (const auto& e : s.small_) s.set_.insert(e);
    return s;
  }

  std::size_t dim() const noexcept { return conductor_.dim(); }
  const ExtPoint& conductor() const noexcept { return conductor_; }
  const std::vector<ExtPoint>& small() const noexcept { return small_; }
  bool is_local() const noexcept { return local_; }

  /// c - 1; needs every conductor coordinate positive.
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

  /// Minimum of the nonzero elements, if that minimum is itself a nonzero element.
  std::optional<ExtPoint> minimal_nonzero() const {
    if (small_.size() < 2) return std::nullopt;
    ExtPoint m = small_[1];
    for (std::size_t k = 2; k < small_.size(); ++k) m = meet(m, small_[k]);
    if (m == ExtPoint(dim()) || !contains(m)) return std::nullopt;
    return m;
  }

  ValidationReport validate() const { return validate_small(dim(), small_); }

  friend bool operator==(const GoodSemigroup& a, const GoodSemigroup& b) { return a.small_ == b.small_; }

 private:
  std::vector<ExtPoint> small_;
  ExtPoint conductor_;
  bool local_ = false;
  detail::ClippedSet set_;
};

}  // namespace goodsg
