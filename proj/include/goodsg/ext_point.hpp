#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goodsg/error.hpp"

namespace goodsg {

inline constexpr std::size_t kMaxDim = 16;

/// Natural number or INF. INF is larger than every finite value.
class ExtNat {
 public:
  using value_type = std::uint32_t;

  constexpr ExtNat() noexcept = default;
  constexpr ExtNat(value_type v) noexcept : value_(v) {}  // NOLINT: implicit on purpose

  static constexpr ExtNat inf() noexcept {
    ExtNat x;
    x.inf_ = true;
    return x;
  }

  constexpr bool is_inf() const noexcept { return inf_; }
  constexpr bool is_finite() const noexcept { return !inf_; }

  value_type value() const {
    if (inf_) throw Error(ErrorKind::Usage, "INF has no finite value");
    return value_;
  }

  friend constexpr bool operator==(ExtNat a, ExtNat b) noexcept {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) noexcept {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.value_ <=> b.value_;
  }

  friend ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.inf_ || b.inf_) return inf();
    if (a.value_ > std::numeric_limits<value_type>::max() - b.value_)
      throw Error(ErrorKind::Usage, "coordinate overflow");
    return ExtNat(a.value_ + b.value_);
  }

 private:
  value_type value_ = 0;
  bool inf_ = false;
};

inline constexpr ExtNat kInf = ExtNat::inf();

inline std::string to_string(ExtNat x) { return x.is_inf() ? std::string("inf") : std::to_string(x.value()); }

/// Subset of {0..d-1} as a bitmask. Printed 1-based.
class IndexSet {
 public:
  constexpr IndexSet() noexcept = default;

  static constexpr IndexSet from_bits(std::uint64_t bits) noexcept {
    IndexSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr IndexSet full(std::size_t d) noexcept {
    return from_bits(d >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1);
  }
  static constexpr IndexSet single(std::size_t i) noexcept { return from_bits(std::uint64_t{1} << i); }
  static IndexSet of(std::initializer_list<std::size_t> idx) {
    IndexSet s;
    for (auto i : idx) s.insert(i);
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
  constexpr void insert(std::size_t i) noexcept { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) noexcept { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(IndexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) noexcept { return from_bits(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) noexcept { return from_bits(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) noexcept { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet, IndexSet) noexcept = default;
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) noexcept { return a.bits_ <=> b.bits_; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Complement of F inside {0..d-1}.
constexpr IndexSet orthogonal(IndexSet f, std::size_t d) noexcept { return IndexSet::full(d) - f; }

inline std::string to_string(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.members()) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

class ExtPoint {
 public:
  ExtPoint() = default;
  explicit ExtPoint(std::size_t d, ExtNat fill = 0) : c_(d, fill) {}
  ExtPoint(std::initializer_list<ExtNat> xs) : c_(xs) {}
  explicit ExtPoint(std::vector<ExtNat> xs) : c_(std::move(xs)) {}

  std::size_t dim() const noexcept { return c_.size(); }
  ExtNat operator[](std::size_t i) const { return c_[i]; }
  ExtNat& operator[](std::size_t i) { return c_[i]; }
  auto begin() const noexcept { return c_.begin(); }
  auto end() const noexcept { return c_.end(); }

  bool is_finite() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](ExtNat x) { return x.is_finite(); });
  }
  IndexSet inf_set() const noexcept {
    IndexSet s;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i].is_inf()) s.insert(i);
    return s;
  }
  IndexSet finite_set() const noexcept { return orthogonal(inf_set(), dim()); }

  friend bool operator==(const ExtPoint&, const ExtPoint&) = default;
  /// Lexicographic, INF last per coordinate.
  friend std::strong_ordering operator<=>(const ExtPoint& a, const ExtPoint& b) {
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

 private:
  std::vector<ExtNat> c_;
};

namespace detail {

inline void require_same_dim(const ExtPoint& a, const ExtPoint& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::Usage,
                "dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

inline void require_finite(const ExtPoint& a, std::string_view what) {
  if (!a.is_finite()) throw Error(ErrorKind::Usage, std::string(what) + " must be finite");
}

}  // namespace detail

inline std::string to_string(const ExtPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out += ',';
    out += to_string(p[i]);
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const ExtPoint& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, IndexSet s) { return os << to_string(s); }

/// Parses "(3,inf,11)". Whitespace is ignored; "inf" is case-insensitive.
inline ExtPoint parse_point(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  auto fail = [&](const std::string& why) -> ExtPoint {
    throw Error(ErrorKind::Parse, "bad point '" + std::string(text) + "': " + why);
  };
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return fail("expected parentheses");
  std::vector<ExtNat> coords;
  std::string_view body(s);
  body = body.substr(1, body.size() - 2);
  if (body.empty()) return fail("empty point");
  std::size_t pos = 0;
  while (true) {
    auto comma = body.find(',', pos);
    auto tok = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (tok.empty()) return fail("empty coordinate");
    if (tok == "inf") {
      coords.push_back(kInf);
    } else {
      std::uint64_t v = 0;
      for (char ch : tok) {
        if (ch < '0' || ch > '9') return fail("non-numeric coordinate '" + std::string(tok) + "'");
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
        if (v > std::numeric_limits<ExtNat::value_type>::max()) return fail("coordinate too large");
      }
      coords.push_back(ExtNat(static_cast<ExtNat::value_type>(v)));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (coords.size() > kMaxDim) return fail("dimension above " + std::to_string(kMaxDim));
  return ExtPoint(std::move(coords));
}

inline ExtPoint meet(const ExtPoint& a, const ExtPoint& b) {
  detail::require_same_dim(a, b);
  ExtPoint r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline ExtPoint join(const ExtPoint& a, const ExtPoint& b) {
  detail::require_same_dim(a, b);
  ExtPoint r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline ExtPoint operator+(const ExtPoint& a, const ExtPoint& b) {
  detail::require_same_dim(a, b);
  ExtPoint r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// Finite a - b; requires b <= a.
inline ExtPoint operator-(const ExtPoint& a, const ExtPoint& b) {
  detail::require_same_dim(a, b);
  ExtPoint r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i].is_inf() || b[i].is_inf() || b[i] > a[i])
      throw Error(ErrorKind::Usage, "cannot subtract " + to_string(b) + " from " + to_string(a));
    r[i] = a[i].value() - b[i].value();
  }
  return r;
}

inline bool leq(const ExtPoint& a, const ExtPoint& b) {
  detail::require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// b >> a: strictly larger in every coordinate (plain order, INF > finite).
inline bool dominates(const ExtPoint& b, const ExtPoint& a) {
  detail::require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(b[i] > a[i])) return false;
  return true;
}

/// Domination between representatives: an INF coordinate of b beats anything,
/// an INF coordinate of a is beaten only by INF.
inline bool dominates_ext(const ExtPoint& b, const ExtPoint& a) {
  detail::require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (b[i].is_inf()) continue;
    if (a[i].is_inf() || !(b[i] > a[i])) return false;
  }
  return true;
}

/// Equality on F, strictly larger off F (closed: larger or equal, minus a itself).
inline bool in_delta(const ExtPoint& b, IndexSet f, const ExtPoint& a, bool closed = false) {
  detail::require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (f.contains(i)) {
      if (b[i] != a[i]) return false;
    } else if (closed ? b[i] < a[i] : !(b[i] > a[i])) {
      return false;
    }
  }
  return !(closed && b == a);
}

inline std::vector<ExtPoint> delta(std::span<const ExtPoint> reference, IndexSet f, const ExtPoint& a,
                                   bool closed = false) {
  if (!f.subset_of(IndexSet::full(a.dim()))) throw Error(ErrorKind::Usage, "index set outside dimension");
  std::vector<ExtPoint> out;
  for (const auto& b : reference)
    if (in_delta(b, f, a, closed)) out.push_back(b);
  return out;
}

/// Union of the Delta_i over singletons {i}.
inline std::vector<ExtPoint> delta_union(std::span<const ExtPoint> reference, const ExtPoint& a) {
  std::vector<ExtPoint> out;
  for (const auto& b : reference)
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (in_delta(b, IndexSet::single(i), a)) {
        out.push_back(b);
        break;
      }
  return out;
}

/// Replace coordinates reaching the bound by INF after clipping.
inline ExtPoint saturate(const ExtPoint& a, const ExtPoint& bound) {
  detail::require_same_dim(a, bound);
  ExtPoint r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] >= bound[i] ? kInf : a[i];
  return r;
}

/// Replace INF coordinates by the bound value.
inline ExtPoint finitize(const ExtPoint& a, const ExtPoint& bound) {
  detail::require_same_dim(a, bound);
  ExtPoint r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i].is_inf() ? bound[i] : a[i];
  return r;
}

/// Dense index over the box [0, hi], lexicographic order (first coordinate slowest).
class Box {
 public:
  Box() = default;
  explicit Box(const ExtPoint& hi, std::size_t cap = std::size_t{1} << 26) : hi_(hi), stride_(hi.dim()) {
    detail::require_finite(hi, "box bound");
    std::size_t size = 1;
    for (std::size_t i = hi.dim(); i-- > 0;) {
      stride_[i] = size;
      const std::size_t len = std::size_t{hi[i].value()} + 1;
      if (size > cap / len) throw Error(ErrorKind::GridTooLarge, "box " + to_string(hi) + " too large");
      size *= len;
    }
    size_ = size;
  }

  std::size_t dim() const noexcept { return hi_.dim(); }
  std::size_t size() const noexcept { return size_; }
  const ExtPoint& hi() const noexcept { return hi_; }
  std::size_t stride(std::size_t i) const noexcept { return stride_[i]; }

  bool inside(const ExtPoint& p) const {
    return p.dim() == dim() && p.is_finite() && leq(p, hi_);
  }
  std::size_t index(const ExtPoint& p) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim(); ++i) idx += std::size_t{p[i].value()} * stride_[i];
    return idx;
  }
  /// Index of p clipped into the box.
  std::size_t clipped_index(const ExtPoint& p) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim(); ++i) idx += std::size_t{std::min(p[i], hi_[i]).value()} * stride_[i];
    return idx;
  }
  ExtPoint point(std::size_t idx) const {
    ExtPoint p(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      p[i] = static_cast<ExtNat::value_type>(idx / stride_[i]);
      idx %= stride_[i];
    }
    return p;
  }
  std::size_t coord(std::size_t idx, std::size_t i) const noexcept {
    return (idx / stride_[i]) % (std::size_t{hi_[i].value()} + 1);
  }

 private:
  ExtPoint hi_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 0;
};

/// Suffix-OR of a bitmap along the axes in `axes`:
/// out[x] = exists y with mark[y], y == x off axes, y >= x on axes.
inline std::vector<std::uint8_t> orthant_table(const Box& box, const std::vector<std::uint8_t>& mark, IndexSet axes) {
  std::vector<std::uint8_t> t = mark;
  for (auto ax : axes.members()) {
    const std::size_t st = box.stride(ax);
    for (std::size_t idx = box.size(); idx-- > 0;)
      if (!t[idx] && box.coord(idx, ax) < box.hi()[ax].value() && t[idx + st]) t[idx] = 1;
  }
  return t;
}

}  // namespace goodsg
