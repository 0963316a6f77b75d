#pragma once

// Exact arithmetic on finite permutations of {0,...,k-1}.
//
// Composition is a right action throughout: compose(p, q) applies p first,
// then q, so x^(pq) = (x^p)^q. Every other header relies on this convention.

#include <cctype>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace chiralmap {

using Point = std::uint32_t;

enum class Parity { Even, Odd };

inline Parity operator^(Parity a, Parity b) {
  return a == b ? Parity::Even : Parity::Odd;
}

struct CycleDecomposition {
  // Canonical form: each cycle starts at its minimum point, cycles sorted
  // by minimum point, fixed points listed separately in increasing order.
  std::vector<std::vector<Point>> cycles;
  std::vector<Point> fixed_points;

  bool operator==(const CycleDecomposition&) const = default;
};

class Perm {
public:
  explicit Perm(Point degree = 0) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  static Perm from_images(std::vector<Point> images) {
    const Point k = static_cast<Point>(images.size());
    std::vector<bool> seen(k, false);
    for (Point y : images) {
      if (y >= k)
        throw OutOfRange("image " + std::to_string(y) + " out of range for degree " +
                         std::to_string(k));
      if (seen[y])
        throw RepeatedPoint("image " + std::to_string(y) + " repeated");
      seen[y] = true;
    }
    Perm p;
    p.images_ = std::move(images);
    return p;
  }

  // Product of the given disjoint cycles; unlisted points are fixed.
  static Perm from_cycles(std::span<const std::vector<Point>> cycles, Point degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> seen(degree, false);
    for (const auto& c : cycles) {
      for (Point x : c) {
        if (x >= degree)
          throw OutOfRange("cycle point " + std::to_string(x) +
                           " out of range for degree " + std::to_string(degree));
        if (seen[x])
          throw RepeatedPoint("point " + std::to_string(x) + " repeated across cycles");
        seen[x] = true;
      }
      for (std::size_t j = 0; j < c.size(); ++j)
        img[c[j]] = c[(j + 1) % c.size()];
    }
    Perm p;
    p.images_ = std::move(img);
    return p;
  }

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const {
    for (Point x = 0; x < degree(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  bool operator==(const Perm&) const = default;

private:
  std::vector<Point> images_;
};

// Apply p first, then q.
inline Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " vs " +
                         std::to_string(q.degree()));
  std::vector<Point> img(p.degree());
  for (Point x = 0; x < p.degree(); ++x) img[x] = q(p(x));
  return Perm::from_images(std::move(img));
}

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

inline Perm inverse(const Perm& p) {
  std::vector<Point> img(p.degree());
  for (Point x = 0; x < p.degree(); ++x) img[p(x)] = x;
  return Perm::from_images(std::move(img));
}

inline Perm power(const Perm& p, long long e) {
  Perm base = e < 0 ? inverse(p) : p;
  unsigned long long r = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);
  Perm acc(p.degree());
  while (r) {
    if (r & 1) acc = compose(acc, base);
    base = compose(base, base);
    r >>= 1;
  }
  return acc;
}

inline CycleDecomposition cycle_decomposition(const Perm& p) {
  CycleDecomposition d;
  const Point k = p.degree();
  std::vector<bool> seen(k, false);
  for (Point x = 0; x < k; ++x) {
    if (seen[x]) continue;
    std::vector<Point> c{x};
    seen[x] = true;
    for (Point y = p(x); y != x; y = p(y)) {
      c.push_back(y);
      seen[y] = true;
    }
    if (c.size() == 1)
      d.fixed_points.push_back(x);
    else
      d.cycles.push_back(std::move(c));
  }
  return d;
}

// Rebuild a permutation from its decomposition's cycles.
inline Perm from_cycles(const std::vector<std::vector<Point>>& cycles, Point degree) {
  return Perm::from_cycles(cycles, degree);
}

inline Parity parity(const Perm& p) {
  std::size_t transpositions = 0;
  for (const auto& c : cycle_decomposition(p).cycles) transpositions += c.size() - 1;
  return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

inline unsigned long long order(const Perm& p) {
  unsigned long long o = 1;
  for (const auto& c : cycle_decomposition(p).cycles)
    o = std::lcm(o, static_cast<unsigned long long>(c.size()));
  return o;
}

inline std::vector<Point> fixed_points(const Perm& p) {
  std::vector<Point> fx;
  for (Point x = 0; x < p.degree(); ++x)
    if (p(x) == x) fx.push_back(x);
  return fx;
}

// True when p is a single cycle of length >= 2 (plus any fixed points).
inline bool is_single_cycle(const Perm& p) {
  return cycle_decomposition(p).cycles.size() == 1;
}

// Textual cycle notation with 1-based points: "(1,2,3)(4,5)"; identity is "()".
inline std::string to_cycle_string(const Perm& p) {
  const auto d = cycle_decomposition(p);
  if (d.cycles.empty()) return "()";
  std::string out;
  for (const auto& c : d.cycles) {
    out += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(c[j] + 1);
    }
    out += ')';
  }
  return out;
}

inline Perm parse_cycle_string(const std::string& text, Point degree) {
  std::vector<std::vector<Point>> cycles;
  std::vector<Point> cur;
  bool in_cycle = false;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] == '(') {
      if (in_cycle) throw ParseError("nested '(' in cycle notation");
      in_cycle = true;
      cur.clear();
      ++i;
    } else if (text[i] == ')') {
      if (!in_cycle) throw ParseError("unmatched ')'");
      if (cur.size() == 1) throw ParseError("cycle of length 1");
      if (!cur.empty()) cycles.push_back(cur);
      in_cycle = false;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (!in_cycle) throw ParseError("point outside cycle");
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<unsigned long>(text[i++] - '0');
      if (v == 0) throw ParseError("points are 1-based; got 0");
      cur.push_back(static_cast<Point>(v - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + text[i] + "'");
    }
    skip_ws();
  }
  if (in_cycle) throw ParseError("unterminated cycle");
  return Perm::from_cycles(cycles, degree);
}

}  // namespace chiralmap
