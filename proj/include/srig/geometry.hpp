// Copyright 2026 The srig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "srig/graph.hpp"
#include "srig/rational.hpp"

namespace srig {

struct Point {
  BigInt x;
  BigInt y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Closed straight segment between two distinct integer points.
struct Segment {
  Point p;
  Point q;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Exact rational point, used for crossing locations.
struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend auto operator<=>(const RationalPoint& a, const RationalPoint& b) {
    if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// True iff the closed segments share a point. Throws InvalidArgument when
/// the pair is degenerate: an endpoint of one lies on the other (this covers
/// shared endpoints and collinear overlaps) or either segment has p == q.
bool segments_intersect(const Segment& a, const Segment& b);

/// The crossing point of two properly crossing segments.
RationalPoint crossing_point(const Segment& a, const Segment& b);

/// Parameter t in [0, 1] of `point` along `s` (p at 0, q at 1).
Rational position_along(const Segment& s, const RationalPoint& point);

/// A collection of segments in general position: every pair is disjoint or
/// crosses properly.
class Arrangement {
 public:
  Arrangement() = default;
  /// Throws InvalidArgument naming the first degenerate pair.
  explicit Arrangement(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  int size() const { return static_cast<int>(segments_.size()); }

 private:
  std::vector<Segment> segments_;
};

/// Vertex i per segment; ij is an edge iff segments i and j cross.
Graph string_graph(const Arrangement& arr);

/// Arrangement text format: `segments <n>` then n lines `<x1> <y1> <x2> <y2>`.
Arrangement parse_arrangement(const std::string& text);
std::string format_arrangement(const Arrangement& arr);

/// Combinatorial gap-cover certificate for a degeneracy ordering.
struct CoverCertificate {
  std::vector<Vertex> ordering;
  int degeneracy = 0;
  int bound = 0;  // 2 * degeneracy
  /// cover[e] = forward neighbourhood of both endpoints of edges()[e].
  std::vector<Edge> edges;
  std::vector<VertexSet> cover;
  /// Bearing as pairs of edge indices (e, f): the crossing is charged to e.
  std::vector<std::pair<int, int>> bearing;
  /// Pairs where charging the edge with the smaller top index left the
  /// other edge uncovered, so the pair was charged the other way.
  int reversed_pairs = 0;
  int max_cover_size = 0;
  /// Every (e, f) in the bearing has f covered by cover[e], and every cover
  /// has at most `bound` vertices.
  bool certified = false;
};

/// Builds the bearing over all potential crossings (independent edges e, f
/// where an endpoint of e equals or is adjacent to an endpoint of f), charging
/// each to the edge whose top endpoint comes earlier in the ordering, and
/// certifies the forward-neighbourhood covers.
/// Throws InvalidArgument if `order.order` is not a degeneracy ordering of
/// value `order.degeneracy`.
CoverCertificate potential_bearing(const Graph& g, const DegeneracyOrder& order);

}  // namespace srig
