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

#include "srig/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "srig/error.hpp"
#include "text_io.hpp"

namespace srig {

namespace {

int sign(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of the cross product (b - a) x (c - a).
int orient(const Point& a, const Point& b, const Point& c) {
  return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

// Assumes c is collinear with a-b.
bool within_box(const Point& a, const Point& b, const Point& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

std::string describe(const Segment& s) {
  return "(" + s.p.x.str() + "," + s.p.y.str() + ")-(" + s.q.x.str() + "," + s.q.y.str() + ")";
}

}  // namespace

bool segments_intersect(const Segment& a, const Segment& b) {
  if (a.p == a.q || b.p == b.q) throw InvalidArgument("zero-length segment");
  const int o1 = orient(a.p, a.q, b.p);
  const int o2 = orient(a.p, a.q, b.q);
  const int o3 = orient(b.p, b.q, a.p);
  const int o4 = orient(b.p, b.q, a.q);
  if (o1 == 0 && o2 == 0) {
    if (within_box(a.p, a.q, b.p) || within_box(a.p, a.q, b.q) || within_box(b.p, b.q, a.p) ||
        within_box(b.p, b.q, a.q)) {
      throw InvalidArgument("collinear overlap between " + describe(a) + " and " + describe(b));
    }
    return false;
  }
  if ((o1 == 0 && within_box(a.p, a.q, b.p)) || (o2 == 0 && within_box(a.p, a.q, b.q)) ||
      (o3 == 0 && within_box(b.p, b.q, a.p)) || (o4 == 0 && within_box(b.p, b.q, a.q))) {
    throw InvalidArgument("endpoint incidence between " + describe(a) + " and " + describe(b));
  }
  return o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && o1 != o2 && o3 != o4;
}

RationalPoint crossing_point(const Segment& a, const Segment& b) {
  const BigInt rx = a.q.x - a.p.x;
  const BigInt ry = a.q.y - a.p.y;
  const BigInt sx = b.q.x - b.p.x;
  const BigInt sy = b.q.y - b.p.y;
  const BigInt denom = rx * sy - ry * sx;
  if (denom == 0) throw InvalidArgument("parallel segments have no crossing point");
  const BigInt num = (b.p.x - a.p.x) * sy - (b.p.y - a.p.y) * sx;
  Rational t = make_ratio(num, denom);
  return {Rational(a.p.x) + t * Rational(rx), Rational(a.p.y) + t * Rational(ry)};
}

Rational position_along(const Segment& s, const RationalPoint& point) {
  if (s.q.x != s.p.x) return (point.x - Rational(s.p.x)) / Rational(s.q.x - s.p.x);
  return (point.y - Rational(s.p.y)) / Rational(s.q.y - s.p.y);
}

Arrangement::Arrangement(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (segments_[i].p == segments_[i].q) {
      throw InvalidArgument("segment " + std::to_string(i) + " has equal endpoints");
    }
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    for (std::size_t j = i + 1; j < segments_.size(); ++j) {
      try {
        segments_intersect(segments_[i], segments_[j]);
      } catch (const InvalidArgument& e) {
        throw InvalidArgument("segments " + std::to_string(i) + " and " + std::to_string(j) +
                              ": " + e.what());
      }
    }
  }
}

Graph string_graph(const Arrangement& arr) {
  std::vector<Edge> edges;
  const auto& s = arr.segments();
  for (int i = 0; i < arr.size(); ++i) {
    for (int j = i + 1; j < arr.size(); ++j) {
      if (segments_intersect(s[i], s[j])) edges.emplace_back(i, j);
    }
  }
  return Graph(arr.size(), edges);
}

Arrangement parse_arrangement(const std::string& text) {
  detail::LineReader reader(text);
  auto header = reader.next_tokens();
  if (header.size() != 2 || header[0] != "segments") reader.fail("expected 'segments <n>'");
  long long n = detail::parse_integer(header[1], reader);
  if (n < 0) reader.fail("negative segment count");
  std::vector<Segment> segments;
  for (long long i = 0; i < n; ++i) {
    auto tok = reader.next_tokens();
    if (tok.size() != 4) reader.fail("expected '<x1> <y1> <x2> <y2>'");
    BigInt c[4];
    for (int k = 0; k < 4; ++k) {
      const std::string& t = tok[k];
      std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (start == t.size() ||
          !std::all_of(t.begin() + start, t.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        reader.fail("bad coordinate '" + t + "'");
      }
      c[k] = BigInt(t[0] == '+' ? t.substr(1) : t);
    }
    segments.push_back({{c[0], c[1]}, {c[2], c[3]}});
  }
  if (!reader.done()) reader.fail("trailing content after segments");
  try {
    return Arrangement(std::move(segments));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("degenerate arrangement: ") + e.what());
  }
}

std::string format_arrangement(const Arrangement& arr) {
  std::ostringstream out;
  out << "segments " << arr.size() << '\n';
  for (const auto& s : arr.segments()) {
    out << s.p.x << ' ' << s.p.y << ' ' << s.q.x << ' ' << s.q.y << '\n';
  }
  return out.str();
}

CoverCertificate potential_bearing(const Graph& g, const DegeneracyOrder& order) {
  if (!is_degeneracy_order(g, order.order, order.degeneracy)) {
    throw InvalidArgument("not a degeneracy ordering of value " + std::to_string(order.degeneracy));
  }
  const int n = g.vertex_count();
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order.order[i]] = i;

  CoverCertificate cert;
  cert.ordering = order.order;
  cert.degeneracy = order.degeneracy;
  cert.bound = 2 * order.degeneracy;
  cert.edges = g.edges();

  auto forward = [&](Vertex v) {
    VertexSet out;
    for (Vertex w : g.neighbours(v)) {
      if (position[w] > position[v]) out.push_back(w);
    }
    return out;
  };
  for (auto [u, v] : cert.edges) {
    VertexSet c = forward(u);
    VertexSet fv = forward(v);
    c.insert(c.end(), fv.begin(), fv.end());
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    cert.max_cover_size = std::max(cert.max_cover_size, static_cast<int>(c.size()));
    cert.cover.push_back(std::move(c));
  }

  auto covers = [&](int e, int f) {
    const auto& c = cert.cover[e];
    return std::binary_search(c.begin(), c.end(), cert.edges[f].first) ||
           std::binary_search(c.begin(), c.end(), cert.edges[f].second);
  };
  auto touches = [&](Vertex a, Vertex b) { return a == b || g.has_edge(a, b); };
  auto top = [&](int e) {
    return std::max(position[cert.edges[e].first], position[cert.edges[e].second]);
  };

  bool ok = cert.max_cover_size <= cert.bound;
  const int m = static_cast<int>(cert.edges.size());
  for (int e = 0; e < m; ++e) {
    auto [a, b] = cert.edges[e];
    for (int f = e + 1; f < m; ++f) {
      auto [c, d] = cert.edges[f];
      if (a == c || a == d || b == c || b == d) continue;  // not independent
      if (!(touches(a, c) || touches(a, d) || touches(b, c) || touches(b, d))) continue;
      int low = top(e) < top(f) ? e : f;
      int high = low == e ? f : e;
      if (covers(low, high)) {
        cert.bearing.emplace_back(low, high);
      } else {
        ++cert.reversed_pairs;
        cert.bearing.emplace_back(high, low);
        ok = ok && covers(high, low);
      }
    }
  }
  cert.certified = ok;
  return cert;
}

}  // namespace srig
