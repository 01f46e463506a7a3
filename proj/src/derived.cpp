#include "arquiver/derived.hpp"

#include <cmath>

#include "arquiver/errors.hpp"

namespace arq {

DObject parse_dobject(const std::string& text) {
  auto at = text.rfind('@');
  if (at == std::string::npos) return DObject{parse_interval(text), 0};
  DObject X;
  X.ival = parse_interval(text.substr(0, at));
  try {
    X.shift = std::stoi(text.substr(at + 1));
  } catch (const std::exception&) {
    throw DomainError("SyntaxError", "bad shift in " + text);
  }
  return X;
}

std::string format_dobject(const DObject& X) {
  return format_interval(X.ival) + "@" + std::to_string(X.shift);
}

StripPoint shift_point(StripPoint p, int n) {
  double y = (n % 2 == 0) ? p.y : -p.y;
  return StripPoint{p.x + n * kPi, y};
}

StripPoint gamma_b(const Quiver& q, const DObject& X) {
  return shift_point(gamma(q, X.ival), X.shift);
}

Position derived_position(const Quiver& q, const DObject& X) {
  Position p = position(q, X.ival);
  if (((X.shift % 2) + 2) % 2 == 0) return p;
  if (p == Position::P2) return Position::P3;
  if (p == Position::P3) return Position::P2;
  return p;
}

int derived_hom_dim(const Quiver& q, const DObject& X, const DObject& Y) {
  int gap = Y.shift - X.shift;
  if (gap == 0) return hom_dim(q, X.ival, Y.ival).dim;
  if (gap == 1) return ext_with_middle(q, X.ival, Y.ival).dim;  // Ext^1(X, Y)
  return 0;
}

namespace {

// Find the shifted boundary object sitting at a rectangle corner.
DObject locate_phantom(const Quiver& q, const ExtReal& junction, const StripPoint& corner) {
  std::vector<Interval> candidates;
  if (!q.is_indexed(junction)) {
    candidates.push_back(make_simple(junction.value));
  } else {
    int n = q.index_of(junction);
    auto push_bar = [&](int a, int b) {
      if (a < q.lo_index() || b > q.hi_index()) return;
      ExtReal lo = q.indexed_value(a), hi = q.indexed_value(b);
      candidates.push_back(Interval{lo, lo.is_finite(), hi, hi.is_finite()});
    };
    push_bar(n - 1, n);
    push_bar(n, n + 1);
  }
  for (const Interval& B : candidates) {
    StripPoint g = gamma(q, B);
    double k = (corner.x - g.x) / kPi;
    long rounded = std::lround(k);
    if (std::abs(k - (double)rounded) > 1e-6) continue;
    double y = (rounded % 2 == 0) ? g.y : -g.y;
    if (std::abs(y - corner.y) <= 1e-6) return DObject{B, (int)rounded};
  }
  throw DomainError("EmptyInterval", "no boundary object at the phantom corner");
}

}  // namespace

TriangleResult triangle(const Quiver& q, const DObject& V, const DObject& W) {
  TriangleResult out;
  if (V == W) return out;
  int gap = W.shift - V.shift;
  int m = V.shift;

  if (gap == 0) {
    RectangleResult rect = extension_rectangle(q, V.ival, W.ival);
    if (rect.kind == RectangleResult::Kind::None) return out;
    if (rect.kind == RectangleResult::Kind::Complete) {
      out.kind = TriangleResult::Kind::Complete;
      for (const Interval& c : rect.corners) out.corners.push_back(DObject{c, m});
      return out;
    }
    out.kind = TriangleResult::Kind::AlmostComplete;
    for (const Interval& c : rect.corners) out.corners.push_back(DObject{c, m});
    out.phantom = DObject{*rect.phantom, m};
    return out;
  }

  if (gap != 1) return out;
  // W[-1] -> V -> U -> rotates to V -> U -> W ->; U is cokernel at shift m
  // plus kernel at shift m+1 of the underlying map.
  HomResult h = hom_dim(q, W.ival, V.ival);
  if (h.dim != 1) return out;
  KernelCokernel kc = kernel_cokernel(q, W.ival, V.ival);
  std::vector<DObject> middles;
  for (const Interval& c : kc.cokernel) middles.push_back(DObject{c, m});
  for (const Interval& k : kc.kernel) middles.push_back(DObject{k, m + 1});
  if (middles.empty()) return out;  // an isomorphism: only the trivial triangle

  if (middles.size() == 2) {
    out.kind = TriangleResult::Kind::Complete;
    out.corners = {V, middles[0], middles[1], W};
    return out;
  }
  out.kind = TriangleResult::Kind::AlmostComplete;
  out.corners = {V, middles[0], W};
  StripPoint gv = gamma_b(q, V), gu = gamma_b(q, middles[0]), gw = gamma_b(q, W);
  StripPoint corner{gv.x + gw.x - gu.x, gv.y + gw.y - gu.y};
  // the shared endpoint of the sub and the ambient interval marks the junction
  ExtReal junction;
  if (same_lower_datum(W.ival, V.ival))
    junction = W.ival.lo;
  else if (same_upper_datum(W.ival, V.ival))
    junction = W.ival.hi;
  else
    junction = kc.kernel.empty() ? V.ival.lo : W.ival.lo;  // fallback, not expected
  out.phantom = locate_phantom(q, junction, corner);
  return out;
}

}  // namespace arq
