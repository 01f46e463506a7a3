#include "arquiver/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "arquiver/errors.hpp"

namespace arq {

namespace {
constexpr double kTol = 1e-9;
}

double lambda_tent(double w) {
  w = std::fmod(w, 2.0 * kPi);
  if (w < 0) w += 2.0 * kPi;
  return (w <= kPi) ? w - kHalfPi : 3.0 * kHalfPi - w;
}

double kappa_of(const Quiver& q, const ExtReal& a, LambdaSign sign) {
  StripPoint p;
  if (q.is_indexed(a)) {
    if (sign == LambdaSign::Undecorated)
      throw DomainError("InvalidSign", "sinks and sources need a signed kappa");
    p = q.anchor(q.index_of(a));
  } else {
    if (sign != LambdaSign::Undecorated) {
      // allow explicit +- as long as it matches the forced side
      auto [n, n1] = q.enclosing(a);
      (void)n1;
      bool sink_below = Quiver::is_sink_index(n);
      if (sink_below != (sign == LambdaSign::Minus))
        throw DomainError("InvalidSign", "this point only carries the other side");
    }
    p = q.projective_point(a);
    auto [n, n1] = q.enclosing(a);
    (void)n1;
    sign = Quiver::is_sink_index(n) ? LambdaSign::Minus : LambdaSign::Plus;
  }
  if (sign == LambdaSign::Minus) return p.x + p.y + kHalfPi;
  return p.x - p.y - kHalfPi;
}

double p_hat(const Quiver& q, const ExtReal& a) {
  if (q.is_indexed(a)) {
    int n = q.index_of(a);
    StripPoint p = q.anchor(n);
    if (a.is_pos_inf()) return p.x;
    bool sink = Quiver::is_sink_index(n);
    if (a.is_neg_inf()) return sink ? p.x - kPi : p.x + kPi;
    return sink ? p.x - (kHalfPi - p.y) : p.x + (kHalfPi - p.y);
  }
  StripPoint p = q.projective_point(a);
  auto [n, n1] = q.enclosing(a);
  (void)n1;
  bool minus_side = Quiver::is_sink_index(n);
  return minus_side ? p.x - (kHalfPi - p.y) : p.x + (kHalfPi - p.y);
}

double lambda_eval(const Quiver& q, const LambdaKey& key, double z) {
  return lambda_tent(z - kappa_of(q, key.base, key.sign));
}

namespace {

// Shared lambda function of the companion family a lower endpoint belongs to,
// as a kappa offset. For indexed endpoints this is the function shared by the
// adjacent sink/source pair the datum spans; off the indexed set it is the
// undecorated function.
double lower_lambda_kappa(const Quiver& q, const Interval& I) {
  const ExtReal& v = I.lo;
  if (v.is_finite() && !q.in_s(v)) {
    auto [n, n1] = q.enclosing(v);
    (void)n1;
    return kappa_of(q, v, Quiver::is_sink_index(n) ? LambdaSign::Minus : LambdaSign::Plus);
  }
  int n = v.is_neg_inf() ? q.lo_index() : q.index_of(v);
  int pair_lo = (v.is_neg_inf() || I.lo_closed) ? n : n - 1;
  LambdaSign s = Quiver::is_sink_index(pair_lo) ? LambdaSign::Plus : LambdaSign::Minus;
  return kappa_of(q, q.indexed_value(pair_lo), s);
}

double upper_lambda_kappa(const Quiver& q, const Interval& I) {
  const ExtReal& v = I.hi;
  if (v.is_finite() && !q.in_s(v)) {
    auto [n, n1] = q.enclosing(v);
    (void)n1;
    return kappa_of(q, v, Quiver::is_sink_index(n) ? LambdaSign::Minus : LambdaSign::Plus);
  }
  int n = v.is_pos_inf() ? q.hi_index() : q.index_of(v);
  int pair_lo = (v.is_pos_inf() || I.hi_closed) ? n - 1 : n;
  LambdaSign s = Quiver::is_sink_index(pair_lo) ? LambdaSign::Plus : LambdaSign::Minus;
  return kappa_of(q, q.indexed_value(pair_lo), s);
}

double anchor_x(const Quiver& q, const ExtReal& v) {
  if (q.is_indexed(v)) return q.anchor(q.index_of(v)).x;
  return q.projective_point(v).x;
}

}  // namespace

StripPoint gamma_interior(const Quiver& q, const Interval& I) {
  double ka = lower_lambda_kappa(q, I);
  double kb = upper_lambda_kappa(q, I);
  double base = 0.5 * (ka + kb);
  double xa = anchor_x(q, I.lo), xb = anchor_x(q, I.hi);
  double lo = std::max(xa, xb), hi = std::min(xa, xb) + kPi;
  // unique intersection of the two tents in (lo, hi]
  double k = std::ceil((lo + kTol - base) / kPi);
  double x = base + k * kPi;
  if (x > hi + kTol)
    throw DomainError("EmptyInterval",
                      "no admissible intersection point for " + format_interval(I));
  return StripPoint{x, lambda_tent(x - ka)};
}

StripPoint gamma(const Quiver& q, const Interval& I) {
  Classification c = classify(q, I);
  if (c.projective) return q.projective_point(c.projective_vertex);
  if (c.simple) {
    const ExtReal& a = I.lo;
    if (q.in_s(a)) {
      // simple injective at a source (simple projectives are caught above)
      StripPoint p = q.anchor(q.index_of(a));
      return StripPoint{p.x + kPi, -p.y};
    }
    auto [n, n1] = q.enclosing(a);
    (void)n1;
    if (Quiver::is_sink_index(n))
      return StripPoint{kappa_of(q, a, LambdaSign::Minus), -kHalfPi};
    return StripPoint{kappa_of(q, a, LambdaSign::Plus) + kPi, kHalfPi};
  }
  if (c.bar_form) {
    int n = I.lo.is_neg_inf() ? q.lo_index() : q.index_of(I.lo);
    if (Quiver::is_sink_index(n))
      return StripPoint{kappa_of(q, q.indexed_value(n), LambdaSign::Plus) + kPi, kHalfPi};
    return StripPoint{kappa_of(q, q.indexed_value(n), LambdaSign::Minus), -kHalfPi};
  }
  if (c.injective) {
    StripPoint p = q.projective_point(c.injective_vertex);
    return StripPoint{p.x + kPi, -p.y};
  }
  return gamma_interior(q, I);
}

Position position(const Quiver& q, const Interval& I) {
  Classification c = classify(q, I);
  if (c.projective) {
    switch (c.projective_variant) {
      case SupportVariant::Closed: return Position::P4;
      case SupportVariant::OpenAbove: return Position::P2;
      case SupportVariant::OpenBelow: return Position::P3;
    }
  }
  if (c.injective) {
    switch (c.injective_variant) {
      case SupportVariant::Closed: return Position::P1;
      case SupportVariant::OpenAbove: return Position::P3;
      case SupportVariant::OpenBelow: return Position::P2;
    }
  }
  if (c.simple || c.bar_form) {
    double y = gamma(q, I).y;
    return y > 0 ? Position::P3 : Position::P2;
  }
  ARQuery ar = ar_sequence(q, I);
  return static_cast<Position>(ar.sequence->role_of(I));
}

bool same_gamma(const Quiver& q, const Interval& I, const Interval& J) {
  if (I == J) return true;
  Classification ci = classify(q, I), cj = classify(q, J);
  if (ci.projective && cj.projective && ci.projective_vertex == cj.projective_vertex)
    return true;
  if (ci.injective && cj.injective && ci.injective_vertex == cj.injective_vertex) return true;
  if (!ci.generic() || !cj.generic()) return false;
  ARQuery a = ar_sequence(q, I);
  return a.sequence->contains(J);
}

namespace {

struct Diamond {
  int dx, dy;
};
Diamond pos_coord(Position p) {
  switch (p) {
    case Position::P1: return {0, 0};
    case Position::P2: return {1, 1};
    case Position::P3: return {1, -1};
    default: return {2, 0};
  }
}

enum class RClass { LT1, EQ1, EQm1, GT1 };

RClass classify_slope(double r, bool vertical) {
  if (vertical) return RClass::GT1;
  if (std::abs(r - 1.0) <= kTol) return RClass::EQ1;
  if (std::abs(r + 1.0) <= kTol) return RClass::EQm1;
  return std::abs(r) < 1.0 ? RClass::LT1 : RClass::GT1;
}

double merged_diamond_slope(Position pv, Position pw, RClass rc, bool degenerate) {
  Diamond o{0, 0};
  if (!degenerate) {
    switch (rc) {
      case RClass::LT1: o = {2, 0}; break;
      case RClass::EQ1: o = {1, 1}; break;
      case RClass::EQm1: o = {1, -1}; break;
      case RClass::GT1: o = {0, 2}; break;
    }
  }
  Diamond a = pos_coord(pv), b = pos_coord(pw);
  int dx = b.dx + o.dx - a.dx;
  int dy = b.dy + o.dy - a.dy;
  if (dx == 0) return HUGE_VAL;
  return static_cast<double>(dy) / static_cast<double>(dx);
}

// Z-coordinate tables, keyed on the slope class and the two positions.
int z_entry(RClass rc, Position pv, Position pw) {
  if (pv == pw) return 0;
  static const int lt1[5][5] = {{0}, {0, 0, 1, 1, 2}, {0, -1, 0, 0, 1}, {0, -1, 0, 0, 1}, {0, -2, -1, -1, 0}};
  static const int eq1[5][5] = {{0}, {0, 0, 1, 1, 2}, {0, -1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, -1, 0, -1, 0}};
  static const int eqm1[5][5] = {{0}, {0, 0, 1, 1, 2}, {0, 0, 0, 1, 1}, {0, -1, 0, 0, 1}, {0, -1, -1, 0, 0}};
  static const int gt1[5][5] = {{0}, {0, 0, 1, -1, 0}, {0, -1, 0, -2, -1}, {0, 1, 2, 0, 1}, {0, 0, 1, -1, 0}};
  int i = static_cast<int>(pv), j = static_cast<int>(pw);
  switch (rc) {
    case RClass::LT1: return lt1[i][j];
    case RClass::EQ1: return eq1[i][j];
    case RClass::EQm1: return eqm1[i][j];
    default: return gt1[i][j];
  }
}

int diamond_edge_distance(Position a, Position b) {
  if (a == b) return 0;
  bool opposite = (a == Position::P1 && b == Position::P4) ||
                  (a == Position::P4 && b == Position::P1) ||
                  (a == Position::P2 && b == Position::P3) ||
                  (a == Position::P3 && b == Position::P2);
  return opposite ? 2 : 1;
}

}  // namespace

SlopeClass slope_class(const Quiver& q, const Interval& I, const Interval& J) {
  if (I == J) throw DomainError("SamePoint", "slope of a degenerate segment is undefined");
  SlopeClass sc;
  Position pi = position(q, I), pj = position(q, J);
  if (same_lower_datum(I, J)) {
    sc.kind = SlopeClass::Kind::PlusOne;
    sc.r1 = 1.0;
    sc.r2 = 1.0;
    return sc;
  }
  if (same_upper_datum(I, J)) {
    sc.kind = SlopeClass::Kind::MinusOne;
    sc.r1 = -1.0;
    sc.r2 = -1.0;
    return sc;
  }
  StripPoint a = gamma(q, I), b = gamma(q, J);
  bool degenerate = same_gamma(q, I, J);
  bool vertical = false;
  double r1;
  if (degenerate) {
    // the geometric slope collapses; reuse the diamond slope
    r1 = merged_diamond_slope(pi, pj, RClass::LT1, true);
    vertical = std::isinf(r1);
  } else if (std::abs(b.x - a.x) <= kTol) {
    vertical = true;
    r1 = HUGE_VAL;
  } else {
    r1 = (b.y - a.y) / (b.x - a.x);
  }
  RClass rc = classify_slope(r1, vertical);
  sc.r1 = r1;
  sc.r2 = degenerate ? r1 : merged_diamond_slope(pi, pj, rc, false);
  sc.kind = (vertical || std::abs(r1) >= 1.0 - kTol) ? SlopeClass::Kind::Steep
                                                     : SlopeClass::Kind::Shallow;
  return sc;
}

GenDist metric_d(const Quiver& q, const Interval& I, const Interval& J) {
  if (I == J) return {0.0, 0};
  Position pi = position(q, I), pj = position(q, J);
  if (same_gamma(q, I, J)) return {0.0, diamond_edge_distance(pi, pj)};
  StripPoint a = gamma(q, I), b = gamma(q, J);
  double r = std::hypot(b.x - a.x, b.y - a.y);
  // canonical order keeps the table symmetric in the two arguments
  bool swap_args = (b.x < a.x - kTol) || (std::abs(b.x - a.x) <= kTol && b.y < a.y);
  if (swap_args) {
    std::swap(a, b);
    std::swap(pi, pj);
  }
  bool vertical = std::abs(b.x - a.x) <= kTol;
  double slope = vertical ? HUGE_VAL : (b.y - a.y) / (b.x - a.x);
  return {r, z_entry(classify_slope(slope, vertical), pi, pj)};
}

bool region_is_boundary(RegionTag t) {
  switch (t) {
    case RegionTag::BoundaryLowerLeft:
    case RegionTag::BoundaryUpperLeft:
    case RegionTag::BoundaryUpperRight:
    case RegionTag::BoundaryLowerRight:
    case RegionTag::BoundaryCornerStart:
    case RegionTag::BoundaryApexTop:
    case RegionTag::BoundaryApexBottom:
    case RegionTag::BoundaryCornerEnd:
      return true;
    default:
      return false;
  }
}

bool region_borders(RegionTag t, int region) {
  auto in = [&](std::initializer_list<int> rs) {
    for (int r : rs)
      if (r == region) return true;
    return false;
  };
  switch (t) {
    case RegionTag::BoundaryLowerLeft: return in({3});
    case RegionTag::BoundaryUpperLeft: return in({2});
    case RegionTag::BoundaryUpperRight: return in({4});
    case RegionTag::BoundaryLowerRight: return in({5});
    case RegionTag::BoundaryCornerStart: return in({1, 2, 3});
    case RegionTag::BoundaryApexTop: return in({2, 4});
    case RegionTag::BoundaryApexBottom: return in({3, 5});
    case RegionTag::BoundaryCornerEnd: return in({4, 5, 6});
    default: return false;
  }
}

RegionTag hom_region(const Quiver& q, const Interval& V, const Interval& W) {
  Classification cv = classify(q, V);
  StripPoint pv = gamma(q, V);
  if (std::abs(pv.y) >= kHalfPi - kTol)
    throw DomainError("ApexObject", "hom support cone needs |y| < pi/2");

  double k_up, k_dn;
  if (cv.projective || cv.injective) {
    const ExtReal& vertex = cv.projective ? cv.projective_vertex : cv.injective_vertex;
    double kp, km;
    if (q.is_indexed(vertex)) {
      kp = kappa_of(q, vertex, LambdaSign::Plus);
      km = kappa_of(q, vertex, LambdaSign::Minus);
    } else {
      StripPoint ap = q.projective_point(vertex);
      km = ap.x + ap.y + kHalfPi;
      kp = ap.x - ap.y - kHalfPi;
    }
    k_up = kp;
    k_dn = km;
  } else {
    k_up = lower_lambda_kappa(q, V);
    k_dn = upper_lambda_kappa(q, V);
  }
  // sort by slope at the cone tip: rising branch iff (x - kappa) mod 2pi < pi
  auto rising = [&](double kappa) {
    double w = std::fmod(pv.x - kappa, 2.0 * kPi);
    if (w < 0) w += 2.0 * kPi;
    return w < kPi;
  };
  if (!rising(k_up)) std::swap(k_up, k_dn);

  StripPoint pw = gamma(q, W);
  double dx = pw.x - pv.x;
  double u = lambda_tent(pw.x - k_up);
  double d = lambda_tent(pw.x - k_dn);

  if (dx >= -kTol && dx <= kPi + kTol) {
    if (std::abs(dx) <= kTol && std::abs(pw.y - pv.y) <= kTol)
      return RegionTag::BoundaryCornerStart;
    if (std::abs(dx - kPi) <= kTol && std::abs(pw.y + pv.y) <= kTol)
      return RegionTag::BoundaryCornerEnd;
    double apex_top = kHalfPi - pv.y;     // dx of the upper corner
    double apex_bot = kHalfPi + pv.y;     // dx of the lower corner
    if (std::abs(pw.y - kHalfPi) <= kTol && std::abs(dx - apex_top) <= kTol)
      return RegionTag::BoundaryApexTop;
    if (std::abs(pw.y + kHalfPi) <= kTol && std::abs(dx - apex_bot) <= kTol)
      return RegionTag::BoundaryApexBottom;
    if (std::abs(pw.y - u) <= kTol)
      return dx < apex_top ? RegionTag::BoundaryUpperLeft : RegionTag::BoundaryUpperRight;
    if (std::abs(pw.y - d) <= kTol)
      return dx < apex_bot ? RegionTag::BoundaryLowerLeft : RegionTag::BoundaryLowerRight;
    if (pw.y < u && pw.y > d) return RegionTag::InteriorH;
  }

  if (dx <= -kPi) return RegionTag::Region1;
  if (dx >= 2.0 * kPi) return RegionTag::Region6;
  if (dx < 0) {
    double lo = std::min(u, d), hi = std::max(u, d);
    if (pw.y > hi) return RegionTag::Region2;
    if (pw.y < lo) return RegionTag::Region3;
    return RegionTag::Region1;
  }
  if (dx <= kPi) {
    double apex_top = kHalfPi - pv.y;
    double apex_bot = kHalfPi + pv.y;
    if (pw.y > u) return dx < apex_top ? RegionTag::Region2 : RegionTag::Region4;
    return dx < apex_bot ? RegionTag::Region3 : RegionTag::Region5;
  }
  double lo = std::min(u, d), hi = std::max(u, d);
  if (pw.y > hi) return RegionTag::Region4;
  if (pw.y < lo) return RegionTag::Region5;
  return RegionTag::Region6;
}

namespace {

// The simple/bar at a junction value, matched against the target corner by
// its strip image (the corner is the unique boundary point there).
std::optional<Interval> boundary_object_at(const Quiver& q, const ExtReal& junction,
                                           const StripPoint& corner) {
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
    if (std::abs(g.x - corner.x) <= 1e-6 && std::abs(g.y - corner.y) <= 1e-6) return B;
  }
  return std::nullopt;
}

}  // namespace

RectangleResult extension_rectangle(const Quiver& q, const Interval& V, const Interval& W) {
  RectangleResult out;
  ExtResult ext = ext_with_middle(q, W, V);
  if (ext.dim == 0) return out;
  if (ext.middle->kind == MiddleTerm::Kind::Pair) {
    out.kind = RectangleResult::Kind::Complete;
    out.corners = {V, ext.middle->first, ext.middle->second, W};
    return out;
  }
  out.kind = RectangleResult::Kind::AlmostComplete;
  const Interval& E = ext.middle->first;
  out.corners = {V, E, W};
  StripPoint gv = gamma(q, V), ge = gamma(q, E), gw = gamma(q, W);
  StripPoint corner{gv.x + gw.x - ge.x, gv.y + gw.y - ge.y};
  ExtReal junction = (V.hi == W.lo) ? V.hi : V.lo;
  auto phantom = boundary_object_at(q, junction, corner);
  if (!phantom)
    throw DomainError("EmptyInterval", "no boundary object at the phantom corner");
  out.phantom = *phantom;
  return out;
}

}  // namespace arq
