#include "arquiver/interval.hpp"

#include <algorithm>
#include <cctype>

#include "arquiver/errors.hpp"

namespace arq {

Interval make_interval(ExtReal lo, bool lo_closed, ExtReal hi, bool hi_closed) {
  Interval I{lo, lo_closed, hi, hi_closed};
  if ((lo.is_neg_inf() && lo_closed) || (hi.is_pos_inf() && hi_closed) ||
      lo.is_pos_inf() || hi.is_neg_inf())
    throw DomainError("ClosedInfinity", "infinite endpoints must be open");
  if (lo > hi || (lo == hi && !(lo_closed && hi_closed && lo.is_finite())))
    throw DomainError("EmptyInterval", "interval " + format_interval(I) + " is empty");
  return I;
}

Interval make_simple(Rat a) { return Interval{ExtReal(a), true, ExtReal(a), true}; }

Interval parse_interval(const std::string& text) {
  std::string s;
  for (char c : text) if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 3) throw DomainError("SyntaxError", "interval too short: " + text);
  if (s.front() == '{') {
    if (s.back() != '}') throw DomainError("SyntaxError", "unbalanced braces: " + text);
    ExtReal v;
    try {
      v = ExtReal::parse(s.substr(1, s.size() - 2));
    } catch (const std::exception& e) {
      throw DomainError("SyntaxError", std::string("bad endpoint: ") + e.what());
    }
    if (!v.is_finite()) throw DomainError("ClosedInfinity", "simple at infinity");
    return make_simple(v.value);
  }
  bool lo_closed, hi_closed;
  if (s.front() == '[') lo_closed = true;
  else if (s.front() == '(') lo_closed = false;
  else throw DomainError("SyntaxError", "interval must start with [ ( or {: " + text);
  if (s.back() == ']') hi_closed = true;
  else if (s.back() == ')') hi_closed = false;
  else throw DomainError("SyntaxError", "interval must end with ] ) or }: " + text);
  std::string body = s.substr(1, s.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string::npos) throw DomainError("SyntaxError", "missing comma: " + text);
  ExtReal lo, hi;
  try {
    lo = ExtReal::parse(body.substr(0, comma));
    hi = ExtReal::parse(body.substr(comma + 1));
  } catch (const std::exception& e) {
    throw DomainError("SyntaxError", std::string("bad endpoint: ") + e.what());
  }
  return make_interval(lo, lo_closed, hi, hi_closed);
}

std::string format_interval(const Interval& I) {
  if (I.lo == I.hi && I.lo_closed && I.hi_closed) return "{" + I.lo.str() + "}";
  std::string s;
  s += I.lo_closed ? '[' : '(';
  s += I.lo.str();
  s += ',';
  s += I.hi.str();
  s += I.hi_closed ? ']' : ')';
  return s;
}

bool same_lower_datum(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.lo_closed == b.lo_closed;
}
bool same_upper_datum(const Interval& a, const Interval& b) {
  return a.hi == b.hi && a.hi_closed == b.hi_closed;
}

namespace {

// -1/0/+1 comparison of lower-bound data; larger = tighter from below.
int cmp_lower(const ExtReal& v1, bool c1, const ExtReal& v2, bool c2) {
  int c = cmp(v1, v2);
  if (c != 0) return c;
  if (c1 == c2) return 0;
  return c1 ? -1 : 1;  // open lower bound excludes more
}
int cmp_upper(const ExtReal& v1, bool c1, const ExtReal& v2, bool c2) {
  int c = cmp(v1, v2);
  if (c != 0) return c;
  if (c1 == c2) return 0;
  return c1 ? 1 : -1;
}

bool valid_data(const ExtReal& lo, bool lc, const ExtReal& hi, bool hc) {
  if (lo.is_pos_inf() || hi.is_neg_inf()) return false;
  if (lo.is_neg_inf() && lc) return false;
  if (hi.is_pos_inf() && hc) return false;
  if (lo > hi) return false;
  if (lo == hi && !(lc && hc && lo.is_finite())) return false;
  return true;
}

}  // namespace

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  const Interval& lo_src = cmp_lower(a.lo, a.lo_closed, b.lo, b.lo_closed) >= 0 ? a : b;
  const Interval& hi_src = cmp_upper(a.hi, a.hi_closed, b.hi, b.hi_closed) <= 0 ? a : b;
  ExtReal lo = lo_src.lo;
  bool lc = lo_src.lo_closed;
  if (a.lo == b.lo) lc = a.lo_closed && b.lo_closed;
  ExtReal hi = hi_src.hi;
  bool hc = hi_src.hi_closed;
  if (a.hi == b.hi) hc = a.hi_closed && b.hi_closed;
  if (!valid_data(lo, lc, hi, hc)) return std::nullopt;
  return Interval{lo, lc, hi, hc};
}

std::vector<Interval> difference_parts(const Interval& I, const Interval& K) {
  std::vector<Interval> parts;
  if (cmp_lower(I.lo, I.lo_closed, K.lo, K.lo_closed) < 0) {
    // below K: from I.lo up to K.lo with flipped closure
    if (valid_data(I.lo, I.lo_closed, K.lo, !K.lo_closed))
      parts.push_back(Interval{I.lo, I.lo_closed, K.lo, !K.lo_closed});
  }
  if (cmp_upper(I.hi, I.hi_closed, K.hi, K.hi_closed) > 0) {
    if (valid_data(K.hi, !K.hi_closed, I.hi, I.hi_closed))
      parts.push_back(Interval{K.hi, !K.hi_closed, I.hi, I.hi_closed});
  }
  return parts;
}

std::optional<Interval> splice(const Interval& lower_of, const Interval& upper_of) {
  if (!valid_data(lower_of.lo, lower_of.lo_closed, upper_of.hi, upper_of.hi_closed))
    return std::nullopt;
  return Interval{lower_of.lo, lower_of.lo_closed, upper_of.hi, upper_of.hi_closed};
}

std::optional<Interval> adjacent_union(const Interval& a, const Interval& b) {
  const Interval* left = &a;
  const Interval* right = &b;
  if (!(a.hi <= b.lo)) {
    left = &b;
    right = &a;
  }
  if (!(left->hi == right->lo)) return std::nullopt;
  if (left->hi_closed == right->lo_closed) return std::nullopt;  // overlap or gap
  return Interval{left->lo, left->lo_closed, right->hi, right->hi_closed};
}

Interval canonical_support(const Quiver& q, const ExtReal& a, SupportKind kind,
                           SupportVariant variant) {
  if (!a.is_finite()) throw DomainError("PointInfinite", "no projective or injective at +-inf");

  auto window_interval = [&](int n) {
    // closed window [s_n, s_{n+1}] cut to R
    ExtReal lo = q.indexed_value(n), hi = q.indexed_value(n + 1);
    return Interval{lo, lo.is_finite(), hi, hi.is_finite()};
  };

  Interval full{ExtReal(Rat(0)), true, ExtReal(Rat(0)), true};
  if (q.in_s(a)) {
    int n = q.index_of(a);
    bool sink = Quiver::is_sink_index(n);
    bool want_point = (kind == SupportKind::DownSet) ? sink : !sink;
    if (want_point) {
      if (variant != SupportVariant::Closed)
        throw DomainError("InvalidVariant", "only the closed form exists here");
      return make_simple(a.value);
    }
    Interval below = window_interval(n - 1), above = window_interval(n);
    full = Interval{below.lo, below.lo_closed, above.hi, above.hi_closed};
  } else {
    auto [n, n1] = q.enclosing(a);
    Interval w = window_interval(n);
    bool down = (kind == SupportKind::DownSet);
    bool asc = (q.window_direction(n) == Direction::Ascending);
    // DownSet in an ascending window reaches from the window's sink up to a;
    // the other three cases mirror.
    if (down == asc)
      full = Interval{w.lo, w.lo_closed, a, true};
    else
      full = Interval{a, true, w.hi, w.hi_closed};
  }

  switch (variant) {
    case SupportVariant::Closed:
      return full;
    case SupportVariant::OpenBelow: {
      if (!(full.lo < a))
        throw DomainError("InvalidVariant", "no strictly-below part at " + a.str());
      return Interval{full.lo, full.lo_closed, a, false};
    }
    case SupportVariant::OpenAbove: {
      if (!(a < full.hi))
        throw DomainError("InvalidVariant", "no strictly-above part at " + a.str());
      return Interval{a, false, full.hi, full.hi_closed};
    }
  }
  throw DomainError("InvalidVariant", "unknown variant");
}

Classification classify(const Quiver& q, const Interval& I) {
  Classification c;
  c.simple = I.is_simple();

  // bar form: consecutive indexed endpoints, closed exactly at the finite ones
  if (!c.simple && q.is_indexed(I.lo) && q.is_indexed(I.hi) &&
      I.lo_closed == I.lo.is_finite() && I.hi_closed == I.hi.is_finite()) {
    int nl = q.index_of(I.lo), nh = q.index_of(I.hi);
    if (nh == nl + 1) {
      c.bar_form = true;
      c.bar = I.lo.is_finite() && I.hi.is_finite();
    }
  }

  std::vector<ExtReal> candidates;
  if (I.lo.is_finite()) candidates.push_back(I.lo);
  if (I.hi.is_finite() && I.hi != I.lo) candidates.push_back(I.hi);
  for (const Rat& p : q.points()) {
    ExtReal v(p);
    if (I.lo < v && v < I.hi) candidates.push_back(v);
  }
  const SupportVariant variants[] = {SupportVariant::Closed, SupportVariant::OpenBelow,
                                     SupportVariant::OpenAbove};
  for (const ExtReal& a : candidates) {
    for (SupportVariant v : variants) {
      try {
        if (!c.projective && canonical_support(q, a, SupportKind::DownSet, v) == I) {
          c.projective = true;
          c.projective_vertex = a;
          c.projective_variant = v;
        }
      } catch (const DomainError&) {
        // variant absent at this vertex
      }
      try {
        if (!c.injective && canonical_support(q, a, SupportKind::UpSet, v) == I) {
          c.injective = true;
          c.injective_vertex = a;
          c.injective_variant = v;
        }
      } catch (const DomainError&) {
      }
    }
  }
  return c;
}

}  // namespace arq
