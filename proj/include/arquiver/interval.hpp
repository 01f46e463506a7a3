#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arquiver/quiver.hpp"

namespace arq {

// Support of an interval indecomposable: |lo, hi| with per-end inclusion.
// Invariants: nonempty; infinite ends are open; lo == hi forces both ends
// closed and finite (the simple at that point).
struct Interval {
  ExtReal lo;
  bool lo_closed = true;
  ExtReal hi;
  bool hi_closed = true;

  bool is_simple() const { return lo == hi; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
           a.hi_closed == b.hi_closed;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

  bool contains(const ExtReal& v) const {
    if (v < lo || v > hi) return false;
    if (v == lo && !lo_closed) return false;
    if (v == hi && !hi_closed) return false;
    return true;
  }
};

Interval make_interval(ExtReal lo, bool lo_closed, ExtReal hi, bool hi_closed);
Interval make_simple(Rat a);

Interval parse_interval(const std::string& text);
std::string format_interval(const Interval& I);

// Endpoint-datum comparisons ("the lower bound including openness").
bool same_lower_datum(const Interval& a, const Interval& b);
bool same_upper_datum(const Interval& a, const Interval& b);

std::optional<Interval> intersect(const Interval& a, const Interval& b);
// I minus K for K a subinterval of I; 0, 1 or 2 components, lower part first.
std::vector<Interval> difference_parts(const Interval& I, const Interval& K);
// Splice a lower datum with an upper datum; nullopt when empty or invalid.
std::optional<Interval> splice(const Interval& lower_of, const Interval& upper_of);
// Union of two disjoint touching intervals; nullopt when not an interval.
std::optional<Interval> adjacent_union(const Interval& a, const Interval& b);

enum class SupportKind { DownSet, UpSet };
enum class SupportVariant { Closed, OpenBelow, OpenAbove };

// Support of the projective (DownSet) or injective (UpSet) at a finite
// vertex, in one of its up-to-three forms.
Interval canonical_support(const Quiver& q, const ExtReal& a, SupportKind kind,
                           SupportVariant variant);

struct Classification {
  bool projective = false;
  ExtReal projective_vertex;
  SupportVariant projective_variant = SupportVariant::Closed;
  bool injective = false;
  ExtReal injective_vertex;
  SupportVariant injective_variant = SupportVariant::Closed;
  bool simple = false;
  bool bar = false;       // [s_n, s_{n+1}], both ends finite indexed and closed
  bool bar_form = false;  // consecutive indexed ends, closed where finite (allows +-inf)
  bool generic() const { return !projective && !injective && !simple && !bar_form; }
};

Classification classify(const Quiver& q, const Interval& I);

}  // namespace arq
