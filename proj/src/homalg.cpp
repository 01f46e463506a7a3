#include "arquiver/homalg.hpp"

#include "arquiver/errors.hpp"

namespace arq {

namespace {

enum class CrossKind { NonS, Sink, Source };

CrossKind cross_kind(const Quiver& q, const ExtReal& v) {
  if (!q.in_s(v)) return CrossKind::NonS;
  return Quiver::is_sink_index(q.index_of(v)) ? CrossKind::Sink : CrossKind::Source;
}

// Does "outer" stick out above/below K (value or closure)?
bool extends_above(const Interval& outer, const Interval& K) {
  if (outer.hi != K.hi) return outer.hi > K.hi;
  return outer.hi_closed && !K.hi_closed;
}
bool extends_below(const Interval& outer, const Interval& K) {
  if (outer.lo != K.lo) return outer.lo < K.lo;
  return outer.lo_closed && !K.lo_closed;
}

// K up-closed in I: no element of I strictly above K in the quiver order is
// reachable from inside K. Failures can only happen where I crosses out of K.
bool up_closed_in(const Quiver& q, const Interval& K, const Interval& I) {
  if (extends_above(I, K)) {
    const ExtReal& b = K.hi;  // finite: I sticks out beyond it
    switch (cross_kind(q, b)) {
      case CrossKind::NonS:
        if (q.local_direction(b) == Direction::Ascending) return false;
        break;
      case CrossKind::Sink:
        if (K.hi_closed) return false;
        break;
      case CrossKind::Source:
        if (!K.hi_closed) return false;
        break;
    }
  }
  if (extends_below(I, K)) {
    const ExtReal& a = K.lo;
    switch (cross_kind(q, a)) {
      case CrossKind::NonS:
        if (q.local_direction(a) == Direction::Descending) return false;
        break;
      case CrossKind::Sink:
        if (K.lo_closed) return false;
        break;
      case CrossKind::Source:
        if (!K.lo_closed) return false;
        break;
    }
  }
  return true;
}

bool down_closed_in(const Quiver& q, const Interval& K, const Interval& J) {
  if (extends_above(J, K)) {
    const ExtReal& b = K.hi;
    switch (cross_kind(q, b)) {
      case CrossKind::NonS:
        if (q.local_direction(b) == Direction::Descending) return false;
        break;
      case CrossKind::Sink:
        if (!K.hi_closed) return false;
        break;
      case CrossKind::Source:
        if (K.hi_closed) return false;
        break;
    }
  }
  if (extends_below(J, K)) {
    const ExtReal& a = K.lo;
    switch (cross_kind(q, a)) {
      case CrossKind::NonS:
        if (q.local_direction(a) == Direction::Ascending) return false;
        break;
      case CrossKind::Sink:
        if (!K.lo_closed) return false;
        break;
      case CrossKind::Source:
        if (K.lo_closed) return false;
        break;
    }
  }
  return true;
}

}  // namespace

HomResult hom_dim(const Quiver& q, const Interval& I, const Interval& J) {
  auto K = intersect(I, J);
  if (!K) return {};
  if (!up_closed_in(q, *K, I)) return {};
  if (!down_closed_in(q, *K, J)) return {};
  return HomResult{1, K};
}

KernelCokernel kernel_cokernel(const Quiver& q, const Interval& I, const Interval& J) {
  HomResult h = hom_dim(q, I, J);
  if (h.dim != 1) throw DomainError("ZeroHom", "no nonzero map between these intervals");
  KernelCokernel kc;
  kc.kernel = difference_parts(I, *h.witness);
  kc.cokernel = difference_parts(J, *h.witness);
  return kc;
}

ExtResult ext_with_middle(const Quiver& q, const Interval& W, const Interval& V) {
  if (V == W) return {};
  auto K = intersect(V, W);
  if (K) {
    if (hom_dim(q, V, W).dim != 1) return {};
    // nondegenerate rectangle: all four corners distinct
    if (same_lower_datum(V, W) || same_upper_datum(V, W)) return {};
    auto A = splice(V, W);
    auto B = splice(W, V);
    if (!A || !B) return {};
    MiddleTerm mid;
    mid.kind = MiddleTerm::Kind::Pair;
    mid.first = *A;
    mid.second = *B;
    return ExtResult{1, mid};
  }
  auto U = adjacent_union(V, W);
  if (!U) return {};
  if (hom_dim(q, V, *U).dim != 1) return {};  // V must be the subobject side
  MiddleTerm mid;
  mid.kind = MiddleTerm::Kind::Indec;
  mid.first = *U;
  return ExtResult{1, mid};
}

namespace {

struct EndDatum {
  ExtReal value;
  bool closed;
};

// The other lower datum in the same irreducible family: flipped closure off
// the sinks and sources, otherwise the open/closed end one indexed step away.
EndDatum lower_companion(const Quiver& q, const EndDatum& d) {
  if (d.value.is_neg_inf()) return EndDatum{q.indexed_value(q.lo_index() + 1), false};
  if (!q.in_s(d.value)) return EndDatum{d.value, !d.closed};
  int n = q.index_of(d.value);
  if (d.closed) return EndDatum{q.indexed_value(n + 1), false};
  ExtReal below = q.indexed_value(n - 1);
  return EndDatum{below, below.is_finite()};
}

EndDatum upper_companion(const Quiver& q, const EndDatum& d) {
  if (d.value.is_pos_inf()) return EndDatum{q.indexed_value(q.hi_index() - 1), false};
  if (!q.in_s(d.value)) return EndDatum{d.value, !d.closed};
  int n = q.index_of(d.value);
  if (d.closed) return EndDatum{q.indexed_value(n - 1), false};
  ExtReal above = q.indexed_value(n + 1);
  return EndDatum{above, above.is_finite()};
}

// Does a lower datum belong to the first/second member of its sequence?
bool lower_is_v1_side(const Quiver& q, const EndDatum& d) {
  if (d.value.is_finite() && !q.in_s(d.value)) {
    bool asc = q.local_direction(d.value) == Direction::Ascending;
    return d.closed == asc;
  }
  int n = q.index_of(d.value);
  return !Quiver::is_sink_index(n);  // source-anchored data sit on the V1 side
}

bool upper_is_v1_side(const Quiver& q, const EndDatum& d) {
  if (d.value.is_finite() && !q.in_s(d.value)) {
    bool asc = q.local_direction(d.value) == Direction::Ascending;
    return d.closed != asc;
  }
  int n = q.index_of(d.value);
  return !Quiver::is_sink_index(n);
}

Interval assemble(const EndDatum& lo, const EndDatum& hi) {
  return make_interval(lo.value, lo.closed, hi.value, hi.closed);
}

// Parity of the lower element of the indexed companion pair spanned by a
// lower datum; used to pick the Table-1 flavor.
bool lower_pair_starts_at_sink(const Quiver& q, const EndDatum& d) {
  int n;
  if (d.value.is_neg_inf())
    n = q.lo_index();
  else {
    n = q.index_of(d.value);
    if (!d.closed) n -= 1;
  }
  return Quiver::is_sink_index(n);
}

bool upper_pair_starts_at_sink(const Quiver& q, const EndDatum& d) {
  int n;
  if (d.value.is_pos_inf())
    n = q.hi_index() - 1;
  else {
    n = q.index_of(d.value);
    if (d.closed) n -= 1;
  }
  return Quiver::is_sink_index(n);
}

}  // namespace

ARQuery ar_sequence(const Quiver& q, const Interval& I) {
  Classification c = classify(q, I);
  ARQuery out;
  if (c.projective) { out.reason = NoSequenceReason::Projective; return out; }
  if (c.injective) { out.reason = NoSequenceReason::Injective; return out; }
  if (c.simple) { out.reason = NoSequenceReason::Simple; return out; }
  if (c.bar_form) { out.reason = NoSequenceReason::Bar; return out; }

  EndDatum lo{I.lo, I.lo_closed}, hi{I.hi, I.hi_closed};
  EndDatum lo_c = lower_companion(q, lo), hi_c = upper_companion(q, hi);
  EndDatum lo1 = lower_is_v1_side(q, lo) ? lo : lo_c;
  EndDatum lo2 = lower_is_v1_side(q, lo) ? lo_c : lo;
  EndDatum hi1 = upper_is_v1_side(q, hi) ? hi : hi_c;
  EndDatum hi2 = upper_is_v1_side(q, hi) ? hi_c : hi;

  ARSequence seq;
  seq.v1 = assemble(lo1, hi1);
  seq.v2 = assemble(lo1, hi2);
  seq.v3 = assemble(lo2, hi1);
  seq.v4 = assemble(lo2, hi2);

  bool lo_indexed = !lo.value.is_finite() || q.in_s(lo.value);
  bool hi_indexed = !hi.value.is_finite() || q.in_s(hi.value);
  if (!lo_indexed && !hi_indexed) {
    bool asc_a = q.local_direction(lo.value) == Direction::Ascending;
    bool asc_b = q.local_direction(hi.value) == Direction::Ascending;
    seq.type_tag = asc_a ? (asc_b ? 1 : 2) : (asc_b ? 3 : 4);
  } else if (lo_indexed && !hi_indexed) {
    bool sink_first = lower_pair_starts_at_sink(q, lo);
    bool asc_b = q.local_direction(hi.value) == Direction::Ascending;
    if (!sink_first)
      seq.type_tag = asc_b ? 5 : 6;
    else
      seq.type_tag = asc_b ? 7 : 8;
  } else if (!lo_indexed && hi_indexed) {
    bool sink_first = upper_pair_starts_at_sink(q, hi);
    bool asc_a = q.local_direction(lo.value) == Direction::Ascending;
    if (sink_first)
      seq.type_tag = asc_a ? 9 : 10;
    else
      seq.type_tag = asc_a ? 11 : 12;
  } else {
    bool lo_sink = lower_pair_starts_at_sink(q, lo);
    bool hi_sink = upper_pair_starts_at_sink(q, hi);
    if (lo_sink)
      seq.type_tag = hi_sink ? 13 : 15;
    else
      seq.type_tag = hi_sink ? 14 : 16;
  }
  out.sequence = seq;
  return out;
}

}  // namespace arq
