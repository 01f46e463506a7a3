#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arquiver/rational.hpp"

namespace arq {

enum class Parity { Even, Odd };
enum class Direction { Ascending, Descending };

struct StripPoint {
  double x = 0.0;
  double y = 0.0;
};

// Raw, unvalidated description: the finite sinks/sources in increasing order
// plus the index parity of the first listed point (Even = sink).
struct QuiverData {
  std::vector<Rat> points;
  Parity first_index_parity = Parity::Even;
};

// A continuous type-A quiver with finitely many sinks and sources.
//
// Finite points receive consecutive integer indices so that index 0 lands on
// the first finite point (Even parity) or the second (Odd parity); -inf and
// +inf get the indices just beyond. Even index = sink. The strip anchors for
// every indexed element are precomputed here and shared read-only.
class Quiver {
 public:
  static Quiver validate(QuiverData data);
  static Quiver from_json_text(const std::string& text);
  static Quiver from_json_file(const std::string& path);

  const std::vector<Rat>& points() const { return points_; }
  Parity first_index_parity() const { return parity_; }

  int lo_index() const { return first_index_ - 1; }              // index of -inf
  int hi_index() const { return first_index_ + (int)points_.size(); }  // index of +inf

  ExtReal indexed_value(int n) const;
  bool is_indexed(const ExtReal& v) const;
  int index_of(const ExtReal& v) const;  // requires is_indexed
  static bool is_sink_index(int n) { return ((n % 2) + 2) % 2 == 0; }

  // True iff v is a finite sink or source.
  bool in_s(const ExtReal& v) const { return v.is_finite() && is_indexed(v); }

  // y <= x in the quiver order (maps of representations flow from x to y).
  bool precedes(const ExtReal& x, const ExtReal& y) const;

  // Orientation at a finite non-sink/source point: Ascending iff the quiver
  // order agrees with <= near a (adjacent sink below a).
  Direction local_direction(const ExtReal& a) const;

  // The consecutive indexed pair (n, n+1) with s_n < a < s_{n+1}.
  std::pair<int, int> enclosing(const ExtReal& a) const;

  // Direction of the open window (s_n, s_{n+1}).
  Direction window_direction(int n) const {
    return is_sink_index(n) ? Direction::Ascending : Direction::Descending;
  }

  // Strip anchor of indexed element n.
  StripPoint anchor(int n) const;

  // Image of the projectives at a finite point (anchor or interpolation).
  StripPoint projective_point(const ExtReal& a) const;

  std::string describe() const;

 private:
  std::vector<Rat> points_;
  Parity parity_ = Parity::Even;
  int first_index_ = 0;
  std::vector<StripPoint> anchors_;  // anchors_[n - lo_index()]

  void build_anchors();
};

}  // namespace arq
