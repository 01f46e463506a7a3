#pragma once

#include "arquiver/geometry.hpp"

namespace arq {

// Indecomposable of the bounded derived category: a shifted interval.
struct DObject {
  Interval ival;
  int shift = 0;

  friend bool operator==(const DObject& a, const DObject& b) {
    return a.shift == b.shift && a.ival == b.ival;
  }
  friend bool operator!=(const DObject& a, const DObject& b) { return !(a == b); }
};

DObject parse_dobject(const std::string& text);  // "INTERVAL@SHIFT", shift optional
std::string format_dobject(const DObject& X);

// Strip image of a shifted indecomposable: (x + n*pi, (-1)^n y).
StripPoint gamma_b(const Quiver& q, const DObject& X);
StripPoint shift_point(StripPoint p, int n);

// Positions transfer as-is under even shifts; odd shifts swap 2 and 3.
Position derived_position(const Quiver& q, const DObject& X);

// dim Hom_{D^b}(X, Y): hom at equal shifts, ext across a gap of one, else 0.
int derived_hom_dim(const Quiver& q, const DObject& X, const DObject& Y);

struct TriangleResult {
  enum class Kind { None, Complete, AlmostComplete } kind = Kind::None;
  std::vector<DObject> corners;    // Complete: V, U1, U2, W; Almost: V, U, W
  std::optional<DObject> phantom;  // shifted simple or bar at the missing corner
  std::vector<DObject> middle() const {
    if (kind == Kind::Complete) return {corners[1], corners[2]};
    if (kind == Kind::AlmostComplete) return {corners[1]};
    return {};
  }
};

// The distinguished triangle V -> U -> W -> with V and W the given corners,
// presented as a (possibly almost complete) rectangle under gamma_b.
TriangleResult triangle(const Quiver& q, const DObject& V, const DObject& W);

}  // namespace arq
