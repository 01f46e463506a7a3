#pragma once

#include <optional>

#include "arquiver/homalg.hpp"

namespace arq {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

// 2*pi-periodic tent: -pi/2 at 0, +pi/2 at pi, slope +-1.
double lambda_tent(double w);

enum class LambdaSign { Minus, Plus, Undecorated };

struct LambdaKey {
  ExtReal base;
  LambdaSign sign = LambdaSign::Undecorated;
};

// kappa offset of a lambda function. Sinks and sources (including +-inf)
// carry both signed variants; other points only the undecorated one, whose
// side is fixed by the adjacent sink.
double kappa_of(const Quiver& q, const ExtReal& a, LambdaSign sign);
// Abscissa where the lambda function of a touches +pi/2.
double p_hat(const Quiver& q, const ExtReal& a);
double lambda_eval(const Quiver& q, const LambdaKey& key, double z);

// Strip image of an indecomposable.
StripPoint gamma(const Quiver& q, const Interval& I);
// The intersection-point construction only (valid off projectives, simples
// and bar supports); exposed so tests can cross-check the injective formula.
StripPoint gamma_interior(const Quiver& q, const Interval& I);

enum class Position { P1 = 1, P2 = 2, P3 = 3, P4 = 4 };
Position position(const Quiver& q, const Interval& I);

// Combinatorial test for equality of strip images.
bool same_gamma(const Quiver& q, const Interval& I, const Interval& J);

struct SlopeClass {
  enum class Kind { PlusOne, MinusOne, Shallow, Steep } kind = Kind::Shallow;
  double r1 = 0.0;  // numeric slope (+-1 for the datum-matched kinds)
  double r2 = 0.0;  // merged-diamond slope; +inf encodes a vertical step
};

SlopeClass slope_class(const Quiver& q, const Interval& I, const Interval& J);

struct GenDist {
  double r = 0.0;
  int z = 0;
};

// The lexicographic (R, Z)-valued metric on indecomposables.
GenDist metric_d(const Quiver& q, const Interval& I, const Interval& J);

enum class RegionTag {
  InteriorH,
  Region1,
  Region2,
  Region3,
  Region4,
  Region5,
  Region6,
  BoundaryLowerLeft,
  BoundaryUpperLeft,
  BoundaryUpperRight,
  BoundaryLowerRight,
  BoundaryCornerStart,  // the point Gamma V itself
  BoundaryApexTop,
  BoundaryApexBottom,
  BoundaryCornerEnd,  // the point (x_V + pi, -y_V)
};

bool region_is_boundary(RegionTag t);
// Which of the numbered outside regions a boundary piece touches.
bool region_borders(RegionTag t, int region);

// Classify Gamma W against the open hom-support cone of V.
RegionTag hom_region(const Quiver& q, const Interval& V, const Interval& W);

struct RectangleResult {
  enum class Kind { None, Complete, AlmostComplete } kind = Kind::None;
  std::vector<Interval> corners;     // Complete: V, A, B, W; Almost: V, E, W
  std::optional<Interval> phantom;   // simple or bar at the missing corner
};

// Geometric form of Ext^1(W, V): the rectangle spanned by a nontrivial
// extension with V the left-most and W the right-most corner.
RectangleResult extension_rectangle(const Quiver& q, const Interval& V, const Interval& W);

}  // namespace arq
