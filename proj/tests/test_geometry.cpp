#include "doctest.h"

#include <cmath>

#include "arquiver/errors.hpp"
#include "test_support.hpp"

using namespace arqtest;

namespace {
constexpr double tol = 1e-9;
bool close(double a, double b, double t = tol) { return std::abs(a - b) <= t; }
bool close(StripPoint p, double x, double y, double t = tol) {
  return close(p.x, x, t) && close(p.y, y, t);
}
}  // namespace

TEST_CASE("anchors of the one-sink quiver") {
  Quiver q = q1();
  CHECK(close(q.anchor(0), 0.0, 0.0));
  CHECK(close(q.anchor(1), kHalfPi, kHalfPi));
  CHECK(close(q.anchor(-1), kHalfPi, -kHalfPi));
  CHECK(close(q.projective_point(ExtReal(Rat(1))), kPi / 4, kPi / 4));
  CHECK(close(q.projective_point(ExtReal(-Rat(1))), kPi / 4, -kPi / 4));
  CHECK(close(q.projective_point(ExtReal(Rat(0))), 0.0, 0.0));
}

TEST_CASE("consecutive anchors sit on slope +-1 segments") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Quiver q = random_instance(seed, 5).quiver;
    for (int n = q.lo_index(); n < q.hi_index(); ++n) {
      StripPoint a = q.anchor(n), b = q.anchor(n + 1);
      CHECK(close(std::abs(b.x - a.x), std::abs(b.y - a.y)));
      // sinks sit left of their adjacent sources
      if (Quiver::is_sink_index(n))
        CHECK(a.x <= b.x + tol);
      else
        CHECK(b.x <= a.x + tol);
    }
  }
}

TEST_CASE("kappa and p-hat values on the one-sink quiver") {
  Quiver q = q1();
  CHECK(close(kappa_of(q, ExtReal(Rat(0)), LambdaSign::Minus), kHalfPi));
  CHECK(close(kappa_of(q, ExtReal(Rat(1)), LambdaSign::Undecorated), kPi));
  CHECK(close(p_hat(q, ExtReal(Rat(0))), -kHalfPi));
  CHECK(close(p_hat(q, ExtReal::pos_inf()), kHalfPi));
  CHECK(close(p_hat(q, ExtReal(Rat(1))), 0.0));
  CHECK_THROWS_WITH_AS(kappa_of(q, ExtReal(Rat(0)), LambdaSign::Undecorated),
                       doctest::Contains("InvalidSign"), DomainError);
}

TEST_CASE("lambda functions: base values and periodicity") {
  CHECK(close(lambda_tent(0.0), -kHalfPi));
  CHECK(close(lambda_tent(kPi), kHalfPi));
  Quiver q = q1();
  LambdaKey k0{ExtReal(Rat(0)), LambdaSign::Minus};
  CHECK(close(lambda_eval(q, k0, 0.0), 0.0));          // passes through the anchor
  CHECK(close(lambda_eval(q, k0, -kHalfPi), kHalfPi));  // reaches the roof at p-hat
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    double z = (double)rng.below(20000) / 1000.0 - 10.0;
    CHECK(close(lambda_eval(q, k0, z), lambda_eval(q, k0, z + 2.0 * kPi), 1e-9));
  }
  // the minimum sits at the kappa offset
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Quiver qq = random_instance(seed, 4).quiver;
    for (int n = qq.lo_index(); n <= qq.hi_index(); ++n) {
      for (LambdaSign s : {LambdaSign::Minus, LambdaSign::Plus}) {
        double kappa = kappa_of(qq, qq.indexed_value(n), s);
        CHECK(close(lambda_tent(kappa - kappa), -kHalfPi));
      }
    }
  }
}

TEST_CASE("p-hat ordering: sinks rise to x(+inf), sources fall back") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Quiver q = random_instance(seed, 5).quiver;
    double x_pinf = q.anchor(q.hi_index()).x;
    double x_ninf = q.anchor(q.lo_index()).x;
    std::vector<double> sink_ps, source_ps;
    for (int n = q.lo_index(); n <= q.hi_index(); ++n) {
      double ph = p_hat(q, q.indexed_value(n));
      (Quiver::is_sink_index(n) ? sink_ps : source_ps).push_back(ph);
    }
    for (double p : sink_ps) {
      CHECK(p >= x_ninf - kPi - tol);
      CHECK(p <= x_pinf + tol);
    }
    for (double p : source_ps) {
      CHECK(p >= x_pinf - tol);
      CHECK(p <= x_ninf + kPi + tol);
    }
    for (size_t i = 0; i + 1 < sink_ps.size(); ++i) CHECK(sink_ps[i] < sink_ps[i + 1] + tol);
    for (size_t i = 0; i + 1 < source_ps.size(); ++i) CHECK(source_ps[i + 1] < source_ps[i] + tol);
  }
}

namespace {

// Count the lambda graphs through (x, y): indexed functions plus one per
// window whose kappa range covers the needed offset. Shared functions of
// adjacent pairs and the +-inf coincidences are counted once via kappa
// residues.
int lambda_cover_count(const Quiver& q, double x, double y) {
  std::vector<double> residues;
  auto push = [&](double kappa) {
    double r = std::fmod(kappa, 2.0 * kPi);
    if (r < 0) r += 2.0 * kPi;
    for (double seen : residues)
      if (std::abs(seen - r) < 1e-7 || std::abs(std::abs(seen - r) - 2.0 * kPi) < 1e-7) return;
    residues.push_back(r);
  };
  // target offsets: lambda(x - kappa) = y on a rising or falling branch
  double k_rise = x - (y + kHalfPi);
  double k_fall = x + (y + kHalfPi) - 2.0 * kPi;
  for (double target : {k_rise, k_fall}) {
    for (int n = q.lo_index(); n <= q.hi_index(); ++n) {
      for (LambdaSign s : {LambdaSign::Minus, LambdaSign::Plus}) {
        double kappa = kappa_of(q, q.indexed_value(n), s);
        double diff = std::remainder(kappa - target, 2.0 * kPi);
        if (std::abs(diff) < 1e-7) push(kappa);
      }
    }
    for (int n = q.lo_index(); n < q.hi_index(); ++n) {
      // window (s_n, s_{n+1}): undecorated kappas sweep strictly monotonically
      // between the signed kappas at the ends
      LambdaSign side = Quiver::is_sink_index(n) ? LambdaSign::Minus : LambdaSign::Plus;
      double klo = kappa_of(q, q.indexed_value(n), side);
      double khi = kappa_of(q, q.indexed_value(n + 1), side);
      double lo = std::min(klo, khi), hi = std::max(klo, khi);
      // find representatives of target mod 2pi inside (lo, hi)
      double base = target + 2.0 * kPi * std::ceil((lo - target) / (2.0 * kPi));
      for (double k = base; k < hi; k += 2.0 * kPi)
        if (k > lo + 1e-7 && k < hi - 1e-7) push(k);
    }
  }
  return (int)residues.size();
}

}  // namespace

TEST_CASE("lambda graphs cover the boundary once and the interior twice") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Quiver q = random_instance(seed, 4).quiver;
    Rng rng(seed + 99);
    double x_ninf = q.anchor(q.lo_index()).x;
    for (int i = 0; i < 9; ++i) {
      double x = x_ninf - kPi + 2.0 * kPi * ((double)rng.below(10000) / 10000.0);
      CHECK(lambda_cover_count(q, x, kHalfPi) == 1);
      double y = -kHalfPi + kPi * ((double)(1 + rng.below(9998)) / 10000.0);
      CHECK(lambda_cover_count(q, x, y) == 2);
    }
  }
}

TEST_CASE("gamma on the running examples") {
  Quiver q = q1();
  CHECK(close(gamma(q, iv("(-1,1)")), kHalfPi, 0.0));
  CHECK(close(gamma(q, iv("(-inf,+inf)")), kPi, 0.0));
  CHECK(close(gamma(q, iv("{1}")), kPi, -kHalfPi));
  CHECK(close(gamma(q, iv("[0,1]")), kPi / 4, kPi / 4));   // projective
  CHECK(close(gamma(q, iv("[0,+inf)")), kHalfPi, kHalfPi));  // bar to the roof
  CHECK(close(gamma(q, iv("(-inf,0]")), kHalfPi, -kHalfPi));
}

TEST_CASE("gamma of injectives matches the reflected projective point") {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Quiver q = random_instance(seed, 4).quiver;
    for (int k = 0; k < 4; ++k) {
      Rat a((std::int64_t)rng.below(25) - 12, 1 + (std::int64_t)rng.below(3));
      ExtReal av(a);
      StripPoint p = q.projective_point(av);
      for (SupportVariant v :
           {SupportVariant::Closed, SupportVariant::OpenBelow, SupportVariant::OpenAbove}) {
        try {
          Interval I = canonical_support(q, av, SupportKind::UpSet, v);
          StripPoint g = gamma(q, I);
          CHECK(close(g, p.x + kPi, -p.y));
          if (!I.is_simple()) {
            // the interior construction must land on the same point
            StripPoint gi = gamma_interior(q, I);
            CHECK(close(gi, p.x + kPi, -p.y, 1e-9));
          }
        } catch (const DomainError&) {
        }
      }
    }
  }
}

TEST_CASE("gamma collapses each almost split sequence to a point") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomInstance inst = random_instance(seed, 4);
    for (const Interval& I : inst.intervals) {
      ARQuery ar = ar_sequence(inst.quiver, I);
      if (!ar.sequence) continue;
      StripPoint g1 = gamma(inst.quiver, ar.sequence->v1);
      for (const Interval& m : {ar.sequence->v2, ar.sequence->v3, ar.sequence->v4}) {
        StripPoint g = gamma(inst.quiver, m);
        CHECK(close(g, g1.x, g1.y, 1e-9));
      }
    }
  }
}

TEST_CASE("positions across a full sequence family and the special objects") {
  Quiver q = q1();
  CHECK(position(q, iv("[1/2,2)")) == Position::P1);
  CHECK(position(q, iv("[1/2,2]")) == Position::P2);
  CHECK(position(q, iv("(1/2,2)")) == Position::P3);
  CHECK(position(q, iv("(1/2,2]")) == Position::P4);
  CHECK(position(q, iv("{1}")) == Position::P2);        // bottom boundary
  CHECK(position(q, iv("[0,+inf)")) == Position::P3);   // top boundary
  CHECK(position(q, iv("[0,1]")) == Position::P4);      // projective, closed form
  CHECK(position(q, iv("[0,1)")) == Position::P3);
  CHECK(position(q, iv("{0}")) == Position::P4);        // simple projective
  CHECK(position(q, iv("(-inf,+inf)")) == Position::P1);  // injective, closed form
  CHECK(position(q, iv("(-inf,0)")) == Position::P2);
  CHECK(position(q, iv("(0,+inf)")) == Position::P3);

  Quiver q2 = q01_odd();
  CHECK(position(q2, iv("{0}")) == Position::P1);  // simple injective at the source
}

TEST_CASE("same_gamma agrees with float coincidence of strip images") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomInstance inst = random_instance(seed, 4);
    for (const Interval& A : inst.intervals)
      for (const Interval& B : inst.intervals) {
        bool combinatorial = same_gamma(inst.quiver, A, B);
        StripPoint pa = gamma(inst.quiver, A), pb = gamma(inst.quiver, B);
        bool floats = std::hypot(pa.x - pb.x, pa.y - pb.y) < 1e-7;
        INFO(format_interval(A) << " vs " << format_interval(B) << " on "
                                << inst.quiver.describe());
        CHECK(combinatorial == floats);
      }
  }
}

TEST_CASE("same_gamma examples") {
  Quiver q = q1();
  CHECK(same_gamma(q, iv("[1/2,2)"), iv("(1/2,2]")));
  CHECK(same_gamma(q, iv("[0,1]"), iv("[0,1)")));  // both projective at 1
  CHECK_FALSE(same_gamma(q, iv("[0,1]"), iv("[0,2]")));
}

TEST_CASE("slope classes") {
  Quiver q = q1();
  SlopeClass sc = slope_class(q, iv("[1,2]"), iv("[1,3]"));
  CHECK(sc.kind == SlopeClass::Kind::PlusOne);
  CHECK(close(sc.r2, 1.0));
  sc = slope_class(q, iv("[1,3)"), iv("[2,3)"));
  CHECK(sc.kind == SlopeClass::Kind::MinusOne);
  CHECK(close(sc.r2, -1.0));
  // numerically -1 but no shared endpoint datum: steep by convention
  sc = slope_class(q, iv("[0,1]"), iv("(-1,1)"));
  CHECK(sc.kind == SlopeClass::Kind::Steep);
  CHECK(close(sc.r1, -1.0));
  CHECK_THROWS_WITH_AS(slope_class(q, iv("[0,1]"), iv("[0,1]")), doctest::Contains("SamePoint"),
                       DomainError);
}

TEST_CASE("metric examples") {
  Quiver q = q1();
  GenDist d = metric_d(q, iv("[1,2]"), iv("[1,2]"));
  CHECK(d.r == 0.0);
  CHECK(d.z == 0);
  d = metric_d(q, iv("[1/2,2)"), iv("(1/2,2]"));  // roles 1 and 4
  CHECK(d.r == 0.0);
  CHECK(d.z == 2);
  d = metric_d(q, iv("[1/2,2)"), iv("(1/2,2)"));  // roles 1 and 3, one edge
  CHECK(d.r == 0.0);
  CHECK(d.z == 1);
}

TEST_CASE("metric axioms on random triples") {
  int triples = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomInstance inst = random_instance(seed, 4, 6);
    const Quiver& q = inst.quiver;
    const auto& ivs = inst.intervals;
    for (const Interval& A : ivs)
      for (const Interval& B : ivs) {
        GenDist ab = metric_d(q, A, B), ba = metric_d(q, B, A);
        CHECK(close(ab.r, ba.r));
        CHECK(ab.z == ba.z);
        if (A != B) CHECK((ab.r > 0 || ab.z != 0));
        CHECK((ab.r == 0.0 && ab.z >= 0 && ab.z <= 2) == same_gamma(q, A, B));
        for (const Interval& C : ivs) {
          ++triples;
          GenDist ac = metric_d(q, A, C), bc = metric_d(q, B, C);
          double lhs_r = ab.r + bc.r;
          INFO(format_interval(A) << " " << format_interval(B) << " " << format_interval(C)
                                  << " on " << q.describe());
          if (std::abs(lhs_r - ac.r) <= 1e-9)
            CHECK(ab.z + bc.z >= ac.z);
          else
            CHECK(lhs_r > ac.r);
        }
      }
  }
  CHECK(triples >= 8000);
}

TEST_CASE("hom regions on the one-sink quiver") {
  Quiver q = q1();
  CHECK(hom_region(q, iv("[0,1]"), iv("[1/2,2]")) == RegionTag::InteriorH);
  CHECK(hom_region(q, iv("[0,1]"), iv("[5,6)")) == RegionTag::Region5);
  RegionTag t = hom_region(q, iv("[0,1]"), iv("[0,2]"));
  CHECK(region_is_boundary(t));
  CHECK(t == RegionTag::BoundaryUpperLeft);
  CHECK_THROWS_WITH_AS(hom_region(q, iv("{1}"), iv("[0,1]")), doctest::Contains("ApexObject"),
                       DomainError);
}

TEST_CASE("hom region interior and exterior predict the hom dimension") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    RandomInstance inst = random_instance(seed, 4);
    const Quiver& q = inst.quiver;
    for (const Interval& V : inst.intervals) {
      StripPoint pv = gamma(q, V);
      if (std::abs(pv.y) >= kHalfPi - 1e-9) continue;
      for (const Interval& W : inst.intervals) {
        RegionTag t = hom_region(q, V, W);
        int h = hom_dim(q, V, W).dim;
        INFO(format_interval(V) << " vs " << format_interval(W) << " tag "
                                << static_cast<int>(t) << " on " << q.describe());
        if (t == RegionTag::InteriorH) CHECK(h == 1);
        if (!region_is_boundary(t) && t != RegionTag::InteriorH) CHECK(h == 0);
      }
    }
  }
}

TEST_CASE("extension rectangles on the running examples") {
  Quiver q = q1();
  RectangleResult r = extension_rectangle(q, iv("[1,2)"), iv("[2,3)"));
  CHECK(r.kind == RectangleResult::Kind::AlmostComplete);
  REQUIRE(r.corners.size() == 3);
  CHECK(r.corners[1] == iv("[1,3)"));
  REQUIRE(r.phantom.has_value());
  CHECK(*r.phantom == iv("{2}"));
  CHECK(close(std::abs(gamma(q, *r.phantom).y), kHalfPi));

  r = extension_rectangle(q, iv("[0,1]"), iv("[1/2,2]"));
  CHECK(r.kind == RectangleResult::Kind::Complete);
  REQUIRE(r.corners.size() == 4);
  CHECK(r.corners[0] == iv("[0,1]"));
  CHECK(r.corners[1] == iv("[0,2]"));
  CHECK(r.corners[2] == iv("[1/2,1]"));
  CHECK(r.corners[3] == iv("[1/2,2]"));

  CHECK(extension_rectangle(q, iv("[0,1]"), iv("[5,6)")).kind == RectangleResult::Kind::None);
}

TEST_CASE("complete rectangles have +-1 sides and distinct corners") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomInstance inst = random_instance(seed, 4);
    const Quiver& q = inst.quiver;
    for (const Interval& V : inst.intervals)
      for (const Interval& W : inst.intervals) {
        if (V == W) continue;
        RectangleResult r = extension_rectangle(q, V, W);
        if (r.kind == RectangleResult::Kind::None) continue;
        std::vector<StripPoint> pts;
        for (const Interval& c : r.corners) pts.push_back(gamma(q, c));
        if (r.phantom) pts.push_back(gamma(q, *r.phantom));
        REQUIRE(pts.size() == 4);
        // V leftmost, W rightmost
        for (const StripPoint& p : pts) {
          CHECK(pts.front().x <= p.x + 1e-9);
          CHECK(p.x <= gamma(q, W).x + 1e-9);
        }
        // opposite corners share midpoints (parallelogram with +-1 sides)
        double cx = pts[0].x + (r.phantom ? gamma(q, W).x : pts[3].x);
        (void)cx;
        StripPoint a = pts[0], b = pts[1];
        CHECK(close(std::abs(b.x - a.x), std::abs(b.y - a.y), 1e-8));
      }
  }
}
