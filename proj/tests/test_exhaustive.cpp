#include "doctest.h"

#include <cmath>

#include "arquiver/errors.hpp"
#include "test_support.hpp"

using namespace arqtest;

namespace {

// Every valid interval with endpoints drawn from a lattice through and around
// the sinks and sources, all closure combinations included.
std::vector<Interval> lattice_intervals(const Quiver& q) {
  std::vector<ExtReal> values;
  values.push_back(ExtReal::neg_inf());
  const auto& pts = q.points();
  values.push_back(ExtReal(pts.front() - Rat(1)));
  for (size_t i = 0; i < pts.size(); ++i) {
    values.push_back(ExtReal(pts[i]));
    if (i + 1 < pts.size()) values.push_back(ExtReal(midpoint(pts[i], pts[i + 1])));
  }
  values.push_back(ExtReal(pts.back() + Rat(1)));
  values.push_back(ExtReal::pos_inf());

  std::vector<Interval> out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_finite()) out.push_back(make_simple(values[i].value));
    for (size_t j = i + 1; j < values.size(); ++j)
      for (bool lc : {false, true})
        for (bool hc : {false, true}) {
          try {
            out.push_back(make_interval(values[i], lc, values[j], hc));
          } catch (const DomainError&) {
          }
        }
  }
  return out;
}

void exhaustive_on(const Quiver& q) {
  std::vector<Interval> all = lattice_intervals(q);
  Grid g = build_grid(q, all);
  std::vector<GridRep> reps;
  for (const Interval& I : all) reps.push_back(restrict_to(I, g));

  for (size_t i = 0; i < all.size(); ++i) {
    const Interval& A = all[i];
    INFO(format_interval(A) << " on " << q.describe());

    // classification, sequences and the strip image are mutually consistent
    Classification cl = classify(q, A);
    ARQuery ar = ar_sequence(q, A);
    CHECK(!ar.sequence == !cl.generic());
    StripPoint ga = gamma(q, A);
    CHECK(std::abs(ga.y) <= kHalfPi + 1e-9);
    if (cl.generic()) {
      StripPoint g1 = gamma(q, ar.sequence->v1);
      CHECK(std::hypot(ga.x - g1.x, ga.y - g1.y) < 1e-9);
    }
    if (cl.simple || cl.bar_form) {
      if (!cl.projective && !cl.injective) CHECK(std::abs(std::abs(ga.y) - kHalfPi) < 1e-9);
    }

    for (size_t j = 0; j < all.size(); ++j) {
      const Interval& B = all[j];
      INFO("against " << format_interval(B));
      int h = hom_dim(q, A, B).dim;
      CHECK(h == hom_dim_grid(g, reps[i], reps[j]));
      int e = ext_with_middle(q, A, B).dim;
      CHECK(e == ext_dim_grid(g, reps[i], reps[j]));
      if (h == 1 && A != B) CHECK(hom_dim(q, B, A).dim == 0);
      if (A != B && e == 1) {
        RectangleResult r = extension_rectangle(q, B, A);
        CHECK(r.kind != RectangleResult::Kind::None);
        if (r.phantom) CHECK(std::abs(std::abs(gamma(q, *r.phantom).y) - kHalfPi) < 1e-9);
      }
    }
  }
}

}  // namespace

TEST_CASE("exhaustive oracle agreement on small quivers") {
  {
    QuiverData d;
    d.points = {Rat(0)};
    d.first_index_parity = Parity::Even;
    exhaustive_on(Quiver::validate(std::move(d)));
  }
  {
    QuiverData d;
    d.points = {Rat(0)};
    d.first_index_parity = Parity::Odd;
    exhaustive_on(Quiver::validate(std::move(d)));
  }
  {
    QuiverData d;
    d.points = {Rat(0), Rat(1)};
    d.first_index_parity = Parity::Even;
    exhaustive_on(Quiver::validate(std::move(d)));
  }
  {
    QuiverData d;
    d.points = {Rat(-1), Rat(0), Rat(2)};
    d.first_index_parity = Parity::Odd;
    exhaustive_on(Quiver::validate(std::move(d)));
  }
  {
    QuiverData d;
    d.points = {Rat(0), Rat(1), Rat(2), Rat(3)};
    d.first_index_parity = Parity::Even;
    exhaustive_on(Quiver::validate(std::move(d)));
  }
}

TEST_CASE("exhaustive derived agreement on a two-point quiver") {
  QuiverData d;
  d.points = {Rat(0), Rat(1)};
  d.first_index_parity = Parity::Odd;
  Quiver q = Quiver::validate(std::move(d));
  std::vector<Interval> all = lattice_intervals(q);
  Grid g = build_grid(q, all);
  std::vector<GridRep> reps;
  for (const Interval& I : all) reps.push_back(restrict_to(I, g));

  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j)
      for (int gap : {0, 1}) {
        DObject X{all[i], 0}, Y{all[j], gap};
        INFO(format_dobject(X) << " vs " << format_dobject(Y) << " on " << q.describe());
        int expected = gap == 0 ? hom_dim_grid(g, reps[i], reps[j])
                                : ext_dim_grid(g, reps[i], reps[j]);
        CHECK(derived_hom_dim(q, X, Y) == expected);
        if (X == Y) continue;
        TriangleResult t = triangle(q, X, Y);
        bool has_data = gap == 0 ? ext_with_middle(q, all[j], all[i]).dim == 1
                                 : (all[i] != all[j] && hom_dim(q, all[j], all[i]).dim == 1);
        CHECK((t.kind != TriangleResult::Kind::None) == has_data);
        if (t.kind == TriangleResult::Kind::AlmostComplete)
          CHECK(std::abs(std::abs(gamma_b(q, *t.phantom).y) - kHalfPi) < 1e-9);
      }
}
