#include "arquiver/verify.hpp"

#include <cmath>
#include <sstream>

namespace arq {

namespace {

struct Suite {
  std::string name;
  explicit Suite(std::string n) : name(std::move(n)) {}
  int checks = 0;
  int failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
  void report(std::ostream& out) const {
    out << name << ": " << (failures == 0 ? "OK" : "FAIL") << " (" << checks << " checks";
    if (failures) out << ", first failure: " << first_failure;
    out << ")\n";
  }
};

std::string pair_label(const Quiver& q, const Interval& a, const Interval& b) {
  return format_interval(a) + " vs " + format_interval(b) + " on [" + q.describe() + "]";
}

}  // namespace

bool run_verify(const VerifyOptions& opt, std::ostream& out) {
  Suite hom_suite("hom vs grid");
  Suite oneway_suite("one-way hom");
  Suite ext_suite("ext vs grid");
  Suite rect_suite("rectangles");
  Suite derived_suite("derived hom vs grid");
  Suite triangle_suite("triangles");
  Suite refine_suite("grid refinement");

  for (int t = 0; t < opt.trials; ++t) {
    RandomInstance inst = random_instance(opt.seed * 1000003ULL + t, opt.max_ss, 4);
    const Quiver& q = inst.quiver;
    Grid g = build_grid(q, inst.intervals);
    std::vector<GridRep> reps;
    for (const Interval& I : inst.intervals) reps.push_back(restrict_to(I, g));

    for (size_t i = 0; i < inst.intervals.size(); ++i) {
      for (size_t j = 0; j < inst.intervals.size(); ++j) {
        const Interval& A = inst.intervals[i];
        const Interval& B = inst.intervals[j];
        int combinatorial = hom_dim(q, A, B).dim;
        int grid = hom_dim_grid(g, reps[i], reps[j]);
        hom_suite.expect(combinatorial == grid, "hom " + pair_label(q, A, B));
        if (i != j && A != B && combinatorial == 1)
          oneway_suite.expect(hom_dim(q, B, A).dim == 0, "reverse hom " + pair_label(q, A, B));

        int ext = ext_with_middle(q, A, B).dim;
        int ext_grid = ext_dim_grid(g, reps[i], reps[j]);
        ext_suite.expect(ext == ext_grid, "ext " + pair_label(q, A, B));

        if (A != B) {
          RectangleResult r = extension_rectangle(q, B, A);  // Ext^1(A, B)
          bool kind_matches =
              (ext == 0 && r.kind == RectangleResult::Kind::None) ||
              (ext == 1 && ext_with_middle(q, A, B).middle->kind == MiddleTerm::Kind::Pair &&
               r.kind == RectangleResult::Kind::Complete) ||
              (ext == 1 && ext_with_middle(q, A, B).middle->kind == MiddleTerm::Kind::Indec &&
               r.kind == RectangleResult::Kind::AlmostComplete);
          rect_suite.expect(kind_matches, "rectangle kind " + pair_label(q, B, A));
          if (r.kind == RectangleResult::Kind::AlmostComplete) {
            Classification pc = classify(q, *r.phantom);
            StripPoint pg = gamma(q, *r.phantom);
            rect_suite.expect(pc.simple || pc.bar_form,
                              "phantom class " + pair_label(q, B, A));
            rect_suite.expect(std::abs(std::abs(pg.y) - kHalfPi) < 1e-9,
                              "phantom height " + pair_label(q, B, A));
          }
        }

        // derived pairs at shift gaps -1..2 around zero
        for (int gap = -1; gap <= 2; ++gap) {
          DObject X{A, 0}, Y{B, gap};
          int dh = derived_hom_dim(q, X, Y);
          int expected = 0;
          if (gap == 0)
            expected = grid;
          else if (gap == 1)
            expected = ext_dim_grid(g, reps[i], reps[j]);
          derived_suite.expect(dh == expected, "derived hom " + pair_label(q, A, B));

          if (X != Y) {
            TriangleResult tri = triangle(q, X, Y);
            size_t arity = tri.middle().size();
            bool kind_ok = (tri.kind == TriangleResult::Kind::None && arity == 0) ||
                           (tri.kind == TriangleResult::Kind::Complete && arity == 2) ||
                           (tri.kind == TriangleResult::Kind::AlmostComplete && arity == 1);
            triangle_suite.expect(kind_ok, "triangle arity " + pair_label(q, A, B));
            if (tri.kind == TriangleResult::Kind::AlmostComplete) {
              StripPoint pg = gamma_b(q, *tri.phantom);
              triangle_suite.expect(std::abs(std::abs(pg.y) - kHalfPi) < 1e-9,
                                    "triangle phantom " + pair_label(q, A, B));
            }
          }
        }
      }
    }

    if (t % 8 == 0) {
      Grid fine = refine_grid(q, g);
      for (size_t i = 0; i < inst.intervals.size(); ++i) {
        GridRep vi = restrict_to(inst.intervals[i], fine);
        for (size_t j = 0; j < inst.intervals.size(); ++j) {
          GridRep vj = restrict_to(inst.intervals[j], fine);
          refine_suite.expect(hom_dim_grid(fine, vi, vj) == hom_dim_grid(g, reps[i], reps[j]),
                              "refined hom " + pair_label(q, inst.intervals[i], inst.intervals[j]));
          refine_suite.expect(ext_dim_grid(fine, vi, vj) == ext_dim_grid(g, reps[i], reps[j]),
                              "refined ext " + pair_label(q, inst.intervals[i], inst.intervals[j]));
        }
      }
    }
  }

  bool ok = true;
  for (const Suite* s : {&hom_suite, &oneway_suite, &ext_suite, &rect_suite, &derived_suite,
                         &triangle_suite, &refine_suite}) {
    s->report(out);
    ok = ok && s->failures == 0;
  }
  return ok;
}

}  // namespace arq
