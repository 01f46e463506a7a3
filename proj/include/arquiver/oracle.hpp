#pragma once

#include <cstdint>
#include <vector>

#include "arquiver/interval.hpp"

namespace arq {

// Discretization of a finite scene to an A_n quiver. Samples contain every
// finite interval endpoint in play, every finite sink/source, a point between
// each consecutive pair of those, and one sentinel beyond each extreme.
struct Grid {
  std::vector<Rat> samples;
  // arrow_left[i]: edge between samples i and i+1 points toward sample i
  std::vector<bool> arrow_left;
};

// 0/1 dimension vector of an interval restricted to a grid.
struct GridRep {
  std::vector<int> dims;
};

Grid build_grid(const Quiver& q, const std::vector<Interval>& intervals);
Grid refine_grid(const Quiver& q, const Grid& g);  // insert midpoints everywhere
GridRep restrict_to(const Interval& I, const Grid& g);

int hom_dim_grid(const Grid& g, const GridRep& v, const GridRep& w);
// Basis of the morphism space, one entry per sample.
std::vector<std::vector<Rat>> hom_basis_grid(const Grid& g, const GridRep& v, const GridRep& w);
int euler_form_grid(const Grid& g, const GridRep& w, const GridRep& v);
// dim Ext^1(M_w, M_v) = hom(w, v) - <w, v>; throws NegativeExt when negative.
int ext_dim_grid(const Grid& g, const GridRep& w, const GridRep& v);

// Deterministic splitmix64-based generator; identical streams everywhere.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  bool chance(unsigned percent) { return below(100) < percent; }
};

struct RandomInstance {
  Quiver quiver;
  std::vector<Interval> intervals;
};

RandomInstance random_instance(std::uint64_t seed, int max_ss, int n_intervals = 6);
Interval random_interval(const Quiver& q, Rng& rng);

}  // namespace arq
