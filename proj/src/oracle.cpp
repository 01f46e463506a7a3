#include "arquiver/oracle.hpp"

#include <algorithm>

#include "arquiver/errors.hpp"

namespace arq {

namespace {

// Row-reduce over the rationals; returns a nullspace basis.
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> rows, int nvars) {
  int nrows = (int)rows.size();
  std::vector<int> pivot_col(nrows, -1);
  int r = 0;
  for (int c = 0; c < nvars && r < nrows; ++c) {
    int sel = -1;
    for (int i = r; i < nrows; ++i)
      if (rows[i][c].num != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    Rat inv = Rat(1) / rows[r][c];
    for (int j = c; j < nvars; ++j) rows[r][j] = rows[r][j] * inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c].num == 0) continue;
      Rat f = rows[i][c];
      for (int j = c; j < nvars; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivot_col[r] = c;
    ++r;
  }
  std::vector<bool> is_pivot(nvars, false);
  for (int i = 0; i < r; ++i) is_pivot[pivot_col[i]] = true;
  std::vector<std::vector<Rat>> basis;
  for (int c = 0; c < nvars; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(nvars, Rat(0));
    v[c] = Rat(1);
    for (int i = 0; i < r; ++i) {
      if (rows[i][c].num != 0) v[pivot_col[i]] = -rows[i][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Grid build_grid(const Quiver& q, const std::vector<Interval>& intervals) {
  std::vector<Rat> crit;
  for (const Rat& p : q.points()) crit.push_back(p);
  for (const Interval& I : intervals) {
    if (I.lo.is_finite()) crit.push_back(I.lo.value);
    if (I.hi.is_finite()) crit.push_back(I.hi.value);
  }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  Grid g;
  g.samples.push_back(crit.front() - Rat(1));  // sentinel
  for (size_t i = 0; i < crit.size(); ++i) {
    g.samples.push_back(crit[i]);
    if (i + 1 < crit.size()) g.samples.push_back(midpoint(crit[i], crit[i + 1]));
  }
  g.samples.push_back(crit.back() + Rat(1));  // sentinel

  g.arrow_left.resize(g.samples.size() - 1);
  for (size_t i = 0; i + 1 < g.samples.size(); ++i) {
    Rat mid = midpoint(g.samples[i], g.samples[i + 1]);
    g.arrow_left[i] = q.local_direction(ExtReal(mid)) == Direction::Ascending;
  }
  return g;
}

Grid refine_grid(const Quiver& q, const Grid& g) {
  Grid r;
  for (size_t i = 0; i < g.samples.size(); ++i) {
    r.samples.push_back(g.samples[i]);
    if (i + 1 < g.samples.size())
      r.samples.push_back(midpoint(g.samples[i], g.samples[i + 1]));
  }
  r.arrow_left.resize(r.samples.size() - 1);
  for (size_t i = 0; i + 1 < r.samples.size(); ++i) {
    Rat mid = midpoint(r.samples[i], r.samples[i + 1]);
    r.arrow_left[i] = q.local_direction(ExtReal(mid)) == Direction::Ascending;
  }
  return r;
}

GridRep restrict_to(const Interval& I, const Grid& g) {
  GridRep rep;
  rep.dims.resize(g.samples.size());
  for (size_t i = 0; i < g.samples.size(); ++i)
    rep.dims[i] = I.contains(ExtReal(g.samples[i])) ? 1 : 0;
  return rep;
}

std::vector<std::vector<Rat>> hom_basis_grid(const Grid& g, const GridRep& v, const GridRep& w) {
  int n = (int)g.samples.size();
  // one variable per sample where both are supported; others forced zero
  std::vector<int> var(n, -1);
  int nvars = 0;
  for (int p = 0; p < n; ++p)
    if (v.dims[p] && w.dims[p]) var[p] = nvars++;
  std::vector<std::vector<Rat>> rows;
  auto add_eq = [&](int plus, int minus) {
    if (plus == minus) return;  // covers the trivial and the empty equation
    std::vector<Rat> row(nvars, Rat(0));
    if (plus >= 0) row[plus] = Rat(1);
    if (minus >= 0) row[minus] = row[minus] - Rat(1);
    rows.push_back(std::move(row));
  };
  for (int e = 0; e + 1 < n; ++e) {
    int u = g.arrow_left[e] ? e + 1 : e;      // arrow u -> t
    int t = g.arrow_left[e] ? e : e + 1;
    if (!v.dims[u]) continue;  // source component of M is zero: no constraint
    // w(u->t) o f_u = f_t o v(u->t)
    int lhs = (var[u] >= 0 && w.dims[u] && w.dims[t]) ? var[u] : -1;
    int rhs = (var[t] >= 0 && v.dims[u] && v.dims[t]) ? var[t] : -1;
    add_eq(lhs, rhs);
  }
  // full basis of solutions; nvars == 0 means the zero space
  if (nvars == 0) return {};
  auto ns = nullspace(std::move(rows), nvars);
  std::vector<std::vector<Rat>> out;
  for (auto& b : ns) {
    std::vector<Rat> f(n, Rat(0));
    for (int p = 0; p < n; ++p)
      if (var[p] >= 0) f[p] = b[var[p]];
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim_grid(const Grid& g, const GridRep& v, const GridRep& w) {
  return (int)hom_basis_grid(g, v, w).size();
}

int euler_form_grid(const Grid& g, const GridRep& w, const GridRep& v) {
  int n = (int)g.samples.size();
  int total = 0;
  for (int p = 0; p < n; ++p) total += w.dims[p] * v.dims[p];
  for (int e = 0; e + 1 < n; ++e) {
    int u = g.arrow_left[e] ? e + 1 : e;
    int t = g.arrow_left[e] ? e : e + 1;
    total -= w.dims[u] * v.dims[t];
  }
  return total;
}

int ext_dim_grid(const Grid& g, const GridRep& w, const GridRep& v) {
  int ext = hom_dim_grid(g, w, v) - euler_form_grid(g, w, v);
  if (ext < 0) throw DomainError("NegativeExt", "grid is not faithful");
  return ext;
}

Interval random_interval(const Quiver& q, Rng& rng) {
  // endpoint pool: sinks/sources, points between and beyond them
  std::vector<Rat> pool;
  const auto& pts = q.points();
  pool.push_back(pts.front() - Rat(3, 2));
  pool.push_back(pts.front() - Rat(1, 2));
  for (size_t i = 0; i < pts.size(); ++i) {
    pool.push_back(pts[i]);
    if (i + 1 < pts.size()) {
      pool.push_back(midpoint(pts[i], pts[i + 1]));
      Rat third = pts[i] + (pts[i + 1] - pts[i]) / Rat(4);
      pool.push_back(third);
    }
  }
  pool.push_back(pts.back() + Rat(1, 2));
  pool.push_back(pts.back() + Rat(3, 2));
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  for (int attempt = 0; attempt < 64; ++attempt) {
    bool lo_inf = rng.chance(12);
    bool hi_inf = rng.chance(12);
    if (rng.chance(8)) {  // simple
      return make_simple(pool[rng.below(pool.size())]);
    }
    ExtReal lo = lo_inf ? ExtReal::neg_inf() : ExtReal(pool[rng.below(pool.size())]);
    ExtReal hi = hi_inf ? ExtReal::pos_inf() : ExtReal(pool[rng.below(pool.size())]);
    if (hi < lo) std::swap(lo, hi);
    bool lc = lo.is_finite() && rng.chance(50);
    bool hc = hi.is_finite() && rng.chance(50);
    if (lo == hi) {
      if (!lo.is_finite()) continue;
      return make_simple(lo.value);
    }
    return make_interval(lo, lc, hi, hc);
  }
  return make_simple(pool.front());
}

RandomInstance random_instance(std::uint64_t seed, int max_ss, int n_intervals) {
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x51ed270b0a5ff3d1ULL);
  int npts = 1 + (int)rng.below((std::uint64_t)max_ss);
  // distinct half-integer points
  std::vector<Rat> lattice;
  for (int i = -6; i <= 6; ++i) lattice.push_back(Rat(i, 1));
  for (int i = -6; i < 6; ++i) lattice.push_back(Rat(2 * i + 1, 2));
  std::sort(lattice.begin(), lattice.end());
  std::vector<Rat> pts;
  while ((int)pts.size() < npts) {
    Rat c = lattice[rng.below(lattice.size())];
    bool dup = false;
    for (const Rat& p : pts) dup = dup || p == c;
    if (!dup) pts.push_back(c);
  }
  std::sort(pts.begin(), pts.end());
  QuiverData d;
  d.points = pts;
  d.first_index_parity = rng.chance(50) ? Parity::Even : Parity::Odd;
  RandomInstance inst{Quiver::validate(std::move(d)), {}};
  for (int i = 0; i < n_intervals; ++i) inst.intervals.push_back(random_interval(inst.quiver, rng));
  return inst;
}

}  // namespace arq
