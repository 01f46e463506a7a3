#include "arquiver/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "arquiver/errors.hpp"

namespace arq {

namespace {

std::string num(double v) {
  char buf[64];
  if (std::abs(v) < 5e-7) v = 0.0;  // avoid "-0.000000"
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Mapper {
  double x0, scale, height_margin;
  double px(double x) const { return (x - x0) * scale + 40.0; }
  double py(double y) const { return (kHalfPi - y) * scale + 30.0; }
};

void polyline(std::ostringstream& os, const Mapper& m, const std::vector<StripPoint>& pts,
              const std::string& attrs) {
  os << "<polyline points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ' ';
    os << num(m.px(pts[i].x)) << ',' << num(m.py(pts[i].y));
  }
  os << "\" fill=\"none\" " << attrs << "/>\n";
}

// Piecewise-linear trace of a tent function over [lo, hi].
std::vector<StripPoint> tent_trace(double kappa, double lo, double hi) {
  std::vector<StripPoint> pts;
  double first_break = kappa + kPi * std::floor((lo - kappa) / kPi);
  pts.push_back({lo, lambda_tent(lo - kappa)});
  for (double b = first_break + kPi; b < hi; b += kPi)
    if (b > lo) pts.push_back({b, lambda_tent(b - kappa)});
  pts.push_back({hi, lambda_tent(hi - kappa)});
  return pts;
}

}  // namespace

std::string render_svg(const Scene& scene) {
  if (!scene.quiver) throw DomainError("EmptyInterval", "scene without a quiver");
  const Quiver& q = *scene.quiver;

  double lo = scene.window_lo, hi = scene.window_hi;
  if (!(lo < hi)) {
    lo = q.anchor(q.lo_index()).x;
    hi = q.anchor(q.lo_index()).x;
    for (int n = q.lo_index(); n <= q.hi_index(); ++n) {
      lo = std::min(lo, q.anchor(n).x);
      hi = std::max(hi, q.anchor(n).x);
    }
    hi += kPi;  // keep the injective line visible
    for (const auto& mk : scene.marks) {
      StripPoint p = gamma_b(q, mk.object);
      lo = std::min(lo, p.x);
      hi = std::max(hi, p.x);
    }
    for (const auto& r : scene.rects) {
      lo = std::min(lo, gamma_b(q, r.left).x);
      hi = std::max(hi, gamma_b(q, r.right).x + kPi);
    }
    lo -= 0.5;
    hi += 0.5;
  }

  Mapper m{lo, 120.0, 0.0};
  double width = m.px(hi) + 40.0, height = m.py(-kHalfPi) + 30.0;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  os << "<rect x=\"" << num(m.px(lo)) << "\" y=\"" << num(m.py(kHalfPi)) << "\" width=\""
     << num(m.px(hi) - m.px(lo)) << "\" height=\"" << num(m.py(-kHalfPi) - m.py(kHalfPi))
     << "\" fill=\"white\" stroke=\"black\"/>\n";

  // projective and injective lines
  std::vector<StripPoint> proj, inj;
  for (int n = q.lo_index(); n <= q.hi_index(); ++n) {
    StripPoint a = q.anchor(n);
    proj.push_back(a);
    inj.push_back({a.x + kPi, -a.y});
  }
  polyline(os, m, proj, "stroke=\"#666666\" stroke-width=\"1\"");
  polyline(os, m, inj, "stroke=\"#bbbbbb\" stroke-width=\"1\"");

  for (const LambdaKey& key : scene.lambda_graphs) {
    double kappa = kappa_of(q, key.base, key.sign);
    polyline(os, m, tent_trace(kappa, lo, hi),
             "stroke=\"#3366cc\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
  }

  for (const DObject& V : scene.hom_regions) {
    StripPoint p = gamma_b(q, V);
    std::vector<StripPoint> diamond = {
        p,
        {p.x + (kHalfPi - p.y), kHalfPi},
        {p.x + kPi, -p.y},
        {p.x + (kHalfPi + p.y), -kHalfPi},
    };
    os << "<polygon points=\"";
    for (size_t i = 0; i < diamond.size(); ++i) {
      if (i) os << ' ';
      os << num(m.px(diamond[i].x)) << ',' << num(m.py(diamond[i].y));
    }
    os << "\" fill=\"#ddeeff\" fill-opacity=\"0.6\" stroke=\"#3366cc\"/>\n";
  }

  for (const auto& r : scene.rects) {
    TriangleResult tri = triangle(q, r.left, r.right);
    std::vector<StripPoint> pts;
    for (const DObject& c : tri.corners) pts.push_back(gamma_b(q, c));
    if (tri.phantom) pts.push_back(gamma_b(q, *tri.phantom));
    if (pts.size() == 4) {
      // order around the rectangle: left, top, right, bottom
      std::vector<int> idx = {0, 1, 2, 3};
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a].x < pts[b].x; });
      int left = idx[0], right = idx[3];
      int top = pts[idx[1]].y > pts[idx[2]].y ? idx[1] : idx[2];
      int bot = top == idx[1] ? idx[2] : idx[1];
      int order[4] = {left, top, right, bot};
      for (int e = 0; e < 4; ++e) {
        StripPoint a = pts[order[e]], b = pts[order[(e + 1) % 4]];
        os << "<line x1=\"" << num(m.px(a.x)) << "\" y1=\"" << num(m.py(a.y)) << "\" x2=\""
           << num(m.px(b.x)) << "\" y2=\"" << num(m.py(b.y))
           << "\" stroke=\"#cc3333\" stroke-width=\"1\"/>\n";
      }
    }
    for (size_t i = 0; i < pts.size(); ++i) {
      bool is_phantom = tri.phantom && i + 1 == pts.size();
      os << "<circle cx=\"" << num(m.px(pts[i].x)) << "\" cy=\"" << num(m.py(pts[i].y))
         << "\" r=\"4\" fill=\"" << (is_phantom ? "white" : "#cc3333")
         << "\" stroke=\"#cc3333\"/>\n";
    }
  }

  for (const auto& mk : scene.marks) {
    StripPoint p = gamma_b(q, mk.object);
    Position pos = derived_position(q, mk.object);
    os << "<circle cx=\"" << num(m.px(p.x)) << "\" cy=\"" << num(m.py(p.y))
       << "\" r=\"3\" fill=\"black\"/>\n";
    os << "<text x=\"" << num(m.px(p.x) + 6.0) << "\" y=\"" << num(m.py(p.y) - 6.0)
       << "\" font-size=\"11\">" << (mk.label.empty() ? format_dobject(mk.object) : mk.label)
       << " [" << static_cast<int>(pos) << "]</text>\n";
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace arq
