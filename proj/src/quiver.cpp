#include "arquiver/quiver.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "arquiver/errors.hpp"
#include "json.hpp"

namespace arq {

Quiver Quiver::validate(QuiverData data) {
  if (data.points.empty())
    throw DomainError("EmptyIndexSet", "a quiver needs at least one finite sink or source");
  for (size_t i = 0; i + 1 < data.points.size(); ++i)
    if (!(data.points[i] < data.points[i + 1]))
      throw DomainError("UnsortedPoints", "points must be strictly increasing");
  Quiver q;
  q.points_ = std::move(data.points);
  q.parity_ = data.first_index_parity;
  q.first_index_ = (q.parity_ == Parity::Even) ? 0 : -1;
  q.build_anchors();
  return q;
}

ExtReal Quiver::indexed_value(int n) const {
  if (n == lo_index()) return ExtReal::neg_inf();
  if (n == hi_index()) return ExtReal::pos_inf();
  int j = n - first_index_;
  if (j < 0 || j >= (int)points_.size())
    throw DomainError("PointIsIndexed", "index out of range");
  return ExtReal(points_[j]);
}

bool Quiver::is_indexed(const ExtReal& v) const {
  if (!v.is_finite()) return true;
  for (const Rat& p : points_)
    if (ExtReal(p) == v) return true;
  return false;
}

int Quiver::index_of(const ExtReal& v) const {
  if (v.is_neg_inf()) return lo_index();
  if (v.is_pos_inf()) return hi_index();
  for (size_t j = 0; j < points_.size(); ++j)
    if (ExtReal(points_[j]) == v) return first_index_ + (int)j;
  throw DomainError("PointIsIndexed", "value is not a sink or source");
}

bool Quiver::precedes(const ExtReal& x, const ExtReal& y) const {
  if (x == y) return true;
  // Comparable pairs live in a single closed window between consecutive
  // indexed elements; the window's sink end is minimal.
  for (int n = lo_index(); n < hi_index(); ++n) {
    ExtReal lo = indexed_value(n), hi = indexed_value(n + 1);
    if (!(lo <= x && x <= hi && lo <= y && y <= hi)) continue;
    if (window_direction(n) == Direction::Ascending) {
      if (y <= x) return true;
    } else {
      if (y >= x) return true;
    }
  }
  return false;
}

Direction Quiver::local_direction(const ExtReal& a) const {
  if (!a.is_finite()) throw DomainError("PointInfinite", "direction is defined on R only");
  if (in_s(a)) throw DomainError("PointIsSinkOrSource", a.str() + " is a sink or source");
  auto [n, n1] = enclosing(a);
  (void)n1;
  return window_direction(n);
}

std::pair<int, int> Quiver::enclosing(const ExtReal& a) const {
  if (is_indexed(a)) throw DomainError("PointIsIndexed", a.str() + " is indexed");
  for (int n = lo_index(); n < hi_index(); ++n)
    if (indexed_value(n) < a && a < indexed_value(n + 1)) return {n, n + 1};
  throw DomainError("PointIsIndexed", "no enclosing window");  // unreachable
}

void Quiver::build_anchors() {
  int lo = lo_index(), hi = hi_index();
  anchors_.assign(hi - lo + 1, StripPoint{});
  auto at = [&](int n) -> StripPoint& { return anchors_[n - lo]; };
  auto arc = [&](int n) { return std::atan(indexed_value(n).to_double()); };
  at(0) = StripPoint{0.0, arc(0)};
  for (int n = 1; n <= hi; ++n) {
    double step = arc(n) - arc(n - 1);
    double sign = (n % 2 == 1) ? 1.0 : -1.0;  // alternating partial sums
    at(n) = StripPoint{at(n - 1).x + sign * step, arc(n)};
  }
  for (int n = -1; n >= lo; --n) {
    double step = arc(n) - arc(n + 1);
    double sign = ((-n) % 2 == 1) ? -1.0 : 1.0;
    at(n) = StripPoint{at(n + 1).x + sign * step, arc(n)};
  }
}

StripPoint Quiver::anchor(int n) const {
  if (n < lo_index() || n > hi_index()) throw DomainError("PointIsIndexed", "index out of range");
  return anchors_[n - lo_index()];
}

StripPoint Quiver::projective_point(const ExtReal& a) const {
  if (is_indexed(a)) return anchor(index_of(a));
  auto [n, n1] = enclosing(a);
  StripPoint p = anchor(n), q = anchor(n1);
  double ya = std::atan(a.to_double());
  double t = (ya - p.y) / (q.y - p.y);
  return StripPoint{p.x + t * (q.x - p.x), ya};
}

std::string Quiver::describe() const {
  std::ostringstream os;
  os << "indexed elements:";
  for (int n = lo_index(); n <= hi_index(); ++n) {
    os << " s_" << n << "=" << indexed_value(n).str()
       << (is_sink_index(n) ? " (sink)" : " (source)");
  }
  return os.str();
}

Quiver Quiver::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw DomainError("SyntaxError", std::string("bad quiver json: ") + e.what());
  }
  QuiverData d;
  if (!j.contains("points") || !j["points"].is_array())
    throw DomainError("SyntaxError", "quiver json needs a \"points\" array");
  for (const auto& p : j["points"]) {
    try {
      if (p.is_string())
        d.points.push_back(Rat::parse(p.get<std::string>()));
      else if (p.is_number_integer())
        d.points.push_back(Rat(p.get<std::int64_t>()));
      else
        throw std::invalid_argument("points must be rational strings or integers");
    } catch (const std::exception& e) {
      throw DomainError("SyntaxError", std::string("bad point: ") + e.what());
    }
  }
  std::string par = j.value("first_index_parity", std::string("even"));
  if (par == "even" || par == "Even")
    d.first_index_parity = Parity::Even;
  else if (par == "odd" || par == "Odd")
    d.first_index_parity = Parity::Odd;
  else
    throw DomainError("SyntaxError", "first_index_parity must be \"even\" or \"odd\"");
  return validate(std::move(d));
}

Quiver Quiver::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("SyntaxError", "cannot open quiver file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

}  // namespace arq
