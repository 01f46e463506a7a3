#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "arquiver/errors.hpp"
#include "arquiver/svg.hpp"
#include "arquiver/verify.hpp"

namespace py = pybind11;
using namespace arq;

namespace {

Quiver make_quiver(const std::vector<std::string>& points, const std::string& parity) {
  QuiverData d;
  for (const auto& p : points) d.points.push_back(Rat::parse(p));
  if (parity == "even")
    d.first_index_parity = Parity::Even;
  else if (parity == "odd")
    d.first_index_parity = Parity::Odd;
  else
    throw DomainError("SyntaxError", "parity must be 'even' or 'odd'");
  return Quiver::validate(std::move(d));
}

py::object ar_sequence_py(const Quiver& q, const std::string& interval) {
  ARQuery ar = ar_sequence(q, parse_interval(interval));
  if (!ar.sequence) {
    const char* reason = "";
    switch (*ar.reason) {
      case NoSequenceReason::Projective: reason = "projective"; break;
      case NoSequenceReason::Injective: reason = "injective"; break;
      case NoSequenceReason::Simple: reason = "simple"; break;
      case NoSequenceReason::Bar: reason = "bar"; break;
    }
    py::dict d;
    d["type"] = py::none();
    d["reason"] = reason;
    return d;
  }
  py::dict d;
  d["type"] = ar.sequence->type_tag;
  d["terms"] = py::make_tuple(format_interval(ar.sequence->v1), format_interval(ar.sequence->v2),
                              format_interval(ar.sequence->v3), format_interval(ar.sequence->v4));
  return d;
}

py::object triangle_py(const Quiver& q, const std::string& v, const std::string& w) {
  TriangleResult t = triangle(q, parse_dobject(v), parse_dobject(w));
  py::dict d;
  switch (t.kind) {
    case TriangleResult::Kind::None: d["kind"] = "none"; break;
    case TriangleResult::Kind::Complete: d["kind"] = "complete"; break;
    case TriangleResult::Kind::AlmostComplete: d["kind"] = "almost-complete"; break;
  }
  py::list corners;
  for (const DObject& c : t.corners) corners.append(format_dobject(c));
  d["corners"] = corners;
  d["phantom"] = t.phantom ? py::object(py::str(format_dobject(*t.phantom))) : py::none();
  return d;
}

py::object ext_py(const Quiver& q, const std::string& w, const std::string& v) {
  ExtResult e = ext_with_middle(q, parse_interval(w), parse_interval(v));
  py::dict d;
  d["dim"] = e.dim;
  if (!e.middle) {
    d["middle"] = py::none();
  } else if (e.middle->kind == MiddleTerm::Kind::Indec) {
    d["middle"] = py::make_tuple(format_interval(e.middle->first));
  } else {
    d["middle"] =
        py::make_tuple(format_interval(e.middle->first), format_interval(e.middle->second));
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Homological algebra and strip geometry of continuous type-A quivers";

  py::register_exception<DomainError>(m, "DomainError");

  py::class_<Quiver>(m, "Quiver")
      .def(py::init(&make_quiver), py::arg("points"), py::arg("parity") = "even")
      .def_static("from_json", &Quiver::from_json_text, py::arg("text"))
      .def_static("from_file", &Quiver::from_json_file, py::arg("path"))
      .def("describe", &Quiver::describe)
      .def("precedes",
           [](const Quiver& q, const std::string& x, const std::string& y) {
             return q.precedes(ExtReal::parse(x), ExtReal::parse(y));
           })
      .def("local_direction", [](const Quiver& q, const std::string& a) {
        return q.local_direction(ExtReal::parse(a)) == Direction::Ascending ? "ascending"
                                                                            : "descending";
      });

  m.def("parse_interval",
        [](const std::string& s) { return format_interval(parse_interval(s)); },
        "canonical form of an interval literal");
  m.def("classify", [](const Quiver& q, const std::string& i) {
    Classification c = classify(q, parse_interval(i));
    py::dict d;
    d["projective"] = c.projective;
    d["injective"] = c.injective;
    d["simple"] = c.simple;
    d["bar"] = c.bar;
    return d;
  });
  m.def("hom", [](const Quiver& q, const std::string& a, const std::string& b) {
    HomResult h = hom_dim(q, parse_interval(a), parse_interval(b));
    return py::make_tuple(h.dim,
                          h.witness ? py::object(py::str(format_interval(*h.witness)))
                                    : py::none());
  });
  m.def("ext", &ext_py, py::arg("quiver"), py::arg("w"), py::arg("v"),
        "dim Ext^1(W, V) with middle term");
  m.def("ar_sequence", &ar_sequence_py);
  m.def("gamma", [](const Quiver& q, const std::string& obj) {
    StripPoint p = gamma_b(q, parse_dobject(obj));
    return py::make_tuple(p.x, p.y);
  });
  m.def("position", [](const Quiver& q, const std::string& obj) {
    return static_cast<int>(derived_position(q, parse_dobject(obj)));
  });
  m.def("metric", [](const Quiver& q, const std::string& a, const std::string& b) {
    GenDist d = metric_d(q, parse_interval(a), parse_interval(b));
    return py::make_tuple(d.r, d.z);
  });
  m.def("triangle", &triangle_py, py::arg("quiver"), py::arg("v"), py::arg("w"));
  m.def("render_strip", [](const Quiver& q, const std::vector<std::string>& marks) {
    Scene scene;
    scene.quiver = &q;
    for (const auto& s : marks) scene.marks.push_back({parse_dobject(s), ""});
    return render_svg(scene);
  });
  m.def(
      "verify",
      [](int trials, std::uint64_t seed, int max_ss) {
        std::ostringstream os;
        bool ok = run_verify(VerifyOptions{trials, seed, max_ss}, os);
        return py::make_tuple(ok, os.str());
      },
      py::arg("trials") = 100, py::arg("seed") = 7, py::arg("max_ss") = 4);
}
