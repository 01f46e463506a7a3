// Command-line front end: homological algebra and strip geometry of
// continuous type-A quivers, with an exact brute-force cross-check.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "arquiver/errors.hpp"
#include "arquiver/svg.hpp"
#include "arquiver/verify.hpp"

namespace {

using namespace arq;

std::string format_position(Position p) { return std::to_string(static_cast<int>(p)); }

std::string reason_text(NoSequenceReason r) {
  switch (r) {
    case NoSequenceReason::Projective: return "projective";
    case NoSequenceReason::Injective: return "injective";
    case NoSequenceReason::Simple: return "simple";
    default: return "bar";
  }
}

std::string format_sequence(const ARSequence& s) {
  std::ostringstream os;
  os << "type (" << s.type_tag << "): " << format_interval(s.v1) << " >-> "
     << format_interval(s.v2) << " (+) " << format_interval(s.v3) << " ->> "
     << format_interval(s.v4);
  return os.str();
}

LambdaKey parse_lambda_key(const std::string& text) {
  LambdaKey key;
  std::string body = text;
  if (!body.empty() && (body.back() == '+' || body.back() == '-')) {
    key.sign = body.back() == '+' ? LambdaSign::Plus : LambdaSign::Minus;
    body.pop_back();
  } else {
    key.sign = LambdaSign::Undecorated;
  }
  key.base = ExtReal::parse(body);
  return key;
}

int run(int argc, char** argv) {
  CLI::App app{"AR-space calculator for continuous type-A quivers"};
  app.require_subcommand(1);

  std::string quiver_path, out_path;
  std::string arg_a, arg_b;

  auto add_quiver = [&](CLI::App* cmd) {
    cmd->add_option("quiver,--quiver", quiver_path, "quiver spec (json)")->required();
  };

  auto* c_validate = app.add_subcommand("validate", "check a quiver spec");
  add_quiver(c_validate);

  auto* c_gamma = app.add_subcommand("gamma", "strip coordinates of an object");
  add_quiver(c_gamma);
  c_gamma->add_option("object", arg_a, "interval, optionally @shift")->required();

  auto* c_hom = app.add_subcommand("hom", "dim Hom(A, B) with witness");
  add_quiver(c_hom);
  c_hom->add_option("a", arg_a, "source interval")->required();
  c_hom->add_option("b", arg_b, "target interval")->required();

  auto* c_ext = app.add_subcommand("ext", "dim Ext^1(W, V) with middle term");
  add_quiver(c_ext);
  c_ext->add_option("w", arg_a, "quotient interval")->required();
  c_ext->add_option("v", arg_b, "sub interval")->required();

  auto* c_arseq = app.add_subcommand("arseq", "almost split sequence through an object");
  add_quiver(c_arseq);
  c_arseq->add_option("interval", arg_a, "interval")->required();

  auto* c_triangle = app.add_subcommand("triangle", "distinguished triangle V -> U -> W ->");
  add_quiver(c_triangle);
  c_triangle->add_option("v", arg_a, "first corner (interval[@shift])")->required();
  c_triangle->add_option("w", arg_b, "last corner (interval[@shift])")->required();

  auto* c_metric = app.add_subcommand("metric", "generalized distance of two objects");
  add_quiver(c_metric);
  c_metric->add_option("a", arg_a, "interval")->required();
  c_metric->add_option("b", arg_b, "interval")->required();

  auto* c_verify = app.add_subcommand("verify", "cross-check against the grid oracle");
  VerifyOptions vopt;
  c_verify->add_option("--trials", vopt.trials, "random instances to run");
  c_verify->add_option("--seed", vopt.seed, "rng seed");
  c_verify->add_option("--max-ss", vopt.max_ss, "max finite sinks/sources")
      ->check(CLI::Range(1, 6));

  auto* c_plot = app.add_subcommand("plot", "render the strip as svg");
  add_quiver(c_plot);
  std::vector<std::string> marks, lambdas, regions, rects;
  auto collect = [](std::vector<std::string>& into) {
    return [&into](const std::string& s) { into.push_back(s); };
  };
  auto repeatable = [](CLI::Option* o) {
    o->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    return o;
  };
  repeatable(c_plot->add_option("--mark", "object to mark (interval[@shift])"))
      ->each(collect(marks));
  repeatable(c_plot->add_option("--lambda", "lambda key, e.g. 0.5 or 0- or 1+"))
      ->each(collect(lambdas));
  repeatable(c_plot->add_option("--region", "object whose hom cone to shade"))
      ->each(collect(regions));
  repeatable(c_plot->add_option("--rect", "V,W rectangle overlay"))->each(collect(rects));
  std::string win_lo_s, win_hi_s;
  c_plot->add_option("--window-lo", win_lo_s, "left edge of the x window");
  c_plot->add_option("--window-hi", win_hi_s, "right edge of the x window");
  c_plot->add_option("-o,--output", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (c_verify->parsed()) {
      bool ok = run_verify(vopt, std::cout);
      std::cout << (ok ? "verify: OK" : "verify: FAIL") << "\n";
      return ok ? 0 : 1;
    }

    Quiver q = Quiver::from_json_file(quiver_path);

    if (c_validate->parsed()) {
      std::cout << "valid\n" << q.describe() << "\n";
      return 0;
    }
    if (c_gamma->parsed()) {
      DObject X = parse_dobject(arg_a);
      StripPoint p = gamma_b(q, X);
      char buf[96];
      std::snprintf(buf, sizeof(buf), "(%.6f, %.6f)", p.x, p.y);
      std::cout << buf << "\nposition " << format_position(derived_position(q, X)) << "\n";
      return 0;
    }
    if (c_hom->parsed()) {
      HomResult h = hom_dim(q, parse_interval(arg_a), parse_interval(arg_b));
      std::cout << h.dim << "\n";
      if (h.witness) std::cout << "witness " << format_interval(*h.witness) << "\n";
      return 0;
    }
    if (c_ext->parsed()) {
      ExtResult e = ext_with_middle(q, parse_interval(arg_a), parse_interval(arg_b));
      std::cout << e.dim << "\n";
      if (e.middle) {
        if (e.middle->kind == MiddleTerm::Kind::Indec)
          std::cout << "middle " << format_interval(e.middle->first) << "\n";
        else
          std::cout << "middle " << format_interval(e.middle->first) << " (+) "
                    << format_interval(e.middle->second) << "\n";
      }
      return 0;
    }
    if (c_arseq->parsed()) {
      ARQuery ar = ar_sequence(q, parse_interval(arg_a));
      if (ar.sequence)
        std::cout << format_sequence(*ar.sequence) << "\n";
      else
        std::cout << "none (" << reason_text(*ar.reason) << ")\n";
      return 0;
    }
    if (c_triangle->parsed()) {
      TriangleResult t = triangle(q, parse_dobject(arg_a), parse_dobject(arg_b));
      switch (t.kind) {
        case TriangleResult::Kind::None:
          std::cout << "none\n";
          break;
        case TriangleResult::Kind::Complete:
          std::cout << "complete: " << format_dobject(t.corners[0]) << " -> "
                    << format_dobject(t.corners[1]) << " (+) " << format_dobject(t.corners[2])
                    << " -> " << format_dobject(t.corners[3]) << " ->\n";
          break;
        case TriangleResult::Kind::AlmostComplete:
          std::cout << "almost-complete: " << format_dobject(t.corners[0]) << " -> "
                    << format_dobject(t.corners[1]) << " -> " << format_dobject(t.corners[2])
                    << " ->\nphantom " << format_dobject(*t.phantom) << "\n";
          break;
      }
      return 0;
    }
    if (c_metric->parsed()) {
      GenDist d = metric_d(q, parse_interval(arg_a), parse_interval(arg_b));
      char buf[64];
      if (d.r == 0.0)
        std::snprintf(buf, sizeof(buf), "(0, %d)", d.z);
      else
        std::snprintf(buf, sizeof(buf), "(%.6f, %d)", d.r, d.z);
      std::cout << buf << "\n";
      return 0;
    }
    if (c_plot->parsed()) {
      Scene scene;
      scene.quiver = &q;
      for (const auto& s : marks) scene.marks.push_back({parse_dobject(s), ""});
      for (const auto& s : lambdas) scene.lambda_graphs.push_back(parse_lambda_key(s));
      for (const auto& s : regions) scene.hom_regions.push_back(parse_dobject(s));
      for (const auto& s : rects) {
        size_t depth = 0, split = std::string::npos;
        for (size_t i = 0; i < s.size(); ++i) {
          char c = s[i];
          if (c == '[' || c == '(' || c == '{') ++depth;
          if (c == ']' || c == ')' || c == '}') --depth;
          if (c == ',' && depth == 0) split = i;
        }
        if (split == std::string::npos)
          throw DomainError("SyntaxError", "--rect wants V,W: " + s);
        scene.rects.push_back(
            {parse_dobject(s.substr(0, split)), parse_dobject(s.substr(split + 1))});
      }
      if (!win_lo_s.empty() && !win_hi_s.empty()) {
        scene.window_lo = std::stod(win_lo_s);
        scene.window_hi = std::stod(win_hi_s);
      }
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw DomainError("SyntaxError", "cannot open " + out_path);
      out << render_svg(scene);
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "error " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
