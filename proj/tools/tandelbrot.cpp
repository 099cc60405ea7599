// Command-line front end: rendering, analysis and the HTTP explorer.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tandel/colorize.hpp"
#include "tandel/error.hpp"
#include "tandel/explorer_service.hpp"
#include "tandel/param_analysis.hpp"
#include "tandel/rational_approx.hpp"
#include "tandel/render.hpp"
#include "tandel/report_json.hpp"

using namespace tandel;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<cplx> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) return std::nullopt;
      return cplx(re, 0.0);
    }
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) return std::nullopt;
    const double im = std::stod(b, &used);
    if (used != b.size()) return std::nullopt;
    return cplx(re, im);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

cplx require_complex(const std::string& flag, const std::string& text) {
  if (auto z = parse_complex(text)) return *z;
  throw UsageError(flag + ": expected RE,IM but got '" + text + "'");
}

struct ViewOpts {
  std::string center = "0,0";
  double width = 1.0;
  std::uint32_t px = 512;
  std::uint32_t py = 0;
  long max_iter = 5000;
  std::string out;
  std::string format;

  Viewport viewport() const {
    if (!(width > 0.0)) throw UsageError("--width: must be positive");
    if (px == 0) throw UsageError("--px: must be positive");
    return {require_complex("--center", center), width, px, py == 0 ? px : py};
  }
  IterationSettings settings() const {
    if (max_iter < 1) throw UsageError("--max-iter: must be positive");
    IterationSettings s = IterationSettings::rendering();
    s.max_iter = max_iter;
    return s;
  }
};

void add_view_flags(CLI::App* cmd, ViewOpts& v) {
  cmd->add_option("--center", v.center, "viewport center RE,IM");
  cmd->add_option("--width", v.width, "viewport width");
  cmd->add_option("--px", v.px, "horizontal pixels");
  cmd->add_option("--py", v.py, "vertical pixels (default: px)");
  cmd->add_option("--max-iter", v.max_iter, "iteration budget");
  cmd->add_option("--out", v.out, "output path")->required();
  cmd->add_option("--format", v.format, "png | ppm | tile (default from --out extension)")
      ->check(CLI::IsMember({"png", "ppm", "tile"}));
}

void write_grid(const TileGrid& grid, const ViewOpts& v) {
  std::string format = v.format;
  if (format.empty()) {
    if (v.out.ends_with(".ppm")) format = "ppm";
    else if (v.out.ends_with(".tile") || v.out.ends_with(".bin")) format = "tile";
    else format = "png";
  }
  if (format == "tile") write_file(v.out, encode_tile(grid));
  else if (format == "ppm") write_file(v.out, encode_ppm(colorize(grid)));
  else write_file(v.out, encode_png(colorize(grid)));
}

void print_complex_json(cplx z) { std::cout << to_json(z).dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamics and parameter space of the generalized tangent family"};
  app.require_subcommand(1);

  ViewOpts view;
  std::string family = "tangent";
  std::string alpha_text;
  std::string a_text;
  int n = 0;
  std::optional<int> k;
  std::optional<double> delta;
  int port = 8080;
  std::string static_dir;

  auto* render_param = app.add_subcommand("render-param", "render a parameter plane");
  add_view_flags(render_param, view);
  render_param->add_option("--family", family)->check(CLI::IsMember({"tangent", "newton", "an_mask"}));
  render_param->add_option("--n", n, "A_n depth (an_mask)");
  render_param->add_option("--k", k, "rational approximant degree (an_mask)");
  render_param->add_option("--delta", delta, "bound 1/delta on iterates (an_mask)");

  auto* render_dyn = app.add_subcommand("render-dyn", "render a dynamical plane");
  add_view_flags(render_dyn, view);
  render_dyn->add_option("--family", family)->check(CLI::IsMember({"tangent", "newton"}));
  render_dyn->add_option("--alpha", alpha_text, "tangent parameter RE,IM");
  render_dyn->add_option("--a", a_text, "Newton parameter RE,IM");

  auto* analyze = app.add_subcommand("analyze", "print the JSON report for a parameter");
  analyze->add_option("--alpha", alpha_text, "parameter RE,IM")->required();
  long analyze_iter = IterationSettings::analysis().max_iter;
  analyze->add_option("--max-iter", analyze_iter);

  auto* constants = app.add_subcommand("constants", "print p*, t and C of the basin model");

  auto* symmetry = app.add_subcommand("symmetry-params", "list symmetric parameters in a box");
  std::string box_center = "-0.015,0";
  double box_width = 0.01;
  symmetry->add_option("--center", box_center, "box center RE,IM");
  symmetry->add_option("--width", box_width, "box side length");

  auto* virtual_cycle = app.add_subcommand("virtual-cycle", "solve for a virtual-cycle parameter");
  virtual_cycle->add_option("--n", n, "cycle length")->required();
  virtual_cycle->add_option("--alpha", alpha_text, "initial guess RE,IM")->required();

  auto* an_mask = app.add_subcommand("an-mask", "emit an A_n or A_{n,k} mask");
  add_view_flags(an_mask, view);
  an_mask->add_option("--n", n, "depth")->required();
  an_mask->add_option("--k", k, "rational approximant degree");
  an_mask->add_option("--delta", delta, "bound 1/delta on iterates");

  auto* approx = app.add_subcommand("approx-report", "rational approximation error versus k");
  approx->add_option("--k", k, "single degree (default: 2^4 .. 2^13)");

  auto* serve = app.add_subcommand("serve", "run the HTTP explorer");
  serve->add_option("--port", port);
  serve->add_option("--static-dir", static_dir, "directory with the UI assets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (render_param->parsed()) {
      ParamFamily fam = ParamFamily::tangent();
      if (family == "newton") fam = ParamFamily::newton();
      if (family == "an_mask") fam = ParamFamily::an_mask(n, k, delta);
      write_grid(render_parameter_plane(fam, view.viewport(), view.settings()), view);
    } else if (render_dyn->parsed()) {
      TileGrid grid;
      if (family == "tangent") {
        if (alpha_text.empty()) throw UsageError("--alpha: required for the tangent family");
        grid = render_dynamical_plane(TangentParam(require_complex("--alpha", alpha_text)), view.viewport(),
                                      view.settings());
      } else {
        if (a_text.empty()) throw UsageError("--a: required for the newton family");
        grid = render_dynamical_plane(NewtonParam(require_complex("--a", a_text)), view.viewport(), view.settings());
      }
      write_grid(grid, view);
    } else if (analyze->parsed()) {
      IterationSettings s = IterationSettings::analysis();
      s.max_iter = analyze_iter;
      const cplx alpha = require_complex("--alpha", alpha_text);
      if (std::abs(alpha) >= 1.0) throw Error(ErrorCode::ParamOutsideDisk, "analysis needs |alpha| < 1");
      std::cout << to_json(analyze_parameter(alpha, s)).dump(2) << '\n';
    } else if (constants->parsed()) {
      const ModelConstants& c = model_constants();
      std::printf("p_star %.17g\nt %.17g\nC %.17g\nresidual %.3g\n", c.p_star, c.t, c.C,
                  pstar_objective(c.p_star) - 0.125);
    } else if (symmetry->parsed()) {
      const cplx c = require_complex("--center", box_center);
      const double h = 0.5 * box_width;
      ordered_json roots = ordered_json::array();
      for (const cplx r : find_symmetry_parameters({c.real() - h, c.real() + h, c.imag() - h, c.imag() + h}))
        roots.push_back(to_json(r));
      std::cout << roots.dump(2) << '\n';
    } else if (virtual_cycle->parsed()) {
      print_complex_json(solve_virtual_cycle(n, require_complex("--alpha", alpha_text), IterationSettings::analysis()));
    } else if (an_mask->parsed()) {
      write_grid(render_parameter_plane(ParamFamily::an_mask(n, k, delta), view.viewport(), view.settings()), view);
    } else if (approx->parsed()) {
      const auto alphas = disk_samples(0.0, 0.5, 12, 32);
      const auto zs = disk_samples(0.0, 2.0, 12, 32);
      std::printf("%8s  %-12s\n", "k", "sup_error");
      if (k) {
        std::printf("%8d  %.6e\n", *k, approximation_error(alphas, *k, zs));
      } else {
        for (int j = 4; j <= 13; ++j) std::printf("%8d  %.6e\n", 1 << j, approximation_error(alphas, 1 << j, zs));
      }
    } else if (serve->parsed()) {
      ServiceOptions opts;
      opts.static_dir = static_dir;
      ExplorerService service(opts);
      std::cerr << "serving on http://0.0.0.0:" << port << "\n";
      if (!service.serve("0.0.0.0", port)) {
        std::cerr << "error: cannot listen on port " << port << "\n";
        return 1;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
