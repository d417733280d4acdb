#include "fockradial/cli.hpp"

#include "fockradial/fock.hpp"
#include "fockradial/grid.hpp"
#include "fockradial/io.hpp"
#include "fockradial/parallel.hpp"
#include "fockradial/radial.hpp"
#include "fockradial/rng.hpp"
#include "fockradial/stft.hpp"
#include "fockradial/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdint>
#include <ostream>
#include <sstream>

namespace fockradial::cli {

namespace {

struct RunConfig {
  std::string preset;
  std::string in;
  std::string out;
  std::size_t dim = 1;
  int degree = -1;
  std::size_t quad_order = 0;
  double tol = kDefaultRadialTol;
  std::vector<std::string> grids;
  std::string path = "series";
  std::uint64_t seed = 0;
  std::vector<std::string> checks;
};

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text)
{
  if (cfg.out.empty() || cfg.out == "-")
    out << text << '\n';
  else
    io::write_text_file(cfg.out, text);
}

std::string num(double v)
{
  return fmt::format("{:.17g}", v);
}

HermiteExpansion random_radial(Rng& rng, std::size_t dim, unsigned K)
{
  RadialProfile p{dim, {}};
  for (unsigned k = 0; k <= K; ++k) p.c.emplace_back(rng.normal(), rng.normal());
  return synth_radial(p, dim);
}

HermiteExpansion random_general(Rng& rng, std::size_t dim, unsigned degree)
{
  CoefficientMap::Terms terms;
  for (const auto& alpha : enumerate_multi_indices(dim, degree)) terms[alpha] = Complex(rng.normal(), rng.normal());
  return HermiteExpansion(dim, std::move(terms));
}

int cmd_synth(const RunConfig& cfg, std::ostream& out)
{
  const std::string& p = cfg.preset;
  Rng rng(cfg.seed);
  HermiteExpansion f = HermiteExpansion::zero(cfg.dim);
  if (p == "h0") {
    f = preset_h0(cfg.dim);
  } else if (p == "h2-shell") {
    f = preset_h2_shell(cfg.dim);
  } else if (p.rfind("gaussian:", 0) == 0) {
    double a = 0.0;
    try {
      a = std::stod(p.substr(9));
    } catch (const std::exception&) {
      throw ArgumentError("malformed gaussian preset '" + p + "'");
    }
    f = synth_gaussian(a, cfg.dim, static_cast<unsigned>(cfg.degree < 0 ? 40 : cfg.degree) / 2);
  } else if (p.rfind("profile:", 0) == 0) {
    const auto profile = io::radial_profile_from_json(io::read_json_file(p.substr(8)));
    f = synth_radial(profile, cfg.dim);
  } else if (p == "random-radial") {
    f = random_radial(rng, cfg.dim, static_cast<unsigned>(cfg.degree < 0 ? 6 : cfg.degree) / 2);
  } else if (p == "random") {
    f = random_general(rng, cfg.dim, static_cast<unsigned>(cfg.degree < 0 ? 6 : cfg.degree));
  } else {
    throw ArgumentError("unknown preset '" + p + "'");
  }
  emit(cfg, out, io::to_json(f).dump(2));
  return kSuccess;
}

std::vector<GridSpec> parse_grids(const RunConfig& cfg, std::size_t axes)
{
  if (cfg.grids.empty()) throw ArgumentError("at least one --grid is required");
  std::vector<GridSpec> specs;
  for (const auto& g : cfg.grids) specs.push_back(GridSpec::parse(g));
  if (specs.size() == 1) specs.assign(axes, specs.front());
  if (specs.size() != axes)
    throw ArgumentError(fmt::format("expected 1 or {} --grid axes, got {}", axes, specs.size()));
  return specs;
}

int cmd_transform(const RunConfig& cfg, std::ostream& out)
{
  const auto input = io::read_json_file(cfg.in);
  if (cfg.path != "series" && cfg.path != "kernel") throw ArgumentError("--path must be kernel or series");

  std::optional<FockSeries> series;
  std::optional<SampledFunction> samples;
  std::size_t dim = 0;
  if (io::is_sampled_function(input)) {
    if (cfg.path == "series") throw ArgumentError("sampled input supports only --path kernel");
    samples = io::sampled_function_from_json(input);
    dim = samples->dim();
  } else {
    const auto f = io::hermite_expansion_from_json(input);
    dim = f.dim();
    if (cfg.path == "series")
      series = bargmann_of_expansion(f);
    else
      samples = SampledFunction::from_expansion(f, cfg.quad_order ? cfg.quad_order : std::max<std::size_t>(32, f.degree() + 16));
  }

  // Axes alternate Re z_j, Im z_j.
  const auto points = grid_points(parse_grids(cfg, 2 * dim));
  const auto values = parallel_map<Complex>(points.size(), [&](std::size_t i) {
    ComplexPoint z(dim);
    for (std::size_t j = 0; j < dim; ++j) z[j] = Complex(points[i][2 * j], points[i][2 * j + 1]);
    return series ? eval_fock_series(*series, z) : bargmann_of_samples(*samples, z);
  });

  std::ostringstream csv;
  for (std::size_t j = 0; j < dim; ++j) csv << fmt::format("z{0}_re,z{0}_im,", j + 1);
  csv << "re,im";
  for (std::size_t i = 0; i < points.size(); ++i) {
    csv << '\n';
    for (double v : points[i]) csv << num(v) << ',';
    csv << num(values[i].real()) << ',' << num(values[i].imag());
  }
  emit(cfg, out, csv.str());
  return kSuccess;
}

int cmd_stft(const RunConfig& cfg, std::ostream& out)
{
  const auto input = io::read_json_file(cfg.in);
  std::optional<HermiteExpansion> f;
  std::optional<SampledFunction> samples;
  std::size_t dim = 0;
  if (io::is_sampled_function(input)) {
    samples = io::sampled_function_from_json(input);
    dim = samples->dim();
  } else {
    f = io::hermite_expansion_from_json(input);
    dim = f->dim();
  }
  // Axes: x_1..x_d, then xi_1..xi_d.
  const auto points = grid_points(parse_grids(cfg, 2 * dim));
  const auto values = parallel_map<Complex>(points.size(), [&](std::size_t i) {
    const PhasePoint p(RealPoint(points[i].begin(), points[i].begin() + dim),
                       RealPoint(points[i].begin() + dim, points[i].end()));
    return f ? stft_gaussian(*f, p, cfg.quad_order) : stft_gaussian(*samples, p);
  });

  std::ostringstream csv;
  for (std::size_t j = 0; j < dim; ++j) csv << fmt::format("x{},", j + 1);
  for (std::size_t j = 0; j < dim; ++j) csv << fmt::format("xi{},", j + 1);
  csv << "re,im,abs";
  for (std::size_t i = 0; i < points.size(); ++i) {
    csv << '\n';
    for (double v : points[i]) csv << num(v) << ',';
    csv << num(values[i].real()) << ',' << num(values[i].imag()) << ',' << num(std::abs(values[i]));
  }
  emit(cfg, out, csv.str());
  return kSuccess;
}

int cmd_radial(const RunConfig& cfg, std::ostream& out)
{
  const auto f = io::hermite_expansion_from_json(io::read_json_file(cfg.in));
  const auto report = radial_test(f, cfg.tol);
  emit(cfg, out, io::to_json(report).dump(2));
  return report.is_radial ? kSuccess : kNotRadial;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
  const auto f = io::hermite_expansion_from_json(io::read_json_file(cfg.in));
  try {
    emit(cfg, out, io::to_json(reduce_dimension(f, cfg.tol)).dump(2));
  } catch (const NonRadialError& e) {
    err << "reduce: input is not radial\n" << io::to_json(e.report()).dump(2) << '\n';
    return kNotRadial;
  }
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
  const auto report = run_verification(cfg.seed, cfg.checks);
  emit(cfg, out, format_report(report));
  return report.pass() ? kSuccess : kCheckFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  RunConfig cfg;
  CLI::App app{"Bargmann transform and radial symmetry toolkit", args.empty() ? "fockradial" : args.front()};
  app.require_subcommand(1);

  auto add_out = [&](CLI::App* c) { c->add_option("--out", cfg.out, "Output path (default: stdout)"); };
  auto add_in = [&](CLI::App* c) { c->add_option("--in", cfg.in, "Input JSON file")->required(); };

  auto* synth = app.add_subcommand("synth", "Write a Hermite expansion from a preset");
  synth->add_option("--preset", cfg.preset, "h0 | h2-shell | gaussian:<a> | profile:<file> | random | random-radial")
      ->required();
  synth->add_option("--dim", cfg.dim, "Dimension d")->check(CLI::PositiveNumber);
  synth->add_option("--degree", cfg.degree, "Degree bound N")->check(CLI::NonNegativeNumber);
  synth->add_option("--seed", cfg.seed, "RNG seed for random presets");
  add_out(synth);

  auto* transform = app.add_subcommand("transform", "Evaluate the Bargmann transform on a grid (CSV)");
  add_in(transform);
  transform->add_option("--grid", cfg.grids, "min:max:count per axis (Re z1, Im z1, Re z2, ...)");
  transform->add_option("--path", cfg.path, "series | kernel");
  transform->add_option("--quad-order", cfg.quad_order, "Gauss-Hermite order for the kernel path")
      ->check(CLI::PositiveNumber);
  add_out(transform);

  auto* stft = app.add_subcommand("stft", "Gaussian-window STFT on a phase-space grid (CSV)");
  add_in(stft);
  stft->add_option("--grid", cfg.grids, "min:max:count per axis (x1..xd, xi1..xid)");
  stft->add_option("--quad-order", cfg.quad_order, "Gauss-Hermite order")->check(CLI::PositiveNumber);
  add_out(stft);

  auto* radial = app.add_subcommand("radial", "Test radial symmetry; exit 3 when not radial");
  add_in(radial);
  radial->add_option("--tol", cfg.tol, "Tolerance")->check(CLI::PositiveNumber);
  add_out(radial);

  auto* reduce = app.add_subcommand("reduce", "Reduce a radial expansion to its 1-D representative");
  add_in(reduce);
  reduce->add_option("--tol", cfg.tol, "Tolerance")->check(CLI::PositiveNumber);
  add_out(reduce);

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--seed", cfg.seed, "RNG seed");
  verify->add_option("--check", cfg.checks, "Run only the named checks");
  add_out(verify);

  // Accepted everywhere for a uniform command line; commands ignore what they do not use.
  for (auto* c : {synth, transform, stft, radial, reduce, verify}) {
    if (!c->get_option_no_throw("--dim")) c->add_option("--dim", cfg.dim)->group("");
    if (!c->get_option_no_throw("--degree")) c->add_option("--degree", cfg.degree)->group("");
    if (!c->get_option_no_throw("--quad-order")) c->add_option("--quad-order", cfg.quad_order)->group("");
    if (!c->get_option_no_throw("--tol")) c->add_option("--tol", cfg.tol)->group("");
    if (!c->get_option_no_throw("--seed")) c->add_option("--seed", cfg.seed)->group("");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    if (synth->parsed()) return cmd_synth(cfg, out);
    if (transform->parsed()) return cmd_transform(cfg, out);
    if (stft->parsed()) return cmd_stft(cfg, out);
    if (radial->parsed()) return cmd_radial(cfg, out);
    if (reduce->parsed()) return cmd_reduce(cfg, out, err);
    return cmd_verify(cfg, out);
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const ArgumentError& e) {
    err << "input error: " << e.what() << '\n';
  }
  return kInputError;
}

} // namespace fockradial::cli
