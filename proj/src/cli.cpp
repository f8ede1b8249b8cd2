#include "sphres/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphres/errors.hpp"
#include "sphres/identities.hpp"
#include "sphres/spacetime_field.hpp"

namespace sphres::cli {
namespace {

using json = nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::uint64_t kProtterSeed = 0x5eed'2017'0001ULL;
constexpr int kProtterPoints = 20;

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// Writes to --out when given, otherwise to the command's default stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      os_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DomainError("cannot open output file: " + path);
      os_ = file_.get();
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw DomainError("unsupported --format '" + format + "' for this subcommand");
}

struct VerifyRow {
  std::string check;
  std::optional<int> ell;
  double re_lambda = kNaN;
  double im_lambda = kNaN;
  double lhs = kNaN;
  double rhs = kNaN;
  double ratio = kNaN;
  bool passed = false;
};

void write_verify(const std::vector<VerifyRow>& rows, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json o;
      o["check"] = r.check;
      o["ell"] = r.ell ? json(*r.ell) : json(nullptr);
      for (auto [key, val] : {std::pair{"re_lambda", r.re_lambda}, {"im_lambda", r.im_lambda}, {"lhs", r.lhs},
                              {"rhs", r.rhs}, {"ratio", r.ratio}})
        o[key] = std::isfinite(val) ? json(val) : json(nullptr);
      o["passed"] = r.passed;
      arr.push_back(o);
    }
    os << arr.dump(2) << '\n';
    return;
  }
  os << kVerifyHeader << '\n';
  for (const auto& r : rows) {
    os << r.check << ',' << (r.ell ? std::to_string(*r.ell) : std::string()) << ',' << format_number(r.re_lambda)
       << ',' << format_number(r.im_lambda) << ',' << format_number(r.lhs) << ',' << format_number(r.rhs) << ','
       << format_number(r.ratio) << ',' << bool_str(r.passed) << '\n';
  }
}

std::vector<VerifyRow> verify_resonant(const std::string& which, int lmax, double d, double lambda_shift,
                                       int threads, std::ostream& err) {
  if (lmax < 1) throw DomainError("--lmax must be at least 1 for resonance checks");
  if (!(d > 0.0)) throw DomainError("--d must be positive");
  const auto slice = spectrum(3, lmax, 1.0, threads);
  std::vector<VerifyRow> rows;
  double sup = 0.0;
  for (const auto& res : slice.resonances) {
    const Complex lambda = res.lambda + Complex(0.0, lambda_shift);
    VerifyRow row{which, res.ell, lambda.real(), lambda.imag()};
    try {
      const auto state = build_resonant_state(res.ell, lambda);
      IdentityReport rep;
      if (which == "mor2") {
        rep = mor2_check(state, d);
        sup = std::max(sup, 2.0 * rep.ratio);
      } else if (which == "delv3") {
        rep = delv3_check(state);
      } else {
        rep = theorem1_chain_check(state, 2.0 * d);
      }
      row.lhs = rep.lhs;
      row.rhs = rep.rhs;
      row.ratio = rep.ratio;
      row.passed = rep.passed;
    } catch (const NotAResonance& e) {
      err << "verify " << which << ": " << e.what() << '\n';
    }
    rows.push_back(row);
  }
  if (which == "mor2")
    err << "mor2: sup lhs / (d * int |grad v|^2) = " << format_number(sup) << " over " << rows.size()
        << " states (bound 2)\n";
  return rows;
}

std::vector<VerifyRow> verify_protter(double h) {
  if (!(h > 0.0)) throw DomainError("--h must be positive");
  std::vector<VerifyRow> rows;
  const auto points = protter_sample_points(kProtterPoints, kProtterSeed);
  for (const auto& [name, field] : builtin_fields()) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      const auto coarse = protter_residual(field, points[j], h);
      const auto fine = protter_residual(field, points[j], 0.5 * h);
      VerifyRow row{"protter:" + name, static_cast<int>(j)};
      row.lhs = coarse.residual;
      row.rhs = fine.residual;
      row.ratio = coarse.residual / fine.residual;
      row.passed = row.ratio >= 12.0 && row.ratio <= 20.0;
      rows.push_back(row);
      if (field.kind() == SpacetimeField::Kind::exponential) {
        VerifyRow exact{"protter-exact:" + name, static_cast<int>(j)};
        exact.lhs = protter_lhs(field, points[j]);
        exact.rhs = protter_divergence_exact(field, points[j]);
        exact.ratio = std::abs(exact.lhs - exact.rhs);
        exact.passed = exact.ratio <= 1e-12 * std::max(1.0, std::abs(exact.lhs));
        rows.push_back(exact);
      }
    }
  }
  return rows;
}

std::vector<VerifyRow> verify_hadamard_norm() {
  const auto rep = radial_norm_check();
  VerifyRow row;
  row.check = "hadamard-norm";
  row.lhs = rep.boundary.lhs;
  row.rhs = rep.boundary.rhs;
  row.ratio = rep.boundary.ratio;
  row.passed = rep.passed;
  return {row};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_perturb(const VariationMatrix& m, const Eigen::Vector3d& eig, double eps,
                   const std::optional<DefinitenessReport>& def, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json o;
    o["matrix"] = json::array();
    for (int i = 0; i < 3; ++i) o["matrix"].push_back({m.entries(i, 0), m.entries(i, 1), m.entries(i, 2)});
    o["eigenvalues"] = {eig[0], eig[1], eig[2]};
    o["epsilon"] = eps;
    o["delta_lambda"] = json::array();
    for (int i = 0; i < 3; ++i) {
      const auto dl = resonance_shift(eig[i], eps);
      o["delta_lambda"].push_back({{"re", dl.real()}, {"im", dl.imag()}});
    }
    if (def) o["definiteness"] = {{"semidefinite", def->semidefinite}, {"strictly", def->strictly}};
    else o["definiteness"] = nullptr;
    os << o.dump(2) << '\n';
    return;
  }
  os << "variation matrix (quad_order " << m.quad_order << "):\n";
  for (int i = 0; i < 3; ++i)
    os << "  " << format_number(m.entries(i, 0)) << ' ' << format_number(m.entries(i, 1)) << ' '
       << format_number(m.entries(i, 2)) << '\n';
  os << "eigenvalues: " << format_number(eig[0]) << ' ' << format_number(eig[1]) << ' ' << format_number(eig[2])
     << '\n';
  os << "epsilon: " << format_number(eps) << '\n';
  for (int i = 0; i < 3; ++i) {
    const auto dl = resonance_shift(eig[i], eps);
    os << "delta_lambda[" << i << "]: " << format_number(dl.real()) << ' ' << format_number(dl.imag()) << "i\n";
  }
  if (def)
    os << "negative semidefinite: " << bool_str(def->semidefinite) << "\nstrictly negative: " << bool_str(def->strictly)
       << '\n';
  else
    os << "definiteness: not assessed (deformation not diameter-constrained)\n";
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Eigen::Vector3d translation_preset_shift() { return {1.0, 0.5, -0.25}; }

void write_sphere_csv(const SpectrumSlice& slice, std::ostream& os) {
  os << kSphereHeader << '\n';
  for (const auto& r : slice.resonances)
    os << r.ell << ',' << format_number(r.lambda.real()) << ',' << format_number(r.lambda.imag()) << ','
       << r.multiplicity << ',' << format_number(r.residual) << ',' << bool_str(r.highlight) << '\n';
}

void write_sphere_json(const SpectrumSlice& slice, std::ostream& os) {
  json arr = json::array();
  for (const auto& r : slice.resonances)
    arr.push_back({{"ell", r.ell},
                   {"re_lambda", r.lambda.real()},
                   {"im_lambda", r.lambda.imag()},
                   {"multiplicity", r.multiplicity},
                   {"residual", r.residual},
                   {"highlight", r.highlight}});
  os << json{{"dim", slice.dim}, {"radius", slice.radius}, {"ell_max", slice.ell_max}, {"resonances", arr}}.dump(2)
     << '\n';
}

void write_bounds_csv(const BoundCurve& curve, std::ostream& os) {
  os << kBoundsHeader << '\n';
  for (const auto& s : curve.samples)
    os << format_number(s.kappa) << ',' << format_number(s.ralston) << ',' << format_number(s.morawetz) << ','
       << format_number(s.fl_asymptote) << ',' << bool_str(s.fl_nontrivial) << '\n';
}

void write_bounds_json(const BoundCurve& curve, std::ostream& os) {
  json arr = json::array();
  for (const auto& s : curve.samples)
    arr.push_back({{"kappa", s.kappa},
                   {"ralston", s.ralston},
                   {"morawetz", s.morawetz},
                   {"fl_asymptote", s.fl_asymptote},
                   {"fl_nontrivial", s.fl_nontrivial}});
  os << json{{"radius", curve.radius}, {"samples", arr}}.dump(2) << '\n';
}

void write_fig1_svg(const SpectrumSlice& slice, std::ostream& os) {
  constexpr double W = 640, H = 480, margin = 50;
  double re_max = 1.0, im_min = -1.0;
  for (const auto& r : slice.resonances) {
    re_max = std::max(re_max, std::abs(r.lambda.real()));
    im_min = std::min(im_min, r.lambda.imag());
  }
  re_max = std::ceil(re_max);
  im_min = std::floor(im_min);
  const auto sx = [&](double re) { return margin + (re + re_max) / (2 * re_max) * (W - 2 * margin); };
  const auto sy = [&](double im) { return margin + (0.0 - im) / (0.0 - im_min) * (H - 2 * margin); };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << ' ' << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << fixed(sx(-re_max), 2) << "\" y1=\"" << fixed(sy(0), 2) << "\" x2=\"" << fixed(sx(re_max), 2)
     << "\" y2=\"" << fixed(sy(0), 2) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << fixed(sx(0), 2) << "\" y1=\"" << fixed(sy(0), 2) << "\" x2=\"" << fixed(sx(0), 2)
     << "\" y2=\"" << fixed(sy(im_min), 2) << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << fixed(sx(re_max) - 40, 2) << "\" y=\"" << fixed(sy(0) - 8, 2) << "\" font-size=\"12\">Re "
     << fixed(re_max, 0) << "</text>\n";
  os << "<text x=\"" << fixed(sx(0) + 6, 2) << "\" y=\"" << fixed(sy(im_min), 2) << "\" font-size=\"12\">Im "
     << fixed(im_min, 0) << "</text>\n";
  for (const auto& r : slice.resonances) {
    os << "<circle cx=\"" << fixed(sx(r.lambda.real()), 3) << "\" cy=\"" << fixed(sy(r.lambda.imag()), 3) << "\" r=\""
       << (r.highlight ? "3" : "1.8") << "\" fill=\"" << (r.highlight ? "#d62728" : "#1f77b4") << "\"/>\n";
  }
  os << "</svg>\n";
}

void write_fig2_svg(const BoundCurve& curve, std::ostream& os) {
  constexpr double W = 640, H = 420, margin = 50;
  double k_max = 0.0;
  for (const auto& s : curve.samples) k_max = std::max(k_max, s.kappa);
  const double y_max = 1.2 * (curve.samples.empty() ? 1.0 : curve.samples.front().ralston);
  const auto sx = [&](double k) { return margin + k / k_max * (W - 2 * margin); };
  const auto sy = [&](double y) { return H - margin - y / y_max * (H - 2 * margin); };
  const auto polyline = [&](auto value, const char* colour, const char* extra) {
    os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"" << extra << " points=\"";
    for (const auto& s : curve.samples) os << fixed(sx(s.kappa), 2) << ',' << fixed(sy(value(s)), 2) << ' ';
    os << "\"/>\n";
  };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << ' ' << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << H - margin << "\" x2=\"" << W - margin << "\" y2=\"" << H - margin
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << H - margin << "\" x2=\"" << margin << "\" y2=\"" << margin
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << W - margin - 60 << "\" y=\"" << H - margin + 20 << "\" font-size=\"12\">Re lambda "
     << fixed(k_max, 1) << "</text>\n";
  os << "<text x=\"" << 5 << "\" y=\"" << margin - 10 << "\" font-size=\"12\">|Im lambda|</text>\n";
  polyline([](const BoundRow& s) { return s.ralston; }, "#1f77b4", "");
  polyline([](const BoundRow& s) { return s.morawetz; }, "#7f7f7f", "");
  polyline([](const BoundRow& s) { return s.fl_asymptote; }, "#e5b800", " stroke-dasharray=\"6,4\"");
  // Frequencies where the Fernandez-Lavine estimate is non-trivial.
  for (std::size_t j = 1; j < curve.samples.size(); ++j) {
    if (curve.samples[j].fl_nontrivial != curve.samples[j - 1].fl_nontrivial) {
      const double k = curve.samples[j].kappa;
      os << "<line x1=\"" << fixed(sx(k), 2) << "\" y1=\"" << fixed(sy(0), 2) << "\" x2=\"" << fixed(sx(k), 2)
         << "\" y2=\"" << fixed(sy(y_max), 2) << "\" stroke=\"#e5b800\" stroke-dasharray=\"2,3\"/>\n";
    }
  }
  os << "</svg>\n";
}

NormalVariation parse_variation(const std::string& text) {
  json cfg;
  try {
    cfg = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed config: ") + e.what());
  }
  if (!cfg.is_object()) throw DomainError("config must be a JSON object");
  NormalVariation var;
  try {
    const int kinds = static_cast<int>(cfg.contains("preset")) + static_cast<int>(cfg.contains("sh_coeffs")) +
                      static_cast<int>(cfg.contains("grid"));
    if (kinds != 1) throw DomainError("config needs exactly one of preset, sh_coeffs, grid");
    if (cfg.contains("preset")) {
      const auto name = cfg.at("preset").get<std::string>();
      if (name == "uniform") var = NormalVariation::uniform();
      else if (name == "translation") var = NormalVariation::translation(translation_preset_shift());
      else if (name == "squash") var = NormalVariation::squash();
      else throw DomainError("unknown preset '" + name + "'");
    } else if (cfg.contains("sh_coeffs")) {
      HarmonicExpansion h;
      for (const auto& t : cfg.at("sh_coeffs"))
        h.terms.push_back({t.at("l").get<int>(), t.at("m").get<int>(), t.at("value").get<double>()});
      for (const auto& t : h.terms)
        if (t.l < 0 || std::abs(t.m) > t.l) throw DomainError("sh_coeffs entry needs |m| <= l");
      var.representation = std::move(h);
    } else {
      const auto& g = cfg.at("grid");
      var.representation =
          GridSamples{g.at("n_theta").get<int>(), g.at("n_phi").get<int>(), g.at("values").get<std::vector<double>>()};
    }
    if (cfg.contains("diameter_constrained")) var.diameter_constrained = cfg.at("diameter_constrained").get<bool>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed config: ") + e.what());
  }
  return var;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scattering resonances of balls: spectra, gap bounds, identity checks, shape variation"};
  app.require_subcommand(1);

  int dim = 3;
  int lmax = 30;
  double radius = 1.0;
  double d = 1.0;
  double kappa_min = 0.01, kappa_max = 5.0, kappa_step = 0.01;
  double epsilon = 0.01;
  int quad_order = 64;
  double h = 1e-2;
  std::string out_path;
  std::string format = "csv";
  int threads = 1;
  int highlight = 20;
  std::string which;
  std::string config_path;
  std::string preset;
  double lambda_shift = 0.0;
  int verify_lmax = 10;
  std::string perturb_format = "text";

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "output file (default: standard output)");
    sub->add_option("--threads", threads, "worker threads for per-ell root finding")->check(CLI::Range(1, 256));
  };

  auto* sphere = app.add_subcommand("sphere", "resonances of the ball B(0,R) in odd dimension");
  sphere->add_option("--dim", dim, "odd dimension >= 3");
  sphere->add_option("--lmax", lmax, "largest angular momentum");
  sphere->add_option("--radius", radius, "ball radius");
  sphere->add_option("--format", format, "csv or json");
  sphere->add_option("--highlight", highlight, "angular momentum flagged in the highlight column");
  add_common(sphere);

  auto* widths = app.add_subcommand("widths", "smallest resonance width over ell <= lmax");
  widths->add_option("--dim", dim, "odd dimension >= 3");
  widths->add_option("--lmax", lmax, "largest angular momentum");
  widths->add_option("--radius", radius, "ball radius");
  widths->add_option("--format", format, "csv or json");
  add_common(widths);

  auto* bounds = app.add_subcommand("bounds", "gap bounds versus Re lambda for obstacles in B(0,R)");
  bounds->add_option("--radius", radius, "containing-ball radius R");
  bounds->add_option("--kappa-min", kappa_min, "first Re lambda sample (> 0)");
  bounds->add_option("--kappa-max", kappa_max, "last Re lambda sample");
  bounds->add_option("--kappa-step", kappa_step, "sample spacing");
  bounds->add_option("--format", format, "csv or json");
  add_common(bounds);

  auto* verify = app.add_subcommand("verify", "numerical verification of the energy identities");
  verify->set_help_flag("--help", "print this help message and exit");
  verify->add_option("which", which, "mor2 | delv3 | chain | protter | hadamard-norm")
      ->required()
      ->check(CLI::IsMember({"mor2", "delv3", "chain", "protter", "hadamard-norm"}));
  verify->add_option("--lmax", verify_lmax, "largest angular momentum for resonant states");
  verify->add_option("--d", d, "obstacle contained in B(0,d); chain uses diam = 2d");
  verify->add_option("--h", h, "finite-difference spacing for protter (halved once)");
  verify->add_option("--format", format, "csv or json");
  verify->add_option("--lambda-shift", lambda_shift, "add this to Im lambda of every state (fault injection)");
  add_common(verify);

  auto* perturb = app.add_subcommand("perturb", "first variation of the resonance -i under a boundary deformation");
  perturb->add_option("config_file", config_path, "JSON config file");
  perturb->add_option("--config", config_path, "JSON config file");
  perturb->add_option("--preset", preset, "uniform | translation | squash (instead of a config file)")
      ->check(CLI::IsMember({"uniform", "translation", "squash"}));
  perturb->add_option("--epsilon", epsilon, "deformation size");
  perturb->add_option("--quad-order", quad_order, "Gauss-Legendre nodes in sin(phi)");
  perturb->add_option("--format", perturb_format, "text or json");
  add_common(perturb);

  auto* figure = app.add_subcommand("figure", "figure data: fig1 (sphere resonances) or fig2 (gap bounds)");
  figure->add_option("which", which, "fig1 | fig2")->required()->check(CLI::IsMember({"fig1", "fig2"}));
  figure->add_option("--format", format, "csv or svg");
  figure->add_option("--lmax", lmax, "fig1: largest angular momentum");
  figure->add_option("--highlight", highlight, "fig1: highlighted angular momentum");
  add_common(figure);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (lmax < 0 || lmax > kMaxPolynomialDegree || verify_lmax < 0 || verify_lmax > kMaxPolynomialDegree)
      throw DomainError("--lmax must be in [0, 60]");
    if (*sphere) {
      require_format(format, {"csv", "json"});
      auto slice = spectrum(dim, lmax, radius, threads);
      for (auto& r : slice.resonances) r.highlight = (r.ell == highlight);
      Sink sink(out_path, out);
      if (format == "json") write_sphere_json(slice, sink.stream());
      else write_sphere_csv(slice, sink.stream());
    } else if (*widths) {
      require_format(format, {"csv", "json"});
      const auto mw = min_width(dim, lmax, radius, threads);
      Sink sink(out_path, out);
      auto& os = sink.stream();
      if (format == "json") {
        os << json{{"width", mw.width},
                   {"ell", mw.witness.ell},
                   {"re_lambda", mw.witness.lambda.real()},
                   {"im_lambda", mw.witness.lambda.imag()},
                   {"multiplicity", mw.witness.multiplicity}}
                  .dump(2)
           << '\n';
      } else {
        os << "width,ell,re_lambda,im_lambda,multiplicity\n"
           << format_number(mw.width) << ',' << mw.witness.ell << ',' << format_number(mw.witness.lambda.real()) << ','
           << format_number(mw.witness.lambda.imag()) << ',' << mw.witness.multiplicity << '\n';
      }
    } else if (*bounds) {
      require_format(format, {"csv", "json"});
      const auto curve = bounds_table(radius, kappa_min, kappa_max, kappa_step);
      Sink sink(out_path, out);
      if (format == "json") write_bounds_json(curve, sink.stream());
      else write_bounds_csv(curve, sink.stream());
    } else if (*verify) {
      require_format(format, {"csv", "json"});
      std::vector<VerifyRow> rows;
      if (which == "protter") rows = verify_protter(h);
      else if (which == "hadamard-norm") rows = verify_hadamard_norm();
      else rows = verify_resonant(which, verify_lmax, d, lambda_shift, threads, err);
      Sink sink(out_path, out);
      write_verify(rows, format, sink.stream());
      std::size_t failed = 0;
      for (const auto& r : rows) failed += r.passed ? 0 : 1;
      err << "verify " << which << ": " << rows.size() - failed << "/" << rows.size() << " passed\n";
      return failed == 0 ? kOk : kVerificationFailed;
    } else if (*perturb) {
      require_format(perturb_format, {"text", "json"});
      if (preset.empty() == config_path.empty()) throw DomainError("perturb needs exactly one of a config or --preset");
      const NormalVariation var =
          preset.empty() ? parse_variation(read_file(config_path)) : parse_variation(json{{"preset", preset}}.dump());
      const auto m = variation_matrix(var, quad_order);
      const auto eig = eigenvalues(m);
      std::optional<DefinitenessReport> def;
      if (var.diameter_constrained) def = definiteness_report(var, quad_order);
      Sink sink(out_path, out);
      write_perturb(m, eig, epsilon, def, perturb_format, sink.stream());
    } else if (*figure) {
      if (which == "fig1") {
        require_format(format, {"csv", "svg"});
        const auto slice = figure1_data(lmax, highlight, threads);
        Sink sink(out_path, out);
        if (format == "svg") write_fig1_svg(slice, sink.stream());
        else write_sphere_csv(slice, sink.stream());
      } else {
        require_format(format, {"csv", "svg"});
        const auto curve = bounds_table(1.0, 0.001, 5.0, 0.001);
        Sink sink(out_path, out);
        if (format == "svg") write_fig2_svg(curve, sink.stream());
        else write_bounds_csv(curve, sink.stream());
      }
    }
  } catch (const SignViolation& e) {
    err << "error: " << e.what() << '\n';
    return kDomainViolation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  }
  return kOk;
}

}  // namespace sphres::cli
