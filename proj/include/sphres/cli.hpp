#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sphres/bounds.hpp"
#include "sphres/hadamard.hpp"
#include "sphres/sphere_spectrum.hpp"

namespace sphres::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kNumeric = 3,
  kDomainViolation = 4,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits, "nan" for NaN.
std::string format_number(double x);

inline constexpr const char* kSphereHeader = "ell,re_lambda,im_lambda,multiplicity,residual,highlight";
inline constexpr const char* kBoundsHeader = "kappa,ralston,morawetz,fl_asymptote,fl_nontrivial";
inline constexpr const char* kVerifyHeader = "check,ell,re_lambda,im_lambda,lhs,rhs,ratio,passed";

void write_sphere_csv(const SpectrumSlice& slice, std::ostream& os);
void write_sphere_json(const SpectrumSlice& slice, std::ostream& os);
void write_bounds_csv(const BoundCurve& curve, std::ostream& os);
void write_bounds_json(const BoundCurve& curve, std::ostream& os);
void write_fig1_svg(const SpectrumSlice& slice, std::ostream& os);
void write_fig2_svg(const BoundCurve& curve, std::ostream& os);

/// Parses the perturbation config: {"preset": ...}, {"sh_coeffs": [...]} or
/// {"grid": {...}}, optionally with "diameter_constrained". Throws DomainError.
NormalVariation parse_variation(const std::string& json_text);

/// Shift used by the "translation" preset.
Eigen::Vector3d translation_preset_shift();

}  // namespace sphres::cli
