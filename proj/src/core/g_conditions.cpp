#include "etpc/core/g_conditions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "etpc/core/errors.hpp"

namespace etpc {

namespace {

// Positive sample magnitudes in increasing order, all strictly above the reference state.
std::vector<double> sample_magnitudes(const ControllerParams& params, const LevelMap& map,
                                      std::size_t n_samples) {
  std::vector<double> magnitudes;
  const double x_c = params.x_c();
  if (map.composition() == Composition::ScaledHalfSquare) {
    const double lo = params.x_s();
    for (std::size_t i = 0; i < n_samples; ++i) {
      magnitudes.push_back(lo + (x_c - lo) * static_cast<double>(i) / static_cast<double>(n_samples - 1));
    }
    return magnitudes;
  }
  // Uniform grid over [-x_c, x_c]; the level maps are even in x, so the positive half
  // carries every distinct level and the sign is restored when reporting a witness.
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = -x_c + 2.0 * x_c * static_cast<double>(i) / static_cast<double>(n_samples - 1);
    if (x > 0.0) {
      magnitudes.push_back(x);
    }
  }
  if (magnitudes.empty()) {
    magnitudes.push_back(x_c);
  }
  return magnitudes;
}

double finite_abs_or_zero(double v) {
  return std::isfinite(v) ? std::abs(v) : 0.0;
}

bool jump_exceeds_slope_bound(const GCandidate& g, double s_lo, double s_hi, double g_lo,
                              double g_hi, bool include_lower_slope) {
  double slope = std::max(finite_abs_or_zero(g.deriv(s_hi)),
                          finite_abs_or_zero(g.deriv(0.5 * (s_lo + s_hi))));
  if (include_lower_slope) {
    slope = std::max(slope, finite_abs_or_zero(g.deriv(s_lo)));
  }
  const double allowed =
      2.0 * slope * std::abs(s_hi - s_lo) + 1e-12 * (1.0 + std::max(std::abs(g_lo), std::abs(g_hi)));
  return std::abs(g_hi - g_lo) > allowed;
}

ConditionOutcome fail(double witness, const std::string& detail) {
  return ConditionOutcome{false, witness, detail};
}

}  // namespace

std::string ConditionReport::summary() const {
  std::ostringstream os;
  auto line = [&os](const char* label, const ConditionOutcome& c) {
    os << label << ": " << (c.passed ? "pass" : "FAIL");
    if (!c.passed) {
      os << " at x = " << *c.witness << " (" << c.detail << ")";
    }
    os << '\n';
  };
  os << "G = " << g_name << ", composition = " << to_string(composition) << ", samples = " << samples
     << '\n';
  line("(a) continuity of G(S(x))", continuity);
  line("(b) [dG/dS]^-1 positive and bounded", inverse_derivative);
  return os.str();
}

ConditionReport verify_g_conditions(const GCandidate& g, const ControllerParams& params,
                                    std::size_t n_samples, Composition composition) {
  if (n_samples < 2) {
    throw Error(ErrorCode::InvalidParameter, "verify_g_conditions needs at least 2 samples");
  }
  const LevelMap map(composition, params);
  ConditionReport report{g.name, composition, n_samples, {}, {}};

  const double ref_state = map.reference_state();
  const double ref_level = map.reference_level();
  const double ref_value = g.eval(ref_level);
  if (!std::isfinite(ref_value)) {
    report.continuity = fail(ref_state, "G is not finite at the reference level");
  }

  const auto magnitudes = sample_magnitudes(params, map, n_samples);
  double prev_level = ref_level;
  double prev_value = ref_value;
  double prev_state = ref_state;
  for (const double x : magnitudes) {
    const double s = map.level(x);
    const double value = g.eval(s);

    if (report.continuity.passed) {
      if (!std::isfinite(value)) {
        report.continuity = fail(x, "G(S(x)) is not finite");
      } else if (x > prev_state && std::isfinite(prev_value) &&
                 jump_exceeds_slope_bound(g, prev_level, s, prev_value, value,
                                          prev_state != ref_state || ref_level > 0.0)) {
        std::ostringstream os;
        os << "jump of " << (value - prev_value) << " between successive samples";
        report.continuity = fail(x, os.str());
      }
    }

    if (report.inverse_derivative.passed) {
      const double slope = g.deriv(s);
      if (!(slope > 0.0) || !std::isfinite(slope)) {
        std::ostringstream os;
        os << "dG/dS = " << slope << " is not positive";
        report.inverse_derivative = fail(x, os.str());
      } else if (!(1.0 / slope <= kInverseDerivativeCap)) {
        std::ostringstream os;
        os << "[dG/dS]^-1 = " << 1.0 / slope << " exceeds " << kInverseDerivativeCap;
        report.inverse_derivative = fail(x, os.str());
      }
    }

    prev_level = s;
    prev_value = value;
    prev_state = x;
  }
  return report;
}

}  // namespace etpc
