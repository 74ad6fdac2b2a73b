#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starrad/errors.hpp"
#include "starrad/family.hpp"
#include "starrad/series.hpp"
#include "starrad/zerofinder.hpp"

namespace starrad {

enum class Regime { RealAxis, ImaginaryAxis, SqrtTransformed };
const char* to_string(Regime regime);

// Strict: mu in (-1,1) without 0, |nu| < 1/2. Diagnostic also admits
// mu = 0 (g, h) and |nu| = 1/2.
enum class ParameterMode { Strict, Diagnostic };

struct RadiusQuery {
    FunctionFamily family = FunctionFamily::LommelG;
    double param = 0.5;  // mu for f, g, h; nu for u, v, w
    double alpha = 0.0;
    ParameterMode mode = ParameterMode::Strict;
};

struct RadiusConfig {
    SeriesConfig series;
    ScanConfig scan;
    bool certify = true;
    double certify_offset = 1e-4;  // relative radius offset of the two probe circles
    int certify_samples = 512;
};

struct RadiusResult {
    double radius = 0.0;
    double equation_root = 0.0;  // t; radius = t^2 for h and w
    double equation_constant = 0.0;
    Regime regime = Regime::RealAxis;
    double residual = 0.0;
    double residual_scale = 0.0;  // max |numerator| at the scan bracket ends
    bool certified = false;
    Bracket bracket;
    double first_zero = 0.0;  // xi_{mu,1} (zero of phi_0) or h_{nu,1}
    double inner_min = 0.0;   // min Re(zF'/F) on |z| = radius (1 - offset)
    double outer_min = 0.0;   // min Re(zF'/F) on |z| = radius (1 + offset)
    bool proof_derived = false;  // f with mu in (0,1)
};

/// Throws InvalidQuery when the query leaves the validity ranges.
void validate(const RadiusQuery& query);

/// c (Lommel) or d (Struve) in z s' - c s = 0 / z H' - d H = 0.
double equation_constant(FunctionFamily family, double param, double alpha);

/// Even series whose smallest positive zero is the equation root.
EvenSeries radius_numerator(FunctionFamily family, double param, double alpha);

RadiusResult radius_of_starlikeness(const RadiusQuery& query, const RadiusConfig& cfg = {});

struct TableRow {
    FunctionFamily family;
    double param = 0.0;
    double alpha = 0.0;
    std::optional<RadiusResult> result;
    std::optional<ErrorKind> error_kind;
    std::string error;  // empty on success
};

/// Rows ordered by (param, alpha); per-cell failures are recorded, not thrown.
std::vector<TableRow> radius_table(FunctionFamily family, const std::vector<double>& params,
                                   const std::vector<double>& alphas, const RadiusConfig& cfg = {},
                                   ParameterMode mode = ParameterMode::Strict);

}  // namespace starrad
