#pragma once

#include <functional>
#include <numbers>
#include <optional>
#include <vector>

namespace starrad {

using RealFunction = std::function<double(double)>;

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

struct RootResult {
    double root = 0.0;
    double residual = 0.0;  // f(root) as measured
    int iterations = 0;
    Bracket bracket;
};

struct ScanConfig {
    double initial_step = std::numbers::pi / 64.0;
    double max_radius = 16.0 * std::numbers::pi;
    double root_tol = 1e-12;  // absolute, on the abscissa

    void validate() const;
};

/// Sign-change brackets of width <= step, in increasing order. Roots of
/// even multiplicity are invisible to this scan.
std::vector<Bracket> scan_sign_changes(const RealFunction& f, Bracket interval, double step);

/// Deterministic bisection down to hi - lo <= tol; root is the midpoint.
RootResult bisect(const RealFunction& f, Bracket bracket, double tol);

/// First sign change scanning up from 0, re-checked once at half step.
/// hint_upper bounds the first scan pass; the scan continues to
/// max_radius if nothing is found below it.
RootResult smallest_positive_zero(const RealFunction& f, const ScanConfig& cfg = {},
                                  std::optional<double> hint_upper = std::nullopt);

/// Unique root of q(r) = target for increasing q with q(0) < target:
/// doubles the upper end until q exceeds target, then bisects.
RootResult solve_monotone_level(const RealFunction& q, double target, const ScanConfig& cfg = {});

/// Bracket located by the doubling phase of solve_monotone_level.
Bracket monotone_level_bracket(const RealFunction& q, double target, const ScanConfig& cfg = {});

/// The first n positive zeros, increasing.
std::vector<RootResult> positive_zeros_up_to(const RealFunction& f, int n, const ScanConfig& cfg = {});

/// True when q sampled at `samples` equispaced points of the bracket never
/// decreases by more than tol.
bool sampled_nondecreasing(const RealFunction& q, Bracket bracket, int samples, double tol);

}  // namespace starrad
