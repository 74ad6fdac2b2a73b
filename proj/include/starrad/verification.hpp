#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "starrad/family.hpp"
#include "starrad/polynomial.hpp"
#include "starrad/series.hpp"
#include "starrad/zerofinder.hpp"

namespace starrad {

struct VerificationReport {
    std::string check_name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;  // measured <= tolerance
    std::string context;
};

VerificationReport make_report(std::string name, double measured, double tolerance, std::string context);

// ---------------------------------------------------------------------------
// Jensen polynomials of the zeta-substituted kernels F~(zeta) = F(2 sqrt(zeta))
// = sum_k c_k (-zeta)^k, so the Maclaurin data are gamma_k = (-1)^k k! c_k.

std::vector<Rational> jensen_gamma(const EvenSeries& series, int n);
Polynomial jensen_of(const EvenSeries& series, int n);

// ---------------------------------------------------------------------------
// Boundary minimum of Re(z F'(z)/F(z)) on |z| = r.

enum class BoundaryMethod { DirectSeries, PartialFraction };

struct BoundaryMinimum {
    double min_value = 0.0;
    double argmin_theta = 0.0;
};

/// Log-derivative of a Hadamard product sum_n y / (y + b_n) with b_n = z_n^2/4,
/// truncated at the computed zeros and corrected by exact power-sum tails
/// (power sums of 1/b_n follow from the Maclaurin coefficients by Newton's
/// identities).
class PartialFractionModel {
public:
    PartialFractionModel(const EvenSeries& base, int zero_count, const SeriesConfig& cfg = {});

    /// y B'(y)/B(y) for B(y) = sum c_k y^k; valid for |y| < b_1.
    std::complex<double> log_derivative(std::complex<double> y) const;
    std::span<const double> zeros() const { return zeros_; }

private:
    std::vector<double> zeros_;
    std::vector<double> tails_;  // sum over omitted zeros of b_n^{-j}, j = 1..
};

/// Re(z F'/F) at one point by direct complex series summation.
double boundary_real_part(FunctionFamily family, double param, std::complex<double> z,
                          const SeriesConfig& cfg = {});
double boundary_real_part(FunctionFamily family, double param, std::complex<double> z,
                          const PartialFractionModel& model);

/// Samples theta in [0, pi/2] (even families) or [0, pi] (h and w; the
/// function of z has only conjugate symmetry), n_samples points including
/// both ends.
BoundaryMinimum boundary_min_real_part(FunctionFamily family, double param, double r, int n_samples,
                                       const SeriesConfig& cfg = {},
                                       BoundaryMethod method = BoundaryMethod::DirectSeries);
BoundaryMinimum boundary_min_real_part(FunctionFamily family, double param, double r, int n_samples,
                                       const PartialFractionModel& model);

// ---------------------------------------------------------------------------

/// |B(z) - prod_{n<=N} (1 - z^2/z_n^2)|
VerificationReport hadamard_truncation_error(const EvenSeries& series, std::span<const double> zeros,
                                             double z, const SeriesConfig& cfg = {});

enum class IntegralKind { Phi0Sin, Phi1Cos, StruveSin };
const char* to_string(IntegralKind kind);

/// Quadrature side of the integral representations:
///   Phi0Sin:   mu (mu+1) int_0^1 (1-t)^(mu-1) sin(zt) dt    (= z phi_0(z))
///   Phi1Cos:   mu int_0^1 (1-t)^(mu-1) cos(zt) dt           (= phi_1(z))
///   StruveSin: 2 (z/2)^nu / (sqrt(pi) Gamma(nu+1/2)) int_0^1 (1-t^2)^(nu-1/2) sin(zt) dt  (= H_nu(z))
double integral_representation_value(IntegralKind kind, double param, double z);
VerificationReport integral_representation_residual(IntegralKind kind, double param, double z,
                                                    const SeriesConfig& cfg = {});

enum class OdeKind { Lommel, Struve };
/// Relative residual of z^2 w'' + z w' + (z^2 - nu^2) w = RHS for
/// w = s_{mu-1/2,1/2} (nu = 1/2) or w = H_nu, with termwise derivatives.
VerificationReport ode_residual(OdeKind kind, double param, double z, const SeriesConfig& cfg = {});

enum class ZeroBoundKind { LommelPhi0, LommelPhi1, Struve };
/// measured = worst signed violation of the zero-location bounds (negative
/// when every bound holds strictly); tolerance 0.
VerificationReport zero_bounds_check(ZeroBoundKind kind, double param, int n_max,
                                     const SeriesConfig& cfg = {});

/// (mu+1) phi_1 = (mu+1) phi_0 + z phi_0', relative residual.
VerificationReport recurrence_residual(double mu, double z, const SeriesConfig& cfg = {});

/// Positive zeros of an even series, via the zerofinder.
std::vector<double> series_zeros(const EvenSeries& series, int count, const SeriesConfig& cfg = {},
                                 double step = 0.0);

// ---------------------------------------------------------------------------

enum class Suite { Series, Jensen, Integrals, Ode, Bounds, Radii, All };
const char* to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

/// Runs a named group of checks; reports sorted by check_name.
std::vector<VerificationReport> run_suite(Suite suite, const SeriesConfig& cfg = {});

}  // namespace starrad
