#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "starrad/family.hpp"
#include "starrad/rational.hpp"

namespace starrad {

struct SeriesConfig {
    double rel_tol = 1e-14;
    double abs_tol = 1e-300;  // underflow guard
    int max_terms = 500;
    // Re-evaluate in MPFR arithmetic when double rounding cannot meet rel_tol.
    bool extended_fallback = true;

    void validate() const;
};

struct SeriesValue {
    double value = 0.0;
    double err_bound = 0.0;
    int terms_used = 0;
};

struct ComplexSeriesValue {
    std::complex<double> value;
    double err_bound = 0.0;
    int terms_used = 0;
};

/// Even entire function z -> sum_k c_k (-z^2/4)^k with coefficients
///
///     c_k = q(k) / ((b1)_k (b2)_k),
///
/// where q is a small polynomial in k (ascending coefficients). Every
/// series of interest here (the 1F2 kernels, the Struve kernel and the
/// radius-equation numerators) has this shape, and z d/dz maps the family
/// into itself by q(k) -> 2k q(k).
class EvenSeries {
public:
    EvenSeries(double b1, double b2, std::vector<double> numerator = {1.0});

    /// 1F2(1; (mu-k+2)/2, (mu-k+3)/2; -z^2/4)
    static EvenSeries phi(double mu, int k);
    /// Struve kernel sum (-z^2/4)^k / ((3/2)_k (nu+3/2)_k)
    static EvenSeries struve_kernel(double nu);
    /// psi_mu with c_k = (2k + mu + 1/2 - c) / (((mu+2)/2)_k ((mu+3)/2)_k)
    static EvenSeries lommel_numerator(double mu, double c);
    /// phi_nu with c_k = (2k + nu + 1 - d) / ((3/2)_k (nu+3/2)_k)
    static EvenSeries struve_numerator(double nu, double d);

    double b1() const { return b1_; }
    double b2() const { return b2_; }
    const std::vector<double>& numerator() const { return numerator_; }
    double numerator_at(double k) const;

    double coeff(int k) const;
    std::vector<Rational> exact_coefficients(int count) const;

    /// Series of z F'(z).
    EvenSeries euler_derivative() const;

    /// First index from which the term ratios decrease monotonically.
    int monotone_index() const;

private:
    double b1_;
    double b2_;
    std::vector<double> numerator_;
};

/// Order of s_{mu,nu}. The radius work only uses s_{mu-1/2,1/2}.
class LommelOrder {
public:
    static LommelOrder specialized(double mu);
    static LommelOrder general(double mu_raw, double nu_raw);

    double mu_raw() const { return mu_raw_; }
    double nu_raw() const { return nu_raw_; }
    std::optional<double> mu() const { return mu_; }

private:
    LommelOrder(double mu_raw, double nu_raw, std::optional<double> mu)
        : mu_raw_(mu_raw), nu_raw_(nu_raw), mu_(mu) {}

    double mu_raw_;
    double nu_raw_;
    std::optional<double> mu_;
};

class StruveOrder {
public:
    /// strict requires |nu| < 1/2; otherwise |nu| <= 1/2.
    explicit StruveOrder(double nu, bool strict = false);

    double nu() const { return nu_; }
    bool strict() const { return strict_; }

private:
    double nu_;
    bool strict_;
};

/// sum_k c_k x^k. Double arithmetic first; MPFR when the rounding estimate
/// exceeds rel_tol (and extended_fallback is set).
SeriesValue sum_series(const EvenSeries& series, double x, const SeriesConfig& cfg = {});
ComplexSeriesValue sum_series(const EvenSeries& series, std::complex<double> x,
                              const SeriesConfig& cfg = {});

/// Value at real z; depends on z^2 only.
SeriesValue evaluate(const EvenSeries& series, double z, const SeriesConfig& cfg = {});
/// Value at z = i r, i.e. sum_k c_k (r^2/4)^k.
SeriesValue eval_on_imag(const EvenSeries& series, double r, const SeriesConfig& cfg = {});

/// 1F2(1; b1, b2; x) = sum_k x^k / ((b1)_k (b2)_k)
SeriesValue hyp1f2_unit(double b1, double b2, double x, const SeriesConfig& cfg = {});

SeriesValue phi_k(double mu, int k, double z, const SeriesConfig& cfg = {});
SeriesValue lommel_s(const LommelOrder& order, double z, const SeriesConfig& cfg = {});
SeriesValue struve_H(const StruveOrder& order, double z, const SeriesConfig& cfg = {});
SeriesValue lommel_num(double mu, double c, double z, const SeriesConfig& cfg = {});
SeriesValue struve_num(double nu, double d, double z, const SeriesConfig& cfg = {});

/// Constant sqrt(pi) Gamma(nu + 3/2) / 2 relating H_nu to its kernel.
double struve_normalization(double nu);

// How z F'(z)/F(z) of a normalized family is built from its base kernel B
// (phi_0 for Lommel, the Struve kernel otherwise):
//     z F'/F = 1 + weight * w B'(w)/B(w),   w = z or sqrt(z).
struct FamilyModel {
    EvenSeries base;
    double weight;
    bool sqrt_argument;
    double level_offset;  // mu + 1/2 or nu + 1
};

FamilyModel family_model(FunctionFamily family, double param);

/// r F'(r)/F(r) on the positive real axis.
double star_quotient(FunctionFamily family, double param, double r, const SeriesConfig& cfg = {});

/// Q(r) = i r s'(ir)/s(ir) for s = s_{mu-1/2,1/2}; real, increasing, Q(0) = mu + 1/2.
double imaginary_axis_quotient(double mu, double r, const SeriesConfig& cfg = {});

}  // namespace starrad
