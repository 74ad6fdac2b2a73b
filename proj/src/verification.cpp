#include "starrad/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "starrad/errors.hpp"
#include "starrad/radius.hpp"

namespace starrad {

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string param_tag(const char* name, double v)
{
    std::ostringstream os;
    os << name << '=' << v;
    return os.str();
}

std::complex<double> eval_complex(const EvenSeries& s, std::complex<double> y, const SeriesConfig& cfg)
{
    return sum_series(s, y, cfg).value;
}

// Real part of z F'/F given the log-derivative y B'(y)/B(y) of the base in y = -w^2/4.
double from_log_derivative(const FamilyModel& m, std::complex<double> ld)
{
    return 1.0 + 2.0 * m.weight * ld.real();
}

std::complex<double> base_argument(const FamilyModel& m, std::complex<double> z)
{
    const std::complex<double> w = m.sqrt_argument ? std::sqrt(z) : z;
    return -w * w / 4.0;
}

template <class Eval>
BoundaryMinimum sample_circle(const FamilyModel& m, double r, int n_samples, Eval&& at)
{
    if (n_samples < 64) raise(ErrorKind::InvalidParameter, "boundary sampling needs at least 64 points");
    if (!(r > 0.0) || !std::isfinite(r)) raise(ErrorKind::InvalidParameter, "boundary radius must be positive");
    const double span = m.sqrt_argument ? pi : pi / 2.0;
    BoundaryMinimum best{std::numeric_limits<double>::infinity(), 0.0};
    for (int i = 0; i < n_samples; ++i) {
        const double theta = span * i / (n_samples - 1);
        const double v = at(std::polar(r, theta));
        if (v < best.min_value) best = {v, theta};
    }
    return best;
}

double struve_prefactor(double nu) { return 2.0 / (std::sqrt(pi) * std::tgamma(nu + 0.5)); }

// Integrals over u in (0,1) after removing the algebraic endpoint factor.
double integrate_unit(const std::function<double(double)>& f, const char* what)
{
    static thread_local boost::math::quadrature::tanh_sinh<double> rule;
    double error = 0.0;
    double l1 = 0.0;
    const double value = rule.integrate([&](double u) { return f(u); }, 0.0, 1.0, 1e-14, &error, &l1);
    if (!std::isfinite(value) || error > 1e-11 * std::max(1.0, l1))
        raise(ErrorKind::QuadratureFailure, std::string(what) + ": error estimate " + fmt(error));
    return value;
}

}  // namespace

VerificationReport make_report(std::string name, double measured, double tolerance, std::string context)
{
    const bool passed = measured <= tolerance;
    return {std::move(name), measured, tolerance, passed, std::move(context)};
}

std::vector<Rational> jensen_gamma(const EvenSeries& series, int n)
{
    if (n < 0) raise(ErrorKind::InvalidParameter, "Jensen degree must be non-negative");
    std::vector<Rational> c = series.exact_coefficients(n + 1);
    BigInt factorial = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) factorial *= k;
        c[static_cast<std::size_t>(k)] *= Rational(k % 2 == 0 ? factorial : BigInt(-factorial));
    }
    return c;
}

Polynomial jensen_of(const EvenSeries& series, int n) { return jensen_polynomial(jensen_gamma(series, n), n); }

// ---------------------------------------------------------------------------

std::vector<double> series_zeros(const EvenSeries& series, int count, const SeriesConfig& cfg, double step)
{
    ScanConfig scan;
    scan.initial_step = step > 0.0 ? step : pi / 16.0;
    scan.max_radius = (count + 4) * pi;
    scan.root_tol = 1e-13;
    const auto roots = positive_zeros_up_to(
        [&](double z) { return evaluate(series, z, cfg).value; }, count, scan);
    std::vector<double> out;
    out.reserve(roots.size());
    for (const auto& r : roots) out.push_back(r.root);
    return out;
}

PartialFractionModel::PartialFractionModel(const EvenSeries& base, int zero_count, const SeriesConfig& cfg)
{
    if (zero_count < 1) raise(ErrorKind::InvalidParameter, "partial-fraction model needs zeros");
    for (double xi : series_zeros(base, zero_count, cfg, pi / 8.0)) zeros_.push_back(xi * xi / 4.0);

    // Newton's identities with e_k = c_k.
    constexpr int J = 4;
    double e[J + 1];
    for (int k = 0; k <= J; ++k) e[k] = base.coeff(k) / base.coeff(0);
    double p[J + 1] = {0.0};
    for (int j = 1; j <= J; ++j) {
        double acc = (j % 2 == 1 ? 1.0 : -1.0) * j * e[j];
        for (int i = 1; i < j; ++i) acc += (i % 2 == 1 ? 1.0 : -1.0) * e[i] * p[j - i];
        p[j] = acc;
    }
    tails_.assign(J, 0.0);
    for (int j = 1; j <= J; ++j) {
        double partial = 0.0;
        for (auto it = zeros_.rbegin(); it != zeros_.rend(); ++it) partial += std::pow(*it, -j);
        tails_[static_cast<std::size_t>(j - 1)] = p[j] - partial;
    }
}

std::complex<double> PartialFractionModel::log_derivative(std::complex<double> y) const
{
    std::complex<double> sum(0.0, 0.0);
    for (auto it = zeros_.rbegin(); it != zeros_.rend(); ++it) {
        const std::complex<double> d = y + *it;
        if (std::abs(d) == 0.0) raise(ErrorKind::SingularPoint, "partial fraction hits a zero");
        sum += y / d;
    }
    std::complex<double> yj = y;
    for (std::size_t j = 0; j < tails_.size(); ++j) {
        sum += (j % 2 == 0 ? 1.0 : -1.0) * yj * tails_[j];
        yj *= y;
    }
    return sum;
}

double boundary_real_part(FunctionFamily family, double param, std::complex<double> z, const SeriesConfig& cfg)
{
    const FamilyModel m = family_model(family, param);
    const std::complex<double> y = base_argument(m, z);
    const ComplexSeriesValue b = sum_series(m.base, y, cfg);
    if (std::abs(b.value) <= std::max(cfg.abs_tol, b.err_bound))
        raise(ErrorKind::SingularPoint, "base function vanishes on the sampling circle");
    const std::complex<double> db = eval_complex(m.base.euler_derivative(), y, cfg);
    return 1.0 + m.weight * (db / b.value).real();
}

double boundary_real_part(FunctionFamily family, double param, std::complex<double> z,
                          const PartialFractionModel& model)
{
    const FamilyModel m = family_model(family, param);
    return from_log_derivative(m, model.log_derivative(base_argument(m, z)));
}

BoundaryMinimum boundary_min_real_part(FunctionFamily family, double param, double r, int n_samples,
                                       const SeriesConfig& cfg, BoundaryMethod method)
{
    if (method == BoundaryMethod::PartialFraction) {
        const PartialFractionModel model(family_model(family, param).base, 50, cfg);
        return boundary_min_real_part(family, param, r, n_samples, model);
    }
    const FamilyModel m = family_model(family, param);
    const EvenSeries deriv = m.base.euler_derivative();
    return sample_circle(m, r, n_samples, [&](std::complex<double> z) {
        const std::complex<double> y = base_argument(m, z);
        const ComplexSeriesValue b = sum_series(m.base, y, cfg);
        if (std::abs(b.value) <= std::max(cfg.abs_tol, b.err_bound))
            raise(ErrorKind::SingularPoint, "base function vanishes on the sampling circle");
        return 1.0 + m.weight * (eval_complex(deriv, y, cfg) / b.value).real();
    });
}

BoundaryMinimum boundary_min_real_part(FunctionFamily family, double param, double r, int n_samples,
                                       const PartialFractionModel& model)
{
    const FamilyModel m = family_model(family, param);
    return sample_circle(m, r, n_samples, [&](std::complex<double> z) {
        return from_log_derivative(m, model.log_derivative(base_argument(m, z)));
    });
}

// ---------------------------------------------------------------------------

VerificationReport hadamard_truncation_error(const EvenSeries& series, std::span<const double> zeros, double z,
                                             const SeriesConfig& cfg)
{
    double product = 1.0;
    for (double xi : zeros) product *= 1.0 - (z / xi) * (z / xi);
    const double value = evaluate(series, z, cfg).value / series.coeff(0);
    const double err = std::abs(value - product);
    // Envelope from z_n > n pi: sum_{n>N} z^2/z_n^2 <= z^2/(pi^2 N).
    const double n = static_cast<double>(zeros.size());
    const double envelope = std::abs(product) * z * z / (pi * pi) * (zeros.empty() ? pi * pi / 6.0 : 1.0 / n);
    std::ostringstream ctx;
    ctx << "N=" << zeros.size() << " z=" << z;
    return make_report("hadamard_truncation", err, envelope + 1e-12, ctx.str());
}

const char* to_string(IntegralKind kind)
{
    switch (kind) {
    case IntegralKind::Phi0Sin: return "phi0_sin";
    case IntegralKind::Phi1Cos: return "phi1_cos";
    case IntegralKind::StruveSin: return "struve_sin";
    }
    return "unknown";
}

double integral_representation_value(IntegralKind kind, double param, double z)
{
    if (!std::isfinite(z)) raise(ErrorKind::InvalidParameter, "z must be finite");
    switch (kind) {
    case IntegralKind::Phi0Sin:
    case IntegralKind::Phi1Cos: {
        if (!(param > 0.0 && param < 1.0)) raise(ErrorKind::InvalidParameter, "mu must lie in (0,1)");
        const double inv = 1.0 / param;
        if (kind == IntegralKind::Phi0Sin)
            return (param + 1.0) *
                   integrate_unit([&](double u) { return std::sin(z * (1.0 - std::pow(u, inv))); }, "phi0_sin");
        return integrate_unit([&](double u) { return std::cos(z * (1.0 - std::pow(u, inv))); }, "phi1_cos");
    }
    case IntegralKind::StruveSin: {
        if (!(param > -0.5)) raise(ErrorKind::InvalidParameter, "nu must exceed -1/2");
        if (z == 0.0) return 0.0;
        const double s = param + 0.5;
        const double inv = 1.0 / s;
        const double integral = integrate_unit(
            [&](double u) {
                const double t = 1.0 - std::pow(u, inv);
                return std::pow(1.0 + t, param - 0.5) * std::sin(z * t);
            },
            "struve_sin");
        return struve_prefactor(param) * std::pow(z / 2.0, param) * integral / s;
    }
    }
    raise(ErrorKind::InvalidParameter, "unknown integral kind");
}

VerificationReport integral_representation_residual(IntegralKind kind, double param, double z,
                                                    const SeriesConfig& cfg)
{
    double series_side = 0.0;
    switch (kind) {
    case IntegralKind::Phi0Sin: series_side = z * phi_k(param, 0, z, cfg).value; break;
    case IntegralKind::Phi1Cos: series_side = phi_k(param, 1, z, cfg).value; break;
    case IntegralKind::StruveSin:
        if (z < 0.0) raise(ErrorKind::InvalidParameter, "struve_sin requires z >= 0");
        series_side = z == 0.0 ? 0.0 : struve_H(StruveOrder(param), z, cfg).value;
        break;
    }
    const double quad = integral_representation_value(kind, param, z);
    std::ostringstream ctx;
    ctx.precision(17);
    ctx << "param=" << param << " z=" << z << " series=" << series_side << " quadrature=" << quad;
    return make_report(std::string("integral/") + to_string(kind), std::abs(series_side - quad), 1e-8, ctx.str());
}

VerificationReport ode_residual(OdeKind kind, double param, double z, const SeriesConfig& cfg)
{
    if (!(z > 0.0 && z <= 10.0)) raise(ErrorKind::InvalidParameter, "ode_residual requires z in (0, 10]");
    EvenSeries e = EvenSeries::phi(param, 0);
    double amp = 0.0;
    double p = 0.0;
    double order = 0.0;
    double rhs = 0.0;
    if (kind == OdeKind::Lommel) {
        if (!(param > -1.0 && param < 1.0) || param == 0.0)
            raise(ErrorKind::InvalidParameter, "Lommel residual requires mu in (-1,1), mu != 0");
        amp = 1.0 / (param * (param + 1.0));
        p = param + 0.5;
        order = 0.5;
        rhs = std::pow(z, p);
    } else {
        StruveOrder check(param);
        e = EvenSeries::struve_kernel(param);
        amp = std::pow(2.0, -param) / (std::sqrt(pi) * std::tgamma(param + 1.5));
        p = param + 1.0;
        order = param;
        rhs = 4.0 * std::pow(z / 2.0, param + 1.0) / (std::sqrt(pi) * std::tgamma(param + 0.5));
    }
    const EvenSeries de = e.euler_derivative();
    const EvenSeries dde = de.euler_derivative();
    const double e0 = evaluate(e, z, cfg).value;
    const double e1 = evaluate(de, z, cfg).value;
    const double e2 = evaluate(dde, z, cfg).value;
    const double zp = amp * std::pow(z, p);
    const double lhs = zp * (p * p * e0 + 2.0 * p * e1 + e2 + (z * z - order * order) * e0);
    const double residual = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    std::ostringstream ctx;
    ctx << (kind == OdeKind::Lommel ? "mu=" : "nu=") << param << " z=" << z;
    return make_report(kind == OdeKind::Lommel ? "ode/lommel" : "ode/struve", residual, 1e-9, ctx.str());
}

VerificationReport zero_bounds_check(ZeroBoundKind kind, double param, int n_max, const SeriesConfig& cfg)
{
    if (n_max < 1) raise(ErrorKind::InvalidParameter, "n_max must be at least 1");
    std::ostringstream ctx;
    ctx.precision(12);
    double worst = -std::numeric_limits<double>::infinity();
    std::string name;
    if (kind == ZeroBoundKind::LommelPhi0) {
        if (!(param > 0.0 && param < 1.0)) raise(ErrorKind::InvalidParameter, "mu must lie in (0,1)");
        name = "bounds/phi0_interlace";
        const auto z = series_zeros(EvenSeries::phi(param, 0), n_max, cfg);
        for (int n = 1; n <= n_max; ++n) {
            const double x = z[static_cast<std::size_t>(n - 1)];
            worst = std::max({worst, n * pi - x, x - (n + 1) * pi});
        }
        ctx << "mu=" << param << " n<=" << n_max << " xi_1=" << z.front();
    } else {
        const bool lommel = kind == ZeroBoundKind::LommelPhi1;
        if (lommel && !(param > 0.0 && param < 1.0)) raise(ErrorKind::InvalidParameter, "mu must lie in (0,1)");
        if (!lommel) StruveOrder check(param);
        name = lommel ? "bounds/phi1_first" : "bounds/struve_first";
        const double floor = lommel ? pi / 2.0 : 1.0;
        const auto z = series_zeros(lommel ? EvenSeries::phi(param, 1) : EvenSeries::struve_kernel(param), n_max, cfg);
        worst = floor - z.front();
        for (std::size_t i = 1; i < z.size(); ++i) worst = std::max(worst, z[i - 1] - z[i]);
        ctx << (lommel ? "mu=" : "nu=") << param << " n<=" << n_max << " first=" << z.front();
    }
    return make_report(name, worst, 0.0, ctx.str());
}

VerificationReport recurrence_residual(double mu, double z, const SeriesConfig& cfg)
{
    if (mu == 0.0 || mu == -1.0) raise(ErrorKind::InvalidParameter, "recurrence requires mu outside {0,-1}");
    const EvenSeries phi0 = EvenSeries::phi(mu, 0);
    const double a = (mu + 1.0) * evaluate(EvenSeries::phi(mu, 1), z, cfg).value;
    const double b = (mu + 1.0) * evaluate(phi0, z, cfg).value;
    const double c = evaluate(phi0.euler_derivative(), z, cfg).value;
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::numeric_limits<double>::min()});
    std::ostringstream ctx;
    ctx << "mu=" << mu << " z=" << z;
    return make_report("recurrence/phi1_phi0", std::abs(a - b - c) / scale, 1e-12, ctx.str());
}

// ---------------------------------------------------------------------------

const char* to_string(Suite suite)
{
    switch (suite) {
    case Suite::Series: return "series";
    case Suite::Jensen: return "jensen";
    case Suite::Integrals: return "integrals";
    case Suite::Ode: return "ode";
    case Suite::Bounds: return "bounds";
    case Suite::Radii: return "radii";
    case Suite::All: return "all";
    }
    return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name)
{
    for (Suite s : {Suite::Series, Suite::Jensen, Suite::Integrals, Suite::Ode, Suite::Bounds, Suite::Radii,
                    Suite::All})
        if (name == to_string(s)) return s;
    return std::nullopt;
}

namespace {

void series_checks(std::vector<VerificationReport>& out, const SeriesConfig& cfg)
{
    double worst = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double z = 20.0 * i / 200.0;
        const double exact = std::sqrt(2.0 / (pi * z)) * (1.0 - std::cos(z));
        const double v = struve_H(StruveOrder(0.5), z, cfg).value;
        worst = std::max(worst, std::abs(v - exact) / std::abs(exact));
    }
    out.push_back(make_report("series/struve_half_closed_form", worst, 1e-12, "200 points in (0,20]"));

    for (double mu : {0.25, 0.5})
        for (double z : {0.0, 2.0, 5.0}) out.push_back(recurrence_residual(mu, z, cfg));

    const EvenSeries phi = EvenSeries::phi(0.5, 0);
    const auto zeros = series_zeros(phi, 40, cfg);
    double previous = std::numeric_limits<double>::infinity();
    double increase = 0.0;
    for (int n : {5, 10, 20, 40}) {
        const auto rep = hadamard_truncation_error(phi, std::span(zeros).first(static_cast<std::size_t>(n)), 1.0, cfg);
        increase = std::max(increase, rep.measured - previous);
        previous = rep.measured;
    }
    out.push_back(make_report("series/hadamard_monotone", increase, 0.0, "phi0 mu=0.5 z=1 N=5,10,20,40"));

    const PartialFractionModel model(phi, 50, cfg);
    const double r = 0.8 * zeros.front();
    double gap = 0.0;
    for (int i = 0; i < 128; ++i) {
        const auto z = std::polar(r, (pi / 2.0) * i / 127.0);
        gap = std::max(gap, std::abs(boundary_real_part(FunctionFamily::LommelG, 0.5, z, cfg) -
                                     boundary_real_part(FunctionFamily::LommelG, 0.5, z, model)));
    }
    out.push_back(make_report("series/boundary_partial_fraction", gap, 1e-9, "g mu=0.5 |z|=0.8 xi_1"));
}

struct JensenTally {
    int hyperbolic_failures = 0;
    int precedence_failures = 0;
    std::string first_failure;
};

void note_failure(JensenTally& t, int n, const char* what)
{
    if (t.first_failure.empty()) t.first_failure = std::string(what) + " at n=" + std::to_string(n);
}

void jensen_checks(std::vector<VerificationReport>& out, const SeriesConfig& cfg)
{
    constexpr int n_max = 30;
    const auto hyperbolic = [](const HyperbolicityReport& r) { return r.all_real && r.all_positive; };

    struct Pair {
        std::string name;
        EvenSeries base;
        std::vector<std::pair<std::string, EvenSeries>> derived;
        std::optional<EvenSeries> extra;  // checked for hyperbolicity only
    };
    std::vector<Pair> pairs;
    for (double mu : {0.25, 0.5, 0.75}) {
        Pair p{param_tag("mu", mu), EvenSeries::phi(mu, 0), {}, EvenSeries::phi(mu, 1)};
        for (FunctionFamily f : {FunctionFamily::LommelF, FunctionFamily::LommelG, FunctionFamily::LommelH})
            for (double a : {0.0, 0.25, 0.5, 0.75})
                p.derived.emplace_back(std::string(short_name(f)) + "/" + param_tag("alpha", a),
                                       radius_numerator(f, mu, a));
        pairs.push_back(std::move(p));
    }
    for (double nu : {-0.25, 0.0, 0.25}) {
        Pair p{param_tag("nu", nu), EvenSeries::struve_kernel(nu), {}, std::nullopt};
        for (FunctionFamily f : {FunctionFamily::StruveU, FunctionFamily::StruveV, FunctionFamily::StruveW})
            for (double a : {0.0, 0.25, 0.5, 0.75})
                p.derived.emplace_back(std::string(short_name(f)) + "/" + param_tag("alpha", a),
                                       radius_numerator(f, nu, a));
        pairs.push_back(std::move(p));
    }

    for (const Pair& pair : pairs) {
        const auto base_gamma = jensen_gamma(pair.base, n_max);
        const auto extra_gamma = pair.extra ? jensen_gamma(*pair.extra, n_max) : std::vector<Rational>{};
        std::vector<std::vector<Rational>> derived_gamma;
        for (const auto& d : pair.derived) derived_gamma.push_back(jensen_gamma(d.second, n_max));

        JensenTally base_tally;
        std::vector<JensenTally> tallies(pair.derived.size());
        for (int n = 3; n <= n_max; ++n) {
            const Polynomial p = jensen_polynomial(base_gamma, n);
            if (!hyperbolic(hyperbolicity_check(p))) {
                ++base_tally.hyperbolic_failures;
                note_failure(base_tally, n, "base");
            }
            if (pair.extra && !hyperbolic(hyperbolicity_check(jensen_polynomial(extra_gamma, n)))) {
                ++base_tally.hyperbolic_failures;
                note_failure(base_tally, n, "phi1");
            }
            for (std::size_t i = 0; i < pair.derived.size(); ++i) {
                const auto rep = hyperbolicity_check(jensen_polynomial(derived_gamma[i], n), p);
                if (!hyperbolic(rep)) {
                    ++tallies[i].hyperbolic_failures;
                    note_failure(tallies[i], n, "hyperbolicity");
                }
                if (!rep.precedence_holds.value_or(false)) {
                    ++tallies[i].precedence_failures;
                    note_failure(tallies[i], n, "precedence");
                }
            }
        }
        const std::string scope = "n=3..30 " + pair.name;
        out.push_back(make_report("jensen/hyperbolic/" + pair.name + "/kernel", base_tally.hyperbolic_failures, 0.0,
                                  scope + " " + base_tally.first_failure));
        for (std::size_t i = 0; i < pair.derived.size(); ++i) {
            const std::string tag = pair.name + "/" + pair.derived[i].first;
            out.push_back(make_report("jensen/hyperbolic/" + tag, tallies[i].hyperbolic_failures, 0.0,
                                      scope + " " + tallies[i].first_failure));
            out.push_back(make_report("jensen/precedence/" + tag, tallies[i].precedence_failures, 0.0,
                                      scope + " " + tallies[i].first_failure));
        }
    }

    // g_n(psi~) = -2 (C g_n(phi~_0) - x g_n'(phi~_0)) with C = -(mu + 1/2 - c)/2.
    for (double mu : {0.25, 0.5, 0.75}) {
        int mismatches = 0;
        for (double a : {0.0, 0.5}) {
            const double c = equation_constant(FunctionFamily::LommelG, mu, a);
            const Rational big_c = -(exact_rational(mu) + Rational(1, 2) - exact_rational(c)) / 2;
            for (int n = 1; n <= 5; ++n) {
                const Polynomial p = jensen_of(EvenSeries::phi(mu, 0), n);
                const Polynomial q = obrechkoff_combination(p, big_c).first;
                if (!(Rational(-2) * q == jensen_of(EvenSeries::lommel_numerator(mu, c), n))) ++mismatches;
            }
        }
        out.push_back(make_report("jensen/obrechkoff_identity/" + param_tag("mu", mu), mismatches, 0.0,
                                  "exact rational identity, n=1..5"));
    }

    // n * (smallest root of g_n) approaches xi_1^2/4.
    for (double mu : {0.25, 0.5, 0.75}) {
        const EvenSeries phi = EvenSeries::phi(mu, 0);
        const double xi = smallest_positive_zero([&](double z) { return evaluate(phi, z, cfg).value; }).root;
        const double limit = xi * xi / 4.0;
        double previous = std::numeric_limits<double>::infinity();
        double worst = -std::numeric_limits<double>::infinity();
        std::ostringstream ctx;
        ctx.precision(10);
        ctx << "limit=" << limit;
        for (int n : {10, 20, 40}) {
            const double gap = std::abs(n * hyperbolicity_check(jensen_of(phi, n)).min_root - limit);
            worst = std::max(worst, gap - previous);
            previous = gap;
            ctx << " n=" << n << ":" << gap;
        }
        out.push_back(make_report("jensen/convergence/" + param_tag("mu", mu), worst, 0.0, ctx.str()));
    }
}

void integral_checks(std::vector<VerificationReport>& out, const SeriesConfig& cfg)
{
    for (IntegralKind k : {IntegralKind::Phi0Sin, IntegralKind::Phi1Cos})
        for (double mu : {0.25, 0.5, 0.75})
            for (double z : {0.0, 0.5, 2.0, 5.0}) out.push_back(integral_representation_residual(k, mu, z, cfg));
    for (double nu : {-0.25, 0.0, 0.25, 0.5})
        for (double z : {0.0, 0.5, 3.0, 8.0})
            out.push_back(integral_representation_residual(IntegralKind::StruveSin, nu, z, cfg));
}

void ode_checks(std::vector<VerificationReport>& out, const SeriesConfig& cfg)
{
    for (double mu : {-0.75, -0.25, 0.25, 0.5, 0.75})
        for (double z : {0.1, 1.0, 5.0, 10.0}) out.push_back(ode_residual(OdeKind::Lommel, mu, z, cfg));
    for (double nu : {-0.25, 0.0, 0.25, 0.5})
        for (double z : {0.1, 1.0, pi, 10.0}) out.push_back(ode_residual(OdeKind::Struve, nu, z, cfg));
}

void bound_checks(std::vector<VerificationReport>& out, const SeriesConfig& cfg)
{
    for (double mu : {0.25, 0.5, 0.75}) {
        out.push_back(zero_bounds_check(ZeroBoundKind::LommelPhi0, mu, 10, cfg));
        out.push_back(zero_bounds_check(ZeroBoundKind::LommelPhi1, mu, 5, cfg));
    }
    for (double nu : {-0.25, 0.0, 0.25}) out.push_back(zero_bounds_check(ZeroBoundKind::Struve, nu, 5, cfg));
}

void radius_checks(std::vector<VerificationReport>& out, const SeriesConfig& cfg)
{
    RadiusConfig rc;
    rc.series = cfg;
    const std::vector<double> alphas{0.0, 0.25, 0.5, 0.75};
    const auto sweep = [&](FunctionFamily family, const std::vector<double>& params) {
        for (const TableRow& row : radius_table(family, params, alphas, rc)) {
            std::ostringstream ctx;
            ctx.precision(17);
            ctx << short_name(family) << " param=" << row.param << " alpha=" << row.alpha;
            const std::string tag = std::string(short_name(family)) + "/" + param_tag("p", row.param) + "/" +
                                    param_tag("alpha", row.alpha);
            if (!row.result) {
                out.push_back(make_report("radii/certified/" + tag, 1.0, 0.0, ctx.str() + " " + row.error));
                continue;
            }
            const RadiusResult& r = *row.result;
            ctx << " radius=" << r.radius << " inner=" << r.inner_min << " outer=" << r.outer_min;
            out.push_back(make_report("radii/certified/" + tag, r.certified ? 0.0 : 1.0, 0.0, ctx.str()));
            if (r.regime != Regime::ImaginaryAxis)
                out.push_back(make_report("radii/precedence/" + tag, r.equation_root - r.first_zero, -1e-8,
                                          ctx.str()));
        }
    };
    sweep(FunctionFamily::LommelF, {-0.75, -0.25, 0.25, 0.5, 0.75});
    sweep(FunctionFamily::LommelG, {-0.75, -0.25, 0.25, 0.5, 0.75});
    sweep(FunctionFamily::LommelH, {-0.75, -0.25, 0.25, 0.5, 0.75});
    sweep(FunctionFamily::StruveU, {-0.25, 0.0, 0.25});
    sweep(FunctionFamily::StruveV, {-0.25, 0.0, 0.25});
    sweep(FunctionFamily::StruveW, {-0.25, 0.0, 0.25});
}

}  // namespace

std::vector<VerificationReport> run_suite(Suite suite, const SeriesConfig& cfg)
{
    std::vector<VerificationReport> out;
    const auto want = [&](Suite s) { return suite == Suite::All || suite == s; };
    if (want(Suite::Series)) series_checks(out, cfg);
    if (want(Suite::Jensen)) jensen_checks(out, cfg);
    if (want(Suite::Integrals)) integral_checks(out, cfg);
    if (want(Suite::Ode)) ode_checks(out, cfg);
    if (want(Suite::Bounds)) bound_checks(out, cfg);
    if (want(Suite::Radii)) radius_checks(out, cfg);
    std::stable_sort(out.begin(), out.end(),
                     [](const VerificationReport& a, const VerificationReport& b) { return a.check_name < b.check_name; });
    return out;
}

}  // namespace starrad
