#include "starrad/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/multiprecision/mpfr.hpp>

#include "starrad/errors.hpp"

namespace starrad {

namespace {

namespace mp = boost::multiprecision;

template <unsigned Digits>
using MpfrReal = mp::number<mp::mpfr_float_backend<Digits>, mp::et_off>;

bool is_nonpositive_integer(double b) { return b <= 0.0 && b == std::floor(b); }

std::string describe(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

template <class Real>
Real horner(const std::vector<double>& q, const Real& k)
{
    Real acc(0);
    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * k + Real(*it);
    return acc;
}

template <class Real>
double to_double(const Real& x)
{
    if constexpr (std::is_same_v<Real, double>)
        return x;
    else
        return x.template convert_to<double>();
}

template <class Real>
struct PartialSum {
    Real sum;
    double rounding = 0.0;  // first-order bound on accumulated rounding
    double tail = 0.0;      // truncation bound
    int terms = 0;
    double weighted = 0.0;  // sum of (3k + 4)|t_k|
};

// Sums q(k) x^k / ((b1)_k (b2)_k) with the multiplicative term recurrence
// and Neumaier compensation. Stops once the truncation bound drops below the
// requested tolerance, or below the rounding floor of the arithmetic.
template <class Real>
PartialSum<Real> sum_terms(const EvenSeries& s, const Real& x, const SeriesConfig& cfg, double eps)
{
    using std::abs;
    const Real b1(s.b1());
    const Real b2(s.b2());
    const double xmag = to_double(Real(abs(x)));
    const int k_mono = s.monotone_index();
    const bool alternating = to_double(x) < 0.0;

    Real base(1);
    Real sum(0);
    Real comp(0);
    double weighted = 0.0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        const Real term = base * horner(s.numerator(), Real(k));
        const Real t = sum + term;
        if (abs(sum) >= abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
        weighted += (3.0 * k + 4.0) * to_double(Real(abs(term)));

        const Real kb = Real(k);
        base = base * x / ((b1 + kb) * (b2 + kb));
        const int j = k + 1;
        if (j < k_mono) continue;

        const double qj = s.numerator_at(j);
        const double qj1 = s.numerator_at(j + 1);
        const double rho =
            xmag / ((s.b1() + j) * (s.b2() + j)) * (qj == 0.0 ? 0.0 : std::abs(qj1 / qj));
        if (!(rho < 1.0)) continue;

        const double next = std::abs(to_double(base)) * std::abs(qj);
        const double tail = alternating ? next : next / (1.0 - rho);
        const double total = std::abs(to_double(Real(sum + comp)));
        if (tail <= std::max({cfg.rel_tol * total, cfg.abs_tol, eps * weighted})) {
            return {sum + comp, eps * weighted, tail, j, weighted};
        }
    }
    raise(ErrorKind::NonConvergent,
          "series did not converge within " + std::to_string(cfg.max_terms) + " terms at x = " +
              describe(to_double(x)));
}

template <unsigned Digits>
SeriesValue sum_extended(const EvenSeries& s, double x, const SeriesConfig& cfg)
{
    using Real = MpfrReal<Digits>;
    const double eps = 2.0 * std::pow(10.0, -static_cast<double>(Digits));
    const auto part = sum_terms<Real>(s, Real(x), cfg, eps);
    const double value = to_double(part.sum);
    const double unit_roundoff = std::numeric_limits<double>::epsilon() * 0.5 * std::abs(value);
    return {value, part.tail + part.rounding + unit_roundoff, part.terms};
}

}  // namespace

void SeriesConfig::validate() const
{
    if (!(rel_tol > 0.0)) raise(ErrorKind::InvalidParameter, "rel_tol must be positive");
    if (!(abs_tol >= 0.0)) raise(ErrorKind::InvalidParameter, "abs_tol must be non-negative");
    if (max_terms < 8) raise(ErrorKind::InvalidParameter, "max_terms must be at least 8");
}

EvenSeries::EvenSeries(double b1, double b2, std::vector<double> numerator)
    : b1_(b1), b2_(b2), numerator_(std::move(numerator))
{
    if (!std::isfinite(b1) || !std::isfinite(b2))
        raise(ErrorKind::InvalidParameter, "Pochhammer bases must be finite");
    if (is_nonpositive_integer(b1) || is_nonpositive_integer(b2))
        raise(ErrorKind::InvalidParameter,
              "Pochhammer base is a non-positive integer (b1 = " + describe(b1) +
                  ", b2 = " + describe(b2) + ")");
    while (numerator_.size() > 1 && numerator_.back() == 0.0) numerator_.pop_back();
    if (numerator_.empty()) numerator_.push_back(0.0);
    for (double c : numerator_)
        if (!std::isfinite(c)) raise(ErrorKind::InvalidParameter, "numerator coefficient not finite");
}

EvenSeries EvenSeries::phi(double mu, int k)
{
    return EvenSeries((mu - k + 2.0) / 2.0, (mu - k + 3.0) / 2.0);
}

EvenSeries EvenSeries::struve_kernel(double nu) { return EvenSeries(1.5, nu + 1.5); }

EvenSeries EvenSeries::lommel_numerator(double mu, double c)
{
    return EvenSeries((mu + 2.0) / 2.0, (mu + 3.0) / 2.0, {mu + 0.5 - c, 2.0});
}

EvenSeries EvenSeries::struve_numerator(double nu, double d)
{
    return EvenSeries(1.5, nu + 1.5, {nu + 1.0 - d, 2.0});
}

double EvenSeries::numerator_at(double k) const { return horner(numerator_, k); }

double EvenSeries::coeff(int k) const
{
    double c = 1.0;
    for (int j = 0; j < k; ++j) c /= (b1_ + j) * (b2_ + j);
    return c * numerator_at(k);
}

std::vector<Rational> EvenSeries::exact_coefficients(int count) const
{
    std::vector<Rational> out;
    out.reserve(count);
    const Rational b1 = exact_rational(b1_);
    const Rational b2 = exact_rational(b2_);
    Rational base(1);
    for (int k = 0; k < count; ++k) {
        Rational q(0);
        for (auto it = numerator_.rbegin(); it != numerator_.rend(); ++it)
            q = q * k + exact_rational(*it);
        out.push_back(base * q);
        base /= (b1 + k) * (b2 + k);
    }
    return out;
}

EvenSeries EvenSeries::euler_derivative() const
{
    std::vector<double> q(numerator_.size() + 1, 0.0);
    for (std::size_t i = 0; i < numerator_.size(); ++i) q[i + 1] = 2.0 * numerator_[i];
    return EvenSeries(b1_, b2_, std::move(q));
}

int EvenSeries::monotone_index() const
{
    double bound = std::max({0.0, -b1_, -b2_});
    if (numerator_.size() > 1) {
        const double lead = numerator_.back();
        double cauchy = 0.0;
        for (std::size_t i = 0; i + 1 < numerator_.size(); ++i)
            cauchy = std::max(cauchy, std::abs(numerator_[i] / lead));
        bound = std::max(bound, 1.0 + cauchy);
    }
    return static_cast<int>(std::ceil(bound)) + 1;
}

LommelOrder LommelOrder::specialized(double mu)
{
    if (!(mu > -1.0 && mu < 1.0) || mu == 0.0)
        raise(ErrorKind::InvalidParameter, "Lommel order mu must lie in (-1,1) without 0, got " +
                                               describe(mu));
    return LommelOrder(mu - 0.5, 0.5, mu);
}

LommelOrder LommelOrder::general(double mu_raw, double nu_raw)
{
    if (!std::isfinite(mu_raw) || !std::isfinite(nu_raw))
        raise(ErrorKind::InvalidParameter, "Lommel order must be finite");
    const double d1 = mu_raw - nu_raw + 1.0;
    const double d2 = mu_raw + nu_raw + 1.0;
    if (d1 == 0.0 || d2 == 0.0)
        raise(ErrorKind::InvalidParameter, "Lommel normalization denominator vanishes");
    if (is_nonpositive_integer((d1 + 2.0) / 2.0) || is_nonpositive_integer((d2 + 2.0) / 2.0))
        raise(ErrorKind::InvalidParameter, "Lommel order hits a pole of the 1F2 representation");
    return LommelOrder(mu_raw, nu_raw, std::nullopt);
}

StruveOrder::StruveOrder(double nu, bool strict) : nu_(nu), strict_(strict)
{
    const bool ok = strict ? std::abs(nu) < 0.5 : std::abs(nu) <= 0.5;
    if (!ok)
        raise(ErrorKind::InvalidParameter,
              std::string("Struve order outside ") + (strict ? "|nu| < 1/2" : "|nu| <= 1/2") +
                  ": " + describe(nu));
}

SeriesValue sum_series(const EvenSeries& series, double x, const SeriesConfig& cfg)
{
    cfg.validate();
    if (!std::isfinite(x)) raise(ErrorKind::InvalidParameter, "series argument not finite");
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const auto part = sum_terms<double>(series, x, cfg, eps);
    SeriesValue out{part.sum, part.tail + part.rounding, part.terms};
    const double target = std::max(cfg.rel_tol * std::abs(out.value), cfg.abs_tol);
    if (out.err_bound <= target || !cfg.extended_fallback) return out;

    // Cancellation: magnitude of the largest partial terms decides precision.
    const double digits = 25.0 + std::log10(std::max(1.0, part.weighted));
    if (digits <= 50.0) return sum_extended<50>(series, x, cfg);
    if (digits <= 100.0) return sum_extended<100>(series, x, cfg);
    return sum_extended<200>(series, x, cfg);
}

ComplexSeriesValue sum_series(const EvenSeries& series, std::complex<double> x,
                              const SeriesConfig& cfg)
{
    cfg.validate();
    const double xmag = std::abs(x);
    const int k_mono = series.monotone_index();
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::complex<double> base(1.0, 0.0);
    std::complex<double> sum(0.0, 0.0);
    double weighted = 0.0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        const std::complex<double> term = base * series.numerator_at(k);
        sum += term;
        weighted += (3.0 * k + 4.0) * std::abs(term);
        base = base * x / ((series.b1() + k) * (series.b2() + k));
        const int j = k + 1;
        if (j < k_mono) continue;
        const double qj = series.numerator_at(j);
        const double qj1 = series.numerator_at(j + 1);
        const double rho = xmag / ((series.b1() + j) * (series.b2() + j)) *
                           (qj == 0.0 ? 0.0 : std::abs(qj1 / qj));
        if (!(rho < 1.0)) continue;
        const double tail = std::abs(base) * std::abs(qj) / (1.0 - rho);
        if (tail <= std::max({cfg.rel_tol * std::abs(sum), cfg.abs_tol, eps * weighted}))
            return {sum, tail + eps * weighted, j};
    }
    raise(ErrorKind::NonConvergent, "complex series did not converge within " +
                                        std::to_string(cfg.max_terms) + " terms");
}

SeriesValue evaluate(const EvenSeries& series, double z, const SeriesConfig& cfg)
{
    return sum_series(series, -(z * z) / 4.0, cfg);
}

SeriesValue eval_on_imag(const EvenSeries& series, double r, const SeriesConfig& cfg)
{
    if (!(r >= 0.0)) raise(ErrorKind::InvalidParameter, "imaginary-axis radius must be >= 0");
    return sum_series(series, r * r / 4.0, cfg);
}

SeriesValue hyp1f2_unit(double b1, double b2, double x, const SeriesConfig& cfg)
{
    return sum_series(EvenSeries(b1, b2), x, cfg);
}

SeriesValue phi_k(double mu, int k, double z, const SeriesConfig& cfg)
{
    if (k < 0) raise(ErrorKind::InvalidParameter, "phi_k index must be non-negative");
    if (is_nonpositive_integer(mu - k))
        raise(ErrorKind::InvalidParameter, "phi_k requires mu - k outside {0,-1,-2,...}");
    return evaluate(EvenSeries::phi(mu, k), z, cfg);
}

SeriesValue lommel_s(const LommelOrder& order, double z, const SeriesConfig& cfg)
{
    if (!(z > 0.0)) raise(ErrorKind::InvalidParameter, "lommel_s requires z > 0");
    const double m = order.mu_raw();
    const double n = order.nu_raw();
    const EvenSeries kernel((m - n + 3.0) / 2.0, (m + n + 3.0) / 2.0);
    const SeriesValue f = evaluate(kernel, z, cfg);
    const double scale = std::pow(z, m + 1.0) / ((m - n + 1.0) * (m + n + 1.0));
    return {scale * f.value, std::abs(scale) * f.err_bound, f.terms_used};
}

double struve_normalization(double nu)
{
    return std::sqrt(std::numbers::pi) * std::tgamma(nu + 1.5) / 2.0;
}

SeriesValue struve_H(const StruveOrder& order, double z, const SeriesConfig& cfg)
{
    if (!(z > 0.0)) raise(ErrorKind::InvalidParameter, "struve_H requires z > 0");
    const double nu = order.nu();
    const SeriesValue f = evaluate(EvenSeries::struve_kernel(nu), z, cfg);
    const double scale = std::pow(z / 2.0, nu + 1.0) / struve_normalization(nu);
    return {scale * f.value, std::abs(scale) * f.err_bound, f.terms_used};
}

SeriesValue lommel_num(double mu, double c, double z, const SeriesConfig& cfg)
{
    if (!(mu > -1.0 && mu < 1.0) || mu == 0.0)
        raise(ErrorKind::InvalidParameter, "lommel_num requires mu in (-1,1), mu != 0");
    return evaluate(EvenSeries::lommel_numerator(mu, c), z, cfg);
}

SeriesValue struve_num(double nu, double d, double z, const SeriesConfig& cfg)
{
    if (!(std::abs(nu) <= 0.5)) raise(ErrorKind::InvalidParameter, "struve_num requires |nu| <= 1/2");
    return evaluate(EvenSeries::struve_numerator(nu, d), z, cfg);
}

FamilyModel family_model(FunctionFamily family, double param)
{
    switch (family) {
    case FunctionFamily::LommelF:
        return {EvenSeries::phi(param, 0), 1.0 / (param + 0.5), false, param + 0.5};
    case FunctionFamily::LommelG:
        return {EvenSeries::phi(param, 0), 1.0, false, param + 0.5};
    case FunctionFamily::LommelH:
        return {EvenSeries::phi(param, 0), 0.5, true, param + 0.5};
    case FunctionFamily::StruveU:
        return {EvenSeries::struve_kernel(param), 1.0 / (param + 1.0), false, param + 1.0};
    case FunctionFamily::StruveV:
        return {EvenSeries::struve_kernel(param), 1.0, false, param + 1.0};
    case FunctionFamily::StruveW:
        return {EvenSeries::struve_kernel(param), 0.5, true, param + 1.0};
    }
    raise(ErrorKind::InvalidParameter, "unknown family");
}

double star_quotient(FunctionFamily family, double param, double r, const SeriesConfig& cfg)
{
    if (!(r >= 0.0)) raise(ErrorKind::InvalidParameter, "star_quotient requires r >= 0");
    const FamilyModel model = family_model(family, param);
    const double w = model.sqrt_argument ? std::sqrt(r) : r;
    const SeriesValue b = evaluate(model.base, w, cfg);
    if (std::abs(b.value) <= std::max(cfg.abs_tol, b.err_bound))
        raise(ErrorKind::SingularPoint, "base function vanishes at r = " + describe(r));
    const SeriesValue db = evaluate(model.base.euler_derivative(), w, cfg);
    return 1.0 + model.weight * db.value / b.value;
}

double imaginary_axis_quotient(double mu, double r, const SeriesConfig& cfg)
{
    const SeriesValue num = eval_on_imag(EvenSeries::lommel_numerator(mu, 0.0), r, cfg);
    const SeriesValue den = eval_on_imag(EvenSeries::phi(mu, 0), r, cfg);
    return num.value / den.value;
}

}  // namespace starrad
