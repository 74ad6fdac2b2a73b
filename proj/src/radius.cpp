#include "starrad/radius.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "starrad/errors.hpp"
#include "starrad/verification.hpp"

namespace starrad {

namespace {

std::string describe(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

bool imaginary_regime(FunctionFamily family, double param)
{
    return family == FunctionFamily::LommelF && param < -0.5;
}

}  // namespace

const char* to_string(Regime regime)
{
    switch (regime) {
    case Regime::RealAxis: return "real_axis";
    case Regime::ImaginaryAxis: return "imaginary_axis";
    case Regime::SqrtTransformed: return "sqrt_transformed";
    }
    return "unknown";
}

void validate(const RadiusQuery& q)
{
    if (!std::isfinite(q.alpha) || q.alpha < 0.0 || q.alpha >= 1.0)
        raise(ErrorKind::InvalidQuery, "alpha must lie in [0,1), got " + describe(q.alpha));
    if (!std::isfinite(q.param)) raise(ErrorKind::InvalidQuery, "parameter must be finite");
    const bool strict = q.mode == ParameterMode::Strict;
    if (is_lommel(q.family)) {
        if (!(q.param > -1.0 && q.param < 1.0))
            raise(ErrorKind::InvalidQuery, "mu must lie in (-1,1), got " + describe(q.param));
        if (q.param == 0.0 && (strict || q.family == FunctionFamily::LommelF))
            raise(ErrorKind::InvalidQuery, "mu = 0 is excluded");
        if (q.family == FunctionFamily::LommelF && q.param == -0.5)
            raise(ErrorKind::InvalidQuery, "mu = -1/2 makes the normalization of f singular");
    } else {
        const double a = std::abs(q.param);
        if (strict ? !(a < 0.5) : !(a <= 0.5))
            raise(ErrorKind::InvalidQuery,
                  std::string("nu must satisfy ") + (strict ? "|nu| < 1/2" : "|nu| <= 1/2") +
                      ", got " + describe(q.param));
    }
}

double equation_constant(FunctionFamily family, double p, double alpha)
{
    switch (family) {
    case FunctionFamily::LommelF: return alpha * (p + 0.5);
    case FunctionFamily::LommelG: return p + alpha - 0.5;
    case FunctionFamily::LommelH: return p + 2.0 * alpha - 1.5;
    case FunctionFamily::StruveU: return alpha * (p + 1.0);
    case FunctionFamily::StruveV: return alpha + p;
    case FunctionFamily::StruveW: return 2.0 * alpha + p - 1.0;
    }
    raise(ErrorKind::InvalidParameter, "unknown family");
}

EvenSeries radius_numerator(FunctionFamily family, double param, double alpha)
{
    const double c = equation_constant(family, param, alpha);
    return is_lommel(family) ? EvenSeries::lommel_numerator(param, c)
                             : EvenSeries::struve_numerator(param, c);
}

RadiusResult radius_of_starlikeness(const RadiusQuery& query, const RadiusConfig& cfg)
{
    validate(query);
    cfg.series.validate();
    cfg.scan.validate();

    const FunctionFamily family = query.family;
    const double p = query.param;
    const FamilyModel model = family_model(family, p);

    RadiusResult out;
    out.equation_constant = equation_constant(family, p, query.alpha);
    out.proof_derived = family == FunctionFamily::LommelF && p > 0.0;

    const auto base = [&](double x) { return evaluate(model.base, x, cfg.series).value; };
    // At nu = 1/2 the kernel is 2(1 - cos z)/z^2: double zeros, no sign change.
    if (!is_lommel(family) && p == 0.5)
        out.first_zero = 2.0 * std::numbers::pi;
    else
        out.first_zero = smallest_positive_zero(base, cfg.scan).root;

    RealFunction equation;
    RootResult root;
    if (imaginary_regime(family, p)) {
        out.regime = Regime::ImaginaryAxis;
        equation = [&](double r) { return imaginary_axis_quotient(p, r, cfg.series) - out.equation_constant; };
        root = solve_monotone_level([&](double r) { return imaginary_axis_quotient(p, r, cfg.series); },
                                    out.equation_constant, cfg.scan);
    } else {
        out.regime = model.sqrt_argument ? Regime::SqrtTransformed : Regime::RealAxis;
        const EvenSeries numerator = radius_numerator(family, p, query.alpha);
        equation = [numerator, &cfg](double x) { return evaluate(numerator, x, cfg.series).value; };
        root = smallest_positive_zero(equation, cfg.scan, out.first_zero + cfg.scan.initial_step);
    }

    out.equation_root = root.root;
    out.bracket = root.bracket;
    out.residual = root.residual;
    const double half = cfg.scan.initial_step / 2.0;
    out.residual_scale = std::max(std::abs(equation(std::max(0.0, root.root - half))),
                                  std::abs(equation(root.root + half)));
    out.radius = model.sqrt_argument ? root.root * root.root : root.root;

    if (cfg.certify) {
        const double d = cfg.certify_offset;
        out.inner_min =
            boundary_min_real_part(family, p, out.radius * (1.0 - d), cfg.certify_samples, cfg.series).min_value;
        out.outer_min =
            boundary_min_real_part(family, p, out.radius * (1.0 + d), cfg.certify_samples, cfg.series).min_value;
        out.certified = out.inner_min > query.alpha && out.outer_min < query.alpha;
    }
    return out;
}

std::vector<TableRow> radius_table(FunctionFamily family, const std::vector<double>& params,
                                   const std::vector<double>& alphas, const RadiusConfig& cfg,
                                   ParameterMode mode)
{
    std::vector<TableRow> rows;
    rows.reserve(params.size() * alphas.size());
    for (double p : params)
        for (double a : alphas) rows.push_back({family, p, a, std::nullopt, std::nullopt, {}});
    std::stable_sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) {
        return x.param != y.param ? x.param < y.param : x.alpha < y.alpha;
    });

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            TableRow& row = rows[i];
            try {
                row.result = radius_of_starlikeness({family, row.param, row.alpha, mode}, cfg);
            } catch (const Error& e) {
                row.error_kind = e.kind();
                row.error = e.what();
            }
        }
    };
    const unsigned n_threads =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(rows.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

}  // namespace starrad
