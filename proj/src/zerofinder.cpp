#include "starrad/zerofinder.hpp"

#include <cmath>
#include <sstream>

#include "starrad/errors.hpp"

namespace starrad {

namespace {

double checked(const RealFunction& f, double x)
{
    const double v = f(x);
    if (std::isnan(v)) {
        std::ostringstream os;
        os.precision(17);
        os << "function is NaN at " << x;
        raise(ErrorKind::InvalidParameter, os.str());
    }
    return v;
}

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

// Grid lo, lo + step, ..., hi; stops after max_count brackets.
std::vector<Bracket> scan(const RealFunction& f, Bracket interval, double step, std::size_t max_count)
{
    std::vector<Bracket> out;
    double a = interval.lo;
    double fa = checked(f, a);
    for (long i = 1; out.size() < max_count; ++i) {
        const double b = std::min(interval.lo + static_cast<double>(i) * step, interval.hi);
        const double fb = checked(f, b);
        if (fa != 0.0 && (fb == 0.0 || opposite(fa, fb))) out.push_back({a, b});
        if (b >= interval.hi) break;
        a = b;
        fa = fb;
    }
    return out;
}

}  // namespace

void ScanConfig::validate() const
{
    if (!(initial_step > 0.0)) raise(ErrorKind::InvalidParameter, "scan step must be positive");
    if (!(max_radius > initial_step))
        raise(ErrorKind::InvalidParameter, "max_radius must exceed the scan step");
    if (!(root_tol > 0.0)) raise(ErrorKind::InvalidParameter, "root_tol must be positive");
}

std::vector<Bracket> scan_sign_changes(const RealFunction& f, Bracket interval, double step)
{
    if (!(step > 0.0)) raise(ErrorKind::InvalidParameter, "scan step must be positive");
    if (!(interval.hi > interval.lo)) return {};
    return scan(f, interval, step, static_cast<std::size_t>(-1));
}

RootResult bisect(const RealFunction& f, Bracket bracket, double tol)
{
    double lo = bracket.lo;
    double hi = bracket.hi;
    double flo = checked(f, lo);
    double fhi = checked(f, hi);
    if (flo == 0.0) return {lo, 0.0, 0, {lo, lo}};
    if (fhi == 0.0) return {hi, 0.0, 0, {hi, hi}};
    if (!opposite(flo, fhi)) {
        std::ostringstream os;
        os.precision(17);
        os << "no sign change on [" << lo << ", " << hi << "]";
        raise(ErrorKind::NoSignChange, os.str());
    }
    int iterations = 0;
    while (hi - lo > tol) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;
        const double fm = checked(f, mid);
        ++iterations;
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (opposite(flo, fm)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    const double root = lo + (hi - lo) / 2.0;
    return {root, checked(f, root), iterations, {lo, hi}};
}

RootResult smallest_positive_zero(const RealFunction& f, const ScanConfig& cfg,
                                  std::optional<double> hint_upper)
{
    cfg.validate();
    if (checked(f, 0.0) == 0.0)
        raise(ErrorKind::PreconditionViolated, "function vanishes at the origin");

    const double upper = hint_upper ? std::min(*hint_upper, cfg.max_radius) : cfg.max_radius;
    auto first = scan(f, {0.0, upper}, cfg.initial_step, 1);
    if (first.empty() && upper < cfg.max_radius)
        first = scan(f, {upper, cfg.max_radius}, cfg.initial_step, 1);
    if (first.empty()) {
        std::ostringstream os;
        os << "no sign change below max_radius = " << cfg.max_radius;
        raise(ErrorKind::NoRootFound, os.str());
    }

    // A close pair of roots can hide inside one step; look again at half step.
    const auto refined = scan(f, {0.0, first.front().hi}, cfg.initial_step / 2.0, 1);
    const Bracket bracket = refined.empty() ? first.front() : refined.front();
    return bisect(f, bracket, cfg.root_tol);
}

Bracket monotone_level_bracket(const RealFunction& q, double target, const ScanConfig& cfg)
{
    cfg.validate();
    const double q0 = checked(q, 0.0);
    if (!(target > q0)) {
        std::ostringstream os;
        os.precision(17);
        os << "target " << target << " does not exceed q(0) = " << q0;
        raise(ErrorKind::TargetBelowInfimum, os.str());
    }
    double lo = 0.0;
    double hi = cfg.initial_step;
    while (checked(q, hi) <= target) {
        lo = hi;
        hi *= 2.0;
        if (hi > cfg.max_radius) raise(ErrorKind::NoRootFound, "level not reached below max_radius");
    }
    return {lo, hi};
}

RootResult solve_monotone_level(const RealFunction& q, double target, const ScanConfig& cfg)
{
    const Bracket bracket = monotone_level_bracket(q, target, cfg);
    return bisect([&](double r) { return q(r) - target; }, bracket, cfg.root_tol);
}

std::vector<RootResult> positive_zeros_up_to(const RealFunction& f, int n, const ScanConfig& cfg)
{
    cfg.validate();
    if (n < 1) raise(ErrorKind::InvalidParameter, "zero count must be at least 1");
    const auto count = static_cast<std::size_t>(n);
    auto brackets = scan(f, {0.0, cfg.max_radius}, cfg.initial_step, count);
    if (brackets.size() < count) {
        std::ostringstream os;
        os << "found " << brackets.size() << " of " << n << " zeros below " << cfg.max_radius;
        raise(ErrorKind::NoRootFound, os.str());
    }
    auto refined = scan(f, {0.0, brackets.back().hi}, cfg.initial_step / 2.0, count);
    if (refined.size() == count) brackets = std::move(refined);

    std::vector<RootResult> out;
    out.reserve(count);
    for (const Bracket& b : brackets) out.push_back(bisect(f, b, cfg.root_tol));
    return out;
}

bool sampled_nondecreasing(const RealFunction& q, Bracket bracket, int samples, double tol)
{
    double prev = checked(q, bracket.lo);
    for (int i = 1; i < samples; ++i) {
        const double x = bracket.lo + bracket.width() * i / (samples - 1);
        const double v = checked(q, x);
        if (v < prev - tol) return false;
        prev = v;
    }
    return true;
}

}  // namespace starrad
