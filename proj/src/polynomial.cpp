#include "starrad/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "starrad/errors.hpp"

namespace starrad {

namespace {

using IntPoly = std::vector<BigInt>;

int sign_of(const BigInt& v) { return v.sign(); }

void trim_int(IntPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p)
{
    BigInt g = 0;
    for (const auto& c : p) {
        if (c != 0) g = boost::multiprecision::gcd(g, BigInt(abs(c)));
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& c : p) c /= g;
}

IntPoly to_primitive_integer(const Polynomial& p)
{
    BigInt lcm = 1;
    for (const auto& c : p.coefficients())
        lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(c)));
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(numerator(c) * (lcm / denominator(c)));
    make_primitive(out);
    return out;
}

IntPoly derivative_int(const IntPoly& p)
{
    IntPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
    trim_int(out);
    return out;
}

// Remainder of a by b up to a positive factor.
IntPoly positive_pseudo_remainder(IntPoly a, const IntPoly& b)
{
    const int n = static_cast<int>(b.size()) - 1;
    const BigInt lb = abs(b.back());
    const int sb = sign_of(b.back());
    trim_int(a);
    while (static_cast<int>(a.size()) - 1 >= n) {
        const BigInt lead = a.back();
        const int shift = static_cast<int>(a.size()) - 1 - n;
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= n; ++i) {
            if (sb > 0)
                a[i + shift] -= lead * b[i];
            else
                a[i + shift] += lead * b[i];
        }
        trim_int(a);
        make_primitive(a);
    }
    return a;
}

// Sign of p(num/den) for den > 0, via homogenized Horner.
int sign_at(const IntPoly& p, const BigInt& num, const BigInt& den)
{
    if (p.empty()) return 0;
    BigInt acc = p.back();
    BigInt dpow = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        dpow *= den;
        acc = acc * num + p[i] * dpow;
    }
    return sign_of(acc);
}

int count_variations(const std::vector<int>& signs)
{
    int v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

Rational dyadic_bound(const Polynomial& p)
{
    // Cauchy: every root satisfies |x| <= 1 + max |a_i / a_n|.
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeff(i) / p.leading());
        if (r > m) m = r;
    }
    Rational bound(1);
    while (bound < m + 1) bound *= 2;
    return bound;
}

Polynomial squarefree_part(const Polynomial& p)
{
    if (p.degree() < 1) return p;
    const Polynomial g = gcd(p, p.derivative());
    if (g.degree() < 1) return p;
    return divide(p, g).quotient;
}

// Incrementally refined isolating interval (lo, hi] for the smallest real root.
// Once the interval holds a single root, only the sign of p itself is needed.
class SmallestRootIsolator {
public:
    explicit SmallestRootIsolator(const Polynomial& p)
    {
        try {
            sturm_.emplace(p);
            squarefree_ = p;
            squarefree_input_ = true;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateSequence) throw;
            squarefree_ = squarefree_part(p);
            sturm_.emplace(squarefree_);
        }
        has_root_ = sturm_->count(RealInterval::whole_line()) > 0;
        if (!has_root_) return;
        hi_ = dyadic_bound(squarefree_);
        lo_ = -hi_;
        v_lo_ = sturm_->variations_at(lo_);
        v_hi_ = sturm_->variations_at(hi_);
        if (v_lo_ - v_hi_ == 1) sign_lo_ = sturm_->sign_at(lo_);
    }

    bool has_root() const { return has_root_; }
    bool squarefree_input() const { return squarefree_input_; }
    const SturmSequence& sturm() const { return *sturm_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    void refine()
    {
        const Rational mid = (lo_ + hi_) / 2;
        if (sign_lo_ != 0) {
            const int s = sturm_->sign_at(mid);
            if (s == 0) {
                lo_ = hi_ = mid;
            } else if (s == sign_lo_) {
                lo_ = mid;
            } else {
                hi_ = mid;
            }
            return;
        }
        const int v_mid = sturm_->variations_at(mid);
        if (v_lo_ - v_mid >= 1) {
            hi_ = mid;
            v_hi_ = v_mid;
        } else {
            lo_ = mid;
            v_lo_ = v_mid;
        }
        if (v_lo_ - v_hi_ == 1) sign_lo_ = sturm_->sign_at(lo_);
    }

    void refine_to(double rel_width)
    {
        for (int it = 0; it < 4000; ++it) {
            const Rational w = hi_ - lo_;
            const Rational scale = std::max(abs(lo_), abs(hi_));
            if (w <= Rational(rel_width) * scale || w == 0) return;
            refine();
        }
    }

private:
    Polynomial squarefree_;
    std::optional<SturmSequence> sturm_;
    bool squarefree_input_ = false;
    bool has_root_ = false;
    Rational lo_;
    Rational hi_;
    int v_lo_ = 0;
    int v_hi_ = 0;
    int sign_lo_ = 0;  // sign of p on (lo, root) once a single root is bracketed
};

double midpoint_double(const Rational& lo, const Rational& hi)
{
    return static_cast<double>(Rational((lo + hi) / 2));
}

// -1 if the smallest root of a is below that of b, +1 if above, 0 if the
// isolating intervals never separate (equal roots).
int compare_smallest_roots(SmallestRootIsolator& a, SmallestRootIsolator& b)
{
    for (int it = 0; it < 600; ++it) {
        if (a.hi() < b.lo()) return -1;
        if (b.hi() < a.lo()) return 1;
        if (a.hi() == a.lo() && b.hi() == b.lo()) return 0;
        if (a.hi() - a.lo() >= b.hi() - b.lo())
            a.refine();
        else
            b.refine();
    }
    return 0;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::from_doubles(std::span<const double> ascending)
{
    std::vector<Rational> c;
    c.reserve(ascending.size());
    for (double v : ascending) {
        if (!std::isfinite(v)) raise(ErrorKind::InvalidParameter, "polynomial coefficient not finite");
        c.push_back(exact_rational(v));
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const Rational> roots)
{
    Polynomial p({Rational(1)});
    for (const auto& r : roots) p = p * Polynomial({-r, Rational(1)});
    return p;
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const
{
    if (i < 0 || i > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Polynomial Polynomial::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
    return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::evaluate(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
    return acc;
}

std::vector<double> Polynomial::to_doubles() const
{
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(static_cast<double>(c));
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p)
{
    std::vector<Rational> out(p.coeffs_);
    for (auto& v : out) v *= c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted() const
{
    if (is_zero()) return {};
    std::vector<Rational> out;
    out.reserve(coeffs_.size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
}

DivisionResult divide(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) raise(ErrorKind::InvalidParameter, "polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational f = rem[static_cast<std::size_t>(k + db)] / b.leading();
        quot[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= f * b.coeff(i);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divide(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return Rational(1) / x.leading() * x;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p)
{
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() < 1) return out;
    const Polynomial dp = p.derivative();
    const Polynomial b = gcd(p, dp);
    Polynomial c = divide(p, b).quotient;
    Polynomial d = divide(dp, b).quotient - c.derivative();
    for (int i = 1; c.degree() >= 1; ++i) {
        const Polynomial a = gcd(c, d);
        c = divide(c, a).quotient;
        d = divide(d, a).quotient - c.derivative();
        if (a.degree() >= 1) out.emplace_back(a, i);
    }
    return out;
}

SturmSequence::SturmSequence(const Polynomial& p)
{
    if (p.is_zero()) raise(ErrorKind::DegenerateSequence, "Sturm sequence of the zero polynomial");
    IntPoly p0 = to_primitive_integer(p);
    chain_.push_back(p0);
    if (p0.size() == 1) return;
    IntPoly p1 = derivative_int(p0);
    make_primitive(p1);
    chain_.push_back(p1);
    while (chain_.back().size() > 1) {
        IntPoly r = positive_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
        if (r.empty()) {
            raise(ErrorKind::DegenerateSequence,
                  "Sturm remainder vanished identically; input is not squarefree");
        }
        for (auto& c : r) c = -c;
        chain_.push_back(std::move(r));
    }
}

int SturmSequence::variations_at(const Rational& x) const
{
    const BigInt num = numerator(x);
    const BigInt den = denominator(x);
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(starrad::sign_at(p, num, den));
    return count_variations(signs);
}

int SturmSequence::sign_at(const Rational& x) const
{
    return starrad::sign_at(chain_.front(), numerator(x), denominator(x));
}

int SturmSequence::variations_at_pos_inf() const
{
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(sign_of(p.back()));
    return count_variations(signs);
}

int SturmSequence::variations_at_neg_inf() const
{
    std::vector<int> signs;
    for (const auto& p : chain_) {
        const int s = sign_of(p.back());
        signs.push_back((p.size() - 1) % 2 == 0 ? s : -s);
    }
    return count_variations(signs);
}

int SturmSequence::count(const RealInterval& interval) const
{
    const int v_lo = interval.lo ? variations_at(*interval.lo) : variations_at_neg_inf();
    const int v_hi = interval.hi ? variations_at(*interval.hi) : variations_at_pos_inf();
    return v_lo - v_hi;
}

int sturm_real_root_count(const Polynomial& p, const RealInterval& interval)
{
    return SturmSequence(p).count(interval);
}

std::optional<std::pair<Rational, Rational>> isolate_smallest_root(const Polynomial& p, double rel_width)
{
    if (p.degree() < 1) return std::nullopt;
    SmallestRootIsolator iso(p);
    if (!iso.has_root()) return std::nullopt;
    iso.refine_to(rel_width);
    return std::make_pair(iso.lo(), iso.hi());
}

HyperbolicityReport hyperbolicity_check(const Polynomial& p, const std::optional<Polynomial>& reference)
{
    HyperbolicityReport report;
    report.degree = std::max(p.degree(), 0);
    report.min_root = std::numeric_limits<double>::quiet_NaN();
    if (p.degree() < 1) {
        report.all_real = true;
        report.all_positive = true;
        return report;
    }

    SmallestRootIsolator iso(p);
    int positive = 0;
    if (iso.squarefree_input()) {
        report.real_root_count = iso.sturm().count(RealInterval::whole_line());
        positive = iso.sturm().count(RealInterval::positive());
    } else {
        for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
            const SturmSequence s(factor);
            report.real_root_count += multiplicity * s.count(RealInterval::whole_line());
            positive += multiplicity * s.count(RealInterval::positive());
        }
    }
    report.all_real = report.real_root_count == report.degree;
    report.all_positive = report.all_real && positive == report.degree;

    if (iso.has_root()) {
        iso.refine_to(1e-17);
        report.min_root = midpoint_double(iso.lo(), iso.hi());
    }
    if (reference && reference->degree() >= 1) {
        SmallestRootIsolator ref(*reference);
        if (ref.has_root()) {
            ref.refine_to(1e-17);
            report.precedes = midpoint_double(ref.lo(), ref.hi());
            if (iso.has_root()) report.precedence_holds = compare_smallest_roots(iso, ref) < 0;
        }
    }
    return report;
}

bool smallest_root_in_open_gap(const Polynomial& q, const Polynomial& p)
{
    SmallestRootIsolator qi(q);
    SmallestRootIsolator pi(p);
    if (!qi.has_root() || !pi.has_root()) return false;
    // eta_1 > 0 iff q has no real root in (-inf, 0].
    if (SturmSequence(squarefree_part(q)).count({std::nullopt, Rational(0)}) > 0) return false;
    return compare_smallest_roots(qi, pi) < 0;
}

std::pair<Polynomial, HyperbolicityReport> obrechkoff_combination(const Polynomial& p, const Rational& c)
{
    const HyperbolicityReport pre = hyperbolicity_check(p);
    if (!pre.all_real || !pre.all_positive || p.coeff(0) != 1)
        raise(ErrorKind::PreconditionViolated,
              "obrechkoff_combination needs a hyperbolic p with positive zeros and p(0) = 1");
    Polynomial q = c * p - p.derivative().shifted();
    HyperbolicityReport report = hyperbolicity_check(q, p);
    return {std::move(q), report};
}

Polynomial jensen_polynomial(const CoefficientStream& gamma, int n)
{
    std::vector<Rational> g;
    g.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) g.push_back(gamma(j));
    return jensen_polynomial(g, n);
}

Polynomial jensen_polynomial(std::span<const Rational> gamma, int n)
{
    if (n < 1) raise(ErrorKind::InvalidParameter, "Jensen polynomial degree must be at least 1");
    if (gamma.size() < static_cast<std::size_t>(n) + 1)
        raise(ErrorKind::InvalidParameter, "not enough Maclaurin coefficients for the Jensen polynomial");
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(row.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    std::vector<Rational> c;
    c.reserve(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) c.push_back(Rational(row[j]) * gamma[j]);
    return Polynomial(std::move(c));
}

}  // namespace starrad
