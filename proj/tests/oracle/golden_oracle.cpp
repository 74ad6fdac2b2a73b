// Reference values computed without the starrad library: textbook series
// in 100-digit MPFR arithmetic, exact rational Sturm sequences, and product
// integration for the integral representations.
//
//   golden_oracle --write PATH    regenerate the golden file
//   golden_oracle --check PATH    recompute and compare (|diff| <= 1e-12)

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <json.hpp>

namespace {

namespace mp = boost::multiprecision;
using Real = mp::number<mp::mpfr_float_backend<100>, mp::et_off>;
using Q = mp::mpq_rational;

const Real pi = boost::math::constants::pi<Real>();

Real pow_r(const Real& a, const Real& b) { return mp::pow(a, b); }

// ---------------------------------------------------------------------------
// Textbook series.

// s_{m,n}(z) = z^{m+1} sum_k (-1)^k z^{2k} / prod_{j=0..k} ((m+2j+1)^2 - n^2); returns the
// k-th coefficient without the power of z.
std::vector<Real> lommel_terms(const Real& m, const Real& n, int count)
{
    std::vector<Real> t;
    Real prod = 1;
    for (int k = 0; k < count; ++k) {
        const Real a = m + 2 * k + 1;
        prod *= a * a - n * n;
        t.push_back((k % 2 == 0 ? Real(1) : Real(-1)) / prod);
    }
    return t;
}

// H_nu(z) = sum_k (-1)^k (z/2)^{2k+nu+1} / (Gamma(k+3/2) Gamma(k+nu+3/2)); coefficient of (z/2)^{2k+nu+1}.
std::vector<Real> struve_terms(const Real& nu, int count)
{
    std::vector<Real> t;
    Real g1 = mp::tgamma(Real(1.5));
    Real g2 = mp::tgamma(nu + Real(1.5));
    for (int k = 0; k < count; ++k) {
        t.push_back((k % 2 == 0 ? Real(1) : Real(-1)) / (g1 * g2));
        g1 *= Real(k) + Real(1.5);
        g2 *= Real(k) + nu + Real(1.5);
    }
    return t;
}

constexpr int kTerms = 400;

Real lommel_s(const Real& m, const Real& n, const Real& z)
{
    const auto t = lommel_terms(m, n, kTerms);
    Real sum = 0;
    Real zp = 1;
    for (const auto& c : t) {
        sum += c * zp;
        zp *= z * z;
    }
    return pow_r(z, m + 1) * sum;
}

Real struve_h(const Real& nu, const Real& z)
{
    const auto t = struve_terms(nu, kTerms);
    Real sum = 0;
    const Real h = z / 2;
    Real hp = 1;
    for (const auto& c : t) {
        sum += c * hp;
        hp *= h * h;
    }
    return pow_r(h, nu + 1) * sum;
}

Real hyp1f2(const Real& b1, const Real& b2, const Real& x)
{
    Real term = 1;
    Real sum = 0;
    for (int k = 0; k < kTerms; ++k) {
        sum += term;
        term *= x / ((b1 + k) * (b2 + k));
    }
    return sum;
}

// Even power series sum_k c_k w^k with w = z^2 (Lommel) or (z/2)^2 (Struve); the
// Euler-operator weights of z s'/s are e_k.
struct PowerSeries {
    std::vector<Real> c;
    std::vector<Real> e;  // exponent of z in the k-th term
    bool half = false;    // argument z/2 instead of z

    Real value(const Real& z, const Real& weight_shift) const
    {
        const Real w = half ? (z / 2) * (z / 2) : z * z;
        Real sum = 0;
        Real p = 1;
        for (std::size_t k = 0; k < c.size(); ++k) {
            sum += (e[k] - weight_shift) * c[k] * p;
            p *= w;
        }
        return sum;
    }
    Real sum(const Real& z) const
    {
        const Real w = half ? (z / 2) * (z / 2) : z * z;
        Real total = 0;
        Real p = 1;
        for (const auto& v : c) {
            total += v * p;
            p *= w;
        }
        return total;
    }
    std::complex<long double> value(std::complex<long double> z, long double weight_shift) const
    {
        const std::complex<long double> w = half ? (z / 2.0L) * (z / 2.0L) : z * z;
        std::complex<long double> sum = 0;
        std::complex<long double> p = 1;
        for (std::size_t k = 0; k < c.size(); ++k) {
            sum += (e[k].convert_to<long double>() - weight_shift) * c[k].convert_to<long double>() * p;
            p *= w;
            if (std::abs(p) > 1e300L || k > 120) break;
        }
        return sum;
    }
};

// s_{mu-1/2,1/2}: z s'/s - c = (sum (mu+1/2+2k - c) t_k z^{2k}) / (sum t_k z^{2k}).
PowerSeries lommel_series(const Real& mu)
{
    PowerSeries s;
    s.c = lommel_terms(mu - Real(0.5), Real(0.5), kTerms);
    for (int k = 0; k < kTerms; ++k) s.e.push_back(mu + Real(0.5) + 2 * k);
    return s;
}

PowerSeries struve_series(const Real& nu)
{
    PowerSeries s;
    s.c = struve_terms(nu, kTerms);
    s.half = true;
    for (int k = 0; k < kTerms; ++k) s.e.push_back(nu + 1 + 2 * k);
    return s;
}

// ---------------------------------------------------------------------------

Real bisect(const std::function<Real(const Real&)>& f, Real lo, Real hi)
{
    Real flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const Real mid = (lo + hi) / 2;
        const Real fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

std::vector<Real> zeros(const std::function<Real(const Real&)>& f, int count, double step = 0.02)
{
    std::vector<Real> out;
    Real a = step;
    Real fa = f(a);
    while (static_cast<int>(out.size()) < count) {
        const Real b = a + step;
        const Real fb = f(b);
        if ((fa < 0) != (fb < 0)) out.push_back(bisect(f, a, b));
        a = b;
        fa = fb;
    }
    return out;
}

Real first_zero(const std::function<Real(const Real&)>& f) { return zeros(f, 1).front(); }

// ---------------------------------------------------------------------------
// Product trapezoid rule for int_0^1 (1-t)^beta g(t) dt with exact weight moments,
// Richardson-extrapolated in h^2.

long double product_trapezoid(long double beta, const std::function<long double(long double)>& g, long n)
{
    long double total = 0;
    const long double h = 1.0L / n;
    for (long i = 0; i < n; ++i) {
        const long double a = i * h;
        const long double b = (i + 1) * h;
        const long double sa = 1 - a;
        const long double sb = 1 - b;
        const long double m0 = (std::pow(sa, beta + 1) - std::pow(sb, beta + 1)) / (beta + 1);
        const long double m1 = m0 - (std::pow(sa, beta + 2) - std::pow(sb, beta + 2)) / (beta + 2);
        // g linear on [a,b]: g(a) (b - t)/h + g(b) (t - a)/h
        total += (g(a) * (b * m0 - m1) + g(b) * (m1 - a * m0)) / h;
    }
    return total;
}

long double product_integral(long double beta, const std::function<long double(long double)>& g)
{
    const long n = 1000000;
    const long double coarse = product_trapezoid(beta, g, n);
    const long double fine = product_trapezoid(beta, g, 2 * n);
    return (4 * fine - coarse) / 3;
}

// ---------------------------------------------------------------------------
// Exact Sturm count with classical rational remainders.

using QPoly = std::vector<Q>;

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly rem(QPoly a, const QPoly& b)
{
    trim(a);
    while (a.size() >= b.size()) {
        const Q f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign_at_zero(const QPoly& p) { return p.empty() ? 0 : (p[0] > 0) - (p[0] < 0); }
int sign_at_inf(const QPoly& p) { return p.empty() ? 0 : (p.back() > 0) - (p.back() < 0); }

int variations(const std::vector<int>& s)
{
    int v = 0, last = 0;
    for (int x : s) {
        if (x == 0) continue;
        if (last && x != last) ++v;
        last = x;
    }
    return v;
}

int positive_root_count(const QPoly& p)
{
    std::vector<QPoly> chain{p};
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Q(static_cast<long>(i)));
    chain.push_back(d);
    while (chain.back().size() > 1) {
        QPoly r = rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(r);
    }
    std::vector<int> s0, si;
    for (const auto& q : chain) {
        s0.push_back(sign_at_zero(q));
        si.push_back(sign_at_inf(q));
    }
    return variations(s0) - variations(si);
}

QPoly jensen_phi0(const Q& mu, int n)
{
    const Q b1 = (mu + 2) / 2;
    const Q b2 = (mu + 3) / 2;
    std::vector<Q> gamma;
    Q c = 1;
    Q fact = 1;
    for (int k = 0; k <= n; ++k) {
        gamma.push_back((k % 2 == 0 ? Q(1) : Q(-1)) * fact * c);
        c /= (b1 + k) * (b2 + k);
        fact *= k + 1;
    }
    QPoly g;
    Q binom = 1;
    for (int j = 0; j <= n; ++j) {
        g.push_back(binom * gamma[j]);
        binom = binom * (n - j) / (j + 1);
    }
    return g;
}

// ---------------------------------------------------------------------------

struct Entry {
    double value;
    std::string description;
};

std::map<std::string, Entry> compute()
{
    std::map<std::string, Entry> out;
    const auto put = [&](const std::string& key, const Real& v, const std::string& what) {
        out[key] = {v.convert_to<double>(), what};
    };

    put("hyp1f2/b1=1.5,b2=2,x=-1", hyp1f2(Real(1.5), Real(2), Real(-1)), "1F2(1;b1,b2;x) direct sum");
    put("hyp1f2/b1=1.25,b2=1.75,x=-4", hyp1f2(Real(1.25), Real(1.75), Real(-4)), "1F2(1;b1,b2;x) direct sum");
    put("hyp1f2/b1=1.5,b2=1.75,x=2.25", hyp1f2(Real(1.5), Real(1.75), Real(2.25)), "1F2(1;b1,b2;x) direct sum");

    // phi_0(z) = mu (mu+1) z^{-mu-1/2} s_{mu-1/2,1/2}(z)
    {
        const Real mu = 0.5;
        const Real z = 1;
        put("phi0/mu=0.5,z=1", mu * (mu + 1) * pow_r(z, -mu - Real(0.5)) * lommel_s(mu - Real(0.5), Real(0.5), z),
            "from the Lommel series");
        const Real r = 2;
        const auto t = lommel_terms(mu - Real(0.5), Real(0.5), kTerms);
        Real sum = 0, p = 1;
        for (const auto& c : t) {
            sum += mp::abs(c) * p;
            p *= r * r;
        }
        put("phi0_imag/mu=0.5,r=2", mu * (mu + 1) * sum, "phi_0(i r) from the Lommel series");
    }
    put("lommel_s/mu_raw=0,nu_raw=0.5,z=1", lommel_s(Real(0), Real(0.5), Real(1)), "Lommel series");
    put("struve_H/nu=0,z=1", struve_h(Real(0), Real(1)), "Struve series with Gamma");
    put("struve_H/nu=0.5,z=pi", mp::sqrt(2 / (pi * pi)) * (1 - mp::cos(pi)), "sqrt(2/(pi z)) (1 - cos z)");

    // Equation roots.
    put("radius/v/nu=0.5,alpha=0",
        bisect([](const Real& z) { return mp::sin(z / 2) - z * mp::cos(z / 2); }, Real(2), Real(3)),
        "root of tan(z/2) = z");
    for (double mu : {-0.9, -0.75, -0.6})
        for (double alpha : {0.0, 0.5}) {
            const PowerSeries s = lommel_series(Real(mu));
            const Real c = Real(alpha) * (Real(mu) + Real(0.5));
            // At z = i r the Lommel series has positive terms |t_k| r^{2k}.
            PowerSeries abs_s = s;
            for (auto& v : abs_s.c) v = mp::abs(v);
            const Real r = bisect([&](const Real& x) { return abs_s.value(x, c); }, Real(1e-3), Real(20));
            char key[64];
            std::snprintf(key, sizeof key, "radius/f/mu=%g,alpha=%g", mu, alpha);
            put(key, r, "imaginary-axis level of z s'/s");
        }
    {
        const PowerSeries s = lommel_series(Real(0.5));
        const Real c = Real(0.5) + 0 - Real(0.5);
        const Real xi = first_zero([&](const Real& z) { return s.sum(z); });
        put("zero/phi0/mu=0.5", xi, "first positive zero of the Lommel series");
        const Real t = bisect([&](const Real& z) { return s.value(z, c); }, Real(0.01), xi);
        put("radius/g/mu=0.5,alpha=0", t, "smallest root of z s' - (mu + alpha - 1/2) s");
        const Real ch = Real(0.5) + 2 * Real(0.25) - Real(1.5);
        const Real th = bisect([&](const Real& z) { return s.value(z, ch); }, Real(0.01), xi);
        put("radius/h/mu=0.5,alpha=0.25", th * th, "square of the smallest root of w s'(w) - c s(w)");

        // Dense boundary sampling of Re(z g'/g) = 1/2 - mu + Re(z s'/s) at the g radius.
        const long double rl = t.convert_to<long double>();
        const long double mu_g = 0.5L;
        PowerSeries plain = s;
        for (auto& e : plain.e) e = 1;
        long double best = 1e300L;
        for (int i = 0; i < 8192; ++i) {
            const long double th2 = (3.14159265358979323846264338327950288L / 2) * i / 8191;
            const std::complex<long double> z = std::polar(rl, th2);
            const std::complex<long double> ratio = s.value(z, 0.0L) / plain.value(z, 0.0L);
            best = std::min(best, 0.5L - mu_g + ratio.real());
        }
        out["boundary/g/mu=0.5,alpha=0"] = {static_cast<double>(best), "min over 8192 angles of Re(z g'/g) at the g radius"};
    }
    {
        const PowerSeries s = struve_series(Real(0.25));
        put("zero/struve/nu=0.25", first_zero([&](const Real& z) { return s.sum(z); }),
            "first positive zero of H_nu / (z/2)^{nu+1}");
    }

    // Hadamard truncation |B(z) - prod (1 - z^2/z_n^2)|, B normalized to B(0) = 1.
    {
        const auto t = lommel_terms(Real(0), Real(0.5), kTerms);
        const auto phi = [&](const Real& z) {
            Real sum = 0, p = 1;
            for (const auto& v : t) {
                sum += v * p;
                p *= z * z;
            }
            return sum / t[0];
        };
        const auto zs = zeros(phi, 40, 0.05);
        for (int n : {10, 40}) {
            Real prod = 1;
            for (int i = 0; i < n; ++i) prod *= 1 - 1 / (zs[i] * zs[i]);
            char key[64];
            std::snprintf(key, sizeof key, "hadamard/phi0/mu=0.5,z=1,N=%d", n);
            put(key, mp::abs(phi(Real(1)) - prod), "zeros by bisection of the Lommel series");
        }
        const auto st = struve_terms(Real(0.25), kTerms);
        const auto kern = [&](const Real& z) {
            Real sum = 0, p = 1;
            for (const auto& v : st) {
                sum += v * p;
                p *= (z / 2) * (z / 2);
            }
            return sum / st[0];
        };
        const auto hs = zeros(kern, 20, 0.05);
        for (int n : {5, 20}) {
            Real prod = 1;
            for (int i = 0; i < n; ++i) prod *= 1 - Real(0.25) / (hs[i] * hs[i]);
            char key[64];
            std::snprintf(key, sizeof key, "hadamard/struve/nu=0.25,z=0.5,N=%d", n);
            put(key, mp::abs(kern(Real(0.5)) - prod), "zeros by bisection of the Struve series");
        }
    }

    // Integral representations by product integration.
    {
        const long double mu = 0.5L, z = 2.0L;
        const long double v = mu * (mu + 1) * product_integral(mu - 1, [&](long double t) { return std::sin(z * t); });
        out["integral/phi0_sin/mu=0.5,z=2"] = {static_cast<double>(v), "product trapezoid, 1e6 and 2e6 panels"};
    }
    {
        const long double nu = 0.25L, z = 3.0L;
        const long double integral = product_integral(
            nu - 0.5L, [&](long double t) { return std::pow(1 + t, nu - 0.5L) * std::sin(z * t); });
        const long double pre = 2 * std::pow(z / 2, nu) / (std::sqrt(3.14159265358979323846264338327950288L) *
                                                            std::tgamma(nu + 0.5L));
        out["integral/struve_sin/nu=0.25,z=3"] = {static_cast<double>(pre * integral),
                                                  "product trapezoid, 1e6 and 2e6 panels"};
    }

    out["sturm/jensen_phi0/mu=0.25,n=10"] = {static_cast<double>(positive_root_count(jensen_phi0(Q(1, 4), 10))),
                                             "classical rational Sturm chain on (0, inf)"};
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc != 3 || (std::string(argv[1]) != "--write" && std::string(argv[1]) != "--check")) {
        std::cerr << "usage: golden_oracle --write|--check PATH\n";
        return 2;
    }
    const auto values = compute();
    if (std::string(argv[1]) == "--write") {
        nlohmann::ordered_json j;
        j["format"] = 1;
        nlohmann::ordered_json v;
        for (const auto& [k, e] : values) v[k] = {{"value", e.value}, {"source", e.description}};
        j["values"] = v;
        std::ofstream(argv[2]) << j.dump(2) << '\n';
        return 0;
    }
    std::ifstream in(argv[2]);
    if (!in) {
        std::cerr << "cannot read " << argv[2] << '\n';
        return 1;
    }
    const auto j = nlohmann::json::parse(in);
    int bad = 0;
    for (const auto& [k, e] : values) {
        if (!j["values"].contains(k)) {
            std::cout << "MISSING " << k << '\n';
            ++bad;
            continue;
        }
        const double stored = j["values"][k]["value"].get<double>();
        const double diff = std::abs(stored - e.value);
        const bool ok = diff <= 1e-12;
        std::cout << (ok ? "ok    " : "STALE ") << k << "  stored " << stored << "  recomputed " << e.value << '\n';
        if (!ok) ++bad;
    }
    if (j["values"].size() != values.size()) {
        std::cout << "golden file has " << j["values"].size() << " entries, oracle produces " << values.size() << '\n';
        ++bad;
    }
    return bad == 0 ? 0 : 1;
}
