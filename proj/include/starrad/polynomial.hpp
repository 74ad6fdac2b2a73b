#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "starrad/rational.hpp"

namespace starrad {

/// Real polynomial with exact rational coefficients, ascending degree.
/// Trailing zero coefficients are trimmed on construction.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);
    static Polynomial from_doubles(std::span<const double> ascending);
    /// Monic prod (x - r_i).
    static Polynomial from_roots(std::span<const Rational> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return coeffs_.back(); }

    Polynomial derivative() const;
    Rational operator()(const Rational& x) const;
    double evaluate(double x) const;
    std::vector<double> to_doubles() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// x * p(x)
    Polynomial shifted() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

DivisionResult divide(const Polynomial& a, const Polynomial& b);
Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic

/// Squarefree factors a_i with p = c * prod a_i^i (Yun).
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

// Half-open interval (lo, hi]; an empty bound means -inf / +inf.
struct RealInterval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    static RealInterval whole_line() { return {}; }
    static RealInterval positive() { return {Rational(0), std::nullopt}; }
};

/// Sturm chain of a squarefree polynomial, kept as primitive integer
/// polynomials (positive rescalings do not change sign patterns).
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);

    int variations_at(const Rational& x) const;
    /// Sign of the input polynomial at x.
    int sign_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;
    /// Distinct real roots in (lo, hi].
    int count(const RealInterval& interval) const;
    std::size_t length() const { return chain_.size(); }

private:
    std::vector<std::vector<BigInt>> chain_;
};

/// Exact number of distinct real roots in (lo, hi]. Throws
/// DegenerateSequence for non-squarefree input.
int sturm_real_root_count(const Polynomial& p, const RealInterval& interval = RealInterval::whole_line());

/// Smallest real root of p isolated by Sturm bisection to the given
/// relative width; nullopt if p has no real root.
std::optional<std::pair<Rational, Rational>> isolate_smallest_root(const Polynomial& p,
                                                                   double rel_width = 1e-17);

struct HyperbolicityReport {
    int degree = 0;
    int real_root_count = 0;  // with multiplicity
    bool all_real = false;
    bool all_positive = false;
    double min_root = 0.0;  // NaN if there is no real root
    std::optional<double> precedes;  // smallest root of the reference polynomial
    std::optional<bool> precedence_holds;  // min root strictly below reference's
};

HyperbolicityReport hyperbolicity_check(const Polynomial& p,
                                        const std::optional<Polynomial>& reference = std::nullopt);

/// q = C p - x p'. Requires p hyperbolic with positive zeros and p(0) = 1.
std::pair<Polynomial, HyperbolicityReport> obrechkoff_combination(const Polynomial& p, const Rational& c);

/// True iff the smallest real root of q lies in (0, x1), x1 the smallest root of p.
bool smallest_root_in_open_gap(const Polynomial& q, const Polynomial& p);

using CoefficientStream = std::function<Rational(int)>;

/// g_n(x) = sum_{j<=n} C(n,j) gamma_j x^j, binomials by Pascal's rule.
Polynomial jensen_polynomial(const CoefficientStream& gamma, int n);
Polynomial jensen_polynomial(std::span<const Rational> gamma, int n);

}  // namespace starrad
