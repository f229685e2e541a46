#pragma once

#include "ehrhart/numeric.hpp"

#include <utility>
#include <vector>

namespace ehrhart {

/**
 * Dense univariate polynomial over the rationals.
 *
 * Coefficients are stored by ascending degree with trailing zeros trimmed;
 * the zero polynomial has an empty coefficient vector and degree -1.
 * Evaluation, arithmetic and division are exact.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rat& c) { return Polynomial({c}); }
    static Polynomial variable() { return Polynomial({Rat(0), Rat(1)}); }
    /// Convenience for integer coefficient lists (ascending degree).
    static Polynomial from_ints(const std::vector<long long>& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i (zero beyond the degree).
    const Rat& coeff(int i) const {
        static const Rat zero(0);
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[static_cast<size_t>(i)];
    }
    const Rat& leading() const { return coeffs_.back(); }

    Rat operator()(const Rat& x) const;
    double eval_double(double x) const;

    Polynomial derivative() const;
    /// p(x + t), exact Taylor shift.
    Polynomial shifted(const Rat& t) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& s) const;
    Polynomial operator/(const Rat& s) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    /// Quotient and remainder with deg(r) < deg(divisor). Throws on zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    /// Exact quotient; throws if the division leaves a remainder.
    Polynomial exact_div(const Polynomial& divisor) const;

    /// Monic gcd (the constant 1 for coprime inputs).
    static Polynomial gcd(Polynomial a, Polynomial b);

    /// p with every root's multiplicity reduced to one.
    Polynomial squarefree_part() const;
    /// Yun decomposition: list of (squarefree factor, multiplicity),
    /// nontrivial factors only, product of f^m equal to p up to a constant.
    std::vector<std::pair<Polynomial, int>> squarefree_decomposition() const;

    /// Scale by a positive rational so coefficients are coprime integers
    /// (sign layout preserved; used by the Sturm chain).
    Polynomial primitive_integer_scaled() const;

    std::string str(const std::string& var = "n") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

/// Binomial-basis representation: p(n) = sum_j a[j] * C(d+n-j, d).
/// For Ehrhart polynomials the a-vector is the h*-vector.
struct BinomialBasisPolynomial {
    int d = 0;
    std::vector<Rat> a;  // size d+1

    /// Exact triangular solve from p(0..d).
    static BinomialBasisPolynomial from_polynomial(const Polynomial& p);
    /// Expansion back to monomial coefficients (lossless).
    Polynomial to_polynomial() const;
    Rat eval(const Rat& n) const;
};

/// (D^0 p(0), ..., D^d p(0)) where D is the forward difference operator.
std::vector<Rat> forward_differences(const Polynomial& p);

/// The polynomial C(n + offset, k) of degree k in n, exact.
Polynomial binomial_coefficient_polynomial(int offset, int k);

}  // namespace ehrhart
