#include "ehrhart/polynomial.hpp"
#include "ehrhart/sequences.hpp"

#include <sstream>
#include <stdexcept>

namespace ehrhart {

Polynomial Polynomial::from_ints(const std::vector<long long>& c) {
    std::vector<Rat> r;
    r.reserve(c.size());
    for (long long v : c) r.emplace_back(v);
    return Polynomial(std::move(r));
}

Rat Polynomial::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->convert_to<double>();
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rat> r(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::shifted(const Rat& t) const {
    // Repeated Ruffini-Horner: after pass i, coefficients of p(x+t) below
    // index i are final.
    std::vector<Rat> a = coeffs_;
    const int n = static_cast<int>(a.size()) - 1;
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) a[static_cast<size_t>(j)] += t * a[static_cast<size_t>(j) + 1];
    return Polynomial(std::move(a));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rat> r = coeffs_;
    for (auto& c : r) c = -c;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rat> r(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rat> r(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rat& s) const {
    std::vector<Rat> r = coeffs_;
    for (auto& c : r) c *= s;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator/(const Rat& s) const {
    if (s == 0) throw std::invalid_argument("division of polynomial by zero");
    std::vector<Rat> r = coeffs_;
    for (auto& c : r) c /= s;
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem = coeffs_;
    const int dd = divisor.degree();
    const Rat& lead = divisor.leading();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<Rat> quo(static_cast<size_t>(degree() - dd) + 1, Rat(0));
    for (int i = degree(); i >= dd; --i) {
        Rat& top = rem[static_cast<size_t>(i)];
        if (top == 0) continue;
        Rat f = top / lead;
        quo[static_cast<size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= f * divisor.coeff(j);
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

Polynomial Polynomial::primitive_integer_scaled() const {
    if (is_zero()) return *this;
    Int den_lcm = 1;
    for (const auto& c : coeffs_) den_lcm = lcm(den_lcm, denominator(c));
    Int content = 0;
    for (const auto& c : coeffs_) content = boost::multiprecision::gcd(content, Int(numerator(c) * (den_lcm / denominator(c))));
    Rat scale = Rat(den_lcm, content);  // positive: content > 0, den_lcm > 0
    return *this * scale;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    // Euclid with primitive normalization each step to tame coefficient growth.
    if (a.is_zero() && b.is_zero()) return Polynomial();
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? Polynomial() : r.primitive_integer_scaled();
    }
    return a / a.leading();  // monic
}

Polynomial Polynomial::squarefree_part() const {
    if (degree() <= 0) return *this;
    Polynomial g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    return exact_div(g);
}

std::vector<std::pair<Polynomial, int>> Polynomial::squarefree_decomposition() const {
    // Yun's algorithm over Q.
    std::vector<std::pair<Polynomial, int>> out;
    if (degree() <= 0) return out;
    Polynomial f = *this / leading();
    Polynomial fp = f.derivative();
    Polynomial g = gcd(f, fp);
    Polynomial w = f.exact_div(g);
    Polynomial y = fp.exact_div(g);
    int m = 1;
    while (w.degree() > 0) {
        Polynomial z = y - w.derivative();
        Polynomial fac = gcd(w, z);
        if (fac.degree() > 0) out.emplace_back(fac, m);
        w = w.exact_div(fac);
        if (z.is_zero())
            y = Polynomial();
        else
            y = z.exact_div(fac);
        ++m;
    }
    return out;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeff(i);
        if (c == 0) continue;
        Rat abs_c = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (abs_c == 1) && i > 0;
        if (!unit) os << abs_c.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Polynomial binomial_coefficient_polynomial(int offset, int k) {
    // C(n + offset, k) = prod_{i=1}^{k} (n + offset - k + i) / k!
    Polynomial p = Polynomial::constant(Rat(1));
    for (int i = 1; i <= k; ++i)
        p = p * Polynomial({Rat(offset - k + i), Rat(1)});
    return p / Rat(factorial(static_cast<unsigned>(k)));
}

BinomialBasisPolynomial BinomialBasisPolynomial::from_polynomial(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("binomial basis of zero polynomial");
    const int d = p.degree();
    BinomialBasisPolynomial out;
    out.d = d;
    out.a.assign(static_cast<size_t>(d) + 1, Rat(0));
    // p(m) = sum_{j<=m} a_j * C(d+m-j, d): triangular in m = 0..d.
    for (int m = 0; m <= d; ++m) {
        Rat v = p(Rat(m));
        for (int j = 0; j < m; ++j) v -= out.a[static_cast<size_t>(j)] * Rat(binomial(Int(d + m - j), static_cast<unsigned>(d)));
        out.a[static_cast<size_t>(m)] = v;  // C(d, d) = 1
    }
    return out;
}

Polynomial BinomialBasisPolynomial::to_polynomial() const {
    Polynomial p;
    for (int j = 0; j <= d; ++j) {
        if (a[static_cast<size_t>(j)] == 0) continue;
        p = p + binomial_coefficient_polynomial(d - j, d) * a[static_cast<size_t>(j)];
    }
    return p;
}

Rat BinomialBasisPolynomial::eval(const Rat& n) const { return to_polynomial()(n); }

std::vector<Rat> forward_differences(const Polynomial& p) {
    const int d = p.is_zero() ? 0 : p.degree();
    std::vector<Rat> row(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) row[static_cast<size_t>(i)] = p(Rat(i));
    std::vector<Rat> out;
    out.reserve(row.size());
    out.push_back(row[0]);
    for (int k = 1; k <= d; ++k) {
        for (int i = 0; i + k <= d; ++i) row[static_cast<size_t>(i)] = row[static_cast<size_t>(i) + 1] - row[static_cast<size_t>(i)];
        out.push_back(row[0]);
    }
    return out;
}

}  // namespace ehrhart
