#include "ehrhart/sequences.hpp"
#include "ehrhart/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace ehrhart {

Int binomial(const Int& n, unsigned k) {
    Int num = 1;
    for (unsigned i = 0; i < k; ++i) num *= n - static_cast<long>(i);
    return num / factorial(k);  // exact: k consecutive integers
}

Int stirling_first(unsigned d, unsigned r) {
    if (r > d) throw std::out_of_range("stirling_first: r out of range");
    // s(n+1, k) = s(n, k-1) - n * s(n, k), s(0,0) = 1.
    std::vector<Int> row(d + 1, Int(0));
    row[0] = 1;
    for (unsigned n = 0; n < d; ++n) {
        std::vector<Int> next(d + 1, Int(0));
        for (unsigned k = 0; k <= n + 1 && k <= d; ++k) {
            Int v = 0;
            if (k > 0) v += row[k - 1];
            v -= static_cast<long>(n) * row[k];
            next[k] = v;
        }
        row = std::move(next);
    }
    return row[r];
}

Polynomial bernoulli_polynomial(unsigned d) {
    if (d == 0) return Polynomial::constant(Rat(1));
    Polynomial b = Polynomial::constant(Rat(1));
    for (unsigned m = 1; m <= d; ++m) {
        // integrate m * B_{m-1}
        std::vector<Rat> c(static_cast<size_t>(m) + 1, Rat(0));
        for (int i = 0; i <= b.degree(); ++i)
            c[static_cast<size_t>(i) + 1] = Rat(static_cast<long>(m)) * b.coeff(i) / Rat(i + 1);
        Polynomial integ{std::move(c)};
        // constant term from the vanishing integral over [0,1]:
        // integral of x^j is 1/(j+1)
        Rat total(0);
        for (int j = 1; j <= integ.degree(); ++j) total += integ.coeff(j) / Rat(j + 1);
        c = integ.coeffs();
        c.resize(static_cast<size_t>(m) + 1, Rat(0));
        c[0] = -total;
        b = Polynomial(std::move(c));
    }
    return b;
}

}  // namespace ehrhart
