#include "tdesign/jacobi.hpp"

#include <string>
#include <vector>

namespace tdesign {

RationalPolynomial jacobi_poly(unsigned k, const Rational& alpha, const Rational& beta) {
    const Rational minus_one(-1);
    if (!(alpha > minus_one) || !(beta > minus_one))
        throw Error(ErrorKind::BadInput, "jacobi parameters must exceed -1");

    // P_k = sum_j binom(k+alpha, k-j) binom(k+beta, j) ((y-1)/2)^j ((y+1)/2)^(k-j)
    const RationalPolynomial half_minus(std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
    const RationalPolynomial half_plus(std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    std::vector<RationalPolynomial> minus_pow(k + 1), plus_pow(k + 1);
    minus_pow[0] = RationalPolynomial::constant(Rational(1));
    plus_pow[0] = RationalPolynomial::constant(Rational(1));
    for (unsigned j = 1; j <= k; ++j) {
        minus_pow[j] = minus_pow[j - 1] * half_minus;
        plus_pow[j] = plus_pow[j - 1] * half_plus;
    }

    const Rational k_alpha = alpha + Rational(static_cast<long>(k));
    const Rational k_beta = beta + Rational(static_cast<long>(k));
    RationalPolynomial result;
    for (unsigned j = 0; j <= k; ++j) {
        Rational weight = generalized_binomial(k_alpha, k - j) * generalized_binomial(k_beta, j);
        result += (minus_pow[j] * plus_pow[k - j]) * weight;
    }
    return result;
}

RationalPolynomial renorm_q(unsigned k, int eps, const GeometryParams& geom) {
    geom.validate();
    if (eps != 0 && eps != 1)
        throw Error(ErrorKind::BadInput, "eps must be 0 or 1");
    if (k == 0 && eps == 0) return RationalPolynomial::constant(Rational(1));

    const Rational n = geom.half_dim();
    const Rational m = geom.half_degree();
    const Rational ke(static_cast<long>(k) + eps);

    Rational prefactor = (n + Rational(2L * k + eps - 1)) / (n + Rational(static_cast<long>(k) + eps - 1));
    prefactor *= pochhammer(n, k + eps) / pochhammer(m, k + eps);

    const Rational alpha = n - m - Rational(1);
    const Rational beta = m - Rational(1) + Rational(eps);
    RationalPolynomial p = jacobi_poly(k, alpha, beta);

    // substitute y = 2x - 1
    const RationalPolynomial shift(std::vector<Rational>{Rational(-1), Rational(2)});
    return p.compose(shift) * prefactor;
}

RationalPolynomial r_sum(unsigned n, int eps, const GeometryParams& geom) {
    RationalPolynomial total;
    for (unsigned i = 0; i <= n; ++i) total += renorm_q(i, eps, geom);
    return total;
}

Rational q_at_one(unsigned i, const GeometryParams& geom) {
    geom.validate();
    if (i == 0) return Rational(1);
    const Rational n = geom.half_dim();
    const Rational m = geom.half_degree();
    Rational value = (n + Rational(2L * i - 1)) / (n + Rational(static_cast<long>(i) - 1));
    value *= pochhammer(n, i) * pochhammer(n - m, i);
    value /= pochhammer(m, i) * factorial(i);
    return value;
}

Rational r_at_one(unsigned s, int eps, const GeometryParams& geom) {
    geom.validate();
    if (s < 1) throw Error(ErrorKind::BadInput, "r_at_one requires s >= 1");
    if (eps != 0 && eps != 1)
        throw Error(ErrorKind::BadInput, "eps must be 0 or 1");
    const Rational n = geom.half_dim();
    const Rational m = geom.half_degree();
    const unsigned top = s - static_cast<unsigned>(eps);
    Rational value = pochhammer(n, s) * pochhammer(n - m + Rational(1), top);
    value /= pochhammer(m, s) * factorial(top);
    return value;
}

Rational q_one_ratio(unsigned i, const GeometryParams& geom) {
    geom.validate();
    const Rational n = geom.half_dim();
    const Rational m = geom.half_degree();
    const Rational iq(static_cast<long>(i));
    Rational first = (n + Rational(2L * i + 1)) / (n + Rational(2L * i - 1));
    Rational second = (n - m + iq) / (m + iq);
    Rational third = (n + iq - Rational(1)) / (iq + Rational(1));
    return first * second * third;
}

} // namespace tdesign
