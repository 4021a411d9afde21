#include <parthooks/q_binomial.hpp>

#include <stdexcept>

namespace parthooks {

namespace {

const Integer integer_zero = 0;

/* dense polynomial helpers for the quotient route */

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

std::vector<Integer> q_pow_minus_one(unsigned j) {
    std::vector<Integer> p(j + 1);
    p[0] = -1;
    p[j] = 1;
    return p;
}

/* long division by a monic divisor; the quotient stays integral, any nonzero
 * remainder is a hard error
 */
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    if (den.empty() || den.back() != 1)
        throw std::invalid_argument("poly_div_exact: divisor must be monic");
    if (num.size() < den.size())
        throw std::invalid_argument("poly_div_exact: numerator degree too small");
    std::vector<Integer> quot(num.size() - den.size() + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        quot[i] = num[i + den.size() - 1];
        if (sgn(quot[i]) == 0)
            continue;
        for (std::size_t j = 0; j < den.size(); ++j)
            mpz_submul(num[i + j].get_mpz_t(), quot[i].get_mpz_t(), den[j].get_mpz_t());
    }
    for (const Integer& c : num)
        if (sgn(c) != 0)
            throw std::domain_error("poly_div_exact: nonzero remainder");
    return quot;
}

} // namespace

q_binomial::q_binomial(unsigned alpha, unsigned beta, std::vector<Integer> coeffs)
    : alpha_(alpha), beta_(beta), coeffs_(std::move(coeffs)) {}

q_binomial::q_binomial(unsigned alpha, unsigned beta) : alpha_(alpha), beta_(beta) {
    /* row[b] holds [a+b, b] for the current a; start from [0+b, b] = 1 */
    std::vector<std::vector<Integer>> row(beta + 1);
    for (auto& c : row)
        c.assign(1, Integer(1));
    for (unsigned a = 1; a <= alpha; ++a) {
        std::vector<std::vector<Integer>> next(beta + 1);
        next[0].assign(1, Integer(1));
        for (unsigned b = 1; b <= beta; ++b) {
            std::vector<Integer> c(static_cast<std::size_t>(a) * b + 1);
            for (std::size_t m = 0; m < row[b].size(); ++m)
                c[m] = row[b][m];
            for (std::size_t m = 0; m < next[b - 1].size(); ++m)
                c[m + a] += next[b - 1][m];
            next[b] = std::move(c);
        }
        row = std::move(next);
    }
    coeffs_ = std::move(row[beta]);
}

q_binomial q_binomial::from_quotient(unsigned alpha, unsigned beta) {
    std::vector<Integer> num{Integer(1)};
    for (unsigned j = 1; j <= alpha + beta; ++j)
        num = poly_mul(num, q_pow_minus_one(j));
    std::vector<Integer> den{Integer(1)};
    for (unsigned j = 1; j <= alpha; ++j)
        den = poly_mul(den, q_pow_minus_one(j));
    for (unsigned j = 1; j <= beta; ++j)
        den = poly_mul(den, q_pow_minus_one(j));
    std::vector<Integer> quot = poly_div_exact(std::move(num), den);
    if (quot.size() != static_cast<std::size_t>(alpha) * beta + 1)
        throw std::logic_error("q_binomial: quotient degree mismatch");
    return q_binomial(alpha, beta, std::move(quot));
}

const Integer& q_binomial::coefficient(std::size_t m) const {
    return m < coeffs_.size() ? coeffs_[m] : integer_zero;
}

truncated_series q_binomial::to_series(unsigned order) const {
    truncated_series s(order);
    for (std::size_t m = 0; m < coeffs_.size() && m <= order; ++m)
        s.coeff(static_cast<unsigned>(m)) = coeffs_[m];
    return s;
}

} // namespace parthooks
