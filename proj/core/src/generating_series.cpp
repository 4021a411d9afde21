#include <parthooks/generating_series.hpp>

#include <stdexcept>

namespace parthooks {

truncated_series euler_product(unsigned order) {
    truncated_series s = truncated_series::one(order);
    for (unsigned i = 1; i <= order; ++i)
        s.mul_inverse_one_minus(i);
    return s;
}

truncated_series geometric_factor(unsigned k, unsigned order) {
    if (k == 0)
        throw std::invalid_argument("geometric_factor: k must be positive");
    truncated_series s(order);
    for (unsigned long n = k; n <= order; n += k)
        s.coeff(static_cast<unsigned>(n)) = 1;
    return s;
}

truncated_series nu_series(unsigned k, unsigned order) {
    truncated_series s = geometric_factor(k, order);
    for (unsigned i = 1; i <= order; ++i)
        s.mul_inverse_one_minus(i);
    return s;
}

truncated_series lambda_series(unsigned k, unsigned order) {
    if (k == 0)
        throw std::invalid_argument("lambda_series: k must be positive");
    truncated_series s(order);
    for (unsigned j = k; j <= order; ++j)
        for (unsigned long n = j; n <= order; n += j)
            s.coeff(static_cast<unsigned>(n)) += 1;
    for (unsigned i = 1; i <= order; ++i)
        s.mul_inverse_one_minus(i);
    return s;
}

truncated_series gamma_series(unsigned k, unsigned order) {
    if (k == 0)
        throw std::invalid_argument("gamma_series: k must be positive");
    truncated_series s = truncated_series::monomial(k, order);
    s.mul_inverse_one_minus(k);
    s.mul_inverse_one_minus(k + 1);
    s.mul_one_minus(1);
    for (unsigned i = 1; i <= order; ++i)
        s.mul_inverse_one_minus(i);
    return s;
}

truncated_series prop12_rhs(unsigned alpha, unsigned beta, unsigned order) {
    truncated_series sum(order);
    for (unsigned long i = 0; i * (beta + 1) <= order; ++i) {
        truncated_series term =
            truncated_series::monomial(static_cast<unsigned>(i * (beta + 1)), order);
        for (unsigned long j = i + 1; j <= i + alpha; ++j) {
            if (j > order)
                break;
            term.mul_one_minus(static_cast<unsigned>(j));
        }
        sum += term;
    }
    truncated_series rhs = sum.inverse();
    rhs.mul_inverse_one_minus(alpha + beta + 1);
    return rhs;
}

truncated_series lambda_binomial_series(unsigned k, unsigned d, unsigned order) {
    if (k == 0)
        throw std::invalid_argument("lambda_binomial_series: k must be positive");
    truncated_series acc(order);
    truncated_series inner = truncated_series::one(order); /* prod_{j<=i} 1/(1-z^j) */
    for (unsigned long i = 0; i * k <= order; ++i) {
        if (i > 0)
            inner.mul_inverse_one_minus(static_cast<unsigned>(i));
        acc.add_scaled(inner, binomial(i, d), static_cast<unsigned>(i * k));
    }
    for (unsigned j = 1; j < k; ++j)
        acc.mul_inverse_one_minus(j);
    return acc;
}

truncated_series nu_binomial_series(unsigned k, unsigned d, unsigned order) {
    if (k == 0)
        throw std::invalid_argument("nu_binomial_series: k must be positive");
    truncated_series s = truncated_series::one(order);
    for (unsigned t = 0; t < d; ++t) {
        s = s.shifted_up(k);
        s.mul_inverse_one_minus(k);
    }
    for (unsigned i = 1; i <= order; ++i)
        s.mul_inverse_one_minus(i);
    return s;
}

truncated_series sigma_series(unsigned r, unsigned k, unsigned order) {
    if (r == 0 || k == 0)
        throw std::invalid_argument("sigma_series: r and k must be positive");
    truncated_series acc(order);
    for (unsigned long i = k; i * r <= order; ++i) {
        /* (z^i/(1-z^i))^r */
        truncated_series term = truncated_series::monomial(static_cast<unsigned>(i * r), order);
        for (unsigned t = 0; t < r; ++t)
            term.mul_inverse_one_minus(static_cast<unsigned>(i));
        acc += term;
    }
    return acc;
}

Integer conjugacy_class_size(const partition& cycle_type) {
    const unsigned d = cycle_type.content();
    const multiplicity_vector mv(cycle_type, d);
    Integer den = 1;
    for (unsigned j = 1; j <= d; ++j) {
        const unsigned m = mv.counts()[j - 1];
        if (m == 0)
            continue;
        den *= ui_pow(j, m) * factorial(m);
    }
    return exact_div(factorial(d), den);
}

cycle_index_series s_series(unsigned d, unsigned k, unsigned order) {
    if (k == 0)
        throw std::invalid_argument("s_series: k must be positive");
    std::vector<truncated_series> sigma;
    sigma.reserve(d);
    for (unsigned j = 1; j <= d; ++j)
        sigma.push_back(sigma_series(j, k, order));
    truncated_series total(order);
    for (const partition& cycle_type : enumerate_partitions(d)) {
        truncated_series mono = truncated_series::one(order);
        for (unsigned part : cycle_type.parts())
            mono = mono * sigma[part - 1];
        total.add_scaled(mono, conjugacy_class_size(cycle_type));
    }
    return cycle_index_series{d, k, std::move(total)};
}

Integer stirling2(unsigned d, unsigned i) {
    if (i > d)
        return 0;
    /* triangle S(n,k) = k S(n-1,k) + S(n-1,k-1), updated in place */
    std::vector<Integer> row(d + 1);
    row[0] = 1;
    for (unsigned n = 1; n <= d; ++n) {
        for (unsigned k = n; k >= 1; --k)
            row[k] = k * row[k] + row[k - 1];
        row[0] = 0;
    }
    return row[i];
}

} // namespace parthooks
