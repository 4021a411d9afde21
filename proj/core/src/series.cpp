#include <parthooks/series.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace parthooks {

truncated_series::truncated_series(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("truncated_series: need at least the constant term");
}

truncated_series truncated_series::one(unsigned order) {
    truncated_series s(order);
    s.coeffs_[0] = 1;
    return s;
}

truncated_series truncated_series::monomial(unsigned degree, unsigned order) {
    truncated_series s(order);
    if (degree <= order)
        s.coeffs_[degree] = 1;
    return s;
}

const Integer& truncated_series::operator[](unsigned n) const {
    if (n >= coeffs_.size())
        throw std::out_of_range("truncated_series: index beyond order");
    return coeffs_[n];
}

Integer& truncated_series::coeff(unsigned n) {
    if (n >= coeffs_.size())
        throw std::out_of_range("truncated_series: index beyond order");
    return coeffs_[n];
}

truncated_series& truncated_series::operator+=(const truncated_series& rhs) {
    if (rhs.coeffs_.size() < coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] += rhs.coeffs_[n];
    return *this;
}

truncated_series& truncated_series::operator-=(const truncated_series& rhs) {
    if (rhs.coeffs_.size() < coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] -= rhs.coeffs_[n];
    return *this;
}

truncated_series truncated_series::operator-() const {
    truncated_series out(order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        out.coeffs_[n] = -coeffs_[n];
    return out;
}

truncated_series operator+(truncated_series lhs, const truncated_series& rhs) {
    lhs += rhs;
    return lhs;
}

truncated_series operator-(truncated_series lhs, const truncated_series& rhs) {
    lhs -= rhs;
    return lhs;
}

truncated_series operator*(const truncated_series& lhs, const truncated_series& rhs) {
    const unsigned n_max = std::min(lhs.order(), rhs.order());
    truncated_series out(n_max);
    /* schoolbook convolution; fine up to a few hundred coefficients */
    for (unsigned i = 0; i <= n_max; ++i) {
        if (sgn(lhs.coeffs_[i]) == 0)
            continue;
        for (unsigned j = 0; i + j <= n_max; ++j)
            mpz_addmul(out.coeffs_[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(),
                       rhs.coeffs_[j].get_mpz_t());
    }
    return out;
}

truncated_series truncated_series::inverse() const {
    const Integer& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw std::domain_error("truncated_series: inverse needs constant term +1 or -1");
    truncated_series out(order());
    out.coeffs_[0] = c0;
    for (unsigned n = 1; n <= order(); ++n) {
        Integer s = 0; /* sum_{i>=1} a_i b_{n-i}; then a_0 b_n = -s */
        for (unsigned i = 1; i <= n; ++i)
            mpz_addmul(s.get_mpz_t(), coeffs_[i].get_mpz_t(), out.coeffs_[n - i].get_mpz_t());
        out.coeffs_[n] = -s * c0;
    }
    return out;
}

void truncated_series::mul_one_minus(unsigned k) {
    if (k == 0)
        throw std::invalid_argument("mul_one_minus: k must be positive");
    for (std::size_t n = coeffs_.size(); n-- > k;)
        coeffs_[n] -= coeffs_[n - k];
}

void truncated_series::mul_inverse_one_minus(unsigned k) {
    if (k == 0)
        throw std::invalid_argument("mul_inverse_one_minus: k must be positive");
    for (std::size_t n = k; n < coeffs_.size(); ++n)
        coeffs_[n] += coeffs_[n - k];
}

truncated_series truncated_series::shifted_up(unsigned m) const {
    truncated_series out(order());
    for (std::size_t n = m; n < coeffs_.size(); ++n)
        out.coeffs_[n] = coeffs_[n - m];
    return out;
}

void truncated_series::add_scaled(const truncated_series& s, const Integer& c, unsigned shift) {
    if (sgn(c) == 0)
        return;
    for (std::size_t n = shift; n < coeffs_.size(); ++n) {
        if (n - shift >= s.coeffs_.size())
            break;
        mpz_addmul(coeffs_[n].get_mpz_t(), c.get_mpz_t(), s.coeffs_[n - shift].get_mpz_t());
    }
}

bool truncated_series::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Integer& c) { return sgn(c) == 0; });
}

nlohmann::json series_to_json(const truncated_series& s) {
    nlohmann::json j;
    j["order"] = s.order();
    auto arr = nlohmann::json::array();
    for (const Integer& c : s.coefficients())
        arr.push_back(to_decimal(c));
    j["coefficients"] = std::move(arr);
    return j;
}

truncated_series series_from_json(const nlohmann::json& j) {
    const unsigned order = j.at("order").get<unsigned>();
    const auto& arr = j.at("coefficients");
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("series_from_json: coefficient count must be order + 1");
    std::vector<Integer> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& c : arr)
        coeffs.emplace_back(c.get<std::string>(), 10);
    return truncated_series(std::move(coeffs));
}

} // namespace parthooks
