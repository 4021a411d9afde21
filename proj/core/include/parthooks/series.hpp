#pragma once

#include <parthooks/integer.hpp>

#include <nlohmann/json_fwd.hpp>

#include <vector>

namespace parthooks {

/* Formal power series over Z truncated at a fixed order N: coefficients of
 * z^0..z^N, all arithmetic modulo z^{N+1}. Binary operations on operands of
 * different orders truncate the result to the smaller order.
 */
class truncated_series {
  public:
    explicit truncated_series(unsigned order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
    explicit truncated_series(std::vector<Integer> coeffs);

    static truncated_series one(unsigned order);
    /* z^degree, the zero series when degree > order */
    static truncated_series monomial(unsigned degree, unsigned order);

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    const Integer& operator[](unsigned n) const;
    Integer& coeff(unsigned n);

    truncated_series& operator+=(const truncated_series& rhs);
    truncated_series& operator-=(const truncated_series& rhs);
    truncated_series operator-() const;

    friend truncated_series operator+(truncated_series lhs, const truncated_series& rhs);
    friend truncated_series operator-(truncated_series lhs, const truncated_series& rhs);
    friend truncated_series operator*(const truncated_series& lhs, const truncated_series& rhs);

    /* multiplicative inverse; the constant term must be +1 or -1, anything
     * else is rejected (no rational arithmetic here)
     */
    truncated_series inverse() const;

    /* in-place multiplication by (1 - z^k) and by 1/(1 - z^k); k >= 1 */
    void mul_one_minus(unsigned k);
    void mul_inverse_one_minus(unsigned k);

    /* this * z^m at the same order */
    truncated_series shifted_up(unsigned m) const;

    /* this += c * z^shift * s */
    void add_scaled(const truncated_series& s, const Integer& c, unsigned shift = 0);

    bool is_zero() const noexcept;
    bool operator==(const truncated_series&) const = default;

  private:
    std::vector<Integer> coeffs_;
};

/* {"order": N, "coefficients": ["c0", ..., "cN"]}; coefficients travel as
 * decimal strings so arbitrary precision survives the round trip
 */
nlohmann::json series_to_json(const truncated_series& s);
truncated_series series_from_json(const nlohmann::json& j);

} // namespace parthooks
