#pragma once

#include <parthooks/integer.hpp>
#include <parthooks/series.hpp>

#include <vector>

namespace parthooks {

/* Gaussian binomial [alpha+beta choose beta]_q as an exact polynomial of
 * degree alpha*beta; coefficient(m) counts the partitions of m fitting in a
 * beta x alpha box (at most beta parts, each at most alpha).
 */
class q_binomial {
  public:
    /* Pascal-type recurrence [a+b,b] = [a-1+b,b] + q^a [a+b-1,b-1] */
    q_binomial(unsigned alpha, unsigned beta);

    /* same polynomial by the quotient of factorial products
     * prod_{j<=alpha+beta}(q^j - 1) / (prod_{j<=alpha}(q^j - 1) prod_{j<=beta}(q^j - 1)),
     * kept as an independent cross-check of the recurrence route
     */
    static q_binomial from_quotient(unsigned alpha, unsigned beta);

    unsigned alpha() const noexcept { return alpha_; }
    unsigned beta() const noexcept { return beta_; }
    unsigned degree() const noexcept { return alpha_ * beta_; }

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    /* 0 beyond the degree */
    const Integer& coefficient(std::size_t m) const;

    truncated_series to_series(unsigned order) const;

    bool operator==(const q_binomial&) const = default;

  private:
    q_binomial(unsigned alpha, unsigned beta, std::vector<Integer> coeffs);

    unsigned alpha_;
    unsigned beta_;
    std::vector<Integer> coeffs_;
};

} // namespace parthooks
