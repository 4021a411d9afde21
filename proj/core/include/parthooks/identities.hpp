#pragma once

#include <parthooks/integer.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parthooks {

/* Registry of the verified identities. Each verifier sweeps a full parameter
 * grid, compares an enumeration-side value against a series-side value at
 * every point, and records every disagreement; it never throws on mismatch
 * and never stops early.
 *
 *   THM_1_1      hook counts by type vs nu_series
 *   PROP_1_2     q_binomial (recurrence) vs prop12_rhs coefficients
 *   THM_1_3      boundary and recursion laws of the aggregate vectors
 *   LEMMA_MK_NU  multiplicity-threshold counts vs aggregate nu
 *   COR_1_4      aggregate lambda/gamma vs lambda_series/gamma_series
 *   PROP_1_5     aggregate binomial moments vs *_binomial_series
 *   REM_1_6      power moments vs Stirling-converted binomial series
 *   THM_1_7      d! * lambda_binomial_series vs S_d(k) * euler_product
 */
enum class identity_id {
    thm_1_1,
    prop_1_2,
    thm_1_3,
    lemma_mk_nu,
    cor_1_4,
    prop_1_5,
    rem_1_6,
    thm_1_7,
};

std::string to_label(identity_id id);
identity_id from_label(const std::string& label); /* throws std::invalid_argument */
std::vector<identity_id> all_identities();

struct mismatch {
    nlohmann::json point; /* parameter assignment, e.g. {"k":2,"n":17} */
    std::string expected; /* decimal string, enumeration side */
    std::string actual;   /* decimal string, series side */
};

struct verification_report {
    identity_id id;
    std::vector<std::pair<std::string, unsigned long long>> parameters;
    std::vector<mismatch> mismatches;

    bool passed() const noexcept { return mismatches.empty(); }
    nlohmann::json to_json() const;
};

verification_report verify_thm_1_1(unsigned k_max, unsigned n_max);
verification_report verify_prop_1_2(unsigned alpha_max, unsigned beta_max, unsigned order);
verification_report verify_thm_1_3(unsigned n_max);
verification_report verify_lemma_mk_nu(unsigned n_max);
verification_report verify_cor_1_4(unsigned k_max, unsigned order, unsigned n_max);
verification_report verify_prop_1_5(unsigned k_max, unsigned d_max, unsigned order, unsigned n_max);
verification_report verify_rem_1_6(unsigned k_max, unsigned d_max, unsigned n_max);
verification_report verify_thm_1_7(unsigned k_max, unsigned d_max, unsigned order);

/* optional per-sweep overrides; unset fields fall back to the defaults */
struct sweep_options {
    static constexpr unsigned default_k_max = 6;
    static constexpr unsigned default_d_max = 4;
    static constexpr unsigned default_n_max = 25;
    static constexpr unsigned default_order = 60;
    static constexpr unsigned default_alpha_max = 8;
    static constexpr unsigned default_beta_max = 8;

    unsigned k_max = default_k_max;
    unsigned d_max = default_d_max;
    unsigned n_max = default_n_max;
    unsigned order = default_order;
    unsigned alpha_max = default_alpha_max;
    unsigned beta_max = default_beta_max;
};

verification_report run_verifier(identity_id id, const sweep_options& opts = {});

} // namespace parthooks
