#include <parthooks/aggregates.hpp>
#include <parthooks/generating_series.hpp>
#include <parthooks/identities.hpp>
#include <parthooks/integer.hpp>
#include <parthooks/partition.hpp>
#include <parthooks/q_binomial.hpp>
#include <parthooks/series.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace {

using namespace parthooks;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

/* enumeration commands refuse n beyond this without --force */
constexpr unsigned guard_limit = 60;
constexpr unsigned builtin_order = 60;

struct output_config {
    std::string format; /* "tsv" or "json"; empty picks the per-command default */
    unsigned order = builtin_order;
    bool order_given = false; /* --order flag or PARTHOOKS_ORDER present */
    bool force = false;
};

bool use_json(const output_config& cfg, const char* command_default) {
    return (cfg.format.empty() ? std::string(command_default) : cfg.format) == "json";
}

std::string join_decimal(const std::vector<Integer>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += to_decimal(v[i]);
    }
    return out;
}

std::string join_decimal(const std::vector<unsigned>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

nlohmann::json decimal_array(const std::vector<Integer>& v) {
    auto arr = nlohmann::json::array();
    for (const Integer& x : v)
        arr.push_back(to_decimal(x));
    return arr;
}

nlohmann::json decimal_array(const std::vector<unsigned>& v) {
    auto arr = nlohmann::json::array();
    for (unsigned x : v)
        arr.push_back(std::to_string(x));
    return arr;
}

int refuse_guard(const char* command, unsigned n) {
    std::cerr << "parthooks: " << command << " enumerates all partitions of n; n = " << n
              << " exceeds the guard " << guard_limit << ", pass --force to run anyway\n";
    return exit_usage;
}

Integer partition_count(unsigned n) {
    Integer count = 0;
    for ([[maybe_unused]] const partition& p : enumerate_partitions(n))
        count += 1;
    return count;
}

/* k-th-part vector of a single partition padded to length n */
std::vector<unsigned> lambda_row(const partition& p, unsigned n) {
    std::vector<unsigned> row(n);
    for (unsigned k = 1; k <= n; ++k)
        row[k - 1] = p.part(k);
    return row;
}

int cmd_table(const output_config& cfg, std::ostream& out, unsigned n, const std::string& which) {
    if (n > guard_limit && !cfg.force)
        return refuse_guard("table", n);
    const bool want_lambda = which == "lambda" || which == "all";
    const bool want_nu = which == "nu" || which == "all";
    const bool want_gamma = which == "gamma" || which == "all";

    const aggregate_vectors agg(n);
    if (use_json(cfg, "tsv")) {
        nlohmann::json j;
        j["n"] = n;
        j["which"] = which;
        auto rows = nlohmann::json::array();
        for (const partition& p : enumerate_partitions(n)) {
            nlohmann::json row;
            row["partition"] = p.parts();
            const multiplicity_vector nu(p, n);
            if (want_lambda)
                row["lambda"] = decimal_array(lambda_row(p, n));
            if (want_nu)
                row["nu"] = decimal_array(nu.counts());
            if (want_gamma)
                row["gamma"] = decimal_array(gamma_vector(nu).counts());
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        nlohmann::json aggregate;
        if (want_lambda)
            aggregate["lambda"] = decimal_array(agg.lambda);
        if (want_nu)
            aggregate["nu"] = decimal_array(agg.nu);
        if (want_gamma)
            aggregate["gamma"] = decimal_array(agg.gamma);
        j["aggregate"] = std::move(aggregate);
        out << j.dump() << '\n';
        return exit_ok;
    }

    out << "# table n=" << n << " which=" << which << '\n';
    out << "# partition";
    if (want_lambda)
        out << "\tlambda";
    if (want_nu)
        out << "\tnu";
    if (want_gamma)
        out << "\tgamma";
    out << '\n';
    for (const partition& p : enumerate_partitions(n)) {
        const multiplicity_vector nu(p, n);
        out << join_decimal(p.parts());
        if (want_lambda)
            out << '\t' << join_decimal(lambda_row(p, n));
        if (want_nu)
            out << '\t' << join_decimal(nu.counts());
        if (want_gamma)
            out << '\t' << join_decimal(gamma_vector(nu).counts());
        out << '\n';
    }
    out << "aggregate";
    if (want_lambda)
        out << '\t' << join_decimal(agg.lambda);
    if (want_nu)
        out << '\t' << join_decimal(agg.nu);
    if (want_gamma)
        out << '\t' << join_decimal(agg.gamma);
    out << '\n';
    return exit_ok;
}

int cmd_hooks(const output_config& cfg, std::ostream& out, unsigned n, unsigned k) {
    if (n > guard_limit && !cfg.force)
        return refuse_guard("hooks", n);
    /* per-hooktype totals over all partitions of n; type alpha pairs with
     * leg k-1-alpha
     */
    std::vector<Integer> counts(k, 0);
    for (const partition& p : enumerate_partitions(n)) {
        const auto hist = hook_type_histogram(p, k);
        for (unsigned alpha = 0; alpha < k; ++alpha)
            counts[alpha] += hist[k - 1][alpha];
    }
    Integer total = 0;
    for (const Integer& c : counts)
        total += c;

    if (use_json(cfg, "tsv")) {
        nlohmann::json j;
        j["n"] = n;
        j["k"] = k;
        auto types = nlohmann::json::array();
        for (unsigned alpha = 0; alpha < k; ++alpha)
            types.push_back({{"arm", alpha}, {"leg", k - 1 - alpha}, {"count", to_decimal(counts[alpha])}});
        j["types"] = std::move(types);
        j["total"] = to_decimal(total);
        out << j.dump() << '\n';
        return exit_ok;
    }

    out << "# hooks n=" << n << " k=" << k << '\n';
    out << "# arm\tleg\tcount\n";
    for (unsigned alpha = 0; alpha < k; ++alpha)
        out << alpha << '\t' << k - 1 - alpha << '\t' << to_decimal(counts[alpha]) << '\n';
    out << "total\t" << to_decimal(total) << '\n';
    return exit_ok;
}

int cmd_moments(const output_config& cfg, std::ostream& out, unsigned n, unsigned k, unsigned d,
                const std::string& which, const std::string& kind) {
    if (n > guard_limit && !cfg.force)
        return refuse_guard("moments", n);
    const stat_family family = which == "lambda" ? stat_family::lambda : stat_family::nu;
    const auto binomial_coefficient = [&](unsigned i) {
        const truncated_series s = family == stat_family::lambda ? lambda_binomial_series(k, i, n)
                                                                 : nu_binomial_series(k, i, n);
        return s[n];
    };

    Integer value = 0;
    if (kind == "binomial") {
        value = binomial_coefficient(d);
    } else {
        /* x^d = sum_i i! S(d,i) C(x,i) */
        for (unsigned i = 0; i <= d; ++i) {
            const Integer weight = factorial(i) * stirling2(d, i);
            if (weight != 0)
                value += weight * binomial_coefficient(i);
        }
    }

    /* enumeration cross-check; for k > n every coordinate is 0, so the
     * aggregate is p(n) * C(0,d)
     */
    const bool cross_checked = n <= guard_limit;
    if (cross_checked) {
        Integer brute;
        if (k > n)
            brute = d == 0 ? partition_count(n) : Integer(0);
        else if (kind == "binomial")
            brute = aggregate_binomial(n, d, family)[k - 1];
        else
            brute = aggregate_power_moment(n, d, k, family);
        if (brute != value) {
            std::cerr << "parthooks: moments cross-check failed: series " << to_decimal(value)
                      << " vs enumeration " << to_decimal(brute) << '\n';
            return exit_mismatch;
        }
    }

    if (use_json(cfg, "tsv")) {
        nlohmann::json j;
        j["n"] = n;
        j["k"] = k;
        j["d"] = d;
        j["which"] = which;
        j["kind"] = kind;
        j["value"] = to_decimal(value);
        j["cross_checked"] = cross_checked;
        out << j.dump() << '\n';
        return exit_ok;
    }

    out << "# moments n=" << n << " k=" << k << " d=" << d << " which=" << which
        << " kind=" << kind << '\n';
    out << to_decimal(value) << '\n';
    return exit_ok;
}

int cmd_verify(const output_config& cfg, std::ostream& out, const std::string& suite,
               const sweep_options& opts) {
    std::vector<identity_id> ids;
    if (suite == "all")
        ids = all_identities();
    else
        ids.push_back(from_label(suite)); /* throws on unknown labels */

    std::vector<verification_report> reports;
    reports.reserve(ids.size());
    for (identity_id id : ids)
        reports.push_back(run_verifier(id, opts));
    bool all_passed = true;
    for (const verification_report& r : reports)
        all_passed = all_passed && r.passed();

    if (use_json(cfg, "json")) {
        auto arr = nlohmann::json::array();
        for (const verification_report& r : reports)
            arr.push_back(r.to_json());
        out << arr.dump() << '\n';
    } else {
        out << "# verify suite=" << suite << " k_max=" << opts.k_max << " d_max=" << opts.d_max
            << " n_max=" << opts.n_max << " order=" << opts.order
            << " alpha_max=" << opts.alpha_max << " beta_max=" << opts.beta_max << '\n';
        out << "# identity\tstatus\tmismatches\n";
        for (const verification_report& r : reports)
            out << to_label(r.id) << '\t' << (r.passed() ? "pass" : "fail") << '\t'
                << r.mismatches.size() << '\n';
    }
    return all_passed ? exit_ok : exit_mismatch;
}

struct series_params {
    unsigned k = 1;
    unsigned d = 1;
    unsigned r = 1;
    unsigned alpha = 0;
    unsigned beta = 0;
};

int cmd_series(const output_config& cfg, std::ostream& out, const std::string& name,
               const series_params& sp) {
    unsigned order = cfg.order;
    std::string params;
    truncated_series series(0u);
    if (name == "euler") {
        series = euler_product(order);
    } else if (name == "nu") {
        params = " k=" + std::to_string(sp.k);
        series = nu_series(sp.k, order);
    } else if (name == "lambda") {
        params = " k=" + std::to_string(sp.k);
        series = lambda_series(sp.k, order);
    } else if (name == "gamma") {
        params = " k=" + std::to_string(sp.k);
        series = gamma_series(sp.k, order);
    } else if (name == "sigma") {
        params = " r=" + std::to_string(sp.r) + " k=" + std::to_string(sp.k);
        series = sigma_series(sp.r, sp.k, order);
    } else if (name == "s") {
        params = " d=" + std::to_string(sp.d) + " k=" + std::to_string(sp.k);
        series = s_series(sp.d, sp.k, order).series;
    } else if (name == "qbinom") {
        params = " alpha=" + std::to_string(sp.alpha) + " beta=" + std::to_string(sp.beta);
        const q_binomial qb(sp.alpha, sp.beta);
        /* without an explicit order the exact polynomial is dumped whole */
        if (!cfg.order_given)
            order = qb.degree();
        series = qb.to_series(order);
    } else if (name == "prop12rhs") {
        params = " alpha=" + std::to_string(sp.alpha) + " beta=" + std::to_string(sp.beta);
        series = prop12_rhs(sp.alpha, sp.beta, order);
    } else if (name == "lambda-binom") {
        params = " k=" + std::to_string(sp.k) + " d=" + std::to_string(sp.d);
        series = lambda_binomial_series(sp.k, sp.d, order);
    } else {
        params = " k=" + std::to_string(sp.k) + " d=" + std::to_string(sp.d);
        series = nu_binomial_series(sp.k, sp.d, order);
    }

    if (use_json(cfg, "tsv")) {
        out << series_to_json(series).dump() << '\n';
    } else {
        out << "# series " << name << params << " order=" << series.order() << '\n';
        out << join_decimal(series.coefficients()) << '\n';
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition hook statistics: tables, moments, series, identity verification"};
    app.require_subcommand(1);

    output_config cfg;
    app.add_option("--format", cfg.format, "output format (default: tsv, verify: json)")
        ->check(CLI::IsMember({"tsv", "json"}));
    auto* order_opt = app.add_option("--order", cfg.order, "series truncation order")
                          ->envname("PARTHOOKS_ORDER")
                          ->check(CLI::PositiveNumber);
    std::string output_path;
    app.add_option("--output", output_path, "write to this file instead of standard output");
    app.add_flag("--force", cfg.force, "lift the n > 60 guard on enumeration commands");

    unsigned table_n = 0;
    std::string table_which;
    auto* table = app.add_subcommand("table", "per-partition vectors and the aggregate row");
    table->fallthrough();
    table->add_option("n", table_n, "weight of the partitions")
        ->required()
        ->check(CLI::PositiveNumber);
    table->add_option("which", table_which, "lambda, nu, gamma, or all")
        ->required()
        ->check(CLI::IsMember({"lambda", "nu", "gamma", "all"}));

    unsigned hooks_n = 0, hooks_k = 0;
    auto* hooks = app.add_subcommand("hooks", "hook counts of length k by type over partitions of n");
    hooks->fallthrough();
    hooks->add_option("n", hooks_n, "weight of the partitions")
        ->required()
        ->check(CLI::PositiveNumber);
    hooks->add_option("k", hooks_k, "hook length")->required()->check(CLI::PositiveNumber);

    unsigned moments_n = 0, moments_k = 0, moments_d = 0;
    std::string moments_which, moments_kind;
    auto* moments = app.add_subcommand("moments", "aggregate binomial or power moment");
    moments->fallthrough();
    moments->add_option("n", moments_n, "weight of the partitions")
        ->required()
        ->check(CLI::PositiveNumber);
    moments->add_option("k", moments_k, "coordinate index")->required()->check(CLI::PositiveNumber);
    moments->add_option("d", moments_d, "moment degree")->required();
    moments->add_option("which", moments_which, "lambda or nu")
        ->required()
        ->check(CLI::IsMember({"lambda", "nu"}));
    moments->add_option("kind", moments_kind, "binomial or power")
        ->required()
        ->check(CLI::IsMember({"binomial", "power"}));

    std::string verify_suite;
    std::optional<unsigned> verify_k_max, verify_d_max, verify_n_max, verify_alpha_max,
        verify_beta_max;
    auto* verify = app.add_subcommand("verify", "run identity verifiers and report mismatches");
    verify->fallthrough();
    verify->add_option("suite", verify_suite, "identity label or all")->required();
    verify->add_option("--k-max", verify_k_max, "sweep bound on k");
    verify->add_option("--d-max", verify_d_max, "sweep bound on d");
    verify->add_option("--n-max", verify_n_max, "sweep bound on n");
    verify->add_option("--alpha-max", verify_alpha_max, "sweep bound on alpha");
    verify->add_option("--beta-max", verify_beta_max, "sweep bound on beta");

    std::string series_name;
    series_params sp;
    auto* series = app.add_subcommand("series", "dump coefficients of a named series");
    series->fallthrough();
    series->add_option("name", series_name, "series constructor")
        ->required()
        ->check(CLI::IsMember({"euler", "nu", "lambda", "gamma", "sigma", "s", "qbinom",
                               "prop12rhs", "lambda-binom", "nu-binom"}));
    series->add_option("--k", sp.k, "coordinate index");
    series->add_option("--d", sp.d, "moment degree");
    series->add_option("--r", sp.r, "power in sigma_r");
    series->add_option("--alpha", sp.alpha, "box width");
    series->add_option("--beta", sp.beta, "box height");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    cfg.order_given = order_opt->count() > 0;

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!output_path.empty()) {
        file.open(output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            std::cerr << "parthooks: cannot open output file: " << output_path << '\n';
            return exit_usage;
        }
        out = &file;
    }

    int code = exit_ok;
    try {
        if (table->parsed()) {
            code = cmd_table(cfg, *out, table_n, table_which);
        } else if (hooks->parsed()) {
            code = cmd_hooks(cfg, *out, hooks_n, hooks_k);
        } else if (moments->parsed()) {
            code = cmd_moments(cfg, *out, moments_n, moments_k, moments_d, moments_which,
                               moments_kind);
        } else if (verify->parsed()) {
            sweep_options opts;
            if (cfg.order_given)
                opts.order = cfg.order;
            if (verify_k_max)
                opts.k_max = *verify_k_max;
            if (verify_d_max)
                opts.d_max = *verify_d_max;
            if (verify_n_max)
                opts.n_max = *verify_n_max;
            if (verify_alpha_max)
                opts.alpha_max = *verify_alpha_max;
            if (verify_beta_max)
                opts.beta_max = *verify_beta_max;
            code = cmd_verify(cfg, *out, verify_suite, opts);
        } else {
            code = cmd_series(cfg, *out, series_name, sp);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "parthooks: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "parthooks: " << e.what() << '\n';
        return exit_usage;
    }

    out->flush();
    if (!*out) {
        std::cerr << "parthooks: write failure\n";
        return exit_usage;
    }
    return code;
}
