#include <doctest.h>

#include <parthooks/identities.hpp>

#include <stdexcept>

using namespace parthooks;

TEST_SUITE_BEGIN("identities");

TEST_CASE("labels round trip") {
    const auto ids = all_identities();
    CHECK(ids.size() == 8);
    for (identity_id id : ids)
        CHECK(from_label(to_label(id)) == id);
    CHECK(to_label(identity_id::thm_1_1) == "THM_1_1");
    CHECK(to_label(identity_id::lemma_mk_nu) == "LEMMA_MK_NU");
    CHECK_THROWS_AS(from_label("THM_9_9"), std::invalid_argument);
}

TEST_CASE("report json shape and status") {
    verification_report ok{identity_id::thm_1_3, {{"n_max", 7}}, {}};
    CHECK(ok.passed());
    nlohmann::json j = ok.to_json();
    CHECK(j.at("identity_id") == "THM_1_3");
    CHECK(j.at("status") == "pass");
    CHECK(j.at("parameters").at("n_max") == 7);
    CHECK(j.at("mismatches").empty());

    verification_report bad{identity_id::thm_1_3,
                            {{"n_max", 7}},
                            {{nlohmann::json{{"n", 3}, {"k", 1}}, "5", "6"}}};
    CHECK_FALSE(bad.passed());
    j = bad.to_json();
    CHECK(j.at("status") == "fail");
    CHECK(j.at("mismatches").size() == 1);
    CHECK(j.at("mismatches")[0].at("point").at("n") == 3);
    CHECK(j.at("mismatches")[0].at("expected") == "5");
    CHECK(j.at("mismatches")[0].at("actual") == "6");
}

TEST_CASE("verifier parameter validation") {
    CHECK_THROWS_AS(verify_thm_1_1(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_1_1(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_1_3(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma_mk_nu(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_cor_1_4(0, 10, 10), std::invalid_argument);
    CHECK_THROWS_AS(verify_prop_1_5(1, 1, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_rem_1_6(0, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_1_7(1, 0, 10), std::invalid_argument);
}

TEST_CASE("hook totals vs nu series") {
    const auto tiny = verify_thm_1_1(1, 4);
    CHECK(tiny.passed());
    const auto r = verify_thm_1_1(4, 15);
    CHECK(r.passed());
    CHECK(r.parameters ==
          std::vector<std::pair<std::string, unsigned long long>>{{"k_max", 4}, {"n_max", 15}});
}

TEST_CASE("q-binomial closed form") {
    CHECK(verify_prop_1_2(3, 3, 20).passed());
    CHECK(verify_prop_1_2(0, 4, 12).passed()); /* geometric-series degenerate row */
}

TEST_CASE("aggregate recursions and multiplicity lemma") {
    CHECK(verify_thm_1_3(12).passed());
    CHECK(verify_lemma_mk_nu(12).passed());
}

TEST_CASE("aggregate series identities") {
    CHECK(verify_cor_1_4(3, 20, 12).passed());
    CHECK(verify_prop_1_5(3, 2, 15, 10).passed());
    CHECK(verify_rem_1_6(2, 2, 10).passed());
    CHECK(verify_thm_1_7(2, 2, 20).passed());
}

TEST_CASE("verifier reports are deterministic") {
    const auto a = verify_cor_1_4(2, 12, 8);
    const auto b = verify_cor_1_4(2, 12, 8);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("run_verifier routes defaults") {
    sweep_options small;
    small.k_max = 2;
    small.d_max = 2;
    small.n_max = 8;
    small.order = 12;
    small.alpha_max = 2;
    small.beta_max = 2;
    for (identity_id id : all_identities()) {
        const auto r = run_verifier(id, small);
        CHECK_MESSAGE(r.passed(), to_label(id));
        CHECK(r.to_json().at("identity_id") == to_label(id));
    }
}

TEST_SUITE_END();
