#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kolak/serialize.hpp"

using namespace kolak;

TEST_CASE("text format round trip") {
    for (const Substitution& sub :
         {theta_tilde(2).sub, theta(5, 3).sub, numbered_substitution(2, 1).sub}) {
        const std::string text = substitution_text(sub);
        const Substitution back = substitution_from_text(text);
        CHECK(back == sub);
        CHECK(substitution_text(back) == text);
    }
}

TEST_CASE("text format rejects malformed input") {
    CHECK_THROWS_AS(substitution_from_text("a1 a2 a1\n"), std::invalid_argument);
    CHECK_THROWS_AS(substitution_from_text("a1 ->\n"), std::invalid_argument);
    CHECK_THROWS_AS(substitution_from_text("a -> a b\n"), std::invalid_argument); // b has no rule
    CHECK_THROWS_AS(substitution_from_text(""), std::invalid_argument);
}

TEST_CASE("json format round trip") {
    const Substitution sub = theta_tilde(2).sub;
    const Json j = substitution_json(sub);
    CHECK(j["alphabet"] == Json::array({"a1", "a2", "b1"}));
    CHECK(j["rules"]["a2"] == Json::array({"a2", "b1", "b1"}));
    const Substitution back = substitution_from_json(j);
    CHECK(back == sub);
    CHECK(back.name() == sub.name());
}

TEST_CASE("rational and complex encodings") {
    CHECK(rational_json(BigRat(19, 81)) == Json{{"num", 19}, {"den", 81}});
    CHECK(rational_json(BigRat(-2, 4)) == Json{{"num", -1}, {"den", 2}});
    const Json z = complex_json({1.5, -2.0});
    CHECK(z["re"] == 1.5);
    CHECK(z["im"] == -2.0);
}

TEST_CASE("analysis record for (2,1)") {
    const Json j = analysis_record(derive_constant_length(2, 1));
    CHECK(j["length"] == 3);
    CHECK(j["height"] == 1);
    CHECK(j["gcd"] == 1);
    CHECK(j["coincidence"]["k"] == 2);
    CHECK(j["coincidence"]["digits"] == Json::array({1, 2}));
    CHECK(j["coincidence"]["letter"] == "b1");
    CHECK(j["pure_point"] == true);
    CHECK(j["spectrum"]["primes"] == Json::array({3}));
    CHECK(j["spectrum"]["cyclic_order"] == 4);
}

TEST_CASE("cosets record") {
    const DerivedSubstitution d = theta_tilde(2);
    const CosetDecomposition dec = coset_decomposition(d.sub, 2, 4);
    const Json j = cosets_json(dec, d.sub.alphabet());
    CHECK(j["letter"] == "b1");
    CHECK(j["covered_density"] == Json{{"num", 19}, {"den", 81}});
    CHECK(j["cosets"][0] == Json{{"r", 2}, {"modulus", 9}, {"residue", 5}});
    CHECK(j["cosets"].size() == 7);

    const std::string csv = cosets_csv(dec);
    CHECK(csv.starts_with("modulus,residue\n9,5\n27,17\n"));
}

TEST_CASE("full report embeds the golden matrices and cosets") {
    const Json j = full_report(2, 1, 4);
    CHECK(j["coincidence_matrix"] == Json::parse(R"([[2,1,0,0,0,0],
                                                     [0,1,2,0,0,0],
                                                     [1,1,1,0,0,0],
                                                     [0,0,0,1,1,1],
                                                     [1,1,0,0,1,0],
                                                     [0,0,1,1,0,1]])"));
    CHECK(j["coincidence_matrix_squared"] == Json::parse(R"([[4,3,2,0,0,0],
                                                             [2,3,4,0,0,0],
                                                             [3,3,3,0,0,0],
                                                             [1,1,1,2,2,2],
                                                             [3,3,2,0,1,0],
                                                             [1,1,2,2,1,2]])"));
    Json expect_cosets = Json::array();
    for (auto [mod, res] : std::vector<std::pair<int, int>>{
             {9, 5}, {27, 17}, {27, 22}, {81, 53}, {81, 58}, {81, 64}, {81, 65}})
        expect_cosets.push_back(Json{{"r", mod == 9 ? 2 : mod == 27 ? 3 : 4},
                                     {"modulus", mod},
                                     {"residue", res}});
    CHECK(j["cosets"][2]["cosets"] == expect_cosets);
    CHECK(j["char_poly"] == "x^6 - 7*x^5 + 17*x^4 - 17*x^3 + 6*x^2");
    CHECK(j["kolakoski_prefix"].get<std::string>().starts_with("4444222244442222"));

    // regenerating the document is byte-identical
    CHECK(full_report(2, 1, 4).dump(2) == j.dump(2));
}
