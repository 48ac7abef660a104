#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kolak/substitution.hpp"

using namespace kolak;

namespace {

Substitution sigma0_classic() {
    // 1 -> 2, 2 -> 22 over {2, 1}
    Alphabet a({"2", "1"});
    return Substitution(a, {{0, 0}, {0}}, "sigma0");
}

Substitution theta_tilde_2() {
    Alphabet a({"a1", "a2", "b1"});
    return Substitution(a, {{0, 1, 0}, {1, 2, 2}, {0, 1, 2}}, "theta_tilde_2");
}

Substitution thue_morse() {
    Alphabet a({"0", "1"});
    return Substitution(a, {{0, 1}, {1, 0}}, "thue_morse");
}

} // namespace

TEST_CASE("apply concatenates rule images") {
    const Substitution s0 = sigma0_classic();
    CHECK(s0.apply(Word{0}) == Word{0, 0});      // 2 -> 22
    CHECK(s0.apply(Word{}) == Word{});           // empty word identity
    CHECK(s0.apply(Word{1, 0}) == Word{0, 0, 0}); // 12 -> 2 22

    const Substitution tt = theta_tilde_2();
    CHECK(tt.apply(Word{0}) == Word{0, 1, 0}); // a1 -> a1 a2 a1

    CHECK_THROWS_AS(s0.apply(Word{7}), std::invalid_argument);
}

TEST_CASE("morphism law: apply(uv) = apply(u) ++ apply(v)") {
    const Substitution tt = theta_tilde_2();
    const std::vector<Word> words{{0}, {1, 2}, {2, 2, 0}, {0, 1, 2, 1, 0}};
    for (const Word& u : words)
        for (const Word& v : words) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            Word lhs = tt.apply(uv);
            Word rhs = tt.apply(u);
            const Word rv = tt.apply(v);
            rhs.insert(rhs.end(), rv.begin(), rv.end());
            CHECK(lhs == rhs);
        }
}

TEST_CASE("substitution matrix") {
    const IntMatrix m = substitution_matrix(theta_tilde_2());
    const std::vector<std::vector<long long>> expect{{2, 1, 0}, {0, 1, 2}, {1, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == expect[i][j]);

    // identity substitution -> identity matrix
    Alphabet a({"x", "y"});
    const Substitution id(a, {{0}, {1}}, "id");
    CHECK(substitution_matrix(id) == IntMatrix::identity(2));
}

TEST_CASE("composition law: matrix(s o s) = matrix(s)^2") {
    for (const Substitution& s : {theta_tilde_2(), thue_morse(), sigma0_classic()}) {
        const IntMatrix m = substitution_matrix(s);
        CHECK(substitution_matrix(compose(s, s)) == m * m);
    }
}

TEST_CASE("row sums equal lengths") {
    for (const Substitution& s : {theta_tilde_2(), thue_morse(), sigma0_classic()})
        CHECK(substitution_matrix(s).row_sums() == lengths(s));
}

TEST_CASE("lengths and constant length") {
    CHECK(lengths(theta_tilde_2()) == std::vector<long long>{3, 3, 3});
    CHECK(constant_length(theta_tilde_2()) == 3);
    CHECK(constant_length(sigma0_classic()) == std::nullopt);

    Alphabet a({"a"});
    CHECK(constant_length(Substitution(a, {{0}}, "single")) == 1);
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(theta_tilde_2()));
    CHECK(is_primitive(thue_morse()));
    Alphabet a({"x", "y"});
    CHECK_FALSE(is_primitive(Substitution(a, {{0}, {1}}, "id")));
}

TEST_CASE("fixed point prefix") {
    const Substitution tt = theta_tilde_2();
    // theta_tilde(2)^2(a1) = a1 a2 a1 a2 b1 b1 a1 a2 a1, frozen by expanding
    // a1 -> a1 a2 a1 twice by hand
    const Word expect{0, 1, 0, 1, 2, 2, 0, 1, 0};
    CHECK(fixed_point_prefix(tt, 0, 9) == expect);
    CHECK(fixed_point_prefix(tt, 0, 0) == Word{});

    // prefix property: shorter prefixes are prefixes of longer ones
    const Word w27 = fixed_point_prefix(tt, 0, 27);
    const Word w9 = fixed_point_prefix(tt, 0, 9);
    CHECK(std::equal(w9.begin(), w9.end(), w27.begin()));

    // b1 -> a1 a2 b1 does not start with b1, so it cannot seed a fixed point
    CHECK_THROWS_AS(fixed_point_prefix(tt, 2, 5), std::invalid_argument);
}

TEST_CASE("fixed point stream restarts identically") {
    FixedPointStream s(theta_tilde_2(), 0);
    Word first;
    for (int i = 0; i < 40; ++i) first.push_back(s.next());
    s.reset();
    Word second;
    for (int i = 0; i < 40; ++i) second.push_back(s.next());
    CHECK(first == second);
    CHECK(first == fixed_point_prefix(theta_tilde_2(), 0, 40));
}

TEST_CASE("walk follows columns of powers") {
    const Substitution tt = theta_tilde_2();
    // column 5 of theta_tilde^2 has digits (1,2); all letters land on b1
    const std::vector<int> path{1, 2};
    for (LetterId x : {0, 1, 2}) CHECK(walk(tt, x, path) == 2);
}

TEST_CASE("merge_letters folds identical rules") {
    Alphabet a({"p", "q", "r"});
    // p and r share the image (q p); merging r into p renames occurrences
    const Substitution s(a, {{1, 0}, {2, 2}, {1, 0}}, "m");
    const Substitution merged = merge_letters(s, 2, 0);
    CHECK(merged.size() == 2);
    CHECK(merged.alphabet().label(0) == "p");
    CHECK(merged.alphabet().label(1) == "q");
    CHECK(merged.rule(0) == Word{1, 0});
    CHECK(merged.rule(1) == Word{0, 0});

    CHECK_THROWS_AS(merge_letters(s, 1, 0), std::invalid_argument); // images differ
}

TEST_CASE("validation") {
    Alphabet a({"x", "y"});
    CHECK_THROWS_AS(Substitution(a, {{0}}, "short"), std::invalid_argument);
    CHECK_THROWS_AS(Substitution(a, {{0}, {}}, "empty image"), std::invalid_argument);
    CHECK_THROWS_AS(Substitution(a, {{0}, {5}}, "bad id"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({"x", "x"}), std::invalid_argument);
}
