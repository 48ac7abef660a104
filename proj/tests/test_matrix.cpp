#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "kolak/matrix.hpp"

using namespace kolak;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Reference characteristic polynomial by cofactor expansion of det(xI - A),
// feasible for the small matrices used here.
Poly charpoly_cofactor(const IntMatrix& a) {
    const int n = a.dim();
    // polynomial-valued determinant over Z[x], entries stored as coefficient vectors
    using P = std::vector<BigInt>;
    std::vector<std::vector<P>> m(n, std::vector<P>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                m[i][j] = {BigInt(1), BigInt(-a.at(i, j))};
            else
                m[i][j] = {BigInt(-a.at(i, j))};
        }
    const auto mul = [](const P& x, const P& y) {
        P out(x.size() + y.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
        return out;
    };
    const auto add = [](P x, const P& y) {
        if (y.size() > x.size()) x.insert(x.begin(), y.size() - x.size(), BigInt(0));
        for (std::size_t i = 0; i < y.size(); ++i) x[x.size() - y.size() + i] += y[i];
        return x;
    };
    const std::function<P(std::vector<int>)> det = [&](std::vector<int> rows) -> P {
        const int k = static_cast<int>(rows.size());
        const int col_base = n - k;
        if (k == 1) return m[rows[0]][col_base];
        P acc{BigInt(0)};
        for (int i = 0; i < k; ++i) {
            std::vector<int> rest;
            for (int j = 0; j < k; ++j)
                if (j != i) rest.push_back(rows[j]);
            P term = mul(m[rows[i]][col_base], det(rest));
            if (i % 2 == 1)
                for (BigInt& c : term) c = -c;
            acc = add(std::move(acc), term);
        }
        return acc;
    };
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    P p = det(all);
    while (p.size() > 1 && p.front() == 0) p.erase(p.begin());
    return p;
}

} // namespace

TEST_CASE("charpoly matches cofactor expansion on small matrices") {
    const std::vector<std::vector<std::vector<long long>>> cases{
        {{2}},
        {{2, 1}, {3, 4}},
        {{1, 1, 0}, {1, 1, 0}, {0, 0, 2}},
        {{2, 2, 0, 0}, {0, 0, 2, 2}, {1, 1, 0, 0}, {0, 0, 1, 1}},
        {{0, 1, 0, 2}, {3, 0, 1, 0}, {2, 2, 2, 2}, {1, 0, 0, 5}},
    };
    for (const auto& rows : cases) {
        const IntMatrix a = from_rows(rows);
        CHECK(charpoly(a) == charpoly_cofactor(a));
    }
}

TEST_CASE("root multiplicity by synthetic division") {
    // x^2 (x-1)^2 (x-2) (x-3) = x^6 - 7x^5 + 17x^4 - 17x^3 + 6x^2
    const Poly p{BigInt(1), BigInt(-7), BigInt(17), BigInt(-17), BigInt(6), BigInt(0), BigInt(0)};
    CHECK(root_multiplicity(p, BigInt(0)) == 2);
    CHECK(root_multiplicity(p, BigInt(1)) == 2);
    CHECK(root_multiplicity(p, BigInt(2)) == 1);
    CHECK(root_multiplicity(p, BigInt(3)) == 1);
    CHECK(root_multiplicity(p, BigInt(5)) == 0);
}

TEST_CASE("poly_to_string") {
    const Poly p{BigInt(1), BigInt(-7), BigInt(17), BigInt(-17), BigInt(6), BigInt(0), BigInt(0)};
    CHECK(poly_to_string(p) == "x^6 - 7*x^5 + 17*x^4 - 17*x^3 + 6*x^2");
    CHECK(poly_to_string(Poly{BigInt(1), BigInt(0), BigInt(-1)}) == "x^2 - 1");
}

TEST_CASE("primitivity via boolean powers") {
    CHECK(is_primitive_matrix(from_rows({{1, 1}, {1, 0}})));          // Fibonacci
    CHECK_FALSE(is_primitive_matrix(IntMatrix::identity(2)));        // identity
    CHECK_FALSE(is_primitive_matrix(from_rows({{0, 1}, {1, 0}})));   // swap, periodic
    CHECK(is_primitive_matrix(from_rows({{2, 2, 0, 0}, {0, 0, 2, 2}, {1, 1, 0, 0}, {0, 0, 1, 1}})));
}

TEST_CASE("first positive column power") {
    // swap matrix: powers alternate, no positive column ever
    CHECK(first_positive_column_power(from_rows({{0, 1}, {1, 0}}), 16) == std::nullopt);
    // already positive
    CHECK(first_positive_column_power(from_rows({{1, 1}, {1, 1}}), 16) == 1);
    // strictly lower-triangular-ish with delay
    const IntMatrix a = from_rows({{1, 1}, {1, 0}});
    CHECK(first_positive_column_power(a, 16) == 1); // column 0 of A is positive
}

TEST_CASE("left eigenvector, exact") {
    // doubling map on two letters: frequencies 1/2, 1/2
    const IntMatrix m = from_rows({{1, 1}, {1, 1}});
    const auto f = left_eigenvector(m, 2);
    CHECK(f[0] == BigRat(1, 2));
    CHECK(f[1] == BigRat(1, 2));

    const IntMatrix fib = from_rows({{1, 1}, {1, 0}});
    CHECK_THROWS_AS(left_eigenvector(fib, 2), std::invalid_argument); // 2 not an eigenvalue

    // non-simple eigenvalue rejected
    CHECK_THROWS_AS(left_eigenvector(IntMatrix::identity(2), 1), std::invalid_argument);
}

TEST_CASE("matrix power and row sums") {
    const IntMatrix m = from_rows({{2, 1, 0}, {0, 1, 2}, {1, 1, 1}});
    CHECK(m.row_sums() == std::vector<long long>{3, 3, 3});
    CHECK(m.pow(0) == IntMatrix::identity(3));
    CHECK(m.pow(2) == m * m);
}
