#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kolak/numeric.hpp"

namespace kolak {

/// Dense square matrix with exact 64-bit integer entries.
class IntMatrix {
public:
    explicit IntMatrix(int dim);
    static IntMatrix identity(int dim);

    int dim() const { return dim_; }
    long long at(int r, int c) const { return data_[index(r, c)]; }
    long long& at(int r, int c) { return data_[index(r, c)]; }

    IntMatrix operator*(const IntMatrix& rhs) const; // overflow-checked
    IntMatrix pow(int k) const;
    bool operator==(const IntMatrix&) const = default;

    std::vector<long long> row_sums() const;
    bool all_positive() const;
    bool column_positive(int col) const;

private:
    std::size_t index(int r, int c) const;
    int dim_ = 0;
    std::vector<long long> data_;
};

/// Polynomial with exact integer coefficients, leading coefficient first.
using Poly = std::vector<BigInt>;

/// Characteristic polynomial det(xI - A), monic, by the Berkowitz scheme
/// (division-free, exact over the integers).
Poly charpoly(const IntMatrix& a);

Poly poly_mul(const Poly& a, const Poly& b);
BigInt poly_eval(const Poly& p, const BigInt& x);

/// Multiplicity of `root` as a zero of p (0 when p(root) != 0).
int root_multiplicity(const Poly& p, const BigInt& root);

/// "x^6 - 7x^5 + 17x^4 - ..." rendering for reports.
std::string poly_to_string(const Poly& p);

/// True iff A^k is entrywise positive for some k; decided at the Wielandt
/// bound (n-1)^2 + 1 on the zero pattern.
bool is_primitive_matrix(const IntMatrix& a);

/// Smallest k <= kmax such that A^k has an all-positive column (zero-pattern
/// arithmetic; entries must be nonnegative).
std::optional<int> first_positive_column_power(const IntMatrix& a, int kmax);

/// Exact nonnegative left eigenvector f (f^T A = lambda f^T) normalized to
/// sum 1. Requires the eigenspace to be one-dimensional.
std::vector<BigRat> left_eigenvector(const IntMatrix& a, long long lambda);

} // namespace kolak
