#pragma once

#include <vector>

#include "kolak/numeric.hpp"
#include "kolak/substitution.hpp"

namespace kolak {

/// Largest power of ell dividing t (t != 0).
int valuation(long long t, long long ell);

/// ell^{-valuation(t)}; |0| = 0.
BigRat metric_abs(long long t, long long ell);

/// Truncated Hensel expansion: digits t_0..t_r, least significant first.
/// Denotes the cylinder of l-adic integers with these leading digits, i.e.
/// the coset ell^{r+1} Z + sum t_i ell^i.
struct LAdicAddress {
    long long ell;
    std::vector<int> digits;

    long long residue() const;
    long long modulus() const; // ell^{digits.size()}
    int level() const { return static_cast<int>(digits.size()); }
};

LAdicAddress hensel_digits(long long s, long long ell, int r); // s < ell^{r+1}

constexpr LetterId kMixedCell = -1;

/// The unique letter on the coset denoted by addr (constant column of
/// sub^level along the address), or kMixedCell.
LetterId cell_letter(const Substitution& sub, const LAdicAddress& addr);

} // namespace kolak
