#pragma once

#include <string>
#include <vector>

#include "kolak/numeric.hpp"
#include "kolak/substitution.hpp"

namespace kolak {

/// Arithmetic progression ell^level * Z + residue.
struct LatticeCoset {
    long long ell;
    int level;
    long long modulus; // ell^level
    long long residue; // 0 <= residue < modulus

    bool operator==(const LatticeCoset&) const = default;
};

struct IfsBranch {
    LetterId source;
    int offset; // ell * U_source + offset
    bool operator==(const IfsBranch&) const = default;
};

/// Recursion U_i = union of ell*U_j + k over occurrences rule(j)[k] = i; the
/// branches over all letters partition the columns.
struct IfsSystem {
    long long ell;
    std::vector<std::vector<IfsBranch>> per_letter;
};

IfsSystem ifs_system(const Substitution& sub);

/// The letter-position set U_letter approximated from inside by maximal
/// lattice cosets: a coset enters at the smallest level where its column of
/// sub^level is constantly `letter`.
struct CosetDecomposition {
    LetterId letter;
    long long ell;
    int depth;
    std::vector<LatticeCoset> cosets; // ordered by (level, residue)
    BigRat covered_density;           // sum of 1/modulus
    BigRat residual_density;          // letter frequency minus covered
};

std::vector<CosetDecomposition> decompose_all(const Substitution& sub, int max_depth);
CosetDecomposition coset_decomposition(const Substitution& sub, LetterId letter, int max_depth);

/// Exact letter frequencies: normalized left eigenvector of the substitution
/// matrix for the length eigenvalue.
std::vector<BigRat> letter_frequencies(const Substitution& sub);
/// Same for a known integer Perron eigenvalue (non-constant-length case).
std::vector<BigRat> letter_frequencies(const Substitution& sub, long long lambda);

struct CosetVerifyReport {
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::vector<std::pair<long long, LetterId>> examples; // position, found letter
    double empirical_frequency = 0.0;                     // of the letter in the prefix
    double empirical_residual_gap = 0.0;                  // empirical_frequency - covered
};

/// Checks every in-prefix member of every coset against the fixed point.
CosetVerifyReport verify_cosets_against_prefix(const Substitution& sub,
                                               const CosetDecomposition& dec, std::size_t n);

/// Cut-and-project metadata: physical line, l-adic internal factors, optional
/// cyclic factor, diagonal lattice.
struct CutProjectDescriptor {
    std::string physical;
    std::vector<long long> internal_primes;
    int cyclic_order; // 1 = no cyclic factor
    std::string internal_group;
    std::string lattice;
};

/// Kolakoski-level scheme for Kol(2m,2n).
CutProjectDescriptor cut_project_descriptor(long long m, long long n);
/// Scheme for a single constant-length substitution (internal Z_ell, diagonal lattice).
CutProjectDescriptor lm1_descriptor(long long ell);

} // namespace kolak
