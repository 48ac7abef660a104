#pragma once

#include <optional>

#include "kolak/substitution.hpp"

namespace kolak {

enum class DerivedKind { blocked_sigma, numbered, theta, theta_tilde };

/// A substitution derived from Kol(2m,2n), together with the expansion of each
/// letter into the atomic alphabet {2m, 2n}.
struct DerivedSubstitution {
    DerivedKind kind;
    long long m;
    long long n;
    Substitution sub;
    Alphabet atomic;                      // {"2m", "2n"}
    std::vector<Word> block_expansion;    // per letter, over `atomic`
    std::optional<Substitution> reduced;  // numbered only: A_{m+1} folded into A_1

    long long ell() const { return m + n; }
    /// Substitution used for positional analysis (reduced form when present).
    const Substitution& analysis_sub() const { return reduced ? *reduced : sub; }
};

/// Two-letter block substitution A -> A^m B^m, B -> A^n B^n (A = pp, B = qq).
DerivedSubstitution block_substitution(long long m, long long n);

/// Constant-length-(m+n) substitution over {A_1..A_m, B_1..B_m, A_{m+1}..,
/// B_{m+1}..} obtained by numbering the blocks; `reduced` carries the
/// alphabet after identifying A_{m+1} with A_1.
DerivedSubstitution numbered_substitution(long long m, long long n);

/// Constant-length substitution on two-letter blocks, n > 1 case
/// (alphabet {a_1..a_m, b_2..b_n} after identifying b_1 = a_1).
DerivedSubstitution theta(long long m, long long n);

/// n = 1 case (alphabet {a_1..a_m, b_1}, no identification).
DerivedSubstitution theta_tilde(long long m);

/// theta or theta_tilde depending on n.
DerivedSubstitution derive_constant_length(long long m, long long n);

} // namespace kolak
