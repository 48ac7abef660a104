#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kolak/substitution.hpp"

namespace kolak {

struct PositionGcd {
    long long gcd;
    bool stable; // unchanged between depth-1 and depth
    int depth;
};

/// gcd of the return positions i > 0 with u_i = u_0 = letter in the one-sided
/// fixed point seeded at `letter`, scanned over the length-ell^depth prefix.
PositionGcd position_gcd(const Substitution& sub, LetterId letter, int depth);

struct HeightResult {
    long long return_gcd;
    long long height; // largest divisor of return_gcd coprime to ell
    int depth_used;
    bool stable;
};

/// Height of a primitive constant-length substitution, with the return-gcd
/// depth escalated until it is stable across two consecutive depths.
HeightResult height(const Substitution& sub);

/// Witness that column j of sub^k is constant: j is encoded as the base-ell
/// digit path (most significant digit first).
struct CoincidenceCertificate {
    int k;
    std::vector<int> digits;
    LetterId letter;

    long long column_index(long long ell) const;
};

/// Shortest certificate (then lexicographically smallest digit path) for the
/// pair {s,t}: breadth-first search on unordered letter pairs, where {x,y}
/// expands to {rule(x)[d], rule(y)[d]} for each digit d.
std::optional<CoincidenceCertificate> pairwise_coincidence(const Substitution& sub,
                                                           LetterId s, LetterId t);

/// Full coincidence by induction over pairwise certificates: keep the letter
/// set of the current column and extend the digit path until it is a
/// singleton. Requires height 1.
std::optional<CoincidenceCertificate> full_coincidence(const Substitution& sub);

/// Walks the certificate path from every letter and checks a common endpoint.
bool replay_certificate(const Substitution& sub, const CoincidenceCertificate& cert);

/// Pair-indexed counting matrix: diagonal pairs (1,1)..(r,r) first, then
/// off-diagonal pairs in lexicographic order. Row sums equal the length, and
/// the substitution matrix sits in the top-left r x r block.
class CoincidenceMatrix {
public:
    explicit CoincidenceMatrix(const Substitution& sub);

    const IntMatrix& matrix() const { return mat_; }
    int dim() const { return mat_.dim(); }
    int alphabet_size() const { return r_; }
    std::pair<LetterId, LetterId> pair_at(int index) const;
    int index_of(LetterId a, LetterId b) const;

private:
    IntMatrix mat_;
    std::vector<std::pair<LetterId, LetterId>> pairs_;
    int r_;
};

/// Characteristic polynomial of C, using the block-triangular structure
/// (diagonal pairs never map to off-diagonal pairs).
Poly coincidence_charpoly(const CoincidenceMatrix& c);

struct SpectralVerdict {
    bool pure_point;                            // ell simple in char(C)
    std::optional<int> positive_column_power;   // smallest k with a positive column in C^k
    int ell_multiplicity;
    Poly char_polynomial;
};

/// Two independent checks on the coincidence matrix: a positive column in
/// some power, and simplicity of the length eigenvalue in the exact
/// characteristic polynomial. The first firing without the second is an
/// internal inconsistency and throws.
SpectralVerdict spectral_verdict(const Substitution& sub);

struct SpectrumReport {
    enum class Level { sigma, kolakoski };
    Level level;
    std::vector<long long> primes; // distinct primes of m+n
    int cyclic_order;              // 1, 2 or 4
    bool pure_point;
};

SpectrumReport spectrum_report(long long m, long long n, SpectrumReport::Level level);

} // namespace kolak
