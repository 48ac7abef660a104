#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "kolak/derived.hpp"
#include "kolak/model_set.hpp"

namespace kolak {

using Complex = std::complex<double>;

/// Per-letter complex scattering strengths, optionally remembering the atomic
/// weights (c_p, c_q) they were recombined from.
struct ScatteringAssignment {
    std::vector<Complex> letter_weights;
    std::optional<std::pair<Complex, Complex>> atomic;
};

/// e^{-2 pi i turns}, with turns reduced modulo 1 exactly before the
/// trigonometric evaluation.
Complex unit_phase(const BigRat& turns);

struct AutocorrelationEstimate {
    long long shift;
    Complex value;
    std::size_t window;
};

/// (1/(N-|z|)) sum over valid n of conj(w(u_n)) w(u_{n+z}).
AutocorrelationEstimate autocorrelation(const Word& u, const std::vector<Complex>& weights,
                                        long long z);

/// Letter weights of a block substitution from atomic weights: each letter is
/// a run of atoms x_0..x_{k-1}, weighted c_i = sum_j c'_{x_j} e^{-2 pi i kappa j}
/// with kappa the frequency in atomic-position units.
ScatteringAssignment block_weights(const DerivedSubstitution& derived, Complex c_p, Complex c_q,
                                   const BigRat& kappa);

/// Fourier transform of the coset comb at frequency f: (1/modulus)
/// e^{-2 pi i f residue} when f * modulus is an integer, else 0.
Complex fourier_coset(const LatticeCoset& coset, const BigRat& f);

struct BraggPeak {
    BigRat frequency; // block units
    Complex amplitude;
    double intensity;        // |amplitude|^2
    double truncation_error; // sum_i |c_i| * residual_density(i)
};

/// Amplitude at f from the truncated coset decompositions, with the residual
/// densities bounding what the truncation can hide.
BraggPeak bragg_amplitude(const std::vector<CosetDecomposition>& decs,
                          const ScatteringAssignment& weights, const BigRat& f);

/// Brute-force Fourier-Bohr estimator (1/N) sum w(u_n) e^{-2 pi i f n}.
Complex exp_sum_estimate(const Word& u, const std::vector<Complex>& weights, const BigRat& f);

struct SupportDescriptor {
    long long base; // m+n
    std::vector<long long> primes;
    int cyclic_order;
    int eps_max; // log2(cyclic_order)
    std::string display;        // k / (4 (m+n)^s) form
    std::string factored;       // k / (2^e p1^s1 ... ) form
    std::optional<std::vector<long long>> refinement; // per-letter position gcds
};

/// Symbolic support of the Bragg peaks of Kol(2m,2n).
SupportDescriptor bragg_support(long long m, long long n);

struct SupportGcd {
    std::vector<long long> per_letter; // gcd of position differences
    bool refined;                      // some gcd shares a factor with ell
};

/// Per-letter gcd of occurrence-position differences in the length-n prefix.
SupportGcd effective_support_gcd(const Substitution& sub, std::size_t n);

struct DiffractionOptions {
    int depth = 8;           // coset decomposition depth
    int max_denom = 3;       // largest s in block frequencies k / ell^s
    std::size_t oracle_n = 0; // prefix length for the exponential-sum cross-check (0 = off)
};

struct SpectrumPeak {
    BigRat block_frequency;  // in [0, 4)
    BigRat atomic_frequency; // block / 4
    Complex amplitude;
    double intensity;
    double error_bound;
    std::optional<Complex> oracle_estimate;
    std::optional<double> oracle_delta;
};

/// Peaks of the Kolakoski chain with atomic weights (c_p, c_q): block
/// frequencies k/ell^s swept over one atomic period, letter weights
/// recombined per frequency class kappa = f/4, peaks below their truncation
/// bound suppressed.
std::vector<SpectrumPeak> diffraction_spectrum(const DerivedSubstitution& derived, Complex c_p,
                                               Complex c_q, const DiffractionOptions& opts);

} // namespace kolak
