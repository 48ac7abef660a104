#include "kolak/diffraction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kolak/coincidence.hpp"

namespace kolak {

Complex unit_phase(const BigRat& turns) {
    BigInt num = boost::multiprecision::numerator(turns);
    BigInt den = boost::multiprecision::denominator(turns); // > 0, reduced
    BigInt r = num % den;
    if (r < 0) r += den;
    const double frac = r.convert_to<double>() / den.convert_to<double>();
    const double angle = -2.0 * std::numbers::pi * frac;
    return {std::cos(angle), std::sin(angle)};
}

AutocorrelationEstimate autocorrelation(const Word& u, const std::vector<Complex>& weights,
                                        long long z) {
    const long long n = static_cast<long long>(u.size());
    if (std::llabs(z) >= n) throw std::out_of_range("autocorrelation: |z| < N required");
    const long long lo = std::max<long long>(0, -z);
    const long long hi = std::min(n, n - z);
    Complex acc{0.0, 0.0};
    for (long long i = lo; i < hi; ++i)
        acc += std::conj(weights.at(static_cast<std::size_t>(u[static_cast<std::size_t>(i)]))) *
               weights.at(static_cast<std::size_t>(u[static_cast<std::size_t>(i + z)]));
    return {z, acc / static_cast<double>(hi - lo), u.size()};
}

ScatteringAssignment block_weights(const DerivedSubstitution& derived, Complex c_p, Complex c_q,
                                   const BigRat& kappa) {
    ScatteringAssignment out;
    out.atomic = {c_p, c_q};
    out.letter_weights.reserve(derived.block_expansion.size());
    for (const Word& atoms : derived.block_expansion) {
        Complex w{0.0, 0.0};
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            const Complex c = atoms[j] == 0 ? c_p : c_q;
            w += c * unit_phase(kappa * BigRat(static_cast<long long>(j)));
        }
        out.letter_weights.push_back(w);
    }
    return out;
}

Complex fourier_coset(const LatticeCoset& coset, const BigRat& f) {
    const BigRat fm = f * BigRat(coset.modulus);
    if (boost::multiprecision::denominator(fm) != 1) return {0.0, 0.0};
    return unit_phase(f * BigRat(coset.residue)) / static_cast<double>(coset.modulus);
}

BraggPeak bragg_amplitude(const std::vector<CosetDecomposition>& decs,
                          const ScatteringAssignment& weights, const BigRat& f) {
    if (weights.letter_weights.size() != decs.size())
        throw std::invalid_argument("bragg_amplitude: one weight per letter required");
    Complex amp{0.0, 0.0};
    double trunc = 0.0;
    for (std::size_t i = 0; i < decs.size(); ++i) {
        const Complex w = weights.letter_weights[i];
        trunc += std::abs(w) * decs[i].residual_density.convert_to<double>();
        if (w == Complex{0.0, 0.0}) continue;
        Complex sum{0.0, 0.0};
        for (const LatticeCoset& c : decs[i].cosets) sum += fourier_coset(c, f);
        amp += w * sum;
    }
    return {f, amp, std::norm(amp), trunc};
}

Complex exp_sum_estimate(const Word& u, const std::vector<Complex>& weights, const BigRat& f) {
    if (u.empty()) throw std::invalid_argument("exp_sum_estimate: empty prefix");
    const BigInt num_b = boost::multiprecision::numerator(f);
    const BigInt den_b = boost::multiprecision::denominator(f);
    const long long den = den_b.convert_to<long long>();
    long long num = (num_b % den_b).convert_to<long long>();
    if (num < 0) num += den;

    Complex acc{0.0, 0.0};
    long long k = 0; // (num * n) mod den, stepped to avoid overflow
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double angle =
            -2.0 * std::numbers::pi * (static_cast<double>(k) / static_cast<double>(den));
        acc += weights.at(static_cast<std::size_t>(u[i])) * Complex{std::cos(angle), std::sin(angle)};
        k += num;
        if (k >= den) k -= den;
    }
    return acc / static_cast<double>(u.size());
}

SupportDescriptor bragg_support(long long m, long long n) {
    if (n < 1 || m <= n) throw std::invalid_argument("bragg_support: m > n >= 1 required");
    const long long ell = m + n;
    SupportDescriptor d;
    d.base = ell;
    d.primes = distinct_primes(ell);
    d.cyclic_order = spectrum_report(m, n, SpectrumReport::Level::kolakoski).cyclic_order;
    d.eps_max = d.cyclic_order == 4 ? 2 : d.cyclic_order == 2 ? 1 : 0;
    d.display = "{ k / (4 * " + std::to_string(ell) + "^s) : k in Z, s >= 0 }";
    std::string fac = "{ k / (2^e";
    for (std::size_t i = 0; i < d.primes.size(); ++i)
        fac += " * " + std::to_string(d.primes[i]) + "^s" + std::to_string(i + 1);
    fac += ") : k in Z, s_i >= 0, 0 <= e <= " + std::to_string(d.eps_max) + " }";
    d.factored = fac;
    return d;
}

SupportGcd effective_support_gcd(const Substitution& sub, std::size_t n) {
    auto ell = constant_length(sub);
    if (!ell) throw std::invalid_argument("effective_support_gcd: constant-length substitution required");
    if (static_cast<long long>(n) < ipow(*ell, 3))
        throw std::invalid_argument("effective_support_gcd: prefix of at least ell^3 letters required");
    const Word u = fixed_point_prefix(sub, first_stable_seed(sub), n);

    std::vector<long long> last(static_cast<std::size_t>(sub.size()), -1);
    std::vector<long long> gcds(static_cast<std::size_t>(sub.size()), 0);
    for (long long pos = 0; pos < static_cast<long long>(u.size()); ++pos) {
        const auto letter = static_cast<std::size_t>(u[static_cast<std::size_t>(pos)]);
        if (last[letter] >= 0) gcds[letter] = std::gcd(gcds[letter], pos - last[letter]);
        last[letter] = pos;
    }
    for (std::size_t i = 0; i < gcds.size(); ++i)
        if (gcds[i] == 0)
            throw std::domain_error("effective_support_gcd: letter " + sub.alphabet().label(static_cast<int>(i)) +
                                    " occurs fewer than twice in the prefix");
    bool refined = false;
    for (long long g : gcds)
        if (std::gcd(g, *ell) > 1) refined = true;
    return {std::move(gcds), refined};
}

std::vector<SpectrumPeak> diffraction_spectrum(const DerivedSubstitution& derived, Complex c_p,
                                               Complex c_q, const DiffractionOptions& opts) {
    const Substitution& sub = derived.sub;
    auto ell_opt = constant_length(sub);
    if (!ell_opt) throw std::invalid_argument("diffraction_spectrum: constant-length substitution required");
    const long long ell = *ell_opt;
    if (opts.max_denom < 0 || opts.max_denom > 8)
        throw std::invalid_argument("diffraction_spectrum: max_denom in 0..8 required");

    const std::vector<CosetDecomposition> decs = decompose_all(sub, opts.depth);
    Word prefix;
    if (opts.oracle_n > 0) prefix = fixed_point_prefix(sub, first_stable_seed(sub), opts.oracle_n);

    // One atomic period: block frequencies k / ell^max_denom in [0, 4).
    const long long den = ipow(ell, opts.max_denom);
    std::set<BigRat> frequencies;
    for (long long k = 0; k < 4 * den; ++k) frequencies.insert(BigRat(k, den));

    std::vector<SpectrumPeak> peaks;
    for (const BigRat& f : frequencies) {
        const BigRat kappa = f / 4;
        const ScatteringAssignment weights = block_weights(derived, c_p, c_q, kappa);
        const BraggPeak peak = bragg_amplitude(decs, weights, f);
        if (std::abs(peak.amplitude) <= peak.truncation_error) continue; // undecidable at this depth
        SpectrumPeak out{f, kappa, peak.amplitude, peak.intensity, peak.truncation_error,
                         std::nullopt, std::nullopt};
        if (opts.oracle_n > 0) {
            const Complex est = exp_sum_estimate(prefix, weights.letter_weights, f);
            out.oracle_estimate = est;
            out.oracle_delta = std::abs(est - peak.amplitude);
        }
        peaks.push_back(std::move(out));
    }
    return peaks;
}

} // namespace kolak
