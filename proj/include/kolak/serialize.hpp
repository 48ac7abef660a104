#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "kolak/coincidence.hpp"
#include "kolak/derived.hpp"
#include "kolak/diffraction.hpp"
#include "kolak/model_set.hpp"

namespace kolak {

using Json = nlohmann::ordered_json;

/// Plain-text rule format, one `letter -> image letters` line per rule, in
/// alphabet order. This is the canonical serialization.
std::string substitution_text(const Substitution& sub);
Substitution substitution_from_text(const std::string& text);

Json substitution_json(const Substitution& sub);
Substitution substitution_from_json(const Json& j);

Json rational_json(const BigRat& q); // {num, den} as integers
Json complex_json(const std::complex<double>& z);

/// Height, return gcd, coincidence certificate, spectral verdict and spectrum
/// for the constant-length substitution derived from (m, n).
Json analysis_record(const DerivedSubstitution& derived);

Json cosets_json(const CosetDecomposition& dec, const Alphabet& alphabet);
std::string cosets_csv(const CosetDecomposition& dec);

Json peaks_json(const std::vector<SpectrumPeak>& peaks);
std::string peaks_csv(const std::vector<SpectrumPeak>& peaks);

/// Everything for one (m, n): derivation, analysis, coincidence matrix with
/// its square, cosets, frequencies, support, cut-and-project scheme.
Json full_report(long long m, long long n, int coset_depth);

} // namespace kolak
