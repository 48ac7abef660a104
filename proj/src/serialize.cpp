#include "kolak/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "kolak/kolakoski.hpp"

namespace kolak {

std::string substitution_text(const Substitution& sub) {
    std::ostringstream os;
    for (int i = 0; i < sub.size(); ++i) {
        os << sub.alphabet().label(i) << " ->";
        for (LetterId x : sub.rule(i)) os << ' ' << sub.alphabet().label(x);
        os << '\n';
    }
    return os.str();
}

Substitution substitution_from_text(const std::string& text) {
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> images;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string lhs, arrow, tok;
        if (!(ls >> lhs)) continue; // blank line
        if (!(ls >> arrow) || arrow != "->")
            throw std::invalid_argument("substitution_from_text: expected '<letter> -> ...' in: " + line);
        std::vector<std::string> image;
        while (ls >> tok) image.push_back(tok);
        if (image.empty())
            throw std::invalid_argument("substitution_from_text: empty image in: " + line);
        labels.push_back(lhs);
        images.push_back(std::move(image));
    }
    if (labels.empty()) throw std::invalid_argument("substitution_from_text: no rules");
    Alphabet alphabet(labels);
    std::vector<Word> rules;
    for (const auto& image : images) {
        Word w;
        for (const std::string& tok : image) w.push_back(alphabet.id_of(tok));
        rules.push_back(std::move(w));
    }
    return Substitution(std::move(alphabet), std::move(rules));
}

Json substitution_json(const Substitution& sub) {
    Json j;
    Json alphabet = Json::array();
    for (int i = 0; i < sub.size(); ++i) alphabet.push_back(sub.alphabet().label(i));
    j["alphabet"] = std::move(alphabet);
    Json rules = Json::object();
    for (int i = 0; i < sub.size(); ++i) {
        Json image = Json::array();
        for (LetterId x : sub.rule(i)) image.push_back(sub.alphabet().label(x));
        rules[sub.alphabet().label(i)] = std::move(image);
    }
    j["rules"] = std::move(rules);
    if (!sub.name().empty()) j["name"] = sub.name();
    return j;
}

Substitution substitution_from_json(const Json& j) {
    std::vector<std::string> labels = j.at("alphabet").get<std::vector<std::string>>();
    Alphabet alphabet(labels);
    std::vector<Word> rules;
    for (const std::string& label : labels) {
        Word w;
        for (const auto& tok : j.at("rules").at(label)) w.push_back(alphabet.id_of(tok.get<std::string>()));
        rules.push_back(std::move(w));
    }
    std::string name = j.value("name", "");
    return Substitution(std::move(alphabet), std::move(rules), std::move(name));
}

namespace {

long long to_int64(const BigInt& v, const char* what) {
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
        throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
    return v.convert_to<long long>();
}

} // namespace

Json rational_json(const BigRat& q) {
    return Json{{"num", to_int64(boost::multiprecision::numerator(q), "rational_json")},
                {"den", to_int64(boost::multiprecision::denominator(q), "rational_json")}};
}

Json complex_json(const std::complex<double>& z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json analysis_record(const DerivedSubstitution& derived) {
    const Substitution& sub = derived.analysis_sub();
    Json j;
    j["name"] = derived.sub.name();
    j["length"] = derived.ell();

    const HeightResult h = height(sub);
    j["gcd"] = h.return_gcd;
    j["height"] = h.height;

    Json coincidence;
    if (auto cert = full_coincidence(sub)) {
        coincidence["k"] = cert->k;
        coincidence["digits"] = cert->digits;
        coincidence["letter"] = sub.alphabet().label(cert->letter);
    } else {
        coincidence = nullptr;
    }
    j["coincidence"] = std::move(coincidence);

    const SpectralVerdict verdict = spectral_verdict(sub);
    j["pure_point"] = verdict.pure_point;
    j["ell_multiplicity"] = verdict.ell_multiplicity;
    if (verdict.positive_column_power) j["positive_column_power"] = *verdict.positive_column_power;

    const SpectrumReport rep =
        spectrum_report(derived.m, derived.n, SpectrumReport::Level::kolakoski);
    j["spectrum"] = Json{{"primes", rep.primes}, {"cyclic_order", rep.cyclic_order}};
    return j;
}

Json cosets_json(const CosetDecomposition& dec, const Alphabet& alphabet) {
    Json j;
    j["letter"] = alphabet.label(dec.letter);
    j["ell"] = dec.ell;
    j["depth"] = dec.depth;
    Json cosets = Json::array();
    for (const LatticeCoset& c : dec.cosets)
        cosets.push_back(Json{{"r", c.level}, {"modulus", c.modulus}, {"residue", c.residue}});
    j["cosets"] = std::move(cosets);
    j["covered_density"] = rational_json(dec.covered_density);
    j["residual"] = rational_json(dec.residual_density);
    return j;
}

std::string cosets_csv(const CosetDecomposition& dec) {
    std::ostringstream os;
    os << "modulus,residue\n";
    for (const LatticeCoset& c : dec.cosets) os << c.modulus << ',' << c.residue << '\n';
    return os.str();
}

Json peaks_json(const std::vector<SpectrumPeak>& peaks) {
    Json arr = Json::array();
    for (const SpectrumPeak& p : peaks) {
        Json j;
        j["frequency"] = rational_json(p.block_frequency);
        j["frequency_atomic"] = rational_json(p.atomic_frequency);
        j["amplitude"] = complex_json(p.amplitude);
        j["intensity"] = p.intensity;
        j["error_bound"] = p.error_bound;
        if (p.oracle_estimate) {
            j["oracle"] = Json{{"estimate", complex_json(*p.oracle_estimate)},
                               {"delta", *p.oracle_delta}};
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string peaks_csv(const std::vector<SpectrumPeak>& peaks) {
    std::ostringstream os;
    os << "freq_num,freq_den,amp_re,amp_im,intensity,error_bound\n";
    for (const SpectrumPeak& p : peaks) {
        const Json f = rational_json(p.block_frequency);
        os << f["num"].get<long long>() << ',' << f["den"].get<long long>() << ','
           << p.amplitude.real() << ',' << p.amplitude.imag() << ',' << p.intensity << ','
           << p.error_bound << '\n';
    }
    return os.str();
}

Json full_report(long long m, long long n, int coset_depth) {
    Json j;
    j["params"] = Json{{"m", m}, {"n", n}, {"p", 2 * m}, {"q", 2 * n}};

    const KolParams params(2 * m, 2 * n);
    const Word prefix = kolakoski_prefix(params, 64);
    j["kolakoski_prefix"] = format_word(kolakoski_alphabet(params), prefix);

    const DerivedSubstitution blocked = block_substitution(m, n);
    const DerivedSubstitution numbered = numbered_substitution(m, n);
    const DerivedSubstitution derived = derive_constant_length(m, n);

    j["blocked_sigma"] = substitution_json(blocked.sub);
    j["numbered"] = substitution_json(numbered.sub);
    j["numbered_reduced"] = substitution_json(*numbered.reduced);
    j["constant_length"] = substitution_json(derived.sub);
    j["analysis"] = analysis_record(derived);

    const CoincidenceMatrix c(derived.sub);
    const auto matrix_rows = [](const IntMatrix& mat) {
        Json rows = Json::array();
        for (int i = 0; i < mat.dim(); ++i) {
            Json row = Json::array();
            for (int k = 0; k < mat.dim(); ++k) row.push_back(mat.at(i, k));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["substitution_matrix"] = matrix_rows(substitution_matrix(derived.sub));
    j["coincidence_matrix"] = matrix_rows(c.matrix());
    j["coincidence_matrix_squared"] = matrix_rows(c.matrix() * c.matrix());
    j["char_poly"] = poly_to_string(coincidence_charpoly(c));

    const std::vector<CosetDecomposition> decs = decompose_all(derived.sub, coset_depth);
    const std::vector<BigRat> freq = letter_frequencies(derived.sub);
    Json letters = Json::array();
    for (int i = 0; i < derived.sub.size(); ++i) {
        Json entry = cosets_json(decs[static_cast<std::size_t>(i)], derived.sub.alphabet());
        entry["frequency"] = rational_json(freq[static_cast<std::size_t>(i)]);
        letters.push_back(std::move(entry));
    }
    j["cosets"] = std::move(letters);

    SupportDescriptor support = bragg_support(m, n);
    {
        const long long ell = m + n;
        const long long span = std::max(ipow(ell, 3), 4096LL);
        support.refinement = effective_support_gcd(derived.sub,
                                                   static_cast<std::size_t>(span)).per_letter;
    }
    j["bragg_support"] = Json{{"base", support.base},
                              {"primes", support.primes},
                              {"cyclic_order", support.cyclic_order},
                              {"eps_max", support.eps_max},
                              {"display", support.display},
                              {"factored", support.factored},
                              {"letter_position_gcds", *support.refinement}};

    const CutProjectDescriptor scheme = cut_project_descriptor(m, n);
    j["cut_project"] = Json{{"physical", scheme.physical},
                            {"internal", scheme.internal_group},
                            {"primes", scheme.internal_primes},
                            {"cyclic_order", scheme.cyclic_order},
                            {"lattice", scheme.lattice}};
    return j;
}

} // namespace kolak
