#include "app.hpp"

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kolak/derived.hpp"
#include "kolak/diffraction.hpp"
#include "kolak/kolakoski.hpp"
#include "kolak/render.hpp"
#include "kolak/serialize.hpp"

namespace kolak::cli {

namespace {

std::complex<double> parse_complex(const std::string& s) {
    std::istringstream is(s);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(is >> re)) throw CLI::ValidationError("complex", "expected 're' or 're,im': " + s);
    if (is >> comma) {
        if (comma != ',' || !(is >> im))
            throw CLI::ValidationError("complex", "expected 're,im': " + s);
    }
    return {re, im};
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << content;
}

std::string json_line(const Json& j) { return j.dump(2) + "\n"; }

struct GenerateOpts {
    long long p = 2, q = 1;
    long long count = 64;
    bool bi = false;
    std::string output;
};

struct DeriveOpts {
    long long m = 2, n = 1;
    std::string kind = "auto";
    bool reduced = false;
    std::string output;
};

struct CosetsOpts {
    long long m = 2, n = 1;
    std::string letter;
    int depth = 4;
    bool csv = false;
    std::string output;
};

struct DiffractOpts {
    long long m = 2, n = 1;
    std::string cp = "1", cq = "0";
    int depth = 8;
    int max_denom = 2;
    long long oracle_n = 0;
    bool csv = false;
    std::string output;
};

struct VisualizeOpts {
    long long m = 2, n = 1;
    std::string sub_file;
    int depth = 4;
    int dim = 2;
    double contraction = 0.3;
    std::string colors;
    std::string output;
};

struct ReportOpts {
    long long m = 2, n = 1;
    int depth = 4;
    std::string output;
};

Json config_echo(const std::string& subcommand, const Json& fields) {
    Json c;
    c["subcommand"] = subcommand;
    for (const auto& [k, v] : fields.items()) c[k] = v;
    return c;
}

DerivedSubstitution derive_by_kind(const std::string& kind, long long m, long long n) {
    if (kind == "auto") return derive_constant_length(m, n);
    if (kind == "block") return block_substitution(m, n);
    if (kind == "numbered") return numbered_substitution(m, n);
    if (kind == "theta") return n == 1 ? theta_tilde(m) : theta(m, n);
    throw CLI::ValidationError("kind", "unknown kind: " + kind);
}

int do_generate(const GenerateOpts& o, std::ostream& out) {
    const KolParams params(o.p, o.q);
    const Alphabet alphabet = kolakoski_alphabet(params);
    std::string text;
    if (o.bi) {
        const auto [left, right] = kolakoski_bi_prefix(params, static_cast<std::size_t>(o.count));
        const Word rev(left.rbegin(), left.rend());
        text = format_word(alphabet, rev) + "|" + format_word(alphabet, right) + "\n";
    } else {
        text = format_word(alphabet, kolakoski_prefix(params, static_cast<std::size_t>(o.count))) + "\n";
    }
    write_output(o.output, text, out);
    return 0;
}

int do_derive(const DeriveOpts& o, std::ostream& out) {
    const DerivedSubstitution d = derive_by_kind(o.kind, o.m, o.n);
    const Substitution& sub = o.reduced && d.reduced ? *d.reduced : d.sub;
    std::string text = substitution_text(sub);
    // the analysis pipeline applies to the height-1 substitutions only
    if (d.kind == DerivedKind::theta || d.kind == DerivedKind::theta_tilde) {
        Json record = analysis_record(d);
        record["config"] = config_echo("derive", Json{{"m", o.m}, {"n", o.n}, {"kind", o.kind}});
        text += json_line(record);
    }
    write_output(o.output, text, out);
    return 0;
}

int do_analyze(const DeriveOpts& o, std::ostream& out) {
    const DerivedSubstitution d = derive_constant_length(o.m, o.n);
    Json record = analysis_record(d);
    record["config"] = config_echo("analyze", Json{{"m", o.m}, {"n", o.n}});
    write_output(o.output, json_line(record), out);
    return 0;
}

int do_cosets(const CosetsOpts& o, std::ostream& out) {
    const DerivedSubstitution d = derive_constant_length(o.m, o.n);
    const LetterId letter = o.letter.empty() ? d.sub.size() - 1 : d.sub.alphabet().id_of(o.letter);
    const CosetDecomposition dec = coset_decomposition(d.sub, letter, o.depth);
    if (o.csv) {
        write_output(o.output, cosets_csv(dec), out);
        return 0;
    }
    Json j = cosets_json(dec, d.sub.alphabet());
    j["config"] = config_echo("cosets", Json{{"m", o.m},
                                             {"n", o.n},
                                             {"letter", d.sub.alphabet().label(letter)},
                                             {"depth", o.depth}});
    write_output(o.output, json_line(j), out);
    return 0;
}

int do_diffract(const DiffractOpts& o, std::ostream& out) {
    const DerivedSubstitution d = derive_constant_length(o.m, o.n);
    DiffractionOptions opts;
    opts.depth = o.depth;
    opts.max_denom = o.max_denom;
    opts.oracle_n = static_cast<std::size_t>(o.oracle_n);
    const auto peaks =
        diffraction_spectrum(d, parse_complex(o.cp), parse_complex(o.cq), opts);
    if (o.csv) {
        write_output(o.output, peaks_csv(peaks), out);
        return 0;
    }
    Json j;
    j["config"] = config_echo("diffract", Json{{"m", o.m},
                                               {"n", o.n},
                                               {"cp", o.cp},
                                               {"cq", o.cq},
                                               {"depth", o.depth},
                                               {"max_denom", o.max_denom},
                                               {"oracle_n", o.oracle_n}});
    j["peaks"] = peaks_json(peaks);
    write_output(o.output, json_line(j), out);
    return 0;
}

int do_visualize(const VisualizeOpts& o, std::ostream& out) {
    Substitution sub = [&] {
        if (o.sub_file.empty()) return derive_constant_length(o.m, o.n).sub;
        std::ifstream file(o.sub_file);
        if (!file) throw std::runtime_error("cannot read substitution file: " + o.sub_file);
        std::stringstream buf;
        buf << file.rdbuf();
        return substitution_from_text(buf.str());
    }();

    EmbeddingSpec spec;
    spec.dimension = o.dim;
    spec.ell = constant_length(sub).value_or(0);
    spec.contraction = o.contraction;

    ColorMap colors = default_colors(sub.size());
    if (!o.colors.empty()) {
        colors.letter_colors.clear();
        std::istringstream is(o.colors);
        std::string tok;
        while (std::getline(is, tok, ',')) colors.letter_colors.push_back(tok);
    }

    std::ostringstream config;
    config << "kolak visualize m=" << o.m << " n=" << o.n << " depth=" << o.depth
           << " dim=" << o.dim << " contraction=" << o.contraction;
    write_output(o.output, render_svg(sub, o.depth, spec, colors, config.str()), out);
    return 0;
}

int do_report(const ReportOpts& o, std::ostream& out) {
    Json j;
    j["config"] = config_echo("report", Json{{"m", o.m}, {"n", o.n}, {"depth", o.depth}});
    Json body = full_report(o.m, o.n, o.depth);
    for (auto& [k, v] : body.items()) j[k] = v;
    write_output(o.output, json_line(j), out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"analysis toolkit for generalized Kolakoski sequences"};
    app.require_subcommand(1);
    // same schema as the flags, with one section per subcommand
    app.set_config("--config", "", "ini/toml file ([subcommand] sections hold its flags)");

    GenerateOpts gen;
    auto* cgen = app.add_subcommand("generate", "print a Kolakoski prefix");
    cgen->add_option("--p", gen.p, "first letter")->required();
    cgen->add_option("--q", gen.q, "second letter")->required();
    cgen->add_option("--n,--count", gen.count, "letters to emit");
    cgen->add_flag("--bi", gen.bi, "two-sided output around the seamline");
    cgen->add_option("-o,--output", gen.output, "output file (default stdout)");

    DeriveOpts der;
    auto* cder = app.add_subcommand("derive", "derive the constant-length substitution");
    cder->add_option("--m", der.m, "m of Kol(2m,2n)")->required();
    cder->add_option("--n", der.n, "n of Kol(2m,2n)")->required();
    cder->add_option("--kind", der.kind, "auto|block|numbered|theta");
    cder->add_flag("--reduced", der.reduced, "emit the reduced alphabet when available");
    cder->add_option("-o,--output", der.output, "output file");

    DeriveOpts ana;
    auto* cana = app.add_subcommand("analyze", "height, coincidence and spectrum record");
    cana->add_option("--m", ana.m, "m of Kol(2m,2n)")->required();
    cana->add_option("--n", ana.n, "n of Kol(2m,2n)")->required();
    cana->add_option("-o,--output", ana.output, "output file");

    CosetsOpts cos;
    auto* ccos = app.add_subcommand("cosets", "lattice-coset decomposition of a letter set");
    ccos->add_option("--m", cos.m, "m of Kol(2m,2n)")->required();
    ccos->add_option("--n", cos.n, "n of Kol(2m,2n)")->required();
    ccos->add_option("--letter", cos.letter, "letter label (default: the last letter)");
    ccos->add_option("--depth", cos.depth, "maximal coset level");
    ccos->add_flag("--csv", cos.csv, "emit modulus,residue CSV");
    ccos->add_option("-o,--output", cos.output, "output file");

    DiffractOpts dif;
    auto* cdif = app.add_subcommand("diffract", "Bragg peaks with truncation bounds");
    cdif->add_option("--m", dif.m, "m of Kol(2m,2n)")->required();
    cdif->add_option("--n", dif.n, "n of Kol(2m,2n)")->required();
    cdif->add_option("--cp", dif.cp, "atomic weight of 2m, as re,im");
    cdif->add_option("--cq", dif.cq, "atomic weight of 2n, as re,im");
    cdif->add_option("--depth", dif.depth, "coset decomposition depth");
    cdif->add_option("--max-denom", dif.max_denom, "largest s in frequencies k/ell^s");
    cdif->add_option("--oracle-n", dif.oracle_n, "prefix length for the exponential-sum check");
    cdif->add_flag("--csv", dif.csv, "emit CSV");
    cdif->add_option("-o,--output", dif.output, "output file");

    VisualizeOpts vis;
    auto* cvis = app.add_subcommand("visualize", "SVG model of the l-adic internal space");
    cvis->add_option("--m", vis.m, "m of Kol(2m,2n)");
    cvis->add_option("--n", vis.n, "n of Kol(2m,2n)");
    cvis->add_option("--sub", vis.sub_file, "substitution file (text rule format)");
    cvis->add_option("--depth", vis.depth, "address depth");
    cvis->add_option("--dim", vis.dim, "1 or 2");
    cvis->add_option("--contraction", vis.contraction, "2D contraction, below 1/3");
    cvis->add_option("--colors", vis.colors, "comma-separated letter colors");
    cvis->add_option("-o,--output", vis.output, "output file (default stdout)");

    ReportOpts rep;
    auto* crep = app.add_subcommand("report", "single JSON document for one (m,n)");
    crep->add_option("--m", rep.m, "m of Kol(2m,2n)")->required();
    crep->add_option("--n", rep.n, "n of Kol(2m,2n)")->required();
    crep->add_option("--depth", rep.depth, "coset depth in the report");
    crep->add_option("-o,--output", rep.output, "output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help;
        const int code = app.exit(e, help, help);
        (code == 0 ? out : err) << help.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (cgen->parsed()) return do_generate(gen, out);
        if (cder->parsed()) return do_derive(der, out);
        if (cana->parsed()) return do_analyze(ana, out);
        if (ccos->parsed()) return do_cosets(cos, out);
        if (cdif->parsed()) return do_diffract(dif, out);
        if (cvis->parsed()) return do_visualize(vis, out);
        if (crep->parsed()) return do_report(rep, out);
        err << "no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace kolak::cli
