#include "kolak/model_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace kolak {

IfsSystem ifs_system(const Substitution& sub) {
    auto ell = constant_length(sub);
    if (!ell) throw std::invalid_argument("ifs_system: constant-length substitution required");
    IfsSystem out{*ell, std::vector<std::vector<IfsBranch>>(static_cast<std::size_t>(sub.size()))};
    for (int j = 0; j < sub.size(); ++j)
        for (int k = 0; k < static_cast<int>(sub.rule(j).size()); ++k)
            out.per_letter[static_cast<std::size_t>(sub.rule(j)[static_cast<std::size_t>(k)])]
                .push_back({j, k});
    return out;
}

std::vector<CosetDecomposition> decompose_all(const Substitution& sub, int max_depth) {
    auto ell_opt = constant_length(sub);
    if (!ell_opt) throw std::invalid_argument("decompose_all: constant-length substitution required");
    if (max_depth < 1) throw std::invalid_argument("decompose_all: max_depth >= 1 required");
    const long long ell = *ell_opt;
    ipow(ell, max_depth); // overflow guard for residue arithmetic

    const int r = sub.size();
    std::vector<BigRat> freq = letter_frequencies(sub);

    std::vector<CosetDecomposition> out;
    out.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        out.push_back({i, ell, max_depth, {}, BigRat(0), BigRat(0)});

    // A live entry is a residue whose column map is not yet constant.
    struct Mixed {
        long long residue;
        std::vector<LetterId> column; // column[x] = walk of x along the digits of residue
    };
    std::vector<Mixed> mixed;
    {
        std::vector<LetterId> identity(static_cast<std::size_t>(r));
        for (int x = 0; x < r; ++x) identity[static_cast<std::size_t>(x)] = x;
        if (r == 1) {
            // degenerate single-letter case: Z itself is the maximal coset
            out[0].cosets.push_back({ell, 0, 1, 0});
            out[0].covered_density = 1;
        } else {
            mixed.push_back({0, identity}); // level-0 root: the whole line
        }
    }

    long long modulus = 1;
    for (int level = 1; level <= max_depth && !mixed.empty(); ++level) {
        if (mixed.size() > 4'000'000)
            throw std::runtime_error("decompose_all: mixed-residue frontier exceeds the budget "
                                     "(window boundaries are not shrinking)");
        std::vector<Mixed> next;
        std::vector<std::pair<long long, LetterId>> emitted; // residue, letter
        for (const Mixed& node : mixed) {
            for (long long d = 0; d < ell; ++d) {
                Mixed child;
                child.residue = node.residue + d * modulus;
                child.column.resize(static_cast<std::size_t>(r));
                bool constant = true;
                for (int x = 0; x < r; ++x) {
                    const LetterId step = sub.rule(x)[static_cast<std::size_t>(d)];
                    child.column[static_cast<std::size_t>(x)] =
                        node.column[static_cast<std::size_t>(step)];
                    if (child.column[static_cast<std::size_t>(x)] != child.column[0]) constant = false;
                }
                if (constant)
                    emitted.emplace_back(child.residue, child.column[0]);
                else
                    next.push_back(std::move(child));
            }
        }
        modulus *= ell;
        std::sort(emitted.begin(), emitted.end());
        for (const auto& [residue, letter] : emitted) {
            auto& dec = out[static_cast<std::size_t>(letter)];
            dec.cosets.push_back({ell, level, modulus, residue});
            dec.covered_density += BigRat(1, modulus);
        }
        mixed.swap(next);
    }

    for (int i = 0; i < r; ++i)
        out[static_cast<std::size_t>(i)].residual_density =
            freq[static_cast<std::size_t>(i)] - out[static_cast<std::size_t>(i)].covered_density;
    return out;
}

CosetDecomposition coset_decomposition(const Substitution& sub, LetterId letter, int max_depth) {
    if (!sub.alphabet().contains(letter))
        throw std::invalid_argument("coset_decomposition: unknown letter");
    return decompose_all(sub, max_depth)[static_cast<std::size_t>(letter)];
}

std::vector<BigRat> letter_frequencies(const Substitution& sub) {
    auto ell = constant_length(sub);
    if (!ell) throw std::invalid_argument("letter_frequencies: constant-length substitution required");
    return letter_frequencies(sub, *ell);
}

std::vector<BigRat> letter_frequencies(const Substitution& sub, long long lambda) {
    if (!is_primitive(sub)) throw std::invalid_argument("letter_frequencies: primitive substitution required");
    return left_eigenvector(substitution_matrix(sub), lambda);
}

CosetVerifyReport verify_cosets_against_prefix(const Substitution& sub,
                                               const CosetDecomposition& dec, std::size_t n) {
    for (const LatticeCoset& c : dec.cosets)
        if (static_cast<long long>(n) < c.modulus)
            throw std::invalid_argument("verify_cosets_against_prefix: prefix shorter than largest modulus");

    const Word u = fixed_point_prefix(sub, first_stable_seed(sub), n);
    CosetVerifyReport rep;
    for (const LatticeCoset& c : dec.cosets) {
        for (long long pos = c.residue; pos < static_cast<long long>(n); pos += c.modulus) {
            ++rep.checked;
            if (u[static_cast<std::size_t>(pos)] != dec.letter) {
                ++rep.violations;
                if (rep.examples.size() < 8)
                    rep.examples.emplace_back(pos, u[static_cast<std::size_t>(pos)]);
            }
        }
    }
    std::size_t count = 0;
    for (LetterId x : u)
        if (x == dec.letter) ++count;
    rep.empirical_frequency = static_cast<double>(count) / static_cast<double>(n);
    rep.empirical_residual_gap =
        rep.empirical_frequency - dec.covered_density.convert_to<double>();
    return rep;
}

namespace {

std::string internal_group_string(const std::vector<long long>& primes, int cyclic_order) {
    std::string s;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i) s += " x ";
        s += "Z_" + std::to_string(primes[i]);
    }
    if (cyclic_order > 1) s += " x Z/" + std::to_string(cyclic_order) + "Z";
    return s;
}

} // namespace

CutProjectDescriptor cut_project_descriptor(long long m, long long n) {
    if (n < 1 || m <= n) throw std::invalid_argument("cut_project_descriptor: m > n >= 1 required");
    const long long ell = m + n;
    int order;
    switch (ell % 4) {
        case 1:
        case 3: order = 4; break;
        case 2: order = 2; break;
        default: order = 1; break;
    }
    CutProjectDescriptor d;
    d.physical = "Z in R";
    d.internal_primes = distinct_primes(ell);
    d.cyclic_order = order;
    d.internal_group = internal_group_string(d.internal_primes, order);
    d.lattice = order > 1 ? "{(z, z, z mod " + std::to_string(order) + ") | z in Z}"
                          : "{(z, z) | z in Z}";
    return d;
}

CutProjectDescriptor lm1_descriptor(long long ell) {
    if (ell < 2) throw std::invalid_argument("lm1_descriptor: ell >= 2 required");
    CutProjectDescriptor d;
    d.physical = "Z in R";
    d.internal_primes = distinct_primes(ell);
    d.cyclic_order = 1;
    d.internal_group = "Z_" + std::to_string(ell);
    d.lattice = "{(z, z) | z in Z}";
    return d;
}

} // namespace kolak
