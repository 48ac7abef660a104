#include "kolak/derived.hpp"

#include <stdexcept>
#include <string>

namespace kolak {

namespace {

void check_mn(long long m, long long n) {
    if (n < 1 || m <= n)
        throw std::invalid_argument("derived substitution: m > n >= 1 required, got m=" +
                                    std::to_string(m) + " n=" + std::to_string(n));
}

Alphabet atomic_alphabet(long long m, long long n) {
    return Alphabet({std::to_string(2 * m), std::to_string(2 * n)});
}

// Atoms of the i-th two-letter block of A^c B^c, with A = pp and B = qq.
Word block_pair_atoms(long long c, long long i) {
    Word atoms;
    for (long long pos = 2 * i; pos <= 2 * i + 1; ++pos) {
        const LetterId sigma_letter = pos < c ? 0 : 1; // A or B
        atoms.push_back(sigma_letter);
        atoms.push_back(sigma_letter);
    }
    return atoms;
}

// Repeat a group word k times.
Word repeat(const Word& group, long long k) {
    Word out;
    out.reserve(group.size() * static_cast<std::size_t>(k));
    for (long long i = 0; i < k; ++i) out.insert(out.end(), group.begin(), group.end());
    return out;
}

// Chop `image` into |letters| consecutive rules of equal length.
std::vector<Word> chop(const Word& image, std::size_t letters) {
    if (letters == 0 || image.size() % letters != 0)
        throw std::logic_error("chop: image length not divisible by letter count");
    const std::size_t len = image.size() / letters;
    std::vector<Word> rules;
    rules.reserve(letters);
    for (std::size_t i = 0; i < letters; ++i)
        rules.emplace_back(image.begin() + i * len, image.begin() + (i + 1) * len);
    return rules;
}

} // namespace

DerivedSubstitution block_substitution(long long m, long long n) {
    check_mn(m, n);
    Alphabet a({"A", "B"});
    Word rule_a, rule_b;
    for (long long i = 0; i < m; ++i) rule_a.push_back(0);
    for (long long i = 0; i < m; ++i) rule_a.push_back(1);
    for (long long i = 0; i < n; ++i) rule_b.push_back(0);
    for (long long i = 0; i < n; ++i) rule_b.push_back(1);
    Substitution sub(a, {rule_a, rule_b}, "sigma_" + std::to_string(m) + "_" + std::to_string(n));
    std::vector<Word> expansion{{0, 0}, {1, 1}}; // A = pp, B = qq
    return {DerivedKind::blocked_sigma, m, n, std::move(sub), atomic_alphabet(m, n),
            std::move(expansion), std::nullopt};
}

DerivedSubstitution numbered_substitution(long long m, long long n) {
    check_mn(m, n);
    const long long ell = m + n;
    // Alphabet in block order: A_1..A_m B_1..B_m | A_{m+1}..A_{m+n} B_{m+1}..B_{m+n}.
    std::vector<std::string> labels;
    for (long long i = 1; i <= m; ++i) labels.push_back("A" + std::to_string(i));
    for (long long i = 1; i <= m; ++i) labels.push_back("B" + std::to_string(i));
    for (long long i = m + 1; i <= ell; ++i) labels.push_back("A" + std::to_string(i));
    for (long long i = m + 1; i <= ell; ++i) labels.push_back("B" + std::to_string(i));
    Alphabet a(labels);

    Word m_group, n_group;
    for (long long i = 0; i < 2 * m; ++i) m_group.push_back(static_cast<LetterId>(i));
    for (long long i = 0; i < 2 * n; ++i) n_group.push_back(static_cast<LetterId>(2 * m + i));

    Word image_m = repeat(m_group, m);
    { Word tail = repeat(n_group, m); image_m.insert(image_m.end(), tail.begin(), tail.end()); }
    Word image_n = repeat(m_group, n);
    { Word tail = repeat(n_group, n); image_n.insert(image_n.end(), tail.begin(), tail.end()); }

    std::vector<Word> rules = chop(image_m, static_cast<std::size_t>(2 * m));
    std::vector<Word> n_rules = chop(image_n, static_cast<std::size_t>(2 * n));
    rules.insert(rules.end(), n_rules.begin(), n_rules.end());

    Substitution sub(a, std::move(rules),
                     "numbered_" + std::to_string(m) + "_" + std::to_string(n));

    // A_{m+1} always receives the same image as A_1.
    Substitution reduced = merge_letters(sub, static_cast<LetterId>(2 * m), 0);

    std::vector<Word> expansion;
    for (long long i = 0; i < 2 * (m + n); ++i) {
        const bool is_b = (i >= m && i < 2 * m) || i >= 2 * m + n;
        expansion.push_back(is_b ? Word{1, 1} : Word{0, 0});
    }
    return {DerivedKind::numbered, m, n, std::move(sub), atomic_alphabet(m, n),
            std::move(expansion), std::move(reduced)};
}

namespace {

// Shared construction behind theta and theta_tilde: number the two-letter
// blocks of A^m B^m as a_1..a_m and of A^n B^n as b_1..b_n, re-block the
// images into rows of length m+n, and (for n > 1) identify b_1 = a_1.
DerivedSubstitution theta_like(long long m, long long n, DerivedKind kind) {
    std::vector<std::string> labels;
    for (long long i = 1; i <= m; ++i) labels.push_back("a" + std::to_string(i));
    for (long long i = 1; i <= n; ++i) labels.push_back("b" + std::to_string(i));
    Alphabet a(labels);

    Word a_group, b_group;
    for (long long i = 0; i < m; ++i) a_group.push_back(static_cast<LetterId>(i));
    for (long long i = 0; i < n; ++i) b_group.push_back(static_cast<LetterId>(m + i));

    Word image_a = repeat(a_group, m);
    { Word tail = repeat(b_group, m); image_a.insert(image_a.end(), tail.begin(), tail.end()); }
    Word image_b = repeat(a_group, n);
    { Word tail = repeat(b_group, n); image_b.insert(image_b.end(), tail.begin(), tail.end()); }

    std::vector<Word> rules = chop(image_a, static_cast<std::size_t>(m));
    std::vector<Word> b_rules = chop(image_b, static_cast<std::size_t>(n));
    rules.insert(rules.end(), b_rules.begin(), b_rules.end());

    const std::string name = (kind == DerivedKind::theta_tilde)
                                 ? "theta_tilde_" + std::to_string(m)
                                 : "theta_" + std::to_string(m) + "_" + std::to_string(n);
    Substitution full(a, std::move(rules), name);

    Substitution sub = n > 1 ? merge_letters(full, static_cast<LetterId>(m), 0) : full;

    // Final-alphabet expansions: letter k < m is a_{k+1}, else b_{k-m+2}
    // (n > 1) or b_1 (n = 1); each is two sigma-letters, four atoms.
    std::vector<Word> expansion;
    for (int k = 0; k < sub.size(); ++k) {
        long long group, pair;
        if (k < m) {
            group = m;
            pair = k;
        } else {
            group = n;
            pair = n > 1 ? k - m + 1 : 0;
        }
        expansion.push_back(block_pair_atoms(group, pair));
    }
    return {kind, m, n, std::move(sub), atomic_alphabet(m, n), std::move(expansion), std::nullopt};
}

} // namespace

DerivedSubstitution theta(long long m, long long n) {
    check_mn(m, n);
    if (n <= 1) throw std::invalid_argument("theta: n > 1 required (use theta_tilde for n = 1)");
    return theta_like(m, n, DerivedKind::theta);
}

DerivedSubstitution theta_tilde(long long m) {
    check_mn(m, 1);
    return theta_like(m, 1, DerivedKind::theta_tilde);
}

DerivedSubstitution derive_constant_length(long long m, long long n) {
    check_mn(m, n);
    return n == 1 ? theta_tilde(m) : theta(m, n);
}

} // namespace kolak
