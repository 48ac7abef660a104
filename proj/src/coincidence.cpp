#include "kolak/coincidence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kolak/numeric.hpp"

namespace kolak {

namespace {

constexpr long long kPrefixCap = 4'000'000;

long long require_constant_length(const Substitution& sub, const char* who) {
    auto ell = constant_length(sub);
    if (!ell) throw std::invalid_argument(std::string(who) + ": constant-length substitution required");
    return *ell;
}

} // namespace

PositionGcd position_gcd(const Substitution& sub, LetterId letter, int depth) {
    const long long ell = require_constant_length(sub, "position_gcd");
    if (depth < 1) throw std::invalid_argument("position_gcd: depth >= 1 required");
    if (!is_prefix_stable(sub, letter))
        throw std::invalid_argument("position_gcd: letter must seed a fixed point (prefix-stable)");
    const long long len = ipow(ell, depth);
    if (len > kPrefixCap) throw std::invalid_argument("position_gcd: prefix budget exceeded");
    Word u = fixed_point_prefix(sub, letter, static_cast<std::size_t>(len));

    const long long shallow = len / ell; // prefix length at depth-1
    long long g = 0, g_shallow = 0;
    for (long long i = 1; i < len; ++i) {
        if (u[static_cast<std::size_t>(i)] != letter) continue;
        g = std::gcd(g, i);
        if (i < shallow) g_shallow = std::gcd(g_shallow, i);
    }
    if (g == 0) throw std::domain_error("position_gcd: letter never returns within the prefix");
    return {g, depth > 1 && g == g_shallow, depth};
}

HeightResult height(const Substitution& sub) {
    const long long ell = require_constant_length(sub, "height");
    if (!is_primitive(sub)) throw std::invalid_argument("height: primitive substitution required");
    const LetterId seed = first_stable_seed(sub);

    // start at depth 3: the comparison of depths 1 and 2 sees too few returns
    // to be trusted (theta_tilde(2) already fools it)
    PositionGcd last{0, false, 0};
    for (int depth = 3;; ++depth) {
        long long len;
        try {
            len = ipow(ell, depth);
        } catch (const std::overflow_error&) {
            break;
        }
        if (len > kPrefixCap) break;
        last = position_gcd(sub, seed, depth);
        if (last.stable) break;
    }
    if (last.depth == 0) throw std::invalid_argument("height: prefix budget too small for this length");
    return {last.gcd, coprime_part(last.gcd, ell), last.depth, last.stable};
}

long long CoincidenceCertificate::column_index(long long ell) const {
    long long j = 0;
    for (int d : digits) {
        if (j > (INT64_MAX - d) / ell)
            throw std::overflow_error("column_index: ell^k exceeds 64 bits, use the digit path");
        j = j * ell + d;
    }
    return j;
}

std::optional<CoincidenceCertificate> pairwise_coincidence(const Substitution& sub,
                                                           LetterId s, LetterId t) {
    const long long ell = require_constant_length(sub, "pairwise_coincidence");
    if (!sub.alphabet().contains(s) || !sub.alphabet().contains(t))
        throw std::invalid_argument("pairwise_coincidence: unknown letter");
    if (s == t) return CoincidenceCertificate{0, {}, s};

    using Pair = std::pair<LetterId, LetterId>;
    const auto norm = [](LetterId a, LetterId b) { return Pair(std::min(a, b), std::max(a, b)); };

    // BFS over unordered pairs; the first singleton generated carries the
    // minimal k and, among those, the lexicographically smallest path.
    std::map<Pair, std::pair<Pair, int>> parent; // state -> (previous state, digit)
    const Pair start = norm(s, t);
    std::deque<Pair> queue{start};
    parent[start] = {start, -1};

    const auto path_to = [&](Pair state, int last_digit) {
        std::vector<int> digits{last_digit};
        while (parent[state].second >= 0) {
            digits.push_back(parent[state].second);
            state = parent[state].first;
        }
        std::reverse(digits.begin(), digits.end());
        return digits;
    };

    while (!queue.empty()) {
        const Pair cur = queue.front();
        queue.pop_front();
        for (int d = 0; d < ell; ++d) {
            const LetterId x = sub.rule(cur.first)[static_cast<std::size_t>(d)];
            const LetterId y = sub.rule(cur.second)[static_cast<std::size_t>(d)];
            if (x == y) {
                std::vector<int> digits = path_to(cur, d);
                return CoincidenceCertificate{static_cast<int>(digits.size()), std::move(digits), x};
            }
            const Pair child = norm(x, y);
            if (!parent.contains(child)) {
                parent[child] = {cur, d};
                queue.push_back(child);
            }
        }
    }
    return std::nullopt;
}

std::optional<CoincidenceCertificate> full_coincidence(const Substitution& sub) {
    require_constant_length(sub, "full_coincidence");
    const HeightResult h = height(sub);
    if (!h.stable) throw std::domain_error("full_coincidence: height did not stabilize");
    if (h.height != 1)
        throw std::invalid_argument("full_coincidence: height 1 required, got " +
                                    std::to_string(h.height));

    std::set<LetterId> column;
    for (int i = 0; i < sub.size(); ++i) column.insert(i);
    std::vector<int> digits;

    while (column.size() > 1) {
        auto it = column.begin();
        const LetterId x = *it++;
        const LetterId y = *it;
        auto cert = pairwise_coincidence(sub, x, y);
        if (!cert) return std::nullopt;
        digits.insert(digits.end(), cert->digits.begin(), cert->digits.end());
        std::set<LetterId> next;
        for (LetterId a : column) next.insert(walk(sub, a, cert->digits));
        column.swap(next);
    }
    return CoincidenceCertificate{static_cast<int>(digits.size()), std::move(digits), *column.begin()};
}

bool replay_certificate(const Substitution& sub, const CoincidenceCertificate& cert) {
    for (int i = 0; i < sub.size(); ++i)
        if (walk(sub, i, cert.digits) != cert.letter) return false;
    return true;
}

CoincidenceMatrix::CoincidenceMatrix(const Substitution& sub)
    : mat_(1), r_(sub.size()) {
    const long long ell = require_constant_length(sub, "CoincidenceMatrix");
    pairs_.reserve(static_cast<std::size_t>(r_) * (r_ + 1) / 2);
    for (int i = 0; i < r_; ++i) pairs_.emplace_back(i, i);
    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < r_; ++j) pairs_.emplace_back(i, j);

    mat_ = IntMatrix(static_cast<int>(pairs_.size()));
    for (int row = 0; row < dim(); ++row) {
        const auto [s, t] = pairs_[static_cast<std::size_t>(row)];
        for (long long d = 0; d < ell; ++d) {
            const LetterId u = sub.rule(s)[static_cast<std::size_t>(d)];
            const LetterId v = sub.rule(t)[static_cast<std::size_t>(d)];
            ++mat_.at(row, index_of(u, v));
        }
    }
}

std::pair<LetterId, LetterId> CoincidenceMatrix::pair_at(int index) const {
    if (index < 0 || index >= dim()) throw std::out_of_range("CoincidenceMatrix: pair index");
    return pairs_[static_cast<std::size_t>(index)];
}

int CoincidenceMatrix::index_of(LetterId a, LetterId b) const {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= r_) throw std::out_of_range("CoincidenceMatrix: letter out of range");
    if (a == b) return a;
    // off-diagonal pairs follow the r diagonal ones, lexicographically
    const int before = a * (2 * r_ - a - 1) / 2; // pairs (a', b') with a' < a
    return r_ + before + (b - a - 1);
}

Poly coincidence_charpoly(const CoincidenceMatrix& c) {
    const int r = c.alphabet_size();
    const int dim = c.dim();
    // Diagonal-pair rows never reach off-diagonal columns, so C is block
    // lower-triangular with the substitution matrix in the top-left block.
    for (int i = 0; i < r; ++i)
        for (int j = r; j < dim; ++j)
            if (c.matrix().at(i, j) != 0)
                throw std::logic_error("coincidence_charpoly: expected zero block");
    if (dim == r) return charpoly(c.matrix());

    IntMatrix top(r), bottom(dim - r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) top.at(i, j) = c.matrix().at(i, j);
    for (int i = r; i < dim; ++i)
        for (int j = r; j < dim; ++j) bottom.at(i - r, j - r) = c.matrix().at(i, j);
    return poly_mul(charpoly(top), charpoly(bottom));
}

SpectralVerdict spectral_verdict(const Substitution& sub) {
    const long long ell = require_constant_length(sub, "spectral_verdict");
    if (!is_primitive(sub)) throw std::invalid_argument("spectral_verdict: primitive substitution required");
    const HeightResult h = height(sub);
    if (!h.stable) throw std::domain_error("spectral_verdict: height did not stabilize");
    if (h.height != 1)
        throw std::invalid_argument("spectral_verdict: height 1 required; block the letters first");

    CoincidenceMatrix c(sub);
    const int kmax = c.dim() * c.dim();
    std::optional<int> k = first_positive_column_power(c.matrix(), kmax);

    Poly chi = coincidence_charpoly(c);
    const int mult = root_multiplicity(chi, BigInt(ell));
    const bool pure_point = mult == 1;

    if (k && !pure_point)
        throw std::logic_error("spectral_verdict: positive column found but length eigenvalue not simple");
    return {pure_point, k, mult, std::move(chi)};
}

SpectrumReport spectrum_report(long long m, long long n, SpectrumReport::Level level) {
    if (n < 1 || m <= n) throw std::invalid_argument("spectrum_report: m > n >= 1 required");
    const long long ell = m + n;
    SpectrumReport rep;
    rep.level = level;
    rep.primes = distinct_primes(ell);
    rep.pure_point = true;
    if (level == SpectrumReport::Level::sigma) {
        rep.cyclic_order = ell % 2 == 1 ? 2 : 1;
    } else {
        switch (ell % 4) {
            case 1:
            case 3: rep.cyclic_order = 4; break;
            case 2: rep.cyclic_order = 2; break;
            default: rep.cyclic_order = 1; break;
        }
    }
    return rep;
}

} // namespace kolak
