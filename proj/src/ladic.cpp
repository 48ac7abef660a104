#include "kolak/ladic.hpp"

#include <algorithm>
#include <stdexcept>

namespace kolak {

int valuation(long long t, long long ell) {
    if (ell < 2) throw std::invalid_argument("valuation: ell >= 2 required");
    if (t == 0) throw std::domain_error("valuation: undefined at 0");
    int v = 0;
    while (t % ell == 0) {
        t /= ell;
        ++v;
    }
    return v;
}

BigRat metric_abs(long long t, long long ell) {
    if (ell < 2) throw std::invalid_argument("metric_abs: ell >= 2 required");
    if (t == 0) return BigRat(0);
    return BigRat(1, ipow(ell, valuation(t, ell)));
}

long long LAdicAddress::residue() const {
    long long s = 0;
    long long power = 1;
    for (int d : digits) {
        s += d * power;
        power *= ell;
    }
    return s;
}

long long LAdicAddress::modulus() const { return ipow(ell, level()); }

LAdicAddress hensel_digits(long long s, long long ell, int r) {
    if (ell < 2) throw std::invalid_argument("hensel_digits: ell >= 2 required");
    if (r < 0) throw std::invalid_argument("hensel_digits: r >= 0 required");
    if (s < 0 || s >= ipow(ell, r + 1))
        throw std::out_of_range("hensel_digits: s < ell^(r+1) required");
    LAdicAddress addr{ell, std::vector<int>(static_cast<std::size_t>(r) + 1, 0)};
    for (int i = 0; i <= r; ++i) {
        addr.digits[static_cast<std::size_t>(i)] = static_cast<int>(s % ell);
        s /= ell;
    }
    return addr;
}

LetterId cell_letter(const Substitution& sub, const LAdicAddress& addr) {
    auto ell = constant_length(sub);
    if (!ell || *ell != addr.ell)
        throw std::invalid_argument("cell_letter: substitution length must equal the address base");
    for (int d : addr.digits)
        if (d < 0 || d >= addr.ell) throw std::invalid_argument("cell_letter: digit out of range");
    // Column walks consume the most significant digit first.
    std::vector<int> path(addr.digits.rbegin(), addr.digits.rend());
    const LetterId first = walk(sub, 0, path);
    for (int x = 1; x < sub.size(); ++x)
        if (walk(sub, x, path) != first) return kMixedCell;
    return first;
}

} // namespace kolak
