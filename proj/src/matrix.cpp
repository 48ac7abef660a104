#include "kolak/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kolak {

IntMatrix::IntMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("IntMatrix: dimension >= 1 required");
    data_.assign(static_cast<std::size_t>(dim) * dim, 0);
}

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

std::size_t IntMatrix::index(int r, int c) const {
    if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
        throw std::out_of_range("IntMatrix: index out of range");
    return static_cast<std::size_t>(r) * dim_ + c;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const long long a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < dim_; ++j) {
                __int128 acc = static_cast<__int128>(out.at(i, j)) +
                               static_cast<__int128>(a) * rhs.at(k, j);
                if (acc > INT64_MAX || acc < INT64_MIN)
                    throw std::overflow_error("IntMatrix: product overflows int64");
                out.at(i, j) = static_cast<long long>(acc);
            }
        }
    return out;
}

IntMatrix IntMatrix::pow(int k) const {
    if (k < 0) throw std::invalid_argument("IntMatrix::pow: negative exponent");
    IntMatrix result = identity(dim_);
    IntMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::vector<long long> IntMatrix::row_sums() const {
    std::vector<long long> s(dim_, 0);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) s[i] += at(i, j);
    return s;
}

bool IntMatrix::all_positive() const {
    return std::all_of(data_.begin(), data_.end(), [](long long v) { return v > 0; });
}

bool IntMatrix::column_positive(int col) const {
    for (int i = 0; i < dim_; ++i)
        if (at(i, col) <= 0) return false;
    return true;
}

namespace {

// Zero/nonzero pattern as bitset rows, for reachability powers.
struct BitMatrix {
    int dim;
    int words;
    std::vector<uint64_t> rows; // dim * words

    explicit BitMatrix(int d) : dim(d), words((d + 63) / 64), rows(static_cast<std::size_t>(d) * words, 0) {}

    void set(int r, int c) { rows[static_cast<std::size_t>(r) * words + c / 64] |= 1ULL << (c % 64); }
    bool get(int r, int c) const { return rows[static_cast<std::size_t>(r) * words + c / 64] >> (c % 64) & 1; }

    BitMatrix operator*(const BitMatrix& rhs) const {
        BitMatrix out(dim);
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < dim; ++k)
                if (get(i, k))
                    for (int w = 0; w < words; ++w)
                        out.rows[static_cast<std::size_t>(i) * words + w] |=
                            rhs.rows[static_cast<std::size_t>(k) * words + w];
        return out;
    }

    bool all_set() const {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (!get(i, j)) return false;
        return true;
    }

    std::optional<int> full_column() const {
        for (int j = 0; j < dim; ++j) {
            bool full = true;
            for (int i = 0; i < dim && full; ++i) full = get(i, j);
            if (full) return j;
        }
        return std::nullopt;
    }
};

BitMatrix pattern_of(const IntMatrix& a) {
    BitMatrix b(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (a.at(i, j) < 0) throw std::invalid_argument("pattern_of: negative entry");
            if (a.at(i, j) > 0) b.set(i, j);
        }
    return b;
}

} // namespace

Poly charpoly(const IntMatrix& a) {
    const int n = a.dim();
    Poly poly{BigInt(1)};
    for (int i = 0; i < n; ++i) {
        // Toeplitz column for the i-th leading principal submatrix:
        // c0 = 1, c1 = -a_ii, c_{k+2} = -(R . M^k . C) with R the new row,
        // C the new column, M the previous principal block.
        std::vector<BigInt> c(static_cast<std::size_t>(i) + 2);
        c[0] = 1;
        c[1] = -BigInt(a.at(i, i));
        std::vector<BigInt> v(i);
        for (int j = 0; j < i; ++j) v[j] = a.at(j, i);
        for (int k = 0; k + 2 <= i + 1; ++k) {
            BigInt dot = 0;
            for (int j = 0; j < i; ++j) dot += BigInt(a.at(i, j)) * v[j];
            c[k + 2] = -dot;
            if (k + 3 <= i + 1) {
                std::vector<BigInt> w(i);
                for (int r = 0; r < i; ++r) {
                    BigInt s = 0;
                    for (int j = 0; j < i; ++j) s += BigInt(a.at(r, j)) * v[j];
                    w[r] = std::move(s);
                }
                v.swap(w);
            }
        }
        Poly next(static_cast<std::size_t>(i) + 2);
        for (std::size_t j = 0; j < next.size(); ++j) {
            BigInt s = 0;
            for (std::size_t k = 0; k <= j && k < c.size(); ++k)
                if (j - k < poly.size()) s += c[k] * poly[j - k];
            next[j] = std::move(s);
        }
        poly.swap(next);
    }
    return poly;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

BigInt poly_eval(const Poly& p, const BigInt& x) {
    BigInt acc = 0;
    for (const BigInt& c : p) acc = acc * x + c;
    return acc;
}

int root_multiplicity(const Poly& p, const BigInt& root) {
    Poly cur = p;
    int mult = 0;
    while (cur.size() > 1 && poly_eval(cur, root) == 0) {
        // synthetic division by (x - root); exact since root is a zero
        Poly q(cur.size() - 1);
        BigInt carry = 0;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            carry = carry * root + cur[i];
            q[i] = carry;
        }
        cur.swap(q);
        ++mult;
    }
    return mult;
}

std::string poly_to_string(const Poly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    const int deg = static_cast<int>(p.size()) - 1;
    bool first = true;
    for (int i = 0; i <= deg; ++i) {
        const BigInt& c = p[i];
        if (c == 0) continue;
        BigInt abs = c < 0 ? BigInt(-c) : c;
        int e = deg - i;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs != 1 || e == 0) os << abs.str();
        if (e > 0) {
            if (abs != 1) os << "*";
            os << "x";
            if (e > 1) os << "^" << e;
        }
    }
    if (first) return "0";
    return os.str();
}

bool is_primitive_matrix(const IntMatrix& a) {
    const int n = a.dim();
    if (n == 1) return a.at(0, 0) > 0;
    const int wielandt = (n - 1) * (n - 1) + 1;
    BitMatrix base = pattern_of(a);
    BitMatrix result(n);
    for (int i = 0; i < n; ++i) result.set(i, i);
    int k = wielandt;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result.all_set();
}

std::optional<int> first_positive_column_power(const IntMatrix& a, int kmax) {
    BitMatrix base = pattern_of(a);
    BitMatrix acc = base;
    for (int k = 1; k <= kmax; ++k) {
        if (acc.full_column()) return k;
        if (k < kmax) acc = acc * base;
    }
    return std::nullopt;
}

std::vector<BigRat> left_eigenvector(const IntMatrix& a, long long lambda) {
    const int n = a.dim();
    // Solve (A^T - lambda I) f = 0 by Gaussian elimination over rationals.
    std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = BigRat(a.at(j, i)) - (i == j ? BigRat(lambda) : BigRat(0));

    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        BigRat inv = m[rank][col];
        for (int j = 0; j < n; ++j) m[rank][j] /= inv;
        for (int r = 0; r < n; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            BigRat f = m[r][col];
            for (int j = 0; j < n; ++j) m[r][j] -= f * m[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    if (rank != n - 1)
        throw std::invalid_argument("left_eigenvector: eigenspace for lambda=" + std::to_string(lambda) +
                                    " is not one-dimensional (rank deficiency " + std::to_string(n - rank) + ")");

    // Back out the kernel vector: free variable = the one non-pivot column.
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    int free_col = -1;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) { free_col = j; break; }

    std::vector<BigRat> f(n, BigRat(0));
    f[free_col] = 1;
    for (int r = 0; r < rank; ++r) f[pivot_col[r]] = -m[r][free_col];

    BigRat sum = 0;
    for (const BigRat& x : f) sum += x;
    if (sum == 0) throw std::invalid_argument("left_eigenvector: kernel vector sums to zero");
    for (BigRat& x : f) x /= sum;
    for (const BigRat& x : f)
        if (x < 0) throw std::invalid_argument("left_eigenvector: eigenvector not nonnegative");
    return f;
}

} // namespace kolak
