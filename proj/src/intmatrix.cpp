#include "tau4/intmatrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "tau4/checked.hpp"
#include "tau4/error.hpp"

namespace tau4 {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c_) throw ValidationError("ragged integer matrix");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<std::int64_t>& d) {
    int n = static_cast<int>(d.size());
    IntMatrix m(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = d[k];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (c_ != o.r_) throw ValidationError("matrix product dimension mismatch");
    IntMatrix p(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            std::int64_t v = (*this)(i, k);
            if (!v) continue;
            for (int j = 0; j < o.c_; ++j) p(i, j) = chk::add(p(i, j), chk::mul(v, o(k, j)));
        }
    return p;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < i; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool IntMatrix::is_diagonal() const {
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (i != j && (*this)(i, j)) return false;
    return true;
}

std::vector<std::int64_t> IntMatrix::diag() const {
    std::vector<std::int64_t> d;
    for (int k = 0; k < std::min(r_, c_); ++k) d.push_back((*this)(k, k));
    return d;
}

IntMatrix IntMatrix::principal(const std::vector<int>& idx) const {
    int n = static_cast<int>(idx.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = (*this)(idx[i], idx[j]);
    return m;
}

IntMatrix IntMatrix::direct_sum(const std::vector<std::int64_t>& extra) const {
    int n = r_ + static_cast<int>(extra.size());
    IntMatrix m(n, n);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t k = 0; k < extra.size(); ++k) m(r_ + k, r_ + k) = extra[k];
    return m;
}

std::int64_t IntMatrix::quadratic(const std::vector<std::int64_t>& x) const {
    if (static_cast<int>(x.size()) != r_ || r_ != c_) throw ValidationError("quadratic form dimension mismatch");
    std::int64_t s = 0;
    for (int i = 0; i < r_; ++i) {
        if (!x[i]) continue;
        std::int64_t row = 0;
        for (int j = 0; j < c_; ++j) row = chk::add(row, chk::mul((*this)(i, j), x[j]));
        s = chk::add(s, chk::mul(x[i], row));
    }
    return s;
}

std::int64_t determinant(const IntMatrix& m) {
    if (!m.is_square()) throw ValidationError("determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    int sign = 1;
    __int128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                __int128 num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num / prev;
                const __int128 lim = static_cast<__int128>(1) << 100;
                if (a[i][j] > lim || a[i][j] < -lim) throw OverflowError("determinant overflow");
            }
        prev = a[k][k];
    }
    __int128 d = a[n - 1][n - 1] * sign;
    if (d > INT64_MAX || d < INT64_MIN) throw OverflowError("determinant overflow");
    return static_cast<std::int64_t>(d);
}

namespace {

struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Frac make(std::int64_t n, std::int64_t d) {
        if (d < 0) {
            n = chk::neg(n);
            d = chk::neg(d);
        }
        std::int64_t g = std::gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return {n, d};
    }
    Frac operator-(const Frac& o) const {
        std::int64_t g = std::gcd(den, o.den);
        std::int64_t l = chk::mul(den / g, o.den);
        return make(chk::sub(chk::mul(num, l / den), chk::mul(o.num, l / o.den)), l);
    }
    Frac operator*(const Frac& o) const {
        std::int64_t g1 = std::gcd(num, o.den), g2 = std::gcd(o.num, den);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return make(chk::mul(num / g1, o.num / g2), chk::mul(den / g2, o.den / g1));
    }
    Frac inv() const { return make(den, num); }
    int sgn() const { return (num > 0) - (num < 0); }
};

}  // namespace

int signature(const SymIntMatrix& m) {
    if (!m.is_symmetric()) throw ValidationError("signature requires a symmetric matrix");
    int n = m.rows();
    std::vector<std::vector<Frac>> s(n, std::vector<Frac>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s[i][j] = {m(i, j), 1};
    std::vector<int> alive(n);
    std::iota(alive.begin(), alive.end(), 0);
    int sig = 0;
    auto drop = [&](int k) { alive.erase(std::find(alive.begin(), alive.end(), k)); };
    while (!alive.empty()) {
        int p = -1;
        for (int k : alive)
            if (s[k][k].num != 0) {
                p = k;
                break;
            }
        if (p >= 0) {
            sig += s[p][p].sgn();
            Frac inv = s[p][p].inv();
            drop(p);
            for (int i : alive)
                for (int j : alive) s[i][j] = s[i][j] - s[i][p] * inv * s[p][j];
            continue;
        }
        int pi = -1, pj = -1;
        for (int i : alive) {
            for (int j : alive)
                if (i != j && s[i][j].num != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
            if (pi >= 0) break;
        }
        if (pi < 0) break;
        // [[0,b],[b,0]] block: one positive and one negative eigenvalue.
        Frac binv = s[pi][pj].inv();
        drop(pi);
        drop(pj);
        for (int i : alive)
            for (int j : alive) {
                Frac t = s[i][pi] * binv * s[pj][j];
                Frac u = s[i][pj] * binv * s[pi][j];
                s[i][j] = s[i][j] - t - u;
            }
    }
    return sig;
}

}  // namespace tau4
