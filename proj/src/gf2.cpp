#include "tau4/gf2.hpp"

#include <algorithm>
#include <bit>

#include "tau4/error.hpp"

namespace tau4 {

BitVec BitVec::from_string(const std::string& s) {
    BitVec v(static_cast<int>(s.size()));
    for (int k = 0; k < v.size(); ++k) {
        if (s[k] == '1')
            v.set(k);
        else if (s[k] != '0')
            throw ValidationError("bit string may contain only 0 and 1");
    }
    return v;
}

BitVec BitVec::from_mask(std::uint64_t mask, int len) {
    BitVec v(len);
    if (len > 0) v.w_[0] = len >= 64 ? mask : (mask & ((std::uint64_t{1} << len) - 1));
    return v;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.len_ != len_) throw ValidationError("bit vector length mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
}

BitVec BitVec::operator^(const BitVec& o) const {
    BitVec r = *this;
    r ^= o;
    return r;
}

bool BitVec::dot(const BitVec& o) const {
    if (o.len_ != len_) throw ValidationError("bit vector length mismatch");
    int p = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) p ^= std::popcount(w_[k] & o.w_[k]) & 1;
    return p;
}

bool BitVec::any() const {
    for (auto x : w_)
        if (x) return true;
    return false;
}

int BitVec::popcount() const {
    int n = 0;
    for (auto x : w_) n += std::popcount(x);
    return n;
}

int BitVec::first_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
    return -1;
}

std::uint64_t BitVec::to_mask() const {
    if (len_ > 64) throw BoundExceeded("bit vector longer than 64");
    return w_.empty() ? 0 : w_[0];
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (int k = 0; k < len_; ++k)
        if (get(k)) s[k] = '1';
    return s;
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int k = 0; k < n; ++k) m.set(k, k);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    BitMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.nrows_; ++r) {
        if (static_cast<int>(rows[r].size()) != m.ncols_) throw ValidationError("ragged bit matrix");
        m.rows_[r] = BitVec::from_string(rows[r]);
    }
    return m;
}

BitVec BitMatrix::apply(const BitVec& x) const {
    if (x.size() != ncols_) throw ValidationError("matrix-vector dimension mismatch");
    BitVec y(nrows_);
    for (int r = 0; r < nrows_; ++r)
        if (rows_[r].dot(x)) y.set(r);
    return y;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(ncols_, nrows_);
    for (int r = 0; r < nrows_; ++r)
        for (int c = 0; c < ncols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

bool BitMatrix::is_symmetric() const { return nrows_ == ncols_ && *this == transpose(); }

BitVec BitMatrix::diagonal() const {
    int n = std::min(nrows_, ncols_);
    BitVec d(n);
    for (int k = 0; k < n; ++k)
        if (get(k, k)) d.set(k);
    return d;
}

bool BitMatrix::pair(const BitVec& x, const BitVec& y) const { return x.dot(apply(y)); }

int BitMatrix::rank() const {
    std::vector<BitVec> rs = rows_;
    int rank = 0;
    for (int c = 0; c < ncols_ && rank < nrows_; ++c) {
        int p = -1;
        for (int r = rank; r < nrows_; ++r)
            if (rs[r].get(c)) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(rs[p], rs[rank]);
        for (int r = 0; r < nrows_; ++r)
            if (r != rank && rs[r].get(c)) rs[r] ^= rs[rank];
        ++rank;
    }
    return rank;
}

AffineSolution gf2_solve_affine(const BitMatrix& A, const BitVec& b) {
    if (b.size() != A.nrows()) throw ValidationError("right-hand side length differs from row count");
    const int n = A.ncols();
    const int m = A.nrows();
    // augmented rows: [A | b]
    std::vector<BitVec> rs(m, BitVec(n + 1));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c)
            if (A.get(r, c)) rs[r].set(c);
        if (b.get(r)) rs[r].set(n);
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < n && rank < m; ++c) {
        int p = -1;
        for (int r = rank; r < m; ++r)
            if (rs[r].get(c)) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(rs[p], rs[rank]);
        for (int r = 0; r < m; ++r)
            if (r != rank && rs[r].get(c)) rs[r] ^= rs[rank];
        pivot_col.push_back(c);
        ++rank;
    }
    AffineSolution out;
    bool consistent = true;
    for (int r = rank; r < m; ++r)
        if (rs[r].get(n)) consistent = false;
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    if (consistent) {
        BitVec x(n);
        for (int r = 0; r < rank; ++r)
            if (rs[r].get(n)) x.set(pivot_col[r]);
        out.particular = x;
    }
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(n);
        v.set(f);
        for (int r = 0; r < rank; ++r)
            if (rs[r].get(f)) v.set(pivot_col[r]);
        out.kernel_basis.push_back(v);
    }
    return out;
}

std::vector<BitVec> gf2_kernel(const BitMatrix& A) {
    return gf2_solve_affine(A, BitVec(A.nrows())).kernel_basis;
}

}  // namespace tau4
