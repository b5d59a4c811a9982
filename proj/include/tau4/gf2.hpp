#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tau4 {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int len) : len_(len), w_((len + 63) / 64, 0) {}
    // "1011" with character k giving bit k.
    static BitVec from_string(const std::string& s);
    static BitVec from_mask(std::uint64_t mask, int len);

    int size() const { return len_; }
    bool get(int k) const { return (w_[k >> 6] >> (k & 63)) & 1u; }
    void set(int k, bool v = true) {
        if (v)
            w_[k >> 6] |= std::uint64_t{1} << (k & 63);
        else
            w_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
    }
    void flip(int k) { w_[k >> 6] ^= std::uint64_t{1} << (k & 63); }

    BitVec& operator^=(const BitVec& o);
    BitVec operator^(const BitVec& o) const;
    bool operator==(const BitVec& o) const = default;

    bool dot(const BitVec& o) const;
    bool any() const;
    int popcount() const;
    int first_set() const;  // -1 if zero
    std::uint64_t to_mask() const;  // requires size() <= 64
    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    int len_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int nrows, int ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows, BitVec(ncols)) {}
    static BitMatrix identity(int n);
    static BitMatrix from_rows(const std::vector<std::string>& rows);

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }
    bool get(int r, int c) const { return rows_[r].get(c); }
    void set(int r, int c, bool v = true) { rows_[r].set(c, v); }
    const BitVec& row(int r) const { return rows_[r]; }
    BitVec& row(int r) { return rows_[r]; }

    BitVec apply(const BitVec& x) const;
    BitMatrix transpose() const;
    bool is_symmetric() const;
    BitVec diagonal() const;
    // x^T M y
    bool pair(const BitVec& x, const BitVec& y) const;
    int rank() const;
    bool operator==(const BitMatrix& o) const = default;

private:
    int nrows_ = 0;
    int ncols_ = 0;
    std::vector<BitVec> rows_;
};

struct AffineSolution {
    std::optional<BitVec> particular;
    std::vector<BitVec> kernel_basis;
};

// All x with A x = b. Free variables of the particular solution are set to 0.
AffineSolution gf2_solve_affine(const BitMatrix& A, const BitVec& b);
std::vector<BitVec> gf2_kernel(const BitMatrix& A);

}  // namespace tau4
