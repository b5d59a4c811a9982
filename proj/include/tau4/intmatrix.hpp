#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tau4 {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static IntMatrix identity(int n);
    static IntMatrix diagonal(const std::vector<std::int64_t>& d);

    int rows() const { return r_; }
    int cols() const { return c_; }
    std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const = default;

    bool is_square() const { return r_ == c_; }
    bool is_symmetric() const;
    bool is_diagonal() const;
    std::vector<std::int64_t> diag() const;
    IntMatrix principal(const std::vector<int>& idx) const;
    // Block sum with diag(extra).
    IntMatrix direct_sum(const std::vector<std::int64_t>& extra) const;
    // x^T M x
    std::int64_t quadratic(const std::vector<std::int64_t>& x) const;

private:
    int r_ = 0;
    int c_ = 0;
    std::vector<std::int64_t> a_;
};

// Symmetric integer matrices share the representation; operations check symmetry.
using SymIntMatrix = IntMatrix;

std::int64_t determinant(const IntMatrix& m);
int signature(const SymIntMatrix& m);

struct CongruenceCertificate {
    IntMatrix P;
    std::vector<std::int64_t> stab;
    IntMatrix D;
};

// Finds P, stab, D with P^T (M + diag(stab)) P = D diagonal and det P = +-1.
// Throws NotStablyDiagonalizable when the bounded search finds no certificate.
CongruenceCertificate stable_diagonalize(const SymIntMatrix& m);
bool verify_certificate(const SymIntMatrix& m, const CongruenceCertificate& cert);

}  // namespace tau4
