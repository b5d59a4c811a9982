#include "tau4/enhanced.hpp"

#include <bit>

#include "tau4/error.hpp"
#include "tau4/limits.hpp"

namespace tau4 {

namespace {

void check_bound(const EnhancedSpace& s) {
    if (s.dim() > limits::enhanced_dim())
        throw BoundExceeded("enhanced space dimension " + std::to_string(s.dim()) + " exceeds enumeration bound " +
                            std::to_string(limits::enhanced_dim()));
}

// Row masks of the form and the basis values, as packed integers.
struct Packed {
    int m = 0;
    std::vector<std::uint64_t> row;
    std::vector<int> v;

    explicit Packed(const EnhancedSpace& s) : m(s.dim()), row(m), v(s.values) {
        for (int i = 0; i < m; ++i) row[i] = s.form.row(i).to_mask();
    }

    int eval(std::uint64_t x) const {
        int e = 0;
        std::uint64_t seen = 0;
        for (std::uint64_t y = x; y; y &= y - 1) {
            int i = std::countr_zero(y);
            e += v[i] + 2 * (std::popcount(row[i] & seen) & 1);
            seen |= std::uint64_t{1} << i;
        }
        return e & 3;
    }
};

// Walks the 2^low vectors x = hi | g with g in Gray-code order.
void count_block(const Packed& p, std::uint64_t hi, int low, std::array<std::uint64_t, 4>& out) {
    std::uint64_t x = hi;
    int e = p.eval(x);
    ++out[e];
    std::uint64_t n = std::uint64_t{1} << low;
    for (std::uint64_t k = 1; k < n; ++k) {
        int i = std::countr_zero(k);
        // e(x + b_i) = e(x) + v_i + 2 (x . b_i)
        e = (e + p.v[i] + 2 * (std::popcount(p.row[i] & x) & 1)) & 3;
        x ^= std::uint64_t{1} << i;
        ++out[e];
    }
}

}  // namespace

void EnhancedSpace::validate() const {
    if (form.nrows() != form.ncols()) throw ValidationError("enhanced space form must be square");
    if (!form.is_symmetric()) throw ValidationError("enhanced space form must be symmetric");
    if (static_cast<int>(values.size()) != dim())
        throw ValidationError("enhanced space needs one value per basis vector");
    for (int i = 0; i < dim(); ++i) {
        if (values[i] < 0 || values[i] > 3) throw ValidationError("enhancement values must lie in {0,1,2,3}");
        if ((values[i] & 1) != static_cast<int>(form.get(i, i)))
            throw ValidationError("basis vector " + std::to_string(i) + " violates e(x) = x.x (mod 2)");
    }
}

EnhancedSpace EnhancedSpace::make(const BitMatrix& form, const std::vector<int>& values) {
    EnhancedSpace s{form, values};
    s.validate();
    return s;
}

BrownValue operator+(const BrownValue& a, const BrownValue& b) {
    if (a.is_infinite() || b.is_infinite()) return BrownValue::infinity();
    return BrownValue::of(*a.value + *b.value);
}

EnhancedSpace space_T(int v0, int v1) { return EnhancedSpace::make(BitMatrix::from_rows({"01", "10"}), {v0, v1}); }
EnhancedSpace space_P(int v) { return EnhancedSpace::make(BitMatrix::from_rows({"1"}), {v}); }
EnhancedSpace space_A(int v) { return EnhancedSpace::make(BitMatrix::from_rows({"0"}), {v}); }

int evaluate(const EnhancedSpace& s, const BitVec& x) {
    if (x.size() != s.dim()) throw ValidationError("vector length does not match the space dimension");
    int e = 0;
    for (int i = 0; i < s.dim(); ++i) {
        if (!x.get(i)) continue;
        e += s.values[i];
        for (int j = 0; j < i; ++j)
            if (x.get(j) && s.form.get(i, j)) e += 2;
    }
    return e & 3;
}

std::vector<BitVec> radical(const EnhancedSpace& s) { return gf2_kernel(s.form); }

bool is_proper(const EnhancedSpace& s) {
    for (const auto& r : radical(s))
        if (evaluate(s, r) != 0) return false;
    return true;
}

bool is_even(const EnhancedSpace& s) { return !s.form.diagonal().any(); }

std::array<std::uint64_t, 4> value_counts_serial(const EnhancedSpace& s) {
    check_bound(s);
    Packed p(s);
    std::array<std::uint64_t, 4> out{};
    count_block(p, 0, p.m, out);
    return out;
}

std::array<std::uint64_t, 4> value_counts(const EnhancedSpace& s) {
    check_bound(s);
    Packed p(s);
    int high = p.m > 16 ? 6 : 0;
    int low = p.m - high;
    std::int64_t blocks = std::int64_t{1} << high;
    std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
#pragma omp parallel for reduction(+ : c0, c1, c2, c3) schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b) {
        std::array<std::uint64_t, 4> local{};
        count_block(p, static_cast<std::uint64_t>(b) << low, low, local);
        c0 += local[0];
        c1 += local[1];
        c2 += local[2];
        c3 += local[3];
    }
    return {c0, c1, c2, c3};
}

CycloInt gauss_sum(const EnhancedSpace& s) {
    auto e = value_counts(s);
    auto d02 = static_cast<std::int64_t>(e[0]) - static_cast<std::int64_t>(e[2]);
    auto d13 = static_cast<std::int64_t>(e[1]) - static_cast<std::int64_t>(e[3]);
    return CycloInt(d02) + CycloInt(d13) * CycloInt::i();
}

BrownValue brown_from_counts(const std::array<std::uint64_t, 4>& e) {
    int s02 = (e[0] > e[2]) - (e[0] < e[2]);
    int s13 = (e[1] > e[3]) - (e[1] < e[3]);
    // Indexed by (s02 + 1, s13 + 1).
    static constexpr int table[3][3] = {{5, 4, 3}, {6, -1, 2}, {7, 0, 1}};
    int v = table[s02 + 1][s13 + 1];
    return v < 0 ? BrownValue::infinity() : BrownValue::of(v);
}

BrownValue brown(const EnhancedSpace& s) { return brown_from_counts(value_counts(s)); }

EnhancedSpace direct_sum(const EnhancedSpace& a, const EnhancedSpace& b) {
    int m = a.dim() + b.dim();
    EnhancedSpace s{BitMatrix(m, m), a.values};
    s.values.insert(s.values.end(), b.values.begin(), b.values.end());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s.form.set(i, j, a.form.get(i, j));
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) s.form.set(a.dim() + i, a.dim() + j, b.form.get(i, j));
    return s;
}

ClassTuple class_tuple(const EnhancedSpace& s) {
    ClassTuple t;
    t.dim = s.dim();
    t.radical_dim = s.dim() - s.form.rank();
    t.even = is_even(s);
    t.brown = brown(s);
    t.proper = !t.brown.is_infinite();
    return t;
}

NormalForm normal_form(const EnhancedSpace& s) {
    ClassTuple t = class_tuple(s);
    int r = t.dim - t.radical_dim;
    NormalForm nf;
    if (!t.proper) {
        nf.ainf = 1;
        nf.a0 = t.radical_dim - 1;
        if (t.even)
            nf.t0 = r / 2;
        else
            nf.p1 = r;
        return nf;
    }
    nf.a0 = t.radical_dim;
    int beta = *t.brown.value;
    if (t.even) {
        nf.t4 = beta == 4 ? 1 : 0;
        nf.t0 = r / 2 - nf.t4;
    } else {
        nf.pm1 = (((r - beta) / 2) % 4 + 4) % 4;
        nf.p1 = r - nf.pm1;
    }
    return nf;
}

EnhancedSpace realize(const NormalForm& nf) {
    EnhancedSpace s;
    auto add = [&](int count, const EnhancedSpace& piece) {
        for (int k = 0; k < count; ++k) s = direct_sum(s, piece);
    };
    add(nf.t0, space_T(0, 0));
    add(nf.t4, space_T(2, 2));
    add(nf.p1, space_P(1));
    add(nf.pm1, space_P(3));
    add(nf.a0, space_A(0));
    add(nf.ainf, space_A(2));
    return s;
}

}  // namespace tau4
