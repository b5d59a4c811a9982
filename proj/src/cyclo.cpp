#include "tau4/cyclo.hpp"

#include <sstream>

#include "tau4/checked.hpp"
#include "tau4/error.hpp"

namespace tau4 {

CycloInt CycloInt::omega_pow(std::int64_t k) {
    std::int64_t r = chk::mod(k, 16);
    CycloInt out;
    if (r < 8)
        out.c[r] = 1;
    else
        out.c[r - 8] = -1;
    return out;
}

CycloInt CycloInt::sqrt2() {
    CycloInt s;
    s.c[2] = 1;
    s.c[6] = -1;
    return s;
}

CycloInt CycloInt::operator+(const CycloInt& o) const {
    CycloInt r;
    for (int k = 0; k < 8; ++k) r.c[k] = chk::add(c[k], o.c[k]);
    return r;
}

CycloInt CycloInt::operator-(const CycloInt& o) const {
    CycloInt r;
    for (int k = 0; k < 8; ++k) r.c[k] = chk::sub(c[k], o.c[k]);
    return r;
}

CycloInt CycloInt::operator-() const { return CycloInt{} - *this; }

CycloInt CycloInt::operator*(const CycloInt& o) const {
    CycloInt r;
    for (int a = 0; a < 8; ++a) {
        if (c[a] == 0) continue;
        for (int b = 0; b < 8; ++b) {
            if (o.c[b] == 0) continue;
            std::int64_t t = chk::mul(c[a], o.c[b]);
            int d = a + b;
            if (d < 8)
                r.c[d] = chk::add(r.c[d], t);
            else
                r.c[d - 8] = chk::sub(r.c[d - 8], t);
        }
    }
    return r;
}

CycloInt& CycloInt::operator+=(const CycloInt& o) { return *this = *this + o; }
CycloInt& CycloInt::operator-=(const CycloInt& o) { return *this = *this - o; }
CycloInt& CycloInt::operator*=(const CycloInt& o) { return *this = *this * o; }

bool CycloInt::is_zero() const {
    for (auto v : c)
        if (v) return false;
    return true;
}

std::optional<std::int64_t> CycloInt::as_integer() const {
    for (int k = 1; k < 8; ++k)
        if (c[k]) return std::nullopt;
    return c[0];
}

CycloInt CycloInt::conjugate(int k) const {
    CycloInt r;
    for (int a = 0; a < 8; ++a)
        if (c[a]) r += CycloInt(c[a]) * omega_pow(static_cast<std::int64_t>(a) * k);
    return r;
}

std::int64_t CycloInt::norm() const {
    CycloInt p = *this;
    for (int k = 3; k < 16; k += 2) p *= conjugate(k);
    auto n = p.as_integer();
    if (!n) throw Error("norm is not rational");
    return *n;
}

std::string CycloInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 8; ++k) {
        std::int64_t v = c[k];
        if (!v) continue;
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        std::int64_t a = v < 0 ? -v : v;
        if (k == 0)
            os << a;
        else {
            if (a != 1) os << a << "*";
            os << "w";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycloInt cyclo_mul(const CycloInt& a, const CycloInt& b) { return a * b; }

CycloInt cyclo_pow(const CycloInt& a, std::int64_t k) {
    CycloInt base = a;
    if (k < 0) {
        std::int64_t n = a.norm();
        if (n != 1 && n != -1) throw DomainError("negative power of a non-unit cyclotomic integer");
        CycloInt inv(n);
        for (int j = 3; j < 16; j += 2) inv *= a.conjugate(j);
        base = inv;
        k = -k;
    }
    CycloInt r(1);
    while (k) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

}  // namespace tau4
