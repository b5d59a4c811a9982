#pragma once

// Modular arithmetic helpers for discriminant-form computations.

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace tau4::nt {

using i128 = __int128;

inline std::int64_t mod(i128 a, std::int64_t m) {
    i128 r = a % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
    i128 r = 1 % m, x = mod(b, m);
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::int64_t>(r);
}

// Inverse of a unit a modulo m.
inline std::int64_t invmod(std::int64_t a, std::int64_t m) {
    i128 g0 = mod(a, m), g1 = m, s0 = 1, s1 = 0;
    while (g1 != 0) {
        i128 q = g0 / g1;
        i128 t = g0 - q * g1;
        g0 = g1;
        g1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    return mod(s0, m);
}

// Prime factorization as (p, e) pairs, increasing p.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> f;
    if (n < 0) n = -n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.push_back({p, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

inline std::int64_t ipow(std::int64_t p, int e) {
    std::int64_t r = 1;
    while (e--) r *= p;
    return r;
}

// Whether the unit u is a square modulo p^e.
inline bool is_square_pp(std::int64_t u, std::int64_t p, int e) {
    if (p == 2) {
        std::int64_t m = ipow(2, e);
        u = mod(u, m);
        if (e == 1) return true;
        if (e == 2) return u % 4 == 1;
        return u % 8 == 1;
    }
    return powmod(u, (p - 1) / 2, p) == 1;
}

inline bool is_square_unit(std::int64_t u, std::int64_t n) {
    for (auto [p, e] : factorize(n))
        if (!is_square_pp(u, p, e)) return false;
    return true;
}

inline std::int64_t sqrt_mod_prime(std::int64_t u, std::int64_t p) {
    u = mod(u, p);
    if (p == 2) return u;
    if (p % 4 == 3) return powmod(u, (p + 1) / 4, p);
    std::int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::int64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::int64_t m = s, c = powmod(z, q, p), t = powmod(u, q, p), r = powmod(u, (q + 1) / 2, p);
    while (t != 1) {
        std::int64_t i = 0, tt = t;
        while (tt != 1) {
            tt = static_cast<std::int64_t>(static_cast<i128>(tt) * tt % p);
            ++i;
        }
        std::int64_t b = c;
        for (std::int64_t j = 0; j < m - i - 1; ++j) b = static_cast<std::int64_t>(static_cast<i128>(b) * b % p);
        m = i;
        c = static_cast<std::int64_t>(static_cast<i128>(b) * b % p);
        t = static_cast<std::int64_t>(static_cast<i128>(t) * c % p);
        r = static_cast<std::int64_t>(static_cast<i128>(r) * b % p);
    }
    return r;
}

// Square root of a square unit u modulo p^e.
inline std::int64_t sqrt_mod_pp(std::int64_t u, std::int64_t p, int e) {
    std::int64_t pe = ipow(p, e);
    u = mod(u, pe);
    if (p == 2) {
        if (e <= 2) return 1;
        std::int64_t r = 1;
        for (int j = 3; j < e; ++j) {
            std::int64_t m = ipow(2, j + 1);
            if (mod(static_cast<i128>(r) * r - u, m) != 0) r += ipow(2, j - 1);
        }
        return mod(r, pe);
    }
    std::int64_t r = sqrt_mod_prime(u, p), pk = p;
    for (int j = 1; j < e; ++j) {
        pk *= p;
        i128 f = mod(static_cast<i128>(r) * r - u, pk);
        r = mod(r - f * invmod(mod(2 * static_cast<i128>(r), pk), pk), pk);
    }
    return r;
}

inline std::int64_t sqrt_mod(std::int64_t u, std::int64_t n) {
    std::int64_t r = 0, m = 1;
    for (auto [p, e] : factorize(n)) {
        std::int64_t pe = ipow(p, e);
        std::int64_t s = sqrt_mod_pp(u, p, e);
        // CRT: r mod m, s mod pe
        std::int64_t t = mod(static_cast<i128>(s - r) * invmod(mod(m, pe), pe), pe);
        r = static_cast<std::int64_t>(r + static_cast<i128>(m) * t);
        m *= pe;
        r = mod(r, m);
    }
    return r;
}

// All u with u^2 = 1 modulo n.
inline std::vector<std::int64_t> roots_of_unity_sq(std::int64_t n) {
    std::vector<std::int64_t> acc = {0};
    std::int64_t m = 1;
    for (auto [p, e] : factorize(n)) {
        std::int64_t pe = ipow(p, e);
        std::vector<std::int64_t> local;
        for (std::int64_t u : {std::int64_t{1}, pe - 1, pe / 2 - 1, pe / 2 + 1})
            if (u > 0 && u < pe + 1 && mod(static_cast<i128>(u) * u - 1, pe) == 0) {
                std::int64_t r = mod(u, pe);
                bool seen = false;
                for (auto v : local) seen = seen || v == r;
                if (!seen) local.push_back(r);
            }
        std::vector<std::int64_t> next;
        for (auto r : acc)
            for (auto s : local) {
                std::int64_t t = mod(static_cast<i128>(s - r) * invmod(mod(m, pe), pe), pe);
                next.push_back(mod(r + static_cast<i128>(m) * t, m * pe));
            }
        acc = next;
        m *= pe;
    }
    if (n == 1) return {0};
    return acc;
}

struct CyclicPiece {
    std::int64_t order;
    int sign;
};

// Splits the cyclic form <a/d> (a a unit mod d) as an orthogonal sum of forms <sign/order>
// of pairwise coprime orders, if possible.
inline std::optional<std::vector<CyclicPiece>> cyclic_plan(std::int64_t a, std::int64_t d) {
    auto f = factorize(d);
    std::vector<std::int64_t> pp;
    for (auto [p, e] : f) pp.push_back(ipow(p, e));
    int k = static_cast<int>(pp.size());
    std::vector<int> group(k, 0);
    // restricted growth strings enumerate set partitions
    std::function<std::optional<std::vector<CyclicPiece>>(int, int)> rec;
    rec = [&](int i, int ngroups) -> std::optional<std::vector<CyclicPiece>> {
        if (i == k) {
            std::vector<std::int64_t> orders(ngroups, 1);
            for (int j = 0; j < k; ++j) orders[group[j]] *= pp[j];
            for (int mask = 0; mask < (1 << ngroups); ++mask) {
                i128 A = 0;
                for (int g = 0; g < ngroups; ++g) A += ((mask >> g) & 1 ? -1 : 1) * static_cast<i128>(d / orders[g]);
                std::int64_t Am = mod(A, d);
                if (std::gcd(Am, d) != 1) continue;
                std::int64_t u = mod(static_cast<i128>(a) * invmod(Am, d), d);
                if (!is_square_unit(u, d)) continue;
                std::vector<CyclicPiece> out;
                for (int g = 0; g < ngroups; ++g) out.push_back({orders[g], (mask >> g) & 1 ? -1 : 1});
                return out;
            }
            return std::nullopt;
        }
        for (int g = 0; g <= ngroups; ++g) {
            group[i] = g;
            if (auto r = rec(i + 1, std::max(ngroups, g + 1))) return r;
        }
        return std::nullopt;
    };
    if (d == 1) return std::vector<CyclicPiece>{};
    return rec(0, 0);
}

}  // namespace tau4::nt
