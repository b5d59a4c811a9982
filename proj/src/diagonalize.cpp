#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "numtheory.hpp"
#include "tau4/checked.hpp"
#include "tau4/error.hpp"
#include "tau4/intmatrix.hpp"

namespace tau4 {

namespace {

using Vec = std::vector<std::int64_t>;

// Lattice state during the splitting search.
struct Lattice {
    IntMatrix ambient;          // M + diag(stab so far)
    std::vector<std::int64_t> stab;
    std::vector<Vec> basis;     // current sublattice basis, ambient coordinates
    std::vector<Vec> split;     // already split-off vectors
    std::vector<std::int64_t> values;

    int dim() const { return ambient.rows(); }

    std::int64_t form(const Vec& x, const Vec& y) const {
        std::int64_t s = 0;
        for (int i = 0; i < dim(); ++i) {
            if (!x[i]) continue;
            std::int64_t row = 0;
            for (int j = 0; j < dim(); ++j)
                if (y[j]) row = chk::add(row, chk::mul(ambient(i, j), y[j]));
            s = chk::add(s, chk::mul(x[i], row));
        }
        return s;
    }

    IntMatrix gram() const {
        int k = static_cast<int>(basis.size());
        IntMatrix g(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) g(i, j) = g(j, i) = form(basis[i], basis[j]);
        return g;
    }

    Vec combine(const Vec& coeffs) const {
        Vec v(dim(), 0);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (!coeffs[b]) continue;
            for (int i = 0; i < dim(); ++i) v[i] = chk::add(v[i], chk::mul(coeffs[b], basis[b][i]));
        }
        return v;
    }

    void stabilize(std::int64_t s) {
        ambient = ambient.direct_sum({s});
        stab.push_back(s);
        for (auto& v : basis) v.push_back(0);
        for (auto& v : split) v.push_back(0);
        Vec e(dim(), 0);
        e.back() = 1;
        basis.push_back(e);
    }
};

bool primitive(const Vec& x) {
    std::int64_t g = 0;
    for (auto v : x) g = std::gcd(g, v);
    return g == 1;
}

struct Candidate {
    Vec coeffs;
    std::int64_t value;
};

// Basis of {w : r . w = 0} for an integer row r, by column Euclid steps.
std::vector<Vec> row_kernel(const Vec& r) {
    int k = static_cast<int>(r.size());
    Vec row = r;
    std::vector<Vec> U(k, Vec(k, 0));
    for (int j = 0; j < k; ++j) U[j][j] = 1;
    auto addcol = [&](int dst, int src, std::int64_t c) {
        row[dst] = chk::add(row[dst], chk::mul(c, row[src]));
        for (int i = 0; i < k; ++i) U[dst][i] = chk::add(U[dst][i], chk::mul(c, U[src][i]));
    };
    for (int j = 1; j < k; ++j) {
        while (row[j] != 0) {
            if (row[0] != 0 && std::llabs(row[0]) <= std::llabs(row[j]))
                addcol(j, 0, -(row[j] / row[0]));
            else if (row[0] == 0)
                addcol(0, j, 1);
            else
                addcol(0, j, -(row[0] / row[j]));
        }
    }
    return std::vector<Vec>(U.begin() + 1, U.end());
}

// x has Q(x) = d and d | Gx, so f(w) = B(x, w) / d is integral with f(x) = 1 and the
// lattice is Z x + ker f.
void split_off(Lattice& L, const Candidate& cand) {
    IntMatrix g = L.gram();
    int k = g.rows();
    Vec f(k, 0);
    for (int i = 0; i < k; ++i) {
        std::int64_t v = 0;
        for (int j = 0; j < k; ++j) v = chk::add(v, chk::mul(g(i, j), cand.coeffs[j]));
        f[i] = v / cand.value;
    }
    std::vector<Vec> rest;
    for (const Vec& w : row_kernel(f)) rest.push_back(L.combine(w));
    L.split.push_back(L.combine(cand.coeffs));
    L.values.push_back(cand.value);
    L.basis = rest;
}

// |det G| * G^-1 for nondegenerate G.
IntMatrix scaled_inverse(const IntMatrix& g) {
    int k = g.rows();
    std::int64_t det = determinant(g);
    IntMatrix h(k, k);
    if (k == 1) {
        h(0, 0) = det < 0 ? -1 : 1;
        return h;
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::vector<int> ri, cj;
            for (int t = 0; t < k; ++t) {
                if (t != j) ri.push_back(t);
                if (t != i) cj.push_back(t);
            }
            IntMatrix minor(k - 1, k - 1);
            for (int a = 0; a < k - 1; ++a)
                for (int b = 0; b < k - 1; ++b) minor(a, b) = g(ri[a], cj[b]);
            std::int64_t c = determinant(minor);
            if ((i + j) % 2) c = -c;
            h(i, j) = det < 0 ? -c : c;
        }
    return h;
}

void enumerate_box(int k, int R, const std::function<void(const Vec&)>& f) {
    Vec x(k, 0);
    std::int64_t total = 1;
    for (int i = 0; i < k; ++i) total *= 2 * R + 1;
    for (std::int64_t t = 0; t < total; ++t) {
        std::int64_t u = t;
        for (int i = 0; i < k; ++i) {
            x[i] = u % (2 * R + 1) - R;
            u /= 2 * R + 1;
        }
        int fst = 0;
        while (fst < k && x[fst] == 0) ++fst;
        if (fst == k || x[fst] < 0) continue;
        f(x);
    }
}

// Small vectors up to sign: a full box in low rank, sparse vectors otherwise.
void enumerate_small(int k, const std::function<void(const Vec&)>& f, bool wide = false) {
    static const int narrow_box[] = {0, 1, 12, 5};
    static const int wide_box[] = {0, 1, 40, 12, 6, 4, 3};
    if (wide && k <= 6) return enumerate_box(k, wide_box[k], f);
    if (k <= 3) return enumerate_box(k, narrow_box[k], f);
    Vec x(k, 0);
    for (int i = 0; i < k; ++i) {
        std::fill(x.begin(), x.end(), 0);
        x[i] = 1;
        f(x);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int a = 1; a <= 4; ++a)
                for (int b = -4; b <= 4; ++b) {
                    if (!b) continue;
                    std::fill(x.begin(), x.end(), 0);
                    x[i] = a;
                    x[j] = b;
                    f(x);
                }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l)
                for (int a = 1; a <= 2; ++a)
                    for (int b = -2; b <= 2; ++b)
                        for (int c = -2; c <= 2; ++c) {
                            if (!b || !c) continue;
                            std::fill(x.begin(), x.end(), 0);
                            x[i] = a;
                            x[j] = b;
                            x[l] = c;
                            f(x);
                        }
}

// Splitting vectors x: primitive, Q(x) = d != 0, d | Gx. Searched both as small x and as
// the primitive part of H z for small z, H the scaled inverse.
std::vector<Candidate> candidates(const IntMatrix& g, bool wide) {
    int k = g.rows();
    std::vector<Candidate> out;
    auto consider = [&](const Vec& x) {
        if (!primitive(x)) return;
        std::int64_t q;
        try {
            q = g.quadratic(x);
        } catch (const OverflowError&) {
            return;
        }
        if (q == 0) return;
        for (int i = 0; i < k; ++i) {
            __int128 r = 0;
            for (int j = 0; j < k; ++j) r += static_cast<__int128>(g(i, j)) * x[j];
            if (r % q != 0) return;
        }
        out.push_back({x, q});
    };
    enumerate_small(k, consider, wide);
    IntMatrix h;
    try {
        h = scaled_inverse(g);
    } catch (const OverflowError&) {
        h = IntMatrix();
    }
    if (h.rows() == k)
        enumerate_small(k, [&](const Vec& z) {
            Vec x(k, 0);
            std::int64_t gg = 0;
            try {
                for (int i = 0; i < k; ++i) {
                    for (int j = 0; j < k; ++j) x[i] = chk::add(x[i], chk::mul(h(i, j), z[j]));
                    gg = std::gcd(gg, x[i]);
                }
            } catch (const OverflowError&) {
                return;
            }
            if (gg == 0) return;
            for (auto& v : x) v /= gg;
            consider(x);
        });
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        return std::llabs(a.value) < std::llabs(b.value);
    });
    return out;
}

std::int64_t weight(const IntMatrix& g) {
    std::int64_t w = 0;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = i; j < g.cols(); ++j) w = chk::add(w, std::llabs(g(i, j)));
    return w;
}

// Greedy moves y_j += t y_i that lower the total absolute size of the Gram matrix.
void reduce_basis(Lattice& L) {
    IntMatrix g = L.gram();
    int k = g.rows();
    for (int pass = 0; pass < 64; ++pass) {
        bool improved = false;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                std::int64_t gii = g(i, i), gij = g(i, j);
                std::vector<std::int64_t> ts = {1, -1};
                if (gii != 0) {
                    std::int64_t t = -gij / gii;
                    if (t != 0 && t != 1 && t != -1) ts.push_back(t);
                }
                for (std::int64_t t : ts) {
                    IntMatrix h = g;
                    try {
                        for (int l = 0; l < k; ++l)
                            if (l != j) h(j, l) = h(l, j) = chk::add(g(j, l), chk::mul(t, g(i, l)));
                        h(j, j) = chk::add(chk::add(g(j, j), chk::mul(2 * t, gij)), chk::mul(chk::mul(t, t), gii));
                        if (weight(h) >= weight(g)) continue;
                        Vec y = L.basis[j];
                        for (int c = 0; c < L.dim(); ++c) y[c] = chk::add(y[c], chk::mul(t, L.basis[i][c]));
                        L.basis[j] = y;
                    } catch (const OverflowError&) {
                        continue;
                    }
                    g = h;
                    improved = true;
                    break;
                }
            }
        if (!improved) break;
    }
}


// Smith form by unimodular row and column operations; returns the diagonal and the
// accumulated column transform V (as columns) with U G V = diag(s).
std::vector<std::int64_t> smith(const IntMatrix& g, std::vector<Vec>& V) {
    int k = g.rows();
    std::vector<Vec> a(k, Vec(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = g(i, j);
    V.assign(k, Vec(k, 0));
    for (int j = 0; j < k; ++j) V[j][j] = 1;
    auto colop = [&](int dst, int src, std::int64_t c) {
        for (int i = 0; i < k; ++i) {
            a[i][dst] = chk::add(a[i][dst], chk::mul(c, a[i][src]));
            V[dst][i] = chk::add(V[dst][i], chk::mul(c, V[src][i]));
        }
    };
    auto rowop = [&](int dst, int src, std::int64_t c) {
        for (int j = 0; j < k; ++j) a[dst][j] = chk::add(a[dst][j], chk::mul(c, a[src][j]));
    };
    std::vector<std::int64_t> s(k, 0);
    for (int t = 0; t < k; ++t) {
        for (;;) {
            int bi = -1, bj = -1;
            for (int i = t; i < k; ++i)
                for (int j = t; j < k; ++j)
                    if (a[i][j] != 0 && (bi < 0 || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) return s;
            std::swap(a[bi], a[t]);
            if (bj != t) {
                for (int i = 0; i < k; ++i) std::swap(a[i][bj], a[i][t]);
                std::swap(V[bj], V[t]);
            }
            bool clean = true;
            for (int i = t + 1; i < k; ++i)
                if (a[i][t]) {
                    rowop(i, t, -(a[i][t] / a[t][t]));
                    clean = clean && a[i][t] == 0;
                }
            for (int j = t + 1; j < k; ++j)
                if (a[t][j]) {
                    colop(j, t, -(a[t][j] / a[t][t]));
                    clean = clean && a[t][j] == 0;
                }
            if (!clean) continue;
            int bad = -1;
            for (int i = t + 1; i < k && bad < 0; ++i)
                for (int j = t + 1; j < k; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            rowop(t, bad, 1);
        }
        s[t] = std::llabs(a[t][t]);
    }
    return s;
}

nt::i128 form128(const IntMatrix& g, const Vec& x, const Vec& y) {
    nt::i128 s = 0;
    int k = g.rows();
    for (int i = 0; i < k; ++i) {
        if (!x[i]) continue;
        nt::i128 row = 0;
        for (int j = 0; j < k; ++j) row += static_cast<nt::i128>(g(i, j)) * y[j];
        s += x[i] * row;
    }
    return s;
}

// Representatives t, u with t^2 - u^2 = m, m not 2 mod 4.
std::pair<std::int64_t, std::int64_t> difference_of_squares(std::int64_t m) {
    if (m % 2 != 0) return {(m + 1) / 2, (m - 1) / 2};
    return {m / 4 + 1, m / 4 - 1};
}

// Splits off a vector x = d1 * y with y in the dual lattice, Q(x) = +-d1, chosen from the
// discriminant form. Adjoins +-1 blocks when the exact norm needs adjusting.
bool discriminant_split(Lattice& L) {
    {
        IntMatrix g0 = L.gram();
        int sg = signature(g0);
        if (sg == g0.rows()) L.stabilize(-1);
        else if (sg == -g0.rows()) L.stabilize(1);
    }
    IntMatrix g = L.gram();
    const int k = g.rows();
    std::vector<Vec> V;
    std::vector<std::int64_t> s = smith(g, V);
    for (auto v : s)
        if (v == 0) return false;
    const std::int64_t d = s.back();
    if (d <= 1) return false;
    std::vector<int> gens;
    for (int i = 0; i < k; ++i)
        if (s[i] > 1) gens.push_back(i);
    // Y / d runs over elements of order d: the top generator plus small combinations.
    std::vector<Vec> trials;
    {
        Vec base(k);
        const int top = gens.back();
        std::vector<int> others(gens.begin(), gens.end() - 1);
        int no = static_cast<int>(others.size());
        int limit = std::min(no, 3);
        std::vector<int> coef(no, 0);
        std::function<void(int, int)> rec = [&](int pos, int used) {
            if (pos == no) {
                Vec y(k, 0);
                for (int i = 0; i < k; ++i) y[i] = V[top][i];
                for (int o = 0; o < no; ++o)
                    if (coef[o])
                        for (int i = 0; i < k; ++i)
                            y[i] = chk::add(y[i], chk::mul(coef[o] * (d / s[others[o]]), V[others[o]][i]));
                trials.push_back(y);
                return;
            }
            for (int c : {0, 1, -1}) {
                if (c && used >= limit) continue;
                coef[pos] = c;
                rec(pos + 1, used + (c != 0));
            }
            coef[pos] = 0;
        };
        rec(0, 0);
        if (trials.size() > 400) trials.resize(400);
    }
    for (Vec Y : trials) {
        std::int64_t gg = d;
        for (auto& v : Y) {
            v = nt::mod(v, d);
            gg = std::gcd(gg, v);
        }
        if (gg != 1) continue;
        nt::i128 n2 = form128(g, Y, Y);
        if (n2 % d != 0) continue;
        std::int64_t a = nt::mod(n2 / d, d);
        if (std::gcd(a, d) != 1) continue;
        auto plan = nt::cyclic_plan(a, d);
        if (!plan || plan->empty()) continue;
        const std::int64_t d1 = plan->front().order;
        const int eps = plan->front().sign;
        Vec Y1(k);
        for (int i = 0; i < k; ++i) Y1[i] = nt::mod(Y[i], d1);
        nt::i128 m1 = form128(g, Y1, Y1);
        if (m1 % d1 != 0) continue;
        std::int64_t a1 = nt::mod(m1 / d1, d1);
        const std::int64_t c0 = nt::sqrt_mod(nt::mod(static_cast<nt::i128>(eps) * nt::invmod(a1, d1), d1), d1);
        const nt::i128 dd = static_cast<nt::i128>(d1) * d1;
        Vec best;
        nt::i128 best_m = 0;
        auto abs128 = [](nt::i128 v) { return v < 0 ? -v : v; };
        for (std::int64_t unit : nt::roots_of_unity_sq(d1)) {
            std::int64_t c = nt::mod(static_cast<nt::i128>(c0) * unit, d1);
            Vec X(k);
            for (int i = 0; i < k; ++i) {
                std::int64_t v = nt::mod(static_cast<nt::i128>(c) * Y1[i], d1);
                X[i] = 2 * v > d1 ? v - d1 : v;
            }
            // X^T G X = eps d1 + m d1^2; coset shifts X + d1 l change m.
            nt::i128 ex = form128(g, X, X) - static_cast<nt::i128>(eps) * d1;
            if (ex % dd != 0) continue;
            if (best.empty() || abs128(ex / dd) < abs128(best_m)) {
                best = X;
                best_m = ex / dd;
            }
            if (best_m == 0) break;
            Vec GX(k, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) GX[i] = chk::add(GX[i], chk::mul(g(i, j), X[j]));
            Vec found;
            nt::i128 m0 = ex / dd;
            enumerate_small(
                k,
                [&](const Vec& l) {
                    if (!found.empty()) return;
                    nt::i128 lin = 0;
                    for (int i = 0; i < k; ++i) lin += static_cast<nt::i128>(GX[i]) * l[i];
                    lin = 2 * (lin / d1);
                    nt::i128 q = form128(g, l, l);
                    for (int sgn : {1, -1}) {
                        nt::i128 m2 = m0 + sgn * lin + q;
                        if (m2 == 0) {
                            found = X;
                            for (int i = 0; i < k; ++i) found[i] += sgn * d1 * l[i];
                            return;
                        }
                    }
                },
                true);
            if (!found.empty()) {
                best = found;
                best_m = 0;
                break;
            }
        }
        if (best.empty()) continue;
        if (best_m > (nt::i128{1} << 40) || best_m < -(nt::i128{1} << 40)) continue;
        std::int64_t m = static_cast<std::int64_t>(best_m);
        Vec coeffs = best;
        if (m != 0) {
            // need extra norm -m from +-1 blocks: t^2 - u^2 (+ 1 if -m is 2 mod 4)
            std::int64_t target = -m;
            bool extra = chk::mod(target, 4) == 2;
            if (extra) target -= 1;
            auto [t, u] = difference_of_squares(target);
            auto add_block = [&](std::int64_t sign, std::int64_t coef) {
                if (coef == 0) return;
                L.stabilize(sign);
                coeffs.push_back(chk::mul(coef, d1));
            };
            add_block(1, t);
            add_block(-1, u);
            if (extra) add_block(1, 1);
        }
        split_off(L, {coeffs, chk::mul(eps, d1)});
        return true;
    }
    return false;
}

// Jacobi eigen-decomposition of a small symmetric matrix.
void jacobi(std::vector<std::vector<double>>& a, std::vector<std::vector<double>>& q) {
    int n = static_cast<int>(a.size());
    q.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) q[i][i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-22) break;
        for (int p = 0; p < n; ++p)
            for (int r = p + 1; r < n; ++r) {
                if (std::fabs(a[p][r]) < 1e-300) continue;
                double theta = (a[r][r] - a[p][p]) / (2 * a[p][r]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), sn = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akr = a[k][r];
                    a[k][p] = c * akp - sn * akr;
                    a[k][r] = sn * akp + c * akr;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], ark = a[r][k];
                    a[p][k] = c * apk - sn * ark;
                    a[r][k] = sn * apk + c * ark;
                }
                for (int k = 0; k < n; ++k) {
                    double qkp = q[k][p], qkr = q[k][r];
                    q[k][p] = c * qkp - sn * qkr;
                    q[k][r] = sn * qkp + c * qkr;
                }
            }
    }
}

// LLL against the positive majorant |G| = Q |Lambda| Q^T. A heuristic size reduction for
// indefinite forms; the exact certificate check does not depend on it.
void majorant_lll(Lattice& L) {
    IntMatrix g = L.gram();
    int k = g.rows();
    if (k < 2) return;
    std::vector<std::vector<double>> a(k, std::vector<double>(k)), q;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = static_cast<double>(g(i, j));
    jacobi(a, q);
    std::vector<std::vector<double>> M(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int e = 0; e < k; ++e) M[i][j] += q[i][e] * std::fabs(a[e][e]) * q[j][e];
    // basis vectors b_i as integer combinations (columns of T) of the current basis
    std::vector<Vec> T(k, Vec(k, 0));
    for (int i = 0; i < k; ++i) T[i][i] = 1;
    auto ip = [&](const Vec& x, const Vec& y) {
        double s = 0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s += static_cast<double>(x[i]) * M[i][j] * static_cast<double>(y[j]);
        return s;
    };
    auto gso = [&](std::vector<std::vector<double>>& mu, std::vector<double>& B) {
        std::vector<std::vector<double>> bstar(k, std::vector<double>(k));
        mu.assign(k, std::vector<double>(k, 0.0));
        B.assign(k, 0.0);
        // Gram-Schmidt in the coordinates where M is the inner product
        std::vector<std::vector<double>> Mb(k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < i; ++j) {
                double num = ip(T[i], T[j]);
                for (int l = 0; l < j; ++l) num -= mu[j][l] * mu[i][l] * B[l];
                mu[i][j] = B[j] > 0 ? num / B[j] : 0;
            }
            double nb = ip(T[i], T[i]);
            for (int j = 0; j < i; ++j) nb -= mu[i][j] * mu[i][j] * B[j];
            B[i] = nb;
        }
    };
    std::vector<std::vector<double>> mu;
    std::vector<double> B;
    gso(mu, B);
    int kk = 1, guard = 0;
    while (kk < k && guard++ < 10000) {
        for (int j = kk - 1; j >= 0; --j) {
            double r = std::round(mu[kk][j]);
            if (r != 0) {
                if (std::fabs(r) > 1e12) return;
                auto ri = static_cast<std::int64_t>(r);
                for (int i = 0; i < k; ++i) T[kk][i] = chk::sub(T[kk][i], chk::mul(ri, T[j][i]));
                gso(mu, B);
            }
        }
        if (B[kk] >= (0.99 - mu[kk][kk - 1] * mu[kk][kk - 1]) * B[kk - 1]) {
            ++kk;
        } else {
            std::swap(T[kk], T[kk - 1]);
            gso(mu, B);
            kk = std::max(kk - 1, 1);
        }
    }
    std::vector<Vec> nb;
    for (int c = 0; c < k; ++c) nb.push_back(L.combine(T[c]));
    L.basis = nb;
}

struct Search {
    long budget = 2000;
    int max_stab = 3;
    int branch = 2;

    int extra_stab = 0;

    bool run(Lattice& L) {
        if (L.basis.empty()) return true;
        if (--budget < 0) return false;
        try {
            {
                Lattice trial = L;
                majorant_lll(trial);
                if (weight(trial.gram()) < weight(L.gram())) L = std::move(trial);
            }
            reduce_basis(L);
            return step(L);
        } catch (const OverflowError&) {
            return false;
        }
    }

    bool step(Lattice& L) {
        IntMatrix g = L.gram();
        std::int64_t det = determinant(g);
        std::vector<Candidate> cs = candidates(g, det == 1 || det == -1);
        if (!cs.empty() && std::llabs(cs.front().value) == 1) {
            split_off(L, cs.front());
            return run(L);
        }
        if (det != 1 && det != -1) {
            Lattice trial = L;
            bool split = false;
            try {
                split = discriminant_split(trial);
            } catch (const OverflowError&) {
                split = false;
            }
            if (split && run(trial)) {
                L = std::move(trial);
                return true;
            }
        }
        // Distinct values, smallest first.
        std::vector<Candidate> picks;
        for (const auto& c : cs) {
            bool seen = false;
            for (const auto& p : picks) seen = seen || p.value == c.value;
            if (!seen) picks.push_back(c);
            if (static_cast<int>(picks.size()) >= branch) break;
        }
        for (const auto& c : picks) {
            Lattice trial = L;
            split_off(trial, c);
            if (run(trial)) {
                L = std::move(trial);
                return true;
            }
        }
        if (extra_stab < max_stab) {
            for (std::int64_t s : {1, -1}) {
                Lattice trial = L;
                trial.stabilize(s);
                ++extra_stab;
                bool ok = run(trial);
                --extra_stab;
                if (ok) {
                    L = std::move(trial);
                    return true;
                }
            }
        }
        return false;
    }
};

// Column operations on G to expose an integer kernel basis. Returns U (columns), with
// the last `nullity` columns spanning ker G.
std::vector<Vec> kernel_split(const IntMatrix& g, int& nullity) {
    int k = g.rows();
    std::vector<Vec> cols(k, Vec(k, 0));  // columns of G U
    std::vector<Vec> U(k, Vec(k, 0));
    for (int j = 0; j < k; ++j) {
        U[j][j] = 1;
        for (int i = 0; i < k; ++i) cols[j][i] = g(i, j);
    }
    auto addcol = [&](int dst, int src, std::int64_t c) {
        for (int i = 0; i < k; ++i) {
            cols[dst][i] = chk::add(cols[dst][i], chk::mul(c, cols[src][i]));
            U[dst][i] = chk::add(U[dst][i], chk::mul(c, U[src][i]));
        }
    };
    int piv = 0;
    for (int r = 0; r < k && piv < k; ++r) {
        for (;;) {
            int best = -1;
            for (int j = piv; j < k; ++j)
                if (cols[j][r] != 0 && (best < 0 || std::llabs(cols[j][r]) < std::llabs(cols[best][r]))) best = j;
            if (best < 0) break;
            std::swap(cols[best], cols[piv]);
            std::swap(U[best], U[piv]);
            bool done = true;
            for (int j = piv + 1; j < k; ++j)
                if (cols[j][r] != 0) {
                    addcol(j, piv, -(cols[j][r] / cols[piv][r]));
                    if (cols[j][r] != 0) done = false;
                }
            if (done) {
                ++piv;
                break;
            }
        }
    }
    nullity = k - piv;
    return U;
}

}  // namespace

CongruenceCertificate stable_diagonalize(const SymIntMatrix& m) {
    if (!m.is_symmetric()) throw ValidationError("stable_diagonalize requires a symmetric matrix");
    int n = m.rows();
    CongruenceCertificate cert;
    if (m.is_diagonal()) {
        cert.P = IntMatrix::identity(n);
        cert.D = m;
        return cert;
    }
    Lattice L;
    L.ambient = m;
    for (int i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        L.basis.push_back(e);
    }
    int nullity = 0;
    std::vector<Vec> U;
    try {
        U = kernel_split(m, nullity);
    } catch (const OverflowError&) {
        throw NotStablyDiagonalizable("radical extraction exceeded 64-bit range");
    }
    std::vector<Vec> nondeg;
    if (nullity == 0) U = L.basis;
    for (int j = 0; j < n; ++j) {
        if (j >= n - nullity) {
            L.split.push_back(U[j]);
            L.values.push_back(0);
        } else {
            nondeg.push_back(U[j]);
        }
    }
    L.basis = nondeg;
    Search s;
    bool found = false;
    try {
        found = s.run(L);
    } catch (const OverflowError&) {
        found = false;
    }
    if (!found)
        throw NotStablyDiagonalizable("no stable diagonalization found within the search budget "
                                      "(the discriminant form may not split into cyclic forms of the shape 1/d)");
    int N = L.dim();
    cert.stab = L.stab;
    cert.P = IntMatrix(N, N);
    for (int j = 0; j < N; ++j)
        for (int i = 0; i < N; ++i) cert.P(i, j) = L.split[j][i];
    cert.D = IntMatrix::diagonal(L.values);
    return cert;
}

bool verify_certificate(const SymIntMatrix& m, const CongruenceCertificate& cert) {
    IntMatrix ext = m.direct_sum(cert.stab);
    int N = ext.rows();
    if (cert.P.rows() != N || cert.P.cols() != N || cert.D.rows() != N || cert.D.cols() != N) return false;
    if (!cert.D.is_diagonal()) return false;
    std::int64_t d = 0;
    try {
        d = determinant(cert.P);
    } catch (const OverflowError&) {
        return false;
    }
    if (d != 1 && d != -1) return false;
    std::vector<std::vector<__int128>> ep(N, std::vector<__int128>(N, 0));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) ep[i][j] += static_cast<__int128>(ext(i, k)) * cert.P(k, j);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            __int128 s = 0;
            for (int k = 0; k < N; ++k) s += cert.P(k, i) * ep[k][j];
            if (s != cert.D(i, j)) return false;
        }
    return true;
}

}  // namespace tau4
