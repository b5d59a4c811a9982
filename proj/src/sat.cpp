#include "tau4/sat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "tau4/checked.hpp"
#include "tau4/error.hpp"
#include "tau4/limits.hpp"

namespace tau4 {

void GF2Poly::toggle(Monomial m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (!monomials.erase(m)) monomials.insert(std::move(m));
}

int GF2Poly::degree() const {
    int d = -1;
    for (const auto& m : monomials) d = std::max(d, static_cast<int>(m.size()));
    return d;
}

bool GF2Poly::eval(std::uint64_t x) const {
    bool v = false;
    for (const auto& m : monomials) {
        bool t = true;
        for (int i : m) t = t && ((x >> i) & 1u);
        v ^= t;
    }
    return v;
}

GF2Poly GF2Poly::operator*(const GF2Poly& o) const {
    GF2Poly r{std::max(nvars, o.nvars), {}};
    for (const auto& a : monomials)
        for (const auto& b : o.monomials) {
            Monomial m = a;
            m.insert(m.end(), b.begin(), b.end());
            r.toggle(std::move(m));
        }
    return r;
}

GF2Poly GF2Poly::operator+(const GF2Poly& o) const {
    GF2Poly r = *this;
    r.nvars = std::max(nvars, o.nvars);
    for (const auto& m : o.monomials) r.toggle(m);
    return r;
}

bool CubicForm::eval(std::uint64_t x) const {
    auto bit = [&](int i) { return static_cast<unsigned>((x >> i) & 1u); };
    unsigned v = 0;
    for (int i : linear) v ^= bit(i);
    for (const auto& q : quadratic) v ^= bit(q[0]) & bit(q[1]);
    for (const auto& c : cubic) v ^= bit(c[0]) & bit(c[1]) & bit(c[2]);
    return v;
}

GF2Poly CubicForm::to_poly() const {
    GF2Poly p{n, {}};
    for (int i : linear) p.toggle({i});
    for (const auto& q : quadratic) p.toggle({q[0], q[1]});
    for (const auto& c : cubic) p.toggle({c[0], c[1], c[2]});
    return p;
}

CubicForm CubicForm::from_poly(const GF2Poly& p) {
    CubicForm c;
    c.n = p.nvars;
    for (const auto& m : p.monomials) {
        switch (m.size()) {
            case 1: c.linear.insert(m[0]); break;
            case 2: c.quadratic.insert({m[0], m[1]}); break;
            case 3: c.cubic.insert({m[0], m[1], m[2]}); break;
            case 0: throw DomainError("cubic form cannot carry a constant term");
            default: throw DomainError("polynomial degree exceeds 3");
        }
    }
    return c;
}

CNF3 parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    int declared = 0;
    CNF3 e;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == 'c' || tok[0] == '%') continue;
        std::string where = "line " + std::to_string(lineno) + ": ";
        if (tok == "p") {
            std::string fmt;
            if (header) throw ValidationError(where + "duplicate header");
            if (!(ls >> fmt >> e.nvars >> declared) || fmt != "cnf" || e.nvars < 0 || declared < 0)
                throw ValidationError(where + "malformed header, expected 'p cnf <vars> <clauses>'");
            header = true;
            continue;
        }
        if (!header) throw ValidationError(where + "clause before the 'p cnf' header");
        do {
            std::size_t used = 0;
            int lit = 0;
            try {
                lit = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw ValidationError(where + "bad literal '" + tok + "'");
            if (lit == 0) {
                if (pending.size() != 3)
                    throw ValidationError(where + "clause of width " + std::to_string(pending.size()) +
                                          ", expected width 3");
                e.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                continue;
            }
            if (std::abs(lit) > e.nvars) throw ValidationError(where + "literal " + tok + " exceeds variable count");
            pending.push_back(lit);
        } while (ls >> tok);
    }
    if (!header) throw ValidationError("missing 'p cnf' header");
    if (!pending.empty()) throw ValidationError("last clause is not terminated by 0");
    if (static_cast<int>(e.clauses.size()) != declared)
        throw ValidationError("header declares " + std::to_string(declared) + " clauses, found " +
                              std::to_string(e.clauses.size()));
    return e;
}

std::vector<GF2Poly> cnf_to_cubic_system(const CNF3& e) {
    std::vector<GF2Poly> out;
    for (const auto& cl : e.clauses) {
        GF2Poly p{e.nvars, {Monomial{}}};
        for (int lit : cl) {
            int v = std::abs(lit) - 1;
            // T = 0, F = 1: the literal is false exactly when this factor is 1.
            GF2Poly f{e.nvars, {}};
            f.toggle({v});
            if (lit < 0) f.toggle({});
            p = p * f;
        }
        out.push_back(p);
    }
    return out;
}

QuadSystem to_quad_system(const std::vector<GF2Poly>& cubics, int nvars) {
    QuadSystem q;
    q.m = nvars;
    std::map<std::array<int, 2>, int> product_of;
    for (const auto& p : cubics) {
        if (p.degree() > 3) throw DomainError("input polynomial has degree above 3");
        std::vector<Monomial> cub;
        for (const auto& m : p.monomials)
            if (m.size() == 3) cub.push_back(m);
        if (cub.empty()) {
            q.polys.push_back(GF2Poly{});
            q.polys.push_back(p);
            continue;
        }
        std::array<int, 2> pair{-1, -1};
        for (int a = 0; a < 3 && pair[0] < 0; ++a)
            for (int b = a + 1; b < 3 && pair[0] < 0; ++b) {
                std::array<int, 2> cand{cub[0][a], cub[0][b]};
                bool all = std::all_of(cub.begin(), cub.end(), [&](const Monomial& m) {
                    return std::binary_search(m.begin(), m.end(), cand[0]) &&
                           std::binary_search(m.begin(), m.end(), cand[1]);
                });
                if (all) pair = cand;
            }
        if (pair[0] < 0) throw DomainError("cubic monomials share no common pair of variables");
        auto [it, fresh] = product_of.emplace(pair, q.m);
        if (fresh) q.products.push_back({pair[0], pair[1], q.m++});
        int y = it->second;
        GF2Poly def;
        def.toggle({y});
        def.toggle({pair[0], pair[1]});
        GF2Poly sub;
        for (const auto& m : p.monomials) {
            if (m.size() == 3) {
                Monomial r{y};
                for (int v : m)
                    if (v != pair[0] && v != pair[1]) r.push_back(v);
                sub.toggle(r);
            } else {
                sub.toggle(m);
            }
        }
        q.polys.push_back(def);
        q.polys.push_back(sub);
    }
    for (auto& p : q.polys) p.nvars = q.m;
    return q;
}

CubicForm to_single_cubic(const QuadSystem& q) {
    int k = static_cast<int>(q.polys.size());
    GF2Poly c{q.m + k, {}};
    for (int i = 0; i < k; ++i) {
        if (q.polys[i].degree() > 2) throw DomainError("quadratic system contains a cubic polynomial");
        for (const auto& m : q.polys[i].monomials) {
            Monomial r = m;
            r.push_back(q.m + i);
            c.toggle(r);
        }
    }
    return CubicForm::from_poly(c);
}

namespace {

void check_vars(int n) {
    int cap = std::min(limits::count_vars(), 32);
    if (n > cap)
        throw BoundExceeded("counting over " + std::to_string(n) + " variables exceeds the bound " + std::to_string(cap));
}

std::uint64_t mono_mask(const Monomial& m) {
    std::uint64_t x = 0;
    for (int i : m) x |= std::uint64_t{1} << i;
    return x;
}

// Truth table from monomial masks by the GF(2) Moebius transform.
std::vector<std::uint64_t> truth_table(const std::vector<std::uint64_t>& monos, int n) {
    std::size_t words = n >= 6 ? std::size_t{1} << (n - 6) : 1;
    std::vector<std::uint64_t> t(words, 0);
    for (auto m : monos) t[m >> 6] ^= std::uint64_t{1} << (m & 63);
    static constexpr std::uint64_t low[6] = {0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
                                             0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};
    auto nw = static_cast<std::int64_t>(words);
    for (int j = 0; j < std::min(n, 6); ++j) {
        int sh = 1 << j;
#pragma omp parallel for schedule(static)
        for (std::int64_t w = 0; w < nw; ++w) t[w] ^= (t[w] & low[j]) << sh;
    }
    for (int j = 6; j < n; ++j) {
        std::int64_t step = std::int64_t{1} << (j - 6);
#pragma omp parallel for schedule(static)
        for (std::int64_t w = 0; w < nw; ++w)
            if (w & step) t[w] ^= t[w ^ step];
    }
    return t;
}

std::uint64_t zeros_of_table(const std::vector<std::uint64_t>& t, int n) {
    std::uint64_t ones = 0;
    auto nw = static_cast<std::int64_t>(t.size());
    std::uint64_t used = n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::uint64_t{1} << n)) - 1);
#pragma omp parallel for reduction(+ : ones) schedule(static)
    for (std::int64_t w = 0; w < nw; ++w) ones += std::popcount(t[w] & used);
    return (std::uint64_t{1} << n) - ones;
}

std::vector<std::uint64_t> masks(const GF2Poly& p) {
    std::vector<std::uint64_t> out;
    for (const auto& m : p.monomials) out.push_back(mono_mask(m));
    return out;
}

std::uint64_t direct_zeros(const std::vector<std::vector<std::uint64_t>>& polys, int n) {
    std::uint64_t zeros = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        bool all = true;
        for (const auto& p : polys) {
            unsigned v = 0;
            for (auto m : p) v ^= (m & x) == m;
            if (v) {
                all = false;
                break;
            }
        }
        zeros += all;
    }
    return zeros;
}

}  // namespace

std::uint64_t count_zeros(const CubicForm& c) {
    check_vars(c.n);
    return zeros_of_table(truth_table(masks(c.to_poly()), c.n), c.n);
}

std::uint64_t count_zeros_serial(const CubicForm& c) {
    check_vars(c.n);
    return direct_zeros({masks(c.to_poly())}, c.n);
}

std::uint64_t count_zeros(const std::vector<GF2Poly>& system, int nvars) {
    check_vars(nvars);
    std::vector<std::uint64_t> any;
    for (const auto& p : system) {
        auto t = truth_table(masks(p), nvars);
        if (any.empty())
            any = std::move(t);
        else
            for (std::size_t w = 0; w < any.size(); ++w) any[w] |= t[w];
    }
    if (any.empty()) return std::uint64_t{1} << nvars;
    return zeros_of_table(any, nvars);
}

std::uint64_t count_zeros_serial(const std::vector<GF2Poly>& system, int nvars) {
    check_vars(nvars);
    std::vector<std::vector<std::uint64_t>> polys;
    for (const auto& p : system) polys.push_back(masks(p));
    return direct_zeros(polys, nvars);
}

std::uint64_t count_models(const CNF3& e) {
    check_vars(e.nvars);
    std::vector<std::array<std::uint64_t, 2>> cls;  // positive mask, negative mask
    for (const auto& c : e.clauses) {
        std::array<std::uint64_t, 2> m{0, 0};
        for (int lit : c) m[lit < 0] |= std::uint64_t{1} << (std::abs(lit) - 1);
        cls.push_back(m);
    }
    auto total = static_cast<std::int64_t>(std::uint64_t{1} << e.nvars);
    std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (std::int64_t xi = 0; xi < total; ++xi) {
        auto x = static_cast<std::uint64_t>(xi);
        bool ok = true;
        for (const auto& m : cls)
            if (!(x & m[0]) && !(~x & m[1])) {
                ok = false;
                break;
            }
        count += ok;
    }
    return count;
}

Tau4Result tau4_of_cubic(const CubicForm& c) {
    std::uint64_t z = count_zeros(c);
    std::int64_t v = chk::sub(chk::mul(2, static_cast<std::int64_t>(z)), chk::pow2(c.n));
    return {CycloInt(v), Tau4Method::cubic, std::uint64_t{1} << c.n};
}

LinkInvariantModel cubic_to_model(const CubicForm& c) {
    LinkInvariantModel m = LinkInvariantModel::trivial(c.n);
    for (int i : c.linear) m.arf[i] = 1;
    for (int i = 0; i < c.n; ++i)
        for (int j = i + 1; j < c.n; ++j) m.set_lambda(i, j, 0);
    for (const auto& q : c.quadratic) {
        m.set_quarter(q[0], q[1], 1);
        m.set_lambda(q[0], q[1], 4);
    }
    for (const auto& t : c.cubic) m.set_tau(t[0], t[1], t[2], 1);
    return m;
}

std::vector<int> cubic_braid(const CubicForm& c, int& strands) {
    strands = c.n + static_cast<int>(c.linear.size() + c.quadratic.size());
    int next_aux = c.n;
    std::vector<int> word;
    // Conjugates `block` (generators local to the window) by moving `pos` to the last positions.
    auto insert = [&](std::vector<int> pos, const std::vector<int>& block) {
        int n = strands, w = static_cast<int>(pos.size());
        std::vector<int> at(n);
        for (int p = 0; p < n; ++p) at[p] = p;
        std::vector<int> gamma;
        for (int t = w - 1; t >= 0; --t) {
            int target = n - w + t;
            int q = static_cast<int>(std::find(at.begin(), at.end(), pos[t]) - at.begin());
            for (; q < target; ++q) {
                gamma.push_back(q + 1);
                std::swap(at[q], at[q + 1]);
            }
        }
        word.insert(word.end(), gamma.begin(), gamma.end());
        for (int g : block) word.push_back(g > 0 ? g + n - w : g - (n - w));
        for (auto it = gamma.rbegin(); it != gamma.rend(); ++it) word.push_back(-*it);
    };
    for (int i : c.linear) insert({i, next_aux++}, {1, 1, 1});
    for (const auto& q : c.quadratic) insert({q[0], q[1], next_aux++}, {1, -2, 1, -2, 1});
    for (const auto& t : c.cubic) insert({t[0], t[1], t[2]}, {1, -2, 1, -2, 1, -2});
    return word;
}

PDLink cubic_to_pdlink(const CubicForm& c) {
    if (c.n < 1) return unlink(0);
    int strands = 0;
    std::vector<int> word = cubic_braid(c, strands);
    if (static_cast<int>(word.size()) > limits::crossings())
        throw BoundExceeded("diagram for this form needs " + std::to_string(word.size()) +
                            " crossings, above the bound " + std::to_string(limits::crossings()));
    PDLink link = from_braid(word, strands);
    if (link.components != c.n) throw Error("tangle insertion produced the wrong number of components");
    if (!is_planar(link)) throw Error("tangle insertion produced a non-planar diagram");
    return link;
}

ReductionReport verify_reduction(const CNF3& e) {
    ReductionReport rep;
    rep.n = e.nvars;
    rep.r = static_cast<int>(e.clauses.size());
    QuadSystem q = to_quad_system(cnf_to_cubic_system(e), e.nvars);
    CubicForm c = to_single_cubic(q);
    rep.m = q.m;
    rep.k = static_cast<int>(q.polys.size());
    rep.models = count_models(e);
    rep.zeros = count_zeros(c);
    // 2^{m+k-1} + 2^{k-1} #e, kept integral for k = 0.
    std::uint64_t twice = (std::uint64_t{1} << (rep.m + rep.k)) + (std::uint64_t{1} << rep.k) * rep.models;
    rep.predicted = twice / 2;
    rep.holds = rep.predicted == rep.zeros;
    return rep;
}

}  // namespace tau4
