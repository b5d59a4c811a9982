#include "tau4/invariants.hpp"

#include <bit>
#include <exception>
#include <string>

#include "tau4/checked.hpp"
#include "tau4/error.hpp"

namespace tau4 {

LinkInvariantModel LinkInvariantModel::trivial(int n) {
    LinkInvariantModel m;
    m.n = n;
    m.arf.assign(n, 0);
    m.quarter_sl.assign(n, std::vector<int>(n, 0));
    m.sato_levine.assign(n, std::vector<std::optional<int>>(n));
    m.triple.assign(static_cast<std::size_t>(n) * n * n, 0);
    m.lk = IntMatrix(n, n);
    return m;
}

void LinkInvariantModel::set_quarter(int i, int j, int v) { quarter_sl[i][j] = quarter_sl[j][i] = v & 1; }

void LinkInvariantModel::set_lambda(int i, int j, int v) {
    int r = static_cast<int>(chk::mod(v, 8));
    sato_levine[i][j] = sato_levine[j][i] = r;
}

void LinkInvariantModel::set_tau(int i, int j, int k, int v) {
    int idx[3] = {i, j, k};
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& p : perms) triple[(idx[p[0]] * n + idx[p[1]]) * n + idx[p[2]]] = v & 1;
}

bool LinkInvariantModel::totally_proper() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (lk(i, j) % 2) return false;
    return true;
}

void LinkInvariantModel::validate() const {
    auto sz = static_cast<std::size_t>(n);
    if (n < 0 || arf.size() != sz || quarter_sl.size() != sz || sato_levine.size() != sz ||
        triple.size() != sz * sz * sz || lk.rows() != n || lk.cols() != n)
        throw ValidationError("model arrays do not match n = " + std::to_string(n));
    if (!lk.is_symmetric()) throw ValidationError("lk: linking matrix must be symmetric");
    for (int i = 0; i < n; ++i) {
        if (arf[i] != 0 && arf[i] != 1) throw ValidationError("arf: values must be 0 or 1");
        for (int j = 0; j < n; ++j) {
            if (quarter_sl[i][j] != quarter_sl[j][i] || sato_levine[i][j] != sato_levine[j][i])
                throw ValidationError("pair data must be symmetric");
            if (i == j) continue;
            if (quarter_sl[i][j] != 0 && quarter_sl[i][j] != 1) throw ValidationError("quarter_sl: values must be bits");
            if (auto l = sato_levine[i][j]) {
                std::string pair = std::to_string(i + 1) + "," + std::to_string(j + 1);
                if (*l % 2) throw ValidationError("sato_levine " + pair + ": value must be even");
                if (chk::mod(*l - lk(i, j), 4))
                    throw ValidationError("sato_levine " + pair + ": value must be congruent to lk mod 4");
                if (lk(i, j) % 2 == 0 && chk::mod((*l + lk(i, j)) / 4, 2) != quarter_sl[i][j])
                    throw ValidationError("quarter_sl " + pair + ": disagrees with (sato_levine + lk)/4 mod 2");
            }
        }
    }
    for (int v : triple)
        if (v != 0 && v != 1) throw ValidationError("triple: values must be bits");
}

LinkInvariantModel LinkInvariantModel::restrict_to(std::uint64_t mask) const {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) idx.push_back(i);
    LinkInvariantModel m = trivial(static_cast<int>(idx.size()));
    m.lk = lk.principal(idx);
    for (int a = 0; a < m.n; ++a) {
        m.arf[a] = arf[idx[a]];
        for (int b = 0; b < m.n; ++b) {
            m.quarter_sl[a][b] = quarter_sl[idx[a]][idx[b]];
            m.sato_levine[a][b] = sato_levine[idx[a]][idx[b]];
            for (int c = 0; c < m.n; ++c) m.triple[(a * m.n + b) * m.n + c] = tau(idx[a], idx[b], idx[c]);
        }
    }
    return m;
}

void require_totally_proper(const SymIntMatrix& lk) {
    for (int i = 0; i < lk.rows(); ++i)
        for (int j = i + 1; j < lk.rows(); ++j)
            if (lk(i, j) % 2)
                throw DomainError("link is not totally proper: lk(" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ") = " + std::to_string(lk(i, j)) + " is odd");
}

int arf_hoste_murakami(const PDLink& link) {
    require_totally_proper(linking_matrix(link));
    std::vector<std::uint64_t> subs;
    int n = link.components;
    for (int i = 0; i < n; ++i) {
        subs.push_back(std::uint64_t{1} << i);
        for (int j = i + 1; j < n; ++j) {
            subs.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
            for (int k = j + 1; k < n; ++k)
                subs.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j) | (std::uint64_t{1} << k));
        }
    }
    std::vector<int> bit(subs.size(), 0);
    std::exception_ptr failure;
    auto count = static_cast<std::int64_t>(subs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < count; ++s) {
        try {
            bit[s] = static_cast<int>(chk::mod(c1(delete_components(link, subs[s])), 2));
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    int sum = 0;
    for (int b : bit) sum ^= b;
    return sum;
}

int arf_theorem11(const LinkInvariantModel& model) {
    require_totally_proper(model.lk);
    int s = 0;
    for (int i = 0; i < model.n; ++i) {
        s ^= model.arf[i];
        for (int j = i + 1; j < model.n; ++j) {
            s ^= model.quarter(i, j);
            for (int k = j + 1; k < model.n; ++k) s ^= model.tau(i, j, k);
        }
    }
    return s & 1;
}

int brown_of_proper_link(const PDLink& link) {
    int a = arf_hoste_murakami(link);
    return static_cast<int>(chk::mod(chk::add(4 * a, total_linking(link)), 8));
}

int brown_totally_proper_model(const LinkInvariantModel& model) {
    require_totally_proper(model.lk);
    std::int64_t s = 0;
    for (int i = 0; i < model.n; ++i) {
        s += 4 * model.arf[i];
        for (int j = i + 1; j < model.n; ++j) {
            auto l = model.lambda(i, j);
            if (!l)
                throw ValidationError("sato_levine " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                      ": value required");
            s -= *l;
            for (int k = j + 1; k < model.n; ++k) s += 4 * model.tau(i, j, k);
        }
    }
    return static_cast<int>(chk::mod(s, 8));
}

BrownArf theorem4_combine(const ImmersionData& d) {
    if (d.beta_f.is_infinite()) throw DomainError("beta_f is infinite: the surface enhancement is improper");
    std::int64_t tail = chk::add(chk::sub(*d.beta_f.value, d.phi_f), chk::add(3 * std::int64_t{d.delta_f}, chk::mul(4, d.tau_f)));
    int beta = static_cast<int>(chk::mod(tail, 8));
    std::int64_t num = chk::mod(chk::sub(tail, d.lk_total), 8);
    if (num % 4) throw DomainError("beta_f - phi_f - lk + 3 delta_f + 4 tau_f is not divisible by 4");
    return {beta, static_cast<int>(num / 4)};
}

int mu_invariant(const PDLink& link, std::uint64_t mask) {
    SymIntMatrix lam = linking_matrix(link);
    int n = lam.rows();
    std::vector<std::int64_t> x(n, 0);
    for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
    for (int i = 0; i < n; ++i) {
        std::int64_t dot = 0;
        for (int j = 0; j < n; ++j) dot += x[j] * chk::mod(lam(i, j), 2);
        if ((dot - chk::mod(lam(i, i), 2)) % 2)
            throw DomainError("sublink is not characteristic at component " + std::to_string(i + 1));
    }
    int alpha = mask ? arf_hoste_murakami(delete_components(link, mask)) : 0;
    std::int64_t mu = chk::add(chk::sub(signature(lam), lam.quadratic(x)), 8 * alpha);
    return static_cast<int>(chk::mod(mu, 16));
}

QuarterTwist quarter_twist(const DoubleBand& band) {
    std::int64_t exact = chk::add(band.quarter_twists, chk::mul(4, band.writhe));
    int m = static_cast<int>(chk::mod(exact, 8));
    return {exact, m, (m & 1) == 1};
}

}  // namespace tau4
