#include "tau4/surgery.hpp"

#include <algorithm>
#include <array>
#include <exception>

#include "tau4/checked.hpp"
#include "tau4/error.hpp"
#include "tau4/gf2.hpp"
#include "tau4/limits.hpp"

namespace tau4 {

namespace {

void check_components(int n) {
    if (n > limits::components())
        throw BoundExceeded("link has " + std::to_string(n) + " components, above the enumeration bound " +
                            std::to_string(limits::components()));
}

std::vector<std::int64_t> indicator(std::uint64_t mask, int n) {
    std::vector<std::int64_t> x(n, 0);
    for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
    return x;
}

// f applied to every sublink in parallel.
template <class F>
std::vector<int> per_sublink(const std::vector<std::uint64_t>& subs, F f) {
    std::vector<int> out(subs.size(), 0);
    std::exception_ptr failure;
    auto count = static_cast<std::int64_t>(subs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < count; ++s) {
        try {
            out[s] = f(subs[s]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace

std::string method_name(Tau4Method m) {
    switch (m) {
        case Tau4Method::exponential: return "exponential";
        case Tau4Method::spin_sum: return "spin-sum";
        case Tau4Method::product: return "product";
        case Tau4Method::model: return "model";
        case Tau4Method::cubic: return "cubic";
    }
    return "?";
}

std::vector<std::uint64_t> characteristic_sublinks(const SymIntMatrix& lambda) {
    if (!lambda.is_symmetric()) throw ValidationError("linking matrix must be symmetric");
    int n = lambda.rows();
    check_components(n);
    BitMatrix a(n, n);
    BitVec b(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a.set(i, j, chk::mod(lambda(i, j), 2));
        b.set(i, chk::mod(lambda(i, i), 2));
    }
    AffineSolution sol = gf2_solve_affine(a, b);
    if (!sol.particular) throw Error("no characteristic sublink for a symmetric matrix");
    std::uint64_t p = sol.particular->to_mask();
    std::vector<std::uint64_t> kern;
    for (const auto& v : sol.kernel_basis) kern.push_back(v.to_mask());
    std::vector<std::uint64_t> out;
    std::uint64_t total = std::uint64_t{1} << kern.size();
    out.reserve(total);
    for (std::uint64_t s = 0; s < total; ++s) {
        std::uint64_t x = p;
        for (std::size_t k = 0; k < kern.size(); ++k)
            if ((s >> k) & 1u) x ^= kern[k];
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CycloInt characteristic_sum_serial(const SymIntMatrix& lambda, const std::vector<std::uint64_t>& subs,
                                   const std::vector<int>& arf) {
    int n = lambda.rows();
    CycloInt total;
    for (std::size_t s = 0; s < subs.size(); ++s) {
        CycloInt t = CycloInt::omega_pow(-lambda.quadratic(indicator(subs[s], n)));
        total += arf[s] ? -t : t;
    }
    return total;
}

CycloInt characteristic_sum(const SymIntMatrix& lambda, const std::vector<std::uint64_t>& subs,
                            const std::vector<int>& arf) {
    int n = lambda.rows();
    // Signed counts per power of omega.
    std::array<std::int64_t, 16> hist{};
    auto count = static_cast<std::int64_t>(subs.size());
    std::exception_ptr failure;
#pragma omp parallel
    {
        std::array<std::int64_t, 16> local{};
#pragma omp for schedule(static) nowait
        for (std::int64_t s = 0; s < count; ++s) {
            try {
                auto e = chk::mod(-lambda.quadratic(indicator(subs[s], n)), 16);
                local[e] += arf[s] ? -1 : 1;
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
#pragma omp critical
        for (int k = 0; k < 16; ++k) hist[k] += local[k];
    }
    if (failure) std::rethrow_exception(failure);
    CycloInt total;
    for (int k = 0; k < 16; ++k)
        if (hist[k]) total += CycloInt(hist[k]) * CycloInt::omega_pow(k);
    return total;
}

Tau4Result tau4_exponential(const PDLink& link) {
    SymIntMatrix lam = linking_matrix(link);
    auto subs = characteristic_sublinks(lam);
    auto arf = per_sublink(subs, [&](std::uint64_t m) {
        return m ? arf_hoste_murakami(delete_components(link, m)) : 0;
    });
    CycloInt v = CycloInt::omega_pow(signature(lam)) * characteristic_sum(lam, subs, arf);
    return {v, Tau4Method::exponential, subs.size()};
}

Tau4Result tau4_spin_sum(const PDLink& link) {
    SymIntMatrix lam = linking_matrix(link);
    auto subs = characteristic_sublinks(lam);
    auto mu = per_sublink(subs, [&](std::uint64_t m) { return mu_invariant(link, m); });
    CycloInt v;
    for (int m : mu) v += CycloInt::omega_pow(m);
    return {v, Tau4Method::spin_sum, subs.size()};
}

Tau4Result tau4_product(const std::vector<std::int64_t>& framings, std::int64_t sigma_correction) {
    std::int64_t odd = 0;
    std::array<int, 8> b{};
    for (auto f : framings) {
        if (f % 2)
            odd = chk::add(odd, f);
        else
            ++b[chk::mod(f, 16) / 2];
    }
    CycloInt v = CycloInt::omega_pow(chk::sub(sigma_correction, odd));
    for (int i = 0; i < 8; ++i)
        v *= cyclo_pow(CycloInt(1) + CycloInt::omega_pow(-2 * i), b[i]);
    return {v, Tau4Method::product, framings.size() + 1};
}

Tau4Result tau4_diagonalize_and_product(const SymIntMatrix& lambda) {
    CongruenceCertificate cert = stable_diagonalize(lambda);
    // Stabilizer blocks cancel between sigma(D) and the odd framings.
    return tau4_product(cert.D.diag(), signature(cert.D));
}

Tau4Result tau4_of_model(const LinkInvariantModel& model) {
    require_totally_proper(model.lk);
    auto subs = characteristic_sublinks(model.lk);
    auto arf = per_sublink(subs, [&](std::uint64_t m) { return arf_theorem11(model.restrict_to(m)); });
    CycloInt v = CycloInt::omega_pow(signature(model.lk)) * characteristic_sum(model.lk, subs, arf);
    return {v, Tau4Method::model, subs.size()};
}

}  // namespace tau4
