#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tau4/invariants.hpp"
#include "tau4/link.hpp"
#include "tau4/surgery.hpp"

namespace tau4 {

// Literals are signed 1-based variable indices.
struct CNF3 {
    int nvars = 0;
    std::vector<std::array<int, 3>> clauses;
};

// Variables are 0-based inside polynomials and forms.
using Monomial = std::vector<int>;

struct GF2Poly {
    int nvars = 0;
    std::set<Monomial> monomials;

    void toggle(Monomial m);
    int degree() const;
    bool eval(std::uint64_t x) const;
    GF2Poly operator*(const GF2Poly& o) const;
    GF2Poly operator+(const GF2Poly& o) const;
    bool operator==(const GF2Poly&) const = default;
};

struct CubicForm {
    int n = 0;
    std::set<int> linear;
    std::set<std::array<int, 2>> quadratic;
    std::set<std::array<int, 3>> cubic;

    bool eval(std::uint64_t x) const;
    GF2Poly to_poly() const;
    // Constant terms are rejected.
    static CubicForm from_poly(const GF2Poly& p);
    bool operator==(const CubicForm&) const = default;
};

struct ProductVar {
    int j, k, var;
};

struct QuadSystem {
    int m = 0;
    std::vector<GF2Poly> polys;
    std::vector<ProductVar> products;
};

CNF3 parse_dimacs(const std::string& text);
std::vector<GF2Poly> cnf_to_cubic_system(const CNF3& e);
QuadSystem to_quad_system(const std::vector<GF2Poly>& cubics, int nvars);
// Variables x_0..x_{m-1} followed by z_0..z_{k-1}.
CubicForm to_single_cubic(const QuadSystem& q);

// Truth-table kernels (parallel Moebius transform) with direct enumeration as reference.
std::uint64_t count_zeros(const CubicForm& c);
std::uint64_t count_zeros_serial(const CubicForm& c);
// Common zeros of a system.
std::uint64_t count_zeros(const std::vector<GF2Poly>& system, int nvars);
std::uint64_t count_zeros_serial(const std::vector<GF2Poly>& system, int nvars);
std::uint64_t count_models(const CNF3& e);

Tau4Result tau4_of_cubic(const CubicForm& c);
LinkInvariantModel cubic_to_model(const CubicForm& c);
PDLink cubic_to_pdlink(const CubicForm& c);
// Braid word behind cubic_to_pdlink.
std::vector<int> cubic_braid(const CubicForm& c, int& strands);

struct ReductionReport {
    int n = 0, r = 0, m = 0, k = 0;
    std::uint64_t models = 0;  // #e
    std::uint64_t zeros = 0;   // #c
    std::uint64_t predicted = 0;
    bool holds = false;
};
ReductionReport verify_reduction(const CNF3& e);

}  // namespace tau4
