#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tau4/cyclo.hpp"
#include "tau4/intmatrix.hpp"
#include "tau4/invariants.hpp"
#include "tau4/link.hpp"

namespace tau4 {

enum class Tau4Method { exponential, spin_sum, product, model, cubic };

std::string method_name(Tau4Method m);

struct Tau4Result {
    CycloInt value;
    Tau4Method method;
    std::uint64_t terms = 0;
};

// Component bitmasks x with (Lambda mod 2) x = diag(Lambda) mod 2.
std::vector<std::uint64_t> characteristic_sublinks(const SymIntMatrix& lambda);

// sum over characteristic x of sign(x) w^{-x.Lambda.x}; signs supplied per sublink.
// The parallel kernel and its serial reference give identical results.
CycloInt characteristic_sum(const SymIntMatrix& lambda, const std::vector<std::uint64_t>& subs,
                            const std::vector<int>& arf);
CycloInt characteristic_sum_serial(const SymIntMatrix& lambda, const std::vector<std::uint64_t>& subs,
                                   const std::vector<int>& arf);

Tau4Result tau4_exponential(const PDLink& link);
Tau4Result tau4_spin_sum(const PDLink& link);
Tau4Result tau4_product(const std::vector<std::int64_t>& framings, std::int64_t sigma_correction);
Tau4Result tau4_diagonalize_and_product(const SymIntMatrix& lambda);
Tau4Result tau4_of_model(const LinkInvariantModel& model);

}  // namespace tau4
