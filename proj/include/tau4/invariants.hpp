#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tau4/enhanced.hpp"
#include "tau4/intmatrix.hpp"
#include "tau4/link.hpp"

namespace tau4 {

// Invariant data of a framed link, indexed by component.
struct LinkInvariantModel {
    int n = 0;
    std::vector<int> arf;                                  // Z2 per component
    std::vector<std::vector<int>> quarter_sl;              // Z2 per pair, symmetric
    std::vector<std::vector<std::optional<int>>> sato_levine;  // Z8 per pair, optional
    std::vector<int> triple;                               // Z2 per triple, n^3 dense, symmetric
    SymIntMatrix lk;                                       // framings on the diagonal

    static LinkInvariantModel trivial(int n);

    int quarter(int i, int j) const { return quarter_sl[i][j]; }
    void set_quarter(int i, int j, int v);
    std::optional<int> lambda(int i, int j) const { return sato_levine[i][j]; }
    void set_lambda(int i, int j, int v);
    int tau(int i, int j, int k) const { return triple[(i * n + j) * n + k]; }
    void set_tau(int i, int j, int k, int v);

    bool totally_proper() const;
    // Parity of values, lambda even, lambda = lk (mod 4), quarter agreement, symmetry.
    void validate() const;
    LinkInvariantModel restrict_to(std::uint64_t mask) const;
    bool operator==(const LinkInvariantModel&) const = default;
};

struct ImmersionData {
    BrownValue beta_f;
    std::int64_t phi_f = 0;
    int delta_f = 0;
    std::int64_t tau_f = 0;
    std::int64_t lk_total = 0;
};

struct BrownArf {
    int beta;
    int arf;
};

// Requires all pairwise linking numbers even; DomainError names the first odd pair.
void require_totally_proper(const SymIntMatrix& lk);

int arf_hoste_murakami(const PDLink& link);
int arf_theorem11(const LinkInvariantModel& model);
int brown_of_proper_link(const PDLink& link);
int brown_totally_proper_model(const LinkInvariantModel& model);
BrownArf theorem4_combine(const ImmersionData& data);
int mu_invariant(const PDLink& link, std::uint64_t char_sublink);

struct DoubleBand {
    std::int64_t quarter_twists = 0;
    std::int64_t writhe = 0;
};
struct QuarterTwist {
    std::int64_t exact;
    int mod8;
    bool single_curve;  // odd value
};
QuarterTwist quarter_twist(const DoubleBand& band);

}  // namespace tau4
