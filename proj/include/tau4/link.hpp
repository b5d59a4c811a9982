#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "tau4/intmatrix.hpp"

namespace tau4 {

// Slots a,b,c,d run clockwise. The under-strand enters at a and leaves at c. The
// over-strand runs b -> d when sign = +1 and d -> b when sign = -1.
struct Crossing {
    std::array<int, 4> x{};
    int sign = 1;

    int under_in() const { return x[0]; }
    int under_out() const { return x[2]; }
    int over_in() const { return sign > 0 ? x[1] : x[3]; }
    int over_out() const { return sign > 0 ? x[3] : x[1]; }
    bool operator==(const Crossing&) const = default;
};

// Components with no arcs are crossingless circles.
struct PDLink {
    std::vector<Crossing> crossings;
    std::map<int, int> component_of_arc;
    int components = 0;
    std::vector<std::int64_t> framings;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    // Arc pairing, single oriented cycle per component, framing count.
    void validate() const;
    // Arcs of component k in traversal order starting from its smallest arc.
    std::vector<int> traverse(int k) const;
    bool operator==(const PDLink&) const = default;
};

PDLink from_braid(const std::vector<int>& word, int strands);
PDLink unlink(int n);

SymIntMatrix linking_matrix(const PDLink& link);
std::int64_t total_linking(const PDLink& link);

// keep is a component bitmask.
PDLink delete_components(const PDLink& link, std::uint64_t keep);
PDLink disjoint_union(const PDLink& a, const PDLink& b);
PDLink mirror(const PDLink& link);
PDLink reverse_component(const PDLink& link, int k);
// Arc ids renumbered 0.. along components in order.
PDLink relabeled(const PDLink& link);

// A face is the cyclic list of darts (arc, forward?) keeping the face on the left.
struct Dart {
    int arc;
    bool forward;
};
std::vector<std::vector<Dart>> faces(const PDLink& link);
// Euler characteristic check on the face structure.
bool is_planar(const PDLink& link);

// Kink on arc with variant 0..3 (which strand passes over, which side the loop sits).
PDLink reidemeister1(const PDLink& link, int arc, int variant);
// Pushes arc e over arc f across a face both bound. Darts must lie on one face.
PDLink reidemeister2(const PDLink& link, Dart e, Dart f);

// Coefficients of z^0, z^1, ...
using ConwayPoly = std::vector<std::int64_t>;
ConwayPoly conway(const PDLink& link);
std::int64_t c1(const PDLink& link);

struct Band {
    std::int64_t half_twists = 0;
    std::int64_t writhe = 0;
};
struct HalfTwist {
    std::int64_t exact;
    int mod4;
};
HalfTwist half_twist(const Band& band);

}  // namespace tau4
