#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tau4/cyclo.hpp"
#include "tau4/gf2.hpp"

namespace tau4 {

// Z4-valued quadratic enhancement of a symmetric GF(2) form, given on the standard basis.
struct EnhancedSpace {
    BitMatrix form;
    std::vector<int> values;

    int dim() const { return form.nrows(); }
    // Checks symmetry and values[i] = form(i,i) mod 2.
    void validate() const;

    static EnhancedSpace make(const BitMatrix& form, const std::vector<int>& values);
    static EnhancedSpace empty() { return {}; }
};

// Element of Z8 together with infinity.
struct BrownValue {
    std::optional<int> value;

    static BrownValue infinity() { return {}; }
    static BrownValue of(int v) { return {((v % 8) + 8) % 8}; }
    bool is_infinite() const { return !value.has_value(); }
    std::string to_string() const { return value ? std::to_string(*value) : "infinity"; }
    bool operator==(const BrownValue&) const = default;
};

BrownValue operator+(const BrownValue& a, const BrownValue& b);

struct NormalForm {
    int t0 = 0, t4 = 0, p1 = 0, pm1 = 0, a0 = 0, ainf = 0;
    bool operator==(const NormalForm&) const = default;
};

struct ClassTuple {
    int dim = 0;
    int radical_dim = 0;
    bool even = true;
    bool proper = true;
    BrownValue brown;
    bool operator==(const ClassTuple&) const = default;
};

// Indecomposable summands.
EnhancedSpace space_T(int v0, int v1);  // hyperbolic plane, values even
EnhancedSpace space_P(int v);           // form (1), v odd
EnhancedSpace space_A(int v);           // form (0), v even

int evaluate(const EnhancedSpace& s, const BitVec& x);
std::vector<BitVec> radical(const EnhancedSpace& s);
bool is_proper(const EnhancedSpace& s);
bool is_even(const EnhancedSpace& s);

// Number of vectors with e(x) = 0,1,2,3. The parallel kernel splits the cube into
// Gray-code blocks; the serial version is the reference.
std::array<std::uint64_t, 4> value_counts(const EnhancedSpace& s);
std::array<std::uint64_t, 4> value_counts_serial(const EnhancedSpace& s);

CycloInt gauss_sum(const EnhancedSpace& s);
BrownValue brown_from_counts(const std::array<std::uint64_t, 4>& e);
BrownValue brown(const EnhancedSpace& s);

EnhancedSpace direct_sum(const EnhancedSpace& a, const EnhancedSpace& b);
ClassTuple class_tuple(const EnhancedSpace& s);
NormalForm normal_form(const EnhancedSpace& s);
EnhancedSpace realize(const NormalForm& nf);

}  // namespace tau4
