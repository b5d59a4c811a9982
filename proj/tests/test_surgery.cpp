#include <doctest.h>

#include "oracles.hpp"
#include "tau4/error.hpp"
#include "tau4/invariants.hpp"
#include "tau4/link.hpp"
#include "tau4/surgery.hpp"

using namespace tau4;

namespace {

PDLink framed(const std::vector<int>& word, int strands, std::vector<std::int64_t> framings) {
    PDLink l = from_braid(word, strands);
    l.framings = std::move(framings);
    l.validate();
    return l;
}

std::vector<std::uint64_t> brute_characteristic(const IntMatrix& lk) {
    int n = lk.rows();
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            std::int64_t row = 0;
            for (int j = 0; j < n; ++j) row += lk(i, j) * static_cast<std::int64_t>((x >> j) & 1u);
            ok = (row - lk(i, i)) % 2 == 0;
        }
        if (ok) out.push_back(x);
    }
    return out;
}

IntMatrix random_symmetric(std::mt19937_64& rng, int n, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
    return m;
}

// Braids whose closures have totally proper sublinks throughout.
const std::vector<oracle::Braid> proper_braids = {
    {{}, 1},
    {{1, 1, 1}, 2},
    {{1, -2, 1, -2}, 3},
    {{1, 1, 1, 1}, 2},
    {{1, -2, 1, -2, 1}, 3},
    {{1, -2, 1, -2, 1, -2}, 3},
    {{1, 1, 1, 1, 2, 2, 2, 2}, 3},
    {{1, 1, 1, 1, 1}, 2},
};

}  // namespace

TEST_SUITE("surgery_tau") {

TEST_CASE("jones oracle reproduces knot Arf invariants") {
    CHECK(oracle::arf_from_jones({{1}, 2}) == 0);
    CHECK(oracle::arf_from_jones({{1, 1, 1}, 2}) == 1);
    CHECK(oracle::arf_from_jones({{1, -2, 1, -2}, 3}) == 1);
    CHECK(oracle::arf_from_jones({{}, 3}) == 0);
    CHECK(oracle::jones_at_i({{1, 1}, 2}).is_zero());
    std::mt19937_64 rng(51);
    for (int t = 0; t < 40; ++t) {
        oracle::Braid b{{}, 3};
        for (int k = 0; k < 7; ++k) b.word.push_back((rng() & 1u ? 1 : -1) * (1 + static_cast<int>(rng() % 2)));
        if (oracle::braid_component_count(b) != 1) continue;
        auto z = oracle::conway_of_braid(b.word, 3);
        std::int64_t a2 = z.size() > 2 ? z[2] : 0;
        CHECK(oracle::arf_from_jones(b) == ((a2 % 2) + 2) % 2);
    }
}

TEST_CASE("warm-up values") {
    CHECK(tau4_exponential(framed({}, 1, {0})).value == CycloInt(2));
    CHECK(tau4_exponential(framed({}, 1, {1})).value == CycloInt(1));
    CHECK(tau4_exponential(framed({}, 1, {-1})).value == CycloInt(1));
    CHECK(tau4_exponential(framed({1, 1}, 2, {0, 0})).value == CycloInt(1));
    CHECK(tau4_exponential(framed({1, 1, 1}, 2, {0})).value.is_zero());
    Tau4Result u = tau4_exponential(framed({}, 1, {2}));
    CHECK(u.value == CycloInt::omega_pow(1) + CycloInt::omega_pow(-1));
    CHECK(u.terms == 2);
}

TEST_CASE("exponential sum matches the brute-force oracle") {
    std::mt19937_64 rng(52);
    for (const auto& b : proper_braids) {
        int n = oracle::braid_component_count(b);
        for (int t = 0; t < 6; ++t) {
            std::vector<std::int64_t> fr(n);
            for (auto& f : fr) f = static_cast<int>(rng() % 7) - 3;
            PDLink l = framed(b.word, b.strands, fr);
            CAPTURE(b.word.size());
            CHECK(tau4_exponential(l).value == oracle::tau4_brute(b, fr));
        }
    }
}

TEST_CASE("exponential and spin sums agree") {
    std::mt19937_64 rng(53);
    for (const auto& b : proper_braids) {
        int n = oracle::braid_component_count(b);
        for (int t = 0; t < 5; ++t) {
            std::vector<std::int64_t> fr(n);
            for (auto& f : fr) f = static_cast<int>(rng() % 9) - 4;
            PDLink l = framed(b.word, b.strands, fr);
            CHECK(tau4_spin_sum(l).value == tau4_exponential(l).value);
        }
    }
}

TEST_CASE("characteristic sublinks") {
    CHECK(characteristic_sublinks(IntMatrix{{0}}) == std::vector<std::uint64_t>{0, 1});
    CHECK(characteristic_sublinks(IntMatrix{{1}}) == std::vector<std::uint64_t>{1});
    CHECK(characteristic_sublinks(IntMatrix{{0, 1}, {1, 0}}) == std::vector<std::uint64_t>{0});
    CHECK(characteristic_sublinks(IntMatrix{{1, 1}, {1, 1}}) == std::vector<std::uint64_t>{1, 2});
    CHECK_THROWS_AS(characteristic_sublinks(IntMatrix{{0, 1}, {0, 0}}), ValidationError);
    std::mt19937_64 rng(54);
    for (int t = 0; t < 300; ++t) {
        IntMatrix m = random_symmetric(rng, 1 + static_cast<int>(rng() % 8), 3);
        CHECK(characteristic_sublinks(m) == brute_characteristic(m));
    }
}

TEST_CASE("parallel characteristic sum matches the serial reference") {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + static_cast<int>(rng() % 14);
        IntMatrix m = random_symmetric(rng, n, 5);
        auto subs = characteristic_sublinks(m);
        std::vector<int> arf(subs.size());
        for (auto& a : arf) a = static_cast<int>(rng() & 1u);
        CHECK(characteristic_sum(m, subs, arf) == characteristic_sum_serial(m, subs, arf));
    }
}

TEST_CASE("product formula on framed unlinks") {
    std::mt19937_64 rng(56);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::int64_t> fr(n);
        for (auto& f : fr) f = static_cast<int>(rng() % 21) - 10;
        PDLink u = unlink(n);
        u.framings = fr;
        CycloInt ref = oracle::tau4_brute({{}, n}, fr);
        CHECK(tau4_exponential(u).value == ref);
        CHECK(tau4_product(fr, oracle::signature(IntMatrix::diagonal(fr))).value == ref);
        CHECK(tau4_diagonalize_and_product(IntMatrix::diagonal(fr)).value == ref);
    }
}

TEST_CASE("diagonalized product is tau4 of the diagonal unlink") {
    CHECK(tau4_diagonalize_and_product(IntMatrix{{0, 1}, {1, 0}}).value ==
          tau4_exponential(framed({1, 1}, 2, {0, 0})).value);
    std::mt19937_64 rng(57);
    int compared = 0;
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<int> word;
        for (int i = 1; i < n; ++i) {
            int s = rng() & 1u ? 1 : -1;
            word.push_back(s * i);
            word.push_back(s * i);
        }
        std::vector<std::int64_t> fr(n);
        for (auto& f : fr) f = static_cast<int>(rng() % 9) - 4;
        IntMatrix lk = linking_matrix(framed(word, n, fr));
        CongruenceCertificate cert;
        try {
            cert = stable_diagonalize(lk);
        } catch (const NotStablyDiagonalizable&) {
            CHECK(oracle::discriminant_check(lk) != oracle::Disc::realizable);
            continue;
        }
        ++compared;
        auto d = cert.D.diag();
        CycloInt unlink_value = oracle::tau4_brute({{}, static_cast<int>(d.size())}, d);
        CHECK(tau4_diagonalize_and_product(lk).value == unlink_value);
    }
    CHECK(compared > 30);
}

TEST_CASE("product formula ignores knotting") {
    PDLink t = framed({1, 1, 1}, 2, {0});
    CHECK(tau4_exponential(t).value.is_zero());
    CHECK(tau4_diagonalize_and_product(linking_matrix(t)).value == CycloInt(2));
}

TEST_CASE("product formula examples") {
    CHECK(tau4_product({}, 0).value == CycloInt(1));
    CHECK(tau4_product({0}, 0).value == CycloInt(2));
    CHECK(tau4_product({1}, 1).value == CycloInt(1));
    CHECK(tau4_product({2}, 1).value == CycloInt::omega_pow(1) + CycloInt::omega_pow(-1));
    CHECK(tau4_product({0, 0, 0}, 0).value == CycloInt(8));
    CHECK(tau4_product({16}, 1).value == CycloInt::omega_pow(1) * CycloInt(2));
    CHECK(tau4_product({3}, 1).value == CycloInt::omega_pow(-2));
    CHECK(tau4_product({0, 0}, 0).terms == 3);
}

TEST_CASE("stabilization by unit-framed unknots") {
    std::mt19937_64 rng(58);
    for (const auto& b : proper_braids) {
        int n = oracle::braid_component_count(b);
        std::vector<std::int64_t> fr(n);
        for (auto& f : fr) f = static_cast<int>(rng() % 5) - 2;
        PDLink l = framed(b.word, b.strands, fr);
        CycloInt v = tau4_exponential(l).value;
        for (std::int64_t e : {1, -1}) {
            PDLink s = disjoint_union(l, unlink(1));
            s.framings.back() = e;
            CHECK(tau4_exponential(s).value == v);
        }
    }
}

TEST_CASE("invariance under mirror conjugation and Reidemeister moves") {
    std::mt19937_64 rng(59);
    for (const auto& b : proper_braids) {
        int n = oracle::braid_component_count(b);
        std::vector<std::int64_t> fr(n);
        for (auto& f : fr) f = static_cast<int>(rng() % 5) - 2;
        PDLink l = framed(b.word, b.strands, fr);
        CycloInt v = tau4_exponential(l).value;
        CHECK(tau4_exponential(mirror(l)).value == v.conjugate(15));
        if (l.component_of_arc.empty()) continue;
        CHECK(tau4_exponential(reidemeister1(l, l.component_of_arc.rbegin()->first, 1)).value == v);
    }
}

TEST_CASE("model method agrees with diagrams") {
    std::mt19937_64 rng(60);
    auto check = [&](LinkInvariantModel m, const std::vector<int>& word, int strands) {
        for (int t = 0; t < 5; ++t) {
            std::vector<std::int64_t> fr(m.n);
            for (int i = 0; i < m.n; ++i) m.lk(i, i) = fr[i] = static_cast<int>(rng() % 7) - 3;
            m.validate();
            CHECK(tau4_of_model(m).value == tau4_exponential(framed(word, strands, fr)).value);
        }
    };
    LinkInvariantModel k = LinkInvariantModel::trivial(1);
    k.arf[0] = 1;
    check(k, {1, 1, 1}, 2);
    LinkInvariantModel w = LinkInvariantModel::trivial(2);
    w.set_lambda(0, 1, -4);
    w.set_quarter(0, 1, 1);
    check(w, {1, -2, 1, -2, 1}, 3);
    LinkInvariantModel bo = LinkInvariantModel::trivial(3);
    bo.set_tau(0, 1, 2, 1);
    check(bo, {1, -2, 1, -2, 1, -2}, 3);
    LinkInvariantModel t = LinkInvariantModel::trivial(2);
    t.lk(0, 1) = t.lk(1, 0) = 2;
    t.set_lambda(0, 1, 2);
    t.set_quarter(0, 1, 1);
    check(t, {1, 1, 1, 1}, 2);
}

TEST_CASE("model method requires even linking") {
    LinkInvariantModel m = LinkInvariantModel::trivial(2);
    m.lk(0, 1) = m.lk(1, 0) = 1;
    CHECK_THROWS_AS(tau4_of_model(m), DomainError);
}

TEST_CASE("component bound") {
    PDLink big = unlink(25);
    CHECK_THROWS_AS(tau4_exponential(big), BoundExceeded);
}

}  // TEST_SUITE
