#include <doctest.h>

#include "oracles.hpp"
#include "tau4/enhanced.hpp"
#include "tau4/error.hpp"
#include "tau4/invariants.hpp"
#include "tau4/link.hpp"

using namespace tau4;

namespace {

PDLink trefoil() { return from_braid({1, 1, 1}, 2); }
PDLink whitehead() { return from_braid({1, -2, 1, -2, 1}, 3); }
PDLink borromean() { return from_braid({1, -2, 1, -2, 1, -2}, 3); }
PDLink torus24() { return from_braid({1, 1, 1, 1}, 2); }

LinkInvariantModel whitehead_model(int lambda) {
    LinkInvariantModel m = LinkInvariantModel::trivial(2);
    m.set_lambda(0, 1, lambda);
    m.set_quarter(0, 1, 1);
    return m;
}

LinkInvariantModel borromean_model() {
    LinkInvariantModel m = LinkInvariantModel::trivial(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) m.set_lambda(i, j, 0);
    m.set_tau(0, 1, 2, 1);
    return m;
}

}  // namespace

TEST_SUITE("link_invariants") {

TEST_CASE("arf examples") {
    CHECK(arf_hoste_murakami(trefoil()) == 1);
    CHECK(arf_hoste_murakami(whitehead()) == 1);
    CHECK(arf_hoste_murakami(unlink(2)) == 0);
    CHECK(arf_hoste_murakami(borromean()) == 1);
    CHECK(arf_hoste_murakami(from_braid({1, -2, 1, -2}, 3)) == 1);
    CHECK(arf_hoste_murakami(from_braid({1, 1, 1, 1, 1}, 2)) == 1);
    CHECK(arf_hoste_murakami(torus24()) == 1);
}

TEST_CASE("arf requires total properness and names the pair") {
    PDLink hopf_plus = disjoint_union(unlink(1), from_braid({1, 1}, 2));
    try {
        arf_hoste_murakami(hopf_plus);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("lk(2,3)") != std::string::npos);
    }
}

TEST_CASE("arf of knots is the z^2 coefficient mod 2") {
    std::mt19937_64 rng(41);
    int knots = 0;
    for (int t = 0; t < 200 && knots < 60; ++t) {
        std::vector<int> w;
        int len = 1 + static_cast<int>(rng() % 9);
        for (int k = 0; k < len; ++k) w.push_back((rng() & 1u ? 1 : -1) * (1 + static_cast<int>(rng() % 2)));
        PDLink l = from_braid(w, 3);
        if (l.components != 1) continue;
        ++knots;
        auto z = oracle::conway_of_braid(w, 3);
        std::int64_t a2 = z.size() > 2 ? z[2] : 0;
        CHECK(arf_hoste_murakami(l) == ((a2 % 2) + 2) % 2);
    }
    CHECK(knots >= 30);
}

TEST_CASE("arf is additive under split union") {
    CHECK(arf_hoste_murakami(disjoint_union(trefoil(), trefoil())) == 0);
    CHECK(arf_hoste_murakami(disjoint_union(trefoil(), whitehead())) == 0);
    CHECK(arf_hoste_murakami(disjoint_union(borromean(), unlink(2))) == 1);
}

TEST_CASE("arf is invariant under mirror and Reidemeister moves") {
    for (const PDLink& l : {trefoil(), whitehead(), borromean(), torus24()}) {
        int a = arf_hoste_murakami(l);
        CHECK(arf_hoste_murakami(mirror(l)) == a);
        CHECK(arf_hoste_murakami(reidemeister1(l, l.component_of_arc.begin()->first, 2)) == a);
    }
}

TEST_CASE("model arf") {
    LinkInvariantModel k = LinkInvariantModel::trivial(1);
    k.arf[0] = 1;
    CHECK(arf_theorem11(k) == 1);
    LinkInvariantModel w = LinkInvariantModel::trivial(2);
    w.set_quarter(0, 1, 1);
    CHECK(arf_theorem11(w) == 1);
    CHECK(arf_theorem11(borromean_model()) == 1);
    CHECK(arf_theorem11(LinkInvariantModel::trivial(5)) == 0);
    LinkInvariantModel odd = LinkInvariantModel::trivial(2);
    odd.lk(0, 1) = odd.lk(1, 0) = 1;
    CHECK_THROWS_AS(arf_theorem11(odd), DomainError);
}

TEST_CASE("model validation") {
    LinkInvariantModel m = LinkInvariantModel::trivial(2);
    m.set_lambda(0, 1, 2);
    CHECK_THROWS_AS(m.validate(), ValidationError);
    LinkInvariantModel q = LinkInvariantModel::trivial(2);
    q.set_lambda(0, 1, 4);
    CHECK_THROWS_AS(q.validate(), ValidationError);
    q.set_quarter(0, 1, 1);
    CHECK_NOTHROW(q.validate());
    LinkInvariantModel o = LinkInvariantModel::trivial(2);
    o.set_lambda(0, 1, 3);
    CHECK_THROWS_AS(o.validate(), ValidationError);
    LinkInvariantModel a = LinkInvariantModel::trivial(1);
    a.arf[0] = 2;
    CHECK_THROWS_AS(a.validate(), ValidationError);
}

TEST_CASE("restriction keeps the selected components") {
    LinkInvariantModel m = borromean_model();
    m.arf[2] = 1;
    LinkInvariantModel r = m.restrict_to(0b110);
    CHECK(r.n == 2);
    CHECK(r.arf == std::vector<int>{0, 1});
    CHECK(arf_theorem11(r) == 1);
    CHECK(arf_theorem11(m.restrict_to(0b111)) == 0);
}

TEST_CASE("brown of links") {
    CHECK(brown_of_proper_link(trefoil()) == 4);
    CHECK(brown_of_proper_link(borromean()) == 4);
    CHECK(brown_of_proper_link(unlink(2)) == 0);
    CHECK(brown_of_proper_link(torus24()) == 6);
    PDLink rev = reverse_component(torus24(), 1);
    CHECK(brown_of_proper_link(rev) == 6);
    CHECK(arf_hoste_murakami(rev) != arf_hoste_murakami(torus24()));
}

TEST_CASE("brown of models") {
    CHECK(brown_totally_proper_model(borromean_model()) == 4);
    LinkInvariantModel k = LinkInvariantModel::trivial(1);
    k.arf[0] = 1;
    CHECK(brown_totally_proper_model(k) == 4);
    CHECK(brown_totally_proper_model(whitehead_model(-4)) == 4);
    CHECK_THROWS_AS(brown_totally_proper_model(LinkInvariantModel::trivial(2)), ValidationError);

    LinkInvariantModel t = LinkInvariantModel::trivial(2);
    t.lk(0, 1) = t.lk(1, 0) = 2;
    t.set_lambda(0, 1, 2);
    t.set_quarter(0, 1, 1);
    t.validate();
    CHECK(brown_totally_proper_model(t) == brown_of_proper_link(torus24()));
    CHECK(arf_theorem11(t) == arf_hoste_murakami(torus24()));
}

TEST_CASE("immersion formula") {
    ImmersionData ex1;
    ex1.beta_f = brown(direct_sum(space_P(1), direct_sum(space_A(0), space_A(0))));
    REQUIRE(ex1.beta_f == BrownValue::of(1));
    ex1.phi_f = -3;
    BrownArf r = theorem4_combine(ex1);
    CHECK(r.beta == 4);
    CHECK(r.beta == brown_of_proper_link(borromean()));
    CHECK(r.arf == arf_hoste_murakami(borromean()));

    for (int k = 0; k < 4; ++k) {
        ImmersionData bing;
        EnhancedSpace t = k % 2 ? space_T(2, 2) : space_T(0, 0);
        bing.beta_f = brown(direct_sum(t, space_A(0)));
        CHECK(theorem4_combine(bing).beta == (4 * k) % 8);
    }

    BrownArf z = theorem4_combine(ImmersionData{BrownValue::of(0), 0, 0, 0, 0});
    CHECK(z.beta == 0);
    CHECK(z.arf == 0);
    CHECK_THROWS_AS(theorem4_combine(ImmersionData{BrownValue::infinity(), 0, 0, 0, 0}), DomainError);
    CHECK_THROWS_AS(theorem4_combine(ImmersionData{BrownValue::of(1), 0, 0, 0, 0}), DomainError);
    BrownArf odd = theorem4_combine(ImmersionData{BrownValue::of(0), 0, 1, 1, 3});
    CHECK(odd.beta == 7);
    CHECK(odd.arf == 1);
}

TEST_CASE("mu invariants") {
    PDLink t = trefoil();
    CHECK(mu_invariant(t, 0b1) == 8);
    CHECK(mu_invariant(t, 0) == 0);
    PDLink u = unlink(1);
    u.framings = {1};
    CHECK(mu_invariant(u, 0b1) == 0);
    CHECK_THROWS_AS(mu_invariant(u, 0), DomainError);

    PDLink h = torus24();
    h.framings = {3, -5};
    CHECK(mu_invariant(h, 0b11) == ((signature(linking_matrix(h)) - (3 - 5 + 4) + 8 * arf_hoste_murakami(h)) % 16 + 16) % 16);
    PDLink e = from_braid({1, 1}, 2);
    e.framings = {2, 2};
    CHECK(mu_invariant(e, 0) == ((signature(linking_matrix(e)) % 16) + 16) % 16);
}

TEST_CASE("quarter twist parity") {
    CHECK(quarter_twist({1, 0}).single_curve);
    CHECK_FALSE(quarter_twist({2, 1}).single_curve);
    CHECK(quarter_twist({3, 1}).mod8 == 7);
    CHECK(quarter_twist({3, 1}).exact == 7);
    CHECK(quarter_twist({-1, 0}).mod8 == 7);
}

}  // TEST_SUITE
