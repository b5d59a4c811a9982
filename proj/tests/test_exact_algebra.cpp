#include <doctest.h>

#include "oracles.hpp"
#include "tau4/checked.hpp"
#include "tau4/cyclo.hpp"
#include "tau4/error.hpp"
#include "tau4/gf2.hpp"
#include "tau4/intmatrix.hpp"

using namespace tau4;

namespace {

CycloInt w(int k) { return CycloInt::omega_pow(k); }

IntMatrix random_symmetric(std::mt19937_64& rng, int n, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
    return m;
}

}  // namespace

TEST_SUITE("exact_algebra") {

TEST_CASE("omega relations") {
    CHECK(cyclo_mul(w(1), w(7)) == CycloInt(-1));
    CHECK(CycloInt::i() * CycloInt::i() == CycloInt(-1));
    CycloInt r2 = CycloInt::sqrt2();
    CHECK(r2 * r2 == CycloInt(2));
    CHECK(r2 == w(2) - w(6));
    // w - w^7 = 2 cos(pi/8), whose square is 2 + sqrt2.
    CycloInt c8 = w(1) - w(7);
    CHECK(c8 * c8 == CycloInt(2) + r2);
    CHECK(cyclo_pow(w(1), 16) == CycloInt(1));
    CHECK(cyclo_pow(w(1), 8) == CycloInt(-1));
    CHECK(cyclo_pow(w(1), -1) == -w(7));
    CHECK(w(-3) == w(13));
    CHECK(w(3).as_integer() == std::nullopt);
    CHECK(CycloInt(5).as_integer() == 5);
}

TEST_CASE("ring operations agree with complex evaluation") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        CycloInt a = oracle::random_cyclo(rng, 20), b = oracle::random_cyclo(rng, 20);
        CHECK(oracle::close(oracle::numeric(a * b), oracle::numeric(a) * oracle::numeric(b)));
        CHECK(oracle::close(oracle::numeric(a + b), oracle::numeric(a) + oracle::numeric(b)));
        CHECK(oracle::close(oracle::numeric(a - b), oracle::numeric(a) - oracle::numeric(b)));
        CHECK(a * b == b * a);
        CHECK((a + b) * b == a * b + b * b);
    }
}

TEST_CASE("powers and conjugates") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 50; ++t) {
        CycloInt a = oracle::random_cyclo(rng, 3);
        int k = static_cast<int>(rng() % 6);
        CHECK(oracle::close(oracle::numeric(cyclo_pow(a, k)), std::pow(oracle::numeric(a), k), 1e-7L));
        std::complex<long double> prod = 1;
        for (int s = 1; s < 16; s += 2) prod *= oracle::numeric(a.conjugate(s));
        CHECK(oracle::close(prod, static_cast<long double>(a.norm())));
    }
    CHECK_THROWS_AS(cyclo_pow(CycloInt(2), -1), DomainError);
    CycloInt u = w(1) + w(-1) + CycloInt(1);
    if (u.norm() == 1 || u.norm() == -1) CHECK(cyclo_pow(u, -1) * u == CycloInt(1));
    CycloInt silver = CycloInt(1) + CycloInt::sqrt2();
    CHECK(cyclo_pow(silver, -3) * cyclo_pow(silver, 3) == CycloInt(1));
    for (int k = -20; k <= 20; ++k) CHECK(cyclo_pow(w(1), k) == w(k));
}

TEST_CASE("checked arithmetic") {
    CHECK_THROWS_AS(chk::add(INT64_MAX, 1), OverflowError);
    CHECK_THROWS_AS(chk::mul(INT64_MAX / 2 + 1, 2), OverflowError);
    CHECK(chk::mod(-3, 16) == 13);
    CHECK_THROWS_AS(cyclo_pow(CycloInt(3), 60), OverflowError);
}

TEST_CASE("gf2 affine solutions") {
    auto s0 = gf2_solve_affine(BitMatrix(2, 2), BitVec(2));
    REQUIRE(s0.particular);
    CHECK(s0.particular->to_string() == "00");
    CHECK(s0.kernel_basis.size() == 2);

    auto s1 = gf2_solve_affine(BitMatrix::identity(2), BitVec::from_string("11"));
    REQUIRE(s1.particular);
    CHECK(s1.particular->to_string() == "11");
    CHECK(s1.kernel_basis.empty());

    auto s2 = gf2_solve_affine(BitMatrix::from_rows({"01", "10"}), BitVec::from_string("10"));
    REQUIRE(s2.particular);
    CHECK(s2.particular->to_string() == "01");
    CHECK(s2.kernel_basis.empty());

    CHECK_THROWS_AS(gf2_solve_affine(BitMatrix(2, 3), BitVec(3)), ValidationError);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
        BitMatrix A(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) A.set(i, j, rng() & 1u);
        BitVec b = BitVec::from_mask(rng() & ((1u << r) - 1), r);
        std::set<std::uint64_t> brute;
        for (std::uint64_t x = 0; x < (1u << c); ++x)
            if (A.apply(BitVec::from_mask(x, c)) == b) brute.insert(x);
        auto sol = gf2_solve_affine(A, b);
        CHECK(sol.particular.has_value() == !brute.empty());
        if (!sol.particular) continue;
        std::set<std::uint64_t> generated;
        std::size_t k = sol.kernel_basis.size();
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
            std::uint64_t x = sol.particular->to_mask();
            for (std::size_t i = 0; i < k; ++i)
                if ((s >> i) & 1u) x ^= sol.kernel_basis[i].to_mask();
            generated.insert(x);
        }
        CHECK(generated == brute);
    }
}

TEST_CASE("bit matrix rank matches kernel dimension") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + static_cast<int>(rng() % 8);
        BitMatrix A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A.set(i, j, rng() & 1u);
        CHECK(A.rank() + static_cast<int>(gf2_kernel(A).size()) == n);
    }
}

TEST_CASE("signature examples") {
    CHECK(signature(IntMatrix::diagonal({3, -2, 0})) == 0);
    CHECK(signature(IntMatrix{{0, 1}, {1, 0}}) == 0);
    CHECK(signature(IntMatrix{{2, 1}, {1, 1}}) == 2);
    CHECK_THROWS_AS(signature(IntMatrix{{0, 1}, {2, 0}}), ValidationError);
}

TEST_CASE("signature and determinant against characteristic polynomial") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + static_cast<int>(rng() % 7);
        IntMatrix m = random_symmetric(rng, n, 9);
        CHECK(signature(m) == oracle::signature(m));
        CHECK(static_cast<oracle::i128>(determinant(m)) == oracle::det(m));
    }
}

TEST_CASE("stable diagonalization examples") {
    IntMatrix d = IntMatrix::diagonal({1, -2});
    auto c = stable_diagonalize(d);
    CHECK(c.stab.empty());
    CHECK(c.D == d);
    CHECK(c.P == IntMatrix::identity(2));

    IntMatrix h{{0, 1}, {1, 0}};
    auto ch = stable_diagonalize(h);
    CHECK(ch.stab.size() == 1);
    IntMatrix ext = oracle::block_sum(h, ch.stab);
    CHECK(oracle::product(oracle::transpose(ch.P), oracle::product(ext, ch.P)) == ch.D);
    CHECK(ch.D.is_diagonal());
    CHECK(oracle::signature(ch.D) == oracle::signature(ext));

    // Discriminant form <2/5> is not realized by any diagonal matrix of determinant -5.
    IntMatrix obstructed{{2, 3}, {3, 2}};
    CHECK(oracle::discriminant_check(obstructed) == oracle::Disc::obstructed);
    CHECK_THROWS_AS(stable_diagonalize(obstructed), NotStablyDiagonalizable);
}

TEST_CASE("certificates are exact when produced") {
    std::mt19937_64 rng(16);
    int produced = 0;
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        IntMatrix m = random_symmetric(rng, n, 4);
        CongruenceCertificate cert;
        try {
            cert = stable_diagonalize(m);
        } catch (const NotStablyDiagonalizable&) {
            CHECK(oracle::discriminant_check(m) != oracle::Disc::realizable);
            continue;
        }
        ++produced;
        IntMatrix ext = oracle::block_sum(m, cert.stab);
        CHECK(oracle::product(oracle::transpose(cert.P), oracle::product(ext, cert.P)) == cert.D);
        CHECK(cert.D.is_diagonal());
        auto dp = oracle::det(cert.P);
        CHECK((dp == 1 || dp == -1));
        CHECK(oracle::signature(cert.D) == oracle::signature(ext));
        CHECK(verify_certificate(m, cert));
        CHECK(oracle::discriminant_check(m) != oracle::Disc::obstructed);
    }
    CHECK(produced > 100);
}

TEST_CASE("tampered certificates are rejected") {
    IntMatrix m{{2, 1}, {1, 2}};
    auto cert = stable_diagonalize(m);
    REQUIRE(verify_certificate(m, cert));
    cert.D(0, 0) += 1;
    CHECK_FALSE(verify_certificate(m, cert));
}

}  // TEST_SUITE
