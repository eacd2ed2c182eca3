#include <doctest.h>

#include <random>

#include "wrp/cyclotomic.hpp"
#include "wrp/field.hpp"

using namespace wrp;

namespace {

CycInt random_cyc(int p, std::mt19937_64& rng) {
    std::vector<BigInt> c;
    for (int i = 0; i < p; ++i) c.push_back(static_cast<int>(rng() % 5) - 2);
    return CycInt::from_coeffs(p, std::move(c));
}

}  // namespace

TEST_CASE("zeta powers multiply by adding exponents") {
    CHECK(CycInt::zeta_pow(5, 1) * CycInt::zeta_pow(5, 4) == CycInt::integer(5, 1));
    CHECK(CycInt::zeta_pow(5, 3) * CycInt::zeta_pow(5, 4) == CycInt::zeta_pow(5, 2));
}

TEST_CASE("the full zeta sum collapses to zero") {
    CycInt s(5);
    for (int i = 0; i < 5; ++i) s = s + CycInt::zeta_pow(5, i);
    CHECK(s.is_zero());
    CHECK(s == CycInt::integer(5, 0));
}

TEST_CASE("the p = 5 Gauss sum squares to 5") {
    // zeta + zeta^4 - zeta^2 - zeta^3, squared by direct polynomial multiplication
    CycInt g = CycInt::zeta_pow(5, 1) + CycInt::zeta_pow(5, 4) - CycInt::zeta_pow(5, 2) - CycInt::zeta_pow(5, 3);
    CHECK(g == gauss_sum_prime(5));
    CHECK(g * g == CycInt::integer(5, 5));
}

TEST_CASE("galois action") {
    CycInt z = CycInt::zeta_pow(5, 1);
    CHECK(z.galois(1) == z);
    CHECK(z.galois(2) == CycInt::zeta_pow(5, 2));
    CHECK_THROWS_AS(z.galois(0), Error);
    CHECK_THROWS_AS(z.galois(10), Error);  // 10 = 0 mod 5

    // sigma_2 negates the p = 5 Gauss sum since eta(2) = -1
    CycInt g = gauss_sum_prime(5);
    CHECK(g.galois(2) == -g);

    // sigma_s . sigma_t = sigma_{st}, and the action is a ring homomorphism
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        CycInt a = random_cyc(5, rng), b = random_cyc(5, rng);
        for (int s = 1; s < 5; ++s) {
            for (int t = 1; t < 5; ++t) CHECK(a.galois(s).galois(t) == a.galois(s * t));
            CHECK((a * b).galois(s) == a.galois(s) * b.galois(s));
            CHECK((a + b).galois(s) == a.galois(s) + b.galois(s));
        }
    }
}

TEST_CASE("Galois twist of the Gauss sum follows the quadratic character") {
    for (int p : {5, 13, 17}) {
        PrimeCharData pcd = PrimeCharData::make(p);
        CycInt g = gauss_sum_prime(p);
        for (int z = 1; z < p; ++z) CHECK(g.galois(z) == (pcd.eta(z) == 1 ? g : -g));
        CHECK(g * g == CycInt::integer(p, pcd.p_star));
    }
}

TEST_CASE("squared magnitude") {
    CHECK(CycInt::zeta_pow(5, 1).mag_squared() == CycInt::integer(5, 1));
    CHECK(CycInt(5).mag_squared() == CycInt::integer(5, 0));
    CHECK(gauss_sum_prime(5).mag_squared() == CycInt::integer(5, 5));
    CHECK(gauss_sum_prime(13).mag_squared() == CycInt::integer(13, 13));
}

TEST_CASE("rational integer detection") {
    CHECK(CycInt::integer(5, 7).as_integer() == BigInt(7));
    CHECK(CycInt::integer(5, -3).as_integer() == BigInt(-3));
    CHECK(!CycInt::zeta_pow(5, 1).as_integer().has_value());
    CHECK(!gauss_sum_prime(5).as_integer().has_value());
    CHECK(CycInt(5).as_integer() == BigInt(0));
}

TEST_CASE("sqrt(p*) powers") {
    CHECK(sqrt_pstar_power(5, 0) == CycInt::integer(5, 1));
    CHECK(sqrt_pstar_power(5, 2) == CycInt::integer(5, 5));
    CHECK(sqrt_pstar_power(13, 2) == CycInt::integer(13, 13));
    CHECK(sqrt_pstar_power(17, 2) == CycInt::integer(17, 17));
    CHECK(sqrt_pstar_power(5, 4) == CycInt::integer(5, 25));
    // odd powers stay proportional to G(eta)
    CycInt g = gauss_sum_prime(5);
    CHECK(sqrt_pstar_power(5, 3) == g * g * g);
    CHECK(sqrt_pstar_power(5, 3) == CycInt::integer(5, 5) * g);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        CycInt a = random_cyc(5, rng), b = random_cyc(5, rng), c = random_cyc(5, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
    std::mt19937_64 rng13(12);
    for (int rep = 0; rep < 20; ++rep) {
        CycInt a = random_cyc(13, rng13), b = random_cyc(13, rng13), c = random_cyc(13, rng13);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("canonicalization is idempotent and equality compares canonical forms") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<BigInt> c;
        for (int i = 0; i < 5; ++i) c.push_back(static_cast<int>(rng() % 9) - 4);
        CycInt raw = CycInt::from_coeffs(5, c, false);
        CycInt once = raw.canon();
        CHECK(once.is_canonical());
        CHECK(once.canon() == once);
        CHECK(once.coeffs()[0] == 0);
        CHECK(raw == once);  // same residue class
    }
}

TEST_CASE("mixed primes are rejected") {
    CHECK_THROWS_AS(CycInt(5) + CycInt(7), Error);
    try {
        CycInt(5) * CycInt(7);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::MixedPrime);
    }
}
