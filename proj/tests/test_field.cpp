#include <doctest.h>

#include <set>

#include "wrp/field.hpp"

using namespace wrp;

TEST_CASE("prime field construction picks theta = 2 for F_5") {
    FieldSpec f5 = FieldSpec::make(5, 1);
    CHECK(f5.q() == 5);
    CHECK(f5.theta() == 2);
    // order of 2 mod 5 is 4, by direct powering
    Elem x = 1;
    int order = 0;
    do {
        x = f5.mul(x, 2);
        ++order;
    } while (x != 1);
    CHECK(order == 4);
}

TEST_CASE("composite characteristic is rejected") {
    CHECK_THROWS_AS(FieldSpec::make(4, 1), Error);
    CHECK_THROWS_AS(FieldSpec::make(9, 1), Error);
    try {
        FieldSpec::make(4, 1);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrime);
    }
}

TEST_CASE("supplied modulus is verified") {
    // x^2 + x + 1 has no root mod 5 (discriminant -3 = 2 is a non-square),
    // so it is a valid quadratic modulus
    for (int x = 0; x < 5; ++x) CHECK((x * x + x + 1) % 5 != 0);
    FieldSpec ok = FieldSpec::make(5, 2, std::vector<int>{1, 1, 1});
    CHECK(ok.q() == 25);
    // x^2 + 1 = (x-2)(x+2) mod 5
    CHECK_THROWS_AS(FieldSpec::make(5, 2, std::vector<int>{1, 0, 1}), Error);
    try {
        FieldSpec::make(5, 2, std::vector<int>{1, 0, 1});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Reducible);
    }
    // wrong degree
    CHECK_THROWS_AS(FieldSpec::make(5, 2, std::vector<int>{1, 1, 1, 1}), Error);
}

TEST_CASE("deterministic defaults at p = 5") {
    CHECK(FieldSpec::make(5, 2).modulus() == std::vector<int>{2, 0, 1});
    CHECK(FieldSpec::make(5, 2).rep(FieldSpec::make(5, 2).theta()) == std::vector<int>{1, 1});
    CHECK(FieldSpec::make(5, 3).modulus() == std::vector<int>{1, 1, 0, 1});
    CHECK(FieldSpec::make(5, 4).modulus() == std::vector<int>{2, 0, 0, 0, 1});
}

TEST_CASE("theta override is verified for primitivity") {
    FieldSpec f = FieldSpec::make(5, 3, std::nullopt, std::vector<int>{0, 3, 0});
    CHECK(f.rep(f.theta()) == std::vector<int>{0, 3, 0});
    // 1 generates nothing
    CHECK_THROWS_AS(FieldSpec::make(5, 3, std::nullopt, std::vector<int>{1, 0, 0}), Error);
    // x has order 8 < 24 in F_5[x]/(x^2+2)
    CHECK_THROWS_AS(FieldSpec::make(5, 2, std::nullopt, std::vector<int>{0, 1}), Error);
}

TEST_CASE("trace basics") {
    FieldSpec f25 = FieldSpec::make(5, 2);
    CHECK(f25.trace(f25.from_subfield(1)) == 2);  // m * 1 mod p
    CHECK(f25.trace(0) == 0);

    // trace of the class of x equals minus the second-highest modulus
    // coefficient; the designated theta is cross-checked against the direct
    // Frobenius orbit sum
    FieldSpec f125 = FieldSpec::make(5, 3);
    int c2 = f125.modulus()[2];
    Elem cls_x = f125.from_rep({0, 1, 0});
    CHECK(f125.trace(cls_x) == (5 - c2) % 5);
    Elem th = f125.theta();
    Elem orbit_sum = f125.add(th, f125.add(f125.pow(th, 5), f125.pow(th, 25)));
    CHECK(f125.trace(th) == f125.to_subfield(orbit_sum));
}

TEST_CASE("trace is F_p-linear and Frobenius invariant") {
    FieldSpec f = FieldSpec::make(5, 2);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (Elem x = 0; x < 25; ++x)
                for (Elem y = 0; y < 25; ++y) {
                    Elem lhs = f.add(f.mul(f.from_subfield(a), x), f.mul(f.from_subfield(b), y));
                    CHECK(f.trace(lhs) == (a * f.trace(x) + b * f.trace(y)) % 5);
                }
    FieldSpec f4 = FieldSpec::make(5, 4);
    for (std::uint64_t x = 0; x < f4.q(); ++x)
        CHECK(f4.trace(f4.pow(static_cast<Elem>(x), 5)) == f4.trace(static_cast<Elem>(x)));
}

TEST_CASE("quadratic character of the extension") {
    FieldSpec f = FieldSpec::make(5, 2);
    CHECK(f.quad_char(0) == 0);
    CHECK(f.quad_char(f.mul(f.theta(), f.theta())) == 1);
    CHECK(f.quad_char(f.theta()) == -1);
    // prime-subfield elements are squares in F_{p^2}; verified by solving y^2 = c
    for (int c = 1; c < 5; ++c) {
        bool has_root = false;
        for (Elem y = 1; y < 25; ++y)
            if (f.mul(y, y) == f.from_subfield(c)) has_root = true;
        CHECK(has_root);
        CHECK(f.quad_char(f.from_subfield(c)) == 1);
    }
    // multiplicative on F_q^*
    for (Elem x = 1; x < 25; ++x)
        for (Elem y = 1; y < 25; ++y) CHECK(f.quad_char(f.mul(x, y)) == f.quad_char(x) * f.quad_char(y));
}

TEST_CASE("cyclotomic classes") {
    FieldSpec f5 = FieldSpec::make(5, 1);
    CHECK(f5.cyclotomic_class(4, 2) == std::vector<Elem>{4});
    CHECK(f5.cyclotomic_class(2, 0) == std::vector<Elem>{1, 4});
    FieldSpec f25 = FieldSpec::make(5, 2);
    CHECK(f25.cyclotomic_class(3, 0).size() == 8);
    CHECK_THROWS_AS(f25.cyclotomic_class(5, 0), Error);  // 5 does not divide 24
    CHECK_THROWS_AS(f25.cyclotomic_class(3, 3), Error);

    // classes partition F_q^*
    for (std::uint64_t N : {2ull, 3ull, 4ull, 6ull}) {
        std::set<Elem> all;
        for (std::uint64_t i = 0; i < N; ++i) {
            auto cls = f25.cyclotomic_class(N, i);
            CHECK(cls.size() == (f25.q() - 1) / N);
            for (Elem e : cls) CHECK(all.insert(e).second);
        }
        CHECK(all.size() == f25.q() - 1);
        CHECK(all.count(0) == 0);
    }
}

TEST_CASE("prime character data") {
    PrimeCharData d5 = PrimeCharData::make(5);
    CHECK(d5.sq == std::vector<int>{1, 4});
    CHECK(d5.nsq == std::vector<int>{2, 3});
    CHECK(d5.p_star == 5);
    CHECK(d5.eta(-1) == 1);  // p = 1 mod 4
    CHECK(d5.eta(2) == -1);
    PrimeCharData d17 = PrimeCharData::make(17);
    CHECK(d17.eta(2) == 1);
    CHECK(d17.p_star == 17);
    PrimeCharData d7 = PrimeCharData::make(7);  // p = 3 mod 4 is allowed here
    CHECK(d7.p_star == -7);
    CHECK_THROWS_AS(PrimeCharData::make(8), Error);
}

TEST_CASE("element text round trip") {
    FieldSpec f = FieldSpec::make(5, 2);
    for (Elem e = 0; e < 25; ++e) CHECK(f.parse_element(f.format(e)) == e);
    CHECK(f.parse_element("0") == 0);
    CHECK(f.parse_element("t^0") == 1);
    CHECK(f.parse_element("3") == f.from_subfield(3));
    CHECK(f.parse_element("-1") == f.from_subfield(4));
    CHECK_THROWS_AS(f.parse_element("t^x"), Error);
    CHECK_THROWS_AS(f.parse_element("zz"), Error);
}

TEST_CASE("field arithmetic sanity") {
    FieldSpec f = FieldSpec::make(5, 3);
    for (std::uint64_t k = 1; k < f.q(); k += 11) {
        Elem x = static_cast<Elem>(k);
        CHECK(f.mul(x, f.inv(x)) == 1);
        CHECK(f.add(x, f.neg(x)) == 0);
        CHECK(f.pow(x, static_cast<std::int64_t>(f.q()) - 1) == 1);
    }
    // order keys traverse 0 first, then theta powers
    CHECK(f.order_key(0) == 0);
    CHECK(f.order_key(1) == 1);
    CHECK(f.order_key(f.theta()) == 2);
    CHECK(f.element_by_key(2) == f.theta());
}
