#include <doctest.h>

#include <numeric>

#include "wrp/counting.hpp"

using namespace wrp;

namespace {

struct Pair {
    FieldSpec spec;
    PlateauedProfile pf, pg;
};

Pair example3() {
    FieldSpec spec = FieldSpec::make(5, 2);
    PFunction f = eval_descriptor(spec, parse_descriptor(spec, "x^2"));
    PFunction g = eval_descriptor(spec, parse_descriptor(spec, "t^1 x^2 - t^1 x^6"));
    PlateauedProfile pf = classify(f), pg = classify(g);
    return {std::move(spec), std::move(pf), std::move(pg)};
}

Pair example2() {
    FieldSpec spec = FieldSpec::make(5, 3, std::nullopt, std::vector<int>{0, 3, 0});
    PFunction f = eval_descriptor(spec, parse_descriptor(spec, "x^6 + x^2"));
    PFunction g = eval_descriptor(spec, parse_descriptor(spec, "t^1 x^6 + t^3 x^2"));
    PlateauedProfile pf = classify(f), pg = classify(g);
    return {std::move(spec), std::move(pf), std::move(pg)};
}

}  // namespace

TEST_CASE("dual level counts match the closed form") {
    {
        auto [spec, pf, pg] = example3();
        // m - s even branch: N(0) = 5 + 4 eps, N(c) = 5 - eps
        CHECK(dual_level_count(pf, 0) == 1);
        CHECK(dual_level_count(pg, 0) == 9);
        for (int c = 0; c < 5; ++c) {
            CHECK(dual_level_count(pf, c) == dual_level_closed(spec, pf, c));
            CHECK(dual_level_count(pg, c) == dual_level_closed(spec, pg, c));
        }
        auto nf = dual_levels(spec, pf);
        CHECK(std::accumulate(nf.begin(), nf.end(), std::int64_t{0}) == 25);  // p^{m-s}
    }
    {
        auto [spec, pf, pg] = example2();
        // g has m - t odd: the eta(c)-dependent branch
        CHECK(dual_level_count(pg, 0) == dual_level_closed(spec, pg, 0));
        for (int c = 1; c < 5; ++c) CHECK(dual_level_count(pg, c) == dual_level_closed(spec, pg, c));
        auto ng = dual_levels(spec, pg);
        CHECK(std::accumulate(ng.begin(), ng.end(), std::int64_t{0}) == 25);
        for (int c = 0; c < 5; ++c) CHECK(dual_level_count(pf, c) == dual_level_closed(spec, pf, c));
    }
    {
        // odd m - s over the prime field: quadratic bent at p = 13
        FieldSpec f13 = FieldSpec::make(13, 1);
        PlateauedProfile prof = classify(eval_descriptor(f13, parse_descriptor(f13, "x^2")));
        CHECK(prof.s == 0);
        for (int c = 0; c < 13; ++c) CHECK(dual_level_count(prof, c) == dual_level_closed(f13, prof, c));
    }
    {
        // p = 3 mod 4 exercises the signed sqrt(p*) branch of the closed form
        FieldSpec f7 = FieldSpec::make(7, 1);
        PlateauedProfile prof = classify(eval_descriptor(f7, parse_descriptor(f7, "x^2")));
        CHECK(prof.family == Family::WRP);
        for (int c = 0; c < 7; ++c) CHECK(dual_level_count(prof, c) == dual_level_closed(f7, prof, c));
        for (int c = 0; c < 7; ++c) CHECK(joint_count(f7, prof, prof, c) == joint_closed(f7, prof, prof, c));
        CHECK_THROWS_AS(border_pair_closed(f7, prof, prof, Residue::SQ), Error);
    }
}

TEST_CASE("joint dual counts") {
    auto [spec, pf, pg] = example3();
    CHECK(joint_count(spec, pf, pg, 0) == 105);
    std::int64_t total = 0;
    for (int c = 0; c < 5; ++c) {
        CHECK(joint_count(spec, pf, pg, c) == joint_closed(spec, pf, pg, c));
        total += joint_count(spec, pf, pg, c);
    }
    CHECK(total == 625);  // p^{m-s} p^{m-t}

    auto ex2 = example2();
    for (int c = 0; c < 5; ++c)
        CHECK(joint_count(ex2.spec, ex2.pf, ex2.pg, c) == joint_closed(ex2.spec, ex2.pf, ex2.pg, c));
}

TEST_CASE("border pair counts need odd s+t") {
    auto ex3 = example3();
    CHECK_THROWS_AS(border_pair_count(ex3.spec, ex3.pf, ex3.pg, Residue::SQ), Error);
    try {
        border_pair_closed(ex3.spec, ex3.pf, ex3.pg, Residue::SQ);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParityMismatch);
    }

    auto ex2 = example2();  // s = 0, t = 1
    std::int64_t bsq = border_pair_count(ex2.spec, ex2.pf, ex2.pg, Residue::SQ);
    std::int64_t bnsq = border_pair_count(ex2.spec, ex2.pf, ex2.pg, Residue::NSQ);
    CHECK(bsq == border_pair_closed(ex2.spec, ex2.pf, ex2.pg, Residue::SQ));
    CHECK(bnsq == border_pair_closed(ex2.spec, ex2.pf, ex2.pg, Residue::NSQ));
    CHECK(bsq + bnsq <= 25 * 125);

    // swapped parity pair exercises the other closed-form branch
    std::int64_t swapped = border_pair_closed(ex2.spec, ex2.pg, ex2.pf, Residue::SQ);
    CHECK(swapped == border_pair_count(ex2.spec, ex2.pg, ex2.pf, Residue::SQ));
}

TEST_CASE("special counts against their closed forms") {
    auto ex2 = example2();
    for (SpecialCount k : {SpecialCount::E1, SpecialCount::E2, SpecialCount::E3, SpecialCount::E4, SpecialCount::F1,
                           SpecialCount::F3, SpecialCount::F5})
        CHECK(special_count(ex2.spec, ex2.pf, ex2.pg, k) == special_closed(ex2.spec, ex2.pf, ex2.pg, k));

    auto ex3 = example3();
    for (SpecialCount k : {SpecialCount::E1, SpecialCount::E2, SpecialCount::E3, SpecialCount::E4, SpecialCount::F1,
                           SpecialCount::F3, SpecialCount::F5})
        CHECK(special_count(ex3.spec, ex3.pf, ex3.pg, k) == special_closed(ex3.spec, ex3.pf, ex3.pg, k));

    // E3 + E4 exhausts the pairs with exactly one vanishing dual
    auto nf = dual_levels(ex3.spec, ex3.pf);
    auto ng = dual_levels(ex3.spec, ex3.pg);
    std::int64_t border = 0;
    for (int u = 1; u < 5; ++u) border += nf[0] * ng[u] + nf[u] * ng[0];
    CHECK(special_count(ex3.spec, ex3.pf, ex3.pg, SpecialCount::E3) +
              special_count(ex3.spec, ex3.pf, ex3.pg, SpecialCount::E4) ==
          border);

    // the quartic-class count is exactly half of F3 at p = 5 mod 8
    CHECK(special_count(ex3.spec, ex3.pf, ex3.pg, SpecialCount::F5) * 2 ==
          special_count(ex3.spec, ex3.pf, ex3.pg, SpecialCount::F3));
}

TEST_CASE("quartic classes") {
    CHECK(quartic_class_two(5) == std::vector<int>{4});
    CHECK(quartic_class_two(13) == std::vector<int>{4, 10, 12});
    CHECK(in_quartic_class_two(5, -1));
    CHECK(!in_quartic_class_two(5, 1));
    CHECK(!in_quartic_class_two(5, 0));
    // members are squares that are not fourth powers
    for (int c : quartic_class_two(17)) {
        PrimeCharData pcd = PrimeCharData::make(17);
        CHECK(pcd.eta(c) == 1);
        bool fourth = false;
        for (int x = 1; x < 17; ++x)
            if (x * x % 17 * x % 17 * x % 17 == c) fourth = true;
        CHECK(!fourth);
    }
}

TEST_CASE("counting requires classified profiles") {
    FieldSpec spec = FieldSpec::make(5, 3);
    PlateauedProfile nwr = classify(eval_descriptor(spec, parse_descriptor(spec, "x^13")));
    CHECK(nwr.family == Family::NEITHER);
    CHECK_THROWS_AS(dual_level_count(nwr, 0), Error);
}
