#include <doctest.h>

#include <algorithm>

#include "wrp/code.hpp"

using namespace wrp;

namespace {

struct Built {
    FieldSpec spec;
    PFunction f, g;
    PlateauedProfile pf, pg;
    DefiningSet D;
};

Built build(int m, const char* ftext, const char* gtext, std::optional<std::vector<int>> theta = std::nullopt) {
    Built b{FieldSpec::make(5, m, std::nullopt, std::move(theta)), {}, {}, {}, {}, {}};
    b.f = eval_descriptor(b.spec, parse_descriptor(b.spec, ftext));
    b.g = eval_descriptor(b.spec, parse_descriptor(b.spec, gtext));
    b.pf = classify(b.f);
    b.pg = classify(b.g);
    b.D = build_defining_set(b.f, b.g, b.pf, b.pg);
    return b;
}

}  // namespace

TEST_CASE("defining set of the [104,4,80] pair") {
    Built b = build(2, "x^2", "t^1 x^2 - t^1 x^6");
    CHECK(b.D.n() == 104);
    CHECK(expected_length(b.spec, b.pf, b.pg) == 104);

    // canonical order: strictly increasing key pairs, all satisfying the cut
    auto key = [&](const Column& c) {
        return std::make_pair(b.spec.order_key(c.first), b.spec.order_key(c.second));
    };
    for (std::size_t i = 0; i + 1 < b.D.pairs.size(); ++i) CHECK(key(b.D.pairs[i]) < key(b.D.pairs[i + 1]));
    for (const Column& c : b.D.pairs) {
        CHECK((b.f(c.first) + b.g(c.second)) % 5 == 0);
        CHECK(!(c.first == 0 && c.second == 0));
    }
}

TEST_CASE("misclassified profiles trip the length check") {
    Built b = build(2, "x^2", "t^1 x^2 - t^1 x^6");
    PlateauedProfile wrong = b.pf;
    wrong.epsilon = -wrong.epsilon;  // flips the predicted length
    CHECK_THROWS_AS(build_defining_set(b.f, b.g, wrong, b.pg), Error);
    try {
        build_defining_set(b.f, b.g, wrong, b.pg);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::LengthMismatch);
    }
}

TEST_CASE("codeword weights") {
    Built b = build(2, "x^2", "t^1 x^2 - t^1 x^6");
    CHECK_THROWS_AS(codeword_weight(b.spec, b.D.pairs, 0, 0), Error);
    for (Elem a = 0; a < 10; ++a) {
        for (Elem bb = 0; bb < 10; ++bb) {
            if (a == 0 && bb == 0) continue;
            std::int64_t w = codeword_weight(b.spec, b.D.pairs, a, bb);
            CHECK((w == 80 || w == 100));
            // wt(c(a,b)) = n + 1 - N0
            CHECK(w == b.D.n() + 1 - zero_trace_count_direct(b.f, b.g, a, bb));
        }
    }
}

TEST_CASE("closed-form zero-trace counts agree with brute force") {
    Built b = build(2, "x^2", "t^1 x^2 - t^1 x^6");
    for (Elem a = 0; a < 25; ++a)
        for (Elem bb = 0; bb < 25; ++bb) {
            if (a == 0 && bb == 0) continue;
            CHECK(zero_trace_count_closed(b.spec, b.pf, b.pg, a, bb) == zero_trace_count_direct(b.f, b.g, a, bb));
        }

    // odd s+t pair sampled
    Built b2 = build(3, "x^6 + x^2", "t^1 x^6 + t^3 x^2", std::vector<int>{0, 3, 0});
    for (std::uint64_t k = 0; k < b2.spec.q(); k += 17)
        for (std::uint64_t j = 1; j < b2.spec.q(); j += 23)
            CHECK(zero_trace_count_closed(b2.spec, b2.pf, b2.pg, static_cast<Elem>(k), static_cast<Elem>(j)) ==
                  zero_trace_count_direct(b2.f, b2.g, static_cast<Elem>(k), static_cast<Elem>(j)));
}

TEST_CASE("enumerated distribution matches the published codes") {
    Built b = build(2, "x^2", "t^1 x^2 - t^1 x^6");
    CodeReport rep = weight_distribution(b.spec, b.D.pairs, DistMode::ENUMERATE, &b.pf, &b.pg);
    CHECK(rep.n == 104);
    CHECK(rep.k == 4);
    CHECK(rep.dist == std::map<std::int64_t, std::int64_t>{{0, 1}, {80, 520}, {100, 104}});
    CHECK(rep.d_min == 80);
    CHECK(rep.w_max == 100);

    // by-class agrees with plain enumeration
    CodeReport cls = weight_distribution(b.spec, b.D.pairs, DistMode::BY_CLASS, &b.pf, &b.pg);
    CHECK(cls.dist == rep.dist);
}

TEST_CASE("prediction equals enumeration on the golden pair and lists both coinciding branches") {
    Built b = build(2, "x^2", "t^1 x^2 - t^1 x^6");
    Prediction pred = predicted_distribution(b.spec, b.pf, b.pg);
    CodeReport rep = weight_distribution(b.spec, b.D.pairs, DistMode::ENUMERATE, &b.pf, &b.pg);
    CHECK(pred.report.dist == rep.dist);
    CHECK(pred.report.n == rep.n);
    REQUIRE(pred.branches.size() == 2);  // l = 2 = (p-1)/2 at p = 5
    CHECK(pred.branches[0] == TableBranch::EvenUnbHalf);
    CHECK(pred.branches[1] == TableBranch::EvenUnbTwo5);
}

TEST_CASE("the full-index branch: l_f = p-1 pairs") {
    // f = Tr(x^4 + c x^8) has homogeneity 4 and dual index 4
    FieldSpec spec = FieldSpec::make(5, 2);
    Elem c11 = spec.from_rep({1, 2});
    PFunction f = eval_descriptor(spec, {{1, 4}, {c11, 8}});
    PlateauedProfile pf = classify(f);
    REQUIRE(pf.family == Family::WRP);
    CHECK(pf.s == 0);
    CHECK(pf.epsilon == 1);
    CHECK(pf.h == 4);
    CHECK(pf.l == 4);

    SUBCASE("odd s+t against a 1-plateaued partner") {
        PFunction g = eval_descriptor(spec, parse_descriptor(spec, "x^2 + 4 x^6"));
        PlateauedProfile pg = classify(g);
        REQUIRE(pg.s == 1);
        REQUIRE(pg.l == 2);
        DefiningSet D = build_defining_set(f, g, pf, pg);
        CHECK(D.n() == 124);
        Prediction pred = predicted_distribution(spec, pf, pg);
        REQUIRE(pred.branches == std::vector<TableBranch>{TableBranch::OddFull});
        CodeReport rep = weight_distribution(spec, D.pairs, DistMode::ENUMERATE, &pf, &pg);
        CHECK(rep.dist ==
              std::map<std::int64_t, std::int64_t>{{0, 1}, {80, 44}, {100, 540}, {110, 32}, {120, 8}});
        CHECK(pred.report.dist == rep.dist);
    }

    SUBCASE("even s+t against a bent partner") {
        PFunction g = eval_descriptor(spec, parse_descriptor(spec, "x^2"));
        PlateauedProfile pg = classify(g);
        DefiningSet D = build_defining_set(f, g, pf, pg);
        Prediction pred = predicted_distribution(spec, pf, pg);
        REQUIRE(pred.branches == std::vector<TableBranch>{TableBranch::EvenUnbFull});
        CodeReport rep = weight_distribution(spec, D.pairs, DistMode::ENUMERATE, &pf, &pg);
        CHECK(pred.report.dist == rep.dist);
    }
}

TEST_CASE("unsupported pairs are rejected") {
    FieldSpec spec = FieldSpec::make(5, 3);
    PlateauedProfile nwr = classify(eval_descriptor(spec, parse_descriptor(spec, "x^13")));
    PlateauedProfile quad = classify(eval_descriptor(spec, parse_descriptor(spec, "x^2")));
    CHECK_THROWS_AS(predicted_distribution(spec, nwr, quad), Error);
    try {
        applicable_branches(spec, nwr, quad);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnsupportedIndexPair);
    }

    // an index outside {2, (p-1)/2, p-1} at p = 13 (synthetic profile)
    FieldSpec f13_3 = FieldSpec::make(13, 1);
    PlateauedProfile a, bq;
    a.s = 0;
    a.family = Family::WRP;
    a.weakly_regular = true;
    a.epsilon = 1;
    a.l = std::nullopt;  // no valid dual index found
    a.dual.assign(13, 0);
    bq = a;
    bq.l = 6;  // (p-1)/2
    CHECK_THROWS_AS(applicable_branches(f13_3, a, bq), Error);

    // a pair that only the odd l_f = 2, p = 5 mod 8 table describes has no
    // stated minimality threshold
    PlateauedProfile c = bq, d = bq;
    c.l = 2;
    c.s = 1;
    CHECK(applicable_branches(f13_3, c, d) == std::vector<TableBranch>{TableBranch::OddTwo5});
    CHECK_THROWS_AS(minimality_threshold(f13_3, c, d), Error);
}

TEST_CASE("puncturing") {
    Built b = build(2, "x^2", "t^1 x^2 - t^1 x^6");
    PuncturedSet P = puncture(b.D);
    CHECK(P.reps.size() == 26);

    // representatives are orbit minima, pairwise in distinct orbits
    for (const Column& c : P.reps) {
        bool is_min = true;
        for (int z = 2; z < 5; ++z) {
            Column w{b.spec.mul(b.spec.from_subfield(z), c.first), b.spec.mul(b.spec.from_subfield(z), c.second)};
            auto key = [&](const Column& u) {
                return std::make_pair(b.spec.order_key(u.first), b.spec.order_key(u.second));
            };
            if (key(w) < key(c)) is_min = false;
        }
        CHECK(is_min);
    }

    // punctured weights are the full weights divided by p-1, codeword by codeword
    for (Elem a = 0; a < 25; a += 3)
        for (Elem bb = 1; bb < 25; bb += 4)
            CHECK(codeword_weight(b.spec, b.D.pairs, a, bb) ==
                  4 * codeword_weight(b.spec, P.reps, a, bb));

    CodeReport full = weight_distribution(b.spec, b.D.pairs, DistMode::ENUMERATE, &b.pf, &b.pg);
    CodeReport derived = derive_punctured_report(b.spec, full);
    CodeReport direct = weight_distribution(b.spec, P.reps, DistMode::ENUMERATE, &b.pf, &b.pg);
    CHECK(derived.dist == direct.dist);
    CHECK(derived.n == 26);
    CHECK(direct.dist == std::map<std::int64_t, std::int64_t>{{0, 1}, {20, 520}, {25, 104}});
}

TEST_CASE("mixed homogeneity breaks the orbit partition") {
    FieldSpec spec = FieldSpec::make(5, 2);
    PFunction f = eval_descriptor(spec, parse_descriptor(spec, "x^2"));           // h = 2
    Elem c11 = spec.from_rep({1, 2});
    PFunction g = eval_descriptor(spec, {{1, 4}, {c11, 8}});                      // h = 4
    DefiningSet D;
    D.spec = &spec;
    for (std::uint64_t kx = 0; kx < spec.q(); ++kx)
        for (std::uint64_t ky = 0; ky < spec.q(); ++ky) {
            Elem x = spec.element_by_key(kx), y = spec.element_by_key(ky);
            if ((x || y) && (f(x) + g(y)) % 5 == 0) D.pairs.emplace_back(x, y);
        }
    CHECK_THROWS_AS(puncture(D), Error);
    try {
        puncture(D);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadOrbit);
    }
}

TEST_CASE("dual distance detection") {
    Built b = build(2, "x^2", "t^1 x^2 - t^1 x^6");
    CHECK(dual_distance_bound(b.spec, b.D.pairs) == 2);  // scalar-multiple columns exist
    PuncturedSet P = puncture(b.D);
    CHECK(dual_distance_bound(b.spec, P.reps) == 3);
    CHECK(dual_distance_at_least_3(b.spec, P.reps));

    std::vector<Column> prop{{1, 2}, {2, 4}};  // (x, y) and (2x, 2y)
    CHECK(dual_distance_bound(b.spec, prop) == 2);
    std::vector<Column> with_zero{{1, 2}, {0, 0}};
    CHECK(dual_distance_bound(b.spec, with_zero) == 1);
}

TEST_CASE("dimension is measured, not assumed") {
    Built b = build(2, "x^2", "t^1 x^2 - t^1 x^6");
    CHECK(measured_dimension(b.spec, b.D.pairs) == 4);
    // columns living on one axis span only half the space
    std::vector<Column> half;
    for (Elem x = 1; x < 25; ++x) half.emplace_back(x, 0);
    CHECK(measured_dimension(b.spec, half) == 2);
}

TEST_CASE("minimality certificates") {
    // the golden pair sits exactly on the Ashikhmin-Barg boundary
    Built b = build(2, "x^2", "t^1 x^2 - t^1 x^6");
    CodeReport rep = weight_distribution(b.spec, b.D.pairs, DistMode::ENUMERATE, &b.pf, &b.pg);
    CHECK(!certify_minimal(b.spec, rep));
    CHECK(ab_ratio_on_boundary(b.spec, rep));
    CHECK(minimality_threshold(b.spec, b.pf, b.pg) == false);  // eps = -1 needs gamma >= 6

    // a pair with matching signs clears both the threshold and the AB bound
    Built same = build(2, "x^2", "x^2");
    CodeReport rep2 = weight_distribution(same.spec, same.D.pairs, DistMode::ENUMERATE, &same.pf, &same.pg);
    CHECK(rep2.n == 144);
    CHECK(rep2.dist == std::map<std::int64_t, std::int64_t>{{0, 1}, {100, 144}, {120, 480}});
    CHECK(certify_minimal(same.spec, rep2));
    CHECK(minimality_threshold(same.spec, same.pf, same.pg) == true);
    // and the exhaustive cover-relation scan confirms the certificate
    CHECK(minimal_exhaustive(same.spec, same.D.pairs));
}

TEST_CASE("Griesmer certificates") {
    CHECK(certify_griesmer(5, 26, 4, 20));   // 20 + 4 + 1 + 1
    CHECK(!certify_griesmer(5, 104, 4, 80)); // 80 + 16 + 4 + 1 = 101
    CHECK(certify_griesmer(5, 1, 1, 1));
    CHECK(griesmer_sum(5, 20, 4) == 26);
    CHECK(griesmer_sum(5, 80, 4) == 101);

    Built b = build(2, "x^2", "t^1 x^2 - t^1 x^6");
    PuncturedSet P = puncture(b.D);
    CodeReport prep = weight_distribution(b.spec, P.reps, DistMode::ENUMERATE, &b.pf, &b.pg);
    attach_certificates(b.spec, prep, P.reps);
    CHECK(prep.griesmer_optimal);
    CHECK(prep.griesmer_gap == 0);
    CHECK(prep.dual_d_ge_3);
    CodeReport full = weight_distribution(b.spec, b.D.pairs, DistMode::ENUMERATE, &b.pf, &b.pg);
    attach_certificates(b.spec, full, b.D.pairs);
    CHECK(full.griesmer_gap == 3);
    CHECK(!full.griesmer_optimal);
    CHECK(!full.dual_d_ge_3);
}

TEST_CASE("degenerate profiles stay consistent end to end") {
    // pairing with the zero function: every table column applies and they
    // must agree with enumeration
    FieldSpec spec = FieldSpec::make(5, 2);
    PFunction z = eval_descriptor(spec, {});
    PFunction g = eval_descriptor(spec, parse_descriptor(spec, "x^2"));
    PlateauedProfile pz = classify(z), pg = classify(g);
    REQUIRE(pz.l_ambiguous);
    DefiningSet D = build_defining_set(z, g, pz, pg);
    Prediction pred = predicted_distribution(spec, pz, pg);
    CHECK(pred.branches.size() == 3);
    CodeReport rep = weight_distribution(spec, D.pairs, DistMode::ENUMERATE, &pz, &pg);
    CHECK(pred.report.dist == rep.dist);

    Prediction swapped = predicted_distribution(spec, pg, pz);
    CodeReport rep2 = weight_distribution(spec, build_defining_set(g, z, pg, pz).pairs, DistMode::ENUMERATE, &pg, &pz);
    CHECK(swapped.report.dist == rep2.dist);
}
