#include "wrp/code.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

namespace wrp {

namespace {

Frac spp(int p, int k) {
    require(k % 2 == 0, Errc::Internal, "odd sqrt-p exponent reached a closed form");
    unsigned a = static_cast<unsigned>(k < 0 ? -k : k) / 2;
    BigInt v = big_pow(BigInt(p), a);
    return k >= 0 ? Frac(v) : Frac(BigInt(1), v);
}

BigInt q_squared(const FieldSpec& spec) { return big_pow(BigInt(spec.p()), static_cast<unsigned>(2 * spec.m())); }

bool in_support(const PlateauedProfile& prof, Elem a) {
    return std::binary_search(prof.support.begin(), prof.support.end(), a);
}

void check_pair_contract(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg) {
    require(spec.p() % 4 == 1, Errc::UnsupportedIndexPair, "code constructions fix p = 1 mod 4");
    require(pf.family != Family::NEITHER && pg.family != Family::NEITHER, Errc::UnsupportedIndexPair,
            "both functions must classify as WRP or WRPB");
    require(pf.family == pg.family, Errc::UnsupportedIndexPair, "mixed WRP/WRPB pairs are not covered");
    const int half = (spec.p() - 1) / 2;
    bool g_ok = pg.l_ambiguous || (pg.l && *pg.l == half);
    require(g_ok, Errc::UnsupportedIndexPair, "the g-side index must be (p-1)/2");
    bool f_ok = pf.l_ambiguous || (pf.l && (*pf.l == 2 || *pf.l == half || *pf.l == spec.p() - 1));
    require(f_ok, Errc::UnsupportedIndexPair, "the f-side index must lie in {2, (p-1)/2, p-1}");
}

}  // namespace

std::int64_t CodeReport::frequency_sum() const {
    std::int64_t s = 0;
    for (auto& [w, c] : dist) s += c;
    return s;
}

void CodeReport::finalize_extremes() {
    d_min = 0;
    w_max = 0;
    for (auto& [w, c] : dist) {
        if (w == 0 || c == 0) continue;
        if (d_min == 0 || w < d_min) d_min = w;
        if (w > w_max) w_max = w;
    }
}

std::optional<std::int64_t> expected_length(const FieldSpec& spec, const PlateauedProfile& pf,
                                            const PlateauedProfile& pg) {
    if (pf.family == Family::NEITHER || pg.family == Family::NEITHER || pf.family != pg.family)
        return std::nullopt;
    const int p = spec.p();
    const int st = pf.s + pg.s;
    Frac n = Frac(big_pow(BigInt(p), static_cast<unsigned>(2 * spec.m() - 1))) - Frac(1);
    if (pf.family == Family::WRP && st % 2 == 0) {
        int tau = 2 * spec.m() + st;
        n = n + Frac(static_cast<long long>(p - 1) * pf.epsilon * pg.epsilon) * spp(p, tau - 2);
    }
    return to_i64(n.as_integer("defining-set length"), "defining-set length");
}

DefiningSet build_defining_set(const PFunction& f, const PFunction& g, const PlateauedProfile& pf,
                               const PlateauedProfile& pg) {
    const FieldSpec& spec = *f.spec;
    require(g.spec == f.spec, Errc::MixedPrime, "f and g must live on the same field");
    const int p = spec.p();
    const std::uint64_t q = spec.q();
    DefiningSet D;
    D.spec = &spec;
    for (std::uint64_t kx = 0; kx < q; ++kx) {
        Elem x = spec.element_by_key(kx);
        int fx = f.values[x];
        for (std::uint64_t ky = 0; ky < q; ++ky) {
            Elem y = spec.element_by_key(ky);
            if (x == 0 && y == 0) continue;
            if ((fx + g.values[y]) % p == 0) D.pairs.emplace_back(x, y);
        }
    }
    if (auto want = expected_length(spec, pf, pg)) {
        if (*want != D.n())
            fail(Errc::LengthMismatch, "defining set has " + std::to_string(D.n()) + " pairs, classified profile predicts " +
                                           std::to_string(*want));
    }
    return D;
}

std::int64_t codeword_weight(const FieldSpec& spec, std::span<const Column> cols, Elem a, Elem b) {
    require(!(a == 0 && b == 0), Errc::ZeroPair, "codeword index (0,0) is the zero word");
    const std::uint64_t q = spec.q();
    // one trace row per operand makes the scan two lookups per column
    static thread_local std::vector<std::int8_t> ta, tb;
    ta.assign(q, 0);
    tb.assign(q, 0);
    for (std::uint64_t x = 0; x < q; ++x) {
        ta[x] = static_cast<std::int8_t>(spec.trace_mul(a, static_cast<Elem>(x)));
        tb[x] = static_cast<std::int8_t>(spec.trace_mul(b, static_cast<Elem>(x)));
    }
    const int p = spec.p();
    std::int64_t zero = 0;
    for (const Column& c : cols) zero += (ta[c.first] + tb[c.second]) % p == 0;
    return static_cast<std::int64_t>(cols.size()) - zero;
}

std::int64_t zero_trace_count_direct(const PFunction& f, const PFunction& g, Elem a, Elem b) {
    const FieldSpec& spec = *f.spec;
    const int p = spec.p();
    const std::uint64_t q = spec.q();
    std::int64_t n0 = 0;
    for (std::uint64_t x = 0; x < q; ++x) {
        int fx = f.values[x];
        int tax = spec.trace_mul(a, static_cast<Elem>(x));
        for (std::uint64_t y = 0; y < q; ++y) {
            if ((fx + g.values[y]) % p != 0) continue;
            if ((tax + spec.trace_mul(b, static_cast<Elem>(y))) % p == 0) ++n0;
        }
    }
    return n0;
}

std::int64_t zero_trace_count_closed(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg,
                                     Elem a, Elem b) {
    require(!(a == 0 && b == 0), Errc::ZeroPair, "(a, b) must be nonzero");
    check_pair_contract(spec, pf, pg);
    const PrimeCharData& pcd = spec.prime_char();
    const int p = spec.p();
    const int m = spec.m();
    const int s = pf.s, t = pg.s;
    const int st = s + t;
    const int tau = 2 * m + st;
    const int eps = pf.epsilon * pg.epsilon;
    const bool balanced_pair = pf.family == Family::WRPB;
    const bool inside = in_support(pf, a) && in_support(pg, b);
    const Frac base = Frac(big_pow(BigInt(p), static_cast<unsigned>(2 * m - 2)));

    auto done = [&](const Frac& v) { return to_i64(v.as_integer("zero-trace count"), "zero-trace count"); };

    if (!inside) {
        if (st % 2 == 1 || balanced_pair) return done(base);
        return done(base + Frac(static_cast<long long>(p - 1) * eps) * spp(p, tau - 4));
    }

    const int u = pf.dual[a];
    const int v = pg.dual[b];
    const int half = (p - 1) / 2;
    int lf = pf.l_ambiguous ? half : *pf.l;  // an all-zero dual satisfies every index

    if (st % 2 == 1) {
        const Frac step = spp(p, tau - 3);
        if (lf == half) {
            int e = pcd.eta(u + v);
            return done(base + Frac(static_cast<long long>(p - 1) * eps * e) * step);
        }
        if (lf == p - 1) {
            if (u != 0 && (v == u || (v + u) % p == 0))
                return done(base + Frac(pcd.eta(u) * eps * pcd.eta(2)) * Frac(BigInt(p - 1), BigInt(2)) * step);
            int e1 = pcd.eta(u + v), e2 = pcd.eta(u - v);
            if (e1 == 1 && e2 == 1) return done(base + Frac(static_cast<long long>(p - 1) * eps) * step);
            if (e1 == -1 && e2 == -1) return done(base - Frac(static_cast<long long>(p - 1) * eps) * step);
            return done(base);
        }
        // lf == 2: both-zero duals cancel in either residue class of p mod 8
        if (u == 0 && v == 0) return done(base);
        if (u == 0 || v == 0) {
            int e = pcd.eta(u + v);  // the nonzero one
            return done(base + Frac(static_cast<long long>(p - 1) * eps * e) * step);
        }
        if (p % 8 == 1) {
            int e1 = pcd.eta(u), e2 = pcd.eta(v);
            if (e1 == 1 && e2 == 1) return done(base - Frac(2 * static_cast<long long>(p - 1) * eps) * step);
            if (e1 == -1 && e2 == -1) return done(base + Frac(2 * static_cast<long long>(p - 1) * eps) * step);
            return done(base);
        }
        // p = 5 mod 8: companion sum over the prime field
        FieldSpec fp = FieldSpec::make(p, 1);
        int uinv = fp.to_subfield(fp.inv(static_cast<Elem>(u)));
        int ratio = static_cast<int>(static_cast<long long>(v) * uinv % p);
        std::int64_t i4 = companion_sum(fp, 4, static_cast<Elem>(ratio));
        return done(base + Frac(eps * pcd.eta(u) * (i4 - pcd.eta(ratio))) * step);
    }

    // s + t even
    const int shift = balanced_pair ? tau - 4 : tau - 2;
    const Frac step = spp(p, shift);
    const Frac off = balanced_pair ? -Frac(static_cast<long long>(p - 1) * eps) * step : Frac(0);
    if (lf == half) {
        if ((u + v) % p == 0) {
            Frac lead = balanced_pair ? Frac(static_cast<long long>(p - 1) * (p - 1) * eps)
                                      : Frac(static_cast<long long>(p - 1) * eps);
            return done(base + lead * step);
        }
        return done(base + off);
    }
    if (lf == p - 1) {
        if (u == 0 && v == 0) {
            Frac lead = balanced_pair ? Frac(static_cast<long long>(p - 1) * (p - 1) * eps)
                                      : Frac(static_cast<long long>(p - 1) * eps);
            return done(base + lead * step);
        }
        if (u != 0 && (v == u || (v + u) % p == 0)) {
            Frac lead = balanced_pair ? Frac(BigInt(p - 1) * (p - 2), BigInt(2)) * Frac(eps)
                                      : Frac(BigInt(p - 1), BigInt(2)) * Frac(eps);
            return done(base + lead * step);
        }
        return done(base + off);
    }
    // lf == 2
    if (u == 0 && v == 0) {
        Frac lead = balanced_pair ? Frac(static_cast<long long>(p - 1) * (p - 1) * eps)
                                  : Frac(static_cast<long long>(p - 1) * eps);
        return done(base + lead * step);
    }
    if (p % 8 == 1) {
        if (u != 0 && v != 0 && pcd.eta(static_cast<long long>(u) * v) == 1) {
            Frac lead = balanced_pair ? Frac(static_cast<long long>(p + 1) * eps) : Frac(2 * eps);
            return done(base + lead * step);
        }
        return done(base + off);
    }
    if (u != 0 && v != 0) {
        FieldSpec fp = FieldSpec::make(p, 1);
        int uinv = fp.to_subfield(fp.inv(static_cast<Elem>(u)));
        int ratio = static_cast<int>(static_cast<long long>(v) * uinv % p);
        if (in_quartic_class_two(p, ratio)) {
            Frac lead = balanced_pair ? Frac(static_cast<long long>(3 * p + 1) * eps) : Frac(4 * eps);
            return done(base + lead * step);
        }
    }
    return done(base + off);
}

CodeReport weight_distribution(const FieldSpec& spec, std::span<const Column> cols, DistMode mode,
                               const PlateauedProfile* pf, const PlateauedProfile* pg, int jobs) {
    const std::uint64_t q = spec.q();
    const int p = spec.p();
    CodeReport rep;
    rep.n = static_cast<std::int64_t>(cols.size());
    rep.k = measured_dimension(spec, cols);
    rep.dist[0] = 1;  // the zero codeword

    if (mode == DistMode::ENUMERATE) {
        rep.source = "enumerated";
        std::mutex mu;
        parallel_chunks(q, jobs, [&](std::uint64_t lo, std::uint64_t hi, int) {
            std::map<std::int64_t, std::int64_t> local;
            std::vector<std::int8_t> ta(q), tb(q);
            for (std::uint64_t ai = lo; ai < hi; ++ai) {
                Elem a = static_cast<Elem>(ai);
                for (std::uint64_t x = 0; x < q; ++x)
                    ta[x] = static_cast<std::int8_t>(spec.trace_mul(a, static_cast<Elem>(x)));
                for (std::uint64_t bi = 0; bi < q; ++bi) {
                    if (ai == 0 && bi == 0) continue;
                    Elem b = static_cast<Elem>(bi);
                    for (std::uint64_t y = 0; y < q; ++y)
                        tb[y] = static_cast<std::int8_t>(spec.trace_mul(b, static_cast<Elem>(y)));
                    std::int64_t zero = 0;
                    for (const Column& c : cols) zero += (ta[c.first] + tb[c.second]) % p == 0;
                    ++local[static_cast<std::int64_t>(cols.size()) - zero];
                }
            }
            std::scoped_lock lk(mu);
            for (auto& [w, c] : local) rep.dist[w] += c;
        });
    } else {
        require(pf && pg, Errc::Internal, "class mode needs both profiles");
        rep.source = "by-class";
        auto nf = dual_levels(spec, *pf);
        auto ng = dual_levels(spec, *pg);
        // representatives per dual level; the (0,0)-dual class needs one
        // besides the excluded pair (0,0) itself
        std::vector<Elem> rf(static_cast<std::size_t>(p), 0), rg(static_cast<std::size_t>(p), 0);
        std::vector<Elem> rf2(static_cast<std::size_t>(p), 0), rg2(static_cast<std::size_t>(p), 0);
        std::vector<int> cf(static_cast<std::size_t>(p), 0), cg(static_cast<std::size_t>(p), 0);
        for (Elem b : pf->support) {
            int c = pf->dual[b];
            if (cf[c] == 0) rf[c] = b;
            if (cf[c] == 1) rf2[c] = b;
            ++cf[c];
        }
        for (Elem b : pg->support) {
            int c = pg->dual[b];
            if (cg[c] == 0) rg[c] = b;
            if (cg[c] == 1) rg2[c] = b;
            ++cg[c];
        }
        bool both_unbalanced = !pf->balanced && !pg->balanced;
        // classes inside the support product
        for (int u = 0; u < p; ++u) {
            for (int v = 0; v < p; ++v) {
                std::int64_t size = nf[u] * ng[v];
                if (size == 0) continue;
                Elem a = rf[u], b = rg[v];
                if (a == 0 && b == 0) {
                    // the (0,0) pair is the excluded zero codeword; swap in
                    // another member of its class
                    --size;
                    if (size == 0) continue;
                    if (cg[v] > 1)
                        b = rg2[v];
                    else
                        a = rf2[u];
                }
                rep.dist[codeword_weight(spec, cols, a, b)] += size;
            }
        }
        // the class outside S_f x S_g
        BigInt outside = q_squared(spec) - BigInt(static_cast<std::int64_t>(pf->support.size()) *
                                                  static_cast<std::int64_t>(pg->support.size()));
        if (!both_unbalanced) outside -= 1;  // (0,0) lies outside when a side is balanced
        if (outside > 0) {
            Elem a = 0, b = 0;
            bool found = false;
            for (std::uint64_t cand = 0; cand < q && !found; ++cand) {
                if (!in_support(*pf, static_cast<Elem>(cand))) {
                    a = static_cast<Elem>(cand);
                    b = 0;
                    found = true;
                } else if (!in_support(*pg, static_cast<Elem>(cand))) {
                    a = 0;
                    b = static_cast<Elem>(cand);
                    found = true;
                }
            }
            require(found && !(a == 0 && b == 0), Errc::Internal, "no representative outside the support product");
            rep.dist[codeword_weight(spec, cols, a, b)] += to_i64(outside, "outside class size");
        }
    }

    // structural identities
    BigInt total = q_squared(spec);
    require(rep.frequency_sum() == to_i64(total, "q^2"), Errc::Internal, "weight frequencies must sum to p^{2m}");
    rep.finalize_extremes();
    if (rep.k == 2 * spec.m()) {
        require(rep.dist.at(0) == 1, Errc::Internal, "a full-rank code has exactly one zero codeword");
        BigInt moment = 0;
        for (auto& [w, c] : rep.dist) moment += BigInt(w) * c;
        BigInt want = BigInt(rep.n) * (p - 1) * big_pow(BigInt(p), static_cast<unsigned>(2 * spec.m() - 1));
        require(moment == want, Errc::Internal, "first moment identity failed");
    }
    return rep;
}

std::string table_branch_name(TableBranch b) {
    switch (b) {
        case TableBranch::OddHalf: return "odd/l=(p-1)/2";
        case TableBranch::OddFull: return "odd/l=p-1";
        case TableBranch::OddTwo1: return "odd/l=2,p=1(8)";
        case TableBranch::OddTwo5: return "odd/l=2,p=5(8)";
        case TableBranch::EvenUnbHalf: return "even-unbalanced/l=(p-1)/2";
        case TableBranch::EvenUnbFull: return "even-unbalanced/l=p-1";
        case TableBranch::EvenUnbTwo1: return "even-unbalanced/l=2,p=1(8)";
        case TableBranch::EvenUnbTwo5: return "even-unbalanced/l=2,p=5(8)";
        case TableBranch::EvenBalHalf: return "even-balanced/l=(p-1)/2";
        case TableBranch::EvenBalFull: return "even-balanced/l=p-1";
        case TableBranch::EvenBalTwo1: return "even-balanced/l=2,p=1(8)";
        case TableBranch::EvenBalTwo5: return "even-balanced/l=2,p=5(8)";
    }
    return "?";
}

std::vector<TableBranch> all_table_branches() {
    return {TableBranch::OddHalf,     TableBranch::OddFull,     TableBranch::OddTwo1,     TableBranch::OddTwo5,
            TableBranch::EvenUnbHalf, TableBranch::EvenUnbFull, TableBranch::EvenUnbTwo1, TableBranch::EvenUnbTwo5,
            TableBranch::EvenBalHalf, TableBranch::EvenBalFull, TableBranch::EvenBalTwo1, TableBranch::EvenBalTwo5};
}

std::vector<TableBranch> applicable_branches(const FieldSpec& spec, const PlateauedProfile& pf,
                                             const PlateauedProfile& pg) {
    check_pair_contract(spec, pf, pg);
    const int p = spec.p();
    const int half = (p - 1) / 2;
    const bool odd = (pf.s + pg.s) % 2 == 1;
    const bool balanced = pf.family == Family::WRPB;

    std::vector<int> lf_values;
    if (pf.l_ambiguous) {
        lf_values = {2, half, p - 1};
    } else {
        lf_values = {*pf.l};
    }
    std::vector<TableBranch> out;
    auto push = [&](TableBranch b) {
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    };
    for (int lf : lf_values) {
        if (lf == half) push(odd ? TableBranch::OddHalf
                                 : (balanced ? TableBranch::EvenBalHalf : TableBranch::EvenUnbHalf));
        if (lf == p - 1) push(odd ? TableBranch::OddFull
                                  : (balanced ? TableBranch::EvenBalFull : TableBranch::EvenUnbFull));
        if (lf == 2) {
            if (p % 8 == 1)
                push(odd ? TableBranch::OddTwo1 : (balanced ? TableBranch::EvenBalTwo1 : TableBranch::EvenUnbTwo1));
            else
                push(odd ? TableBranch::OddTwo5 : (balanced ? TableBranch::EvenBalTwo5 : TableBranch::EvenUnbTwo5));
        }
    }
    return out;
}

namespace {

using Dist = std::map<std::int64_t, std::int64_t>;

void add_freq(Dist& d, const Frac& weight, const Frac& freq) {
    BigInt f = freq.as_integer("table frequency");
    require(f >= 0, Errc::Internal, "negative table frequency");
    if (f == 0) return;
    d[to_i64(weight.as_integer("table weight"), "table weight")] += to_i64(f, "table frequency");
}

// one table branch, evaluated with exact counting operations
Dist emit_branch(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg,
                 TableBranch br) {
    const PrimeCharData& pcd = spec.prime_char();
    const int p = spec.p();
    const int m = spec.m();
    const int st = pf.s + pg.s;
    const int tau = 2 * m + st;
    const int eps = pf.epsilon * pg.epsilon;
    const bool balanced = pf.family == Family::WRPB;
    const bool odd = st % 2 == 1;
    const Frac wbase = Frac(static_cast<long long>(p - 1)) * Frac(big_pow(BigInt(p), static_cast<unsigned>(2 * m - 2)));
    const BigInt supp_product =
        BigInt(static_cast<std::int64_t>(pf.support.size())) * static_cast<std::int64_t>(pg.support.size());
    auto nf = dual_levels(spec, pf);
    auto ng = dual_levels(spec, pg);

    Dist d;
    d[0] = 1;
    BigInt accounted = 1;
    auto put = [&](const Frac& w, const Frac& fr) {
        add_freq(d, w, fr);
        accounted += fr.as_integer("table frequency");
    };

    // the class outside S_f x S_g
    {
        BigInt outside = q_squared(spec) - supp_product;
        if (balanced) outside -= 1;
        Frac w_out = odd || balanced ? wbase
                                     : wbase + Frac(static_cast<long long>(p - 1) * (p - 1) * eps) * spp(p, tau - 4);
        if (outside > 0) put(w_out, Frac(outside));
    }

    if (odd) {
        const Frac step = Frac(static_cast<long long>(p - 1) * eps) * spp(p, tau - 3);
        const Frac half_step = Frac(BigInt(p - 1), BigInt(2)) * Frac(eps * pcd.eta(2)) * spp(p, tau - 3);
        switch (br) {
            case TableBranch::OddHalf: {
                std::int64_t t_sq = 0, t_nsq = 0;
                for (int c = 1; c < p; ++c)
                    (pcd.eta(c) == 1 ? t_sq : t_nsq) += joint_count(spec, pf, pg, c);
                put(wbase - step, Frac(t_sq));
                put(wbase + step, Frac(t_nsq));
                break;
            }
            case TableBranch::OddFull: {
                put(wbase - half_step, Frac(special_count(spec, pf, pg, SpecialCount::E1)));
                put(wbase + half_step, Frac(special_count(spec, pf, pg, SpecialCount::E2)));
                put(wbase - step, Frac(border_pair_count(spec, pf, pg, Residue::SQ)));
                put(wbase + step, Frac(border_pair_count(spec, pf, pg, Residue::NSQ)));
                break;
            }
            case TableBranch::OddTwo1: {
                std::int64_t css = 0, cnn = 0;
                for (int u = 1; u < p; ++u)
                    for (int v = 1; v < p; ++v) {
                        if (pcd.eta(u) == 1 && pcd.eta(v) == 1) css += nf[u] * ng[v];
                        if (pcd.eta(u) == -1 && pcd.eta(v) == -1) cnn += nf[u] * ng[v];
                    }
                put(wbase - step, Frac(special_count(spec, pf, pg, SpecialCount::E3)));
                put(wbase + step, Frac(special_count(spec, pf, pg, SpecialCount::E4)));
                put(wbase + Frac(2) * step, Frac(css));
                put(wbase - Frac(2) * step, Frac(cnn));
                break;
            }
            case TableBranch::OddTwo5: {
                put(wbase - step, Frac(special_count(spec, pf, pg, SpecialCount::E3)));
                put(wbase + step, Frac(special_count(spec, pf, pg, SpecialCount::E4)));
                // distinct weights arise from distinct companion-sum values;
                // equal ones merge and the observed count is reported
                FieldSpec fp = FieldSpec::make(p, 1);
                for (int u = 1; u < p; ++u) {
                    for (int v = 1; v < p; ++v) {
                        std::int64_t size = nf[u] * ng[v];
                        if (size == 0) continue;
                        int uinv = fp.to_subfield(fp.inv(static_cast<Elem>(u)));
                        int ratio = static_cast<int>(static_cast<long long>(v) * uinv % p);
                        std::int64_t i4 = companion_sum(fp, 4, static_cast<Elem>(ratio));
                        Frac w = wbase - Frac(eps * pcd.eta(u) * (i4 - pcd.eta(ratio))) * spp(p, tau - 3);
                        put(w, Frac(size));
                    }
                }
                break;
            }
            default:
                fail(Errc::Internal, "branch/parity mismatch");
        }
        // everything else in S_f x S_g keeps the base weight; (0,0) is
        // excluded when it sits inside the support product
        BigInt rest = q_squared(spec) - accounted;
        if (rest > 0) add_freq(d, wbase, Frac(rest));
        return d;
    }

    // s + t even
    const int shift = balanced ? tau - 4 : tau - 2;
    const Frac step1 = Frac(eps) * spp(p, shift);
    const Frac w_zero_class =
        balanced ? wbase - Frac(static_cast<long long>(p - 1) * (p - 1) * eps) * spp(p, tau - 4) : wbase;
    const Frac w_plus = wbase + Frac(static_cast<long long>(p - 1)) * step1;
    std::int64_t n00 = nf[0] * ng[0];
    switch (br) {
        case TableBranch::EvenUnbHalf:
        case TableBranch::EvenBalHalf: {
            std::int64_t t0 = joint_count(spec, pf, pg, 0);
            std::int64_t t_rest = 0;
            for (int c = 1; c < p; ++c) t_rest += joint_count(spec, pf, pg, c);
            put(w_zero_class, Frac(BigInt(t0) - (balanced ? 0 : 1)));
            put(w_plus, Frac(t_rest));
            break;
        }
        case TableBranch::EvenUnbFull:
        case TableBranch::EvenBalFull: {
            std::int64_t f1 = special_count(spec, pf, pg, SpecialCount::F1);
            Frac w_mid = balanced ? wbase - Frac(BigInt(p - 1) * (p - 2), BigInt(2)) * Frac(eps) * spp(p, tau - 4)
                                  : wbase + Frac(BigInt(p - 1), BigInt(2)) * Frac(eps) * spp(p, tau - 2);
            put(w_zero_class, Frac(BigInt(n00) - (balanced ? 0 : 1)));
            put(w_mid, Frac(f1));
            put(w_plus, Frac(BigInt(supp_product) - n00 - f1));
            break;
        }
        case TableBranch::EvenUnbTwo1:
        case TableBranch::EvenBalTwo1: {
            std::int64_t f3 = special_count(spec, pf, pg, SpecialCount::F3);
            Frac w_mid = balanced ? wbase - Frac(static_cast<long long>(p + 1) * eps) * spp(p, tau - 4)
                                  : wbase + Frac(static_cast<long long>(p - 3) * eps) * spp(p, tau - 2);
            put(w_zero_class, Frac(BigInt(n00) - (balanced ? 0 : 1)));
            put(w_mid, Frac(f3));
            put(w_plus, Frac(BigInt(supp_product) - n00 - f3));
            break;
        }
        case TableBranch::EvenUnbTwo5:
        case TableBranch::EvenBalTwo5: {
            std::int64_t f5 = special_count(spec, pf, pg, SpecialCount::F5);
            Frac w_mid = balanced ? wbase - Frac(static_cast<long long>(3 * p + 1) * eps) * spp(p, tau - 4)
                                  : wbase + Frac(static_cast<long long>(p - 5) * eps) * spp(p, tau - 2);
            put(w_zero_class, Frac(BigInt(n00) - (balanced ? 0 : 1)));
            put(w_mid, Frac(f5));
            put(w_plus, Frac(BigInt(supp_product) - n00 - f5));
            break;
        }
        default:
            fail(Errc::Internal, "branch/parity mismatch");
    }
    require(accounted == q_squared(spec), Errc::Internal, "even-parity table must account for every pair");
    return d;
}

}  // namespace

Prediction predicted_distribution(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg) {
    auto branches = applicable_branches(spec, pf, pg);
    require(!branches.empty(), Errc::UnsupportedIndexPair, "no table branch covers this pair");
    auto n = expected_length(spec, pf, pg);
    require(n.has_value(), Errc::UnsupportedIndexPair, "length formula needs a same-family pair");

    std::optional<Dist> agreed;
    for (TableBranch br : branches) {
        Dist d = emit_branch(spec, pf, pg, br);
        if (!agreed)
            agreed = std::move(d);
        else if (*agreed != d)
            fail(Errc::Internal,
                 "coinciding table branches disagree: " + table_branch_name(branches.front()) + " vs " +
                     table_branch_name(br));
    }

    Prediction pred;
    pred.branches = branches;
    pred.report.n = *n;
    pred.report.k = 2 * spec.m();
    pred.report.dist = std::move(*agreed);
    pred.report.source = "predicted";
    pred.report.finalize_extremes();
    require(pred.report.frequency_sum() == to_i64(q_squared(spec), "q^2"), Errc::Internal,
            "predicted frequencies must sum to p^{2m}");
    return pred;
}

namespace {

std::uint64_t pair_code(const FieldSpec& spec, const Column& c) {
    return static_cast<std::uint64_t>(c.first) * spec.q() + c.second;
}

// scalar orbit of a column with the lexicographically-least member first
Column orbit_min(const FieldSpec& spec, const Column& c) {
    Column best = c;
    auto key = [&](const Column& w) {
        return std::make_pair(spec.order_key(w.first), spec.order_key(w.second));
    };
    for (int z = 2; z < spec.p(); ++z) {
        Elem ze = spec.from_subfield(z);
        Column cand{spec.mul(ze, c.first), spec.mul(ze, c.second)};
        if (key(cand) < key(best)) best = cand;
    }
    return best;
}

}  // namespace

PuncturedSet puncture(const DefiningSet& D) {
    const FieldSpec& spec = *D.spec;
    std::unordered_set<std::uint64_t> members;
    members.reserve(D.pairs.size() * 2);
    for (const Column& c : D.pairs) members.insert(pair_code(spec, c));

    PuncturedSet P;
    P.spec = &spec;
    std::unordered_set<std::uint64_t> seen;
    for (const Column& c : D.pairs) {
        if (seen.count(pair_code(spec, c))) continue;
        // walk the orbit; all p-1 members must be present
        std::vector<Column> orbit;
        for (int z = 1; z < spec.p(); ++z) {
            Elem ze = spec.from_subfield(z);
            Column w{spec.mul(ze, c.first), spec.mul(ze, c.second)};
            require(members.count(pair_code(spec, w)) > 0, Errc::BadOrbit,
                    "scalar orbit leaves the defining set; the pair is not homogeneous");
            orbit.push_back(w);
            seen.insert(pair_code(spec, w));
        }
        require(orbit.size() == static_cast<std::size_t>(spec.p() - 1), Errc::BadOrbit, "orbit size must be p-1");
        P.reps.push_back(orbit_min(spec, c));
    }
    auto key = [&](const Column& w) { return std::make_pair(spec.order_key(w.first), spec.order_key(w.second)); };
    std::sort(P.reps.begin(), P.reps.end(), [&](const Column& a, const Column& b) { return key(a) < key(b); });
    if (P.reps.size() * static_cast<std::size_t>(spec.p() - 1) != D.pairs.size())
        fail(Errc::BadOrbit, "orbits do not partition the defining set");
    return P;
}

CodeReport derive_punctured_report(const FieldSpec& spec, const CodeReport& full) {
    const int p = spec.p();
    CodeReport rep;
    require(full.n % (p - 1) == 0, Errc::Internal, "length must divide by p-1");
    rep.n = full.n / (p - 1);
    rep.k = full.k;
    rep.source = full.source + "+derived-punctured";
    for (auto& [w, c] : full.dist) {
        require(w % (p - 1) == 0, Errc::Internal, "punctured weights must divide by p-1");
        rep.dist[w / (p - 1)] += c;
    }
    rep.finalize_extremes();
    return rep;
}

int dual_distance_bound(const FieldSpec& spec, std::span<const Column> cols) {
    std::unordered_set<std::uint64_t> canon;
    canon.reserve(cols.size() * 2);
    bool dup = false;
    for (const Column& c : cols) {
        if (c.first == 0 && c.second == 0) return 1;
        std::uint64_t key = pair_code(spec, orbit_min(spec, c));
        if (!canon.insert(key).second) dup = true;
    }
    return dup ? 2 : 3;
}

bool dual_distance_at_least_3(const FieldSpec& spec, std::span<const Column> cols) {
    return dual_distance_bound(spec, cols) == 3;
}

int measured_dimension(const FieldSpec& spec, std::span<const Column> cols) {
    const int p = spec.p();
    const int m = spec.m();
    // generator rows are the trace functionals of the 2m basis pairs
    std::vector<std::vector<std::int8_t>> rows;
    rows.reserve(static_cast<std::size_t>(2 * m));
    for (int i = 0; i < 2 * m; ++i) {
        Elem e = spec.from_rep([&] {
            std::vector<int> r(static_cast<std::size_t>(m), 0);
            r[static_cast<std::size_t>(i % m)] = 1;
            return r;
        }());
        std::vector<std::int8_t> row;
        row.reserve(cols.size());
        for (const Column& c : cols)
            row.push_back(static_cast<std::int8_t>(spec.trace(spec.mul(e, i < m ? c.first : c.second))));
        rows.push_back(std::move(row));
    }
    // Gaussian elimination over F_p
    int rank = 0;
    std::size_t ncols = cols.size();
    for (std::size_t col = 0; col < ncols && rank < 2 * m; ++col) {
        int pivot = -1;
        for (int r = rank; r < 2 * m; ++r)
            if (rows[static_cast<std::size_t>(r)][col] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
        int inv = 0;
        int pv = ((rows[static_cast<std::size_t>(rank)][col] % p) + p) % p;
        for (int cand = 1; cand < p; ++cand)
            if (cand * pv % p == 1) inv = cand;
        for (int r = 0; r < 2 * m; ++r) {
            if (r == rank) continue;
            int factor = ((rows[static_cast<std::size_t>(r)][col] % p) + p) % p;
            if (!factor) continue;
            int scale = factor * inv % p;
            for (std::size_t cc = col; cc < ncols; ++cc) {
                int vv = rows[static_cast<std::size_t>(r)][cc] -
                         scale * rows[static_cast<std::size_t>(rank)][cc];
                rows[static_cast<std::size_t>(r)][cc] = static_cast<std::int8_t>(((vv % p) + p) % p);
            }
        }
        ++rank;
    }
    return rank;
}

bool certify_minimal(const FieldSpec& spec, const CodeReport& report) {
    require(!report.dist.empty() && report.d_min > 0, Errc::Internal, "minimality needs a weight distribution");
    // w_min / w_max > (p-1)/p in exact integers
    return BigInt(spec.p()) * report.d_min > BigInt(spec.p() - 1) * report.w_max;
}

bool ab_ratio_on_boundary(const FieldSpec& spec, const CodeReport& report) {
    return BigInt(spec.p()) * report.d_min == BigInt(spec.p() - 1) * report.w_max;
}

bool minimality_threshold(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg) {
    auto branches = applicable_branches(spec, pf, pg);
    const int gamma = 2 * spec.m() - pf.s - pg.s;
    const int eps = pf.epsilon * pg.epsilon;
    bool covered = false;
    bool ok = false;
    for (TableBranch br : branches) {
        switch (br) {
            case TableBranch::OddHalf:
            case TableBranch::OddFull:
            case TableBranch::OddTwo1:
                covered = true;
                ok = ok || gamma >= 5;
                break;
            case TableBranch::OddTwo5:
                break;  // no stated threshold for this table
            case TableBranch::EvenUnbHalf:
            case TableBranch::EvenUnbFull:
            case TableBranch::EvenUnbTwo1:
            case TableBranch::EvenUnbTwo5:
                covered = true;
                ok = ok || (eps == 1 ? gamma >= 4 : gamma >= 6);
                break;
            case TableBranch::EvenBalHalf:
            case TableBranch::EvenBalFull:
            case TableBranch::EvenBalTwo1:
            case TableBranch::EvenBalTwo5:
                covered = true;
                ok = ok || gamma >= 4;
                break;
        }
    }
    require(covered, Errc::UnsupportedIndexPair, "no stated minimality threshold for this pair");
    return ok;
}

bool minimal_exhaustive(const FieldSpec& spec, std::span<const Column> cols) {
    const std::uint64_t q = spec.q();
    const int p = spec.p();
    require(q * q <= 1000, Errc::SpaceTooLarge, "exhaustive cover scan is limited to q <= 31");
    std::vector<std::vector<std::uint8_t>> words;
    words.reserve(q * q - 1);
    std::vector<std::int8_t> ta(q), tb(q);
    for (std::uint64_t ai = 0; ai < q; ++ai) {
        for (std::uint64_t x = 0; x < q; ++x)
            ta[x] = static_cast<std::int8_t>(spec.trace_mul(static_cast<Elem>(ai), static_cast<Elem>(x)));
        for (std::uint64_t bi = 0; bi < q; ++bi) {
            if (ai == 0 && bi == 0) continue;
            for (std::uint64_t y = 0; y < q; ++y)
                tb[y] = static_cast<std::int8_t>(spec.trace_mul(static_cast<Elem>(bi), static_cast<Elem>(y)));
            std::vector<std::uint8_t> w;
            w.reserve(cols.size());
            for (const Column& c : cols) w.push_back(static_cast<std::uint8_t>((ta[c.first] + tb[c.second]) % p));
            // the zero word (reachable when the rank is deficient) is 0*c and
            // never witnesses a cover violation in either role
            if (std::all_of(w.begin(), w.end(), [](std::uint8_t v) { return v == 0; })) continue;
            words.push_back(std::move(w));
        }
    }
    // c covers c' when supp(c') is inside supp(c); minimal codes only cover
    // scalar multiples
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i == j) continue;
            bool scalar = false;
            for (int z = 1; z < p && !scalar; ++z) {
                bool all = true;
                for (std::size_t c = 0; c < cols.size() && all; ++c)
                    all = words[j][c] == static_cast<std::uint8_t>(z * words[i][c] % p);
                scalar = all;
            }
            if (scalar) continue;
            bool covered = true;
            for (std::size_t c = 0; c < cols.size() && covered; ++c)
                covered = !(words[j][c] != 0 && words[i][c] == 0);
            if (covered) return false;
        }
    }
    return true;
}

std::int64_t griesmer_sum(int p, std::int64_t d, int k) {
    std::int64_t s = 0;
    BigInt pk = 1;
    for (int i = 0; i < k; ++i) {
        BigInt num = BigInt(d) + pk - 1;
        s += to_i64(num / pk, "griesmer term");
        pk *= p;
    }
    return s;
}

bool certify_griesmer(int p, std::int64_t n, int k, std::int64_t d) {
    require(k >= 1 && d >= 1, Errc::Internal, "Griesmer check needs k >= 1, d >= 1");
    return n == griesmer_sum(p, d, k);
}

void attach_certificates(const FieldSpec& spec, CodeReport& report, std::span<const Column> cols) {
    report.dual_distance = dual_distance_bound(spec, cols);
    report.dual_d_ge_3 = report.dual_distance == 3;
    report.ab_minimal = certify_minimal(spec, report);
    report.ab_boundary = ab_ratio_on_boundary(spec, report);
    report.griesmer_gap = report.n - griesmer_sum(spec.p(), report.d_min, report.k);
    require(report.griesmer_gap >= 0, Errc::Internal, "Griesmer bound violated; the report is inconsistent");
    report.griesmer_optimal = report.griesmer_gap == 0;
}

}  // namespace wrp
