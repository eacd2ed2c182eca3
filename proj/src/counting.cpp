#include "wrp/counting.hpp"

#include <algorithm>

namespace wrp {

namespace {

// sqrt(p)^k as an exact rational; k may be negative in degenerate profiles
Frac spp(int p, int k) {
    require(k % 2 == 0, Errc::Internal, "odd sqrt-p exponent reached a closed form");
    unsigned a = static_cast<unsigned>(k < 0 ? -k : k) / 2;
    BigInt v = big_pow(BigInt(p), a);
    return k >= 0 ? Frac(v) : Frac(BigInt(1), v);
}

// sqrt(p*)^k with p* = eta(-1) p; carries the sign that distinguishes
// p = 3 mod 4 (where sqrt(p*)^2 = -p)
Frac spp_star(const PrimeCharData& pcd, int k) {
    require(k % 2 == 0, Errc::Internal, "odd sqrt-p* exponent reached a closed form");
    unsigned a = static_cast<unsigned>(k < 0 ? -k : k) / 2;
    BigInt v = big_pow(BigInt(pcd.p_star), a);
    return k >= 0 ? Frac(v) : Frac(BigInt(1), v);
}

Frac ppow(int p, int k) {
    unsigned a = static_cast<unsigned>(k < 0 ? -k : k);
    BigInt v = big_pow(BigInt(p), a);
    return k >= 0 ? Frac(v) : Frac(BigInt(1), v);
}

int eta_m1_pow(const PrimeCharData& pcd, int k) {
    int e = pcd.eta(-1);
    return (k % 2 == 0) ? 1 : e;
}

void check_family(const PlateauedProfile& prof) {
    require(prof.family != Family::NEITHER, Errc::UnsupportedIndexPair,
            "counting requires a classified WRP/WRPB profile");
}

}  // namespace

std::int64_t dual_level_count(const PlateauedProfile& prof, int c) {
    check_family(prof);
    std::int64_t n = 0;
    for (Elem b : prof.support) n += prof.dual[b] == c;
    return n;
}

std::vector<std::int64_t> dual_levels(const FieldSpec& spec, const PlateauedProfile& prof) {
    check_family(prof);
    std::vector<std::int64_t> levels(static_cast<std::size_t>(spec.p()), 0);
    for (Elem b : prof.support) ++levels[prof.dual[b]];
    return levels;
}

std::int64_t dual_level_closed(const FieldSpec& spec, const PlateauedProfile& prof, int c) {
    check_family(prof);
    const PrimeCharData& pcd = spec.prime_char();
    const int p = spec.p();
    const int ms = spec.m() - prof.s;
    Frac base = ppow(p, ms - 1);
    Frac value;
    if (ms % 2 == 0) {
        Frac dev = Frac(eta_m1_pow(pcd, spec.m() + 1) * prof.epsilon) * spp_star(pcd, ms - 2);
        value = (c % p == 0) ? base + Frac(p - 1) * dev : base - dev;
    } else {
        if (c % p == 0)
            value = base;
        else
            value = base + Frac(pcd.eta(c) * eta_m1_pow(pcd, spec.m()) * prof.epsilon) * spp_star(pcd, ms - 1);
    }
    return to_i64(value.as_integer("dual level count"), "dual level count");
}

std::int64_t joint_count(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg, int c) {
    auto nf = dual_levels(spec, pf);
    auto ng = dual_levels(spec, pg);
    const int p = spec.p();
    std::int64_t total = 0;
    for (int u = 0; u < p; ++u) total += nf[static_cast<std::size_t>(u)] * ng[static_cast<std::size_t>((((c - u) % p) + p) % p)];
    return total;
}

std::int64_t joint_closed(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg, int c) {
    check_family(pf);
    check_family(pg);
    const PrimeCharData& pcd = spec.prime_char();
    const int p = spec.p();
    const int st = pf.s + pg.s;
    const int gamma = 2 * spec.m() - st;
    const int eps = pf.epsilon * pg.epsilon;
    Frac base = ppow(p, gamma - 1);
    Frac value;
    if (st % 2 == 0) {
        Frac dev = Frac(eps) * spp_star(pcd, gamma) / Frac(p);
        value = (c % p == 0) ? base + Frac(p - 1) * dev : base - dev;
    } else {
        value = (c % p == 0) ? base : base + Frac(pcd.eta(c) * eps) * spp_star(pcd, gamma - 1);
    }
    return to_i64(value.as_integer("joint dual count"), "joint dual count");
}

std::int64_t border_pair_count(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg,
                               Residue which) {
    check_family(pf);
    check_family(pg);
    require((pf.s + pg.s) % 2 == 1, Errc::ParityMismatch, "border counts need odd s+t");
    const PrimeCharData& pcd = spec.prime_char();
    const int want = which == Residue::SQ ? 1 : -1;
    auto nf = dual_levels(spec, pf);
    auto ng = dual_levels(spec, pg);
    std::int64_t total = 0;
    const int p = spec.p();
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < p; ++v)
            if (pcd.eta(u + v) == want && pcd.eta(u - v) == want)
                total += nf[static_cast<std::size_t>(u)] * ng[static_cast<std::size_t>(v)];
    return total;
}

std::int64_t border_pair_closed(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg,
                                Residue which) {
    check_family(pf);
    check_family(pg);
    require(spec.p() % 4 == 1, Errc::UnsupportedIndexPair, "border closed forms assume p = 1 mod 4");
    const int s = pf.s, t = pg.s, m = spec.m();
    require((s + t) % 2 == 1, Errc::ParityMismatch, "border counts need odd s+t");
    const PrimeCharData& pcd = spec.prime_char();
    const int p = spec.p();
    const int eta2 = pcd.eta(2);
    const int sign = which == Residue::SQ ? -1 : 1;
    const Frac half_pm1 = Frac(BigInt(p - 1), BigInt(2));
    const Frac half_pp1 = Frac(BigInt(p + 1), BigInt(2));
    Frac inner;
    bool f_odd = (m - s) % 2 == 1;
    bool g_odd = (m - t) % 2 == 1;
    require(f_odd != g_odd, Errc::ParityMismatch, "odd s+t forces opposite parities of m-s, m-t");
    if (f_odd) {
        inner = half_pm1 * spp(p, 2 * m - s - t - 1) + Frac(sign * eta2 * pf.epsilon) * spp(p, m - t) +
                half_pp1 * Frac(pg.epsilon) * spp(p, m - s - 1) +
                Frac(-sign * (eta2 + p) * pf.epsilon * pg.epsilon);
    } else {
        inner = half_pm1 * spp(p, 2 * m - s - t - 1) + Frac(sign * eta2 * pg.epsilon) * spp(p, m - s) +
                half_pp1 * Frac(pf.epsilon) * spp(p, m - t - 1) +
                Frac(-sign * (eta2 + p) * pf.epsilon * pg.epsilon);
    }
    Frac value = half_pm1 * spp(p, 2 * m - s - t - 3) * inner;
    return to_i64(value.as_integer("border pair count"), "border pair count");
}

bool in_quartic_class_two(int p, int c) {
    // log = 2 mod 4, i.e. a square that is not a fourth power:
    // c^{(p-1)/4} = -1
    require(p % 4 == 1, Errc::BadOrder, "quartic classes need p = 1 mod 4");
    long long r = ((c % p) + p) % p;
    if (r == 0) return false;
    long long acc = 1, base = r;
    int e = (p - 1) / 4;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc == p - 1;
}

std::vector<int> quartic_class_two(int p) {
    std::vector<int> out;
    for (int c = 1; c < p; ++c)
        if (in_quartic_class_two(p, c)) out.push_back(c);
    return out;
}

std::int64_t special_count(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg,
                           SpecialCount kind) {
    const PrimeCharData& pcd = spec.prime_char();
    const int p = spec.p();
    auto nf = dual_levels(spec, pf);
    auto ng = dual_levels(spec, pg);
    auto N = [&](const std::vector<std::int64_t>& lv, int c) {
        return lv[static_cast<std::size_t>(((c % p) + p) % p)];
    };
    std::int64_t total = 0;
    switch (kind) {
        case SpecialCount::E1:
        case SpecialCount::E2: {
            int want = kind == SpecialCount::E1 ? 1 : -1;
            for (int u = 1; u < p; ++u)
                if (pcd.eta(u) == want) total += N(nf, u) * (N(ng, u) + N(ng, -u));
            return total;
        }
        case SpecialCount::E3:
        case SpecialCount::E4: {
            int want = kind == SpecialCount::E3 ? 1 : -1;
            for (int u = 1; u < p; ++u)
                if (pcd.eta(u) == want) total += N(nf, 0) * N(ng, u) + N(nf, u) * N(ng, 0);
            return total;
        }
        case SpecialCount::F1: {
            for (int c = 1; c < p; ++c) total += N(nf, c) * (N(ng, c) + N(ng, -c));
            return total;
        }
        case SpecialCount::F3: {
            for (int u = 1; u < p; ++u)
                for (int v = 1; v < p; ++v)
                    if (pcd.eta(static_cast<long long>(u) * v) == 1) total += N(nf, u) * N(ng, v);
            return total;
        }
        case SpecialCount::F5: {
            require(p % 8 == 5, Errc::UnsupportedIndexPair, "quartic-class count needs p = 5 mod 8");
            for (int u = 1; u < p; ++u) {
                long long uinv = 1;
                for (int w = 1; w < p; ++w)
                    if (w * u % p == 1) uinv = w;
                for (int v = 1; v < p; ++v)
                    if (in_quartic_class_two(p, static_cast<int>(v * uinv % p))) total += N(nf, u) * N(ng, v);
            }
            return total;
        }
    }
    fail(Errc::Internal, "unhandled special count");
}

std::int64_t special_closed(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg,
                            SpecialCount kind) {
    const PrimeCharData& pcd = spec.prime_char();
    const int p = spec.p();
    auto nf = dual_levels(spec, pf);
    auto ng = dual_levels(spec, pg);
    const int i = pcd.sq.front();   // a fixed square
    const int j = pcd.nsq.front();  // a fixed non-square
    auto N = [&](const std::vector<std::int64_t>& lv, int c) {
        return lv[static_cast<std::size_t>(((c % p) + p) % p)];
    };
    switch (kind) {
        case SpecialCount::E1: return static_cast<std::int64_t>(p - 1) * N(nf, i) * N(ng, i);
        case SpecialCount::E2: return static_cast<std::int64_t>(p - 1) * N(nf, j) * N(ng, j);
        case SpecialCount::E3:
            return (p - 1) / 2 * (N(nf, 0) * N(ng, i) + N(nf, i) * N(ng, 0));
        case SpecialCount::E4:
            return (p - 1) / 2 * (N(nf, 0) * N(ng, j) + N(nf, j) * N(ng, 0));
        case SpecialCount::F1: {
            std::int64_t s = 0;
            for (int c = 1; c < p; ++c) s += N(nf, c) * N(ng, c);
            return 2 * s;
        }
        case SpecialCount::F3:
            return static_cast<std::int64_t>(p - 1) * (p - 1) / 4 * (N(nf, i) * N(ng, i) + N(nf, j) * N(ng, j));
        case SpecialCount::F5: {
            require(p % 8 == 5, Errc::UnsupportedIndexPair, "quartic-class count needs p = 5 mod 8");
            std::int64_t f3 = special_closed(spec, pf, pg, SpecialCount::F3);
            require(f3 % 2 == 0, Errc::Internal, "F3 must be even before halving");
            return f3 / 2;
        }
    }
    fail(Errc::Internal, "unhandled special count");
}

}  // namespace wrp
