#include "wrp/char_sums.hpp"

#include <numeric>

namespace wrp {

MultChar MultChar::make(const FieldSpec& spec, std::uint64_t d) {
    require(d >= 1 && (spec.q() - 1) % d == 0, Errc::BadOrder, "character order must divide q-1");
    return MultChar{&spec, d};
}

std::optional<std::uint64_t> MultChar::exponent(Elem x) const {
    auto lg = spec->log(x);
    if (!lg) return std::nullopt;
    return *lg % order;
}

Gaussian Gaussian::unit_i_pow(std::uint64_t k) {
    switch (k % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

CycInt gauss_sum(const FieldSpec& spec) {
    CycInt acc(spec.p());
    std::vector<BigInt> coeffs(static_cast<std::size_t>(spec.p()), BigInt(0));
    for (std::uint64_t k = 0; k < spec.q() - 1; ++k) {
        Elem x = spec.exp(k);
        coeffs[static_cast<std::size_t>(spec.trace(x))] += spec.quad_char(x);
    }
    return CycInt::from_coeffs(spec.p(), std::move(coeffs));
}

CycInt gauss_sum_closed(const FieldSpec& spec) {
    CycInt g = sqrt_pstar_power(spec.p(), spec.m());
    return spec.m() % 2 == 0 ? -g : g;
}

Gaussian jacobi_sum(const MultChar& lam, std::uint64_t j) {
    const FieldSpec& spec = *lam.spec;
    require(lam.order == 2 || lam.order == 4, Errc::BadOrder, "jacobi_sum supports character orders 2 and 4");
    std::uint64_t jr = j % lam.order;
    require(jr != 0, Errc::TrivialCharacter, "lambda^j is trivial");
    // i-exponent step per unit of the character exponent
    std::uint64_t step = 4 / lam.order;
    Gaussian acc;
    const Elem one = spec.from_subfield(1);
    for (std::uint64_t k = 0; k < spec.q() - 1; ++k) {
        Elem x = spec.exp(k);
        if (x == one) continue;  // 1 - x = 0
        Elem y = spec.sub(one, x);
        std::uint64_t le = (*lam.exponent(x) * jr) % lam.order;
        Gaussian lv = Gaussian::unit_i_pow(le * step);
        int ev = spec.quad_char(y);
        acc = acc + Gaussian(lv.re * ev, lv.im * ev);
    }
    return acc;
}

BigInt companion_via_jacobi(const FieldSpec& spec, int n, Elem a) {
    require(a != 0, Errc::ZeroShift, "companion sum needs a != 0");
    std::uint64_t d = std::gcd<std::uint64_t>(static_cast<std::uint64_t>(n), spec.q() - 1);
    require(d == 2 || d == 4, Errc::BadOrder, "jacobi route implemented for gcd(n, q-1) in {2, 4}");
    MultChar lam = MultChar::make(spec, d);
    Elem minus_a = spec.neg(a);
    Gaussian total;
    std::uint64_t step = 4 / d;
    for (std::uint64_t j = 1; j < d; ++j) {
        Gaussian J = jacobi_sum(lam, j);
        std::uint64_t le = (*lam.exponent(minus_a) * j) % d;
        total = total + Gaussian::unit_i_pow(le * step) * J;
    }
    int eta_a = spec.quad_char(a);
    total = Gaussian(total.re * eta_a, total.im * eta_a);
    if (total.im != 0) fail(Errc::Internal, "companion sum via Jacobi sums is not rational");
    return total.re;
}

namespace {

Elem power_plus_shift(const FieldSpec& spec, Elem x, int n, Elem a) {
    return x == 0 ? a : spec.add(spec.pow(x, n), a);
}

void check_shift(const FieldSpec&, int n, Elem a) {
    require(a != 0, Errc::ZeroShift, "shift element must be nonzero");
    require(n >= 1 && n <= 8, Errc::BadOrder, "sum degree capped at 8");
}

}  // namespace

std::int64_t jacobsthal_sum(const FieldSpec& spec, int n, Elem a) {
    check_shift(spec, n, a);
    std::int64_t s = 0;
    for (std::uint64_t x = 0; x < spec.q(); ++x)
        s += spec.quad_char(static_cast<Elem>(x)) *
             spec.quad_char(power_plus_shift(spec, static_cast<Elem>(x), n, a));
    return s;
}

std::int64_t companion_sum(const FieldSpec& spec, int n, Elem a) {
    check_shift(spec, n, a);
    std::int64_t s = 0;
    for (std::uint64_t x = 0; x < spec.q(); ++x)
        s += spec.quad_char(power_plus_shift(spec, static_cast<Elem>(x), n, a));
    return s;
}

std::int64_t eta_pair_sum(const PrimeCharData& pcd, Residue which) {
    const std::vector<int>& S = which == Residue::SQ ? pcd.sq : pcd.nsq;
    std::int64_t s = 0;
    for (int u : S)
        for (int v : S) {
            if (v == u || v == pcd.p - u) continue;
            s += pcd.eta(u + v);
        }
    return s;
}

std::int64_t eta_pair_sum_closed(const PrimeCharData& pcd, Residue which) {
    std::int64_t base = static_cast<std::int64_t>((pcd.p - 1) / 2) * (pcd.eta(2) + 1);
    return which == Residue::SQ ? -base : base;
}

CycInt quad_exp_sum(const FieldSpec& spec, Elem a2, Elem a1, Elem a0) {
    require(a2 != 0, Errc::ZeroLead, "quadratic sum needs a2 != 0");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(spec.p()), BigInt(0));
    for (std::uint64_t xi = 0; xi < spec.q(); ++xi) {
        Elem x = static_cast<Elem>(xi);
        Elem v = spec.add(spec.mul(a2, spec.mul(x, x)), spec.add(spec.mul(a1, x), a0));
        coeffs[static_cast<std::size_t>(spec.trace(v))] += 1;
    }
    return CycInt::from_coeffs(spec.p(), std::move(coeffs));
}

CycInt quad_exp_sum_closed(const FieldSpec& spec, Elem a2, Elem a1, Elem a0) {
    require(a2 != 0, Errc::ZeroLead, "quadratic sum needs a2 != 0");
    // chi_1(a0 - a1^2 (4 a2)^{-1}) eta_m(a2) G(eta_m)
    Elem four_a2 = spec.mul(spec.from_subfield(4), a2);
    Elem shift = spec.sub(a0, spec.mul(spec.mul(a1, a1), spec.inv(four_a2)));
    CycInt g = gauss_sum_closed(spec);
    if (spec.quad_char(a2) < 0) g = -g;
    return CycInt::zeta_pow(spec.p(), spec.trace(shift)) * g;
}

}  // namespace wrp
