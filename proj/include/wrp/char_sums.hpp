#pragma once

#include <cstdint>
#include <optional>

#include "wrp/cyclotomic.hpp"
#include "wrp/field.hpp"

namespace wrp {

// Canonical multiplicative character of order d: lambda(theta^k) = zeta_d^k.
// Values are stored as exponents mod d; zero is outside the domain.
struct MultChar {
    const FieldSpec* spec = nullptr;
    std::uint64_t order = 0;

    static MultChar make(const FieldSpec& spec, std::uint64_t d);
    std::optional<std::uint64_t> exponent(Elem x) const;
    bool trivial() const { return order == 1; }
};

// Gaussian integer a + bi; the coefficient ring for order-4 character values.
struct Gaussian {
    BigInt re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
    static Gaussian unit_i_pow(std::uint64_t k);  // i^k

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
    BigInt norm() const { return re * re + im * im; }
};

// Brute-force quadratic Gauss sum over F_q and its closed form
// (-1)^{m-1} G(eta)^m; the two must agree exactly.
CycInt gauss_sum(const FieldSpec& spec);
CycInt gauss_sum_closed(const FieldSpec& spec);

// J(lambda^j, eta_m) summed over x != 0, 1. Restricted to character orders
// dividing 4, which keeps every value inside Z[i]; that covers every use the
// companion-sum identity makes of Jacobi sums here. TrivialCharacter when
// lambda^j or the product character degenerates.
Gaussian jacobi_sum(const MultChar& lam, std::uint64_t j);

// Companion sum I_n(a) recovered through Jacobi sums (d = gcd(n, q-1) must
// divide 4); exposed as the cross-check route against companion_sum.
BigInt companion_via_jacobi(const FieldSpec& spec, int n, Elem a);

// H_n(a) = sum eta(x) eta(x^n + a); ZeroShift when a = 0, n capped at 8.
std::int64_t jacobsthal_sum(const FieldSpec& spec, int n, Elem a);
// I_n(a) = sum eta(x^n + a); same domain rules.
std::int64_t companion_sum(const FieldSpec& spec, int n, Elem a);

enum class Residue { SQ, NSQ };

// sum_{u in S} sum_{v in S, v != +-u} eta(u+v) over S = squares or
// non-squares of F_p, plus the closed form -+ (p-1)/2 (eta(2)+1).
std::int64_t eta_pair_sum(const PrimeCharData& pcd, Residue which);
std::int64_t eta_pair_sum_closed(const PrimeCharData& pcd, Residue which);

// sum_x chi_1(a2 x^2 + a1 x + a0), brute force and the completed-square
// closed form chi_1(a0 - a1^2 (4 a2)^{-1}) eta_m(a2) G(eta_m). ZeroLead when
// a2 = 0.
CycInt quad_exp_sum(const FieldSpec& spec, Elem a2, Elem a1, Elem a0);
CycInt quad_exp_sum_closed(const FieldSpec& spec, Elem a2, Elem a1, Elem a0);

}  // namespace wrp
