#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wrp/common.hpp"

namespace wrp {

// Field elements are codes in [0, q): the polynomial-basis coefficient
// vector (r0, ..., r_{m-1}) packed as sum r_i p^i. Code arithmetic goes
// through the owning FieldSpec.
using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Quadratic-character data of the prime field: eta, the square/non-square
// split of F_p^*, and p* = eta(-1) p.
struct PrimeCharData {
    int p = 0;
    std::vector<int> eta_table;  // index by residue, values in {-1,0,+1}
    std::vector<int> sq, nsq;    // ascending
    long long p_star = 0;

    static PrimeCharData make(int p);

    int eta(long long c) const {
        long long r = c % p;
        if (r < 0) r += p;
        return eta_table[static_cast<std::size_t>(r)];
    }
    bool is_square(long long c) const { return eta(c) == 1; }
};

// Exact arithmetic in F_{p^m}. Immutable after construction; all tables are
// precomputed so every operation is a lookup. Elements print as "0" or "t^k"
// (powers of the designated primitive element), which is the cross-module
// element syntax.
class FieldSpec {
  public:
    // Searches monic moduli in ascending packed-coefficient order when none is
    // given, and takes primitive-element candidates in the order x, x+1, ...
    // Both choices are deterministic and recorded in reports; both can be
    // overridden. A supplied theta is verified to have order q-1.
    static FieldSpec make(int p, int m, std::optional<std::vector<int>> modulus = std::nullopt,
                          std::optional<std::vector<int>> theta_rep = std::nullopt);

    int p() const { return p_; }
    int m() const { return m_; }
    std::uint64_t q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }  // c0..cm, cm = 1
    Elem theta() const { return theta_; }
    const PrimeCharData& prime_char() const { return pcd_; }

    Elem add(Elem a, Elem b) const {
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_slow(a, b);
    }
    Elem neg(Elem a) const { return neg_table_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t s = static_cast<std::uint64_t>(log_table_[a]) + log_table_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_table_[s];
    }
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::int64_t e) const;

    // theta^k for k in [0, q-1)
    Elem exp(std::uint64_t k) const { return exp_table_[k % (q_ - 1)]; }
    // discrete log base theta; absent for zero
    std::optional<std::uint64_t> log(Elem a) const {
        if (a == 0) return std::nullopt;
        return log_table_[a];
    }

    std::vector<int> rep(Elem a) const;
    Elem from_rep(const std::vector<int>& rep) const;
    // embed c in [0, p) as the constant polynomial
    Elem from_subfield(int c) const { return static_cast<Elem>(((c % p_) + p_) % p_); }
    int to_subfield(Elem a) const;  // Internal error if a is not in F_p

    int trace(Elem a) const { return trace_table_[a]; }
    // trace(a*x); backed by a q x q table at desk scale
    int trace_mul(Elem a, Elem x) const {
        if (!trace_mul_table_.empty()) return trace_mul_table_[static_cast<std::uint64_t>(a) * q_ + x];
        return trace(mul(a, x));
    }
    // quadratic character of F_q: 0 at zero, +1 on even powers of theta
    int quad_char(Elem a) const {
        if (a == 0) return 0;
        return (log_table_[a] & 1) ? -1 : 1;
    }

    // theta^i <theta^N>; BadOrder unless N >= 2 divides q-1 and 0 <= i < N
    std::vector<Elem> cyclotomic_class(std::uint64_t N, std::uint64_t i) const;

    // canonical traversal key: 0 first, then theta powers in exponent order
    std::uint64_t order_key(Elem a) const { return a == 0 ? 0 : log_table_[a] + 1; }
    Elem element_by_key(std::uint64_t key) const { return key == 0 ? 0 : exp_table_[key - 1]; }

    std::string format(Elem a) const;
    Elem parse_element(const std::string& text) const;  // "0", "t^k", or an F_p literal

    std::string describe() const;  // "F_{p^m}, modulus ..., theta ..."

  private:
    FieldSpec() = default;
    Elem add_slow(Elem a, Elem b) const;
    void build_tables();
    std::uint64_t element_order(Elem a) const;

    int p_ = 0, m_ = 0;
    std::uint64_t q_ = 0;
    std::vector<int> modulus_;
    Elem theta_ = 0;
    PrimeCharData pcd_;
    std::vector<Elem> exp_table_;           // theta^k, k in [0, q-1)
    std::vector<std::uint32_t> log_table_;  // valid for nonzero codes
    std::vector<Elem> add_table_;           // q*q when q small enough, else empty
    std::vector<Elem> neg_table_;
    std::vector<int> trace_table_;
    std::vector<std::int8_t> trace_mul_table_;  // q*q companion of trace_table_
};

// Polynomial helpers over F_p (coefficient vectors, lowest degree first).
// Exposed for the irreducibility tests.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& modulus,
                             int p);
bool poly_is_irreducible(const std::vector<int>& modulus, int p);

}  // namespace wrp
