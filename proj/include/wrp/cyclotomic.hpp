#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wrp/common.hpp"

namespace wrp {

// Exact element of Z[zeta_p]: a dense coefficient vector over the powers
// zeta^0 .. zeta^{p-1}. Canonical form has coeffs[0] = 0, obtained through
// the relation sum_i zeta^i = 0; equality compares canonical forms. All
// square roots of p* live here via the quadratic Gauss sum, never as floats.
class CycInt {
  public:
    explicit CycInt(int p);  // zero
    static CycInt from_coeffs(int p, std::vector<BigInt> coeffs, bool canonicalize = true);
    static CycInt integer(int p, const BigInt& n);
    static CycInt zeta_pow(int p, long long a);

    int p() const { return p_; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_canonical() const { return canonical_; }
    CycInt canon() const;

    friend CycInt operator+(const CycInt& a, const CycInt& b);
    friend CycInt operator-(const CycInt& a, const CycInt& b);
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    CycInt operator-() const;
    bool operator==(const CycInt& o) const;
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    // zeta^a -> zeta^{sa}; BadUnit when s = 0 mod p
    CycInt galois(long long s) const;
    // z * sigma_{-1}(z); rational exactly when the squared magnitude is
    CycInt mag_squared() const;
    std::optional<BigInt> as_integer() const;
    bool is_zero() const;

    std::string str() const;  // debugging / report text

  private:
    static void check_same_prime(const CycInt& a, const CycInt& b);

    int p_;
    std::vector<BigInt> c_;
    bool canonical_;
};

// G(eta) = sum_{x in F_p^*} eta(x) zeta^x, the exact representative of
// sqrt(p*); its square is p* by construction.
CycInt gauss_sum_prime(int p);
// G(eta)^k; an ordinary integer p*^{k/2} when k is even
CycInt sqrt_pstar_power(int p, int k);

}  // namespace wrp
