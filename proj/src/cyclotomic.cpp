#include "wrp/cyclotomic.hpp"

#include <sstream>

#include "wrp/field.hpp"

namespace wrp {

CycInt::CycInt(int p) : p_(p), c_(static_cast<std::size_t>(p), BigInt(0)), canonical_(true) {
    require(p >= 2 && is_prime(static_cast<std::uint64_t>(p)), Errc::NotPrime,
            "cyclotomic index must be prime");
}

CycInt CycInt::from_coeffs(int p, std::vector<BigInt> coeffs, bool canonicalize) {
    CycInt z(p);
    require(coeffs.size() == static_cast<std::size_t>(p), Errc::Internal,
            "coefficient vector must have length p");
    z.c_ = std::move(coeffs);
    z.canonical_ = false;
    if (canonicalize) return z.canon();
    if (z.c_[0] == 0) z.canonical_ = true;
    return z;
}

CycInt CycInt::integer(int p, const BigInt& n) {
    CycInt z(p);
    z.c_[0] = n;
    return z.canon();
}

CycInt CycInt::zeta_pow(int p, long long a) {
    CycInt z(p);
    long long r = a % p;
    if (r < 0) r += p;
    z.c_[static_cast<std::size_t>(r)] = 1;
    return z.canon();
}

CycInt CycInt::canon() const {
    CycInt z(p_);
    const BigInt& c0 = c_[0];
    for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] = c_[i] - c0;
    z.canonical_ = true;
    return z;
}

void CycInt::check_same_prime(const CycInt& a, const CycInt& b) {
    require(a.p_ == b.p_, Errc::MixedPrime, "cyclotomic operands over different primes");
}

CycInt operator+(const CycInt& a, const CycInt& b) {
    CycInt::check_same_prime(a, b);
    CycInt z(a.p_);
    for (std::size_t i = 0; i < z.c_.size(); ++i) z.c_[i] = a.c_[i] + b.c_[i];
    return z.canon();
}

CycInt operator-(const CycInt& a, const CycInt& b) {
    CycInt::check_same_prime(a, b);
    CycInt z(a.p_);
    for (std::size_t i = 0; i < z.c_.size(); ++i) z.c_[i] = a.c_[i] - b.c_[i];
    return z.canon();
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    CycInt::check_same_prime(a, b);
    CycInt z(a.p_);
    const int p = a.p_;
    for (int i = 0; i < p; ++i) {
        if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < p; ++j) {
            if (b.c_[static_cast<std::size_t>(j)] == 0) continue;
            int k = i + j;
            if (k >= p) k -= p;
            z.c_[static_cast<std::size_t>(k)] +=
                a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
        }
    }
    return z.canon();
}

CycInt CycInt::operator-() const {
    CycInt z(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] = -c_[i];
    return z.canon();
}

bool CycInt::operator==(const CycInt& o) const {
    check_same_prime(*this, o);
    CycInt a = canonical_ ? *this : canon();
    CycInt b = o.canonical_ ? o : o.canon();
    return a.c_ == b.c_;
}

CycInt CycInt::galois(long long s) const {
    long long r = s % p_;
    if (r < 0) r += p_;
    require(r != 0, Errc::BadUnit, "Galois twist needs a unit mod p");
    CycInt z(p_);
    for (int i = 0; i < p_; ++i)
        z.c_[static_cast<std::size_t>((static_cast<long long>(i) * r) % p_)] += c_[static_cast<std::size_t>(i)];
    return z.canon();
}

CycInt CycInt::mag_squared() const { return *this * galois(p_ - 1); }

std::optional<BigInt> CycInt::as_integer() const {
    CycInt z = canonical_ ? *this : canon();
    // canonical embedding of n has every basis coefficient 1..p-1 equal to -n
    const BigInt& v = z.c_[1];
    for (std::size_t i = 2; i < z.c_.size(); ++i)
        if (z.c_[i] != v) return std::nullopt;
    return -v;
}

bool CycInt::is_zero() const {
    auto n = as_integer();
    return n && *n == 0;
}

std::string CycInt::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
}

CycInt gauss_sum_prime(int p) {
    PrimeCharData d = PrimeCharData::make(p);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(p), BigInt(0));
    for (int x = 1; x < p; ++x) coeffs[static_cast<std::size_t>(x)] = d.eta(x);
    return CycInt::from_coeffs(p, std::move(coeffs));
}

CycInt sqrt_pstar_power(int p, int k) {
    require(k >= 0, Errc::Internal, "negative Gauss-sum power");
    CycInt g = gauss_sum_prime(p);
    CycInt r = CycInt::integer(p, 1);
    for (int i = 0; i < k; ++i) r = r * g;
    if (k % 2 == 0) {
        long long ps = PrimeCharData::make(p).p_star;
        if (r != CycInt::integer(p, big_pow(BigInt(ps), static_cast<unsigned>(k / 2))))
            fail(Errc::Internal, "G(eta)^k disagrees with p*^{k/2}");
    }
    return r;
}

}  // namespace wrp
