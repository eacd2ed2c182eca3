#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wrp {

using BigInt = boost::multiprecision::cpp_int;

// Error taxonomy shared across all modules. Codes map onto the CLI's
// exit-code contract (config -> 3, mismatch -> 2, everything else -> 1).
enum class Errc {
    NotPrime,
    Reducible,
    NoPrimitive,
    BadOrder,
    MixedPrime,
    BadUnit,
    TrivialCharacter,
    ZeroShift,
    ZeroLead,
    BadExponent,
    NotPlateaued,
    ParityMismatch,
    LengthMismatch,
    ZeroPair,
    UnsupportedIndexPair,
    BadOrbit,
    SpaceTooLarge,
    ConfigError,
    Mismatch,
    CacheCorrupt,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

// Exact rational on BigInt. The closed-form evaluators route through this
// so that intermediate p^{-1} factors (degenerate s = m profiles) stay exact;
// every final value must clear its denominator.
class Frac {
  public:
    Frac() : num_(0), den_(1) {}
    Frac(BigInt n) : num_(std::move(n)), den_(1) {}
    Frac(long long n) : num_(n), den_(1) {}
    Frac(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) { return Frac(a.num_ * b.num_, a.den_ * b.den_); }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num_ == 0) fail(Errc::Internal, "rational division by zero");
        return Frac(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    Frac operator-() const { return Frac(-num_, den_); }

    bool is_integer() const { return den_ == 1; }

    // Narrow to BigInt; the caller asserts the value cleared its denominator.
    BigInt as_integer(const char* what) const {
        if (den_ != 1) fail(Errc::Internal, std::string("non-integral value for ") + what);
        return num_;
    }

  private:
    void normalize() {
        if (den_ == 0) fail(Errc::Internal, "rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_, den_;
};

inline BigInt big_pow(BigInt base, unsigned k) {
    BigInt r = 1;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

inline std::int64_t to_i64(const BigInt& v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        fail(Errc::Internal, std::string("value out of int64 range for ") + what);
    return static_cast<std::int64_t>(v);
}

inline int resolve_jobs(int jobs) {
    if (jobs == 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    return jobs < 1 ? 1 : jobs;
}

// Runs fn(begin, end, tid) on `jobs` threads over [0, n). jobs <= 1 runs
// inline; jobs == 0 means hardware concurrency.
template <typename Fn>
void parallel_chunks(std::uint64_t n, int jobs, Fn&& fn) {
    jobs = resolve_jobs(jobs);
    if (jobs == 1 || n < 2) {
        fn(std::uint64_t{0}, n, 0);
        return;
    }
    std::uint64_t nj = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), n);
    std::vector<std::thread> threads;
    threads.reserve(nj);
    std::uint64_t chunk = (n + nj - 1) / nj;
    for (std::uint64_t t = 0; t < nj; ++t) {
        std::uint64_t lo = t * chunk;
        std::uint64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, lo, hi, t] { fn(lo, hi, static_cast<int>(t)); });
    }
    for (auto& th : threads) th.join();
}

}  // namespace wrp
