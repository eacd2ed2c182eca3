#include "wrp/field.hpp"

#include <algorithm>
#include <sstream>

namespace wrp {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

PrimeCharData PrimeCharData::make(int p) {
    require(p > 2 && is_prime(static_cast<std::uint64_t>(p)), Errc::NotPrime,
            "prime character data needs an odd prime, got " + std::to_string(p));
    PrimeCharData d;
    d.p = p;
    d.eta_table.assign(static_cast<std::size_t>(p), -1);
    d.eta_table[0] = 0;
    for (int x = 1; x < p; ++x) d.eta_table[static_cast<std::size_t>((x * x) % p)] = 1;
    for (int c = 1; c < p; ++c) (d.eta_table[static_cast<std::size_t>(c)] == 1 ? d.sq : d.nsq).push_back(c);
    d.p_star = static_cast<long long>(d.eta_table[static_cast<std::size_t>(p - 1)]) * p;
    if (d.sq.size() != d.nsq.size() || d.sq.size() != static_cast<std::size_t>((p - 1) / 2))
        fail(Errc::Internal, "square/non-square split has wrong sizes");
    if (p % 4 == 1 && (d.p_star != p || d.eta_table[static_cast<std::size_t>(p - 1)] != 1))
        fail(Errc::Internal, "eta(-1) must be +1 when p = 1 mod 4");
    return d;
}

std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& modulus,
                             int p) {
    const std::size_t m = modulus.size() - 1;
    std::vector<int> res(2 * m, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) res[i + j] = (res[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t d = 2 * m - 1; d >= m; --d) {
        int c = res[d];
        if (c) {
            res[d] = 0;
            for (std::size_t i = 0; i <= m; ++i) {
                std::size_t k = d - m + i;
                res[k] = ((res[k] - c * modulus[i]) % p + p) % p;
            }
        }
        if (d == m) break;
    }
    res.resize(m);
    return res;
}

namespace {

std::vector<int> poly_powmod(std::vector<int> base, BigInt e, const std::vector<int>& modulus, int p) {
    const std::size_t m = modulus.size() - 1;
    std::vector<int> r(m, 0);
    r[0] = 1;
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mulmod(r, base, modulus, p);
        base = poly_mulmod(base, base, modulus, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool poly_is_irreducible(const std::vector<int>& modulus, int p) {
    const std::size_t m = modulus.size() - 1;
    if (m == 0) return false;
    if (modulus[m] != 1) return false;
    if (m == 1) return true;
    // x^{p^m} = x mod f, and x^{p^{m/l}} != x for each prime l | m
    std::vector<int> x(m, 0);
    x[1] = 1;
    auto frob = [&](unsigned k) {
        return poly_powmod(x, big_pow(BigInt(p), k), modulus, p);
    };
    if (frob(static_cast<unsigned>(m)) != x) return false;
    for (std::uint64_t l : prime_factors(static_cast<std::uint64_t>(m)))
        if (frob(static_cast<unsigned>(m / l)) == x) return false;
    return true;
}

FieldSpec FieldSpec::make(int p, int m, std::optional<std::vector<int>> modulus,
                          std::optional<std::vector<int>> theta_rep) {
    require(p > 2 && is_prime(static_cast<std::uint64_t>(p)), Errc::NotPrime,
            std::to_string(p) + " is not an odd prime");
    require(m >= 1, Errc::BadOrder, "extension degree must be >= 1");

    FieldSpec f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = 1;
    for (int i = 0; i < m; ++i) f.q_ *= static_cast<std::uint64_t>(p);
    f.pcd_ = PrimeCharData::make(p);

    if (modulus) {
        std::vector<int> mod = *modulus;
        require(mod.size() == static_cast<std::size_t>(m) + 1, Errc::Reducible,
                "modulus must have degree exactly m");
        for (int& c : mod) c = ((c % p) + p) % p;
        require(mod[static_cast<std::size_t>(m)] == 1, Errc::Reducible, "modulus must be monic");
        require(poly_is_irreducible(mod, p), Errc::Reducible, "supplied modulus is reducible over F_p");
        f.modulus_ = std::move(mod);
    } else if (m == 1) {
        f.modulus_ = {0, 1};  // F_p = F_p[x]/(x)
    } else {
        bool found = false;
        for (std::uint64_t n = 0; n < f.q_ && !found; ++n) {
            std::vector<int> mod(static_cast<std::size_t>(m) + 1, 0);
            std::uint64_t t = n;
            for (int i = 0; i < m; ++i) {
                mod[static_cast<std::size_t>(i)] = static_cast<int>(t % static_cast<std::uint64_t>(p));
                t /= static_cast<std::uint64_t>(p);
            }
            mod[static_cast<std::size_t>(m)] = 1;
            if (poly_is_irreducible(mod, p)) {
                f.modulus_ = std::move(mod);
                found = true;
            }
        }
        if (!found) fail(Errc::Internal, "no irreducible modulus found");
    }

    f.build_tables();

    if (theta_rep) {
        Elem th = f.from_rep(*theta_rep);
        require(th != 0 && f.element_order(th) == f.q_ - 1, Errc::NoPrimitive,
                "supplied theta is not a primitive element");
        f.theta_ = th;
        f.build_tables();  // rebuild exp/log on the chosen generator
    }
    return f;
}

std::uint64_t FieldSpec::element_order(Elem a) const {
    // order divisibility over the prime factorization of q-1
    auto pw = [&](Elem b, std::uint64_t e) {
        std::vector<int> rb = rep(b);
        std::vector<int> acc(static_cast<std::size_t>(m_), 0);
        acc[0] = 1;
        while (e) {
            if (e & 1) acc = poly_mulmod(acc, rb, modulus_, p_);
            rb = poly_mulmod(rb, rb, modulus_, p_);
            e >>= 1;
        }
        return from_rep(acc);
    };
    std::uint64_t ord = q_ - 1;
    if (pw(a, ord) != 1) return 0;
    for (std::uint64_t l : prime_factors(q_ - 1)) {
        while (ord % l == 0 && pw(a, ord / l) == 1) ord /= l;
    }
    return ord;
}

void FieldSpec::build_tables() {
    const std::uint64_t q = q_;
    neg_table_.assign(q, 0);
    trace_table_.assign(q, 0);

    // addition: digitwise mod p; table only at desk scale
    if (q <= 1024) {
        add_table_.assign(q * q, 0);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b)
                add_table_[a * q + b] = add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
    } else {
        add_table_.clear();
    }
    for (std::uint64_t a = 0; a < q; ++a) {
        std::uint64_t r = 0, pw = 1, t = a;
        for (int i = 0; i < m_; ++i) {
            r += ((static_cast<std::uint64_t>(p_) - t % static_cast<std::uint64_t>(p_)) %
                  static_cast<std::uint64_t>(p_)) *
                 pw;
            t /= static_cast<std::uint64_t>(p_);
            pw *= static_cast<std::uint64_t>(p_);
        }
        neg_table_[a] = static_cast<Elem>(r);
    }

    if (theta_ == 0) {
        // first primitive candidate in the order x, x+1, x+2, ...
        Elem cand = m_ >= 2 ? static_cast<Elem>(p_) : 0;  // the class of x (0 for m = 1)
        for (;; ++cand) {
            require(cand < q, Errc::NoPrimitive, "primitive element search exhausted the field");
            if (cand != 0 && element_order(cand) == q - 1) break;
        }
        theta_ = cand;
    }

    exp_table_.assign(q - 1, 1);
    log_table_.assign(q, 0);
    std::vector<int> acc(static_cast<std::size_t>(m_), 0);
    acc[0] = 1;
    std::vector<int> th = rep(theta_);
    for (std::uint64_t k = 0; k < q - 1; ++k) {
        exp_table_[k] = from_rep(acc);
        log_table_[exp_table_[k]] = static_cast<std::uint32_t>(k);
        acc = poly_mulmod(acc, th, modulus_, p_);
    }
    if (from_rep(acc) != 1) fail(Errc::NoPrimitive, "theta order check failed");

    // trace by direct Frobenius orbit sum
    for (std::uint64_t a = 0; a < q; ++a) {
        Elem x = static_cast<Elem>(a);
        Elem s = 0;
        for (int i = 0; i < m_; ++i) {
            s = add_slow(s, x);
            if (x != 0) {
                std::uint64_t lg = (static_cast<std::uint64_t>(log_table_[x]) * static_cast<std::uint64_t>(p_)) %
                                   (q - 1);
                x = exp_table_[lg];
            }
        }
        trace_table_[a] = to_subfield(s);
    }

    if (q <= 1024) {
        trace_mul_table_.assign(q * q, 0);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t x = 0; x < q; ++x)
                trace_mul_table_[a * q + x] =
                    static_cast<std::int8_t>(trace_table_[mul(static_cast<Elem>(a), static_cast<Elem>(x))]);
    } else {
        trace_mul_table_.clear();
    }
}

Elem FieldSpec::add_slow(Elem a, Elem b) const {
    std::uint64_t r = 0, pw = 1, ta = a, tb = b;
    for (int i = 0; i < m_; ++i) {
        r += ((ta + tb) % static_cast<std::uint64_t>(p_)) * pw;
        ta /= static_cast<std::uint64_t>(p_);
        tb /= static_cast<std::uint64_t>(p_);
        pw *= static_cast<std::uint64_t>(p_);
    }
    return static_cast<Elem>(r);
}

Elem FieldSpec::inv(Elem a) const {
    require(a != 0, Errc::Internal, "inverse of zero");
    std::uint64_t lg = log_table_[a];
    return lg == 0 ? 1 : exp_table_[q_ - 1 - lg];
}

Elem FieldSpec::pow(Elem a, std::int64_t e) const {
    if (a == 0) {
        require(e > 0, Errc::Internal, "0^e needs e > 0");
        return 0;
    }
    std::int64_t n = static_cast<std::int64_t>(q_) - 1;
    std::int64_t k = (static_cast<std::int64_t>(log_table_[a]) * (e % n)) % n;
    if (k < 0) k += n;
    return exp_table_[static_cast<std::uint64_t>(k)];
}

std::vector<int> FieldSpec::rep(Elem a) const {
    std::vector<int> r(static_cast<std::size_t>(m_));
    std::uint64_t t = a;
    for (int i = 0; i < m_; ++i) {
        r[static_cast<std::size_t>(i)] = static_cast<int>(t % static_cast<std::uint64_t>(p_));
        t /= static_cast<std::uint64_t>(p_);
    }
    return r;
}

Elem FieldSpec::from_rep(const std::vector<int>& rep) const {
    require(rep.size() <= static_cast<std::size_t>(m_), Errc::Internal, "coefficient vector too long");
    std::uint64_t r = 0, pw = 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(m_); ++i) {
        int c = i < rep.size() ? ((rep[i] % p_) + p_) % p_ : 0;
        r += static_cast<std::uint64_t>(c) * pw;
        pw *= static_cast<std::uint64_t>(p_);
    }
    return static_cast<Elem>(r);
}

int FieldSpec::to_subfield(Elem a) const {
    require(a < static_cast<Elem>(p_), Errc::Internal, "element is not in the prime subfield");
    return static_cast<int>(a);
}

std::vector<Elem> FieldSpec::cyclotomic_class(std::uint64_t N, std::uint64_t i) const {
    require(N >= 2 && (q_ - 1) % N == 0, Errc::BadOrder,
            "cyclotomic order must satisfy N >= 2 and N | q-1");
    require(i < N, Errc::BadOrder, "class index out of range");
    std::vector<Elem> out;
    out.reserve((q_ - 1) / N);
    for (std::uint64_t k = i; k < q_ - 1; k += N) out.push_back(exp_table_[k]);
    std::sort(out.begin(), out.end());
    return out;
}

std::string FieldSpec::format(Elem a) const {
    if (a == 0) return "0";
    return "t^" + std::to_string(log_table_[a]);
}

Elem FieldSpec::parse_element(const std::string& text) const {
    try {
        if (text == "0") return 0;
        if (text == "t") return theta_;
        if (text.rfind("t^", 0) == 0) {
            std::size_t pos = 0;
            long long k = std::stoll(text.substr(2), &pos);
            require(pos == text.size() - 2, Errc::ConfigError, "bad element literal: " + text);
            long long n = static_cast<long long>(q_) - 1;
            k %= n;
            if (k < 0) k += n;
            return exp_table_[static_cast<std::uint64_t>(k)];
        }
        // integer literal in F_p
        std::size_t pos = 0;
        long long v = std::stoll(text, &pos);
        require(pos == text.size(), Errc::ConfigError, "bad element literal: " + text);
        return from_subfield(static_cast<int>(((v % p_) + p_) % p_));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::ConfigError, "bad element literal: " + text);
    }
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    os << "F_" << p_;
    if (m_ > 1) os << "^" << m_;
    os << " modulus=[";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    os << "] theta=[";
    auto tr = rep(theta_);
    for (std::size_t i = 0; i < tr.size(); ++i) os << (i ? "," : "") << tr[i];
    os << "]";
    return os.str();
}

}  // namespace wrp
