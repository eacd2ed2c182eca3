#include "wrp/pfunction.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wrp {

PFunction eval_descriptor(const FieldSpec& spec, const std::vector<TraceTerm>& descriptor) {
    for (const TraceTerm& t : descriptor)
        require(t.exp >= 1 && t.exp <= spec.q() - 1, Errc::BadExponent,
                "descriptor exponent must lie in [1, q-1]");
    PFunction f;
    f.spec = &spec;
    f.descriptor = descriptor;
    f.values.assign(spec.q(), 0);
    for (std::uint64_t xi = 0; xi < spec.q(); ++xi) {
        Elem x = static_cast<Elem>(xi);
        Elem acc = 0;
        for (const TraceTerm& t : descriptor)
            acc = spec.add(acc, spec.mul(t.coeff, spec.pow(x, static_cast<std::int64_t>(t.exp))));
        f.values[xi] = static_cast<std::uint8_t>(spec.trace(acc));
    }
    return f;
}

std::string descriptor_str(const FieldSpec& spec, const std::vector<TraceTerm>& descriptor) {
    if (descriptor.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < descriptor.size(); ++i) {
        if (i) os << " + ";
        os << spec.format(descriptor[i].coeff) << " x^" << descriptor[i].exp;
    }
    return os.str();
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

// Accepts sums of monomials like "x^2", "t^1 x^6", "- t^1 x^6", "3 x^10",
// with optional '*' between coefficient and power.
std::vector<TraceTerm> parse_descriptor(const FieldSpec& spec, const std::string& text) {
    std::vector<TraceTerm> out;
    std::string t = strip(text);
    if (t.empty() || t == "0") return out;
    std::size_t pos = 0;
    int sign = 1;
    while (pos < t.size()) {
        while (pos < t.size() && (t[pos] == ' ' || t[pos] == '\t')) ++pos;
        if (pos >= t.size()) break;
        if (t[pos] == '+') {
            sign = 1;
            ++pos;
            continue;
        }
        if (t[pos] == '-') {
            sign = -1;
            ++pos;
            continue;
        }
        std::size_t next = t.find_first_of("+-", pos);
        std::string term = strip(t.substr(pos, next == std::string::npos ? next : next - pos));
        pos = next == std::string::npos ? t.size() : next;

        std::size_t xp = term.find('x');
        require(xp != std::string::npos, Errc::ConfigError, "monomial needs an x power: " + term);
        std::string coeff_text = strip(term.substr(0, xp));
        if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text = strip(coeff_text.substr(0, coeff_text.size() - 1));
        std::string pow_text = strip(term.substr(xp + 1));
        std::uint64_t e = 1;
        if (!pow_text.empty()) {
            require(pow_text[0] == '^', Errc::ConfigError, "bad monomial: " + term);
            try {
                e = std::stoull(strip(pow_text.substr(1)));
            } catch (const std::exception&) {
                fail(Errc::ConfigError, "bad exponent in: " + term);
            }
        }
        Elem c = coeff_text.empty() ? spec.from_subfield(1) : spec.parse_element(coeff_text);
        if (sign < 0) c = spec.neg(c);
        if (c != 0) out.push_back(TraceTerm{c, e});
        sign = 1;
    }
    return out;
}

CycInt WalshSpectrum::value(Elem beta) const {
    auto h = hist(beta);
    std::vector<BigInt> coeffs(h.begin(), h.end());
    return CycInt::from_coeffs(p_, std::move(coeffs));
}

bool WalshSpectrum::is_zero_at(Elem beta) const {
    auto h = hist(beta);
    for (int c = 1; c < p_; ++c)
        if (h[static_cast<std::size_t>(c)] != h[0]) return false;
    return true;
}

std::optional<std::int64_t> WalshSpectrum::mag_squared_int(Elem beta) const {
    // z sigma_{-1}(z) has coefficient A_d = sum_c h_c h_{c+d}; it is the
    // rational integer A_0 - A_1 exactly when A_1 = ... = A_{p-1}
    auto h = hist(beta);
    std::int64_t a0 = 0, a1 = 0;
    for (int c = 0; c < p_; ++c) a0 += h[static_cast<std::size_t>(c)] * h[static_cast<std::size_t>(c)];
    for (int d = 1; d < p_; ++d) {
        std::int64_t ad = 0;
        for (int c = 0; c < p_; ++c)
            ad += h[static_cast<std::size_t>(c)] * h[static_cast<std::size_t>((c + d) % p_)];
        if (d == 1)
            a1 = ad;
        else if (ad != a1)
            return std::nullopt;
    }
    return a0 - a1;
}

std::int64_t WalshSpectrum::parseval_sum() const {
    // individual |chi^(beta)|^2 may live outside Z for arbitrary functions;
    // the sum of the autocorrelation vectors is always the rational q^2
    std::vector<std::int64_t> totals(static_cast<std::size_t>(p_), 0);
    for (std::uint64_t b = 0; b < q_; ++b) {
        auto h = hist(static_cast<Elem>(b));
        for (int d = 0; d < p_; ++d) {
            std::int64_t ad = 0;
            for (int c = 0; c < p_; ++c)
                ad += h[static_cast<std::size_t>(c)] * h[static_cast<std::size_t>((c + d) % p_)];
            totals[static_cast<std::size_t>(d)] += ad;
        }
    }
    for (int d = 2; d < p_; ++d)
        if (totals[static_cast<std::size_t>(d)] != totals[1])
            fail(Errc::Internal, "Parseval sum is not a rational integer");
    return totals[0] - totals[1];
}

WalshSpectrum walsh_transform(const PFunction& f) {
    const FieldSpec& spec = *f.spec;
    const int p = spec.p();
    const std::uint64_t q = spec.q();
    WalshSpectrum w(p, q);
    for (std::uint64_t b = 0; b < q; ++b) {
        auto h = w.hist_mut(static_cast<Elem>(b));
        for (std::uint64_t x = 0; x < q; ++x) {
            int c = f.values[x] - spec.trace_mul(static_cast<Elem>(b), static_cast<Elem>(x));
            if (c < 0) c += p;
            ++h[static_cast<std::size_t>(c)];
        }
    }
    return w;
}

namespace {

using WalshCandidates = std::vector<std::pair<std::vector<std::int64_t>, std::pair<int, int>>>;

WalshCandidates build_walsh_candidates(int p, int ms) {
    CycInt g = sqrt_pstar_power(p, ms);
    WalshCandidates out;
    for (int eps : {1, -1}) {
        for (int c = 0; c < p; ++c) {
            CycInt cand = CycInt::zeta_pow(p, c) * g;
            if (eps < 0) cand = -cand;
            std::vector<std::int64_t> v;
            v.reserve(static_cast<std::size_t>(p));
            for (const BigInt& x : cand.coeffs()) v.push_back(to_i64(x, "walsh candidate"));
            out.emplace_back(std::move(v), std::make_pair(eps, c));
        }
    }
    return out;
}

// the 2p exact candidates eps G(eta)^{m+s} zeta^c, canonicalized into int64
// coefficient vectors (desk scale keeps them small); memoized since search
// classifies the same (p, m+s) millions of times
const WalshCandidates& walsh_candidates(int p, int ms) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, WalshCandidates> table;
    std::scoped_lock lk(mu);
    auto [it, fresh] = table.try_emplace({p, ms});
    if (fresh) it->second = build_walsh_candidates(p, ms);
    return it->second;
}

bool is_power_of(std::int64_t v, int p, int& k) {
    k = 0;
    while (v > 1 && v % p == 0) {
        v /= p;
        ++k;
    }
    return v == 1;
}

}  // namespace

PlateauedProfile classify(const PFunction& f) { return classify(f, walsh_transform(f)); }

PlateauedProfile classify(const PFunction& f, const WalshSpectrum& w) {
    const FieldSpec& spec = *f.spec;
    const int p = spec.p();
    const std::uint64_t q = spec.q();

    std::int64_t level = 0;
    std::vector<Elem> support;
    for (std::uint64_t b = 0; b < q; ++b) {
        auto v = w.mag_squared_int(static_cast<Elem>(b));
        if (!v) fail(Errc::NotPlateaued, "squared Walsh magnitude leaves the rational integers");
        if (*v == 0) continue;
        if (level == 0)
            level = *v;
        else if (*v != level)
            fail(Errc::NotPlateaued, "squared Walsh magnitude takes a third value");
        support.push_back(static_cast<Elem>(b));
    }
    int k = 0;
    if (level == 0 || !is_power_of(level, p, k) || k < spec.m() || k > 2 * spec.m())
        fail(Errc::NotPlateaued, "nonzero |chi|^2 level is not p^{m+s} with 0 <= s <= m");

    PlateauedProfile prof;
    prof.s = k - spec.m();
    prof.balanced = w.is_zero_at(0);
    prof.dual.assign(q, 0);
    prof.support = support;
    if (support.size() != static_cast<std::size_t>(big_pow(BigInt(p), static_cast<unsigned>(spec.m() - prof.s))))
        fail(Errc::Internal, "support size contradicts the plateau order");

    // weak regularity: every support value must be one of the 2p candidates
    const auto& cands = walsh_candidates(p, spec.m() + prof.s);
    prof.weakly_regular = true;
    std::optional<int> eps;
    for (Elem b : support) {
        auto h = w.hist(b);
        std::vector<std::int64_t> canon(static_cast<std::size_t>(p));
        for (int c = 0; c < p; ++c) canon[static_cast<std::size_t>(c)] = h[static_cast<std::size_t>(c)] - h[0];
        bool matched = false;
        for (const auto& [cv, tag] : cands) {
            if (cv == canon) {
                if (eps && *eps != tag.first) {
                    prof.weakly_regular = false;  // sign flips across the support
                } else {
                    eps = tag.first;
                }
                prof.dual[b] = static_cast<std::uint8_t>(tag.second);
                matched = true;
                break;
            }
        }
        if (!matched) prof.weakly_regular = false;
        if (!prof.weakly_regular) break;
    }
    if (!prof.weakly_regular) {
        prof.epsilon = 0;
        std::fill(prof.dual.begin(), prof.dual.end(), 0);
        prof.family = Family::NEITHER;
        return prof;
    }
    prof.epsilon = *eps;

    // homogeneity f(zx) = z^h f(x): even h in [2, p-1], gcd(h-1, p-1) = 1
    for (int hh = 2; hh <= p - 1; hh += 2) {
        if (std::gcd(hh - 1, p - 1) != 1) continue;
        bool ok = true;
        for (int z = 2; z < p && ok; ++z) {
            Elem ze = spec.from_subfield(z);
            int zh = 1;
            for (int i = 0; i < hh; ++i) zh = (zh * z) % p;
            for (std::uint64_t x = 0; x < q && ok; ++x)
                ok = f.values[spec.mul(ze, static_cast<Elem>(x))] ==
                     static_cast<std::uint8_t>((zh * f.values[x]) % p);
        }
        if (ok) {
            if (!prof.h) prof.h = hh;
            // a second matching exponent happens only for functions that vanish
            // on F_q^*; keep the smallest
        }
    }

    // dual index f*(z b) = z^l f*(b) on the support
    int matches = 0;
    for (int ll = 2; ll <= p - 1; ll += 2) {
        if (std::gcd(ll - 1, p - 1) != 1) continue;
        bool ok = true;
        for (int z = 2; z < p && ok; ++z) {
            Elem ze = spec.from_subfield(z);
            int zl = 1;
            for (int i = 0; i < ll; ++i) zl = (zl * z) % p;
            for (Elem b : support) {
                if (prof.dual[spec.mul(ze, b)] != static_cast<std::uint8_t>((zl * prof.dual[b]) % p)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            ++matches;
            if (!prof.l) prof.l = ll;
        }
    }
    if (matches > 1) {
        // two exponents agreeing on the support force z^{l-l'} = 1 on every
        // nonzero dual value, so the dual must vanish identically
        bool dual_zero = true;
        for (Elem b : support) dual_zero = dual_zero && prof.dual[b] == 0;
        if (!dual_zero) fail(Errc::Internal, "ambiguous dual index on a nonvanishing dual");
        prof.l_ambiguous = true;
    }

    if (f.values[0] == 0 && prof.h) prof.family = prof.balanced ? Family::WRPB : Family::WRP;

    if (prof.family != Family::NEITHER) {
        // the dual must vanish at 0 and the support must be F_p^*-stable
        if (prof.balanced == (std::find(support.begin(), support.end(), 0u) != support.end()))
            fail(Errc::Internal, "balancedness contradicts 0 in the Walsh support");
        if (!prof.balanced && prof.dual[0] != 0) fail(Errc::Internal, "dual function must vanish at zero");
    }
    return prof;
}

std::string family_str(Family f) {
    switch (f) {
        case Family::WRP: return "WRP";
        case Family::WRPB: return "WRPB";
        default: return "NEITHER";
    }
}

}  // namespace wrp
