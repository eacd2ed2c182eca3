#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wrp/cyclotomic.hpp"
#include "wrp/field.hpp"

namespace wrp {

// One trace monomial: coeff * x^exp under the absolute trace.
struct TraceTerm {
    Elem coeff = 0;
    std::uint64_t exp = 1;

    bool operator==(const TraceTerm&) const = default;
};

// A p-ary function F_q -> F_p held as its full value table, together with
// the symbolic descriptor it was built from. Holds a pointer into the owning
// FieldSpec, which must outlive the function and stay at a fixed address.
struct PFunction {
    const FieldSpec* spec = nullptr;
    std::vector<std::uint8_t> values;  // length q, entries in [0, p)
    std::vector<TraceTerm> descriptor;

    std::uint8_t operator()(Elem x) const { return values[x]; }
};

// Tabulates f(x) = Tr(sum_i c_i x^{e_i}); BadExponent unless every exponent
// lies in [1, q-1].
PFunction eval_descriptor(const FieldSpec& spec, const std::vector<TraceTerm>& descriptor);

std::string descriptor_str(const FieldSpec& spec, const std::vector<TraceTerm>& descriptor);
std::vector<TraceTerm> parse_descriptor(const FieldSpec& spec, const std::string& text);

// Exact Walsh spectrum. Each value chi^_f(beta) = sum_x zeta^{f(x)-Tr(beta x)}
// is stored as its residue histogram over F_p — a non-canonical coefficient
// vector of the CycInt it denotes — which keeps the classification loops in
// plain integers.
class WalshSpectrum {
  public:
    WalshSpectrum(int p, std::uint64_t q) : p_(p), q_(q), hist_(q * static_cast<std::uint64_t>(p), 0) {}

    int p() const { return p_; }
    std::uint64_t q() const { return q_; }
    std::span<const std::int64_t> hist(Elem beta) const {
        return {hist_.data() + static_cast<std::uint64_t>(beta) * p_, static_cast<std::size_t>(p_)};
    }
    std::span<std::int64_t> hist_mut(Elem beta) {
        return {hist_.data() + static_cast<std::uint64_t>(beta) * p_, static_cast<std::size_t>(p_)};
    }

    CycInt value(Elem beta) const;
    bool is_zero_at(Elem beta) const;
    // |chi^(beta)|^2 when it is a rational integer, otherwise nullopt
    std::optional<std::int64_t> mag_squared_int(Elem beta) const;
    // exact Parseval sum; Internal error if any magnitude is irrational
    std::int64_t parseval_sum() const;

  private:
    int p_;
    std::uint64_t q_;
    std::vector<std::int64_t> hist_;
};

WalshSpectrum walsh_transform(const PFunction& f);

enum class Family { WRP, WRPB, NEITHER };

std::string family_str(Family f);

// Everything classification learns about one function. `support` is sorted
// by element code; `dual` is zero off the support. `epsilon` is meaningful
// only when weakly_regular holds.
struct PlateauedProfile {
    int s = 0;
    bool balanced = false;
    bool weakly_regular = false;
    int epsilon = 0;
    std::vector<Elem> support;
    std::vector<std::uint8_t> dual;
    std::optional<int> h;
    std::optional<int> l;
    Family family = Family::NEITHER;
    // set when several index exponents fit, which happens exactly for an
    // identically-zero dual; the smallest candidate is recorded
    bool l_ambiguous = false;

    std::uint64_t q() const { return dual.size(); }
};

// Decides plateau order from the two-valued |chi^|^2 pattern, matches every
// support value against the 2p candidates +-G(eta)^{m+s} zeta^c, then hunts
// the homogeneity and dual-index exponents. NotPlateaued is an error; a
// plateaued function that fails weak regularity comes back as family NEITHER
// with weakly_regular = false so search can skim past it.
PlateauedProfile classify(const PFunction& f);
PlateauedProfile classify(const PFunction& f, const WalshSpectrum& spectrum);

}  // namespace wrp
