#pragma once

#include <array>
#include <cstdint>

#include "wrp/char_sums.hpp"
#include "wrp/pfunction.hpp"

namespace wrp {

// N_f(c): how often the dual takes value c on the Walsh support, counted
// directly, plus the closed form in terms of (s, epsilon, parities).
std::int64_t dual_level_count(const PlateauedProfile& prof, int c);
std::int64_t dual_level_closed(const FieldSpec& spec, const PlateauedProfile& prof, int c);

// All p level counts at once (direct).
std::vector<std::int64_t> dual_levels(const FieldSpec& spec, const PlateauedProfile& prof);

// T(c) = #{(a,b) in S_f x S_g : f*(a) + g*(b) = c}: convolution of the
// direct level counts, and the closed form split on the parity of s+t.
std::int64_t joint_count(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg, int c);
std::int64_t joint_closed(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg, int c);

// B_Sq / B_Nsq: pairs whose dual sum and dual difference land in the same
// residue class. Defined only for odd s+t (ParityMismatch otherwise); the
// closed form dispatches on which of m-s, m-t is even.
std::int64_t border_pair_count(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg,
                               Residue which);
std::int64_t border_pair_closed(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg,
                                Residue which);

enum class SpecialCount { E1, E2, E3, E4, F1, F3, F5 };

// Set-cardinality counts over S_f x S_g used by the frequency tables,
// evaluated from the direct level counts, plus their closed forms in terms
// of N_f / N_g. F5 (the quartic-class count) is only defined for
// p = 5 mod 8.
std::int64_t special_count(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg,
                           SpecialCount kind);
std::int64_t special_closed(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg,
                            SpecialCount kind);

// Members of C_2^{(4,p)} inside F_p^* (log = 2 mod 4 w.r.t. the least
// primitive root); used by the p = 5 mod 8 branches.
std::vector<int> quartic_class_two(int p);
bool in_quartic_class_two(int p, int c);

}  // namespace wrp
