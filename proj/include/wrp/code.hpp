#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wrp/counting.hpp"
#include "wrp/pfunction.hpp"

namespace wrp {

using Column = std::pair<Elem, Elem>;

// The defining set: all (x, y) != (0, 0) with f(x) + g(y) = 0, listed in the
// canonical order (0 first, then theta powers) on (x, y). The order is part
// of the serialized identity of the code but irrelevant to weights.
struct DefiningSet {
    const FieldSpec* spec = nullptr;
    std::vector<Column> pairs;

    std::int64_t n() const { return static_cast<std::int64_t>(pairs.size()); }
};

// One representative per F_p^*-orbit of a defining set.
struct PuncturedSet {
    const FieldSpec* spec = nullptr;
    std::vector<Column> reps;
    std::string orbit_rule = "lex-min-key";
};

struct CodeReport {
    std::int64_t n = 0;
    int k = 0;
    // weight -> frequency over the p^{2m} message pairs, including {0: 1}
    std::map<std::int64_t, std::int64_t> dist;
    std::int64_t d_min = 0, w_max = 0;
    std::string source;

    int dual_distance = 0;  // 1, 2, or 3 meaning ">= 3"
    bool dual_d_ge_3 = false;
    bool ab_minimal = false;
    bool ab_boundary = false;  // w_min/w_max lands exactly on (p-1)/p
    std::optional<bool> threshold_minimal;
    std::int64_t griesmer_gap = -1;
    bool griesmer_optimal = false;

    std::int64_t frequency_sum() const;
    void finalize_extremes();  // fills d_min / w_max from dist
};

// Length predicted for the defining set of a same-family pair; nullopt when
// no covered combination applies (mixed families).
std::optional<std::int64_t> expected_length(const FieldSpec& spec, const PlateauedProfile& pf,
                                            const PlateauedProfile& pg);

// Scans F_q^2 once in canonical order. When both profiles sit in the same
// family the size is checked against the predicted length; a mismatch means
// a misclassified function and raises LengthMismatch.
DefiningSet build_defining_set(const PFunction& f, const PFunction& g, const PlateauedProfile& pf,
                               const PlateauedProfile& pg);

// Hamming weight of the codeword indexed by (a, b) over an arbitrary column
// list; ZeroPair when (a, b) = (0, 0).
std::int64_t codeword_weight(const FieldSpec& spec, std::span<const Column> cols, Elem a, Elem b);

// N_0-style count: zero-trace positions among the f(x)+g(y) = 0 solutions
// (including (0,0)), directly and in closed form. The closed form dispatches
// on (family, parity of s+t, l_f, p mod 8); UnsupportedIndexPair outside the
// covered combinations.
std::int64_t zero_trace_count_direct(const PFunction& f, const PFunction& g, Elem a, Elem b);
std::int64_t zero_trace_count_closed(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg,
                                     Elem a, Elem b);

enum class DistMode { ENUMERATE, BY_CLASS };

// Weight distribution of the code on `cols`. ENUMERATE walks all p^{2m}-1
// message pairs (feasible through q = 5^3); BY_CLASS measures one
// representative per (support membership, f*(a), g*(b)) class and scales by
// the class size (profiles required). Both modes agree wherever both run.
CodeReport weight_distribution(const FieldSpec& spec, std::span<const Column> cols, DistMode mode,
                               const PlateauedProfile* pf = nullptr, const PlateauedProfile* pg = nullptr,
                               int jobs = 1);

// The twelve table branches of the closed-form weight distributions:
// parity of s+t x family x index of f (with the p mod 8 split at l_f = 2).
enum class TableBranch {
    OddHalf,
    OddFull,
    OddTwo1,
    OddTwo5,
    EvenUnbHalf,
    EvenUnbFull,
    EvenUnbTwo1,
    EvenUnbTwo5,
    EvenBalHalf,
    EvenBalFull,
    EvenBalTwo1,
    EvenBalTwo5,
};

std::string table_branch_name(TableBranch b);
std::vector<TableBranch> all_table_branches();

// Which branches describe this pair. Requires matching families,
// l_g = (p-1)/2 and l_f in {2, (p-1)/2, p-1} (UnsupportedIndexPair
// otherwise). At p = 5 the l = 2 and l = (p-1)/2 columns coincide, so two
// branches apply; predicted_distribution evaluates every applicable branch
// and insists they agree.
std::vector<TableBranch> applicable_branches(const FieldSpec& spec, const PlateauedProfile& pf,
                                             const PlateauedProfile& pg);

struct Prediction {
    CodeReport report;
    std::vector<TableBranch> branches;
};

Prediction predicted_distribution(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg);

// F_p^*-orbit transversal with lexicographically-least representatives;
// BadOrbit if some orbit is not wholly inside the set.
PuncturedSet puncture(const DefiningSet& D);

// Punctured report derived from the full one: every weight and the length
// divide exactly by p-1, frequencies carry over.
CodeReport derive_punctured_report(const FieldSpec& spec, const CodeReport& full);

// 1 when a zero column exists, 2 when two columns are F_p-proportional,
// 3 meaning the dual distance is at least 3.
int dual_distance_bound(const FieldSpec& spec, std::span<const Column> cols);
bool dual_distance_at_least_3(const FieldSpec& spec, std::span<const Column> cols);

// Rank over F_p of the generator matrix (2m rows of trace functionals).
int measured_dimension(const FieldSpec& spec, std::span<const Column> cols);

// Ashikhmin-Barg sufficient condition w_min/w_max > (p-1)/p in exact
// integer arithmetic. Boundary equality is reported as not-certified.
bool certify_minimal(const FieldSpec& spec, const CodeReport& report);
bool ab_ratio_on_boundary(const FieldSpec& spec, const CodeReport& report);

// The gamma-threshold sufficient condition for minimality, per table group;
// UnsupportedIndexPair when the pair is only described by the odd
// l_f = 2, p = 5 mod 8 table, which carries no stated threshold.
bool minimality_threshold(const FieldSpec& spec, const PlateauedProfile& pf, const PlateauedProfile& pg);

// Exhaustive cover-relation minimality scan over all nonzero codewords.
bool minimal_exhaustive(const FieldSpec& spec, std::span<const Column> cols);

std::int64_t griesmer_sum(int p, std::int64_t d, int k);
bool certify_griesmer(int p, std::int64_t n, int k, std::int64_t d);

void attach_certificates(const FieldSpec& spec, CodeReport& report, std::span<const Column> cols);

}  // namespace wrp
