#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wrp/cache.hpp"
#include "wrp/config.hpp"
#include "wrp/pfunction.hpp"

namespace wrp {

enum class SearchTarget { WRP, WRPB, EITHER };

struct SearchSpec {
    const FieldSpec* spec = nullptr;
    std::vector<std::uint64_t> exponents;  // one coefficient slot per entry, at most 3
    bool nonzero_coeffs = false;
    SearchTarget target = SearchTarget::EITHER;
    std::optional<int> s;
    std::optional<int> l;
    std::optional<int> epsilon;
    std::uint64_t max_candidates = 1000000;
};

struct SearchHit {
    std::vector<TraceTerm> terms;
    PlateauedProfile profile;
};

SearchSpec search_spec_from_config(const FieldSpec& spec, const SearchConfig& sc);
std::string search_cache_key(const SearchSpec& ss);

// Classifies every candidate in the template and keeps the WRP/WRPB matches,
// sorted by (s, descriptor). SpaceTooLarge when the slot product exceeds the
// bound. With a cache, hits are persisted per search; on a cache hit a
// seeded 10% sample is re-verified against fresh classification and any
// drift raises CacheCorrupt.
std::vector<SearchHit> search(const SearchSpec& ss, int jobs = 1, const Cache* cache = nullptr,
                              std::uint64_t seed = 1);

}  // namespace wrp
