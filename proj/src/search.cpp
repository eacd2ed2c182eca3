#include "wrp/search.hpp"

#include <algorithm>
#include <random>

#include "wrp/report.hpp"

namespace wrp {

SearchSpec search_spec_from_config(const FieldSpec& spec, const SearchConfig& sc) {
    SearchSpec ss;
    ss.spec = &spec;
    ss.exponents = sc.exponents;
    ss.nonzero_coeffs = sc.nonzero_coeffs;
    ss.target = sc.target == "WRP" ? SearchTarget::WRP : sc.target == "WRPB" ? SearchTarget::WRPB : SearchTarget::EITHER;
    ss.s = sc.s;
    ss.l = sc.l;
    ss.epsilon = sc.epsilon;
    ss.max_candidates = sc.max_candidates;
    return ss;
}

std::string search_cache_key(const SearchSpec& ss) {
    std::ostringstream os;
    os << "search;" << ss.spec->describe() << ";exps=";
    for (std::size_t i = 0; i < ss.exponents.size(); ++i) os << (i ? "," : "") << ss.exponents[i];
    os << ";coeffs=" << (ss.nonzero_coeffs ? "nonzero" : "all");
    os << ";target=" << (ss.target == SearchTarget::WRP ? "WRP" : ss.target == SearchTarget::WRPB ? "WRPB" : "EITHER");
    os << ";s=" << (ss.s ? std::to_string(*ss.s) : "*");
    os << ";l=" << (ss.l ? std::to_string(*ss.l) : "*");
    os << ";eps=" << (ss.epsilon ? std::to_string(*ss.epsilon) : "*");
    return os.str();
}

namespace {

bool hit_matches(const SearchSpec& ss, const PlateauedProfile& prof) {
    if (prof.family == Family::NEITHER) return false;
    if (ss.target == SearchTarget::WRP && prof.family != Family::WRP) return false;
    if (ss.target == SearchTarget::WRPB && prof.family != Family::WRPB) return false;
    if (ss.s && prof.s != *ss.s) return false;
    if (ss.l && !(prof.l_ambiguous || (prof.l && *prof.l == *ss.l))) return false;
    if (ss.epsilon && prof.epsilon != *ss.epsilon) return false;
    return true;
}

std::vector<TraceTerm> candidate_terms(const SearchSpec& ss, std::uint64_t index) {
    const FieldSpec& spec = *ss.spec;
    const std::uint64_t base = ss.nonzero_coeffs ? spec.q() - 1 : spec.q();
    std::vector<TraceTerm> terms;
    for (std::uint64_t slot = 0; slot < ss.exponents.size(); ++slot) {
        std::uint64_t digit = index % base;
        index /= base;
        Elem coeff = static_cast<Elem>(ss.nonzero_coeffs ? digit + 1 : digit);
        if (coeff != 0) terms.push_back(TraceTerm{coeff, ss.exponents[slot]});
    }
    return terms;
}

std::vector<SearchHit> run_search(const SearchSpec& ss, int jobs) {
    const FieldSpec& spec = *ss.spec;
    require(ss.exponents.size() <= 3, Errc::SpaceTooLarge, "search templates carry at most 3 slots");
    const std::uint64_t base = ss.nonzero_coeffs ? spec.q() - 1 : spec.q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < ss.exponents.size(); ++i) {
        require(total <= ss.max_candidates / base, Errc::SpaceTooLarge,
                "search space exceeds max_candidates = " + std::to_string(ss.max_candidates));
        total *= base;
    }
    if (ss.exponents.empty()) return {};

    jobs = resolve_jobs(jobs);
    std::vector<std::vector<SearchHit>> buckets(static_cast<std::size_t>(jobs));
    parallel_chunks(total, jobs, [&](std::uint64_t lo, std::uint64_t hi, int tid) {
        auto& out = buckets[static_cast<std::size_t>(tid)];
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::vector<TraceTerm> terms = candidate_terms(ss, idx);
            PFunction f = eval_descriptor(spec, terms);
            try {
                PlateauedProfile prof = classify(f);
                if (hit_matches(ss, prof)) out.push_back(SearchHit{std::move(terms), std::move(prof)});
            } catch (const Error& e) {
                if (e.code() != Errc::NotPlateaued) throw;
            }
        }
    });
    std::vector<SearchHit> hits;
    for (auto& b : buckets)
        for (auto& h : b) hits.push_back(std::move(h));
    std::sort(hits.begin(), hits.end(), [&](const SearchHit& a, const SearchHit& b) {
        auto ka = std::make_pair(a.profile.s, descriptor_str(spec, a.terms));
        auto kb = std::make_pair(b.profile.s, descriptor_str(spec, b.terms));
        return ka < kb;
    });
    return hits;
}

}  // namespace

std::vector<SearchHit> search(const SearchSpec& ss, int jobs, const Cache* cache, std::uint64_t seed) {
    const FieldSpec& spec = *ss.spec;
    std::string key = search_cache_key(ss);
    if (cache) {
        if (auto stored = cache->get(key)) {
            std::vector<SearchHit> hits;
            for (const Json& hj : stored->at("hits")) {
                SearchHit h;
                h.terms = parse_descriptor(spec, hj.at("descriptor").get<std::string>());
                h.profile = profile_from_json(spec, hj.at("profile"));
                hits.push_back(std::move(h));
            }
            // cached results must match fresh classification on a 10% sample
            std::mt19937_64 rng(seed);
            for (const SearchHit& h : hits) {
                if (rng() % 10 != 0) continue;
                PlateauedProfile fresh = classify(eval_descriptor(spec, h.terms));
                bool same = fresh.s == h.profile.s && fresh.balanced == h.profile.balanced &&
                            fresh.epsilon == h.profile.epsilon && fresh.family == h.profile.family &&
                            fresh.h == h.profile.h && fresh.l == h.profile.l && fresh.dual == h.profile.dual;
                require(same, Errc::CacheCorrupt,
                        "cached profile differs from recomputation for " + descriptor_str(spec, h.terms));
            }
            return hits;
        }
    }
    std::vector<SearchHit> hits = run_search(ss, jobs);
    if (cache) {
        Json payload;
        payload["kind"] = "search";
        Json arr = Json::array();
        for (const SearchHit& h : hits) {
            Json hj;
            hj["descriptor"] = descriptor_str(spec, h.terms);
            hj["profile"] = profile_json(spec, h.profile);
            arr.push_back(std::move(hj));
        }
        payload["hits"] = std::move(arr);
        cache->put(key, payload);
    }
    return hits;
}

}  // namespace wrp
