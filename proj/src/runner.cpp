#include "wrp/runner.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>

#include "wrp/lemma_suite.hpp"

namespace wrp {

namespace {

Json lemma_json() {
    Json j;
    auto checks = run_lemma_suite();
    Json arr = Json::array();
    for (const LemmaCheck& c : checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["all_pass"] = all_pass(checks);
    return j;
}

Json dist_diff(const std::map<std::int64_t, std::int64_t>& a, const std::map<std::int64_t, std::int64_t>& b) {
    Json diff = Json::array();
    std::set<std::int64_t> keys;
    for (auto& [w, c] : a) keys.insert(w);
    for (auto& [w, c] : b) keys.insert(w);
    for (std::int64_t w : keys) {
        std::int64_t ca = a.count(w) ? a.at(w) : 0;
        std::int64_t cb = b.count(w) ? b.at(w) : 0;
        if (ca != cb) diff.push_back(Json::array({w, ca, cb}));
    }
    return diff;
}

PlateauedProfile classify_cached(const FieldSpec& spec, const PFunction& f, const Cache* cache, std::mt19937_64& rng,
                                 bool& cache_hit) {
    cache_hit = false;
    if (!cache) return classify(f);
    std::string key = profile_cache_key(spec, f.descriptor);
    if (auto stored = cache->get(key)) {
        PlateauedProfile prof = profile_from_json(spec, stored->at("profile"));
        cache_hit = true;
        if (rng() % 10 == 0) {
            PlateauedProfile fresh = classify(f);
            bool same = fresh.s == prof.s && fresh.balanced == prof.balanced && fresh.epsilon == prof.epsilon &&
                        fresh.family == prof.family && fresh.h == prof.h && fresh.l == prof.l &&
                        fresh.dual == prof.dual && fresh.support == prof.support;
            require(same, Errc::CacheCorrupt, "cached profile diverges from recomputation");
        }
        return prof;
    }
    PlateauedProfile prof = classify(f);
    Json payload;
    payload["kind"] = "profile";
    payload["profile"] = profile_json(spec, prof);
    cache->put(key, payload);
    return prof;
}

}  // namespace

bool spot_check_classes(const FieldSpec& spec, std::span<const Column> cols, const PlateauedProfile& pf,
                        const PlateauedProfile& pg, int samples, std::uint64_t seed, std::string* fail_detail) {
    const std::uint64_t q = spec.q();
    // weight per (f*-level, g*-level) class, measured on a representative
    auto level_weight = [&](Elem a, Elem b) { return codeword_weight(spec, cols, a, b); };
    std::mt19937_64 rng(seed);
    auto in_supp = [](const PlateauedProfile& prof, Elem a) {
        return std::binary_search(prof.support.begin(), prof.support.end(), a);
    };
    std::map<std::pair<int, int>, std::int64_t> class_weight;
    std::optional<std::int64_t> outside_weight;
    for (int i = 0; i < samples; ++i) {
        Elem a = static_cast<Elem>(rng() % q);
        Elem b = static_cast<Elem>(rng() % q);
        if (a == 0 && b == 0) continue;
        std::int64_t direct = level_weight(a, b);
        std::int64_t expect;
        if (in_supp(pf, a) && in_supp(pg, b)) {
            std::pair<int, int> cls{pf.dual[a], pg.dual[b]};
            auto it = class_weight.find(cls);
            if (it == class_weight.end()) {
                class_weight[cls] = direct;  // first member defines the class weight
                continue;
            }
            expect = it->second;
        } else {
            if (!outside_weight) {
                outside_weight = direct;
                continue;
            }
            expect = *outside_weight;
        }
        if (direct != expect) {
            if (fail_detail)
                *fail_detail = "weight " + std::to_string(direct) + " vs class weight " + std::to_string(expect) +
                               " at (" + spec.format(a) + ", " + spec.format(b) + ")";
            return false;
        }
    }
    return true;
}

RunOutcome run_config(const RunConfig& rc, std::ostream& log) {
    RunOutcome out;
    require(!rc.tasks.empty(), Errc::ConfigError, "task list is empty");

    FieldSpec spec = FieldSpec::make(rc.field.p, rc.field.m, rc.field.modulus, rc.field.theta);
    std::optional<Cache> cache;
    if (!rc.cache_dir.empty()) cache.emplace(rc.cache_dir);
    std::mt19937_64 rng(rc.seed);

    auto has_task = [&](const std::string& t) {
        return std::find(rc.tasks.begin(), rc.tasks.end(), t) != rc.tasks.end();
    };

    Json header;
    header["schema"] = 1;
    header["field"] = field_json(spec);

    // classification underpins every other task
    bool need_functions = has_task("classify") || has_task("build") || has_task("enumerate") || has_task("predict") ||
                          has_task("puncture") || has_task("certify");
    std::optional<PFunction> f, g;
    std::optional<PlateauedProfile> pf, pg;
    if (need_functions) {
        require(!rc.f_text.empty() && !rc.g_text.empty(), Errc::ConfigError, "tasks need [functions] f and g");
        f = eval_descriptor(spec, parse_descriptor(spec, rc.f_text));
        g = eval_descriptor(spec, parse_descriptor(spec, rc.g_text));
        header["f"] = descriptor_str(spec, f->descriptor);
        header["g"] = descriptor_str(spec, g->descriptor);
        bool hit_f = false, hit_g = false;
        pf = classify_cached(spec, *f, cache ? &*cache : nullptr, rng, hit_f);
        pg = classify_cached(spec, *g, cache ? &*cache : nullptr, rng, hit_g);
        log << "classified f: family=" << family_str(pf->family) << " s=" << pf->s << (hit_f ? " (cache)" : "")
            << "\n";
        log << "classified g: family=" << family_str(pg->family) << " s=" << pg->s << (hit_g ? " (cache)" : "")
            << "\n";
    }

    if (has_task("classify")) {
        Json j = header;
        j["f_profile"] = profile_json(spec, *pf);
        j["g_profile"] = profile_json(spec, *pg);
        out.reports["classify"] = std::move(j);
    }

    std::optional<DefiningSet> D;
    bool need_build = has_task("build") || has_task("enumerate") || has_task("puncture") || has_task("certify");
    if (need_build) {
        D = build_defining_set(*f, *g, *pf, *pg);
        log << "defining set n=" << D->n() << "\n";
        if (has_task("build")) {
            Json j = header;
            j["n"] = D->n();
            j["k_measured"] = measured_dimension(spec, D->pairs);
            auto want = expected_length(spec, *pf, *pg);
            if (want) j["n_predicted"] = *want;
            out.reports["build"] = std::move(j);
        }
    }

    std::optional<CodeReport> enumerated, predicted;
    bool by_class_used = false;
    if (has_task("enumerate")) {
        DistMode mode = DistMode::ENUMERATE;
        if (rc.mode == "by-class" || (rc.mode == "auto" && spec.q() > 125)) mode = DistMode::BY_CLASS;
        enumerated = weight_distribution(spec, D->pairs, mode, &*pf, &*pg, rc.jobs);
        by_class_used = mode == DistMode::BY_CLASS;
        Json j = header;
        j["report"] = code_report_json(*enumerated);
        if (by_class_used) {
            std::string detail;
            bool ok = spot_check_classes(spec, D->pairs, *pf, *pg, rc.spot_checks, rc.seed, &detail);
            j["spot_check"] = Json{{"samples", rc.spot_checks}, {"pass", ok}};
            if (!ok) {
                j["spot_check"]["detail"] = detail;
                out.exit_code = 2;
            }
        }
        out.reports["enumerate"] = std::move(j);
        log << "enumerated distribution (" << enumerated->source << "), d_min=" << enumerated->d_min << "\n";
    }

    if (has_task("predict")) {
        Prediction pred = predicted_distribution(spec, *pf, *pg);
        predicted = pred.report;
        Json j = header;
        j["report"] = code_report_json(pred.report);
        Json branches = Json::array();
        for (TableBranch b : pred.branches) branches.push_back(table_branch_name(b));
        j["branches"] = std::move(branches);
        if (enumerated) {
            bool same = enumerated->dist == predicted->dist && enumerated->n == predicted->n;
            j["matches_enumeration"] = same;
            if (!same) {
                j["diff"] = dist_diff(enumerated->dist, predicted->dist);
                out.exit_code = 2;
                log << "MISMATCH: predicted distribution differs from enumeration\n";
            }
        }
        out.reports["predict"] = std::move(j);
        log << "predicted distribution over " << pred.branches.size() << " branch(es)\n";
    }

    std::optional<PuncturedSet> punct;
    std::optional<CodeReport> punct_report;
    if (has_task("puncture")) {
        punct = puncture(*D);
        const CodeReport* full = enumerated ? &*enumerated : (predicted ? &*predicted : nullptr);
        Json j = header;
        j["reps"] = punct->reps.size();
        j["orbit_rule"] = punct->orbit_rule;
        if (full) {
            punct_report = derive_punctured_report(spec, *full);
            if (spec.q() <= 125) {
                CodeReport direct = weight_distribution(spec, punct->reps, DistMode::ENUMERATE, &*pf, &*pg, rc.jobs);
                if (direct.dist != punct_report->dist) {
                    j["puncture_cross_check"] = false;
                    j["diff"] = dist_diff(direct.dist, punct_report->dist);
                    out.exit_code = 2;
                    log << "MISMATCH: punctured enumeration differs from the derived report\n";
                } else {
                    j["puncture_cross_check"] = true;
                }
            }
            j["report"] = code_report_json(*punct_report);
        }
        out.reports["puncture"] = std::move(j);
        log << "punctured to " << punct->reps.size() << " coordinates\n";
    }

    if (has_task("certify")) {
        Json j = header;
        const CodeReport* full = enumerated ? &*enumerated : (predicted ? &*predicted : nullptr);
        require(full != nullptr, Errc::ConfigError, "certify needs enumerate or predict in the task list");
        CodeReport full_cert = *full;
        attach_certificates(spec, full_cert, D->pairs);
        try {
            full_cert.threshold_minimal = minimality_threshold(spec, *pf, *pg);
        } catch (const Error& e) {
            if (e.code() != Errc::UnsupportedIndexPair) throw;
        }
        j["full"] = code_report_json(full_cert);
        if (punct && punct_report) {
            CodeReport pc = *punct_report;
            attach_certificates(spec, pc, punct->reps);
            pc.threshold_minimal = full_cert.threshold_minimal;
            j["punctured"] = code_report_json(pc);
        }
        out.reports["certify"] = std::move(j);
        log << "certificates attached\n";
    }

    if (has_task("verify-lemmas")) {
        Json j;
        j["schema"] = 1;
        j["lemmas"] = lemma_json();
        if (!j["lemmas"]["all_pass"].get<bool>()) out.exit_code = 2;
        out.reports["verify-lemmas"] = std::move(j);
    }

    if (!rc.out.empty()) {
        std::string ext = rc.format == "json" ? "json" : rc.format == "csv" ? "csv" : "txt";
        for (auto it = out.reports.begin(); it != out.reports.end(); ++it)
            write_report_file(rc.out + "." + it.key() + "." + ext, it.value(), rc.format);
    }
    return out;
}

RunOutcome run_search_command(const RunConfig& rc, std::ostream& log) {
    RunOutcome out;
    require(rc.search.has_value(), Errc::ConfigError, "search command needs a [search] section");
    FieldSpec spec = FieldSpec::make(rc.field.p, rc.field.m, rc.field.modulus, rc.field.theta);
    std::optional<Cache> cache;
    if (!rc.cache_dir.empty()) cache.emplace(rc.cache_dir);
    SearchSpec ss = search_spec_from_config(spec, *rc.search);
    auto hits = search(ss, rc.jobs, cache ? &*cache : nullptr, rc.seed);
    log << "search matched " << hits.size() << " function(s)\n";
    Json j;
    j["schema"] = 1;
    j["field"] = field_json(spec);
    j["search_key"] = search_cache_key(ss);
    Json arr = Json::array();
    for (const SearchHit& h : hits) {
        Json e;
        e["descriptor"] = descriptor_str(spec, h.terms);
        e["s"] = h.profile.s;
        e["epsilon"] = h.profile.epsilon;
        e["family"] = family_str(h.profile.family);
        if (h.profile.l) e["l"] = *h.profile.l;
        if (h.profile.h) e["h"] = *h.profile.h;
        arr.push_back(std::move(e));
    }
    j["hits"] = std::move(arr);
    out.reports["search"] = std::move(j);
    if (!rc.out.empty()) {
        std::string ext = rc.format == "json" ? "json" : rc.format == "csv" ? "csv" : "txt";
        write_report_file(rc.out + ".search." + ext, out.reports["search"], rc.format);
    }
    return out;
}

RunOutcome run_verify_lemmas(const RunConfig* rc, std::ostream& log) {
    RunOutcome out;
    Json j;
    j["schema"] = 1;
    j["lemmas"] = lemma_json();
    bool pass = j["lemmas"]["all_pass"].get<bool>();
    log << (pass ? "all lemma checks pass\n" : "LEMMA CHECK FAILURE\n");
    if (!pass) out.exit_code = 2;
    out.reports["verify-lemmas"] = std::move(j);
    if (rc && !rc->out.empty()) {
        std::string ext = rc->format == "json" ? "json" : rc->format == "csv" ? "csv" : "txt";
        write_report_file(rc->out + ".verify-lemmas." + ext, out.reports["verify-lemmas"], rc->format);
    }
    return out;
}

}  // namespace wrp
