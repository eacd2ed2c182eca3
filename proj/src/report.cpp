#include "wrp/report.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace wrp {

std::string profile_cache_key(const FieldSpec& spec, const std::vector<TraceTerm>& descriptor) {
    std::ostringstream os;
    os << "profile;" << spec.describe() << ";f=" << descriptor_str(spec, descriptor);
    return os.str();
}

Json field_json(const FieldSpec& spec) {
    Json j;
    j["p"] = spec.p();
    j["m"] = spec.m();
    j["q"] = spec.q();
    j["modulus"] = spec.modulus();
    j["theta"] = spec.rep(spec.theta());
    return j;
}

Json profile_json(const FieldSpec& spec, const PlateauedProfile& prof) {
    Json j;
    j["s"] = prof.s;
    j["balanced"] = prof.balanced;
    j["weakly_regular"] = prof.weakly_regular;
    if (prof.weakly_regular) j["epsilon"] = prof.epsilon;
    if (prof.h) j["h"] = *prof.h;
    if (prof.l) j["l"] = *prof.l;
    j["l_ambiguous"] = prof.l_ambiguous;
    j["family"] = family_str(prof.family);
    j["support_size"] = prof.support.size();
    j["support"] = prof.support;
    std::vector<int> dual(prof.dual.begin(), prof.dual.end());
    j["dual"] = dual;
    (void)spec;
    return j;
}

PlateauedProfile profile_from_json(const FieldSpec& spec, const Json& j) {
    PlateauedProfile prof;
    prof.s = j.at("s").get<int>();
    prof.balanced = j.at("balanced").get<bool>();
    prof.weakly_regular = j.at("weakly_regular").get<bool>();
    prof.epsilon = j.value("epsilon", 0);
    if (j.contains("h")) prof.h = j.at("h").get<int>();
    if (j.contains("l")) prof.l = j.at("l").get<int>();
    prof.l_ambiguous = j.value("l_ambiguous", false);
    std::string fam = j.at("family").get<std::string>();
    prof.family = fam == "WRP" ? Family::WRP : fam == "WRPB" ? Family::WRPB : Family::NEITHER;
    prof.support = j.at("support").get<std::vector<Elem>>();
    auto dual = j.at("dual").get<std::vector<int>>();
    require(dual.size() == spec.q(), Errc::CacheCorrupt, "cached dual table has the wrong length");
    prof.dual.assign(dual.begin(), dual.end());
    return prof;
}

Json code_report_json(const CodeReport& rep) {
    Json j;
    j["parameters"] =
        "[" + std::to_string(rep.n) + "," + std::to_string(rep.k) + "," + std::to_string(rep.d_min) + "]";
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["d_min"] = rep.d_min;
    j["w_max"] = rep.w_max;
    Json dist = Json::array();
    for (auto& [w, c] : rep.dist) dist.push_back(Json::array({w, c}));
    j["distribution"] = dist;
    j["source"] = rep.source;
    if (rep.dual_distance) {
        j["dual_distance"] = rep.dual_distance == 3 ? ">=3" : std::to_string(rep.dual_distance);
        j["projective"] = rep.dual_d_ge_3;
    }
    if (rep.griesmer_gap >= 0) {
        j["ab_minimal"] = rep.ab_minimal;
        j["ab_boundary"] = rep.ab_boundary;
        if (rep.threshold_minimal) j["threshold_minimal"] = *rep.threshold_minimal;
        j["griesmer_gap"] = rep.griesmer_gap;
        j["griesmer_optimal"] = rep.griesmer_optimal;
    }
    return j;
}

namespace {

void render_value(std::ostringstream& os, const Json& v, int indent);

void render_object(std::ostringstream& os, const Json& v, int indent) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        os << std::string(static_cast<std::size_t>(indent), ' ') << it.key() << ":";
        if (it.value().is_object() || (it.value().is_array() && !it.value().empty() && it.value().front().is_structured())) {
            os << "\n";
            render_value(os, it.value(), indent + 2);
        } else {
            os << " ";
            render_value(os, it.value(), 0);
            os << "\n";
        }
    }
}

void render_value(std::ostringstream& os, const Json& v, int indent) {
    if (v.is_object()) {
        render_object(os, v, indent);
    } else if (v.is_array()) {
        if (!v.empty() && v.front().is_structured()) {
            for (const auto& item : v) {
                if (item.is_object()) {
                    os << std::string(static_cast<std::size_t>(indent), ' ') << "-\n";
                    render_value(os, item, indent + 2);
                } else {
                    os << std::string(static_cast<std::size_t>(indent), ' ') << "- " << item.dump() << "\n";
                }
            }
        } else {
            os << v.dump();
        }
    } else if (v.is_string()) {
        os << v.get<std::string>();
    } else {
        os << v.dump();
    }
}

}  // namespace

std::string render_text(const Json& report, int indent) {
    std::ostringstream os;
    render_value(os, report, indent);
    return os.str();
}

std::string render_csv(const Json& report) {
    // distributions go out as weight,frequency rows; flat scalars as key,value
    std::ostringstream os;
    std::function<void(const Json&, const std::string&)> walk = [&](const Json& v, const std::string& prefix) {
        if (v.is_object()) {
            for (auto it = v.begin(); it != v.end(); ++it) {
                std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
                if (it.key() == "distribution" && it.value().is_array()) {
                    for (const auto& row : it.value()) os << key << "," << row[0] << "," << row[1] << "\n";
                } else {
                    walk(it.value(), key);
                }
            }
        } else if (v.is_array()) {
            os << prefix << "," << v.dump() << "\n";
        } else if (v.is_string()) {
            os << prefix << "," << v.get<std::string>() << "\n";
        } else {
            os << prefix << "," << v.dump() << "\n";
        }
    };
    walk(report, "");
    return os.str();
}

void write_report_file(const std::string& path, const Json& report, const std::string& format) {
    std::filesystem::path fp(path);
    if (fp.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(fp.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::trunc);
    require(out.good(), Errc::ConfigError, "cannot write report file " + path);
    if (format == "json")
        out << report.dump(2) << "\n";
    else if (format == "csv")
        out << render_csv(report);
    else
        out << render_text(report);
}

}  // namespace wrp
