#include "wrp/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wrp/common.hpp"

namespace wrp {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

ConfigFile ConfigFile::parse_text(const std::string& text) {
    ConfigFile cf;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            require(line.back() == ']', Errc::ConfigError, "unterminated section header at line " + std::to_string(lineno));
            section = lower(strip(line.substr(1, line.size() - 2)));
            cf.sections_[section];
            continue;
        }
        std::size_t eq = line.find('=');
        require(eq != std::string::npos, Errc::ConfigError, "expected key = value at line " + std::to_string(lineno));
        std::string key = lower(strip(line.substr(0, eq)));
        std::string value = strip(line.substr(eq + 1));
        require(!key.empty(), Errc::ConfigError, "empty key at line " + std::to_string(lineno));
        cf.sections_[section][key] = value;
    }
    return cf;
}

ConfigFile ConfigFile::load(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::ConfigError, "cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    auto it = sections_.find(lower(section));
    return it != sections_.end() && it->second.count(lower(key)) > 0;
}

std::string ConfigFile::get(const std::string& section, const std::string& key, const std::string& fallback) const {
    auto it = sections_.find(lower(section));
    if (it == sections_.end()) return fallback;
    auto jt = it->second.find(lower(key));
    return jt == it->second.end() ? fallback : jt->second;
}

std::vector<std::string> ConfigFile::get_list(const std::string& section, const std::string& key) const {
    std::vector<std::string> out;
    std::string v = get(section, key);
    std::size_t pos = 0;
    while (pos <= v.size()) {
        std::size_t comma = v.find(',', pos);
        std::string item = strip(v.substr(pos, comma == std::string::npos ? comma : comma - pos));
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

long long ConfigFile::get_int(const std::string& section, const std::string& key, long long fallback) const {
    std::string v = get(section, key);
    if (v.empty()) return fallback;
    try {
        std::size_t pos = 0;
        long long r = std::stoll(v, &pos);
        require(pos == v.size(), Errc::ConfigError, "bad integer for " + section + "." + key + ": " + v);
        return r;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::ConfigError, "bad integer for " + section + "." + key + ": " + v);
    }
}

namespace {

std::vector<int> parse_int_list(const ConfigFile& cf, const std::string& section, const std::string& key) {
    std::vector<int> out;
    for (const std::string& s : cf.get_list(section, key)) {
        try {
            out.push_back(std::stoi(s));
        } catch (const std::exception&) {
            fail(Errc::ConfigError, "bad integer list entry for " + section + "." + key + ": " + s);
        }
    }
    return out;
}

}  // namespace

RunConfig parse_run_config(const ConfigFile& cf) {
    RunConfig rc;
    rc.field.p = static_cast<int>(cf.get_int("field", "p", 0));
    rc.field.m = static_cast<int>(cf.get_int("field", "m", 0));
    require(rc.field.p > 0 && rc.field.m > 0, Errc::ConfigError, "config needs [field] p and m");
    if (cf.has("field", "modulus")) rc.field.modulus = parse_int_list(cf, "field", "modulus");
    if (cf.has("field", "theta")) rc.field.theta = parse_int_list(cf, "field", "theta");

    rc.f_text = cf.get("functions", "f");
    rc.g_text = cf.get("functions", "g");

    rc.tasks = cf.get_list("run", "tasks");
    rc.out = cf.get("run", "out");
    rc.format = cf.get("run", "format", "text");
    require(rc.format == "text" || rc.format == "json" || rc.format == "csv", Errc::ConfigError,
            "format must be text, json or csv");
    rc.cache_dir = cf.get("run", "cache");
    rc.mode = cf.get("run", "mode", "auto");
    require(rc.mode == "auto" || rc.mode == "enumerate" || rc.mode == "by-class", Errc::ConfigError,
            "mode must be auto, enumerate or by-class");
    rc.jobs = static_cast<int>(cf.get_int("run", "jobs", 1));
    rc.seed = static_cast<std::uint64_t>(cf.get_int("run", "seed", 1));
    rc.spot_checks = static_cast<int>(cf.get_int("run", "spot_checks", 1000));

    static const std::vector<std::string> known = {"classify", "build",   "enumerate",    "predict",
                                                   "puncture", "certify", "verify-lemmas"};
    for (const std::string& t : rc.tasks)
        require(std::find(known.begin(), known.end(), t) != known.end(), Errc::ConfigError, "unknown task: " + t);

    if (cf.sections().count("search")) {
        SearchConfig sc;
        sc.target = cf.get("search", "target", "EITHER");
        for (char& c : sc.target) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        require(sc.target == "WRP" || sc.target == "WRPB" || sc.target == "EITHER", Errc::ConfigError,
                "search target must be WRP, WRPB or EITHER");
        for (const std::string& e : cf.get_list("search", "exponents"))
            sc.exponents.push_back(std::stoull(e));
        require(sc.exponents.size() <= 3, Errc::ConfigError, "search templates carry at most 3 slots");
        sc.nonzero_coeffs = cf.get("search", "coeffs", "all") == "nonzero";
        if (cf.has("search", "s")) sc.s = static_cast<int>(cf.get_int("search", "s", 0));
        if (cf.has("search", "l")) sc.l = static_cast<int>(cf.get_int("search", "l", 0));
        if (cf.has("search", "epsilon")) sc.epsilon = static_cast<int>(cf.get_int("search", "epsilon", 0));
        sc.max_candidates = static_cast<std::uint64_t>(cf.get_int("search", "max_candidates", 1000000));
        rc.search = std::move(sc);
    }
    return rc;
}

RunConfig load_run_config(const std::string& path) { return parse_run_config(ConfigFile::load(path)); }

}  // namespace wrp
