#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wrp {

// Key-value config with [section] headers, '#' comments, comma lists.
// One file per run keeps experiment records diffable.
class ConfigFile {
  public:
    static ConfigFile parse_text(const std::string& text);
    static ConfigFile load(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key, const std::string& fallback = "") const;
    std::vector<std::string> get_list(const std::string& section, const std::string& key) const;
    long long get_int(const std::string& section, const std::string& key, long long fallback) const;
    const std::map<std::string, std::map<std::string, std::string>>& sections() const { return sections_; }

  private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

struct FieldConfig {
    int p = 0;
    int m = 0;
    std::optional<std::vector<int>> modulus;
    std::optional<std::vector<int>> theta;
};

struct SearchConfig {
    std::string target = "EITHER";  // WRP | WRPB | EITHER
    std::vector<std::uint64_t> exponents;
    bool nonzero_coeffs = false;
    std::optional<int> s;
    std::optional<int> l;
    std::optional<int> epsilon;
    std::uint64_t max_candidates = 1000000;
};

struct RunConfig {
    FieldConfig field;
    std::string f_text;
    std::string g_text;
    std::vector<std::string> tasks;
    std::string out;
    std::string format = "text";  // text | json | csv
    std::string cache_dir;
    std::string mode = "auto";  // auto | enumerate | by-class
    int jobs = 1;
    std::uint64_t seed = 1;
    int spot_checks = 1000;
    std::optional<SearchConfig> search;
};

RunConfig parse_run_config(const ConfigFile& file);
RunConfig load_run_config(const std::string& path);

}  // namespace wrp
