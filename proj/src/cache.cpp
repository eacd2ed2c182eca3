#include "wrp/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wrp {

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
    require(!dir_.empty(), Errc::ConfigError, "cache directory must be nonempty");
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    require(!ec, Errc::ConfigError, "cannot create cache directory " + dir_ + ": " + ec.message());
}

std::string Cache::hash_key(const std::string& key) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

std::string Cache::path_for(const std::string& key) const { return dir_ + "/" + hash_key(key) + ".json"; }

std::optional<nlohmann::ordered_json> Cache::get(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in.good()) return std::nullopt;
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable entries behave as misses
    }
    if (!j.is_object() || j.value("schema", 0) != 1 || j.value("key", "") != key) return std::nullopt;
    return j;
}

void Cache::put(const std::string& key, const nlohmann::ordered_json& payload) const {
    nlohmann::ordered_json j = payload;
    j["schema"] = 1;
    j["key"] = key;
    std::string final_path = path_for(key);
    std::string tmp_path = final_path + ".tmp";
    {
        std::ofstream out(tmp_path, std::ios::trunc);
        require(out.good(), Errc::Internal, "cannot write cache temp file " + tmp_path);
        out << j.dump(2) << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp_path, final_path, ec);
    require(!ec, Errc::Internal, "cache rename failed: " + ec.message());
}

}  // namespace wrp
