#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "wrp/common.hpp"

namespace wrp {

// Content-addressed store: one JSON file per key hash, written atomically
// through a temp file + rename. The stored payload echoes the full key so a
// hash collision or stale schema reads as a miss, never as wrong data.
class Cache {
  public:
    explicit Cache(std::string dir);

    const std::string& dir() const { return dir_; }
    std::optional<nlohmann::ordered_json> get(const std::string& key) const;
    void put(const std::string& key, const nlohmann::ordered_json& payload) const;

    static std::string hash_key(const std::string& key);  // FNV-1a 64, hex

  private:
    std::string path_for(const std::string& key) const;
    std::string dir_;
};

}  // namespace wrp
