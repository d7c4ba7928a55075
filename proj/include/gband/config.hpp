#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace gband {

// Flat key=value configuration. Lines are `key = value`, `#` starts a
// comment; parse errors carry the source name and line number. The canonical
// serialization (keys sorted) and its FNV-1a hash are embedded in every
// artifact so runs are reconstructible.
class Config {
  public:
    static Config parse_text(const std::string& text, const std::string& name);
    static Config parse_file(const std::string& path);

    void set(const std::string& key, const std::string& value);
    // "key=value" convenience for CLI overrides; throws without '='.
    void set_pair(const std::string& pair);

    bool has(const std::string& key) const;
    std::string get(const std::string& key, const std::string& fallback) const;
    double get_num(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    uint64_t get_u64(const std::string& key, uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    const std::map<std::string, std::string>& entries() const {
        return entries_;
    }

    std::string canonical() const;  // sorted "key = value" lines
    uint64_t hash() const;          // FNV-1a 64 over canonical()
    std::string hash_hex() const;

  private:
    std::map<std::string, std::string> entries_;
};

}  // namespace gband
