#include "gband/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gband {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& name, int line,
                       const std::string& msg) {
    std::ostringstream os;
    os << name << ":" << line << ": " << msg;
    throw std::invalid_argument(os.str());
}

}  // namespace

Config Config::parse_text(const std::string& text, const std::string& name) {
    Config cfg;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        const size_t eq = s.find('=');
        if (eq == std::string::npos) fail(name, line, "expected key = value");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail(name, line, "empty key");
        if (cfg.entries_.count(key)) fail(name, line, "duplicate key: " + key);
        cfg.entries_[key] = value;
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(path + ": cannot open config file");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_text(os.str(), path);
}

void Config::set(const std::string& key, const std::string& value) {
    entries_[key] = value;
}

void Config::set_pair(const std::string& pair) {
    const size_t eq = pair.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("override must be key=value: " + pair);
    entries_[trim(pair.substr(0, eq))] = trim(pair.substr(eq + 1));
}

bool Config::has(const std::string& key) const {
    return entries_.count(key) != 0;
}

std::string Config::get(const std::string& key,
                        const std::string& fallback) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second;
}

double Config::get_num(const std::string& key, double fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    size_t pos = 0;
    double v;
    try {
        v = std::stod(it->second, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key +
                                    "' is not a number: " + it->second);
    }
    if (pos != it->second.size())
        throw std::invalid_argument("config key '" + key +
                                    "' is not a number: " + it->second);
    return v;
}

int Config::get_int(const std::string& key, int fallback) const {
    return static_cast<int>(get_num(key, fallback));
}

uint64_t Config::get_u64(const std::string& key, uint64_t fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    try {
        return std::stoull(it->second);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key +
                                    "' is not an unsigned integer: " +
                                    it->second);
    }
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw std::invalid_argument("config key '" + key +
                                "' is not a boolean: " + v);
}

std::string Config::canonical() const {
    std::ostringstream os;
    for (const auto& [k, v] : entries_) os << k << " = " << v << "\n";
    return os.str();
}

uint64_t Config::hash() const {
    const std::string text = canonical();
    uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Config::hash_hex() const {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(hash()));
    return buf;
}

}  // namespace gband
