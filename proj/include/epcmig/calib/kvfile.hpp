#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace epcmig {

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Line-oriented "section.key = value" text file. '#' starts a comment,
// blank lines are ignored. Values keep interior whitespace (lists are
// space-separated). Unit conventions are carried by key suffixes:
// _s, _us, _km, _mb, _bytes, _bps, _per_km, _pct.
class KvFile {
public:
    static KvFile parse_string(const std::string& text, const std::string& origin = "<string>");
    static KvFile parse_file(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;

    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int_or(const std::string& key, std::int64_t fallback) const;
    bool get_bool_or(const std::string& key, bool fallback) const;

    std::vector<std::int64_t> get_int_list(const std::string& key) const;

    // Keys beginning with "prefix." in file order (first-seen order).
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

    const std::string& origin() const { return origin_; }

private:
    [[noreturn]] void fail(const std::string& key, const std::string& what) const;

    std::string origin_;
    std::map<std::string, std::string> values_;
    std::vector<std::string> order_;
};

} // namespace epcmig
