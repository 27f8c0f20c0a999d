#include "epcmig/calib/kvfile.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace epcmig {

static std::string trim(const std::string& s)
{
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

KvFile KvFile::parse_string(const std::string& text, const std::string& origin)
{
    KvFile kv;
    kv.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError(origin + ":" + std::to_string(lineno) +
                                  ": expected 'key = value', got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ValidationError(origin + ":" + std::to_string(lineno) + ": empty key");
        if (kv.values_.count(key))
            throw ValidationError(origin + ":" + std::to_string(lineno) + ": duplicate key '" +
                                  key + "'");
        kv.values_[key] = value;
        kv.order_.push_back(key);
    }
    return kv;
}

KvFile KvFile::parse_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_string(buf.str(), path);
}

void KvFile::fail(const std::string& key, const std::string& what) const
{
    throw ValidationError(origin_ + ": " + key + ": " + what);
}

const std::string& KvFile::get(const std::string& key) const
{
    auto it = values_.find(key);
    if (it == values_.end())
        fail(key, "missing required key");
    return it->second;
}

std::string KvFile::get_or(const std::string& key, const std::string& fallback) const
{
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double KvFile::get_double(const std::string& key) const
{
    const std::string& v = get(key);
    errno = 0;
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (errno != 0 || end == v.c_str() || *end != '\0')
        fail(key, "not a number: '" + v + "'");
    return d;
}

double KvFile::get_double_or(const std::string& key, double fallback) const
{
    return has(key) ? get_double(key) : fallback;
}

std::int64_t KvFile::get_int(const std::string& key) const
{
    const std::string& v = get(key);
    errno = 0;
    char* end = nullptr;
    long long i = std::strtoll(v.c_str(), &end, 10);
    if (errno != 0 || end == v.c_str() || *end != '\0')
        fail(key, "not an integer: '" + v + "'");
    return i;
}

std::int64_t KvFile::get_int_or(const std::string& key, std::int64_t fallback) const
{
    return has(key) ? get_int(key) : fallback;
}

bool KvFile::get_bool_or(const std::string& key, bool fallback) const
{
    if (!has(key))
        return fallback;
    const std::string& v = get(key);
    if (v == "true" || v == "on" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "off" || v == "0" || v == "no")
        return false;
    fail(key, "not a boolean: '" + v + "'");
}

std::vector<std::int64_t> KvFile::get_int_list(const std::string& key) const
{
    std::istringstream in(get(key));
    std::vector<std::int64_t> out;
    std::string tok;
    while (in >> tok) {
        errno = 0;
        char* end = nullptr;
        long long i = std::strtoll(tok.c_str(), &end, 10);
        if (errno != 0 || end == tok.c_str() || *end != '\0')
            fail(key, "not an integer list element: '" + tok + "'");
        out.push_back(i);
    }
    if (out.empty())
        fail(key, "empty list");
    return out;
}

std::vector<std::string> KvFile::keys_with_prefix(const std::string& prefix) const
{
    std::vector<std::string> out;
    for (const auto& k : order_)
        if (k.rfind(prefix, 0) == 0)
            out.push_back(k);
    return out;
}

} // namespace epcmig
