#ifndef RSIEGEL_TOOLS_EMIT_HPP
#define RSIEGEL_TOOLS_EMIT_HPP

// Flat records printed as JSON, CSV or text. Floats always use %.17g so the
// output round-trips for doubles and is byte-stable across runs.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace rsiegel::cli {

enum class Format { json, csv, text };

struct Field {
    std::string key;
    std::string raw;  // already a JSON literal
};

inline std::string num(double v)
{
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string num(long long v) { return std::to_string(v); }

inline std::string boolean(bool b) { return b ? "true" : "false"; }

inline std::string str(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        default: out += c;
        }
    }
    return out + '"';
}

inline std::string object(const std::vector<Field>& fields)
{
    std::string out = "{";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out += (i ? ", " : "") + str(fields[i].key) + ": " + fields[i].raw;
    }
    return out + "}";
}

inline std::string array(const std::vector<std::string>& items)
{
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i ? ", " : "") + items[i];
    }
    return out + "]";
}

// Strings lose their quotes outside JSON.
inline std::string plain(const std::string& raw)
{
    if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"') {
        return raw.substr(1, raw.size() - 2);
    }
    return raw;
}

inline void emit(std::ostream& os, Format f, const std::vector<Field>& fields)
{
    switch (f) {
    case Format::json:
        os << object(fields) << '\n';
        break;
    case Format::csv:
        for (std::size_t i = 0; i < fields.size(); ++i) {
            os << (i ? "," : "") << fields[i].key;
        }
        os << '\n';
        for (std::size_t i = 0; i < fields.size(); ++i) {
            os << (i ? "," : "") << plain(fields[i].raw);
        }
        os << '\n';
        break;
    case Format::text:
        for (const auto& fd : fields) {
            os << fd.key << ' ' << plain(fd.raw) << '\n';
        }
        break;
    }
}

}  // namespace rsiegel::cli

#endif
