#include "clout/json_util.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "clout/common.hpp"

namespace clout {

namespace {

void dump_number(const nlohmann::json& j, std::string& out) {
    if (j.is_number_float()) {
        const double v = j.get<double>();
        if (!std::isfinite(v)) throw ValidationError("json", "non-finite number in document");
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out += buf;
    } else {
        out += j.dump();
    }
}

void dump_rec(const nlohmann::json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                out += nlohmann::json(it.key()).dump();
                out += ": ";
                dump_rec(it.value(), out, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line; nested structures get
            // one element per line.
            bool scalars = true;
            for (const auto& el : j)
                if (el.is_structured()) scalars = false;
            if (scalars) {
                out += "[";
                bool first = true;
                for (const auto& el : j) {
                    if (!first) out += ", ";
                    first = false;
                    if (el.is_number()) dump_number(el, out);
                    else out += el.dump();
                }
                out += "]";
            } else {
                out += "[\n";
                bool first = true;
                for (const auto& el : j) {
                    if (!first) out += ",\n";
                    first = false;
                    out += pad_in;
                    dump_rec(el, out, depth + 1);
                }
                out += "\n" + pad + "]";
            }
            return;
        }
        default:
            if (j.is_number()) dump_number(j, out);
            else out += j.dump();
            return;
    }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& j) {
    std::string out;
    dump_rec(j, out, 0);
    out += "\n";
    return out;
}

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("json", e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError(path, "cannot open file for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError(path, "cannot open file for writing");
    out << content;
    if (!out) throw ValidationError(path, "write failed");
}

}  // namespace clout
