#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace ipent {

/// Minimal JSON document builder for report output. Object keys keep
/// insertion order and doubles print as %.17g, so identical runs emit
/// byte-identical documents (nlohmann re-serializes doubles in shortest
/// round-trip form, which is why it is only used for parsing).
class JsonValue {
  public:
    JsonValue() : kind_(Kind::Null) {}
    JsonValue(bool b) : kind_(Kind::Bool), bool_(b) {}
    JsonValue(int n) : kind_(Kind::Int), int_(n) {}
    JsonValue(long n) : kind_(Kind::Int), int_(n) {}
    JsonValue(long long n) : kind_(Kind::Int), int_(n) {}
    JsonValue(unsigned long long n)
        : kind_(Kind::Int), int_(static_cast<long long>(n)) {}
    JsonValue(double x) : kind_(Kind::Real), real_(x) {}
    JsonValue(const char* s) : kind_(Kind::Text), text_(s) {}
    JsonValue(std::string s) : kind_(Kind::Text), text_(std::move(s)) {}

    static JsonValue object() {
        JsonValue v;
        v.kind_ = Kind::Object;
        return v;
    }
    static JsonValue array() {
        JsonValue v;
        v.kind_ = Kind::Array;
        return v;
    }

    JsonValue& set(const std::string& key, JsonValue value) {
        members_.emplace_back(key, std::move(value));
        return *this;
    }
    JsonValue& push(JsonValue value) {
        items_.push_back(std::move(value));
        return *this;
    }

    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

    static std::string format_double(double x) {
        if (x == 0.0) x = 0.0;  // drop negative-zero signs from phase fixing
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }

  private:
    enum class Kind { Null, Bool, Int, Real, Text, Array, Object };

    static void write_escaped(const std::string& s, std::string& out) {
        out += '"';
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\r': out += "\\r"; break;
                case '\t': out += "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out += buf;
                    } else {
                        out += c;
                    }
            }
        }
        out += '"';
    }

    void write(std::string& out) const {
        switch (kind_) {
            case Kind::Null: out += "null"; break;
            case Kind::Bool: out += bool_ ? "true" : "false"; break;
            case Kind::Int: out += std::to_string(int_); break;
            case Kind::Real: out += format_double(real_); break;
            case Kind::Text: write_escaped(text_, out); break;
            case Kind::Array: {
                out += '[';
                bool first = true;
                for (const JsonValue& item : items_) {
                    if (!first) out += ',';
                    first = false;
                    item.write(out);
                }
                out += ']';
                break;
            }
            case Kind::Object: {
                out += '{';
                bool first = true;
                for (const auto& [key, value] : members_) {
                    if (!first) out += ',';
                    first = false;
                    write_escaped(key, out);
                    out += ':';
                    value.write(out);
                }
                out += '}';
                break;
            }
        }
    }

    Kind kind_;
    bool bool_ = false;
    long long int_ = 0;
    double real_ = 0.0;
    std::string text_;
    std::vector<JsonValue> items_;
    std::vector<std::pair<std::string, JsonValue>> members_;
};

}  // namespace ipent
