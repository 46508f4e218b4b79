#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace zetalab {

// Deterministic JSON emitter: keys appear in insertion order and every double
// is printed with %.17g, so identical reports serialize to identical bytes.
// (Shortest-round-trip printers are also deterministic but do not satisfy the
// fixed 17-significant-digit output contract.)
class JsonWriter {
public:
    std::string take() { return std::move(out_); }
    const std::string& str() const { return out_; }

    JsonWriter& begin_object() {
        comma();
        out_ += '{';
        fresh_.push_back(true);
        return *this;
    }
    JsonWriter& end_object() {
        out_ += '}';
        fresh_.pop_back();
        mark_used();
        return *this;
    }
    JsonWriter& begin_array() {
        comma();
        out_ += '[';
        fresh_.push_back(true);
        return *this;
    }
    JsonWriter& end_array() {
        out_ += ']';
        fresh_.pop_back();
        mark_used();
        return *this;
    }
    JsonWriter& key(const char* name) {
        comma();
        out_ += '"';
        out_ += name;
        out_ += "\":";
        pending_value_ = true;
        return *this;
    }
    JsonWriter& value(double v) {
        comma();
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out_ += buf;
        mark_used();
        return *this;
    }
    JsonWriter& value(std::int64_t v) {
        comma();
        out_ += std::to_string(v);
        mark_used();
        return *this;
    }
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(bool v) {
        comma();
        out_ += v ? "true" : "false";
        mark_used();
        return *this;
    }
    JsonWriter& value(const std::string& v) {
        comma();
        out_ += '"';
        for (char c : v) {
            switch (c) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\t': out_ += "\\t"; break;
                default: out_ += c;
            }
        }
        out_ += '"';
        mark_used();
        return *this;
    }
    JsonWriter& value(const char* v) { return value(std::string(v)); }

    // Splices an already-serialized JSON value (object, array, ...) in place.
    JsonWriter& raw(const std::string& json) {
        comma();
        out_ += json;
        mark_used();
        return *this;
    }

private:
    void comma() {
        if (pending_value_) {
            pending_value_ = false;
            return;  // directly after a key
        }
        if (!fresh_.empty()) {
            if (!fresh_.back()) out_ += ',';
        }
    }
    void mark_used() {
        if (!fresh_.empty()) fresh_.back() = false;
    }

    std::string out_;
    std::vector<bool> fresh_;
    bool pending_value_ = false;
};

}  // namespace zetalab
