#pragma once

// Deterministic report serialization: insertion-ordered JSON with floats
// printed at 17 significant digits, CSV with the same float format, and
// write-then-rename file output. Identical inputs yield identical bytes.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qem/classify.hpp"
#include "qem/curvature.hpp"
#include "qem/verify.hpp"

namespace qem {

class JsonValue {
public:
    enum class Kind { Null, Bool, Int, Double, String, Array, Object };

    JsonValue() : kind_(Kind::Null) {}
    JsonValue(bool b) : kind_(Kind::Bool), bool_(b) {}
    JsonValue(int v) : kind_(Kind::Int), int_(v) {}
    JsonValue(long v) : kind_(Kind::Int), int_(v) {}
    JsonValue(long long v) : kind_(Kind::Int), int_(v) {}
    JsonValue(double v) : kind_(Kind::Double), dbl_(v) {}
    JsonValue(const char* s) : kind_(Kind::String), str_(s) {}
    JsonValue(std::string s) : kind_(Kind::String), str_(std::move(s)) {}

    static JsonValue array() {
        JsonValue v;
        v.kind_ = Kind::Array;
        return v;
    }
    static JsonValue object() {
        JsonValue v;
        v.kind_ = Kind::Object;
        return v;
    }

    JsonValue& push(JsonValue v) {
        items_.push_back(std::move(v));
        return items_.back();
    }
    JsonValue& set(const std::string& key, JsonValue v) {
        keys_.push_back(key);
        items_.push_back(std::move(v));
        return items_.back();
    }

    Kind kind() const { return kind_; }
    std::string dump(int indent = 2) const;

private:
    void dump_to(std::string& out, int indent, int depth) const;

    Kind kind_;
    bool bool_ = false;
    long long int_ = 0;
    double dbl_ = 0.0;
    std::string str_;
    std::vector<std::string> keys_;
    std::vector<JsonValue> items_;
};

// %.17g, with non-finite values spelled out for JSON safety
std::string format_double(double v);

void write_file_atomic(const std::string& path, const std::string& content);

JsonValue to_json(const ResidualReport& r);
JsonValue to_json(const MuScanReport& r);
JsonValue to_json(const CodazziReport& r);
JsonValue to_json(const EigenReport& r);
JsonValue to_json(const Thresholds& t);
JsonValue to_json(const CertificateRecord& c);
JsonValue to_json(const WitnessRecord& w);
JsonValue to_json(const ClassificationResult& r);
JsonValue params_to_json(const FamilyParams& params);

std::string profile_csv(const ProfileSolution& sol);

inline constexpr int kSchemaVersion = 1;

}  // namespace qem
