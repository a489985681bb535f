#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace parastat {

inline std::string json_escape(const std::string& s) {
    std::ostringstream os;
    for (char ch : s) {
        switch (ch) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20)
                    os << "\\u00" << "0123456789abcdef"[(ch >> 4) & 0xf]
                       << "0123456789abcdef"[ch & 0xf];
                else
                    os << ch;
        }
    }
    return os.str();
}

template <typename T>
std::string vec_str(const std::vector<T>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

/// One verified statement; `counterexample` is filled on failure. `indices`
/// and `signs` identify the generator combination where that applies.
struct Check {
    std::string name;
    std::string detail;
    bool ok = true;
    std::string counterexample;
    std::string indices;
    std::string signs;

    std::string to_json() const {
        std::ostringstream os;
        os << "{\"relation\":\"" << json_escape(name) << "\"";
        if (!indices.empty()) os << ",\"indices\":" << indices;
        if (!signs.empty()) os << ",\"signs\":\"" << json_escape(signs) << "\"";
        if (!detail.empty()) os << ",\"detail\":\"" << json_escape(detail) << "\"";
        os << ",\"status\":\"" << (ok ? "ok" : "violated") << "\"";
        if (!counterexample.empty())
            os << ",\"counterexample\":\"" << json_escape(counterexample) << "\"";
        os << "}";
        return os.str();
    }
};

/// A named batch of checks. Verifiers return these; violations are report
/// content, not errors.
class Report {
public:
    Report() = default;
    explicit Report(std::string name) : name_(std::move(name)) {}

    void add(Check c) {
        if (!c.ok) ++violations_;
        checks_.push_back(std::move(c));
    }
    void add(const std::string& name, const std::string& detail, bool ok,
             std::string counterexample = "") {
        add(Check{name, detail, ok, std::move(counterexample), "", ""});
    }
    void merge(const Report& other) {
        for (const auto& c : other.checks_) add(c);
    }

    const std::string& name() const { return name_; }
    const std::vector<Check>& checks() const { return checks_; }
    int violations() const { return violations_; }
    bool all_ok() const { return violations_ == 0; }
    const Check* first_violation() const {
        for (const auto& c : checks_)
            if (!c.ok) return &c;
        return nullptr;
    }

    std::string to_json() const {
        std::ostringstream os;
        os << "{\"name\":\"" << json_escape(name_) << "\",\"status\":\""
           << (all_ok() ? "ok" : "violated") << "\",\"checks\":" << checks_count_json() << ",\"items\":[";
        for (std::size_t i = 0; i < checks_.size(); ++i) {
            if (i) os << ",";
            os << checks_[i].to_json();
        }
        os << "]}";
        return os.str();
    }

    std::string summary() const {
        std::ostringstream os;
        os << name_ << ": " << checks_.size() << " checks, " << violations_ << " violations";
        return os.str();
    }

private:
    std::string checks_count_json() const {
        std::ostringstream os;
        os << "{\"total\":" << checks_.size() << ",\"violated\":" << violations_ << "}";
        return os.str();
    }

    std::string name_;
    std::vector<Check> checks_;
    int violations_ = 0;
};

} // namespace parastat
