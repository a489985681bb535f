#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "parastat/rational.hpp"

namespace parastat {

/// One pairwise 0/0 cancellation, kept for audit.
struct CancellationEvent {
    std::string context;
    int pairs = 0;
};

namespace detail {
struct CancellationLog {
    std::mutex mu;
    std::vector<CancellationEvent> events;
};
inline CancellationLog& cancellation_log() {
    static CancellationLog log;
    return log;
}
} // namespace detail

inline void clear_cancellation_log() {
    auto& log = detail::cancellation_log();
    std::lock_guard<std::mutex> lk(log.mu);
    log.events.clear();
}

inline std::vector<CancellationEvent> cancellation_events() {
    auto& log = detail::cancellation_log();
    std::lock_guard<std::mutex> lk(log.mu);
    return log.events;
}

/// Product of integer linear factors over a product of integer linear factors,
/// kept unevaluated so that indeterminate 0/0 boundary cases can be resolved
/// by pairwise cancellation: one numerator zero absorbs one denominator zero.
/// After pairing, zeros left in the denominator are singular; zeros left in
/// the numerator make the value 0.
class FactorRatio {
public:
    void num(Int v) { num_.push_back(std::move(v)); }
    void den(Int v) { den_.push_back(std::move(v)); }

    enum class Status { Value, Zero, Singular };

    struct Result {
        Status status = Status::Zero;
        Rational value;    // meaningful for Status::Value
        int cancelled = 0; // 0/0 pairs removed
    };

    /// Collapses to a rational. Cancellation events are appended to the audit
    /// log under `context`.
    Result collapse(const std::string& context) const {
        int zn = 0, zd = 0;
        Int pn(1), pd(1);
        for (const auto& v : num_) {
            if (v == 0) ++zn; else pn *= v;
        }
        for (const auto& v : den_) {
            if (v == 0) ++zd; else pd *= v;
        }
        Result res;
        res.cancelled = std::min(zn, zd);
        if (res.cancelled > 0) {
            auto& log = detail::cancellation_log();
            std::lock_guard<std::mutex> lk(log.mu);
            log.events.push_back({context, res.cancelled});
        }
        zn -= res.cancelled;
        zd -= res.cancelled;
        if (zd > 0) {
            res.status = Status::Singular;
            return res;
        }
        if (zn > 0) {
            res.status = Status::Zero;
            return res;
        }
        res.status = Status::Value;
        res.value = Rational(pn, pd);
        return res;
    }

private:
    std::vector<Int> num_, den_;
};

} // namespace parastat
