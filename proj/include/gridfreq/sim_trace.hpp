#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "gridfreq/errors.hpp"

namespace gridfreq {

/// Uniformly sampled, named signal channels over a shared time base.
/// Channel order is preserved; it is part of the serialization contract.
struct SimTrace {
    std::vector<double> t;
    std::vector<std::pair<std::string, std::vector<double>>> channels;

    double dt() const {
        if (t.size() < 2) throw EmptyTrace("SimTrace: need at least two samples to define dt");
        return t[1] - t[0];
    }

    std::size_t n_samples() const { return t.size(); }

    bool has_channel(const std::string& name) const {
        for (const auto& [n, v] : channels)
            if (n == name) return true;
        return false;
    }

    const std::vector<double>& channel(const std::string& name) const {
        for (const auto& [n, v] : channels)
            if (n == name) return v;
        throw UnknownChannel("SimTrace: no channel named '" + name + "'");
    }

    void add_channel(std::string name, std::vector<double> values) {
        if (values.size() != t.size())
            throw ValidationError("SimTrace: channel '" + name + "' length does not match time base");
        if (has_channel(name)) throw DuplicateChannel("SimTrace: duplicate channel '" + name + "'");
        channels.emplace_back(std::move(name), std::move(values));
    }

    /// Checks the time base is strictly increasing with uniform spacing
    /// (relative jitter below rel_tol).
    void validate_uniform(double rel_tol = 1e-9) const {
        if (t.size() < 2) return;
        const double dt0 = t[1] - t[0];
        if (dt0 <= 0.0) throw NonuniformSampling("SimTrace: time column is not increasing");
        for (std::size_t k = 1; k < t.size(); ++k) {
            const double step = t[k] - t[k - 1];
            if (std::abs(step - dt0) > rel_tol * std::abs(dt0))
                throw NonuniformSampling("SimTrace: nonuniform spacing at sample " +
                                         std::to_string(k));
        }
    }

    /// Uniform time base 0, dt, ..., covering [0, duration].
    static std::vector<double> time_base(double duration, double dt) {
        if (dt <= 0.0 || duration < 0.0)
            throw ValidationError("SimTrace: duration and dt must be positive");
        const auto n = static_cast<std::size_t>(std::llround(duration / dt)) + 1;
        std::vector<double> t(n);
        for (std::size_t k = 0; k < n; ++k) t[k] = static_cast<double>(k) * dt;
        return t;
    }
};

/// Measurement traces share the SimTrace layout.
using MeasurementTrace = SimTrace;

}  // namespace gridfreq
