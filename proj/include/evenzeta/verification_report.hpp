#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evenzeta/real.hpp"

namespace evenzeta {

/// Outcome of one identity check. `parameters` holds everything needed to
/// rerun it (orders, truncations, precision).
struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string lhs;
    std::string rhs;
    HighPrecisionReal residual;
    HighPrecisionReal tolerance;
    bool passed = false;

    /// Residuals along a parameter sweep (limit checks only).
    std::vector<HighPrecisionReal> residual_sequence;
    /// Indices at which two exact routes disagreed (exact checks only).
    std::vector<std::size_t> mismatches;

    std::optional<std::string> parameter(const std::string& name) const {
        for (const auto& [key, value] : parameters) {
            if (key == name) {
                return value;
            }
        }
        return std::nullopt;
    }
};

inline bool within_tolerance(const HighPrecisionReal& residual, const HighPrecisionReal& tolerance) {
    return abs(residual) <= tolerance;
}

}  // namespace evenzeta
