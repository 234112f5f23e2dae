#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "readcode/word.hpp"

namespace readcode {

struct Counterexample {
    Word x;
    Word y;
    std::string details;
};

/// Outcome of an exhaustive check. A failing report always carries the
/// lexicographically first offending pair.
struct VerificationReport {
    std::string check;
    nlohmann::ordered_json grid = nlohmann::ordered_json::object();
    std::uint64_t instances = 0;
    std::uint64_t pairs_examined = 0;
    bool pass = true;
    std::optional<Counterexample> counterexample;

    /// Folds another report in; the first failure (in merge order) is kept.
    void absorb(const VerificationReport& other);
    nlohmann::ordered_json to_json() const;
};

} // namespace readcode
