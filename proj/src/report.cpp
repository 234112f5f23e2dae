#include "readcode/report.hpp"

namespace readcode {

void VerificationReport::absorb(const VerificationReport& other) {
    instances += other.instances;
    pairs_examined += other.pairs_examined;
    if (!other.pass && pass) {
        pass = false;
        counterexample = other.counterexample;
    }
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["grid"] = grid;
    j["instances"] = instances;
    j["pairs_examined"] = pairs_examined;
    j["result"] = pass ? "pass" : "fail";
    if (counterexample) {
        j["counterexample"] = {{"x", format_word(counterexample->x)},
                               {"y", format_word(counterexample->y)},
                               {"details", counterexample->details}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

} // namespace readcode
