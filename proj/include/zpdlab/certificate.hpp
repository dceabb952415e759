#pragma once

#include "zpdlab/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace zpdlab {

// `certified` and `refuted` both come with re-checkable evidence (exhibited
// generators resp. a concrete witness); `inconclusive` only means the search
// budget ran out or a hypothesis could not be established. Checks that search
// a sampled span are never refuted by failing to find it.
enum class Outcome { certified, refuted, inconclusive };

std::string outcome_str(Outcome o);

struct Certificate {
    Outcome outcome = Outcome::inconclusive;
    std::string detail;                             // human-readable reason
    std::map<std::string, long long> dims;          // named dimensions/counts
    std::vector<Vec> witness;                       // offending elements, if refuted
    std::vector<std::pair<Vec, Vec>> witness_pair;  // offending pairs, if refuted
    std::vector<std::pair<Vec, Vec>> generators;    // exhibited generating pairs
    long long generators_used = 0;
    std::uint64_t seed = 0;

    bool certified() const { return outcome == Outcome::certified; }
    bool refuted() const { return outcome == Outcome::refuted; }
    bool inconclusive() const { return outcome == Outcome::inconclusive; }
};

inline std::string outcome_str(Outcome o) {
    switch (o) {
        case Outcome::certified: return "certified";
        case Outcome::refuted: return "refuted";
        default: return "inconclusive";
    }
}

}  // namespace zpdlab
