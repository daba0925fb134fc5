#pragma once

#include "famcake/allocation.hpp"
#include "famcake/instance.hpp"

#include <optional>
#include <string>
#include <vector>

namespace famcake {

enum class UnanimousMethod { choose, recursive };
enum class DemocraticMode { equal, entitled };

UnanimousMethod parse_unanimous_method(const std::string& name);
DemocraticMode parse_democratic_mode(const std::string& name);

struct ProtocolResult {
    Allocation allocation;
    int comp = 0;
    // The relevant theorem's existence bound, when one applies. Reported, not
    // asserted: the theorems bound a different (non-constructive) division.
    std::optional<long long> theory_bound;
    // This construction's own guarantee; comp <= impl_bound always.
    long long impl_bound = 0;
    std::vector<std::string> trace;
};

// Average proportionality. Equal entitlements: divide-and-conquer halving on
// the family-average measures, connected pieces (comp == k). Different
// entitlements: reduces to the weighted unanimous recursion over k singleton
// pseudo-families carrying the average measures.
ProtocolResult divide_average(const Instance& inst);

// Unanimous proportionality: every member of every family values the
// family's piece at >= w_j, exactly.
//   choose:    one agent is left out of a single k-way exact division and
//              picks a weakly-favorite piece for its family. Equal
//              entitlements only.
//   recursive: balanced recursion on exact-ratio cuts; with equal
//              entitlements one agent per step is excluded and chooses,
//              with different entitlements all agents take part in each cut.
ProtocolResult divide_unanimous(const Instance& inst, UnanimousMethod method);

// Democratic proportionality for exactly two equally entitled families with
// connected pieces: cut at the midpoint of the two family median marks.
ProtocolResult divide_democratic_two(const Instance& inst);

// Democratic proportionality for k >= 2 families.
//   equal:    median-ordered halving at ceil(k/2)/k marks, then unanimous
//             subdivision per side restricted to the happy majority of each
//             family. Equal entitlements only.
//   entitled: runs the weighted unanimous recursion for the first
//             ceil(n_j/2) members of each family with the original weights.
ProtocolResult divide_democratic_k(const Instance& inst, DemocraticMode mode);

} // namespace famcake
