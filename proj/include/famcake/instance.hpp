#pragma once

#include "famcake/measure.hpp"
#include "famcake/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace famcake {

struct Agent {
    std::string name;
    ValueMeasure measure;
};

struct Family {
    std::string name;
    Rational weight; // entitlement w_j > 0
    std::vector<Agent> members;

    int size() const { return static_cast<int>(members.size()); }
};

// A division problem: k families with entitlement weights summing to 1.
class Instance {
  public:
    explicit Instance(std::vector<Family> families);

    const std::vector<Family>& families() const { return families_; }
    const Family& family(int j) const { return families_.at(static_cast<size_t>(j)); }
    int family_count() const { return static_cast<int>(families_.size()); }
    int total_agents() const;
    bool equal_entitlements() const;

  private:
    std::vector<Family> families_;
};

// Named fixtures:
//   "section2"          two 3-member families over four districts (no params)
//   "thm2"    k >= 2    one heavy family (weight k^2/(k^2+k-1)) vs k-1 light
//                       ones over 2k-1 alternating districts
//   "lemma5"  k,m >= 1  m*k single-minded agents, each wanting its own
//                       district of an m*k grid; equal entitlements
Instance gen_preset(const std::string& name, const std::map<std::string, long long>& params = {});

// Deterministic random instance for the given seed; see the implementation
// for the exact draw order. Weights default to 1/k each.
Instance gen_random(int k, const std::vector<int>& family_sizes, int max_segments, uint64_t seed,
                    const std::optional<std::vector<Rational>>& weights = std::nullopt);

// Deterministic positive weights summing to 1, for unequal-entitlement
// experiments.
std::vector<Rational> gen_random_weights(int k, uint64_t seed);

} // namespace famcake
