#include "famcake/instance.hpp"

#include "famcake/prng.hpp"

#include <algorithm>
#include <stdexcept>

namespace famcake {

namespace {

long long get_param(const std::map<std::string, long long>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) {
        throw std::invalid_argument("gen_preset: missing parameter '" + key + "'");
    }
    return it->second;
}

Instance section2_instance() {
    // Two families of three over four equal districts; every agent values the
    // whole land at 96.
    auto agent = [](const std::string& name, std::vector<Rational> districts) {
        return Agent{name, ValueMeasure::from_district_values(districts)};
    };
    Family f1{"F1",
              Rational(1, 2),
              {agent("Alice", {60, 30, 3, 3}), agent("Bob", {50, 40, 3, 3}),
               agent("Charlie", {10, 80, 3, 3})}};
    Family f2{"F2",
              Rational(1, 2),
              {agent("David", {3, 3, 60, 30}), agent("Eva", {3, 3, 60, 30}),
               agent("Frankie", {3, 3, 0, 90})}};
    return Instance({std::move(f1), std::move(f2)});
}

Instance thm2_instance(long long k) {
    if (k < 2) throw std::invalid_argument("preset thm2: k must be >= 2");
    const long long districts = 2 * k - 1;
    const Rational denom(k * k + k - 1);
    std::vector<Family> families;
    families.reserve(static_cast<size_t>(k));
    // Family 1 values the k odd-indexed districts, each other family values a
    // single even-indexed district. One member per family carrying the
    // family-average valuation.
    std::vector<Rational> heavy(static_cast<size_t>(districts), Rational(0));
    for (long long d = 0; d < districts; d += 2) heavy[static_cast<size_t>(d)] = Rational(1);
    families.push_back(Family{"F1",
                              Rational(k * k) / denom,
                              {Agent{"F1.a", ValueMeasure::from_district_values(heavy)}}});
    for (long long j = 2; j <= k; ++j) {
        std::vector<Rational> vals(static_cast<size_t>(districts), Rational(0));
        vals[static_cast<size_t>(2 * (j - 1) - 1)] = Rational(1);
        families.push_back(Family{"F" + std::to_string(j),
                                  Rational(1) / denom,
                                  {Agent{"F" + std::to_string(j) + ".a",
                                         ValueMeasure::from_district_values(vals)}}});
    }
    return Instance(std::move(families));
}

Instance lemma5_instance(long long k, long long m) {
    if (k < 1 || m < 1) throw std::invalid_argument("preset lemma5: k and m must be >= 1");
    const long long districts = m * k;
    std::vector<Family> families;
    families.reserve(static_cast<size_t>(k));
    for (long long j = 0; j < k; ++j) {
        Family fam{"F" + std::to_string(j + 1), Rational(1, k), {}};
        for (long long i = 0; i < m; ++i) {
            std::vector<Rational> vals(static_cast<size_t>(districts), Rational(0));
            vals[static_cast<size_t>(i * k + j)] = Rational(1);
            fam.members.push_back(Agent{fam.name + ".m" + std::to_string(i + 1),
                                        ValueMeasure::from_district_values(vals)});
        }
        families.push_back(std::move(fam));
    }
    return Instance(std::move(families));
}

} // namespace

Instance::Instance(std::vector<Family> families) : families_(std::move(families)) {
    if (families_.empty()) {
        throw std::invalid_argument("Instance: need at least one family");
    }
    Rational total(0);
    for (const Family& fam : families_) {
        if (!(fam.weight > Rational(0))) {
            throw std::invalid_argument("Instance: family '" + fam.name +
                                        "' has non-positive weight");
        }
        if (fam.members.empty()) {
            throw std::invalid_argument("Instance: family '" + fam.name + "' has no members");
        }
        total += fam.weight;
    }
    if (total != Rational(1)) {
        throw std::invalid_argument("Instance: weights sum to " + total.str() + ", expected 1");
    }
}

int Instance::total_agents() const {
    int n = 0;
    for (const Family& fam : families_) n += fam.size();
    return n;
}

bool Instance::equal_entitlements() const {
    const Rational share(1, static_cast<long long>(families_.size()));
    for (const Family& fam : families_) {
        if (fam.weight != share) return false;
    }
    return true;
}

Instance gen_preset(const std::string& name, const std::map<std::string, long long>& params) {
    if (name == "section2") return section2_instance();
    if (name == "thm2") return thm2_instance(get_param(params, "k"));
    if (name == "lemma5") return lemma5_instance(get_param(params, "k"), get_param(params, "m"));
    throw std::invalid_argument("gen_preset: unknown preset '" + name + "'");
}

// Draw order, per member: segment count s in [1, max_segments]; then s-1
// distinct interior breakpoints as fractions num/64 with num drawn from
// [1,63] (redrawing duplicates); then one integer density weight in [0,9]
// per segment, redrawing the whole vector while all weights are zero. The
// measure is the rescaled step function. All draws come from one SplitMix64
// stream seeded with `seed`, consumed family by family, member by member.
Instance gen_random(int k, const std::vector<int>& family_sizes, int max_segments, uint64_t seed,
                    const std::optional<std::vector<Rational>>& weights) {
    if (k < 1) throw std::invalid_argument("gen_random: k must be >= 1");
    if (static_cast<int>(family_sizes.size()) != k) {
        throw std::invalid_argument("gen_random: need one family size per family");
    }
    for (int s : family_sizes) {
        if (s < 1) throw std::invalid_argument("gen_random: family sizes must be >= 1");
    }
    if (max_segments < 1 || max_segments > 32) {
        throw std::invalid_argument("gen_random: max_segments must be in [1,32]");
    }
    if (weights) {
        if (static_cast<int>(weights->size()) != k) {
            throw std::invalid_argument("gen_random: need one weight per family");
        }
        Rational total(0);
        for (const Rational& w : *weights) {
            if (!(w > Rational(0))) throw std::invalid_argument("gen_random: weights must be positive");
            total += w;
        }
        if (total != Rational(1)) {
            throw std::invalid_argument("gen_random: weights sum to " + total.str());
        }
    }

    SplitMix64 rng(seed);
    const long long grid = 64;
    std::vector<Family> families;
    families.reserve(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        Family fam{"F" + std::to_string(j + 1),
                   weights ? (*weights)[static_cast<size_t>(j)] : Rational(1, k),
                   {}};
        for (int i = 0; i < family_sizes[static_cast<size_t>(j)]; ++i) {
            const auto s = static_cast<int>(1 + rng.below(static_cast<uint64_t>(max_segments)));
            std::vector<Rational> cuts;
            while (static_cast<int>(cuts.size()) < s - 1) {
                Rational c(static_cast<long long>(1 + rng.below(grid - 1)), grid);
                if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
            }
            std::sort(cuts.begin(), cuts.end());
            cuts.push_back(Rational(1));
            std::vector<MeasureSegment> segments;
            bool any_positive = false;
            while (!any_positive) {
                segments.clear();
                for (const Rational& until : cuts) {
                    Rational density(static_cast<long long>(rng.below(10)));
                    if (!density.is_zero()) any_positive = true;
                    segments.push_back({until, density});
                }
            }
            fam.members.push_back(Agent{fam.name + ".m" + std::to_string(i + 1),
                                        ValueMeasure::rescaled(std::move(segments))});
        }
        families.push_back(std::move(fam));
    }
    return Instance(std::move(families));
}

std::vector<Rational> gen_random_weights(int k, uint64_t seed) {
    if (k < 1) throw std::invalid_argument("gen_random_weights: k must be >= 1");
    SplitMix64 rng(seed);
    std::vector<long long> raw(static_cast<size_t>(k));
    long long total = 0;
    for (auto& r : raw) {
        r = static_cast<long long>(1 + rng.below(9));
        total += r;
    }
    std::vector<Rational> weights;
    weights.reserve(raw.size());
    for (long long r : raw) weights.emplace_back(r, total);
    return weights;
}

} // namespace famcake
