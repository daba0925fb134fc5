#include "famcake/protocols.hpp"

#include "famcake/exact.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace famcake {

namespace {

const Rational kZero(0);
const Rational kOne(1);

long long ceil_log2(long long k) {
    long long t = 0;
    long long pow = 1;
    while (pow < k) {
        pow *= 2;
        ++t;
    }
    return t;
}

// A family's stake in a subdivision step: original index, entitlement and the
// member measures that still count (protocols may restrict to a majority
// subset).
struct SubFamily {
    int family_index;
    Rational weight;
    std::vector<const ValueMeasure*> members;
};

std::vector<const ValueMeasure*> all_members(const std::vector<SubFamily>& fams,
                                             const ValueMeasure* excluded = nullptr) {
    std::vector<const ValueMeasure*> out;
    for (const SubFamily& f : fams) {
        for (const ValueMeasure* m : f.members) {
            if (m != excluded) out.push_back(m);
        }
    }
    return out;
}

struct RecState {
    std::vector<Piece> pieces;  // by family index
    long long impl_bound = 0;
    std::vector<std::string>* trace = nullptr;

    void note(std::string line) {
        if (trace) trace->push_back(std::move(line));
    }
};

// Equal-entitlement unanimous recursion. Guarantee: every counted member of
// every family in `fams` ends with value >= (1/root_size) * (its value of the
// root piece), where root_size is the family count at the recursion root.
// One agent per step is excluded from the exact cut and instead picks the
// better side for its family (valid only because the shares of a step are
// proportional to family counts).
void unanimous_equal_rec(const std::vector<SubFamily>& fams, const Piece& within,
                         long long within_bound, RecState& state) {
    const int t = static_cast<int>(fams.size());
    if (t == 1) {
        state.pieces[static_cast<size_t>(fams[0].family_index)] = within;
        state.impl_bound += within_bound;
        return;
    }
    const int left_quota = t / 2;
    const int right_quota = t - left_quota;

    const SubFamily& last_family = fams.back();
    const ValueMeasure* excluded =
        last_family.members.empty() ? nullptr : last_family.members.back();
    std::vector<const ValueMeasure*> included = all_members(fams, excluded);
    if (included.empty()) {
        // Single counted agent overall: it is the chooser; cut by the only
        // other information available, its own measure.
        included.push_back(excluded);
        excluded = nullptr;
    }

    const Rational ratio(left_quota, t);
    auto [left_piece, right_piece] = exact_ratio_cut(included, within, ratio);
    const long long segs = refinement_segment_count(included, within);
    state.note("cut " + within.str() + " at ratio " + ratio.str() + " for " +
               std::to_string(included.size()) + " agents");

    // The excluded agent sends its family to the side with the larger value
    // per unit of quota; ties go left.
    int chooser_side = 0;
    if (excluded != nullptr) {
        const Rational lv = excluded->value(left_piece);
        const Rational rv = excluded->value(right_piece);
        chooser_side = lv * Rational(right_quota) >= rv * Rational(left_quota) ? 0 : 1;
        state.note("excluded agent sends family " + std::to_string(last_family.family_index + 1) +
                   (chooser_side == 0 ? " left" : " right"));
    }

    std::vector<SubFamily> left_fams, right_fams;
    if (excluded != nullptr) {
        (chooser_side == 0 ? left_fams : right_fams).push_back(last_family);
    }
    const int regular = excluded != nullptr ? t - 1 : t;
    for (int j = 0; j < regular; ++j) {
        if (static_cast<int>(left_fams.size()) < left_quota) {
            left_fams.push_back(fams[static_cast<size_t>(j)]);
        } else {
            right_fams.push_back(fams[static_cast<size_t>(j)]);
        }
    }
    assert(static_cast<int>(left_fams.size()) == left_quota);
    assert(static_cast<int>(right_fams.size()) == right_quota);

    unanimous_equal_rec(left_fams, left_piece, segs, state);
    unanimous_equal_rec(right_fams, right_piece, segs, state);
}

// Weighted unanimous recursion. Guarantee: every counted member of every
// family values the family's final piece at exactly w_j / W_root times its
// value of the root piece (so exactly w_j on the whole cake). No chooser:
// with different entitlements an excluded agent could pick the wrong piece.
void unanimous_weighted_rec(const std::vector<SubFamily>& fams, const Piece& within,
                            long long within_bound, RecState& state) {
    const int t = static_cast<int>(fams.size());
    if (t == 1) {
        state.pieces[static_cast<size_t>(fams[0].family_index)] = within;
        state.impl_bound += within_bound;
        return;
    }
    const int left_count = t / 2;
    Rational total(0), left_total(0);
    for (int j = 0; j < t; ++j) {
        total += fams[static_cast<size_t>(j)].weight;
        if (j < left_count) left_total += fams[static_cast<size_t>(j)].weight;
    }
    const Rational ratio = left_total / total;
    std::vector<const ValueMeasure*> everyone = all_members(fams);
    auto [left_piece, right_piece] = exact_ratio_cut(everyone, within, ratio);
    const long long segs = refinement_segment_count(everyone, within);
    state.note("cut " + within.str() + " at weight ratio " + ratio.str());

    std::vector<SubFamily> left_fams(fams.begin(), fams.begin() + left_count);
    std::vector<SubFamily> right_fams(fams.begin() + left_count, fams.end());
    unanimous_weighted_rec(left_fams, left_piece, segs, state);
    unanimous_weighted_rec(right_fams, right_piece, segs, state);
}

struct MarkedFamily {
    int family_index;
    Rational median_mark;
    std::vector<Rational> marks; // per member, in member order
};

// Lower median: the ceil(n/2)-th smallest mark. At least ceil(n/2) members
// mark at or before it, and floor(n/2)+1 mark at or after it.
Rational lower_median(std::vector<Rational> marks) {
    std::sort(marks.begin(), marks.end());
    return marks[static_cast<size_t>((marks.size() - 1) / 2)];
}

MarkedFamily mark_family(const Family& fam, int family_index, const Rational& target) {
    MarkedFamily mf{family_index, kZero, {}};
    for (const Agent& agent : fam.members) {
        mf.marks.push_back(agent.measure.mark(kZero, target));
    }
    mf.median_mark = lower_median(mf.marks);
    return mf;
}

void finish(RecState& state, std::optional<long long> theory_bound, ProtocolResult& result) {
    result.allocation = Allocation(std::move(state.pieces));
    result.comp = comp(result.allocation);
    result.theory_bound = theory_bound;
    result.impl_bound = state.impl_bound;
}

std::vector<SubFamily> full_subfamilies(const Instance& inst) {
    std::vector<SubFamily> fams;
    for (int j = 0; j < inst.family_count(); ++j) {
        SubFamily sf{j, inst.family(j).weight, {}};
        for (const Agent& agent : inst.family(j).members) sf.members.push_back(&agent.measure);
        fams.push_back(std::move(sf));
    }
    return fams;
}

ProtocolResult trivial_whole_cake(const Instance& inst) {
    ProtocolResult result;
    result.allocation = Allocation({Piece::whole()});
    result.comp = 1;
    result.theory_bound = 1;
    result.impl_bound = 1;
    result.trace.push_back("single family takes the whole cake");
    (void)inst;
    return result;
}

// Connected proportional division for additive "agents" (one per family,
// valuing by the family average): recursive halving on marks.
void average_halving_rec(const std::vector<std::pair<int, const ValueMeasure*>>& agents,
                         const Interval& within, std::vector<Piece>& pieces,
                         std::vector<std::string>& trace) {
    const int t = static_cast<int>(agents.size());
    if (t == 1) {
        pieces[static_cast<size_t>(agents[0].first)] = Piece::interval(within.lo, within.hi);
        return;
    }
    const int left_count = (t + 1) / 2;
    std::vector<std::pair<Rational, int>> marks; // (mark, position in agents)
    for (int a = 0; a < t; ++a) {
        const ValueMeasure& m = *agents[static_cast<size_t>(a)].second;
        const Rational here = m.value(within);
        const Rational target = here * Rational(left_count, t);
        marks.emplace_back(m.mark(within.lo, target), a);
    }
    std::sort(marks.begin(), marks.end());
    const Rational split = marks[static_cast<size_t>(left_count - 1)].first;
    trace.push_back("halving cut at " + split.str());

    std::vector<std::pair<int, const ValueMeasure*>> left_agents, right_agents;
    for (int rank = 0; rank < t; ++rank) {
        const auto& agent = agents[static_cast<size_t>(marks[static_cast<size_t>(rank)].second)];
        (rank < left_count ? left_agents : right_agents).push_back(agent);
    }
    average_halving_rec(left_agents, Interval{within.lo, split}, pieces, trace);
    average_halving_rec(right_agents, Interval{split, within.hi}, pieces, trace);
}

} // namespace

UnanimousMethod parse_unanimous_method(const std::string& name) {
    if (name == "choose") return UnanimousMethod::choose;
    if (name == "recursive") return UnanimousMethod::recursive;
    throw std::invalid_argument("unknown unanimous method '" + name + "'");
}

DemocraticMode parse_democratic_mode(const std::string& name) {
    if (name == "equal") return DemocraticMode::equal;
    if (name == "entitled") return DemocraticMode::entitled;
    throw std::invalid_argument("unknown democratic mode '" + name + "'");
}

ProtocolResult divide_average(const Instance& inst) {
    const int k = inst.family_count();
    if (k == 1) return trivial_whole_cake(inst);

    std::vector<ValueMeasure> averages;
    averages.reserve(static_cast<size_t>(k));
    for (const Family& fam : inst.families()) {
        std::vector<ValueMeasure> ms;
        for (const Agent& agent : fam.members) ms.push_back(agent.measure);
        averages.push_back(average_measure(ms));
    }

    if (inst.equal_entitlements()) {
        std::vector<std::pair<int, const ValueMeasure*>> agents;
        for (int j = 0; j < k; ++j) agents.emplace_back(j, &averages[static_cast<size_t>(j)]);
        ProtocolResult result;
        std::vector<Piece> pieces(static_cast<size_t>(k));
        average_halving_rec(agents, Interval{kZero, kOne}, pieces, result.trace);
        result.allocation = Allocation(std::move(pieces));
        result.comp = comp(result.allocation);
        result.theory_bound = k; // connected division exists
        result.impl_bound = k;
        return result;
    }

    // Different entitlements: weighted unanimous recursion over singleton
    // pseudo-families holding the family averages.
    std::vector<SubFamily> fams;
    for (int j = 0; j < k; ++j) {
        fams.push_back(SubFamily{j, inst.family(j).weight, {&averages[static_cast<size_t>(j)]}});
    }
    RecState state;
    state.pieces.resize(static_cast<size_t>(k));
    ProtocolResult result;
    state.trace = &result.trace;
    unanimous_weighted_rec(fams, Piece::whole(), 1, state);
    Allocation alloc(std::move(state.pieces));
    result.allocation = std::move(alloc);
    result.comp = comp(result.allocation);
    result.theory_bound = ceil_log2(k) * (2 * k - 2) + 1;
    result.impl_bound = state.impl_bound;
    return result;
}

ProtocolResult divide_unanimous(const Instance& inst, UnanimousMethod method) {
    const int k = inst.family_count();
    const int n = inst.total_agents();
    if (k == 1) return trivial_whole_cake(inst);

    if (method == UnanimousMethod::choose) {
        if (!inst.equal_entitlements()) {
            throw std::invalid_argument(
                "divide_unanimous: the choose method supports equal entitlements only (the "
                "left-out agent could pick a piece of the wrong size)");
        }
        std::vector<SubFamily> fams = full_subfamilies(inst);
        const ValueMeasure* excluded = fams.back().members.back();
        std::vector<const ValueMeasure*> included = all_members(fams, excluded);
        if (included.empty()) included.push_back(excluded);

        ProtocolResult result;
        Allocation division = exact_division(included, k, Piece::whole());
        const long long segs = refinement_segment_count(included, Piece::whole());
        result.trace.push_back("exact division into " + std::to_string(k) + " pieces for " +
                               std::to_string(included.size()) + " agents");

        // The left-out agent (the last member of the last family) picks its
        // weakly favorite piece; remaining families take pieces by index.
        int favorite = 0;
        Rational best = excluded->value(division.piece(0));
        for (int j = 1; j < k; ++j) {
            Rational v = excluded->value(division.piece(j));
            if (v > best) {
                best = v;
                favorite = j;
            }
        }
        result.trace.push_back("left-out agent of family " + std::to_string(k) +
                               " picks piece " + std::to_string(favorite + 1) + " worth " +
                               best.str());
        std::vector<Piece> pieces(static_cast<size_t>(k));
        pieces[static_cast<size_t>(k - 1)] = division.piece(favorite);
        int next = 0;
        for (int j = 0; j + 1 < k; ++j) {
            if (next == favorite) ++next;
            pieces[static_cast<size_t>(j)] = division.piece(next++);
        }
        result.allocation = Allocation(std::move(pieces));
        result.comp = comp(result.allocation);
        result.theory_bound = static_cast<long long>(n - 1) * (k - 1) + 1;
        result.impl_bound = static_cast<long long>(k) * segs;
        return result;
    }

    std::vector<SubFamily> fams = full_subfamilies(inst);
    RecState state;
    state.pieces.resize(static_cast<size_t>(k));
    ProtocolResult result;
    state.trace = &result.trace;
    std::optional<long long> theory_bound;
    if (inst.equal_entitlements()) {
        unanimous_equal_rec(fams, Piece::whole(), 1, state);
        theory_bound = ceil_log2(k) * (2 * n - 4) + 1;
    } else {
        unanimous_weighted_rec(fams, Piece::whole(), 1, state);
        theory_bound = ceil_log2(k) * (2 * n - 2) + 1;
    }
    finish(state, theory_bound, result);
    return result;
}

ProtocolResult divide_democratic_two(const Instance& inst) {
    if (inst.family_count() != 2) {
        throw std::invalid_argument("divide_democratic_two: needs exactly 2 families");
    }
    if (!inst.equal_entitlements()) {
        throw std::invalid_argument("divide_democratic_two: needs equal entitlements");
    }
    const Rational half(1, 2);
    MarkedFamily f1 = mark_family(inst.family(0), 0, half);
    MarkedFamily f2 = mark_family(inst.family(1), 1, half);

    const Rational mid = (f1.median_mark + f2.median_mark) / Rational(2);
    const bool f1_west = f1.median_mark <= f2.median_mark;

    ProtocolResult result;
    result.trace.push_back("family medians " + f1.median_mark.str() + ", " +
                           f2.median_mark.str() + "; cut at " + mid.str());
    Piece west = Piece::interval(kZero, mid);
    Piece east = Piece::interval(mid, kOne);
    result.allocation = f1_west ? Allocation({west, east}) : Allocation({east, west});
    result.comp = comp(result.allocation);
    result.theory_bound = 2;
    result.impl_bound = 2;
    return result;
}

ProtocolResult divide_democratic_k(const Instance& inst, DemocraticMode mode) {
    const int k = inst.family_count();
    const int n = inst.total_agents();
    if (k == 1) return trivial_whole_cake(inst);

    if (mode == DemocraticMode::entitled) {
        // Count only the first ceil(n_j/2) members of each family; they all
        // end up with exactly w_j, hence happy.
        std::vector<SubFamily> fams;
        for (int j = 0; j < k; ++j) {
            const Family& fam = inst.family(j);
            SubFamily sf{j, fam.weight, {}};
            const int take = (fam.size() + 1) / 2;
            for (int i = 0; i < take; ++i) {
                sf.members.push_back(&fam.members[static_cast<size_t>(i)].measure);
            }
            fams.push_back(std::move(sf));
        }
        RecState state;
        state.pieces.resize(static_cast<size_t>(k));
        ProtocolResult result;
        state.trace = &result.trace;
        result.trace.push_back("counting the first ceil(n_j/2) members of each family");
        unanimous_weighted_rec(fams, Piece::whole(), 1, state);
        Allocation alloc(std::move(state.pieces));
        result.allocation = std::move(alloc);
        result.comp = comp(result.allocation);
        result.theory_bound = ceil_log2(k) * (n - 2) + 1;
        result.impl_bound = state.impl_bound;
        return result;
    }

    if (!inst.equal_entitlements()) {
        throw std::invalid_argument(
            "divide_democratic_k: equal mode needs equal entitlements (use entitled mode)");
    }

    const int west_count = (k + 1) / 2; // ceil(k/2)
    const Rational target(west_count, k);
    std::vector<MarkedFamily> marked;
    for (int j = 0; j < k; ++j) {
        marked.push_back(mark_family(inst.family(j), j, target));
    }
    std::sort(marked.begin(), marked.end(), [](const MarkedFamily& a, const MarkedFamily& b) {
        if (a.median_mark != b.median_mark) return a.median_mark < b.median_mark;
        return a.family_index < b.family_index;
    });
    const Rational cut = marked[static_cast<size_t>(west_count - 1)].median_mark;

    ProtocolResult result;
    result.trace.push_back("marks at value " + target.str() + "; halving cut at " + cut.str());
    Piece west_piece = Piece::interval(kZero, cut);
    Piece east_piece = Piece::interval(cut, kOne);

    if (k == 2) {
        std::vector<Piece> pieces(2);
        pieces[static_cast<size_t>(marked[0].family_index)] = west_piece;
        pieces[static_cast<size_t>(marked[1].family_index)] = east_piece;
        result.allocation = Allocation(std::move(pieces));
        result.comp = comp(result.allocation);
        result.theory_bound = 2;
        result.impl_bound = 2;
        return result;
    }

    // Keep, per family, exactly ceil(n_j/2) members that are happy on the
    // family's side (lowest member indices first).
    auto side_subfamilies = [&](int from, int to, bool west) {
        std::vector<SubFamily> fams;
        for (int pos = from; pos < to; ++pos) {
            const MarkedFamily& mf = marked[static_cast<size_t>(pos)];
            const Family& fam = inst.family(mf.family_index);
            const int need = (fam.size() + 1) / 2;
            SubFamily sf{mf.family_index, Rational(1, k), {}};
            for (int i = 0; i < fam.size() && static_cast<int>(sf.members.size()) < need; ++i) {
                const Rational& mark = mf.marks[static_cast<size_t>(i)];
                const bool happy = west ? mark <= cut : mark >= cut;
                if (happy) sf.members.push_back(&fam.members[static_cast<size_t>(i)].measure);
            }
            if (static_cast<int>(sf.members.size()) < need) {
                throw std::logic_error("divide_democratic_k: happy-majority guarantee violated");
            }
            fams.push_back(std::move(sf));
        }
        return fams;
    };

    RecState state;
    state.pieces.resize(static_cast<size_t>(k));
    state.trace = &result.trace;
    unanimous_equal_rec(side_subfamilies(0, west_count, true), west_piece, 1, state);
    unanimous_equal_rec(side_subfamilies(west_count, k, false), east_piece, 1, state);

    Allocation alloc(std::move(state.pieces));
    result.allocation = std::move(alloc);
    result.comp = comp(result.allocation);
    const Rational branch1 = Rational(2) + Rational(west_count - 1) * (Rational(n, 2) - Rational(2));
    const Rational branch2 =
        Rational(2) + Rational(ceil_log2(west_count)) * (Rational(n) - Rational(8));
    result.theory_bound = ceil_to_ll(min(branch1, branch2));
    result.impl_bound = state.impl_bound;
    return result;
}

} // namespace famcake
