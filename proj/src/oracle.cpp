#include "famcake/oracle.hpp"

#include "famcake/errors.hpp"
#include "famcake/lp.hpp"
#include "search_util.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace famcake {

namespace {

const Rational kZero(0);
const Rational kOne(1);

struct MemberRef {
    int family;
    const ValueMeasure* measure;
};

// All size-`need` subsets of {0..n-1} per family, lexicographic; `chosen`
// holds member indices per family. Returns true when the visitor stops.
bool for_each_majority_subset(const std::vector<int>& family_sizes,
                              const std::vector<int>& needs, size_t family,
                              std::vector<std::vector<int>>& chosen,
                              const std::function<bool()>& visit) {
    if (family == family_sizes.size()) return visit();
    const int n = family_sizes[family];
    const int need = needs[family];
    std::vector<int>& subset = chosen[family];
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (static_cast<int>(subset.size()) == need) {
            return for_each_majority_subset(family_sizes, needs, family + 1, chosen, visit);
        }
        for (int i = from; i < n; ++i) {
            if (n - i < need - static_cast<int>(subset.size())) break;
            subset.push_back(i);
            if (rec(i + 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    return rec(0);
}

Allocation allocation_from_runs(const std::vector<Rational>& ys, const std::vector<int>& labels,
                                int k) {
    std::vector<std::vector<Interval>> parts(static_cast<size_t>(k));
    for (size_t t = 0; t < labels.size(); ++t) {
        if (ys[t] < ys[t + 1]) {
            parts[static_cast<size_t>(labels[t])].push_back({ys[t], ys[t + 1]});
        }
    }
    std::vector<Piece> pieces;
    pieces.reserve(parts.size());
    for (auto& p : parts) pieces.push_back(Piece::from_intervals(std::move(p)));
    return Allocation(std::move(pieces));
}

} // namespace

OracleResult min_components(const Instance& inst, Criterion criterion, int max_comp) {
    const int k = inst.family_count();
    if (max_comp < 1) throw std::invalid_argument("min_components: max_comp must be >= 1");

    std::vector<MemberRef> members;
    std::vector<int> family_sizes;
    for (int j = 0; j < k; ++j) {
        family_sizes.push_back(inst.family(j).size());
        for (const Agent& agent : inst.family(j).members) {
            members.push_back({j, &agent.measure});
        }
    }
    std::vector<const ValueMeasure*> measures;
    measures.reserve(members.size());
    for (const MemberRef& m : members) measures.push_back(m.measure);

    detail::SegmentTable table = detail::build_segment_table(measures);
    const int S = table.segment_count();

    const long long limit = detail::search_limit_from_env();
    OracleResult result;
    result.criterion = criterion_name(criterion);

    std::vector<int> majority_needs;
    for (int j = 0; j < k; ++j) majority_needs.push_back((family_sizes[static_cast<size_t>(j)] + 1) / 2);

    for (int R = k; R <= max_comp && !result.witness; ++R) {
        const int cuts = R - 1;
        detail::for_each_label_sequence(R, k, /*canonical=*/false, [&](const std::vector<int>&
                                                                           labels) {
            return detail::for_each_cut_assignment(cuts, S, [&](const std::vector<int>& cut_seg) {
                std::vector<lp::Row> base = detail::base_cut_rows(table, cut_seg);

                // value_i(own family's piece) as a linear expression, per member.
                std::vector<detail::LinExpr> own_value;
                own_value.reserve(members.size());
                for (size_t i = 0; i < members.size(); ++i) {
                    own_value.push_back(detail::piece_value_expr(
                        table, static_cast<int>(i), labels, cut_seg, members[i].family));
                }

                auto try_rows = [&](std::vector<lp::Row> rows) -> bool {
                    if (++result.nodes_searched > limit) {
                        throw search_limit_error("min_components: FAMCAKE_SEARCH_LIMIT exceeded");
                    }
                    auto solution = lp::find_feasible(cuts, rows);
                    if (!solution) return false;
                    std::vector<Rational> ys{kZero};
                    for (const Rational& y : detail::cut_positions(table, cut_seg, *solution)) {
                        ys.push_back(y);
                    }
                    ys.push_back(kOne);
                    Allocation alloc = allocation_from_runs(ys, labels, k);
                    if (!evaluate(inst, alloc).verdict(criterion)) {
                        throw std::logic_error("min_components: witness fails its criterion");
                    }
                    result.min_components = comp(alloc);
                    result.witness = std::move(alloc);
                    return true;
                };

                switch (criterion) {
                    case Criterion::average: {
                        std::vector<lp::Row> rows = base;
                        int member_at = 0;
                        for (int j = 0; j < k; ++j) {
                            detail::LinExpr sum{std::vector<Rational>(static_cast<size_t>(cuts)),
                                                kZero};
                            for (int i = 0; i < family_sizes[static_cast<size_t>(j)]; ++i) {
                                const detail::LinExpr& e = own_value[static_cast<size_t>(member_at++)];
                                for (size_t c = 0; c < e.coeffs.size(); ++c) sum.coeffs[c] += e.coeffs[c];
                                sum.constant += e.constant;
                            }
                            const Rational rhs = Rational(family_sizes[static_cast<size_t>(j)]) *
                                                     inst.family(j).weight -
                                                 sum.constant;
                            rows.push_back({std::move(sum.coeffs), lp::Rel::ge, rhs});
                        }
                        return try_rows(std::move(rows));
                    }
                    case Criterion::unanimous: {
                        std::vector<lp::Row> rows = base;
                        for (size_t i = 0; i < members.size(); ++i) {
                            const detail::LinExpr& e = own_value[i];
                            rows.push_back({e.coeffs, lp::Rel::ge,
                                            inst.family(members[i].family).weight - e.constant});
                        }
                        return try_rows(std::move(rows));
                    }
                    case Criterion::democratic: {
                        // Some majority subset of each family must be happy.
                        std::vector<std::vector<int>> chosen(static_cast<size_t>(k));
                        return for_each_majority_subset(
                            family_sizes, majority_needs, 0, chosen, [&]() -> bool {
                                std::vector<lp::Row> rows = base;
                                int member_at = 0;
                                for (int j = 0; j < k; ++j) {
                                    for (int i : chosen[static_cast<size_t>(j)]) {
                                        const detail::LinExpr& e =
                                            own_value[static_cast<size_t>(member_at + i)];
                                        rows.push_back({e.coeffs, lp::Rel::ge,
                                                        inst.family(j).weight - e.constant});
                                    }
                                    member_at += family_sizes[static_cast<size_t>(j)];
                                }
                                return try_rows(std::move(rows));
                            });
                    }
                }
                return false;
            });
        });
    }
    return result;
}

namespace {

// Shape check for the positivity oracle: families of equal size m, member
// (i,j) valuing exactly district i*k+j of an m*k grid. Returns m.
int lemma5_family_size(const Instance& inst) {
    const int k = inst.family_count();
    const int m = inst.family(0).size();
    for (const Family& fam : inst.families()) {
        if (fam.size() != m) {
            throw std::invalid_argument("positivity oracle: families must have equal size");
        }
    }
    const long long d = static_cast<long long>(m) * k;
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < m; ++i) {
            std::vector<Rational> vals(static_cast<size_t>(d), Rational(0));
            vals[static_cast<size_t>(static_cast<long long>(i) * k + j)] = Rational(1);
            if (!(inst.family(j).members[static_cast<size_t>(i)].measure ==
                  ValueMeasure::from_district_values(vals))) {
                throw std::invalid_argument(
                    "positivity oracle: instance is not lemma5-shaped (member " +
                    inst.family(j).members[static_cast<size_t>(i)].name +
                    " does not value exactly its own district)");
            }
        }
    }
    return m;
}

struct Run {
    int first_district;
    int last_district;
    int label;
};

// DFS over run patterns: runs cover districts 0..D-1 left to right; the next
// run starts either at the previous run's last district (cut strictly inside
// it) or just past it (cut at the boundary); adjacent labels differ. Member
// (i,j) is positive iff some run labeled j touches district i*k+j.
//
// Runs never reach back, so feasibility from a point in the search depends
// only on (start district, whether start's member is already covered, runs
// left, previous label, per-family deficits). Failed states are memoized on
// that key.
struct PositivitySearch {
    int k, q, D;
    long long limit;
    long long nodes = 0;
    std::vector<Run> runs;
    std::vector<int> needed; // per family, q minus covered so far (floor 0)
    std::vector<Run> found;
    std::set<std::vector<int>> failed;

    bool dfs(int start, bool start_covered, int runs_left, int prev_label) {
        if (++nodes > limit) {
            throw search_limit_error("positivity_min_components: FAMCAKE_SEARCH_LIMIT exceeded");
        }
        // Members whose district lies before `start` are out of reach.
        int deficit_families = 0;
        for (int j = 0; j < k; ++j) {
            if (needed[static_cast<size_t>(j)] == 0) continue;
            ++deficit_families;
            int reachable = 0;
            for (int d = start; d < D; ++d) {
                if (d % k == j && (d != start || !start_covered)) ++reachable;
            }
            if (reachable < needed[static_cast<size_t>(j)]) return false;
        }
        if (deficit_families > runs_left) return false;
        if (runs_left == 0) return false; // callers resolve the final run themselves

        std::vector<int> key{start, start_covered ? 1 : 0, runs_left, prev_label};
        key.insert(key.end(), needed.begin(), needed.end());
        if (failed.contains(key)) return false;

        for (int label = 0; label < k; ++label) {
            if (label == prev_label) continue;
            for (int end = start; end < D; ++end) {
                // Cover label's members in [start, end].
                std::vector<int> touched;
                for (int d = start; d <= end; ++d) {
                    if (d % k != label) continue;
                    if (d == start && start_covered) continue;
                    if (needed[static_cast<size_t>(label)] > 0) {
                        --needed[static_cast<size_t>(label)];
                        touched.push_back(d);
                    }
                }
                runs.push_back({start, end, label});
                bool ok = false;
                if (runs_left == 1) {
                    if (end == D - 1) {
                        ok = true;
                        for (int j = 0; j < k; ++j) {
                            if (needed[static_cast<size_t>(j)] > 0) ok = false;
                        }
                        if (ok) found = runs;
                    }
                } else {
                    // Next run shares district `end` (interior cut) or starts
                    // past it (boundary cut).
                    const bool end_covered =
                        (end % k == label) || (end == start && start_covered);
                    ok = dfs(end, end_covered, runs_left - 1, label) ||
                         (end + 1 <= D - 1 && dfs(end + 1, false, runs_left - 1, label));
                }
                runs.pop_back();
                for (int d : touched) {
                    (void)d;
                    ++needed[static_cast<size_t>(label)];
                }
                if (ok) return true;
            }
        }
        failed.insert(std::move(key));
        return false;
    }
};

Allocation realize_runs(const std::vector<Run>& runs, int k, int D) {
    // Cut after run t: at the boundary if the next run starts past this one's
    // last district, otherwise strictly inside the shared district. Multiple
    // interior cuts in one district are spaced evenly.
    const size_t R = runs.size();
    std::vector<int> interior_count(static_cast<size_t>(D), 0);
    for (size_t t = 0; t + 1 < R; ++t) {
        if (runs[t + 1].first_district == runs[t].last_district) {
            ++interior_count[static_cast<size_t>(runs[t].last_district)];
        }
    }
    std::vector<int> interior_used(static_cast<size_t>(D), 0);
    std::vector<Rational> ys{kZero};
    for (size_t t = 0; t + 1 < R; ++t) {
        if (runs[t + 1].first_district == runs[t].last_district) {
            const int d = runs[t].last_district;
            const int idx = ++interior_used[static_cast<size_t>(d)];
            // position = (d + idx/(count+1)) / D
            ys.push_back((Rational(d) + Rational(idx, interior_count[static_cast<size_t>(d)] + 1)) /
                         Rational(D));
        } else {
            ys.push_back(Rational(runs[t].last_district + 1, D));
        }
    }
    ys.push_back(kOne);
    std::vector<int> labels;
    labels.reserve(R);
    for (const Run& r : runs) labels.push_back(r.label);
    return allocation_from_runs(ys, labels, k);
}

} // namespace

OracleResult positivity_min_components(const Instance& inst, int q, int max_comp) {
    const int k = inst.family_count();
    const int m = lemma5_family_size(inst);
    if (q < 1 || q > m) {
        throw std::invalid_argument("positivity oracle: q must be in [1,m]");
    }
    if (max_comp < 1) throw std::invalid_argument("positivity oracle: max_comp must be >= 1");

    OracleResult result;
    result.criterion = "positivity(q=" + std::to_string(q) + ")";

    PositivitySearch search;
    search.k = k;
    search.q = q;
    search.D = m * k;
    search.limit = detail::search_limit_from_env();
    search.needed.assign(static_cast<size_t>(k), q);

    for (int R = k; R <= max_comp; ++R) {
        if (search.dfs(0, false, R, -1)) {
            Allocation witness = realize_runs(search.found, k, search.D);
            // Independent check of the realized witness.
            if (comp(witness) != R) {
                throw std::logic_error("positivity oracle: witness component mismatch");
            }
            for (int j = 0; j < k; ++j) {
                int positive = 0;
                for (const Agent& agent : inst.family(j).members) {
                    if (agent.measure.value(witness.piece(j)) > kZero) ++positive;
                }
                if (positive < q) {
                    throw std::logic_error("positivity oracle: witness fails positivity");
                }
            }
            result.min_components = R;
            result.witness = std::move(witness);
            break;
        }
    }
    result.nodes_searched = search.nodes;
    return result;
}

} // namespace famcake
