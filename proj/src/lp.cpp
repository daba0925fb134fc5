#include "famcake/lp.hpp"

#include <stdexcept>

namespace famcake::lp {

namespace {

const Rational kZero(0);

} // namespace

std::optional<std::vector<Rational>> find_feasible(int num_vars, const std::vector<Row>& rows) {
    const int m = static_cast<int>(rows.size());
    if (num_vars < 0) throw std::invalid_argument("find_feasible: negative variable count");

    // Normalize to b >= 0, then give each row a slack (le) or surplus (ge)
    // column; ge/eq rows additionally get an artificial basic column.
    struct NormRow {
        std::vector<Rational> a;
        Rel rel;
        Rational b;
    };
    std::vector<NormRow> norm;
    norm.reserve(rows.size());
    for (const Row& row : rows) {
        if (static_cast<int>(row.coeffs.size()) != num_vars) {
            throw std::invalid_argument("find_feasible: row width mismatch");
        }
        NormRow nr{row.coeffs, row.rel, row.rhs};
        if (nr.b < kZero) {
            for (Rational& c : nr.a) c = -c;
            nr.b = -nr.b;
            if (nr.rel == Rel::le) nr.rel = Rel::ge;
            else if (nr.rel == Rel::ge) nr.rel = Rel::le;
        }
        norm.push_back(std::move(nr));
    }

    int num_slack = 0;
    for (const NormRow& nr : norm) {
        if (nr.rel != Rel::eq) ++num_slack;
    }
    int num_art = 0;
    for (const NormRow& nr : norm) {
        if (nr.rel != Rel::le) ++num_art;
    }

    const int total = num_vars + num_slack + num_art;
    std::vector<std::vector<Rational>> tab(static_cast<size_t>(m),
                                           std::vector<Rational>(static_cast<size_t>(total + 1)));
    std::vector<int> basis(static_cast<size_t>(m), -1);

    int slack_at = num_vars;
    int art_at = num_vars + num_slack;
    for (int i = 0; i < m; ++i) {
        auto& t = tab[static_cast<size_t>(i)];
        for (int j = 0; j < num_vars; ++j) t[static_cast<size_t>(j)] = norm[static_cast<size_t>(i)].a[static_cast<size_t>(j)];
        t[static_cast<size_t>(total)] = norm[static_cast<size_t>(i)].b;
        switch (norm[static_cast<size_t>(i)].rel) {
            case Rel::le:
                t[static_cast<size_t>(slack_at)] = Rational(1);
                basis[static_cast<size_t>(i)] = slack_at++;
                break;
            case Rel::ge:
                t[static_cast<size_t>(slack_at)] = Rational(-1);
                ++slack_at;
                t[static_cast<size_t>(art_at)] = Rational(1);
                basis[static_cast<size_t>(i)] = art_at++;
                break;
            case Rel::eq:
                t[static_cast<size_t>(art_at)] = Rational(1);
                basis[static_cast<size_t>(i)] = art_at++;
                break;
        }
    }

    const int first_art = num_vars + num_slack;
    auto is_art = [&](int col) { return col >= first_art; };

    // Reduced costs for min(sum of artificials): r_j = c_j - sum over rows
    // with artificial basics of T[i][j].
    std::vector<Rational> reduced(static_cast<size_t>(total));
    auto recompute_reduced = [&]() {
        for (int j = 0; j < total; ++j) {
            Rational r = is_art(j) ? Rational(1) : Rational(0);
            for (int i = 0; i < m; ++i) {
                if (is_art(basis[static_cast<size_t>(i)])) {
                    r -= tab[static_cast<size_t>(i)][static_cast<size_t>(j)];
                }
            }
            reduced[static_cast<size_t>(j)] = r;
        }
    };
    recompute_reduced();

    while (true) {
        int entering = -1;
        for (int j = 0; j < total; ++j) {
            if (reduced[static_cast<size_t>(j)] < kZero) {
                entering = j;
                break; // Bland: smallest index
            }
        }
        if (entering < 0) break;

        int leaving = -1;
        Rational best_ratio(0);
        for (int i = 0; i < m; ++i) {
            const Rational& piv = tab[static_cast<size_t>(i)][static_cast<size_t>(entering)];
            if (piv > kZero) {
                Rational ratio = tab[static_cast<size_t>(i)][static_cast<size_t>(total)] / piv;
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio &&
                     basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leaving)])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leaving < 0) {
            // Unbounded phase-1 cannot happen (objective bounded below by 0);
            // treat defensively as infeasible.
            return std::nullopt;
        }

        // Pivot on (leaving, entering).
        auto& prow = tab[static_cast<size_t>(leaving)];
        const Rational pivot = prow[static_cast<size_t>(entering)];
        for (auto& v : prow) v /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i == leaving) continue;
            auto& row = tab[static_cast<size_t>(i)];
            const Rational factor = row[static_cast<size_t>(entering)];
            if (factor.is_zero()) continue;
            for (int j = 0; j <= total; ++j) {
                row[static_cast<size_t>(j)] -= factor * prow[static_cast<size_t>(j)];
            }
        }
        basis[static_cast<size_t>(leaving)] = entering;
        recompute_reduced();
    }

    Rational objective(0);
    for (int i = 0; i < m; ++i) {
        if (is_art(basis[static_cast<size_t>(i)])) {
            objective += tab[static_cast<size_t>(i)][static_cast<size_t>(total)];
        }
    }
    if (!objective.is_zero()) return std::nullopt;

    std::vector<Rational> x(static_cast<size_t>(num_vars), Rational(0));
    for (int i = 0; i < m; ++i) {
        if (basis[static_cast<size_t>(i)] < num_vars) {
            x[static_cast<size_t>(basis[static_cast<size_t>(i)])] =
                tab[static_cast<size_t>(i)][static_cast<size_t>(total)];
        }
    }
    return x;
}

} // namespace famcake::lp
