#include "ovalis/linsolve.hpp"

#include <algorithm>
#include <set>

namespace ovalis {

Solution solve_exact(const std::vector<Equation>& equations) {
    std::set<std::string> names;
    for (const auto& eq : equations)
        for (const auto& [n, c] : eq.coeffs)
            if (!c.is_zero()) names.insert(n);
    std::vector<std::string> unknowns(names.begin(), names.end());
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < unknowns.size(); ++i) col[unknowns[i]] = i;

    const std::size_t n = unknowns.size();
    struct Row {
        std::vector<Rat> a;
        Rat b;
        std::string tag;
    };
    std::vector<Row> rows;
    rows.reserve(equations.size());
    for (const auto& eq : equations) {
        Row r{std::vector<Rat>(n), eq.rhs, eq.tag};
        for (const auto& [name, c] : eq.coeffs)
            if (!c.is_zero()) r.a[col[name]] = c;
        rows.push_back(std::move(r));
    }

    std::vector<int> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p].a[c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        Rat inv = Rat{1} / rows[rank].a[c];
        for (auto& x : rows[rank].a) x = x * inv;
        rows[rank].b = rows[rank].b * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r].a[c].is_zero()) continue;
            Rat f = rows[r].a[c];
            for (std::size_t k = 0; k < n; ++k) rows[r].a[k] = rows[r].a[k] - f * rows[rank].a[k];
            rows[r].b = rows[r].b - f * rows[rank].b;
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }

    for (std::size_t r = rank; r < rows.size(); ++r)
        if (!rows[r].b.is_zero())
            throw FitError("inconsistent system at " + rows[r].tag);

    Solution sol;
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_of_col[c] < 0) {
            sol.free_unknowns.push_back(unknowns[c]);
            continue;
        }
        const Row& r = rows[static_cast<std::size_t>(pivot_of_col[c])];
        bool pinned = true;
        for (std::size_t k = 0; k < n; ++k)
            if (k != c && !r.a[k].is_zero()) pinned = false;
        if (pinned)
            sol.values[unknowns[c]] = r.b;
        else
            sol.free_unknowns.push_back(unknowns[c]);
    }
    sol.unique = sol.free_unknowns.empty();
    return sol;
}

}  // namespace ovalis
