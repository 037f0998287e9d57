#include "schubert/tableau.hpp"

#include <algorithm>

namespace schubert {

int Tableau::n_cells() const {
    int n = 0;
    for (const auto& r : rows) n += int(r.size());
    return n;
}

std::vector<int> Tableau::shape() const {
    std::vector<int> s;
    s.reserve(rows.size());
    for (const auto& r : rows) s.push_back(int(r.size()));
    return s;
}

bool is_partition_shape(const Tableau& t) {
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (t.rows[i].empty()) return false;
        if (i && t.rows[i].size() > t.rows[i - 1].size()) return false;
    }
    return true;
}

bool is_increasing_tableau(const Tableau& t) {
    if (!is_partition_shape(t)) return false;
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (size_t j = 0; j < t.rows[i].size(); ++j) {
            if (j && t.rows[i][j] <= t.rows[i][j - 1]) return false;
            if (i && j < t.rows[i - 1].size() && t.rows[i][j] <= t.rows[i - 1][j])
                return false;
        }
    return true;
}

bool is_standard_tableau(const Tableau& t) {
    if (!is_increasing_tableau(t)) return false;
    std::vector<int> entries;
    for (const auto& r : t.rows) entries.insert(entries.end(), r.begin(), r.end());
    std::sort(entries.begin(), entries.end());
    for (int i = 0; i < int(entries.size()); ++i)
        if (entries[i] != i + 1) return false;
    return true;
}

bool is_semistandard_tableau(const Tableau& t) {
    if (!is_partition_shape(t)) return false;
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (size_t j = 0; j < t.rows[i].size(); ++j) {
            if (j && t.rows[i][j] < t.rows[i][j - 1]) return false;
            if (i && j < t.rows[i - 1].size() && t.rows[i][j] <= t.rows[i - 1][j])
                return false;
        }
    return true;
}

std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> w;
    for (const auto& r : t.rows)
        for (auto it = r.rbegin(); it != r.rend(); ++it) w.push_back(*it);
    return w;
}

std::set<int> descent_set(const Tableau& q) {
    // row_of[v] = row index containing entry v.
    std::set<int> d;
    std::vector<std::pair<int, int>> pos; // (entry, row)
    for (int i = 0; i < int(q.rows.size()); ++i)
        for (int v : q.rows[i]) pos.push_back({v, i});
    std::sort(pos.begin(), pos.end());
    for (size_t i = 0; i + 1 < pos.size(); ++i)
        if (pos[i + 1].first == pos[i].first + 1 && pos[i + 1].second > pos[i].second)
            d.insert(pos[i].first);
    return d;
}

std::vector<int> normalized_partition(std::vector<int> lam) {
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    for (size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < 0 || (i && lam[i] > lam[i - 1]))
            throw invalid_input("not a partition");
    }
    return lam;
}

bool partition_contains(const std::vector<int>& outer, const std::vector<int>& inner) {
    for (size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] == 0) continue;
        if (i >= outer.size() || outer[i] < inner[i]) return false;
    }
    return true;
}

} // namespace schubert
