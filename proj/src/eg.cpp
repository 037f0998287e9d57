#include "schubert/eg.hpp"

#include <algorithm>

namespace schubert {

Perm word_to_perm(const Word& w) {
    if (w.empty()) return Perm();
    int lo = *std::min_element(w.begin(), w.end());
    int hi = *std::max_element(w.begin(), w.end()) + 1;
    Perm p = Perm::identity(lo, hi - lo + 1);
    for (int i : w) p = p * Perm::identity(lo, hi - lo + 1).times_s_right(i);
    return p;
}

bool is_reduced(const Word& w) {
    return word_to_perm(w).length() == (long long)w.size();
}

std::vector<Word> reduced_words(const Perm& p) {
    // Recurse on descents: w = (w s_i) * s_i with l(w s_i) = l(w) - 1, so the
    // reduced words of w are exactly (reduced word of w s_i) + [i].
    std::vector<Word> out;
    if (p.is_identity()) {
        out.push_back({});
        return out;
    }
    for (int i : p.descents()) {
        Perm shorter = p.times_s_right(i);
        for (Word w : reduced_words(shorter)) {
            w.push_back(i);
            out.push_back(std::move(w));
        }
    }
    return out;
}

Tableau ck_insert(const Tableau& p, int x, std::pair<int, int>* box_out) {
    Tableau t = p;
    size_t i = 0; // current row
    for (;; ++i) {
        if (i == t.rows.size()) t.rows.push_back({});
        auto& row = t.rows[i];
        if (row.empty() || x >= row.back()) {
            row.push_back(x);
            if (box_out) *box_out = {int(i), int(row.size()) - 1};
            return t;
        }
        // z = leftmost entry > x (exists since row.back() > x).
        auto zit = std::upper_bound(row.begin(), row.end(), x);
        int z = *zit;
        bool x_present = std::binary_search(row.begin(), row.end(), x);
        if (z == x + 1 && x_present) {
            x = x + 1; // row untouched; reinsert x+1 below
        } else {
            std::swap(*zit, x); // bump: x replaces z, carry z down
        }
    }
}

std::pair<Tableau, Tableau> eg_insert(const Word& word) {
    if (!is_reduced(word)) throw invalid_input("eg_insert: word is not reduced");
    Tableau p, q;
    for (size_t j = 1; j <= word.size(); ++j) {
        int letter = word[word.size() - j];
        std::pair<int, int> box;
        p = ck_insert(p, letter, &box);
        if (box.first == int(q.rows.size())) q.rows.push_back({});
        q.rows[box.first].push_back(int(j));
        if (box.second != int(q.rows[box.first].size()) - 1)
            throw internal_error("eg_insert: box bookkeeping out of sync");
    }
    return {p, q};
}

std::map<Tableau, std::vector<Word>> ck_classes(const Perm& p) {
    std::map<Tableau, std::vector<Word>> out;
    for (Word& w : reduced_words(p)) {
        Tableau key = eg_insert(w).first;
        out[std::move(key)].push_back(std::move(w));
    }
    return out;
}

std::set<int> word_descents(const Word& w) {
    std::set<int> d;
    for (size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] > w[j + 1]) d.insert(int(j) + 1);
    return d;
}

} // namespace schubert
