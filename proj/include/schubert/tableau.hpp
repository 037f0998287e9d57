#pragma once

#include <set>
#include <vector>

#include "schubert/common.hpp"

namespace schubert {

// A filling of a Young diagram by integers, rows listed top to bottom.
// Entries may be any integers (insertion letters can come from negative
// windows).  Validity predicates are separate so that intermediate states
// (mid-insertion, mid-slide) can exist.
struct Tableau {
    std::vector<std::vector<int>> rows;

    bool empty() const { return rows.empty(); }
    int n_cells() const;
    std::vector<int> shape() const;

    bool operator==(const Tableau& o) const { return rows == o.rows; }
    bool operator<(const Tableau& o) const { return rows < o.rows; }
};

// Weakly decreasing row lengths, no empty rows.
bool is_partition_shape(const Tableau& t);
// Rows and columns strictly increasing (EG insertion tableaux).
bool is_increasing_tableau(const Tableau& t);
// Entries are exactly 1..N, rows and columns strictly increasing.
bool is_standard_tableau(const Tableau& t);
// Rows weakly increasing, columns strictly increasing.
bool is_semistandard_tableau(const Tableau& t);

// Rows top to bottom, right to left within each row.
std::vector<int> reading_word(const Tableau& t);

// Des(S) = {j : j+1 appears in a strictly lower row than j}; S standard.
std::set<int> descent_set(const Tableau& q);

// Partition helpers (partitions as weakly decreasing vectors, no trailing 0s).
std::vector<int> normalized_partition(std::vector<int> lam);
bool partition_contains(const std::vector<int>& outer, const std::vector<int>& inner);

} // namespace schubert
