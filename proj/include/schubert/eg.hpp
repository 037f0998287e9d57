#pragma once

#include <map>
#include <vector>

#include "schubert/perm.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

// A word i1 i2 ... il standing for the product s_{i1} s_{i2} ... s_{il}
// applied left to right (each s_i swaps the values i, i+1).
using Word = std::vector<int>;

// Product of the word's transpositions over a window large enough to hold
// all letters.
Perm word_to_perm(const Word& w);
bool is_reduced(const Word& w);

// All reduced words of p (can be large; intended for desk-scale windows).
std::vector<Word> reduced_words(const Perm& p);

// One Coxeter-Knuth insertion of x into increasing tableau p.  If box_out is
// non-null it receives the (row, col) of the appended box (0-based).
Tableau ck_insert(const Tableau& p, int x, std::pair<int, int>* box_out = nullptr);

// Edelman-Greene: insert the word right to left; Q records the step index
// (1-based) at which each box appeared.  Throws invalid_input on a
// non-reduced word.
std::pair<Tableau, Tableau> eg_insert(const Word& word);

// Partition of reduced_words(p) by insertion tableau (one key per
// Coxeter-Knuth class).
std::map<Tableau, std::vector<Word>> ck_classes(const Perm& p);

// Des(i) = {j : i_j > i_{j+1}}, positions 1-based.
std::set<int> word_descents(const Word& w);

} // namespace schubert
