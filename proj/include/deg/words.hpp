#pragma once

#include <string>
#include <vector>

#include "deg/shapes.hpp"

namespace deg {

using TauWord = std::vector<int>;

struct RSK {
    Tableau P;
    Tableau Q;
};

bool is_permutation(const Word& w);
// digits when n <= 9, comma separated otherwise
Word parse_word(const std::string& s);
std::vector<Word> all_permutations(int n);

RSK rsk(const Word& w);
Tableau insertion_tableau(const Word& w);
Partition rsk_shape(const Word& w);
Word inverse(const Word& w);

// 1 < j < n, positional
Word knuth_move(const Word& w, int j);
// 1 < i < n, acts on the values i-1, i, i+1
Word dual_move(const Word& w, int i);
Word twisted_move(const Word& w, int i);
bool is_valid_tau(const TauWord& tau);
Word d_tau_move(const Word& w, int i, const TauWord& tau);

}  // namespace deg
