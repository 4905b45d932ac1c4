#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "deg/graph.hpp"
#include "deg/qsym.hpp"
#include "deg/shapes.hpp"
#include "deg/words.hpp"

namespace deg {

struct TupleCell {
    int comp = 0;
    Cell cell;
};

struct SkewTuple {
    std::vector<SkewShape> shapes;

    int k() const { return static_cast<int>(shapes.size()); }
    int size() const;
    int shifted_content(const TupleCell& x) const { return k() * x.cell.content() + x.comp; }
    // cells in reading order: increasing shifted content, then upward along a diagonal
    std::vector<TupleCell> reading_cells() const;
    // sorted shifted contents, one entry per cell
    std::vector<int> shifted_contents() const;
    bool operator==(const SkewTuple&) const = default;
};

SkewTuple straight_tuple(const std::vector<Partition>& parts);
std::string tuple_string(const SkewTuple& nu);

// values[j] is the entry of reading_cells()[j], so values is the shifted content word
struct TupleFilling {
    SkewTuple tuple;
    Word values;

    int at(const TupleCell& x) const;
    Tableau component(int i) const;
};

TupleFilling filling_from_tableaux(const std::vector<Tableau>& tabs);
Word shifted_content_word(const TupleFilling& t);
int inv_k(const TupleFilling& t);
// inv_k read off a shifted content word of nu
int inv_of_word(const SkewTuple& nu, const Word& w);
TauWord tau_of(const SkewTuple& nu);
TauWord tau_of_contents(const std::vector<int>& sorted_contents, int k);
int diam(const SkewTuple& nu);
int diam_of_contents(const std::vector<int>& sorted_contents, int k);
// every tau word of length n, in lexicographic order
std::vector<TauWord> all_tau_words(int n);

// standard fillings in lexicographic order of their shifted content words
std::vector<TupleFilling> enumerate_tuple_fillings(const SkewTuple& nu);
std::vector<Word> shifted_content_words(const SkewTuple& nu);

Graph build_llt_graph(const SkewTuple& nu);

FExpansion llt_f_expansion(const SkewTuple& nu);

class DiameterTooLarge : public std::runtime_error {
public:
    explicit DiameterTooLarge(int d)
        : std::runtime_error("diameter " + std::to_string(d) + " exceeds 3"), diameter(d) {}
    int diameter;
};
// sum of q^inv over fillings whose word is a standardized Yamanouchi word, no diameter check
SchurExpansion yamanouchi_sum(const SkewTuple& nu);
// throws DiameterTooLarge for diam >= 4; verifies the result against llt_f_expansion
SchurExpansion llt_schur_expansion(const SkewTuple& nu);

}  // namespace deg
