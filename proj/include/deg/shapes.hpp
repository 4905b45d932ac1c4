#pragma once

#include <compare>
#include <string>
#include <vector>

namespace deg {

using Partition = std::vector<int>;
using Word = std::vector<int>;

// row counted from the bottom, col from the left, both 0-based
struct Cell {
    int row = 0;
    int col = 0;
    int content() const { return col - row; }
    auto operator<=>(const Cell&) const = default;
};

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
// all partitions of n in decreasing lexicographic order
std::vector<Partition> partitions_of(int n);
std::string partition_string(const Partition& p);

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition o, Partition i = {});

    int size() const;
    int rows() const { return static_cast<int>(outer.size()); }
    int inner_at(int r) const { return r < static_cast<int>(inner.size()) ? inner[r] : 0; }
    int row_length(int r) const { return outer[r] - inner_at(r); }
    bool contains(Cell x) const;
    // sorted by row, then col
    std::vector<Cell> cells() const;
    SkewShape conjugate() const;
    bool operator==(const SkewShape&) const = default;
};

// builds the skew shape spanned by a convex cell set (coordinates must be >= 0)
SkewShape skew_from_cells(const std::vector<Cell>& cells);
// every skew diagram of size n up to translation: no empty rows or columns
std::vector<SkewShape> skew_shapes_of_size(int n);
// true if a translate of p fits inside the diagram
bool contains_subdiagram(const SkewShape& s, const Partition& p);

struct Tableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;  // bottom to top, entries left to right

    int size() const { return shape.size(); }
    int at(Cell x) const { return rows[x.row][x.col - shape.inner_at(x.row)]; }
    int& at(Cell x) { return rows[x.row][x.col - shape.inner_at(x.row)]; }
    bool operator==(const Tableau&) const = default;
};

bool is_standard(const Tableau& t);
std::vector<Tableau> enumerate_syt(const SkewShape& shape);
// fills the shape so that its row reading word is w
Tableau fill_by_row_word(const SkewShape& shape, const Word& w);
Word row_reading_word(const Tableau& t);
Word content_reading_word(const Tableau& t);
std::string signature(const Word& w);
Tableau superstandard(const Partition& lambda);
Tableau jdt_rectify(const Tableau& t);
Partition tableau_shape(const Tableau& t);

bool is_yamanouchi(const std::vector<int>& w);
Word standardize_yam(const std::vector<int>& w);
bool syam_member(const Word& w, const Partition& lambda);

// "34/125": rows top to bottom
std::string tableau_string(const Tableau& t);
std::string word_string(const Word& w);

}  // namespace deg
