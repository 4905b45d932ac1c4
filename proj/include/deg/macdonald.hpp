#pragma once

#include <stdexcept>
#include <vector>

#include "deg/llt.hpp"
#include "deg/qsym.hpp"

namespace deg {

// A member of TR(shape): column i of the shape becomes ribbon i. rises[i][j] says
// whether the entry in row j+1 of the column is larger than the one in row j.
struct RibbonTuple {
    SkewTuple tuple;
    std::vector<std::vector<bool>> rises;
};

RibbonTuple ribbon_tuple(const SkewShape& shape, const std::vector<std::vector<bool>>& rises);
std::vector<RibbonTuple> tr_tuples(const SkewShape& shape);

// a bijective (not necessarily standard) filling of the shape, stored as a Tableau
TupleFilling tr_from_filling(const Tableau& f);
Tableau filling_from_tr(const SkewShape& shape, const TupleFilling& t);
std::vector<Tableau> bijective_fillings(const SkewShape& shape);

int arm(const SkewTuple& nu, const TupleCell& x);
int leg(const SkewTuple& nu, const TupleCell& x);
std::vector<TupleCell> descents(const SkewTuple& nu);
int a_stat(const SkewTuple& nu);
int maj_stat(const SkewTuple& nu);
// inv_k - a, checked to be nonnegative
int mac_inv(const TupleFilling& t);

// diameter shared by every member of TR(shape)
int tr_diam(const SkewShape& shape);

// direct sum over bijective fillings
FExpansion macdonald_f_expansion(const SkewShape& shape);
// the same function assembled from LLT polynomials of the TR members
FExpansion macdonald_f_expansion_llt(const SkewShape& shape);

class ShapeNotCovered : public std::runtime_error {
public:
    ShapeNotCovered(const std::string& what, Partition sub) : std::runtime_error(what), subdiagram(std::move(sub)) {}
    Partition subdiagram;
};

enum class MacMode { direct, conjugate };
// sum of q^inv t^maj over fillings whose word is a standardized Yamanouchi word
SchurExpansion mac_yamanouchi_sum(const SkewShape& shape);
// throws ShapeNotCovered when the shape has a forbidden subdiagram for the mode
SchurExpansion macdonald_schur_expansion(const SkewShape& shape, MacMode mode = MacMode::direct);

}  // namespace deg
