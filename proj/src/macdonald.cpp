#include "deg/macdonald.hpp"

#include <algorithm>
#include <numeric>

namespace deg {

namespace {

// rows of column c, bottom to top
std::vector<int> column_rows(const SkewShape& shape, int c) {
    std::vector<int> rows;
    for (int r = 0; r < shape.rows(); ++r)
        if (shape.contains({r, c})) rows.push_back(r);
    return rows;
}

int columns(const SkewShape& shape) { return shape.outer.empty() ? 0 : shape.outer[0]; }

}  // namespace

RibbonTuple ribbon_tuple(const SkewShape& shape, const std::vector<std::vector<bool>>& rises) {
    RibbonTuple rt{{}, rises};
    int k = columns(shape);
    if (static_cast<int>(rises.size()) != k) throw std::invalid_argument("one rise list per column expected");
    for (int c = 0; c < k; ++c) {
        auto rows = column_rows(shape, c);
        int h = static_cast<int>(rows.size());
        if (h == 0) {
            rt.tuple.shapes.emplace_back();
            continue;
        }
        if (static_cast<int>(rises[c].size()) != h - 1) throw std::invalid_argument("rise list length does not match the column");
        // first cell sits at content -rows[0]; every later cell lowers the content by one
        Cell x{rows[0] + h, h};
        std::vector<Cell> cells{x};
        for (int j = 0; j + 1 < h; ++j) {
            if (rises[c][j]) ++x.row;
            else --x.col;
            cells.push_back(x);
        }
        int d = cells[0].row;
        for (auto y : cells) d = std::min({d, y.row, y.col});
        for (auto& y : cells) y = {y.row - d, y.col - d};
        rt.tuple.shapes.push_back(skew_from_cells(cells));
    }
    return rt;
}

std::vector<RibbonTuple> tr_tuples(const SkewShape& shape) {
    int k = columns(shape);
    std::vector<int> heights(k);
    int pairs = 0;
    for (int c = 0; c < k; ++c) {
        heights[c] = static_cast<int>(column_rows(shape, c).size());
        pairs += std::max(heights[c] - 1, 0);
    }
    std::vector<RibbonTuple> out;
    for (long mask = 0; mask < (1L << pairs); ++mask) {
        std::vector<std::vector<bool>> rises(k);
        int bit = 0;
        for (int c = 0; c < k; ++c)
            for (int j = 0; j + 1 < heights[c]; ++j) rises[c].push_back((mask >> bit++) & 1);
        out.push_back(ribbon_tuple(shape, rises));
    }
    return out;
}

TupleFilling tr_from_filling(const Tableau& f) {
    const SkewShape& shape = f.shape;
    int k = columns(shape);
    std::vector<std::vector<bool>> rises(k);
    for (int c = 0; c < k; ++c) {
        auto rows = column_rows(shape, c);
        for (size_t j = 0; j + 1 < rows.size(); ++j) rises[c].push_back(f.at({rows[j + 1], c}) > f.at({rows[j], c}));
    }
    TupleFilling t{ribbon_tuple(shape, rises).tuple, {}};
    for (auto& x : t.tuple.reading_cells()) t.values.push_back(f.at({-x.cell.content(), x.comp}));
    return t;
}

Tableau filling_from_tr(const SkewShape& shape, const TupleFilling& t) {
    Tableau f{shape, {}};
    for (int r = 0; r < shape.rows(); ++r) f.rows.emplace_back(shape.row_length(r), 0);
    auto cells = t.tuple.reading_cells();
    for (size_t j = 0; j < cells.size(); ++j) {
        Cell target{-cells[j].cell.content(), cells[j].comp};
        if (!shape.contains(target)) throw std::invalid_argument("tuple is not in TR of the shape");
        f.at(target) = t.values[j];
    }
    return f;
}

std::vector<Tableau> bijective_fillings(const SkewShape& shape) {
    auto cells = shape.cells();
    Word p(cells.size());
    std::iota(p.begin(), p.end(), 1);
    std::vector<Tableau> out;
    Tableau f{shape, {}};
    for (int r = 0; r < shape.rows(); ++r) f.rows.emplace_back(shape.row_length(r), 0);
    do {
        for (size_t j = 0; j < cells.size(); ++j) f.at(cells[j]) = p[j];
        out.push_back(f);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int arm(const SkewTuple& nu, const TupleCell& x) {
    if (!nu.shapes.at(x.comp).contains(x.cell)) throw std::out_of_range("cell not in tuple");
    int a = 0;
    for (int j = x.comp + 1; j < nu.k(); ++j) {
        for (auto y : nu.shapes[j].cells())
            if (y.content() == x.cell.content()) {
                ++a;
                break;
            }
    }
    return a;
}

int leg(const SkewTuple& nu, const TupleCell& x) {
    if (!nu.shapes.at(x.comp).contains(x.cell)) throw std::out_of_range("cell not in tuple");
    int l = 0;
    for (auto y : nu.shapes[x.comp].cells())
        if (y.content() < x.cell.content()) ++l;
    return l;
}

std::vector<TupleCell> descents(const SkewTuple& nu) {
    std::vector<TupleCell> out;
    for (auto& x : nu.reading_cells())
        if (nu.shapes[x.comp].contains({x.cell.row - 1, x.cell.col})) out.push_back(x);
    return out;
}

int a_stat(const SkewTuple& nu) {
    int a = 0;
    for (auto& x : descents(nu)) a += arm(nu, x);
    return a;
}

int maj_stat(const SkewTuple& nu) {
    int m = 0;
    for (auto& x : descents(nu)) m += 1 + leg(nu, x);
    return m;
}

int mac_inv(const TupleFilling& t) {
    int v = inv_k(t) - a_stat(t.tuple);
    if (v < 0) throw std::logic_error("negative inv statistic on " + tuple_string(t.tuple));
    return v;
}

int tr_diam(const SkewShape& shape) {
    int k = columns(shape);
    std::vector<int> sc;
    for (auto x : shape.cells()) sc.push_back(-k * x.row + x.col);
    std::sort(sc.begin(), sc.end());
    return diam_of_contents(sc, k);
}

FExpansion macdonald_f_expansion(const SkewShape& shape) {
    FExpansion f{shape.size(), {}};
    for (auto& fill : bijective_fillings(shape)) {
        TupleFilling t = tr_from_filling(fill);
        f.add(signature(t.values), QTPoly::monomial(mac_inv(t), maj_stat(t.tuple)));
    }
    return f;
}

FExpansion macdonald_f_expansion_llt(const SkewShape& shape) {
    FExpansion f{shape.size(), {}};
    for (auto& rt : tr_tuples(shape)) {
        QTPoly w = QTPoly::monomial(-a_stat(rt.tuple), maj_stat(rt.tuple));
        for (auto& [sig, c] : llt_f_expansion(rt.tuple).terms) f.add(sig, w * c);
    }
    return f;
}

SchurExpansion mac_yamanouchi_sum(const SkewShape& shape) {
    SchurExpansion s{shape.size(), {}};
    for (auto& fill : bijective_fillings(shape)) {
        TupleFilling t = tr_from_filling(fill);
        Partition lam = rsk_shape(t.values);
        if (syam_member(t.values, lam)) s.add(lam, QTPoly::monomial(mac_inv(t), maj_stat(t.tuple)));
    }
    return s;
}

SchurExpansion macdonald_schur_expansion(const SkewShape& shape, MacMode mode) {
    SkewShape work = mode == MacMode::direct ? shape : shape.conjugate();
    for (Partition bad : {Partition{3, 3}, Partition{4}}) {
        if (!contains_subdiagram(work, bad)) continue;
        Partition shown = mode == MacMode::direct ? bad : conjugate(bad);
        throw ShapeNotCovered("shape contains " + partition_string(shown) + " as a subdiagram", shown);
    }
    SchurExpansion s = mac_yamanouchi_sum(work);
    if (mode == MacMode::conjugate)
        for (auto& [lam, c] : s.terms) c = c.swap_qt();
    auto cmp = f_equal(expand(s), macdonald_f_expansion(shape));
    if (!cmp.equal) throw std::logic_error("Yamanouchi Macdonald expansion disagrees at F[" + cmp.witness + "]");
    return s;
}

}  // namespace deg
