#include "deg/llt.hpp"

#include <algorithm>
#include <functional>

namespace deg {

int SkewTuple::size() const {
    int s = 0;
    for (auto& sh : shapes) s += sh.size();
    return s;
}

std::vector<TupleCell> SkewTuple::reading_cells() const {
    std::vector<TupleCell> out;
    for (int i = 0; i < k(); ++i)
        for (auto c : shapes[i].cells()) out.push_back({i, c});
    std::stable_sort(out.begin(), out.end(), [&](const TupleCell& a, const TupleCell& b) {
        int sa = shifted_content(a), sb = shifted_content(b);
        return sa != sb ? sa < sb : a.cell.row < b.cell.row;
    });
    return out;
}

std::vector<int> SkewTuple::shifted_contents() const {
    std::vector<int> out;
    for (auto& x : reading_cells()) out.push_back(shifted_content(x));
    return out;
}

SkewTuple straight_tuple(const std::vector<Partition>& parts) {
    SkewTuple t;
    for (auto& p : parts) t.shapes.emplace_back(p);
    return t;
}

std::string tuple_string(const SkewTuple& nu) {
    std::string s = "(";
    for (int i = 0; i < nu.k(); ++i) {
        if (i) s += ",";
        s += partition_string(nu.shapes[i].outer);
        if (!nu.shapes[i].inner.empty()) s += "/" + partition_string(nu.shapes[i].inner);
    }
    return s + ")";
}

int TupleFilling::at(const TupleCell& x) const {
    auto cells = tuple.reading_cells();
    for (size_t j = 0; j < cells.size(); ++j)
        if (cells[j].comp == x.comp && cells[j].cell == x.cell) return values[j];
    throw std::out_of_range("cell not in tuple");
}

Tableau TupleFilling::component(int i) const {
    const SkewShape& sh = tuple.shapes.at(i);
    Tableau t{sh, {}};
    for (int r = 0; r < sh.rows(); ++r) t.rows.emplace_back(sh.row_length(r), 0);
    auto cells = tuple.reading_cells();
    for (size_t j = 0; j < cells.size(); ++j)
        if (cells[j].comp == i) t.at(cells[j].cell) = values[j];
    return t;
}

TupleFilling filling_from_tableaux(const std::vector<Tableau>& tabs) {
    TupleFilling f;
    for (auto& t : tabs) f.tuple.shapes.push_back(t.shape);
    for (auto& x : f.tuple.reading_cells()) f.values.push_back(tabs[x.comp].at(x.cell));
    if (!is_permutation(f.values)) throw std::invalid_argument("tuple filling is not bijective");
    return f;
}

Word shifted_content_word(const TupleFilling& t) { return t.values; }

int inv_of_word(const SkewTuple& nu, const Word& w) {
    auto sc = nu.shifted_contents();
    int k = nu.k(), n = static_cast<int>(w.size()), inv = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n && sc[y] - sc[x] < k; ++y)
            if (sc[y] > sc[x] && w[x] > w[y]) ++inv;
    return inv;
}

int inv_k(const TupleFilling& t) { return inv_of_word(t.tuple, t.values); }

TauWord tau_of_contents(const std::vector<int>& sc, int k) {
    int n = static_cast<int>(sc.size());
    TauWord tau(n);
    int j = 0;
    for (int i = 0; i < n; ++i) {
        j = std::max(j, i);
        while (j + 1 < n && sc[j + 1] - sc[i] <= k) ++j;
        tau[i] = j + 1;
    }
    return tau;
}

TauWord tau_of(const SkewTuple& nu) {
    if (nu.size() == 0) throw std::invalid_argument("tau of an empty tuple");
    return tau_of_contents(nu.shifted_contents(), nu.k());
}

int diam_of_contents(const std::vector<int>& sc, int k) {
    std::vector<int> d(sc);
    d.erase(std::unique(d.begin(), d.end()), d.end());
    int best = 0;
    for (size_t i = 0, j = 0; i < d.size(); ++i) {
        while (d[i] - d[j] > k) ++j;
        best = std::max(best, static_cast<int>(i - j + 1));
    }
    return best;
}

int diam(const SkewTuple& nu) {
    if (nu.size() == 0) throw std::invalid_argument("diameter of an empty tuple");
    return diam_of_contents(nu.shifted_contents(), nu.k());
}

std::vector<TauWord> all_tau_words(int n) {
    std::vector<TauWord> out;
    TauWord cur;
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            out.push_back(cur);
            return;
        }
        int lo = i == n ? n : std::max(i, cur.empty() ? 1 : cur.back());
        for (int v = lo; v <= n; ++v) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    if (n >= 1) rec(1);
    return out;
}

std::vector<Word> shifted_content_words(const SkewTuple& nu) {
    auto cells = nu.reading_cells();
    int n = static_cast<int>(cells.size());
    // index of the left and lower neighbors within the same component
    std::vector<int> left(n, -1), below(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (cells[a].comp != cells[b].comp) continue;
            Cell x = cells[a].cell, y = cells[b].cell;
            if (y.row == x.row && y.col == x.col - 1) left[a] = b;
            if (y.col == x.col && y.row == x.row - 1) below[a] = b;
        }
    std::vector<Word> out;
    Word w(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            out.push_back(w);
            return;
        }
        for (int a = 0; a < n; ++a) {
            if (w[a] || (left[a] >= 0 && !w[left[a]]) || (below[a] >= 0 && !w[below[a]])) continue;
            w[a] = v;
            rec(v + 1);
            w[a] = 0;
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TupleFilling> enumerate_tuple_fillings(const SkewTuple& nu) {
    std::vector<TupleFilling> out;
    for (auto& w : shifted_content_words(nu)) out.push_back({nu, w});
    return out;
}

Graph build_llt_graph(const SkewTuple& nu) {
    if (nu.size() == 0) throw std::invalid_argument("empty tuple");
    TauWord tau = tau_of(nu);
    return graph_from_words(shifted_content_words(nu), [&](const Word& w, int i) { return d_tau_move(w, i, tau); });
}

FExpansion llt_f_expansion(const SkewTuple& nu) {
    FExpansion f{nu.size(), {}};
    for (auto& w : shifted_content_words(nu)) f.add(signature(w), QTPoly::monomial(inv_of_word(nu, w), 0));
    return f;
}

SchurExpansion yamanouchi_sum(const SkewTuple& nu) {
    SchurExpansion s{nu.size(), {}};
    for (auto& w : shifted_content_words(nu)) {
        Partition lam = rsk_shape(w);
        if (syam_member(w, lam)) s.add(lam, QTPoly::monomial(inv_of_word(nu, w), 0));
    }
    return s;
}

SchurExpansion llt_schur_expansion(const SkewTuple& nu) {
    int d = diam(nu);
    if (d > 3) throw DiameterTooLarge(d);
    SchurExpansion s = yamanouchi_sum(nu);
    auto cmp = f_equal(expand(s), llt_f_expansion(nu));
    if (!cmp.equal) throw std::logic_error("Yamanouchi expansion of " + tuple_string(nu) + " disagrees at F[" + cmp.witness + "]");
    return s;
}

}  // namespace deg
