#include "deg/shapes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "deg/words.hpp"

namespace deg {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

int partition_size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int i = 1; i <= p[0]; ++i) {
        int cnt = 0;
        for (int x : p)
            if (x >= i) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int mx) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, mx); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::string partition_string(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

static Partition strip_zeros(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

SkewShape::SkewShape(Partition o, Partition i) : outer(strip_zeros(std::move(o))), inner(strip_zeros(std::move(i))) {
    if (!is_partition(outer) || !is_partition(inner)) throw std::invalid_argument("shape parts must be weakly decreasing and positive");
    if (inner.size() > outer.size()) throw std::invalid_argument("inner shape not contained in outer shape");
    for (size_t r = 0; r < inner.size(); ++r)
        if (inner[r] > outer[r]) throw std::invalid_argument("inner shape not contained in outer shape");
}

int SkewShape::size() const { return partition_size(outer) - partition_size(inner); }

bool SkewShape::contains(Cell x) const {
    if (x.row < 0 || x.row >= rows()) return false;
    return x.col >= inner_at(x.row) && x.col < outer[x.row];
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int r = 0; r < rows(); ++r)
        for (int c = inner_at(r); c < outer[r]; ++c) out.push_back({r, c});
    return out;
}

SkewShape SkewShape::conjugate() const { return SkewShape(deg::conjugate(outer), deg::conjugate(inner)); }

SkewShape skew_from_cells(const std::vector<Cell>& cells) {
    if (cells.empty()) return SkewShape();
    std::set<Cell> S(cells.begin(), cells.end());
    int top = 0;
    for (auto x : S) {
        if (x.row < 0 || x.col < 0) throw std::invalid_argument("negative cell coordinate");
        top = std::max(top, x.row);
    }
    std::vector<int> lo(top + 1, -1), hi(top + 1, -1);
    for (auto x : S) {
        if (lo[x.row] < 0 || x.col < lo[x.row]) lo[x.row] = x.col;
        hi[x.row] = std::max(hi[x.row], x.col + 1);
    }
    // empty rows borrow the row above, so both boundaries stay monotone
    for (int r = top; r >= 0; --r) {
        if (lo[r] < 0) lo[r] = hi[r] = hi[r + 1];
    }
    Partition outer(hi.begin(), hi.end()), inner(lo.begin(), lo.end());
    for (int r = 0; r < top; ++r)
        if (outer[r] < outer[r + 1] || inner[r] < inner[r + 1]) throw std::invalid_argument("cells do not form a skew shape");
    SkewShape s(outer, inner);
    if (s.size() != static_cast<int>(S.size())) throw std::invalid_argument("cells do not form a skew shape");
    for (auto x : s.cells())
        if (!S.count(x)) throw std::invalid_argument("cells do not form a skew shape");
    return s;
}

static void box_partitions(int rows, int cols, Partition& cur, std::vector<Partition>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    int mx = cur.empty() ? cols : cur.back();
    for (int k = 1; k <= mx; ++k) {
        cur.push_back(k);
        box_partitions(rows, cols, cur, out);
        cur.pop_back();
    }
}

std::vector<SkewShape> skew_shapes_of_size(int n) {
    std::vector<SkewShape> out;
    if (n <= 0) return out;
    std::vector<Partition> box;
    Partition cur;
    box_partitions(n, n, cur, box);
    std::sort(box.begin(), box.end());
    std::map<int, std::vector<const Partition*>> by_size;
    for (auto& p : box) by_size[partition_size(p)].push_back(&p);
    for (auto& lam : box) {
        int L = partition_size(lam);
        if (L < n) continue;
        auto it = by_size.find(L - n);
        if (it == by_size.end()) continue;
        auto lamc = conjugate(lam);
        for (const Partition* rp : it->second) {
            const Partition& rho = *rp;
            if (rho.size() > lam.size()) continue;
            bool ok = true;
            for (size_t r = 0; r < lam.size() && ok; ++r) {
                int x = r < rho.size() ? rho[r] : 0;
                if (x >= lam[r]) ok = false;
            }
            if (!ok) continue;
            auto rhoc = conjugate(rho);
            for (size_t c = 0; c < lamc.size() && ok; ++c) {
                int x = c < rhoc.size() ? rhoc[c] : 0;
                if (x >= lamc[c]) ok = false;
            }
            if (ok) out.emplace_back(lam, rho);
        }
    }
    std::sort(out.begin(), out.end(), [](const SkewShape& a, const SkewShape& b) {
        return std::tie(a.outer, a.inner) < std::tie(b.outer, b.inner);
    });
    return out;
}

bool contains_subdiagram(const SkewShape& s, const Partition& p) {
    if (p.empty()) return true;
    auto cells = s.cells();
    for (auto base : cells) {
        bool ok = true;
        for (int r = 0; r < static_cast<int>(p.size()) && ok; ++r)
            for (int c = 0; c < p[r] && ok; ++c)
                if (!s.contains({base.row + r, base.col + c})) ok = false;
        if (ok) return true;
    }
    return false;
}

bool is_standard(const Tableau& t) {
    int n = t.size();
    if (static_cast<int>(t.rows.size()) != t.shape.rows()) return false;
    std::vector<bool> seen(n + 1, false);
    for (int r = 0; r < t.shape.rows(); ++r) {
        if (static_cast<int>(t.rows[r].size()) != t.shape.row_length(r)) return false;
        for (int v : t.rows[r]) {
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = true;
        }
    }
    for (auto x : t.shape.cells()) {
        Cell right{x.row, x.col + 1}, up{x.row + 1, x.col};
        if (t.shape.contains(right) && t.at(right) < t.at(x)) return false;
        if (t.shape.contains(up) && t.at(up) < t.at(x)) return false;
    }
    return true;
}

std::vector<Tableau> enumerate_syt(const SkewShape& shape) {
    int n = shape.size();
    Tableau t{shape, {}};
    for (int r = 0; r < shape.rows(); ++r) t.rows.emplace_back(shape.row_length(r), 0);
    auto cells = shape.cells();
    std::vector<Tableau> out;
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            out.push_back(t);
            return;
        }
        for (auto x : cells) {
            if (t.at(x)) continue;
            Cell left{x.row, x.col - 1}, down{x.row - 1, x.col};
            if (shape.contains(left) && !t.at(left)) continue;
            if (shape.contains(down) && !t.at(down)) continue;
            t.at(x) = v;
            rec(v + 1);
            t.at(x) = 0;
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return row_reading_word(a) < row_reading_word(b);
    });
    return out;
}

Tableau fill_by_row_word(const SkewShape& shape, const Word& w) {
    if (static_cast<int>(w.size()) != shape.size()) throw std::invalid_argument("word length differs from shape size");
    Tableau t{shape, {}};
    t.rows.resize(shape.rows());
    size_t k = 0;
    for (int r = shape.rows() - 1; r >= 0; --r)
        for (int c = 0; c < shape.row_length(r); ++c) t.rows[r].push_back(w[k++]);
    return t;
}

Word row_reading_word(const Tableau& t) {
    Word w;
    for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r)
        for (int v : t.rows[r]) w.push_back(v);
    return w;
}

Word content_reading_word(const Tableau& t) {
    auto cells = t.shape.cells();
    std::stable_sort(cells.begin(), cells.end(), [](Cell a, Cell b) {
        if (a.content() != b.content()) return a.content() < b.content();
        return a.row < b.row;
    });
    Word w;
    for (auto x : cells) w.push_back(t.at(x));
    return w;
}

std::string signature(const Word& w) {
    int n = static_cast<int>(w.size());
    std::vector<int> pos(n + 2, 0);
    for (int i = 0; i < n; ++i) pos[w[i]] = i;
    std::string s;
    for (int i = 1; i < n; ++i) s += pos[i] < pos[i + 1] ? '+' : '-';
    return s;
}

Tableau superstandard(const Partition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    Tableau t{SkewShape(lambda), {}};
    int v = 1;
    for (int part : lambda) {
        t.rows.emplace_back();
        for (int c = 0; c < part; ++c) t.rows.back().push_back(v++);
    }
    return t;
}

Partition tableau_shape(const Tableau& t) {
    if (!t.shape.inner.empty()) throw std::invalid_argument("tableau_shape expects a straight shape");
    return t.shape.outer;
}

Tableau jdt_rectify(const Tableau& t) {
    std::map<Cell, int> filled;
    for (auto x : t.shape.cells()) filled[x] = t.at(x);
    Partition inner = t.shape.inner;
    while (!inner.empty()) {
        // inner corner with the largest content
        int best = -1;
        for (int r = 0; r < static_cast<int>(inner.size()); ++r) {
            int next = r + 1 < static_cast<int>(inner.size()) ? inner[r + 1] : 0;
            if (inner[r] > next) {
                if (best < 0 || (inner[r] - 1 - r) > (inner[best] - 1 - best)) best = r;
            }
        }
        Cell hole{best, inner[best] - 1};
        inner[best] -= 1;
        while (!inner.empty() && inner.back() == 0) inner.pop_back();
        for (;;) {
            Cell right{hole.row, hole.col + 1}, up{hole.row + 1, hole.col};
            auto ri = filled.find(right), ui = filled.find(up);
            if (ri == filled.end() && ui == filled.end()) break;
            Cell from;
            if (ri == filled.end()) from = up;
            else if (ui == filled.end()) from = right;
            else from = ri->second < ui->second ? right : up;
            filled[hole] = filled[from];
            filled.erase(from);
            hole = from;
        }
    }
    int top = -1;
    for (auto& [x, v] : filled) top = std::max(top, x.row);
    Partition outer(top + 1, 0);
    for (auto& [x, v] : filled) outer[x.row] = std::max(outer[x.row], x.col + 1);
    Tableau out{SkewShape(outer), {}};
    out.rows.resize(outer.size());
    for (auto& [x, v] : filled) out.rows[x.row].push_back(v);
    return out;
}

bool is_yamanouchi(const std::vector<int>& w) {
    std::vector<int> cnt(2, 0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int x = *it;
        if (x < 1) return false;
        if (x + 1 >= static_cast<int>(cnt.size())) cnt.resize(x + 2, 0);
        ++cnt[x];
        if (x > 1 && cnt[x] > cnt[x - 1]) return false;
    }
    return true;
}

Word standardize_yam(const std::vector<int>& w) {
    if (!is_yamanouchi(w)) throw std::invalid_argument("word is not Yamanouchi");
    int mx = 0;
    for (int x : w) mx = std::max(mx, x);
    std::vector<int> start(mx + 2, 1);
    std::vector<int> cnt(mx + 1, 0);
    for (int x : w) ++cnt[x];
    for (int i = 2; i <= mx; ++i) start[i] = start[i - 1] + cnt[i - 1];
    Word out;
    for (int x : w) out.push_back(start[x]++);
    return out;
}

bool syam_member(const Word& w, const Partition& lambda) {
    if (static_cast<int>(w.size()) != partition_size(lambda)) return false;
    return insertion_tableau(w) == superstandard(lambda);
}

std::string word_string(const Word& w) {
    std::string s;
    bool wide = w.size() > 9;
    for (size_t i = 0; i < w.size(); ++i) {
        if (wide && i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

std::string tableau_string(const Tableau& t) {
    bool wide = t.size() > 9;
    std::string s;
    for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r) {
        if (r != static_cast<int>(t.rows.size()) - 1) s += "/";
        for (int c = 0; c < t.shape.inner_at(r); ++c) s += wide ? "_," : "_";
        for (size_t k = 0; k < t.rows[r].size(); ++k) {
            if (wide && k) s += ",";
            s += std::to_string(t.rows[r][k]);
        }
    }
    return s;
}

}  // namespace deg
