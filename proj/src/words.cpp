#include "deg/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace deg {

bool is_permutation(const Word& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int x : w) {
        if (x < 1 || x > static_cast<int>(w.size()) || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

Word parse_word(const std::string& s) {
    Word w;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("empty letter in word");
            w.push_back(std::stoi(tok));
        }
    } else {
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("word letters must be digits");
            w.push_back(c - '0');
        }
    }
    if (!is_permutation(w)) throw std::invalid_argument("word is not a permutation of 1..n");
    return w;
}

std::vector<Word> all_permutations(int n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

static void insert_row(std::vector<std::vector<int>>& rows, int x, std::vector<std::vector<int>>* rec, int label) {
    size_t r = 0;
    for (;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            if (rec) rec->push_back({label});
            return;
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            if (rec) (*rec)[r].push_back(label);
            return;
        }
        std::swap(*it, x);
    }
}

static Tableau as_tableau(const std::vector<std::vector<int>>& rows) {
    Partition sh;
    for (auto& r : rows) sh.push_back(static_cast<int>(r.size()));
    return Tableau{SkewShape(sh), rows};
}

RSK rsk(const Word& w) {
    if (w.empty() || !is_permutation(w)) throw std::invalid_argument("rsk expects a nonempty permutation");
    std::vector<std::vector<int>> P, Q;
    for (size_t k = 0; k < w.size(); ++k) insert_row(P, w[k], &Q, static_cast<int>(k) + 1);
    return {as_tableau(P), as_tableau(Q)};
}

Tableau insertion_tableau(const Word& w) {
    std::vector<std::vector<int>> P;
    for (int x : w) insert_row(P, x, nullptr, 0);
    return as_tableau(P);
}

Partition rsk_shape(const Word& w) { return insertion_tableau(w).shape.outer; }

Word inverse(const Word& w) {
    if (!is_permutation(w)) throw std::invalid_argument("inverse expects a permutation");
    Word v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v[w[i] - 1] = static_cast<int>(i) + 1;
    return v;
}

static void check_index(const Word& w, int i, const char* what) {
    int n = static_cast<int>(w.size());
    if (i <= 1 || i >= n)
        throw std::out_of_range(std::string(what) + " index " + std::to_string(i) + " outside 1 < i < " + std::to_string(n));
}

Word knuth_move(const Word& w, int j) {
    check_index(w, j, "knuth move");
    Word v = w;
    int a = v[j - 2], b = v[j - 1], c = v[j];
    int lo = std::min({a, b, c}), hi = std::max({a, b, c});
    int mid = a + b + c - lo - hi;
    if (a == mid) std::swap(v[j - 1], v[j]);
    else if (c == mid) std::swap(v[j - 2], v[j - 1]);
    return v;
}

namespace {
struct Triple {
    int pos[3];  // positions in increasing order
    int val[3];  // values at those positions
};

Triple locate(const Word& w, int i) {
    int n = static_cast<int>(w.size());
    std::vector<int> where(3, -1);
    for (int p = 0; p < n; ++p)
        if (w[p] >= i - 1 && w[p] <= i + 1) where[w[p] - (i - 1)] = p;
    Triple t{};
    int order[3] = {0, 1, 2};
    std::sort(order, order + 3, [&](int x, int y) { return where[x] < where[y]; });
    for (int k = 0; k < 3; ++k) {
        t.pos[k] = where[order[k]];
        t.val[k] = order[k] + (i - 1);
    }
    return t;
}
}  // namespace

Word dual_move(const Word& w, int i) {
    check_index(w, i, "dual move");
    Triple t = locate(w, i);
    if (t.val[1] == i) return w;
    Word v = w;
    int other = t.val[0] == i ? t.val[2] : t.val[0];
    int pi = t.val[0] == i ? t.pos[0] : t.pos[2];
    int po = t.val[0] == i ? t.pos[2] : t.pos[0];
    v[pi] = other;
    v[po] = i;
    return v;
}

Word twisted_move(const Word& w, int i) {
    check_index(w, i, "twisted move");
    Triple t = locate(w, i);
    if (t.val[1] == i) return w;
    Word v = w;
    int nv[3];
    if (t.val[0] == i) {
        nv[0] = t.val[1];
        nv[1] = t.val[2];
        nv[2] = i;
    } else {
        nv[0] = i;
        nv[1] = t.val[0];
        nv[2] = t.val[1];
    }
    for (int k = 0; k < 3; ++k) v[t.pos[k]] = nv[k];
    return v;
}

bool is_valid_tau(const TauWord& tau) {
    int n = static_cast<int>(tau.size());
    if (n == 0 || tau[n - 1] != n) return false;
    for (int i = 1; i <= n; ++i) {
        if (tau[i - 1] < i || tau[i - 1] > n) return false;
        if (i < n && tau[i - 1] > tau[i]) return false;
    }
    return true;
}

Word d_tau_move(const Word& w, int i, const TauWord& tau) {
    if (tau.size() != w.size() || !is_valid_tau(tau)) throw std::invalid_argument("malformed tau word");
    check_index(w, i, "tau move");
    Triple t = locate(w, i);
    int m = t.pos[0] + 1, M = t.pos[2] + 1;
    return tau[m - 1] < M ? dual_move(w, i) : twisted_move(w, i);
}

}  // namespace deg
