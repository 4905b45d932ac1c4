#include "deg/qsym.hpp"

#include <memory>
#include <mutex>
#include <sstream>

namespace deg {

QTPoly QTPoly::monomial(int q, int t, BigInt c) {
    QTPoly p;
    p.add(q, t, c);
    return p;
}

void QTPoly::add(int q, int t, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({q, t}, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    for (auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    for (auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

QTPoly QTPoly::operator*(const QTPoly& o) const {
    QTPoly r;
    for (auto& [a, x] : terms_)
        for (auto& [b, y] : o.terms_) r.add(a.first + b.first, a.second + b.second, x * y);
    return r;
}

bool QTPoly::nonnegative() const {
    for (auto& [k, c] : terms_)
        if (c < 0) return false;
    return true;
}

BigInt QTPoly::coeff(int q, int t) const {
    auto it = terms_.find({q, t});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt QTPoly::q_coeff(int e) const {
    BigInt s = 0;
    for (auto& [k, c] : terms_)
        if (k.first == e) s += c;
    return s;
}

BigInt QTPoly::at_one() const {
    BigInt s = 0;
    for (auto& [k, c] : terms_) s += c;
    return s;
}

QTPoly QTPoly::swap_qt() const {
    QTPoly r;
    for (auto& [k, c] : terms_) r.add(k.second, k.first, c);
    return r;
}

std::string QTPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool bare = k.first == 0 && k.second == 0;
        if (a != 1 || bare) os << a;
        if (k.first) os << "q" << (k.first != 1 ? "^" + std::to_string(k.first) : "");
        if (k.second) os << "t" << (k.second != 1 ? "^" + std::to_string(k.second) : "");
    }
    return os.str();
}

void FExpansion::add(const std::string& sig, const QTPoly& c) {
    if (static_cast<int>(sig.size()) != n - 1) throw std::invalid_argument("signature length does not match degree");
    auto& slot = terms[sig];
    slot += c;
    if (slot.is_zero()) terms.erase(sig);
}

FExpansion FExpansion::swap_qt() const {
    FExpansion r{n, {}};
    for (auto& [s, c] : terms) r.terms[s] = c.swap_qt();
    return r;
}

void SchurExpansion::add(const Partition& lambda, const QTPoly& c) {
    auto& slot = terms[lambda];
    slot += c;
    if (slot.is_zero()) terms.erase(lambda);
}

QTPoly SchurExpansion::coeff(const Partition& lambda) const {
    auto it = terms.find(lambda);
    return it == terms.end() ? QTPoly{} : it->second;
}

FExpansion schur_to_f(const SkewShape& shape) {
    FExpansion f{shape.size(), {}};
    for (auto& t : enumerate_syt(shape)) f.add(signature(content_reading_word(t)), QTPoly::monomial(0, 0));
    return f;
}

namespace {

const FExpansion& cached_schur(const Partition& lambda) {
    static std::mutex mu;
    static std::map<Partition, std::unique_ptr<FExpansion>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[lambda];
    if (!slot) slot = std::make_unique<FExpansion>(schur_to_f(SkewShape(lambda)));
    return *slot;
}

}  // namespace

FExpansion expand(const SchurExpansion& s) {
    FExpansion f{s.n, {}};
    for (auto& [lam, c] : s.terms)
        for (auto& [sig, one] : cached_schur(lam).terms) f.add(sig, c * one);
    return f;
}

FCompare f_equal(const FExpansion& a, const FExpansion& b) {
    if (a.n != b.n) throw std::invalid_argument("f_equal: degrees " + std::to_string(a.n) + " and " + std::to_string(b.n) + " differ");
    auto ia = a.terms.begin(), ib = b.terms.begin();
    while (ia != a.terms.end() || ib != b.terms.end()) {
        if (ib == b.terms.end() || (ia != a.terms.end() && ia->first < ib->first)) return {false, ia->first};
        if (ia == a.terms.end() || ib->first < ia->first) return {false, ib->first};
        if (!(ia->second == ib->second)) return {false, ia->first};
        ++ia;
        ++ib;
    }
    return {};
}

// F_{sigma(U_lambda)} occurs in s_mu only for mu dominating lambda, so peeling in
// decreasing lexicographic order solves a unitriangular system exactly.
SchurExpansion extract_schur(const FExpansion& f) {
    SchurExpansion out{f.n, {}};
    FExpansion residual = f;
    if (f.n == 0) {
        if (!f.terms.empty()) out.add({}, f.terms.begin()->second);
        return out;
    }
    for (auto& lam : partitions_of(f.n)) {
        std::string key = signature(content_reading_word(superstandard(lam)));
        auto it = residual.terms.find(key);
        if (it == residual.terms.end()) continue;
        QTPoly c = it->second;
        if (!c.nonnegative()) throw NotSchurPositive("negative coefficient at s" + partition_string(lam), residual);
        for (auto& [sig, one] : cached_schur(lam).terms) residual.add(sig, QTPoly{} - c * one);
        out.add(lam, c);
    }
    if (!residual.terms.empty()) throw NotSchurPositive("nonzero residual after Schur peel", residual);
    return out;
}

std::string to_string(const FExpansion& f) {
    if (f.terms.empty()) return "0";
    std::string s;
    for (auto& [sig, c] : f.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")F[" + sig + "]";
    }
    return s;
}

std::string to_string(const SchurExpansion& e) {
    if (e.terms.empty()) return "0";
    std::string s;
    for (auto& [lam, c] : e.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")s" + partition_string(lam);
    }
    return s;
}

}  // namespace deg
