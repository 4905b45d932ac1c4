#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "deg/shapes.hpp"

namespace deg {

using BigInt = boost::multiprecision::cpp_int;

// polynomial in q and t with exact integer coefficients; zero terms are never stored
class QTPoly {
public:
    using Key = std::pair<int, int>;  // (q exponent, t exponent)

    QTPoly() = default;
    static QTPoly monomial(int q, int t, BigInt c = 1);

    void add(int q, int t, const BigInt& c);
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly operator*(const QTPoly& o) const;
    QTPoly operator+(const QTPoly& o) const { return QTPoly(*this) += o; }
    QTPoly operator-(const QTPoly& o) const { return QTPoly(*this) -= o; }
    bool operator==(const QTPoly& o) const = default;

    bool is_zero() const { return terms_.empty(); }
    bool nonnegative() const;
    BigInt coeff(int q, int t) const;
    // sum of the coefficients of q^e, any power of t
    BigInt q_coeff(int e) const;
    BigInt at_one() const;
    QTPoly swap_qt() const;
    const std::map<Key, BigInt>& terms() const { return terms_; }
    std::string str() const;

private:
    std::map<Key, BigInt> terms_;
};

struct FExpansion {
    int n = 0;
    std::map<std::string, QTPoly> terms;  // signature -> coefficient

    void add(const std::string& sig, const QTPoly& c);
    bool operator==(const FExpansion&) const = default;
    FExpansion swap_qt() const;
};

struct SchurExpansion {
    int n = 0;
    std::map<Partition, QTPoly> terms;

    void add(const Partition& lambda, const QTPoly& c);
    bool operator==(const SchurExpansion&) const = default;
    QTPoly coeff(const Partition& lambda) const;
};

// sum over standard fillings of F at the filling's signature
FExpansion schur_to_f(const SkewShape& shape);
FExpansion expand(const SchurExpansion& s);

struct FCompare {
    bool equal = true;
    std::string witness;  // first signature where the coefficients differ
};
// throws std::invalid_argument on a degree mismatch
FCompare f_equal(const FExpansion& a, const FExpansion& b);

class NotSchurPositive : public std::runtime_error {
public:
    NotSchurPositive(const std::string& what, FExpansion residual)
        : std::runtime_error(what), residual(std::move(residual)) {}
    FExpansion residual;
};
// throws NotSchurPositive when no nonnegative integral Schur expansion exists
SchurExpansion extract_schur(const FExpansion& f);

std::string to_string(const FExpansion& f);
std::string to_string(const SchurExpansion& s);

}  // namespace deg
