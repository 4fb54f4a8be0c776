#ifndef CYLQ_RINGS_HPP
#define CYLQ_RINGS_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cylq/errors.hpp"

namespace cylq {

using BigInt = boost::multiprecision::cpp_int;

/* An element a + b*sqrt(2) of Z[sqrt(2)].
 * Multiplication: (a1,b1)(a2,b2) = (a1 a2 + 2 b1 b2, a1 b2 + a2 b1).
 * Division by sqrt(2) is partial: (a,b)/sqrt(2) = (b, a/2), defined only
 * for even a.
 */
struct QuadElem {
    BigInt a = 0;
    BigInt b = 0;

    QuadElem() = default;
    QuadElem(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit QuadElem(long long n) : a(n) {}

    static QuadElem sqrt2() { return QuadElem(BigInt(0), BigInt(1)); }

    QuadElem conjugate() const { return QuadElem(a, -b); }
    BigInt norm() const { return a * a - 2 * b * b; }

    QuadElem div_sqrt2() const {
        if (a % 2 != 0)
            throw InexactDivision("(" + a.str() + " + " + b.str() + "*sqrt2) / sqrt2");
        return QuadElem(b, a / 2);
    }

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        return QuadElem(x.a + y.a, x.b + y.b);
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        return QuadElem(x.a - y.a, x.b - y.b);
    }
    friend QuadElem operator-(const QuadElem& x) { return QuadElem(-x.a, -x.b); }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        return QuadElem(x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a);
    }
    QuadElem& operator+=(const QuadElem& y) { a += y.a; b += y.b; return *this; }
    QuadElem& operator-=(const QuadElem& y) { a -= y.a; b -= y.b; return *this; }

    friend bool operator==(const QuadElem&, const QuadElem&) = default;

    std::string to_string() const { return a.str() + (b >= 0 ? "+" : "") + b.str() + "*sqrt2"; }
};

/* A univariate integer polynomial in a tracking variable (z or t, the name
 * is applied at serialization time).  Coefficients ascending by degree,
 * no trailing zeros; the zero polynomial is the empty vector.
 */
class TrackedPoly {
public:
    TrackedPoly() = default;
    explicit TrackedPoly(long long c) { if (c != 0) coeffs_.push_back(BigInt(c)); }
    explicit TrackedPoly(BigInt c) { if (c != 0) coeffs_.push_back(std::move(c)); }
    explicit TrackedPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
        normalize();
    }

    static TrackedPoly monomial(int degree, BigInt c = BigInt(1)) {
        TrackedPoly p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }
    static TrackedPoly variable() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }

    BigInt coeff(int d) const {
        return (d >= 0 && d < static_cast<int>(coeffs_.size()))
                   ? coeffs_[static_cast<std::size_t>(d)]
                   : BigInt(0);
    }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt evaluate_at_one() const {
        BigInt s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    friend TrackedPoly operator+(const TrackedPoly& x, const TrackedPoly& y) {
        std::vector<BigInt> r(std::max(x.coeffs_.size(), y.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) r[i] += x.coeffs_[i];
        for (std::size_t i = 0; i < y.coeffs_.size(); ++i) r[i] += y.coeffs_[i];
        return TrackedPoly(std::move(r));
    }
    friend TrackedPoly operator-(const TrackedPoly& x, const TrackedPoly& y) {
        std::vector<BigInt> r(std::max(x.coeffs_.size(), y.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) r[i] += x.coeffs_[i];
        for (std::size_t i = 0; i < y.coeffs_.size(); ++i) r[i] -= y.coeffs_[i];
        return TrackedPoly(std::move(r));
    }
    friend TrackedPoly operator-(const TrackedPoly& x) {
        std::vector<BigInt> r(x.coeffs_);
        for (auto& c : r) c = -c;
        TrackedPoly p;
        p.coeffs_ = std::move(r);
        return p;
    }
    friend TrackedPoly operator*(const TrackedPoly& x, const TrackedPoly& y) {
        if (x.is_zero() || y.is_zero()) return TrackedPoly();
        std::vector<BigInt> r(x.coeffs_.size() + y.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
                r[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
        return TrackedPoly(std::move(r));
    }
    TrackedPoly& operator+=(const TrackedPoly& y) { return *this = *this + y; }
    TrackedPoly& operator-=(const TrackedPoly& y) { return *this = *this - y; }

    friend bool operator==(const TrackedPoly&, const TrackedPoly&) = default;

    std::string to_string(const std::string& var = "v") const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!s.empty()) s += coeffs_[i] > 0 ? "+" : "";
            s += coeffs_[i].str();
            if (i >= 1) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s.empty() ? "0" : s;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/* The ring contract the series engine is written against: add/mul/negate
 * via operators, plus the handful of queries below.  divide_exact throws
 * InexactDivision instead of rounding; the identities we verify guarantee
 * exactness, so a throw is a bug signal.
 */
template <class R>
struct RingOps;

template <>
struct RingOps<BigInt> {
    static BigInt zero() { return 0; }
    static BigInt one() { return 1; }
    static BigInt from_int(long long n) { return BigInt(n); }
    static bool is_zero(const BigInt& x) { return x == 0; }
    static bool is_unit(const BigInt& x) { return x == 1 || x == -1; }
    static BigInt unit_inverse(const BigInt& x) { return x; }  // +-1 are self-inverse
    static BigInt divide_exact(const BigInt& x, long long d) {
        if (d == 0 || x % d != 0)
            throw InexactDivision(x.str() + " / " + std::to_string(d));
        return x / d;
    }
    static std::string to_string(const BigInt& x) { return x.str(); }
};

template <>
struct RingOps<QuadElem> {
    static QuadElem zero() { return QuadElem(); }
    static QuadElem one() { return QuadElem(1); }
    static QuadElem from_int(long long n) { return QuadElem(n); }
    static bool is_zero(const QuadElem& x) { return x.a == 0 && x.b == 0; }
    static bool is_unit(const QuadElem& x) {
        const BigInt n = x.norm();
        return n == 1 || n == -1;
    }
    static QuadElem unit_inverse(const QuadElem& x) {
        // (a + b sqrt2)^-1 = (a - b sqrt2)/norm for norm = +-1
        return x.norm() == 1 ? x.conjugate() : -x.conjugate();
    }
    static QuadElem divide_exact(const QuadElem& x, long long d) {
        return QuadElem(RingOps<BigInt>::divide_exact(x.a, d),
                        RingOps<BigInt>::divide_exact(x.b, d));
    }
    static std::string to_string(const QuadElem& x) { return x.to_string(); }
};

template <>
struct RingOps<TrackedPoly> {
    static TrackedPoly zero() { return TrackedPoly(); }
    static TrackedPoly one() { return TrackedPoly(1); }
    static TrackedPoly from_int(long long n) { return TrackedPoly(n); }
    static bool is_zero(const TrackedPoly& x) { return x.is_zero(); }
    static bool is_unit(const TrackedPoly& x) {
        return x.degree() == 0 && (x.coeff(0) == 1 || x.coeff(0) == -1);
    }
    static TrackedPoly unit_inverse(const TrackedPoly& x) { return x; }
    static TrackedPoly divide_exact(const TrackedPoly& x, long long d) {
        std::vector<BigInt> r;
        r.reserve(x.coeffs().size());
        for (const auto& c : x.coeffs()) r.push_back(RingOps<BigInt>::divide_exact(c, d));
        return TrackedPoly(std::move(r));
    }
    static std::string to_string(const TrackedPoly& x) { return x.to_string(); }
};

} // namespace cylq

#endif
