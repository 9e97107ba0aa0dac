#pragma once

// Canonical elements of the field Q(q,t).
//
// Representation: value = coeff * q^sq * t^st * num/den, where num and den are
// coprime integer polynomials of unit content with nonnegative exponents,
// minimal exponent 0 in each variable and positive leading coefficient under
// descending lex (q before t). Sign and rational content live in coeff. Zero
// is coeff = 0 with num = den = 1. Canonical form makes equality structural.

#include "exactnum/qt_laurent.hpp"

#include <map>
#include <string>
#include <utility>

namespace qth {

enum class SubstRule {
    TOne,   // t -> 1
    QOne,   // q -> 1
    TQInv,  // t -> q^{-1}
    PowerK, // (q,t) -> (q^k, t^k)
};

class QtFraction {
public:
    QtFraction() : num_(1), den_(1) {}
    explicit QtFraction(const BigRational &c) : coeff_(c), num_(1), den_(1) {
        if (qth::is_zero(c)) coeff_ = 0;
    }
    explicit QtFraction(long c) : QtFraction(BigRational(c)) {}

    // Canonicalize an arbitrary Laurent numerator/denominator pair.
    static QtFraction make(const QtLaurent &num, const QtLaurent &den);
    static QtFraction from_laurent(const QtLaurent &p);
    static QtFraction monomial(const BigRational &c, int qe, int te);
    // Canonicalization that trusts the caller: num and den must already share
    // no factor. Skips the terminal gcd, which matters when the pair comes
    // out of the factored-denominator machinery pre-reduced.
    static QtFraction make_coprime(const BigRational &coeff, int sq, int st,
                                   const QtLaurent &num, const QtLaurent &den);

    bool is_zero() const { return qth::is_zero(coeff_); }
    bool is_one() const {
        return coeff_ == 1 && sq_ == 0 && st_ == 0 && num_ == QtLaurent(1) &&
               den_ == QtLaurent(1);
    }
    // Denominator 1 (value is a Laurent polynomial).
    bool is_laurent_polynomial() const { return den_ == QtLaurent(1); }
    // Denominator 1 and no negative exponents anywhere.
    bool is_polynomial() const {
        return is_laurent_polynomial() && (is_zero() || (sq_ >= 0 && st_ >= 0));
    }

    const BigRational &coeff() const { return coeff_; }
    int scale_q() const { return sq_; }
    int scale_t() const { return st_; }
    const QtLaurent &num() const { return num_; }
    const QtLaurent &den() const { return den_; }

    // Requires is_laurent_polynomial().
    QtLaurent to_laurent() const;

    QtFraction operator-() const;
    friend QtFraction operator+(const QtFraction &a, const QtFraction &b);
    friend QtFraction operator-(const QtFraction &a, const QtFraction &b);
    friend QtFraction operator*(const QtFraction &a, const QtFraction &b);
    friend QtFraction operator/(const QtFraction &a, const QtFraction &b);
    QtFraction &operator+=(const QtFraction &o) { return *this = *this + o; }
    QtFraction &operator-=(const QtFraction &o) { return *this = *this - o; }
    QtFraction &operator*=(const QtFraction &o) { return *this = *this * o; }
    QtFraction &operator/=(const QtFraction &o) { return *this = *this / o; }

    QtFraction inverse() const;
    QtFraction pow(int e) const;

    friend bool operator==(const QtFraction &a, const QtFraction &b) {
        return a.coeff_ == b.coeff_ && a.sq_ == b.sq_ && a.st_ == b.st_ &&
               a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QtFraction &a, const QtFraction &b) {
        return !(a == b);
    }

    // Exact specializations. Throws DenominatorVanishes when the reduced
    // denominator vanishes under the rule. k is only read for PowerK.
    QtFraction substitute(SubstRule rule, int k = 0) const;

    // Extra coefficient automorphisms used internally (plethysm twist,
    // conjugation checks). Both are exact field automorphisms, so no error
    // cases beyond zero denominators which cannot arise.
    QtFraction subst_t_inv() const; // t -> t^{-1}
    QtFraction swap_qt() const;     // q <-> t

    BigRational eval(const BigRational &q, const BigRational &t) const;

    std::string to_string() const;

private:
    static QtFraction make_scaled(const BigRational &coeff, int sq, int st,
                                  const QtLaurent &num, const QtLaurent &den);

    BigRational coeff_ = 0;
    int sq_ = 0;
    int st_ = 0;
    QtLaurent num_;
    QtLaurent den_;
};

// Power-series coefficients of f for total degree <= bound, keyed by
// (q-exponent, t-exponent). Requires den(0,0) != 0 and nonnegative scale
// (NotExpandable otherwise).
std::map<std::pair<int, int>, BigRational> series_truncate(const QtFraction &f,
                                                           int bound);

} // namespace qth
