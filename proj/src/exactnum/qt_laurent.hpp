#pragma once

// Bivariate Laurent polynomials over Q in the variables q and t, stored as a
// sparse exponent -> coefficient map. The map comparator is descending
// lexicographic with q before t, so iteration starts at the leading term and
// printing order equals canonical order.

#include "exactnum/rational.hpp"
#include "support/error.hpp"

#include <map>
#include <string>
#include <utility>

namespace qth {

struct QtExp {
    int qe = 0;
    int te = 0;
    friend bool operator==(const QtExp &, const QtExp &) = default;
};

struct QtExpDescLex {
    bool operator()(const QtExp &a, const QtExp &b) const {
        if (a.qe != b.qe) return a.qe > b.qe;
        return a.te > b.te;
    }
};

class QtLaurent {
public:
    using TermMap = std::map<QtExp, BigRational, QtExpDescLex>;

    QtLaurent() = default;
    explicit QtLaurent(const BigRational &c) { add_term(0, 0, c); }
    explicit QtLaurent(long c) { add_term(0, 0, BigRational(c)); }

    static QtLaurent monomial(const BigRational &c, int qe, int te) {
        QtLaurent p;
        p.add_term(qe, te, c);
        return p;
    }
    static QtLaurent one() { return QtLaurent(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == QtExp{0, 0});
    }
    bool is_polynomial() const { return min_q_exp() >= 0 && min_t_exp() >= 0; }
    // True when every coefficient is an integer.
    bool has_integer_coeffs() const;
    // True when every coefficient is a nonnegative integer.
    bool has_nonneg_integer_coeffs() const;

    std::size_t term_count() const { return terms_.size(); }
    const TermMap &terms() const { return terms_; }

    BigRational coeff(int qe, int te) const {
        auto it = terms_.find(QtExp{qe, te});
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    // Adds c*q^qe*t^te, erasing the term if it cancels to zero.
    void add_term(int qe, int te, const BigRational &c);

    // Exponent ranges; only meaningful on nonzero polynomials (they return 0
    // on zero, which suits every call site).
    int min_q_exp() const;
    int max_q_exp() const;
    int min_t_exp() const;
    int max_t_exp() const;
    int total_degree() const; // max over terms of qe+te

    // Leading term under descending lex (q before t).
    const std::pair<const QtExp, BigRational> &leading() const;

    QtLaurent operator-() const;
    QtLaurent &operator+=(const QtLaurent &o);
    QtLaurent &operator-=(const QtLaurent &o);
    friend QtLaurent operator+(QtLaurent a, const QtLaurent &b) { return a += b; }
    friend QtLaurent operator-(QtLaurent a, const QtLaurent &b) { return a -= b; }
    friend QtLaurent operator*(const QtLaurent &a, const QtLaurent &b);
    QtLaurent &operator*=(const QtLaurent &o) { return *this = *this * o; }

    void scale(const BigRational &c);           // multiply by a scalar
    void shift(int dq, int dt);                 // multiply by q^dq * t^dt
    QtLaurent scaled(const BigRational &c, int dq, int dt) const;

    friend bool operator==(const QtLaurent &a, const QtLaurent &b) {
        return a.terms_ == b.terms_;
    }

    // Positive gcd of all coefficients (as a rational: gcd of numerators over
    // lcm of denominators); content of 0 is 0.
    BigRational content() const;
    // this / content, then sign-normalized so the leading coefficient is
    // positive. Returns the applied scalar factor s such that
    // primitive = this * s.
    QtLaurent primitive_part(BigRational *applied = nullptr) const;

    // Substitutions. Each returns a fresh polynomial.
    QtLaurent subst_q_one() const;
    QtLaurent subst_t_one() const;
    QtLaurent subst_t_qinv() const;   // t -> q^{-1}
    QtLaurent subst_t_inv() const;    // t -> t^{-1}
    QtLaurent swap_qt() const;        // q <-> t
    QtLaurent power_subst(int k) const; // (q,t) -> (q^k, t^k), k >= 1
    BigRational eval(const BigRational &q, const BigRational &t) const;

    std::string to_string() const;

private:
    TermMap terms_;
};

// Exact division: returns true and sets quot when divisor divides dividend
// exactly (in the Laurent ring); false otherwise. divisor must be nonzero.
bool try_divide(const QtLaurent &dividend, const QtLaurent &divisor,
                QtLaurent *quot);

// Exact division that throws Internal on failure.
QtLaurent div_exact(const QtLaurent &dividend, const QtLaurent &divisor);

// Gcd with unit content and positive leading coefficient; divides both inputs
// exactly. gcd(0,0) = 0. For inputs with nonnegative exponents the common
// monomial factor is included.
QtLaurent qt_gcd(const QtLaurent &a, const QtLaurent &b);

} // namespace qth
