#pragma once

// Brute-force commutative algebra over Q for the rings whose characters the
// rest of the library predicts by formula. Everything here is built from
// monomial bases and exact row reduction; no generating-function identities
// enter, so agreement with the formula side is a genuine cross-check.
//
// The diagonal and multiset coinvariant quotients are computed cell by cell
// in a compressed basis: each variable set is first cut down by its own
// one-set ideal (the power sums in that set alone), which turns the cell
// into a small tensor product of one-set coinvariant pieces; the remaining
// mixed generators are projected into that space and eliminated there. This
// is an exact change of basis, not an approximation: V/(X+Y+M) with
// X = I_x (x) V_s and Y = V_r (x) I_y is (V_r/I_x) (x) (V_s/I_y) modulo the
// projected image of M.

#include "combinatorics/partition.hpp"
#include "exactnum/qt_laurent.hpp"
#include "oracle/multivar.hpp"
#include "oracle/qrank.hpp"
#include "symfunc/symfunc.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qth {

struct OracleOptions {
    // Traces (and hence Frobenius characters) are assembled for n up to this
    // bound; dimensions are always computed.
    int trace_max_n = 4;
    // Turns on the expensive extras: traces at n = 5 and the n = 5 operator
    // closure sweep.
    bool extended = false;
};

// A finite bigraded S_n-module recorded cell by cell. Traces are indexed by
// cycle type and are present only when has_traces is set.
struct BigradedModule {
    int n = 0;
    std::map<std::pair<int, int>, int> dims;
    bool has_traces = false;
    std::map<Partition, std::map<std::pair<int, int>, BigInt>> traces;

    int dim(int r, int s) const;
    BigInt total_dim() const;
    // Hilbert series with t tracking the x-degree r and q the y-degree s.
    QtLaurent hilbert() const;
    // Frobenius characteristic; requires traces.
    SymFunc frobenius() const;
};

// C[x,y] / (ideal of polarized power sums p_{u,v}, 1 <= u+v <= n), the
// diagonal coinvariant ring, computed over the full square of bidegrees
// where it can live. Verifies on the way that the generators taken one
// degree beyond the defining range already lie in the ideal, and that no
// cell survives past total degree n(n-1)/2.
BigradedModule coinvariant_module(int n, const OracleOptions &opt = {});

// Bigraded dimensions of the space of diagonal harmonics: joint kernel of
// the p_{u,v}(d/dx, d/dy). For n <= 4 this is an independent kernel
// computation in the full polynomial ring; for larger n the dimensions are
// obtained as deficiency ranks of the ideal, which equals the kernel
// dimension because the apolar pairing is diagonal with nonzero entries on
// monomials.
BigradedModule harmonics_module(int n);

// Explicit harmonic polynomials per bidegree, for small n.
std::map<std::pair<int, int>, std::vector<MultiVarPoly>> harmonics_basis(int n);

struct OperatorSpanReport {
    int n = 0;
    std::map<std::pair<int, int>, int> dims;
    bool verified = false;            // closure matches the reference module
    std::pair<int, int> mismatch{-1, -1};
};

// Closure of the Vandermonde determinant in x under the operators d/dx_i and
// E_k = sum_i y_i (d/dx_i)^k, 1 <= k < n, compared cell by cell against a
// reference (normally harmonics_module(n)).
OperatorSpanReport operator_span(int n, const BigradedModule &reference);

// Whether substituting y_j -> sum_k lambda_k x_j^k into p lands in the ideal
// (e_1(x), ..., e_n(x)) for every choice of the parameters lambda. p must be
// bihomogeneous in an xy roster.
bool op_criterion(const MultiVarPoly &p);

// Truncated bigraded Hilbert series of the polygraph ring R(n,l): the image
// of C[x,y,a,b] in the direct sum over maps f: {1..l} -> {1..n} of C[x,y]
// under a_i -> x_{f(i)}, b_i -> y_{f(i)}. Cells with r + s <= trunc.
QtLaurent polygraph_hilbert(int n, int l, int trunc);

// The polygraph ring modulo the x,y power-sum ideal, with the joint
// S_n x S_l action recorded as traces per pair of cycle types.
struct PolygraphModule {
    int n = 0, l = 0;
    std::map<std::pair<int, int>, int> dims;
    std::map<std::pair<Partition, Partition>,
             std::map<std::pair<int, int>, BigInt>>
        traces;

    QtLaurent hilbert() const;
    // S_n-Frobenius of the S_l-isotypic component of shape nu.
    SymFunc isotypic_frobenius(const Partition &nu) const;
};

PolygraphModule polygraph_quotient(int n, int l);

// Coinvariants for k sets of n variables, cut out by the polarized power
// sums over all k-part multidegrees alpha with 1 <= |alpha| <= n. Reports
// the multigraded dimensions and the total dimension of the sign-isotypic
// (alternating) part; no expectations are baked in.
struct MultisetReport {
    int n = 0, k = 0;
    std::map<MultiDeg, int> dims;
    BigInt total_dim;
    BigInt alternant_total;
};

MultisetReport multiset_coinvariants(int n, int k);

} // namespace qth
