#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "core/cmatrix.hpp"
#include "core/group_algebra.hpp"

namespace symtrace {

/// A word of 1-based variable indices; X_{w[0]} X_{w[1]} ...
using Word = std::vector<int>;

/// Lexicographically least cyclic rotation; the canonical key for traced
/// words (the trace is rotation invariant).
Word cyclic_canonical(Word w);

/// Product X_{w[0]} X_{w[1]} ... over the given variables; the empty word is
/// the identity.
CMatrix word_product(const Word& w, std::span<const CMatrix> vars);

/// Multiset of traced words (each cyclic-canonical, kept sorted) together
/// with one linear word.  An empty linear word stands for a scalar multiple
/// of the identity matrix.
struct TraceTerm {
    std::vector<Word> traced;
    Word word;

    void canonicalize();
    friend bool operator<(const TraceTerm& a, const TraceTerm& b) {
        if (a.traced.size() != b.traced.size()) return a.traced.size() > b.traced.size();
        if (a.traced != b.traced) return a.traced < b.traced;
        return a.word < b.word;
    }
    friend bool operator==(const TraceTerm& a, const TraceTerm& b) {
        return a.traced == b.traced && a.word == b.word;
    }
};

/// A multilinear trace polynomial with exact rational coefficients.
class TracePolynomial {
public:
    TracePolynomial() = default;
    explicit TracePolynomial(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TraceTerm, Rational>& terms() const { return terms_; }

    void add_term(TraceTerm t, const Rational& c);

    TracePolynomial operator+(const TracePolynomial& o) const;
    TracePolynomial operator-(const TracePolynomial& o) const;
    TracePolynomial scaled(const Rational& c) const;

    friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Numeric evaluation; vars must be square matrices of one common size.
    CMatrix evaluate(std::span<const CMatrix> vars) const;

    std::string to_json() const;
    static TracePolynomial from_json(const std::string& text);

private:
    int nvars_ = 0;
    std::map<TraceTerm, Rational> terms_;
};

/// How a group-algebra element is read as a trace polynomial.
enum class DictMode {
    full_trace,            ///< every cycle becomes a traced word
    last_slot_output,      ///< the cycle through slot k stays a matrix word
    identity_in_last_slot  ///< as above with X_k = 1 substituted
};

/// The permutation <-> trace polynomial dictionary.  For each permutation pi
/// with coefficient a_pi the emitted term is built from the canonically
/// ordered cycles of pi^{-1}; with that orientation the numeric evaluation
/// agrees with the operator expression tr_{...}[T_hat(alpha) X_1 ot ... ot X_k]
/// in every mode (pinned by the operator-side oracle tests).
TracePolynomial poly_of_group_element(const AlgebraElement& alpha, DictMode mode);

/// f_lambda(X_1,...,X_{k-1}) = tr_{1..k\k}[ P_lambda (X_1 ot ... ot 1) ],
/// i.e. poly_of_group_element(omega_lambda, identity_in_last_slot).
TracePolynomial polarized_ch_map(const Partition& lambda);

/// Integer-normalized optimal-witness polynomial
/// prod_i tr(X_i) 1 - k! f_{(1,...,1)}; for k = 3 this is
/// tr(XY) + tr(X)Y + tr(Y)X - XY - YX.
TracePolynomial witness_map(int k);

/// A tensor polynomial: t linear words instead of one.
struct TensorTerm {
    std::vector<Word> traced;
    std::vector<Word> words;

    void canonicalize();
    friend bool operator<(const TensorTerm& a, const TensorTerm& b) {
        if (a.traced != b.traced) return a.traced < b.traced;
        return a.words < b.words;
    }
    friend bool operator==(const TensorTerm& a, const TensorTerm& b) {
        return a.traced == b.traced && a.words == b.words;
    }
};

class TensorPolynomial {
public:
    TensorPolynomial() = default;
    TensorPolynomial(int nvars, int t) : nvars_(nvars), t_(t) {}

    int nvars() const { return nvars_; }
    int t() const { return t_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TensorTerm, Rational>& terms() const { return terms_; }

    void add_term(TensorTerm t, const Rational& c);

    friend bool operator==(const TensorPolynomial& a, const TensorPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.t_ == b.t_ && a.terms_ == b.terms_;
    }

    /// Output acts on (C^d)^{otimes t}.
    CMatrix evaluate(std::span<const CMatrix> vars) const;

    std::string to_json() const;
    static TensorPolynomial from_json(const std::string& text);

    std::string pretty() const;

private:
    int nvars_ = 0;
    int t_ = 1;
    std::map<TensorTerm, Rational> terms_;
};

/// Reads alpha in CS_k as a t-slot tensor polynomial: identity is substituted
/// on the output slots k-t+1..k.  Cycles avoiding the output slots become
/// traced words; with strict=true such cycles raise an error (the Appendix C
/// tensor-identity structure demands exactly t cycles).  A cycle through two
/// or more output slots has no tensor-polynomial form and always raises.
TensorPolynomial tensor_poly_of_group_element(const AlgebraElement& alpha, int t,
                                              bool strict = false);

/// Integer-normalized rendering in the Appendix-B table style: coefficients
/// scaled to coprime integers, variables named A, B, C, ..., a trailing "{}"
/// marking pure-trace terms.  Term order: more traced factors first, then
/// lexicographic.
std::string pretty_print(const TracePolynomial& p);

/// Parses the pretty_print / table format back into a polynomial (nvars is
/// the number of distinct letters unless given).
TracePolynomial parse_pretty(const std::string& text, int nvars = 0);

}  // namespace symtrace
