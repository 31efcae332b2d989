#pragma once

#include <map>
#include <utility>
#include <vector>

#include "core/permutation.hpp"
#include "core/rational.hpp"

namespace symtrace {

/// An element of the rational group algebra of S_k: a finitely supported map
/// from permutations to exact rationals.  Zero coefficients are never stored.
///
/// The algebra product extends compose(g, h) linearly, i.e. g*h applies h
/// first.  All identities checked in this project (idempotency, centrality,
/// orthogonality, hermiticity) are insensitive to that orientation choice;
/// the symbolic dictionary pins its own orientation against a numeric oracle.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(int k) : k_(k) {}

    static AlgebraElement unit(int k) {
        AlgebraElement e(k);
        e.add_term(Permutation::identity(k), Rational(1));
        return e;
    }
    static AlgebraElement basis(const Permutation& g, Rational coeff = Rational(1)) {
        AlgebraElement e(g.degree());
        e.add_term(g, coeff);
        return e;
    }

    int degree() const { return k_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }
    const std::map<Permutation, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(const Permutation& g) const {
        auto it = coeffs_.find(g);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add_term(const Permutation& g, const Rational& c) {
        if (g.degree() != k_) throw std::invalid_argument("degree mismatch in add_term");
        auto it = coeffs_.find(g);
        if (it == coeffs_.end()) {
            if (!c.is_zero()) coeffs_.emplace(g, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

private:
    int k_ = 0;
    std::map<Permutation, Rational> coeffs_;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const Rational& c, const AlgebraElement& a);

/// Convolution product: sum over a_g b_h (g*h).
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// The involution alpha* = sum a_g g^{-1} (coefficients are rational, so
/// conjugation is trivial).  alpha is hermitian iff star(alpha) == alpha.
AlgebraElement star(const AlgebraElement& a);

bool is_hermitian(const AlgebraElement& a);

/// Commutes with the adjacent transpositions (1 2), (2 3), ..., which
/// generate S_k.
bool is_central(const AlgebraElement& a);

/// Row symmetrizer a_T = sum over the row stabilizer.
AlgebraElement row_symmetrizer(const Tableau& t);
/// Signed column symmetrizer b_T = sum of sgn(pi) pi over the column stabilizer.
AlgebraElement column_antisymmetrizer(const Tableau& t);

/// Young symmetrizer c_T: the row symmetrization acts first, then the signed
/// column part, so for shape (2,1) with natural filling this is
/// () + (12) - (13) - (123).
AlgebraElement young_symmetrizer(const Tableau& t);

/// Central hermitian idempotent omega_lambda: the conjugation average
/// (h_lambda / k!) sum_sigma sigma c sigma^{-1} of the natural-filling Young
/// symmetrizer.  Results are memoized.  Practical bound k <= 7.
AlgebraElement central_idempotent(const Partition& lambda);

/// sum over all of S_k of sgn(pi) pi.
AlgebraElement antisymmetrizer(int k);

/// Embeds alpha in S_m into S_k, acting on the given m slots (1-based,
/// strictly increasing); remaining slots are fixed.
AlgebraElement embed(const AlgebraElement& alpha, int k, const std::vector<int>& slots);

/// The four primitive hermitian idempotents refining omega_{(2,1)} in CS_3,
/// returned as two pairs; each pair sums to omega_{(2,1)}.
std::vector<std::pair<AlgebraElement, AlgebraElement>> fine_grained_idempotents_21();

/// JSON wire format: [{"cycles": [[2],[1,4,3]], "coeff": "1/3"}, ...] with
/// canonical cycle order and reduced fractions.
std::string to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const std::string& text);

}  // namespace symtrace
