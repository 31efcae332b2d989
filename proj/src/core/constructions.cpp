#include "core/constructions.hpp"

#include <algorithm>

namespace symtrace {

bool ideal_membership(const AlgebraElement& alpha, int d) {
    const int k = alpha.degree();
    if (k > 6) throw std::invalid_argument("ideal_membership supports k <= 6");
    for (const auto& lambda : partitions(k)) {
        if (lambda.num_parts() > d) continue;
        if (!multiply(central_idempotent(lambda), alpha).is_zero()) return false;
    }
    return true;
}

AlgebraElement epsilon_element(int d, int k) {
    if (d + 1 > k) throw std::invalid_argument("epsilon needs k >= d+1");
    std::vector<int> slots(d + 1);
    for (int i = 0; i < d + 1; ++i) slots[i] = i + 1;
    return embed(antisymmetrizer(d + 1), k, slots);
}

IdentityKind identity_kind_from_string(const std::string& s) {
    if (s == "polynomial") return IdentityKind::polynomial;
    if (s == "weak") return IdentityKind::weak;
    if (s == "central") return IdentityKind::central;
    if (s == "permutation") return IdentityKind::permutation;
    if (s == "tensor_identity") return IdentityKind::tensor_identity;
    throw std::invalid_argument("unknown identity kind: " + s);
}

std::string to_string(IdentityKind k) {
    switch (k) {
        case IdentityKind::polynomial: return "polynomial";
        case IdentityKind::weak: return "weak";
        case IdentityKind::central: return "central";
        case IdentityKind::permutation: return "permutation";
        case IdentityKind::tensor_identity: return "tensor_identity";
    }
    return "?";
}

namespace {

/// Element whose t=1 tensor form is the signed sum of the given words: each
/// word X_{w[0]} ... X_{w[r-1]} maps to the inverse of the k-cycle
/// (w[0] ... w[r-1] k).
AlgebraElement from_signed_words(int k, const std::vector<std::pair<Word, int>>& words) {
    AlgebraElement a(k);
    for (const auto& [w, sgn] : words) {
        Word cyc = w;
        cyc.push_back(k);
        a.add_term(Permutation::from_cycles(k, {cyc}).inverse(), Rational(sgn));
    }
    return a;
}

AlgebraElement standard_polynomial_element(int r) {
    // s_r = sum over pi in S_r of sgn(pi) X_{pi(1)} ... X_{pi(r)}
    std::vector<std::pair<Word, int>> words;
    for (const auto& pi : all_permutations(r)) {
        Word w(r);
        for (int i = 1; i <= r; ++i) w[i - 1] = pi.apply(i);
        words.emplace_back(std::move(w), pi.sign());
    }
    return from_signed_words(r + 1, words);
}

AlgebraElement central_commutator_element() {
    // [A,B][C,D] + [C,D][A,B], expanded into eight signed words of length 4
    std::vector<std::pair<Word, int>> words = {
        {{1, 2, 3, 4}, +1}, {{1, 2, 4, 3}, -1}, {{2, 1, 3, 4}, -1}, {{2, 1, 4, 3}, +1},
        {{3, 4, 1, 2}, +1}, {{3, 4, 2, 1}, -1}, {{4, 3, 1, 2}, -1}, {{4, 3, 2, 1}, +1},
    };
    return from_signed_words(5, words);
}

AlgebraElement weak_razmyslov_element() {
    // [X1 X3 + X3 X1, X2]: the polarization of [X^2, Y], which vanishes on
    // traceless 2x2 matrices because X^2 is scalar there
    std::vector<std::pair<Word, int>> words = {
        {{1, 3, 2}, +1}, {{3, 1, 2}, +1}, {{2, 1, 3}, -1}, {{2, 3, 1}, -1}};
    return from_signed_words(4, words);
}

AlgebraElement tensor_identity_element(int d, int k, int t) {
    const int r = k - t;
    if (r != 2 * d)
        throw NoCandidateError("tensor identity pattern needs k = 2d + t");
    // split the antisymmetrized word of length r into t chunks, each routed
    // through one output slot
    std::vector<int> chunk(t, r / t);
    for (int i = 0; i < r % t; ++i) ++chunk[i];
    AlgebraElement a(k);
    for (const auto& pi : all_permutations(r)) {
        std::vector<std::vector<int>> cycles;
        int pos = 1;
        for (int c = 0; c < t; ++c) {
            std::vector<int> cyc;
            for (int j = 0; j < chunk[c]; ++j) cyc.push_back(pi.apply(pos++));
            cyc.push_back(r + 1 + c);  // output slot
            cycles.push_back(std::move(cyc));
        }
        a.add_term(Permutation::from_cycles(k, cycles).inverse(), Rational(pi.sign()));
    }
    return a;
}

/// Classifies every term of alpha as either "t separate cycles through the
/// output slots" (beta) or "contains exactly the target cycles on the output
/// slots" (gamma); returns the beta part, or nothing if some term fits
/// neither class.
std::optional<AlgebraElement> split_beta(const AlgebraElement& alpha, int t,
                                         const Permutation& target) {
    const int k = alpha.degree();
    AlgebraElement beta(k);
    for (const auto& [pi, c] : alpha.coeffs()) {
        auto cycles = pi.canonical_cycles();
        int through_outputs = 0;
        bool pure_output_cycles = true;  // cycles touching outputs stay inside outputs
        bool separate = true;
        for (const auto& cyc : cycles) {
            int n_out = 0;
            for (int v : cyc)
                if (v > k - t) ++n_out;
            if (n_out > 0) {
                ++through_outputs;
                if (n_out != 1) separate = false;
                if ((int)cyc.size() != n_out) pure_output_cycles = false;
            }
        }
        bool is_beta = separate && through_outputs == t && (int)cycles.size() == t;
        if (is_beta) {
            beta.add_term(pi, c);
            continue;
        }
        // gamma: restriction to the output slots equals the target permutation
        // and no cycle mixes outputs with inputs
        bool is_gamma = pure_output_cycles;
        if (is_gamma) {
            for (int i = k - t + 1; i <= k && is_gamma; ++i)
                if (pi.apply(i) != target.apply(i - (k - t)) + (k - t)) is_gamma = false;
        }
        if (!is_gamma) return std::nullopt;
    }
    return beta;
}

Construction make_result(IdentityKind kind, int d, int t, AlgebraElement elem,
                         TargetKind target, Permutation target_perm, bool strict_form) {
    Construction c;
    c.kind = kind;
    c.d = d;
    c.t = t;
    c.tensor = tensor_poly_of_group_element(elem, t, strict_form);
    c.element = std::move(elem);
    c.target = target;
    c.target_perm = std::move(target_perm);
    return c;
}

}  // namespace

Construction construct_identity(IdentityKind kind, int d, int k, int t) {
    switch (kind) {
        case IdentityKind::polynomial: {
            if (d < 1 || 2 * d + 1 > 6)
                throw NoCandidateError("standard polynomial construction supports d <= 2");
            if (k != 0 && k != 2 * d + 1)
                throw std::invalid_argument("polynomial kind fixes k = 2d+1");
            Construction c = make_result(kind, d, 1, standard_polynomial_element(2 * d),
                                         TargetKind::zero, Permutation::identity(1), true);
            c.membership_certified = ideal_membership(c.element, d);
            if (!c.membership_certified)
                throw NoCandidateError("candidate failed the exact ideal certificate");
            c.note = "standard polynomial s_" + std::to_string(2 * d) + " on M_" +
                     std::to_string(d) + "; certified in J_" + std::to_string(d);
            return c;
        }
        case IdentityKind::central: {
            if (d != 2) throw NoCandidateError("central construction is specific to d = 2");
            Construction c = make_result(kind, d, 1, central_commutator_element(),
                                         TargetKind::identity, Permutation::identity(1), true);
            c.note = "[A,B][C,D] + [C,D][A,B] evaluates to a scalar multiple of 1 on M_2; "
                     "verified numerically";
            return c;
        }
        case IdentityKind::weak: {
            if (d != 2) throw NoCandidateError("weak construction is specific to d = 2");
            Construction c = make_result(kind, d, 1, weak_razmyslov_element(),
                                         TargetKind::zero_on_traceless,
                                         Permutation::identity(1), true);
            c.note = "[X1 X3 + X3 X1, X2] vanishes on traceless 2x2 matrices; "
                     "verified numerically";
            return c;
        }
        case IdentityKind::tensor_identity: {
            if (t < 1) throw std::invalid_argument("tensor_identity needs t >= 1");
            if (k == 0) k = 2 * d + t;
            AlgebraElement elem = tensor_identity_element(d, k, t);
            if (elem.degree() > 6 || !ideal_membership(elem, d))
                throw NoCandidateError("candidate failed the exact ideal certificate");
            Construction c = make_result(kind, d, t, std::move(elem), TargetKind::zero,
                                         Permutation::identity(t), true);
            c.membership_certified = true;
            c.note = "antisymmetrized split-word pattern, k = " + std::to_string(k) +
                     ", certified in J_" + std::to_string(d);
            return c;
        }
        case IdentityKind::permutation: {
            if (t < 2) throw std::invalid_argument("permutation kind needs t >= 2");
            if (k == 0) k = 2 * d + t;
            if (k > 6) throw std::invalid_argument("permutation search supports k <= 6");
            // target: the swap for t = 2, the full cycle on outputs otherwise
            std::vector<int> out_cycle(t);
            for (int i = 0; i < t; ++i) out_cycle[i] = i + 1;
            Permutation target = t == 2 ? Permutation::from_cycles(2, {{1, 2}})
                                        : Permutation::from_cycles(t, {out_cycle});
            AlgebraElement eps = epsilon_element(d, k);
            for (bool left : {false, true}) {
                for (const auto& route : all_permutations(k)) {
                    AlgebraElement cand =
                        left ? multiply(AlgebraElement::basis(route), eps)
                             : multiply(eps, AlgebraElement::basis(route));
                    auto beta = split_beta(cand, t, target);
                    if (!beta || beta->is_zero()) continue;
                    Construction c = make_result(kind, d, t, std::move(*beta),
                                                 TargetKind::permutation, target, true);
                    c.membership_certified = ideal_membership(cand, d);
                    c.note = "beta part of an epsilon routing; the verifier decides "
                             "between c*T(pi) and c = 0";
                    return c;
                }
            }
            throw NoCandidateError(
                "no epsilon routing met the permutation-polynomial structure");
        }
    }
    throw std::invalid_argument("unreachable identity kind");
}

}  // namespace symtrace
