#include "core/group_algebra.hpp"

#include <mutex>
#include <stdexcept>

#include "json.hpp"

namespace symtrace {

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in add");
    AlgebraElement out = a;
    for (const auto& [g, c] : b.coeffs()) out.add_term(g, c);
    return out;
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
    return add(a, scale(Rational(-1), b));
}

AlgebraElement scale(const Rational& c, const AlgebraElement& a) {
    AlgebraElement out(a.degree());
    if (c.is_zero()) return out;
    for (const auto& [g, x] : a.coeffs()) out.add_term(g, c * x);
    return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in multiply");
    AlgebraElement out(a.degree());
    for (const auto& [g, x] : a.coeffs())
        for (const auto& [h, y] : b.coeffs()) out.add_term(compose(g, h), x * y);
    return out;
}

AlgebraElement star(const AlgebraElement& a) {
    AlgebraElement out(a.degree());
    for (const auto& [g, c] : a.coeffs()) out.add_term(g.inverse(), c);
    return out;
}

bool is_hermitian(const AlgebraElement& a) { return star(a) == a; }

bool is_central(const AlgebraElement& a) {
    int k = a.degree();
    for (int i = 1; i < k; ++i) {
        Permutation t = Permutation::from_cycles(k, {{i, i + 1}});
        AlgebraElement tt = AlgebraElement::basis(t);
        if (multiply(tt, a) != multiply(a, tt)) return false;
    }
    return true;
}

AlgebraElement row_symmetrizer(const Tableau& t) {
    AlgebraElement out(t.shape().k());
    for (const auto& p : t.row_stabilizer()) out.add_term(p, Rational(1));
    return out;
}

AlgebraElement column_antisymmetrizer(const Tableau& t) {
    AlgebraElement out(t.shape().k());
    for (const auto& p : t.column_stabilizer()) out.add_term(p, Rational(p.sign()));
    return out;
}

AlgebraElement young_symmetrizer(const Tableau& t) {
    // b * a in this algebra's orientation = "a acts first, then b"
    return multiply(column_antisymmetrizer(t), row_symmetrizer(t));
}

namespace {

std::int64_t class_size(int k, const std::vector<int>& type) {
    // k! / z_type with z = prod_j j^{m_j} m_j!
    std::int64_t z = 1;
    int run = 1;
    for (std::size_t i = 0; i < type.size(); ++i) {
        z *= type[i];
        if (i + 1 < type.size() && type[i + 1] == type[i]) {
            ++run;
            z *= run;
        } else {
            run = 1;
        }
    }
    return factorial(k) / z;
}

}  // namespace

AlgebraElement central_idempotent(const Partition& lambda) {
    static std::mutex mtx;
    static std::map<std::vector<int>, AlgebraElement> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(lambda.parts());
        if (it != cache.end()) return it->second;
    }

    int k = lambda.k();
    AlgebraElement c = young_symmetrizer(Tableau::natural(lambda));

    // The conjugation sum over sigma replaces every permutation of c by its
    // whole conjugacy class, weighted by k!/|class|.  Grouping c by cycle
    // type first avoids the k! outer sum.  The prefactor is (h/k!)^2: one
    // h/k! turns the quasi-idempotent c into an idempotent (c^2 = (k!/h) c),
    // the other is the average's own normalization; this is the unique scale
    // with omega^2 = omega, and it reproduces the worked low-degree elements
    // such as (1/2)[() - (12)].
    std::map<std::vector<int>, Rational> per_type;
    for (const auto& [g, x] : c.coeffs()) per_type[g.cycle_type()] += x;

    Rational norm(lambda.hook_dimension(), factorial(k));
    norm = norm * norm;
    AlgebraElement omega(k);
    for (const auto& g : all_permutations(k)) {
        auto it = per_type.find(g.cycle_type());
        if (it == per_type.end() || it->second.is_zero()) continue;
        Rational w = norm * it->second * Rational(factorial(k), class_size(k, it->first));
        omega.add_term(g, w);
    }

    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(lambda.parts(), omega);
    return omega;
}

AlgebraElement antisymmetrizer(int k) {
    AlgebraElement out(k);
    for (const auto& g : all_permutations(k)) out.add_term(g, Rational(g.sign()));
    return out;
}

AlgebraElement embed(const AlgebraElement& alpha, int k, const std::vector<int>& slots) {
    if ((int)slots.size() != alpha.degree())
        throw std::invalid_argument("slot count must equal element degree");
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i] < 1 || slots[i] > k) throw std::invalid_argument("slot out of range");
        if (i > 0 && slots[i] <= slots[i - 1])
            throw std::invalid_argument("slots must be strictly increasing");
    }
    AlgebraElement out(k);
    for (const auto& [g, c] : alpha.coeffs()) {
        std::vector<int> img(k);
        for (int i = 1; i <= k; ++i) img[i - 1] = i;
        for (int i = 1; i <= alpha.degree(); ++i) img[slots[i - 1] - 1] = slots[g.apply(i) - 1];
        out.add_term(Permutation(std::move(img)), c);
    }
    return out;
}

std::vector<std::pair<AlgebraElement, AlgebraElement>> fine_grained_idempotents_21() {
    auto build = [](std::int64_t c12, std::int64_t c13, std::int64_t c23) {
        AlgebraElement e(3);
        e.add_term(Permutation::identity(3), Rational(2, 6));
        e.add_term(Permutation::from_cycles(3, {{1, 2}}), Rational(c12, 6));
        e.add_term(Permutation::from_cycles(3, {{1, 3}}), Rational(c13, 6));
        e.add_term(Permutation::from_cycles(3, {{2, 3}}), Rational(c23, 6));
        e.add_term(Permutation::from_cycles(3, {{1, 2, 3}}), Rational(-1, 6));
        e.add_term(Permutation::from_cycles(3, {{1, 3, 2}}), Rational(-1, 6));
        return e;
    };
    // the two decompositions of omega_{(2,1)} into primitive hermitian idempotents
    return {
        {build(2, -1, -1), build(-2, 1, 1)},
        {build(-1, -1, 2), build(1, 1, -2)},
    };
}

std::string to_json(const AlgebraElement& a) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [g, c] : a.coeffs()) {
        nlohmann::json t;
        t["cycles"] = g.canonical_cycles();
        t["coeff"] = c.str();
        j.push_back(t);
    }
    return j.dump();
}

AlgebraElement element_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("element JSON must be an array");
    int k = 0;
    std::vector<std::pair<std::vector<std::vector<int>>, Rational>> staged;
    for (const auto& t : j) {
        auto cycles = t.at("cycles").get<std::vector<std::vector<int>>>();
        for (const auto& c : cycles)
            for (int v : c) k = std::max(k, v);
        staged.emplace_back(std::move(cycles), Rational::parse(t.at("coeff").get<std::string>()));
    }
    if (k == 0) throw std::invalid_argument("cannot infer the degree of an empty element");
    AlgebraElement out(k);
    for (const auto& [cycles, coeff] : staged)
        out.add_term(Permutation::from_cycles(k, cycles), coeff);
    return out;
}

}  // namespace symtrace
