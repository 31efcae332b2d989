#include "core/rng.hpp"

#include <cmath>

namespace symtrace {

namespace {

std::uint64_t splitmix(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t s = seed;
    std::uint64_t mixed = splitmix(s) ^ trial;
    return Rng(mixed);
}

std::uint64_t Rng::next_u64() { return splitmix(state_); }

double Rng::uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
    double s = 0.0;
    for (int i = 0; i < 12; ++i) s += uniform();
    return s - 6.0;
}

CMatrix random_complex(int d, Rng& rng) {
    CMatrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.at(i, j) = cplx(rng.gaussian(), rng.gaussian());
    return m;
}

CMatrix random_hermitian(int d, Rng& rng) {
    CMatrix g = random_complex(d, rng);
    return (g + g.adjoint()) * cplx(0.5);
}

CMatrix random_psd(int d, Rng& rng) {
    CMatrix g = random_complex(d, rng);
    return g * g.adjoint();
}

CMatrix random_unitary(int d, Rng& rng) {
    CMatrix g = random_complex(d, rng);
    // Gram-Schmidt on columns
    for (int j = 0; j < d; ++j) {
        for (int prev = 0; prev < j; ++prev) {
            cplx ip = 0.0;
            for (int i = 0; i < d; ++i) ip += std::conj(g.at(i, prev)) * g.at(i, j);
            for (int i = 0; i < d; ++i) g.at(i, j) -= ip * g.at(i, prev);
        }
        double nrm = 0.0;
        for (int i = 0; i < d; ++i) nrm += std::norm(g.at(i, j));
        nrm = std::sqrt(nrm);
        for (int i = 0; i < d; ++i) g.at(i, j) /= nrm;
    }
    return g;
}

CMatrix random_density(const std::vector<int>& slot_dims, Rng& rng) {
    int n = 1;
    for (int d : slot_dims) n *= d;
    CMatrix rho = random_psd(n, rng);
    rho = rho * (1.0 / rho.trace().real());
    rho.with_slots(slot_dims);
    return rho;
}

CMatrix random_pure_product(const std::vector<int>& slot_dims, Rng& rng) {
    CMatrix out = CMatrix::identity(1);
    for (int d : slot_dims) {
        std::vector<cplx> v(d);
        double nrm = 0.0;
        for (int i = 0; i < d; ++i) {
            v[i] = cplx(rng.gaussian(), rng.gaussian());
            nrm += std::norm(v[i]);
        }
        nrm = std::sqrt(nrm);
        CMatrix proj(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) proj.at(i, j) = v[i] * std::conj(v[j]) / (nrm * nrm);
        out = kron(out, proj);
    }
    // drop the leading trivial slot from the identity seed
    CMatrix res = out;
    res.with_slots(slot_dims);
    return res;
}

CMatrix random_traceless(int d, Rng& rng) {
    CMatrix h = random_hermitian(d, rng);
    cplx shift = h.trace() / double(d);
    for (int i = 0; i < d; ++i) h.at(i, i) -= shift;
    return h;
}

AlgebraElement random_algebra_element(int k, Rng& rng) {
    auto perms = all_permutations(k);
    AlgebraElement a(k);
    int terms = 1 + int(rng.next_u64() % (std::uint64_t)std::min<std::size_t>(perms.size(), 6));
    for (int t = 0; t < terms; ++t) {
        const Permutation& g = perms[rng.next_u64() % perms.size()];
        std::int64_t num = (std::int64_t)(rng.next_u64() % 19) - 9;
        std::int64_t den = 1 + (std::int64_t)(rng.next_u64() % 4);
        if (num == 0) num = 1;
        a.add_term(g, Rational(num, den));
    }
    if (a.is_zero()) a.add_term(Permutation::identity(k), Rational(1));
    return a;
}

}  // namespace symtrace
