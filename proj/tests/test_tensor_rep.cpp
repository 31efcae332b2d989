#include "doctest.h"

#include <cmath>

#include "core/rng.hpp"
#include "core/tensor_rep.hpp"

using namespace symtrace;

namespace {

double diff(const CMatrix& a, const CMatrix& b) { return (a - b).frobenius(); }

}  // namespace

TEST_CASE("rep matrix basics") {
    CHECK(diff(rep_matrix(Permutation::identity(2), 3), CMatrix::identity(9)) == 0.0);

    SUBCASE("the swap is sum |jk><kj|") {
        CMatrix g = swap_gamma(2);
        CHECK(g.at(0, 0) == cplx(1.0));
        CHECK(g.at(1, 2) == cplx(1.0));  // |01> <- |10>
        CHECK(g.at(2, 1) == cplx(1.0));
        CHECK(g.at(3, 3) == cplx(1.0));
        CHECK(g.frobenius() == doctest::Approx(2.0));
    }

    SUBCASE("tr[Gamma (M ot N)] = tr(MN)") {
        Rng rng(3);
        for (int d : {2, 3}) {
            CMatrix m = random_complex(d, rng), n = random_complex(d, rng);
            cplx lhs = (swap_gamma(d) * kron(m, n)).trace();
            cplx rhs = (m * n).trace();
            CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
        }
    }

    SUBCASE("unitarity is exact on 0/1 matrices") {
        for (const auto& p : all_permutations(4)) {
            CMatrix t = rep_matrix(p, 2);
            CHECK(diff(t * rep_matrix(p.inverse(), 2), CMatrix::identity(16)) == 0.0);
            CHECK(diff(t.adjoint(), rep_matrix(p.inverse(), 2)) == 0.0);
        }
    }

    SUBCASE("homomorphism on random pairs") {
        Rng rng(17);
        auto perms = all_permutations(4);
        for (int i = 0; i < 100; ++i) {
            const auto& p = perms[rng.next_u64() % perms.size()];
            const auto& q = perms[rng.next_u64() % perms.size()];
            CHECK(diff(rep_matrix(compose(p, q), 2), rep_matrix(p, 2) * rep_matrix(q, 2)) == 0.0);
        }
    }

    SUBCASE("the permuted-factor example (143) on four slots") {
        // T((143)) |v1 v2 v3 v4> = |v3 v2 v4 v1>
        Permutation pi = Permutation::from_cycles(4, {{1, 4, 3}});
        CMatrix t = rep_matrix(pi, 2);
        auto pack = [](int a, int b, int c, int d4) { return ((a * 2 + b) * 2 + c) * 2 + d4; };
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    for (int e = 0; e < 2; ++e)
                        CHECK(t.at(pack(c, b, e, a), pack(a, b, c, e)) == cplx(1.0));
    }
}

TEST_CASE("algebra representation is multiplicative") {
    Rng rng(5);
    CHECK(diff(algebra_rep(AlgebraElement::unit(3), 2), CMatrix::identity(8)) == 0.0);
    for (int i = 0; i < 20; ++i) {
        AlgebraElement a = random_algebra_element(3, rng);
        AlgebraElement b = random_algebra_element(3, rng);
        CMatrix lhs = algebra_rep(multiply(a, b), 2);
        CMatrix rhs = algebra_rep(a, 2) * algebra_rep(b, 2);
        CHECK(diff(lhs, rhs) < 1e-12 * (1.0 + rhs.frobenius()));
    }

    SUBCASE("omega_(1,1) lifts to the rank-one antisymmetric projector at d=2") {
        CMatrix p = algebra_rep(central_idempotent(Partition({1, 1})), 2);
        CMatrix expected = (CMatrix::identity(4) - swap_gamma(2)) * cplx(0.5);
        CHECK(diff(p, expected) < 1e-14);
        auto eig = eigenvalues_hermitian(p);
        CHECK(eig[0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(eig[3] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(eig[2] == doctest::Approx(0.0).epsilon(1e-12));  // rank one
    }
}

TEST_CASE("young projectors") {
    SUBCASE("pigeonhole: P_(1,1,1) vanishes at d=2") {
        CHECK(young_projector(Partition({1, 1, 1}), 2).frobenius() == doctest::Approx(0.0));
    }

    SUBCASE("P_(2) at d=2 is the rank-3 symmetric projector") {
        CMatrix p = young_projector(Partition({2}), 2);
        CHECK(diff(p, (CMatrix::identity(4) + swap_gamma(2)) * cplx(0.5)) < 1e-14);
        auto eig = eigenvalues_hermitian(p);
        double rank = 0;
        for (double e : eig) rank += e;
        CHECK(rank == doctest::Approx(3.0).epsilon(1e-10));
    }

    SUBCASE("corollary properties for k <= 4, d in {2,3}") {
        for (int d : {2, 3})
            for (int k = 2; k <= 4; ++k) {
                auto parts = partitions(k);
                int n = 1;
                for (int i = 0; i < k; ++i) n *= d;
                CMatrix sum(n, n);
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    CMatrix p = young_projector(parts[i], d);
                    CHECK(diff(p * p, p) < 1e-10 * (1 + p.frobenius()));
                    CHECK(diff(p.adjoint(), p) < 1e-12 * (1 + p.frobenius()));
                    for (std::size_t j = i + 1; j < parts.size(); ++j)
                        CHECK((p * young_projector(parts[j], d)).frobenius() < 1e-10);
                    for (int s = 1; s < k; ++s) {
                        CMatrix g = rep_matrix(Permutation::from_cycles(k, {{s, s + 1}}), d);
                        CHECK(diff(g * p, p * g) < 1e-10);
                    }
                    sum += p;
                }
                CHECK(diff(sum, CMatrix::identity(n)) < 1e-10);
            }
    }

    SUBCASE("commutes with the diagonal unitary action") {
        Rng rng(29);
        CMatrix p = young_projector(Partition({2}), 2);
        for (int i = 0; i < 50; ++i) {
            CMatrix u = random_unitary(2, rng);
            CMatrix uu = kron(u, u);
            CHECK(diff(uu * p, p * uu) < 1e-10);
        }
    }
}

TEST_CASE("partial trace") {
    Rng rng(31);
    SUBCASE("swap identities tr_1, tr_2") {
        CMatrix m = random_complex(2, rng), n = random_complex(2, rng);
        CMatrix mn = swap_gamma(2) * kron(m, n);
        mn.with_slots({2, 2});
        CHECK(diff(partial_trace(mn, {1}), m * n) < 1e-12);
        CHECK(diff(partial_trace(mn, {2}), n * m) < 1e-12);
    }

    SUBCASE("tracing every slot leaves the scalar trace") {
        CMatrix m = random_complex(2, rng), n = random_complex(2, rng);
        CMatrix big = kron(m, n);
        CMatrix full = partial_trace(big, {1, 2});
        CHECK(full.rows() == 1);
        CHECK(std::abs(full.at(0, 0) - big.trace()) < 1e-12);
        CHECK(diff(partial_trace(big, {}), big) == 0.0);
    }

    SUBCASE("coordinate-free adjunction") {
        // tr[tr_S(M) N] = tr[M (1_S ot N)] with S the leading slot
        for (int i = 0; i < 25; ++i) {
            CMatrix m = random_complex(8, rng);
            m.with_slots({2, 4});
            CMatrix n = random_complex(4, rng);
            cplx lhs = (partial_trace(m, {1}) * n).trace();
            cplx rhs = (m * kron(CMatrix::identity(2), n)).trace();
            CHECK(std::abs(lhs - rhs) <= 1e-10 * m.frobenius() * n.frobenius());
        }
    }

    CHECK_THROWS_AS(partial_trace(CMatrix::identity(4), {1}), std::invalid_argument);
    {
        CMatrix m = CMatrix::identity(4).with_slots({2, 2});
        CHECK_THROWS_AS(partial_trace(m, {3}), std::invalid_argument);
    }
}

TEST_CASE("partial transpose") {
    Rng rng(37);
    CMatrix m = random_complex(4, rng);
    m.with_slots({2, 2});

    CHECK(diff(partial_transpose(m, {}), m) == 0.0);
    CHECK(diff(partial_transpose(m, {1, 2}), m.transpose()) < 1e-14);
    CHECK(diff(partial_transpose(partial_transpose(m, {2}), {2}), m) == 0.0);

    SUBCASE("Gamma^{T_2} is the unnormalized maximally entangled projector") {
        CMatrix g = swap_gamma(2);
        CMatrix omega(4, 4);  // |Omega><Omega| with |Omega> = |00> + |11>
        for (int i : {0, 3})
            for (int j : {0, 3}) omega.at(i, j) = 1.0;
        CHECK(diff(partial_transpose(g, {2}), omega) == 0.0);
    }
}

TEST_CASE("embedding operators into slot lists") {
    Rng rng(41);
    CMatrix x = random_complex(2, rng);
    // acting on slot 2 of three qubits
    CMatrix e = embed_op(x, {2}, {2, 2, 2});
    CMatrix expected = kron(kron(CMatrix::identity(2), x), CMatrix::identity(2));
    CHECK(diff(e, expected) < 1e-14);

    // order-sensitive two-slot embedding: op slot 1 -> full slot 3
    CMatrix y = random_complex(4, rng);
    y.with_slots({2, 2});
    CMatrix e2 = embed_op(y, {3, 1}, {2, 2, 2});
    // check against manual permutation of kron factors
    CMatrix swapped = partial_transpose(y, {});  // copy
    // y acts on (slot3, slot1); compare a matrix element
    // |abc><a'b'c'| entry corresponds to y[(c,a),(c',a')] when b == b'
    bool ok = true;
    for (int a = 0; a < 2 && ok; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int a2 = 0; a2 < 2; ++a2)
                    for (int b2 = 0; b2 < 2; ++b2)
                        for (int c2 = 0; c2 < 2; ++c2) {
                            cplx got = e2.at((a * 2 + b) * 2 + c, (a2 * 2 + b2) * 2 + c2);
                            cplx want = b == b2 ? y.at(c * 2 + a, c2 * 2 + a2) : cplx(0.0);
                            if (std::abs(got - want) > 1e-14) ok = false;
                        }
    CHECK(ok);
}

TEST_CASE("hermitian eigenvalues") {
    CMatrix d3(3, 3);
    d3.at(0, 0) = 3.0;
    d3.at(1, 1) = 1.0;
    d3.at(2, 2) = 2.0;
    CHECK(min_eigenvalue_hermitian(d3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_eigenvalue_hermitian(d3) == doctest::Approx(3.0).epsilon(1e-12));

    CMatrix proj = (CMatrix::identity(4) - swap_gamma(2)) * cplx(0.5);
    CHECK(min_eigenvalue_hermitian(proj) == doctest::Approx(0.0).epsilon(1e-12));

    SUBCASE("random PSD stays nonnegative") {
        Rng rng(43);
        for (int i = 0; i < 30; ++i) {
            CMatrix g = random_psd(2 + int(rng.next_u64() % 7), rng);
            CHECK(min_eigenvalue_hermitian(g) >= -1e-12 * (1.0 + g.frobenius()));
        }
    }

    SUBCASE("recovers a planted spectrum at size 16") {
        Rng rng(53);
        CMatrix u = random_unitary(16, rng);
        CMatrix h(16, 16);
        for (int i = 0; i < 16; ++i) h.at(i, i) = -3.0 + 0.4 * i;
        CMatrix planted = u * h * u.adjoint();
        auto eig = eigenvalues_hermitian(planted);
        for (int i = 0; i < 16; ++i)
            CHECK(eig[i] == doctest::Approx(-3.0 + 0.4 * i).epsilon(1e-10));
    }

    SUBCASE("agrees with the characteristic polynomial on random 2x2") {
        Rng rng(47);
        for (int i = 0; i < 50; ++i) {
            CMatrix h = random_hermitian(2, rng);
            double tr = h.trace().real();
            double det = (h.at(0, 0) * h.at(1, 1) - h.at(0, 1) * h.at(1, 0)).real();
            double lo = (tr - std::sqrt(tr * tr - 4 * det)) / 2.0;
            CHECK(min_eigenvalue_hermitian(h) == doctest::Approx(lo).epsilon(1e-9));
        }
    }

    CMatrix bad(2, 2);
    bad.at(0, 0) = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(eigenvalues_hermitian(bad), std::invalid_argument);
}
