#include "core/tensor_rep.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace symtrace {

CMatrix rep_matrix(const Permutation& pi, int d) {
    if (d < 1) throw std::invalid_argument("local dimension must be positive");
    const int k = pi.degree();
    double size = std::pow(double(d), k);
    if (size > 4096.0) throw std::invalid_argument("d^k exceeds the dense-size budget");
    const long n = (long)std::llround(size);

    Permutation inv = pi.inverse();
    std::vector<long> stride(k);
    long s = 1;
    for (int i = k - 1; i >= 0; --i) {
        stride[i] = s;
        s *= d;
    }

    CMatrix T((int)n, (int)n);
    std::vector<int> dg(k);
    for (long col = 0; col < n; ++col) {
        long rest = col;
        for (int i = 0; i < k; ++i) {
            dg[i] = int(rest / stride[i]);
            rest %= stride[i];
        }
        long row = 0;
        // row digit at slot i is the column digit at slot pi^{-1}(i)
        for (int i = 1; i <= k; ++i) row += long(dg[inv.apply(i) - 1]) * stride[i - 1];
        T.at((int)row, (int)col) = 1.0;
    }
    std::vector<int> dims(k, d);
    T.with_slots(dims);
    return T;
}

CMatrix algebra_rep(const AlgebraElement& alpha, int d) {
    const int k = alpha.degree();
    double size = std::pow(double(d), k);
    if (size > 4096.0) throw std::invalid_argument("d^k exceeds the dense-size budget");
    const int n = (int)std::llround(size);
    CMatrix out(n, n);
    for (const auto& [g, c] : alpha.coeffs()) out += rep_matrix(g, d) * cplx(c.to_double());
    out.with_slots(std::vector<int>(k, d));
    return out;
}

CMatrix young_projector(const Partition& lambda, int d) {
    static std::mutex mtx;
    static std::map<std::pair<std::vector<int>, int>, CMatrix> cache;
    auto key = std::make_pair(lambda.parts(), d);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CMatrix P = algebra_rep(central_idempotent(lambda), d);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, P);
    return P;
}

CMatrix swap_gamma(int d) {
    return rep_matrix(Permutation::from_cycles(2, {{1, 2}}), d);
}

}  // namespace symtrace
