#include "core/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symtrace {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    int k = (int)image_.size();
    if (k == 0) throw std::invalid_argument("empty permutation");
    std::vector<char> seen(k + 1, 0);
    for (int v : image_) {
        if (v < 1 || v > k || seen[v]) throw std::invalid_argument("image is not a bijection of {1..k}");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int k) {
    if (k < 1) throw std::invalid_argument("degree must be positive");
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
    if (k < 1) throw std::invalid_argument("degree must be positive");
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 1);
    std::vector<char> used(k + 1, 0);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i];
            int b = cyc[(i + 1) % cyc.size()];
            if (a < 1 || a > k) throw std::invalid_argument("cycle entry out of range");
            if (used[a]) throw std::invalid_argument("cycles are not disjoint");
            used[a] = 1;
            img[a - 1] = b;
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 1; i <= degree(); ++i) inv[image_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (image_[i - 1] != i) return false;
    return true;
}

int Permutation::sign() const {
    int cycles = (int)canonical_cycles().size();
    return ((degree() - cycles) % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<int>> Permutation::canonical_cycles() const {
    int k = degree();
    std::vector<char> visited(k + 1, 0);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= k; ++start) {
        if (visited[start]) continue;
        std::vector<int> cyc;
        int cur = start;
        do {
            visited[cur] = 1;
            cyc.push_back(cur);
            cur = image_[cur - 1];
        } while (cur != start);
        // rotate so the maximum lands at the end
        auto mx = std::max_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), mx + 1 == cyc.end() ? cyc.begin() : mx + 1, cyc.end());
        cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.back() < b.back(); });
    return cycles;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : canonical_cycles()) lens.push_back((int)c.size());
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

std::string Permutation::str() const {
    if (is_identity()) return "()";
    std::string s;
    for (const auto& cyc : canonical_cycles()) {
        if (cyc.size() == 1) continue;
        s += "(";
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(cyc[i]);
        }
        s += ")";
    }
    return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in compose");
    std::vector<int> img(p.degree());
    for (int i = 1; i <= p.degree(); ++i) img[i - 1] = p.apply(q.apply(i));
    return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& sigma, const Permutation& pi) {
    return compose(compose(sigma, pi), sigma.inverse());
}

std::vector<Permutation> all_permutations(int k) {
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    out.reserve((std::size_t)factorial(k));
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::int64_t factorial(int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("empty partition");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        k_ += parts_[i];
    }
}

std::int64_t Partition::hook_dimension() const {
    // hook of box (i,j): boxes to the right, below, and itself
    std::int64_t prod = 1;
    int r = num_parts();
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < parts_[i]; ++j) {
            int arm = parts_[i] - j - 1;
            int leg = 0;
            for (int ii = i + 1; ii < r; ++ii)
                if (parts_[ii] > j) ++leg;
            prod *= (arm + leg + 1);
        }
    }
    return factorial(k_) / prod;
}

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::vector<Partition> partitions(int k) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // depth-first in reverse-lexicographic order: largest first part first
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if ((int)rows_.size() != shape_.num_parts()) throw std::invalid_argument("tableau row count mismatch");
    std::vector<char> seen(shape_.k() + 1, 0);
    for (int i = 0; i < shape_.num_parts(); ++i) {
        if ((int)rows_[i].size() != shape_.parts()[i])
            throw std::invalid_argument("tableau row length mismatch");
        for (int v : rows_[i]) {
            if (v < 1 || v > shape_.k() || seen[v])
                throw std::invalid_argument("tableau filling must use 1..k once each");
            seen[v] = 1;
        }
    }
}

Tableau Tableau::natural(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : shape.parts()) {
        std::vector<int> row(len);
        std::iota(row.begin(), row.end(), next);
        next += len;
        rows.push_back(std::move(row));
    }
    return Tableau(shape, std::move(rows));
}

std::vector<std::vector<int>> Tableau::columns() const {
    std::vector<std::vector<int>> cols(shape_.parts()[0]);
    for (const auto& row : rows_)
        for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
    return cols;
}

namespace {

// All permutations of degree k preserving each block of `blocks` setwise.
std::vector<Permutation> block_stabilizer(int k, const std::vector<std::vector<int>>& blocks) {
    std::vector<Permutation> result{Permutation::identity(k)};
    for (const auto& block : blocks) {
        std::vector<int> perm(block.begin(), block.end());
        std::sort(perm.begin(), perm.end());
        std::vector<Permutation> extended;
        do {
            // maps sorted block elements to `perm`
            std::vector<int> img(k);
            std::iota(img.begin(), img.end(), 1);
            std::vector<int> sorted(block.begin(), block.end());
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i) img[sorted[i] - 1] = perm[i];
            Permutation b{std::move(img)};
            for (const auto& r : result) extended.push_back(compose(b, r));
        } while (std::next_permutation(perm.begin(), perm.end()));
        result = std::move(extended);
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace

std::vector<Permutation> Tableau::row_stabilizer() const {
    return block_stabilizer(shape_.k(), rows_);
}

std::vector<Permutation> Tableau::column_stabilizer() const {
    return block_stabilizer(shape_.k(), columns());
}

}  // namespace symtrace
