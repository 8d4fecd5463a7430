#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hta/errors.hpp"

namespace hta {

/// Element of the symmetric group on {1..n}, stored by its image tuple
/// (sigma(1), ..., sigma(n)). Composition is right-to-left:
/// (a * b)(x) = a(b(x)).
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        if (n == 0) throw Error("permutation of degree 0");
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : images_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
                throw Error("permutation images must be a bijection of 1..n");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img));
    }

    static Permutation transposition(int n, int a, int b) {
        auto p = identity(n);
        if (a < 1 || a > n || b < 1 || b > n) throw Error("transposition out of range");
        std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
        return p;
    }

    /// The order-reversing involution i -> n + 1 - i.
    static Permutation reversal(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = n + 1 - i;
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(images_.size()); }

    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 1; i <= degree(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> img(images_.size());
        for (int i = 1; i <= degree(); ++i) img[static_cast<std::size_t>((*this)(i)-1)] = i;
        return Permutation(std::move(img));
    }

    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree()) throw ArityMismatch("composing permutations of different degree");
        std::vector<int> img(a.images_.size());
        for (int i = 1; i <= a.degree(); ++i) img[static_cast<std::size_t>(i - 1)] = a(b(i));
        return Permutation(std::move(img));
    }

    Permutation pow(int e) const {
        auto acc = identity(degree());
        for (int i = 0; i < e; ++i) acc = *this * acc;
        return acc;
    }

    /// +1 for even permutations, -1 for odd ones.
    int sign() const {
        int inversions = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            for (std::size_t j = i + 1; j < images_.size(); ++j)
                if (images_[i] > images_[j]) ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    }

    /// 0 for even, 1 for odd.
    int parity() const { return sign() < 0 ? 1 : 0; }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

inline std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Lehmer rank of an image tuple within Sigma_n, lexicographic order.
inline std::int64_t perm_rank(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::int64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (images[static_cast<std::size_t>(j)] < images[static_cast<std::size_t>(i)]) ++smaller;
        r += smaller * factorial(n - 1 - i);
    }
    return r;
}

inline std::vector<int> perm_unrank(int n, std::int64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const std::int64_t f = factorial(i);
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        img.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return img;
}

} // namespace hta
