#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "hta/errors.hpp"
#include "hta/permutation.hpp"
#include "hta/rational.hpp"

namespace hta {

/// Index tuple of a basis vector of E^{tensor n}; 1-based entries in [1, dim].
using Index = std::vector<int>;

namespace detail {

inline void check_tuple(const Index& idx, std::size_t len, int dim, const char* what) {
    if (idx.size() != len)
        throw ShapeMismatch(std::string(what) + ": index tuple has wrong length");
    for (int v : idx)
        if (v < 1 || v > dim)
            throw IndexOutOfRange(std::string(what) + ": index " + std::to_string(v) +
                                  " outside [1, " + std::to_string(dim) + "]");
}

/// Lexicographic odometer over [1..dim]^len, starting at (1,...,1).
inline bool next_tuple(Index& idx, int dim) {
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        if (*it < dim) {
            ++*it;
            return true;
        }
        *it = 1;
    }
    return false;
}

} // namespace detail

/// Element of E^{tensor arity} with exact rational coefficients, stored
/// sparsely over basis index tuples.
class MultiVector {
public:
    MultiVector(int arity, int dim) : arity_(arity), dim_(dim) {
        if (arity < 0 || dim < 1) throw ShapeMismatch("multivector needs arity >= 0 and dim >= 1");
    }

    static MultiVector basis(int dim, Index idx) {
        MultiVector v(static_cast<int>(idx.size()), dim);
        v.add(idx, Rational(1));
        return v;
    }

    int arity() const { return arity_; }
    int dim() const { return dim_; }

    void add(const Index& idx, const Rational& c) {
        detail::check_tuple(idx, static_cast<std::size_t>(arity_), dim_, "multivector");
        if (c.is_zero()) return;
        auto [it, inserted] = coeff_.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeff_.erase(it);
        }
    }

    Rational coefficient(const Index& idx) const {
        auto it = coeff_.find(idx);
        return it == coeff_.end() ? Rational(0) : it->second;
    }

    const std::map<Index, Rational>& terms() const { return coeff_; }

    bool is_zero() const { return coeff_.empty(); }

    MultiVector scaled(const Rational& c) const {
        MultiVector out(arity_, dim_);
        if (c.is_zero()) return out;
        for (const auto& [idx, v] : coeff_) out.coeff_.emplace(idx, v * c);
        return out;
    }

    friend MultiVector operator+(const MultiVector& a, const MultiVector& b) {
        if (a.arity_ != b.arity_) throw ArityMismatch("adding multivectors of different arity");
        if (a.dim_ != b.dim_) throw DimMismatch("adding multivectors of different dim");
        MultiVector out = a;
        for (const auto& [idx, v] : b.coeff_) out.add(idx, v);
        return out;
    }

    friend MultiVector operator-(const MultiVector& a, const MultiVector& b) {
        return a + b.scaled(Rational(-1));
    }

    bool operator==(const MultiVector&) const = default;

private:
    int arity_;
    int dim_;
    std::map<Index, Rational> coeff_;
};

/// Dense-free exact tensor of type (p, q) over a dim-dimensional space E,
/// viewed as the linear map E^{tensor p} -> E^{tensor q} with structure
/// constants C^{j_1..j_q}_{i_1..i_p}. Entries are stored sparsely, keyed by
/// the concatenated tuple (i_1..i_p, j_1..j_q); missing keys mean 0.
class Tensor {
public:
    Tensor(int p, int q, int dim) : p_(p), q_(q), dim_(dim) {
        if (p < 0 || q < 0 || p + q < 1 || dim < 1)
            throw ShapeMismatch("tensor needs p,q >= 0, p+q >= 1, dim >= 1");
    }

    static Tensor make(int p, int q, int dim, const std::vector<std::pair<Index, Rational>>& entries) {
        Tensor t(p, q, dim);
        for (const auto& [idx, val] : entries) {
            detail::check_tuple(idx, static_cast<std::size_t>(p + q), dim, "tensor entry");
            if (t.entries_.contains(idx)) throw DuplicateEntry("tensor entry listed twice");
            if (!val.is_zero()) t.entries_.emplace(idx, val);
        }
        return t;
    }

    int p() const { return p_; }
    int q() const { return q_; }
    int dim() const { return dim_; }

    void set(const Index& idx, const Rational& val) {
        detail::check_tuple(idx, static_cast<std::size_t>(p_ + q_), dim_, "tensor entry");
        if (val.is_zero())
            entries_.erase(idx);
        else
            entries_[idx] = val;
    }

    void add_to(const Index& idx, const Rational& val) {
        detail::check_tuple(idx, static_cast<std::size_t>(p_ + q_), dim_, "tensor entry");
        if (val.is_zero()) return;
        auto [it, inserted] = entries_.try_emplace(idx, val);
        if (!inserted) {
            it->second += val;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    Rational entry(const Index& idx) const {
        auto it = entries_.find(idx);
        return it == entries_.end() ? Rational(0) : it->second;
    }

    const std::map<Index, Rational>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }

    /// Type-(q, p) tensor with the roles of input and output indices
    /// swapped; for (1,1) tensors this is the matrix transpose.
    Tensor dual() const {
        Tensor out(q_, p_, dim_);
        for (const auto& [idx, val] : entries_) {
            Index swapped(idx.begin() + p_, idx.end());
            swapped.insert(swapped.end(), idx.begin(), idx.begin() + p_);
            out.entries_.emplace(std::move(swapped), val);
        }
        return out;
    }

    /// Permutes the input slots: the entry at ((i_{rho(1)},...,i_{rho(p)}), J)
    /// of the result is this tensor's entry at ((i_1,...,i_p), J).
    Tensor transpose_inputs(const Permutation& rho) const {
        if (rho.degree() != p_) throw ArityMismatch("input transpose pattern has wrong degree");
        Tensor out(p_, q_, dim_);
        for (const auto& [idx, val] : entries_) {
            Index moved(idx.size());
            for (int t = 1; t <= p_; ++t)
                moved[static_cast<std::size_t>(rho(t) - 1)] = idx[static_cast<std::size_t>(t - 1)];
            for (int t = p_; t < p_ + q_; ++t) moved[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t)];
            out.entries_.emplace(std::move(moved), val);
        }
        return out;
    }

    /// Linear extension of the basis action t(e_{i_1} x ... x e_{i_p}).
    MultiVector apply(const MultiVector& v) const {
        if (v.arity() != p_) throw ArityMismatch("tensor applied to multivector of wrong arity");
        if (v.dim() != dim_) throw DimMismatch("tensor applied to multivector of wrong dim");
        MultiVector out(q_, dim_);
        for (const auto& [idx, val] : entries_) {
            const Index in(idx.begin(), idx.begin() + p_);
            const Rational c = v.coefficient(in);
            if (c.is_zero()) continue;
            out.add(Index(idx.begin() + p_, idx.end()), c * val);
        }
        return out;
    }

    Tensor scaled(const Rational& c) const {
        Tensor out(p_, q_, dim_);
        if (c.is_zero()) return out;
        for (const auto& [idx, val] : entries_) out.entries_.emplace(idx, val * c);
        return out;
    }

    friend Tensor operator+(const Tensor& a, const Tensor& b) {
        if (a.p_ != b.p_ || a.q_ != b.q_ || a.dim_ != b.dim_)
            throw ShapeMismatch("adding tensors of different shape");
        Tensor out = a;
        for (const auto& [idx, val] : b.entries_) out.add_to(idx, val);
        return out;
    }

    friend Tensor operator-(const Tensor& a, const Tensor& b) { return a + b.scaled(Rational(-1)); }

    bool operator==(const Tensor&) const = default;

private:
    int p_;
    int q_;
    int dim_;
    std::map<Index, Rational> entries_;
};

/// Composition as linear maps: f : E^a -> E^b first, then g : E^b -> E^c.
/// Structure constants contract over the shared middle indices.
inline Tensor compose(const Tensor& f, const Tensor& g) {
    if (f.dim() != g.dim()) throw ShapeMismatch("composing tensors over different spaces");
    if (f.q() != g.p()) throw ShapeMismatch("composing maps with mismatched middle order");
    Tensor out(f.p(), g.q(), f.dim());

    // group g's entries by input part
    std::map<Index, std::vector<std::pair<Index, Rational>>> by_input;
    for (const auto& [idx, val] : g.entries()) {
        Index in(idx.begin(), idx.begin() + g.p());
        Index outpart(idx.begin() + g.p(), idx.end());
        by_input[std::move(in)].emplace_back(std::move(outpart), val);
    }

    for (const auto& [idx, val] : f.entries()) {
        const Index in(idx.begin(), idx.begin() + f.p());
        const Index mid(idx.begin() + f.p(), idx.end());
        auto it = by_input.find(mid);
        if (it == by_input.end()) continue;
        for (const auto& [outpart, gval] : it->second) {
            Index key = in;
            key.insert(key.end(), outpart.begin(), outpart.end());
            out.add_to(key, val * gval);
        }
    }
    return out;
}

/// Deterministic pseudo-random tensor with integer entries in [-bound, bound].
/// The same (p, q, dim, seed, bound) always produces the same tensor; the
/// generator is mt19937_64, which is fully specified by the standard.
inline Tensor random_tensor(int p, int q, int dim, std::uint64_t seed, int bound) {
    if (bound < 0) throw Error("random_tensor bound must be >= 0");
    Tensor t(p, q, dim);
    if (bound == 0) return t;
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    Index idx(static_cast<std::size_t>(p + q), 1);
    do {
        const auto r = static_cast<std::int64_t>(rng() % span) - bound;
        if (r != 0) t.set(idx, Rational(r));
    } while (detail::next_tuple(idx, dim));
    return t;
}

} // namespace hta
