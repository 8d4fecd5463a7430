#pragma once

#include <array>
#include <span>
#include <vector>

#include "hta/errors.hpp"
#include "hta/permutation.hpp"
#include "hta/tensor.hpp"

namespace hta {

/// The involution s_k of Sigma_{2k+1} sending (1, 2, ..., 2k+1) to
/// (2k+1, 2k, ..., 1); s_1 is the transposition of slots 1 and 3.
inline Permutation chain_reversal(int k) {
    if (k < 1) throw Error("chain parameter k must be >= 1");
    return Permutation::reversal(2 * k + 1);
}

/// Basis-permuting action Phi_sigma(e_{i_1} x..x e_{i_n}) =
/// e_{i_{sigma^{-1}(1)}} x..x e_{i_{sigma^{-1}(n)}}, extended linearly.
inline MultiVector phi_sigma(const Permutation& sigma, const MultiVector& v) {
    if (sigma.degree() != v.arity()) throw ArityMismatch("phi_sigma degree != multivector arity");
    const Permutation inv = sigma.inverse();
    MultiVector out(v.arity(), v.dim());
    for (const auto& [idx, c] : v.terms()) {
        Index moved(idx.size());
        for (int t = 1; t <= v.arity(); ++t)
            moved[static_cast<std::size_t>(t - 1)] = idx[static_cast<std::size_t>(inv(t) - 1)];
        out.add(moved, c);
    }
    return out;
}

enum class Orientation {
    left_to_right,  ///< phi_1 . ~phi_2 . ... . phi_{2k+1}, rightmost applied first
    right_to_left,  ///< phi_{2k+1} . ~phi_{2k} . ... . phi_1, leftmost applied first
};

/// Description of one member of the (2k+1)-ary chain-product family:
/// chain parameter, chain orientation, and an optional per-argument
/// input-slot permutation applied before the argument enters the chain.
struct ProductSpec {
    int k = 1;
    Orientation orientation = Orientation::left_to_right;
    std::vector<Permutation> transpose_pattern; ///< empty means all-identity

    int arity() const { return 2 * k + 1; }

    static ProductSpec plain(int k, Orientation o = Orientation::left_to_right) {
        return ProductSpec{k, o, {}};
    }
};

/// The (2k+1)-ary chain product on T^p_q(E): arguments alternate with their
/// dual maps along the chain so every composition is well typed
/// (odd chain positions map E^p -> E^q, even positions are duals E^q -> E^p).
/// Degenerate tensors with p = 0 or q = 0 are rejected.
inline Tensor mu_chain(const ProductSpec& spec, std::span<const Tensor> args) {
    if (spec.k < 1) throw Error("chain parameter k must be >= 1");
    const int arity = spec.arity();
    if (static_cast<int>(args.size()) != arity)
        throw ArityMismatch("chain product expects " + std::to_string(arity) + " arguments");

    const int p = args[0].p(), q = args[0].q(), dim = args[0].dim();
    if (p < 1 || q < 1) throw ShapeMismatch("chain product needs p >= 1 and q >= 1");
    for (const Tensor& t : args)
        if (t.p() != p || t.q() != q || t.dim() != dim)
            throw ShapeMismatch("chain product arguments must share (p, q, dim)");

    if (!spec.transpose_pattern.empty()) {
        if (static_cast<int>(spec.transpose_pattern.size()) != arity)
            throw ArityMismatch("transpose pattern must list one permutation per argument");
        for (const Permutation& rho : spec.transpose_pattern)
            if (rho.degree() != p) throw ArityMismatch("transpose pattern entry has degree != p");
    }

    auto decorated = [&](int l) { // 1-based argument position
        const Tensor& t = args[static_cast<std::size_t>(l - 1)];
        if (spec.transpose_pattern.empty()) return t;
        const Permutation& rho = spec.transpose_pattern[static_cast<std::size_t>(l - 1)];
        return rho.is_identity() ? t : t.transpose_inputs(rho);
    };

    // Apply-first order of argument positions along the chain.
    std::vector<int> order(static_cast<std::size_t>(arity));
    for (int j = 0; j < arity; ++j)
        order[static_cast<std::size_t>(j)] = spec.orientation == Orientation::left_to_right ? arity - j : j + 1;

    Tensor acc = decorated(order[0]);
    for (std::size_t step = 1; step < order.size(); ++step) {
        const Tensor next = decorated(order[step]);
        acc = compose(acc, step % 2 == 1 ? next.dual() : next);
    }
    return acc;
}

inline Tensor mu_chain(const ProductSpec& spec, const std::vector<Tensor>& args) {
    return mu_chain(spec, std::span<const Tensor>(args));
}

/// The four named ternary products on T^2_1(E). mu chains left-to-right and
/// mu2 is its mirror. mu3 and mu4 carry the input swap on the chain's
/// output-side end (mu3 = ^t(phi_1) . ~phi_2 . phi_3, mu4 = ^t(phi_3) . ~phi_2 . phi_1);
/// these are the transpose decorations that keep the product
/// tau_13-totally associative. Placing the swap on the input-side end instead
/// breaks the law on generic arguments.
enum class TernaryVariant { mu, mu2, mu3, mu4 };

inline ProductSpec ternary_variant_spec(TernaryVariant which) {
    const Permutation swap = Permutation::transposition(2, 1, 2);
    const Permutation id = Permutation::identity(2);
    switch (which) {
    case TernaryVariant::mu: return ProductSpec::plain(1, Orientation::left_to_right);
    case TernaryVariant::mu2: return ProductSpec::plain(1, Orientation::right_to_left);
    case TernaryVariant::mu3: return ProductSpec{1, Orientation::left_to_right, {swap, id, id}};
    case TernaryVariant::mu4: return ProductSpec{1, Orientation::right_to_left, {id, id, swap}};
    }
    throw Error("unknown ternary variant");
}

inline Tensor mu3_variant(TernaryVariant which, const std::array<Tensor, 3>& args) {
    for (const Tensor& t : args)
        if (t.p() != 2 || t.q() != 1) throw ShapeMismatch("ternary variants act on (2,1) tensors");
    return mu_chain(ternary_variant_spec(which), std::span<const Tensor>(args.data(), args.size()));
}

/// Nesting descriptor for the quintuple products evaluated directly from the
/// summation formulas: ((1,2,3),4,5), (1,(a,b,c),5) with {a,b,c} = {2,3,4},
/// or (1,2,(3,4,5)).
struct NestedGrouping {
    enum class Position { left, middle, right };
    Position position;
    std::array<int, 3> middle_args{2, 3, 4}; // used only by Position::middle

    static NestedGrouping left() { return {Position::left, {0, 0, 0}}; }
    static NestedGrouping right() { return {Position::right, {0, 0, 0}}; }
    static NestedGrouping middle(int a, int b, int c) {
        for (int v : {a, b, c})
            if (v < 2 || v > 4) throw Error("middle grouping must nest arguments 2..4");
        if (a == b || a == c || b == c) throw Error("middle grouping arguments must be distinct");
        return {Position::middle, {a, b, c}};
    }
};

namespace detail {

/// Dense view of a (2,1) tensor: d[((i-1)m + (j-1))m + (k-1)] = C^k_{ij}.
inline std::vector<Rational> dense21(const Tensor& t) {
    const int m = t.dim();
    std::vector<Rational> d(static_cast<std::size_t>(m) * m * m);
    for (const auto& [idx, val] : t.entries()) {
        const auto i = static_cast<std::size_t>(idx[0] - 1);
        const auto j = static_cast<std::size_t>(idx[1] - 1);
        const auto k = static_cast<std::size_t>(idx[2] - 1);
        d[(i * m + j) * m + k] = val;
    }
    return d;
}

/// A^t_{ij}(a,b,c) = sum_{k,l,m} C^k_{ij}(c) C^k_{lm}(b) C^t_{lm}(a),
/// computed by direct summation.
inline std::vector<Rational> ternary_constants(std::span<const Rational> a, std::span<const Rational> b,
                                               std::span<const Rational> c, int m) {
    auto at = [m](std::span<const Rational> d, int i, int j, int k) -> const Rational& {
        return d[(static_cast<std::size_t>(i) * m + j) * m + k];
    };
    std::vector<Rational> out(static_cast<std::size_t>(m) * m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int t = 0; t < m; ++t) {
                Rational acc(0);
                for (int k = 0; k < m; ++k)
                    for (int l = 0; l < m; ++l)
                        for (int mm = 0; mm < m; ++mm)
                            acc += at(c, i, j, k) * at(b, l, mm, k) * at(a, l, mm, t);
                out[(static_cast<std::size_t>(i) * m + j) * m + t] = acc;
            }
    return out;
}

} // namespace detail

/// Evaluates the nested quintuple product of five (2,1) tensors by the
/// explicit structure-constant sums, independently of mu_chain and compose;
/// this is the oracle used to cross-check the chain machinery.
inline Tensor structure_constants_nested(const NestedGrouping& grouping, const std::array<Tensor, 5>& args) {
    const int m = args[0].dim();
    for (const Tensor& t : args)
        if (t.p() != 2 || t.q() != 1 || t.dim() != m)
            throw ShapeMismatch("nested structure constants need five (2,1) tensors over one space");

    std::array<std::vector<Rational>, 5> d;
    for (std::size_t l = 0; l < 5; ++l) d[l] = detail::dense21(args[l]);

    auto at = [m](std::span<const Rational> v, int i, int j, int k) -> const Rational& {
        return v[(static_cast<std::size_t>(i) * m + j) * m + k];
    };

    std::vector<Rational> result(static_cast<std::size_t>(m) * m * m);
    using Pos = NestedGrouping::Position;
    switch (grouping.position) {
    case Pos::left: {
        // B^t_{ij} = sum_{k,l,m} C^k_{ij}(5) C^k_{lm}(4) A^t_{lm}(1,2,3)
        const auto inner = detail::ternary_constants(d[0], d[1], d[2], m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int t = 0; t < m; ++t) {
                    Rational acc(0);
                    for (int k = 0; k < m; ++k)
                        for (int l = 0; l < m; ++l)
                            for (int mm = 0; mm < m; ++mm)
                                acc += at(d[4], i, j, k) * at(d[3], l, mm, k) * at(inner, l, mm, t);
                    result[(static_cast<std::size_t>(i) * m + j) * m + t] = acc;
                }
        break;
    }
    case Pos::middle: {
        // B^t_{ij} = sum_{k,l,m} C^k_{ij}(5) A^k_{lm}(a,b,c) C^t_{lm}(1)
        const auto& g = grouping.middle_args;
        const auto inner = detail::ternary_constants(d[static_cast<std::size_t>(g[0] - 1)],
                                                     d[static_cast<std::size_t>(g[1] - 1)],
                                                     d[static_cast<std::size_t>(g[2] - 1)], m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int t = 0; t < m; ++t) {
                    Rational acc(0);
                    for (int k = 0; k < m; ++k)
                        for (int l = 0; l < m; ++l)
                            for (int mm = 0; mm < m; ++mm)
                                acc += at(d[4], i, j, k) * at(inner, l, mm, k) * at(d[0], l, mm, t);
                    result[(static_cast<std::size_t>(i) * m + j) * m + t] = acc;
                }
        break;
    }
    case Pos::right: {
        // B^t_{ij} = sum_{u,r,s} A^u_{ij}(3,4,5) C^u_{rs}(2) C^t_{rs}(1)
        const auto inner = detail::ternary_constants(d[2], d[3], d[4], m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int t = 0; t < m; ++t) {
                    Rational acc(0);
                    for (int u = 0; u < m; ++u)
                        for (int r = 0; r < m; ++r)
                            for (int s = 0; s < m; ++s)
                                acc += at(inner, i, j, u) * at(d[1], r, s, u) * at(d[0], r, s, t);
                    result[(static_cast<std::size_t>(i) * m + j) * m + t] = acc;
                }
        break;
    }
    }

    Tensor out(2, 1, m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int t = 1; t <= m; ++t) {
                const Rational& v =
                    result[(static_cast<std::size_t>(i - 1) * m + (j - 1)) * m + (t - 1)];
                if (!v.is_zero()) out.set({i, j, t}, v);
            }
    return out;
}

} // namespace hta
