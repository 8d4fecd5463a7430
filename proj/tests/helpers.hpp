#pragma once

#include <vector>

#include "hta/hta.hpp"

namespace hta::testing {

inline std::vector<Index> all_tuples(int len, int dim) {
    std::vector<Index> out;
    Index idx(static_cast<std::size_t>(len), 1);
    do {
        out.push_back(idx);
    } while (detail::next_tuple(idx, dim));
    return out;
}

/// Abstract structure-constant table of the chain product as a (2k+1)-ary
/// algebra on the m^(p+q)-dimensional space T^p_q(E); for (p,q) = (2,1) this
/// is the cubic/hypercubic-matrix product table.
inline NAryTable chain_product_table(const ProductSpec& spec, int p, int q, int dim) {
    const auto basis = all_tuples(p + q, dim);
    const int n = static_cast<int>(basis.size());
    const int arity = spec.arity();

    NAryTable table(arity, n);
    std::vector<Tensor> args;
    std::vector<int> pick(static_cast<std::size_t>(arity), 1);
    do {
        args.clear();
        for (int a : pick) {
            Tensor t(p, q, dim);
            t.set(basis[static_cast<std::size_t>(a - 1)], Rational(1));
            args.push_back(std::move(t));
        }
        const Tensor prod = mu_chain(spec, args);
        for (const auto& [key, val] : prod.entries()) {
            int d = 0;
            while (basis[static_cast<std::size_t>(d)] != key) ++d;
            Index tkey(pick.begin(), pick.end());
            tkey.push_back(d + 1);
            table.add_to(tkey, val);
        }
    } while (detail::next_tuple(pick, n));
    return table;
}

inline NAryTable random_table(int n, int dim, std::uint64_t seed, int bound) {
    return tensor_to_table(random_tensor(n, 1, dim, seed, bound));
}

/// Diagonal n-ary product mu(e_i,...,e_i) = e_i (pointwise product on K^dim);
/// commutative, hence sigma-totally associative for every sigma, with a
/// nonzero left-nested composition.
inline NAryTable pointwise_table(int n, int dim) {
    NAryTable t(n, dim);
    for (int i = 1; i <= dim; ++i) {
        Index key(static_cast<std::size_t>(n + 1), i);
        t.set(key, Rational(1));
    }
    return t;
}

/// Binary table of the 2x2-matrix-unit algebra E_ij E_kl = delta_jk E_il
/// on the 4-dimensional space, basis order E11, E12, E21, E22.
inline NAryTable matrix_units_table() {
    NAryTable t(2, 4);
    auto id_of = [](int i, int j) { return (i - 1) * 2 + j; };
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    if (j == k) t.set({id_of(i, j), id_of(k, l), id_of(i, l)}, Rational(1));
    return t;
}

/// Ternary table mu(x,y,z) = (x.y).z of a binary table.
inline NAryTable triple_from_binary(const NAryTable& bin) {
    const int m = bin.dim();
    NAryTable t(3, m);
    for (int x = 1; x <= m; ++x)
        for (int y = 1; y <= m; ++y)
            for (int z = 1; z <= m; ++z)
                for (int s = 1; s <= m; ++s) {
                    const Rational c1 = bin.constant({x, y, s});
                    if (c1.is_zero()) continue;
                    for (int u = 1; u <= m; ++u) {
                        const Rational c2 = bin.constant({s, z, u});
                        if (!c2.is_zero()) t.add_to({x, y, z, u}, c1 * c2);
                    }
                }
    return t;
}

/// Independent evaluation of mu(x_1..x_p, (mu o Phi_{sigma^p})(block), rest)
/// through MultiVector / phi_sigma / Tensor::apply, used as an oracle for
/// the checker's dense enumeration path.
inline std::vector<Rational> nesting_oracle(const NAryTable& table, const Index& input, int p,
                                            const Permutation& sigma_pow) {
    const int n = table.n();
    const int dim = table.dim();
    const Tensor op = table_to_tensor(table);

    const Index block(input.begin() + p, input.begin() + p + n);
    const MultiVector permuted = phi_sigma(sigma_pow, MultiVector::basis(dim, block));
    const MultiVector inner = op.apply(permuted);

    MultiVector outer_arg(n, dim);
    for (const auto& [idx, c] : inner.terms()) {
        Index full(input.begin(), input.begin() + p);
        full.push_back(idx[0]);
        full.insert(full.end(), input.begin() + p + n, input.end());
        outer_arg.add(full, c);
    }
    const MultiVector result = op.apply(outer_arg);

    std::vector<Rational> coeffs(static_cast<std::size_t>(dim), Rational(0));
    for (const auto& [idx, c] : result.terms()) coeffs[static_cast<std::size_t>(idx[0] - 1)] = c;
    return coeffs;
}

} // namespace hta::testing
