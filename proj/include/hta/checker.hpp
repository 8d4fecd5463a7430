#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hta/errors.hpp"
#include "hta/permutation.hpp"
#include "hta/table.hpp"

namespace hta {

/// Verdict of an associativity-law check. When the law fails, the report
/// carries the lexicographically first violating basis input of arity 2n-1
/// together with the coefficient vectors of both sides there. For the
/// total-type laws `position` records which nesting p (1..n-1) disagreed
/// with the left-nested side; the alternating-sum laws compare the signed
/// sum (lhs) against zero (rhs).
struct LawReport {
    bool holds = true;
    std::string law;
    std::optional<Permutation> sigma;
    std::optional<int> position;
    std::optional<Index> violating_input;
    std::vector<Rational> lhs;
    std::vector<Rational> rhs;
};

namespace detail {

/// Dense cache of an n-ary table: c[flat(inputs) * dim + (t-1)].
struct DenseTable {
    int n;
    int dim;
    std::vector<Rational> c;

    explicit DenseTable(const NAryTable& table) : n(table.n()), dim(table.dim()) {
        std::size_t cells = static_cast<std::size_t>(dim);
        for (int i = 0; i < n; ++i) cells *= static_cast<std::size_t>(dim);
        c.assign(cells, Rational(0));
        for (const auto& [key, val] : table.entries()) {
            std::size_t flat = 0;
            for (int i = 0; i < n; ++i) flat = flat * dim + static_cast<std::size_t>(key[static_cast<std::size_t>(i)] - 1);
            c[flat * dim + static_cast<std::size_t>(key[static_cast<std::size_t>(n)] - 1)] = val;
        }
    }

    /// Coefficient vector of mu(e_{x_1},...,e_{x_n}) for a dense input slice.
    std::size_t flat_of(const int* x) const {
        std::size_t flat = 0;
        for (int i = 0; i < n; ++i) flat = flat * dim + static_cast<std::size_t>(x[i] - 1);
        return flat * static_cast<std::size_t>(dim);
    }
};

/// Coefficients of mu(x_1,..,x_p, (mu . Phi_{tw})(x_{p+1}..x_{p+n}), x_{p+n+1}..)
/// at the basis input x of arity 2n-1.
inline std::vector<Rational> eval_nesting(const DenseTable& dt, const Index& x, int p, const Permutation& tw) {
    const int n = dt.n;
    const int dim = dt.dim;
    std::vector<int> block(static_cast<std::size_t>(n));
    const Permutation inv = tw.inverse();
    for (int t = 1; t <= n; ++t)
        block[static_cast<std::size_t>(t - 1)] = x[static_cast<std::size_t>(p + inv(t) - 1)];

    const std::size_t inner = dt.flat_of(block.data());

    std::vector<int> outer(static_cast<std::size_t>(n));
    for (int i = 0; i < p; ++i) outer[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
    for (int i = p + 1; i < n; ++i) outer[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i + n - 1)];

    std::vector<Rational> out(static_cast<std::size_t>(dim), Rational(0));
    for (int s = 1; s <= dim; ++s) {
        const Rational& cs = dt.c[inner + static_cast<std::size_t>(s - 1)];
        if (cs.is_zero()) continue;
        outer[static_cast<std::size_t>(p)] = s;
        const std::size_t of = dt.flat_of(outer.data());
        for (int t = 0; t < dim; ++t) {
            const Rational& ct = dt.c[of + static_cast<std::size_t>(t)];
            if (!ct.is_zero()) out[static_cast<std::size_t>(t)] += cs * ct;
        }
    }
    return out;
}

inline bool all_zero(const std::vector<Rational>& v) {
    for (const auto& r : v)
        if (!r.is_zero()) return false;
    return true;
}

inline LawReport check_total_law(const NAryTable& table, const Permutation& sigma, std::string law,
                                 bool record_sigma) {
    if (sigma.degree() != table.n()) throw ArityMismatch("sigma degree != table arity");
    const int n = table.n();
    const DenseTable dt(table);

    std::vector<Permutation> powers;
    powers.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) powers.push_back(sigma.pow(p));

    LawReport report;
    report.law = std::move(law);
    if (record_sigma) report.sigma = sigma;

    Index x(static_cast<std::size_t>(2 * n - 1), 1);
    do {
        const auto lhs = eval_nesting(dt, x, 0, powers[0]);
        for (int p = 1; p < n; ++p) {
            const auto rhs = eval_nesting(dt, x, p, powers[static_cast<std::size_t>(p)]);
            if (rhs != lhs) {
                report.holds = false;
                report.position = p;
                report.violating_input = x;
                report.lhs = lhs;
                report.rhs = rhs;
                return report;
            }
        }
    } while (detail::next_tuple(x, table.dim()));
    return report;
}

inline LawReport check_partial_law(const NAryTable& table, const Permutation& sigma, std::string law,
                                   bool record_sigma) {
    if (sigma.degree() != table.n()) throw ArityMismatch("sigma degree != table arity");
    const int n = table.n();
    const int eps = sigma.parity();
    const DenseTable dt(table);

    std::vector<Permutation> powers;
    std::vector<int> signs;
    for (int p = 0; p < n; ++p) {
        powers.push_back(sigma.pow(p));
        const int s = (p * (n - 1)) % 2 == 0 ? 1 : -1;
        const int se = (p * eps) % 2 == 0 ? 1 : -1;
        signs.push_back(s * se);
    }

    LawReport report;
    report.law = std::move(law);
    if (record_sigma) report.sigma = sigma;

    Index x(static_cast<std::size_t>(2 * n - 1), 1);
    do {
        std::vector<Rational> acc(static_cast<std::size_t>(table.dim()), Rational(0));
        for (int p = 0; p < n; ++p) {
            const auto term = eval_nesting(dt, x, p, powers[static_cast<std::size_t>(p)]);
            for (std::size_t t = 0; t < acc.size(); ++t)
                acc[t] += signs[static_cast<std::size_t>(p)] > 0 ? term[t] : -term[t];
        }
        if (!all_zero(acc)) {
            report.holds = false;
            report.violating_input = x;
            report.lhs = acc;
            report.rhs.assign(static_cast<std::size_t>(table.dim()), Rational(0));
            return report;
        }
    } while (detail::next_tuple(x, table.dim()));
    return report;
}

} // namespace detail

/// Total associativity: all single nestings of mu in itself agree, checked
/// exhaustively over the dim^(2n-1) basis inputs.
inline LawReport check_total(const NAryTable& table) {
    return detail::check_total_law(table, Permutation::identity(table.n()), "total", false);
}

/// Partial associativity: the (-1)^{p(n-1)}-weighted sum of all nestings
/// vanishes on every basis input.
inline LawReport check_partial(const NAryTable& table) {
    return detail::check_partial_law(table, Permutation::identity(table.n()), "partial", false);
}

/// sigma-total associativity: the inner factor at nesting position p is
/// precomposed with Phi_{sigma^p}.
inline LawReport check_sigma_total(const NAryTable& table, const Permutation& sigma) {
    return detail::check_total_law(table, sigma, "sigma-total", true);
}

/// sigma-partial associativity, with the extra sign (-1)^{p eps(sigma)}
/// where eps is the parity (0 or 1) of sigma.
inline LawReport check_sigma_partial(const NAryTable& table, const Permutation& sigma) {
    return detail::check_partial_law(table, sigma, "sigma-partial", true);
}

/// True iff mu o_i mu = 0 for every insertion slot i (2-step nilpotency).
inline bool check_nilpotent2(const NAryTable& table) {
    const int n = table.n();
    const detail::DenseTable dt(table);
    const Permutation id = Permutation::identity(n);
    Index x(static_cast<std::size_t>(2 * n - 1), 1);
    do {
        for (int p = 0; p < n; ++p)
            if (!detail::all_zero(detail::eval_nesting(dt, x, p, id))) return false;
    } while (detail::next_tuple(x, table.dim()));
    return true;
}

} // namespace hta
