#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <vector>

#include "hta/errors.hpp"
#include "hta/linalg.hpp"
#include "hta/permutation.hpp"
#include "hta/rational.hpp"

namespace hta {

/// Planar rooted tree whose internal vertices all have exactly three
/// children; the basis shapes of the free ternary operad.
struct TreeShape {
    std::vector<TreeShape> kids; // empty = leaf, otherwise exactly 3

    bool is_leaf() const { return kids.empty(); }

    int leaves() const {
        if (is_leaf()) return 1;
        int s = 0;
        for (const TreeShape& k : kids) s += k.leaves();
        return s;
    }

    bool operator==(const TreeShape&) const = default;
};

namespace detail {

/// All planar ternary trees with n leaves (n odd), children enumerated by
/// descending leaf-count triples so the single inner vertex of an arity-5
/// tree sits at child 1, 2, 3 in that order.
inline std::vector<TreeShape> shapes_rec(int n) {
    if (n == 1) return {TreeShape{}};
    std::vector<TreeShape> out;
    for (int a = n - 2; a >= 1; a -= 2) {
        for (int b = n - 1 - a; b >= 1; b -= 2) {
            const int c = n - a - b;
            if (c < 1) continue;
            for (const TreeShape& sa : shapes_rec(a))
                for (const TreeShape& sb : shapes_rec(b))
                    for (const TreeShape& sc : shapes_rec(c)) out.push_back(TreeShape{{sa, sb, sc}});
        }
    }
    return out;
}

inline void require_lab_arity(int arity) {
    if (arity != 3 && arity != 5 && arity != 7)
        throw UnsupportedArity("free-operad lab supports arities 3, 5, 7");
}

} // namespace detail

/// Canonically ordered shapes of the given arity (1, 3 and 12 of them).
inline const std::vector<TreeShape>& enumerate_shapes(int arity) {
    detail::require_lab_arity(arity);
    static const std::vector<TreeShape> s3 = detail::shapes_rec(3);
    static const std::vector<TreeShape> s5 = detail::shapes_rec(5);
    static const std::vector<TreeShape> s7 = detail::shapes_rec(7);
    switch (arity) {
    case 3: return s3;
    case 5: return s5;
    default: return s7;
    }
}

inline int shape_index(int arity, const TreeShape& shape) {
    const auto& reg = enumerate_shapes(arity);
    for (std::size_t i = 0; i < reg.size(); ++i)
        if (reg[i] == shape) return static_cast<int>(i);
    throw Error("shape not found in canonical registry");
}

/// Basis element of the free operad component: a shape together with the
/// input labels carried by its leaves, left to right. A term with labels
/// (l_1,...,l_n) is base_shape . pi for the permutation pi with
/// pi^{-1}(slot) = l_slot, so structural equality is term equality.
struct TreeTerm {
    int arity;
    int shape;               // index into enumerate_shapes(arity)
    std::vector<int> labels; // labels[slot-1] = input label at leaf slot

    auto operator<=>(const TreeTerm&) const = default;
};

inline TreeTerm generator_term() { return TreeTerm{3, 0, {1, 2, 3}}; }

inline std::int64_t term_count(int arity) {
    return static_cast<std::int64_t>(enumerate_shapes(arity).size()) * factorial(arity);
}

inline std::int64_t term_index(const TreeTerm& t) {
    return t.shape * factorial(t.arity) + perm_rank(t.labels);
}

inline TreeTerm term_at(int arity, std::int64_t index) {
    const std::int64_t f = factorial(arity);
    return TreeTerm{arity, static_cast<int>(index / f), perm_unrank(arity, index % f)};
}

/// Right action of sigma on one term: labels become sigma^{-1} o labels.
inline TreeTerm act_term(const TreeTerm& t, const Permutation& sigma) {
    if (sigma.degree() != t.arity) throw ArityMismatch("action degree != term arity");
    const Permutation inv = sigma.inverse();
    TreeTerm out = t;
    for (auto& l : out.labels) l = inv(l);
    return out;
}

/// Operadic partial composition f o_i g: grafts g into the leaf of f that
/// carries label i, then relabels by the standard block convention (g's
/// labels occupy {i..i+|g|-1}, f's labels above i shift up by |g|-1).
inline TreeTerm compose_terms(const TreeTerm& f, int slot, const TreeTerm& g) {
    if (slot < 1 || slot > f.arity) throw SlotOutOfRange("composition slot outside 1..arity");
    const int a = f.arity, b = g.arity;
    if ((a != 3 && a != 5) || (b != 3 && b != 5) || (a + b - 1 != 5 && a + b - 1 != 7))
        throw UnsupportedArity("composition must land in arity 5 or 7");

    const auto it = std::find(f.labels.begin(), f.labels.end(), slot);
    const int graft_slot = static_cast<int>(it - f.labels.begin()) + 1;

    // graft g's shape into the graft_slot-th leaf of f's shape
    const TreeShape& fs = enumerate_shapes(a)[static_cast<std::size_t>(f.shape)];
    const TreeShape& gs = enumerate_shapes(b)[static_cast<std::size_t>(g.shape)];
    int seen = 0;
    auto graft = [&](auto&& self, const TreeShape& s) -> TreeShape {
        if (s.is_leaf()) {
            ++seen;
            return seen == graft_slot ? gs : s;
        }
        TreeShape out;
        out.kids.reserve(3);
        for (const TreeShape& k : s.kids) out.kids.push_back(self(self, k));
        return out;
    };
    const TreeShape grafted = graft(graft, fs);

    auto shifted = [&](int label) { return label < slot ? label : label + b - 1; };
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(a + b - 1));
    for (int s = 1; s < graft_slot; ++s) labels.push_back(shifted(f.labels[static_cast<std::size_t>(s - 1)]));
    for (int m = 1; m <= b; ++m) labels.push_back(slot - 1 + g.labels[static_cast<std::size_t>(m - 1)]);
    for (int s = graft_slot + 1; s <= a; ++s) labels.push_back(shifted(f.labels[static_cast<std::size_t>(s - 1)]));

    const int arity = a + b - 1;
    return TreeTerm{arity, shape_index(arity, grafted), std::move(labels)};
}

/// Sparse rational span of tree terms in one arity component.
class OperadVector {
public:
    explicit OperadVector(int arity) : arity_(arity) { detail::require_lab_arity(arity); }

    int arity() const { return arity_; }

    void add_term(const TreeTerm& t, const Rational& c) {
        if (t.arity != arity_) throw ArityMismatch("term arity != vector arity");
        if (c.is_zero()) return;
        auto [it, inserted] = coeff_.try_emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeff_.erase(it);
        }
    }

    Rational coefficient(const TreeTerm& t) const {
        auto it = coeff_.find(t);
        return it == coeff_.end() ? Rational(0) : it->second;
    }

    const std::map<TreeTerm, Rational>& terms() const { return coeff_; }

    bool is_zero() const { return coeff_.empty(); }

    OperadVector scaled(const Rational& c) const {
        OperadVector out(arity_);
        if (c.is_zero()) return out;
        for (const auto& [t, v] : coeff_) out.coeff_.emplace(t, v * c);
        return out;
    }

    friend OperadVector operator+(const OperadVector& x, const OperadVector& y) {
        if (x.arity_ != y.arity_) throw ArityMismatch("adding vectors of different arity");
        OperadVector out = x;
        for (const auto& [t, v] : y.coeff_) out.add_term(t, v);
        return out;
    }

    friend OperadVector operator-(const OperadVector& x, const OperadVector& y) {
        return x + y.scaled(Rational(-1));
    }

    bool operator==(const OperadVector&) const = default;

private:
    int arity_;
    std::map<TreeTerm, Rational> coeff_;
};

/// Right symmetric-group action (f . sigma), extended linearly.
inline OperadVector sigma_action(const OperadVector& v, const Permutation& sigma) {
    if (sigma.degree() != v.arity()) throw ArityMismatch("action degree != vector arity");
    OperadVector out(v.arity());
    for (const auto& [t, c] : v.terms()) out.add_term(act_term(t, sigma), c);
    return out;
}

/// The two arity-5 relations of the tau_13-totally associative operad:
/// r1 = mu o1 mu - mu o2 (mu . tau_13), r2 = mu o1 mu - mu o3 mu.
inline std::pair<OperadVector, OperadVector> relation_vectors() {
    const TreeTerm mu = generator_term();
    const TreeTerm mu_t13 = act_term(mu, Permutation::transposition(3, 1, 3));
    OperadVector r1(5), r2(5);
    r1.add_term(compose_terms(mu, 1, mu), Rational(1));
    r1.add_term(compose_terms(mu, 2, mu_t13), Rational(-1));
    r2.add_term(compose_terms(mu, 1, mu), Rational(1));
    r2.add_term(compose_terms(mu, 3, mu), Rational(-1));
    return {r1, r2};
}

/// The degree-1 partial-associativity vector whose Sigma_5-closure spans the
/// annihilator: a o1 a - a o2 (a . tau_13) + a o3 a on the alpha-side basis.
inline OperadVector partial_relation_vector() {
    const TreeTerm mu = generator_term();
    const TreeTerm mu_t13 = act_term(mu, Permutation::transposition(3, 1, 3));
    OperadVector p(5);
    p.add_term(compose_terms(mu, 1, mu), Rational(1));
    p.add_term(compose_terms(mu, 2, mu_t13), Rational(-1));
    p.add_term(compose_terms(mu, 3, mu), Rational(1));
    return p;
}

inline linalg::SparseVec to_sparse(const OperadVector& v) {
    std::map<int, Rational> m;
    for (const auto& [t, c] : v.terms()) m[static_cast<int>(term_index(t))] = c;
    return linalg::sparse_from_map(m);
}

inline OperadVector from_sparse(int arity, const linalg::SparseVec& v) {
    OperadVector out(arity);
    for (const auto& [i, c] : v) out.add_term(term_at(arity, i), c);
    return out;
}

/// Span of relation vectors inside one arity component, with a cached
/// row-reduced form for rank and membership queries.
class RelationSpace {
public:
    RelationSpace(int arity, std::vector<OperadVector> spanning)
        : arity_(arity), spanning_(std::move(spanning)) {
        detail::require_lab_arity(arity_);
        for (const OperadVector& v : spanning_) elim_.insert(to_sparse(v));
    }

    RelationSpace(int arity, std::vector<OperadVector> spanning, linalg::SparseEliminator closed)
        : arity_(arity), spanning_(std::move(spanning)), elim_(std::move(closed)) {}

    int arity() const { return arity_; }
    std::int64_t ambient_dim() const { return term_count(arity_); }
    int rank() const { return elim_.rank(); }

    bool contains(const OperadVector& v) const {
        if (v.arity() != arity_) throw ArityMismatch("membership test in wrong arity");
        return elim_.contains(to_sparse(v));
    }

    const std::vector<OperadVector>& spanning() const { return spanning_; }
    const linalg::SparseEliminator& eliminator() const { return elim_; }

private:
    int arity_;
    std::vector<OperadVector> spanning_;
    linalg::SparseEliminator elim_;
};

inline std::int64_t free_dim(int arity) { return term_count(arity); }

namespace detail {

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(factorial(n)));
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

/// term-index table of the right action of the adjacent transposition
/// (j, j+1): swapping the two values in every label tuple.
inline std::vector<std::int32_t> adjacent_action_table(int arity, int j) {
    const std::int64_t n = term_count(arity);
    std::vector<std::int32_t> out(static_cast<std::size_t>(n));
    const std::int64_t f = factorial(arity);
    for (std::int64_t idx = 0; idx < n; ++idx) {
        auto labels = perm_unrank(arity, idx % f);
        for (auto& l : labels) {
            if (l == j)
                l = j + 1;
            else if (l == j + 1)
                l = j;
        }
        out[static_cast<std::size_t>(idx)] =
            static_cast<std::int32_t>((idx / f) * f + perm_rank(labels));
    }
    return out;
}

} // namespace detail

/// The arity component of the operadic ideal generated by the
/// Sigma_5-closure of {r1, r2}. At arity 5 this is the closure itself; at
/// arity 7 every placement of a relation against one extra generator is
/// enumerated and the span is closed under Sigma_7 (adjacent transpositions,
/// fixpoint iteration on the rank).
inline RelationSpace ideal_component(int arity) {
    if (arity != 5 && arity != 7) throw UnsupportedArity("ideal lives in arities 5 and 7");
    const auto [r1, r2] = relation_vectors();

    if (arity == 5) {
        std::vector<OperadVector> vecs;
        vecs.reserve(240);
        for (const Permutation& sigma : detail::all_permutations(5)) {
            vecs.push_back(sigma_action(r1, sigma));
            vecs.push_back(sigma_action(r2, sigma));
        }
        return RelationSpace(5, std::move(vecs));
    }

    const TreeTerm mu = generator_term();
    std::vector<OperadVector> seeds;
    for (const OperadVector* r : {&r1, &r2}) {
        for (int i = 1; i <= 5; ++i) {
            OperadVector v(7);
            for (const auto& [t, c] : r->terms()) v.add_term(compose_terms(t, i, mu), c);
            seeds.push_back(std::move(v));
        }
        for (int j = 1; j <= 3; ++j) {
            OperadVector v(7);
            for (const auto& [t, c] : r->terms()) v.add_term(compose_terms(mu, j, t), c);
            seeds.push_back(std::move(v));
        }
    }

    std::vector<std::vector<std::int32_t>> action;
    action.reserve(6);
    for (int j = 1; j <= 6; ++j) action.push_back(detail::adjacent_action_table(7, j));

    auto permuted = [](const linalg::SparseVec& v, const std::vector<std::int32_t>& table) {
        std::map<int, Rational> m;
        for (const auto& [i, c] : v) m[table[static_cast<std::size_t>(i)]] = c;
        return linalg::sparse_from_map(m);
    };

    linalg::SparseEliminator elim;
    std::deque<linalg::SparseVec> work;
    for (const OperadVector& s : seeds) work.push_back(to_sparse(s));
    while (!work.empty()) {
        linalg::SparseVec v = std::move(work.front());
        work.pop_front();
        if (!elim.insert(std::move(v))) continue;
        const linalg::SparseVec& row = elim.rows().back();
        for (const auto& table : action) work.push_back(permuted(row, table));
    }
    return RelationSpace(7, std::move(seeds), std::move(elim));
}

inline std::int64_t quotient_dim(int arity) {
    detail::require_lab_arity(arity);
    if (arity == 3) return free_dim(3); // no relations below arity 5
    return free_dim(arity) - ideal_component(arity).rank();
}

namespace detail {

inline const std::vector<int>& pairing_signs5() {
    static const std::vector<int> signs = [] {
        const std::int64_t n = term_count(5);
        std::vector<int> s(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i)
            s[static_cast<std::size_t>(i)] = Permutation(term_at(5, i).labels).sign();
        return s;
    }();
    return signs;
}

} // namespace detail

/// Signed pairing between the arity-5 components generated by mu and by the
/// degree-1 dual generator: <(mu o_i mu).sigma, (a o_j a).rho> =
/// delta_ij delta_{sigma rho} sgn(sigma), extended bilinearly. The sign is
/// exactly the one used in the dual-operad computation; no general graded
/// suspension bookkeeping is modeled.
inline Rational pairing(const OperadVector& x, const OperadVector& y) {
    if (x.arity() != 5 || y.arity() != 5) throw ArityMismatch("pairing is defined at arity 5");
    Rational acc(0);
    for (const auto& [t, cx] : x.terms()) {
        const Rational cy = y.coefficient(t);
        if (cy.is_zero()) continue;
        acc += cx * cy * Permutation(t.labels).sign();
    }
    return acc;
}

/// Annihilator R-perp = { y : <x, y> = 0 for all x in R } of an arity-5
/// relation space, computed as the exact kernel of the sign-scaled row space.
inline RelationSpace annihilator(const RelationSpace& R) {
    if (R.arity() != 5) throw ArityMismatch("annihilator is computed at arity 5");
    const auto& signs = detail::pairing_signs5();

    std::vector<linalg::SparseVec> scaled;
    scaled.reserve(R.eliminator().rows().size());
    for (const auto& row : R.eliminator().rows()) {
        linalg::SparseVec s = row;
        for (auto& [i, c] : s)
            if (signs[static_cast<std::size_t>(i)] < 0) c = -c;
        scaled.push_back(std::move(s));
    }

    const auto rref = linalg::rref_of(scaled);
    const auto kernel = linalg::kernel_basis(rref, static_cast<int>(term_count(5)));

    std::vector<OperadVector> basis;
    basis.reserve(kernel.size());
    for (const auto& v : kernel) basis.push_back(from_sparse(5, v));
    return RelationSpace(5, std::move(basis));
}

struct OperadDims {
    int arity;
    std::int64_t free_dim;
    std::int64_t ideal_rank;
    std::int64_t quotient_dim;
};

inline OperadDims operad_dims(int arity) {
    detail::require_lab_arity(arity);
    if (arity == 3) return {3, free_dim(3), 0, free_dim(3)};
    const std::int64_t rank = ideal_component(arity).rank();
    return {arity, free_dim(arity), rank, free_dim(arity) - rank};
}

struct DualOperadSummary {
    int perp_dim;
    bool matches_partial_closure;
};

/// Computes R-perp of the arity-5 ideal and decides, by exact rank and
/// double-inclusion arguments, whether it equals the Sigma_5-closure of the
/// single partial-associativity vector.
inline DualOperadSummary dual_operad_summary() {
    const RelationSpace R = ideal_component(5);
    const RelationSpace perp = annihilator(R);

    std::vector<OperadVector> closure;
    closure.reserve(120);
    const OperadVector p = partial_relation_vector();
    for (const Permutation& sigma : detail::all_permutations(5)) closure.push_back(sigma_action(p, sigma));
    const RelationSpace closure_space(5, closure);

    bool matches = closure_space.rank() == perp.rank();
    if (matches)
        for (const OperadVector& v : closure)
            if (!perp.contains(v)) {
                matches = false;
                break;
            }
    if (matches)
        for (const OperadVector& v : perp.spanning())
            if (!closure_space.contains(v)) {
                matches = false;
                break;
            }
    return DualOperadSummary{perp.rank(), matches};
}

} // namespace hta
