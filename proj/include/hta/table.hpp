#pragma once

#include <map>

#include "hta/errors.hpp"
#include "hta/rational.hpp"
#include "hta/tensor.hpp"

namespace hta {

/// Structure-constant table of an abstract n-ary algebra mu : V^{tensor n} -> V
/// on a dim-dimensional space, mu(e_{i_1} x..x e_{i_n}) = sum_t c^t_{i_1..i_n} e_t.
/// Keys concatenate the input tuple with the output index: (i_1..i_n, t).
class NAryTable {
public:
    NAryTable(int n, int dim) : n_(n), dim_(dim) {
        if (n < 1 || dim < 1) throw ShapeMismatch("n-ary table needs n >= 1 and dim >= 1");
    }

    int n() const { return n_; }
    int dim() const { return dim_; }

    void set(const Index& key, const Rational& val) {
        detail::check_tuple(key, static_cast<std::size_t>(n_ + 1), dim_, "table entry");
        if (val.is_zero())
            constants_.erase(key);
        else
            constants_[key] = val;
    }

    void add_to(const Index& key, const Rational& val) {
        detail::check_tuple(key, static_cast<std::size_t>(n_ + 1), dim_, "table entry");
        if (val.is_zero()) return;
        auto [it, inserted] = constants_.try_emplace(key, val);
        if (!inserted) {
            it->second += val;
            if (it->second.is_zero()) constants_.erase(it);
        }
    }

    Rational constant(const Index& key) const {
        auto it = constants_.find(key);
        return it == constants_.end() ? Rational(0) : it->second;
    }

    const std::map<Index, Rational>& entries() const { return constants_; }

    bool is_zero() const { return constants_.empty(); }

    bool operator==(const NAryTable&) const = default;

private:
    int n_;
    int dim_;
    std::map<Index, Rational> constants_;
};

/// Views a type-(p,1) tensor as the table of a p-ary algebra on E.
/// For p = 2 this is the cubic-matrix reading of a bilinear map.
inline NAryTable tensor_to_table(const Tensor& t) {
    if (t.q() != 1) throw ShapeMismatch("only (p,1) tensors define an n-ary algebra table");
    NAryTable table(t.p(), t.dim());
    for (const auto& [idx, val] : t.entries()) table.set(idx, val);
    return table;
}

inline Tensor table_to_tensor(const NAryTable& table) {
    Tensor t(table.n(), 1, table.dim());
    for (const auto& [idx, val] : table.entries()) t.set(idx, val);
    return t;
}

} // namespace hta
