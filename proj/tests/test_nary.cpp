#include <array>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "hta/nary.hpp"

using namespace hta;

namespace {

std::vector<Tensor> rand_args(int count, int p, int q, int dim, std::uint64_t seed0, int bound = 9) {
    std::vector<Tensor> out;
    for (int i = 0; i < count; ++i) out.push_back(random_tensor(p, q, dim, seed0 + i, bound));
    return out;
}

} // namespace

TEST_CASE("phi_sigma on basis vectors") {
    const MultiVector v = MultiVector::basis(3, {1, 2, 3});
    CHECK(phi_sigma(Permutation::identity(3), v) == v);

    const MultiVector w = phi_sigma(Permutation::transposition(3, 1, 2), v);
    CHECK(w.coefficient({2, 1, 3}) == Rational(1));
    CHECK(w.terms().size() == 1);

    CHECK_THROWS_AS(phi_sigma(Permutation::identity(2), v), ArityMismatch);
}

TEST_CASE("phi_sigma is a left action, exhaustively at dim 2, n 3") {
    std::vector<Permutation> sigma3;
    std::vector<int> img{1, 2, 3};
    do {
        sigma3.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));

    for (const Permutation& s : sigma3)
        for (const Permutation& t : sigma3)
            for (const Index& idx : testing::all_tuples(3, 2)) {
                const MultiVector v = MultiVector::basis(2, idx);
                CHECK(phi_sigma(s * t, v) == phi_sigma(s, phi_sigma(t, v)));
            }
}

TEST_CASE("phi_sigma is linear") {
    MultiVector v(3, 2);
    v.add({1, 2, 1}, Rational(2, 3));
    v.add({2, 2, 2}, Rational(-5));
    MultiVector w(3, 2);
    w.add({1, 1, 2}, Rational(7, 2));
    const Permutation s({2, 3, 1});
    CHECK(phi_sigma(s, v + w) == phi_sigma(s, v) + phi_sigma(s, w));
    CHECK(phi_sigma(s, v.scaled(Rational(3, 7))) == phi_sigma(s, v).scaled(Rational(3, 7)));
}

TEST_CASE("mu_chain on (1,1) tensors is A . B^T . C") {
    const ProductSpec spec = ProductSpec::plain(1);
    for (std::uint64_t seed : {10u, 20u, 30u}) {
        const auto args = rand_args(3, 1, 1, 2, seed);

        // independent dense 2x2 matrix oracle; M[j][i] = C^j_i
        auto mat = [](const Tensor& t) {
            std::array<std::array<Rational, 2>, 2> m{};
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j) m[j - 1][i - 1] = t.entry({i, j});
            return m;
        };
        auto mul = [](const auto& a, const auto& b) {
            std::array<std::array<Rational, 2>, 2> m{};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) m[i][j] += a[i][k] * b[k][j];
            return m;
        };
        auto tr = [](const auto& a) {
            auto m = a;
            std::swap(m[0][1], m[1][0]);
            return m;
        };

        const auto expected = mul(mul(mat(args[0]), tr(mat(args[1]))), mat(args[2]));
        const Tensor got = mu_chain(spec, args);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) CHECK(got.entry({i, j}) == expected[j - 1][i - 1]);
    }
}

TEST_CASE("mu_chain at dim 1 multiplies the scalar entries") {
    for (int k : {1, 2, 3}) {
        const int arity = 2 * k + 1;
        std::vector<Tensor> args;
        Rational prod(1);
        for (int i = 0; i < arity; ++i) {
            Tensor t(2, 1, 1);
            const Rational c(i + 2, 3);
            t.set({1, 1, 1}, c);
            prod *= c;
            args.push_back(std::move(t));
        }
        for (auto o : {Orientation::left_to_right, Orientation::right_to_left})
            CHECK(mu_chain(ProductSpec::plain(k, o), args).entry({1, 1, 1}) == prod);
    }
}

TEST_CASE("mu_chain (2,1) k=1 matches the closed structure-constant formula") {
    const auto args = rand_args(3, 2, 1, 2, 100);
    const Tensor got = mu_chain(ProductSpec::plain(1), args);
    // A^t_ij = sum_{k,l,m} C^k_ij(3) C^k_lm(2) C^t_lm(1)
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int t = 1; t <= 2; ++t) {
                Rational acc(0);
                for (int k = 1; k <= 2; ++k)
                    for (int l = 1; l <= 2; ++l)
                        for (int m = 1; m <= 2; ++m)
                            acc += args[2].entry({i, j, k}) * args[1].entry({l, m, k}) *
                                   args[0].entry({l, m, t});
                CHECK(got.entry({i, j, t}) == acc);
            }
}

TEST_CASE("mu_chain validates its inputs") {
    const auto args3 = rand_args(3, 2, 1, 2, 200);
    CHECK_THROWS_AS(mu_chain(ProductSpec::plain(2), args3), ArityMismatch);

    auto mixed = args3;
    mixed[1] = random_tensor(2, 1, 3, 5, 5);
    CHECK_THROWS_AS(mu_chain(ProductSpec::plain(1), mixed), ShapeMismatch);

    auto degenerate = rand_args(3, 2, 0, 2, 7);
    // p or q of 0 is constructible but the chain product rejects it
    CHECK_THROWS_AS(mu_chain(ProductSpec::plain(1), degenerate), ShapeMismatch);

    ProductSpec bad_pattern = ProductSpec::plain(1);
    bad_pattern.transpose_pattern = {Permutation::identity(3), Permutation::identity(3),
                                     Permutation::identity(3)};
    CHECK_THROWS_AS(mu_chain(bad_pattern, args3), ArityMismatch);

    ProductSpec short_pattern = ProductSpec::plain(1);
    short_pattern.transpose_pattern = {Permutation::identity(2)};
    CHECK_THROWS_AS(mu_chain(short_pattern, args3), ArityMismatch);
}

TEST_CASE("right-to-left orientation is the mirror of left-to-right") {
    for (int k : {1, 2}) {
        const auto args = rand_args(2 * k + 1, 2, 1, 2, 300 + static_cast<unsigned>(k));
        auto reversed = args;
        std::reverse(reversed.begin(), reversed.end());
        CHECK(mu_chain(ProductSpec::plain(k, Orientation::right_to_left), args) ==
              mu_chain(ProductSpec::plain(k, Orientation::left_to_right), reversed));
    }
}

TEST_CASE("ternary variants") {
    const auto v = rand_args(3, 2, 1, 2, 400);
    const std::array<Tensor, 3> args{v[0], v[1], v[2]};

    SECTION("mu2 is mu with reversed arguments") {
        const std::array<Tensor, 3> rev{v[2], v[1], v[0]};
        CHECK(mu3_variant(TernaryVariant::mu2, args) == mu3_variant(TernaryVariant::mu, rev));
    }

    SECTION("variants are the expected composition chains") {
        const Permutation swap = Permutation::transposition(2, 1, 2);
        const Tensor mu = compose(compose(v[2], v[1].dual()), v[0]);
        const Tensor mu2 = compose(compose(v[0], v[1].dual()), v[2]);
        const Tensor mu3 = compose(compose(v[2], v[1].dual()), v[0].transpose_inputs(swap));
        const Tensor mu4 = compose(compose(v[0], v[1].dual()), v[2].transpose_inputs(swap));
        CHECK(mu3_variant(TernaryVariant::mu, args) == mu);
        CHECK(mu3_variant(TernaryVariant::mu2, args) == mu2);
        CHECK(mu3_variant(TernaryVariant::mu3, args) == mu3);
        CHECK(mu3_variant(TernaryVariant::mu4, args) == mu4);
    }

    SECTION("on input-symmetric arguments mu3 collapses to mu") {
        std::array<Tensor, 3> sym{v[0], v[1], v[2]};
        const Permutation swap = Permutation::transposition(2, 1, 2);
        for (auto& t : sym) t = t + t.transpose_inputs(swap);
        CHECK(mu3_variant(TernaryVariant::mu3, sym) == mu3_variant(TernaryVariant::mu, sym));
        CHECK(mu3_variant(TernaryVariant::mu4, sym) == mu3_variant(TernaryVariant::mu2, sym));
    }

    SECTION("mu and mu2 differ on generic non-symmetric inputs") {
        CHECK(mu3_variant(TernaryVariant::mu, args) != mu3_variant(TernaryVariant::mu2, args));
    }

    SECTION("variants only act on (2,1) tensors") {
        const auto m = rand_args(3, 1, 1, 2, 500);
        CHECK_THROWS_AS(mu3_variant(TernaryVariant::mu, std::array<Tensor, 3>{m[0], m[1], m[2]}),
                        ShapeMismatch);
    }
}

TEST_CASE("chain product satisfies the s_k law on (3,1) tensors too") {
    std::uint64_t seed = 800;
    const ProductSpec spec = ProductSpec::plain(1);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Tensor> args;
        for (int i = 0; i < 5; ++i) args.push_back(random_tensor(3, 1, 2, seed++, 4));
        const Tensor lhs = mu_chain(
            spec, std::vector<Tensor>{mu_chain(spec, std::vector<Tensor>{args[0], args[1], args[2]}),
                                      args[3], args[4]});
        const Tensor mid = mu_chain(
            spec, std::vector<Tensor>{args[0], mu_chain(spec, std::vector<Tensor>{args[3], args[2], args[1]}),
                                      args[4]});
        const Tensor right = mu_chain(
            spec, std::vector<Tensor>{args[0], args[1], mu_chain(spec, std::vector<Tensor>{args[2], args[3], args[4]})});
        CHECK(lhs == mid);
        CHECK(lhs == right);
    }
}

TEST_CASE("structure_constants_nested agrees with composed chains") {
    const ProductSpec mu = ProductSpec::plain(1);
    for (std::uint64_t seed : {600u, 700u}) {
        const auto v = rand_args(5, 2, 1, 2, seed);
        const std::array<Tensor, 5> args{v[0], v[1], v[2], v[3], v[4]};

        const Tensor left = structure_constants_nested(NestedGrouping::left(), args);
        const Tensor inner123 = mu_chain(mu, std::vector<Tensor>{v[0], v[1], v[2]});
        CHECK(left == mu_chain(mu, std::vector<Tensor>{inner123, v[3], v[4]}));

        const Tensor mid432 = structure_constants_nested(NestedGrouping::middle(4, 3, 2), args);
        const Tensor inner432 = mu_chain(mu, std::vector<Tensor>{v[3], v[2], v[1]});
        CHECK(mid432 == mu_chain(mu, std::vector<Tensor>{v[0], inner432, v[4]}));

        const Tensor mid234 = structure_constants_nested(NestedGrouping::middle(2, 3, 4), args);
        const Tensor inner234 = mu_chain(mu, std::vector<Tensor>{v[1], v[2], v[3]});
        CHECK(mid234 == mu_chain(mu, std::vector<Tensor>{v[0], inner234, v[4]}));

        const Tensor right = structure_constants_nested(NestedGrouping::right(), args);
        const Tensor inner345 = mu_chain(mu, std::vector<Tensor>{v[2], v[3], v[4]});
        CHECK(right == mu_chain(mu, std::vector<Tensor>{v[0], v[1], inner345}));

        // the three tau_13 nestings coincide
        CHECK(left == mid432);
        CHECK(left == right);
    }
}

TEST_CASE("structure_constants_nested at dim 1 multiplies the five scalars") {
    std::array<Tensor, 5> args{Tensor(2, 1, 1), Tensor(2, 1, 1), Tensor(2, 1, 1), Tensor(2, 1, 1),
                               Tensor(2, 1, 1)};
    Rational prod(1);
    for (int i = 0; i < 5; ++i) {
        const Rational c(2 * i + 1, 2);
        args[static_cast<std::size_t>(i)].set({1, 1, 1}, c);
        prod *= c;
    }
    for (const auto& g :
         {NestedGrouping::left(), NestedGrouping::middle(4, 3, 2), NestedGrouping::right()})
        CHECK(structure_constants_nested(g, args).entry({1, 1, 1}) == prod);
}

TEST_CASE("nested grouping descriptor validation") {
    CHECK_THROWS_AS(NestedGrouping::middle(1, 2, 3), Error);
    CHECK_THROWS_AS(NestedGrouping::middle(2, 2, 3), Error);
    CHECK_THROWS_AS(NestedGrouping::middle(3, 4, 5), Error);
}
