#include <doctest.h>

#include "vmodel/error.hpp"
#include "vmodel/model.hpp"
#include "vmodel/random.hpp"

using namespace vmodel;

namespace {

MultisetIndex idx(std::vector<int> v)
{
    return MultisetIndex(std::move(v));
}

} // namespace

TEST_CASE("graded indices run by degree, then descending lex")
{
    auto list = graded_indices(2, 2);
    std::vector<MultisetIndex> expected{idx({0, 0}), idx({1, 0}), idx({0, 1}), idx({2, 0}), idx({1, 1}), idx({0, 2})};
    CHECK(list == expected);
    // C(k + d, d) indices in total.
    CHECK(graded_indices(3, 3).size() == 20);
    CHECK(graded_indices(0, 4).size() == 1);
}

TEST_CASE("absent entries are zero; the degree cap is enforced")
{
    VertexModel y(2, Ring::rational, {{idx({1, 0}), Scalar(5)}}, 3);
    CHECK(y.value(idx({1, 0})) == Scalar(5));
    CHECK(y.value(idx({0, 3})).is_zero());
    CHECK(y.determines_degree(3));
    CHECK_FALSE(y.determines_degree(4));
    CHECK_THROWS_AS(VertexModel(2, Ring::rational, {{idx({4, 0}), Scalar(1)}}, 3), PreconditionError);
    CHECK_THROWS_AS(VertexModel(2, Ring::rational, {{idx({1}), Scalar(1)}}), PreconditionError);
    CHECK_THROWS_AS(VertexModel(1, Ring::rational, {{idx({1}), Scalar::gaussian(0, 1)}}), PreconditionError);
}

TEST_CASE("moment slice of y_d = 1 + 2^d")
{
    auto y = rank_r_model(1, {{Scalar(1)}, {Scalar(2)}}, {Scalar(1), Scalar(1)}, 6);
    for (int d = 0; d <= 6; ++d)
        CHECK(y.value(idx({d})) == Scalar((1LL << d) + 1));
    auto slice = moment_slice(y, 2);
    CHECK(slice.matrix == ScalarMatrix{{2, 3, 5}, {3, 5, 9}, {5, 9, 17}});
    CHECK(exact_rank(slice.matrix) == 2);
    CHECK(exact_rank(moment_slice(y, 1).matrix) == 2);
    CHECK(exact_rank(moment_slice(y, 0).matrix) == 1);
}

TEST_CASE("rank_r_model evaluates sum of c_j a_j^alpha")
{
    // Two colors, points (1, -1) and (2, 3), coefficients 3 and -1/2.
    auto y = rank_r_model(2, {{Scalar(1), Scalar(-1)}, {Scalar(2), Scalar(3)}}, {Scalar(3), Scalar(Rational(-1, 2))}, 4);
    for (const auto& a : graded_indices(2, 4)) {
        long long p1 = (a[1] % 2 ? -1 : 1);
        long long p2 = (1LL << a[0]);
        for (int i = 0; i < a[1]; ++i)
            p2 *= 3;
        CHECK(y.value(a) == Scalar(3 * p1) - Scalar(Rational(p2, 2)));
    }
    Rng rng(3);
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 3; ++k) {
            auto z = random_rank_r_model(rng, k, r, Ring::gaussian, 6);
            CHECK(exact_rank(moment_slice(z, 3).matrix) <= static_cast<std::size_t>(r));
            CHECK(moment_slice(z, 3).matrix.is_symmetric());
        }
}

TEST_CASE("named models")
{
    auto m = models::matching(4);
    CHECK(m.value(idx({3, 1})).is_one());
    CHECK(m.value(idx({0, 2})).is_zero());
    auto s = models::sign(5);
    CHECK(s.value(idx({3})) == Scalar::gaussian(0, -1));
    CHECK(s.ring() == Ring::gaussian);
    auto c = models::constant(3, Scalar(7), 2);
    CHECK(c.value(idx({1, 0, 1})) == Scalar(7));
    CHECK(c.entries().size() == 10);
}

TEST_CASE("directed models read a joint 2k-color table")
{
    std::map<std::pair<MultisetIndex, MultisetIndex>, Scalar> entries{{{idx({1}), idx({2})}, Scalar(4)}};
    DirectedVertexModel y(1, Ring::rational, entries, 3);
    CHECK(y.colors() == 1);
    CHECK(y.value(idx({1}), idx({2})) == Scalar(4));
    CHECK(y.value(idx({2}), idx({1})).is_zero());
    CHECK(y.joint().value(idx({1, 2})) == Scalar(4));
    CHECK_THROWS_AS(DirectedVertexModel::from_joint(models::constant(3, Scalar(1), 1)), PreconditionError);
}

TEST_CASE("truncation check")
{
    auto y = models::constant(2, Scalar(1), 4);
    CHECK(model_truncation_check(y, 4));
    CHECK_FALSE(model_truncation_check(y, 5));
}
