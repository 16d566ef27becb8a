#include <doctest.h>

#include <cmath>

#include "morlicz/weights.hpp"

using namespace morlicz;

TEST_CASE("constant and list weights") {
    WeightSequence c = WeightSequence::constant(3.0);
    CHECK(c.weight(1) == doctest::Approx(3.0));
    CHECK(c.weight(100) == doctest::Approx(3.0));
    CHECK_THROWS_AS(WeightSequence::constant(-1.0), ConstructionError);
    CHECK_THROWS_AS(WeightSequence::from_values({1.0, -2.0}), ConstructionError);
    WeightSequence l = WeightSequence::from_values({0.5, 2.0});
    CHECK(l.weight(2) == doctest::Approx(2.0));
    CHECK(l.weight(7) == doctest::Approx(2.0)); // extends by the last value
    CHECK_THROWS_AS(l.weight(0), RangeError);   // 1-based
}

TEST_CASE("fixture weights match the closed form") {
    WeightSequence w = WeightSequence::section6(10);
    for (std::size_t k = 1; k <= 10; ++k) {
        double a = std::pow(static_cast<double>(k), -2.0 * static_cast<double>(k));
        double want = 0.5 / a - 2.0 * std::log(a); // log(1/N(a)) = 1/(2a) - 2 log a
        CHECK(w.log_weight(k) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("classification is consistent with the tags") {
    CHECK(classify_weights(WeightSequence::harmonic()).tag_consistent);
    CHECK(classify_weights(WeightSequence::section6(20)).tag_consistent);
    CHECK(classify_weights(WeightSequence::constant(1.0)).tag_consistent);

    WeightClassReport h = classify_weights(WeightSequence::harmonic());
    CHECK(h.vanishing);
    CHECK(h.divergent_sum);
    CHECK(h.monotone_down);

    WeightClassReport s = classify_weights(WeightSequence::section6(20));
    CHECK(s.diverging);
    CHECK(s.monotone_up);
}
