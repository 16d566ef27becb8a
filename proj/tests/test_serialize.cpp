#include <doctest.h>

#include <cmath>
#include <sstream>

#include "morlicz/serialize.hpp"
#include "morlicz/weights.hpp"

using namespace morlicz;

TEST_CASE("numeric interchange format is stable") {
    CHECK(format_sig(0.125) == format_sig(0.125));
    CHECK(format_sig(1.0) != format_sig(1.0 + 1e-9));
    // round-trips through strtod at full precision for these magnitudes
    for (double v : {0.0, 1.0, -0.125, 3.14159265358979, 1e-300, 2.5e200}) {
        double back = std::strtod(format_sig(v).c_str(), nullptr);
        CHECK(back == doctest::Approx(v).epsilon(1e-11));
    }
}

TEST_CASE("function descriptors round-trip") {
    std::vector<OrliczFunction> cat = {
        OrliczFunction::power(1.5),
        OrliczFunction::nakano_exponent(3.0),
        OrliczFunction::exponential_example(),
        OrliczFunction::zero(),
        OrliczFunction::weighted(OrliczFunction::power(2.0), 0.5),
        OrliczFunction::power_scaled(OrliczFunction::exponential_example(), 0.5),
        OrliczFunction::arg_scaled(OrliczFunction::power(2.0), 0.25),
        OrliczFunction::weighted(OrliczFunction::power_scaled(OrliczFunction::power(1.5), 1.0),
                                 2.0),
        section6_piecewise(8),
    };
    for (const auto& m : cat) {
        OrliczFunction back = parse_function(describe(m));
        CHECK(describe(back) == describe(m)); // canonical text is a fixed point
        for (double t : {1e-6, 0.01, 0.3, 1.0, 2.0}) {
            if (m.value(t) == 0.0 && back.value(t) == 0.0) continue;
            CHECK(back.log_value(t) == doctest::Approx(m.log_value(t)).epsilon(1e-11));
        }
    }
    CHECK_THROWS_AS(parse_function("power("), ParseError);
    CHECK_THROWS_AS(parse_function("mystery(2)"), ParseError);
}

TEST_CASE("weight descriptors round-trip") {
    for (const auto& w : {WeightSequence::harmonic(), WeightSequence::constant(2.5),
                          WeightSequence::section6(9), WeightSequence::from_values({0.5, 2.0})}) {
        WeightSequence back = parse_weights(describe(w));
        CHECK(describe(back) == describe(w));
        for (std::size_t k = 1; k <= 9; ++k)
            CHECK(back.log_weight(k) == doctest::Approx(w.log_weight(k)).epsilon(1e-11));
    }
    CHECK_THROWS_AS(parse_weights("triangular"), ParseError);
}

TEST_CASE("family descriptors round-trip") {
    std::vector<MusielakFamily> fams = {
        MusielakFamily::constant(OrliczFunction::power(2.0)),
        MusielakFamily::weighted(OrliczFunction::exponential_example(),
                                 WeightSequence::section6(6)),
        MusielakFamily::nakano({1.5, 2.0, 3.0}),
    };
    for (const auto& fam : fams) {
        MusielakFamily back = parse_family(describe(fam));
        CHECK(describe(back) == describe(fam));
        for (std::size_t i = 1; i <= 5; ++i)
            for (double t : {0.1, 0.5, 1.0})
                CHECK(back.at(i).log_value(t) == doctest::Approx(fam.at(i).log_value(t)).epsilon(1e-11));
    }
    MusielakFamily custom = MusielakFamily::custom(
        [](std::size_t) { return OrliczFunction::power(2.0); }, "opaque");
    CHECK_THROWS_AS(describe(custom), ParseError);
}

TEST_CASE("domain descriptors round-trip") {
    BoundedDomain a(5, 2.0);
    BoundedDomain b(3, 1.0, true, {{0.0, 0.5}, {0.1, 0.9}, {0.0, 1.0}});
    for (const auto& s : {a, b}) {
        BoundedDomain back = parse_domain(describe(s));
        CHECK(describe(back) == describe(s));
        CHECK(back.dim() == s.dim());
        CHECK(back.norm_radius() == s.norm_radius());
        CHECK(back.positive() == s.positive());
    }
}

TEST_CASE("vector CSV round-trip") {
    FiniteVector x({0.5, -0.25, 1e-30, 3.0});
    std::string text = to_csv(x);
    CHECK(text.rfind("index,value", 0) == 0);
    FiniteVector back = vector_from_csv(text);
    REQUIRE(back.dim() == 4);
    for (int i = 0; i < 4; ++i) CHECK(back[i] == doctest::Approx(x[i]).epsilon(1e-11));
    CHECK(to_csv(back) == text); // byte-identical on re-emission
    CHECK_THROWS_AS(vector_from_csv("nonsense"), ParseError);
}

TEST_CASE("config parsing") {
    std::string text =
        "top = 1\n"
        "# a comment line\n"
        "[solver]\n"
        "budget = 4000   # trailing comment\n"
        "epsilon = 2.5e-1\n"
        "\n"
        "[family]\n"
        "spec = power(2)\n";
    Config c = parse_config(text);
    CHECK(c.get_long("top") == 1);
    CHECK(c.get_long("solver.budget") == 4000);
    CHECK(c.get_double("solver.epsilon") == doctest::Approx(0.25));
    CHECK(c.get("family.spec") == "power(2)");
    CHECK(!c.has("solver.missing"));
    CHECK_THROWS_AS(c.get("solver.missing"), ParseError);
    CHECK_THROWS_AS(c.get_double("family.spec"), ParseError);
    CHECK_THROWS_AS(parse_config("just words without equals\n"), ParseError);
}

TEST_CASE("csv writer is deterministic and checks width") {
    auto emit = [] {
        std::ostringstream os;
        CsvWriter w(os, {"k", "value"});
        w.row_numeric({1.0, 0.5});
        w.row({"2", "abc"});
        return os.str();
    };
    CHECK(emit() == emit());
    std::ostringstream os;
    CsvWriter w(os, {"a", "b"});
    CHECK_THROWS_AS(w.row({"only-one"}), ParseError);
}
