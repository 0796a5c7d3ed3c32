#include <doctest.h>

#include "graphonlab/json_io.hpp"
#include "graphonlab/literals.hpp"
#include "graphonlab/rng.hpp"
#include "oracles.hpp"

using namespace graphonlab;

TEST_CASE("step graphon json round trip is exact") {
    CounterRng rng(607);
    for (int t = 0; t < 30; ++t) {
        StepGraphon w = oracles::random_graphon(1 + static_cast<int>(rng.next_below(8)), rng);
        nlohmann::json doc = stepgraphon_to_json(w);
        CHECK(doc["schema"] == kStepGraphonSchema);
        StepGraphon back = stepgraphon_from_json(doc);
        CHECK(back == w);  // rational masses and bit-identical values
    }
    StepGraphon w = make_string_a(Rational(1, 16));
    CHECK(stepgraphon_from_json(stepgraphon_to_json(w)) == w);
}

TEST_CASE("kernel json round trip") {
    CounterRng rng(613);
    Kernel kern = oracles::random_kernel(5, rng);
    Kernel back = kernel_from_json(kernel_to_json(kern));
    CHECK(back.masses == kern.masses);
    CHECK(back.values == kern.values);
}

TEST_CASE("json validation errors") {
    nlohmann::json bad = {{"schema", "graphonlab.stepgraphon/1"}, {"measures", {"1/2", "1/2"}}};
    CHECK_THROWS_AS(stepgraphon_from_json(bad), ParseError);
    nlohmann::json wrong_schema = stepgraphon_to_json(make_constant(0.5));
    wrong_schema["schema"] = "other/9";
    CHECK_THROWS_AS(stepgraphon_from_json(wrong_schema), ParseError);
    nlohmann::json bad_mass = stepgraphon_to_json(make_constant(0.5));
    bad_mass["measures"][0] = "2/3";
    CHECK_THROWS_AS(stepgraphon_from_json(bad_mass), DomainError);
}

TEST_CASE("cut result and ball count records") {
    Kernel kern;
    kern.masses = {Rational(1, 2), Rational(1, 2)};
    kern.values = {{1.0, -1.0}, {-1.0, 1.0}};
    CutResult r = cut_norm_exact(kern);
    nlohmann::json doc = cut_result_to_json(r);
    CHECK(doc["exact"].get<bool>());
    CHECK(doc["value"].get<double>() == r.value);
    CHECK(doc.contains("row_set"));

    BallCounts counts = count_balls(3, 0.5, make_constant(0.5));
    nlohmann::json ball = ball_counts_to_json(counts);
    CHECK(ball["n_full_is_lower_bound"].get<bool>());
    CHECK(ball["n_hat"].get<std::uint64_t>() <= ball["n_full"].get<std::uint64_t>());
}

TEST_CASE("literal parsing") {
    CHECK(parse_graph_spec("K4") == complete(4));
    CHECK(parse_graph_spec("C5") == cycle(5));
    CHECK(parse_graph_spec("P3") == path(3));
    CHECK(parse_graph_spec("E2") == empty_graph(2));
    CHECK(parse_graph_spec("K3,3") == complete_bipartite(3, 3));
    CHECK(parse_graph_spec("g6:Bw") == complete(3));
    CHECK_THROWS_AS(parse_graph_spec("Q7"), DomainError);

    CHECK(parse_graphon_spec("wrs:2,0") == make_wrs(2, 0));
    CHECK(parse_graphon_spec("turan:3") == make_turan(3));
    CHECK(parse_graphon_spec("constant:1/2") == make_constant(0.5));
    CHECK(parse_graphon_spec("string_a:1/8") == make_string_a(Rational(1, 8)));
    CHECK(parse_graphon_spec("from_graph:K3") == make_from_graph(complete(3)));
    CHECK_THROWS_AS(parse_graphon_spec("wrs:2"), DomainError);
    CHECK_THROWS_AS(parse_graphon_spec("mystery:1"), DomainError);

    CHECK(parse_class_spec("bipartite").name() == "bipartite");
    CHECK(parse_class_spec("kt_free:4").contains(complete(3)));
    CHECK(!parse_class_spec("kt_free:4").contains(complete(4)));
    CHECK(parse_class_spec("crs:2,1").contains(complete(5)));
    CHECK_THROWS_AS(parse_class_spec("species:9"), DomainError);
}
