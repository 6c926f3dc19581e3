#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "cotorlab/tasks.hpp"

using namespace cotorlab;

namespace {

json load(const std::filesystem::path& p) {
    std::ifstream in(p);
    return json::parse(in);
}

std::vector<std::filesystem::path> corpus() {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(COTORLAB_PROBLEMS_DIR))
        if (e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

json minimal(json objects, json task = json::object()) {
    return {{"field", {{"type", "Fp"}, {"p", 2}}}, {"objects", std::move(objects)}, {"task", std::move(task)}};
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("scalars: integers over F_p, fractions over Q") {
    Field F = Field::prime(7), Q = Field::rationals();
    CHECK(scalar_to_json(F, F.from_int(-1)) == json(6));
    CHECK(scalar_from_json(F, json("1/2")) == F.from_int(4));
    CHECK(scalar_to_json(Q, Q.from_fraction(1, 3)) == json("1/3"));
    CHECK(scalar_from_json(Q, json(5)) == Q.from_int(5));
    CHECK_THROWS_AS(scalar_from_json(Q, json(1.5)), SchemaError);
    CHECK(field_from_json(field_to_json(F)) == F);
    CHECK(field_from_json(json{{"type", "Q"}}) == Q);
    CHECK_THROWS_AS(field_from_json(json{{"type", "R"}}), SchemaError);
    CHECK_THROWS_AS(field_from_json(json{{"type", "Fp"}, {"p", 4}}), InputError);
}

TEST_CASE("every corpus problem survives parse, serialize, parse") {
    auto files = corpus();
    REQUIRE(files.size() >= 20);
    for (const auto& f : files) {
        CAPTURE(f.filename().string());
        Problem p = parse_problem(load(f));
        json once = problem_to_json(p);
        Problem q = parse_problem(once);
        CHECK(problem_to_json(q) == once);
        CHECK(q.objects.size() == p.objects.size());
        for (const auto& [name, obj] : p.objects) CHECK(kind_name(q.at(name)) == kind_name(obj));
    }
}

TEST_CASE("explicit forms reproduce the built objects") {
    Problem p = parse_problem(load(std::filesystem::path(COTORLAB_PROBLEMS_DIR) / "kx2_trivial_compare.json"));
    Problem q = parse_problem(problem_to_json(p));
    for (const auto& [name, obj] : p.objects) {
        CAPTURE(name);
        CHECK(obj == q.at(name));
    }
}

TEST_CASE("schema and reference errors") {
    CHECK_THROWS_AS(parse_problem(json::array()), SchemaError);
    CHECK_THROWS_AS(parse_problem(minimal({{"A", {{"builtin", "ground"}}}})), SchemaError);
    CHECK_THROWS_AS(parse_problem(minimal({{"A", {{"kind", "algebra"}, {"builtin", "nope"}}}})), SchemaError);
    CHECK_THROWS_AS(parse_problem(minimal({{"A", {{"kind", "widget"}}}})), SchemaError);
    CHECK_THROWS_AS(parse_problem(minimal({{"M", {{"kind", "left_module"}, {"algebra", "B"}, {"builtin", "regular"}}}})),
                    ReferenceError);
    json cyc = minimal({{"A", {{"kind", "algebra"}, {"builtin", "dual"}, {"of", "C"}}},
                        {"C", {{"kind", "coalgebra"}, {"builtin", "dual"}, {"of", "A"}}}});
    CHECK_THROWS_AS(parse_problem(cyc), SchemaError);
    json wrong = minimal({{"C", {{"kind", "coalgebra"}, {"builtin", "ground"}}},
                          {"M", {{"kind", "left_module"}, {"algebra", "C"}, {"builtin", "regular"}}}});
    CHECK_THROWS_AS(parse_problem(wrong), ReferenceError);
    json size = minimal({{"A", {{"kind", "algebra"}, {"dim", 2}, {"mul", json::array()}, {"unit", {1, 0}}}}});
    CHECK_THROWS_AS(parse_problem(size), SchemaError);
}

TEST_CASE("inline objects and explicit tensors") {
    json doc = minimal(
        {{"A", {{"kind", "algebra"},
                {"dim", 2},
                {"mul", {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}},
                {"unit", {1, 0}}}},
         {"M", {{"kind", "left_module"}, {"algebra", "A"}, {"action", {{{1}}, {{0}}}}}},
         {"N", {{"kind", "right_module"}, {"algebra", "A"}, {"action", {{{1}}, {{0}}}}}},
         {"K", {{"kind", "left_module"},
                {"algebra", {{"kind", "algebra"}, {"builtin", "truncated_polynomial"}, {"n", 2}}},
                {"builtin", "trivial"}}}},
        {{"command", "cotensor"}, {"left", "M"}, {"right", "N"}});
    Problem p = parse_problem(doc);
    CHECK(p.get<Algebra>("A").dim() == 2);
    CHECK(validate_problem(p).at("M").ok());
    CHECK(p.get<LeftModule>("K").algebra().augmentation());
    json r = run_task("cotensor", p);
    CHECK(r["result"]["cotensor_dim"] == 1);
    CHECK(r["result"]["hom_Ae_dim"] == 1);
    CHECK(r["result"]["verdict"] == "pass");
}

TEST_CASE("tasks refuse invalid objects and mismatched commands") {
    Problem p = parse_problem(load(std::filesystem::path(COTORLAB_PROBLEMS_DIR) / "broken_module_compare.json"));
    CHECK_THROWS_AS(run_task("compare", p), ValidationError);
    json v = run_task("validate", p);
    CHECK(v["all_valid"] == false);
    CHECK(v["objects"]["M"]["valid"] == false);
    CHECK(report_failed(v));
    Problem ok = parse_problem(load(std::filesystem::path(COTORLAB_PROBLEMS_DIR) / "kx2_trivial_cotor.json"));
    CHECK_THROWS_AS(run_task("hochschild", ok), TaskError);
    TaskOptions o;
    o.max_degree = 1;
    json r = run_task("cotor", ok, o);
    CHECK(r["result"]["cotor"] == json({1, 1}));
}

TEST_CASE("reports are deterministic") {
    for (const auto& f : corpus()) {
        json doc = load(f);
        std::string cmd = doc["task"]["command"];
        Problem p = parse_problem(doc);
        json a, b;
        try {
            a = run_task(cmd, p);
            b = run_task(cmd, parse_problem(doc));
        } catch (const ValidationError&) {
            continue;
        }
        CHECK(a.dump() == b.dump());
    }
}

}
