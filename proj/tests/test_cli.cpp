#include "doctest.h"

#include "thetaring/cli.hpp"
#include "thetaring/decompose.hpp"
#include "thetaring/io.hpp"

#include "json.hpp"

#include <sstream>

using namespace thetaring;
using nlohmann::json;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string & name)
{
    return std::string(THETARING_DATA_DIR) + "/" + name;
}

json report(std::vector<std::string> args, int expected_code)
{
    args.push_back("--json");
    auto o = run(args);
    CHECK(o.code == expected_code);
    auto j = json::parse(o.out);
    CHECK(j.contains("timing_ms"));
    j.erase("timing_ms");
    return j;
}

} // namespace

TEST_CASE("recognize")
{
    auto theta = report({"recognize", data("theta.edges")}, cli::negative);
    CHECK(theta["command"] == "recognize");
    CHECK(theta["result"]["theta_ring"] == false);
    CHECK(theta["result"]["witness"]["kind"] == "theta");
    CHECK(theta["input"]["n"] == 5);
    CHECK(theta["input"]["m"] == 6);
    CHECK(theta["input"]["digest"].get<std::string>().size() == 16);

    auto c6 = report({"recognize", data("c6.edges")}, cli::ok);
    CHECK(c6["result"]["theta_ring"] == true);
    auto tree = tree_from_json(c6["result"]["tree"]);
    CHECK(verify_tree(tree, Graph::cycle(6)));

    CHECK(run({"recognize", data("missing.edges")}).code == cli::input_error);
    CHECK(run({"recognize", data("theta.orient")}).code == cli::input_error);
    auto bad = run({"recognize", data("triangle_cyclic.orient")});
    CHECK(bad.code == cli::input_error);
    CHECK(bad.err.find("line") != std::string::npos);
}

TEST_CASE("forbidden")
{
    auto prism = report({"forbidden", data("prism.edges")}, cli::negative);
    CHECK(prism["result"]["witness"]["kind"] == "prism");
    auto k4 = report({"forbidden", data("fan.edges")}, cli::ok);
    CHECK(k4["result"]["witness"].is_null());
    auto pw4 = report({"forbidden", data("pw4.edges")}, cli::negative);
    CHECK(pw4["result"]["witness"]["kind"] == "theta_partial_wheel");
}

TEST_CASE("toric")
{
    auto theta = report({"toric", data("theta.edges"), "--orientation", data("theta.orient")}, cli::negative);
    CHECK(theta["result"]["height"] == 2);
    CHECK(theta["result"]["mu"] == 3);
    CHECK(theta["result"]["is_ci"] == false);
    CHECK(theta["result"]["generators"].size() == 3);
    CHECK(theta["result"]["orientation"].size() == 6);

    auto random = report({"toric", data("k23.edges"), "--random-acyclic", "3"}, cli::ok);
    CHECK(random["seed"] == 3);

    auto tree = run({"toric", "--json", data("triangle.edges")});
    CHECK(tree.code == cli::ok);
    CHECK(json::parse(tree.out)["result"]["mu"] == 1);

    auto cyclic = run({"toric", data("triangle.edges"), "--orientation", data("triangle_cyclic.orient")});
    CHECK(cyclic.code == cli::unsupported_orientation);
    CHECK(cyclic.err.find("unsupported_orientation") != std::string::npos);

    CHECK(run({"toric", data("theta.edges"), "--orientation", data("prism.orient")}).code == cli::input_error);
}

TEST_CASE("cio")
{
    auto theta = report({"cio", data("theta.edges"), "--threads", "2"}, cli::negative);
    CHECK(theta["result"]["witness_found"] == true);
    CHECK(theta["mode"]["orientations"] == "acyclic_only");
    CHECK(theta["result"]["mu"].get<int>() > theta["result"]["height"].get<int>());

    auto c6 = report({"cio", data("c6.edges")}, cli::ok);
    CHECK(c6["result"]["status"] == "no_witness_found");
    CHECK(c6["result"]["evidence_only"] == true);

    CHECK(run({"cio", data("c6.edges"), "--mode", "sideways"}).code == cli::input_error);
}

TEST_CASE("gen output re-parses")
{
    const std::vector<std::vector<std::string>> commands{
        {"gen", "theta", "2", "2", "2"},
        {"gen", "prism", "1", "1", "1"},
        {"gen", "pyramid", "1", "2", "2"},
        {"gen", "wheel", "5"},
        {"gen", "wheel", "5", "0", "1", "2"},
        {"gen", "cliquesum", "--seed", "7"},
        {"gen", "chordal", "8", "--seed", "2"},
    };
    for (const auto & args : commands) {
        CAPTURE(args[1]);
        auto o = run(args);
        REQUIRE(o.code == cli::ok);
        auto g = parse_edge_list(o.out);
        CHECK(g.order() > 0);
    }
    CHECK(parse_edge_list(run({"gen", "prism", "1", "1", "1"}).out).order() == 6);
    CHECK(run({"gen", "theta", "1", "2", "2"}).code == cli::input_error);
    CHECK(run({"gen", "unknown"}).code == cli::input_error);

    auto seeded = run({"gen", "cliquesum", "--seed", "7"});
    CHECK(seeded.err.find("seed: 7") != std::string::npos);
    CHECK(recognize_theta_ring(parse_edge_list(seeded.out)).theta_ring());
    CHECK(run({"gen", "cliquesum", "--seed", "7"}).out == seeded.out);

    auto catalog = run({"gen", "catalog", "4"});
    CHECK(std::count(catalog.out.begin(), catalog.out.end(), '\n') == 11);

    auto witness = run({"gen", "witness", "pw3", "--orientation"});
    CHECK(witness.code == cli::ok);
    CHECK(witness.out.rfind("5 7", 0) == 0);
}

TEST_CASE("reports are deterministic apart from timing")
{
    for (const auto & args : std::vector<std::vector<std::string>>{
             {"recognize", data("pw5.edges")},
             {"toric", data("prism.edges"), "--orientation", data("prism.orient")},
             {"cio", data("k23.edges"), "--threads", "3"},
         }) {
        auto a = run([&] { auto v = args; v.push_back("--json"); return v; }());
        auto b = run([&] { auto v = args; v.push_back("--json"); return v; }());
        auto ja = json::parse(a.out), jb = json::parse(b.out);
        ja.erase("timing_ms");
        jb.erase("timing_ms");
        CHECK(ja.dump() == jb.dump());
    }
}

TEST_CASE("selftest")
{
    auto zero = report({"selftest", "--max-n", "0"}, cli::ok);
    CHECK(zero["result"]["pass"] == true);

    auto four = report({"selftest", "--max-n", "4"}, cli::ok);
    for (const auto & row : four["result"]["rows"])
        CHECK(row["forbidden"] == 0);

    auto six = report({"selftest", "--max-n", "6", "--cio-max-n", "5"}, cli::ok);
    CHECK(six["result"]["pass"] == true);
    const auto & last = six["result"]["rows"].back();
    CHECK(last["n"] == 6);
    CHECK(last["theta_ring"] == 116);
    CHECK(last["forbidden"] == 40);
}
