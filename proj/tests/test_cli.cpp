#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "logbundle/cli.hpp"
#include "logbundle/io.hpp"
#include "logbundle/quadrics.hpp"
#include "logbundle/schwarzenberger.hpp"
#include "support.hpp"

using namespace logbundle;
using io::Json;

namespace {

std::filesystem::path scratch() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "logbundle_cli_test";
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write(const std::string& name, const std::string& text) {
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
}

std::string write_json(const std::string& name, const Json& j) { return write(name, j.dump()); }

Json points_doc(const std::vector<ProjPoint>& pts) { return {{"n", pts.front().n()}, {"forms", io::to_json(pts)}}; }

cli::Outcome run(std::vector<std::string> args) { return cli::run(args); }

Json parsed(const cli::Outcome& r) { return Json::parse(r.out); }

const std::string kConic = R"({"n": 2, "forms": [["1","0","0"],["0","1","0"],["0","0","1"],["1","1","1"],["1","2","3"]]})";

}  // namespace

TEST_CASE("jumping curve of the five-point example") {
    const auto r = run({"jumping-curve", write("conic.json", kConic)});
    REQUIRE(r.exit_code == 0);
    const Json j = parsed(r);
    CHECK(j["text"] == "3*x*y - 4*x*z + y*z");
    CHECK(j["degree"] == 2);
    const MultiPoly f = io::poly_from(j["polynomial"], 3);
    CHECK(f.to_string() == "3*x*y - 4*x*z + y*z");
    CHECK(j["polynomial"][0] == Json{{"exponents", {1, 1, 0}}, {"coefficient", "3"}});
}

TEST_CASE("exit codes and error records") {
    const auto collinear = run({"gp-check", write("collinear.json", R"({"n":2,"forms":[[1,0,0],[0,1,0],[1,1,0]]})")});
    CHECK(collinear.exit_code == 1);
    CHECK(parsed(collinear)["error"]["kind"] == "general_position");
    CHECK(parsed(collinear)["error"]["indices"] == Json{0, 1, 2});

    CHECK(run({"gp-check", write("ok.json", kConic)}).exit_code == 0);
    CHECK(run({"tensor", write("float.json", R"({"n":2,"forms":[[1.5,0,0]]})")}).exit_code == 2);
    CHECK(run({"tensor", write("garbage.json", "{not json")}).exit_code == 2);
    CHECK(run({"tensor", (scratch() / "missing.json").string()}).exit_code == 2);
    CHECK(run({"tensor", write("short.json", R"({"n":2,"forms":[["1","0"]]})")}).exit_code == 2);
    CHECK(run({"tensor", write("nofield.json", R"({"forms":[["1","0","0"]]})")}).exit_code == 2);
    CHECK(run({"no-such-command"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"chern", "2"}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
    const auto zero = run({"tensor", write("zero.json", R"({"n":2,"forms":[["0","0","0"],["1","0","0"]]})")});
    CHECK(zero.exit_code == 1);
    CHECK(parsed(zero)["error"]["kind"] == "zero_vector");
    const auto small = run({"torelli", write("t1.json", kConic), write("t2.json", kConic)});
    CHECK(small.exit_code == 1);
    CHECK(parsed(small)["error"]["kind"] == "range");
}

TEST_CASE("documents round trip") {
    Rng rng(31);
    const Arrangement a = testsupport::random_arrangement(rng, 3, 7);
    const std::string file = write_json("a37.json", io::to_json(a));

    const auto assoc = run({"associate", file});
    REQUIRE(assoc.exit_code == 0);
    const Arrangement b = io::arrangement_from(parsed(assoc));
    CHECK(b.form_list() == associated(a).form_list());
    CHECK(io::to_json(b) == parsed(assoc));
    CHECK(is_associated_pair(a.form_list(), b.form_list()));

    const auto tensor = run({"tensor", file});
    REQUIRE(tensor.exit_code == 0);
    const SteinerTensor t = io::tensor_from(parsed(tensor));
    CHECK(t.slices == fundamental_tensor(a).slices);
    CHECK(io::to_json(t) == parsed(tensor));

    const auto iso = run({"iso", write_json("t37.json", parsed(tensor)), file});
    REQUIRE(iso.exit_code == 0);
    CHECK(parsed(iso)["verdict"] == "Iso");
    const Json v = parsed(iso);
    CHECK(intertwines(t, fundamental_tensor(a), io::matrix_from(v["g_i"]), io::matrix_from(v["g_w"])));

    for (int k = 0; k < 20; ++k) {
        const Rational q = rng.small_rational(1000, 97);
        CHECK(io::rational_from(io::to_json(q)) == q);
        MultiPoly p(3);
        for (const auto& e : monomials_glex(3, 2)) p.add_term(e, rng.small_rational(9, 4));
        CHECK(io::poly_from(io::to_json(p), 3) == p);
        const Matrix m = rng.int_matrix(3, 4, 50);
        CHECK(io::matrix_from(io::to_json(m)) == m);
    }
}

TEST_CASE("outputs are deterministic") {
    Rng rng(32);
    const std::string pts = write_json("gen7.json", points_doc(testsupport::random_gp_points(rng, 2, 7)));
    const std::string q = write("q.json", R"({"point": ["1", "3", "8"]})");
    const auto first = run({"adjoint", pts, q, "--seed", "17", "--trials", "5"});
    const auto second = run({"adjoint", pts, q, "--seed", "17", "--trials", "5"});
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(parsed(first)["adjoint"] == false);
    CHECK(parsed(first)["seed"] == 17);
    const auto other = run({"adjoint", pts, q, "--seed", "18", "--trials", "5"});
    CHECK(parsed(other)["witness"] != parsed(first)["witness"]);

    const std::string out = (scratch() / "written.json").string();
    const auto to_file = run({"adjoint", pts, q, "--seed", "17", "--trials", "5", "--out", out});
    CHECK(to_file.out.empty());
    std::ifstream in(out);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == first.out);

    const auto pretty = run({"adjoint", pts, q, "--seed", "17", "--trials", "5", "--pretty"});
    CHECK(Json::parse(pretty.out) == parsed(first));
    CHECK(pretty.out != first.out);
}

TEST_CASE("Torelli verdicts through the command line") {
    Rng rng(33);
    const RNC conic = testsupport::random_curve(rng, 2);
    const auto params = testsupport::distinct_params(rng, 14);
    const auto on = testsupport::points_on(conic, params);
    const std::string f1 = write_json("c1.json", points_doc({on.begin(), on.begin() + 7}));
    const std::string f2 = write_json("c2.json", points_doc({on.begin() + 7, on.end()}));
    const auto r = run({"torelli", f1, f2});
    REQUIRE(r.exit_code == 0);
    const Json j = parsed(r);
    CHECK(j["verdict"] == "CommonVeroneseCurve");
    CHECK(j["solver"]["verdict"] == "Iso");
    CHECK(j["solver"]["solution_dim"] == 1);
    const MultiPoly eq = io::poly_from(j["equation"]["terms"], 3);
    for (const auto& p : on) CHECK(eq.evaluate(p.coords()) == 0);
    CHECK(j["equation"]["text"] == eq.to_string());
    CHECK(same_curve(RNC(io::matrix_from(j["curve"])), conic));

    const std::string g1 = write_json("g1.json", points_doc(testsupport::random_gp_points(rng, 2, 7)));
    const std::string g2 = write_json("g2.json", points_doc(testsupport::random_gp_points(rng, 2, 7)));
    const Json n = parsed(run({"torelli", g1, g2}));
    CHECK(n["verdict"] == "NonIsomorphic");
    CHECK(n["solver"]["verdict"] == "NoHom");
    REQUIRE(n["separating_line"].is_object());
    CHECK(n["separating_line"]["type_first"] != n["separating_line"]["type_second"]);

    CHECK(parsed(run({"torelli", g1, g1}))["verdict"] == "SameArrangement");
}

TEST_CASE("every subcommand answers") {
    Rng rng(34);
    const std::string conic = write("conic.json", kConic);
    const std::string lines = write("lines.json", R"({"lines": [[[1,0,0],[0,1,0]], [[1,2,0],[0,5,7]]]})");
    const std::string flat = write("flat.json", R"({"rows": [[1,1,2]]})");
    const std::string flat2 = write("flat2.json", R"({"rows": [[1,1,2],[0,1,-1]]})");
    const std::string point_flat = write("pflat.json", R"({"rows": [["-2","1","0"],["-3","0","1"]]})");
    const std::string eight = write_json("eight.json", points_doc(testsupport::random_gp_points(rng, 2, 6)));
    const RNC c = testsupport::random_curve(rng, 2);
    const auto ps = testsupport::distinct_params(rng, 7);
    const std::string osc = write_json("osc.json", points_doc(testsupport::points_on(dual_rnc(c), ps)));
    const std::string seven_on = write_json("seven_on.json", points_doc(testsupport::points_on(c, ps)));
    const std::string query = write("query.json", R"({"line": [[1,1,1],[1,-1,2]], "x": [1,1,1],
        "lambda": [[1,1,1],[0,0,1]], "x2": [3,-1,5]})");

    const std::vector<std::vector<std::string>> commands{
        {"gp-check", conic},
        {"associate", conic},
        {"self-associated", eight},
        {"tensor", conic},
        {"chern", "2", "6"},
        {"cohomology", conic, "2"},
        {"splitting-type", conic, lines},
        {"jump-test", conic, lines},
        {"super-jump-test", conic, lines},
        {"connection", conic, query},
        {"jumping-curve", conic},
        {"monoid-basis", flat, "3"},
        {"monoid-through", conic, point_flat},
        {"membership", conic, point_flat},
        {"rnc-through", conic},
        {"schwarzenberger", osc},
        {"iso", conic, conic},
        {"torelli", seven_on, seven_on},
        {"adjoint", seven_on, write("q2.json", R"(["1","3","8"])")},
        {"castelnuovo", seven_on},
    };
    for (const auto& cmd : commands) {
        const auto r = run(cmd);
        INFO(cmd[0], " ", r.out, r.err);
        CHECK(r.exit_code == 0);
        CHECK_NOTHROW(Json::parse(r.out));
    }

    CHECK(parsed(run({"chern", "2", "6"}))["chern"] == Json{"3", "6"});
    CHECK(parsed(run({"cohomology", conic, "0"}))["h"][0] == "4");
    CHECK(parsed(run({"splitting-type", conic, lines}))["lines"][0]["type"] == Json{2, 0});
    CHECK(parsed(run({"membership", conic, point_flat}))["member"] == true);
    CHECK(parsed(run({"membership", conic, flat2}))["member"] == false);
    CHECK(parsed(run({"castelnuovo", seven_on}))["conditions"] == 5);
    CHECK(parsed(run({"schwarzenberger", osc}))["intertwines"] == true);
    CHECK(parsed(run({"schwarzenberger", osc}))["solver"]["verdict"] == "Iso");
    CHECK(parsed(run({"monoid-basis", flat, "3"}))["dimension"] == 3);
    CHECK(parsed(run({"monoid-basis", flat2, "2"}))["dimension"] == 5);
}
