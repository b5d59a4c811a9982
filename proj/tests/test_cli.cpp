#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "tau4/cli.hpp"
#include "tau4/error.hpp"
#include "tau4/json_io.hpp"

using namespace tau4;
using io::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

std::string data(const std::string& name) { return std::string(TAU4_DATA_DIR) + "/" + name; }

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    Run r = run(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("tau4_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("warm-up manifolds through the command line") {
    CHECK(run_json({"surgery-tau4", data("trefoil.json")})["tau4"]["integer"] == 0);
    CHECK(run_json({"surgery-tau4", data("whitehead.json")})["tau4"]["integer"] == 2);
    CHECK(run_json({"surgery-tau4", data("borromean.json"), "--method", "exponential"})["tau4"]["integer"] == 6);
    json cc = run_json({"surgery-tau4", data("borromean.json"), "--cross-check"});
    CHECK(cc["agree"] == true);
    CHECK(cc["spin_sum"]["integer"] == 6);
    Run text = run({"surgery-tau4", data("borromean.json")});
    CHECK(text.code == 0);
    CHECK(contains(text.out, "tau4: 6"));
}

TEST_CASE("enhanced space commands") {
    json a = run_json({"enhanced-brown", data("space_a_infinity.json")});
    CHECK(a["brown"] == "infinity");
    CHECK(contains(run({"enhanced-brown", data("space_a_infinity.json")}).out, "infinity"));
    json c = run_json({"enhanced-classify", data("space_p1_2a0.json")});
    CHECK(c["brown"] == 1);
    CHECK(c["dim"] == 3);
    CHECK(c["radical_dim"] == 2);
    CHECK(c["normal_form"]["A0"] == 2);
    CHECK(c["normal_form"]["P1"] == 1);
}

TEST_CASE("link commands") {
    json z = run_json({"link-conway", data("trefoil.json")});
    CHECK(z["conway"] == json::array({1, 0, 1}));
    CHECK(run_json({"link-arf", data("trefoil.json")})["arf"] == 1);
    CHECK(run_json({"link-brown", data("torus_2_4.json")})["brown"] == 6);
    CHECK(run_json({"link-brown", data("model_borromean.json")})["brown"] == 4);
    CHECK(run_json({"link-brown", data("borromean_surface.json")})["brown"] == 4);
    json h = run_json({"link-conway", data("hopf_pd.json")});
    CHECK(h["components"] == 2);
    CHECK(h["conway"] == json::array({0, 1}));
    json mu = run_json({"surgery-mu", data("trefoil.json")});
    CHECK(mu["spin_structures"].size() == 2);
    CHECK(mu["tau4"]["integer"] == 0);
}

TEST_CASE("reduction commands") {
    json r = run_json({"reduce", data("example.cnf"), "--verify"});
    CHECK(r["models"] == 10);
    CHECK(r["zeros"] == 2368);
    CHECK(r["identity_holds"] == true);
    CHECK(run_json({"count", data("example.cnf")})["models"] == 10);
    json q = run_json({"reduce", data("example.cnf"), "--emit", "quad"});
    CHECK(q["quad_system"]["polys"].size() == 6);
    json t = run_json({"cubic-tau4", data("cubic_triple.json"), "--cross-check"});
    CHECK(t["tau4"]["integer"] == 6);
    CHECK(t["agree"] == true);
}

TEST_CASE("exit codes") {
    CHECK(run({"surgery-tau4", data("trefoil.json")}).code == 0);
    CHECK(run({"nonsense", data("trefoil.json")}).code == 2);
    CHECK(run({"surgery-tau4"}).code == 2);
    CHECK(run({"surgery-tau4", data("missing.json")}).code == 2);
    CHECK(run({"enhanced-classify", data("space_bad_parity.json")}).code == 2);
    CHECK(run({"count", data("bad_width.cnf")}).code == 2);
    CHECK(run({"surgery-tau4", data("lk_asymmetric.json")}).code == 2);
    CHECK(run({"link-arf", data("hopf_pd.json")}).code == 2);
    CHECK(run({"link-arf", data("model_odd_sl.json")}).code == 2);
    CHECK(run({"cubic-tau4", data("cubic_mixed.json"), "--cross-check"}).code == 3);
    CHECK(run({"link-conway", data("example.cnf")}).code == 2);
    std::string big = temp_file("big_space.json", [] {
        json j;
        j["form"] = json::array();
        j["values"] = json::array();
        for (int i = 0; i < 41; ++i) {
            json row = json::array();
            for (int k = 0; k < 41; ++k) row.push_back(k == i ? 1 : 0);
            j["form"].push_back(row);
            j["values"].push_back(1);
        }
        return j.dump();
    }());
    CHECK(run({"enhanced-brown", big}).code == 3);
}

TEST_CASE("cross-check disagreement exits with 1") {
    std::string hopf = temp_file("hopf_product.json", R"({"braid": {"strands": 2, "word": [1, 1, 1]}})");
    Run r = run({"surgery-tau4", hopf, "--method", "product", "--cross-check"});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "agree: false"));
}

TEST_CASE("validation messages") {
    Run parity = run({"enhanced-classify", data("space_bad_parity.json")});
    CHECK(contains(parity.err, "error: invalid input:"));
    CHECK(contains(parity.err, "e(x) = x.x (mod 2)"));
    Run asym = run({"surgery-tau4", data("lk_asymmetric.json")});
    CHECK(contains(asym.err, "not symmetric"));
    Run sl = run({"link-arf", data("model_odd_sl.json")});
    CHECK(contains(sl.err, "not even"));
    Run hopf = run({"link-arf", data("hopf_pd.json")});
    CHECK(contains(hopf.err, "error: precondition failed:"));
    CHECK(contains(hopf.err, "lk(1,2)"));
    Run width = run({"count", data("bad_width.cnf")});
    CHECK(contains(width.err, "width"));
    Run refused = run({"cubic-tau4", data("cubic_mixed.json"), "--cross-check"});
    CHECK(contains(refused.err, "error: refused:"));
}

TEST_CASE("text and json agree") {
    for (const std::string& f : {"trefoil.json", "whitehead.json", "borromean.json"}) {
        json j = run_json({"surgery-tau4", data(f)});
        Run t = run({"surgery-tau4", data(f)});
        REQUIRE(t.code == 0);
        CHECK(contains(t.out, "tau4: " + std::to_string(j["tau4"]["integer"].get<std::int64_t>())));
        CHECK(contains(t.out, "method: " + j["method"].get<std::string>()));
    }
    json torus = run_json({"surgery-tau4", data("torus_2_4.json")});
    CHECK(torus["tau4"]["integer"].is_null());
    CHECK(torus["tau4"]["cyclo"] == json::array({3, 0, 0, 0, 1, 0, 0, 0}));
    CHECK(contains(run({"surgery-tau4", data("torus_2_4.json")}).out, "tau4: 3 + w^4"));
    json c = run_json({"enhanced-classify", data("space_p1_2a0.json")});
    Run t = run({"enhanced-classify", data("space_p1_2a0.json")});
    CHECK(contains(t.out, "brown: " + std::to_string(c["brown"].get<int>())));
}

TEST_CASE("output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--format", "json", "surgery-tau4", data("borromean.json"), "--cross-check"},
             {"--format", "json", "enhanced-classify", data("space_p1_2a0.json")},
             {"--format", "json", "reduce", data("example.cnf"), "--emit", "quad", "--verify"},
             {"surgery-mu", data("whitehead.json")}}) {
        Run a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("matrix inputs use the product path") {
    json j = run_json({"surgery-tau4", data("lk_even_unlink.json")});
    CHECK(j["method"] == "product");
    SymIntMatrix lk = io::matrix_from_json(io::read_json_file(data("lk_even_unlink.json"))["lk"], "lk");
    CHECK(io::to_json(oracle::tau4_brute({{}, lk.rows()}, lk.diag())) == j["tau4"]);
}

TEST_CASE("json round trips") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 30; ++t) {
        EnhancedSpace s = oracle::random_space(rng, 1 + static_cast<int>(rng() % 6));
        EnhancedSpace back_s = io::space_from_json(io::to_json(s));
        CHECK(back_s.form == s.form);
        CHECK(back_s.values == s.values);
        CubicForm c = oracle::random_form(rng, 1 + static_cast<int>(rng() % 6));
        CHECK(io::form_from_json(io::to_json(c)) == c);
        CycloInt v = oracle::random_cyclo(rng, 9);
        json jv = io::to_json(v);
        CycloInt back;
        for (int k = 0; k < 8; ++k) back += CycloInt(jv["cyclo"][k].get<std::int64_t>()) * CycloInt::omega_pow(k);
        CHECK(back == v);
    }
    for (const auto& word : std::vector<std::vector<int>>{{1, 1, 1}, {1, -2, 1, -2, 1}, {1, 1, 2, -1}}) {
        PDLink l = from_braid(word, 3);
        l.framings.assign(l.components, 3);
        CHECK(io::link_from_json(io::to_json(l)) == l);
    }
    LinkInvariantModel m = LinkInvariantModel::trivial(3);
    m.arf[1] = 1;
    m.set_lambda(0, 2, 4);
    m.set_quarter(0, 2, 1);
    m.set_tau(0, 1, 2, 1);
    m.lk(1, 1) = -2;
    CHECK(io::model_from_json(io::to_json(m)) == m);
}

TEST_CASE("input detection") {
    CHECK(cli::input_kind(cli::validate_input(data("trefoil.json"))) == "link diagram");
    CHECK(cli::input_kind(cli::validate_input(data("example.cnf"))) == "DIMACS 3-CNF");
    CHECK(cli::input_kind(cli::validate_input(data("model_borromean.json"))) == "invariant model");
    CHECK_THROWS_AS(cli::validate_input(data("space_bad_parity.json")), ValidationError);
    std::string broken = temp_file("broken.json", "{\"braid\": [1, 1,");
    CHECK_THROWS_AS(cli::validate_input(broken), ValidationError);
}

}  // TEST_SUITE
