#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd = std::string(GSPT_CLI_PATH) + " " + args + " 2>/dev/null";
    if (!stdin_text.empty()) {
        const std::string path = "cli_stdin.json";
        std::ofstream(path) << stdin_text;
        cmd = std::string(GSPT_CLI_PATH) + " " + args + " < " + path + " 2>/dev/null";
    }
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("documented command outputs") {
    auto g = run("gamma simple --g 2");
    CHECK(g.code == 0);
    CHECK(g.out == "{\"value\":\"4/11\"}\n");

    auto o = run("group order --family sp --g 1 --ell 3 --level 2 --method formula");
    CHECK(o.code == 0);
    CHECK(o.out == "{\"order\":\"648\"}\n");

    auto e = run("exceptional --g 10");
    CHECK(e.code == 0);
    CHECK(e.out == "{\"exceptional\":true,\"witness\":{\"kind\":\"binomial\",\"k\":3}}\n");
}

TEST_CASE("group commands") {
    CHECK(parse(run("group order --family sp --g 1 --ell 3 --level 2 --method enumerate"))["order"] == "648");
    CHECK(parse(run("group order --family gsp --g 1 --ell 3 --method enumerate"))["order"] == "48");
    CHECK(parse(run("group codim --g 2 --r 2 --s 1"))["codim"] == 9);
    CHECK(parse(run("group codim --g 2 --r 1"))["codim"] == 4);
    auto en = parse(run("group enumerate --family prs --g 1 --r 1 --s 1 --ell 3"));
    CHECK(en["order"] == "1");
    CHECK(en["elements"].size() == 1);
    auto idx = parse(run("group index --g 1 --ell 3 --chain 2:1:1 --enumerate"));
    CHECK(idx["exponent"] == 6);
    CHECK(idx["index"] == "648");

    const std::string elem =
        R"({"matrix":{"ell":5,"precision":1,"rows":2,"cols":2,"entries":["2","0","0","1"]},"multiplier":"2"})";
    auto f = parse(run("group factorize --input -", elem));
    CHECK(f["sp_part"]["matrix"]["entries"] == nlohmann::json::array({"2", "0", "0", "3"}));
    CHECK(f["scalar_block"]["multiplier"] == "2");
}

TEST_CASE("lattice commands") {
    const std::string l = R"({"ell":3,"precision":3,"ambient_rank":2,"rank":1,
        "generators":{"ell":3,"precision":3,"rows":2,"cols":1,"entries":["3","0"]}})";
    auto s = parse(run("lattice saturate --input -", l));
    CHECK(s["rank"] == 1);
    CHECK(s["generators"]["entries"] == nlohmann::json::array({"1", "0"}));

    const std::string lag = R"({"ell":3,"precision":2,"ambient_rank":2,"rank":1,
        "generators":{"ell":3,"precision":2,"rows":2,"cols":1,"entries":["1","3"]}})";
    auto c = parse(run("lattice complete --input -", lag));
    CHECK(c["g"] == 1);
    CHECK(c["basis"]["entries"][0] == "1");
    CHECK(c["basis"]["entries"][2] == "3");

    const std::string sub = R"({"ell":3,"precision":1,"ambient_rank":4,"rank":1,
        "generators":{"ell":3,"precision":1,"rows":4,"cols":1,"entries":[1,1,0,0]}})";
    auto up = parse(run("lattice lift --precision 4 --input -", sub));
    CHECK(up["precision"] == 4);
    CHECK(up["rank"] == 1);
}

TEST_CASE("torsion commands") {
    const std::string a3 = R"({"ell":3,"precision":1,"ambient_rank":2,"generators":[
        {"coords":["1","0"],"order_exp":1},{"coords":["0","1"],"order_exp":1}]})";
    CHECK(parse(run("torsion type --input -", a3))["multiplicities"] == nlohmann::json::array({2}));
    CHECK(parse(run("torsion pairing --input -", a3))["k"] == 1);
    auto m = parse(run("torsion m1 --input -", a3));
    CHECK(m["m1"] == 1);
    CHECK(m["m"] == 1);
    auto st = parse(run("torsion stabilizer --family sp --input -", a3));
    CHECK(st["order"] == "1");
    CHECK(st["index"] == "24");
    CHECK(parse(run("torsion delta --input -", a3))["delta"] == "2");
    auto p = parse(run("torsion predict-degree --input -", a3));
    CHECK(p["exponent"] == 4);
    CHECK(p["ratio"] == "1/2");
    auto ch = parse(run("torsion chain --input -", a3));
    CHECK(ch["chain"][0]["r"] == 1);
    CHECK(ch["chain"][0]["s"] == 1);
    CHECK(ch["chain"][0]["delta"] == 1);

    const std::string prod = std::string("{\"factors\":[") + a3 + "," + a3 + "]}";
    auto pp = parse(run("torsion predict-degree --input -", prod));
    CHECK(pp["m"] == 1);
    CHECK(pp["exponent"] == 7);
    CHECK(pp["ratio"] == "4/7");
}

TEST_CASE("exponent commands") {
    auto p = parse(run("gamma product --factor g=1,n=2 --factor g=2,n=3"));
    CHECK(p["value"] == "8/7");
    CHECK(p["maximizers"] == nlohmann::json::parse("[[1,2]]"));
    CHECK(parse(run("gamma product --kind rho1 --factor g=3,n=1"))["value"] == "1/5");
    CHECK(parse(run("gamma search --g 2 --max-t 2 --max-level 3"))["value"] == "4/11");
    auto e = parse(run("exceptional --g 4"));
    CHECK(e["witness"]["kind"] == "power");
    CHECK(e["witness"]["a"] == "1");
    CHECK(parse(run("exceptional --g 5"))["exceptional"] == false);
}

TEST_CASE("verification suites and exit codes") {
    auto a = run("verify abel --trials 50 --seed 7 --bound 6");
    CHECK(a.code == 0);
    auto rep = parse(a);
    CHECK(rep["suite"] == "abel");
    CHECK(rep["summary"]["failed"] == "0");
    CHECK(rep["checks"].size() == 70);
    CHECK(run("verify abel --trials 50 --seed 7 --bound 6").out == a.out);
    CHECK(parse(run("verify prop63 --trials 20"))["suite"] == "rho-bounds");
    CHECK(run("verify exceptional").code == 0);
    CHECK(run("verify lemma2-11").code == 0);

    CHECK(run("verify no-such-suite").code == 2);
    CHECK(run("gamma simple").code == 2);
    CHECK(run("gamma simple --g x").code == 2);
    CHECK(run("torsion type --input -", "{not json").code == 2);
    CHECK(run("--budget-log2 8 group order --family sp --g 2 --ell 3 --method enumerate").code == 4);
    CHECK(run("group order --family sp --g 2 --ell 3 --method enumerate --budget-log2 8").code == 4);
}

TEST_CASE("json output path") {
    const std::string path = "cli_out.json";
    std::remove(path.c_str());
    auto r = run("--json " + path + " gamma simple --g 1");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "{\"value\":\"1/2\"}\n");
}
