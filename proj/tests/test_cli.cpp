#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spindle/cli.hpp"

using namespace spindle;

namespace {

struct CliResult {
    int rc = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "spindle");
    std::vector<const char*> argv;
    for (const std::string& s : args) argv.push_back(s.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.rc = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_file(const std::string& name, const std::string& content) {
    std::ofstream f(name);
    REQUIRE(f.good());
    f << content;
    return name;
}

std::string catalan_file() {
    return write_file("cli_catalan.json",
                      "{\"name\":\"catalan\",\"moments\":[\"1\",\"2\",\"5\",\"14\",\"42\"]}");
}

std::string bell_file() {
    return write_file("cli_bell.json",
                      "{\"name\":\"bell\",\"moments\":[\"1\",\"2\",\"5\",\"15\",\"52\"]}");
}

std::string spec_file(const std::string& name, const std::string& blocks) {
    return write_file("cli_spec_" + name + ".json",
                      "{\"name\":\"" + name + "\",\"blocks\":[" + blocks + "]}");
}

}  // namespace

TEST_CASE("pinned kreweras example") {
    CliResult r = run({"nc", "kreweras", "{1,2},{3}"});
    CHECK(r.rc == 0);
    CHECK(r.out == "{1},{2,3}\n");
    CHECK(r.err.empty());

    CliResult j = run({"nc", "kreweras", "{1,2},{3}", "--format", "json"});
    CHECK(j.rc == 0);
    CHECK(j.out == "\"{1},{2,3}\"\n");
}

TEST_CASE("pinned boxtimes example") {
    std::string cat = catalan_file();
    CliResult r = run({"conv", "boxtimes", cat, cat, "--n", "4"});
    CHECK(r.rc == 0);
    CHECK(r.out == "[\"1\",\"3\",\"12\",\"55\"]\n");
}

TEST_CASE("output is byte stable across runs") {
    std::string cat = catalan_file();
    std::vector<std::vector<std::string>> cmds{
        {"nc", "enumerate", "4"},
        {"nc", "enumerate", "4", "--format", "json"},
        {"cum", "boolean", cat},
        {"verify", "partitions", "--max-n", "4"},
        {"verify", "tangles", "--max-n", "3", "--seed", "5"},
    };
    for (const auto& cmd : cmds) {
        CliResult a = run(cmd), b = run(cmd);
        CHECK(a.rc == b.rc);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("json output parses back losslessly") {
    CliResult r = run({"nc", "enumerate", "4", "--format", "json"});
    REQUIRE(r.rc == 0);
    Json arr = Json::parse(r.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 14);
    for (const Json& s : arr) {
        Partition p = parse_partition(s.get<std::string>(), 4);
        CHECK(partition_str(p) == s.get<std::string>());
    }

    std::string spec = spec_file("cm2", "1,2");
    CliResult ev = run({"gpa", "eval", "S 1", "--spec", spec, "--format", "json"});
    REQUIRE(ev.rc == 0);
    LoopVector v = loop_vector_from_json(Json::parse(ev.out));
    AlgebraSpec sp("cm2", {1, 2});
    CHECK(v == identity_element(sp, 1));

    CliResult dep = run({"nc", "depth", "{1,6},{2,3},{4,5}", "--format", "json"});
    REQUIRE(dep.rc == 0);
    Json obj = Json::parse(dep.out);
    CHECK(obj.at("{1,6}") == 1);
    CHECK(obj.at("{2,3}") == 2);
    CHECK(obj.at("{4,5}") == 2);
}

TEST_CASE("usage errors exit 2 with a help pointer") {
    CHECK(run({"bogus"}).rc == 2);
    CHECK(run({}).rc == 2);
    CHECK(run({"nc"}).rc == 2);
    CHECK(run({"nc", "kreweras"}).rc == 2);
    CHECK(run({"nc", "enumerate", "4", "--class", "weird"}).rc == 2);
    CHECK(run({"nc", "enumerate", "4", "--max-n", "0"}).rc == 2);

    CliResult r = run({"nc", "kreweras", "{1,3},{2"});
    CHECK(r.rc == 2);
    CHECK(r.err.find("SyntaxError") != std::string::npos);
    CHECK(r.err.find("nc kreweras --help") != std::string::npos);

    CliResult crossing = run({"nc", "kreweras", "{1,3},{2,4}"});
    CHECK(crossing.rc == 2);
    CHECK(crossing.err.find("NotNonCrossing") != std::string::npos);

    CliResult missing = run({"cum", "free", "no_such_file.json"});
    CHECK(missing.rc == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    CliResult capped = run({"nc", "enumerate", "9"});
    CHECK(capped.rc == 2);
    CHECK(capped.err.find("--max-n") != std::string::npos);

    CliResult nospec = run({"gpa", "basis", "--n", "1"});
    CHECK(nospec.rc == 2);
    CHECK(nospec.err.find("--spec") != std::string::npos);
}

TEST_CASE("help screens exit 0") {
    CliResult root = run({"--help"});
    CHECK(root.rc == 0);
    CHECK(root.out.find("Subcommands") != std::string::npos);
    CliResult sub = run({"nc", "kreweras", "--help"});
    CHECK(sub.rc == 0);
    CHECK(sub.out.find("partition") != std::string::npos);
}

TEST_CASE("nc subcommands") {
    CHECK(run({"nc", "nested-kreweras", "{1,2,5,6},{3,4}"}).out == "{1,2},{3,4},{5,6}\n");
    CHECK(run({"nc", "depth", "{1,6},{2,3},{4,5}"}).out ==
          "{1,6}: 1\n{2,3}: 2\n{4,5}: 2\n");
    CHECK(run({"nc", "surgery", "merge", "{1,4},{2,3},{5}", "{1,4}", "{5}"}).out ==
          "{1,4,5},{2,3}\n");
    CHECK(run({"nc", "surgery", "split", "{1,2,3},{4}", "{1,2,3}", "1"}).out ==
          "{1},{2,3},{4}\n");
    CliResult env = run({"nc", "envelope", "{1,4},{2,3},{5}", "{2,3}"});
    CHECK(env.out == "upper: {1,3}\nlower: {2}\n");
    CliResult envj = run({"nc", "envelope", "{1,4},{2,3},{5}", "{2,3}", "--format", "json"});
    CHECK(Json::parse(envj.out) == Json({{"upper", "{1,3}"}, {"lower", {"{2}"}}}));

    CliResult merge_ok = run({"nc", "surgery", "merge", "{1,3},{2},{4}", "{1,3}", "{4}"});
    CHECK(merge_ok.rc == 0);
    CHECK(merge_ok.out == "{1,3,4},{2}\n");
    CliResult merge_bad = run({"nc", "surgery", "merge", "{1,2},{3,6},{4,5}", "{1,2}", "{4,5}"});
    CHECK(merge_bad.rc == 2);
    CHECK(merge_bad.err.find("NotAdjacent") != std::string::npos);
}

TEST_CASE("cumulant transforms") {
    std::string cat = catalan_file();
    CHECK(run({"cum", "free", cat}).out == "[\"1\",\"1\",\"1\",\"1\",\"1\"]\n");
    CHECK(run({"cum", "boolean", cat}).out == "[\"1\",\"1\",\"2\",\"5\",\"14\"]\n");
    std::string bc = write_file("cli_bcum.json", "[\"1\",\"1\",\"2\",\"5\"]");
    CHECK(run({"cum", "invert", bc, "--kind", "boolean"}).out == "[\"1\",\"2\",\"5\",\"14\"]\n");
    std::string fc = write_file("cli_fcum.json", "[\"1\",\"1\",\"1\",\"1\"]");
    CHECK(run({"cum", "invert", fc, "--kind", "free"}).out == "[\"1\",\"2\",\"5\",\"14\"]\n");
}

TEST_CASE("bn-check agrees and reports") {
    std::string cat = catalan_file(), bell = bell_file();
    CliResult r = run({"conv", "bn-check", cat, bell, "--n", "5"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("equal: true") != std::string::npos);
    CliResult j = run({"conv", "bn-check", cat, bell, "--n", "5", "--format", "json"});
    Json obj = Json::parse(j.out);
    CHECK(obj.at("equal") == true);
    CHECK(obj.at("counterexample").is_null());
    CHECK(obj.at("lhs") == obj.at("rhs"));
}

TEST_CASE("tangle subcommands") {
    CliResult p = run({"tangle", "parse", "compose(Mult 2, 1, E(2,1))"});
    CHECK(p.out == "expr: compose(Mult 2, 1, E(2,1))\ndegree: 2\nslots: [2]\n");
    CHECK(run({"tangle", "pi", "Tpi[{1,2},{3,4}]"}).out == "{1,2},{3,4}\n");
    CHECK(run({"tangle", "shading", "Tpi[{1,2},{3,4}]"}).out == "{1,2},{3,4}\n");

    CliResult free_yes = run({"tangle", "free", "Tpi[{1,2,3,4}]", "Tpi[{1,2},{3,4}]"});
    CHECK(free_yes.rc == 0);
    CHECK(free_yes.out == "free: true\n");
    CliResult free_no = run({"tangle", "free", "Tpi[{1,2,3,4}]", "Tpi[{1,2,3,4}]"});
    CHECK(free_no.rc == 1);
    CHECK(free_no.out == "free: false\n");

    CliResult red = run({"tangle", "reduce", "Tpi[{1,2},{3,4}]", "--format", "json"});
    Json obj = Json::parse(red.out);
    CHECK(obj.at("pi") == "{1,2},{3,4}");
    CHECK(obj.at("factors").size() == 2);
}

TEST_CASE("gpa subcommands") {
    std::string cm2 = spec_file("cm2", "1,2");
    std::string cc = spec_file("cc", "1,1");
    std::string c4 = spec_file("c4", "1,1,1,1");

    CliResult basis = run({"gpa", "basis", "--n", "1", "--spec", cm2});
    CHECK(basis.rc == 0);
    CHECK(basis.out == "[[1,1],[1,1]]\n[[2,1],[2,1]]\n[[2,1],[2,2]]\n[[2,2],[2,1]]\n[[2,2],[2,2]]\n");

    CliResult id = run({"gpa", "eval", "S 1", "--spec", cm2, "--format", "json"});
    std::string vec = write_file("cli_vec.json", id.out);
    CHECK(run({"gpa", "trace", vec, "--spec", cm2}).out == "1\n");
    CHECK(run({"gpa", "trace", vec, "--spec", cm2, "--side", "left"}).out == "1\n");
    CliResult tr = run({"gpa", "eval", "TrR 1", vec, "--spec", cm2});
    CHECK(tr.out == "degree: 0\nterms: 1\n1 []\n");

    CliResult gram = run({"gpa", "gram", "--n", "1", "--spec", cc, "--format", "json"});
    Json g = Json::parse(gram.out);
    CHECK(g.at("rank") == 2);
    CHECK(g.at("psd") == true);
    Json expected_matrix =
        Json::array({Json::array({"1/2", "0"}), Json::array({"0", "1/2"})});
    CHECK(g.at("matrix") == expected_matrix);

    CliResult tl = run({"gpa", "tl", "--n", "2", "--spec", c4});
    CHECK(tl.out == "count: 2\nrank: 2\n");

    CliResult boolean = run({"gpa", "boolean", "--n", "3", "--spec", c4, "--source", "tl"});
    CHECK(boolean.out == "[1,1,2]\n");
}

TEST_CASE("fp and group subcommands") {
    std::string cat = catalan_file();
    std::string bell = bell_file();
    std::string c4 = spec_file("c4", "1,1,1,1");

    CHECK(run({"fp", "dims", cat, cat, "--n", "5"}).out == "[\"1\",\"3\",\"12\",\"55\",\"273\"]\n");
    CHECK(run({"fp", "dims", cat, cat, "--n", "2", "--product", "tensor"}).out ==
          "[\"1\",\"4\"]\n");
    CHECK(run({"fp", "rank", c4, c4, "--n", "2"}).out == "[\"1\",\"3\"]\n");

    CliResult labels = run({"fp", "basis", cat, cat, "--n", "2", "--format", "json"});
    Json arr = Json::parse(labels.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 3);
    for (const Json& l : arr) CHECK(basis_label_to_json(basis_label_from_json(l)) == l);

    CliResult wreath = run({"fp", "wreath-moments", bell, bell, "--n", "4"});
    CliResult box = run({"conv", "boxtimes", bell, bell, "--n", "4"});
    CHECK(wreath.out == box.out);

    CHECK(run({"group", "moments", "--perm", "2,1,3", "--perm", "2,3,1", "--k", "3"}).out ==
          "[\"1\",\"2\",\"5\"]\n");

    std::string bad = write_file("cli_bad.json",
                                 "{\"name\":\"bad\",\"moments\":[\"2\",\"1\"]}");
    CliResult neg = run({"fp", "dims", bad, cat, "--n", "2"});
    CHECK(neg.rc == 2);
    CHECK(neg.err.find("NegativeBooleanCumulant") != std::string::npos);
}

TEST_CASE("verify runs suites and records the seed") {
    CliResult r = run({"verify", "all", "--max-n", "4", "--seed", "42"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("seed: 42\n") == 0);
    CHECK(r.out.find("partitions: pass") != std::string::npos);
    CHECK(r.out.find("freeprod: pass") != std::string::npos);
    CHECK(r.out.find("verify: ok") != std::string::npos);

    CliResult j = run({"verify", "all", "--max-n", "4", "--seed", "42", "--format", "json"});
    Json obj = Json::parse(j.out);
    CHECK(obj.at("ok") == true);
    CHECK(obj.at("seed") == 42);
    CHECK(obj.at("max_n") == 4);
    CHECK(obj.at("suites").size() == 5);
    for (const Json& s : obj.at("suites")) CHECK(s.at("pass") == true);

    CliResult one = run({"verify", "gpa", "--max-n", "3", "--spec",
                         spec_file("c4", "1,1,1,1")});
    CHECK(one.rc == 0);
    CHECK(one.out.find("gpa: pass") != std::string::npos);
}
