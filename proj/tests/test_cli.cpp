#include <sstream>
#include <string>

#include "command.hpp"
#include "doctest.h"

using namespace coqla::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string data(const std::string& name) { return std::string(COQLA_TEST_DATA) + "/" + name; }

Run run(Command cmd) {
    std::ostringstream out, err;
    const int code = runCommand(cmd, out, err);
    return {code, out.str(), err.str()};
}

Command make(const std::string& verb, std::initializer_list<const char*> files) {
    Command c;
    c.verb = verb;
    for (const char* f : files) c.inputs.push_back(data(f));
    return c;
}

}  // namespace

TEST_CASE("arity") {
    CHECK(requiredInputs("det") == 1);
    CHECK(requiredInputs("qdet") == 1);
    CHECK(requiredInputs("solve-left") == 2);
    CHECK(requiredInputs("solve-xb") == 2);
    CHECK(requiredInputs("solve-axb") == 3);
    CHECK(requiredInputs("frobnicate") == 0);
    CHECK(run(make("det", {"a_hermitian3.mat", "ones2.mat"})).code == kInputError);
    CHECK(run(make("frobnicate", {})).code == kInputError);
}

TEST_CASE("determinants") {
    auto r = run(make("det", {"a_hermitian3.mat"}));
    CHECK(r.code == kOk);
    CHECK(r.out == "4\n");
    auto c = make("rdet", {"a_hermitian3.mat"});
    c.row = 3;
    CHECK(run(c).out == "4\n");
    c = make("cdet", {"c_3x2.mat"});
    CHECK(run(c).code == kShapeError);
    c = make("rdet", {"a_hermitian3.mat"});
    c.row = 4;
    r = run(c);
    CHECK(r.code == kShapeError);
    CHECK(r.err.find("1-based") != std::string::npos);
    c = make("det", {"a_hermitian3.mat"});
    c.maxN = 2;
    CHECK(run(c).code == kShapeError);
    CHECK(run(make("qdet", {"a_hermitian3.mat"})).out == "16\n");
}

TEST_CASE("inverse") {
    auto c = make("inv", {"a_hermitian3.mat"});
    c.verify = true;
    c.verbose = true;
    auto r = run(c);
    CHECK(r.code == kOk);
    CHECK(r.out ==
          "0; 1/2-1/2j; 1/4-1/4i+1/4j-1/4k\n"
          "1/2+1/2j; 0; 1/4-1/4i-1/4j+1/4k\n"
          "1/4+1/4i-1/4j+1/4k; 1/4+1/4i+1/4j-1/4k; 0\n");
    CHECK(r.err.find("residual=0") != std::string::npos);
    CHECK(r.err.find("detA=4") != std::string::npos);
    c.side = "right";
    CHECK(run(c).out == r.out);

    r = run(make("inv", {"ones2.mat"}));
    CHECK(r.code == kMathError);
    CHECK(r.err.find("singular") != std::string::npos);
    r = run(make("inv", {"c_3x2.mat"}));
    CHECK(r.code == kMathError);
    CHECK(r.err.find("not Hermitian") != std::string::npos);
}

TEST_CASE("solvers") {
    auto c = make("solve-right", {"a_hermitian3.mat", "y_ijk.mat"});
    c.verbose = true;
    auto r = run(c);
    CHECK(r.out == "-3/4-1/4i+3/4j+1/4k\n1/4+3/4i+1/4j-1/4k\n1/2j+1/2k\n");
    CHECK(r.err == "detA=4\n");

    c = make("solve-axb", {"a_hermitian3.mat", "b_hermitian2.mat", "c_3x2.mat"});
    c.verbose = true;
    c.verify = true;
    r = run(c);
    CHECK(r.code == kOk);
    CHECK(r.err == "detA=4\ndetB=2\nresidual=0\n");
    c.route = "row";
    CHECK(run(c).out == r.out);

    r = run(make("solve-left", {"a_hermitian3.mat", "y_ijk.mat"}));
    CHECK(r.code == kOk);
    r = run(make("solve-ax", {"a_hermitian3.mat", "c_3x2.mat"}));
    CHECK(r.code == kOk);
    r = run(make("solve-xb", {"b_hermitian2.mat", "c_3x2.mat"}));
    CHECK(r.code == kOk);
    r = run(make("solve-right", {"a_hermitian3.mat", "c_3x2.mat"}));
    CHECK(r.code == kShapeError);
    r = run(make("solve-axb", {"a_hermitian3.mat", "ones2.mat", "c_3x2.mat"}));
    CHECK(r.code == kMathError);
    CHECK(r.err.find("matrix B") != std::string::npos);
}

TEST_CASE("float mode") {
    auto c = make("solve-right", {"a_hermitian3.mat", "y_ijk.mat"});
    c.mode = Mode::floating;
    auto r = run(c);
    CHECK(r.code == kOk);
    CHECK(r.out == "-0.75-0.25i+0.75j+0.25k\n0.25+0.75i+0.25j-0.25k\n0.5j+0.5k\n");
}

TEST_CASE("bad input files") {
    CHECK(run(make("det", {"missing.mat"})).code == kInputError);
    auto c = make("det", {});
    c.inputs.push_back(std::string(COQLA_TEST_DATA) + "/../test_cli.cpp");
    CHECK(run(c).code == kInputError);
}
