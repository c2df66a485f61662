// coqla: command-line front end for split-quaternion determinants, inverses
// and Cramer-rule solvers over matrix files.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "command.hpp"
#include "coqla/oracle.hpp"

namespace {

struct VerbInfo {
    const char* name;
    const char* help;
    const char* inputs;
};

constexpr VerbInfo kVerbs[] = {
    {"det", "determinant of a Hermitian matrix", "A"},
    {"qdet", "q-determinant (determinant of the complex adjoint)", "A"},
    {"rdet", "row determinant rdet_I (see --row)", "A"},
    {"cdet", "column determinant cdet_J (see --col)", "A"},
    {"inv", "inverse of a Hermitian matrix", "A"},
    {"solve-right", "solve A x = y for a column y", "A y"},
    {"solve-left", "solve x A = y for a row y", "A y"},
    {"solve-axb", "solve A X B = C", "A B C"},
    {"solve-ax", "solve A X = C", "A C"},
    {"solve-xb", "solve X B = C", "B C"},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear algebra over split quaternions (coquaternions)", "coqla"};
    app.require_subcommand(1);

    coqla::cli::Command cmd;
    cmd.seed = coqla::seedFromEnvironment(0);
    std::string mode = "exact";

    for (const auto& verb : kVerbs) {
        CLI::App* sub = app.add_subcommand(verb.name, verb.help);
        const auto arity = static_cast<int>(coqla::cli::requiredInputs(verb.name));
        sub->add_option("files", cmd.inputs, std::string("matrix files: ") + verb.inputs)
            ->required()
            ->expected(arity)
            ->check(CLI::ExistingFile);
        sub->add_option("--mode", mode, "scalar backend")
            ->check(CLI::IsMember({"exact", "float"}))
            ->capture_default_str();
        sub->add_option("--row", cmd.row, "1-based row index for rdet")->capture_default_str();
        sub->add_option("--col", cmd.col, "1-based column index for cdet")->capture_default_str();
        sub->add_option("--max-n", cmd.maxN, "largest order for n!-term enumeration")
            ->capture_default_str();
        sub->add_option("--tol", cmd.tol, "relative tolerance (float mode)")->capture_default_str();
        sub->add_flag("--verbose", cmd.verbose, "print determinants to stderr");
        sub->add_flag("--verify", cmd.verify, "print the residual max to stderr");
        sub->add_option("--seed", cmd.seed, "seed for harness runs (default $COQLA_SEED)");
        if (std::string(verb.name) == "solve-axb")
            sub->add_option("--route", cmd.route, "row-first or column-first reduction")
                ->check(CLI::IsMember({"row", "col"}))
                ->capture_default_str();
        if (std::string(verb.name) == "inv")
            sub->add_option("--side", cmd.side, "cofactors used for the adjugate")
                ->check(CLI::IsMember({"left", "right"}))
                ->capture_default_str();
        sub->callback([&cmd, sub] { cmd.verb = sub->get_name(); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : coqla::cli::kInputError;
    }
    cmd.mode = mode == "float" ? coqla::cli::Mode::floating : coqla::cli::Mode::exact;
    return coqla::cli::runCommand(cmd, std::cout, std::cerr);
}
