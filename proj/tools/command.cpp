#include "command.hpp"

#include <ostream>

#include "coqla/coqla.hpp"

namespace coqla::cli {

namespace {

template <Scalar T>
Matrix<T> asColumn(Matrix<T> v) {
    return (v.rows() == 1 && v.cols() > 1) ? v.transpose() : v;
}

template <Scalar T>
Matrix<T> asRow(Matrix<T> v) {
    return (v.cols() == 1 && v.rows() > 1) ? v.transpose() : v;
}

template <Scalar T>
void report(const Command& cmd, const SolveOutcome<T>& r, std::ostream& out, std::ostream& err) {
    out << formatMatrix(r.solution);
    if (cmd.verbose) {
        if (cmd.verb != "solve-xb") err << "detA=" << formatScalar(r.detA) << '\n';
        if (r.detB) err << "detB=" << formatScalar(*r.detB) << '\n';
    }
    if (cmd.verify) err << "residual=" << formatScalar(r.residualMax) << '\n';
}

template <Scalar T>
int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    DetOptions opts;
    opts.maxN = cmd.maxN;
    opts.tol = cmd.tol;
    std::vector<Matrix<T>> in;
    for (const auto& path : cmd.inputs) in.push_back(readMatrixFile<T>(path));
    const std::string& v = cmd.verb;

    if (v == "det") {
        out << formatScalar(detHermitian(in[0], opts)) << '\n';
    } else if (v == "qdet") {
        out << formatComplex(qdet(in[0])) << '\n';
    } else if (v == "rdet") {
        out << formatCoquaternion(rdet(cmd.row, in[0], opts)) << '\n';
    } else if (v == "cdet") {
        out << formatCoquaternion(cdet(cmd.col, in[0], opts)) << '\n';
    } else if (v == "inv") {
        const auto side = cmd.side == "right" ? AdjugateSide::right : AdjugateSide::left;
        const Matrix<T> inv = invHermitian(in[0], side, opts);
        out << formatMatrix(inv);
        if (cmd.verbose) err << "detA=" << formatScalar(detHermitian(in[0], opts)) << '\n';
        if (cmd.verify) {
            const auto id = Matrix<T>::identity(in[0].rows());
            T r1 = (in[0] * inv - id).maxAbsComponent();
            T r2 = (inv * in[0] - id).maxAbsComponent();
            err << "residual=" << formatScalar(ScalarTraits<T>::lessThan(r1, r2) ? r2 : r1) << '\n';
        }
    } else if (v == "solve-right") {
        report(cmd, solveRight(in[0], asColumn(in[1]), opts), out, err);
    } else if (v == "solve-left") {
        report(cmd, solveLeft(in[0], asRow(in[1]), opts), out, err);
    } else if (v == "solve-axb") {
        const auto route = cmd.route == "row" ? TwoSidedRoute::rowFirst : TwoSidedRoute::colFirst;
        report(cmd, solveTwoSided(in[0], in[1], in[2], route, opts), out, err);
    } else if (v == "solve-ax") {
        report(cmd, solveAX(in[0], in[1], opts), out, err);
    } else if (v == "solve-xb") {
        report(cmd, solveXB(in[0], in[1], opts), out, err);
    }
    return kOk;
}

}  // namespace

std::size_t requiredInputs(const std::string& verb) {
    if (verb == "det" || verb == "qdet" || verb == "rdet" || verb == "cdet" || verb == "inv")
        return 1;
    if (verb == "solve-right" || verb == "solve-left" || verb == "solve-ax" || verb == "solve-xb")
        return 2;
    if (verb == "solve-axb") return 3;
    return 0;
}

int runCommand(const Command& cmd, std::ostream& out, std::ostream& err) {
    const std::size_t arity = requiredInputs(cmd.verb);
    if (arity == 0) {
        err << "error: unknown command '" << cmd.verb << "'\n";
        return kInputError;
    }
    if (cmd.inputs.size() != arity) {
        err << "error: " << cmd.verb << " takes " << arity << " matrix file(s), got "
            << cmd.inputs.size() << '\n';
        return kInputError;
    }
    try {
        return cmd.mode == Mode::exact ? run<Rational>(cmd, out, err)
                                       : run<double>(cmd, out, err);
    } catch (const NotHermitian& e) {
        err << "error: " << e.what() << '\n';
        return kMathError;
    } catch (const Singular& e) {
        err << "error: " << e.what() << '\n';
        return kMathError;
    } catch (const ParseError& e) {
        err << "error: parse: " << e.what() << '\n';
        return kInputError;
    } catch (const IndexError& e) {
        err << "error: " << e.what() << " (indices are 1-based)\n";
        return kShapeError;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return kShapeError;
    } catch (const SizeCapExceeded& e) {
        err << "error: " << e.what() << " (raise it with --max-n)\n";
        return kShapeError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kMathError;
    }
}

}  // namespace coqla::cli
