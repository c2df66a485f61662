// Python bindings. Matrices cross the boundary either as text in the matrix
// file format (exact or float arithmetic) or as float arrays of shape
// (rows, cols, 4) holding w, x, y, z per entry.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <variant>

#include "coqla/coqla.hpp"

namespace py = pybind11;
using namespace coqla;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;
using Input = std::variant<std::string, Array>;

FloatMatrix fromArray(const Array& a) {
    if (a.ndim() != 3 || a.shape(2) != 4)
        throw DimensionError("expected an array of shape (rows, cols, 4)");
    const auto rows = static_cast<std::size_t>(a.shape(0));
    const auto cols = static_cast<std::size_t>(a.shape(1));
    auto v = a.unchecked<3>();
    FloatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i + 1, j + 1) = FloatCoq(v(i, j, 0), v(i, j, 1), v(i, j, 2), v(i, j, 3));
    return m;
}

Array toArray(const FloatMatrix& m) {
    Array out({m.rows(), m.cols(), std::size_t{4}});
    auto v = out.mutable_unchecked<3>();
    for (std::size_t i = 1; i <= m.rows(); ++i)
        for (std::size_t j = 1; j <= m.cols(); ++j) {
            const auto& e = m(i, j);
            v(i - 1, j - 1, 0) = e.w();
            v(i - 1, j - 1, 1) = e.x();
            v(i - 1, j - 1, 2) = e.y();
            v(i - 1, j - 1, 3) = e.z();
        }
    return out;
}

bool textMode(const std::vector<Input>& in) {
    const bool text = std::holds_alternative<std::string>(in.front());
    for (const auto& x : in)
        if (std::holds_alternative<std::string>(x) != text)
            throw py::type_error("mix of text and array operands");
    return text;
}

template <Scalar T>
Matrix<T> load(const Input& x) {
    if constexpr (std::is_same_v<T, double>) {
        if (const auto* a = std::get_if<Array>(&x)) return fromArray(*a);
    }
    return parseMatrix<T>(std::get<std::string>(x));
}

py::object wrap(const FloatMatrix& m, bool text) {
    return text ? py::object(py::str(formatMatrix(m))) : py::object(toArray(m));
}
py::object wrap(const ExactMatrix& m, bool) { return py::str(formatMatrix(m)); }

template <Scalar T>
py::object wrapScalar(const T& v, bool text) {
    if constexpr (std::is_same_v<T, double>) {
        if (!text) return py::float_(v);
    }
    return py::str(formatScalar(v));
}

template <Scalar T>
py::object wrapCoq(const Coquaternion<T>& q, bool text) {
    if constexpr (std::is_same_v<T, double>) {
        if (!text) return py::make_tuple(q.w(), q.x(), q.y(), q.z());
    }
    return py::str(formatCoquaternion(q));
}

// Runs `f` on the exact backend for text in exact mode, on floats otherwise.
template <typename F>
py::object dispatch(const std::vector<Input>& in, const std::string& mode, F&& f) {
    const bool text = textMode(in);
    if (mode != "exact" && mode != "float") throw py::value_error("mode must be 'exact' or 'float'");
    if (text && mode == "exact") return f(Rational{}, text);
    return f(double{}, text);
}

DetOptions options(std::size_t maxN, double tol) {
    DetOptions o;
    o.maxN = maxN;
    o.tol = tol;
    return o;
}

AdjugateSide sideOf(const std::string& s) {
    if (s == "left") return AdjugateSide::left;
    if (s == "right") return AdjugateSide::right;
    throw py::value_error("side must be 'left' or 'right'");
}

TwoSidedRoute routeOf(const std::string& s) {
    if (s == "row") return TwoSidedRoute::rowFirst;
    if (s == "col") return TwoSidedRoute::colFirst;
    throw py::value_error("route must be 'row' or 'col'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Determinants, inverses and Cramer-rule solvers over split quaternions.";

    auto base = py::register_exception<Error>(m, "CoqlaError", PyExc_ValueError);
    py::register_exception<NotHermitian>(m, "NotHermitian", base.ptr());
    py::register_exception<Singular>(m, "Singular", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ZeroDivisorOrZero>(m, "ZeroDivisorOrZero", base.ptr());
    auto dim = py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<IndexError>(m, "IndexError", dim.ptr());
    py::register_exception<SizeCapExceeded>(m, "SizeCapExceeded", base.ptr());

    m.def("mul", [](const std::string& p, const std::string& q) {
        return formatCoquaternion(parseCoquaternion<Rational>(p) * parseCoquaternion<Rational>(q));
    }, py::arg("p"), py::arg("q"), "Exact product of two coquaternions given as text.");
    m.def("conj", [](const std::string& q) {
        return formatCoquaternion(parseCoquaternion<Rational>(q).conj());
    }, py::arg("q"));
    m.def("norm_form", [](const std::string& q) {
        return formatScalar(parseCoquaternion<Rational>(q).normForm());
    }, py::arg("q"));
    m.def("inverse", [](const std::string& q) {
        return formatCoquaternion(parseCoquaternion<Rational>(q).inverse());
    }, py::arg("q"));
    m.def("canonical", [](const std::string& text) {
        return formatMatrix(parseMatrix<Rational>(text));
    }, py::arg("text"), "Matrix text re-emitted in canonical form.");

    m.def("det", [](const Input& a, const std::string& mode, std::size_t maxN, double tol) {
        return dispatch({a}, mode, [&]<typename T>(T, bool text) {
            return wrapScalar(detHermitian(load<T>(a), options(maxN, tol)), text);
        });
    }, py::arg("a"), py::arg("mode") = "exact", py::arg("max_n") = 9, py::arg("tol") = kDefaultTol);

    m.def("rdet", [](const Input& a, std::size_t i, const std::string& mode, std::size_t maxN) {
        return dispatch({a}, mode, [&]<typename T>(T, bool text) {
            return wrapCoq(rdet(i, load<T>(a), options(maxN, kDefaultTol)), text);
        });
    }, py::arg("a"), py::arg("i"), py::arg("mode") = "exact", py::arg("max_n") = 9);

    m.def("cdet", [](const Input& a, std::size_t j, const std::string& mode, std::size_t maxN) {
        return dispatch({a}, mode, [&]<typename T>(T, bool text) {
            return wrapCoq(cdet(j, load<T>(a), options(maxN, kDefaultTol)), text);
        });
    }, py::arg("a"), py::arg("j"), py::arg("mode") = "exact", py::arg("max_n") = 9);

    m.def("qdet", [](const Input& a, const std::string& mode) {
        return dispatch({a}, mode, [&]<typename T>(T, bool text) -> py::object {
            const auto z = qdet(load<T>(a));
            if constexpr (std::is_same_v<T, double>) {
                if (!text) return py::cast(std::complex<double>(z.re, z.im));
            }
            return py::str(formatComplex(z));
        });
    }, py::arg("a"), py::arg("mode") = "exact");

    m.def("inv", [](const Input& a, const std::string& side, const std::string& mode, double tol) {
        return dispatch({a}, mode, [&]<typename T>(T, bool text) {
            return wrap(invHermitian(load<T>(a), sideOf(side), options(9, tol)), text);
        });
    }, py::arg("a"), py::arg("side") = "left", py::arg("mode") = "exact", py::arg("tol") = kDefaultTol);

    m.def("solve_right", [](const Input& a, const Input& y, const std::string& mode) {
        return dispatch({a, y}, mode, [&]<typename T>(T, bool text) {
            return wrap(solveRight(load<T>(a), load<T>(y)).solution, text);
        });
    }, py::arg("a"), py::arg("y"), py::arg("mode") = "exact", "Solves A x = y for a column y.");

    m.def("solve_left", [](const Input& a, const Input& y, const std::string& mode) {
        return dispatch({a, y}, mode, [&]<typename T>(T, bool text) {
            return wrap(solveLeft(load<T>(a), load<T>(y)).solution, text);
        });
    }, py::arg("a"), py::arg("y"), py::arg("mode") = "exact", "Solves x A = y for a row y.");

    m.def("solve_axb", [](const Input& a, const Input& b, const Input& c, const std::string& route,
                          const std::string& mode) {
        return dispatch({a, b, c}, mode, [&]<typename T>(T, bool text) {
            return wrap(solveTwoSided(load<T>(a), load<T>(b), load<T>(c), routeOf(route)).solution,
                        text);
        });
    }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("route") = "col", py::arg("mode") = "exact");

    m.def("solve_ax", [](const Input& a, const Input& c, const std::string& mode) {
        return dispatch({a, c}, mode, [&]<typename T>(T, bool text) {
            return wrap(solveAX(load<T>(a), load<T>(c)).solution, text);
        });
    }, py::arg("a"), py::arg("c"), py::arg("mode") = "exact");

    m.def("solve_xb", [](const Input& b, const Input& c, const std::string& mode) {
        return dispatch({b, c}, mode, [&]<typename T>(T, bool text) {
            return wrap(solveXB(load<T>(b), load<T>(c)).solution, text);
        });
    }, py::arg("b"), py::arg("c"), py::arg("mode") = "exact");
}
