#include "coqla/rcdet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "coqla/cycles.hpp"

namespace coqla {

namespace {

template <Scalar T>
void requireSquare(const Matrix<T>& a, const char* what) {
    if (!a.isSquare())
        throw DimensionError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", expected square");
}

template <Scalar T>
void requireEnumerable(std::size_t index, const Matrix<T>& a, const DetOptions& opts,
                       const char* what) {
    requireSquare(a, what);
    if (a.rows() > opts.maxN) throw SizeCapExceeded(a.rows(), opts.maxN);
    if (index < 1 || index > a.rows()) throw IndexError(what, index, a.rows());
}

// Signed sum over all n! permutations in lexicographic one-line order; the
// fixed order keeps float results reproducible.
template <Scalar T>
Coquaternion<T> enumerate(std::size_t anchor, const Matrix<T>& a, CycleOrder order) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    Coquaternion<T> sum;
    do {
        const CycleForm form = cycleDecompose(perm, anchor, order);
        const auto chain = form.factorChain();
        Coquaternion<T> term = a(chain.front().first, chain.front().second);
        for (std::size_t f = 1; f < chain.size(); ++f) term = term * a(chain[f].first, chain[f].second);
        if (form.sign > 0)
            sum += term;
        else
            sum -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

// Index (in the renumbered (n-1)x(n-1) minor) of the diagonal-cofactor anchor
// min({1..n} \ {removed}).
std::size_t diagonalAnchor(std::size_t removed) {
    const std::size_t k = (removed == 1) ? 2 : 1;
    return k < removed ? k : k - 1;
}

void checkCofactorIndices(std::size_t i, std::size_t j, std::size_t n) {
    if (i < 1 || i > n) throw IndexError("cofactor row", i, n);
    if (j < 1 || j > n) throw IndexError("cofactor column", j, n);
}

template <Scalar T, typename RowDet>
Coquaternion<T> rightCofactorWith(std::size_t i, std::size_t j, const Matrix<T>& a,
                                  RowDet&& rowDet) {
    requireSquare(a, "rightCofactor");
    const std::size_t n = a.rows();
    checkCofactorIndices(i, j, n);
    if (n == 1) return Coquaternion<T>(T(1));
    if (i == j) return rowDet(diagonalAnchor(i), a.deleteRowCol(i, i));
    const std::size_t k = (i > j) ? j : j - 1;
    const auto aii = a.col(i);
    return -rowDet(k, a.replaceCol(j, aii).deleteRowCol(i, i));
}

template <Scalar T, typename ColDet>
Coquaternion<T> leftCofactorWith(std::size_t i, std::size_t j, const Matrix<T>& a,
                                 ColDet&& colDet) {
    requireSquare(a, "leftCofactor");
    const std::size_t n = a.rows();
    checkCofactorIndices(i, j, n);
    if (n == 1) return Coquaternion<T>(T(1));
    if (i == j) return colDet(diagonalAnchor(j), a.deleteRowCol(j, j));
    const std::size_t k = (j > i) ? i : i - 1;
    const auto ajj = a.row(j);
    return -colDet(k, a.replaceRow(i, ajj).deleteRowCol(j, j));
}

template <Scalar T>
bool nearWithScale(const Coquaternion<T>& p, const Coquaternion<T>& q, double scale, double tol) {
    using Tr = ScalarTraits<T>;
    const Coquaternion<T> d = p - q;
    return Tr::nearZero(d.w(), scale, tol) && Tr::nearZero(d.x(), scale, tol) &&
           Tr::nearZero(d.y(), scale, tol) && Tr::nearZero(d.z(), scale, tol);
}

template <Scalar T>
double determinantScale(const Matrix<T>& a) {
    return std::pow(1.0 + a.maxEntryMagnitude(), static_cast<double>(a.rows()));
}

}  // namespace

template <Scalar T>
Coquaternion<T> rdet(std::size_t i, const Matrix<T>& a, const DetOptions& opts) {
    requireEnumerable(i, a, opts, "rdet");
    return enumerate(i, a, CycleOrder::left);
}

template <Scalar T>
Coquaternion<T> cdet(std::size_t j, const Matrix<T>& a, const DetOptions& opts) {
    requireEnumerable(j, a, opts, "cdet");
    return enumerate(j, a, CycleOrder::right);
}

template <Scalar T>
Coquaternion<T> rightCofactor(std::size_t i, std::size_t j, const Matrix<T>& a,
                              const DetOptions& opts) {
    return rightCofactorWith(i, j, a, [&](std::size_t k, const Matrix<T>& m) {
        return rdet(k, m, opts);
    });
}

template <Scalar T>
Coquaternion<T> leftCofactor(std::size_t i, std::size_t j, const Matrix<T>& a,
                             const DetOptions& opts) {
    return leftCofactorWith(i, j, a, [&](std::size_t k, const Matrix<T>& m) {
        return cdet(k, m, opts);
    });
}

template <Scalar T>
Coquaternion<T> rdetByExpansion(std::size_t i, const Matrix<T>& a, const DetOptions& opts) {
    requireEnumerable(i, a, opts, "rdetByExpansion");
    const std::size_t n = a.rows();
    if (n == 1) return a(1, 1);
    Coquaternion<T> sum;
    for (std::size_t j = 1; j <= n; ++j) {
        sum += a(i, j) * rightCofactorWith(i, j, a, [&](std::size_t k, const Matrix<T>& m) {
                   return rdetByExpansion(k, m, opts);
               });
    }
    return sum;
}

template <Scalar T>
Coquaternion<T> cdetByExpansion(std::size_t j, const Matrix<T>& a, const DetOptions& opts) {
    requireEnumerable(j, a, opts, "cdetByExpansion");
    const std::size_t n = a.rows();
    if (n == 1) return a(1, 1);
    Coquaternion<T> sum;
    for (std::size_t i = 1; i <= n; ++i) {
        sum += leftCofactorWith(i, j, a, [&](std::size_t k, const Matrix<T>& m) {
                   return cdetByExpansion(k, m, opts);
               }) *
               a(i, j);
    }
    return sum;
}

template <Scalar T>
T detHermitian(const Matrix<T>& a, const DetOptions& opts) {
    if (!a.isHermitian(opts.tol)) throw NotHermitian("A");
    const Coquaternion<T> r = rdet(1, a, opts);
    const double scale = determinantScale(a);
    if (opts.crossCheck) {
        const Coquaternion<T> c = cdet(1, a, opts);
        if (!nearWithScale(r, c, scale, opts.tol))
            throw Error("detHermitian: rdet_1 and cdet_1 disagree");
    }
    if (!nearWithScale(r.imaginary(), Coquaternion<T>(), scale, opts.tol))
        throw Error("detHermitian: determinant has a non-real part");
    return r.w();
}

template <Scalar T>
bool detIsZero(const T& det, const Matrix<T>& a, double tol) {
    return ScalarTraits<T>::nearZero(det, determinantScale(a), tol);
}

#define COQLA_INSTANTIATE_RCDET(T)                                                              \
    template Coquaternion<T> rdet(std::size_t, const Matrix<T>&, const DetOptions&);           \
    template Coquaternion<T> cdet(std::size_t, const Matrix<T>&, const DetOptions&);           \
    template Coquaternion<T> rightCofactor(std::size_t, std::size_t, const Matrix<T>&,         \
                                           const DetOptions&);                                 \
    template Coquaternion<T> leftCofactor(std::size_t, std::size_t, const Matrix<T>&,          \
                                          const DetOptions&);                                  \
    template Coquaternion<T> rdetByExpansion(std::size_t, const Matrix<T>&, const DetOptions&); \
    template Coquaternion<T> cdetByExpansion(std::size_t, const Matrix<T>&, const DetOptions&); \
    template T detHermitian(const Matrix<T>&, const DetOptions&);                              \
    template bool detIsZero(const T&, const Matrix<T>&, double);

COQLA_INSTANTIATE_RCDET(Rational)
COQLA_INSTANTIATE_RCDET(double)

#undef COQLA_INSTANTIATE_RCDET

}  // namespace coqla
