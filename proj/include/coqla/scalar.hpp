#pragma once

/**
 * Split quaternions (coquaternions) q = w + x i + y j + z k over a pluggable
 * scalar field, with
 *
 *   i^2 = -1,  j^2 = k^2 = 1,
 *   ij = -ji = k,  jk = -kj = -i,  ik = -ki = -j.
 *
 * Two scalar backends are provided: `Rational` (GMP arbitrary precision,
 * exact) and `double`. Values are immutable; all operations are pure.
 */

#include <cmath>
#include <concepts>
#include <string>

#include <gmpxx.h>

#include "coqla/errors.hpp"

namespace coqla {

using Rational = mpq_class;

enum class Backend { exact, floating };

/// Default relative tolerance of the float backend.
inline constexpr double kDefaultTol = 1e-9;

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr Backend backend = Backend::exact;

    static bool isZero(const Rational& v) { return sgn(v) == 0; }
    static double magnitude(const Rational& v) { return std::fabs(v.get_d()); }
    static Rational abs(const Rational& v) { return ::abs(v); }
    static bool lessThan(const Rational& a, const Rational& b) { return a < b; }
    /// Zero test against a scale; exact backend ignores scale and tolerance.
    static bool nearZero(const Rational& v, double /*scale*/, double /*tol*/) { return isZero(v); }
    static bool near(const Rational& a, const Rational& b, double /*tol*/) { return a == b; }
    static double toDouble(const Rational& v) { return v.get_d(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr Backend backend = Backend::floating;

    static bool isZero(double v) { return v == 0.0; }
    static double magnitude(double v) { return std::fabs(v); }
    static double abs(double v) { return std::fabs(v); }
    static bool lessThan(double a, double b) { return a < b; }
    static bool nearZero(double v, double scale, double tol) {
        return std::fabs(v) <= tol * scale;
    }
    /// Relative comparison: |a-b| <= tol * max(1, |a|, |b|).
    static bool near(double a, double b, double tol) {
        const double scale = std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
        return std::fabs(a - b) <= tol * scale;
    }
    static double toDouble(double v) { return v; }
};

template <typename T>
concept Scalar = requires { ScalarTraits<T>::backend; } && std::constructible_from<T, int>;

template <Scalar T>
constexpr bool isExact() {
    return ScalarTraits<T>::backend == Backend::exact;
}

template <Scalar T>
class Coquaternion {
public:
    Coquaternion() : w_(0), x_(0), y_(0), z_(0) {}
    Coquaternion(T w) : w_(std::move(w)), x_(0), y_(0), z_(0) {}  // NOLINT: real embedding
    Coquaternion(T w, T x, T y, T z)
        : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

    static Coquaternion unitI() { return {T(0), T(1), T(0), T(0)}; }
    static Coquaternion unitJ() { return {T(0), T(0), T(1), T(0)}; }
    static Coquaternion unitK() { return {T(0), T(0), T(0), T(1)}; }

    const T& w() const { return w_; }
    const T& x() const { return x_; }
    const T& y() const { return y_; }
    const T& z() const { return z_; }

    const T& real() const { return w_; }
    Coquaternion imaginary() const { return {T(0), x_, y_, z_}; }

    friend Coquaternion operator+(const Coquaternion& p, const Coquaternion& q) {
        return {p.w_ + q.w_, p.x_ + q.x_, p.y_ + q.y_, p.z_ + q.z_};
    }
    friend Coquaternion operator-(const Coquaternion& p, const Coquaternion& q) {
        return {p.w_ - q.w_, p.x_ - q.x_, p.y_ - q.y_, p.z_ - q.z_};
    }
    Coquaternion operator-() const { return {-w_, -x_, -y_, -z_}; }

    friend Coquaternion operator*(const Coquaternion& p, const Coquaternion& q) {
        return {p.w_ * q.w_ - p.x_ * q.x_ + p.y_ * q.y_ + p.z_ * q.z_,
                p.w_ * q.x_ + p.x_ * q.w_ - p.y_ * q.z_ + p.z_ * q.y_,
                p.w_ * q.y_ + p.y_ * q.w_ - p.x_ * q.z_ + p.z_ * q.x_,
                p.w_ * q.z_ + p.z_ * q.w_ + p.x_ * q.y_ - p.y_ * q.x_};
    }

    // Real scalars are central, so s*q == q*s.
    friend Coquaternion operator*(const T& s, const Coquaternion& q) {
        return {s * q.w_, s * q.x_, s * q.y_, s * q.z_};
    }
    friend Coquaternion operator*(const Coquaternion& q, const T& s) { return s * q; }
    friend Coquaternion operator/(const Coquaternion& q, const T& s) {
        return {q.w_ / s, q.x_ / s, q.y_ / s, q.z_ / s};
    }

    Coquaternion& operator+=(const Coquaternion& q) { return *this = *this + q; }
    Coquaternion& operator-=(const Coquaternion& q) { return *this = *this - q; }

    /// Structural equality. For the float backend use approxEqual().
    friend bool operator==(const Coquaternion& p, const Coquaternion& q) {
        return p.w_ == q.w_ && p.x_ == q.x_ && p.y_ == q.y_ && p.z_ == q.z_;
    }

    Coquaternion conj() const { return {w_, -x_, -y_, -z_}; }

    T trace() const { return T(2) * w_; }

    /// The norm form I_q = q * conj(q) = w^2 + x^2 - y^2 - z^2 (may be negative).
    T normForm() const { return w_ * w_ + x_ * x_ - y_ * y_ - z_ * z_; }

    /// Euclidean size of the component vector, used only to scale float tolerances.
    double componentMagnitude() const {
        using Tr = ScalarTraits<T>;
        return std::hypot(std::hypot(Tr::toDouble(w_), Tr::toDouble(x_)),
                          std::hypot(Tr::toDouble(y_), Tr::toDouble(z_)));
    }

    double maxComponentMagnitude() const {
        using Tr = ScalarTraits<T>;
        return std::fmax(std::fmax(Tr::magnitude(w_), Tr::magnitude(x_)),
                         std::fmax(Tr::magnitude(y_), Tr::magnitude(z_)));
    }

    bool isZero(double tol = kDefaultTol) const {
        using Tr = ScalarTraits<T>;
        if constexpr (isExact<T>()) {
            (void)tol;
            return Tr::isZero(w_) && Tr::isZero(x_) && Tr::isZero(y_) && Tr::isZero(z_);
        } else {
            return maxComponentMagnitude() <= tol;
        }
    }

    /// Norm-form zero test; float mode uses |I_q| <= tol * (1 + |q|^2).
    bool normFormIsZero(double tol = kDefaultTol) const {
        const double m = componentMagnitude();
        return ScalarTraits<T>::nearZero(normForm(), 1.0 + m * m, tol);
    }

    /// True iff q != 0 and I_q = 0. Zero itself is not a zero divisor.
    bool isZeroDivisor(double tol = kDefaultTol) const {
        return !isZero(tol) && normFormIsZero(tol);
    }

    Coquaternion inverse(double tol = kDefaultTol) const {
        if (isZero(tol)) throw ZeroDivisorOrZero(true);
        if (normFormIsZero(tol)) throw ZeroDivisorOrZero(false);
        return conj() / normForm();
    }

    /// ||q|| = sqrt(|I_q|). Not used by any algorithm.
    double norm() const { return std::sqrt(ScalarTraits<T>::magnitude(normForm())); }

    bool isUnit(double tol = kDefaultTol) const {
        return ScalarTraits<T>::near(ScalarTraits<T>::abs(normForm()), T(1), tol);
    }

    bool isReal(double tol = kDefaultTol) const { return imaginary().isZero(tol); }

private:
    T w_, x_, y_, z_;
};

/// Backend-aware equality: exact for rationals, relative per component for doubles.
template <Scalar T>
bool approxEqual(const Coquaternion<T>& p, const Coquaternion<T>& q, double tol = kDefaultTol) {
    using Tr = ScalarTraits<T>;
    return Tr::near(p.w(), q.w(), tol) && Tr::near(p.x(), q.x(), tol) &&
           Tr::near(p.y(), q.y(), tol) && Tr::near(p.z(), q.z(), tol);
}

template <Scalar T>
Coquaternion<T> conj(const Coquaternion<T>& q) {
    return q.conj();
}

template <Scalar T>
T trace(const Coquaternion<T>& q) {
    return q.trace();
}

template <Scalar T>
T normForm(const Coquaternion<T>& q) {
    return q.normForm();
}

template <Scalar T>
Coquaternion<T> inverse(const Coquaternion<T>& q, double tol = kDefaultTol) {
    return q.inverse(tol);
}

/// Converts between backends componentwise (rational -> double loses precision).
template <Scalar To, Scalar From>
Coquaternion<To> convertTo(const Coquaternion<From>& q) {
    if constexpr (std::same_as<To, From>) {
        return q;
    } else if constexpr (std::same_as<To, double>) {
        using Tr = ScalarTraits<From>;
        return {Tr::toDouble(q.w()), Tr::toDouble(q.x()), Tr::toDouble(q.y()), Tr::toDouble(q.z())};
    } else {
        return {To(q.w()), To(q.x()), To(q.y()), To(q.z())};
    }
}

using ExactCoq = Coquaternion<Rational>;
using FloatCoq = Coquaternion<double>;

}  // namespace coqla
