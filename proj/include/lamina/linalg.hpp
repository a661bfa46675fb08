#pragma once

#include <array>
#include <cmath>
#include <cstddef>

// Small fixed-size vectors and matrices used throughout. DIM is 2 or 3.

namespace lamina {

template <int D>
struct Vec {
    std::array<double, D> v{};

    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < D; ++i) v[i] += o.v[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < D; ++i) v[i] -= o.v[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < D; ++i) v[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator-(Vec a) { return a *= -1.0; }

    friend double dot(const Vec& a, const Vec& b) {
        double s = 0;
        for (int i = 0; i < D; ++i) s += a.v[i] * b.v[i];
        return s;
    }
    friend double norm2(const Vec& a) { return dot(a, a); }
    friend double norm(const Vec& a) { return std::sqrt(dot(a, a)); }
};

inline Vec<3> cross(const Vec<3>& a, const Vec<3>& b) {
    return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

// z-component of the 2D cross product.
inline double cross2(const Vec<2>& a, const Vec<2>& b) { return a[0] * b[1] - a[1] * b[0]; }

// Counterclockwise perpendicular.
inline Vec<2> perp(const Vec<2>& a) { return {{-a[1], a[0]}}; }

template <int D>
Vec<D> normalized(const Vec<D>& a) {
    double n = norm(a);
    Vec<D> r = a;
    if (n > 0) r *= 1.0 / n;
    return r;
}

// Row-major D x D matrix.
template <int D>
struct Mat {
    std::array<double, D * D> m{};

    double& operator()(int r, int c) { return m[r * D + c]; }
    double operator()(int r, int c) const { return m[r * D + c]; }

    static Mat identity() {
        Mat I;
        for (int i = 0; i < D; ++i) I(i, i) = 1.0;
        return I;
    }

    Vec<D> col(int c) const {
        Vec<D> r;
        for (int i = 0; i < D; ++i) r[i] = (*this)(i, c);
        return r;
    }
    void set_col(int c, const Vec<D>& x) {
        for (int i = 0; i < D; ++i) (*this)(i, c) = x[i];
    }
    Vec<D> row(int r) const {
        Vec<D> x;
        for (int i = 0; i < D; ++i) x[i] = (*this)(r, i);
        return x;
    }

    Mat transposed() const {
        Mat t;
        for (int r = 0; r < D; ++r)
            for (int c = 0; c < D; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Mat& operator+=(const Mat& o) {
        for (int i = 0; i < D * D; ++i) m[i] += o.m[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (int i = 0; i < D * D; ++i) m[i] -= o.m[i];
        return *this;
    }
    Mat& operator*=(double s) {
        for (int i = 0; i < D * D; ++i) m[i] *= s;
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, double s) { return a *= s; }
    friend Mat operator*(double s, Mat a) { return a *= s; }

    friend Vec<D> operator*(const Mat& a, const Vec<D>& x) {
        Vec<D> y;
        for (int r = 0; r < D; ++r) {
            double s = 0;
            for (int c = 0; c < D; ++c) s += a(r, c) * x[c];
            y[r] = s;
        }
        return y;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat c;
        for (int r = 0; r < D; ++r)
            for (int k = 0; k < D; ++k) {
                double arc = a(r, k);
                for (int cc = 0; cc < D; ++cc) c(r, cc) += arc * b(k, cc);
            }
        return c;
    }
};

inline double det(const Mat<2>& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

inline double det(const Mat<3>& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

inline Mat<2> inverse(const Mat<2>& a) {
    double d = det(a);
    Mat<2> r;
    r(0, 0) = a(1, 1) / d;
    r(0, 1) = -a(0, 1) / d;
    r(1, 0) = -a(1, 0) / d;
    r(1, 1) = a(0, 0) / d;
    return r;
}

inline Mat<3> inverse(const Mat<3>& a) {
    double d = det(a);
    Mat<3> r;
    r(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / d;
    r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / d;
    r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / d;
    r(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / d;
    r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / d;
    r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / d;
    r(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / d;
    r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / d;
    r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d;
    return r;
}

template <int D>
Mat<D> outer(const Vec<D>& a, const Vec<D>& b) {
    Mat<D> r;
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) r(i, j) = a[i] * b[j];
    return r;
}

template <int D>
Mat<D> sym_part(const Mat<D>& a) {
    Mat<D> r;
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) r(i, j) = 0.5 * (a(i, j) + a(j, i));
    return r;
}

template <int D>
double frobenius_norm(const Mat<D>& a) {
    double s = 0;
    for (double x : a.m) s += x * x;
    return std::sqrt(s);
}

// Solves the symmetric positive (semi)definite system G w = b. When G is
// singular to working precision, falls back to the eigenvalue pseudo-inverse
// and reports it through `rank_deficient`.
template <int D>
Vec<D> solve_spd_or_pinv(const Mat<D>& G, const Vec<D>& b, bool* rank_deficient = nullptr);

// Symmetric eigendecomposition by cyclic Jacobi rotations; eigenvalues ascending.
template <int D>
void sym_eigen(const Mat<D>& A, Vec<D>& eigenvalues, Mat<D>& eigenvectors);

}  // namespace lamina
