#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace ncheat {

using Vec2 = std::array<double, 2>;
using Vec4 = std::array<double, 4>;

/// Dense 2x2 matrix, row-major.
struct Mat2 {
    std::array<double, 4> a{};

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }

    static Mat2 identity() {
        Mat2 m;
        m(0, 0) = m(1, 1) = 1.0;
        return m;
    }
    static Mat2 scaled_identity(double s) {
        Mat2 m;
        m(0, 0) = m(1, 1) = s;
        return m;
    }
};

/// Dense 4x4 matrix, row-major.
struct Mat4 {
    std::array<double, 16> a{};

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(4 * i + j)]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(4 * i + j)]; }

    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline Mat2 operator+(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (std::size_t i = 0; i < 4; ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

inline Mat2 operator-(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (std::size_t i = 0; i < 4; ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

inline Mat2 operator*(double s, const Mat2& x) {
    Mat2 r;
    for (std::size_t i = 0; i < 4; ++i) r.a[i] = s * x.a[i];
    return r;
}

inline Mat4 operator+(const Mat4& x, const Mat4& y) {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

inline Mat4 operator-(const Mat4& x, const Mat4& y) {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

inline Mat4 operator*(double s, const Mat4& x) {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.a[i] = s * x.a[i];
    return r;
}

inline Mat4 operator*(const Mat4& x, const Mat4& y) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return r;
}

inline Vec4 mul(const Mat4& m, const Vec4& v) {
    Vec4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

inline double dot(const Vec4& x, const Vec4& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

inline Mat4 transpose(const Mat4& m) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = m(j, i);
    return r;
}

inline Mat2 transpose(const Mat2& m) {
    Mat2 r;
    r(0, 0) = m(0, 0);
    r(0, 1) = m(1, 0);
    r(1, 0) = m(0, 1);
    r(1, 1) = m(1, 1);
    return r;
}

inline double trace(const Mat2& m) { return m(0, 0) + m(1, 1); }
inline double trace(const Mat4& m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }

inline double max_abs(const Mat2& m) {
    double r = 0.0;
    for (double v : m.a) r = std::max(r, std::abs(v));
    return r;
}

inline double max_abs(const Mat4& m) {
    double r = 0.0;
    for (double v : m.a) r = std::max(r, std::abs(v));
    return r;
}

/// Maximum absolute row sum.
inline double inf_norm(const Mat4& m) {
    double r = 0.0;
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) s += std::abs(m(i, j));
        r = std::max(r, s);
    }
    return r;
}

inline double det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline Mat2 inverse(const Mat2& m) {
    const double d = det(m);
    Mat2 r;
    r(0, 0) = m(1, 1) / d;
    r(0, 1) = -m(0, 1) / d;
    r(1, 0) = -m(1, 0) / d;
    r(1, 1) = m(0, 0) / d;
    return r;
}

inline double det(const Mat4& m) {
    // Laplace expansion along the first row with cached 3x3 minors.
    auto minor3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
               m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
               m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
    };
    return m(0, 0) * minor3(1, 2, 3, 1, 2, 3) - m(0, 1) * minor3(1, 2, 3, 0, 2, 3) +
           m(0, 2) * minor3(1, 2, 3, 0, 1, 3) - m(0, 3) * minor3(1, 2, 3, 0, 1, 2);
}

/// Extract the 2x2 block at block-row i, block-column j (i, j in {0, 1}).
inline Mat2 block2(const Mat4& m, int i, int j) {
    Mat2 r;
    r(0, 0) = m(2 * i, 2 * j);
    r(0, 1) = m(2 * i, 2 * j + 1);
    r(1, 0) = m(2 * i + 1, 2 * j);
    r(1, 1) = m(2 * i + 1, 2 * j + 1);
    return r;
}

/// Matrix exponential by scaling and squaring of the truncated series.
/// The series stops once the term norm drops below 1e-16 (absolute).
inline Mat4 expm(const Mat4& f) {
    int squarings = 0;
    double scale = 1.0;
    const double nrm = inf_norm(f);
    while (nrm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    const Mat4 fs = scale * f;
    Mat4 x = Mat4::identity();
    Mat4 term = Mat4::identity();
    for (int j = 1; j <= 64; ++j) {
        term = (1.0 / j) * (term * fs);
        x = x + term;
        if (max_abs(term) < 1e-16) break;
    }
    for (int i = 0; i < squarings; ++i) x = x * x;
    return x;
}

}  // namespace ncheat
