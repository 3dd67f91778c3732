#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace sg {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        double n = norm();
        return n > 0.0 ? *this / n : Vec3{};
    }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Unit quaternion (w, x, y, z).
struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    static Quat identity() { return {}; }

    static Quat from_axis_angle(const Vec3& axis, double angle) {
        Vec3 a = axis.normalized();
        double s = std::sin(angle * 0.5);
        return {std::cos(angle * 0.5), a.x * s, a.y * s, a.z * s};
    }

    Quat normalized() const {
        double n = std::sqrt(w * w + x * x + y * y + z * z);
        return {w / n, x / n, y / n, z / n};
    }

    Vec3 rotate(const Vec3& v) const {
        // q v q* expanded via the cross-product form.
        Vec3 u{x, y, z};
        Vec3 t = 2.0 * u.cross(v);
        return v + w * t + u.cross(t);
    }

    Quat conjugate() const { return {w, -x, -y, -z}; }

    /// Rotation matrix columns (the images of the basis vectors).
    std::array<Vec3, 3> columns() const {
        return {rotate({1, 0, 0}), rotate({0, 1, 0}), rotate({0, 0, 1})};
    }

    /// Quaternion from orthonormal basis vectors given as matrix columns.
    static Quat from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        double trace = c0.x + c1.y + c2.z;
        Quat q;
        if (trace > 0.0) {
            double s = std::sqrt(trace + 1.0) * 2.0;
            q.w = 0.25 * s;
            q.x = (c1.z - c2.y) / s;
            q.y = (c2.x - c0.z) / s;
            q.z = (c0.y - c1.x) / s;
        } else if (c0.x > c1.y && c0.x > c2.z) {
            double s = std::sqrt(1.0 + c0.x - c1.y - c2.z) * 2.0;
            q.w = (c1.z - c2.y) / s;
            q.x = 0.25 * s;
            q.y = (c1.x + c0.y) / s;
            q.z = (c2.x + c0.z) / s;
        } else if (c1.y > c2.z) {
            double s = std::sqrt(1.0 + c1.y - c0.x - c2.z) * 2.0;
            q.w = (c2.x - c0.z) / s;
            q.x = (c1.x + c0.y) / s;
            q.y = 0.25 * s;
            q.z = (c2.y + c1.z) / s;
        } else {
            double s = std::sqrt(1.0 + c2.z - c0.x - c1.y) * 2.0;
            q.w = (c0.y - c1.x) / s;
            q.x = (c2.x + c0.z) / s;
            q.y = (c2.y + c1.z) / s;
            q.z = 0.25 * s;
        }
        return q.normalized();
    }
};

/// Rigid transform mapping local coordinates to world: p_world = R p + t.
struct RigidTransform {
    Quat rotation;
    Vec3 translation;

    Vec3 apply(const Vec3& p) const { return rotation.rotate(p) + translation; }
    Vec3 apply_vector(const Vec3& v) const { return rotation.rotate(v); }
    Vec3 apply_inverse(const Vec3& p) const {
        return rotation.conjugate().rotate(p - translation);
    }
    Vec3 apply_inverse_vector(const Vec3& v) const { return rotation.conjugate().rotate(v); }
};

struct Aabb {
    Vec3 min{kInf, kInf, kInf};
    Vec3 max{-kInf, -kInf, -kInf};

    bool valid() const { return min.x <= max.x && min.y <= max.y && min.z <= max.z; }
    void expand(const Vec3& p) {
        min = {std::min(min.x, p.x), std::min(min.y, p.y), std::min(min.z, p.z)};
        max = {std::max(max.x, p.x), std::max(max.y, p.y), std::max(max.z, p.z)};
    }
    void expand(const Aabb& b) {
        expand(b.min);
        expand(b.max);
    }
    Vec3 center() const { return (min + max) * 0.5; }
    Vec3 size() const { return max - min; }
    bool contains(const Vec3& p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y && p.z >= min.z &&
               p.z <= max.z;
    }
    bool overlaps(const Aabb& o) const {
        return min.x <= o.max.x && max.x >= o.min.x && min.y <= o.max.y && max.y >= o.min.y &&
               min.z <= o.max.z && max.z >= o.min.z;
    }
    Aabb padded(double m) const { return {min - Vec3{m, m, m}, max + Vec3{m, m, m}}; }
};

/// Ray with unit direction; points are origin + t * direction.
struct Ray {
    Vec3 origin;
    Vec3 direction;

    Vec3 at(double t) const { return origin + t * direction; }
};

/// Area of the horizontal (xy) overlap between two boxes.
inline double footprint_intersection_area(const Aabb& a, const Aabb& b) {
    double dx = std::min(a.max.x, b.max.x) - std::max(a.min.x, b.min.x);
    double dy = std::min(a.max.y, b.max.y) - std::max(a.min.y, b.min.y);
    return (dx > 0.0 && dy > 0.0) ? dx * dy : 0.0;
}

inline double footprint_area(const Aabb& a) {
    return std::max(0.0, a.max.x - a.min.x) * std::max(0.0, a.max.y - a.min.y);
}

inline double horizontal_center_distance(const Aabb& a, const Aabb& b) {
    Vec3 ca = a.center(), cb = b.center();
    double dx = ca.x - cb.x, dy = ca.y - cb.y;
    return std::sqrt(dx * dx + dy * dy);
}

inline double aabb_iou(const Aabb& a, const Aabb& b) {
    double ix = std::min(a.max.x, b.max.x) - std::max(a.min.x, b.min.x);
    double iy = std::min(a.max.y, b.max.y) - std::max(a.min.y, b.min.y);
    double iz = std::min(a.max.z, b.max.z) - std::max(a.min.z, b.min.z);
    if (ix <= 0.0 || iy <= 0.0 || iz <= 0.0) return 0.0;
    double inter = ix * iy * iz;
    auto vol = [](const Aabb& x) {
        Vec3 s = x.size();
        return std::max(0.0, s.x) * std::max(0.0, s.y) * std::max(0.0, s.z);
    };
    double uni = vol(a) + vol(b) - inter;
    return uni > 0.0 ? inter / uni : 0.0;
}

}  // namespace sg
