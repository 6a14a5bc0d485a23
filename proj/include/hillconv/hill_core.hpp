#pragma once

#include <array>
#include <vector>

#include "hillconv/constants.hpp"

namespace hillconv {

struct vec2 {
    double x{}, y{};
};

inline vec2 operator+(vec2 a, vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline vec2 operator-(vec2 a, vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline vec2 operator*(double s, vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(vec2 a, vec2 b) { return a.x * b.x + a.y * b.y; }

struct phase_point {
    double q1{}, q2{}, p1{}, p2{};
};

// symmetric 2x2 matrix; a21 is never stored
struct sym_mat2 {
    double a11{}, a12{}, a22{};
};

inline vec2 apply(const sym_mat2& m, vec2 v) {
    return {m.a11 * v.x + m.a12 * v.y, m.a12 * v.x + m.a22 * v.y};
}

inline double quad_form(const sym_mat2& m, vec2 v) {
    return v.x * (m.a11 * v.x + m.a12 * v.y) + v.y * (m.a12 * v.x + m.a22 * v.y);
}

struct polar_point {
    double r{}, theta{};
};

using energy_param = double;

// U(q) = -1/|q| - (3/2) q1^2
double effective_potential(vec2 q);

// H_{c,p}(q) = 1/2 |p|^2 - 1/|q| - q1^2 + 1/2 q2^2 + p1 q2 - p2 q1 + c
double hamiltonian(const phase_point& s, energy_param c);

// K_c(q,p) = |q| (H_HLP(q,p) + c); shares the zero level set with H_{c,p}
double regularized_hamiltonian(const phase_point& s, energy_param c);

struct critical_set {
    phase_point right, left;
    double value;  // critical value of H_HLP, equals -c0
};
critical_set critical_data();

// gradient in q of H_{c,p}; independent of c
vec2 grad_Hcp(vec2 q, vec2 p);

// Hessian in q of H_{c,p}; independent of p and c
sym_mat2 hessian(vec2 q);

// v(q) = J grad H_{c,0}(q), J the clockwise quarter turn [[0,1],[-1,0]]
vec2 tangent_v(vec2 q);

// w(q) = v(q) - Jq = (q2/|q|^3, 3 q1 - q1/|q|^3)
vec2 shifted_w(vec2 q);

// smallest positive root of (3/2) cos^2(theta) r^3 - b r + 1; 1/b for cos(theta) = 0
double cubic_smallest_positive_root(double b, double theta);

// 1/|q| + (3/2) q1^2 > c0  and  |q1| < 3^(-1/3)  and  |q2| < 2*3^(-4/3)
bool in_hill_region(vec2 q);

// radius of the momentum disk: sqrt(3 q1^2 + 2/|q| - 2c)
double disk_radius(vec2 q, energy_param c);

// the two anti-symplectic reflections R1, R2 that preserve H_HLP
std::array<phase_point, 2> symmetry_images(const phase_point& s);

struct fiber_sample {
    double theta{}, q1{}, q2{}, residual{};
};

struct fiber_curve {
    vec2 p;
    energy_param c;
    std::vector<fiber_sample> samples;
};

// Bounded component of {q : H_{c,p}(q) = 0}, sampled along n rays from the
// origin (the curve encloses the origin, so rays are a valid parametrization).
fiber_curve trace_fiber_curve(vec2 p, energy_param c, int n);

}  // namespace hillconv
