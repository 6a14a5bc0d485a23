#include "hillconv/hill_core.hpp"

#include <cmath>
#include <stdexcept>

namespace hillconv {

namespace {

double norm(vec2 q) { return std::sqrt(q.x * q.x + q.y * q.y); }

void require_nonzero(vec2 q, const char* who) {
    if (q.x == 0.0 && q.y == 0.0) {
        throw std::domain_error(std::string(who) + ": q = 0");
    }
}

}  // namespace

double effective_potential(vec2 q) {
    require_nonzero(q, "effective_potential");
    return -1.0 / norm(q) - 1.5 * q.x * q.x;
}

double hamiltonian(const phase_point& s, energy_param c) {
    vec2 q{s.q1, s.q2};
    require_nonzero(q, "hamiltonian");
    double p2 = s.p1 * s.p1 + s.p2 * s.p2;
    return 0.5 * p2 - 1.0 / norm(q) - s.q1 * s.q1 + 0.5 * s.q2 * s.q2 +
           s.p1 * s.q2 - s.p2 * s.q1 + c;
}

double regularized_hamiltonian(const phase_point& s, energy_param c) {
    vec2 q{s.q1, s.q2};
    if (q.x == 0.0 && q.y == 0.0) {
        return 0.0;  // |q| factor; the product extends by 0 whenever |q|H stays bounded
    }
    return norm(q) * hamiltonian(s, c);
}

critical_set critical_data() {
    return {{x_crit, 0.0, 0.0, x_crit}, {-x_crit, 0.0, 0.0, -x_crit}, -c0};
}

vec2 grad_Hcp(vec2 q, vec2 p) {
    require_nonzero(q, "grad_Hcp");
    double r = norm(q);
    double r3 = r * r * r;
    return {-2.0 * q.x + q.x / r3 - p.y, q.y + q.y / r3 + p.x};
}

sym_mat2 hessian(vec2 q) {
    require_nonzero(q, "hessian");
    double r = norm(q);
    double r3 = r * r * r;
    double r5 = r3 * r * r;
    return {-2.0 + 1.0 / r3 - 3.0 * q.x * q.x / r5,
            -3.0 * q.x * q.y / r5,
            1.0 + 1.0 / r3 - 3.0 * q.y * q.y / r5};
}

vec2 tangent_v(vec2 q) {
    require_nonzero(q, "tangent_v");
    double r = norm(q);
    double r3 = r * r * r;
    return {q.y + q.y / r3, 2.0 * q.x - q.x / r3};
}

vec2 shifted_w(vec2 q) {
    require_nonzero(q, "shifted_w");
    double r = norm(q);
    double r3 = r * r * r;
    return {q.y / r3, 3.0 * q.x - q.x / r3};
}

double cubic_smallest_positive_root(double b, double theta) {
    double ct = std::cos(theta);
    double a = 1.5 * ct * ct;
    if (a < 1e-24) {
        return 1.0 / b;  // degenerate leading coefficient
    }
    // f(r) = a r^3 - b r + 1 has f(0) = 1 > 0 and its minimum on r > 0 at
    // r* = sqrt(b/(3a)); the smallest positive root lies in (0, r*].
    auto f = [&](double r) { return a * r * r * r - b * r + 1.0; };
    double hi = std::sqrt(2.0 * b / (9.0 * ct * ct));
    double fhi = f(hi);
    if (fhi > 0.0) {
        if (fhi < 1e-10) {
            return hi;  // tangency: double root at the bracket end (b = c0, theta = 0)
        }
        throw std::domain_error("cubic_smallest_positive_root: no root (b < c0?)");
    }
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

bool in_hill_region(vec2 q) {
    require_nonzero(q, "in_hill_region");
    double r = norm(q);
    return 1.0 / r + 1.5 * q.x * q.x > c0 && std::fabs(q.x) < x_crit &&
           std::fabs(q.y) < q2_sup;
}

double disk_radius(vec2 q, energy_param c) {
    require_nonzero(q, "disk_radius");
    double rad = 3.0 * q.x * q.x + 2.0 / norm(q) - 2.0 * c;
    if (rad < 0.0) {
        throw std::domain_error("disk_radius: negative radicand (q outside region for this c)");
    }
    return std::sqrt(rad);
}

std::array<phase_point, 2> symmetry_images(const phase_point& s) {
    phase_point r1{-s.q1, s.q2, s.p1, -s.p2};
    phase_point r2{s.q1, -s.q2, -s.p1, s.p2};
    return {r1, r2};
}

fiber_curve trace_fiber_curve(vec2 p, energy_param c, int n) {
    if (n < 16) {
        throw std::domain_error("trace_fiber_curve: need n >= 16 samples");
    }
    fiber_curve out;
    out.p = p;
    out.c = c;
    out.samples.reserve(static_cast<size_t>(n));
    // On a ray q = r (cos t, sin t) the fiber equation H_{c,p} = 0 reads
    // f(q) = g(q) with f = q1^2 - q2^2/2 + 1/|q| and g = p1 q2 - p2 q1 + |p|^2/2 + c.
    // f - g -> +inf as r -> 0, so the first sign change is the bounded component.
    double g0 = 0.5 * (p.x * p.x + p.y * p.y) + c;
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n; ++i) {
        double t = 2.0 * pi * i / n;
        double ct = std::cos(t), st = std::sin(t);
        auto fg = [&](double r) {
            double q1 = r * ct, q2 = r * st;
            return q1 * q1 - 0.5 * q2 * q2 + 1.0 / r - (p.x * q2 - p.y * q1 + g0);
        };
        double lo = 1e-6;
        if (fg(lo) <= 0.0) {
            throw std::domain_error("trace_fiber_curve: ray start past the curve");
        }
        double hi = lo;
        bool bracketed = false;
        while (hi * std::fabs(ct) < x_crit && hi < 1.0) {
            double next = hi * 1.125;
            if (fg(next) <= 0.0) {
                lo = hi;
                hi = next;
                bracketed = true;
                break;
            }
            hi = next;
        }
        if (!bracketed) {
            throw std::domain_error("trace_fiber_curve: empty fiber along a ray");
        }
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (fg(mid) > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        double r = 0.5 * (lo + hi);
        fiber_sample s;
        s.theta = t;
        s.q1 = r * ct;
        s.q2 = r * st;
        s.residual = std::fabs(hamiltonian({s.q1, s.q2, p.x, p.y}, c));
        out.samples.push_back(s);
    }
    return out;
}

}  // namespace hillconv
