#!/usr/bin/env python3
"""Generate include/hillconv/factor_terms.hpp.

The 2-D certificate needs rigorous bounds for the partial derivatives of the
corner-slope dominator

    F(x,u) = d/dx [ C1 - C2 - C3 + C4 ](x, k(u)),   k(u) = 3u^2 - 2u^3.

We bound |dF/du| and |dF/dx| by expanding each as a finite sum of monomials
in x times products of five bounded "abstract" factors

    a0 = (1 + k(3x^3-1))^(-1/2)   a1 = sqrt(1-k)   a2 = sqrt(k)
    a3 = sqrt(3 + 2*3^(2/3)/x)    a4 = sqrt(x)*(9/x^2 - 3x)

and their partial derivatives, then replacing every abstract factor by a
certified sup over the rectangle [0.63, 3^(-1/3)] x [0,1].  In terms of these
factors the four blocks are

    C1 = r0 + (a0*a1*a3)^2 * r1      C2 = 2 a0^2 a1 a2 a3^2 a4
    C3 = 2 a0 a1 a3 * r2             C4 = (a0*a1*a3)^2 * r3

with r0..r3 explicit rational functions of x.  This script differentiates
symbolically, expands, and emits every additive term as

    (num/den) * 3^(pow3/3) * x^deg * prod(factor^power)

so the C++ side needs no computer-algebra dependency.  Output is committed;
rerun only when the factor decomposition itself changes:

    python3 tools/gen_factor_terms.py > include/hillconv/factor_terms.hpp
"""
import sys
import sympy as sp

x, u = sp.symbols("x u", positive=True)

FACTORS = [
    ("a0", ()), ("a0", ("x",)), ("a0", ("u",)), ("a0", ("x", "x")),
    ("a0", ("u", "x")),
    ("a1", ()), ("a1", ("u",)),
    ("a2", ()), ("a2", ("u",)),
    ("a3", ()), ("a3", ("x",)), ("a3", ("x", "x")),
    ("a4", ()), ("a4", ("x",)), ("a4", ("x", "x")),
]
FACTOR_NAMES = [
    "a0", "a0_x", "a0_u", "a0_xx", "a0_xu",
    "a1", "a1_u", "a2", "a2_u",
    "a3", "a3_x", "a3_xx", "a4", "a4_x", "a4_xx",
]

a0 = sp.Function("a0")(x, u)
a1 = sp.Function("a1")(u)
a2 = sp.Function("a2")(u)
a3 = sp.Function("a3")(x)
a4 = sp.Function("a4")(x)

c13 = sp.Rational(3) ** sp.Rational(1, 3)
c23 = sp.Rational(3) ** sp.Rational(2, 3)
c43 = 3 * c13

r0 = 15*c23/x**7 - 27/x**6 - 18*c13/x**5 + 5*c23/x**4 + 12/x**3 + 9*c13/x**2
r1 = -13/x**6 + 18*c13/x**5 - 8/x**3 + 3
r2 = c13/x**5 + c23/x**4 + 3/x**3 + c43/x**2
r3 = 1 - c43/x**2

C1 = r0 + a0**2 * a1**2 * a3**2 * r1
C2 = 2 * a0**2 * a1 * a2 * a3**2 * a4
C3 = 2 * a0 * a1 * a3 * r2
C4 = a0**2 * a1**2 * a3**2 * r3

F = sp.expand(sp.diff(C1 - C2 - C3 + C4, x))
DuF = sp.expand(sp.diff(F, u))
DxF = sp.expand(sp.diff(F, x))


def classify(atom):
    if isinstance(atom, sp.Derivative):
        name = atom.expr.func.__name__
        vs = []
        for v, n in atom.variable_count:
            vs.extend([str(v)] * int(n))
        return (name, tuple(sorted(vs)))
    return (atom.func.__name__, ())


def decompose(term):
    """Split one additive term into (num, den, pow3, xdeg, powers[15])."""
    num, den, pow3, xdeg = sp.Integer(1), sp.Integer(1), 0, 0
    powers = [0] * len(FACTORS)

    def eat(base, exp):
        nonlocal num, den, pow3, xdeg
        if base == x:
            assert exp == int(exp)
            xdeg += int(exp)
        elif base == 3 and exp.q == 3:
            pow3 += int(exp.p)
        elif base.is_Rational:
            q = sp.Rational(base) ** int(exp)
            num *= q.p
            den *= q.q
        elif isinstance(base, (sp.Derivative, sp.core.function.AppliedUndef)):
            k = classify(base)
            powers[FACTORS.index(k)] += int(exp)
        else:
            raise ValueError(f"unexpected factor {base}**{exp} in {term}")

    for f in term.as_ordered_factors():
        if f.is_Rational:
            q = sp.Rational(f)
            num *= q.p
            den *= q.q
        elif f.is_Pow:
            b, e = f.as_base_exp()
            if b == 3 and e.is_Rational and e.q == 3:
                pow3 += int(e.p)
            elif e.is_Integer:
                eat(b, e)
            else:
                raise ValueError(f"unexpected power {f} in {term}")
        else:
            eat(f, sp.Integer(1))

    num *= 3 ** (pow3 // 3) if pow3 >= 0 else 1
    if pow3 < 0:
        den *= 3 ** ((-pow3 + 2) // 3)
        pow3 += 3 * ((-pow3 + 2) // 3)
    pow3 %= 3
    g = sp.gcd(num, den)
    return (int(num // g), int(den // g), pow3, xdeg, tuple(powers))


def table(expr):
    rows = [decompose(t) for t in sp.Add.make_args(expr)]
    rows.sort(key=lambda r: (-r[3], r[4], r[0], r[1], r[2]))
    return rows


def emit(name, rows, out):
    out.write(f"inline constexpr std::array<factor_term, {len(rows)}> {name}{{{{\n")
    for num, den, pow3, xdeg, powers in rows:
        ps = ", ".join(str(p) for p in powers)
        out.write(f"    {{{num}, {den}, {pow3}, {xdeg}, {{{{{ps}}}}}}},\n")
    out.write("}};\n\n")


def reference_sum(rows, bounds, x_eval):
    """Plain double arithmetic mirroring the C++ evaluation order."""
    c13f = 3.0 ** (1.0 / 3.0)
    total = 0.0
    for num, den, pow3, xdeg, powers in rows:
        v = abs(float(num) / float(den) * c13f**pow3 * x_eval**xdeg)
        for pw, b in zip(powers, bounds):
            for _ in range(pw):
                v *= b
        total += v
    return total


def main():
    du_rows = table(DuF)
    dx_rows = table(DxF)
    out = sys.stdout
    out.write(
        "// Generated by tools/gen_factor_terms.py -- do not edit by hand.\n"
        "// Term tables for the abstract-factor derivative bounds of F(x,u):\n"
        "// each row is coeff = num/den * 3^(pow3/3), an x-monomial degree,\n"
        "// and the multiset of bounded factors (powers indexed by factor_id).\n"
        "#pragma once\n\n"
        "#include <array>\n"
        "#include <cstdint>\n\n"
        "namespace hillconv {\n\n"
        "enum class factor_id : int {\n"
    )
    for i, n in enumerate(FACTOR_NAMES):
        out.write(f"    {n} = {i},\n")
    out.write(
        "};\n\n"
        f"inline constexpr int factor_id_count = {len(FACTOR_NAMES)};\n\n"
        "struct factor_term {\n"
        "    long long num;\n"
        "    long long den;\n"
        "    int pow3;   // extra 3^(pow3/3), pow3 in {0,1,2}\n"
        "    int xdeg;   // monomial degree in x, always <= 0 here\n"
        "    std::array<std::uint8_t, factor_id_count> powers;\n"
        "};\n\n"
    )
    emit("du_F_terms", du_rows, out)
    emit("dx_F_terms", dx_rows, out)
    out.write("}  // namespace hillconv\n")

    # reference values for the unit tests (printed to stderr, frozen manually)
    w063 = (3.0 + 2.0 * 3.0 ** (2.0 / 3.0) / 0.63) ** 0.5
    paper = {
        "a0": 1.2, "a0_x": 3.4, "a0_u": 0.3, "a0_xx": 15.0, "a0_xu": 1.7,
        "a1": 1.0, "a1_u": 3.0**0.5, "a2": 1.0, "a2_u": 3.0**0.5,
        "a3": w063, "a3_x": 1.8, "a3_xx": 5.0,
        "a4": 16.5, "a4_x": 46.5, "a4_xx": 168.0,
    }
    pb = [paper[n] for n in FACTOR_NAMES]
    cb = list(pb)
    cb[FACTOR_NAMES.index("a0_xu")] = 7.5
    err = sys.stderr
    err.write(f"terms: du={len(du_rows)} dx={len(dx_rows)}\n")
    err.write("B_u  (paper table)     = %.17g\n" % reference_sum(du_rows, pb, 0.63))
    err.write("B_x  (paper table)     = %.17g\n" % reference_sum(dx_rows, pb, 0.63))
    err.write("B_u  (corrected table) = %.17g\n" % reference_sum(du_rows, cb, 0.63))
    err.write("B_x  (corrected table) = %.17g\n" % reference_sum(dx_rows, cb, 0.63))


if __name__ == "__main__":
    main()
