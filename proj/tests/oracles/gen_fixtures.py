#!/usr/bin/env python3
"""Independent reference values for the C++ test-suite.

Everything here is computed with sympy from first principles (operators acting
on polynomials, direct substitution, series expansion by hand) and never calls
the C++ engine. Run from the repository root:

    python3 tests/oracles/gen_fixtures.py

and commit the regenerated files under tests/fixtures/.
"""

import json
import pathlib
import re

import sympy as sp

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

Ha, Hb, t1, t2, x1, x2, T = sp.symbols("Ha Hb t1 t2 x1 x2 T")

# Shifted coroots in terms of the Cartan images.
H = {
    "a": Ha,
    "b": Hb,
    "ba": Ha + 2 * Hb + 2,
    "b2a": Ha + Hb + 1,
}


def to_expr_string(e):
    """sympy expression -> the C++ parser's syntax."""
    s = sp.sstr(sp.factor(sp.cancel(e)))
    s = s.replace("**", "^")
    return re.sub(r"\bI\b", "i", s)


def poly_terms(p):
    """Polynomial in x1, x2 -> sorted [[m, n, re, im], ...]."""
    p = sp.Poly(sp.expand(p), x1, x2)
    out = []
    for (m, n), c in p.terms():
        c = sp.nsimplify(c)
        out.append([int(m), int(n), str(sp.re(c)), str(sp.im(c))])
    return sorted(out)


# ------------------------------------------------------------ Weyl brackets
# Operators act on polynomials in x1, x2; [A, B] f = A(B f) - B(A f).

def mul(q):
    return lambda f: sp.expand(q * f)


def d(v):
    return lambda f: sp.diff(f, v)


def compose(*ops):
    def run(f):
        for op in reversed(ops):
            f = op(f)
        return f

    return run


def bracket(A, B):
    return lambda f: sp.expand(A(B(f)) - B(A(f)))


TEST_MONOMIALS = [(m, n) for m in range(4) for n in range(4)]


def action_table(op):
    return [{"m": m, "n": n, "image": poly_terms(op(x1**m * x2**n))} for (m, n) in TEST_MONOMIALS]


e_alpha = compose(mul(x1), d(x2))  # x1 d2
e_beta = mul(sp.I / 2 * x2**2)  # (i/2) x2^2

weyl = {
    "bracket_ea_x2": {
        "expected": "x1",
        "action": action_table(bracket(e_alpha, mul(x2))),
    },
    "bracket_eb_d2": {
        "expected": "-i*x2",
        "action": action_table(bracket(e_beta, d(x2))),
    },
}
# An operator with only a multiplication part must act as that polynomial.
assert all(r["image"] == poly_terms(x1 * x1 ** r["m"] * x2 ** r["n"]) for r in weyl["bracket_ea_x2"]["action"])
assert all(
    r["image"] == poly_terms(-sp.I * x2 * x1 ** r["m"] * x2 ** r["n"]) for r in weyl["bracket_eb_d2"]["action"]
)

# ------------------------------------------------------ one projector step
# P_alpha x2 = sum_k phi_k F^k (ad E)^k x2 with ad E_alpha(x2) = x1 and
# ad E_alpha(x1) = 0, so the series stops after k = 1.
phi1 = -1 / (sp.factorial(1) * (H["a"] + 2))
ad_ea_x1 = bracket(e_alpha, mul(x1))
assert all(ad_ea_x1(x1**m * x2**n) == 0 for (m, n) in TEST_MONOMIALS)
projector = {
    "p_alpha_x2": {
        "expected": "x2 + (" + to_expr_string(phi1) + ") Fa x1",
        "phi1": to_expr_string(phi1),
    }
}

# ------------------------------------------------------ coefficient table
a = H["a"] + 1
b = H["b2a"] + 1
c = H["ba"] + 1
dd = H["b"] + 1
f_stated = {
    "f11": (a + 1) * (a - 1) * (b + 1) / (a**2 * b),
    "f12": -(dd + 2) / (a * c),
    "f21": (a * (dd - 1) + c * (dd + 1)) / (a * c * dd),
    "f22": (dd + 1) / dd,
}

point = {Ha: 1, Hb: 1}
abcd_at_point = [int(v.subs(point)) for v in (a, b, c, dd)]
assert abcd_at_point == [2, 4, 6, 2]
f11_at_point = sp.Rational(3 * 1 * 5, 2 * 2 * 4)
assert sp.simplify(f_stated["f11"].subs(point) - f11_at_point) == 0


def limit_at_infinity(e):
    """Leading-form oracle, cross-checked along two directions."""
    num, den = sp.fraction(sp.cancel(e))
    pn, pd = sp.Poly(num, Ha, Hb), sp.Poly(den, Ha, Hb)
    dn, dd_ = pn.total_degree(), pd.total_degree()
    if dn < dd_:
        val = "0"
    elif dn > dd_:
        val = "divergent"
    else:
        top = lambda p, k: sum(c * Ha**i * Hb**j for (i, j), c in p.terms() if i + j == k)
        r = sp.cancel(top(pn, dn) / top(pd, dd_))
        val = str(r) if r.is_number else "undefined"
    for u, v in ((2, 3), (5, 7)):
        lim = sp.limit(e.subs({Ha: u * T, Hb: v * T}), T, sp.oo)
        if val == "0":
            assert lim == 0
        elif val not in ("divergent", "undefined"):
            assert sp.simplify(lim - sp.sympify(val)) == 0
    return val


# ------------------------------------------------ sigma and its commutation


def hat_data(f12):
    f = dict(f_stated, f12=f12)
    col1 = lambda i: (Ha + i) * (H["ba"] + 1) / ((Ha + 2) * (H["ba"] + 2))
    col2 = lambda i: (Ha + i) * (H["ba"] + 1) / ((Ha + 1) * (H["ba"] + 2))
    return {
        "c1": -Ha * (H["ba"] + 1),
        "c2": -(Ha + 2) * (H["ba"] + 1),
        "g11": f["f11"] * col1(1),
        "g12": f["f12"] * col2(1),
        "g21": f["f21"] * col1(2),
        "g22": f["f22"] * col2(2),
    }


def make_sigma(data):
    """sigma_1, sigma_2 acting on expressions in Ha, Hb, t1, t2."""

    def s1(e):
        return e.subs(
            {Ha: Ha - 1, t1: data["c1"] + data["g11"] * t1 + data["g12"] * t2}, simultaneous=True
        )

    def s2(e):
        return e.subs(
            {Ha: Ha + 1, Hb: Hb - 1, t2: data["c2"] + data["g21"] * t1 + data["g22"] * t2}, simultaneous=True
        )

    return s1, s2


def collect_t(e):
    e = sp.expand(sp.cancel(sp.together(e)))
    p = sp.Poly(sp.numer(sp.together(e)), t1, t2)
    den = sp.denom(sp.together(e))
    return {m: sp.cancel(c / den) for m, c in p.terms()}


def base_string(e):
    parts = []
    for (i, j), c in sorted(collect_t(e).items(), reverse=True):
        mono = "*".join(["t1"] * i + ["t2"] * j)
        cs = "(" + to_expr_string(c) + ")"
        parts.append(cs + ("*" + mono if mono else ""))
    return " + ".join(parts) if parts else "0"


def sigma_record(f12):
    s1, s2 = make_sigma(hat_data(f12))
    rec = {
        "s1(t1)": base_string(s1(t1)),
        "s2(t2)": base_string(s2(t2)),
        "s1(Ha*t2)": base_string(s1(Ha * t2)),
        "s2(Hb*t1)": base_string(s2(Hb * t1)),
    }
    commute = True
    for name, t in (("t1", t1), ("t2", t2)):
        lhs, rhs = s1(s2(t)), s2(s1(t))
        rec["s1s2(" + name + ")"] = base_string(lhs)
        rec["s2s1(" + name + ")"] = base_string(rhs)
        if sp.cancel(sp.together(lhs - rhs)) != 0:
            commute = False
    rec["commute"] = commute
    return rec


# Solve for f12 inside the family (p*Hb + q)/(ac) from commutation alone.
p_, q_ = sp.symbols("p q")
s1u, s2u = make_sigma(hat_data((p_ * Hb + q_) / (a * c)))
eqs = []
for t in (t1, t2):
    defect = sp.numer(sp.together(s1u(s2u(t)) - s2u(s1u(t))))
    eqs += sp.Poly(sp.expand(defect), Ha, Hb, t1, t2).coeffs()
sol = sp.solve(eqs, [p_, q_], dict=True)
assert len(sol) == 1
f12_commuting = (sol[0][p_] * Hb + sol[0][q_]) / (a * c)

coefficients = {
    "abcd_at_1_1": abcd_at_point,
    "f11_at_1_1": str(f11_at_point),
    "stated": {k: to_expr_string(v) for k, v in f_stated.items()},
    "f12_commuting": to_expr_string(f12_commuting),
    "limits": [
        {"expr": to_expr_string(v), "name": k, "limit": limit_at_infinity(v)} for k, v in f_stated.items()
    ]
    + [
        {"expr": "(Hb+2)/(Hb+1)", "name": "cli-example", "limit": limit_at_infinity((Hb + 2) / (Hb + 1))},
        {
            "expr": "1 + 1/(Ha+2*Hb+3)",
            "name": "x1-x2-coefficient",
            "limit": limit_at_infinity(1 + 1 / (H["ba"] + 1)),
        },
        {"expr": to_expr_string(f12_commuting), "name": "f12-commuting", "limit": limit_at_infinity(f12_commuting)},
    ],
}

sigma = {"stated": sigma_record(f_stated["f12"]), "commuting": sigma_record(f12_commuting)}
assert sigma["commuting"]["commute"] and not sigma["stated"]["commute"]


def dump(name, obj):
    OUT.mkdir(parents=True, exist_ok=True)
    path = OUT / name
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    print("wrote", path.relative_to(OUT.parent.parent))


dump("weyl_brackets.json", weyl)
dump("projector_step.json", projector)
dump("coefficients.json", coefficients)
dump("sigma.json", sigma)
