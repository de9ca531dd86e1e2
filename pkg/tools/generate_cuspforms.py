#!/usr/bin/env python3
"""Generate src/onanmoon/data/cuspforms.json.

Contents:
  * f31 -- the weight-2 newform of level 31 over Q(sqrt5), stored as the
    rational pair (A, B) with f = A + B*sqrt5, to high order (needed for
    exact CM evaluation of the level-31 hauptmodul).
  * g11, g14, g15, g19, g28, g31 -- the weight-3/2 cusp forms entering the
    McKay-Thompson series, found as F/theta with F in S_2(Gamma_0(4N))
    subject to support conditions on the quotient:
      - plus-space forms: coefficients supported on n = 0, 3 mod 4;
      - g28: supported on n = 0 mod 4 (it is V_4 of a level-28 form, so we
        solve in level 112);
      - g31: the plus space at level 124 is 2-dimensional; the relevant
        combination is pinned by a(4) = 1, a(7) = 11/3.

Everything is exact (Fractions).  Cross-checks: cuspidal dimension vs the
genus formula at every level, the level-11/14/15/19 weight-2 bases vs
elliptic-curve point counts, and f31 vs its known initial coefficients.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import time
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__)))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from modsym import ModularSymbols, q_expansion_basis, kernel_basis, rref  # noqa: E402
from onanmoon.cuspforms import newform_coefficients  # noqa: E402

B_F31 = 6000  # order for f31 (CM evaluation needs many terms)
B_G = 560  # order for the weight-3/2 forms


def theta_coeffs(B: int) -> list[Fraction]:
    """theta = sum_{n in Z} q^{n^2} to O(q^{B+1})."""
    a = [Fraction(0)] * (B + 1)
    a[0] = Fraction(1)
    n = 1
    while n * n <= B:
        a[n * n] = Fraction(2)
        n += 1
    return a


def divide_by_theta(f: list[Fraction], B: int) -> list[Fraction]:
    """h with h * theta = f, to O(q^{B+1}); theta is a unit at infinity."""
    th = theta_coeffs(B)
    h = [Fraction(0)] * (B + 1)
    for n in range(B + 1):
        s = f[n] if n < len(f) else Fraction(0)
        for m in range(1, n + 1):
            if th[m]:
                s -= th[m] * h[n - m]
        h[n] = s  # th[0] == 1
    return h


def solve_weight_32(level: int, allowed_mod4, B: int, verbose=True):
    """All h = F/theta, F in S_2(Gamma_0(level)), with h supported on the
    allowed residues mod 4 (checked for n <= B - 4).  Returns a list of
    coefficient lists (echelonized)."""
    t0 = time.time()
    ms = ModularSymbols(level)
    basis = q_expansion_basis(ms, B)
    if verbose:
        print(
            f"level {level}: dim S_2 = {len(basis)} "
            f"({time.time() - t0:.1f}s)",
            flush=True,
        )
    hs = [divide_by_theta(f, B) for f in basis]
    bad_ns = [n for n in range(1, B - 3) if n % 4 not in allowed_mod4]
    cond = [[h[n] for h in hs] for n in bad_ns]
    ker = kernel_basis(cond, len(hs))
    sols = []
    for v in ker:
        h = [sum(v[i] * hs[i][n] for i in range(len(hs))) for n in range(B + 1)]
        sols.append(h)
    if sols:
        echel, _ = rref(sols, B + 1)
        sols = echel
    return sols


def normalize_leading(h: list[Fraction]) -> list[Fraction]:
    lead = next(x for x in h if x != 0)
    return [x / lead for x in h]


def pack_rational(coeffs: list[Fraction]) -> list[list[int]]:
    return [
        [n, c.numerator, c.denominator] for n, c in enumerate(coeffs) if c != 0
    ]


def main():
    forms = {}

    # ---------------------------------------------------------------- f31
    t0 = time.time()
    print("level 31 (f31) ...", flush=True)
    ms31 = ModularSymbols(31)
    b1, b2 = q_expansion_basis(ms31, B_F31, verbose=True)
    # f = b1 + phi*b2 with phi = (1+sqrt5)/2:  f = A + B*sqrt5,
    # A = b1 + b2/2, B = b2/2
    A = [x + y / 2 for x, y in zip(b1, b2)]
    Bc = [y / 2 for y in b2]
    phi_pairs = {  # n: (A_n, B_n) for the printed initial coefficients
        1: (1, 0),  # q
        2: (Fraction(1, 2), Fraction(1, 2)),  # phi
        3: (-1, -1),  # -2 phi
        4: (Fraction(-1, 2), Fraction(1, 2)),  # phi - 1
        5: (1, 0),
        6: (-3, -1),  # -2 phi - 2
    }
    for n, (an, bn) in phi_pairs.items():
        assert A[n] == an and Bc[n] == bn, (n, A[n], Bc[n])
    forms["f31"] = {
        "weight": 2,
        "level": 31,
        "field": "Q(sqrt5)",
        "prec": B_F31 + 1,
        "coeffs": [
            [n, A[n].numerator, A[n].denominator, Bc[n].numerator, Bc[n].denominator]
            for n in range(1, B_F31 + 1)
            if A[n] != 0 or Bc[n] != 0
        ],
    }
    print(f"f31 done ({time.time() - t0:.1f}s)", flush=True)

    # --------------------------------------------- sanity: point counts
    for M in (11, 14, 15, 19):
        msM = ModularSymbols(M)
        b = q_expansion_basis(msM, 60)
        assert len(b) == 1
        assert [int(x) for x in b[0][:60]] == newform_coefficients(M, 60), M
    print("weight-2 point-count cross-checks passed", flush=True)

    # ------------------------------------------------- weight 3/2 forms
    plus = {0, 3}
    for name, level, allowed, expect_dim in (
        ("g11", 44, plus, 1),
        ("g14", 56, plus, 1),
        ("g15", 60, plus, 1),
        ("g19", 76, plus, 1),
        ("g28", 112, {0}, 1),
        ("g31", 124, plus, 2),
    ):
        sols = solve_weight_32(level, allowed, B_G)
        if len(sols) != expect_dim:
            raise RuntimeError(f"{name}: got {len(sols)} solutions, expected {expect_dim}")
        if name == "g31":
            # pin by a(4) = 1 and a(7) = 11/3
            rows = [[s[4] for s in sols] + [Fraction(1)],
                    [s[7] for s in sols] + [Fraction(11, 3)]]
            rr, piv = rref(rows, 3)
            assert piv == [0, 1], "g31 pinning system is singular"
            x = [rr[0][2], rr[1][2]]
            h = [x[0] * sols[0][n] + x[1] * sols[1][n] for n in range(B_G + 1)]
        else:
            h = normalize_leading(sols[0])
        supp = [n for n, c in enumerate(h) if c != 0]
        assert all(n % 4 in allowed for n in supp if n < B_G - 3), name
        print(
            f"{name}: leading q^{supp[0]}, first coeffs "
            f"{[(n, str(h[n])) for n in supp[:6]]}",
            flush=True,
        )
        forms[name] = {
            "weight": "3/2",
            "level": level,
            "field": "Q",
            "prec": B_G + 1,
            "coeffs": pack_rational(h),
        }

    payload = json.dumps(forms, sort_keys=True, separators=(",", ":"))
    doc = {
        "schema_version": 1,
        "generator": "tools/generate_cuspforms.py",
        "sha256": hashlib.sha256(payload.encode()).hexdigest(),
        "forms": forms,
    }
    out = os.path.join(
        os.path.dirname(__file__), "..", "src", "onanmoon", "data", "cuspforms.json"
    )
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as fh:
        json.dump(doc, fh)
    print(f"wrote {out} ({os.path.getsize(out)} bytes)", flush=True)


if __name__ == "__main__":
    main()
