"""Exact arithmetic for the algebraic numbers appearing in the character
table.

Every entry of the table lies in the Q-vector space with basis

    (1, sqrt5, sqrt2, i*sqrt5, sqrt7, i*sqrt31, C, C^2)

where C = -2(cos(2 pi/19) + cos(14 pi/19) + cos(16 pi/19)) is the Gaussian
period with minimal polynomial x^3 - x^2 - 6x + 7 (a cyclic cubic field, so
its conjugates are D = -C^2 - C + 5 and E = C^2 - 4).  Values are stored as
coordinate vectors of gmpy2 rationals.

Any one column of the table touches at most one of the radical families
{sqrt5}, {sqrt2}, {i sqrt5}, {sqrt7}, {i sqrt31}, {C, C^2}, and products are
only ever taken within a column, so multiplication is implemented exactly
for pairs in a common family (and raises otherwise).
"""

from __future__ import annotations

from gmpy2 import mpq

__all__ = ["AlgebraicValue", "parse_token", "TOKEN_VALUES"]

_DIM = 8
# index -> (family id, "square" of the basis element within its family)
_FAMILY = {1: 0, 2: 1, 3: 2, 4: 3, 5: 4, 6: 5, 7: 5}
_RADICAL_SQ = {1: mpq(5), 2: mpq(2), 3: mpq(-5), 4: mpq(7), 5: mpq(-31)}


def _as_mpq(x) -> mpq:
    if isinstance(x, mpq):
        return x
    if isinstance(x, int):
        return mpq(x)
    raise TypeError(f"expected rational, got {type(x).__name__}")


class AlgebraicValue:
    """A vector over the fixed 8-element basis, with exact arithmetic."""

    __slots__ = ("vec",)

    def __init__(self, vec):
        v = tuple(_as_mpq(c) for c in vec)
        if len(v) != _DIM:
            raise ValueError(f"expected {_DIM} coordinates")
        self.vec = v

    @classmethod
    def rational(cls, x) -> "AlgebraicValue":
        return cls((_as_mpq(x),) + (mpq(0),) * (_DIM - 1))

    @classmethod
    def basis(cls, i: int, scale=1) -> "AlgebraicValue":
        v = [mpq(0)] * _DIM
        v[i] = _as_mpq(scale)
        return cls(v)

    # ------------------------------------------------------------ queries

    def families(self) -> frozenset:
        return frozenset(_FAMILY[i] for i in range(1, _DIM) if self.vec[i])

    def is_rational(self) -> bool:
        return not any(self.vec[1:])

    def as_rational(self) -> mpq:
        if not self.is_rational():
            raise ValueError(f"value {self.vec} is not rational")
        return self.vec[0]

    # --------------------------------------------------------- arithmetic

    def __add__(self, other: "AlgebraicValue") -> "AlgebraicValue":
        return AlgebraicValue(tuple(a + b for a, b in zip(self.vec, other.vec)))

    def __sub__(self, other: "AlgebraicValue") -> "AlgebraicValue":
        return AlgebraicValue(tuple(a - b for a, b in zip(self.vec, other.vec)))

    def __neg__(self) -> "AlgebraicValue":
        return AlgebraicValue(tuple(-a for a in self.vec))

    def scale(self, r) -> "AlgebraicValue":
        r = _as_mpq(r)
        return AlgebraicValue(tuple(r * a for a in self.vec))

    def __mul__(self, other: "AlgebraicValue") -> "AlgebraicValue":
        fams = self.families() | other.families()
        if not fams:
            return AlgebraicValue.rational(self.vec[0] * other.vec[0])
        if len(fams) > 1:
            raise ArithmeticError(
                "product would leave the coordinate basis "
                f"(families {sorted(fams)})"
            )
        (fam,) = fams
        if fam == 5:  # cubic: (a + bC + cC^2)(d + eC + fC^2), C^3 = C^2+6C-7
            a, b, c = self.vec[0], self.vec[6], self.vec[7]
            d, e, f = other.vec[0], other.vec[6], other.vec[7]
            p0, p1, p2 = a * d, a * e + b * d, a * f + b * e + c * d
            p3, p4 = b * f + c * e, c * f
            # reduce: C^3 = C^2 + 6C - 7, C^4 = 7C^2 - C - 7
            r0 = p0 - 7 * p3 - 7 * p4
            r1 = p1 + 6 * p3 - p4
            r2 = p2 + p3 + 7 * p4
            v = [mpq(0)] * _DIM
            v[0], v[6], v[7] = r0, r1, r2
            return AlgebraicValue(v)
        # quadratic family: locate its basis index
        (idx,) = [i for i, f in _FAMILY.items() if f == fam]
        sq = _RADICAL_SQ[idx]
        a, b = self.vec[0], self.vec[idx]
        c, d = other.vec[0], other.vec[idx]
        v = [mpq(0)] * _DIM
        v[0] = a * c + sq * b * d
        v[idx] = a * d + b * c
        return AlgebraicValue(v)

    def conjugate(self) -> "AlgebraicValue":
        """Complex conjugation: negates the i*sqrt5 and i*sqrt31 parts."""
        v = list(self.vec)
        v[3] = -v[3]
        v[5] = -v[5]
        return AlgebraicValue(v)

    # ------------------------------------------------------------- misc

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraicValue) and self.vec == other.vec

    def __hash__(self):
        return hash(self.vec)

    def __repr__(self):
        return f"AlgebraicValue({[str(c) for c in self.vec]})"

    def to_complex(self, mpmath_mod):
        """Numeric value (for sanity checks only)."""
        mp = mpmath_mod
        c = mp.mpf(2) * mp.pi / 19
        C = -2 * (mp.cos(c) + mp.cos(7 * c) + mp.cos(8 * c))
        basis = [
            mp.mpc(1),
            mp.sqrt(5),
            mp.sqrt(2),
            mp.mpc(0, 1) * mp.sqrt(5),
            mp.sqrt(7),
            mp.mpc(0, 1) * mp.sqrt(31),
            mp.mpc(C),
            mp.mpc(C * C),
        ]
        return sum(
            mp.mpf(c.numerator) / mp.mpf(c.denominator) * b
            for c, b in zip(self.vec, basis)
        )


def _val(coords: dict) -> AlgebraicValue:
    v = [mpq(0)] * _DIM
    for i, c in coords.items():
        v[i] = mpq(*c) if isinstance(c, tuple) else mpq(c)
    return AlgebraicValue(v)


# the named irrationalities of the character table
TOKEN_VALUES = {
    "A": _val({0: (1, 2), 1: (3, 2)}),  # (1 + 3 sqrt5)/2
    "Abar": _val({0: (1, 2), 1: (-3, 2)}),
    "B": _val({2: 1}),  # sqrt2
    "F": _val({3: 1}),  # i sqrt5
    "G": _val({4: 1}),  # sqrt7
    "H": _val({0: (-1, 2), 5: (1, 2)}),  # (-1 + i sqrt31)/2
    "Hbar": _val({0: (-1, 2), 5: (-1, 2)}),
    "C": _val({6: 1}),
    "D": _val({0: 5, 6: -1, 7: -1}),  # -C^2 - C + 5
    "E": _val({0: -4, 7: 1}),  # C^2 - 4
}


def parse_token(tok) -> AlgebraicValue:
    """An integer, or a (possibly negated) token name from TOKEN_VALUES."""
    if isinstance(tok, int):
        return AlgebraicValue.rational(tok)
    if tok.startswith("-") and tok[1:] in TOKEN_VALUES:
        return -TOKEN_VALUES[tok[1:]]
    if tok in TOKEN_VALUES:
        return TOKEN_VALUES[tok]
    return AlgebraicValue.rational(int(tok))
