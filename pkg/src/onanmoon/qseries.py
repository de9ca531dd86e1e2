"""Truncated Laurent series in q with exact rational coefficients.

A :class:`QSeries` stores finitely many exact coefficients together with a
truncation order ``prec``: the series is known modulo O(q^prec).  Arithmetic
propagates truncation orders pessimistically, so a coefficient that is
returned is always correct.  Coefficients are gmpy2 ``mpq`` rationals.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from gmpy2 import mpq, mpz

Rat = mpq  # exact rational type used throughout

__all__ = ["QSeries", "Rat"]


def _as_mpq(x) -> mpq:
    if isinstance(x, (int, type(mpz(0)), type(mpq(0)))):
        return mpq(x)
    if isinstance(x, tuple) and len(x) == 2:
        return mpq(x[0], x[1])
    raise TypeError(f"cannot coerce {x!r} to an exact rational")


class QSeries:
    """A Laurent q-series with exact coefficients, known modulo O(q^prec)."""

    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, val: int, coeffs: Iterable, prec: int):
        coeffs = [_as_mpq(c) for c in coeffs]
        # normalize: strip leading zeros, clip to the truncation order
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            val += 1
        if val + len(coeffs) > prec:
            coeffs = coeffs[: max(0, prec - val)]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            val = prec
        self.val = val
        self.coeffs = coeffs
        self.prec = prec

    # ---------------------------------------------------------------- basics

    @staticmethod
    def zero(prec: int) -> "QSeries":
        return QSeries(prec, [], prec)

    @staticmethod
    def one(prec: int) -> "QSeries":
        return QSeries(0, [1], prec)

    @staticmethod
    def q_power(n: int, prec: int, coeff=1) -> "QSeries":
        return QSeries(n, [coeff], prec)

    @staticmethod
    def from_dict(d: Mapping[int, object], prec: int) -> "QSeries":
        if not d:
            return QSeries.zero(prec)
        lo = min(d)
        hi = min(max(d) + 1, prec)
        coeffs = [mpq(0)] * max(0, hi - lo)
        for n, c in d.items():
            if lo <= n < prec:
                coeffs[n - lo] = _as_mpq(c)
        return QSeries(lo, coeffs, prec)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, n: int) -> mpq:
        """Exact coefficient of q^n; raises if n is beyond the truncation."""
        if n >= self.prec:
            raise ValueError(f"coefficient of q^{n} not known (O(q^{self.prec}))")
        if n < self.val or n >= self.val + len(self.coeffs):
            return mpq(0)
        return self.coeffs[n - self.val]

    def __getitem__(self, n: int) -> mpq:
        return self.coefficient(n)

    def items(self):
        """Yield (exponent, coefficient) for the nonzero known terms."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield self.val + i, c

    def truncate(self, prec: int) -> "QSeries":
        if prec >= self.prec:
            return self
        return QSeries(self.val, self.coeffs, prec)

    def valuation(self) -> int:
        """Exponent of the leading (lowest-order) nonzero term."""
        if not self.coeffs:
            raise ValueError("valuation of (known part of) zero series")
        return self.val

    def leading_coefficient(self) -> mpq:
        if not self.coeffs:
            raise ValueError("zero series has no leading coefficient")
        return self.coeffs[0]

    # ------------------------------------------------------------ arithmetic

    def __neg__(self) -> "QSeries":
        return QSeries(self.val, [-c for c in self.coeffs], self.prec)

    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        try:
            c = _as_mpq(other)
        except TypeError:
            return NotImplemented
        return QSeries(0, [c], self.prec)

    def __add__(self, other) -> "QSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.prec, other.prec)
        if self.is_zero() and other.is_zero():
            return QSeries.zero(prec)
        los = [s.val for s in (self, other) if s.coeffs]
        lo = min(los) if los else prec
        out = [mpq(0)] * max(0, prec - lo)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                n = s.val + i
                if n < prec:
                    out[n - lo] += c
        return QSeries(lo, out, prec)

    __radd__ = __add__

    def __sub__(self, other) -> "QSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def __mul__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            try:
                c = _as_mpq(other)
            except TypeError:
                return NotImplemented
            return QSeries(self.val, [c * x for x in self.coeffs], self.prec)
        if self.is_zero() or other.is_zero():
            # O(q^p)*g is only known modulo the product truncation
            prec = min(
                self.prec + (other.val if other.coeffs else 0),
                other.prec + (self.val if self.coeffs else 0),
            )
            return QSeries.zero(prec)
        prec = min(self.prec + other.val, other.prec + self.val)
        lo = self.val + other.val
        out = [mpq(0)] * max(0, prec - lo)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            na = self.val + i
            for j, b in enumerate(other.coeffs):
                n = na + other.val + j
                if n >= prec:
                    break
                if b != 0:
                    out[n - lo] += a * b
        return QSeries(lo, out, prec)

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        """Multiplicative inverse; requires a nonzero leading coefficient."""
        if not self.coeffs:
            raise ZeroDivisionError("inverse of (known part of) zero series")
        w = self.val
        u = self.coeffs  # unit part, u[0] != 0
        m = self.prec - 2 * w  # correct truncation for the inverse
        if m <= 0:
            raise ValueError("not enough known terms to invert")
        # solve (sum u_i q^i)(sum b_j q^j) = 1 for b, to m terms
        b = [mpq(0)] * m
        inv0 = 1 / u[0]
        b[0] = inv0
        for n in range(1, m):
            s = mpq(0)
            for i in range(1, min(n, len(u) - 1) + 1):
                if u[i] != 0 and b[n - i] != 0:
                    s += u[i] * b[n - i]
            b[n] = -s * inv0
        return QSeries(-w, b, m - w)

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return self * other.inverse()
        c = _as_mpq(other)
        return QSeries(self.val, [x / c for x in self.coeffs], self.prec)

    def __rtruediv__(self, other) -> "QSeries":
        return self.inverse() * other

    def __pow__(self, n: int) -> "QSeries":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return QSeries.one(self.prec)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k."""
        return QSeries(self.val + k, self.coeffs, self.prec + k)

    def dilate(self, m: int) -> "QSeries":
        """Substitute q -> q^m (m >= 1)."""
        if m == 1:
            return self
        d = {m * n: c for n, c in self.items()}
        return QSeries.from_dict(d, m * self.prec)

    # ------------------------------------------------------------- utilities

    def __eq__(self, other) -> bool:
        """Equality of all coefficients on the common known range."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.prec, other.prec)
        lo = min(
            [s.val for s in (self, other) if s.coeffs],
            default=prec,
        )
        return all(
            self.coefficient(n) == other.coefficient(n) for n in range(lo, prec)
        )

    def __hash__(self):
        raise TypeError("QSeries is unhashable")

    def __repr__(self) -> str:
        parts = []
        for n, c in self.items():
            if len(parts) >= 8:
                parts.append("...")
                break
            parts.append(f"{c}*q^{n}")
        body = " + ".join(parts) if parts else "0"
        return f"QSeries({body} + O(q^{self.prec}))"
