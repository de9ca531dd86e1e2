"""Weight-2 modular symbols for Gamma_0(M) over Q, enough to produce
q-expansion bases of S_2(Gamma_0(M)).

Used only by the data generator (tools/generate_cuspforms.py); the package
itself ships the resulting q-expansions as data.

Method: Manin symbols indexed by P^1(Z/M) with the two- and three-term
relations, boundary map to cusp classes for the cuspidal subspace, Hecke
operators T_p via Heilbronn matrices (Merel's set for small p,
Cremona's continued-fraction set for large p), and the q-expansion basis
from pivot entries of the Hecke matrices T_n (Hecke recursion on matrices).
"""

from __future__ import annotations

import math
from fractions import Fraction

# ---------------------------------------------------------- linear algebra


def rref(rows, ncols):
    """Reduced row echelon form over Q. rows: list of lists of Fraction.
    Returns (rref_rows, pivot_cols)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1, 1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def kernel_basis(rows, ncols):
    """Basis of the right kernel of the matrix (rows over Q)."""
    rr, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rr[i][fc]
        basis.append(v)
    return basis


def solve_in_span(basis, target):
    """Write target as a combination of basis vectors (exact); returns the
    coefficient list or raises ValueError."""
    n = len(target)
    rows = [[basis[j][i] for j in range(len(basis))] + [target[i]] for i in range(n)]
    rr, pivots = rref(rows, len(basis) + 1)
    if len(basis) in pivots:
        raise ValueError("target not in span")
    coeffs = [Fraction(0)] * len(basis)
    for i, pc in enumerate(pivots):
        coeffs[pc] = rr[i][len(basis)]
    return coeffs


# ---------------------------------------------------------- helpers


def gcdext(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def genus_gamma0(M: int) -> int:
    """Genus of X_0(M) (standard index/elliptic-point/cusp count formula)."""
    mu = M
    n = M
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    for p in primes:
        mu = mu // p * (p + 1)
    if M % 4 == 0:
        nu2 = 0
    else:
        nu2 = 1
        for p in primes:
            nu2 *= 1 + pow(-1, (p - 1) // 2) if p != 2 else 1
        # nu2 = prod (1 + (-1|p))
        nu2 = 1
        for p in primes:
            if p == 2:
                continue
            nu2 *= 1 + (1 if p % 4 == 1 else -1)
    if M % 9 == 0:
        nu3 = 0
    else:
        nu3 = 1
        for p in primes:
            if p == 3:
                continue
            nu3 *= 1 + (1 if p % 3 == 1 else -1)
        if M % 3 == 0 and M % 9 != 0:
            pass  # factor for p=3 is 1
    ninf = 0
    for d in range(1, M + 1):
        if M % d == 0:
            ninf += _phi(math.gcd(d, M // d))
    return 1 + mu // 12 - nu2 // 4 - nu3 // 3 - ninf // 2


def _phi(n: int) -> int:
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out = out // p * (p - 1)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out = out // m * (m - 1)
    return out


# ---------------------------------------------------------- Heilbronn sets


def merel_set(n: int):
    """Merel's matrices {(a,b;c,d): det=n, a>b>=0, d>c>=0}; fine for small n."""
    out = []
    for a in range(1, n + 1):
        dmin = (n + a - 1) // a
        for d in range(dmin, n + 2 - a):
            e = a * d - n
            if e == 0:
                for c in range(d):
                    out.append((a, 0, c, d))
                for b in range(1, a):
                    out.append((a, b, 0, d))
            else:
                b = 1
                while b * b <= e:
                    if e % b == 0:
                        c = e // b
                        if b < a and c < d:
                            out.append((a, b, c, d))
                        if c != b and c < a and b < d:
                            out.append((a, c, b, d))
                    b += 1
    return out


def heilbronn_cremona(p: int):
    """Cremona's continued-fraction Heilbronn matrices for T_p, p prime."""
    if p == 2:
        return [(1, 0, 0, 2), (2, 0, 0, 1), (2, 1, 0, 1), (1, 0, 1, 2)]
    out = [(1, 0, 0, p)]
    for r in range(-(p // 2), p // 2 + 1):
        x1, x2 = p, -r
        y1, y2 = 0, 1
        a, b = -p, r
        out.append((x1, x2, y1, y2))
        while b:
            # nearest-integer quotient
            q = (2 * a + b) // (2 * b) if b > 0 else -((2 * (-a) + (-b)) // (2 * (-b)))
            c = a - q * b
            a, b = -b, c
            x1, x2 = x2, q * x2 - x1
            y1, y2 = y2, q * y2 - y1
            out.append((x1, x2, y1, y2))
    return out


# ---------------------------------------------------------- main class


class ModularSymbols:
    """Weight-2 modular symbols for Gamma_0(M) over Q."""

    def __init__(self, M: int):
        self.M = M
        self.units = [t for t in range(1, M + 1) if math.gcd(t, M) == 1]
        self._norm_table = self._build_norm_table(M)
        self.p1 = sorted(set(self._norm_table.values()))
        self.p1_index = {}
        for i, (c, d) in enumerate(self.p1):
            self.p1_index[(c, d)] = i
        self._build_presentation()
        self._build_cuspidal()

    # --- P^1(Z/M)

    def _build_norm_table(self, M: int):
        """(c, d) mod M -> canonical representative, for all valid pairs."""
        if M == 1:
            return {(0, 0): (0, 1)}
        table = {}
        for c in range(M):
            for d in range(M):
                if (c, d) in table:
                    continue
                if math.gcd(math.gcd(c, d), M) != 1:
                    continue
                orbit = [((c * t) % M, (d * t) % M) for t in self.units]
                rep = min(orbit)
                for pt in orbit:
                    table[pt] = rep
        return table

    def _p1_normalize(self, c: int, d: int):
        if self.M == 1:
            return (0, 1)
        return self._norm_table.get((c % self.M, d % self.M))

    def _apply(self, i: int, g) -> int | None:
        """Index of (c:d) * g, or None if the image is not in P^1."""
        c, d = self.p1[i]
        a, b, cc, dd = g
        key = self._p1_normalize(c * a + d * cc, c * b + d * dd)
        return None if key is None else self.p1_index[key]

    # --- presentation by the 2- and 3-term relations

    def _build_presentation(self):
        n = len(self.p1)
        S = (0, -1, 1, 0)
        T = (0, -1, 1, -1)  # order 3
        rel_rows = []
        for i in range(n):
            r = [Fraction(0)] * n
            r[i] += 1
            j = self._apply(i, S)
            r[j] += 1
            rel_rows.append(r)
            r = [Fraction(0)] * n
            r[i] += 1
            r[self._apply(i, T)] += 1
            r[self._apply(self._apply(i, T), T)] += 1
            rel_rows.append(r)
        rr, pivots = rref(rel_rows, n)
        free = [c for c in range(n) if c not in pivots]
        self.free_cols = free
        # express each generator e_i as a vector over the free columns
        expr = [[Fraction(0)] * len(free) for _ in range(n)]
        fpos = {c: k for k, c in enumerate(free)}
        for c in free:
            expr[c][fpos[c]] = Fraction(1)
        for row, pc in zip(rr, pivots):
            for c in free:
                if row[c] != 0:
                    expr[pc][fpos[c]] = -row[c]
        self.expr = expr  # symbol index -> coordinates in the quotient

    # --- boundary and cuspidal subspace

    def _lift_to_sl2(self, c: int, d: int):
        """gamma = [[a, b], [c', d']] in SL2(Z) with (c':d') = (c:d) mod M."""
        M = self.M
        if M == 1:
            return (1, 0, 0, 1)
        cc, dd = c % M, d % M
        found = None
        for t in range(2 * M + 2):
            for d2 in (dd + t * M, dd - t * M):
                if math.gcd(cc, d2) == 1:
                    found = (cc, d2)
                    break
            if found:
                break
        if found is None:
            raise RuntimeError("no coprime lift found")
        c2, d2 = found
        g, x, y = gcdext(c2, d2)
        assert g == 1
        # a d2 - b c2 = 1 -> a = y', b = -x' with c2 x + d2 y = 1
        return (y, -x, c2, d2)

    def _cusp_class(self, p: int, q: int):
        """Canonical key for the Gamma_0(M)-class of the cusp p/q."""
        M = self.M
        g = math.gcd(p, q)
        if g:
            p, q = p // g, q // g
        if q < 0:
            p, q = -p, -q
        if q == 0:
            p = 1
        for key in self._cusp_reps:
            if self._cusps_equivalent((p, q), key):
                return key
        self._cusp_reps.append((p, q))
        return (p, q)

    def _cusps_equivalent(self, u, v) -> bool:
        M = self.M
        p1, q1 = u
        p2, q2 = v
        s1 = self._completion_s(p1, q1)
        s2 = self._completion_s(p2, q2)
        g = math.gcd(q1 * q2, M)
        return (s1 * q2 - s2 * q1) % g == 0

    @staticmethod
    def _completion_s(p: int, q: int) -> int:
        if q == 0:
            return 1
        g, x, y = gcdext(p, q)
        # p*x + q*y = 1; gamma = [[p, -y], [q, x]] has det 1, s = x
        return x

    def _build_cuspidal(self):
        self._cusp_reps = []
        free = self.free_cols
        nf = len(free)
        cusp_index = {}
        rows_by_cusp = {}
        bmat = []  # will be cusp x nf
        for k, col in enumerate(free):
            c, d = self.p1[col]
            a, b, cc, dd = self._lift_to_sl2(c, d)
            # boundary of gamma{0, oo} = [gamma oo] - [gamma 0] = [a/cc] - [b/dd]
            for cuspkey, sign in (((a, cc), 1), ((b, dd), -1)):
                key = self._cusp_class(*cuspkey)
                if key not in cusp_index:
                    cusp_index[key] = len(cusp_index)
                    rows_by_cusp[cusp_index[key]] = [Fraction(0)] * nf
                rows_by_cusp[cusp_index[key]][k] += sign
        bmat = [rows_by_cusp[i] for i in range(len(cusp_index))]
        self.n_cusps = len(cusp_index)
        self.cuspidal_basis = kernel_basis(bmat, nf)  # vectors over free coords

    # --- Hecke operators

    def hecke_matrix(self, p: int, use_merel: bool = False):
        """Matrix of T_p on the cuspidal subspace basis (columns act on
        basis vectors)."""
        mats = merel_set(p) if (use_merel or p <= 5) else heilbronn_cremona(p)
        basis = self.cuspidal_basis
        free = self.free_cols
        nf = len(free)
        images = []
        # image of each free generator (count hits per symbol, then expand)
        gen_img = []
        for col in free:
            hits: dict[int, int] = {}
            for g in mats:
                j = self._apply(col, g)
                if j is not None:
                    hits[j] = hits.get(j, 0) + 1
            acc = [Fraction(0)] * nf
            for j, cnt in hits.items():
                ej = self.expr[j]
                for t in range(nf):
                    if ej[t]:
                        acc[t] += cnt * ej[t]
            gen_img.append(acc)
        for v in basis:
            img = [Fraction(0)] * nf
            for k in range(nf):
                if v[k]:
                    for t in range(nf):
                        if gen_img[k][t]:
                            img[t] += v[k] * gen_img[k][t]
            images.append(img)
        # express images in the cuspidal basis
        cols = [solve_in_span(basis, img) for img in images]
        dim = len(basis)
        return [[cols[j][i] for j in range(dim)] for i in range(dim)]


def _prime_power_matrices(ms: ModularSymbols, B: int, verbose: bool = False):
    """Matrices of T_{p^k} on the cuspidal basis for all prime powers <= B."""
    dim = len(ms.cuspidal_basis)

    def matmul(A, Bm):
        return [
            [sum(A[i][k] * Bm[k][j] for k in range(dim)) for j in range(dim)]
            for i in range(dim)
        ]

    mats = {}
    p = 2
    while p <= B:
        if all(p % r for r in range(2, int(math.isqrt(p)) + 1)):
            mats[p] = ms.hecke_matrix(p)
            if verbose:
                print(f"  T_{p} at level {ms.M} done", flush=True)
            q = p * p
            while q <= B:
                if ms.M % p == 0:
                    mats[q] = matmul(mats[p], mats[q // p])
                else:
                    t = matmul(mats[p], mats[q // p])
                    s = mats[q // (p * p)] if q // (p * p) > 1 else None
                    mats[q] = [
                        [
                            t[i][j]
                            - p * (s[i][j] if s else Fraction(int(i == j)))
                            for j in range(dim)
                        ]
                        for i in range(dim)
                    ]
                q *= p
        p += 1
    return mats


def q_expansion_basis(ms: ModularSymbols, B: int, verbose: bool = False):
    """Echelonized basis of S_2(Gamma_0(M); Q) to O(q^B), as lists of
    Fractions indexed by n (a[0] = 0).

    Uses a cyclic vector: with v in the cuspidal space, the coordinate
    sequences n -> (T_n v)_j all arise from linear functionals on the Hecke
    algebra and hence are q-expansions of cusp forms; if the orbit
    {T_n v} has full rank g, g independent coordinates give a basis.
    """
    g = genus_gamma0(ms.M)
    dim = len(ms.cuspidal_basis)
    if dim != 2 * g:
        raise RuntimeError(f"cuspidal dimension {dim} != 2g = {2 * g} at M={ms.M}")
    ppmats = _prime_power_matrices(ms, B, verbose)
    spf = list(range(B + 1))
    for p in range(2, B + 1):
        if spf[p] == p:
            for m in range(p * p, B + 1, p):
                if spf[m] == m:
                    spf[m] = p

    def matvec(A, v):
        return [sum(A[i][k] * v[k] for k in range(dim)) for i in range(dim)]

    probe = min(B, max(2 * dim + 8, (2 * ms.M * 2) // 12 + 10))
    for seed in range(dim):
        v0 = [Fraction(int((i * (seed + 1) + seed) % 3) - 1) for i in range(dim)]
        if seed < dim and all(x == 0 for x in v0):
            continue
        vecs = {1: v0}
        for n in range(2, B + 1):
            p = spf[n]
            q = p
            while (n // q) % p == 0:
                q *= p
            vecs[n] = matvec(ppmats[q], vecs[n // q])
        _, pivcols = rref([vecs[n] for n in range(1, probe + 1)], dim)
        if len(pivcols) >= g:
            break
    else:
        raise RuntimeError(f"no cyclic vector found at M={ms.M}")
    # coordinates whose sequences are independent: pivot columns of the
    # (n x coordinate) matrix
    _, pivcoord = rref(
        [[vecs[n][j] for j in range(dim)] for n in range(1, probe + 1)], dim
    )
    coords = pivcoord[:g]
    if len(coords) != g:
        raise RuntimeError(f"cyclic orbit rank {len(coords)} < genus {g}")
    seqs = [[vecs[n][j] for n in range(1, B + 1)] for j in coords]
    rrbasis, _ = rref(seqs, B)
    if len(rrbasis) != g:
        raise RuntimeError(f"sequence rank {len(rrbasis)} != genus {g} at M={ms.M}")
    return [[Fraction(0)] + row for row in rrbasis]
