"""Linear algebra and polynomial arithmetic over prime fields.

Internal support for the character-table computation: matrices are lists of
lists of ints in [0, p), polynomials are coefficient lists with index = degree
(trimmed, so [] is the zero polynomial).  Everything here is deterministic;
root finding uses a fixed shift sweep instead of random splitting so repeated
runs agree.
"""

from __future__ import annotations

from .cyclo import prime_factors


def inv_mod(a: int, p: int) -> int:
    return pow(a, p - 2, p)


def element_of_order(e: int, p: int) -> int:
    """Smallest integer with multiplicative order exactly e mod p (needs e | p-1)."""
    if (p - 1) % e:
        raise ValueError(f"no element of order {e} mod {p}")
    if e == 1:
        return 1
    checks = [e // q for q in prime_factors(e)]
    for w in range(2, p):
        if pow(w, e, p) == 1 and all(pow(w, c, p) != 1 for c in checks):
            return w
    raise ValueError(f"no element of order {e} mod {p}")  # unreachable for prime p


# -- matrices


def mat_mul_mod(a, b, p):
    n, m, k = len(a), len(b[0]), len(b)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def rref_mod(mat, p):
    """Row-reduce in place semantics on a copy; returns (rows, pivot columns)."""
    a = [list(row) for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if a[i][c] % p), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = inv_mod(a[r][c], p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def kernel_mod(mat, p):
    """Basis of the right kernel, one vector per free column."""
    rows, pivots = rref_mod(mat, p)
    cols = len(mat[0]) if mat else 0
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [0] * cols
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rows[r][free]) % p
        basis.append(v)
    return basis


def solve_unique_mod(a, b, p):
    """Solve A X = B with A of full column rank; X returned row-major."""
    n = len(a)
    s = len(a[0])
    width = len(b[0])
    aug = [list(a[i]) + list(b[i]) for i in range(n)]
    rows, pivots = rref_mod(aug, p)
    if pivots[:s] != list(range(s)) or len(pivots) != s:
        raise ValueError("coefficient matrix is rank deficient")
    return [rows[r][s:s + width] for r in range(s)]


# -- characteristic polynomial

def charpoly_mod(mat, p):
    """Monic characteristic polynomial of a square matrix mod p.

    Reduces to upper Hessenberg form by similarity, then runs the standard
    leading-minor recurrence.  Coefficient list has index = degree.
    """
    n = len(mat)
    if n == 0:
        return [1]
    h = [[x % p for x in row] for row in mat]
    for c in range(n - 2):
        pr = next((i for i in range(c + 1, n) if h[i][c]), None)
        if pr is None:
            continue
        if pr != c + 1:
            h[c + 1], h[pr] = h[pr], h[c + 1]
            for row in h:
                row[c + 1], row[pr] = row[pr], row[c + 1]
        inv = inv_mod(h[c + 1][c], p)
        for i in range(c + 2, n):
            if h[i][c]:
                f = h[i][c] * inv % p
                h[i] = [(x - f * y) % p for x, y in zip(h[i], h[c + 1])]
                for row in h:
                    row[c + 1] = (row[c + 1] + f * row[i]) % p
    # charpoly of leading k x k Hessenberg block, built up by expansion
    polys = [[1]]
    for k in range(1, n + 1):
        # expand along the last row of the k x k block
        term = poly_sub(poly_shift(polys[k - 1]),
                        poly_scale(polys[k - 1], h[k - 1][k - 1]), p)
        run = 1
        for i in range(k - 2, -1, -1):
            run = run * h[i + 1][i] % p
            coef = run * h[i][k - 1] % p
            term = poly_sub(term, poly_scale(polys[i], coef), p)
        polys.append(term)
    return polys[n]


# -- polynomials

def poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_shift(f):
    return [0] + list(f)


def poly_scale(f, c):
    return [x * c for x in f]


def poly_sub(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, x in enumerate(f):
        out[i] = x
    for i, x in enumerate(g):
        out[i] = (out[i] - x) % p
    return poly_trim(out)


def poly_mul_mod(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] = (out[i + j] + x * y) % p
    return poly_trim(out)


def poly_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = [x % p for x in f]
    dg = len(g) - 1
    lead_inv = inv_mod(g[-1], p)
    q = [0] * max(len(f) - dg, 0)
    r = list(f)
    for i in range(len(r) - 1, dg - 1, -1):
        if r[i]:
            c = r[i] * lead_inv % p
            q[i - dg] = c
            for j in range(dg + 1):
                r[i - dg + j] = (r[i - dg + j] - c * g[j]) % p
    return poly_trim(q), poly_trim(r)


def poly_gcd_mod(f, g, p):
    """Monic gcd."""
    f, g = poly_trim(list(f)), poly_trim(list(g))
    while g:
        f, g = g, poly_divmod(f, g, p)[1]
    if f:
        inv = inv_mod(f[-1], p)
        f = [x * inv % p for x in f]
    return f


def poly_powmod(base, exp, modulus, p):
    result = [1]
    base = poly_divmod(base, modulus, p)[1]
    while exp:
        if exp & 1:
            result = poly_divmod(poly_mul_mod(result, base, p), modulus, p)[1]
        base = poly_divmod(poly_mul_mod(base, base, p), modulus, p)[1]
        exp >>= 1
    return result


def poly_eval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def roots_mod(f, p):
    """Distinct roots in F_p, ascending.  Deterministic."""
    f = poly_trim([x % p for x in f])
    roots = []
    if f and f[0] == 0:
        roots.append(0)
        while f and f[0] == 0:
            f = f[1:]
    if len(f) > 1:
        # keep only the part splitting into distinct linear factors
        xp = poly_powmod([0, 1], p, f, p)
        linear = poly_gcd_mod(poly_sub(xp, [0, 1], p), f, p)
        roots.extend(_split_linear(linear, p, 0))
    return sorted(set(roots))


def _split_linear(g, p, shift):
    """Roots of a squarefree product of linear factors, by quadratic-character
    splitting with shifts 0, 1, 2, ... (no randomness)."""
    if len(g) <= 1:
        return []
    if len(g) == 2:
        return [(-g[0] * inv_mod(g[1], p)) % p]
    for a in range(shift, p):
        if poly_eval(g, -a % p, p) == 0:
            rest, _ = poly_divmod(g, [a % p, 1], p)
            return [(-a) % p] + _split_linear(rest, p, a + 1)
        euler = poly_powmod([a % p, 1], (p - 1) // 2, g, p)
        h = poly_gcd_mod(poly_sub(euler, [1], p), g, p)
        if 0 < len(h) - 1 < len(g) - 1:
            other, rem = poly_divmod(g, h, p)
            assert not rem
            return _split_linear(h, p, a + 1) + _split_linear(other, p, a + 1)
    raise ArithmeticError("shift sweep failed to split polynomial")
