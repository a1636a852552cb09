"""Independent coefficient oracles.

Grassmannian side: the classical Littlewood-Richardson rule by skew-tableau
enumeration, the rim-hook (abacus) reduction of quantum coefficients to
signed classical ones, and the quantum Pieri rule assembled into full
products through the Giambelli determinant.

Flag side: quantum Schubert polynomials built from the classical ones by
divided differences, expansion into standard elementary monomials, and
quantization of the elementary factors; products are then folded monomial by
monomial through the quantum Monk rule.  A classical product oracle via
divided differences backs the q -> 0 specialization checks.

All arithmetic is exact (Python integers; Fractions only inside the
elementary-basis elimination, with integrality asserted).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from . import perms, shapes
from .maps import GrIndex
from .perms import Permutation
from .shapes import Partition, RectContext

# ---------------------------------------------------------------------------
# Classical Littlewood-Richardson rule
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def classical_lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Number of LR skew tableaux of shape nu/lam and content mu:
    semistandard fillings whose reverse reading word is a lattice word."""
    if shapes.size(lam) + shapes.size(mu) != shapes.size(nu):
        return 0
    if not shapes.contains(nu, lam):
        return 0
    if not mu:
        return 1
    rows = len(nu)
    heights = len(mu)
    cells = []  # reverse reading order: rows top to bottom, right to left
    for i in range(1, rows + 1):
        for j in range(shapes.part(nu, i), shapes.part(lam, i), -1):
            cells.append((i, j))
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (heights + 1)
    total = 0

    def fill(pos: int) -> None:
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        i, j = cells[pos]
        right = grid.get((i, j + 1))
        above = grid.get((i - 1, j))
        hi = right if right is not None else heights
        for val in range(1, hi + 1):
            if counts[val] >= shapes.part(mu, val):
                continue
            if val > 1 and counts[val] >= counts[val - 1]:
                continue  # lattice condition
            if above is not None and val <= above:
                continue  # column strictness
            grid[(i, j)] = val
            counts[val] += 1
            fill(pos + 1)
            counts[val] -= 1
            del grid[(i, j)]

    fill(0)
    return total


# ---------------------------------------------------------------------------
# Rim-hook reduction of quantum Grassmannian coefficients
# ---------------------------------------------------------------------------


def rim_hook_reduce(gamma: Partition, ctx: RectContext):
    """Reduce a partition with at most m rows modulo n-rim hook removal.

    Returns None when the class vanishes (colliding bead positions), else
    (nu, d, sign) with nu inside the rectangle, d the number of removed
    hooks, and sign the product of (-1)^(m - height) over the hooks.
    """
    m, n = ctx.m, ctx.n
    if len(gamma) > m:
        raise shapes.ShapeError(f"{gamma} has more than {m} rows")
    betas = [shapes.part(gamma, i) + m - i for i in range(1, m + 1)]
    reduced = [b % n for b in betas]
    if len(set(reduced)) < m:
        return None
    d = sum((b - rb) // n for b, rb in zip(betas, reduced))
    inversions = sum(
        1
        for i in range(m)
        for j in range(i + 1, m)
        if reduced[i] < reduced[j]
    )
    # each hook removal contributes (-1)^(height-1); their product is the
    # parity of the final sort, and (-1)^(m-height) adds (m-1) per hook
    sign = (-1) ** (inversions + (m - 1) * d)
    ordered = sorted(reduced, reverse=True)
    nu = shapes.canon(ordered[i] - (m - 1 - i) for i in range(m))
    return nu, d, sign


GrTable = dict[tuple[Partition, int], int]


@lru_cache(maxsize=None)
def quantum_product_gr_bcff(lam: Partition, mu: Partition, ctx: RectContext) -> GrTable:
    """Full expansion of sigma_lam * sigma_mu via rim-hook reduction of the
    classical product."""
    table: GrTable = {}
    total = shapes.size(lam) + shapes.size(mu)
    for gamma in shapes.partitions_of(total, ctx.m):
        if not shapes.contains(gamma, lam):
            continue
        c = classical_lr(lam, mu, gamma)
        if c == 0:
            continue
        red = rim_hook_reduce(gamma, ctx)
        if red is None:
            continue
        nu, d, sign = red
        key = (nu, d)
        table[key] = table.get(key, 0) + sign * c
    return {k: v for k, v in table.items() if v != 0}


def quantum_lr_gr(x: GrIndex) -> int:
    """Single quantum LR coefficient via rim-hook reduction."""
    return quantum_product_gr_bcff(x.lam, x.mu, x.ctx).get((x.nu, x.d), 0)


# ---------------------------------------------------------------------------
# Quantum Pieri and Giambelli assembly
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def quantum_pieri_gr(p: int, lam: Partition, ctx: RectContext) -> GrTable:
    """Expansion of sigma_(p) * sigma_lam.

    The q^0 part is the classical horizontal-strip sum truncated to the
    rectangle; the q^1 part runs over mu with |mu| = |lam| + p - n and
    lam_{i+1} - 1 <= mu_i <= lam_i - 1 for every row i.
    """
    if not 1 <= p <= ctx.r:
        raise shapes.ShapeError(f"Pieri degree must be in 1..{ctx.r}, got {p}")
    if not shapes.fits_rectangle(lam, ctx):
        raise shapes.ShapeError(f"{lam} not contained in {ctx.r}^{ctx.m}")
    m = ctx.m
    table: GrTable = {}

    def strips(i: int, prev: int, left: int, acc: list[int]) -> None:
        if i > m:
            if left == 0:
                table[(shapes.canon(acc), 0)] = 1
            return
        lo = shapes.part(lam, i)
        hi = min(prev, shapes.part(lam, i - 1) if i > 1 else ctx.r, lo + left)
        for mi in range(lo, hi + 1):
            acc.append(mi)
            strips(i + 1, mi, left - (mi - lo), acc)
            acc.pop()

    strips(1, ctx.r, p, [])

    rem = shapes.size(lam) + p - ctx.n
    if rem >= 0:

        def qparts(i: int, prev: int, left: int, acc: list[int]) -> None:
            if i > m:
                if left == 0:
                    table[(shapes.canon(acc), 1)] = 1
                return
            hi = min(shapes.part(lam, i) - 1, prev, left)
            lo = max(shapes.part(lam, i + 1) - 1, 0)
            for mi in range(lo, hi + 1):
                acc.append(mi)
                qparts(i + 1, mi, left - mi, acc)
                acc.pop()

        qparts(1, ctx.r, rem, [])
    return table


def _pieri_apply(p: int, table: GrTable, ctx: RectContext) -> GrTable:
    out: GrTable = {}
    for (nu, d), c in table.items():
        for (mu, dd), _ in quantum_pieri_gr(p, nu, ctx).items():
            key = (mu, d + dd)
            out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v != 0}


@lru_cache(maxsize=None)
def quantum_product_gr_pieri(lam: Partition, mu: Partition, ctx: RectContext) -> GrTable:
    """sigma_lam * sigma_mu assembled by iterated quantum Pieri through the
    Giambelli determinant det(sigma_(mu_i + j - i)) applied to sigma_lam."""
    if not shapes.fits_rectangle(lam, ctx) or not shapes.fits_rectangle(mu, ctx):
        raise shapes.ShapeError(f"{lam} or {mu} not contained in {ctx.r}^{ctx.m}")
    ell = len(mu)
    if ell == 0:
        return {(lam, 0): 1}
    total: GrTable = {}
    for pi in permutations(range(ell)):
        rows = [mu[i] + pi[i] - i for i in range(ell)]
        if any(e < 0 or e > ctx.r for e in rows):
            continue
        inversions = sum(
            1 for i in range(ell) for j in range(i + 1, ell) if pi[i] > pi[j]
        )
        term: GrTable = {(lam, 0): 1}
        for e in rows:
            if e == 0:
                continue
            term = _pieri_apply(e, term, ctx)
        sign = (-1) ** inversions
        for key, c in term.items():
            total[key] = total.get(key, 0) + sign * c
    return {k: v for k, v in total.items() if v != 0}


# ---------------------------------------------------------------------------
# Polynomials: exponent-tuple dicts, exact integer coefficients
# ---------------------------------------------------------------------------

XPoly = dict[tuple[int, ...], int]  # exponents of x_1..x_n
QPoly = dict[tuple[tuple[int, ...], tuple[int, ...]], int]  # (x-exps, q-exps)


def _xmul(f: XPoly, g: XPoly) -> XPoly:
    out: XPoly = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            key = tuple(a + b for a, b in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v != 0}


def divided_difference(i: int, f: XPoly) -> XPoly:
    """(f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial."""
    out: XPoly = {}

    def add(exp, c):
        if c:
            out[exp] = out.get(exp, 0) + c
            if not out[exp]:
                del out[exp]

    for exp, c in f.items():
        p, q = exp[i - 1], exp[i]
        if p == q:
            continue
        sign, lo, hi = (1, q, p) if p > q else (-1, p, q)
        # (x^hi y^lo - x^lo y^hi)/(x - y) = sum x^(lo+j) y^(hi-1-j)
        for j in range(hi - lo):
            e = list(exp)
            e[i - 1], e[i] = lo + j, hi - 1 - j
            add(tuple(e), sign * c)
    return out


@lru_cache(maxsize=None)
def schubert_poly(w: Permutation) -> XPoly:
    """Classical Schubert polynomial, by divided differences down from the
    staircase monomial at the longest element."""
    n = len(w)
    if w == perms.w0(n):
        return {tuple(range(n - 1, -1, -1)): 1}
    for i in range(1, n):
        if w[i - 1] < w[i]:
            longer = w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]
            return divided_difference(i, schubert_poly(longer))
    raise AssertionError("unreachable")


def _descent_word(w: Permutation) -> list[int]:
    """Indices i_1, i_2, ... such that peeling descents in this order reaches
    the identity; then applying the divided differences in the same order
    realizes the operator dual to the Schubert basis element w."""
    word = []
    cur = list(w)
    while True:
        for i in range(1, len(cur)):
            if cur[i - 1] > cur[i]:
                word.append(i)
                cur[i - 1], cur[i] = cur[i], cur[i - 1]
                break
        else:
            return word


def expand_in_schubert_basis(f: XPoly, n: int) -> dict[Permutation, int]:
    """Expansion of a homogeneous polynomial in the Schubert basis, by
    applying the dual divided-difference chains and reading constant terms."""
    if not f:
        return {}
    degrees = {sum(e) for e in f}
    if len(degrees) != 1:
        raise ValueError("expansion requires a homogeneous polynomial")
    deg = degrees.pop()
    out: dict[Permutation, int] = {}
    for w in permutations(range(1, n + 1)):
        if perms.length(w) != deg:
            continue
        g = f
        for i in _descent_word(w):
            g = divided_difference(i, g)
            if not g:
                break
        c = g.get((0,) * n, 0)
        if c:
            out[w] = c
    return out


def classical_product_fl(u: Permutation, v: Permutation) -> dict[Permutation, int]:
    """Classical Schubert structure constants via divided differences."""
    return expand_in_schubert_basis(_xmul(schubert_poly(u), schubert_poly(v)), len(u))


# ---------------------------------------------------------------------------
# Standard elementary monomials and their quantization
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _elem_poly(i: int, k: int, n: int) -> XPoly:
    """e_i(x_1, ..., x_k) in n variables."""
    out: XPoly = {}
    for subset in combinations(range(k), i):
        exp = [0] * n
        for s in subset:
            exp[s] = 1
        out[tuple(exp)] = 1
    return out


@lru_cache(maxsize=None)
def _eI_poly(I: tuple[int, ...], n: int) -> XPoly:
    out: XPoly = {(0,) * n: 1}
    for k, ik in enumerate(I, start=1):
        if ik:
            out = _xmul(out, _elem_poly(ik, k, n))
    return out


def _degree_indices(n: int, deg: int) -> list[tuple[int, ...]]:
    """All I = (i_1, ..., i_{n-1}) with 0 <= i_k <= k and sum = deg."""
    out = [()]
    for k in range(1, n):
        out = [I + (ik,) for I in out for ik in range(0, k + 1)]
    return [I for I in out if sum(I) == deg]


@lru_cache(maxsize=None)
def _eI_echelon(n: int, deg: int):
    """Row-reduced family of the degree-deg standard elementary monomials,
    keyed by leading exponent; used to expand Schubert polynomials."""
    pivots: dict[tuple[int, ...], tuple[dict, dict]] = {}
    for I in _degree_indices(n, deg):
        poly = {e: Fraction(c) for e, c in _eI_poly(I, n).items()}
        combo = {I: Fraction(1)}
        while poly:
            lead = max(poly)
            if lead not in pivots:
                scale = poly[lead]
                poly = {e: c / scale for e, c in poly.items()}
                combo = {i: c / scale for i, c in combo.items()}
                pivots[lead] = (poly, combo)
                break
            ppoly, pcombo = pivots[lead]
            factor = poly[lead]
            for e, c in ppoly.items():
                poly[e] = poly.get(e, Fraction(0)) - factor * c
                if not poly[e]:
                    del poly[e]
            for i, c in pcombo.items():
                combo[i] = combo.get(i, Fraction(0)) - factor * c
                if not combo[i]:
                    del combo[i]
    return pivots


def elementary_expansion(f: XPoly, n: int) -> dict[tuple[int, ...], int]:
    """Write a homogeneous element of the staircase span as an integer
    combination of standard elementary monomials e_I."""
    if not f:
        return {}
    deg = sum(next(iter(f)))
    pivots = _eI_echelon(n, deg)
    poly = {e: Fraction(c) for e, c in f.items()}
    combo: dict[tuple[int, ...], Fraction] = {}
    while poly:
        lead = max(poly)
        if lead not in pivots:
            raise ValueError(f"monomial {lead} outside the elementary span")
        ppoly, pcombo = pivots[lead]
        factor = poly[lead]
        for e, c in ppoly.items():
            poly[e] = poly.get(e, Fraction(0)) - factor * c
            if not poly[e]:
                del poly[e]
        for i, c in pcombo.items():
            combo[i] = combo.get(i, Fraction(0)) + factor * c
            if not combo[i]:
                del combo[i]
    out = {}
    for i, c in combo.items():
        if c.denominator != 1:
            raise ValueError(f"non-integral elementary expansion at {i}: {c}")
        out[i] = int(c)
    return out


def _qmul(f: QPoly, g: QPoly) -> QPoly:
    out: QPoly = {}
    for (xa, qa), ca in f.items():
        for (xb, qb), cb in g.items():
            key = (
                tuple(a + b for a, b in zip(xa, xb)),
                tuple(a + b for a, b in zip(qa, qb)),
            )
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v != 0}


@lru_cache(maxsize=None)
def quantum_e(i: int, k: int, n: int) -> QPoly:
    """Quantum elementary polynomial E_i^k in x_1..x_k, q_1..q_{k-1}, via
    E_i^k = E_i^{k-1} + x_k E_{i-1}^{k-1} + q_{k-1} E_{i-2}^{k-2}."""
    if i == 0:
        return {((0,) * n, (0,) * (n - 1)): 1}
    if i < 0 or i > k:
        return {}
    out = dict(quantum_e(i, k - 1, n))
    xk = [0] * n
    xk[k - 1] = 1
    for key, c in _qmul(
        {(tuple(xk), (0,) * (n - 1)): 1}, quantum_e(i - 1, k - 1, n)
    ).items():
        out[key] = out.get(key, 0) + c
    if k >= 2:
        qk = [0] * (n - 1)
        qk[k - 2] = 1
        for key, c in _qmul(
            {((0,) * n, tuple(qk)): 1}, quantum_e(i - 2, k - 2, n)
        ).items():
            out[key] = out.get(key, 0) + c
    return {k_: v for k_, v in out.items() if v != 0}


@lru_cache(maxsize=None)
def quantum_schubert_poly(w: Permutation) -> QPoly:
    """Quantum Schubert polynomial: the elementary expansion of the classical
    polynomial with every factor e_i^k replaced by E_i^k."""
    n = len(w)
    out: QPoly = {}
    for I, alpha in elementary_expansion(schubert_poly(w), n).items():
        term: QPoly = {((0,) * n, (0,) * (n - 1)): 1}
        for k, ik in enumerate(I, start=1):
            if ik:
                term = _qmul(term, quantum_e(ik, k, n))
        for key, c in term.items():
            out[key] = out.get(key, 0) + alpha * c
    return {k_: v for k_, v in out.items() if v != 0}


# ---------------------------------------------------------------------------
# Quantum Monk rule and flag products
# ---------------------------------------------------------------------------

FlTable = dict[tuple[Permutation, tuple[int, ...]], int]


@lru_cache(maxsize=None)
def quantum_monk_fl(i: int, w: Permutation) -> FlTable:
    """sigma_{s_i} * sigma_w: transpositions t_ab with a <= i < b raising the
    length by one (classical part), or dropping it by 2(b-a)-1 with degree
    q_a...q_{b-1} (quantum part)."""
    n = len(w)
    if not 1 <= i <= n - 1:
        raise perms.PermError(f"Monk index {i} out of range for n={n}")
    out: FlTable = {}
    zero = (0,) * (n - 1)
    for a in range(1, i + 1):
        for b in range(i + 1, n + 1):
            wa, wb = w[a - 1], w[b - 1]
            between = w[a:b - 1]
            swapped = list(w)
            swapped[a - 1], swapped[b - 1] = wb, wa
            key_w = tuple(swapped)
            if wa < wb:
                if all(not wa < c < wb for c in between):
                    out[(key_w, zero)] = out.get((key_w, zero), 0) + 1
            else:
                if all(wb < c < wa for c in between):
                    qd = tuple(
                        1 if a <= p <= b - 1 else 0 for p in range(1, n)
                    )
                    out[(key_w, qd)] = out.get((key_w, qd), 0) + 1
    return out


def _table_mul_si(i: int, table: FlTable) -> FlTable:
    out: FlTable = {}
    for (w, qv), c in table.items():
        for (w2, qv2), c2 in quantum_monk_fl(i, w).items():
            key = (w2, tuple(a + b for a, b in zip(qv, qv2)))
            out[key] = out.get(key, 0) + c * c2
    return {k: v for k, v in out.items() if v != 0}


def _table_mul_xi(i: int, table: FlTable) -> FlTable:
    """Multiply by x_i = sigma_{s_i} - sigma_{s_{i-1}} (sigma_{s_0} = 0)."""
    out = _table_mul_si(i, table)
    if i > 1:
        for key, c in _table_mul_si(i - 1, table).items():
            out[key] = out.get(key, 0) - c
    return {k: v for k, v in out.items() if v != 0}


_XMONO_CACHE: dict[tuple[Permutation, tuple[int, ...]], FlTable] = {}


def _x_monomial_on(u: Permutation, xexp: tuple[int, ...]) -> FlTable:
    """x^xexp * sigma_u, evaluated by repeated Monk multiplications with the
    partial products cached across calls."""
    if not any(xexp):
        return {(u, (0,) * (len(u) - 1)): 1}
    key = (u, xexp)
    cached = _XMONO_CACHE.get(key)
    if cached is not None:
        return cached
    i = max(p for p, e in enumerate(xexp, start=1) if e)
    prev = list(xexp)
    prev[i - 1] -= 1
    table = _table_mul_xi(i, _x_monomial_on(u, tuple(prev)))
    _XMONO_CACHE[key] = table
    return table


_FL_PRODUCT_CACHE: dict[tuple[Permutation, Permutation], FlTable] = {}


def quantum_product_fl(u: Permutation, v: Permutation) -> FlTable:
    """Full expansion of sigma_u * sigma_v in the quantum cohomology of the
    complete flag variety, by folding the quantum Schubert polynomial of v
    through the quantum Monk rule onto sigma_u."""
    if len(u) != len(v):
        raise perms.PermError(f"size mismatch: {len(u)} vs {len(v)}")
    key = (u, v)
    cached = _FL_PRODUCT_CACHE.get(key)
    if cached is not None:
        return cached
    out: FlTable = {}
    for (xexp, qexp), c in sorted(quantum_schubert_poly(v).items()):
        for (w, qv), c2 in _x_monomial_on(u, xexp).items():
            k2 = (w, tuple(a + b for a, b in zip(qexp, qv)))
            out[k2] = out.get(k2, 0) + c * c2
    out = {k_: v_ for k_, v_ in out.items() if v_ != 0}
    _FL_PRODUCT_CACHE[key] = out
    return out


def fl_coefficient(u, v, w, d) -> int:
    return quantum_product_fl(u, v).get((tuple(w), tuple(d)), 0)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def serialize_gr_table(ctx: RectContext, table: GrTable) -> dict:
    terms = [
        {"nu": shapes.format_partition(nu), "d": d, "c": c}
        for (nu, d), c in sorted(table.items())
    ]
    return {"ring": "QH_Gr", "m": ctx.m, "n": ctx.n, "terms": terms}


def serialize_fl_table(n: int, table: FlTable) -> dict:
    terms = [
        {
            "w": perms.format_permutation(w),
            "deg": ",".join(str(e) for e in d),
            "c": c,
        }
        for (w, d), c in sorted(table.items())
    ]
    return {"ring": "QH_Fl", "n": n, "terms": terms}
