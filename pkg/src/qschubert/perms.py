"""Permutation windows, Grassmann bijections, and descent/inversion calculus.

A permutation is a tuple ``w`` with ``w[i-1] = w(i)``, a bijection on
``{1, ..., n}``.  Composition is ``(uv)(i) = u(v(i))``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .shapes import (
    Partition,
    RectContext,
    ShapeError,
    canon,
    complement,
    part,
    reduce_irreducible,
    transpose,
)

Permutation = tuple[int, ...]
DegreeVector = tuple[int, ...]


class PermError(ValueError):
    """Raised when a permutation-level precondition is violated."""


def check_window(w) -> Permutation:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise PermError(f"not a window on 1..{len(w)}: {w}")
    return w


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def w0(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(uv)(i) = u(v(i))."""
    if len(u) != len(v):
        raise PermError(f"size mismatch: {len(u)} vs {len(v)}")
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        out[wi - 1] = i
    return tuple(out)


def length(w: Permutation) -> int:
    return sum(inv_sequence(w))


def inv_sequence(w: Permutation) -> tuple[int, ...]:
    """Inv_i(w) = #{j > i : w(i) > w(j)}, one entry per position."""
    n = len(w)
    return tuple(
        sum(1 for j in range(i + 1, n) if w[i] > w[j]) for i in range(n)
    )


def descents(w: Permutation) -> set[int]:
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def descent_vector(w: Permutation) -> DegreeVector:
    """Sum of standard basis vectors over the descent set, length n - 1."""
    d = descents(w)
    return tuple(1 if i in d else 0 for i in range(1, len(w)))


def conjugate(w: Permutation) -> Permutation:
    """w0 w w0, i.e. w'(n+1-i) = n+1-w(i)."""
    n = len(w)
    out = [0] * n
    for i in range(1, n + 1):
        out[n - i] = n + 1 - w[i - 1]
    return tuple(out)


# ---------------------------------------------------------------------------
# Longest elements of parabolic subgroups
# ---------------------------------------------------------------------------


def w0_interval(i: int, j: int, n: int) -> Permutation:
    """Longest element of the subgroup generated by s_i..s_j: the window of
    the identity with positions i..j+1 reversed.  Identity when i > j."""
    if i > j:
        return identity(n)
    if not (1 <= i and j <= n - 1):
        raise PermError(f"interval [{i},{j}] out of range for n={n}")
    win = list(range(1, n + 1))
    win[i - 1 : j + 1] = reversed(win[i - 1 : j + 1])
    return tuple(win)


def w0_P(m: int, n: int) -> Permutation:
    """[m ... 1 | n ... m+1]."""
    if not 1 <= m < n:
        raise PermError(f"need 1 <= m < n, got m={m}, n={n}")
    return tuple(range(m, 0, -1)) + tuple(range(n, m, -1))


def w0_P_prime(m: int, n: int, d: int) -> Permutation:
    """[m-d ... 1 | m ... m-d+1 | m+d ... m+1 | n ... m+d+1], the product of
    the four interval reversals split at positions m and m +- d."""
    if not 1 <= m < n:
        raise PermError(f"need 1 <= m < n, got m={m}, n={n}")
    if not 0 <= d <= min(m, n - m):
        raise PermError(f"need 0 <= d <= min(m, n-m), got d={d}")
    blocks = (
        tuple(range(m - d, 0, -1))
        + tuple(range(m, m - d, -1))
        + tuple(range(m + d, m, -1))
        + tuple(range(n, m + d, -1))
    )
    prod = compose(
        compose(w0_interval(1, m - d - 1, n), w0_interval(m - d + 1, m - 1, n)),
        compose(w0_interval(m + 1, m + d - 1, n), w0_interval(m + d + 1, n - 1, n)),
    )
    assert blocks == prod  # the interval reversals act on disjoint positions
    return blocks


# ---------------------------------------------------------------------------
# Grassmann permutations
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def grassmann_from_partition(lam: Partition, ctx: RectContext) -> Permutation:
    """w(i) = lam_{m-i+1} + i for i <= m, remaining values in increasing
    order; the unique permutation with descent set inside {m} whose window
    encodes lam."""
    if len(lam) > ctx.m or (lam and lam[0] > ctx.r):
        raise ShapeError(f"partition {lam} not contained in {ctx.r}^{ctx.m}")
    m, n = ctx.m, ctx.n
    head = tuple(part(lam, m - i + 1) + i for i in range(1, m + 1))
    tail = tuple(sorted(set(range(1, n + 1)) - set(head)))
    return head + tail


def partition_from_grassmann(w: Permutation, m: int) -> Partition:
    """(w(m) - m, ..., w(1) - 1); requires descent set inside {m}."""
    if not descents(w) <= {m}:
        raise PermError(f"{w} is not Grassmann with descent at {m}")
    return canon(w[m - 1 - i] - (m - i) for i in range(m))


def is_grassmann(w: Permutation, j: int) -> bool:
    return descents(w) <= {j}


@lru_cache(maxsize=None)
def zeta(w: Permutation) -> tuple[int, ...]:
    """zeta_i = Inv_i(w0 w) + binom(n-i, 2) for i in 1..k; exactly k entries,
    trailing zeros kept."""
    n = len(w)
    inv = inv_sequence(compose(w0(n), w))
    return tuple(inv[i - 1] + comb(n - i, 2) for i in range(1, n))


def lambda_tilde(w: Permutation) -> Partition:
    """Transpose of zeta(w); a (n-1)-bounded partition."""
    return transpose(canon(zeta(w)))


@lru_cache(maxsize=None)
def lambda_tilde_down(w: Permutation) -> Partition:
    """Irreducible reduction of lambda_tilde(w) (all k-rectangles removed)."""
    return reduce_irreducible(lambda_tilde(w), len(w) - 1)[0]


@lru_cache(maxsize=None)
def varphi(eta: Partition, j: int, n: int) -> Permutation:
    """Grassmann permutation in S_n^j attached to eta inside the k-rectangle
    (j^(n-j)): the window of the transposed rectangle complement of eta.

    Inverts lambda_tilde_down on partitions contained in (j^(n-j)).
    """
    if not 0 <= j <= n:
        raise PermError(f"need 0 <= j <= n, got j={j}")
    if j == 0 or j == n:
        if eta:
            raise ShapeError(f"partition {eta} not contained in {j}^{n - j}")
        return identity(n)
    rect = RectContext(m=n - j, r=j)
    for i, p in enumerate(eta, start=1):
        if i > n - j or p > j:
            raise ShapeError(
                f"partition {eta} not contained in {j}^{n - j}: row {i} "
                f"has {p} boxes"
            )
    comp = transpose(complement(eta, rect))
    return grassmann_from_partition(comp, RectContext(m=j, r=n - j))


def factor_two_descents(w: Permutation) -> tuple[Permutation, Permutation]:
    """Write w with descent set {a, b} as w2 w1 with w2 in S_n^a, w1 in S_n^b
    and w1 fixing 1..a pointwise.

    w2 keeps the first a entries of w and sorts the rest; w1 relabels the
    tail of w by its relative order using the values a+1..n.
    """
    ds = sorted(descents(w))
    if len(ds) != 2:
        raise PermError(f"{w} has descent set {ds}, need exactly two descents")
    a, _ = ds
    n = len(w)
    w2 = w[:a] + tuple(sorted(w[a:]))
    w1 = [0] * n
    for i in range(a):
        w1[i] = i + 1
    for rank, pos in enumerate(
        sorted(range(a, n), key=lambda p: w[p]), start=a + 1
    ):
        w1[pos] = rank
    w1 = tuple(w1)
    assert compose(w2, w1) == w
    return w2, w1


def tilde_d(d: DegreeVector) -> DegreeVector:
    """sum_i d_i (e_{i-1} - 2 e_i + e_{i+1}) with e_0 = e_n = 0."""
    k = len(d)
    out = [0] * k
    for i in range(1, k + 1):
        di = d[i - 1]
        if di == 0:
            continue
        if i - 1 >= 1:
            out[i - 2] += di
        out[i - 1] -= 2 * di
        if i + 1 <= k:
            out[i] += di
    return tuple(out)


# ---------------------------------------------------------------------------
# Text forms
# ---------------------------------------------------------------------------


def parse_permutation(text: str) -> Permutation:
    """Parse "2,3,5,1,4", or the compact digit form "23514" for n <= 9."""
    text = text.strip()
    if "," in text:
        try:
            win = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise PermError(f"cannot parse permutation {text!r}") from exc
    else:
        if not text.isdigit():
            raise PermError(f"cannot parse permutation {text!r}")
        win = tuple(int(ch) for ch in text)
    return check_window(win)


def format_permutation(w: Permutation) -> str:
    return ",".join(str(v) for v in w)
