"""Partitions in a rectangle, boundary bit strings, rim hooks, k-rectangles.

Conventions used throughout:

* A partition is a tuple of weakly decreasing positive integers; trailing
  zeros are always stripped (the empty partition is ``()``).  Row counts,
  when an operation needs them, come from an explicit :class:`RectContext`.
* Shapes are drawn in French notation: part 1 is the bottom (longest) row.
  "Southeast" therefore means lowest part index, largest column.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Partition = tuple[int, ...]


class ShapeError(ValueError):
    """Raised when a shape-level precondition is violated."""


def canon(parts) -> Partition:
    """Canonical partition: tuple, trailing zeros stripped, order checked."""
    t = tuple(parts)
    while t and t[-1] == 0:
        t = t[:-1]
    if any(p < 0 for p in t):
        raise ShapeError(f"negative part in {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ShapeError(f"parts not weakly decreasing: {t}")
    return t


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """The i-th part (1-indexed), zero beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


@dataclass(frozen=True)
class RectContext:
    """Ambient m-row, r-column rectangle; n = m + r, k = n - 1."""

    m: int
    r: int

    def __post_init__(self):
        if self.m < 1 or self.r < 1:
            raise ShapeError(f"need m >= 1 and r >= 1, got m={self.m}, r={self.r}")

    @property
    def n(self) -> int:
        return self.m + self.r

    @property
    def k(self) -> int:
        return self.m + self.r - 1

    def rectangle(self) -> Partition:
        return (self.r,) * self.m


def fits_rectangle(lam: Partition, ctx: RectContext) -> bool:
    return len(lam) <= ctx.m and (not lam or lam[0] <= ctx.r)


def _require_in_rectangle(lam: Partition, ctx: RectContext) -> None:
    if not fits_rectangle(lam, ctx):
        raise ShapeError(f"partition {lam} not contained in {ctx.r}^{ctx.m}")


def complement(lam: Partition, ctx: RectContext) -> Partition:
    """Complement (r - lam_m, ..., r - lam_1) inside the ctx rectangle."""
    _require_in_rectangle(lam, ctx)
    padded = list(lam) + [0] * (ctx.m - len(lam))
    return canon(ctx.r - p for p in reversed(padded))


def transpose(lam: Partition) -> Partition:
    """Conjugate partition; column j has height #{i : lam_i >= j}."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(
        inner[i] <= outer[i] for i in range(len(inner))
    )


def diag0(lam: Partition) -> int:
    """Number of boxes on the main diagonal: #{i : lam_i >= i}."""
    return sum(1 for i, p in enumerate(lam, start=1) if p >= i)


def to_bits(lam: Partition, ctx: RectContext) -> str:
    """Boundary bit string: trace from the upper-left corner of the rectangle,
    vertical step -> '0', horizontal step -> '1'.  m zeros, r ones."""
    _require_in_rectangle(lam, ctx)
    padded = list(lam) + [0] * (ctx.m - len(lam))
    steps = []
    prev = 0
    for j in range(ctx.m, 0, -1):  # top row (smallest part) first
        steps.append("1" * (padded[j - 1] - prev))
        steps.append("0")
        prev = padded[j - 1]
    steps.append("1" * (ctx.r - prev))
    return "".join(steps)


def from_bits(bits: str, ctx: RectContext) -> Partition:
    """Inverse of :func:`to_bits`."""
    if len(bits) != ctx.n or any(b not in "01" for b in bits):
        raise ShapeError(f"bad bit string {bits!r} for n={ctx.n}")
    if bits.count("0") != ctx.m:
        raise ShapeError(f"bit string {bits!r} needs {ctx.m} zeros and {ctx.r} ones")
    parts = []
    ones = 0
    for b in bits:
        if b == "1":
            ones += 1
        else:
            parts.append(ones)
    # parts holds (lam_m, ..., lam_1); reverse into canonical order
    return canon(reversed(parts))


def cycle(bits: str, a: int) -> str:
    """Move the first a bits (mod the length) to the end of the string."""
    if not bits:
        return bits
    a %= len(bits)
    return bits[a:] + bits[:a]


def k_rectangle(i: int, n: int) -> Partition:
    """The k-rectangle (i^(n-i)) for 1 <= i <= k = n - 1."""
    if not 1 <= i <= n - 1:
        raise ShapeError(f"k-rectangle index {i} out of range for n={n}")
    return (i,) * (n - i)


def is_k_bounded(lam: Partition, k: int) -> bool:
    return not lam or lam[0] <= k


def reduce_irreducible(mu: Partition, k: int) -> tuple[Partition, tuple[int, ...]]:
    """Remove as many k-rectangles (i^(n-i)) as possible from the part multiset.

    Returns the irreducible partition and the multiset of removed rectangle
    indices (weakly decreasing).  A rectangle R_i is removable whenever mu has
    at least n - i parts equal to i, with n = k + 1.
    """
    if not is_k_bounded(mu, k):
        raise ShapeError(f"{mu} is not {k}-bounded")
    n = k + 1
    counts = [0] * (k + 1)
    for p in mu:
        counts[p] += 1
    removed = []
    for i in range(k, 0, -1):
        while counts[i] >= n - i:
            counts[i] -= n - i
            removed.append(i)
    rest = []
    for i in range(k, 0, -1):
        rest.extend([i] * counts[i])
    return canon(rest), tuple(removed)


def union_parts(lam: Partition, mu: Partition) -> Partition:
    """Weakly decreasing rearrangement of the combined part multisets."""
    return canon(sorted(list(lam) + list(mu), reverse=True))


def add_parts(lam: Partition, mu: Partition) -> Partition:
    """Coordinate-wise sum, padding the shorter with zeros."""
    length = max(len(lam), len(mu))
    return canon(part(lam, i) + part(mu, i) for i in range(1, length + 1))


# ---------------------------------------------------------------------------
# Rim hooks with heads in the last column of the rectangle
# ---------------------------------------------------------------------------
#
# Adding one n-rim hook with head (its southeasternmost cell) in column r is
# forced once the head row i0 is chosen: row contiguity makes the hook occupy
# columns [mu_{i0}+1, r] of row i0 and columns [mu_j+1, mu_{j-1}+1] of each
# higher row it reaches, so the cell count must come out to exactly n.


def _hook_candidates(mu: Partition, ctx: RectContext):
    """Yield (head_row, new_shape) for every addable n-rim hook with head in
    column r of ``mu``."""
    n, r = ctx.n, ctx.r
    for i0 in range(1, len(mu) + 2):
        if part(mu, i0) >= r:
            continue
        if i0 > 1 and part(mu, i0 - 1) != r:
            continue  # head cell (i0, r) needs a full row below it
        cells = r - part(mu, i0)
        j = i0
        while cells < n:
            j += 1
            cells += part(mu, j - 1) - part(mu, j) + 1
        if cells != n:
            continue
        new = list(mu) + [0] * (j - len(mu))
        new[i0 - 1] = r
        for row in range(i0 + 1, j + 1):
            new[row - 1] = part(mu, row - 1) + 1
        yield i0, canon(new)


def _add_one_hook(mu: Partition, ctx: RectContext) -> Partition:
    found = [shape for _, shape in _hook_candidates(mu, ctx)]
    if len(found) != 1:
        raise ShapeError(
            f"expected a unique addable {ctx.n}-rim hook with head in column "
            f"{ctx.r} on {mu}, found {len(found)}"
        )
    return found[0]


def _closed_form(nu: Partition, d: int, ctx: RectContext) -> Partition:
    """(r^(d+a_d), nu_{a_d+1}+d, ..., nu_m+d, nu_1-r+d, ..., nu_{a_d}-r+d)
    where a_d is the height of column r-d of nu, and column 0 has height m."""
    m, r = ctx.m, ctx.r
    a_d = m if d == r else sum(1 for p in nu if p >= r - d)
    padded = list(nu) + [0] * (m - len(nu))
    head = [r] * (d + a_d)
    mid = [padded[i] + d for i in range(a_d, m)]
    tail = [padded[i] - r + d for i in range(a_d)]
    return canon(head + mid + tail)


@lru_cache(maxsize=None)
def add_rim_hooks(nu: Partition, d: int, ctx: RectContext) -> Partition:
    """nu + d hooks: add d n-rim hooks to nu, all heads in column r.

    Computed both by direct geometric insertion and by the closed form; the
    two must agree.
    """
    _require_in_rectangle(nu, ctx)
    if not 0 <= d <= ctx.r:
        raise ShapeError(f"need 0 <= d <= r={ctx.r}, got d={d}")
    direct = nu
    for _ in range(d):
        direct = _add_one_hook(direct, ctx)
    closed = _closed_form(nu, d, ctx)
    if direct != closed:
        raise ShapeError(
            f"rim-hook insertion mismatch for nu={nu}, d={d}: "
            f"direct {direct} vs closed form {closed}"
        )
    return direct


def _invert_closed_form(eta: Partition, d: int, ctx: RectContext):
    """Candidate nu with nu + d hooks = eta, read off the closed form; None
    when the block structure does not match."""
    m, r = ctx.m, ctx.r
    full = 0
    while full < len(eta) and eta[full] == r:
        full += 1
    a = full - d
    if a < 0 or len(eta) > m + d + a:
        return None
    body = list(eta) + [0] * (m + d + a - len(eta))
    mid = body[full : full + (m - a)]
    tail = body[full + (m - a) :]
    try:
        nu = canon([t + r - d for t in tail] + [x - d for x in mid])
    except ShapeError:
        return None
    if not fits_rectangle(nu, ctx):
        return None
    return nu


@lru_cache(maxsize=None)
def peel_rim_hooks(eta: Partition, ctx: RectContext) -> tuple[Partition, int]:
    """Invert :func:`add_rim_hooks`: strip the n-rim hooks with heads in
    column r.  Returns the unique (nu, d) with nu inside the rectangle; every
    candidate hook count is verified by re-inserting the hooks."""
    canon(eta)
    found = []
    for d in range(0, ctx.r + 1):
        if size(eta) - ctx.n * d < 0:
            break
        nu = _invert_closed_form(eta, d, ctx)
        if nu is not None and add_rim_hooks(nu, d, ctx) == eta:
            found.append((nu, d))
    if len(found) != 1:
        raise ShapeError(
            f"{eta} is not of the form nu+d over {ctx.r}^{ctx.m} "
            f"(candidates: {found})"
        )
    return found[0]


def split_eta(
    nu_plus_d: Partition, t: int, ctx: RectContext
) -> tuple[Partition, Partition]:
    """Split into (first m - t parts, remaining parts); in French notation the
    first block is the bottom m - t rows."""
    if not 0 <= t <= ctx.m:
        raise ShapeError(f"need 0 <= t <= m={ctx.m}, got t={t}")
    head = ctx.m - t
    padded = list(nu_plus_d) + [0] * max(0, head - len(nu_plus_d))
    return canon(padded[:head]), canon(padded[head:])


def t_of(nu: Partition, d: int, ctx: RectContext) -> int:
    """diag0 of the rectangle complement of the portion of nu+d inside the
    rectangle (first m parts, capped at r).  Equals diag0(nu^vee) - d whenever
    that quantity is nonnegative."""
    eta = add_rim_hooks(nu, d, ctx)
    portion = canon(min(p, ctx.r) for p in list(eta)[: ctx.m])
    return diag0(complement(portion, ctx))


def rho_split(rho: Partition, t: int) -> tuple[Partition, Partition]:
    """Split along the embedded t x t square, via transposes:
    left' = (rho'_1 - t, ..., rho'_t - t), right' = (rho'_{t+1}, ...)."""
    if t < 0 or (t > 0 and part(rho, t) < t):
        raise ShapeError(f"({t}^{t}) is not contained in {rho}")
    rt = transpose(rho)
    left = transpose(canon(part(rt, j) - t for j in range(1, t + 1)))
    right = transpose(canon(rt[t:]))
    return left, right


# ---------------------------------------------------------------------------
# Enumeration and text forms
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions_in_rectangle(m: int, r: int) -> tuple[Partition, ...]:
    """All partitions with at most m parts, each part at most r."""
    out = []

    def rec(prefix: list[int], maxpart: int, rows_left: int) -> None:
        out.append(tuple(prefix))
        if rows_left == 0:
            return
        for p in range(maxpart, 0, -1):
            prefix.append(p)
            rec(prefix, p, rows_left - 1)
            prefix.pop()

    rec([], r, m)
    return tuple(sorted(out))


def partitions_of(total: int, max_parts: int, max_part: int | None = None):
    """Yield partitions of ``total`` with at most ``max_parts`` parts."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_of(total - first, max_parts - 1, first):
            yield (first,) + rest


def parse_partition(text: str) -> Partition:
    """Parse "2,2,1"; an empty string or "0" is the empty partition."""
    text = text.strip()
    if text in ("", "0", "-"):
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ShapeError(f"cannot parse partition {text!r}") from exc
    return canon(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)
