"""Index correspondences between quantum and affine Littlewood-Richardson
coefficients, and the commuting-pentagon comparator.

All maps here rewrite index tuples only; coefficient values live in
:mod:`qschubert.oracle`.  Index types re-validate their degree-balance
invariants on construction, so every correspondence is checked to land in
its stated target.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import perms, shapes
from .perms import DegreeVector, Permutation
from .shapes import Partition, RectContext


class DomainError(ValueError):
    """Raised when an index tuple is outside a correspondence's domain."""


# ---------------------------------------------------------------------------
# Index types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrIndex:
    """Quantum LR index (lambda, mu; nu, d) for the m x r Grassmannian."""

    lam: Partition
    mu: Partition
    nu: Partition
    d: int
    ctx: RectContext

    def __post_init__(self):
        for name, p in (("lambda", self.lam), ("mu", self.mu), ("nu", self.nu)):
            if not shapes.fits_rectangle(p, self.ctx):
                raise DomainError(
                    f"{name}={p} not contained in {self.ctx.r}^{self.ctx.m}"
                )
        if self.d < 0:
            raise DomainError(f"degree must be nonnegative, got {self.d}")
        lhs = shapes.size(self.lam) + shapes.size(self.mu)
        rhs = shapes.size(self.nu) + self.ctx.n * self.d
        if lhs != rhs:
            raise DomainError(
                f"degree balance |lambda|+|mu| = |nu| + n*d violated: "
                f"{lhs} != {rhs}"
            )

    def record(self) -> dict:
        return {
            "kind": "gr",
            "m": self.ctx.m,
            "n": self.ctx.n,
            "lambda": shapes.format_partition(self.lam),
            "mu": shapes.format_partition(self.mu),
            "nu": shapes.format_partition(self.nu),
            "d": self.d,
        }


@dataclass(frozen=True)
class FlIndex:
    """Quantum LR index (u, v; w, d) for the complete flag variety."""

    u: Permutation
    v: Permutation
    w: Permutation
    d: DegreeVector
    n: int

    def __post_init__(self):
        for name, p in (("u", self.u), ("v", self.v), ("w", self.w)):
            perms.check_window(p)
            if len(p) != self.n:
                raise DomainError(f"{name}={p} is not a window of size {self.n}")
        if len(self.d) != self.n - 1:
            raise DomainError(
                f"degree vector {self.d} must have length {self.n - 1}"
            )
        if any(e < 0 for e in self.d):
            raise DomainError(f"degree vector {self.d} must be nonnegative")
        lhs = perms.length(self.u) + perms.length(self.v)
        rhs = perms.length(self.w) + 2 * sum(self.d)
        if lhs != rhs:
            raise DomainError(
                f"degree balance l(u)+l(v) = l(w) + 2|d| violated: {lhs} != {rhs}"
            )

    def record(self) -> dict:
        return {
            "kind": "fl",
            "n": self.n,
            "u": perms.format_permutation(self.u),
            "v": perms.format_permutation(self.v),
            "w": perms.format_permutation(self.w),
            "d": ",".join(str(e) for e in self.d),
        }


@dataclass(frozen=True)
class AffIndex:
    """Affine LR index (lambda, mu; eta) of k-bounded partitions."""

    lam: Partition
    mu: Partition
    eta: Partition
    k: int

    def __post_init__(self):
        for name, p in (("lambda", self.lam), ("mu", self.mu), ("eta", self.eta)):
            if not shapes.is_k_bounded(p, self.k):
                raise DomainError(f"{name}={p} is not {self.k}-bounded")
        if shapes.size(self.lam) + shapes.size(self.mu) != shapes.size(self.eta):
            raise DomainError(
                f"size balance |lambda|+|mu| = |eta| violated for "
                f"{self.lam}, {self.mu}, {self.eta}"
            )

    def record(self) -> dict:
        return {
            "kind": "aff",
            "k": self.k,
            "lambda": shapes.format_partition(self.lam),
            "mu": shapes.format_partition(self.mu),
            "eta": shapes.format_partition(self.eta),
        }


def to_json(index) -> str:
    return json.dumps(index.record())


# ---------------------------------------------------------------------------
# Palindromic degree vectors
# ---------------------------------------------------------------------------


def peaked_degree(center: int, height: int, k: int) -> DegreeVector:
    """(..., 1, 2, ..., height, ..., 2, 1, ...) peaking at position center,
    zero elsewhere; the length-k vector with entry max(0, height - |p - c|)."""
    return tuple(max(0, height - abs(p - center)) for p in range(1, k + 1))


# ---------------------------------------------------------------------------
# The five correspondences
# ---------------------------------------------------------------------------


def gamma_sd(x: GrIndex) -> GrIndex:
    """Strange duality: (lam, mu, nu, d) -> (lam^c, mu^c, cycled(nu)^c, t)
    with t = diag0(nu^c) - d.  Defined only when t >= 0."""
    ctx = x.ctx
    t = shapes.diag0(shapes.complement(x.nu, ctx)) - x.d
    if t < 0:
        raise DomainError(
            f"strange duality needs diag0(nu^c) - d >= 0, got t={t} "
            f"for nu={x.nu}, d={x.d}"
        )
    rho = shapes.from_bits(shapes.cycle(shapes.to_bits(x.nu, ctx), ctx.r), ctx)
    return GrIndex(
        lam=shapes.complement(x.lam, ctx),
        mu=shapes.complement(x.mu, ctx),
        nu=shapes.complement(rho, ctx),
        d=t,
        ctx=ctx,
    )


def psi_pc(x: GrIndex) -> FlIndex:
    """Peterson comparison: (lam, mu, nu, d) -> (w_lam, w_mu,
    w_nu * w0_P * w0_P'_d, d_B) with d_B the palindromic vector peaking at
    position m with value d."""
    ctx = x.ctx
    if not 0 <= x.d <= min(ctx.m, ctx.r):
        raise DomainError(
            f"Peterson comparison needs 0 <= d <= min(m, r), got d={x.d}"
        )
    third = perms.compose(
        perms.compose(
            perms.grassmann_from_partition(x.nu, ctx), perms.w0_P(ctx.m, ctx.n)
        ),
        perms.w0_P_prime(ctx.m, ctx.n, x.d),
    )
    return FlIndex(
        u=perms.grassmann_from_partition(x.lam, ctx),
        v=perms.grassmann_from_partition(x.mu, ctx),
        w=third,
        d=peaked_degree(ctx.m, x.d, ctx.k),
        n=ctx.n,
    )


def gamma_t(x: FlIndex) -> FlIndex:
    """Flag transpose: conjugate each window by w0 and reverse the degree."""
    return FlIndex(
        u=perms.conjugate(x.u),
        v=perms.conjugate(x.v),
        w=perms.conjugate(x.w),
        d=tuple(reversed(x.d)),
        n=x.n,
    )


def phi_gr(x: GrIndex) -> AffIndex:
    """Quantum-to-affine for the Grassmannian: (lam, mu, nu, d) ->
    (lam, mu, nu + d hooks) with k = n - 1."""
    return AffIndex(
        lam=x.lam,
        mu=x.mu,
        eta=shapes.add_rim_hooks(x.nu, x.d, x.ctx),
        k=x.ctx.k,
    )


def phi_fl(x: AffIndex, ctx: RectContext) -> FlIndex:
    """Affine-to-quantum for the flag variety, on the image of phi_gr.

    Recovers (nu, d) by peeling rim hooks off eta, splits eta at t rows from
    the top, and maps both blocks through the Grassmann window construction.
    """
    if ctx.k != x.k:
        raise DomainError(f"context {ctx} has k={ctx.k}, index has k={x.k}")
    for name, p in (("lambda", x.lam), ("mu", x.mu)):
        if not shapes.fits_rectangle(p, ctx):
            raise DomainError(
                f"{name}={p} not contained in {ctx.r}^{ctx.m}; index is "
                f"outside the image of the Grassmannian correspondence"
            )
    try:
        nu, d = shapes.peel_rim_hooks(x.eta, ctx)
    except shapes.ShapeError as exc:
        raise DomainError(str(exc)) from exc
    delta = shapes.diag0(shapes.complement(nu, ctx))
    if d > delta:
        raise DomainError(
            f"eta={x.eta} peels to nu={nu} with d={d} > diag0(nu^c)={delta}; "
            f"the split leaves the rectangle"
        )
    t = shapes.t_of(nu, d, ctx)
    eta1, eta2 = shapes.split_eta(x.eta, t, ctx)
    n, r = ctx.n, ctx.r
    third = perms.compose(
        perms.varphi(eta2, r - t, n), perms.varphi(eta1, r + t, n)
    )
    out = FlIndex(
        u=perms.varphi(x.lam, r, n),
        v=perms.varphi(x.mu, r, n),
        w=third,
        d=peaked_degree(r, t, ctx.k),
        n=n,
    )
    # Descent positions can degenerate (t = 0, or a full-rectangle block
    # making a factor trivial), so only the containment is guaranteed.
    if not perms.descents(out.w) <= {r - t, r + t}:
        raise DomainError(
            f"descents {perms.descents(out.w)} escape {{r-t, r+t}} = "
            f"{{{r - t}, {r + t}}}"
        )
    return out


def phi_fl_inv(x: FlIndex) -> AffIndex:
    """Inverse affine correspondence: defined when
    tilde(d) = D(w) - D(u) - D(v); sends each window through the irreducible
    k-bounded partition construction."""
    want = perms.tilde_d(x.d)
    have = tuple(
        dw - du - dv
        for dw, du, dv in zip(
            perms.descent_vector(x.w),
            perms.descent_vector(x.u),
            perms.descent_vector(x.v),
        )
    )
    if want != have:
        raise DomainError(
            f"precondition tilde(d) = D(w) - D(u) - D(v) violated: "
            f"tilde(d) = {want} but D(w)-D(u)-D(v) = {have}"
        )
    return AffIndex(
        lam=perms.lambda_tilde_down(x.u),
        mu=perms.lambda_tilde_down(x.v),
        eta=perms.lambda_tilde_down(x.w),
        k=x.n - 1,
    )


def pentagon(x: GrIndex) -> tuple[FlIndex, FlIndex, bool]:
    """Both routes from a Grassmannian index to a flag index:
    left = flag transpose after Peterson comparison after strange duality,
    right = affine correspondence after rim-hook addition.  Returns
    (left, right, equal as tuples)."""
    left = gamma_t(psi_pc(gamma_sd(x)))
    right = phi_fl(phi_gr(x), x.ctx)
    return left, right, left == right


# ---------------------------------------------------------------------------
# Type-A root pairings for the degree-lift verification
# ---------------------------------------------------------------------------

Coroot = tuple[int, ...]


def pairing(gamma: Coroot, i: int, j: int) -> int:
    """Euclidean pairing of the coroot sum(gamma_c alpha_c) with the positive
    root e_i - e_j (1 <= i < j <= n, n = len(gamma) + 1)."""
    n = len(gamma) + 1
    if not 1 <= i < j <= n:
        raise DomainError(f"positive root needs 1 <= i < j <= {n}")

    def coord(p: int) -> int:
        # p-th coordinate of sum(gamma_c (e_c - e_{c+1}))
        return (gamma[p - 1] if p <= len(gamma) else 0) - (
            gamma[p - 2] if p >= 2 else 0
        )

    return coord(i) - coord(j)


@dataclass(frozen=True)
class LiftReport:
    m: int
    n: int
    d: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_peterson_lift(m: int, n: int, d: int) -> LiftReport:
    """Check that the palindromic degree vector peaking at position m is the
    unique lift: simple-root pairings are 2 at m, -1 at m +- d, 0 otherwise
    (all zero when d = 0), every positive root of the parabolic pairs to 0 or
    -1, and the coefficient at position m is d."""
    if not (1 <= m < n and 0 <= d <= min(m, n - m)):
        raise DomainError(f"bad lift parameters m={m}, n={n}, d={d}")
    k = n - 1
    gamma = peaked_degree(m, d, k)
    bad: list[str] = []
    if gamma[m - 1] != d:
        bad.append(f"coefficient at alpha_{m} is {gamma[m - 1]}, want {d}")
    for j in range(1, k + 1):
        val = pairing(gamma, j, j + 1)
        if d == 0:
            want = 0
        elif j == m:
            want = 2
        elif j in (m - d, m + d):
            want = -1
        else:
            want = 0
        if val != want:
            bad.append(f"<gamma, alpha_{j}> = {val}, want {want}")
    for lo, hi in ((1, m), (m + 1, n)):
        for i in range(lo, hi + 1):
            for j in range(i + 1, hi + 1):
                val = pairing(gamma, i, j)
                if val not in (0, -1):
                    bad.append(f"<gamma, alpha_{i},{j}> = {val}, not in {{0,-1}}")
    return LiftReport(m=m, n=n, d=d, violations=tuple(bad))
