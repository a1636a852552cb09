"""Exhaustive verification suites behind the ``verify`` CLI command.

Each suite enumerates a bounded family of index tuples, checks an exact
identity on every one, and reports counts plus any failures.  Failures are
emitted as soon as a work unit finishes.  Suites fan out over work units and
may run on a process pool; the unit list and the aggregation order are fixed,
so reports are deterministic for a given bound.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import maps, oracle, perms, shapes
from .maps import GrIndex
from .shapes import RectContext

JOBS_ENV = "QSCHUBERT_JOBS"


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        return (
            f"{self.name}: {self.checked} checked, {status}, "
            f"{self.seconds:.1f}s"
        )


def _jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_units(name: str, worker, units, emit) -> SuiteReport:
    """Run worker over the unit list, sequentially or on a process pool,
    aggregating (checked, failures) pairs in unit order."""
    start = time.time()
    report = SuiteReport(name=name)
    jobs = _jobs()

    def consume(results) -> None:
        for checked, failures in results:
            report.checked += checked
            for f in failures:
                report.failures.append(f)
                emit(f"FAIL {f}")

    if jobs == 1 or len(units) <= 1:
        consume(map(worker, units))
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(units))) as pool:
            chunk = max(1, len(units) // (4 * jobs))
            consume(pool.map(worker, units, chunksize=chunk))
    report.seconds = time.time() - start
    return report


def _emit_stdout(msg: str) -> None:
    print(msg, flush=True)


# ---------------------------------------------------------------------------
# Tuple enumeration
# ---------------------------------------------------------------------------


def gr_tuples(ctx: RectContext, lam, mu, dmax=None, require_t=False):
    """All (nu, d) completing (lam, mu) to a degree-balanced index, with
    0 <= d <= dmax (default min(m, r)); optionally only those with
    diag0(nu^c) - d >= 0."""
    total = shapes.size(lam) + shapes.size(mu)
    if dmax is None:
        dmax = min(ctx.m, ctx.r)
    by_size: dict[int, list] = {}
    for p in shapes.partitions_in_rectangle(ctx.m, ctx.r):
        by_size.setdefault(shapes.size(p), []).append(p)
    for d in range(dmax + 1):
        rest = total - ctx.n * d
        if rest < 0:
            break
        for nu in by_size.get(rest, []):
            if require_t and shapes.diag0(shapes.complement(nu, ctx)) - d < 0:
                continue
            yield nu, d


def _pair_units(nmax: int):
    units = []
    for n in range(2, nmax + 1):
        for m in range(1, n):
            for lam in shapes.partitions_in_rectangle(m, n - m):
                units.append((m, n - m, lam))
    return units


# ---------------------------------------------------------------------------
# Pentagon
# ---------------------------------------------------------------------------


def _pentagon_worker(unit):
    m, r, lam = unit
    ctx = RectContext(m, r)
    checked, failures = 0, []
    for mu in shapes.partitions_in_rectangle(m, r):
        for nu, d in gr_tuples(ctx, lam, mu, require_t=True):
            x = GrIndex(lam=lam, mu=mu, nu=nu, d=d, ctx=ctx)
            try:
                left, right, ok = maps.pentagon(x)
            except Exception as exc:  # pragma: no cover - any raise is a failure
                failures.append(f"pentagon {x.record()}: {exc}")
                continue
            checked += 1
            if not ok:
                failures.append(
                    f"pentagon {x.record()}: {left.record()} != {right.record()}"
                )
    return checked, failures


def verify_pentagon(nmax: int = 7, emit=_emit_stdout) -> SuiteReport:
    """Both pentagon routes agree on every balanced tuple with t >= 0,
    for all rectangles with m + r <= nmax."""
    return _run_units(
        f"pentagon (n<={nmax})", _pentagon_worker, _pair_units(nmax), emit
    )


# ---------------------------------------------------------------------------
# Strange-duality numeric suite
# ---------------------------------------------------------------------------


def _sd_worker(unit):
    m, r, lam = unit
    ctx = RectContext(m, r)
    n = ctx.n
    checked, failures = 0, []
    for mu in shapes.partitions_in_rectangle(m, r):
        total = shapes.size(lam) + shapes.size(mu)
        for nu, d in gr_tuples(ctx, lam, mu, dmax=total // n):
            x = GrIndex(lam=lam, mu=mu, nu=nu, d=d, ctx=ctx)
            t = shapes.diag0(shapes.complement(nu, ctx)) - d
            lhs = oracle.quantum_lr_gr(x)
            checked += 1
            if t < 0:
                if lhs != 0:
                    failures.append(
                        f"sd-vanishing {x.record()}: coefficient {lhs} != 0"
                    )
                continue
            y = maps.gamma_sd(x)
            rhs = oracle.quantum_lr_gr(y)
            if lhs != rhs:
                failures.append(
                    f"sd-numeric {x.record()} vs {y.record()}: {lhs} != {rhs}"
                )
            if maps.gamma_sd(y) != x:
                failures.append(f"sd-involution {x.record()}")
    return checked, failures


def verify_sd_numeric(nmax: int = 6, emit=_emit_stdout) -> SuiteReport:
    """Strange duality as a coefficient identity on the rim-hook oracle for
    t >= 0, plus the empirical vanishing check for t < 0."""
    return _run_units(
        f"sd-numeric (n<={nmax})", _sd_worker, _pair_units(nmax), emit
    )


# ---------------------------------------------------------------------------
# Peterson-comparison numeric suite
# ---------------------------------------------------------------------------


def _pc_worker(unit):
    m, r, lam = unit
    ctx = RectContext(m, r)
    checked, failures = 0, []
    for mu in shapes.partitions_in_rectangle(m, r):
        gr_table = oracle.quantum_product_gr_bcff(lam, mu, ctx)
        u = perms.grassmann_from_partition(lam, ctx)
        v = perms.grassmann_from_partition(mu, ctx)
        fl_table = oracle.quantum_product_fl(u, v)
        for nu, d in gr_tuples(ctx, lam, mu):
            x = GrIndex(lam=lam, mu=mu, nu=nu, d=d, ctx=ctx)
            y = maps.psi_pc(x)
            lhs = gr_table.get((nu, d), 0)
            rhs = fl_table.get((y.w, y.d), 0)
            checked += 1
            if lhs != rhs:
                failures.append(
                    f"pc-numeric {x.record()} vs {y.record()}: {lhs} != {rhs}"
                )
    return checked, failures


def verify_pc_numeric(nmax: int = 5, emit=_emit_stdout) -> SuiteReport:
    """Quantum LR coefficients match the flag-oracle coefficient at the
    Peterson-comparison image key, for every balanced tuple with
    d <= min(m, r)."""
    return _run_units(
        f"pc-numeric (n<={nmax})", _pc_worker, _pair_units(nmax), emit
    )


# ---------------------------------------------------------------------------
# Degree-lift pairing table
# ---------------------------------------------------------------------------


def _lift_worker(unit):
    n = unit
    checked, failures = 0, []
    for m in range(1, n):
        for d in range(0, min(m, n - m) + 1):
            rep = maps.verify_peterson_lift(m, n, d)
            checked += 1
            if not rep.ok:
                failures.append(f"lift m={m} n={n} d={d}: {rep.violations}")
    return checked, failures


def verify_lift(nmax: int = 12, emit=_emit_stdout) -> SuiteReport:
    """Pairing table for the palindromic degree lift, all (m, d) with
    n <= nmax."""
    return _run_units(
        f"lift (n<={nmax})", _lift_worker, list(range(2, nmax + 1)), emit
    )


# ---------------------------------------------------------------------------
# Property sub-suites
# ---------------------------------------------------------------------------


def _bits_worker(unit):
    m, r, lam = unit
    ctx = RectContext(m, r)
    checked, failures = 0, []
    bits = shapes.to_bits(lam, ctx)
    comp = shapes.complement(lam, ctx)
    checked += 1
    if shapes.from_bits(bits, ctx) != lam:
        failures.append(f"bits-roundtrip {lam} in {r}^{m}")
    if shapes.to_bits(comp, ctx) != bits[::-1]:
        failures.append(f"bits-reversal {lam} in {r}^{m}")
    if shapes.complement(comp, ctx) != lam:
        failures.append(f"complement-involution {lam} in {r}^{m}")
    if shapes.transpose(shapes.transpose(lam)) != lam:
        failures.append(f"transpose-involution {lam}")
    if shapes.cycle(bits, ctx.n) != bits or shapes.cycle(
        shapes.cycle(bits, 3), ctx.n - 3
    ) != bits:
        failures.append(f"cycle-inverse {lam} in {r}^{m}")
    return checked, failures


def _rimhook_worker(unit):
    m, r, lam = unit
    ctx = RectContext(m, r)
    checked, failures = 0, []
    delta = shapes.diag0(shapes.complement(lam, ctx))
    for d in range(0, r + 1):
        # add_rim_hooks internally compares insertion with the closed form
        try:
            eta = shapes.add_rim_hooks(lam, d, ctx)
        except shapes.ShapeError as exc:
            failures.append(f"rimhook nu={lam} d={d} {r}^{m}: {exc}")
            continue
        checked += 1
        if shapes.peel_rim_hooks(eta, ctx) != (lam, d):
            failures.append(f"rimhook-peel nu={lam} d={d} {r}^{m}")
        t = shapes.t_of(lam, d, ctx)
        if d <= delta and d + t != delta:
            failures.append(
                f"delta=d+t nu={lam} d={d} {r}^{m}: {d}+{t} != {delta}"
            )
    return checked, failures


def _split_worker(unit):
    m, r, lam = unit
    nu = lam
    ctx = RectContext(m, r)
    n = ctx.n
    checked, failures = 0, []
    delta = shapes.diag0(shapes.complement(nu, ctx))
    rho = shapes.from_bits(shapes.cycle(shapes.to_bits(nu, ctx), r), ctx)
    if shapes.diag0(rho) != delta:
        failures.append(f"diag0(rho) nu={nu} {r}^{m}")
    # closed formula for the cycled partition
    padded = list(nu) + [0] * (m - len(nu))
    explicit = shapes.canon(
        [padded[i] + delta for i in range(m - delta, m)]
        + [padded[i] - r + delta for i in range(m - delta)]
    )
    if rho != explicit:
        failures.append(f"rho-formula nu={nu} {r}^{m}: {rho} != {explicit}")
    for d in range(0, delta + 1):
        checked += 1
        t = shapes.t_of(nu, d, ctx)
        eta = shapes.add_rim_hooks(nu, d, ctx)
        eta1, eta2 = shapes.split_eta(eta, t, ctx)
        left, right = shapes.rho_split(rho, t)
        want1 = shapes.add_parts(left, ((r - t),) * (m - t))
        if (eta1, eta2) != (want1, right):
            failures.append(f"eta-rho-split nu={nu} d={d} {r}^{m}")
        lhs = perms.compose(
            perms.varphi(eta2, r - t, n), perms.varphi(eta1, r + t, n)
        )
        rhs = perms.compose(
            perms.compose(
                perms.grassmann_from_partition(rho, ctx),
                perms.w0_P_prime(m, n, t),
            ),
            perms.w0(n),
        )
        if lhs != rhs:
            failures.append(f"bin-reversal nu={nu} d={d} {r}^{m}")
    return checked, failures


def _window_worker(unit):
    j, r, lam = unit  # lam has at most j parts, each at most r = n - j
    n = j + r
    ctx = RectContext(j, r)
    checked, failures = 0, []
    lamt = shapes.transpose(lam)
    w = perms.grassmann_from_partition(lam, ctx)
    checked += 1
    head = tuple(shapes.part(lam, j - i + 1) + i for i in range(1, j + 1))
    tail = tuple(j + p - shapes.part(lamt, p) for p in range(1, r + 1))
    if w != head + tail:
        failures.append(f"window-formula lam={lam} j={j} n={n}")
    dual = shapes.complement(lam, ctx)
    if perms.grassmann_from_partition(dual, ctx) != perms.compose(
        perms.compose(perms.w0(n), w), perms.w0_P(j, n)
    ):
        failures.append(f"window-duality lam={lam} j={j} n={n}")
    dual_t = shapes.transpose(dual)
    if (
        perms.grassmann_from_partition(dual_t, RectContext(r, j))
        != tail + head
    ):
        failures.append(f"window-transpose-dual lam={lam} j={j} n={n}")
    if perms.grassmann_from_partition(lamt, RectContext(r, j)) != perms.conjugate(w):
        failures.append(f"window-conjugate lam={lam} j={j} n={n}")
    if perms.partition_from_grassmann(w, j) != lam:
        failures.append(f"window-roundtrip lam={lam} j={j} n={n}")
    if perms.length(w) != shapes.size(lam):
        failures.append(f"window-length lam={lam} j={j} n={n}")
    return checked, failures


def _varphi_worker(unit):
    from itertools import permutations as _perm_iter

    n = unit
    checked, failures = 0, []
    for j in range(1, n):
        rect = shapes.k_rectangle(j, n)
        for eta in shapes.partitions_in_rectangle(n - j, j):
            u = perms.varphi(eta, j, n)
            checked += 1
            want = () if eta == rect else eta
            if perms.lambda_tilde_down(u) != want:
                failures.append(f"varphi-down eta={eta} j={j} n={n}")
    for w in _perm_iter(range(1, n + 1)):
        ds = perms.descents(w)
        if len(ds) == 1:
            (j,) = ds
            down = perms.lambda_tilde_down(w)
            checked += 1
            if perms.varphi(down, j, n) != w:
                failures.append(f"down-varphi w={w} n={n}")
            inv = perms.inv_sequence(w)
            formula = shapes.canon(n - j - inv[i] for i in range(j))
            if shapes.transpose(down) != formula:
                failures.append(f"one-descent-transpose w={w} n={n}")
        elif len(ds) == 2:
            a, b = sorted(ds)
            w2, w1 = perms.factor_two_descents(w)
            checked += 1
            if perms.compose(w2, w1) != w:
                failures.append(f"factor-product w={w} n={n}")
            if not perms.descents(w2) <= {a} or not perms.descents(w1) <= {b}:
                failures.append(f"factor-descents w={w} n={n}")
            if any(w1[i] != i + 1 for i in range(a)):
                failures.append(f"factor-fixes w={w} n={n}")
            lhs = shapes.transpose(perms.lambda_tilde_down(w))
            rhs = shapes.add_parts(
                shapes.transpose(perms.lambda_tilde_down(w2)),
                shapes.transpose(perms.lambda_tilde_down(w1)),
            )
            if lhs != rhs:
                failures.append(f"inversion-additivity w={w} n={n}")
    return checked, failures


def _aff_roundtrip_worker(unit):
    m, r, lam = unit
    ctx = RectContext(m, r)
    checked, failures = 0, []
    for mu in shapes.partitions_in_rectangle(m, r):
        for nu, d in gr_tuples(ctx, lam, mu, require_t=True):
            x = GrIndex(lam=lam, mu=mu, nu=nu, d=d, ctx=ctx)
            aff = maps.phi_gr(x)
            fl = maps.phi_fl(aff, ctx)
            t = shapes.t_of(nu, d, ctx)
            if not perms.descents(fl.w) <= {r - t, r + t}:
                failures.append(f"phi-fl-descents {x.record()}")
            if fl.d != maps.peaked_degree(r, t, ctx.k):
                failures.append(f"phi-fl-degree {x.record()}")
            degenerate = (
                t < 1
                or perms.descents(fl.u) != {r}
                or perms.descents(fl.v) != {r}
                or perms.descents(fl.w) != {r - t, r + t}
            )
            if degenerate:
                continue
            checked += 1
            if maps.phi_fl_inv(fl) != aff:
                failures.append(f"aff-roundtrip {x.record()}")
    return checked, failures


def _multiplicity_worker(unit):
    from itertools import permutations as _perm_iter

    n = unit
    k = n - 1
    checked, failures = 0, []
    for w in _perm_iter(range(1, n + 1)):
        down = perms.lambda_tilde_down(w)
        inv = perms.inv_sequence(perms.compose(perms.w0(n), w))
        ds = perms.descents(w)
        checked += 1
        for i in range(1, k):
            n_i = sum(1 for p in down if p == i)
            if i in ds:
                want = k - i + inv[i - 1] - inv[i]
            else:
                want = inv[i - 1] - inv[i] - 1
            if n_i != want:
                failures.append(f"multiplicity w={w} i={i} n={n}")
    return checked, failures


def _involution_worker(unit):
    m, r, lam = unit
    ctx = RectContext(m, r)
    checked, failures = 0, []
    for mu in shapes.partitions_in_rectangle(m, r):
        for nu, d in gr_tuples(ctx, lam, mu, require_t=True):
            x = GrIndex(lam=lam, mu=mu, nu=nu, d=d, ctx=ctx)
            y = maps.gamma_sd(x)
            checked += 1
            if maps.gamma_sd(y) != x:
                failures.append(f"sd-involution {x.record()}")
            fl = maps.psi_pc(x)
            if maps.gamma_t(maps.gamma_t(fl)) != fl:
                failures.append(f"t-involution {x.record()}")
    return checked, failures


PROPS_BOUNDS = {
    "bits": 12,
    "rimhooks": 12,
    "splits": 9,
    "windows": 9,
    "varphi": 7,
    "aff-roundtrip": 7,
    "multiplicities": 6,
    "involutions": 6,
    "lift": 12,
}


def _window_units(nmax: int):
    units = []
    for n in range(2, nmax + 1):
        for j in range(1, n):
            for lam in shapes.partitions_in_rectangle(j, n - j):
                units.append((j, n - j, lam))
    return units


def verify_props(nmax: int | None = None, emit=_emit_stdout) -> list[SuiteReport]:
    """All shape/window/factorization property suites at their standard
    bounds, each capped at nmax when given."""

    def bound(name: str) -> int:
        b = PROPS_BOUNDS[name]
        return b if nmax is None else min(b, nmax)

    reports = [
        _run_units(
            f"props:bits (n<={bound('bits')})",
            _bits_worker,
            _pair_units(bound("bits")),
            emit,
        ),
        _run_units(
            f"props:rimhooks (n<={bound('rimhooks')})",
            _rimhook_worker,
            _pair_units(bound("rimhooks")),
            emit,
        ),
        _run_units(
            f"props:splits (n<={bound('splits')})",
            _split_worker,
            _pair_units(bound("splits")),
            emit,
        ),
        _run_units(
            f"props:windows (n<={bound('windows')})",
            _window_worker,
            _window_units(bound("windows")),
            emit,
        ),
        _run_units(
            f"props:varphi (n<={bound('varphi')})",
            _varphi_worker,
            list(range(2, bound("varphi") + 1)),
            emit,
        ),
        _run_units(
            f"props:aff-roundtrip (n<={bound('aff-roundtrip')})",
            _aff_roundtrip_worker,
            _pair_units(bound("aff-roundtrip")),
            emit,
        ),
        _run_units(
            f"props:multiplicities (n<={bound('multiplicities')})",
            _multiplicity_worker,
            list(range(2, bound("multiplicities") + 1)),
            emit,
        ),
        _run_units(
            f"props:involutions (n<={bound('involutions')})",
            _involution_worker,
            _pair_units(bound("involutions")),
            emit,
        ),
        _run_units(
            f"props:lift (n<={bound('lift')})",
            _lift_worker,
            list(range(2, bound("lift") + 1)),
            emit,
        ),
    ]
    return reports
