"""Acceptance suite: every criterion prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines and the
wall times next to their targets.
"""

import time
from itertools import permutations

from qschubert import maps as M
from qschubert import oracle as O
from qschubert import perms as P
from qschubert import shapes as S
from qschubert import verify as V
from qschubert.maps import GrIndex
from qschubert.shapes import RectContext


def _report(num, name, ok, detail, seconds, budget):
    status = "PASS" if ok else "FAIL"
    print(
        f"ACCEPTANCE {num} {name}: {status} "
        f"({detail}, {seconds:.2f}s / target {budget:.0f}s)"
    )
    assert ok, f"criterion {num} ({name}) failed: {detail}"
    assert seconds < budget, f"criterion {num} exceeded {budget}s: {seconds:.2f}s"


def test_criterion_1_running_example_product():
    start = time.perf_counter()
    ctx = RectContext(3, 2)
    expected = {((1, 1), 1): 1, ((2,), 1): 1}
    bcff = O.quantum_product_gr_bcff((2, 2, 1), (1, 1), ctx)
    pieri = O.quantum_product_gr_pieri((2, 2, 1), (1, 1), ctx)
    ok = bcff == expected and pieri == expected
    _report(
        1,
        "running-example product",
        ok,
        f"bcff={bcff == expected} pieri={pieri == expected}",
        time.perf_counter() - start,
        1.0,
    )


def test_criterion_2_running_example_chain():
    start = time.perf_counter()
    ctx = RectContext(3, 2)
    x = GrIndex(lam=(2, 2, 1), mu=(1, 1), nu=(2,), d=1, ctx=ctx)

    sd = M.gamma_sd(x)
    eq1 = (sd.lam, sd.mu, sd.nu, sd.d) == ((1,), (2, 1, 1), (), 1)
    pc = M.psi_pc(sd)
    eq2 = (pc.u, pc.v, pc.w, pc.d) == (
        (1, 2, 4, 3, 5), (2, 3, 5, 1, 4), (2, 3, 1, 5, 4), (0, 0, 1, 0),
    )
    tt = M.gamma_t(pc)
    eq3 = (tt.u, tt.v, tt.w, tt.d) == (
        (1, 3, 2, 4, 5), (2, 5, 1, 3, 4), (2, 1, 5, 3, 4), (0, 1, 0, 0),
    )
    aff = M.phi_gr(x)
    eq4 = (aff.lam, aff.mu, aff.eta) == ((2, 2, 1), (1, 1), (2, 2, 1, 1, 1))
    back = M.phi_fl_inv(tt)
    eq5 = back == aff and M.phi_fl(aff, ctx) == tt

    coeff = [
        O.quantum_lr_gr(x),
        O.quantum_product_gr_pieri(x.lam, x.mu, ctx).get((x.nu, x.d), 0),
        O.quantum_product_fl(pc.u, pc.v).get((pc.w, pc.d), 0),
        O.quantum_product_fl(tt.u, tt.v).get((tt.w, tt.d), 0),
    ]
    ok = all([eq1, eq2, eq3, eq4, eq5]) and coeff == [1, 1, 1, 1]
    _report(
        2,
        "running-example chain",
        ok,
        f"equalities={[eq1, eq2, eq3, eq4, eq5]} coefficients={coeff}",
        time.perf_counter() - start,
        1.0,
    )


def test_criterion_3_pentagon_exhaustive():
    rep = V.verify_pentagon(7, emit=print)
    _report(
        3,
        "pentagon exhaustive n<=7",
        rep.ok and rep.checked == 17554,
        f"checked={rep.checked} failures={len(rep.failures)}",
        rep.seconds,
        60.0,
    )


def test_criterion_4_pc_numeric():
    rep = V.verify_pc_numeric(5, emit=print)
    _report(
        4,
        "Peterson-comparison numeric n<=5",
        rep.ok,
        f"checked={rep.checked} failures={len(rep.failures)}",
        rep.seconds,
        300.0,
    )


def test_criterion_5_sd_numeric():
    rep = V.verify_sd_numeric(6, emit=print)
    _report(
        5,
        "strange-duality numeric n<=6",
        rep.ok,
        f"checked={rep.checked} failures={len(rep.failures)}",
        rep.seconds,
        60.0,
    )


def test_criterion_6_flag_transpose_numeric():
    start = time.perf_counter()
    checked = failures = 0
    for n in (2, 3, 4):
        rev = list(range(n - 2, -1, -1))
        for u in permutations(range(1, n + 1)):
            for v in permutations(range(1, n + 1)):
                tab = O.quantum_product_fl(u, v)
                dual = O.quantum_product_fl(P.conjugate(u), P.conjugate(v))
                image = {
                    (P.conjugate(w), tuple(d[i] for i in rev)): c
                    for (w, d), c in tab.items()
                }
                checked += 1
                if image != dual:
                    failures += 1
    _report(
        6,
        "flag-transpose numeric n<=4",
        failures == 0,
        f"pairs={checked} failures={failures}",
        time.perf_counter() - start,
        60.0,
    )


def test_criterion_7_rectangle_table():
    start = time.perf_counter()
    rows = {
        0: ((0, 0, 0, 0, 0, 0, 0, 0), (4, 3, 2, 1, 9, 8, 7, 6, 5)),
        1: ((0, 0, 0, 1, 0, 0, 0, 0), (3, 2, 1, 4, 5, 9, 8, 7, 6)),
        2: ((0, 0, 1, 2, 1, 0, 0, 0), (2, 1, 4, 3, 6, 5, 9, 8, 7)),
        3: ((0, 1, 2, 3, 2, 1, 0, 0), (1, 4, 3, 2, 7, 6, 5, 9, 8)),
        4: ((1, 2, 3, 4, 3, 2, 1, 0), (4, 3, 2, 1, 8, 7, 6, 5, 9)),
    }
    ok = True
    for d, (deg, window) in rows.items():
        ok = ok and M.peaked_degree(4, d, 8) == deg
        ok = ok and P.w0_P_prime(4, 9, d) == window
    _report(
        7,
        "4x5 rectangle degree table",
        ok,
        "rows d=0..4",
        time.perf_counter() - start,
        1.0,
    )


def test_criterion_8_property_suites():
    reports = V.verify_props(emit=print)
    ok = True
    for rep in reports:
        line_ok = rep.ok and rep.seconds < 30.0
        ok = ok and line_ok
        print(f"  {rep.line()}")
    expected = {
        "props:bits (n<=12)",
        "props:rimhooks (n<=12)",
        "props:splits (n<=9)",
        "props:windows (n<=9)",
        "props:varphi (n<=7)",
        "props:aff-roundtrip (n<=7)",
        "props:multiplicities (n<=6)",
        "props:involutions (n<=6)",
        "props:lift (n<=12)",
    }
    ok = ok and {rep.name for rep in reports} == expected
    _report(
        8,
        "property suites",
        ok,
        f"suites={len(reports)} checked={sum(r.checked for r in reports)} "
        f"failures={sum(len(r.failures) for r in reports)}",
        sum(r.seconds for r in reports),
        9 * 30.0,
    )


def test_criterion_9_flag_oracle_self_checks():
    start = time.perf_counter()
    s4 = list(permutations(range(1, 5)))
    commute = grading = q0 = True
    for u in s4:
        for v in s4:
            tab = O.quantum_product_fl(u, v)
            commute = commute and tab == O.quantum_product_fl(v, u)
            for (w, d), c in tab.items():
                grading = grading and (
                    P.length(u) + P.length(v) == P.length(w) + 2 * sum(d)
                )
            classical = {w: c for (w, d), c in tab.items() if not any(d)}
            q0 = q0 and classical == O.classical_product_fl(u, v)

    # Fl_2 reproduces the 1 x 1 Grassmannian
    ctx = RectContext(1, 1)
    fl2_matches_gr12 = True
    for lam in S.partitions_in_rectangle(1, 1):
        for mu in S.partitions_in_rectangle(1, 1):
            gr = O.quantum_product_gr_bcff(lam, mu, ctx)
            fl = O.quantum_product_fl(
                P.grassmann_from_partition(lam, ctx),
                P.grassmann_from_partition(mu, ctx),
            )
            image = {
                (P.grassmann_from_partition(nu, ctx), (d,)): c
                for (nu, d), c in gr.items()
            }
            fl2_matches_gr12 = fl2_matches_gr12 and image == fl

    ok = commute and grading and q0 and fl2_matches_gr12
    _report(
        9,
        "flag-oracle self-checks",
        ok,
        f"commutativity={commute} grading={grading} q0={q0} "
        f"Fl2=Gr12={fl2_matches_gr12}",
        time.perf_counter() - start,
        60.0,
    )
