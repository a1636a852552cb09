#!/usr/bin/env python3
"""Walk one Grassmannian quantum LR index around the commuting pentagon and
print every intermediate index together with the oracle coefficients.

Default input is the 3 x 2 example with lambda=(2,2,1), mu=(1,1), nu=(2), d=1.
"""

import argparse

from qschubert import maps, oracle, shapes
from qschubert.maps import GrIndex
from qschubert.shapes import RectContext


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, default=3)
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--lambda", dest="lam", default="2,2,1")
    parser.add_argument("--mu", default="1,1")
    parser.add_argument("--nu", default="2")
    parser.add_argument("--d", type=int, default=1)
    args = parser.parse_args()

    ctx = RectContext(args.m, args.n - args.m)
    x = GrIndex(
        lam=shapes.parse_partition(args.lam),
        mu=shapes.parse_partition(args.mu),
        nu=shapes.parse_partition(args.nu),
        d=args.d,
        ctx=ctx,
    )
    print("start        ", maps.to_json(x))
    print("coefficient  ", oracle.quantum_lr_gr(x), "(rim-hook oracle)")
    print(
        "coefficient  ",
        oracle.quantum_product_gr_pieri(x.lam, x.mu, ctx).get((x.nu, x.d), 0),
        "(iterated Pieri)",
    )

    sd = maps.gamma_sd(x)
    print("strange dual ", maps.to_json(sd))
    pc = maps.psi_pc(sd)
    print("comparison   ", maps.to_json(pc))
    tt = maps.gamma_t(pc)
    print("transpose    ", maps.to_json(tt))

    aff = maps.phi_gr(x)
    print("affine       ", maps.to_json(aff))
    fl = maps.phi_fl(aff, ctx)
    print("affine->flag ", maps.to_json(fl))

    print("pentagon commutes:", tt == fl)
    coeff = oracle.quantum_product_fl(tt.u, tt.v).get((tt.w, tt.d), 0)
    print("flag-oracle coefficient at the common image:", coeff)


if __name__ == "__main__":
    main()
