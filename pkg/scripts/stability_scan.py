"""E_n/n for few bosons on a ring at several on-site couplings."""
import argparse

from nrlphi4.fewbody import LatticeGeometry, stability_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--L", type=int, default=8)
    ap.add_argument("--dim", type=int, default=1, choices=(1, 2))
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--U", type=float, nargs="+", default=[-4.0, -2.0, -1.0, 0.0, 2.0, 8.0])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    geom = LatticeGeometry(args.dim, args.L, True)
    print("U,n,E,E_per_n,verdict")
    for U in args.U:
        scan = stability_scan(range(1, args.n_max + 1), geom, 1.0, U, seed=args.seed)
        for n, e, epn in scan.rows:
            print(f"{U},{n},{e:.12f},{epn:.12f},{scan.verdict}")


if __name__ == "__main__":
    main()
