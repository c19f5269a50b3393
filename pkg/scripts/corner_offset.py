"""Square-minus-disk loop integral against cutoff, with its closed-form limit
ln2/(2 pi) - G/pi^2 (G the Catalan constant)."""
import argparse

from nrlphi4.cutoffmodel import CORNER_LIMIT, loop_integral_I


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--z", type=float, default=1.0)
    args = ap.parse_args()
    print("kappa,offset,minus_limit")
    for e in range(1, 9):
        kappa = 10.0**e
        off = (loop_integral_I(args.z, kappa, "square") - loop_integral_I(args.z, kappa)).real
        print(f"1e{e},{off:.12f},{off - CORNER_LIMIT:.3e}")


if __name__ == "__main__":
    main()
