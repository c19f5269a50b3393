"""Decay of the case-i amplitude with the cutoff.

Prints |T| ln(kappa)/pi at fixed k, g0 next to its closed form
1/|1 + pi/(g0 L) + i pi/(2 L)|, L = ln kappa, showing how slowly the
leading pi/ln(kappa) behaviour is approached.
"""
import argparse
import math

from nrlphi4.cutoffmodel import t_amplitude_bare


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=float, default=1.0)
    ap.add_argument("--g0", type=float, default=1.0)
    ap.add_argument("--exponents", type=int, nargs="+", default=[2, 4, 8, 16, 32, 64, 70, 128, 300])
    args = ap.parse_args()
    print("log10_kappa,absT_lnk_over_pi,closed_form,needed_for_2pct")
    for e in args.exponents:
        kappa = 10.0**e
        L = math.log(kappa)
        val = abs(complex(t_amplitude_bare(args.k, args.g0, kappa))) * L / math.pi
        closed = 1 / abs(1 + math.pi / (args.g0 * L) + 0.5j * math.pi / L)
        print(f"{e},{val:.10f},{closed:.10f},{abs(val - 1) <= 0.02}")


if __name__ == "__main__":
    main()
