"""Convergence table for the triple-Legendre sum under the three
summation modes.

The raw partial sums never settle; the (C,1) average walks into the
closed form 2/pi / sqrt(sin^2 eta sin^2 theta - (cos eta cos theta -
cos gamma)^2), and the double average smooths the residual wobble.
"""
from beamkit.wavepacket import (ConeAngles, triple_legendre_sum,
                                triple_sum_closed_form)

ANGLES = ConeAngles(cos_theta=0.2, cos_eta=-0.3, cos_gamma=0.4)
N_MAX_LADDER = [100, 300, 1000, 3000, 10000]


def main():
    ref = triple_sum_closed_form(ANGLES)
    print(f"closed form: {ref:.12f}")
    print(f"{'n_max':>6s} {'raw err':>12s} {'cesaro err':>12s} "
          f"{'double err':>12s}")
    for n_max in N_MAX_LADDER:
        row = [n_max]
        for mode in ("raw", "cesaro", "double_average"):
            res = triple_legendre_sum(ANGLES, n_max, mode=mode)
            row.append(abs(res.value.real - ref))
        print(f"{row[0]:6d} {row[1]:12.3e} {row[2]:12.3e} {row[3]:12.3e}")


if __name__ == "__main__":
    main()
