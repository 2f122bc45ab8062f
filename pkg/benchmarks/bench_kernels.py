"""Time the hot kernels under the numba and the numpy backend.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Each case runs once per backend before timing (this also triggers the numba
compilation), then reports the best of ``--repeat`` runs and checks that both
backends agree.
"""

import argparse
import json
import platform
import time

import numpy as np

from qhumbert import HumbertParams, QContext, phi1, phi2, phi3, q_pochhammer_inf, rphis_plain
from qhumbert.kernels import backend
from qhumbert.qcore import q_pochhammer_inf_array
from qhumbert.qops import jackson_integral_01

CTX = QContext(0.7)
P = HumbertParams.from_exponents(CTX, 0.4, 1.3, 2.2)
P3 = HumbertParams.phi3(CTX, 0.4, 1.7)
GRID = np.linspace(-0.6, 0.6, 2001) * (1 + 0.1j)


def _phi_grid():
    # many double-series evaluations, as the identity audit does
    return sum(phi1(P, x, 0.3).value for x in np.linspace(-0.5, 0.5, 50))


def _integral():
    f = lambda t: t ** 0.4 * q_pochhammer_inf_array(CTX, 0.7 * np.asarray(t)) / q_pochhammer_inf_array(
        CTX, 0.2 * np.asarray(t))
    return jackson_integral_01(CTX, f).value


CASES = {
    "qpinf (scalar, 1000 calls)": lambda: sum(q_pochhammer_inf(CTX, 0.3 + 0.001 * k).value for k in range(1000)),
    "qpinf_array (2001 points)": lambda: complex(np.sum(q_pochhammer_inf_array(CTX, GRID))),
    "rphis 2phi1 (200 calls)": lambda: sum(rphis_plain(CTX, [0.3, 0.5], [0.2], 0.9 * k / 200).value
                                           for k in range(200)),
    "phi1 near radius": lambda: phi1(P, 0.9, 0.05).value,
    "phi1 (50 points)": _phi_grid,
    "phi2": lambda: phi2(P, 0.5, 0.4).value,
    "phi3": lambda: phi3(P3, 0.5, 0.4).value,
    "jackson integral": _integral,
}


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", help="also write the timings here")
    args = ap.parse_args()

    rows = []
    print(f"{'case':<30} {'numba [ms]':>12} {'numpy [ms]':>12} {'speedup':>8}  agree")
    for name, fn in CASES.items():
        res = {}
        for be in ("numba", "numpy"):
            with backend(be):
                value = complex(fn())
                res[be] = (_best(fn, args.repeat), value)
        (tn, vn), (tp, vp) = res["numba"], res["numpy"]
        agree = abs(vn - vp) <= 1e-12 * max(1.0, abs(vp))
        rows.append({"case": name, "numba_s": tn, "numpy_s": tp, "speedup": tp / tn, "agree": agree})
        print(f"{name:<30} {1e3 * tn:12.3f} {1e3 * tp:12.3f} {tp / tn:8.1f}  {agree}")

    if args.json:
        meta = {"python": platform.python_version(), "numpy": np.__version__, "repeat": args.repeat}
        with open(args.json, "w") as fh:
            json.dump({"meta": meta, "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
