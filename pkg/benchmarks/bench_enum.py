"""Compare the compiled and pure-Python enumeration kernels on Leech shells.

    python3 benchmarks/bench_enum.py [--repeat 3] [--skip-python]
"""
from __future__ import annotations

import argparse
import time

from leechgdh.enumeration import KERNELS, Mode, lattice_points
from leechgdh.exactlat import d12plus_scaled, leech_lattice

CASES = [
    ("K norm 4", d12plus_scaled, 4, 264),
    ("Leech norm 4", leech_lattice, 4, 196560),
]


def run(kernel: str, lattice, radius: int, repeat: int) -> tuple[float, int]:
    best, count = float("inf"), -1
    for _ in range(repeat):
        t = time.perf_counter()
        pts = lattice_points(lattice, (0,) * lattice.ambient, radius, Mode.EXACT_SHELL, kernel=kernel)
        best = min(best, time.perf_counter() - t)
        count = len(pts)
    return best, count


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-python", action="store_true", help="the Python kernel takes ~30 s on the Leech shell")
    args = ap.parse_args()
    kernels = [k for k in ("compiled", "python") if k in KERNELS and not (args.skip_python and k == "python")]
    print(f"{'case':<14}{'kernel':<10}{'count':>8}{'seconds':>10}")
    for name, make, radius, expected in CASES:
        lat = make()
        lattice_points(lat, (0,) * lat.ambient, 0)  # warm the reduction cache outside the timings
        times = {}
        for k in kernels:
            reps = 1 if (k == "python" and expected > 1000) else args.repeat
            secs, count = run(k, lat, radius, reps)
            assert count == expected, (name, k, count)
            times[k] = secs
            print(f"{name:<14}{k:<10}{count:>8}{secs:>10.3f}")
        if len(times) == 2:
            print(f"{'':<14}speedup {times['python'] / times['compiled']:.1f}x")


if __name__ == "__main__":
    main()
