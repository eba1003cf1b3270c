"""How the finite-difference sine table drifts, seeded vs oracle-seeded.

The seeded table equals s1 sin(n eps)/sin(eps), so its error at n is
sin(n eps) (eps/sin eps - 1); the script prints that prediction alongside.
"""

import argparse
import math
from dataclasses import dataclass
from fractions import Fraction

from madhava.aryabhata import generate_sine_table, table_errors


@dataclass
class Config:
    step: Fraction = Fraction(1, 80)
    count: int = 40
    precision: int = 12


def run(cfg: Config):
    seeded = table_errors(generate_sine_table(cfg.step, cfg.count, cfg.precision))
    oracle = table_errors(generate_sine_table(cfg.step, cfg.count, cfg.precision, "oracle"))
    eps = float(cfg.step) * math.pi
    for n, (a, b) in enumerate(zip(seeded, oracle), start=1):
        predicted = math.sin(n * eps) * (eps / math.sin(eps) - 1)
        yield n, float(a), predicted, float(b)


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--step", type=Fraction, default=Config.step, help="multiple of pi")
    ap.add_argument("--count", type=int, default=Config.count)
    ap.add_argument("--precision", type=int, default=Config.precision)
    a = ap.parse_args()
    print(f"{'n':>3} {'seeded':>12} {'predicted':>12} {'oracle-seed':>12}")
    for n, s, p, o in run(Config(a.step, a.count, a.precision)):
        print(f"{n:>3} {s:12.4e} {p:12.4e} {o:12.4e}")
