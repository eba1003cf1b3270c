"""N * (I_N(k) - 1/(k+1)) against 1/2 + k/(12N) for a grid of N and k."""

import argparse
from dataclasses import dataclass, field

from madhava.samkalitam import j_limit_deviation


@dataclass
class Config:
    Ns: list[int] = field(default_factory=lambda: [10, 100, 1000, 10000])
    ks: list[int] = field(default_factory=lambda: [1, 2, 5, 10, 20])


def run(cfg: Config):
    for k in cfg.ks:
        for N in cfg.Ns:
            scaled = N * j_limit_deviation(N, k)
            yield k, N, float(scaled), 0.5 + k / (12 * N)


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--N", type=int, nargs="+", default=None)
    ap.add_argument("--k", type=int, nargs="+", default=None)
    a = ap.parse_args()
    cfg = Config()
    if a.N:
        cfg.Ns = a.N
    if a.k:
        cfg.ks = a.k
    for k, N, scaled, approx in run(cfg):
        print(f"k={k:<3} N={N:<6} N*dev={scaled:.8f}  1/2+k/12N={approx:.8f}")
