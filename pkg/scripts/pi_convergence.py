"""Error of the alternating series for pi against its first-omitted-term bound.

    python scripts/pi_convergence.py --max-exp 5
"""

import argparse
import time
from dataclasses import dataclass

from madhava.arith import PI_50, to_fixed
from madhava.samkalitam import madhava_pi, madhava_pi_fixed


@dataclass
class Config:
    max_exp: int = 5
    digits: int = 30
    exact: bool = True


def run(cfg: Config) -> list[dict]:
    rows = []
    for e in range(1, cfg.max_exp + 1):
        M = 10**e
        t0 = time.perf_counter()
        r = madhava_pi(M) if cfg.exact else madhava_pi_fixed(M, cfg.digits)
        elapsed = time.perf_counter() - t0
        err = abs(4 * r.partial_sum - PI_50)
        rows.append(
            {
                "M": M,
                "estimate": str(to_fixed(4 * r.partial_sum, 15)),
                "abs_error": float(err),
                "bound": float(4 * r.error_bound),
                "error_times_M": float(err * M),  # tends to 1
                "seconds": round(elapsed, 4),
            }
        )
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-exp", type=int, default=Config.max_exp)
    ap.add_argument("--digits", type=int, default=Config.digits)
    ap.add_argument("--fixed", action="store_true", help="fixed-point accumulation instead of exact")
    a = ap.parse_args()
    for row in run(Config(a.max_exp, a.digits, not a.fixed)):
        print("  ".join(f"{k}={v}" for k, v in row.items()))
