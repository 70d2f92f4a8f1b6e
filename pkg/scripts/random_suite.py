"""Timed verification of random essential arrangements.

    python3 scripts/random_suite.py --count 200 --seed 7 --dims 1 2 3
"""
import argparse
import random
import time
from dataclasses import dataclass, field

from toricarr import serialize_arrangement
from toricarr.randomgen import RandomConfig, random_arrangement, random_local_system
from toricarr.report import verify


@dataclass
class SuiteConfig:
    count: int = 100
    seed: int = 0
    with_local_systems: bool = True
    sampler: RandomConfig = field(default_factory=RandomConfig)


def run(cfg: SuiteConfig) -> int:
    rng = random.Random(cfg.seed)
    failures, worst = 0, 0.0
    start = time.perf_counter()
    for i in range(cfg.count):
        arr = random_arrangement(rng, cfg.sampler)
        ls = random_local_system(rng, arr) if cfg.with_local_systems else None
        t = time.perf_counter()
        rep = verify(arr, ls)
        worst = max(worst, time.perf_counter() - t)
        if not rep.passed:
            failures += 1
            print(f"FAIL #{i}\n{serialize_arrangement(arr)}{rep.summary()}")
    total = time.perf_counter() - start
    print(f"{cfg.count - failures}/{cfg.count} passed, total {total:.1f}s, slowest {worst:.2f}s")
    return 1 if failures else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dims", type=int, nargs="+", default=[1, 2])
    p.add_argument("--max-hypertori", type=int, default=5)
    p.add_argument("--max-entry", type=int, default=3)
    p.add_argument("--no-local-systems", action="store_true")
    a = p.parse_args()
    sampler = RandomConfig(dimensions=tuple(a.dims), max_hypertori=a.max_hypertori, max_entry=a.max_entry)
    return run(SuiteConfig(a.count, a.seed, not a.no_local_systems, sampler))


if __name__ == "__main__":
    raise SystemExit(main())
