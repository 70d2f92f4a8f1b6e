"""Print beta by every method, homology and f-vector for each corpus file."""
import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from toricarr import parse_arrangement
from toricarr.report import verify

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class ReportConfig:
    corpus: Path = ROOT / "corpus"


def run(cfg: ReportConfig) -> int:
    status = 0
    for path in sorted(cfg.corpus.glob("*.json")):
        arr = parse_arrangement(path.read_text())
        t = time.perf_counter()
        rep = verify(arr)
        dt = time.perf_counter() - t
        print(f"{path.stem:14s} n={arr.dimension} betas={rep.beta_by_method} "
              f"H={list(rep.homology_table.ranks)} f={rep.f_vector} "
              f"{'PASS' if rep.passed else 'FAIL'} {dt:.2f}s")
        status |= not rep.passed
    return status


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--corpus", type=Path, default=ReportConfig.corpus)
    raise SystemExit(run(ReportConfig(p.parse_args().corpus)))
