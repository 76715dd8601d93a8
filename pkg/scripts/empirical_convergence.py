#!/usr/bin/env python3
"""Orbit statistics over random words: where do they land, and how fast.

Samples words uniformly per base, iterates each to its cycle, and prints
transient statistics plus a tally of the terminals hit. Deterministic for a
fixed seed.
"""

import argparse
import random
import statistics
import sys
from collections import Counter
from dataclasses import dataclass, replace
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from peadyn import canonical_cycle, format_word, length_bound, orbit


@dataclass(frozen=True)
class ExperimentConfig:
    seed: int = 20260818
    samples: int = 2000
    max_length: int = 300
    bases: tuple[int, ...] = (2, 3, 4, 5, 6)
    max_steps: int = 10000


def parse_args() -> ExperimentConfig:
    defaults = ExperimentConfig()
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument("--samples", type=int, default=defaults.samples,
                        help="orbits per base (default %(default)s)")
    parser.add_argument("--max-length", type=int, default=defaults.max_length,
                        help="start words are 1..this long (default %(default)s)")
    parser.add_argument("--bases", default=",".join(map(str, defaults.bases)),
                        help="comma separated bases (default %(default)s)")
    parser.add_argument("--max-steps", type=int, default=defaults.max_steps)
    args = parser.parse_args()
    return replace(
        defaults,
        seed=args.seed,
        samples=args.samples,
        max_length=args.max_length,
        bases=tuple(int(part) for part in args.bases.split(",")),
        max_steps=args.max_steps,
    )


def run_base(cfg: ExperimentConfig, base: int, rng: random.Random) -> None:
    transients = []
    periods = Counter()
    terminals = Counter()
    cap = length_bound(base).length_bound
    oversize = 0
    for _ in range(cfg.samples):
        word = tuple(rng.randrange(base) for _ in range(rng.randint(1, cfg.max_length)))
        result = orbit(word, base, max_steps=cfg.max_steps)
        transients.append(result.transient)
        periods[result.period] += 1
        # orbits enter a cycle at different points; tally one rotation only
        canon = canonical_cycle(result.cycle, base)
        terminals[" ".join(format_word(w) for w in canon.words)] += 1
        oversize += sum(1 for w in result.cycle if len(w) > cap)
    mean = statistics.fmean(transients)
    period_text = ", ".join(f"period {p}: {n}" for p, n in sorted(periods.items()))
    print(f"base {base}: {cfg.samples} orbits, transient mean {mean:.2f} "
          f"median {statistics.median(transients):.0f} max {max(transients)}")
    print(f"  {period_text}; cycle words over the length bound: {oversize}")
    for terminal, hits in terminals.most_common():
        label = "fixed point" if " " not in terminal else "cycle"
        print(f"  {hits:>6}  {label:<11} {terminal}")


def main() -> int:
    cfg = parse_args()
    rng = random.Random(cfg.seed)
    print(f"seed {cfg.seed}, {cfg.samples} samples per base, lengths 1..{cfg.max_length}")
    for base in cfg.bases:
        run_base(cfg, base, rng)
    return 0


if __name__ == "__main__":
    sys.exit(main())
