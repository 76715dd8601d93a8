#!/usr/bin/env python3
"""Regenerate the fixed point table by search and diff it against the shipped data.

Prints one aligned column per base, then a comparison section. Exits 0 when
every column matches the embedded expected list, 1 otherwise. As shipped,
base 6 is a known mismatch: the search finds 15141211110, which is genuinely
fixed but absent from the expected list.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from peadyn import enumerate_fixed_points, format_word, length_bound, parse_word, word_sort_key
from peadyn.golden import EXPECTED_FIXED_POINTS


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bases", default="2,3,4,5,6",
                        help="comma separated bases (default 2,3,4,5,6)")
    parser.add_argument("--margin", type=int, default=0,
                        help="extra search length on top of each base's bound")
    return parser.parse_args()


def main() -> int:
    args = parse_args()
    bases = [int(part) for part in args.bases.split(",")]

    columns = {}
    for base in bases:
        limit = length_bound(base).length_bound + args.margin
        found = enumerate_fixed_points(base, limit)
        columns[base] = [format_word(w) for w in sorted(found, key=word_sort_key)]

    widths = {base: max(len(f"base {base}"), max(map(len, words), default=0)) + 2
              for base, words in columns.items()}
    header = "".join(f"base {base}".ljust(widths[base]) for base in bases)
    print(header)
    print("".join(("-" * (widths[base] - 2)).ljust(widths[base]) for base in bases))
    height = max(len(words) for words in columns.values())
    for i in range(height):
        row = "".join(
            (columns[base][i] if i < len(columns[base]) else "").ljust(widths[base])
            for base in bases
        )
        print(row.rstrip())
    print()

    ok = True
    for base in bases:
        expected = EXPECTED_FIXED_POINTS.get(base)
        if expected is None:
            print(f"base {base}: no expected data shipped, found {len(columns[base])}")
            continue
        found_set = set(columns[base])
        expected_set = {format_word(parse_word(t, base)) for t in expected}
        if found_set == expected_set:
            print(f"base {base}: matches the shipped list ({len(expected)} words)")
            continue
        ok = False
        print(f"base {base}: found {len(found_set)}, shipped list has {len(expected_set)}")
        for word in sorted(found_set - expected_set, key=lambda t: (len(t), t)):
            print(f"  not in shipped list: {word}")
        for word in sorted(expected_set - found_set, key=lambda t: (len(t), t)):
            print(f"  not found by search:  {word}")
    print(f"overall: {'MATCH' if ok else 'MISMATCH'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
