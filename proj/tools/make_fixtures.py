#!/usr/bin/env python3
"""Writes the b-file fixtures used by the crosscheck tests.

Without arguments every fixture is reconstructed offline: a few entries from
independent closed forms, the rest from a plain set-based generator written
separately from the C++ engine. With --download the real b-files are fetched
from oeis.org instead.
"""

import argparse
import math
import pathlib
import sys
import urllib.request

TERMS = 1000

# (id, j, x, y, z)
COMPENDIUM = [
    ("A000201", 1, 1, 2, 1), ("A003156", 1, 1, 3, 1), ("A004956", 0, 2, 2, 1),
    ("A007066", 0, 1, 2, 3), ("A026352", 1, 1, 2, 3), ("A026356", 0, 2, 2, 3),
    ("A045412", 0, 3, 1, 3), ("A064437", 0, 1, 3, 2), ("A080578", 0, 1, 1, 3),
    ("A080579", 0, 1, 1, 4), ("A080580", 0, 1, 2, 4), ("A080590", 0, 1, 3, 4),
    ("A080600", 0, 4, 4, 3), ("A080652", 0, 2, 3, 2), ("A080667", 0, 3, 4, 3),
    ("A080903", 0, 1, 4, 2), ("A081834", 0, 1, 4, 3), ("A081835", 0, 1, 5, 4),
    ("A081839", 0, 0, 4, 5), ("A081840", 0, 0, 3, 4), ("A081841", 0, 0, 3, 2),
    ("A081842", 0, 0, 4, 3), ("A081843", 0, 0, 5, 4), ("A086377", 1, 1, 3, 2),
    ("A086398", 1, 1, 4, 2), ("A284753", 0, 2, 4, 2),
]


def floor_phi(n):
    return (n + math.isqrt(5 * n * n)) // 2


def ceil_phi(n):
    return 0 if n == 0 else floor_phi(n) + 1


CLOSED_FORMS = {
    "A000201": ("floor(n*phi)", floor_phi),
    "A004956": ("ceil(n*phi)", ceil_phi),
    "A007066": ("1 + ceil((n-1)*phi^2)", lambda n: 1 + (n - 1) + ceil_phi(n - 1)),
}


def hiccup(j, x, y, z, count):
    values = [x]
    seen = {x}
    for k in range(2, count + 1):
        step = y if (k - j) in seen else z
        values.append(values[-1] + step)
        seen.add(values[-1])
    return values


def write(path, header, values):
    lines = [f"# {h}" for h in header]
    lines += [f"{i} {v}" for i, v in enumerate(values, start=1)]
    path.write_text("\n".join(lines) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=pathlib.Path,
                        default=pathlib.Path(__file__).resolve().parent.parent / "fixtures")
    parser.add_argument("--terms", type=int, default=TERMS)
    parser.add_argument("--download", action="store_true", help="fetch b-files from oeis.org")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for oeis_id, j, x, y, z in COMPENDIUM:
        path = args.out / f"{oeis_id}.txt"
        if args.download:
            url = f"https://oeis.org/{oeis_id}/b{oeis_id[1:]}.txt"
            with urllib.request.urlopen(url, timeout=30) as response:
                path.write_bytes(response.read())
            print(f"{oeis_id}: downloaded {url}", file=sys.stderr)
            continue
        if oeis_id in CLOSED_FORMS:
            formula, f = CLOSED_FORMS[oeis_id]
            values = [f(n) for n in range(1, args.terms + 1)]
            source = f"closed form {formula}"
        else:
            values = hiccup(j, x, y, z, args.terms)
            source = f"set-based generator for (j,x,y,z) = ({j},{x},{y},{z})"
        write(path, [f"{oeis_id}, offline reconstruction", f"source: {source}",
                     "replace with the published b-file via --download when online"], values)
        print(f"{oeis_id}: {len(values)} terms from {source}", file=sys.stderr)


if __name__ == "__main__":
    main()
