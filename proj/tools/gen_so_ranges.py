#!/usr/bin/env python3
"""Generate the bundled `Symbol, Other` (So) range table from UnicodeData.txt.

Usage: gen_so_ranges.py UnicodeData.txt [VERSION] > data/so_ranges.txt

Handles the `<..., First>` / `<..., Last>` range convention of the
character database. Output is one inclusive interval per line in
`U+XXXX..U+YYYY` notation, sorted and coalesced.
"""
import sys


def read_categories(path):
    first = None
    with open(path, encoding="utf-8") as f:
        for line in f:
            fields = line.rstrip("\n").split(";")
            if len(fields) < 3:
                continue
            cp = int(fields[0], 16)
            name, cat = fields[1], fields[2]
            if name.endswith(", First>"):
                first = cp
                continue
            if name.endswith(", Last>") and first is not None:
                for c in range(first, cp + 1):
                    yield c, cat
                first = None
                continue
            yield cp, cat


def main():
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    version = sys.argv[2] if len(sys.argv) > 2 else "unknown"
    codepoints = sorted(cp for cp, cat in read_categories(sys.argv[1]) if cat == "So")
    ranges = []
    for cp in codepoints:
        if ranges and ranges[-1][1] + 1 == cp:
            ranges[-1][1] = cp
        else:
            ranges.append([cp, cp])
    print(f"# Unicode {version} general category So (Symbol, Other)")
    print(f"# {len(codepoints)} codepoints in {len(ranges)} ranges")
    print("# generated by tools/gen_so_ranges.py; do not edit")
    for lo, hi in ranges:
        print(f"U+{lo:04X}..U+{hi:04X}")


if __name__ == "__main__":
    main()
