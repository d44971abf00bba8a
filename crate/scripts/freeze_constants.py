#!/usr/bin/env python3
"""Recompute the survey regression constants by brute force over Heron's formula.

Usage: python3 scripts/freeze_constants.py [x ...]
"""
import math
import sys


def heron_sides(a, b):
    out = []
    for c in range(abs(a - b) + 1, a + b):
        if (a + b + c) % 2:
            continue
        s = (a + b + c) // 2
        prod = s * (s - a) * (s - b) * (s - c)
        if prod > 0 and math.isqrt(prod) ** 2 == prod:
            out.append(c)
    return out


def main():
    xs = [int(v) for v in sys.argv[1:]] or [4, 10, 25, 50, 100]
    top = max(xs)
    h = {(a, b): len(heron_sides(a, b)) for a in range(1, top + 1) for b in range(a, top + 1)}
    for x in xs:
        total = zeros = 0
        for a in range(1, x + 1):
            for b in range(1, x + 1):
                n = h[(min(a, b), max(a, b))]
                total += n
                zeros += n == 0
        print(f"x={x} total={total} zero_cells={zeros} cells={x * x}")


if __name__ == "__main__":
    main()
