#!/usr/bin/env python3
"""Writes src/constants_table.inc: outward binary64 brackets of
B_{2k}/(2k)! for k = 1..32 and a few transcendental constants."""
import math
import sys
from fractions import Fraction

from mpmath import mp, mpf


def bernoulli_numbers(n):
    b = [Fraction(0)] * (n + 1)
    b[0] = Fraction(1)
    for m in range(1, n + 1):
        b[m] = -sum(math.comb(m + 1, k) * b[k] for k in range(m)) / (m + 1)
    return b


def bracket(q):
    x = float(q)
    lo = x if Fraction(x) <= q else math.nextafter(x, -math.inf)
    hi = x if Fraction(x) >= q else math.nextafter(x, math.inf)
    return lo, hi


def bracket_mp(v):
    x = float(v)
    lo = x if mpf(x) <= v else math.nextafter(x, -math.inf)
    hi = x if mpf(x) >= v else math.nextafter(x, math.inf)
    return lo, hi


def main(out):
    mp.dps = 60
    kmax = 32
    b = bernoulli_numbers(2 * kmax)
    lines = ["// Generated by tools/gen_constants.py. Do not edit.", ""]
    lines.append("// B_{2k}/(2k)! for k = 1..%d as [lo, hi]" % kmax)
    lines.append("static constexpr double kBernoulliScaled[%d][2] = {" % kmax)
    for k in range(1, kmax + 1):
        lo, hi = bracket(b[2 * k] / math.factorial(2 * k))
        lines.append("    {%s, %s}," % (lo.hex(), hi.hex()))
    lines.append("};")
    lines.append("")
    consts = {
        "kPi": mp.pi,
        "kHalfPi": mp.pi / 2,
        "kTwoPi": 2 * mp.pi,
        "kE": mp.e,
        "kLog2Pi": mp.log(2 * mp.pi),
    }
    for name, v in consts.items():
        lo, hi = bracket_mp(v)
        lines.append("static constexpr double %s[2] = {%s, %s};" % (name, lo.hex(), hi.hex()))
    with open(out, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/constants_table.inc")
