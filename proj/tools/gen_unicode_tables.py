#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from the unicodedata module.

Emits three tables over the Basic Multilingual Plane:
  - punctuation ranges (general category P*)
  - whitespace ranges (category Z* plus ASCII control whitespace)
  - simple lowercase mappings (codepoints whose str.lower() is a single
    different codepoint)
"""

import sys
import unicodedata


def ranges(pred, limit=0x10000):
    out = []
    start = None
    for cp in range(limit):
        if pred(cp):
            if start is None:
                start = cp
        elif start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, limit - 1))
    return out


def is_punct(cp):
    return unicodedata.category(chr(cp)).startswith("P")


def is_space(cp):
    if cp in (0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x20):
        return True
    return unicodedata.category(chr(cp)).startswith("Z")


def lower_pairs(limit=0x10000):
    out = []
    for cp in range(limit):
        low = chr(cp).lower()
        if len(low) == 1 and ord(low) != cp and ord(low) < limit:
            out.append((cp, ord(low)))
    return out


def fmt_ranges(name, rs):
    lines = [f"inline constexpr CodepointRange {name}[] = {{"]
    row = []
    for a, b in rs:
        row.append(f"{{0x{a:04X}, 0x{b:04X}}}")
        if len(row) == 6:
            lines.append("    " + ", ".join(row) + ",")
            row = []
    if row:
        lines.append("    " + ", ".join(row) + ",")
    lines.append("};")
    return "\n".join(lines)


def fmt_pairs(name, ps):
    lines = [f"inline constexpr CodepointPair {name}[] = {{"]
    row = []
    for a, b in ps:
        row.append(f"{{0x{a:04X}, 0x{b:04X}}}")
        if len(row) == 5:
            lines.append("    " + ", ".join(row) + ",")
            row = []
    if row:
        lines.append("    " + ", ".join(row) + ",")
    lines.append("};")
    return "\n".join(lines)


def main():
    punct = ranges(is_punct)
    space = ranges(is_space)
    lowers = lower_pairs()
    print(f"// Generated by tools/gen_unicode_tables.py (unicodedata "
          f"{unicodedata.unidata_version}). Do not edit by hand.")
    print("#pragma once")
    print("#include <cstdint>")
    print()
    print("namespace kgprobe::detail {")
    print()
    print("struct CodepointRange { char32_t first; char32_t last; };")
    print("struct CodepointPair { char32_t from; char32_t to; };")
    print()
    print(fmt_ranges("kPunctRanges", punct))
    print()
    print(fmt_ranges("kSpaceRanges", space))
    print()
    print(fmt_pairs("kLowerPairs", lowers))
    print()
    print("}  // namespace kgprobe::detail")


if __name__ == "__main__":
    sys.exit(main())
