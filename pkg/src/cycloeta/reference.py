"""Frozen cross-check data for the expansion of eta(7*tau)^7/eta(tau).

TABULATED_C50 reproduces a previously published degree-50 coefficient table
for this quotient verbatim.  Its n = 41 entry reads 21; both independent
pipelines in this package give 210 for that coefficient, and the entry is a
known misprint (a dropped trailing digit).  The table is kept as printed so
the disagreement stays visible; `tabulation_discrepancies` reports exactly
where a computed table departs from it.
"""

TABULATED_C50 = {
    2: 1, 3: 1, 4: 2, 5: 3, 6: 5, 7: 7, 8: 11, 9: 8, 10: 15,
    11: 16, 12: 21, 13: 21, 14: 28, 15: 24, 16: 44, 17: 36, 18: 49,
    19: 45, 20: 63, 21: 49, 22: 74, 23: 64, 24: 85, 25: 72, 26: 105,
    27: 82, 28: 133, 29: 112, 30: 120, 31: 120, 32: 165, 33: 122,
    34: 180, 35: 147, 36: 186, 37: 176, 38: 225, 39: 168, 40: 255,
    41: 21, 42: 245, 43: 224, 44: 324, 45: 219, 46: 338, 47: 276,
    48: 341, 49: 294, 50: 385,
}

# Where the tabulation is known to be wrong, the computed value goes here.
KNOWN_MISPRINTS = {41: 210}


def tabulation_discrepancies(computed):
    """Compare computed coefficients against the frozen table.

    `computed` maps n -> coefficient and must cover 2..50.  Returns
    {n: {"tabulated": t, "computed": c}} for every mismatch.
    """
    out = {}
    for n, t in TABULATED_C50.items():
        c = computed.get(n)
        if c is None:
            raise ValueError(f"computed table does not cover n={n}")
        if c != t:
            out[n] = {"tabulated": t, "computed": c}
    return out
