"""Column layout of the per-pair rows produced by the kernels."""

COLUMNS = (
    "m",          # o(a)
    "n",          # o(b)
    "oab",        # o(ab)
    "mo",         # mutual order o(a, b)
    "e",          # |<a> ∩ <b>|
    "v",          # b^(n/e) = g^v with g = a^(m/e)
    "r",          # o([b, a])
    "ce_ab",      # least k >= 1 with a^k commuting with b
    "ce_ba",      # least k >= 1 with b^k commuting with a
    "cen_ab",     # |<a> ∩ C(b)|
    "cen_ba",     # |<b> ∩ C(a)|
    "ox",         # o(a^r b^r)
    "oxy",        # o(a^r b^r c^binom(r, 2)), c = [b, a]
    "witness",    # r, o(a,b) even and a^(o/2) b^(o/2) == c^(r/2)
    "ocomm",      # o([a, b])
    "commutes",   # ab == ba
)
NCOLS = len(COLUMNS)
COL = {name: i for i, name in enumerate(COLUMNS)}
