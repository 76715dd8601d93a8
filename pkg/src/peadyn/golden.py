"""Verified fixed point inventory for bases 2 through 6.

This embedded copy is authoritative; data/fixed_points.txt mirrors it for
human eyes. Every entry must satisfy step(w) == w under its base, and the
verify-table command checks exactly that before comparing against a fresh
enumeration.
"""

EXPECTED_FIXED_POINTS: dict[int, tuple[str, ...]] = {
    2: (
        "111",
        "1001110",
    ),
    3: (
        "22",
        "11110",
        "12111",
        "101100",
        "1022120",
        "2211110",
        "22101100",
    ),
    4: (
        "22",
        "1211110",
        "1311110",
        "1312111",
        "23322110",
        "33123110",
        "132211110",
    ),
    5: (
        "22",
        "14233221",
        "14331231",
        "14333110",
        "23322110",
        "33123110",
        "131211110",
        "141211110",
        "141311110",
        "141312111",
        "1433223110",
        "14132211110",
    ),
    6: (
        "22",
        "14233221",
        "14331231",
        "14333110",
        "15143331",
        "15233221",
        "15331231",
        "15333110",
        "23322110",
        "33123110",
        "1433223110",
        "1514332231",
        "1533223110",
        "14131211110",
        "15131211110",
        "15141311110",
        "15141312111",
        "1514132211110",
    ),
}
