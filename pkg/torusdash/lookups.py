"""
Static Lie group fact tables.

Each table is a dict keyed by table row. A row either covers one exceptional
low-rank isomorphism class (e.g. SU(4)=Spin(6)) or a whole series in the rank l.
The display dicts are exposed as pandas Series so they can be mapped over a
column of row labels.
"""

import pandas as pd

from .errors import UnsupportedFactorError


ROW_SU2 = "SU(2)=Spin(3)=Sp(1)"
ROW_SPIN4 = "Spin(4)"
ROW_SPIN5 = "Spin(5)=Sp(2)"
ROW_SU4 = "SU(4)=Spin(6)"
ROW_SU = "SU(l+1), l!=1,3"
ROW_SPIN_ODD = "Spin(2l+1), l>2"
ROW_SPIN_EVEN = "Spin(2l), l>3"
ROW_SP = "Sp(l), l>2"

ROW_ORDER = [
    ROW_SU2, ROW_SPIN4, ROW_SPIN5, ROW_SU4,
    ROW_SU, ROW_SPIN_ODD, ROW_SPIN_EVEN, ROW_SP,
]

# Possible sizes of the orbit of characteristic submanifolds of one elementary factor
F_SIZE_ROWS = {
    ROW_SU2: lambda l: {1, 2},
    ROW_SPIN4: lambda l: {2},
    ROW_SPIN5: lambda l: {2},
    ROW_SU4: lambda l: {3, 4},
    ROW_SU: lambda l: {l + 1},
    ROW_SPIN_ODD: lambda l: {l},
    ROW_SPIN_EVEN: lambda l: {l},
    ROW_SP: lambda l: {l},
}

# Lower bounds (d_R, d_C) for non-trivial irreducible real / complex representations
REP_DIM_ROWS = {
    ROW_SU2: lambda l: (3, 2),
    ROW_SPIN4: lambda l: (3, 2),
    ROW_SPIN5: lambda l: (5, 4),
    ROW_SU4: lambda l: (6, 4),
    ROW_SU: lambda l: (2 * l + 2, l + 1),
    ROW_SPIN_ODD: lambda l: (2 * l + 1, 2 * l + 1),
    ROW_SPIN_EVEN: lambda l: (2 * l, 2 * l),
    ROW_SP: lambda l: (2 * l + 1, 2 * l),
}

# Connected maximal rank subgroup of maximal dimension and its codimension.
# Spin(4) has no row: it is handled by its own case analysis.
MAX_RANK_ROWS = {
    ROW_SU2: lambda l: ("S(U(1)xU(1))", 2),
    ROW_SPIN5: lambda l: ("Spin(4)", 4),
    ROW_SU4: lambda l: ("S(U(3)xU(1))", 6),
    ROW_SU: lambda l: (f"S(U({l})xU(1))", 2 * l),
    ROW_SPIN_ODD: lambda l: (f"Spin({2 * l})", 2 * l),
    ROW_SPIN_EVEN: lambda l: (f"Spin({2 * l - 2})xSpin(2)", 4 * l - 4),
    ROW_SP: lambda l: (f"Sp({l - 1})xSp(1)", 4 * l - 4),
}

F_SIZE_DISPLAY = {
    ROW_SU2: "1,2",
    ROW_SPIN4: "2",
    ROW_SPIN5: "2",
    ROW_SU4: "3,4",
    ROW_SU: "l+1",
    ROW_SPIN_ODD: "l",
    ROW_SPIN_EVEN: "l",
    ROW_SP: "l",
}

D_REAL_DISPLAY = {
    ROW_SU2: "3",
    ROW_SPIN4: "3",
    ROW_SPIN5: "5",
    ROW_SU4: "6",
    ROW_SU: "2l+2",
    ROW_SPIN_ODD: "2l+1",
    ROW_SPIN_EVEN: "2l",
    ROW_SP: "2l+1",
}

D_COMPLEX_DISPLAY = {
    ROW_SU2: "2",
    ROW_SPIN4: "2",
    ROW_SPIN5: "4",
    ROW_SU4: "4",
    ROW_SU: "l+1",
    ROW_SPIN_ODD: "2l+1",
    ROW_SPIN_EVEN: "2l",
    ROW_SP: "2l",
}

SUBGROUP_DISPLAY = {
    ROW_SU2: "S(U(1)xU(1))",
    ROW_SPIN5: "Spin(4)",
    ROW_SU4: "S(U(3)xU(1))",
    ROW_SU: "S(U(l)xU(1))",
    ROW_SPIN_ODD: "Spin(2l)",
    ROW_SPIN_EVEN: "Spin(2l-2)xSpin(2)",
    ROW_SP: "Sp(l-1)xSp(1)",
}

CODIM_DISPLAY = {
    ROW_SU2: "2",
    ROW_SPIN5: "4",
    ROW_SU4: "6",
    ROW_SU: "2l",
    ROW_SPIN_ODD: "2l",
    ROW_SPIN_EVEN: "4l-4",
    ROW_SP: "4l-4",
}

F_SIZE_SERIES = pd.Series(F_SIZE_DISPLAY, dtype="string")
D_REAL_SERIES = pd.Series(D_REAL_DISPLAY, dtype="string")
D_COMPLEX_SERIES = pd.Series(D_COMPLEX_DISPLAY, dtype="string")
SUBGROUP_SERIES = pd.Series(SUBGROUP_DISPLAY, dtype="string")
CODIM_SERIES = pd.Series(CODIM_DISPLAY, dtype="string")


def row_label(kind, n):
    """
    Locate the table row of a classical factor.

    Args:
        kind: One of "SU", "SO", "Spin", "Sp" (SO(n) is read on its Spin(n) row)
        n: The integer in the factor name, e.g. 5 for Spin(5)

    Returns:
        (row label, rank l)

    Example:
        row_label("Spin", 9)  # ("Spin(2l+1), l>2", 4)
    """
    if kind == "SU":
        if n < 2:
            raise UnsupportedFactorError(f"SU({n}) is not a non-abelian factor")
        if n == 2:
            return ROW_SU2, 1
        if n == 4:
            return ROW_SU4, 3
        return ROW_SU, n - 1
    if kind in ("SO", "Spin"):
        if n < 3:
            raise UnsupportedFactorError(f"{kind}({n}) is not a non-abelian factor")
        if n == 3:
            return ROW_SU2, 1
        if n == 4:
            return ROW_SPIN4, 2
        if n == 5:
            return ROW_SPIN5, 2
        if n == 6:
            return ROW_SU4, 3
        if n % 2 == 1:
            return ROW_SPIN_ODD, (n - 1) // 2
        return ROW_SPIN_EVEN, n // 2
    if kind == "Sp":
        if n < 1:
            raise UnsupportedFactorError(f"Sp({n}) is not a non-abelian factor")
        if n == 1:
            return ROW_SU2, 1
        if n == 2:
            return ROW_SPIN5, 2
        return ROW_SP, n
    raise UnsupportedFactorError(f"no table row for factor kind {kind!r}")


def _row_frame(rows, columns):
    labels = pd.Series(rows, dtype="string")
    data = {"G": labels}
    for name, series in columns.items():
        data[name] = labels.map(series)
    return pd.DataFrame(data)


def f_size_table():
    """Rows of the #F table."""
    return _row_frame(ROW_ORDER, {"#F": F_SIZE_SERIES})


def rep_dim_table():
    """Rows of the representation-dimension bound table."""
    return _row_frame(ROW_ORDER, {"d_R": D_REAL_SERIES, "d_C": D_COMPLEX_SERIES})


def max_rank_table():
    """Rows of the maximal-rank subgroup table (Spin(4) excluded)."""
    rows = [row for row in ROW_ORDER if row in MAX_RANK_ROWS]
    return _row_frame(rows, {"H": SUBGROUP_SERIES, "codim": CODIM_SERIES})
