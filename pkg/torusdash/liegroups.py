"""
Group factors, group specs and their normalization.

A spec is a product of classical factors times a torus T^l0. Normalization
replaces Spin(n) by SO(n), resolves the two-valued #F rows through the
convention flags, folds torus factors into l0 and orders the factors SU first,
then SO(odd), then SO(even).
"""

import logging
import math
from dataclasses import dataclass

from . import lookups
from .errors import UnsupportedFactorError

LOGGER = logging.getLogger(__name__)

KINDS = ("SU", "SO", "Spin", "Sp", "T")

# Convention flags: which factor a two-valued #F choice really describes
_CONVENTION = {
    ("SU", 2, 1): ("SO", 3),
    ("SO", 3, 2): ("SU", 2),
    ("SU", 4, 3): ("SO", 6),
    ("SO", 6, 4): ("SU", 4),
    ("Sp", 1, 1): ("SO", 3),
    ("Sp", 1, 2): ("SU", 2),
    ("Sp", 2, 2): ("SO", 5),
}


@dataclass(frozen=True)
class GroupFactor:
    """One factor of a group spec: SU(n), SO(n), Spin(n), Sp(n) or a torus T^n.

    `f_size` is the convention flag selecting #F where two values are possible.
    """

    kind: str
    n: int
    f_size: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnsupportedFactorError(f"unsupported factor kind {self.kind!r}")
        if self.kind == "T":
            if self.n < 0:
                raise UnsupportedFactorError(f"torus rank must be non-negative, got {self.n}")
            if self.f_size is not None:
                raise UnsupportedFactorError("torus factors take no #F flag")
            return
        lookups.row_label(self.kind, self.n)
        if self.f_size is not None and self.f_size not in possible_F_sizes(self):
            allowed = sorted(possible_F_sizes(self))
            raise UnsupportedFactorError(
                f"{self.kind}({self.n}) admits #F in {allowed}, got {self.f_size}"
            )

    @property
    def rank(self):
        if self.kind == "T":
            return self.n
        if self.kind == "SU":
            return self.n - 1
        if self.kind == "Sp":
            return self.n
        return self.n // 2

    @property
    def l(self):
        return self.rank

    @property
    def is_torus(self):
        return self.kind == "T"

    @property
    def is_so_odd(self):
        return self.kind in ("SO", "Spin") and self.n % 2 == 1

    @property
    def is_so_even(self):
        return self.kind in ("SO", "Spin") and self.n % 2 == 0

    @property
    def label(self):
        if self.kind == "T":
            return f"T^{self.n}"
        base = f"{self.kind}({self.n})"
        return base if self.f_size is None else f"{base}#{self.f_size}"

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class GroupSpec:
    """Ordered factors plus the torus rank l0."""

    factors: tuple = ()
    l0: int = 0

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.l0 < 0:
            raise UnsupportedFactorError(f"l0 must be non-negative, got {self.l0}")

    @property
    def su_factors(self):
        return tuple(f for f in self.factors if f.kind == "SU")

    @property
    def so_odd_factors(self):
        return tuple(f for f in self.factors if f.is_so_odd)

    @property
    def so_even_factors(self):
        return tuple(f for f in self.factors if f.is_so_even)

    @property
    def label(self):
        return spec_label(self)

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class PsiHom:
    """psi as one integer weight vector of length l0 per SU factor.

    The vector w_i encodes S(U(l_i) x U(1)) -> T^l0, g -> (g_{l+1}^{w_i1}, ...).
    """

    weights: tuple = ()

    def __post_init__(self):
        weights = tuple(tuple(int(x) for x in w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if len({len(w) for w in weights}) > 1:
            raise ValueError("all psi weight vectors must have length l0")

    @property
    def is_trivial(self):
        return all(x == 0 for w in self.weights for x in w)

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]


def possible_F_sizes(factor):
    """Possible sizes of the characteristic-submanifold orbit of one elementary factor."""
    if factor.kind == "T":
        raise UnsupportedFactorError("torus factors have no #F row")
    row, l = lookups.row_label(factor.kind, factor.n)
    return frozenset(lookups.F_SIZE_ROWS[row](l))


def min_rep_dims(factor):
    """(d_R, d_C) lower bounds for non-trivial irreducible representations."""
    if factor.kind == "T":
        raise UnsupportedFactorError("torus factors have no representation bound row")
    row, l = lookups.row_label(factor.kind, factor.n)
    return lookups.REP_DIM_ROWS[row](l)


def max_rank_subgroup(factor):
    """(name, codim) of the connected maximal rank subgroup of maximal dimension."""
    if factor.kind == "T":
        raise UnsupportedFactorError("torus factors have no maximal rank subgroup row")
    row, l = lookups.row_label(factor.kind, factor.n)
    if row not in lookups.MAX_RANK_ROWS:
        raise UnsupportedFactorError(
            f"{factor.kind}({factor.n}) is locally SU(2)xSU(2); its maximal rank subgroups "
            "are not unique up to conjugation"
        )
    return lookups.MAX_RANK_ROWS[row](l)


def default_f_size(factor):
    """#F selected when no convention flag is given (SU(2) -> 2, SO(3) -> 1, SU(4) -> 4, SO(6) -> 3)."""
    if factor.f_size is not None:
        return factor.f_size
    sizes = possible_F_sizes(factor)
    if len(sizes) == 1:
        return next(iter(sizes))
    if factor.kind == "SU" or (factor.kind == "Sp" and factor.n == 1):
        return max(sizes)
    return min(sizes)


def _factor_order(factor):
    if factor.kind == "SU":
        group = 0
    elif factor.is_so_odd:
        group = 1
    else:
        group = 2
    return group, factor.n


def normalize_spec(spec, reduce_so_even=False):
    """
    Bring a spec into normal form.

    Args:
        spec: GroupSpec as parsed
        reduce_so_even: Replace every SO(2l) by SU(l) and raise l0 by one

    Returns:
        Normalized GroupSpec

    Example:
        normalize_spec(GroupSpec((GroupFactor("Spin", 5),)))  # SO(5), l0=0
    """
    l0 = spec.l0
    factors = []
    for factor in spec.factors:
        if factor.kind == "T":
            l0 += factor.n
            continue
        if factor.kind == "Sp" and factor.n > 2:
            raise UnsupportedFactorError(
                f"{factor.label}: no elementary factor of a torus manifold action "
                "is isomorphic to Sp(l) with l > 2"
            )
        kind = "SO" if factor.kind == "Spin" else factor.kind
        f_size = default_f_size(factor)
        kind, n = _CONVENTION.get((kind, factor.n, f_size), (kind, factor.n))
        factors.append(GroupFactor(kind, n))

    if reduce_so_even:
        reduced = []
        for factor in factors:
            if factor.is_so_even:
                reduced.append(GroupFactor("SU", factor.n // 2))
                l0 += 1
            else:
                reduced.append(factor)
        factors = reduced

    factors.sort(key=_factor_order)
    normalized = GroupSpec(tuple(factors), l0)
    LOGGER.debug("normalized %s -> %s", spec_label(spec), spec_label(normalized))
    return normalized


def orbit_space_dim(spec):
    """l0 + #{SO(2l) factors}; torus factors still in the list count towards l0."""
    l0 = spec.l0 + sum(f.n for f in spec.factors if f.kind == "T")
    return l0 + sum(1 for f in spec.factors if f.is_so_even)


def total_rank(spec):
    return spec.l0 + sum(f.rank for f in spec.factors)


def psi_kernel_is_su(w):
    """True iff the weight vector is primitive, i.e. ker psi_i = SU(l_i)."""
    w = tuple(w)
    if not w:
        return False
    return math.gcd(*w) == 1


def psi_sign_choices(factor):
    """psi_i is only defined up to inversion when l_i = 1."""
    return (1, -1) if factor.rank == 1 else (1,)


def spec_label(spec):
    labels = [f.label for f in spec.factors]
    if spec.l0 or not labels:
        labels.append(f"T^{spec.l0}")
    return "x".join(labels)
