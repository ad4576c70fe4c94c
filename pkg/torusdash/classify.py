"""
Enumeration driver: every equivalence class of admissible 5-tuples of a spec.

The candidate space is (catalog base) x (psi_i, A_i per SU factor) x (B_j per
SO(odd) factor) x (a matrix). Per-factor clauses are applied while the
candidates are built, the joint clauses by validate; the survivors are
deduplicated by canonical_key and sorted by (name, tuple text).
"""

import functools
import itertools
import logging

import pandas as pd
import sympy

from . import config, lookups
from .errors import CatalogRangeError, ConfigError, UnsupportedShapeError
from .fivetuples import (
    AdmissibleFiveTuple,
    CatalogBase,
    canonical_key,
    propagate_flags,
    realize,
    so_violations,
    su_violations,
    to_record,
    to_text,
    validate,
)
from .liegroups import PsiHom, normalize_spec
from .loaders import parse_spec
from .manifolds import ConnSumFamily, EvenSphere, Product, Z2Action, euler, render, rewrite

LOGGER = logging.getLogger(__name__)

TAG_ORDER = (Z2Action.TRIVIAL, Z2Action.ANTIPODAL, Z2Action.REFLECTION)

ELEMENTARY_SPECS = [
    "SU(2)", "SU(3)", "SO(3)", "SO(5)", "SO(4)",
    "SU(2)xSU(3)", "SU(2)xSU(2)xSU(2)",
]
CODIM_ONE_SPECS = [
    "T^1", "SU(2)xT^1", "SO(3)xT^1", "SU(2)xSU(2)xT^1", "SU(2)xSO(3)xT^1",
]
TWO_FACTOR_SPECS = [
    "SU(2)xSU(2)", "SU(2)xSO(3)", "SO(3)xSO(3)", "SU(2)xSO(4)", "SO(3)xSO(4)",
]
FOUR_DIM_SPECS = [
    "SU(3)", "SU(2)xSU(2)", "SU(2)xT^1", "SU(2)xSO(3)", "SO(3)xSO(3)", "SO(3)xT^1",
]

# Specs whose classification appears in the published tables
TABULATED_SPECS = frozenset(ELEMENTARY_SPECS + CODIM_ONE_SPECS + TWO_FACTOR_SPECS + FOUR_DIM_SPECS)

FAMILY_PARAMETER = sympy.Symbol("k", integer=True, nonnegative=True)


def base_catalog(l0, z2_slots, even_spheres=()):
    """
    Catalog bases with T^l0 and z2_slots Z2 tags.

    Args:
        l0: Torus rank, 0 <= l0 <= config.MAX_L0
        z2_slots: Number of SO(odd) factors, one Z2 tag each
        even_spheres: Dimensions of S^2l spheres carrying SO(2l) factors

    Returns:
        List of CatalogBase: pt for l0=0, S^2 for l0=1, S^2 x S^2 for l0=2, with
        every assignment of Trivial/Antipodal/Reflection per sphere and slot

    Example:
        [b.name for b in base_catalog(1, 1)]  # ["S^2", "S^2_1", "S^2_2"]
    """
    if not 0 <= l0 <= config.MAX_L0:
        raise CatalogRangeError(
            f"l0={l0} is outside the base catalog (0 <= l0 <= {config.MAX_L0})"
        )
    dims = (2,) * l0 + tuple(even_spheres)
    circle = (True,) * l0 + (False,) * len(even_spheres)
    per_slot = list(itertools.product(TAG_ORDER, repeat=len(dims)))
    return [CatalogBase(dims, circle, tags) for tags in itertools.product(per_slot, repeat=z2_slots)]


def weight_values(bound):
    """0, 1, -1, 2, -2, ... up to the bound."""
    return [0] + [sign * x for x in range(1, bound + 1) for sign in (1, -1)]


def _subsets(catalog, codim):
    components = catalog.components(codim)
    for r in range(len(components) + 1):
        for combo in itertools.combinations(components, r):
            yield catalog.locus(*combo)


def _a_matrices(m):
    for flat in itertools.product((0, 1), repeat=m * (m - 1) // 2):
        entries = iter(flat)
        yield tuple(tuple(next(entries) for _ in range(m - i - 1)) for i in range(m))


def _check_shape(spec):
    so_even = spec.so_even_factors
    if so_even and (len(so_even) > 1 or spec.l0 > 0):
        raise CatalogRangeError(
            f"{spec.label}: SO(2l) factors are supported as a single factor over a point "
            "base; use family_answer (--family) for SO(2l)xT^1 and SO(2l1)xSO(2l2)"
        )
    if spec.l0 > config.MAX_L0:
        raise CatalogRangeError(
            f"{spec.label}: l0={spec.l0} is outside the base catalog (l0 <= {config.MAX_L0})"
        )


def _resolve_bound(psi_bound):
    bound = config.psi_bound() if psi_bound is None else psi_bound
    if bound < 0:
        raise ConfigError(f"psi bound must be non-negative, got {bound}")
    return bound


def enumerate_tuples(spec, psi_bound=None):
    """
    Representatives of every equivalence class of admissible 5-tuples.

    Args:
        spec: GroupSpec (normalized here)
        psi_bound: Largest |entry| of a psi weight vector; defaults to config.psi_bound()

    Returns:
        List of AdmissibleFiveTuple sorted by (canonical name, tuple text)

    Example:
        len(enumerate_tuples(parse_spec("SO(3)xT^1")))  # 4
    """
    spec = normalize_spec(spec)
    _check_shape(spec)
    bound = _resolve_bound(psi_bound)
    m = len(spec.so_odd_factors)
    vectors = list(itertools.product(weight_values(bound), repeat=spec.l0))
    even_spheres = tuple(f.n for f in spec.so_even_factors)

    classes = {}
    candidates = 0
    for catalog in base_catalog(spec.l0, m, even_spheres):
        su_choices = [
            (w, A) for w in vectors for A in _subsets(catalog, 2)
            if not su_violations(catalog, w, A)
        ]
        so_choices = [
            [B for B in _subsets(catalog, 1) if not so_violations(catalog, j, B)]
            for j in range(m)
        ]
        for su_pick in itertools.product(su_choices, repeat=len(spec.su_factors)):
            psi = PsiHom(tuple(w for w, _ in su_pick))
            A = tuple(x for _, x in su_pick)
            for B in itertools.product(*so_choices):
                for a in _a_matrices(m):
                    candidates += 1
                    t = AdmissibleFiveTuple(spec, psi, catalog, A, B, a)
                    if validate(t):
                        continue
                    classes.setdefault(canonical_key(t), t)

    representatives = sorted(classes.values(), key=lambda t: (render(realize(t)), to_text(t)))
    LOGGER.info(
        "%s: %d candidates, %d classes (psi bound %d)",
        spec.label, candidates, len(representatives), bound,
    )
    return representatives


@functools.lru_cache(maxsize=None)
def _classify_cached(label, bound):
    spec = parse_spec(label)
    source = config.SOURCE_TABULATED if label in TABULATED_SPECS else config.SOURCE_UNVERIFIED
    rows = []
    for t in enumerate_tuples(spec, bound):
        record = to_record(t, source)
        record["tuple"] = to_text(t)
        record["cohomology_deg2"] = propagate_flags(t).cohomology_deg2
        record["codim_one"] = all(not x.is_empty for x in t.A + t.B)
        rows.append(record)
    columns = config.RECORD_FIELDS + ["tuple", "cohomology_deg2", "codim_one"]
    return pd.DataFrame(rows, columns=columns)


def classify(spec, psi_bound=None):
    """
    Classification table of a spec: one row per equivalence class.

    Args:
        spec: GroupSpec
        psi_bound: As for enumerate_tuples

    Returns:
        DataFrame with the record fields of config.RECORD_FIELDS plus the tuple
        text, the degree-two cohomology flag and the codim_one marker
    """
    spec = normalize_spec(spec)
    return _classify_cached(spec.label, _resolve_bound(psi_bound)).copy()


def codim_one_rows(table):
    """Rows whose loci A_i and B_i are all non-empty."""
    return table[table["codim_one"].astype(bool)].reset_index(drop=True)


def family_answer(spec, simply_connected=True):
    """
    Connected-sum family for SO(2l)xT^1 and SO(2l1)xSO(2l2).

    Args:
        spec: GroupSpec
        simply_connected: Only the simply connected answer is available

    Returns:
        ConnSumFamily with symbolic k; k = 0 is the sphere, euler is 2*k + 2

    Example:
        render(family_answer(parse_spec("SO(4)xSO(4)")))  # "#_k(S^4 x S^4)"
    """
    spec = normalize_spec(spec)
    if not simply_connected:
        raise UnsupportedShapeError(
            f"{spec.label}: only simply connected manifolds with SO(2l) symmetry are classified"
        )
    evens = spec.so_even_factors
    others = [f for f in spec.factors if not f.is_so_even]
    if not others and len(evens) == 1 and spec.l0 == 1:
        l1 = evens[0].l
        summand = Product((EvenSphere(2), EvenSphere(2 * l1)))
        basepoint = EvenSphere(2 * l1 + 2)
    elif not others and len(evens) == 2 and spec.l0 == 0:
        l1, l2 = evens[0].l, evens[1].l
        summand = Product((EvenSphere(2 * l1), EvenSphere(2 * l2)))
        basepoint = EvenSphere(2 * l1 + 2 * l2)
    else:
        raise UnsupportedShapeError(
            f"{spec.label}: family answers cover SO(2l)xT^1 and SO(2l1)xSO(2l2)"
        )
    family = ConnSumFamily(rewrite(summand), FAMILY_PARAMETER, basepoint)
    LOGGER.info("%s: family %s, euler %s", spec.label, render(family), euler(family))
    return family


def family_table(spec):
    family = family_answer(spec)
    label = normalize_spec(spec).label
    rows = [
        {"spec": label, "k": "k>=1", "name": render(family), "chi": str(euler(family))},
        {"spec": label, "k": "0", "name": render(family.basepoint), "chi": str(euler(family.member(0)))},
    ]
    return pd.DataFrame(rows, columns=["spec", "k", "name", "chi"])


def _classification_table(specs, codim_one=False):
    frames = []
    for text in specs:
        table = classify(parse_spec(text), config.PSI_BOUND_DEFAULT)
        if codim_one:
            table = codim_one_rows(table)
        frames.append(table[config.TABLE_COLUMNS])
    return pd.concat(frames, ignore_index=True)


def reference_tables():
    """
    The seven reference tables, in output order.

    The first three are the static Lie group tables; the other four are
    classification tables computed with the default psi bound.

    Returns:
        dict of table name -> DataFrame
    """
    return {
        "f_sizes": lookups.f_size_table(),
        "rep_dims": lookups.rep_dim_table(),
        "max_rank": lookups.max_rank_table(),
        "elementary": _classification_table(ELEMENTARY_SPECS),
        "codim_one": _classification_table(CODIM_ONE_SPECS, codim_one=True),
        "two_factor": _classification_table(TWO_FACTOR_SPECS),
        "four_dim": _classification_table(FOUR_DIM_SPECS),
    }
