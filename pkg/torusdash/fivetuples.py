"""
Admissible 5-tuples (psi, N, A, B, a).

A tuple for a normalized spec with SU factors G_1..G_k0 and SO(odd) factors
G_k0+1..G_k holds one weight vector psi_i per SU factor, a catalog base N
carrying the torus T^l0 and one Z2 tag per SO(odd) factor, loci A_i (codim 2)
and B_i (codim 1) on N, and the 0/1 matrix a over the SO(odd) factors.

In code the SO(odd) factors, their B loci, their Z2 slots and the rows of `a`
are numbered among themselves from 0. Rendering uses global 1-based indices.

A reduced tuple is a tuple for the same group whose base already carries its
last factors: the EquivariantBase lists them as FoldSteps (last factor first)
and the tuple's own psi, A, B and a cover the remaining designated factors
only. Its loci are still stored on the catalog and saturated on demand
(saturated_loci), so expand(reduce(t)) gives t back exactly.
"""

import itertools
import logging
from dataclasses import dataclass, field

from . import config
from .errors import BranchHypothesisError, InvalidTupleError, SpecMismatchError
from .liegroups import GroupFactor, GroupSpec, PsiHom, orbit_space_dim, psi_kernel_is_su, psi_sign_choices
from .manifolds import (
    CP,
    BlowDown,
    CatalogLocus,
    EvenSphere,
    Piece,
    Point,
    Product,
    ProjBundleSU,
    SaturatedLocus,
    Saturation,
    Z2Action,
    Z2Product,
    Z2Quotient,
    dim,
    euler,
    render,
    render_tagged,
    rewrite,
    rewrite_tagged,
    simply_connected,
    z2_descend,
    z2_is_trivial,
    z2_reverses,
)

LOGGER = logging.getLogger(__name__)

POLES = (Piece.NORTH, Piece.SOUTH)


# ----------------------------------------------------------------------------
# Bases
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogBase:
    """A product of spheres with the torus and the Z2 tags recorded.

    dims[f] is the dimension of sphere factor f; circle[f] is True for the S^2
    factors rotated by a circle of T^l0 and False for the S^2l sphere carrying an
    SO(2l) factor. tags[slot][f] is the Z2Action of the slot-th Z2 on factor f.
    """

    dims: tuple = ()
    circle: tuple = ()
    tags: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "circle", tuple(self.circle))
        object.__setattr__(self, "tags", tuple(tuple(slot) for slot in self.tags))
        if len(self.circle) != len(self.dims):
            raise InvalidTupleError(["(2) base: circle flags do not match the sphere factors"])
        if any(len(slot) != len(self.dims) for slot in self.tags):
            raise InvalidTupleError(["(2) base: Z2 tags do not match the sphere factors"])

    @property
    def l0(self):
        return sum(1 for c in self.circle if c)

    @property
    def n_slots(self):
        return len(self.tags)

    @property
    def circle_factors(self):
        return [f for f, c in enumerate(self.circle) if c]

    @property
    def even_spheres(self):
        return tuple(d for d, c in zip(self.dims, self.circle) if not c)

    @property
    def expr(self):
        spheres = [EvenSphere(d) for d in self.dims]
        if not spheres:
            return Point()
        if len(spheres) == 1:
            return spheres[0]
        return Product(tuple(spheres))

    def slot_tag(self, slot):
        atoms = self.tags[slot]
        if not atoms:
            return Z2Action.TRIVIAL
        if len(atoms) == 1:
            return atoms[0]
        return Z2Product(atoms)

    def fixed_points(self):
        return list(itertools.product(POLES, repeat=len(self.dims)))

    def components(self, codim):
        locus = CatalogLocus.empty(self.dims)
        found = [
            c for c in itertools.product(Piece, repeat=len(self.dims))
            if locus.component_codim(c) == codim
        ]
        return sorted(found, key=lambda c: tuple(p.value for p in c))

    def locus(self, *components):
        return CatalogLocus(frozenset(components), self.dims)

    @property
    def name(self):
        return base_text(self.expr, [self.slot_tag(s) for s in range(self.n_slots)])


@dataclass(frozen=True)
class FoldStep:
    """One peeled factor: its psi weights (SU), locus, a-column and Z2 slot (SO)."""

    factor: GroupFactor
    psi: tuple = ()
    locus: object = None
    a_column: tuple = ()
    slot: int | None = None


@dataclass(frozen=True)
class EquivariantBase:
    catalog: CatalogBase
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    @property
    def dims(self):
        return self.catalog.dims


def _slot_text(expr, tag):
    if isinstance(expr, Product) and isinstance(tag, Z2Product):
        return " x ".join(render_tagged(c, t) for c, t in zip(expr.children, tag.tags))
    return render_tagged(expr, tag)


def base_text(expr, tags):
    """Render a base with its remaining Z2 slots, one '|'-separated view per slot."""
    if isinstance(expr, Point) or not tags:
        return render(rewrite(expr))
    return " | ".join(_slot_text(*rewrite_tagged(expr, tag)) for tag in tags)


# ----------------------------------------------------------------------------
# Tuples
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class AdmissibleFiveTuple:
    spec: GroupSpec
    psi: PsiHom
    base: object
    A: tuple = ()
    B: tuple = ()
    a: tuple = ()

    def __post_init__(self):
        if not isinstance(self.psi, PsiHom):
            object.__setattr__(self, "psi", PsiHom(self.psi))
        object.__setattr__(self, "A", tuple(self.A))
        object.__setattr__(self, "B", tuple(self.B))
        object.__setattr__(self, "a", tuple(tuple(row) for row in self.a))

    @property
    def su_factors(self):
        """SU factors designated by this tuple; peeled ones live in the base."""
        su = self.spec.su_factors
        return su[: len(su) - sum(1 for s in self.steps if s.factor.kind == "SU")]

    @property
    def so_factors(self):
        so = self.spec.so_odd_factors
        return so[: len(so) - sum(1 for s in self.steps if s.factor.kind != "SU")]

    @property
    def factors(self):
        return self.su_factors + self.so_factors

    @property
    def peeled(self):
        return tuple(s.factor for s in self.steps)

    @property
    def k0(self):
        return len(self.su_factors)

    @property
    def k(self):
        return self.k0 + len(self.so_factors)

    @property
    def catalog(self):
        return self.base.catalog if isinstance(self.base, EquivariantBase) else self.base

    @property
    def steps(self):
        return self.base.steps if isinstance(self.base, EquivariantBase) else ()

    @property
    def is_reduced(self):
        return bool(self.steps)

    def a_entry(self, i, j):
        return self.a[i][j - i - 1]

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class AdmissibleTriple:
    """(psi_1, N, A) for a single SU factor."""

    psi_i: tuple
    base: CatalogBase
    A: CatalogLocus

    def to_five_tuple(self, spec):
        return AdmissibleFiveTuple(spec, PsiHom((self.psi_i,)), self.base, (self.A,), (), ())


@dataclass(frozen=True)
class AdmissiblePair:
    """(N, B) for a single SO(odd) factor; N carries the Z2 tag."""

    base: CatalogBase
    B: CatalogLocus

    def to_five_tuple(self, spec):
        return AdmissibleFiveTuple(spec, PsiHom(()), self.base, (), (self.B,), ((),))


@dataclass(frozen=True)
class PropagationFlags:
    quasitoric: bool
    cohomology_deg2: bool | None
    simply_connected: object


# ----------------------------------------------------------------------------
# Loci on the catalog
# ----------------------------------------------------------------------------

def swap_poles(locus, factors):
    """Image of a catalog locus under the pole swap of the given sphere factors."""
    factors = set(factors)

    def flip(f, piece):
        if f in factors and piece in POLES:
            return Piece.SOUTH if piece is Piece.NORTH else Piece.NORTH
        return piece

    return CatalogLocus(
        frozenset(tuple(flip(f, p) for f, p in enumerate(c)) for c in locus.components),
        locus.dims,
    )


def is_invariant(catalog, locus):
    # both nontrivial Z2 atoms swap the poles and keep equator and whole sphere
    for slot in range(catalog.n_slots):
        moved = [f for f, tag in enumerate(catalog.tags[slot]) if tag is not Z2Action.TRIVIAL]
        if swap_poles(locus, moved) != locus:
            return False
    return True


def _fixes(atom, piece):
    if atom is Z2Action.TRIVIAL:
        return True
    return atom is Z2Action.REFLECTION and piece is Piece.EQUATOR


def su_violations(catalog, w, locus):
    """Clause (3) for one SU factor with weights w and locus A_i."""
    if locus.is_empty:
        return []
    violations = []
    components = locus.sorted_components()
    if any(locus.component_codim(c) != 2 for c in components):
        violations.append("(3) codim")
    if not is_invariant(catalog, locus):
        violations.append("(3) invariance")
    moving = [f for f, x in zip(catalog.circle_factors, w) if x != 0]
    if any(c[f] not in POLES for c in components for f in moving):
        violations.append("(3) psi-fixed")
    if not psi_kernel_is_su(w):
        violations.append("(3) kernel gcd")
    return violations


def so_violations(catalog, slot, locus):
    """Clause (4) for one SO(odd) factor with Z2 slot `slot` and locus B_i."""
    if locus.is_empty:
        return []
    violations = []
    components = locus.sorted_components()
    if any(locus.component_codim(c) != 1 for c in components):
        violations.append("(4) codim")
    if not is_invariant(catalog, locus):
        violations.append("(4) invariance")
    atoms = catalog.tags[slot]
    if not all(_fixes(atom, p) for c in components for atom, p in zip(atoms, c)):
        violations.append("(4) fixed")
    if all(atom is Z2Action.TRIVIAL for atom in atoms):
        violations.append("(4) nontrivial")
    return violations


# ----------------------------------------------------------------------------
# Validation
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class _Entry:
    """One SU or SO(odd) factor with its data, designated or carried by the base."""

    factor: GroupFactor
    data: tuple
    locus: object
    in_base: bool


def _su_entries(t):
    entries = [_Entry(f, tuple(w), x, False) for f, w, x in zip(t.su_factors, t.psi.weights, t.A)]
    entries += [
        _Entry(s.factor, tuple(s.psi), s.locus, True)
        for s in reversed(t.steps) if s.factor.kind == "SU"
    ]
    return entries


def _so_entries(t):
    entries = [_Entry(f, (), x, False) for f, x in zip(t.so_factors, t.B)]
    entries += [
        _Entry(s.factor, tuple(s.a_column), s.locus, True)
        for s in reversed(t.steps) if s.factor.kind != "SU"
    ]
    return entries


def _a_entries(t, so):
    """The full a-matrix as {(i, j): a_ij}, peeled columns read from the base."""
    entries = {(i, j): t.a_entry(i, j) for i in range(len(t.so_factors)) for j in range(i + 1, len(t.so_factors))}
    for j, entry in enumerate(so):
        if entry.in_base:
            entries.update({(i, j): x for i, x in enumerate(entry.data)})
    return entries


def _marked(entry, violations):
    return [f"base {v}" for v in violations] if entry.in_base else violations


def _shape_violations(t):
    catalog = t.catalog
    m = len(t.so_factors)
    violations = []
    if len(t.psi) != t.k0 or any(len(w) != t.spec.l0 for w in t.psi.weights):
        violations.append("(1) psi")
    if (
        catalog.l0 != t.spec.l0
        or catalog.n_slots != len(t.spec.so_odd_factors)
        or sorted(catalog.even_spheres) != sorted(f.n for f in t.spec.so_even_factors)
    ):
        violations.append("(2) base")
    if len(t.A) != t.k0 or len(t.B) != m:
        violations.append("(2) loci count")
    elif any(x.dims != catalog.dims for x in t.A + t.B):
        violations.append("(2) loci dims")
    if len(t.a) != m or any(len(row) != m - i - 1 for i, row in enumerate(t.a)):
        violations.append("(5) a shape")
    elif any(x not in (0, 1) for row in t.a for x in row):
        violations.append("(5) a entries")
    return violations


def _step_violations(t):
    """The base must carry the last factors of the spec, last factor first, SO(odd) before SU."""
    so, su = t.spec.so_odd_factors, t.spec.su_factors
    expected = (tuple(reversed(so)) + tuple(reversed(su)))[: len(t.steps)]
    if t.peeled != expected:
        return ["(2) base steps"]
    n_so = len(so)
    for p, step in enumerate(t.steps):
        if not isinstance(step.locus, CatalogLocus) or step.locus.dims != t.catalog.dims:
            return ["(2) base steps"]
        if step.factor.kind == "SU":
            ok = len(step.psi) == t.spec.l0 and step.slot is None and not step.a_column
        else:
            slot = n_so - 1 - p
            ok = (
                step.slot == slot and not step.psi and len(step.a_column) == slot
                and all(x in (0, 1) for x in step.a_column)
            )
        if not ok:
            return ["(2) base steps"]
    return []


def _matrix_violations(catalog, a, so):
    m = len(so)
    violations = []
    for (i, j), value in sorted(a.items()):
        if value != 1:
            continue
        found = []
        if not z2_is_trivial(catalog.slot_tag(j)):
            found.append("5(a)(i)")
        if any(a.get((j, k)) for k in range(j + 1, m)):
            found.append("5(a)(ii)")
        if not so[i].locus.is_empty:
            found.append("5(a)(iii)")
        violations += _marked(so[j], found)
    for i in range(m):
        total = sum(a.get((i, j), 0) for j in range(i + 1, m))
        tag = catalog.slot_tag(i)
        found = []
        if not z2_is_trivial(tag):
            preserving = not z2_reverses(tag)
            if preserving != (total % 2 == 1):
                found.append("5(b) parity")
        elif total % 2 == 0 and total != 0:
            found.append("5(c) parity")
        violations += _marked(so[i], found)
    return violations


def meet_transversely(x, y):
    """
    Two catalog loci meet transversely when no pair of their components shares a
    pole or an equator on some sphere factor.

    A and B loci that pass their own locus checks always meet transversely, and
    two A loci (or two B loci) do exactly when they share no component.
    """
    for c, d in itertools.product(x.components, y.components):
        if any(p is q and p is not Piece.WHOLE for p, q in zip(c, d)):
            return False
    return True


def _transversality_violations(su, so):
    violations = []
    named = [("A", e) for e in su] + [("B", e) for e in so]
    for (n1, e1), (n2, e2) in itertools.combinations(named, 2):
        if meet_transversely(e1.locus, e2.locus):
            continue
        name = n1 if n1 == n2 else "A-B"
        found = [f"transversality {name}"]
        violations += found if not (e1.in_base and e2.in_base) else _marked(e1, found)
    return violations


def validate(t):
    """
    Check every clause of admissibility on the tuple as given.

    A reduced tuple is checked together with the factors its base carries;
    violations that concern only the base are prefixed with "base ".

    Args:
        t: AdmissibleFiveTuple, full or reduced

    Returns:
        List of violated clause names, empty when t is admissible

    Example:
        validate(t)  # ["(3) kernel gcd"] for SU(2)xT^1 with w=(2), A={N}
    """
    violations = _shape_violations(t) + _step_violations(t)
    if violations:
        return violations
    catalog = t.catalog
    su, so = _su_entries(t), _so_entries(t)
    for entry in su:
        violations += _marked(entry, su_violations(catalog, entry.data, entry.locus))
    for j, entry in enumerate(so):
        violations += _marked(entry, so_violations(catalog, j, entry.locus))
    violations += _matrix_violations(catalog, _a_entries(t, so), so)
    violations += _transversality_violations(su, so)
    if not all(e.locus.components_disjoint() for e in su + so):
        violations.append("locus components disjoint")
    return list(dict.fromkeys(violations))


# ----------------------------------------------------------------------------
# Folding (realization)
# ----------------------------------------------------------------------------

@dataclass
class _FoldState:
    expr: object
    l0: int
    tags: dict = field(default_factory=dict)
    pending: dict = field(default_factory=dict)


def _fold_items(t, active):
    items = []
    for p, step in enumerate(t.steps):
        kind = "SU" if step.factor.kind == "SU" else "SO"
        items.append((kind, step.factor, step.psi, ("step", p), step.a_column, step.slot))
    if active:
        so = t.so_factors
        for j in reversed(range(len(so))):
            column = tuple(t.a_entry(i, j) for i in range(j))
            items.append(("SO", so[j], (), ("B", j), column, j))
        for i in reversed(range(t.k0)):
            items.append(("SU", t.su_factors[i], t.psi[i], ("A", i), (), None))
    return items


def _fold_so(state, factor, key, column, slot):
    l = factor.l
    tag = state.tags.pop(slot)
    own = state.pending.pop(key)
    twists = {i: (Z2Action.ANTIPODAL if i < len(column) and column[i] else Z2Action.TRIVIAL) for i in state.tags}
    if z2_is_trivial(tag):
        state.expr = Product((EvenSphere(2 * l), state.expr))
        state.tags = {i: Z2Product((twists[i], t)) for i, t in state.tags.items()}
        step = Saturation("SO", l, False, None, factor.label)
    else:
        quotient = Z2Quotient(2 * l, state.expr, tag)
        state.expr = quotient if own.is_empty else BlowDown(quotient, own)
        state.tags = {i: z2_descend(Z2Product((twists[i], t))) for i, t in state.tags.items()}
        step = Saturation("SO", l, True, None, factor.label)
    state.pending = {k: SaturatedLocus(x, step) for k, x in state.pending.items()}


def _fold_su(state, factor, w, key):
    l = factor.l
    own = state.pending.pop(key)
    if own.is_empty:
        if state.l0 == 0:
            state.expr = Product((CP(l), state.expr))
        else:
            state.expr = ProjBundleSU(l, state.expr, tuple(w))
        center = None
    else:
        state.expr = BlowDown(ProjBundleSU(l, state.expr, tuple(w)), own)
        center = own
    step = Saturation("SU", l, False, center, factor.label)
    state.pending = {k: SaturatedLocus(x, step) for k, x in state.pending.items()}


def _fold(t, active=True):
    catalog = t.catalog
    state = _FoldState(catalog.expr, catalog.l0)
    state.tags = {slot: catalog.slot_tag(slot) for slot in range(catalog.n_slots)}
    state.pending.update({("A", i): x for i, x in enumerate(t.A)})
    state.pending.update({("B", j): x for j, x in enumerate(t.B)})
    state.pending.update({("step", p): s.locus for p, s in enumerate(t.steps)})
    for kind, factor, w, key, column, slot in _fold_items(t, active):
        if kind == "SO":
            _fold_so(state, factor, key, column, slot)
        else:
            _fold_su(state, factor, w, key)
    return state


def fold_expression(t):
    """The un-rewritten expression tree of t (catalog folded last factor first)."""
    return _fold(t).expr


def realize(t):
    """
    Realize a valid tuple as a manifold expression.

    Factors are folded from last to first onto the base, then the naming
    rewrites are applied.

    Args:
        t: AdmissibleFiveTuple

    Returns:
        Rewritten ManifoldExpr

    Example:
        render(realize(t))  # "CP^2" for SU(3) with (const, pt, {}, {}, {})
    """
    violations = validate(t)
    if violations:
        raise InvalidTupleError(violations)
    return rewrite(fold_expression(t))


def saturated_loci(t):
    """(A, B) of a reduced tuple as loci on its base expression."""
    state = _fold(t, active=False)
    A = tuple(state.pending[("A", i)] for i in range(t.k0))
    B = tuple(state.pending[("B", j)] for j in range(len(t.so_factors)))
    return A, B


def base_expression(t):
    """The base of t: the catalog, or the catalog with the peeled factors folded in."""
    state = _fold(t, active=False)
    return state.expr, [state.tags[s] for s in sorted(state.tags)]


# ----------------------------------------------------------------------------
# Equivalence
# ----------------------------------------------------------------------------

def _locus_key(locus):
    return tuple(sorted(tuple(p.value for p in c) for c in locus.components))


def canonical_key(t):
    """Smallest image of t under catalog pole swaps and psi_i -> psi_i^-1 for l_i = 1.

    A reduced tuple is keyed through its expansion plus the factors it still
    designates, so two reduced tuples share a key exactly when their expansions do.
    """
    designated = tuple(f.label for f in t.factors)
    t = _unfold(t)
    catalog = t.catalog
    signs = [psi_sign_choices(f) for f in t.su_factors]
    best = None
    for swap in itertools.product((False, True), repeat=len(catalog.dims)):
        moved = [f for f, s in enumerate(swap) if s]
        A = tuple(_locus_key(swap_poles(x, moved)) for x in t.A)
        B = tuple(_locus_key(swap_poles(x, moved)) for x in t.B)
        for choice in itertools.product(*signs):
            psi = tuple(tuple(s * x for x in w) for s, w in zip(choice, t.psi.weights))
            candidate = (psi, A, B)
            if best is None or candidate < best:
                best = candidate
    tags = tuple(tuple(atom.value for atom in slot) for slot in catalog.tags)
    return (t.spec.label, designated, catalog.dims, catalog.circle, tags, t.a) + best


def _group_text(t):
    if not t.steps:
        return t.spec.label
    designated = "x".join(f.label for f in t.factors) or "no factor"
    return f"{t.spec.label} (designating {designated})"


def equivalent(t1, t2):
    if t1.spec.label != t2.spec.label or t1.factors != t2.factors:
        raise SpecMismatchError(f"cannot compare tuples for {_group_text(t1)} and {_group_text(t2)}")
    return canonical_key(t1) == canonical_key(t2)


# ----------------------------------------------------------------------------
# Reduce / expand / extend
# ----------------------------------------------------------------------------

def _spec_with(spec, factor):
    factors = list(spec.su_factors)
    so_odd = list(spec.so_odd_factors)
    if factor.kind == "SU":
        factors.append(factor)
    else:
        so_odd.append(factor)
    return GroupSpec(tuple(factors + so_odd) + spec.so_even_factors, spec.l0)


def reduce(t):
    """
    Peel the last designated factor of a valid tuple into its base.

    The result is a tuple for the same group: its base is the torus manifold
    N' carrying the peeled factor, and it designates one factor less.

    Args:
        t: AdmissibleFiveTuple designating at least one SU or SO(odd) factor

    Returns:
        AdmissibleFiveTuple designating k-1 factors, same spec and dimension

    Example:
        to_text(reduce(t))  # "({}, S^2_1, {}, {}, {})" for SO(3)xSO(3) with a_12=1
    """
    violations = validate(t)
    if violations:
        raise InvalidTupleError(violations)
    if t.k == 0:
        raise BranchHypothesisError("a tuple designating no SU or SO(odd) factor cannot be reduced")
    if t.so_factors:
        j = len(t.so_factors) - 1
        factor = t.so_factors[-1]
        column = tuple(t.a_entry(i, j) for i in range(j))
        step = FoldStep(factor, (), t.B[-1], column, j)
        reduced = AdmissibleFiveTuple(
            t.spec, t.psi, EquivariantBase(t.catalog, t.steps + (step,)),
            t.A, t.B[:-1], tuple(row[:-1] for row in t.a[:-1]),
        )
    else:
        factor = t.su_factors[-1]
        step = FoldStep(factor, tuple(t.psi[-1]), t.A[-1])
        reduced = AdmissibleFiveTuple(
            t.spec, PsiHom(t.psi.weights[:-1]), EquivariantBase(t.catalog, t.steps + (step,)),
            t.A[:-1], t.B, t.a,
        )
    LOGGER.debug("reduced %s by %s, %d factors left", t.spec.label, factor.label, reduced.k)
    return reduced


def _unfold_step(t):
    step = t.steps[-1]
    rest = t.steps[:-1]
    base = EquivariantBase(t.catalog, rest) if rest else t.catalog
    if step.factor.kind == "SU":
        psi = PsiHom(t.psi.weights + (tuple(step.psi),))
        return AdmissibleFiveTuple(t.spec, psi, base, t.A + (step.locus,), t.B, t.a)
    rows = tuple(row + (step.a_column[i],) for i, row in enumerate(t.a)) + ((),)
    return AdmissibleFiveTuple(t.spec, t.psi, base, t.A, t.B + (step.locus,), rows)


def _unfold(t):
    while t.steps:
        t = _unfold_step(t)
    return t


def expand(t, factor=None, psi=None, locus=None, a_column=None, tag=None):
    """
    Give a reduced tuple its last peeled factor back: the inverse of reduce.

    The factor's psi weights, locus, a-column and Z2 tag are read off the base,
    which carries its action; values passed in must agree with the base.

    Args:
        t: reduced AdmissibleFiveTuple
        factor: GroupFactor expected as the last peeled factor
        psi: expected weight vector (SU)
        locus: expected A (SU) or B (SO) locus on the catalog
        a_column: expected a_ij of the earlier SO(odd) factors with this one
        tag: expected Z2Action per catalog sphere factor of its Z2 slot (SO)

    Returns:
        AdmissibleFiveTuple designating k+1 factors

    Example:
        expand(reduce(t))  # t
    """
    if not t.steps:
        raise BranchHypothesisError(
            f"the base of {to_text(t)} carries no peeled factor; use extend to add a new one"
        )
    violations = validate(t)
    if violations:
        raise BranchHypothesisError(f"reduced tuple is not admissible: {'; '.join(violations)}")
    step = t.steps[-1]
    carried_tag = t.catalog.tags[step.slot] if step.slot is not None else None
    expected = {
        "factor": (factor, step.factor),
        "psi": (None if psi is None else tuple(psi), step.psi),
        "locus": (locus, step.locus),
        "a-column": (None if a_column is None else tuple(a_column), step.a_column),
        "tag": (None if tag is None else tuple(tag), carried_tag),
    }
    for name, (value, carried) in expected.items():
        if value is not None and value != carried:
            raise BranchHypothesisError(f"{name} {value} does not match the base, which carries {carried}")
    return _unfold_step(t)


def _append(t, factor, w, locus, column, catalog):
    spec = _spec_with(t.spec, factor)
    if factor.kind == "SU":
        return AdmissibleFiveTuple(spec, PsiHom(t.psi.weights + (tuple(w),)), catalog, t.A + (locus,), t.B, t.a)
    rows = tuple(row + (column[i],) for i, row in enumerate(t.a)) + ((),)
    return AdmissibleFiveTuple(spec, t.psi, catalog, t.A, t.B + (locus,), rows)


def extend(t, factor, psi=None, locus=None, a_column=None, tag=None):
    """
    Append a new last factor to a full tuple, growing its spec by that factor.

    Args:
        t: AdmissibleFiveTuple without peeled factors
        factor: normalized GroupFactor to add, SU or SO(odd)
        psi: weight vector of length l0 for an SU factor (default zero)
        locus: A (SU) or B (SO) locus on the catalog (default empty)
        a_column: a_ij of the earlier SO(odd) factors with the new one (default zero)
        tag: Z2Action per catalog sphere factor for the new Z2 slot (default trivial)

    Returns:
        AdmissibleFiveTuple for the grown spec

    Example:
        render(realize(extend(torus, GroupFactor("SO", 3), locus=equator, tag=(Z2Action.REFLECTION,))))  # "S^4"
    """
    if t.steps:
        raise BranchHypothesisError("extend takes a full tuple; expand the reduced one first")
    if factor.kind == "SU":
        if t.so_factors:
            raise BranchHypothesisError("SU factors precede SO(odd) factors; extend by SU factors first")
        previous = t.su_factors
    elif factor.is_so_odd:
        previous = t.so_factors
    else:
        raise BranchHypothesisError(f"{factor.label} is not an SU or SO(odd) factor")
    if factor.f_size is not None:
        raise BranchHypothesisError("extend takes normalized factors")
    if previous and previous[-1].n > factor.n:
        raise BranchHypothesisError(f"{factor.label} would not be the last factor of a normalized spec")
    catalog = t.catalog
    m = len(t.so_factors)
    if locus is None:
        locus = CatalogLocus.empty(catalog.dims)
    if factor.kind == "SU":
        w = tuple(psi) if psi is not None else (0,) * catalog.l0
        extended = _append(t, factor, w, locus, (), catalog)
    else:
        column = tuple(a_column) if a_column is not None else (0,) * m
        if len(column) != m:
            raise BranchHypothesisError(f"a-column needs {m} entries, got {len(column)}")
        atoms = tuple(tag) if tag is not None else (Z2Action.TRIVIAL,) * len(catalog.dims)
        catalog = CatalogBase(catalog.dims, catalog.circle, catalog.tags + (atoms,))
        extended = _append(t, factor, (), locus, column, catalog)
    violations = validate(extended)
    if violations:
        raise BranchHypothesisError(f"extended tuple is not admissible: {'; '.join(violations)}")
    return extended


# ----------------------------------------------------------------------------
# Invariants of a tuple
# ----------------------------------------------------------------------------

def fixed_point_count(t):
    """Number of T-fixed points of the realization, counted on the tuple data alone."""
    t = _unfold(t)
    catalog = t.catalog
    products = sum(
        1 for j in range(len(t.so_factors))
        if z2_is_trivial(catalog.slot_tag(j)) and sum(t.a[j]) == 0
    )
    total = 0
    for point in catalog.fixed_points():
        value = 2 ** products
        for factor, locus in zip(t.su_factors, t.A):
            value *= 1 if locus.contains(point) else factor.l + 1
        total += value
    return total


def propagate_flags(t):
    """Quasitoric / degree-two cohomology / simple connectivity of the realization."""
    t = _unfold(t)
    connected = simply_connected(realize(t))
    if t.spec.so_odd_factors or t.spec.so_even_factors:
        return PropagationFlags(False, None, connected)
    quasitoric = all(t.catalog.circle) and all(x.n_components <= 1 for x in t.A)
    return PropagationFlags(quasitoric, quasitoric, connected)


# ----------------------------------------------------------------------------
# Serialization
# ----------------------------------------------------------------------------

def _loci_text(loci):
    if len(loci) == 0:
        return "{}"
    if len(loci) == 1:
        return loci[0].name
    return "(" + ",".join(x.name for x in loci) + ")"


def _psi_text(t):
    if t.k0 == 0:
        return "{}"
    if t.psi.is_trivial:
        return "const"
    return "w=" + ";".join("(" + ",".join(str(x) for x in w) + ")" for w in t.psi.weights)


def _a_text(t):
    m = len(t.so_factors)
    if m < 2:
        return "{}"
    return ",".join(
        f"a_{t.k0 + i + 1}{t.k0 + j + 1}={t.a_entry(i, j)}"
        for i in range(m) for j in range(i + 1, m)
    )


def tuple_parts(t):
    if t.steps:
        expr, tags = base_expression(t)
        A, B = saturated_loci(t)
        base = base_text(expr, tags)
    else:
        A, B, base = t.A, t.B, t.catalog.name
    return {
        "psi": _psi_text(t),
        "base": base,
        "A": _loci_text(A),
        "B": _loci_text(B),
        "a": _a_text(t),
    }


def to_text(t):
    parts = tuple_parts(t)
    return "(" + ", ".join(parts[k] for k in ("psi", "base", "A", "B", "a")) + ")"


def to_record(t, source=config.SOURCE_UNVERIFIED):
    """One JSON-ready record with the fields of config.RECORD_FIELDS, in order."""
    expr = realize(t)
    flags = propagate_flags(t)
    parts = tuple_parts(t)
    values = {
        "spec": t.spec.label,
        **parts,
        "name": render(expr),
        "chi": int(euler(expr)),
        "dim": dim(expr),
        "orbit_space_dim": orbit_space_dim(t.spec),
        "quasitoric": flags.quasitoric,
        "simply_connected": flags.simply_connected.value,
        "source": source,
    }
    return {name: values[name] for name in config.RECORD_FIELDS}
