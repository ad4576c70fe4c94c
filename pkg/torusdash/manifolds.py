"""
Symbolic closed manifolds and their invariants.

Expressions are immutable trees built from spheres, complex projective spaces,
products, Z2-quotients S^2l x_Z2 N, projective bundles H0 x_H1 N over CP^l,
blow-downs and connected-sum families. The evaluators below compute dimension,
Euler characteristic, orientability and simple connectivity; rewrite() and
canonical_name() turn an expression into the name used in the output tables.
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum

import sympy

from .errors import InvalidManifoldError

LOGGER = logging.getLogger(__name__)


class ManifoldExpr:
    """Marker base class of every expression node."""


# ----------------------------------------------------------------------------
# Z2 action tags
# ----------------------------------------------------------------------------

class Z2Action(Enum):
    TRIVIAL = "trivial"
    ANTIPODAL = "antipodal"
    REFLECTION = "reflection"

    @property
    def suffix(self):
        return {"trivial": "", "antipodal": "_1", "reflection": "_2"}[self.value]


@dataclass(frozen=True)
class Z2Product:
    """One tag per factor of a Product."""

    tags: tuple

    def __post_init__(self):
        object.__setattr__(self, "tags", tuple(self.tags))


@dataclass(frozen=True)
class Z2Induced:
    """Action descended to an expression that is not a product of spheres."""

    nontrivial: bool
    reverses: bool
    free: bool


def z2_is_trivial(tag):
    if isinstance(tag, Z2Action):
        return tag is Z2Action.TRIVIAL
    if isinstance(tag, Z2Product):
        return all(z2_is_trivial(t) for t in tag.tags)
    return not tag.nontrivial


def z2_reverses(tag):
    """Whether the action reverses orientation (atoms act on even spheres)."""
    if isinstance(tag, Z2Action):
        return tag is not Z2Action.TRIVIAL
    if isinstance(tag, Z2Product):
        return sum(1 for t in tag.tags if z2_reverses(t)) % 2 == 1
    return tag.reverses


def z2_is_free(tag):
    if isinstance(tag, Z2Action):
        return tag is Z2Action.ANTIPODAL
    if isinstance(tag, Z2Product):
        return any(z2_is_free(t) for t in tag.tags)
    return tag.free


def z2_descend(tag):
    """The action induced on a quotient or blow-down by an action on its inner part."""
    return Z2Induced(
        nontrivial=not z2_is_trivial(tag),
        reverses=z2_reverses(tag),
        free=z2_is_free(tag),
    )


# ----------------------------------------------------------------------------
# Loci
# ----------------------------------------------------------------------------

class Piece(Enum):
    NORTH = 0
    SOUTH = 1
    EQUATOR = 2
    WHOLE = 3


def piece_codim(piece, d):
    if piece in (Piece.NORTH, Piece.SOUTH):
        return d
    return 1 if piece is Piece.EQUATOR else 0


def piece_euler(piece, d):
    if piece in (Piece.NORTH, Piece.SOUTH):
        return 1
    return 0 if piece is Piece.EQUATOR else 2


def piece_meet(p, q):
    if p is Piece.WHOLE:
        return q
    if q is Piece.WHOLE or p is q:
        return p
    return None


def piece_name(piece, d):
    if piece is Piece.NORTH:
        return "N"
    if piece is Piece.SOUTH:
        return "S"
    if piece is Piece.EQUATOR:
        return f"S^{d - 1}"
    return f"S^{d}"


def _component_key(component):
    return tuple(p.value for p in component)


@dataclass(frozen=True)
class CatalogLocus:
    """Union of product components on a product of spheres S^d1 x ... x S^dr.

    A component picks one piece (north pole, south pole, equator, whole sphere)
    in every factor; dims == () describes loci on a point.
    """

    components: frozenset
    dims: tuple

    def __post_init__(self):
        components = frozenset(tuple(c) for c in self.components)
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "dims", tuple(self.dims))
        if any(len(c) != len(self.dims) for c in components):
            raise InvalidManifoldError("locus component does not match the factor count")

    @classmethod
    def empty(cls, dims):
        return cls(frozenset(), dims)

    @property
    def is_empty(self):
        return not self.components

    @property
    def n_components(self):
        return len(self.components)

    def sorted_components(self):
        return sorted(self.components, key=_component_key)

    def component_codim(self, component):
        return sum(piece_codim(p, d) for p, d in zip(component, self.dims))

    @property
    def codim(self):
        codims = {self.component_codim(c) for c in self.components}
        return codims.pop() if len(codims) == 1 else None

    def euler(self):
        total = 0
        for component in self.components:
            value = 1
            for p, d in zip(component, self.dims):
                value *= piece_euler(p, d)
            total += value
        return total

    def intersect(self, other):
        if not isinstance(other, CatalogLocus) or other.dims != self.dims:
            raise InvalidManifoldError("loci live on different manifolds")
        meets = set()
        for a in self.components:
            for b in other.components:
                pieces = tuple(piece_meet(p, q) for p, q in zip(a, b))
                if all(p is not None for p in pieces):
                    meets.add(pieces)
        return CatalogLocus(frozenset(meets), self.dims)

    def components_disjoint(self):
        comps = self.sorted_components()
        for i, a in enumerate(comps):
            for b in comps[i + 1:]:
                if all(piece_meet(p, q) is not None for p, q in zip(a, b)):
                    return False
        return True

    def contains(self, point):
        """Whether a fixed point (one pole per factor) lies on the locus."""
        return any(
            all(piece is Piece.WHOLE or piece is pole for piece, pole in zip(c, point))
            for c in self.components
        )

    def component_name(self, component):
        if not component:
            return "pt"
        return " x ".join(piece_name(p, d) for p, d in zip(component, self.dims))

    @property
    def name(self):
        if self.is_empty:
            return "{}"
        comps = self.sorted_components()
        names = [self.component_name(c) for c in comps]
        points = all(self.component_codim(c) == sum(self.dims) for c in comps)
        if len(names) == 1 and not points:
            return names[0]
        return "{" + ",".join(names) + "}"

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Saturation:
    """One fold step as seen by a locus: multiply by CP^l or S^2l, or pass to a quotient."""

    kind: str
    l: int
    quotient: bool = False
    center: object = None
    label: str = ""


@dataclass(frozen=True)
class SaturatedLocus:
    """The image of a locus of N inside the manifold built from N by one fold step."""

    inner: object
    step: Saturation

    @property
    def is_empty(self):
        return self.inner.is_empty

    @property
    def n_components(self):
        return self.inner.n_components

    @property
    def codim(self):
        return self.inner.codim

    def euler(self):
        chi = self.inner.euler()
        if self.step.kind == "SU":
            value = (self.step.l + 1) * chi
            if self.step.center is not None:
                value -= self.step.l * self.inner.intersect(self.step.center).euler()
            return value
        return chi if self.step.quotient else 2 * chi

    def intersect(self, other):
        if not isinstance(other, SaturatedLocus) or other.step != self.step:
            raise InvalidManifoldError("saturated loci come from different fold steps")
        return SaturatedLocus(self.inner.intersect(other.inner), self.step)

    @property
    def name(self):
        if self.is_empty:
            return "{}"
        return f"{self.step.label}.{self.inner.name}"

    def __str__(self):
        return self.name


# ----------------------------------------------------------------------------
# Expression nodes
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Point(ManifoldExpr):
    pass


@dataclass(frozen=True)
class EvenSphere(ManifoldExpr):
    n: int

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise InvalidManifoldError(f"S^{self.n} is not an even sphere of positive dimension")


@dataclass(frozen=True)
class CP(ManifoldExpr):
    l: int

    def __post_init__(self):
        if self.l < 1:
            raise InvalidManifoldError(f"CP^{self.l} needs l >= 1")


@dataclass(frozen=True)
class Product(ManifoldExpr):
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


@dataclass(frozen=True)
class ConnSumFamily(ManifoldExpr):
    """#_k summand for k >= 1, basepoint for k = 0; k may be a sympy Symbol."""

    summand: ManifoldExpr
    k: object
    basepoint: ManifoldExpr

    def __post_init__(self):
        if dim(self.summand) != dim(self.basepoint):
            raise InvalidManifoldError("connected-sum summand and basepoint differ in dimension")
        if isinstance(self.k, int) and self.k < 0:
            raise InvalidManifoldError(f"connected-sum count must be >= 0, got {self.k}")

    def member(self, k):
        return replace(self, k=int(k))


@dataclass(frozen=True)
class Z2Quotient(ManifoldExpr):
    """S^sphere_dim x_Z2 inner, Z2 antipodal on the sphere and inner_action on inner."""

    sphere_dim: int
    inner: ManifoldExpr
    inner_action: object

    def __post_init__(self):
        if self.sphere_dim < 2 or self.sphere_dim % 2:
            raise InvalidManifoldError(f"S^{self.sphere_dim} is not an even sphere")
        if not z2_reverses(self.inner_action):
            raise InvalidManifoldError(
                "the Z2 action on the inner factor must reverse orientation, "
                "otherwise the quotient is not orientable"
            )


@dataclass(frozen=True)
class ProjBundleSU(ManifoldExpr):
    """H0 x_H1 base: a bundle over CP^l with fibre `base`, twisted by psi."""

    l: int
    base: ManifoldExpr
    psi: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "psi", tuple(self.psi))


@dataclass(frozen=True)
class RP2lBundle(ManifoldExpr):
    l: int
    base: ManifoldExpr


@dataclass(frozen=True)
class BlowDown(ManifoldExpr):
    """Blow-down of a ProjBundleSU or Z2Quotient along a centre locus of its inner part."""

    bundle: ManifoldExpr
    center: object

    def __post_init__(self):
        if not isinstance(self.bundle, (ProjBundleSU, Z2Quotient)):
            raise InvalidManifoldError("only projective bundles and Z2 quotients are blown down")


# ----------------------------------------------------------------------------
# Evaluators
# ----------------------------------------------------------------------------

class SimplyConnected(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def dim(e):
    if isinstance(e, Point):
        return 0
    if isinstance(e, EvenSphere):
        return e.n
    if isinstance(e, CP):
        return 2 * e.l
    if isinstance(e, Product):
        return sum(dim(c) for c in e.children)
    if isinstance(e, ConnSumFamily):
        return dim(e.summand)
    if isinstance(e, Z2Quotient):
        return e.sphere_dim + dim(e.inner)
    if isinstance(e, (ProjBundleSU, RP2lBundle)):
        return 2 * e.l + dim(e.base)
    if isinstance(e, BlowDown):
        return dim(e.bundle)
    raise InvalidManifoldError(f"malformed manifold expression {e!r}")


def exceptional_fibre(e):
    """Fibre of the exceptional set of a blow-down: CP^l or RP^2l."""
    if isinstance(e.bundle, ProjBundleSU):
        return CP(e.bundle.l)
    return RP2lBundle(e.bundle.sphere_dim // 2, Point())


def euler(e):
    """
    Euler characteristic.

    Args:
        e: ManifoldExpr

    Returns:
        int, or a sympy expression in k for a symbolic ConnSumFamily

    Example:
        euler(ConnSumFamily(Product((EvenSphere(2), EvenSphere(4))), sympy.Symbol("k"), EvenSphere(6)))
        # 2*k + 2
    """
    if isinstance(e, Point):
        return 1
    if isinstance(e, EvenSphere):
        return 2
    if isinstance(e, CP):
        return e.l + 1
    if isinstance(e, Product):
        value = 1
        for c in e.children:
            value *= euler(c)
        return value
    if isinstance(e, ConnSumFamily):
        if isinstance(e.k, int):
            if e.k == 0:
                return euler(e.basepoint)
            return e.k * euler(e.summand) - 2 * (e.k - 1)
        return sympy.expand(e.k * euler(e.summand) - 2 * (e.k - 1))
    if isinstance(e, Z2Quotient):
        # diagonal action is free: half of chi(S^2l x N)
        return euler(e.inner)
    if isinstance(e, ProjBundleSU):
        return (e.l + 1) * euler(e.base)
    if isinstance(e, RP2lBundle):
        return euler(e.base)
    if isinstance(e, BlowDown):
        chi_center = e.center.euler()
        return euler(e.bundle) - euler(exceptional_fibre(e)) * chi_center + chi_center
    raise InvalidManifoldError(f"malformed manifold expression {e!r}")


def orientable(e):
    if isinstance(e, (Point, EvenSphere, CP)):
        return True
    if isinstance(e, Product):
        return all(orientable(c) for c in e.children)
    if isinstance(e, ConnSumFamily):
        return orientable(e.summand) and orientable(e.basepoint)
    if isinstance(e, Z2Quotient):
        return z2_reverses(e.inner_action) and orientable(e.inner)
    if isinstance(e, ProjBundleSU):
        return orientable(e.base)
    if isinstance(e, RP2lBundle):
        return False
    if isinstance(e, BlowDown):
        return orientable(e.bundle)
    raise InvalidManifoldError(f"malformed manifold expression {e!r}")


def _all_of(flags):
    flags = list(flags)
    if any(f is SimplyConnected.NO for f in flags):
        return SimplyConnected.NO
    if all(f is SimplyConnected.YES for f in flags):
        return SimplyConnected.YES
    return SimplyConnected.UNKNOWN


def simply_connected(e):
    if isinstance(e, (Point, EvenSphere, CP)):
        return SimplyConnected.YES
    if isinstance(e, Product):
        return _all_of(simply_connected(c) for c in e.children)
    if isinstance(e, ConnSumFamily):
        return _all_of([simply_connected(e.summand), simply_connected(e.basepoint)])
    if isinstance(e, Z2Quotient):
        # double cover by S^2l x N
        return SimplyConnected.NO
    if isinstance(e, ProjBundleSU):
        return simply_connected(e.base)
    if isinstance(e, RP2lBundle):
        if simply_connected(e.base) is SimplyConnected.YES:
            return SimplyConnected.NO
        return SimplyConnected.UNKNOWN
    if isinstance(e, BlowDown):
        if isinstance(e.bundle, ProjBundleSU):
            return simply_connected(e.bundle.base)
        if not e.center.is_empty:
            return simply_connected(e.bundle.inner)
        return SimplyConnected.UNKNOWN
    raise InvalidManifoldError(f"malformed manifold expression {e!r}")


# ----------------------------------------------------------------------------
# Rewriting and names
# ----------------------------------------------------------------------------

def _point_count(locus):
    """Number of components of a catalog locus made of isolated points, else None."""
    if isinstance(locus, CatalogLocus) and all(locus.component_codim(c) == sum(locus.dims) for c in locus.components):
        return locus.n_components
    return None


def _center_shape(locus):
    """The connected manifold a blow-down center is, when it is a point, a CP^l or an S^2l."""
    if isinstance(locus, CatalogLocus):
        return Point() if _point_count(locus) == 1 else None
    inner, step = locus.inner, locus.step
    if step.quotient:
        # the Z2 swaps the two points, their S^2l saturations glue into one sphere
        return EvenSphere(2 * step.l) if _point_count(inner) == 2 else None
    if _center_shape(inner) != Point():
        return None
    if step.kind == "SO":
        return EvenSphere(2 * step.l)
    if step.center is not None and not inner.intersect(step.center).is_empty:
        return Point()
    return CP(step.l)


def _rewrite_projective_blow_down(e):
    bundle = e.bundle
    base = rewrite(bundle.base)
    center = e.center
    l = bundle.l
    if center.is_empty:
        return rewrite(ProjBundleSU(l, base, bundle.psi))
    points = _point_count(center)
    shape = _center_shape(center)
    if base in (EvenSphere(2), CP(1)) and points in (1, 2):
        return CP(l + 1) if points == 1 else EvenSphere(2 * l + 2)
    if isinstance(base, CP) and base.l > 1 and shape == CP(base.l - 1):
        return CP(l + base.l)
    if isinstance(base, EvenSphere) and base.n > 2 and shape == EvenSphere(base.n - 2):
        return EvenSphere(2 * l + base.n)
    return BlowDown(ProjBundleSU(l, base, bundle.psi), center)


def _rewrite_real_blow_down(e):
    quotient = e.bundle
    inner, tag = rewrite_tagged(quotient.inner, quotient.inner_action)
    if (
        e.center.codim == 1
        and isinstance(inner, EvenSphere)
        and tag is Z2Action.REFLECTION
    ):
        return EvenSphere(quotient.sphere_dim + inner.n)
    return BlowDown(Z2Quotient(quotient.sphere_dim, inner, tag), e.center)


def rewrite(e):
    """Apply the naming rewrites bottom-up; rewriting preserves dim and euler."""
    if isinstance(e, Product):
        children = []
        for child in e.children:
            child = rewrite(child)
            if isinstance(child, Product):
                children.extend(child.children)
            elif not isinstance(child, Point):
                children.append(child)
        if not children:
            return Point()
        if len(children) == 1:
            return children[0]
        return Product(tuple(sorted(children, key=render)))
    if isinstance(e, ProjBundleSU):
        base = rewrite(e.base)
        if isinstance(base, Point):
            return CP(e.l)
        return ProjBundleSU(e.l, base, e.psi)
    if isinstance(e, BlowDown):
        if isinstance(e.bundle, ProjBundleSU):
            return _rewrite_projective_blow_down(e)
        if e.center.is_empty:
            return rewrite(e.bundle)
        return _rewrite_real_blow_down(e)
    if isinstance(e, Z2Quotient):
        inner, tag = rewrite_tagged(e.inner, e.inner_action)
        return Z2Quotient(e.sphere_dim, inner, tag)
    if isinstance(e, RP2lBundle):
        return RP2lBundle(e.l, rewrite(e.base))
    if isinstance(e, ConnSumFamily):
        if isinstance(e.k, int) and e.k == 0:
            return rewrite(e.basepoint)
        if isinstance(e.k, int) and e.k == 1:
            return rewrite(e.summand)
        return ConnSumFamily(rewrite(e.summand), e.k, rewrite(e.basepoint))
    return e


def rewrite_tagged(e, tag):
    """Rewrite e and keep a Z2 tag aligned with the rewritten factors."""
    if isinstance(e, Product) and isinstance(tag, Z2Product):
        pairs = []
        for child, child_tag in zip(e.children, tag.tags):
            child, child_tag = rewrite_tagged(child, child_tag)
            if isinstance(child, Product) and isinstance(child_tag, Z2Product):
                pairs.extend(zip(child.children, child_tag.tags))
            elif isinstance(child, Point):
                continue
            else:
                pairs.append((child, child_tag))
        if not pairs:
            return Point(), Z2Action.TRIVIAL
        if len(pairs) == 1:
            return pairs[0]
        pairs.sort(key=lambda pair: render_tagged(*pair))
        return Product(tuple(c for c, _ in pairs)), Z2Product(tuple(t for _, t in pairs))
    return rewrite(e), tag


def _wrap(text):
    return f"({text})" if " " in text else text


def render(e):
    if isinstance(e, Point):
        return "pt"
    if isinstance(e, EvenSphere):
        return f"S^{e.n}"
    if isinstance(e, CP):
        return f"CP^{e.l}"
    if isinstance(e, Product):
        return " x ".join(render(c) for c in e.children)
    if isinstance(e, ProjBundleSU):
        return f"{_wrap(render(e.base))}-bundle over CP^{e.l}"
    if isinstance(e, RP2lBundle):
        if isinstance(e.base, Point):
            return f"RP^{2 * e.l}"
        return f"RP^{2 * e.l}-bundle over {_wrap(render(e.base))}"
    if isinstance(e, Z2Quotient):
        return f"S^{e.sphere_dim}_1 x_{{Z2}} {render_tagged(e.inner, e.inner_action)}"
    if isinstance(e, BlowDown):
        return f"BD({render(e.bundle)}; {e.center.name})"
    if isinstance(e, ConnSumFamily):
        return f"#_{e.k}({render(e.summand)})"
    raise InvalidManifoldError(f"malformed manifold expression {e!r}")


def render_tagged(e, tag):
    if isinstance(e, EvenSphere) and isinstance(tag, Z2Action):
        return f"S^{e.n}{tag.suffix}"
    if isinstance(e, Product) and isinstance(tag, Z2Product):
        return "(" + " x ".join(render_tagged(c, t) for c, t in zip(e.children, tag.tags)) + ")"
    text = _wrap(render(e))
    if z2_is_trivial(tag):
        return text
    return text + ("_1" if z2_is_free(tag) else "_2")


def canonical_name(e):
    return render(rewrite(e))
