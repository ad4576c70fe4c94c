"""
Signed-permutation reflection groups acting on characteristic submanifolds.

An element of a Weyl group W(G) permutes the characteristic submanifolds
M_1..M_m of a torus manifold and may reverse their orientations. It is stored
as a signed permutation: column i of its matrix has the entry signs[i] in row
perm[i]. Indices are 0-based; rendering is 1-based.
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import config
from .errors import (
    DegreeMismatchError,
    GroupSizeError,
    IndexAssignmentError,
    MixedReflectionCountError,
    OrbitMismatchError,
)
from .liegroups import GroupFactor, default_f_size, possible_F_sizes

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class SignedPermutation:
    perm: tuple
    signs: tuple

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        signs = tuple(int(s) for s in self.signs)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"perm must be a bijection of 0..{len(perm) - 1}, got {perm}")
        if len(signs) != len(perm) or any(s not in (1, -1) for s in signs):
            raise ValueError(f"signs must be {len(perm)} entries of +1/-1, got {signs}")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "signs", signs)

    @property
    def degree(self):
        return len(self.perm)

    def __call__(self, i):
        return self.perm[i]

    def __mul__(self, other):
        return compose(self, other)

    def __repr__(self):
        cells = [
            f"{i + 1}->{'+' if s > 0 else '-'}{p + 1}"
            for i, (p, s) in enumerate(zip(self.perm, self.signs))
            if p != i or s < 0
        ]
        return "SignedPermutation(" + (", ".join(cells) if cells else "id") + ")"


def identity(m):
    return SignedPermutation(tuple(range(m)), (1,) * m)


def transposition(m, i, j, sign=1):
    """f_{ij+} (sign=1) or f_{ij-} (sign=-1): swap i and j."""
    perm = list(range(m))
    perm[i], perm[j] = j, i
    signs = [1] * m
    signs[i] = signs[j] = sign
    return SignedPermutation(tuple(perm), tuple(signs))


def sign_flip(m, i):
    """g_i: fix every index, reverse the orientation at i."""
    signs = [1] * m
    signs[i] = -1
    return SignedPermutation(tuple(range(m)), tuple(signs))


def compose(a, b):
    """Apply b, then a."""
    if a.degree != b.degree:
        raise DegreeMismatchError(f"cannot compose degree {a.degree} with degree {b.degree}")
    perm = tuple(a.perm[b.perm[i]] for i in range(b.degree))
    signs = tuple(b.signs[i] * a.signs[b.perm[i]] for i in range(b.degree))
    return SignedPermutation(perm, signs)


def inverse(g):
    perm = [0] * g.degree
    signs = [1] * g.degree
    for i, (p, s) in enumerate(zip(g.perm, g.signs)):
        perm[p] = i
        signs[p] = s
    return SignedPermutation(tuple(perm), tuple(signs))


def matrix(g):
    """Signed permutation matrix of g as an integer numpy array."""
    mat = np.zeros((g.degree, g.degree), dtype=int)
    mat[list(g.perm), list(range(g.degree))] = g.signs
    return mat


def signed_trace(g):
    return sum(s for i, (p, s) in enumerate(zip(g.perm, g.signs)) if p == i)


def order(g):
    e = identity(g.degree)
    power, k = g, 1
    while power != e:
        power = compose(g, power)
        k += 1
    return k


class ReflectionType(Enum):
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    TYPE3 = "Type3"
    NOT_REFLECTION = "NotReflection"


def classify_reflection(g):
    """Reflections are the order-2 elements of signed trace m - 2."""
    if g == identity(g.degree) or compose(g, g) != identity(g.degree):
        return ReflectionType.NOT_REFLECTION
    if signed_trace(g) != g.degree - 2:
        return ReflectionType.NOT_REFLECTION
    moved = [i for i, p in enumerate(g.perm) if p != i]
    if len(moved) == 2:
        if all(g.signs[i] > 0 for i in moved):
            return ReflectionType.TYPE1
        if all(g.signs[i] < 0 for i in moved):
            return ReflectionType.TYPE2
        return ReflectionType.NOT_REFLECTION
    if not moved and g.signs.count(-1) == 1:
        return ReflectionType.TYPE3
    return ReflectionType.NOT_REFLECTION


def support(g):
    """Indices moved or sign-reversed by g."""
    return frozenset(i for i, (p, s) in enumerate(zip(g.perm, g.signs)) if p != i or s < 0)


@dataclass(frozen=True)
class ReflectionGroup:
    degree: int
    generators: tuple
    elements: tuple
    size_cap: int = config.SIZE_CAP

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in set(self.elements)


def enumerate_group(generators, size_cap=config.SIZE_CAP, degree=None):
    """
    Close a generating set under composition.

    Args:
        generators: Iterable of SignedPermutation of one common degree
        size_cap: Largest group size accepted before giving up
        degree: Required when generators is empty

    Returns:
        ReflectionGroup with elements sorted lexicographically on (perm, signs)

    Example:
        enumerate_group([transposition(2, 0, 1)], 10)  # order 2
    """
    generators = tuple(generators)
    if size_cap < 1:
        raise ValueError(f"size_cap must be positive, got {size_cap}")
    degrees = {g.degree for g in generators}
    if degree is not None:
        degrees.add(degree)
    if len(degrees) > 1:
        raise DegreeMismatchError(f"generators have mixed degrees {sorted(degrees)}")
    if not degrees:
        raise DegreeMismatchError("degree is required for an empty generating set")
    m = degrees.pop()

    e = identity(m)
    seen = {e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = compose(s, g)
            if h not in seen:
                seen.add(h)
                if len(seen) > size_cap:
                    raise GroupSizeError(
                        f"group generated on {m} letters exceeds size_cap={size_cap}"
                    )
                queue.append(h)

    elements = tuple(sorted(seen))
    LOGGER.debug("enumerated group of order %d on %d letters", len(elements), m)
    return ReflectionGroup(m, generators, elements, size_cap)


def reflections(G):
    return [g for g in G.elements if classify_reflection(g) != ReflectionType.NOT_REFLECTION]


@dataclass(frozen=True)
class OrbitPartition:
    """F_0 (fixed with orientation kept by every element) and the orbits F_1..F_k."""

    fixed_preserved: frozenset
    orbits: tuple


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


def orbit_partition(G):
    indices = range(G.degree)
    fixed = frozenset(
        i for i in indices
        if all(g.perm[i] == i and g.signs[i] > 0 for g in G.elements)
    )
    moving = [i for i in indices if i not in fixed]
    uf = UnionFind(moving)
    for g in G.generators:
        for i in moving:
            uf.union(i, g.perm[i])
    groups = {}
    for i in moving:
        groups.setdefault(uf.find(i), set()).add(i)
    orbits = tuple(sorted((frozenset(o) for o in groups.values()), key=min))
    return OrbitPartition(fixed, orbits)


def _orbit_of(G, j):
    for orbit in orbit_partition(G).orbits:
        if j in orbit:
            return orbit
    return None


def reflection_count_between(G, j1, j2):
    """Number of reflections w with w(j1) = j2."""
    if j1 == j2:
        raise ValueError("reflection_count_between needs two distinct indices")
    orbit = _orbit_of(G, j1)
    if orbit is None or j2 not in orbit:
        raise OrbitMismatchError(f"indices {j1 + 1} and {j2 + 1} lie in different orbits")
    return sum(1 for w in reflections(G) if w.perm[j1] == j2)


def detect_factor_type(G, orbit):
    """
    Read off the elementary factor acting on one non-F_0 orbit.

    Args:
        G: Enumerated ReflectionGroup
        orbit: Iterable of 0-based indices forming one orbit of G

    Returns:
        GroupFactor with f_size set to #orbit

    Example:
        detect_factor_type(weyl_group_of(GroupFactor("SO", 5)), {0, 1})  # SO(5)#2
    """
    orbit = frozenset(orbit)
    partition = orbit_partition(G)
    if orbit not in partition.orbits:
        raise OrbitMismatchError(f"{sorted(i + 1 for i in orbit)} is not an orbit of the group")

    size = len(orbit)
    refl = reflections(G)
    if size == 1:
        # fixed index with reversed orientation
        factor = GroupFactor("SO", 3, f_size=1)
    else:
        counts = {
            sum(1 for w in refl if w.perm[j1] == j2)
            for j1, j2 in itertools.permutations(sorted(orbit), 2)
        }
        if len(counts) != 1:
            raise MixedReflectionCountError(
                f"orbit {sorted(i + 1 for i in orbit)} has reflection counts {sorted(counts)}"
            )
        count = counts.pop()
        if count == 1:
            factor = GroupFactor("SU", size, f_size=size)
        elif count == 2:
            has_type3 = any(
                classify_reflection(w) == ReflectionType.TYPE3 and support(w) <= orbit
                for w in refl
            )
            n = 2 * size + 1 if has_type3 else 2 * size
            factor = GroupFactor("SO", n, f_size=size)
        else:
            raise MixedReflectionCountError(
                f"orbit {sorted(i + 1 for i in orbit)} has {count} reflections per pair"
            )

    if factor.f_size not in possible_F_sizes(factor):
        raise MixedReflectionCountError(f"detected {factor.label} contradicts the #F table")
    return factor


def _weyl_generators(kind, f, degree, indices):
    def lift(g):
        # act on the assigned indices, identity elsewhere
        perm = list(range(degree))
        signs = [1] * degree
        for local, target in enumerate(indices):
            perm[target] = indices[g.perm[local]]
            signs[target] = g.signs[local]
        return SignedPermutation(tuple(perm), tuple(signs))

    pairs = list(itertools.combinations(range(f), 2))
    if kind == "A":
        local = [transposition(f, i, j, 1) for i, j in pairs]
    elif kind == "D":
        local = [transposition(f, i, j, s) for i, j in pairs for s in (1, -1)]
    else:
        local = [transposition(f, i, j, s) for i, j in pairs for s in (1, -1)]
        local.append(sign_flip(f, 0))
    return [lift(g) for g in local]


def weyl_type(factor):
    """Coxeter type (A, B or D) and degree of the Weyl group action of a factor."""
    f = default_f_size(factor)
    kind = factor.kind
    if kind == "SU":
        if f == factor.n:
            return "A", f
        return ("B", f) if factor.n == 2 else ("D", f)
    if kind in ("SO", "Spin"):
        if factor.n == 3 and f == 2:
            return "A", 2
        if factor.n == 6 and f == 4:
            return "A", 4
        return ("B", f) if factor.n % 2 == 1 else ("D", f)
    if kind == "Sp":
        return ("A", 2) if factor.n == 1 and f == 2 else ("B", f)
    raise IndexAssignmentError(f"{factor.label} has no Weyl group action on characteristic submanifolds")


def weyl_group_of(factor, degree=None, indices=None, size_cap=config.SIZE_CAP):
    """
    Standard Weyl group of one factor acting on assigned indices.

    Args:
        factor: GroupFactor of kind SU, SO, Spin or Sp
        degree: Total number of indices m (default: #F of the factor)
        indices: The #F indices the factor acts on (default: 0..#F-1)
        size_cap: Enumeration cap

    Returns:
        ReflectionGroup

    Example:
        len(weyl_group_of(GroupFactor("SO", 7)))  # 48
    """
    kind, f = weyl_type(factor)
    indices = tuple(range(f)) if indices is None else tuple(indices)
    degree = f if degree is None else degree
    if len(indices) != f:
        raise IndexAssignmentError(f"{factor.label} acts on {f} indices, got {len(indices)}")
    if len(set(indices)) != len(indices):
        raise IndexAssignmentError(f"index overlap in {[i + 1 for i in indices]}")
    if any(i < 0 or i >= degree for i in indices):
        raise IndexAssignmentError(f"indices {[i + 1 for i in indices]} do not fit in degree {degree}")
    return enumerate_group(_weyl_generators(kind, f, degree, indices), size_cap, degree=degree)


def spec_weyl_group(spec, extra_fixed=0, size_cap=config.SIZE_CAP):
    """Weyl group of a whole spec on disjoint index blocks plus extra F_0 indices."""
    blocks = []
    for factor in spec.factors:
        if factor.kind == "T":
            continue
        blocks.append((factor, weyl_type(factor)[1]))
    degree = sum(f for _, f in blocks) + extra_fixed
    generators = []
    start = 0
    for factor, f in blocks:
        kind, _ = weyl_type(factor)
        generators.extend(_weyl_generators(kind, f, degree, tuple(range(start, start + f))))
        start += f
    return enumerate_group(generators, size_cap, degree=degree)


def elementary_factors(G):
    """
    Split W into the factors W_i acting on the orbits F_i.

    Each W_i is generated by the reflections whose support lies in F_i; the
    product of their orders must equal |W|.
    """
    refl = reflections(G)
    factors = {}
    for orbit in orbit_partition(G).orbits:
        gens = [w for w in refl if support(w) <= orbit]
        factors[orbit] = enumerate_group(gens, G.size_cap, degree=G.degree)
    product = 1
    for H in factors.values():
        product *= len(H)
    if product != len(G):
        raise MixedReflectionCountError(
            f"orbit factors have total order {product}, group has order {len(G)}"
        )
    return factors


def acts_transitively(H, orbit):
    orbit = frozenset(orbit)
    start = min(orbit)
    return {g.perm[start] for g in H.elements} == orbit


def detect_factors(G):
    """One detected factor per non-F_0 orbit, in orbit order."""
    return [detect_factor_type(G, orbit) for orbit in orbit_partition(G).orbits]
