"""
Acceptance suite behind `torusdash check`.

One function per criterion; each prints its checks and returns True when all
pass. main() prints the summary and returns the exit code.
"""

import itertools
import random
from dataclasses import replace

import sympy

from . import weyl
from .classify import FAMILY_PARAMETER, classify, codim_one_rows, enumerate_tuples, family_answer
from .fivetuples import (
    AdmissibleFiveTuple,
    CatalogBase,
    EquivariantBase,
    FoldStep,
    base_expression,
    expand,
    equivalent,
    fixed_point_count,
    fold_expression,
    propagate_flags,
    realize,
    reduce,
    to_text,
    validate,
)
from .liegroups import (
    GroupFactor,
    GroupSpec,
    PsiHom,
    max_rank_subgroup,
    min_rep_dims,
    normalize_spec,
    orbit_space_dim,
    possible_F_sizes,
    total_rank,
)
from .loaders import parse_spec
from .manifolds import (
    BlowDown,
    CatalogLocus,
    ConnSumFamily,
    EvenSphere,
    Piece,
    Point,
    Product,
    ProjBundleSU,
    Z2Action,
    Z2Quotient,
    dim,
    euler,
    render,
    rewrite,
)

SEED = 20240518

CLASSIFICATION_NAMES = {
    "SU(3)": {"CP^2"},
    "SU(2)xSU(2)": {"CP^1 x CP^1"},
    "SU(2)xT^1": {"S^2-bundle over CP^1", "CP^2", "S^4"},
    "SU(2)xSO(3)": {"CP^1 x S^2"},
    "SO(3)xSO(3)": {"S^2_1 x_{Z2} S^2_1", "S^2 x S^2"},
    "SO(3)xT^1": {"S^2 x S^2", "S^2_1 x_{Z2} S^2_1", "S^2_1 x_{Z2} S^2_2", "S^4"},
}

CODIM_ONE_NAMES = {
    "T^1": ["S^2"],
    "SU(2)xT^1": ["CP^2", "S^4"],
    "SO(3)xT^1": ["S^4"],
    "SU(2)xSU(2)xT^1": ["CP^3"],
    "SU(2)xSO(3)xT^1": ["S^6"],
}

ROUND_TRIP_SPECS = [
    "T^1", "SU(2)", "SU(3)", "SO(3)", "SO(5)",
    "SU(2)xSU(2)", "SU(2)xSO(3)", "SO(3)xSO(3)", "SO(3)xSO(5)",
    "SU(2)xT^1", "SO(3)xT^1", "SU(3)xT^1", "SU(2)xT^2",
    "SU(2)xSU(2)xT^1", "SU(2)xSO(3)xT^1", "SO(3)xSO(3)xT^1",
]

SEMI_SIMPLE_SU_SPECS = ["SU(2)", "SU(3)", "SU(4)", "SU(2)xSU(2)", "SU(2)xSU(3)", "SU(2)xSU(2)xSU(2)"]
SO_SPECS = ["SO(3)", "SO(5)", "SO(4)", "SU(2)xSO(3)", "SO(3)xSO(3)", "SO(3)xT^1", "SU(2)xSO(3)xT^1"]


def _report(ok, message):
    print(f"{'✓' if ok else '✗'} {message}")
    return ok


def _factorial(n):
    value = 1
    for x in range(2, n + 1):
        value *= x
    return value


def _series(l):
    """SU(l+1), SO(2l+1), SO(2l) with their Coxeter type."""
    rows = [("A", GroupFactor("SU", l + 1)), ("B", GroupFactor("SO", 2 * l + 1))]
    if l >= 2:
        rows.append(("D", GroupFactor("SO", 2 * l)))
    return rows


def check_weyl_orders():
    print("\n[1] Weyl group orders")
    expected = {
        "A": lambda l: _factorial(l + 1),
        "B": lambda l: 2 ** l * _factorial(l),
        "D": lambda l: 2 ** (l - 1) * _factorial(l),
    }
    ok = True
    for l in range(1, 6):
        for kind, factor in _series(l):
            size = len(weyl.weyl_group_of(factor))
            ok &= _report(size == expected[kind](l), f"|W({factor.label})| = {size} ({kind}{l})")
    return ok


def check_reflection_fingerprints():
    print("\n[2] Reflection fingerprints")
    expected = {"A": lambda l: l * (l + 1) // 2, "B": lambda l: l * l, "D": lambda l: l * (l - 1)}
    ok = True
    for l in range(1, 6):
        for kind, factor in _series(l):
            refl = weyl.reflections(weyl.weyl_group_of(factor))
            has_type3 = any(weyl.classify_reflection(w) == weyl.ReflectionType.TYPE3 for w in refl)
            good = len(refl) == expected[kind](l) and has_type3 == (kind == "B")
            ok &= _report(good, f"{factor.label}: {len(refl)} reflections, type 3 present: {has_type3}")
    return ok


def _rank_four_factors():
    factors = [GroupFactor("SU", n) for n in range(2, 6)]
    factors += [GroupFactor("SO", n) for n in range(3, 10)]
    factors += [GroupFactor("Sp", 1), GroupFactor("Sp", 2)]
    factors += [GroupFactor("SU", 2, 1), GroupFactor("SO", 3, 2), GroupFactor("SU", 4, 3), GroupFactor("SO", 6, 4)]
    return factors


def check_detection_round_trip():
    print("\n[3] Detection round trip")
    ok = True
    for factor in _rank_four_factors():
        G = weyl.weyl_group_of(factor)
        orbit = frozenset(range(G.degree))
        detected = weyl.detect_factor_type(G, orbit)
        same = normalize_spec(GroupSpec((detected,))) == normalize_spec(GroupSpec((factor,)))
        in_table = detected.f_size in possible_F_sizes(detected)
        ok &= _report(same and in_table, f"{factor.label} -> {detected.label}")
    return ok


def check_static_tables():
    print("\n[4] Static Lie group tables")
    su, so, sp = (lambda n: GroupFactor("SU", n)), (lambda n: GroupFactor("SO", n)), (lambda n: GroupFactor("Sp", n))
    checks = [
        (possible_F_sizes(su(2)), {1, 2}),
        (possible_F_sizes(so(4)), {2}),
        (possible_F_sizes(so(5)), {2}),
        (possible_F_sizes(su(4)), {3, 4}),
        (possible_F_sizes(su(6)), {6}),
        (possible_F_sizes(so(9)), {4}),
        (possible_F_sizes(so(10)), {5}),
        (possible_F_sizes(sp(3)), {3}),
        (min_rep_dims(su(2)), (3, 2)),
        (min_rep_dims(so(5)), (5, 4)),
        (min_rep_dims(su(4)), (6, 4)),
        (min_rep_dims(su(6)), (12, 6)),
        (min_rep_dims(so(9)), (9, 9)),
        (min_rep_dims(so(10)), (10, 10)),
        (min_rep_dims(sp(3)), (7, 6)),
        (max_rank_subgroup(su(2)), ("S(U(1)xU(1))", 2)),
        (max_rank_subgroup(so(5)), ("Spin(4)", 4)),
        (max_rank_subgroup(su(4)), ("S(U(3)xU(1))", 6)),
        (max_rank_subgroup(su(6)), ("S(U(5)xU(1))", 10)),
        (max_rank_subgroup(so(9)), ("Spin(8)", 8)),
        (max_rank_subgroup(so(10)), ("Spin(8)xSpin(2)", 16)),
        (max_rank_subgroup(sp(3)), ("Sp(2)xSp(1)", 8)),
    ]
    ok = True
    for got, want in checks:
        ok &= _report(got == want, f"{got} == {want}")
    return ok


def check_classification_tables():
    print("\n[5] Classification tables")
    ok = True
    for text, names in CLASSIFICATION_NAMES.items():
        got = set(classify(parse_spec(text), 1)["name"])
        ok &= _report(got == names, f"{text}: {sorted(got)}")
    for text, names in CODIM_ONE_NAMES.items():
        got = list(codim_one_rows(classify(parse_spec(text), 1))["name"])
        ok &= _report(got == names, f"{text} codim-one rows: {got}")
    return ok


def _rewrite_instances():
    north = CatalogLocus(frozenset({(Piece.NORTH,)}), (2,))
    poles = CatalogLocus(frozenset({(Piece.NORTH,), (Piece.SOUTH,)}), (2,))
    for l in range(1, 5):
        yield ProjBundleSU(l, Point())
        yield BlowDown(ProjBundleSU(l, EvenSphere(2), (1,)), north)
        yield BlowDown(ProjBundleSU(l, EvenSphere(2), (1,)), poles)
        for m in range(1, 5):
            equator = CatalogLocus(frozenset({(Piece.EQUATOR,)}), (2 * m,))
            yield BlowDown(Z2Quotient(2 * l, EvenSphere(2 * m), Z2Action.REFLECTION), equator)
    for text in ROUND_TRIP_SPECS:
        for t in enumerate_tuples(parse_spec(text), 1):
            yield fold_expression(t)


def check_euler_characteristics():
    print("\n[6] Euler characteristics")
    ok = True
    for l1, l2 in itertools.product(range(1, 4), repeat=2):
        summand = Product((EvenSphere(2 * l1), EvenSphere(2 * l2)))
        family = ConnSumFamily(summand, FAMILY_PARAMETER, EvenSphere(2 * l1 + 2 * l2))
        values = [euler(family.member(k)) for k in range(11)]
        symbolic = sympy.expand(euler(family) - 2 * FAMILY_PARAMETER - 2) == 0
        ok &= _report(
            symbolic and values == [2 * k + 2 for k in range(11)],
            f"{render(family)}: chi = 2k+2 for k <= 10",
        )
    for text in ("SO(4)xT^1", "SO(4)xSO(4)", "SO(4)xSO(6)"):
        family = family_answer(parse_spec(text))
        ok &= _report(euler(family.member(0)) == 2, f"{text}: {render(family)} or {render(family.basepoint)}")
    bad = [e for e in _rewrite_instances() if (euler(e), dim(e)) != (euler(rewrite(e)), dim(rewrite(e)))]
    ok &= _report(not bad, f"rewrites preserve chi and dim ({len(bad)} failures)")
    return ok


def _random_spec(rng):
    pool = [GroupFactor("SU", n) for n in range(2, 6)] + [GroupFactor("SO", n) for n in range(3, 10)]
    factors = tuple(rng.choice(pool) for _ in range(rng.randint(1, 3)))
    return GroupSpec(factors, rng.randint(0, 2))


def check_orbit_space_dim():
    print("\n[7] Orbit space dimension")
    rng = random.Random(SEED)
    ok = True
    for _ in range(20):
        spec = normalize_spec(_random_spec(rng))
        reduced = normalize_spec(spec, reduce_so_even=True)
        expected = spec.l0 + len(spec.so_even_factors)
        good = (
            orbit_space_dim(spec) == expected
            and orbit_space_dim(reduced) == expected
            and total_rank(reduced) == total_rank(spec)
        )
        ok &= _report(good, f"{spec.label}: orbit space dim {orbit_space_dim(spec)} (via {reduced.label})")
    return ok


def _catalog(l0, *slots):
    """l0 circle S^2 factors (a point when l0 = 0) with one Z2 tag tuple per SO(odd) slot."""
    return CatalogBase((2,) * l0, (True,) * l0, slots)


def reduced_examples():
    """(reduced tuple built directly on its base, its peeled factor, the expected full tuple)."""
    N, S, EQ = Piece.NORTH, Piece.SOUTH, Piece.EQUATOR
    point, points = _catalog(0), _catalog(0, (), ())
    sphere, reflected = _catalog(1), _catalog(1, (Z2Action.REFLECTION,))
    empty = point.locus()
    cases = []
    for factor, a12 in ((GroupFactor("SO", 5), 0), (GroupFactor("SO", 3), 1)):
        spec = parse_spec(f"SO(3)x{factor.label}")
        step = FoldStep(factor, (), empty, (a12,), 1)
        s = AdmissibleFiveTuple(spec, [], EquivariantBase(points, (step,)), (), (empty,), ((),))
        full = AdmissibleFiveTuple(spec, [], points, (), (empty, empty), ((a12,), ()))
        cases.append((s, factor, full))

    su2 = GroupFactor("SU", 2)
    spec = parse_spec("SU(2)xSU(2)")
    s = AdmissibleFiveTuple(spec, [()], EquivariantBase(point, (FoldStep(su2, (), empty),)), (empty,))
    cases.append((s, su2, AdmissibleFiveTuple(spec, [(), ()], point, (empty, empty))))

    spec = parse_spec("SU(2)xT^1")
    s = AdmissibleFiveTuple(spec, [], EquivariantBase(sphere, (FoldStep(su2, (1,), sphere.locus((N,))),)))
    cases.append((s, su2, AdmissibleFiveTuple(spec, [(1,)], sphere, (sphere.locus((N,)),))))

    so3 = GroupFactor("SO", 3)
    spec = parse_spec("SO(3)xT^1")
    s = AdmissibleFiveTuple(spec, [], EquivariantBase(reflected, (FoldStep(so3, (), reflected.locus((EQ,)), (), 0),)))
    full = AdmissibleFiveTuple(spec, [], reflected, (), (reflected.locus((EQ,)),), ((),))
    cases.append((s, so3, full))

    spec = parse_spec("SU(2)xSO(3)xT^1")
    s = AdmissibleFiveTuple(
        spec, [(1,)], EquivariantBase(reflected, (FoldStep(so3, (), reflected.locus((EQ,)), (), 0),)),
        (reflected.locus((N,), (S,)),),
    )
    full = AdmissibleFiveTuple(
        spec, [(1,)], reflected, (reflected.locus((N,), (S,)),), (reflected.locus((EQ,)),), ((),),
    )
    cases.append((s, so3, full))
    return cases


def _peel_chain(t):
    """Peel t down to no designated factor, checking every stage against the previous one."""
    expr = realize(t)
    good = euler(expr) == fixed_point_count(t) and dim(expr) == 2 * total_rank(t.spec)
    current = t
    while current.k:
        reduced = reduce(current)
        base, _ = base_expression(reduced)
        carried = total_rank(t.spec) - sum(f.rank for f in reduced.factors)
        good &= (
            validate(reduced) == []
            and reduced.spec == t.spec
            and dim(realize(reduced)) == dim(expr)
            and render(realize(reduced)) == render(expr)
            and dim(base) == 2 * carried
            and equivalent(expand(reduced), current)
            and equivalent(reduce(expand(reduced)), reduced)
        )
        current = reduced
    return good


def check_round_trip():
    print("\n[8] Reduce / expand round trip")
    ok = True
    for text in ROUND_TRIP_SPECS:
        tuples = enumerate_tuples(parse_spec(text), 1)
        good = all(_peel_chain(t) for t in tuples)
        ok &= _report(good, f"{text}: {len(tuples)} tuples peeled to their bases")
    for s, factor, full in reduced_examples():
        expanded = expand(s, factor)
        good = (
            validate(s) == []
            and equivalent(expanded, full)
            and equivalent(reduce(expanded), s)
            and equivalent(reduce(full), s)
            and render(realize(s)) == render(realize(full))
        )
        ok &= _report(good, f"{s.spec.label}: {to_text(s)} expands by {factor.label} to {to_text(expanded)}")
    return ok


def targeted_mutations():
    """(clause, admissible tuple, the same tuple with only that clause broken)."""
    N, S, EQ, W = Piece.NORTH, Piece.SOUTH, Piece.EQUATOR, Piece.WHOLE
    T, AP, RF = Z2Action.TRIVIAL, Z2Action.ANTIPODAL, Z2Action.REFLECTION
    cases = []

    square = _catalog(2)
    t = AdmissibleFiveTuple(parse_spec("SU(2)xT^2"), [(1, 0)], square, (square.locus((N, W)),))
    cases.append(("(3) codim", t, replace(t, A=(square.locus((N, EQ)),))))
    cases.append(("(3) psi-fixed", t, replace(t, psi=PsiHom(((1, 1),)))))

    sphere = _catalog(1)
    t = AdmissibleFiveTuple(parse_spec("SU(2)xT^1"), [(1,)], sphere, (sphere.locus((N,)),))
    cases.append(("(3) kernel gcd", t, replace(t, psi=PsiHom(((2,),)))))

    reflected = _catalog(1, (RF,))
    t = AdmissibleFiveTuple(
        parse_spec("SU(2)xSO(3)xT^1"), [(1,)], reflected,
        (reflected.locus((N,), (S,)),), (reflected.locus(),), ((),),
    )
    cases.append(("(3) invariance", t, replace(t, A=(reflected.locus((N,)),))))

    antipodal = _catalog(1, (AP,))
    t = AdmissibleFiveTuple(parse_spec("SO(3)xT^1"), [], antipodal, (), (antipodal.locus(),), ((),))
    cases.append(("(4) fixed", t, replace(t, B=(antipodal.locus((EQ,)),))))

    plain = _catalog(1, (T,))
    t = AdmissibleFiveTuple(parse_spec("SO(3)xT^1"), [], plain, (), (plain.locus(),), ((),))
    cases.append(("(4) nontrivial", t, replace(t, B=(plain.locus((EQ,)),))))

    half = _catalog(2, (RF, T))
    t = AdmissibleFiveTuple(parse_spec("SO(3)xT^2"), [], half, (), (half.locus(),), ((),))
    cases.append(("(4) codim", t, replace(t, B=(half.locus((EQ, N)),))))
    cases.append(("5(b) parity", t, replace(t, base=_catalog(2, (RF, RF)))))

    pair = _catalog(1, (T,), (T,))
    t = AdmissibleFiveTuple(parse_spec("SO(3)xSO(3)xT^1"), [], pair, (), (pair.locus(),) * 2, ((1,), ()))
    cases.append(("5(a)(i)", t, replace(t, base=_catalog(1, (T,), (AP,)))))

    points = _catalog(0, (), (), ())
    t = AdmissibleFiveTuple(parse_spec("SO(3)xSO(3)xSO(3)"), [], points, (), (points.locus(),) * 3, ((1, 0), (0,), ()))
    cases.append(("5(a)(ii)", t, replace(t, a=((1, 0), (1,), ()))))
    cases.append(("5(c) parity", t, replace(t, a=((1, 1), (0,), ()))))

    triple = _catalog(1, (RF,), (T,), (T,))
    t = AdmissibleFiveTuple(
        parse_spec("SO(3)xSO(3)xSO(3)xT^1"), [], triple, (), (triple.locus(),) * 3, ((1, 1), (0,), ()),
    )
    cases.append(("5(a)(iii)", t, replace(t, B=(triple.locus((EQ,)),) + t.B[1:])))

    t = AdmissibleFiveTuple(parse_spec("SU(2)xSU(2)xT^1"), [(1,), (1,)], sphere, (sphere.locus((N,)), sphere.locus((S,))))
    cases.append(("transversality A", t, replace(t, A=(sphere.locus((N,)),) * 2)))

    mirrored = _catalog(1, (RF,), (RF,))
    t = AdmissibleFiveTuple(
        parse_spec("SO(3)xSO(3)xT^1"), [], mirrored, (), (mirrored.locus((EQ,)), mirrored.locus()), ((0,), ()),
    )
    cases.append(("transversality B", t, replace(t, B=(mirrored.locus((EQ,)),) * 2)))
    return cases


def _mutations(t):
    catalog = t.catalog
    options = []
    for i, locus in enumerate(t.A):
        extra = [c for c in itertools.product(Piece, repeat=len(catalog.dims)) if locus.component_codim(c) != 2]
        options.append(("grow A", i, extra[0]))
        if not locus.is_empty:
            options.append(("double psi", i, None))
    for j, locus in enumerate(t.B):
        extra = [c for c in itertools.product(Piece, repeat=len(catalog.dims)) if locus.component_codim(c) != 1]
        options.append(("grow B", j, extra[0]))
        if t.a[j] and not all(tag is Z2Action.TRIVIAL for tag in catalog.tags[j]):
            options.append(("flip a", j, None))
    return options


def _grown(locus, component):
    return CatalogLocus(locus.components | {component}, locus.dims)


def _apply(t, mutation):
    kind, index, component = mutation
    if kind == "grow A":
        A = list(t.A)
        A[index] = _grown(A[index], component)
        return replace(t, A=tuple(A))
    if kind == "grow B":
        B = list(t.B)
        B[index] = _grown(B[index], component)
        return replace(t, B=tuple(B))
    if kind == "double psi":
        weights = list(t.psi.weights)
        weights[index] = tuple(2 * x for x in weights[index])
        return replace(t, psi=PsiHom(tuple(weights)))
    rows = [list(row) for row in t.a]
    rows[index][0] = 1 - rows[index][0]
    return replace(t, a=tuple(tuple(r) for r in rows))


def check_validator_necessity():
    print("\n[9] Validator necessity")
    ok = True
    for clause, valid, mutated in targeted_mutations():
        found = validate(mutated)
        ok &= _report(validate(valid) == [] and found == [clause], f"{mutated.spec.label} breaking {clause}: {found}")
    rng = random.Random(SEED)
    pool = [t for text in ROUND_TRIP_SPECS for t in enumerate_tuples(parse_spec(text), 1) if t.k]
    caught = 0
    for _ in range(200):
        t = rng.choice(pool)
        mutation = rng.choice(_mutations(t))
        caught += bool(validate(_apply(t, mutation)))
    ok &= _report(caught == 200, f"{caught}/200 randomly mutated tuples rejected")
    return ok


def check_flag_propagation():
    print("\n[10] Flag propagation")
    ok = True
    for text in SEMI_SIMPLE_SU_SPECS:
        spec = parse_spec(text)
        tuples = enumerate_tuples(spec, 1)
        expected = " x ".join(sorted(f"CP^{f.l}" for f in spec.factors))
        good = len(tuples) == 1 and propagate_flags(tuples[0]).quasitoric and render(realize(tuples[0])) == expected
        ok &= _report(good, f"{text}: {[render(realize(t)) for t in tuples]} quasitoric")
    for text in SO_SPECS:
        flags = [propagate_flags(t).quasitoric for t in enumerate_tuples(parse_spec(text), 1)]
        ok &= _report(not any(flags), f"{text}: not quasitoric")
    return ok


CRITERIA = [
    ("Weyl group orders", check_weyl_orders),
    ("Reflection fingerprints", check_reflection_fingerprints),
    ("Detection round trip", check_detection_round_trip),
    ("Static tables", check_static_tables),
    ("Classification tables", check_classification_tables),
    ("Euler characteristics", check_euler_characteristics),
    ("Orbit space dimension", check_orbit_space_dim),
    ("Reduce/expand round trip", check_round_trip),
    ("Validator necessity", check_validator_necessity),
    ("Flag propagation", check_flag_propagation),
]


def main():
    print("=" * 60)
    print("Acceptance Suite")
    print("=" * 60)

    results = [(name, check()) for name, check in CRITERIA]

    print("\n" + "=" * 60)
    print("Summary")
    print("=" * 60)
    all_passed = True
    for name, passed in results:
        print(f"{'✓ PASS' if passed else '✗ FAIL'}: {name}")
        all_passed &= passed
    print("=" * 60)

    if all_passed:
        print("✓ All criteria passed!")
        return 0
    print("✗ Some criteria failed")
    return 1
