from pathlib import Path
import sys

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from torusdash import parse_spec  # noqa: E402
from torusdash.acceptance import reduced_examples, targeted_mutations  # noqa: E402
from torusdash.config import RECORD_FIELDS  # noqa: E402
from torusdash.errors import (  # noqa: E402
    BranchHypothesisError,
    InvalidTupleError,
    SpecMismatchError,
)
from torusdash.fivetuples import (  # noqa: E402
    AdmissibleFiveTuple,
    AdmissiblePair,
    AdmissibleTriple,
    CatalogBase,
    EquivariantBase,
    FoldStep,
    base_expression,
    canonical_key,
    equivalent,
    expand,
    extend,
    fixed_point_count,
    meet_transversely,
    propagate_flags,
    realize,
    reduce,
    to_record,
    to_text,
    validate,
)
from torusdash.liegroups import GroupFactor  # noqa: E402
from torusdash.manifolds import (  # noqa: E402
    CatalogLocus,
    Piece,
    SimplyConnected,
    Z2Action,
    dim,
    euler,
    render,
    rewrite,
)

T, A1, R = "trivial", "antipodal", "reflection"
POINT = CatalogBase()
SPHERE = CatalogBase((2,), (True,))
N = (Piece.NORTH,)
S = (Piece.SOUTH,)
EQUATOR = (Piece.EQUATOR,)


def _sphere(*slot_tags):
    return CatalogBase((2,), (True,), tuple((Z2Action(tag),) for tag in slot_tags))


def _on_sphere(*components):
    return CatalogLocus(frozenset(components), (2,))


def _on_point():
    return CatalogLocus.empty(())


def su3():
    return AdmissibleFiveTuple(parse_spec("SU(3)"), [()], POINT, (_on_point(),))


def su2_t1(w, *components):
    return AdmissibleFiveTuple(parse_spec("SU(2)xT^1"), [w], SPHERE, (_on_sphere(*components),))


def so3_so3(a12):
    spec = parse_spec("SO(3)xSO(3)")
    return AdmissibleFiveTuple(spec, [], CatalogBase((), (), ((), ())), (), (_on_point(), _on_point()), ((a12,), ()))


def so3_t1(tag, *components):
    return AdmissibleFiveTuple(parse_spec("SO(3)xT^1"), [], _sphere(tag), (), (_on_sphere(*components),), ((),))


def test_validate_accepts_su3():
    assert validate(su3()) == []


def test_validate_reports_kernel_gcd():
    assert validate(su2_t1((2,), N)) == ["(3) kernel gcd"]


def test_validate_reports_twisted_a_entry():
    spec = parse_spec("SO(3)xSO(3)xT^1")
    base = _sphere(T, A1)
    t = AdmissibleFiveTuple(spec, [], base, (), (_on_sphere(), _on_sphere()), ((1,), ()))
    assert "5(a)(i)" in validate(t)


def test_validate_reports_shape_errors():
    t = AdmissibleFiveTuple(parse_spec("SU(2)xT^1"), [], SPHERE, ())
    violations = validate(t)
    assert "(1) psi" in violations
    assert "(2) loci count" in violations


def test_validate_so_locus_clauses():
    assert validate(so3_t1(R, EQUATOR)) == []
    assert "(4) fixed" in validate(so3_t1(A1, EQUATOR))
    assert "(4) nontrivial" in validate(so3_t1(T, EQUATOR))
    assert "(4) codim" in validate(so3_t1(R, N, S))


def test_validate_invariance_under_pole_swap():
    spec = parse_spec("SU(2)xSO(3)xT^1")
    t = AdmissibleFiveTuple(spec, [(1,)], _sphere(R), (_on_sphere(N),), (_on_sphere(),), ((),))
    assert "(3) invariance" in validate(t)


def test_equivalence_examples():
    assert equivalent(su2_t1((1,), N), su2_t1((-1,), S))
    assert equivalent(su2_t1((1,), N), su2_t1((1,), N))
    assert not equivalent(su2_t1((1,), N), su2_t1((1,), N, S))
    assert canonical_key(su2_t1((1,), N)) == canonical_key(su2_t1((1,), S))


def test_equivalence_requires_one_spec():
    with pytest.raises(SpecMismatchError):
        equivalent(su3(), su2_t1((1,), N))


def test_realize_examples():
    assert render(realize(su3())) == "CP^2"
    assert render(realize(so3_t1(R, EQUATOR))) == "S^4"
    assert render(realize(su2_t1((1,), N))) == "CP^2"
    assert render(realize(su2_t1((1,), N, S))) == "S^4"
    assert render(realize(so3_so3(1))) == "S^2_1 x_{Z2} S^2_1"


def test_realize_su_so_blow_down_is_a_sphere():
    spec = parse_spec("SU(2)xSO(5)xT^1")
    t = AdmissibleFiveTuple(spec, [(1,)], _sphere(R), (_on_sphere(N, S),), (_on_sphere(EQUATOR),), ((),))
    assert validate(t) == []
    assert render(realize(t)) == "S^8"


def test_realize_rejects_invalid_tuple():
    with pytest.raises(InvalidTupleError) as excinfo:
        realize(su2_t1((2,), N))
    assert excinfo.value.violations == ["(3) kernel gcd"]


def test_reduce_examples():
    spec = parse_spec("SO(3)xSO(5)")
    t = AdmissibleFiveTuple(spec, [], CatalogBase((), (), ((), ())), (), (_on_point(), _on_point()), ((0,), ()))
    assert to_text(reduce(t)) == "({}, S^4, {}, {}, {})"
    assert to_text(reduce(so3_so3(1))) == "({}, S^2_1, {}, {}, {})"

    su2_su2 = AdmissibleFiveTuple(parse_spec("SU(2)xSU(2)"), [(), ()], POINT, (_on_point(), _on_point()))
    reduced = reduce(su2_su2)
    assert to_text(reduced) == "(const, CP^1, {}, {}, {})"
    assert reduced.spec.label == "SU(2)xSU(2)"
    assert [f.label for f in reduced.factors] == ["SU(2)"]
    assert [f.label for f in reduced.peeled] == ["SU(2)"]


def test_reduce_keeps_the_group_and_dimension():
    t = so3_t1(R, EQUATOR)
    reduced = reduce(t)
    assert reduced.spec == t.spec
    assert reduced.k == 0
    assert validate(reduced) == []
    assert dim(realize(reduced)) == 4
    assert render(rewrite(base_expression(reduced)[0])) == "S^4"
    assert to_text(reduced) == "({}, S^4, {}, {}, {})"


@pytest.mark.parametrize(
    "t",
    [su3(), so3_so3(0), so3_so3(1), su2_t1((1,), N), su2_t1((0,)), so3_t1(R, EQUATOR)],
)
def test_expand_inverts_reduce(t):
    reduced = reduce(t)
    assert reduced.is_reduced
    assert equivalent(expand(reduced), t)
    assert equivalent(reduce(expand(reduced)), reduced)
    assert render(realize(reduced)) == render(realize(t))


@pytest.mark.parametrize("s, factor, full", reduced_examples())
def test_directly_built_reduced_tuples(s, factor, full):
    assert validate(s) == []
    assert equivalent(expand(s, factor), full)
    assert equivalent(reduce(expand(s, factor)), s)
    assert equivalent(reduce(full), s)


def test_directly_built_reduced_tuples_render_their_base():
    texts = [to_text(s) for s, _, _ in reduced_examples()]
    assert texts[:4] == [
        "({}, S^4, {}, {}, {})",
        "({}, S^2_1, {}, {}, {})",
        "(const, CP^1, {}, {}, {})",
        "({}, CP^2, {}, {}, {})",
    ]


def test_reduce_to_the_bare_base_and_back():
    spec = parse_spec("SU(2)xSO(3)xT^1")
    t = AdmissibleFiveTuple(spec, [(1,)], _sphere(R), (_on_sphere(N, S),), (_on_sphere(EQUATOR),), ((),))
    bare = reduce(reduce(t))
    assert bare.k == 0
    assert [f.label for f in bare.peeled] == ["SO(3)", "SU(2)"]
    assert render(realize(bare)) == "S^6"
    assert equivalent(expand(expand(bare)), t)


def test_equivalence_compares_designated_factors():
    t = so3_t1(R, EQUATOR)
    with pytest.raises(SpecMismatchError):
        equivalent(reduce(t), t)


def test_validate_checks_the_base_steps():
    spec = parse_spec("SU(2)xT^1")
    bad_weights = AdmissibleFiveTuple(spec, [], EquivariantBase(SPHERE, (FoldStep(GroupFactor("SU", 2), (2,), _on_sphere(N)),)))
    assert validate(bad_weights) == ["base (3) kernel gcd"]

    wrong_factor = AdmissibleFiveTuple(spec, [], EquivariantBase(SPHERE, (FoldStep(GroupFactor("SU", 3), (1,), _on_sphere(N)),)))
    assert validate(wrong_factor) == ["(2) base steps"]


def test_expand_checks_the_peeled_factor():
    with pytest.raises(BranchHypothesisError):
        expand(reduce(su3()), GroupFactor("SU", 2))
    with pytest.raises(BranchHypothesisError):
        expand(reduce(su2_t1((1,), N)), psi=(-1,))


def test_expand_needs_a_peeled_factor():
    torus = AdmissibleFiveTuple(parse_spec("T^1"), [], SPHERE)
    with pytest.raises(BranchHypothesisError):
        expand(torus, GroupFactor("SO", 3), locus=_on_sphere(EQUATOR), tag=(Z2Action.REFLECTION,))


def test_extend_adds_so_factor():
    torus = AdmissibleFiveTuple(parse_spec("T^1"), [], SPHERE)
    t = extend(torus, GroupFactor("SO", 3), locus=_on_sphere(EQUATOR), tag=(Z2Action.REFLECTION,))
    assert t.spec.label == "SO(3)xT^1"
    assert render(realize(t)) == "S^4"


def test_extend_rejects_su_after_so():
    with pytest.raises(BranchHypothesisError):
        extend(so3_t1(R, EQUATOR), GroupFactor("SU", 2), psi=(1,))


def test_extend_rejects_inadmissible_result():
    torus = AdmissibleFiveTuple(parse_spec("T^1"), [], SPHERE)
    with pytest.raises(BranchHypothesisError):
        extend(torus, GroupFactor("SU", 2), psi=(2,), locus=_on_sphere(N))


def test_extend_rejects_reduced_tuple():
    with pytest.raises(BranchHypothesisError):
        extend(reduce(su2_t1((1,), N)), GroupFactor("SU", 2), psi=(1,))


@pytest.mark.parametrize("clause, valid, mutated", targeted_mutations())
def test_single_clause_mutations(clause, valid, mutated):
    assert validate(valid) == []
    assert validate(mutated) == [clause]


def test_meet_transversely():
    W = Piece.WHOLE
    square = CatalogBase((2, 2), (True, True))
    assert meet_transversely(square.locus((Piece.NORTH, W)), square.locus((Piece.EQUATOR, W)))
    assert meet_transversely(square.locus((Piece.NORTH, W)), square.locus((W, Piece.NORTH)))
    assert not meet_transversely(square.locus((Piece.NORTH, W)), square.locus((Piece.NORTH, Piece.EQUATOR)))


def test_validate_reports_a_b_transversality():
    spec = parse_spec("SU(2)xSO(3)xT^1")
    t = AdmissibleFiveTuple(spec, [(1,)], _sphere(R), (_on_sphere(N, S),), (_on_sphere(N, S),), ((),))
    assert "transversality A-B" in validate(t)


def test_triple_and_pair_lift_to_five_tuples():
    triple = AdmissibleTriple((1,), SPHERE, _on_sphere(N))
    assert render(realize(triple.to_five_tuple(parse_spec("SU(2)xT^1")))) == "CP^2"
    pair = AdmissiblePair(_sphere(R), _on_sphere(EQUATOR))
    assert render(realize(pair.to_five_tuple(parse_spec("SO(3)xT^1")))) == "S^4"


@pytest.mark.parametrize(
    "t",
    [su3(), so3_so3(0), so3_so3(1), su2_t1((1,), N), su2_t1((1,), N, S), su2_t1((0,)), so3_t1(R, EQUATOR)],
)
def test_realization_invariants(t):
    e = realize(t)
    assert euler(e) == fixed_point_count(t)
    assert dim(e) == 4


def test_propagate_flags():
    flags = propagate_flags(su3())
    assert flags.quasitoric and flags.cohomology_deg2
    assert flags.simply_connected is SimplyConnected.YES

    flags = propagate_flags(so3_so3(1))
    assert not flags.quasitoric
    assert flags.cohomology_deg2 is None
    assert flags.simply_connected is SimplyConnected.NO

    flags = propagate_flags(su2_t1((1,), N, S))
    assert not flags.quasitoric
    assert flags.simply_connected is SimplyConnected.YES


def test_to_text_and_record():
    t = su2_t1((1,), N)
    assert to_text(t) == "(w=(1), S^2, {N}, {}, {})"
    assert str(so3_so3(1)) == "({}, pt, {}, ({},{}), a_12=1)"

    record = to_record(t)
    assert list(record) == RECORD_FIELDS
    assert record["name"] == "CP^2"
    assert record["chi"] == 3
    assert record["orbit_space_dim"] == 1
    assert record["simply_connected"] == "yes"
    assert record["source"] == "unverified"
