from pathlib import Path
import sys

import pytest
import sympy

sys.path.append(str(Path(__file__).resolve().parents[1]))

from torusdash.errors import InvalidManifoldError  # noqa: E402
from torusdash.manifolds import (  # noqa: E402
    CP,
    BlowDown,
    CatalogLocus,
    ConnSumFamily,
    EvenSphere,
    Piece,
    Point,
    Product,
    ProjBundleSU,
    SaturatedLocus,
    Saturation,
    SimplyConnected,
    Z2Action,
    Z2Product,
    Z2Quotient,
    canonical_name,
    dim,
    euler,
    orientable,
    render,
    rewrite,
    simply_connected,
)


S2 = EvenSphere(2)
N = (Piece.NORTH,)
S = (Piece.SOUTH,)
EQUATOR = (Piece.EQUATOR,)


def _locus(*components, dims=(2,)):
    return CatalogLocus(frozenset(components), dims)


def test_dim():
    assert dim(Point()) == 0
    assert dim(Product((CP(2), EvenSphere(4)))) == 8
    assert dim(Z2Quotient(2, S2, Z2Action.ANTIPODAL)) == 4
    assert dim(ProjBundleSU(2, S2, (1,))) == 6


def test_euler():
    assert euler(Product((CP(1), CP(2)))) == 6
    assert euler(Z2Quotient(2, S2, Z2Action.ANTIPODAL)) == 2
    assert euler(ProjBundleSU(1, S2, (1,))) == 4


def test_euler_of_symbolic_family():
    k = sympy.Symbol("k", integer=True, nonnegative=True)
    family = ConnSumFamily(Product((S2, EvenSphere(4))), k, EvenSphere(6))
    assert sympy.simplify(euler(family) - (2 * k + 2)) == 0
    assert euler(family.member(0)) == 2
    assert euler(family.member(3)) == 8


def test_family_rejects_dimension_mismatch():
    with pytest.raises(InvalidManifoldError):
        ConnSumFamily(Product((S2, S2)), 1, EvenSphere(6))


def test_orientable_and_quotient_rejection():
    assert orientable(EvenSphere(4))
    assert orientable(Z2Quotient(2, S2, Z2Action.ANTIPODAL))
    with pytest.raises(InvalidManifoldError):
        Z2Quotient(2, S2, Z2Action.TRIVIAL)


def test_even_sphere_and_cp_bounds():
    with pytest.raises(InvalidManifoldError):
        EvenSphere(3)
    with pytest.raises(InvalidManifoldError):
        CP(0)


def test_simply_connected():
    assert simply_connected(EvenSphere(4)) is SimplyConnected.YES
    assert simply_connected(Z2Quotient(2, S2, Z2Action.ANTIPODAL)) is SimplyConnected.NO
    blow_down = BlowDown(ProjBundleSU(1, S2, (1,)), _locus(N))
    assert simply_connected(blow_down) is SimplyConnected.YES


def test_projective_blow_down_rewrites():
    assert canonical_name(BlowDown(ProjBundleSU(1, S2, (1,)), _locus(N))) == "CP^2"
    assert canonical_name(BlowDown(ProjBundleSU(2, S2, (1,)), _locus(N))) == "CP^3"
    assert canonical_name(BlowDown(ProjBundleSU(1, S2, (1,)), _locus(N, S))) == "S^4"
    assert canonical_name(BlowDown(ProjBundleSU(3, S2, (1,)), _locus(N, S))) == "S^8"


def test_projective_blow_down_over_folded_bases():
    hyperplane = SaturatedLocus(_locus(S), Saturation("SU", 1, False, _locus(N), "SU(2)"))
    assert canonical_name(BlowDown(ProjBundleSU(1, CP(2), (1,)), hyperplane)) == "CP^3"
    pole_sphere = SaturatedLocus(_locus(N, S), Saturation("SO", 1, True, None, "SO(3)"))
    assert canonical_name(BlowDown(ProjBundleSU(1, EvenSphere(4), (1,)), pole_sphere)) == "S^6"


def test_projective_blow_down_needs_the_right_center():
    # two points have the Euler characteristic of a CP^1 or an S^2 but are neither
    two_points = _locus(N, S)
    assert isinstance(rewrite(BlowDown(ProjBundleSU(1, CP(2), (1,)), two_points)), BlowDown)
    assert isinstance(rewrite(BlowDown(ProjBundleSU(1, EvenSphere(4), (1,)), two_points)), BlowDown)


def test_real_blow_down_rewrite():
    quotient = Z2Quotient(4, S2, Z2Action.REFLECTION)
    assert canonical_name(BlowDown(quotient, _locus(EQUATOR))) == "S^6"


def test_rewrites_preserve_dim_and_euler():
    cases = [
        BlowDown(ProjBundleSU(1, S2, (1,)), _locus(N)),
        BlowDown(ProjBundleSU(2, S2, (1,)), _locus(N, S)),
        BlowDown(Z2Quotient(2, S2, Z2Action.REFLECTION), _locus(EQUATOR)),
        Product((CP(2), Product((Point(), S2)))),
        ProjBundleSU(2, Point()),
    ]
    for e in cases:
        assert dim(rewrite(e)) == dim(e)
        assert euler(rewrite(e)) == euler(e)


def test_render_products_and_bundles():
    assert canonical_name(Product((CP(1), CP(1)))) == "CP^1 x CP^1"
    assert canonical_name(Product((EvenSphere(4), Point(), CP(1)))) == "CP^1 x S^4"
    assert canonical_name(ProjBundleSU(1, Point())) == "CP^1"
    assert render(ProjBundleSU(1, S2, (0,))) == "S^2-bundle over CP^1"
    assert render(ProjBundleSU(1, Product((S2, S2)), (0, 1))) == "(S^2 x S^2)-bundle over CP^1"


def test_render_z2_quotients():
    assert render(Z2Quotient(2, S2, Z2Action.ANTIPODAL)) == "S^2_1 x_{Z2} S^2_1"
    assert render(Z2Quotient(2, S2, Z2Action.REFLECTION)) == "S^2_1 x_{Z2} S^2_2"
    inner = Product((S2, EvenSphere(4)))
    tag = Z2Product((Z2Action.ANTIPODAL, Z2Action.TRIVIAL))
    assert canonical_name(Z2Quotient(2, inner, tag)) == "S^2_1 x_{Z2} (S^2_1 x S^4)"


def test_catalog_locus_names_and_euler():
    assert _locus().name == "{}"
    assert _locus(N).name == "{N}"
    assert _locus(N, S).name == "{N,S}"
    assert _locus(EQUATOR).name == "S^1"
    assert _locus(N, S).euler() == 2
    assert _locus(EQUATOR).euler() == 0
    assert _locus(N).codim == 2


def test_catalog_locus_intersection():
    on_two_spheres = (2, 2)
    whole_times_north = _locus((Piece.WHOLE, Piece.NORTH), dims=on_two_spheres)
    south_times_whole = _locus((Piece.SOUTH, Piece.WHOLE), dims=on_two_spheres)
    meet = whole_times_north.intersect(south_times_whole)
    assert meet.components == frozenset({(Piece.SOUTH, Piece.NORTH)})
    assert not _locus(N, (Piece.WHOLE,)).components_disjoint()
