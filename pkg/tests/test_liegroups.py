from pathlib import Path
import sys

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from torusdash import (  # noqa: E402
    GroupFactor,
    GroupSpec,
    PsiHom,
    max_rank_subgroup,
    min_rep_dims,
    normalize_spec,
    orbit_space_dim,
    possible_F_sizes,
)
from torusdash.errors import UnsupportedFactorError  # noqa: E402
from torusdash.liegroups import (  # noqa: E402
    default_f_size,
    psi_kernel_is_su,
    psi_sign_choices,
    total_rank,
)


def test_possible_f_sizes():
    assert possible_F_sizes(GroupFactor("SU", 4)) == {3, 4}
    assert possible_F_sizes(GroupFactor("SU", 5)) == {5}
    assert possible_F_sizes(GroupFactor("Spin", 9)) == {4}
    assert possible_F_sizes(GroupFactor("SU", 2)) == {1, 2}
    assert possible_F_sizes(GroupFactor("Sp", 3)) == {3}


def test_min_rep_dims():
    assert min_rep_dims(GroupFactor("SU", 4)) == (6, 4)
    assert min_rep_dims(GroupFactor("Spin", 8)) == (8, 8)
    assert min_rep_dims(GroupFactor("SU", 2)) == (3, 2)
    assert min_rep_dims(GroupFactor("Sp", 3)) == (7, 6)


def test_max_rank_subgroup():
    assert max_rank_subgroup(GroupFactor("SU", 3)) == ("S(U(2)xU(1))", 4)
    assert max_rank_subgroup(GroupFactor("Spin", 7)) == ("Spin(6)", 6)
    assert max_rank_subgroup(GroupFactor("Sp", 3)) == ("Sp(2)xSp(1)", 8)
    assert max_rank_subgroup(GroupFactor("SO", 10)) == ("Spin(8)xSpin(2)", 16)


def test_max_rank_subgroup_has_no_spin4_row():
    with pytest.raises(UnsupportedFactorError):
        max_rank_subgroup(GroupFactor("SO", 4))


def test_factor_rejects_bad_flag_and_kind():
    with pytest.raises(UnsupportedFactorError):
        GroupFactor("SU", 5, f_size=3)
    with pytest.raises(UnsupportedFactorError):
        GroupFactor("G", 2)
    with pytest.raises(UnsupportedFactorError):
        GroupFactor("SU", 1)


def test_default_f_size_convention():
    assert default_f_size(GroupFactor("SU", 2)) == 2
    assert default_f_size(GroupFactor("SO", 3)) == 1
    assert default_f_size(GroupFactor("SU", 4)) == 4
    assert default_f_size(GroupFactor("SO", 6)) == 3


def test_normalize_spin_and_torus():
    spec = normalize_spec(GroupSpec((GroupFactor("Spin", 5),)))
    assert spec == GroupSpec((GroupFactor("SO", 5),), 0)

    torus = normalize_spec(GroupSpec((), 2))
    assert torus == GroupSpec((), 2)
    assert torus.label == "T^2"


def test_normalize_reduces_so_even():
    spec = normalize_spec(GroupSpec((GroupFactor("SO", 4),)), reduce_so_even=True)
    assert spec == GroupSpec((GroupFactor("SU", 2),), 1)


@pytest.mark.parametrize(
    "factor, expected",
    [
        (GroupFactor("SU", 2, 1), GroupFactor("SO", 3)),
        (GroupFactor("SO", 3, 2), GroupFactor("SU", 2)),
        (GroupFactor("SU", 4, 3), GroupFactor("SO", 6)),
        (GroupFactor("SO", 6, 4), GroupFactor("SU", 4)),
        (GroupFactor("Sp", 1), GroupFactor("SU", 2)),
        (GroupFactor("Sp", 2), GroupFactor("SO", 5)),
    ],
)
def test_normalize_applies_f_size_convention(factor, expected):
    assert normalize_spec(GroupSpec((factor,))).factors == (expected,)


def test_normalize_orders_factors():
    spec = normalize_spec(GroupSpec((
        GroupFactor("SO", 5), GroupFactor("T", 1), GroupFactor("SU", 3), GroupFactor("SO", 3),
    )))
    assert spec.label == "SU(3)xSO(3)xSO(5)xT^1"


def test_normalize_rejects_large_sp():
    with pytest.raises(UnsupportedFactorError):
        normalize_spec(GroupSpec((GroupFactor("Sp", 3),)))


def test_orbit_space_dim():
    assert orbit_space_dim(GroupSpec((GroupFactor("SU", 3),), 0)) == 0
    assert orbit_space_dim(GroupSpec((GroupFactor("SO", 4), GroupFactor("SO", 6)), 1)) == 3
    assert orbit_space_dim(GroupSpec((GroupFactor("SO", 5),), 2)) == 2


def test_total_rank():
    assert total_rank(GroupSpec((GroupFactor("SU", 3), GroupFactor("SO", 5)), 1)) == 5


def test_psi_kernel_is_su():
    assert psi_kernel_is_su((1,))
    assert psi_kernel_is_su((2, 3))
    assert not psi_kernel_is_su((2, 4))
    assert not psi_kernel_is_su((0, 0))


def test_psi_sign_choices():
    assert psi_sign_choices(GroupFactor("SU", 2)) == (1, -1)
    assert psi_sign_choices(GroupFactor("SU", 3)) == (1,)


def test_psi_hom():
    psi = PsiHom([[1, 0], [0, 0]])
    assert len(psi) == 2
    assert psi[0] == (1, 0)
    assert not psi.is_trivial
    assert PsiHom([(0,)]).is_trivial
    with pytest.raises(ValueError):
        PsiHom([(1,), (1, 0)])
