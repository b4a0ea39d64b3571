import math

import numpy as np
import pytest

from polysqueeze import (
    Annulus,
    BallFactor,
    DomainError,
    ProductDomain,
    PuncturedDisk,
    UnitDisk,
    boundary_samples,
    factor_dim,
    filled,
    membership,
    punctures,
)


# ----------------------------------------------------------------- membership

def test_membership_unit_disk():
    d = UnitDisk()
    assert membership(d, 0)
    assert membership(d, 0.999)
    assert not membership(d, 1.0)
    assert not membership(d, 1.0j)


def test_membership_punctured_disk():
    f = PuncturedDisk((0j,))
    assert not membership(f, 0)
    assert membership(f, 1e-300)
    assert membership(f, 0.5j)


def test_membership_annulus():
    f = Annulus(0.25)
    assert not membership(f, 0.25)
    assert not membership(f, 0.1)
    assert membership(f, 0.5)
    assert not membership(f, 1.0)


def test_membership_ball():
    b = BallFactor(2)
    assert membership(b, (0.5 + 0j, 0.5j))
    assert not membership(b, (0.8 + 0j, 0.7j))
    with pytest.raises(DomainError):
        membership(b, 0.5)  # not a tuple of length 2


# ------------------------------------------------------------------- sampling

def test_boundary_samples_unit_disk():
    got = boundary_samples(UnitDisk(), 4)
    assert np.allclose(got, [1, 1j, -1, -1j], atol=1e-15)


def test_boundary_samples_annulus_two_circles():
    got = boundary_samples(Annulus(0.5), 4)
    assert len(got) == 8
    assert np.allclose(got[:4], [1, 1j, -1, -1j], atol=1e-15)
    assert np.allclose(got[4:], [0.5, 0.5j, -0.5, -0.5j], atol=1e-15)


def test_boundary_samples_skip_punctures():
    got = boundary_samples(PuncturedDisk((0j,)), 4)
    assert len(got) == 4
    assert np.allclose(np.abs(got), 1.0)


def test_boundary_samples_validation():
    with pytest.raises(DomainError):
        boundary_samples(UnitDisk(), 3)
    with pytest.raises(DomainError):
        boundary_samples(BallFactor(1), 16)


def test_boundary_samples_never_members():
    for f in (UnitDisk(), PuncturedDisk((0.3 + 0j,)), Annulus(0.4)):
        assert not any(membership(f, complex(z)) for z in boundary_samples(f, 32))


def test_boundary_samples_cached_readonly():
    arr = boundary_samples(UnitDisk(), 16)
    with pytest.raises(ValueError):
        arr[0] = 0


# ------------------------------------------------------------------ punctures

def test_punctures_listing():
    assert punctures(PuncturedDisk((0j, 0.5 + 0j))) == (0j, 0.5 + 0j)
    assert punctures(Annulus(0.3)) == ()
    assert punctures(UnitDisk()) == ()


def test_filled_single_puncture_gives_disk():
    assert filled(PuncturedDisk((0j,)), 0) == UnitDisk()


def test_filled_removes_one_puncture():
    assert filled(PuncturedDisk((0j, 0.5 + 0j)), 1) == PuncturedDisk((0j,))


def test_filled_errors():
    with pytest.raises(DomainError):
        filled(UnitDisk(), 0)
    with pytest.raises(DomainError):
        filled(PuncturedDisk((0j,)), 1)


def test_filled_strictly_contains():
    f = PuncturedDisk((0j, 0.5 + 0j))
    g = filled(f, 0)
    grid = [complex(x, y) for x in np.linspace(-0.9, 0.9, 21) for y in np.linspace(-0.9, 0.9, 21)]
    assert all(membership(g, z) for z in grid if membership(f, z))
    assert membership(g, 0j) and not membership(f, 0j)


# ----------------------------------------------------------- factor validation

def test_factor_validation():
    with pytest.raises(DomainError):
        Annulus(0.0)
    with pytest.raises(DomainError):
        Annulus(1.0)
    with pytest.raises(DomainError):
        PuncturedDisk(())
    with pytest.raises(DomainError):
        PuncturedDisk((1.5 + 0j,))
    with pytest.raises(DomainError):
        PuncturedDisk((0.5 + 0j, 0.5 + 0j))
    with pytest.raises(DomainError):
        BallFactor(0)


def test_factor_dim():
    assert factor_dim(UnitDisk()) == 1
    assert factor_dim(BallFactor(3)) == 3


# -------------------------------------------------------------- product types

def test_product_domain_nonempty():
    with pytest.raises(DomainError):
        ProductDomain(())


def test_product_point_validates_membership():
    d = ProductDomain((UnitDisk(), PuncturedDisk((0j,))))
    z = d.point([0.2, 0.5j])
    assert z.planar(0) == 0.2 + 0j
    with pytest.raises(DomainError):
        d.point([0.2, 0.0])  # second coordinate sits on the puncture
    with pytest.raises(DomainError):
        d.point([1.2, 0.5])  # first coordinate outside
    with pytest.raises(DomainError):
        d.point([0.2])  # arity mismatch


def test_product_point_ball_coordinates():
    d = ProductDomain((BallFactor(2), UnitDisk()))
    z = d.point([(0.1, 0.2j), 0.5])
    assert z.coords[0] == (0.1 + 0j, 0.2j)
    assert d.dim == 3
    with pytest.raises(DomainError):
        d.point([(0.9, 0.9j), 0.5])
    with pytest.raises(DomainError):
        z.planar(0)


def test_product_helpers():
    d = ProductDomain((UnitDisk(), PuncturedDisk((0j,)), Annulus(0.5)))
    assert d.arity == 3
    assert d.is_planar()
    assert d.punctured_indices() == (1,)
    assert not ProductDomain((BallFactor(2),)).is_planar()
