"""End-to-end sanity of the compiled extension: build, transform, solve."""

import math

import pytest

import transmute as tm


def test_identity_for_zero_potential():
    g = tm.Grid(1.0, 200)
    k = tm.build_kernel(tm.make_potential(g, "zero"))
    assert k.converged
    assert k.iterations == 1
    u = tm.sample(g, lambda x: complex(x * x))
    tu = tm.apply_transmutation(k, u)
    assert max(abs(a - b) for a, b in zip(tu.values, u.values)) <= 1e-12


def test_unit_potential_image_and_inverse():
    g = tm.Grid(1.0, 400)
    k = tm.build_kernel(tm.make_potential(g, "const:1"))
    one = tm.sample(g, lambda x: complex(1.0))
    img = tm.apply_transmutation(k, one)
    worst = max(abs(v - math.cosh(x)) for v, x in zip(img.values, g.nodes()))
    assert worst <= 1e-3
    back = tm.apply_inverse(k, img)
    assert max(abs(v - 1.0) for v in back.values) <= 1e-3


def test_free_dirichlet_eigenvalues():
    g = tm.Grid(1.0, 2000)
    base = tm.build_slbase(tm.canonical_pair(tm.make_potential(g, "zero")), 40)
    roots = tm.find_eigenvalues(base, 0.0, 1.0, -50.0, -1.0,
                                samples=200, count=2)
    assert len(roots) == 2
    assert abs(roots[0].real + 4 * math.pi**2) <= 1e-2
    assert abs(roots[1].real + math.pi**2) <= 1e-2


def test_verification_battery_passes():
    g = tm.Grid(1.0, 300)
    rows = tm.run_verification(tm.make_potential(g, "const:1"), 8)
    assert rows
    assert all(passed for (_, _, _, passed) in rows)


def test_grid_mismatch_is_a_value_error():
    k = tm.build_kernel(tm.make_potential(tm.Grid(1.0, 100), "zero"))
    u = tm.sample(tm.Grid(1.0, 200), lambda x: complex(x))
    with pytest.raises(ValueError):
        tm.apply_transmutation(k, u)
