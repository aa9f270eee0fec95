"""Shared fixtures and random-instance generators for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from conescal.cone_core import (
    SeminormSpec,
    Tolerances,
    abs_functional,
    generated,
    l1,
    l2,
    linf,
    max_abs_functionals,
    orthant,
    psi_max_of_sublinear,
    sum_abs_functionals,
)
from conescal.vopt import vo_problem


@pytest.fixture
def tol():
    return Tolerances()


@pytest.fixture
def p_main():
    """Four points in the plane; (3,3) is dominated by (2,2)."""
    return vo_problem(
        ("a", "b", "c", "d"),
        [[1.0, 3.0], [2.0, 2.0], [3.0, 1.0], [3.0, 3.0]],
        orthant(2),
        psi=l1(),
    )


@pytest.fixture
def p_weff():
    """Adds (1,4): weakly efficient but not efficient."""
    return vo_problem(
        ("a", "b", "c", "d", "e"),
        [[1.0, 3.0], [2.0, 2.0], [3.0, 1.0], [3.0, 3.0], [1.0, 4.0]],
        orthant(2),
        psi=l1(),
    )


def pointed_generated_cone(rng: np.random.Generator, n: int, n_gens: int = None,
                           spread: float = 0.7):
    """A pointed finitely generated cone: generators within `spread` of a
    random unit axis, so every nonzero conic combination has positive
    axis-component."""
    if n_gens is None:
        n_gens = int(rng.integers(n + 1, n + 4))
    u = rng.standard_normal(n)
    u /= np.linalg.norm(u)
    gens = []
    for _ in range(n_gens):
        d = rng.standard_normal(n)
        nd = np.linalg.norm(d)
        if nd < 1e-12:
            d = np.eye(n)[0]
            nd = 1.0
        g = u + spread * rng.uniform(0.1, 1.0) * (d / nd)
        gens.append(g * rng.uniform(0.5, 2.0))
    return generated(np.array(gens)), u


def seminorm_catalog(n: int, axis: np.ndarray = None):
    """One seminorm of every kind, each positive away from the axis-orthogonal
    hyperplane (full norms except AbsFunctional, which is positive on any
    pointed cone around `axis`)."""
    if axis is None:
        axis = np.ones(n) / np.sqrt(n)
    eye = np.eye(n)
    return [
        l1(),
        l2(),
        linf(),
        abs_functional(axis),
        max_abs_functionals(np.vstack([eye, axis])),
        sum_abs_functionals(np.vstack([eye * 0.5, axis])),
        psi_max_of_sublinear(np.vstack([eye, -eye * 0.25, axis])),
    ]


def norm_catalog(n: int):
    """Seminorms that are genuine norms (positive definite on all of R^n)."""
    eye = np.eye(n)
    return [
        l1(),
        l2(),
        linf(),
        max_abs_functionals(eye + 0.1),
        sum_abs_functionals(eye * 0.8),
        psi_max_of_sublinear(np.vstack([eye, -0.5 * eye])),
    ]


def random_images(rng: np.random.Generator, n: int, m: int = None) -> np.ndarray:
    if m is None:
        m = int(rng.integers(5, 51))
    return np.round(rng.uniform(-5.0, 5.0, size=(m, n)), 6)


def make_problem(rng: np.random.Generator, n: int, K, psi: SeminormSpec,
                 m: int = None):
    images = random_images(rng, n, m)
    labels = tuple(f"x{i}" for i in range(images.shape[0]))
    return vo_problem(labels, images, K, psi=psi)
