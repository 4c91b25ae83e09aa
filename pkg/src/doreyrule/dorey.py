"""Dorey's fusing rule: Coxeter-orbit solutions, fusing angles, rapidities.

A solution is an ordered node triple ``(i1, i2, i3)`` with Coxeter powers
``(0, n2, n3)`` such that ``lambda_i1 + w^n2 lambda_i2 + w^n3 lambda_i3 = 0``.
Powers refer to the Coxeter element of the root system passed in.  Rapidity
exponents are measured with reference vector ``lambda_i1`` in the frame where
``i1`` is black (the colouring is swapped when necessary, which inverts ``w``
and the orientation of the plane).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .root_system import (
    FLOAT_TOL,
    RootSystem,
    coxeter_apply,
    coxeter_orbit,
    fundamental_weight,
    plane_angle,
    plane_project,
    weight_add,
    weight_neg,
    weyl_orbit,
)

INTEGRALITY_TOL = 1e-6
DEFAULT_MAX_ORBIT = 1_000_000


class NotASolution(ValueError):
    pass


@dataclass(frozen=True)
class FusingSolution:
    nodes: tuple[int, int, int]
    exponents: tuple[int, int, int]
    rapidity_exponents: tuple[int, int, int] = field(default=(0, 0, 0), compare=False)
    angles: tuple[float, float, float] = field(default=(0.0, 0.0, 0.0), compare=False)

    def vectors(self, rs: RootSystem):
        return [
            coxeter_apply(rs, fundamental_weight(rs, i), n)
            for i, n in zip(self.nodes, self.exponents)
        ]

    def rapidities(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, e in zip(self.nodes, self.rapidity_exponents):
            out.setdefault(i, []).append(e)
        return out


@dataclass(frozen=True)
class CanonicalFusing:
    """A solution rewritten as ``lambda_i1 - w^n lambda_ibar2 + w^m lambda_i3 = 0``.

    ``rs`` is the root system recoloured so that ``i1`` is black and all powers
    refer to its Coxeter element.  ``perm`` maps canonical slots back to the
    slots of the original solution (slots 2 and 3 may be exchanged).
    """

    rs: RootSystem = field(compare=False, repr=False)
    i1: int
    i2: int
    i2bar: int
    i3: int
    n: int
    m: int
    r: int
    s: int
    perm: tuple[int, int, int]
    swapped_colouring: bool

    @property
    def rapidity_exponents(self) -> tuple[int, int, int]:
        """Rapidities of ``(i1, i2, i3)``: ``(0, r - h, s)``."""
        return (0, self.r - self.rs.h, self.s)


def _zero_sum(rs: RootSystem, nodes, exponents) -> bool:
    vecs = [coxeter_apply(rs, fundamental_weight(rs, i), n) for i, n in zip(nodes, exponents)]
    return not any(weight_add(*vecs))


def _frame(rs: RootSystem, i1: int, exponents):
    """Root system with ``i1`` black and the powers rewritten for its ``w``."""
    if rs.is_black(i1):
        return rs, tuple(exponents), False
    return rs.swapped(), tuple((-n) % rs.h for n in exponents), True


def _angles_in_frame(rs: RootSystem, nodes, exponents) -> list[float]:
    ref = fundamental_weight(rs, nodes[0])
    return [
        plane_angle(rs, ref, coxeter_apply(rs, fundamental_weight(rs, i), n))
        for i, n in zip(nodes, exponents)
    ]


def rapidity_exponents(rs: RootSystem, sol: FusingSolution) -> tuple[int, int, int]:
    """``(h/pi) theta(lambda_i1, w^n_k lambda_ik)`` for each slot, as integers.

    Cross-checked against ``(0, r - h, s)`` from the canonical form.
    """
    frs, exps, _ = _frame(rs, sol.nodes[0], sol.exponents)
    out = []
    for theta in _angles_in_frame(frs, sol.nodes, exps):
        x = rs.h * theta / math.pi
        k = round(x)
        if abs(x - k) > INTEGRALITY_TOL:
            raise RuntimeError(f"non-integral rapidity exponent {x} for {sol}")
        out.append(k)
    can = canonicalize(rs, sol)
    expected = [0, 0, 0]
    for slot, e in zip(can.perm, can.rapidity_exponents):
        expected[slot] = e
    if tuple(out) != tuple(expected):
        raise RuntimeError(f"rapidities {out} disagree with canonical form {expected} for {sol}")
    return tuple(out)


def fusing_angles(rs: RootSystem, sol: FusingSolution) -> tuple[float, float, float]:
    """Angle of the gap opposite each slot between the other two projections.

    The three gaps partition the full turn, so they sum to ``2 pi``.
    """
    pts = [plane_project(rs, v) for v in sol.vectors(rs)]
    dirs = [math.atan2(y, x) % (2 * math.pi) for x, y in pts]
    order = sorted(range(3), key=lambda k: dirs[k])
    out = [0.0, 0.0, 0.0]
    for pos, k in enumerate(order):
        a, b = order[(pos + 1) % 3], order[(pos + 2) % 3]
        gap = (dirs[b] - dirs[a]) % (2 * math.pi)
        out[k] = gap
    return tuple(out)


def canonicalize(rs: RootSystem, sol: FusingSolution) -> CanonicalFusing:
    if not _zero_sum(rs, sol.nodes, sol.exponents):
        raise NotASolution(f"{sol.nodes} with powers {sol.exponents} does not sum to zero")
    i1 = sol.nodes[0]
    frs, exps, swapped = _frame(rs, i1, sol.exponents)
    h = frs.h
    # gauge n1 = 0
    exps = tuple((n - exps[0]) % h for n in exps)
    thetas = _angles_in_frame(frs, sol.nodes, exps)
    perm = (0, 1, 2)
    if not (thetas[1] <= FLOAT_TOL and thetas[2] > FLOAT_TOL):
        if thetas[2] <= FLOAT_TOL and thetas[1] > FLOAT_TOL:
            perm = (0, 2, 1)
        else:
            raise NotASolution(f"projections of {sol} are not separated by lambda_i1")
    i2, i3 = sol.nodes[perm[1]], sol.nodes[perm[2]]
    n2, n3 = exps[perm[1]], exps[perm[2]]
    i2bar = frs.bar[i2]
    target = weight_neg(coxeter_apply(frs, fundamental_weight(frs, i2), n2))
    n = _bounded_power(frs, i2bar, target)
    m = _bounded_power(frs, i3, coxeter_apply(frs, fundamental_weight(frs, i3), n3))
    r = 2 * n if frs.is_black(i2bar) else 2 * n - 1
    s = 2 * m if frs.is_black(i3) else 2 * m - 1
    if not r < s:
        raise RuntimeError(f"canonical form of {sol} violates r < s (r={r}, s={s})")
    return CanonicalFusing(frs, i1, i2, i2bar, i3, n, m, r, s, perm, swapped)


def _bounded_power(rs: RootSystem, j: int, target) -> int:
    """The power ``0 < k <= bound`` with ``w^k lambda_j = target``."""
    bound = rs.h // 2 if rs.is_black(j) else (rs.h + 1) // 2
    lam = fundamental_weight(rs, j)
    for k in range(1, bound + 1):
        if coxeter_apply(rs, lam, k) == tuple(target):
            return k
    raise NotASolution(f"no power 0 < k <= {bound} puts lambda_{j} at {target}")


def enumerate_fusings(rs: RootSystem) -> list[FusingSolution]:
    """All ordered solutions with ``n1 = 0``, sorted by nodes then powers."""
    orbits = {i: coxeter_orbit(rs, i) for i in rs.nodes}
    index = {i: {} for i in rs.nodes}
    for i, orb in orbits.items():
        for n, mu in enumerate(orb):
            index[i].setdefault(mu, []).append(n)
    out = []
    for i1, i2, i3 in itertools.product(rs.nodes, repeat=3):
        lam = orbits[i1][0]
        for n2, mu in enumerate(orbits[i2]):
            need = weight_neg(weight_add(lam, mu))
            for n3 in index[i3].get(need, ()):
                sol = FusingSolution((i1, i2, i3), (0, n2, n3))
                out.append(
                    FusingSolution(
                        sol.nodes,
                        sol.exponents,
                        rapidity_exponents(rs, sol),
                        fusing_angles(rs, sol),
                    )
                )
    return out


def fusing_triples(rs: RootSystem, fusings=None) -> set[tuple[int, int, int]]:
    """Unordered (sorted) node triples admitting a solution."""
    if fusings is None:
        fusings = enumerate_fusings(rs)
    return {tuple(sorted(f.nodes)) for f in fusings}


def prv_admissible(rs: RootSystem, i: int, j: int, k: int, max_orbit: int = DEFAULT_MAX_ORBIT):
    """Whether ``0`` lies in ``W lambda_i + W lambda_j + W lambda_k``.

    Returns ``None`` when an orbit exceeds ``max_orbit`` (not computed).
    Uses Weyl invariance: the sum contains 0 iff ``lambda_kbar`` lies in
    ``W lambda_i + W lambda_j``.
    """
    for x in (i, j, k):
        rs.check_node(x)
    oi = weyl_orbit(rs, fundamental_weight(rs, i), max_orbit)
    oj = weyl_orbit(rs, fundamental_weight(rs, j), max_orbit)
    if oi is None or oj is None:
        return None
    if len(oi) > len(oj):
        oi, oj = oj, oi
    target = fundamental_weight(rs, rs.bar[k])
    return any(tuple(t - a for t, a in zip(target, mu)) in oj for mu in oi)


def prv_admissible_pairs(rs: RootSystem, i: int, j: int, k: int, max_pairs: int = 10_000_000):
    """Pair-sum hashing version of :func:`prv_admissible` (no Weyl reduction)."""
    oi = weyl_orbit(rs, fundamental_weight(rs, i))
    oj = weyl_orbit(rs, fundamental_weight(rs, j))
    if len(oi) * len(oj) > max_pairs:
        return None
    sums = {weight_add(a, b) for a in oi for b in oj}
    ok = weyl_orbit(rs, fundamental_weight(rs, k))
    return any(weight_neg(c) in sums for c in ok)
