"""Simply-laced root systems, Coxeter elements and the Coxeter plane.

Weights are tuples of Python ints giving coefficients in the basis of
fundamental weights, so every Weyl-group computation here is exact.  Nodes are
labelled ``1..rank``.

Node conventions for the built-in diagrams:

* ``A_n``: the path ``1 - 2 - ... - n``.
* ``D_n``: the path ``1 - ... - (n-2)`` with ``n-1`` and ``n`` both attached to
  ``n-2``.
* ``E_n``: the path ``1 - ... - (n-1)`` with ``n`` attached to ``3``.  For E6
  the particle names used in affine Toda tables are ``1=lbar, 2=h, 3=H,
  4=hbar, 5=l, 6=L``.
"""
from __future__ import annotations

import dataclasses
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

Weight = tuple[int, ...]

BLACK = "black"
WHITE = "white"

COXETER_NUMBERS = {"E": {6: 12, 7: 18, 8: 30}}

E6_LABELS = {1: "lbar", 2: "h", 3: "H", 4: "hbar", 5: "l", 6: "L"}

FLOAT_TOL = 1e-9


class UnsupportedAlgebra(ValueError):
    pass


def _edges(family: str, rank: int) -> list[tuple[int, int]]:
    if family == "A" and rank >= 1:
        return [(k, k + 1) for k in range(1, rank)]
    if family == "D" and rank >= 4:
        path = [(k, k + 1) for k in range(1, rank - 2)]
        return path + [(rank - 2, rank - 1), (rank - 2, rank)]
    if family == "E" and rank in (6, 7, 8):
        return [(k, k + 1) for k in range(1, rank - 1)] + [(3, rank)]
    raise UnsupportedAlgebra(
        f"unsupported algebra {family}{rank}: expected A_n (n>=1), D_n (n>=4), E6, E7 or E8"
    )


def classical_coxeter_number(family: str, rank: int) -> int:
    if family == "A":
        return rank + 1
    if family == "D":
        return 2 * rank - 2
    return COXETER_NUMBERS["E"][rank]


def _matmul(a, b):
    n = len(a)
    m = len(b[0])
    inner = len(b)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(m))
        for i in range(n)
    )


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matvec(a, v) -> Weight:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable Dynkin data for a simply-laced simple Lie algebra.

    ``black`` and ``white`` are the two colour classes.  The Coxeter element is
    ``w = w_white * w_black`` where each factor is the (commuting) product of
    the simple reflections of that colour.  Use :meth:`with_black` to get the
    same algebra with the colour classes swapped, which replaces ``w`` by its
    inverse.
    """

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    adjacency: dict[int, tuple[int, ...]]
    black: frozenset[int]
    white: frozenset[int]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def colour(self, i: int) -> str:
        return BLACK if i in self.black else WHITE

    def is_black(self, i: int) -> bool:
        return i in self.black

    def neighbours(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]

    def check_node(self, i: int) -> None:
        if not (isinstance(i, (int, np.integer)) and 1 <= i <= self.rank):
            raise ValueError(f"{self.name} has no node {i!r}")

    def swapped(self) -> "RootSystem":
        """The same diagram with the two colour classes exchanged."""
        return dataclasses.replace(self, black=self.white, white=self.black)

    def with_black(self, i: int) -> "RootSystem":
        self.check_node(i)
        return self if i in self.black else self.swapped()

    # -- exact linear algebra ---------------------------------------------

    def reflection_matrix(self, i: int):
        # s_i mu = mu - mu_i alpha_i, alpha_i has coordinates cartan[:, i]
        n = self.rank
        col = [self.cartan[r][i - 1] for r in range(n)]
        return tuple(
            tuple(int(r == c) - (col[r] if c == i - 1 else 0) for c in range(n))
            for r in range(n)
        )

    def _colour_product(self, nodes) -> tuple[tuple[int, ...], ...]:
        m = _identity(self.rank)
        for i in sorted(nodes):
            m = _matmul(m, self.reflection_matrix(i))
        return m

    @cached_property
    def w_black(self):
        return self._colour_product(self.black)

    @cached_property
    def w_white(self):
        return self._colour_product(self.white)

    @cached_property
    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        return _matmul(self.w_white, self.w_black)

    @cached_property
    def coxeter_powers(self) -> list[tuple[tuple[int, ...], ...]]:
        """``[w^0, w^1, ..., w^(h-1)]``; also fixes ``h`` as the order of ``w``."""
        ident = _identity(self.rank)
        powers = [ident]
        m = self.coxeter_matrix
        while m != ident:
            powers.append(m)
            m = _matmul(m, self.coxeter_matrix)
            if len(powers) > 4 * self.rank * self.rank:
                raise RuntimeError("Coxeter element has unexpectedly large order")
        return powers

    @property
    def h(self) -> int:
        return len(self.coxeter_powers)

    @cached_property
    def gram(self) -> np.ndarray:
        """Inner products of fundamental weights (the inverse Cartan matrix)."""
        return np.linalg.inv(np.array(self.cartan, dtype=float))

    @cached_property
    def bar(self) -> dict[int, int]:
        return {i: bar_involution(self, i) for i in self.nodes}

    # -- Coxeter plane ------------------------------------------------------

    @cached_property
    def projector(self) -> np.ndarray:
        h = self.h
        powers = [np.array(p, dtype=float) for p in self.coxeter_powers]
        p = sum(math.cos(2 * math.pi * n / h) * powers[n] for n in range(h)) * (2.0 / h)
        if h == 2:
            # e^{2pi i/h} = e^{-2pi i/h}: the eigenspace is a line, counted twice
            p = p / 2.0
        return p

    @cached_property
    def plane_basis(self) -> tuple[np.ndarray, np.ndarray]:
        g = self.gram
        p = self.projector

        def ip(u, v):
            return float(u @ g @ v)

        cols = [p[:, k] for k in range(self.rank)]
        first = max(cols, key=lambda c: ip(c, c))
        b1 = first / math.sqrt(ip(first, first))
        best, best_norm = None, 0.0
        for c in cols:
            r = c - ip(b1, c) * b1
            nrm = ip(r, r)
            if nrm > best_norm:
                best, best_norm = r, nrm
        if best is None or best_norm < FLOAT_TOL:
            # one-dimensional "plane" (h = 2)
            b2 = np.zeros(self.rank)
        else:
            b2 = best / math.sqrt(best_norm)
            lam = fundamental_weight(self, 1)
            x0, y0 = self._coords(lam, b1, b2)
            x1, y1 = self._coords(coxeter_apply(self, lam, 1), b1, b2)
            if x0 * y1 - y0 * x1 < 0:
                b2 = -b2
        return b1, b2

    def _coords(self, mu: Sequence[int], b1, b2) -> tuple[float, float]:
        v = self.gram @ (self.projector @ np.asarray(mu, dtype=float))
        return float(b1 @ v), float(b2 @ v)


def build_root_system(family: str, rank: int) -> RootSystem:
    """Build the root system ``family``/``rank`` with the default colouring.

    The default colouring is found by breadth-first search from node 1, which
    is coloured black.
    """
    family = str(family).upper()
    rank = int(rank)
    edges = _edges(family, rank)
    adj: dict[int, list[int]] = {i: [] for i in range(1, rank + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    cartan = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        cartan[i][i] = 2
    for a, b in edges:
        cartan[a - 1][b - 1] = cartan[b - 1][a - 1] = -1

    colour = {1: BLACK}
    queue = deque([1])
    while queue:
        i = queue.popleft()
        for j in sorted(adj[i]):
            if j not in colour:
                colour[j] = WHITE if colour[i] == BLACK else BLACK
                queue.append(j)
    rs = RootSystem(
        family=family,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        adjacency={i: tuple(sorted(v)) for i, v in adj.items()},
        black=frozenset(i for i, c in colour.items() if c == BLACK),
        white=frozenset(i for i, c in colour.items() if c == WHITE),
    )
    if rs.h != classical_coxeter_number(family, rank):
        raise RuntimeError(f"{rs.name}: Coxeter element has order {rs.h}")
    return rs


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    rs.check_node(i)
    return tuple(int(k == i - 1) for k in range(rs.rank))


def zero_weight(rs: RootSystem) -> Weight:
    return (0,) * rs.rank


def weight_add(*mus: Weight) -> Weight:
    return tuple(sum(c) for c in zip(*mus))


def weight_neg(mu: Weight) -> Weight:
    return tuple(-c for c in mu)


def weight_scale(k: int, mu: Weight) -> Weight:
    return tuple(k * c for c in mu)


def simple_root(rs: RootSystem, i: int) -> Weight:
    return tuple(rs.cartan[r][i - 1] for r in range(rs.rank))


def simple_reflection(rs: RootSystem, i: int, mu: Weight) -> Weight:
    rs.check_node(i)
    k = mu[i - 1]
    if k == 0:
        return tuple(mu)
    return tuple(m - k * a for m, a in zip(mu, simple_root(rs, i)))


def coxeter_apply(rs: RootSystem, mu: Weight, power: int = 1) -> Weight:
    """Apply ``w**power`` exactly; negative powers are allowed."""
    return _matvec(rs.coxeter_powers[power % rs.h], mu)


def coxeter_orbit(rs: RootSystem, i: int) -> list[Weight]:
    """``[lambda_i, w lambda_i, ..., w^(h-1) lambda_i]``."""
    lam = fundamental_weight(rs, i)
    return [coxeter_apply(rs, lam, n) for n in range(rs.h)]


def bar_involution(rs: RootSystem, i: int) -> int:
    """The node ``j`` with ``lambda_j = -w0 lambda_i``.

    ``w0`` restricted to ``lambda_i`` is ``w^floor(h/2)`` for black ``i`` and
    ``w^floor((h+1)/2)`` for white ``i``.
    """
    rs.check_node(i)
    k = rs.h // 2 if rs.is_black(i) else (rs.h + 1) // 2
    mu = weight_neg(coxeter_apply(rs, fundamental_weight(rs, i), k))
    if sorted(mu) != [0] * (rs.rank - 1) + [1]:
        raise RuntimeError(f"{rs.name}: -w0 lambda_{i} = {mu} is not a fundamental weight")
    return mu.index(1) + 1


def plane_project(rs: RootSystem, mu: Weight) -> tuple[float, float]:
    """Coordinates of ``P mu`` in the oriented orthonormal plane basis."""
    b1, b2 = rs.plane_basis
    return rs._coords(mu, b1, b2)


def plane_angle(rs: RootSystem, mu: Weight, rho: Weight) -> float:
    """Signed angle in ``(-pi, pi]`` from ``P mu`` to ``P rho``."""
    x0, y0 = plane_project(rs, mu)
    x1, y1 = plane_project(rs, rho)
    if math.hypot(x0, y0) < FLOAT_TOL or math.hypot(x1, y1) < FLOAT_TOL:
        raise ValueError("weight has zero projection onto the Coxeter plane")
    theta = math.atan2(x0 * y1 - y0 * x1, x0 * x1 + y0 * y1)
    if abs(abs(theta) - math.pi) < FLOAT_TOL:
        return math.pi
    return theta


def weyl_orbit(rs: RootSystem, mu: Weight, max_size: int | None = None) -> set[Weight] | None:
    """Full Weyl orbit by breadth-first closure under simple reflections.

    Returns ``None`` if the orbit grows beyond ``max_size``.
    """
    start = tuple(mu)
    seen = {start}
    queue = deque([start])
    roots = [simple_root(rs, i) for i in rs.nodes]
    while queue:
        v = queue.popleft()
        for i, alpha in enumerate(roots):
            k = v[i]
            if k == 0:
                continue
            u = tuple(a - k * b for a, b in zip(v, alpha))
            if u not in seen:
                seen.add(u)
                if max_size is not None and len(seen) > max_size:
                    return None
                queue.append(u)
    return seen
