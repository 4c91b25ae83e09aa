"""From q-character monomials to Coxeter-orbit identities and back.

Strip nodes ``(i, r)`` live on ``I x {0, 1, 2, ...}`` with the colouring of
the root system extended row by row: ``(i, 2n)`` is black for black ``i`` and
``(i, 2n - 1)`` is black for white ``i``.  A black strip node carries the
factor ``Y[i, r]`` and the weight ``w^n lambda_i``; a white strip node carries
``A[i, r]`` and the identity ``y(i, r-1) + y(i, r+1) - sum_{j~i} y(j, r) = 0``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping

from .dorey import CanonicalFusing, FusingSolution, canonicalize, enumerate_fusings
from .qchar import Monomial, QCharacter, contains_monomial, fm_qcharacter
from .root_system import (
    RootSystem,
    coxeter_apply,
    fundamental_weight,
    plane_angle,
    weight_add,
    weight_scale,
    zero_weight,
)


class ColouringViolation(ValueError):
    pass


class TheoremViolation(AssertionError):
    pass


def is_black_strip_node(rs: RootSystem, i: int, r: int) -> bool:
    return (r % 2 == 0) == rs.is_black(i)


def coxeter_power(rs: RootSystem, i: int, r: int) -> int:
    """``n`` with ``y(i, r) = w^n lambda_i``: ``r = 2n`` (black) or ``2n - 1`` (white)."""
    if not is_black_strip_node(rs, i, r):
        raise ColouringViolation(f"({i}, {r}) is not a black strip node of {rs.name}")
    return r // 2 if rs.is_black(i) else (r + 1) // 2


def strip_y(rs: RootSystem, i: int, r: int):
    return coxeter_apply(rs, fundamental_weight(rs, i), coxeter_power(rs, i, r))


@dataclass
class StripFunction:
    """Finitely supported integer function on strip nodes; zero values dropped."""

    values: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.values = {(int(i), int(r)): int(v) for (i, r), v in self.values.items() if v}

    def __getitem__(self, key) -> int:
        return self.values.get(key, 0)

    def __add__(self, other: "StripFunction") -> "StripFunction":
        d = dict(self.values)
        for k, v in other.values.items():
            d[k] = d.get(k, 0) + v
        return StripFunction(d)

    def __eq__(self, other):
        return isinstance(other, StripFunction) and self.values == other.values

    def support(self) -> set[tuple[int, int]]:
        return set(self.values)

    def max_row(self) -> int:
        return max((r for _, r in self.values), default=-1)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values.values())

    @classmethod
    def from_lowering(cls, lowering) -> "StripFunction":
        return cls(dict(lowering))


@dataclass(frozen=True)
class WeightIdentity:
    """``lambda_left = sum coeff * w^power lambda_node`` over ``terms``."""

    left: int
    terms: tuple[tuple[int, int, int], ...]

    def rhs(self, rs: RootSystem):
        total = zero_weight(rs)
        for coeff, j, n in self.terms:
            total = weight_add(total, weight_scale(coeff, coxeter_apply(rs, fundamental_weight(rs, j), n)))
        return total

    def holds(self, rs: RootSystem) -> bool:
        return self.rhs(rs) == fundamental_weight(rs, self.left)


def monomial_identity(rs: RootSystem, i: int, m: Monomial, qc: QCharacter | None = None) -> WeightIdentity:
    """The Coxeter-orbit identity attached to a monomial of ``chi(V_{i,0})``.

    ``rs`` is recoloured so that ``i`` is black; powers refer to that frame.
    """
    frs = rs.with_black(i)
    if qc is not None and contains_monomial(qc, m) == 0:
        raise ValueError(f"{m} does not occur in the q-character of V_{i}")
    terms = tuple((e, j, coxeter_power(frs, j, r)) for (j, r), e in m.factors)
    ident = WeightIdentity(i, terms)
    if not ident.holds(frs):
        raise TheoremViolation(f"{m} gives a false identity {ident}")
    return ident


def _white_strip_nodes_for(rs: RootSystem, g: StripFunction):
    for (j, r), v in g.values.items():
        if is_black_strip_node(rs, j, r):
            raise ColouringViolation(f"g is supported on black strip node ({j}, {r})")
        yield j, r, v


def strip_evaluate(rs: RootSystem, c: StripFunction, g: StripFunction):
    """Residue of ``sum c y - sum g a`` and the monomial ``m(c, g)``.

    The residue is a map from black strip nodes (row ``-1`` allowed, for the
    white row-0 neighbours) to integer coefficients; the monomial is the same
    data read as ``prod Y[i, r]^coeff``.
    """
    res: dict[tuple[int, int], int] = defaultdict(int)
    for (i, r), v in c.values.items():
        if not is_black_strip_node(rs, i, r):
            raise ColouringViolation(f"c is supported on white strip node ({i}, {r})")
        res[(i, r)] += v
    for j, r, v in _white_strip_nodes_for(rs, g):
        res[(j, r - 1)] -= v
        res[(j, r + 1)] -= v
        for k in rs.neighbours(j):
            res[(k, r)] += v
    res = {k: v for k, v in res.items() if v}
    return res, Monomial(res)


def residue_weight(rs: RootSystem, residue: Mapping[tuple[int, int], int]):
    total = zero_weight(rs)
    for (i, r), v in residue.items():
        total = weight_add(total, weight_scale(v, strip_y(rs, i, r)))
    return total


def strip_solve(rs: RootSystem, c: StripFunction) -> StripFunction:
    """Unique ``g`` vanishing below the source with zero residue in rows > 0.

    Solved from the bottom row up: the equation at black node ``(i, n)``
    fixes ``g(i, n-1) = c(i, n) - g(i, n+1) + sum_{j~i} g(j, n)``.
    """
    bottom = c.max_row()
    g: dict[tuple[int, int], int] = {}
    for n in range(bottom, 0, -1):
        for i in rs.nodes:
            if not is_black_strip_node(rs, i, n):
                continue
            val = c[(i, n)] - g.get((i, n + 1), 0) + sum(g.get((j, n), 0) for j in rs.neighbours(i))
            if val:
                g[(i, n - 1)] = val
    return StripFunction(g)


def canonical_source(can: CanonicalFusing) -> StripFunction:
    d: dict[tuple[int, int], int] = defaultdict(int)
    d[(can.i1, 0)] += 1
    d[(can.i2bar, can.r)] -= 1
    d[(can.i3, can.s)] += 1
    return StripFunction(d)


def fusing_to_monomial(rs: RootSystem, sol: FusingSolution | CanonicalFusing, chars: dict | None = None):
    """The quadratic monomial ``Y[ibar2, r] Y[i3, s]^-1`` certified by a fusing.

    Returns ``(monomial, g, canonical)``.  Raises :class:`TheoremViolation` if
    ``g`` has a negative value, if the strip residue does not cancel, or if the
    monomial is missing from ``chi(V_{i1,0})``.
    """
    can = sol if isinstance(sol, CanonicalFusing) else canonicalize(rs, sol)
    frs = can.rs
    c = canonical_source(can)
    g = strip_solve(frs, c)
    if not g.is_nonnegative():
        raise TheoremViolation(f"negative strip solution for {can}: {g.values}")
    residue, _ = strip_evaluate(frs, c, g)
    if residue:
        raise TheoremViolation(f"strip residue does not cancel for {can}: {residue}")
    quad = Monomial.Y(can.i2bar, can.r) * Monomial.Y(can.i3, can.s, -1)
    if chars is not None:
        if can.i1 not in chars:
            chars[can.i1] = fm_qcharacter(rs, can.i1)
        qc = chars[can.i1]
        if contains_monomial(qc, quad) < 1:
            raise TheoremViolation(f"{quad} missing from the q-character of V_{can.i1}")
        if StripFunction.from_lowering(qc.lowerings[quad]) != g:
            raise TheoremViolation(f"lowering of {quad} in V_{can.i1} differs from strip solution")
    return quad, g, can


def quadratic_monomials(qc: QCharacter) -> list[tuple[Monomial, int, int, int, int]]:
    """``(m, j, r, k, s)`` for every ``m = Y[j, r] Y[k, s]^-1`` in ``qc``."""
    out = []
    for m in qc.ordered():
        pos = [(key, e) for key, e in m.factors if e > 0]
        neg = [(key, e) for key, e in m.factors if e < 0]
        if len(pos) == 1 and len(neg) == 1 and pos[0][1] == 1 and neg[0][1] == -1:
            (j, r), (k, s) = pos[0][0], neg[0][0]
            out.append((m, j, r, k, s))
    return out


def normalize_configuration(items) -> tuple[tuple[int, int], ...]:
    """Rapidity configuration modulo a global shift: sorted ``(node, exp)``."""
    low = min(e for _, e in items)
    return tuple(sorted((i, e - low) for i, e in items))


def _orientation(rs: RootSystem, sol: FusingSolution) -> str:
    """``cyclic`` if the slots occur anticlockwise in order 1, 2, 3."""
    ref = fundamental_weight(rs, sol.nodes[0])
    vecs = sol.vectors(rs)
    a2 = plane_angle(rs, ref, vecs[1]) % 6.283185307179586
    a3 = plane_angle(rs, ref, vecs[2]) % 6.283185307179586
    return "cyclic" if a2 < a3 else "acyclic"


@dataclass
class TheoremReport:
    algebra: str
    char_side: dict = field(default_factory=dict)
    dorey_side: dict = field(default_factory=dict)
    quadratic_count: int = 0
    fusing_count: int = 0

    @property
    def char_set(self) -> set:
        return set(self.char_side)

    @property
    def dorey_set(self) -> set:
        return set(self.dorey_side)

    @property
    def matched(self) -> bool:
        return self.char_set == self.dorey_set

    def mismatches(self):
        return sorted(self.char_set - self.dorey_set), sorted(self.dorey_set - self.char_set)

    def table(self):
        """Rows ``(configuration, from characters, from fusings)``."""
        keys = sorted(self.char_set | self.dorey_set)
        return [(k, k in self.char_side, k in self.dorey_side) for k in keys]


def char_configurations(rs: RootSystem, chars: dict) -> dict:
    """Rapidity configurations read off quadratic monomials.

    ``Y[j, r] Y[k, s]^-1`` in ``chi(V_{i,0})`` gives ``V_{bar j, r-h}``,
    ``V_{i, 0}`` and ``V_{k, s}``; the middle slot is ``i``.
    """
    out: dict = {}
    for i in rs.nodes:
        for m, j, r, k, s in quadratic_monomials(chars[i]):
            items = [(rs.bar[j], r - rs.h), (i, 0), (k, s)]
            key = normalize_configuration(items)
            out.setdefault(key, []).append(
                {"middle": i, "monomial": m, "slots": {"lowest": items[0], "middle": items[1], "highest": items[2]}}
            )
    return out


def dorey_configurations(rs: RootSystem, fusings=None) -> dict:
    if fusings is None:
        fusings = enumerate_fusings(rs)
    out: dict = {}
    for sol in fusings:
        key = normalize_configuration(list(zip(sol.nodes, sol.rapidity_exponents)))
        out.setdefault(key, []).append({"solution": sol, "orientation": _orientation(rs, sol)})
    return out


def verify_theorem(rs: RootSystem, chars: dict | None = None, max_monomials: int | None = None) -> TheoremReport:
    """Compare fusing-rule rapidities with quadratic monomials of q-characters."""
    if chars is None:
        chars = {}
    kw = {} if max_monomials is None else {"max_monomials": max_monomials}
    for i in rs.nodes:
        if i not in chars:
            chars[i] = fm_qcharacter(rs, i, **kw)
    fusings = enumerate_fusings(rs)
    report = TheoremReport(rs.name)
    report.char_side = char_configurations(rs, chars)
    report.dorey_side = dorey_configurations(rs, fusings)
    report.quadratic_count = sum(len(v) for v in report.char_side.values())
    report.fusing_count = len(fusings)
    return report

