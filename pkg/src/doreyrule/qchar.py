"""Laurent monomials in ``Y[i, r]`` and q-characters of fundamental modules.

``Y[i, r]`` stands for ``Y_{i, a q^r}`` with a fixed base rapidity ``a``.
Single-node ("sl2") monomials use the same :class:`Monomial` type with node 0.

The q-character of ``V_{i,0}`` is computed with the Frenkel-Mukhin procedure:
monomials are visited in order of their distance from the head (number of
``A^{-1}`` factors), and for every node ``j`` each not yet accounted for
``j``-dominant monomial spawns the full sl2 character of its ``j``-restriction,
lifted back along ``A_{j,r}^{-1}``.
"""
from __future__ import annotations

import heapq
import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .root_system import RootSystem

SL2_NODE = 0
DEFAULT_MAX_MONOMIALS = 200_000


class Monomial:
    """Sparse Laurent monomial ``prod Y[i, r]^e`` with exact integer exponents."""

    __slots__ = ("factors", "_hash")

    def __init__(self, factors: Mapping[tuple[int, int], int] | Iterable = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for (i, r), e in items:
            acc[(int(i), int(r))] += int(e)
        self.factors = tuple(sorted((k, e) for k, e in acc.items() if e))
        self._hash = hash(self.factors)

    @classmethod
    def Y(cls, i: int, r: int, e: int = 1) -> "Monomial":
        return cls({(i, r): e})

    @classmethod
    def one(cls) -> "Monomial":
        return cls()

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.factors == other.factors

    def __lt__(self, other):
        return self.factors < other.factors

    def __mul__(self, other: "Monomial") -> "Monomial":
        d = dict(self.factors)
        for k, e in other.factors:
            d[k] = d.get(k, 0) + e
        return Monomial(d)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * other.inverse()

    def __pow__(self, k: int) -> "Monomial":
        return Monomial({key: e * k for key, e in self.factors})

    def inverse(self) -> "Monomial":
        return Monomial({key: -e for key, e in self.factors})

    def shift(self, k: int) -> "Monomial":
        return Monomial({(i, r + k): e for (i, r), e in self.factors})

    def exponent(self, i: int, r: int) -> int:
        return dict(self.factors).get((i, r), 0)

    def is_one(self) -> bool:
        return not self.factors

    def __repr__(self):
        if not self.factors:
            return "Monomial(1)"
        return "Monomial(" + " ".join(
            f"Y[{i},{r}]" + ("" if e == 1 else f"^{e}") for (i, r), e in self.factors
        ) + ")"

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    def support(self) -> list[int]:
        return sorted({r for (_, r), _ in self.factors})


def a_monomial(rs: RootSystem, j: int, r: int) -> Monomial:
    """``A[j, r] = Y[j, r-1] Y[j, r+1] prod_{k ~ j} Y[k, r]^-1``."""
    d = {(j, r - 1): 1, (j, r + 1): 1}
    for k in rs.neighbours(j):
        d[(k, r)] = d.get((k, r), 0) - 1
    return Monomial(d)


def sl2_a(r: int) -> Monomial:
    return Monomial({(SL2_NODE, r - 1): 1, (SL2_NODE, r + 1): 1})


@dataclass(frozen=True)
class MonomialFlags:
    dominant: bool
    antidominant: bool
    i_dominant: dict
    right_negative: bool
    left_positive: bool


def is_dominant(m: Monomial) -> bool:
    return all(e > 0 for _, e in m.factors)


def is_antidominant(m: Monomial) -> bool:
    return all(e < 0 for _, e in m.factors)


def is_j_dominant(m: Monomial, j: int) -> bool:
    return all(e > 0 for (i, _), e in m.factors if i == j)


def is_right_negative(m: Monomial) -> bool:
    """Some negative factor lies strictly right of every positive factor."""
    neg = [r for (_, r), e in m.factors if e < 0]
    if not neg:
        return False
    pos = [r for (_, r), e in m.factors if e > 0]
    return not pos or max(pos) < max(neg)


def is_left_positive(m: Monomial) -> bool:
    pos = [r for (_, r), e in m.factors if e > 0]
    if not pos:
        return False
    neg = [r for (_, r), e in m.factors if e < 0]
    return not neg or min(neg) > min(pos)


def classify(m: Monomial, nodes: Iterable[int] | None = None) -> MonomialFlags:
    if nodes is None:
        nodes = sorted({i for (i, _), _ in m.factors})
    return MonomialFlags(
        dominant=is_dominant(m),
        antidominant=is_antidominant(m),
        i_dominant={j: is_j_dominant(m, j) for j in nodes},
        right_negative=is_right_negative(m),
        left_positive=is_left_positive(m),
    )


def restrict_to_node(m: Monomial, j: int) -> Monomial:
    """The sl2 image ``beta_j(m)``: keep node ``j`` factors, relabelled to node 0."""
    return Monomial({(SL2_NODE, r): e for (i, r), e in m.factors if i == j})


def sl2_y(*exponents: int) -> Monomial:
    """``Y[r1] Y[r2] ...`` in the sl2 variables; repeated entries multiply."""
    return Monomial([((SL2_NODE, r), 1) for r in exponents])


# -- sl2 characters ----------------------------------------------------------


@dataclass(frozen=True, order=True)
class Segment:
    """``{c-r+1, c-r+3, ..., c+r-1}``: ``length`` q-exponents centred on ``centre``."""

    centre: int
    length: int

    def members(self) -> list[int]:
        return list(range(self.centre - self.length + 1, self.centre + self.length, 2))

    def in_special_position(self, other: "Segment") -> bool:
        a, b = set(self.members()), set(other.members())
        if a <= b or b <= a:
            return False
        union = sorted(a | b)
        return all(y - x == 2 for x, y in zip(union, union[1:]))


def _segment_from(lo: int, hi: int) -> Segment:
    return Segment((lo + hi) // 2, (hi - lo) // 2 + 1)


def sl2_segments(m: Monomial) -> list[Segment]:
    """Split a dominant sl2 monomial into segments, none in special position.

    Greedy: repeatedly peel off the longest string ``x, x+2, ...`` starting at
    the leftmost remaining exponent.
    """
    if not is_dominant(m):
        raise ValueError(f"{m} is not dominant")
    left = Counter()
    for (_, r), e in m.factors:
        left[r] += e
    out = []
    while left:
        lo = min(left)
        hi = lo
        while left.get(hi + 2, 0) > 0:
            hi += 2
        for r in range(lo, hi + 1, 2):
            left[r] -= 1
            if not left[r]:
                del left[r]
        out.append(_segment_from(lo, hi))
    return out


# an sl2 lowering pattern: sorted tuple of (r, count) for prod A_r^-count
Lowering = tuple[tuple[int, int], ...]


def kr_lowerings(seg: Segment) -> list[Lowering]:
    """Lowering patterns of the Kirillov-Reshetikhin character of a segment.

    The ``t``-th monomial is the highest one times ``A_{c+r}^-1 A_{c+r-2}^-1
    ... A_{c+r-2(t-1)}^-1``.
    """
    top = seg.centre + seg.length
    return [tuple((top - 2 * u, 1) for u in reversed(range(t))) for t in range(seg.length + 1)]


def _apply_lowering(m: Monomial, low: Lowering, a_of) -> Monomial:
    out = dict(m.factors)
    for r, k in low:
        for key, e in a_of(r).factors:
            out[key] = out.get(key, 0) - k * e
    return Monomial(out)


def _combine(a: Lowering, b: Lowering) -> Lowering:
    d = Counter(dict(a))
    d.update(dict(b))
    return tuple(sorted((r, k) for r, k in d.items() if k))


def sl2_expand_lowerings(m: Monomial, segments: list[Segment] | None = None) -> dict[Lowering, int]:
    """The irreducible sl2 character with highest monomial ``m``, as lowerings."""
    if segments is None:
        segments = sl2_segments(m)
    acc: dict[Lowering, int] = {(): 1}
    for seg in segments:
        nxt: dict[Lowering, int] = defaultdict(int)
        lows = kr_lowerings(seg)
        for base, mult in acc.items():
            for low in lows:
                nxt[_combine(base, low)] += mult
        acc = dict(nxt)
    return acc


def sl2_kr_character(centre: int, length: int) -> Counter:
    seg = Segment(centre, length)
    head = sl2_y(*seg.members())
    return Counter(_apply_lowering(head, low, sl2_a) for low in kr_lowerings(seg))


def sl2_expand(m: Monomial, segments: list[Segment] | None = None) -> Counter:
    """q-character of the irreducible sl2 module with highest monomial ``m``."""
    return Counter(
        {
            _apply_lowering(m, low, sl2_a): mult
            for low, mult in sl2_expand_lowerings(m, segments).items()
        }
    )


def sl2_decompose(character: Mapping[Monomial, int]) -> dict[Monomial, int] | None:
    """Write an sl2 Laurent polynomial as a sum of irreducible characters.

    Returns highest monomial -> multiplicity, or ``None`` if no nonnegative
    decomposition exists.  Peels off the character of a top-degree monomial,
    which must be dominant.
    """
    rest = Counter({k: v for k, v in character.items() if v})
    out: dict[Monomial, int] = {}
    while rest:
        if any(v < 0 for v in rest.values()):
            return None
        top = max(rest, key=lambda x: (x.degree, x.factors))
        if not is_dominant(top):
            return None
        k = rest[top]
        out[top] = out.get(top, 0) + k
        for mono, mult in sl2_expand(top).items():
            rest[mono] -= k * mult
            if rest[mono] == 0:
                del rest[mono]
    return out


# -- q-characters of fundamental modules --------------------------------------


class FMFailure(RuntimeError):
    pass


# lowering pattern in the full algebra: sorted tuple of ((j, r), count)
ALowering = tuple[tuple[tuple[int, int], int], ...]


@dataclass
class QCharacter:
    """q-character of ``V_{node, 0}`` with its lowering graph.

    ``lowerings[m]`` records ``m = head * prod A[j, r]^-count``; ``edges`` holds
    ``(m, m', j, r)`` with ``m' = m A[j, r]^-1`` whenever ``m`` has the factor
    ``Y[j, r-1]`` and both monomials occur.
    """

    rs: RootSystem = field(repr=False)
    node: int
    head: Monomial
    monomials: dict[Monomial, int]
    lowerings: dict[Monomial, ALowering]
    edges: list[tuple[Monomial, Monomial, int, int]]

    def __len__(self):
        return len(self.monomials)

    def __contains__(self, m):
        return m in self.monomials

    @property
    def dimension(self) -> int:
        return sum(self.monomials.values())

    def depth(self, m: Monomial) -> int:
        return sum(k for _, k in self.lowerings[m])

    def ordered(self) -> list[Monomial]:
        return sorted(self.monomials, key=lambda m: (self.depth(m), m.factors))

    @property
    def lowest(self) -> Monomial:
        return max(self.monomials, key=lambda m: (self.depth(m), m.factors))

    def shifted(self, k: int) -> Counter:
        return Counter({m.shift(k): v for m, v in self.monomials.items()})


def contains_monomial(qc: QCharacter, m: Monomial) -> int:
    return qc.monomials.get(m, 0)


def _merge_lowering(base: ALowering, j: int, low: Lowering) -> ALowering:
    d = dict(base)
    for r, k in low:
        d[(j, r)] = d.get((j, r), 0) + k
    return tuple(sorted(d.items()))


def fm_qcharacter(rs: RootSystem, i: int, max_monomials: int = DEFAULT_MAX_MONOMIALS) -> QCharacter:
    rs.check_node(i)
    head = Monomial.Y(i, 0)
    a_cache: dict[tuple[int, int], Monomial] = {}

    def a_of(j):
        def f(r):
            key = (j, r)
            if key not in a_cache:
                a_cache[key] = a_monomial(rs, j, r)
            return a_cache[key]

        return f

    mult: dict[Monomial, int] = {}
    lowerings: dict[Monomial, ALowering] = {head: ()}
    coloured: dict[Monomial, Counter] = defaultdict(Counter)
    heap = [(0, head.factors, head)]
    queued = {head}
    mass = 0
    while heap:
        depth, _, m = heapq.heappop(heap)
        if m == head:
            mult[m] = 1
        else:
            mult[m] = max(coloured[m].values())
        mass += mult[m]
        if mass > max_monomials:
            raise FMFailure(
                f"q-character of V_{i} on {rs.name} exceeds {max_monomials} monomials"
            )
        for j in rs.nodes:
            pending = mult[m] - coloured[m][j]
            if pending == 0:
                continue
            if not is_j_dominant(m, j):
                raise FMFailure(f"{m} is not {j}-dominant but is not covered in direction {j}")
            for low, k in sl2_expand_lowerings(restrict_to_node(m, j)).items():
                m2 = _apply_lowering(m, low, a_of(j)) if low else m
                coloured[m2][j] += pending * k
                if m2 not in queued:
                    queued.add(m2)
                    lowerings[m2] = _merge_lowering(lowerings[m], j, low)
                    d = depth + sum(c for _, c in low)
                    heapq.heappush(heap, (d, m2.factors, m2))
    for m, cols in coloured.items():
        for j, c in cols.items():
            if c > mult[m]:
                raise FMFailure(f"{m}: direction {j} requires multiplicity {c} > {mult[m]}")

    edges = []
    order = sorted(mult, key=lambda m: (sum(k for _, k in lowerings[m]), m.factors))
    for m in order:
        for (j, r), e in m.factors:
            if e > 0:
                m2 = m / a_of(j)(r + 1)
                if m2 in mult:
                    edges.append((m, m2, j, r + 1))
    qc = QCharacter(rs, i, head, {m: mult[m] for m in order}, {m: lowerings[m] for m in order}, edges)
    validate_sl2_structure(qc)
    return qc


def sl2_classes(qc: QCharacter, j: int) -> dict[ALowering, Counter]:
    """Group monomials whose lowerings agree away from node ``j``.

    Each class maps injectively to the sl2 variables under ``beta_j``; the
    classes are the terms of the refined restriction to the ``j``-th sl2.
    """
    classes: dict[ALowering, Counter] = defaultdict(Counter)
    for m, mult in qc.monomials.items():
        key = tuple(item for item in qc.lowerings[m] if item[0][0] != j)
        classes[key][restrict_to_node(m, j)] += mult
    return classes


def validate_sl2_structure(qc: QCharacter) -> None:
    for j in qc.rs.nodes:
        for key, chi in sl2_classes(qc, j).items():
            if sl2_decompose(chi) is None:
                raise FMFailure(
                    f"V_{qc.node} on {qc.rs.name}: restriction to node {j} is not a "
                    f"sum of sl2 characters (class {key})"
                )


def specialize(qc: QCharacter) -> Counter:
    """Classical character: ``Y[i, r] -> y_i``, as weight -> multiplicity."""
    out = Counter()
    for m, mult in qc.monomials.items():
        w = [0] * qc.rs.rank
        for (i, _), e in m.factors:
            w[i - 1] += e
        out[tuple(w)] += mult
    return out


def dual_flip(m: Monomial, shift: int = 0) -> Monomial:
    """``Y[j, n]^e -> Y[j, shift - n]^-e``."""
    return Monomial({(i, shift - r): -e for (i, r), e in m.factors})


def product_contains_one(rs: RootSystem, a, b, c, chars: dict | None = None) -> bool:
    """Whether ``1`` occurs in ``chi(V_{a}) chi(V_{b}) chi(V_{c})``.

    Each argument is ``(node, q_exponent)``.  Uses the quadratic-monomial
    reduction: the factor whose rapidity sits in the middle must contain
    ``Y[bar(j), e_j + h] Y[k, e_k]^-1`` (shifted to base 0) where ``j`` and
    ``k`` are the factors with the lowest and highest rapidity.
    """
    chars = {} if chars is None else chars
    slots = [tuple(a), tuple(b), tuple(c)]
    h = rs.h
    for low, mid, high in itertools.permutations(slots):
        (j, ej), (i, ei), (k, ek) = low, mid, high
        if not ej <= ei <= ek:
            continue
        if ek - ei > h or ei - ej > h:
            continue
        quad = Monomial({(rs.bar[j], ej + h - ei): 1}) * Monomial.Y(k, ek - ei, -1)
        if i not in chars:
            chars[i] = fm_qcharacter(rs, i)
        if contains_monomial(chars[i], quad):
            return True
    return False


def monomial_weight(m: Monomial, rank: int) -> tuple[int, ...]:
    w = [0] * rank
    for (i, _), e in m.factors:
        w[i - 1] += e
    return tuple(w)


class TripleProductScan:
    """Exhaustive search for ``1`` in a product of three shifted characters.

    Triples of monomials are prefiltered by classical weight (which a shift
    does not change); every weight-compatible triple is then tested exactly.
    """

    def __init__(self, rs: RootSystem, chars: dict | None = None):
        self.rs = rs
        self.chars = {} if chars is None else chars
        self._triples: dict[tuple[int, int, int], list] = {}

    def _char(self, i):
        if i not in self.chars:
            self.chars[i] = fm_qcharacter(self.rs, i)
        return self.chars[i]

    def compatible(self, i, j, k):
        key = (i, j, k)
        if key not in self._triples:
            n = self.rs.rank
            by_weight = defaultdict(list)
            for m3 in self._char(k).monomials:
                by_weight[monomial_weight(m3, n)].append(m3)
            out = []
            for m1 in self._char(i).monomials:
                w1 = monomial_weight(m1, n)
                for m2 in self._char(j).monomials:
                    w2 = monomial_weight(m2, n)
                    need = tuple(-a - b for a, b in zip(w1, w2))
                    for m3 in by_weight.get(need, ()):
                        out.append((m1, m2, m3))
            self._triples[key] = out
        return self._triples[key]

    def __call__(self, a, b, c) -> bool:
        (i, ei), (j, ej), (k, ek) = a, b, c
        for m1, m2, m3 in self.compatible(i, j, k):
            if (m1.shift(ei) * m2.shift(ej) * m3.shift(ek)).is_one():
                return True
        return False


def product_contains_one_bruteforce(rs: RootSystem, a, b, c, chars: dict | None = None) -> bool:
    """Direct scan of the triple product of shifted characters."""
    return TripleProductScan(rs, chars)(a, b, c)
