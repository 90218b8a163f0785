"""Finite topological spaces as preorders.

A finite space is stored as its minimal-open-set map: min_open(x) is the
smallest open set containing x (the intersection of all opens through x).
That map determines the topology, and the specialization preorder is read
off as x <= y iff x in min_open(y).  The space is T0 exactly when min_open
is injective, i.e. when the preorder is a partial order.

For spaces generated by a manifold the points are the nonvanishing words
and min_open(a) collects every word having a as a subsequence; under the
orientation above, larger words sit *below* their faces, matching the
usual picture where an edge lies under its endpoints in the Hasse graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .envelope import is_subsequence
from .errors import FinitaryError
from .manifolds import InfiniteDimensional, Manifold


class TooLarge(FinitaryError):
    pass


class FiniteSpace:
    """Points with display labels plus the minimal-open-set map.

    Construction checks x in min_open(x) and the nesting coherence
    y in min_open(x) => min_open(y) subset of min_open(x); together these
    make min_open the basis of an actual topology.
    """

    __slots__ = ("labels", "min_open")

    def __init__(self, labels: Sequence[str], min_open: Iterable):
        labels = tuple(labels)
        opens = tuple(frozenset(s) for s in min_open)
        if len(labels) != len(opens):
            raise ValueError("one min_open set per point required")
        if len(set(labels)) != len(labels):
            raise ValueError("point labels must be unique")
        for x, u in enumerate(opens):
            if x not in u:
                raise ValueError(f"point {labels[x]} missing from its own min_open")
            if not all(0 <= y < len(opens) for y in u):
                raise ValueError(f"min_open of {labels[x]} mentions unknown points")
            for y in u:
                if not opens[y] <= u:
                    raise ValueError(
                        f"min_open({labels[y]}) not nested inside min_open({labels[x]})"
                    )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "min_open", opens)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteSpace is immutable")

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def le(self, x: int, y: int) -> bool:
        """Specialization preorder: x <= y iff x belongs to min_open(y)."""
        return x in self.min_open[y]

    def __eq__(self, other):
        if isinstance(other, FiniteSpace):
            return self.labels == other.labels and self.min_open == other.min_open
        return NotImplemented

    def __hash__(self):
        return hash((self.labels, self.min_open))

    def __repr__(self):
        return f"FiniteSpace({self.n} points)"


@dataclass(frozen=True)
class HasseDiagram:
    """Covering pairs (lower, upper) of a finite T0 space, by point index."""

    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    def edge_labels(self) -> tuple[tuple[str, str], ...]:
        return tuple((self.labels[a], self.labels[b]) for a, b in self.edges)


def generated_space(m: Manifold) -> FiniteSpace:
    """The finite space on the nonvanishing words of a manifold.

    min_open(a) = all words containing a as a subsequence.  Only finite
    dimensional manifolds have a finite point set.
    """
    if not m.is_explicit and math.isinf(m.dimension()):
        raise InfiniteDimensional("generated space needs a finite word family")
    words = list(m.words())
    opens = [
        frozenset(j for j, b in enumerate(words) if is_subsequence(a, b))
        for a in words
    ]
    return FiniteSpace([m.word_label(w) for w in words], opens)


def is_t0(s: FiniteSpace) -> bool:
    """T0 iff distinct points have distinct minimal open sets."""
    return len(set(s.min_open)) == s.n


def t0_quotient(s: FiniteSpace) -> tuple[FiniteSpace, tuple[int, ...]]:
    """Collapse points with identical minimal open sets.

    Returns the quotient space and the class map (point index -> class
    index).  Classes are ordered by first occurrence and labelled by their
    first member; the quotient is always T0.
    """
    class_index: dict[frozenset, int] = {}
    class_of = []
    reps = []
    for x, u in enumerate(s.min_open):
        if u not in class_index:
            class_index[u] = len(reps)
            reps.append(x)
        class_of.append(class_index[u])
    opens = [
        frozenset(class_of[y] for y in s.min_open[rep])
        for rep in reps
    ]
    labels = [s.labels[rep] for rep in reps]
    return FiniteSpace(labels, opens), tuple(class_of)


def specialization_order(s: FiniteSpace) -> tuple[tuple[int, int], ...]:
    """All pairs (x, y) with x <= y, reflexive pairs included, sorted."""
    return tuple(
        sorted((x, y) for y in range(s.n) for x in s.min_open[y])
    )


def hasse(s: FiniteSpace) -> HasseDiagram:
    """Transitive reduction of the specialization order of a T0 space."""
    if not is_t0(s):
        raise ValueError("Hasse diagram requires a T0 space")
    edges = []
    for y in range(s.n):
        below = s.min_open[y] - {y}
        for x in below:
            if not any(x in s.min_open[z] for z in below if z != x):
                edges.append((x, y))
    return HasseDiagram(s.labels, tuple(sorted(edges)))


def open_sets(s: FiniteSpace) -> tuple[frozenset, ...]:
    """Every open set: all unions of minimal open sets.

    Guarded to at most 20 points; an antichain already has 2^n opens.
    """
    if s.n > 20:
        raise TooLarge(f"{s.n} points; open-set enumeration is capped at 20")
    q, class_of = t0_quotient(s)
    order = sorted(range(q.n), key=lambda x: len(q.min_open[x]))
    downs: list[frozenset] = []

    def build(i: int, current: frozenset):
        if i == len(order):
            downs.append(current)
            return
        p = order[i]
        build(i + 1, current)
        if q.min_open[p] - {p} <= current:
            build(i + 1, current | {p})

    build(0, frozenset())
    expanded = [
        frozenset(x for x in range(s.n) if class_of[x] in d) for d in downs
    ]
    return tuple(sorted(expanded, key=lambda u: (len(u), sorted(u))))


def _refine_colors(s: FiniteSpace) -> tuple[int, ...]:
    """Iterated invariant refinement over the specialization preorder."""
    down = s.min_open
    up = [frozenset(y for y in range(s.n) if x in s.min_open[y]) for x in range(s.n)]
    colors = [(len(down[x]), len(up[x])) for x in range(s.n)]
    while True:
        sigs = [
            (
                colors[x],
                tuple(sorted(colors[y] for y in down[x])),
                tuple(sorted(colors[y] for y in up[x])),
            )
            for x in range(s.n)
        ]
        palette = {sig: rank for rank, sig in enumerate(sorted(set(sigs)))}
        new = [palette[sig] for sig in sigs]
        if len(set(new)) == len(set(colors)):
            return tuple(new)
        colors = new


def poset_isomorphic(a: FiniteSpace, b: FiniteSpace) -> tuple[int, ...] | None:
    """Search for an order isomorphism between two T0 spaces.

    Returns a tuple mapping each point index of `a` to its image in `b`,
    or None.  Candidates are pruned by iterated degree/level invariants and
    tried in index order, so the result is deterministic and the identity
    is found first whenever it works.
    """
    if a.n != b.n:
        return None
    ca, cb = _refine_colors(a), _refine_colors(b)
    if sorted(ca) != sorted(cb):
        return None

    image: list[int | None] = [None] * a.n
    used = [False] * b.n

    def compatible(x: int, y: int) -> bool:
        for u, v in enumerate(image):
            if v is None:
                continue
            if a.le(u, x) != b.le(v, y) or a.le(x, u) != b.le(y, v):
                return False
        return True

    def assign(x: int) -> bool:
        if x == a.n:
            return True
        for y in range(b.n):
            if used[y] or cb[y] != ca[x] or not compatible(x, y):
                continue
            image[x] = y
            used[y] = True
            if assign(x + 1):
                return True
            image[x] = None
            used[y] = False
        return False

    if assign(0):
        return tuple(image)  # type: ignore[arg-type]
    return None
