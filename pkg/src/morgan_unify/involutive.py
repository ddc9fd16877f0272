"""Involutive posets and their morphisms: duals of De Morgan algebras.

Provides the distinguished four-element object DIAMOND, finite products
and powers, the largest Kleene substructure, and enumeration of both
objects and morphisms at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import permutations
from typing import Iterable, Iterator

from .errors import ValidationError
from .order import MonotoneMap, Pair, Poset, find_isomorphism, validate_poset

InvMap = tuple[Pair, ...]


@dataclass(frozen=True)
class InvPoset:
    """Finite poset with an antitone involution (object of FPM)."""

    base: Poset
    inv_pairs: InvMap

    @cached_property
    def inv(self) -> dict[str, str]:
        return dict(self.inv_pairs)

    @property
    def elements(self) -> tuple[str, ...]:
        return self.base.elements

    def __len__(self) -> int:
        return len(self.base.elements)

    def i(self, x: str) -> str:
        return self.inv[x]

    @cached_property
    def is_kleene(self) -> bool:
        """True when every element is comparable with its involute."""
        return all(self.base.comparable(x, self.inv[x]) for x in self.elements)

    @cached_property
    def fixed_points(self) -> tuple[str, ...]:
        return tuple(x for x in self.elements if self.inv[x] == x)

    def self_below_inv(self) -> tuple[str, ...]:
        """Elements x with x <= i(x), in canonical order."""
        return tuple(x for x in self.elements if self.base.leq(x, self.inv[x]))

    def restrict(self, keep: Iterable[str]) -> "InvPoset":
        """Induced substructure; `keep` must be closed under the involution."""
        keep_set = set(keep)
        for x in keep_set:
            if self.inv[x] not in keep_set:
                raise ValidationError(
                    f"selection not involution-closed at {x!r}", witness=x
                )
        base = self.base.restrict(keep_set)
        return InvPoset(base, tuple((x, self.inv[x]) for x in base.elements))


def make_invposet(base: Poset, inv: dict[str, str]) -> InvPoset:
    return InvPoset(base, tuple((x, inv[x]) for x in base.elements))


def validate_involutive(base: Poset, inv: dict[str, str]) -> InvPoset:
    for x in base.elements:
        if x not in inv:
            raise ValidationError(f"involution undefined at {x!r}", witness=x)
        if inv[x] not in base:
            raise ValidationError(f"involution leaves carrier at {x!r}", witness=x)
    for x in base.elements:
        if inv[inv[x]] != x:
            raise ValidationError(
                f"not involutive at {x!r}: i(i({x!r})) = {inv[inv[x]]!r}", witness=x
            )
    for a, b in base.le:
        if not base.leq(inv[b], inv[a]):
            raise ValidationError(
                f"involution not antitone on {a!r} <= {b!r}", witness=(a, b)
            )
    return make_invposet(base, inv)


#: Dual of the one-generated free De Morgan algebra: 2 <= 0,1 <= 3,
#: involution fixes 0 and 1 and swaps 2 with 3.
DIAMOND = validate_involutive(
    validate_poset(["2", "0", "1", "3"], [("2", "0"), ("2", "1"), ("0", "3"), ("1", "3")]),
    {"0": "0", "1": "1", "2": "3", "3": "2"},
)


@dataclass(frozen=True)
class InvMorphism:
    dom: InvPoset
    cod: InvPoset
    mapping: tuple[Pair, ...]

    @cached_property
    def as_dict(self) -> dict[str, str]:
        return dict(self.mapping)

    def __call__(self, x: str) -> str:
        return self.as_dict[x]

    @cached_property
    def image(self) -> frozenset[str]:
        return frozenset(self.as_dict.values())

    @property
    def monotone_part(self) -> MonotoneMap:
        return MonotoneMap(self.dom.base, self.cod.base, self.mapping)

    def is_identity(self) -> bool:
        return self.dom == self.cod and all(a == b for a, b in self.mapping)

    def check(self) -> None:
        f = self.as_dict
        if set(f) != set(self.dom.elements):
            raise ValidationError("map is not total on its domain")
        for x in self.dom.elements:
            if f[self.dom.i(x)] != self.cod.i(f[x]):
                raise ValidationError(
                    f"involution commutation fails at {x!r}", witness=x
                )
        self.monotone_part.check()


def make_inv_morphism(dom: InvPoset, cod: InvPoset, mapping: dict[str, str]) -> InvMorphism:
    return InvMorphism(dom, cod, tuple((x, mapping[x]) for x in dom.elements))


def validate_inv_morphism(
    dom: InvPoset, cod: InvPoset, mapping: dict[str, str]
) -> InvMorphism:
    f = make_inv_morphism(dom, cod, mapping)
    f.check()
    return f


def compose_inv(g: InvMorphism, f: InvMorphism) -> InvMorphism:
    if f.cod != g.dom:
        raise ValidationError("composition mismatch: cod(f) != dom(g)")
    return make_inv_morphism(f.dom, g.cod, {x: g(f(x)) for x in f.dom.elements})


def identity_inv(p: InvPoset) -> InvMorphism:
    return make_inv_morphism(p, p, {x: x for x in p.elements})


def product(p: InvPoset, q: InvPoset, sep: str = "") -> InvPoset:
    """Product in FPM: pairwise order, coordinatewise involution.

    Element names concatenate the factors' names (digit strings for
    powers of DIAMOND, matching the usual labelling of D^n).
    """
    names = {}
    elems = []
    for a in p.elements:
        for b in q.elements:
            name = a + sep + b
            if name in names:
                raise ValidationError(f"ambiguous product label {name!r}", name)
            names[name] = (a, b)
            elems.append(name)
    le = frozenset(
        (x, y)
        for x, (a, b) in names.items()
        for y, (c, d) in names.items()
        if p.base.leq(a, c) and q.base.leq(b, d)
    )
    base = Poset(tuple(elems), le)
    inv = {x: p.i(a) + sep + q.i(b) for x, (a, b) in names.items()}
    return make_invposet(base, inv)


def power(p: InvPoset, n: int, sep: str = "") -> InvPoset:
    """n-fold product; power(p, 1) is p itself."""
    if n < 0:
        raise ValidationError("power exponent must be nonnegative")
    if n == 0:
        base = validate_poset([""], [])
        return make_invposet(base, {"": ""})
    return reduce(lambda acc, _: product(acc, p, sep), range(n - 1), p)


def kleene_part(p: InvPoset) -> InvPoset:
    """Largest substructure whose every element is comparable with its involute."""
    keep = [x for x in p.elements if p.base.comparable(x, p.i(x))]
    return p.restrict(keep)


def enumerate_inv_morphisms(p: InvPoset, q: InvPoset) -> Iterator[InvMorphism]:
    """All FPM-morphisms p -> q, each exactly once, deterministically.

    Backtracks over involution orbits in a linear extension of the
    domain, pruning by monotonicity and commutation jointly.
    """
    order = p.base.linear_extension()
    assigned: dict[str, str] = {}

    def consistent(x: str, u: str) -> bool:
        for y, v in assigned.items():
            if p.base.leq(y, x) and not q.base.leq(v, u):
                return False
            if p.base.leq(x, y) and not q.base.leq(u, v):
                return False
        return True

    def extend(i: int) -> Iterator[InvMorphism]:
        while i < len(order) and order[i] in assigned:
            i += 1
        if i == len(order):
            yield make_inv_morphism(p, q, dict(assigned))
            return
        x = order[i]
        xi = p.i(x)
        for u in q.elements:
            if x == xi and q.i(u) != u:
                continue
            if not consistent(x, u):
                continue
            assigned[x] = u
            if x != xi:
                ui = q.i(u)
                if consistent(xi, ui):
                    assigned[xi] = ui
                    yield from extend(i + 1)
                    del assigned[xi]
            else:
                yield from extend(i + 1)
            del assigned[x]

    yield from extend(0)


def find_inv_isomorphism(p: InvPoset, q: InvPoset) -> dict[str, str] | None:
    return find_isomorphism(p.base, q.base, op_p=p.inv, op_q=q.inv)


def involutions_of(p: Poset) -> Iterator[dict[str, str]]:
    """All antitone involutions on p, in deterministic order."""
    n = len(p.elements)
    for perm in permutations(range(n)):
        sigma = {p.elements[i]: p.elements[perm[i]] for i in range(n)}
        if any(sigma[sigma[x]] != x for x in p.elements):
            continue
        if all(p.leq(sigma[b], sigma[a]) for a, b in p.le):
            yield sigma


def enumerate_invposets_upto(
    k: int, poset_classes: Iterable[Poset] | None = None
) -> Iterator[InvPoset]:
    """All involutive posets with at most k elements, one per class.

    Classes are pairs (poset class, involution) up to isomorphisms that
    commute with the involutions.
    """
    from .order import enumerate_posets_upto

    classes = poset_classes if poset_classes is not None else enumerate_posets_upto(k)
    for base in classes:
        reps: list[InvPoset] = []
        for sigma in involutions_of(base):
            cand = make_invposet(base, sigma)
            if not any(find_inv_isomorphism(cand, r) is not None for r in reps):
                reps.append(cand)
                yield cand
