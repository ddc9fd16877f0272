"""Finite posets: validation, subposets, bounds, enumeration, isomorphism.

Element identifiers are opaque strings.  The order relation is stored
reflexive-transitively closed; the `elements` tuple fixes the canonical
iteration order used for all deterministic tie-breaking downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ValidationError

Pair = tuple[str, str]

#: counts of poset isomorphism classes by size, used as an enumeration oracle
POSET_CLASS_COUNTS = (1, 1, 2, 5, 16, 63, 318)


@dataclass(frozen=True)
class Poset:
    elements: tuple[str, ...]
    le: frozenset[Pair]

    @cached_property
    def index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.elements)}

    @cached_property
    def _down(self) -> dict[str, frozenset[str]]:
        down: dict[str, set[str]] = {x: set() for x in self.elements}
        for a, b in self.le:
            down[b].add(a)
        return {x: frozenset(s) for x, s in down.items()}

    @cached_property
    def _up(self) -> dict[str, frozenset[str]]:
        up: dict[str, set[str]] = {x: set() for x in self.elements}
        for a, b in self.le:
            up[a].add(b)
        return {x: frozenset(s) for x, s in up.items()}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: str) -> bool:
        return x in self.index

    def leq(self, x: str, y: str) -> bool:
        return (x, y) in self.le

    def strictly_below(self, x: str, y: str) -> bool:
        return x != y and (x, y) in self.le

    def comparable(self, x: str, y: str) -> bool:
        return (x, y) in self.le or (y, x) in self.le

    def down_of(self, xs: Iterable[str]) -> frozenset[str]:
        out: set[str] = set()
        for x in xs:
            out |= self._down[x]
        return frozenset(out)

    def up_of(self, xs: Iterable[str]) -> frozenset[str]:
        out: set[str] = set()
        for x in xs:
            out |= self._up[x]
        return frozenset(out)

    def interval(self, x: str, y: str) -> frozenset[str]:
        return self._up[x] & self._down[y]

    def minimals(self) -> tuple[str, ...]:
        return tuple(x for x in self.elements if self._down[x] == frozenset({x}))

    def maximals(self) -> tuple[str, ...]:
        return tuple(x for x in self.elements if self._up[x] == frozenset({x}))

    def upper_bounds(self, xs: Iterable[str]) -> frozenset[str]:
        out: frozenset[str] | None = None
        for x in xs:
            out = self._up[x] if out is None else out & self._up[x]
        return frozenset(self.elements) if out is None else out

    def lower_bounds(self, xs: Iterable[str]) -> frozenset[str]:
        out: frozenset[str] | None = None
        for x in xs:
            out = self._down[x] if out is None else out & self._down[x]
        return frozenset(self.elements) if out is None else out

    def join(self, xs: Iterable[str]) -> str | None:
        """Least upper bound of `xs` in this poset, or None if absent.

        join([]) is the bottom element when one exists.
        """
        ub = self.upper_bounds(xs)
        for u in self.elements:
            if u in ub and ub <= self._up[u]:
                return u
        return None

    def meet(self, xs: Iterable[str]) -> str | None:
        lb = self.lower_bounds(xs)
        for v in self.elements:
            if v in lb and lb <= self._down[v]:
                return v
        return None

    def bottom(self) -> str | None:
        return self.join(())

    def top(self) -> str | None:
        return self.meet(())

    def covers(self) -> tuple[Pair, ...]:
        """Cover pairs (a, b) with a < b and nothing strictly between."""
        out = []
        for a in self.elements:
            for b in self.elements:
                if a == b or not self.leq(a, b):
                    continue
                between = self._up[a] & self._down[b] - {a, b}
                if not between:
                    out.append((a, b))
        out.sort(key=lambda p: (self.index[p[0]], self.index[p[1]]))
        return tuple(out)

    def dual(self) -> "Poset":
        return Poset(self.elements, frozenset((b, a) for a, b in self.le))

    def restrict(self, keep: Iterable[str]) -> "Poset":
        """Induced subposet; element order is inherited from this poset."""
        keep_set = set(keep)
        unknown = keep_set - set(self.elements)
        if unknown:
            raise ValidationError(
                f"unknown element {min(unknown)!r}", witness=min(unknown)
            )
        elems = tuple(x for x in self.elements if x in keep_set)
        le = frozenset((a, b) for a, b in self.le if a in keep_set and b in keep_set)
        return Poset(elems, le)

    def linear_extension(self) -> tuple[str, ...]:
        """Canonical linear extension: by downset size, then input order."""
        return tuple(
            sorted(self.elements, key=lambda x: (len(self._down[x]), self.index[x]))
        )


@dataclass(frozen=True)
class MonotoneMap:
    dom: Poset
    cod: Poset
    mapping: tuple[Pair, ...]

    @cached_property
    def as_dict(self) -> dict[str, str]:
        return dict(self.mapping)

    def __call__(self, x: str) -> str:
        return self.as_dict[x]

    @cached_property
    def image(self) -> frozenset[str]:
        return frozenset(self.as_dict.values())

    def is_identity(self) -> bool:
        return self.dom == self.cod and all(a == b for a, b in self.mapping)

    def check(self) -> None:
        f = self.as_dict
        if set(f) != set(self.dom.elements):
            raise ValidationError("map is not total on its domain")
        for v in f.values():
            if v not in self.cod:
                raise ValidationError(f"image element {v!r} not in codomain", v)
        for x, y in self.dom.le:
            if not self.cod.leq(f[x], f[y]):
                raise ValidationError(
                    f"monotonicity fails on {x!r} <= {y!r}", witness=(x, y)
                )


def make_monotone_map(dom: Poset, cod: Poset, mapping: dict[str, str]) -> MonotoneMap:
    return MonotoneMap(dom, cod, tuple((x, mapping[x]) for x in dom.elements))


def validate_monotone_map(
    dom: Poset, cod: Poset, mapping: dict[str, str]
) -> MonotoneMap:
    f = make_monotone_map(dom, cod, mapping)
    f.check()
    return f


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """g after f; domains must chain."""
    if f.cod != g.dom:
        raise ValidationError("composition mismatch: cod(f) != dom(g)")
    return make_monotone_map(f.dom, g.cod, {x: g(f(x)) for x in f.dom.elements})


def identity_map(p: Poset) -> MonotoneMap:
    return make_monotone_map(p, p, {x: x for x in p.elements})


def validate_poset(
    elements: Sequence[str], pairs: Iterable[Pair], mode: str = "covers"
) -> Poset:
    """Build a Poset from raw data.

    mode "covers": reflexive-transitive closure is computed, then
    antisymmetry is checked.  mode "le": the relation is taken as given
    (reflexive pairs may be omitted) and transitivity gaps are errors.
    """
    if mode not in ("covers", "le"):
        raise ValidationError(f"unknown closure mode {mode!r}")
    elems = tuple(elements)
    seen: set[str] = set()
    for x in elems:
        if x in seen:
            raise ValidationError(f"duplicate element {x!r}", witness=x)
        seen.add(x)
    pair_list = list(pairs)
    for a, b in pair_list:
        if a not in seen or b not in seen:
            bad = a if a not in seen else b
            raise ValidationError(f"dangling pair ({a!r}, {b!r})", witness=bad)

    succ: dict[str, set[str]] = {x: {x} for x in elems}
    for a, b in pair_list:
        succ[a].add(b)

    if mode == "covers":
        changed = True
        while changed:
            changed = False
            for x in elems:
                extra = set()
                for y in succ[x]:
                    extra |= succ[y]
                if not extra <= succ[x]:
                    succ[x] |= extra
                    changed = True
    else:
        for x in elems:
            for y in succ[x]:
                missing = succ[y] - succ[x]
                if missing:
                    z = min(missing)
                    raise ValidationError(
                        f"transitivity gap: {x!r} <= {y!r} <= {z!r} "
                        f"but ({x!r}, {z!r}) missing",
                        witness=(x, y, z),
                    )

    for x in elems:
        for y in succ[x]:
            if x != y and x in succ[y]:
                raise ValidationError(
                    f"antisymmetry violation: cycle through {x!r} and {y!r}",
                    witness=(x, y),
                )

    le = frozenset((x, y) for x in elems for y in succ[x])
    return Poset(elems, le)


def subposet(p: Poset, selector: tuple) -> tuple[Poset, frozenset[str]]:
    """Induced subposet by selector.

    Selectors: ("explicit", xs), ("down", xs), ("up", xs),
    ("interval", x, y), ("minimals",), ("maximals",).
    """
    kind = selector[0]
    if kind == "explicit":
        chosen = frozenset(selector[1])
        for x in chosen:
            if x not in p:
                raise ValidationError(f"unknown element {x!r}", witness=x)
    elif kind == "down":
        chosen = p.down_of(_known(p, selector[1]))
    elif kind == "up":
        chosen = p.up_of(_known(p, selector[1]))
    elif kind == "interval":
        x, y = _known(p, (selector[1], selector[2]))
        chosen = p.interval(x, y)
    elif kind == "minimals":
        chosen = frozenset(p.minimals())
    elif kind == "maximals":
        chosen = frozenset(p.maximals())
    else:
        raise ValidationError(f"unknown selector {kind!r}")
    return p.restrict(chosen), frozenset(chosen)


def _known(p: Poset, xs: Iterable[str]) -> tuple[str, ...]:
    out = tuple(xs)
    for x in out:
        if x not in p:
            raise ValidationError(f"unknown element {x!r}", witness=x)
    return out


def join_of(p: Poset, xs: Iterable[str]) -> str | None:
    return p.join(_known(p, xs))


def meet_of(p: Poset, xs: Iterable[str]) -> str | None:
    return p.meet(_known(p, xs))


@dataclass(frozen=True)
class LatticeReport:
    is_nonempty_lattice: bool
    is_meet_semilattice: bool
    witness: Pair | None


def lattice_report(p: Poset) -> LatticeReport:
    """Pairwise join/meet diagnostics.

    The witness is the first pair, in canonical order, lacking a join or
    a meet.  The empty poset is not a nonempty lattice.
    """
    if not p.elements:
        return LatticeReport(False, False, None)
    witness = None
    is_lattice = True
    is_meet = True
    for x, y in combinations(p.elements, 2):
        no_join = p.join((x, y)) is None
        no_meet = p.meet((x, y)) is None
        if no_meet:
            is_meet = False
        if no_join or no_meet:
            is_lattice = False
            if witness is None:
                witness = (x, y)
    return LatticeReport(is_lattice, is_meet, witness)


def is_three_complete(p: Poset) -> tuple[bool, frozenset[str] | None]:
    """Whether every nonempty pairwise-bounded subset has a supremum.

    Enumerates antichain-generated subsets depth-first in canonical
    order, pruning any extension that introduces a bound-less pair, and
    returns the first counterexample subset found.
    """
    elems = p.elements
    n = len(elems)

    def bounded(x: str, y: str) -> bool:
        return bool(p.upper_bounds((x, y)))

    def walk(current: list[str], start: int) -> frozenset[str] | None:
        if len(current) >= 2 and p.join(current) is None:
            return frozenset(current)
        for i in range(start, n):
            z = elems[i]
            if all(bounded(x, z) for x in current):
                current.append(z)
                bad = walk(current, i + 1)
                if bad is not None:
                    return bad
                current.pop()
        return None

    for i in range(n):
        bad = walk([elems[i]], i + 1)
        if bad is not None:
            return False, bad
    return True, None


def _transitive_masks(n: int) -> Iterator[tuple[int, ...]]:
    """Successor bitmasks of all transitive strict orders refining 0<1<...<n-1."""
    if n == 0:
        yield ()
        return
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    for mask in range(1 << m):
        succ = [0] * n
        for k in range(m):
            if mask >> k & 1:
                i, j = pairs[k]
                succ[i] |= 1 << j
        ok = True
        for i in range(n):
            si = succ[i]
            rest = si
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if succ[j] & ~si:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(succ)


def _poset_from_mask(succ: tuple[int, ...]) -> Poset:
    n = len(succ)
    elems = tuple(str(i) for i in range(n))
    le = set()
    for i in range(n):
        le.add((elems[i], elems[i]))
        for j in range(n):
            if succ[i] >> j & 1:
                le.add((elems[i], elems[j]))
    return Poset(elems, frozenset(le))


def _iso_signature(p: Poset):
    degs = sorted((len(p._down[x]), len(p._up[x])) for x in p.elements)
    return len(p.elements), len(p.le), tuple(degs)


def enumerate_posets_upto(k: int) -> Iterator[Poset]:
    """All posets with at most k elements, one per isomorphism class.

    Every poset has a linear extension, so classes are harvested from
    orders refining a fixed linear order and deduplicated up to
    isomorphism.  Deterministic output order.
    """
    for n in range(k + 1):
        buckets: dict[object, list[Poset]] = {}
        for succ in _transitive_masks(n):
            cand = _poset_from_mask(succ)
            sig = _iso_signature(cand)
            known = buckets.setdefault(sig, [])
            if not any(find_isomorphism(cand, rep) is not None for rep in known):
                known.append(cand)
                yield cand


def find_isomorphism(
    p: Poset,
    q: Poset,
    op_p: dict[str, str] | None = None,
    op_q: dict[str, str] | None = None,
) -> dict[str, str] | None:
    """Order isomorphism p -> q, or None.

    When the optional unary operations are given (involutions), the
    isomorphism must also commute with them.  Backtracking with
    degree-level invariants; deterministic first result.
    """
    if len(p.elements) != len(q.elements) or len(p.le) != len(q.le):
        return None

    def inv_p(x: str):
        base = (len(p._down[x]), len(p._up[x]))
        return base + ((op_p[x] == x,) if op_p else ())

    def inv_q(u: str):
        base = (len(q._down[u]), len(q._up[u]))
        return base + ((op_q[u] == u,) if op_q else ())

    if sorted(map(inv_p, p.elements)) != sorted(map(inv_q, q.elements)):
        return None

    order = p.linear_extension()
    assigned: dict[str, str] = {}
    used: set[str] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for u in q.elements:
            if u in used or inv_p(x) != inv_q(u):
                continue
            ok = True
            for y, v in assigned.items():
                if p.leq(x, y) != q.leq(u, v) or p.leq(y, x) != q.leq(v, u):
                    ok = False
                    break
                if op_p is not None:
                    if op_p[y] == x and op_q[v] != u:
                        ok = False
                        break
                    if op_p[x] == y and op_q[u] != v:
                        ok = False
                        break
            if op_p is not None and op_p[x] == x and op_q[u] != u:
                ok = False
            if not ok:
                continue
            assigned[x] = u
            used.add(u)
            if extend(i + 1):
                return True
            del assigned[x]
            used.remove(u)
        return False

    if extend(0):
        return dict(assigned)
    return None


def enumerate_monotone_maps(p: Poset, q: Poset) -> Iterator[MonotoneMap]:
    """All monotone maps p -> q, deterministically, each exactly once."""
    order = p.linear_extension()
    assigned: dict[str, str] = {}

    def extend(i: int) -> Iterator[MonotoneMap]:
        if i == len(order):
            yield make_monotone_map(p, q, dict(assigned))
            return
        x = order[i]
        for u in q.elements:
            if all(
                not p.leq(y, x) or q.leq(assigned[y], u) for y in order[:i]
            ):
                assigned[x] = u
                yield from extend(i + 1)
                del assigned[x]

    yield from extend(0)
