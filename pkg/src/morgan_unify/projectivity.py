"""Projectivity of finite algebras, decided on their order duals.

Condition checkers for the lattice/fixed-point/completeness conditions,
theorem-based deciders per variety, the canonical embedding into a power
of DIAMOND, constructive retractions, and a brute-force retraction
search used as the agreement oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import PreconditionError, SizeGuardError, ValidationError
from .involutive import (
    DIAMOND,
    InvMorphism,
    InvPoset,
    kleene_part,
    make_inv_morphism,
    power,
)
from .order import (
    MonotoneMap,
    Poset,
    is_three_complete,
    lattice_report,
    make_monotone_map,
)

VARIETIES = ("bdl", "kleene", "demorgan")


@dataclass(frozen=True)
class ConditionReport:
    """Flags for the five dual conditions, with a witness per failure.

    m1: the carrier is a nonempty lattice.
    m2: every x <= i(x) has a fixed point above it.
    m3: the self-below-involution subposet is 3-complete.
    k1: that subposet is a nonempty meet semilattice.
    k2: cross-bounded pairs have a common upper bound below its involute.
    """

    m1: bool
    m2: bool
    m3: bool
    k1: bool
    k2: bool
    witnesses: dict[str, object]


def self_below_subposet(p: InvPoset) -> Poset:
    return p.base.restrict(p.self_below_inv())


def check_m2(p: InvPoset) -> tuple[bool, str | None]:
    fixed = set(p.fixed_points)
    for x in p.self_below_inv():
        if not any(y in fixed for y in p.base.up_of([x])):
            return False, x
    return True, None


def check_k2(p: InvPoset) -> tuple[bool, tuple[str, str] | None]:
    base = p.base
    candidates = [z for z in p.elements if base.leq(z, p.i(z))]
    for x, y in combinations_with_replacement(p.self_below_inv(), 2):
        if not (base.leq(x, p.i(y)) and base.leq(y, p.i(x))):
            continue
        ups = base.up_of([x]) & base.up_of([y])
        if not any(z in ups for z in candidates):
            return False, (x, y)
    return True, None


def m3_fast_path(p: InvPoset) -> bool:
    """First-order triple-wise form of 3-completeness; valid on lattices.

    Quantifies over triples whose pairwise joins sit below their own
    involutes and asks the same of the triple join.
    """
    if not lattice_report(p.base).is_nonempty_lattice:
        raise PreconditionError("triple-wise check requires a nonempty lattice")
    base = p.base
    elems = p.elements

    def good(*xs: str) -> bool:
        j = base.join(xs)
        assert j is not None
        return base.leq(j, p.i(j))

    for x, y, z in combinations_with_replacement(elems, 3):
        if good(x, y) and good(x, z) and good(y, z) and not good(x, y, z):
            return False
    return True


def condition_report(p: InvPoset) -> ConditionReport:
    witnesses: dict[str, object] = {}
    rep = lattice_report(p.base)
    m1 = rep.is_nonempty_lattice
    if not m1:
        witnesses["m1"] = rep.witness
    m2, w2 = check_m2(p)
    if not m2:
        witnesses["m2"] = w2
    sub = self_below_subposet(p)
    m3, w3 = is_three_complete(sub)
    if not m3:
        witnesses["m3"] = w3
    sub_rep = lattice_report(sub)
    k1 = sub_rep.is_meet_semilattice
    if not k1:
        witnesses["k1"] = sub_rep.witness
    k2, wk2 = check_k2(p)
    if not k2:
        witnesses["k2"] = wk2
    return ConditionReport(m1, m2, m3, k1, k2, witnesses)


def is_projective_dual(
    p: Poset | InvPoset, variety: str
) -> tuple[bool, ConditionReport]:
    """Theorem-based projectivity decision on the dual object.

    bdl needs a nonempty lattice; demorgan needs m1, m2, m3; kleene
    needs m2, m3, k1, k2 on a Kleene object.
    """
    if variety not in VARIETIES:
        raise PreconditionError(f"unknown variety {variety!r}")
    if variety == "bdl":
        base = p.base if isinstance(p, InvPoset) else p
        rep = lattice_report(base)
        report = ConditionReport(
            rep.is_nonempty_lattice,
            True,
            True,
            True,
            True,
            {} if rep.is_nonempty_lattice else {"m1": rep.witness},
        )
        return rep.is_nonempty_lattice, report
    if not isinstance(p, InvPoset):
        raise PreconditionError(f"variety {variety!r} needs an involutive poset")
    if variety == "kleene" and not p.is_kleene:
        raise PreconditionError("kleene projectivity asked of a non-Kleene object")
    report = condition_report(p)
    if variety == "demorgan":
        return report.m1 and report.m2 and report.m3, report
    return report.m2 and report.m3 and report.k1 and report.k2, report


def _coordinate(p: InvPoset, down: frozenset[str], x: str) -> str:
    """DIAMOND coordinate of x for the principal downset `down`.

    Encodes membership in the downset and in its De Morgan complement:
    both -> "2", downset only -> "0", complement only -> "1", neither ->
    "3".
    """
    in_x = x in down
    in_neg = p.i(x) not in down
    if in_x and in_neg:
        return "2"
    if in_x:
        return "0"
    if in_neg:
        return "1"
    return "3"


def _check_embedding(p: InvPoset, target: InvPoset, vectors: dict[str, str]) -> InvMorphism:
    e = make_inv_morphism(p, target, vectors)
    e.check()
    seen: dict[str, str] = {}
    for x in p.elements:
        if vectors[x] in seen:
            raise ValidationError(
                f"embedding not injective: {seen[vectors[x]]!r} and {x!r}",
                witness=x,
            )
        seen[vectors[x]] = x
    for x in p.elements:
        for y in p.elements:
            if target.base.leq(vectors[x], vectors[y]) and not p.base.leq(x, y):
                raise ValidationError(
                    f"embedding not order-reflecting on ({x!r}, {y!r})",
                    witness=(x, y),
                )
    return e


def canonical_embedding(
    p: InvPoset, prune: bool = False
) -> tuple[int, InvMorphism]:
    """Embed p into power(DIAMOND, n) with one coordinate per element.

    The coordinate at q classifies each point against the principal
    downset of q.  The result is injective, monotone, inv-commuting and
    order-reflecting; this contract is re-verified after construction.
    With prune=True, coordinates that are redundant for the contract are
    greedily dropped (first coordinate kept), shrinking oracle searches.
    """
    if not p.elements:
        raise PreconditionError("cannot embed the empty involutive poset")
    columns = []
    for q in p.elements:
        down = p.base._down[q]
        columns.append({x: _coordinate(p, down, x) for x in p.elements})

    def guard(dim: int) -> None:
        # the ambient power is materialized; 4^7 points is already past
        # desk scale, so refuse rather than thrash
        if dim > 6:
            raise SizeGuardError(
                f"embedding ambient D^{dim} too large; prune or shrink the input"
            )

    def contract_ok(cols: list[dict[str, str]]) -> bool:
        vecs = {x: "".join(c[x] for c in cols) for x in p.elements}
        if len(set(vecs.values())) != len(p.elements):
            return False
        for x in p.elements:
            for y in p.elements:
                if not p.base.leq(x, y):
                    if all(
                        DIAMOND.base.leq(c[x], c[y]) for c in cols
                    ):
                        return False
        return True

    if prune:
        kept = list(columns)
        i = len(kept) - 1
        while i >= 0 and len(kept) > 1:
            trial = kept[:i] + kept[i + 1 :]
            if contract_ok(trial):
                kept = trial
            i -= 1
        columns = kept

    n = len(columns)
    guard(n)
    target = power(DIAMOND, n)
    vectors = {x: "".join(c[x] for c in columns) for x in p.elements}
    return n, _check_embedding(p, target, vectors)


def _restriction_to_image(p: InvPoset, e: InvMorphism) -> dict[str, str]:
    return {e(x): x for x in p.elements}


def build_retraction(
    p: InvPoset, variety: str, embedding: tuple[int, InvMorphism] | None = None
) -> InvMorphism:
    """Constructive retraction of power(DIAMOND, n) (or its Kleene part)
    onto the embedded copy of p.

    Follows the proofs of the projectivity theorems: fixed vectors go to
    a fixed point squeezed between the join of the image elements below
    and the meet of those above; other vectors take the join or the meet
    according to the first non-fixed coordinate.  The output is verified
    to be a morphism restricting to the identity on the image.
    """
    if variety not in ("demorgan", "kleene"):
        raise PreconditionError("build_retraction supports demorgan and kleene")
    ok, report = is_projective_dual(p, variety)
    if not ok:
        raise PreconditionError(f"input is not projective for {variety}: {report}")
    n, e = embedding if embedding is not None else canonical_embedding(p)
    if n > 6:
        raise SizeGuardError(
            f"retraction ambient D^{n} too large; pass a pruned embedding"
        )
    ambient = power(DIAMOND, n)
    dom = kleene_part(ambient) if variety == "kleene" else ambient
    image = _restriction_to_image(p, e)
    base = p.base

    def originals_below(v: str) -> list[str]:
        return [image[w] for w in dom.base._down[v] if w in image]

    def originals_above(v: str) -> list[str]:
        return [image[w] for w in dom.base._up[v] if w in image]

    def fixed_between(lo: str | None, hi: str | None) -> str:
        for y in p.fixed_points:
            if lo is not None and not base.leq(lo, y):
                continue
            if hi is not None and not base.leq(y, hi):
                continue
            return y
        raise ValidationError("no eligible fixed point; input not projective?")

    mapping: dict[str, str] = {}
    if variety == "demorgan":
        for v in dom.elements:
            if v in image:
                mapping[v] = image[v]
            elif dom.i(v) == v:
                lo = base.join(originals_below(v))
                hi = base.meet(originals_above(v))
                mapping[v] = fixed_between(lo, hi)
            else:
                m = next(c for c in v if c in "23")
                if m == "2":
                    t = base.join(originals_below(v))
                else:
                    t = base.meet(originals_above(v))
                assert t is not None
                mapping[v] = t
    else:
        lower = [v for v in dom.elements if all(c in "201" for c in v)]
        for v in lower:
            if v in image:
                mapping[v] = image[v]
                continue
            lo = base.join(originals_below(v))
            if lo is None:
                raise ValidationError(f"join of lower originals missing at {v!r}")
            if dom.i(v) == v:
                mapping[v] = fixed_between(lo, None)
            else:
                mapping[v] = lo
        for v in dom.elements:
            if v not in mapping:
                mapping[v] = p.i(mapping[dom.i(v)])

    r = make_inv_morphism(dom, p, mapping)
    r.check()
    for x in p.elements:
        if r(e(x)) != x:
            raise ValidationError(f"retraction does not fix {x!r}", witness=x)
    return r


def oracle_retraction_search(
    p: InvPoset,
    embedding: tuple[int, InvMorphism] | None = None,
    variety: str = "demorgan",
) -> InvMorphism | None:
    """Exhaustive search for a retraction onto the embedded copy of p.

    Returns the first inv-commuting monotone map fixing the image, in
    canonical order, or None after exhausting the space.  Guarded to
    embeddings of dimension at most 4.
    """
    if variety not in ("demorgan", "kleene"):
        raise PreconditionError("oracle supports demorgan and kleene")
    if embedding is None:
        if len(p.elements) > 4:
            raise SizeGuardError(f"oracle guard: {len(p.elements)} elements exceed 4")
        embedding = canonical_embedding(p)
    n, e = embedding
    if n > 4:
        raise SizeGuardError(f"oracle guard: embedding dimension {n} exceeds 4")
    ambient = power(DIAMOND, n)
    dom = kleene_part(ambient) if variety == "kleene" else ambient
    image = _restriction_to_image(p, e)

    order = dom.base.linear_extension()
    assigned: dict[str, str] = {}

    def consistent(v: str, t: str) -> bool:
        for w, s in assigned.items():
            if dom.base.leq(w, v) and not p.base.leq(s, t):
                return False
            if dom.base.leq(v, w) and not p.base.leq(t, s):
                return False
        return True

    def extend(i: int) -> InvMorphism | None:
        while i < len(order) and order[i] in assigned:
            i += 1
        if i == len(order):
            return make_inv_morphism(dom, p, dict(assigned))
        v = order[i]
        vi = dom.i(v)
        candidates = (
            [image[v]] if v in image else list(p.elements)
        )
        for t in candidates:
            if v == vi and p.i(t) != t:
                continue
            if not consistent(v, t):
                continue
            assigned[v] = t
            if v != vi:
                ti = p.i(t)
                forced = image.get(vi)
                if (forced is None or forced == ti) and consistent(vi, ti):
                    assigned[vi] = ti
                    found = extend(i + 1)
                    if found is not None:
                        return found
                    del assigned[vi]
            else:
                found = extend(i + 1)
                if found is not None:
                    return found
            del assigned[v]
        return None

    return extend(0)


def cube_embedding(p: Poset) -> tuple[int, MonotoneMap]:
    """Order-reflecting embedding of a poset into the Boolean cube 2^n,
    one coordinate per principal downset (the bdl analog of the DIAMOND
    embedding)."""
    if not p.elements:
        raise PreconditionError("cannot embed the empty poset")
    n = len(p.elements)
    cube = _boolean_cube(n)
    vectors = {
        x: "".join("0" if p.leq(x, q) else "1" for q in p.elements)
        for x in p.elements
    }
    f = make_monotone_map(p, cube, vectors)
    f.check()
    for x in p.elements:
        for y in p.elements:
            if cube.leq(vectors[x], vectors[y]) and not p.leq(x, y):
                raise ValidationError(f"cube embedding not order-reflecting at ({x!r}, {y!r})")
    return n, f


def _boolean_cube(n: int) -> Poset:
    elems = []
    for k in range(1 << n):
        elems.append("".join("1" if k >> (n - 1 - i) & 1 else "0" for i in range(n)))
    elems.sort(key=lambda s: (s.count("1"), s))
    le = frozenset(
        (a, b)
        for a in elems
        for b in elems
        if all(ca <= cb for ca, cb in zip(a, b))
    )
    return Poset(tuple(elems), le)


def oracle_poset_retraction(p: Poset, embedding: tuple[int, MonotoneMap]) -> MonotoneMap | None:
    """Brute-force monotone retraction of the Boolean cube onto p's image."""
    n, e = embedding
    if n > 4:
        raise SizeGuardError(f"oracle guard: cube dimension {n} exceeds 4")
    cube = e.cod
    image = {e(x): x for x in p.elements}
    order = cube.linear_extension()
    assigned: dict[str, str] = {}

    def consistent(v: str, t: str) -> bool:
        for w, s in assigned.items():
            if cube.leq(w, v) and not p.leq(s, t):
                return False
            if cube.leq(v, w) and not p.leq(t, s):
                return False
        return True

    def extend(i: int) -> MonotoneMap | None:
        if i == len(order):
            return make_monotone_map(cube, p, dict(assigned))
        v = order[i]
        candidates = [image[v]] if v in image else list(p.elements)
        for t in candidates:
            if consistent(v, t):
                assigned[v] = t
                found = extend(i + 1)
                if found is not None:
                    return found
                del assigned[v]
        return None

    return extend(0)
