"""Classification of unification instances over the finite duals.

Solvability tests, the Kleene and De Morgan unification cores, the
three classification theorems with machine-checkable certificates,
nullarity-pattern search, the witness families T_n with their unifier
schemas, the generality preorder, and a bounded unifier enumerator used
as the audit oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterator, Union

from .errors import PreconditionError, SizeGuardError, ValidationError
from .involutive import (
    InvMorphism,
    InvPoset,
    enumerate_inv_morphisms,
    enumerate_invposets_upto,
    make_inv_morphism,
    validate_involutive,
)
from .order import (
    MonotoneMap,
    Poset,
    enumerate_monotone_maps,
    enumerate_posets_upto,
    identity_map,
    lattice_report,
    make_monotone_map,
    validate_poset,
)
from .projectivity import condition_report, is_projective_dual

UNITARY = "unitary"
FINITARY = "finitary"
NULLARY = "nullary"

PATTERN_FAMILIES = ("bdl", "k1", "k2", "m1", "m2", "m3")

Unifier = Union[MonotoneMap, InvMorphism]


@dataclass(frozen=True)
class MostGeneral:
    unifier: Unifier


@dataclass(frozen=True)
class MuSet:
    members: tuple[Unifier, ...]


@dataclass(frozen=True)
class NullPattern:
    family: str
    anchors: tuple[tuple[str, str], ...]

    @property
    def as_dict(self) -> dict[str, str]:
        return dict(self.anchors)


Certificate = Union[MostGeneral, MuSet, NullPattern]


@dataclass(frozen=True)
class UnifClassification:
    solvable: bool
    utype: str | None
    certificate: Certificate | None
    core: InvPoset | None

    def __post_init__(self):
        if self.solvable:
            expected = {UNITARY: MostGeneral, FINITARY: MuSet, NULLARY: NullPattern}
            assert self.utype in expected
            assert isinstance(self.certificate, expected[self.utype])
        else:
            assert self.utype is None and self.certificate is None


def _require_variety(q, variety: str) -> None:
    if variety == "bdl":
        if not isinstance(q, Poset):
            raise PreconditionError("bdl instances are bare posets")
    elif variety in ("kleene", "demorgan"):
        if not isinstance(q, InvPoset):
            raise PreconditionError(f"{variety} instances are involutive posets")
        if variety == "kleene" and not q.is_kleene:
            raise PreconditionError("kleene instance must be a Kleene object")
    else:
        raise PreconditionError(f"unknown variety {variety!r}")


def is_solvable(q, variety: str) -> bool:
    """bdl: nonempty carrier; kleene/demorgan: a fixed point exists."""
    _require_variety(q, variety)
    if variety == "bdl":
        return bool(q.elements)
    return bool(q.fixed_points)


def kleene_core(q: InvPoset) -> InvPoset:
    """Substructure every Kleene unifier factors through.

    Carrier keeps the points tied to a fixed point from below or above.
    The order keeps x <= y only when both sit on the same side of their
    involutes or a fixed point separates them; the three clauses are
    already transitive on Kleene objects, which is re-checked here.
    """
    if not q.is_kleene:
        raise PreconditionError("kleene_core needs a Kleene object")
    base = q.base
    fixed = set(q.fixed_points)
    carrier = [
        x
        for x in q.elements
        if any(base.leq(x, z) or base.leq(z, x) for z in fixed)
    ]
    inside = set(carrier)

    def keep(x: str, y: str) -> bool:
        if base.leq(x, q.i(x)) and base.leq(y, q.i(y)):
            return True
        if base.leq(q.i(x), x) and base.leq(q.i(y), y):
            return True
        return any(base.leq(x, z) and base.leq(z, y) for z in fixed)

    le = {
        (x, y)
        for x, y in base.le
        if x in inside and y in inside and keep(x, y)
    }
    for x, y in list(le):
        for z in carrier:
            if (y, z) in le and (x, z) not in le:
                raise ValidationError(
                    "kleene core clauses not transitive (unexpected on a "
                    f"Kleene object): {x!r} <= {y!r} <= {z!r}",
                    witness=(x, y, z),
                )
    core_base = Poset(tuple(x for x in q.elements if x in inside), frozenset(le))
    return validate_involutive(core_base, {x: q.i(x) for x in carrier})


def demorgan_core(q: InvPoset) -> InvPoset:
    """Substructure every De Morgan unifier factors through.

    Keeps x when some single point sits below x, its involute, and a
    fixed point simultaneously; the order is plain restriction.
    """
    base = q.base
    fixed = set(q.fixed_points)
    carrier = [
        x
        for x in q.elements
        if any(
            base.leq(y, x) and base.leq(y, q.i(x)) and any(base.leq(y, z) for z in fixed)
            for y in q.elements
        )
    ]
    return q.restrict(carrier)


def core_of(q: InvPoset, variety: str) -> InvPoset:
    return kleene_core(q) if variety == "kleene" else demorgan_core(q)


def interval_structure(p: InvPoset, x: str) -> InvPoset:
    """The involution-closed interval [x, i(x)] with inherited structure."""
    return p.restrict(p.base.interval(x, p.i(x)))


def _interval_ok(p: InvPoset, x: str, variety: str) -> bool:
    piece = interval_structure(p, x)
    rep = condition_report(piece)
    if variety == "kleene":
        return rep.k1 and rep.m3
    return rep.m1 and rep.m2 and rep.m3


def _all_intervals_ok(core: InvPoset, variety: str) -> bool:
    return all(
        _interval_ok(core, x, variety) for x in core.self_below_inv()
    )


def inclusion_unifier(sub: InvPoset, q: InvPoset) -> InvMorphism:
    return make_inv_morphism(sub, q, {x: x for x in sub.elements})


def classify(q, variety: str) -> UnifClassification:
    """Unification type with a certificate, per the classification theorems.

    Unsolvable instances report solvable=False and nothing else.
    Certificates: unitary carries the inclusion of the core (identity
    for bdl), finitary the interval mu-set, nullary a pattern tuple
    located in the structure the theorem case analysis names.
    """
    _require_variety(q, variety)
    if not is_solvable(q, variety):
        return UnifClassification(False, None, None, None)

    if variety == "bdl":
        if lattice_report(q).is_nonempty_lattice:
            return UnifClassification(True, UNITARY, MostGeneral(identity_map(q)), None)
        if _bdl_intervals_ok(q):
            return UnifClassification(True, FINITARY, MuSet(tuple(mu_set(q, "bdl"))), None)
        anchors = find_null_pattern(q, "bdl")
        assert anchors is not None
        return UnifClassification(
            True, NULLARY, NullPattern("bdl", tuple(sorted(anchors.items()))), None
        )

    core = core_of(q, variety)
    rep = condition_report(core)
    if variety == "kleene":
        unit = rep.k1 and rep.m3
        fin_head = not rep.k1
    else:
        unit = rep.m1 and rep.m2 and rep.m3
        fin_head = not rep.m1
    if unit:
        return UnifClassification(
            True, UNITARY, MostGeneral(inclusion_unifier(core, q)), core
        )
    if fin_head and _all_intervals_ok(core, variety):
        return UnifClassification(
            True, FINITARY, MuSet(tuple(mu_set(q, variety))), core
        )
    family = _nullary_family(core, variety)
    anchors = find_null_pattern(core, family)
    if anchors is None:
        raise ValidationError(
            f"classification says nullary but no {family!r} pattern found; "
            "this contradicts the classification theorem"
        )
    return UnifClassification(
        True, NULLARY, NullPattern(family, tuple(sorted(anchors.items()))), core
    )


def _bdl_intervals_ok(q: Poset) -> bool:
    for x in q.elements:
        for y in q.elements:
            if q.leq(x, y):
                piece = q.restrict(q.interval(x, y))
                if not lattice_report(piece).is_nonempty_lattice:
                    return False
    return True


def _nullary_family(core: InvPoset, variety: str) -> str:
    """Which pattern family the theorem's case analysis lands on."""
    xs = core.self_below_inv()
    if variety == "kleene":
        if any(not condition_report(interval_structure(core, x)).k1 for x in xs):
            return "k1"
        return "k2"
    if any(not condition_report(interval_structure(core, x)).m1 for x in xs):
        return "m1"
    if any(not condition_report(interval_structure(core, x)).m2 for x in xs):
        return "m2"
    return "m3"


def mu_set(q, variety: str) -> list[Unifier]:
    """The interval mu-set of a finitary instance.

    bdl: inclusions of [x, y] for minimal x below maximal y.  kleene and
    demorgan: inclusions of the core intervals [x, i(x)] at minimal
    core points.  Members are pairwise incomparable and every unifier
    factors through one of them.
    """
    _require_variety(q, variety)
    if variety == "bdl":
        if lattice_report(q).is_nonempty_lattice or not _bdl_intervals_ok(q):
            raise PreconditionError("mu_set asked of a non-finitary instance")
        out: list[Unifier] = []
        for x in q.minimals():
            for y in q.maximals():
                if q.leq(x, y):
                    piece = q.restrict(q.interval(x, y))
                    out.append(
                        make_monotone_map(piece, q, {z: z for z in piece.elements})
                    )
        return out
    core = core_of(q, variety)
    rep = condition_report(core)
    fin_head = (not rep.k1) if variety == "kleene" else (not rep.m1)
    if not (fin_head and _all_intervals_ok(core, variety)):
        raise PreconditionError("mu_set asked of a non-finitary instance")
    out = []
    for x in core.base.minimals():
        piece = interval_structure(core, x)
        out.append(make_inv_morphism(piece, q, {z: z for z in piece.elements}))
    return out


# ---------------------------------------------------------------------------
# nullarity patterns


def _pattern_env(struct) -> tuple[Poset, dict[str, str] | None]:
    if isinstance(struct, InvPoset):
        return struct.base, struct.inv
    return struct, None


def find_null_pattern(struct, family: str) -> dict[str, str] | None:
    """First anchor tuple, in canonical order, satisfying the family's
    clauses; None when the exhaustive search comes up empty."""
    if family not in PATTERN_FAMILIES:
        raise PreconditionError(f"unknown pattern family {family!r}")
    base, inv = _pattern_env(struct)
    if family != "bdl" and inv is None:
        raise PreconditionError(f"family {family!r} needs an involutive poset")
    finder = {
        "bdl": _find_bdl_pattern,
        "k1": _find_k1_pattern,
        "k2": _find_k2_pattern,
        "m1": _find_m1_pattern,
        "m2": _find_m2_pattern,
        "m3": _find_k2_pattern,
    }[family]
    return finder(base, inv)


def verify_null_pattern(struct, family: str, anchors: dict[str, str]) -> bool:
    """Re-check every clause of the family on the given anchors, with the
    nonexistence clause verified by exhaustive scan."""
    base, inv = _pattern_env(struct)
    g = anchors.__getitem__
    le = base.leq
    if family == "bdl":
        return (
            all(le(g("x"), v) for v in (g("a"), g("b")))
            and all(le(u, v) for u in (g("a"), g("b")) for v in (g("c"), g("d")))
            and all(le(v, g("y")) for v in (g("c"), g("d")))
            and _nobody_between(base, g("a"), g("b"), g("c"), g("d"))
        )
    assert inv is not None
    if family == "k1":
        return (
            all(le(g("x"), v) for v in (g("a"), g("b")))
            and all(le(u, v) for u in (g("a"), g("b")) for v in (g("c"), g("d")))
            and le(g("c"), g("y")) and inv[g("y")] == g("y")
            and le(g("d"), g("z")) and inv[g("z")] == g("z")
            and _nobody_between(base, g("a"), g("b"), g("c"), g("d"))
        )
    if family in ("k2", "m3"):
        return (
            all(le(g("x"), v) for v in (g("a"), g("b"), g("c")))
            and le(g("a"), g("d")) and le(g("a"), g("e"))
            and le(g("b"), g("d")) and le(g("b"), g("f"))
            and le(g("c"), g("e")) and le(g("c"), g("f"))
            and le(g("d"), g("y")) and inv[g("y")] == g("y")
            and le(g("e"), g("z")) and inv[g("z")] == g("z")
            and le(g("f"), g("w")) and inv[g("w")] == g("w")
            and not any(
                le(g("a"), h) and le(g("b"), h) and le(g("c"), h) and le(h, inv[h])
                for h in base.elements
            )
        )
    if family == "m1":
        return (
            all(le(g("x"), v) for v in (g("a"), g("b")))
            and all(le(u, v) for u in (g("a"), g("b")) for v in (g("c"), g("d")))
            and le(g("x"), g("y")) and inv[g("y")] == g("y")
            and _nobody_between(base, g("a"), g("b"), g("c"), g("d"))
        )
    if family == "m2":
        return (
            le(g("x"), g("a")) and le(g("x"), g("b"))
            and le(g("a"), inv[g("a")])
            and inv[g("b")] == g("b")
            and not any(le(g("a"), c) and inv[c] == c for c in base.elements)
        )
    raise PreconditionError(f"unknown pattern family {family!r}")


def _nobody_between(base: Poset, a: str, b: str, c: str, d: str) -> bool:
    mids = base.up_of([a]) & base.up_of([b]) & base.down_of([c]) & base.down_of([d])
    return not mids


def _find_bdl_pattern(base: Poset, inv) -> dict[str, str] | None:
    for x in base.elements:
        ux = base._up[x]
        for a in base.elements:
            if a not in ux:
                continue
            for b in base.elements:
                if b not in ux:
                    continue
                over = base._up[a] & base._up[b]
                for c in base.elements:
                    if c not in over:
                        continue
                    for d in base.elements:
                        if d not in over:
                            continue
                        if not _nobody_between(base, a, b, c, d):
                            continue
                        for y in base.elements:
                            if base.leq(c, y) and base.leq(d, y):
                                return {"x": x, "a": a, "b": b, "c": c, "d": d, "y": y}
    return None


def _find_k1_pattern(base: Poset, inv) -> dict[str, str] | None:
    fixed_above = {
        v: [z for z in base._up[v] if inv[z] == z] for v in base.elements
    }
    for x in base.elements:
        ux = base._up[x]
        for a in base.elements:
            if a not in ux:
                continue
            for b in base.elements:
                if b not in ux:
                    continue
                over = base._up[a] & base._up[b]
                for c in base.elements:
                    if c not in over or not fixed_above[c]:
                        continue
                    for d in base.elements:
                        if d not in over or not fixed_above[d]:
                            continue
                        if not _nobody_between(base, a, b, c, d):
                            continue
                        return {
                            "x": x, "a": a, "b": b, "c": c, "d": d,
                            "y": fixed_above[c][0], "z": fixed_above[d][0],
                        }
    return None


def _find_k2_pattern(base: Poset, inv) -> dict[str, str] | None:
    fixed_above = {
        v: [z for z in base._up[v] if inv[z] == z] for v in base.elements
    }
    self_below = [h for h in base.elements if base.leq(h, inv[h])]
    for x in base.elements:
        ux = base._up[x]
        for a, b, c in cartesian(base.elements, repeat=3):
            if a not in ux or b not in ux or c not in ux:
                continue
            common = base._up[a] & base._up[b] & base._up[c]
            if any(h in common for h in self_below):
                continue
            for d in base.elements:
                if d not in base._up[a] or d not in base._up[b] or not fixed_above[d]:
                    continue
                for e in base.elements:
                    if e not in base._up[a] or e not in base._up[c] or not fixed_above[e]:
                        continue
                    for f in base.elements:
                        if f not in base._up[b] or f not in base._up[c] or not fixed_above[f]:
                            continue
                        return {
                            "x": x, "a": a, "b": b, "c": c,
                            "d": d, "e": e, "f": f,
                            "y": fixed_above[d][0],
                            "z": fixed_above[e][0],
                            "w": fixed_above[f][0],
                        }
    return None


def _find_m1_pattern(base: Poset, inv) -> dict[str, str] | None:
    fixed = [z for z in base.elements if inv[z] == z]
    for x in base.elements:
        ys = [y for y in fixed if base.leq(x, y)]
        if not ys:
            continue
        ux = base._up[x]
        for a in base.elements:
            if a not in ux:
                continue
            for b in base.elements:
                if b not in ux:
                    continue
                over = base._up[a] & base._up[b]
                for c in base.elements:
                    if c not in over:
                        continue
                    for d in base.elements:
                        if d not in over:
                            continue
                        if _nobody_between(base, a, b, c, d):
                            return {
                                "x": x, "a": a, "b": b, "c": c, "d": d, "y": ys[0]
                            }
    return None


def _find_m2_pattern(base: Poset, inv) -> dict[str, str] | None:
    fixed = [z for z in base.elements if inv[z] == z]
    for x in base.elements:
        bs = [b for b in fixed if base.leq(x, b)]
        if not bs:
            continue
        for a in base.elements:
            if not base.leq(x, a) or not base.leq(a, inv[a]):
                continue
            if any(base.leq(a, c) for c in fixed):
                continue
            return {"x": x, "a": a, "b": bs[0]}
    return None


# ---------------------------------------------------------------------------
# generality preorder and the bounded oracle


def more_general(u1: Unifier, u2: Unifier) -> bool:
    """Whether u1 is at least as general as u2: u2 factors through u1."""
    if type(u1) is not type(u2):
        raise PreconditionError("unifiers live in different categories")
    if u1.cod != u2.cod:
        raise PreconditionError("unifiers target different instances")
    if isinstance(u1, InvMorphism):
        dom2, dom1 = u2.dom, u1.dom
        order = dom2.base.linear_extension()
        assigned: dict[str, str] = {}

        def consistent(x: str, t: str) -> bool:
            for y, s in assigned.items():
                if dom2.base.leq(y, x) and not dom1.base.leq(s, t):
                    return False
                if dom2.base.leq(x, y) and not dom1.base.leq(t, s):
                    return False
            return True

        def extend(i: int) -> bool:
            while i < len(order) and order[i] in assigned:
                i += 1
            if i == len(order):
                return True
            x = order[i]
            xi = dom2.i(x)
            for t in dom1.elements:
                if u1(t) != u2(x):
                    continue
                if x == xi and dom1.i(t) != t:
                    continue
                if not consistent(x, t):
                    continue
                assigned[x] = t
                if x != xi:
                    ti = dom1.i(t)
                    if u1(ti) == u2(xi) and consistent(xi, ti):
                        assigned[xi] = ti
                        if extend(i + 1):
                            return True
                        del assigned[xi]
                else:
                    if extend(i + 1):
                        return True
                del assigned[x]
            return False

        return extend(0)

    dom2, dom1 = u2.dom, u1.dom
    order = dom2.linear_extension()
    assigned: dict[str, str] = {}

    def consistent_m(x: str, t: str) -> bool:
        for y, s in assigned.items():
            if dom2.leq(y, x) and not dom1.leq(s, t):
                return False
            if dom2.leq(x, y) and not dom1.leq(t, s):
                return False
        return True

    def extend_m(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for t in dom1.elements:
            if u1(t) != u2(x) or not consistent_m(x, t):
                continue
            assigned[x] = t
            if extend_m(i + 1):
                return True
            del assigned[x]
        return False

    return extend_m(0)


@lru_cache(maxsize=None)
def projective_domains_upto(variety: str, k: int) -> tuple:
    """Isomorphism-class representatives of projective-dual structures
    with at most k elements."""
    if variety == "bdl":
        return tuple(
            p
            for p in enumerate_posets_upto(k)
            if lattice_report(p).is_nonempty_lattice
        )
    out = []
    for iv in enumerate_invposets_upto(k):
        if not iv.elements:
            continue
        if variety == "kleene" and not iv.is_kleene:
            continue
        if is_projective_dual(iv, variety)[0]:
            out.append(iv)
    return tuple(out)


def enumerate_unifiers_bounded(q, variety: str, k: int) -> Iterator[Unifier]:
    """All unifiers into q whose domain has at most k elements.

    Domains range over the projective-dual corpus representatives; maps
    are enumerated exhaustively.  Guarded to k <= 5.
    """
    _require_variety(q, variety)
    if k > 5:
        raise SizeGuardError(f"unifier enumeration guard: bound {k} exceeds 5")
    if variety == "bdl":
        for dom in projective_domains_upto("bdl", k):
            yield from enumerate_monotone_maps(dom, q)
    else:
        for dom in projective_domains_upto(variety, k):
            yield from enumerate_inv_morphisms(dom, q)


# ---------------------------------------------------------------------------
# witness families


@dataclass(frozen=True)
class WitnessFamily:
    family: str
    n: int
    structure: Poset | InvPoset
    anchors: tuple[tuple[str, str], ...]

    @property
    def anchor_dict(self) -> dict[str, str]:
        return dict(self.anchors)


def _mirrored(covers: list[tuple[str, str]], inv: dict[str, str]) -> list[tuple[str, str]]:
    out = list(covers)
    for lo, hi in covers:
        pair = (inv[hi], inv[lo])
        if pair not in out:
            out.append(pair)
    return out


def witness_family(family: str, n: int) -> WitnessFamily:
    """The n-th witness structure T_n of the family with its unifier schema.

    Anchor names refer to the family's pattern tuple; elements without
    an anchor are the involution mirrors, closed during instantiation.
    """
    builders = {
        "bdl": (_witness_bdl, 1),
        "k1": (_witness_k1, 2),
        "k2": (_witness_k2, 2),
        "m1": (_witness_m1, 1),
        "m2": (_witness_m2, 1),
    }
    if family not in builders:
        raise PreconditionError(f"unknown witness family {family!r}")
    builder, minimum = builders[family]
    if n < minimum:
        raise PreconditionError(f"family {family!r} needs n >= {minimum}")
    if family == "m2" and n % 2 == 0:
        raise PreconditionError("family 'm2' needs odd n")
    return builder(n)


def _odd_pairs(n: int) -> list[tuple[int, int]]:
    return [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1) if (j + k) % 2 == 1]


def _witness_bdl(n: int) -> WitnessFamily:
    pairs = _odd_pairs(n)
    elems = ["bot", "top"] + [str(j) for j in range(1, n + 1)] + [
        f"{j}.{k}" for j, k in pairs
    ]
    covers = [("bot", str(j)) for j in range(1, n + 1)]
    for j, k in pairs:
        covers += [(str(j), f"{j}.{k}"), (str(k), f"{j}.{k}"), (f"{j}.{k}", "top")]
    if not pairs:
        # the cover list leaves the top isolated when no pair elements
        # exist; attach it above the generators so T_n stays a lattice
        covers += [(str(j), "top") for j in range(1, n + 1)]
    structure = validate_poset(elems, covers)
    anchors = {"bot": "x", "top": "y"}
    for j in range(1, n + 1):
        anchors[str(j)] = "a" if j % 2 == 1 else "b"
    for j, k in pairs:
        anchors[f"{j}.{k}"] = "c" if j % 2 == 1 else "d"
    return WitnessFamily("bdl", n, structure, tuple(sorted(anchors.items())))


def _witness_k1(n: int) -> WitnessFamily:
    pairs = _odd_pairs(n)
    lower = ["bot"] + [str(j) for j in range(1, n + 1)] + [f"{j}.{k}" for j, k in pairs]
    diamonds = [f"{j}#{k}" for j, k in pairs]
    elems = lower + diamonds + [f"~{v}" for v in lower]
    inv = {v: v for v in diamonds}
    for v in lower:
        inv[v] = f"~{v}"
        inv[f"~{v}"] = v
    covers = [("bot", str(j)) for j in range(1, n + 1)]
    for j, k in pairs:
        covers += [
            (str(j), f"{j}.{k}"),
            (str(k), f"{j}.{k}"),
            (f"{j}.{k}", f"{j}#{k}"),
            (f"{j}#{k}", f"~{j}.{k}"),
        ]
    structure = validate_poset(elems, _mirrored(covers, inv))
    iv = validate_involutive(structure, inv)
    anchors = {"bot": "x"}
    for j in range(1, n + 1):
        anchors[str(j)] = "a" if j % 2 == 1 else "b"
    for j, k in pairs:
        anchors[f"{j}.{k}"] = "c" if j % 2 == 1 else "d"
        anchors[f"{j}#{k}"] = "y" if j % 2 == 1 else "z"
    return WitnessFamily("k1", n, iv, tuple(sorted(anchors.items())))


def _witness_k2(n: int) -> WitnessFamily:
    rng = range(1, n + 1)
    opairs = [(j, k) for j in rng for k in rng if j != k]
    upairs = [(j, k) for j in rng for k in rng if j < k]
    lower = (
        ["bot"]
        + [str(j) for j in rng]
        + [f"{j}.{k}" for j, k in opairs]
        + [f"{j}o{j}.{k}" for j, k in opairs]
        + [f"{j}.{k}o{k}.{j}" for j, k in upairs]
    )
    diamonds = [f"{j}#{j}.{k}" for j, k in opairs] + [
        f"{j}.{k}#{k}.{j}" for j, k in upairs
    ]
    elems = lower + diamonds + [f"~{v}" for v in lower]
    inv = {v: v for v in diamonds}
    for v in lower:
        inv[v] = f"~{v}"
        inv[f"~{v}"] = v
    covers = []
    for j in rng:
        covers.append(("bot", str(j)))
    for j, k in opairs:
        covers.append(("bot", f"{j}.{k}"))
        covers += [
            (str(j), f"{j}o{j}.{k}"),
            (f"{j}.{k}", f"{j}o{j}.{k}"),
            (f"{j}o{j}.{k}", f"{j}#{j}.{k}"),
        ]
    for j, k in upairs:
        covers += [
            (f"{j}.{k}", f"{j}.{k}o{k}.{j}"),
            (f"{k}.{j}", f"{j}.{k}o{k}.{j}"),
            (f"{j}.{k}o{k}.{j}", f"{j}.{k}#{k}.{j}"),
        ]
    structure = validate_poset(elems, _mirrored(covers, inv))
    iv = validate_involutive(structure, inv)
    anchors = {"bot": "x"}
    for j in rng:
        anchors[str(j)] = "a"
    for j, k in opairs:
        anchors[f"{j}.{k}"] = "b" if j < k else "c"
        # the pair clauses force: above {a, b} sits d, above {a, c} sits
        # e, above {b, c} sits f, with their fixed points y, z, w
        anchors[f"{j}o{j}.{k}"] = "d" if j < k else "e"
        anchors[f"{j}#{j}.{k}"] = "y" if j < k else "z"
    for j, k in upairs:
        anchors[f"{j}.{k}o{k}.{j}"] = "f"
        anchors[f"{j}.{k}#{k}.{j}"] = "w"
    return WitnessFamily("k2", n, iv, tuple(sorted(anchors.items())))


def _witness_m1(n: int) -> WitnessFamily:
    pairs = _odd_pairs(n)
    lower = ["bot"] + [str(j) for j in range(1, n + 1)] + [f"{j}.{k}" for j, k in pairs]
    elems = lower + ["0"] + [f"~{v}" for v in lower]
    inv = {"0": "0"}
    for v in lower:
        inv[v] = f"~{v}"
        inv[f"~{v}"] = v
    covers = [("bot", "0"), ("0", "~bot")]
    for j in range(1, n + 1):
        covers.append(("bot", str(j)))
    for j, k in pairs:
        covers += [
            ("bot", f"~{j}.{k}"),
            (f"{j}.{k}", "~bot"),
            (str(j), f"{j}.{k}"),
            (str(k), f"{j}.{k}"),
        ]
    paired = {j for j, k in pairs} | {k for j, k in pairs}
    for j in range(1, n + 1):
        # generators outside every pair element (n = 1 only) would dangle
        # below the top half; attach them so T_n stays a lattice
        if j not in paired:
            covers.append((str(j), "~bot"))
    structure = validate_poset(elems, _mirrored(covers, inv))
    iv = validate_involutive(structure, inv)
    anchors = {"bot": "x", "0": "y"}
    for j in range(1, n + 1):
        anchors[str(j)] = "a" if j % 2 == 1 else "b"
    for j, k in pairs:
        anchors[f"{j}.{k}"] = "c" if j % 2 == 1 else "d"
    return WitnessFamily("m1", n, iv, tuple(sorted(anchors.items())))


def _witness_m2(n: int) -> WitnessFamily:
    vectors = ["".join(bits) for bits in cartesian("01", repeat=n)]
    vectors.sort(key=lambda v: (v.count("1"), v))
    elems = vectors + ["d"]
    inv = {"d": "d"}
    for v in vectors:
        inv[v] = "".join("1" if c == "0" else "0" for c in v)
    le_pairs = [
        (u, v)
        for u in vectors
        for v in vectors
        if all(cu <= cv for cu, cv in zip(u, v))
    ]
    le_pairs += [("0" * n, "d"), ("d", "1" * n), ("d", "d")]
    structure = validate_poset(elems, le_pairs, mode="covers")
    iv = validate_involutive(structure, inv)
    anchors = {"0" * n: "x", "d": "b"}
    for v in vectors:
        weight = v.count("1")
        if 1 <= weight < n / 2:
            anchors[v] = "a"
    return WitnessFamily("m2", n, iv, tuple(sorted(anchors.items())))


def instantiate_witness(wf: WitnessFamily, pattern: dict[str, str], q) -> Unifier:
    """Close the anchor schema over a concrete pattern tuple and validate
    the resulting unifier into q."""
    anchors = wf.anchor_dict
    if isinstance(wf.structure, InvPoset):
        if not isinstance(q, InvPoset):
            raise PreconditionError("involutive witness needs an involutive instance")
        mapping: dict[str, str] = {}
        for t, name in anchors.items():
            mapping[t] = pattern[name]
        for t in wf.structure.elements:
            if t not in mapping:
                mate = wf.structure.i(t)
                if mate not in mapping:
                    raise ValidationError(f"schema leaves {t!r} unanchored")
                mapping[t] = q.i(mapping[mate])
        u = make_inv_morphism(wf.structure, q, mapping)
        u.check()
        return u
    if not isinstance(q, Poset):
        raise PreconditionError("bdl witness needs a bare poset instance")
    mapping = {t: pattern[anchors[t]] for t in wf.structure.elements}
    u = make_monotone_map(wf.structure, q, mapping)
    u.check()
    return u
