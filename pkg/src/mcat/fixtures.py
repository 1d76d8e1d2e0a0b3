"""
Built-in finite fixtures.

fix1: posets 1 = {0} and 2 = {0 < 1}, monotone maps, pointwise order.
fix3: codiscrete category on two objects, identity 2-cells only.
z2: one object, one 1-cell, 2-cells Z/2 (not locally preordered).
idem / idem_codiscrete: the monoid {1, e} with e.e = e, ordered 1 <= e or codiscretely.
poset3: the chain 0 < 1 < 2 as a locally discrete 2-category.
fix4: spans between the subsets of {0, 1} with injective left legs, composed
      by a chosen pullback; fix4_iso keeps the bijective spans on {0, 1}.
parity: a chiral multiple category over Z/2 with sign-valued transversal
      maps and the associator (-1)^(xyz).
gxy: a graph of categories with two objects, an involution t and vertical g, h.
sq2: commutative squares in the chain 0 < 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .chiralcalc import (
    ChiralMC,
    PMorphism,
    PQCube,
    TransversalCategory,
    degenerate_extension,
    enumerate_pqcubes,
    extend_pmorphism,
    identity_pmorphism,
    strict_morphism,
)
from .core2cat import FiniteTwoCategory
from .logging_config import get_logger
from .models import ArgumentError, BoundaryError, StructuralError
from .multicat import MultiIndex
from .psalg import (
    CatGraph,
    PseudoAlgebra,
    WeakDoubleCategory,
    Word,
    functor_J,
    squares_double,
    transport_algebra,
)

logger = get_logger("fixtures")

Arrow = Tuple[str, str, str]


def locally_preordered(
    name: str,
    objects: Sequence[str],
    one_cells: Iterable[Arrow],
    compose: Callable[[str, str], str],
    identities: Dict[str, str],
    leq: Callable[[str, str], bool],
) -> FiniteTwoCategory:
    """At most one 2-cell f <= g between parallel 1-cells, as given by leq."""
    ones = list(one_cells)
    by_id = {i: (s, t) for i, s, t in ones}
    twos: List[Arrow] = []
    for (f, fs, ft), (g, gs, gt) in product(ones, repeat=2):
        if (fs, ft) == (gs, gt) and leq(f, g):
            twos.append((f"{f}<={g}", f, g))
    two_ids = {t[0] for t in twos}

    def cell(f: str, g: str) -> str:
        c = f"{f}<={g}"
        if c not in two_ids:
            raise ValueError(f"{name}: order is not compatible with composition at {c}")
        return c

    def split(a: str) -> Tuple[str, str]:
        f, g = a.split("<=")
        return f, g

    def vertical(a: str, b: str) -> str:
        return cell(split(a)[0], split(b)[1])

    def left(s: str, a: str) -> str:
        f, g = split(a)
        return cell(compose(s, f), compose(s, g))

    def right(a: str, r: str) -> str:
        f, g = split(a)
        return cell(compose(f, r), compose(g, r))

    assert all(s in objects and t in objects for s, t in by_id.values())
    return FiniteTwoCategory.tabulate(
        name, objects, ones, twos, compose, vertical, left, right,
        id1=identities, id2={f: f"{f}<={f}" for f in by_id},
    )


# monotone maps of FIX1: name -> (src, tgt, values)
FIX1_MAPS: Dict[str, Tuple[str, str, Tuple[int, ...]]] = {
    "i1": ("1", "1", (0,)),
    "c0": ("1", "2", (0,)),
    "c1": ("1", "2", (1,)),
    "t": ("2", "1", (0, 0)),
    "k0": ("2", "2", (0, 0)),
    "i2": ("2", "2", (0, 1)),
    "k1": ("2", "2", (1, 1)),
}


def fix1() -> FiniteTwoCategory:
    lookup = {(s, t, vals): n for n, (s, t, vals) in FIX1_MAPS.items()}

    def compose(g: str, f: str) -> str:
        fs, _, fv = FIX1_MAPS[f]
        _, gt, gv = FIX1_MAPS[g]
        return lookup[(fs, gt, tuple(gv[x] for x in fv))]

    def leq(f: str, g: str) -> bool:
        return all(a <= b for a, b in zip(FIX1_MAPS[f][2], FIX1_MAPS[g][2]))

    return locally_preordered(
        "fix1", ("1", "2"),
        [(n, s, t) for n, (s, t, _) in FIX1_MAPS.items()],
        compose, {"1": "i1", "2": "i2"}, leq,
    )


def codiscrete(name: str, objects: Sequence[str]) -> FiniteTwoCategory:
    """One 1-cell per ordered pair of objects; only identity 2-cells."""
    ones = [(f"{a}{b}", a, b) for a, b in product(objects, repeat=2)]

    def compose(g: str, f: str) -> str:
        return f"{f[0]}{g[-1]}"

    return locally_preordered(
        name, objects, ones, compose, {a: f"{a}{a}" for a in objects}, lambda f, g: f == g,
    )


def fix3() -> FiniteTwoCategory:
    return codiscrete("fix3", ("a", "b"))


def _idempotent(name: str, leq: Callable[[str, str], bool]) -> FiniteTwoCategory:
    def compose(g: str, f: str) -> str:
        return "e" if "e" in (f, g) else "1"

    return locally_preordered(name, ("*",), [("1", "*", "*"), ("e", "*", "*")], compose, {"*": "1"}, leq)


def idem() -> FiniteTwoCategory:
    """Locally preordered, not locally codiscrete: only 1 <= e."""
    return _idempotent("idem", lambda f, g: f == g or (f, g) == ("1", "e"))


def idem_codiscrete() -> FiniteTwoCategory:
    """Non-codiscrete category with codiscrete local preorders."""
    return _idempotent("idem_codiscrete", lambda f, g: True)


def chain(name: str, n: int) -> FiniteTwoCategory:
    """The chain 0 < 1 < ... < n-1 as a locally discrete 2-category."""
    objs = tuple(str(k) for k in range(n))
    ones = [(f"{a}{b}", a, b) for a, b in product(objs, repeat=2) if int(a) <= int(b)]

    def compose(g: str, f: str) -> str:
        return f"{f[0]}{g[-1]}"

    return locally_preordered(name, objs, ones, compose, {a: f"{a}{a}" for a in objs}, lambda f, g: f == g)


def poset3() -> FiniteTwoCategory:
    return chain("poset3", 3)


def z2() -> FiniteTwoCategory:
    """One object, one 1-cell, 2-cells {z0, z1} composing by addition mod 2."""
    add = {("z0", "z0"): "z0", ("z0", "z1"): "z1", ("z1", "z0"): "z1", ("z1", "z1"): "z0"}
    return FiniteTwoCategory.tabulate(
        "z2", ("*",), [("1", "*", "*")], [("z0", "1", "1"), ("z1", "1", "1")],
        compose1=lambda g, f: "1",
        vertical=lambda a, b: add[(a, b)],
        left=lambda s, a: a,
        right=lambda a, r: a,
        id1={"*": "1"}, id2={"1": "z0"},
    )


def trivial() -> FiniteTwoCategory:
    return codiscrete("trivial", ("*",))


TWO_CATEGORIES: Dict[str, Callable[[], FiniteTwoCategory]] = {
    "fix1": fix1,
    "fix3": fix3,
    "z2": z2,
    "idem": idem,
    "idem_codiscrete": idem_codiscrete,
    "poset3": poset3,
    "trivial": trivial,
}


# -- spans over the subsets of a two-element set (chiral)

Points = Tuple[int, ...]


def _set_id(X: Points) -> str:
    return "".join(str(x) for x in X) or "∅"


def _parse_set(text: str) -> Points:
    return () if text == "∅" else tuple(int(ch) for ch in text)


@dataclass(frozen=True)
class Span:
    """
    X <- D -> Y with an injective left leg, D listed in apex order as pairs
    (left leg, right leg). Maps of such spans are unique when they exist.
    """
    source: Points
    target: Points
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def id(self) -> str:
        legs = ".".join(f"{x}{y}" for x, y in self.pairs)
        return f"{_set_id(self.source)}>{_set_id(self.target)}:{legs}"

    @property
    def graph(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(self.pairs)

    def then(self, other: "Span") -> "Span":
        """Chosen pullback: the matched pairs run against the apex order of self."""
        if self.target != other.source:
            raise BoundaryError(f"{self.id} and {other.id} are not consecutive")
        legs = dict(other.pairs)
        return Span(self.source, other.target, tuple((x, legs[y]) for x, y in reversed(self.pairs) if y in legs))

    @staticmethod
    def unit(X: Points) -> "Span":
        return Span(X, X, tuple((x, x) for x in X))

    @staticmethod
    def parse(text: str) -> "Span":
        ends, legs = text.split(":")
        x, y = ends.split(">")
        return Span(_parse_set(x), _parse_set(y), tuple((int(p[0]), int(p[1])) for p in legs.split(".") if p))


def _unit_map(X: str) -> str:
    return f"1_{X}"


def _span_map(S: Span, T: Span) -> str:
    return f"{S.id}=>{T.id}"


def _spans_between(X: Points, Y: Points) -> Iterator[Span]:
    for k in range(len(X) + 1):
        for dom in permutations(X, k):
            for img in product(Y, repeat=k):
                yield Span(X, Y, tuple(zip(dom, img)))


def subsets(points: Points) -> List[Points]:
    return [c for k in range(len(points) + 1) for c in combinations(points, k)]


def span_category(
    name: str,
    objects: Sequence[Points],
    keep: Optional[Callable[[Span], bool]] = None,
    faulty: bool = False,
) -> ChiralMC:
    """
    Degree 2: objects and identity transversal maps at level e; spans as
    1-cubes, maps of spans with identity ends as 1-maps. Composition is the
    chosen pullback, and every comparison is the unique map between spans
    with the same graph. faulty turns every associator around.
    """
    e, one = MultiIndex(()), MultiIndex.of(1)
    family: Dict[str, Span] = {}
    for X, Y in product(objects, repeat=2):
        for S in _spans_between(X, Y):
            if S == Span.unit(X) or keep is None or keep(S):
                family[S.id] = S
    starts: Dict[Points, List[Span]] = {}
    for S in family.values():
        starts.setdefault(S.source, []).append(S)

    maps: Dict[str, Tuple[str, str]] = {}
    for S in family.values():
        for T in starts[S.source]:
            if T.target == S.target and S.graph <= T.graph:
                maps[_span_map(S, T)] = (S.id, T.id)
    after: Dict[str, List[str]] = {}
    for f, (s, _) in maps.items():
        after.setdefault(s, []).append(f)
    comp = {(g, f): _span_map(family[maps[f][0]], family[maps[g][1]])
            for f in maps for g in after[maps[f][1]]}

    objs = [_set_id(X) for X in objects]
    tv = {
        e: TransversalCategory(f"tv.e({name})", tuple(objs), {_unit_map(X): (X, X) for X in objs},
                               {(_unit_map(X), _unit_map(X)): _unit_map(X) for X in objs},
                               {X: _unit_map(X) for X in objs}),
        one: TransversalCategory(f"tv.1({name})", tuple(family), maps, comp,
                                 {S: _span_map(family[S], family[S]) for S in family}),
    }
    faces: Dict[Tuple[str, int, str], str] = {}
    for S in family.values():
        faces[(S.id, 1, "-")], faces[(S.id, 1, "+")] = _set_id(S.source), _set_id(S.target)
    for f, (s, _) in maps.items():
        S = family[s]
        faces[(f, 1, "-")], faces[(f, 1, "+")] = _unit_map(_set_id(S.source)), _unit_map(_set_id(S.target))
    degens: Dict[Tuple[str, int], str] = {}
    for X in objects:
        u = Span.unit(X)
        degens[(_set_id(X), 1)] = u.id
        degens[(_unit_map(_set_id(X)), 1)] = _span_map(u, u)

    def glued(S: Span, T: Span) -> Span:
        out = S.then(T)
        if out.id not in family:
            raise StructuralError(f"{name}: {S.id} then {T.id} leaves the chosen spans")
        return out

    comps: Dict[Tuple[int, str, str], str] = {}
    for S in family.values():
        for T in starts.get(S.target, ()):
            comps[(1, S.id, T.id)] = glued(S, T).id
    for f, (s, s2) in maps.items():
        for g, (t, t2) in maps.items():
            if family[s].target == family[t].source:
                comps[(1, f, g)] = _span_map(glued(family[s], family[t]), glued(family[s2], family[t2]))

    lam = {(S.id, 1): _span_map(Span.unit(S.source).then(S), S) for S in family.values()}
    rho = {(S.id, 1): _span_map(S.then(Span.unit(S.target)), S) for S in family.values()}
    kappa: Dict[Tuple[int, str, str, str], str] = {}
    for S in family.values():
        for T in starts.get(S.target, ()):
            for U in starts.get(T.target, ()):
                nested, flat = S.then(T.then(U)), S.then(T).then(U)
                kappa[(1, S.id, T.id, U.id)] = _span_map(flat, nested) if faulty else _span_map(nested, flat)
    A = ChiralMC(name, 2, tv, faces, degens, comps, lam, rho, kappa, {})
    logger.debug(f"{name}: {len(family)} spans, {len(maps)} maps of spans")
    return A


FIX4_POINTS: Points = (0, 1)


def spans(degree: int = 3, faulty: bool = False) -> ChiralMC:
    """fix4: every span between subsets of {0, 1}; degree 3 adds a degenerate direction."""
    A = span_category("fix4_faulty" if faulty else "fix4", subsets(FIX4_POINTS), faulty=faulty)
    return A if degree == 2 else degenerate_extension(A)


def _bijective(S: Span) -> bool:
    return len(S.pairs) == len(S.source) == len(S.target)


def invertible_spans() -> ChiralMC:
    """fix4_iso: the bijective spans on {0, 1}, closed under the chosen pullbacks."""
    return span_category("fix4_iso", [FIX4_POINTS], keep=_bijective)


def _span_morphism(
    A: ChiralMC,
    name: str,
    p: int,
    on_objects: Callable[[Points], Points],
    on_spans: Callable[[Span], Span],
) -> PMorphism:
    """
    Endomorphism of a span_category from its action on objects and spans.
    Comparisons are the unique maps between the two sides.
    """
    e, one = MultiIndex(()), MultiIndex.of(1)
    cell_map: Dict[str, str] = {}
    for X in A.cubes(e):
        cell_map[X] = _set_id(on_objects(_parse_set(X)))
        cell_map[_unit_map(X)] = _unit_map(cell_map[X])
    image = {S: on_spans(Span.parse(S)) for S in A.cubes(one)}
    for S, img in image.items():
        cell_map[S] = img.id
    for f, (s, t) in A.tv[one].maps.items():
        cell_map[f] = _span_map(image[s], image[t])

    lax = p <= 1

    def compare(a: Span, b: Span) -> str:
        return _span_map(a, b) if lax else _span_map(b, a)

    unit = {(X, 1): compare(Span.unit(on_objects(_parse_set(X))), image[A.degen(X, 1)]) for X in A.cubes(e)}
    comp = {(1, s, t): compare(image[s].then(image[t]), image[A.plus(1, s, t)]) for s, t in A.pairs(one, 1)}
    return PMorphism(f"{name}[{p}]", A, A, p, cell_map, unit, comp)


def _base_of(A: ChiralMC) -> ChiralMC:
    if A.degree == 2:
        return A
    if A.name.startswith("fix4_iso"):
        return invertible_spans()
    return spans(2, faulty=A.name.startswith("fix4_faulty"))


def unit_whisker(A: ChiralMC, p: int) -> PMorphism:
    """S goes to e(X) composed with S; a pseudo endomorphism, so any laxity p works."""
    base = _base_of(A)
    R = _span_morphism(base, "whisker", p, lambda X: X, lambda S: Span.unit(S.source).then(S))
    return _lift_to(R, A, p)


def restriction(A: ChiralMC, keep: Points = (0,), p: int = 1) -> PMorphism:
    """
    Lax endomorphism of fix4: X goes to X ∩ keep and S to J_X S K_Y, composed
    with the fixed partial identities J_X: X ∩ keep -> X and K_Y: Y -> Y ∩ keep.
    """
    if p != 1:
        raise ArgumentError(f"restriction is lax in direction 1, not a {p}-morphism")
    base = _base_of(A)

    def cut(X: Points) -> Points:
        return tuple(x for x in X if x in keep)

    def conjugate(S: Span) -> Span:
        J = Span(cut(S.source), S.source, tuple((x, x) for x in cut(S.source)))
        K = Span(S.target, cut(S.target), tuple((y, y) for y in cut(S.target)))
        return J.then(S).then(K)

    R = _span_morphism(base, f"restrict{_set_id(keep)}", p, cut, conjugate)
    return _lift_to(R, A, p)


def unitor_cube(A: ChiralMC, q: int = 2) -> PQCube:
    """(whisker ^ 1) with identity columns: the component at a span S is its left unitor."""
    R, S = unit_whisker(A, 1), identity_pmorphism(A, 1)
    U = identity_pmorphism(A, q)
    comps = {}
    for idx in A.levels():
        for c in A.cubes(idx):
            comps[c] = A.unitor_left(c, 1) if 1 in idx else A.identity(c)
    return PQCube("lambda", R, S, U, U, comps)


def span_cube_pool(A: ChiralMC, p: int = 1, q: int = 2) -> List[PQCube]:
    """Every pq-cube with identity columns whose rows are identities, whiskers or restrictions."""
    hs = [identity_pmorphism(A, p), unit_whisker(A, p)]
    if p == 1 and "∅" in A.cubes(MultiIndex(())):
        hs.append(restriction(A))
    I = identity_pmorphism(A, q)
    pool: List[PQCube] = []
    for n, (R, S) in enumerate(product(hs, repeat=2)):
        pool.extend(enumerate_pqcubes(R, S, I, I, name=f"s{n}"))
    return pool


# -- signed parity (chiral)

Cocycle = Callable[[int, int], int]


def _sign(odd: int) -> str:
    return "-" if odd % 2 else "+"


def _times(s: str, t: str) -> str:
    return "+" if s == t else "-"


def _parity_base(faulty: bool = False) -> ChiralMC:
    """Degree 2: one 0-cube *, 1-cubes x0, x1; i-maps are signed identities."""
    e, one = MultiIndex(()), MultiIndex.of(1)
    bits = (0, 1)
    tv = {
        e: TransversalCategory("tv.e(parity)", ("*",), {"*+": ("*", "*")}, {("*+", "*+"): "*+"}, {"*": "*+"}),
        one: TransversalCategory(
            "tv.1(parity)",
            tuple(f"x{a}" for a in bits),
            {f"x{a}{s}": (f"x{a}", f"x{a}") for a in bits for s in "+-"},
            {(f"x{a}{s}", f"x{a}{t}"): f"x{a}{_times(s, t)}" for a in bits for s in "+-" for t in "+-"},
            {f"x{a}": f"x{a}+" for a in bits},
        ),
    }
    faces: Dict[Tuple[str, int, str], str] = {}
    for a, s, alpha in product(bits, "+-", "+-"):
        faces[(f"x{a}", 1, alpha)] = "*"
        faces[(f"x{a}{s}", 1, alpha)] = "*+"
    comps: Dict[Tuple[int, str, str], str] = {}
    for a, b in product(bits, repeat=2):
        comps[(1, f"x{a}", f"x{b}")] = f"x{a ^ b}"
        for s, t in product("+-", repeat=2):
            comps[(1, f"x{a}{s}", f"x{b}{t}")] = f"x{a ^ b}{_times(s, t)}"
    kappa = {
        (1, f"x{a}", f"x{b}", f"x{c}"): f"x{a ^ b ^ c}{_sign(a * b if faulty else a * b * c)}"
        for a, b, c in product(bits, repeat=3)
    }
    units = {(f"x{a}", 1): f"x{a}+" for a in bits}
    return ChiralMC(
        "parity_faulty" if faulty else "parity", 2, tv, faces,
        {("*", 1): "x0", ("*+", 1): "x0+"}, comps,
        dict(units), dict(units), kappa, {},
    )


def signed_parity(degree: int = 3, faulty: bool = False) -> ChiralMC:
    """parity at degree 2, or with a degenerate second direction at degree 3."""
    A = _parity_base(faulty)
    return A if degree == 2 else degenerate_extension(A)


def _lift_to(R: PMorphism, A: ChiralMC, p: int) -> PMorphism:
    if A.degree == 2:
        return PMorphism(R.name, A, A, p, R.cell_map, R.unit, R.comp)
    return extend_pmorphism(R, A, A, p)


def _xy(a: int, b: int) -> int:
    return a * b


def parity_twist(A: ChiralMC, p: int, cocycle: Cocycle = _xy, name: str = "twist") -> PMorphism:
    """Identity on cells, with x +_1 y compared to itself by the sign (-1)^cocycle(x, y)."""
    base = _parity_base()
    cell_map = {c: c for c in base.level_of}
    unit = {("*", 1): "x0+"}
    comp = {(1, f"x{a}", f"x{b}"): f"x{a ^ b}{_sign(cocycle(a, b))}" for a, b in product((0, 1), repeat=2)}
    R = PMorphism(f"{name}[{p}]", base, base, p, cell_map, unit, comp)
    return _lift_to(R, A, p)


def parity_collapse(A: ChiralMC, p: int) -> PMorphism:
    """Strict endomorphism sending every 1-cube to x0 and every i-map to its positive identity."""
    base = _parity_base()
    cell_map = {"*": "*", "*+": "*+"}
    for a in (0, 1):
        cell_map[f"x{a}"] = "x0"
        for s in "+-":
            cell_map[f"x{a}{s}"] = "x0+"
    return _lift_to(strict_morphism(f"collapse[{p}]", base, base, cell_map, p), A, p)


def parity_character(R: PMorphism, S: PMorphism, U: PMorphism, V: PMorphism, name: str = "chi") -> PQCube:
    """Components (-1)^x on the identity frame: x1 and its degeneracies get the negative sign."""
    A = R.source
    comps = {}
    for idx in A.levels():
        for c in A.cubes(idx):
            f = A.identity(c)
            comps[c] = f.replace("+", "-") if "x1" in c else f
    return PQCube(name, R, S, U, V, comps)


def parity_cube_pool(A: ChiralMC, p: int, q: int) -> List[PQCube]:
    """Every pq-cube whose four edges are identities or twists."""
    hs = [identity_pmorphism(A, p), parity_twist(A, p)]
    vs = [identity_pmorphism(A, q), parity_twist(A, q)]
    pool: List[PQCube] = []
    for n, (R, S, U, V) in enumerate(product(hs, hs, vs, vs)):
        pool.extend(enumerate_pqcubes(R, S, U, V, name=f"c{n}"))
    return pool


CHIRAL: Dict[str, Callable[[], ChiralMC]] = {
    "fix4": spans,
    "fix4_faulty": lambda: spans(faulty=True),
    "fix4_iso": invertible_spans,
    "parity": signed_parity,
    "parity_faulty": lambda: signed_parity(faulty=True),
}


# -- graphs of categories and pseudo algebras


def _involution(one: str, t: str) -> Dict[Tuple[str, str], str]:
    return {(one, one): one, (t, one): t, (one, t): t, (t, t): one}


def graph_xy() -> CatGraph:
    """Objects x, y with t: x -> x, t t = 1; vertical g: x -> y, h: y -> x; tau on g and tau' on h square to 1."""
    A0 = TransversalCategory(
        "gxy.0", ("x", "y"), {"1x": ("x", "x"), "1y": ("y", "y"), "t": ("x", "x")},
        {**_involution("1x", "t"), ("1y", "1y"): "1y"}, {"x": "1x", "y": "1y"},
    )
    A1 = TransversalCategory(
        "gxy.1", ("g", "h"),
        {"1g": ("g", "g"), "tau": ("g", "g"), "1h": ("h", "h"), "tau'": ("h", "h")},
        {**_involution("1g", "tau"), **_involution("1h", "tau'")},
        {"g": "1g", "h": "1h"},
    )
    faces = {
        ("g", "-"): "x", ("g", "+"): "y", ("h", "-"): "y", ("h", "+"): "x",
        ("1g", "-"): "1x", ("1g", "+"): "1y", ("tau", "-"): "t", ("tau", "+"): "1y",
        ("1h", "-"): "1y", ("1h", "+"): "1x", ("tau'", "-"): "1y", ("tau'", "+"): "t",
    }
    return CatGraph("gxy", A0, A1, faces)


def spans_double() -> WeakDoubleCategory:
    return WeakDoubleCategory(spans(2))


def iso_double() -> WeakDoubleCategory:
    return WeakDoubleCategory(invertible_spans())


def parity_double() -> WeakDoubleCategory:
    return WeakDoubleCategory(signed_parity(2))


def squares2() -> WeakDoubleCategory:
    return squares_double("sq2", (0, 1))


def parity_algebra(bound: int = 4) -> PseudoAlgebra:
    return functor_J(parity_double(), bound)  # type: ignore[return-value]


def rebracketed(P: PseudoAlgebra) -> PseudoAlgebra:
    """Normal, but x1 ⊙ x1 compared to its composites with a sign: not of the form J(D)."""
    return transport_algebra(P, {Word(("x1", "x1")): "x0-"}, name=f"{P.name}~")


def renormalised(P: PseudoAlgebra) -> PseudoAlgebra:
    """The unary composite of x1 carries the sign -1, so the normaliser is not trivial."""
    return transport_algebra(P, {Word(("x1",)): "x1-"}, name=f"{P.name}^")


GRAPHS: Dict[str, Callable[[], CatGraph]] = {"gxy": graph_xy}

DOUBLE: Dict[str, Callable[[], WeakDoubleCategory]] = {
    "fix4_double": spans_double,
    "fix4_iso_double": iso_double,
    "parity_double": parity_double,
    "sq2": squares2,
}
