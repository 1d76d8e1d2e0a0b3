"""
Finite, fully tabulated 2-categories and strict 2-functors.

Every other module evaluates its equations here: vertical composition of
2-cells is written in diagrammatic order (``vert(phi, psi)`` is phi then psi)
and whiskering is juxtaposition, ``sφr``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from .logging_config import get_logger
from .models import ArgumentError, BoundaryError, StructuralError, ValidationReport

logger = get_logger("core2cat")

Pair = Tuple[str, str]


@dataclass(frozen=True)
class OneCell:
    id: str
    src: str
    tgt: str


@dataclass(frozen=True)
class TwoCell:
    id: str
    src: str  # source 1-cell
    tgt: str  # target 1-cell


@dataclass
class FiniteTwoCategory:
    name: str
    objects: Tuple[str, ...]
    one_cells: Dict[str, OneCell]
    two_cells: Dict[str, TwoCell]
    comp1: Dict[Pair, str]  # (g, f) -> g∘f
    vcomp: Dict[Pair, str]  # (phi, psi) -> phi ⊗ psi
    whisker_l: Dict[Pair, str]  # (s, phi) -> s.phi
    whisker_r: Dict[Pair, str]  # (phi, r) -> phi.r
    id1: Dict[str, str]
    id2: Dict[str, str]

    _hom: Dict[Pair, Tuple[str, ...]] = field(default_factory=dict, init=False, repr=False)
    _par: Dict[Pair, Tuple[str, ...]] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        self.objects = tuple(sorted(self.objects))
        hom: Dict[Pair, List[str]] = {}
        for f in sorted(self.one_cells):
            c = self.one_cells[f]
            hom.setdefault((c.src, c.tgt), []).append(f)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        par: Dict[Pair, List[str]] = {}
        for a in sorted(self.two_cells):
            c = self.two_cells[a]
            par.setdefault((c.src, c.tgt), []).append(a)
        self._par = {k: tuple(v) for k, v in par.items()}

    # -- boundaries

    def src(self, f: str) -> str:
        return self._one(f).src

    def tgt(self, f: str) -> str:
        return self._one(f).tgt

    def dom(self, a: str) -> str:
        return self._two(a).src

    def cod(self, a: str) -> str:
        return self._two(a).tgt

    def _one(self, f: str) -> OneCell:
        try:
            return self.one_cells[f]
        except KeyError:
            raise StructuralError(f"{self.name}: unknown 1-cell {f!r}") from None

    def _two(self, a: str) -> TwoCell:
        try:
            return self.two_cells[a]
        except KeyError:
            raise StructuralError(f"{self.name}: unknown 2-cell {a!r}") from None

    def hom(self, x: str, y: str) -> Tuple[str, ...]:
        return self._hom.get((x, y), ())

    def cells(self, f: str, g: str) -> Tuple[str, ...]:
        """2-cells f => g."""
        return self._par.get((f, g), ())

    def one_cells_sorted(self) -> List[str]:
        return sorted(self.one_cells)

    def two_cells_sorted(self) -> List[str]:
        return sorted(self.two_cells)

    # -- operations

    def identity(self, x: str) -> str:
        return self.id1[x]

    def identity_cell(self, f: str) -> str:
        return self.id2[f]

    def compose(self, g: str, f: str) -> str:
        """g∘f, i.e. the juxtaposition gf."""
        if self.tgt(f) != self.src(g):
            raise BoundaryError(f"{self.name}: {g} ∘ {f} is not composable")
        try:
            return self.comp1[(g, f)]
        except KeyError:
            raise StructuralError(f"{self.name}: comp1 has no entry for ({g}, {f})") from None

    def path(self, *arrows: str) -> str:
        """Juxtaposition a1 a2 ... ak = a1∘a2∘...∘ak."""
        if not arrows:
            raise ArgumentError("empty path has no object to anchor an identity")
        out = arrows[-1]
        for g in reversed(arrows[:-1]):
            out = self.compose(g, out)
        return out

    def vert(self, a: str, b: str) -> str:
        if self.cod(a) != self.dom(b):
            raise BoundaryError(f"{self.name}: {a} ⊗ {b} is not composable")
        try:
            return self.vcomp[(a, b)]
        except KeyError:
            raise StructuralError(f"{self.name}: vcomp has no entry for ({a}, {b})") from None

    def lw(self, s: str, a: str) -> str:
        if self.tgt(self.dom(a)) != self.src(s):
            raise BoundaryError(f"{self.name}: cannot whisker {s} on the left of {a}")
        try:
            return self.whisker_l[(s, a)]
        except KeyError:
            raise StructuralError(f"{self.name}: whisker_l has no entry for ({s}, {a})") from None

    def rw(self, a: str, r: str) -> str:
        if self.src(self.dom(a)) != self.tgt(r):
            raise BoundaryError(f"{self.name}: cannot whisker {r} on the right of {a}")
        try:
            return self.whisker_r[(a, r)]
        except KeyError:
            raise StructuralError(f"{self.name}: whisker_r has no entry for ({a}, {r})") from None

    def whisker(self, a: str, left: Sequence[str] = (), right: Sequence[str] = ()) -> str:
        """s1 s2 ... a ... r1 r2, evaluated innermost first."""
        out = a
        for s in reversed(tuple(left)):
            out = self.lw(s, out)
        for r in right:
            out = self.rw(out, r)
        return out

    def hcomp(self, b: str, a: str) -> str:
        """Horizontal composite b*a for a: f => f' (A -> B) and b: g => g' (B -> C)."""
        g = self.dom(b)
        f_ = self.cod(a)
        return self.vert(self.lw(g, a), self.rw(b, f_))

    def is_identity_cell(self, a: str) -> bool:
        c = self._two(a)
        return c.src == c.tgt and self.id2.get(c.src) == a

    def inverse(self, a: str) -> Optional[str]:
        f, g = self.dom(a), self.cod(a)
        for b in self.cells(g, f):
            if self.vcomp.get((a, b)) == self.id2[f] and self.vcomp.get((b, a)) == self.id2[g]:
                return b
        return None

    @classmethod
    def tabulate(
        cls,
        name: str,
        objects: Iterable[str],
        one_cells: Iterable[Tuple[str, str, str]],
        two_cells: Iterable[Tuple[str, str, str]],
        compose1: Callable[[str, str], str],
        vertical: Callable[[str, str], str],
        left: Callable[[str, str], str],
        right: Callable[[str, str], str],
        id1: Mapping[str, str],
        id2: Mapping[str, str],
    ) -> "FiniteTwoCategory":
        """Build every table by evaluating the given operations on all composable inputs."""
        ones = {i: OneCell(i, s, t) for i, s, t in one_cells}
        twos = {i: TwoCell(i, s, t) for i, s, t in two_cells}
        comp1: Dict[Pair, str] = {}
        for g, f in product(sorted(ones), repeat=2):
            if ones[f].tgt == ones[g].src:
                comp1[(g, f)] = compose1(g, f)
        vcomp: Dict[Pair, str] = {}
        for a, b in product(sorted(twos), repeat=2):
            if twos[a].tgt == twos[b].src:
                vcomp[(a, b)] = vertical(a, b)
        wl: Dict[Pair, str] = {}
        wr: Dict[Pair, str] = {}
        for f in sorted(ones):
            for a in sorted(twos):
                dom = ones[twos[a].src]
                if dom.tgt == ones[f].src:
                    wl[(f, a)] = left(f, a)
                if dom.src == ones[f].tgt:
                    wr[(a, f)] = right(a, f)
        logger.debug(
            f"Tabulated {name}: {len(ones)} 1-cells, {len(twos)} 2-cells, "
            f"{len(comp1)} composable pairs, {len(vcomp)} vertical pairs"
        )
        return cls(
            name=name, objects=tuple(objects), one_cells=ones, two_cells=twos,
            comp1=comp1, vcomp=vcomp, whisker_l=wl, whisker_r=wr,
            id1=dict(id1), id2=dict(id2),
        )


class Term(NamedTuple):
    """A whiskered factor s1..sk . cell . r1..rm of a pasting word."""
    left: Tuple[str, ...]
    cell: str
    right: Tuple[str, ...]


def term(cell: str, left: Sequence[str] = (), right: Sequence[str] = ()) -> Term:
    return Term(tuple(left), cell, tuple(right))


Factor = Union[str, Term]


def paste(C: FiniteTwoCategory, word: Sequence[Factor], unit: Optional[str] = None) -> str:
    """
    Evaluate a pasting word as a left fold of vertical composites.

    Args:
        C: ambient 2-category
        word: factors, each a 2-cell id or a whiskered Term
        unit: 1-cell whose identity 2-cell is returned for the empty word

    Returns:
        The composite 2-cell id
    """
    if not word:
        if unit is None:
            raise ArgumentError("empty pasting word needs a unit 1-cell")
        return C.identity_cell(unit)
    acc: Optional[str] = None
    for pos, factor in enumerate(word):
        t = factor if isinstance(factor, Term) else Term((), factor, ())
        try:
            cell = C.whisker(t.cell, t.left, t.right)
        except BoundaryError as e:
            raise BoundaryError(f"factor {pos}: {e}", position=pos) from e
        if acc is None:
            acc = cell
            continue
        if C.cod(acc) != C.dom(cell):
            raise BoundaryError(
                f"factor {pos}: target {C.cod(acc)} of the prefix does not match source {C.dom(cell)}",
                position=pos,
            )
        acc = C.vert(acc, cell)
    assert acc is not None
    return acc


def _check_declared(C: FiniteTwoCategory) -> None:
    objs = set(C.objects)
    for f, c in C.one_cells.items():
        if c.src not in objs or c.tgt not in objs:
            raise StructuralError(f"{C.name}: 1-cell {f} has an undeclared endpoint")
    for a, c in C.two_cells.items():
        if c.src not in C.one_cells or c.tgt not in C.one_cells:
            raise StructuralError(f"{C.name}: 2-cell {a} has an undeclared boundary")
        s, t = C.one_cells[c.src], C.one_cells[c.tgt]
        if (s.src, s.tgt) != (t.src, t.tgt):
            raise StructuralError(f"{C.name}: 2-cell {a} joins non-parallel 1-cells")
    for x in objs:
        if C.id1.get(x) not in C.one_cells:
            raise StructuralError(f"{C.name}: object {x} has no declared identity 1-cell")
    for f in C.one_cells:
        if C.id2.get(f) not in C.two_cells:
            raise StructuralError(f"{C.name}: 1-cell {f} has no declared identity 2-cell")
    tables = (
        ("comp1", C.comp1, C.one_cells, C.one_cells, C.one_cells),
        ("vcomp", C.vcomp, C.two_cells, C.two_cells, C.two_cells),
        ("whisker_l", C.whisker_l, C.one_cells, C.two_cells, C.two_cells),
        ("whisker_r", C.whisker_r, C.two_cells, C.one_cells, C.two_cells),
    )
    for tname, table, ka, kb, kv in tables:
        for (a, b), v in table.items():
            if a not in ka or b not in kb or v not in kv:
                raise StructuralError(f"{C.name}: {tname} entry ({a}, {b}) -> {v} has a dangling id")


def validate_two_category(C: FiniteTwoCategory) -> ValidationReport:
    """Exhaustively check the strict 2-category axioms on the tables."""
    _check_declared(C)
    report = ValidationReport(structure=C.name)
    ones = C.one_cells_sorted()
    twos = C.two_cells_sorted()
    oc, tc = C.one_cells, C.two_cells

    total = report.check("tables.total", "every composable pair has a table entry")
    bound = report.check("tables.boundary", "table entries have the composite boundary")
    for g, f in product(ones, repeat=2):
        if oc[f].tgt != oc[g].src:
            continue
        h = C.comp1.get((g, f))
        if total.observe(h is not None, ("comp1", g, f)):
            bound.observe((oc[h].src, oc[h].tgt) == (oc[f].src, oc[g].tgt), ("comp1", g, f, h))
    for a, b in product(twos, repeat=2):
        if tc[a].tgt != tc[b].src:
            continue
        c = C.vcomp.get((a, b))
        if total.observe(c is not None, ("vcomp", a, b)):
            bound.observe((tc[c].src, tc[c].tgt) == (tc[a].src, tc[b].tgt), ("vcomp", a, b, c))
    for s in ones:
        for a in twos:
            f, f2 = tc[a].src, tc[a].tgt
            if oc[f].tgt == oc[s].src:
                c = C.whisker_l.get((s, a))
                if total.observe(c is not None, ("whisker_l", s, a)):
                    want = (C.comp1.get((s, f)), C.comp1.get((s, f2)))
                    bound.observe((tc[c].src, tc[c].tgt) == want, ("whisker_l", s, a, c))
            if oc[f].src == oc[s].tgt:
                c = C.whisker_r.get((a, s))
                if total.observe(c is not None, ("whisker_r", a, s)):
                    want = (C.comp1.get((f, s)), C.comp1.get((f2, s)))
                    bound.observe((tc[c].src, tc[c].tgt) == want, ("whisker_r", a, s, c))
    if not (total.passed and bound.passed):
        logger.warning(f"{C.name}: tables incomplete, skipping axiom sweeps")
        return report

    unit1 = report.check("comp1.unit", "identity 1-cells are units")
    for f in ones:
        unit1.observe(C.comp1[(f, C.id1[oc[f].src])] == f, (f, C.id1[oc[f].src]))
        unit1.observe(C.comp1[(C.id1[oc[f].tgt], f)] == f, (C.id1[oc[f].tgt], f))
    assoc1 = report.check("comp1.associativity", "(hg)f = h(gf)")
    for h, g, f in product(ones, repeat=3):
        if oc[f].tgt == oc[g].src and oc[g].tgt == oc[h].src:
            lhs = C.comp1[(C.comp1[(h, g)], f)]
            rhs = C.comp1[(h, C.comp1[(g, f)])]
            assoc1.observe(lhs == rhs, (h, g, f))

    unit2 = report.check("vcomp.unit", "identity 2-cells are units")
    for a in twos:
        unit2.observe(C.vcomp[(C.id2[tc[a].src], a)] == a, (C.id2[tc[a].src], a))
        unit2.observe(C.vcomp[(a, C.id2[tc[a].tgt])] == a, (a, C.id2[tc[a].tgt]))
    by_src: Dict[str, List[str]] = {}
    for a in twos:
        by_src.setdefault(tc[a].src, []).append(a)
    assoc2 = report.check("vcomp.associativity", "(a⊗b)⊗c = a⊗(b⊗c)")
    for a in twos:
        for b in by_src.get(tc[a].tgt, ()):
            for c in by_src.get(tc[b].tgt, ()):
                lhs = C.vcomp[(C.vcomp[(a, b)], c)]
                rhs = C.vcomp[(a, C.vcomp[(b, c)])]
                assoc2.observe(lhs == rhs, (a, b, c))

    wid = report.check("whisker.identity", "identity whiskers are trivial and whiskered identities are identities")
    wvert = report.check("whisker.vertical", "whiskering preserves vertical composition")
    wcomp = report.check("whisker.composite", "whiskering is compatible with 1-cell composition")
    for (s, a), c in sorted(C.whisker_l.items()):
        if s == C.id1[oc[s].src]:
            wid.observe(c == a, (s, a, c))
        if C.is_identity_cell(a):
            wid.observe(c == C.id2[C.comp1[(s, tc[a].src)]], (s, a, c))
    for (a, r), c in sorted(C.whisker_r.items()):
        if r == C.id1[oc[r].src]:
            wid.observe(c == a, (a, r, c))
        if C.is_identity_cell(a):
            wid.observe(c == C.id2[C.comp1[(tc[a].src, r)]], (a, r, c))
    for (a, b), ab in sorted(C.vcomp.items()):
        f = tc[a].src
        for s in ones:
            if oc[s].src == oc[f].tgt:
                lhs = C.whisker_l[(s, ab)]
                rhs = C.vcomp[(C.whisker_l[(s, a)], C.whisker_l[(s, b)])]
                wvert.observe(lhs == rhs, (s, a, b))
            if oc[s].tgt == oc[f].src:
                lhs = C.whisker_r[(ab, s)]
                rhs = C.vcomp[(C.whisker_r[(a, s)], C.whisker_r[(b, s)])]
                wvert.observe(lhs == rhs, (a, b, s))
    for (s, a), sa in sorted(C.whisker_l.items()):
        for t in ones:
            if oc[t].src == oc[s].tgt:
                lhs = C.whisker_l[(t, sa)]
                rhs = C.whisker_l[(C.comp1[(t, s)], a)]
                wcomp.observe(lhs == rhs, (t, s, a))
        for r in ones:
            if oc[r].tgt == oc[tc[a].src].src:
                lhs = C.whisker_r[(sa, r)]
                rhs = C.whisker_l[(s, C.whisker_r[(a, r)])]
                wcomp.observe(lhs == rhs, (s, a, r))
    for (a, r), ar in sorted(C.whisker_r.items()):
        for r2 in ones:
            if oc[r2].tgt == oc[r].src:
                lhs = C.whisker_r[(ar, r2)]
                rhs = C.whisker_r[(a, C.comp1[(r, r2)])]
                wcomp.observe(lhs == rhs, (a, r, r2))

    inter = report.check("interchange", "(gφ)⊗(ψf') = (ψf)⊗(g'φ)")
    for a in twos:
        f, f2 = tc[a].src, tc[a].tgt
        for b in twos:
            g, g2 = tc[b].src, tc[b].tgt
            if oc[g].src != oc[f].tgt:
                continue
            lhs = C.vcomp[(C.whisker_l[(g, a)], C.whisker_r[(b, f2)])]
            rhs = C.vcomp[(C.whisker_r[(b, f)], C.whisker_l[(g2, a)])]
            inter.observe(lhs == rhs, (a, b))

    logger.debug(f"validate_two_category({C.name}): {report.summary()}")
    return report


@dataclass
class StrictTwoFunctor:
    name: str
    source: FiniteTwoCategory
    target: FiniteTwoCategory
    object_map: Dict[str, str]
    one_cell_map: Dict[str, str]
    two_cell_map: Dict[str, str]

    def obj(self, x: str) -> str:
        return self.object_map[x]

    def one(self, f: str) -> str:
        return self.one_cell_map[f]

    def two(self, a: str) -> str:
        return self.two_cell_map[a]

    def __call__(self, f: str) -> str:
        if f in self.one_cell_map:
            return self.one_cell_map[f]
        if f in self.two_cell_map:
            return self.two_cell_map[f]
        return self.object_map[f]


def identity_functor(C: FiniteTwoCategory) -> StrictTwoFunctor:
    return StrictTwoFunctor(
        name=f"id[{C.name}]", source=C, target=C,
        object_map={x: x for x in C.objects},
        one_cell_map={f: f for f in C.one_cells},
        two_cell_map={a: a for a in C.two_cells},
    )


def compose_functors(F: StrictTwoFunctor, G: StrictTwoFunctor) -> StrictTwoFunctor:
    """G∘F."""
    if F.target is not G.source:
        raise ArgumentError(f"cannot compose {G.name} after {F.name}: target/source differ")
    return StrictTwoFunctor(
        name=f"{G.name}∘{F.name}", source=F.source, target=G.target,
        object_map={x: G.object_map[y] for x, y in F.object_map.items()},
        one_cell_map={f: G.one_cell_map[g] for f, g in F.one_cell_map.items()},
        two_cell_map={a: G.two_cell_map[b] for a, b in F.two_cell_map.items()},
    )


def validate_two_functor(U: StrictTwoFunctor) -> ValidationReport:
    S, T = U.source, U.target
    report = ValidationReport(structure=U.name)
    total = report.check("functor.total", "every cell has an image")
    for x in S.objects:
        total.observe(U.object_map.get(x) in set(T.objects), ("object", x))
    for f in S.one_cells_sorted():
        total.observe(U.one_cell_map.get(f) in T.one_cells, ("1-cell", f))
    for a in S.two_cells_sorted():
        total.observe(U.two_cell_map.get(a) in T.two_cells, ("2-cell", a))
    if not total.passed:
        return report

    bound = report.check("functor.boundary", "images have the image boundary")
    for f in S.one_cells_sorted():
        g = U.one(f)
        bound.observe(
            (T.src(g), T.tgt(g)) == (U.obj(S.src(f)), U.obj(S.tgt(f))), (f, g)
        )
    for a in S.two_cells_sorted():
        b = U.two(a)
        bound.observe((T.dom(b), T.cod(b)) == (U.one(S.dom(a)), U.one(S.cod(a))), (a, b))

    idc = report.check("functor.identities", "identities map to identities")
    for x in S.objects:
        idc.observe(U.one(S.id1[x]) == T.id1[U.obj(x)], (x,))
    for f in S.one_cells_sorted():
        idc.observe(U.two(S.id2[f]) == T.id2[U.one(f)], (f,))

    c1 = report.check("functor.comp1", "U(gf) = U(g)U(f)")
    for (g, f), h in sorted(S.comp1.items()):
        c1.observe(U.one(h) == T.comp1.get((U.one(g), U.one(f))), (g, f))
    vc = report.check("functor.vcomp", "U(a⊗b) = U(a)⊗U(b)")
    for (a, b), c in sorted(S.vcomp.items()):
        vc.observe(U.two(c) == T.vcomp.get((U.two(a), U.two(b))), (a, b))
    wh = report.check("functor.whisker", "U preserves whiskering")
    for (s, a), c in sorted(S.whisker_l.items()):
        wh.observe(U.two(c) == T.whisker_l.get((U.one(s), U.two(a))), (s, a))
    for (a, r), c in sorted(S.whisker_r.items()):
        wh.observe(U.two(c) == T.whisker_r.get((U.two(a), U.one(r))), (a, r))
    return report


FORGETFUL = "forgetful"
STRUCTURAL = "structural"


@dataclass
class TwoFunctorSequence:
    """
    Levels C_0, C_1, ... sharing one object set, joined by identity-on-objects links.

    Forgetful shape: links[k] is U: C_{k+1} -> C_k. Structural shape: links[k]
    is U: C_k -> C_{k+1}. Directions past the last level use the last level.
    """
    name: str
    shape: str
    levels: List[FiniteTwoCategory]
    links: List[StrictTwoFunctor]
    _cache: Dict[Pair, StrictTwoFunctor] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        if self.shape not in (FORGETFUL, STRUCTURAL):
            raise ArgumentError(f"unknown sequence shape {self.shape!r}")
        if not self.levels:
            raise StructuralError(f"{self.name}: a sequence needs at least one level")
        if len(self.links) != len(self.levels) - 1:
            raise StructuralError(f"{self.name}: expected {len(self.levels) - 1} links, got {len(self.links)}")
        shared = set(self.levels[0].objects)
        for lvl in self.levels[1:]:
            if set(lvl.objects) != shared:
                raise StructuralError(f"{self.name}: level {lvl.name} has a different object set")
        for k, U in enumerate(self.links):
            lo, hi = self.levels[k], self.levels[k + 1]
            want = (hi, lo) if self.shape == FORGETFUL else (lo, hi)
            if (U.source, U.target) != want:
                raise StructuralError(f"{self.name}: link {k} joins the wrong levels")
            if any(U.object_map.get(x) != x for x in shared):
                raise StructuralError(f"{self.name}: link {U.name} is not the identity on objects")

    @property
    def objects(self) -> Tuple[str, ...]:
        return self.levels[0].objects

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def level(self, i: int) -> FiniteTwoCategory:
        return self.levels[min(i, self.depth)]

    def link(self, a: int, b: int) -> StrictTwoFunctor:
        """Composite link from level a to level b (a >= b forgetful, a <= b structural)."""
        a, b = min(a, self.depth), min(b, self.depth)
        if (self.shape == FORGETFUL and a < b) or (self.shape == STRUCTURAL and a > b):
            raise ArgumentError(f"{self.name}: no {self.shape} link from level {a} to level {b}")
        key = (str(a), str(b))
        if key in self._cache:
            return self._cache[key]
        if a == b:
            out = identity_functor(self.levels[a])
        elif self.shape == FORGETFUL:
            out = compose_functors(self.links[a - 1], self.link(a - 1, b))
        else:
            out = compose_functors(self.links[a], self.link(a + 1, b))
        self._cache[key] = out
        return out


def identity_sequence(C: FiniteTwoCategory, depth: int, shape: str = FORGETFUL) -> TwoFunctorSequence:
    ident = identity_functor(C)
    return TwoFunctorSequence(
        name=f"id-seq[{C.name}]", shape=shape,
        levels=[C] * (depth + 1), links=[ident] * depth,
    )


def validate_sequence(seq: TwoFunctorSequence) -> ValidationReport:
    report = ValidationReport(structure=seq.name)
    for k, lvl in enumerate(seq.levels):
        report.merge(validate_two_category(lvl), prefix=f"level{k}.")
    for k, U in enumerate(seq.links):
        report.merge(validate_two_functor(U), prefix=f"link{k}.")
    return report
