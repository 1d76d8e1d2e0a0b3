"""
Finite chiral multiple categories, mixed-laxity morphisms and pq-cubes.

A ChiralMC of degree n stores one transversal category tv_i for every positive
multi-index i over the geometric directions 1..n-1: i-cubes are its objects,
i-maps its arrows, composed in direction 0. Faces, degeneracies and geometric
compositions act on cubes and maps alike; unitors, associators and
interchangers are i-maps. Cell ids are global across levels.

A p-morphism is colax in the directions below p and lax from p on; p runs over
1..n, with n standing in for the colax end. A pq-cube is a face-consistent
family of transversal maps VR(x) -> SU(x) coherent with the comparisons of its
four boundary morphisms.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple, Union

from .logging_config import get_logger
from .models import (
    ArgumentError,
    BoundaryError,
    BudgetExceededError,
    CheckRecord,
    StructuralError,
    ValidationReport,
)
from .multicat import SIGNS, MultiIndex, TruncatedMultipleCategory, indices_up_to

logger = get_logger("chiralcalc")

Pair = Tuple[str, str]
FaceKey = Tuple[str, int, str]


def _attempt(rec: CheckRecord, witness: Sequence[object], test: Callable[[], bool]) -> bool:
    """Observe one instance; a missing table entry counts as a failed instance."""
    try:
        ok = bool(test())
    except (StructuralError, BoundaryError, KeyError):
        ok = False
    return rec.observe(ok, witness)


# -- transversal categories


@dataclass
class TransversalCategory:
    """tv_i: i-cubes as objects, i-maps as arrows, composition g∘f = f +_0 g."""
    name: str
    cubes: Tuple[str, ...]
    maps: Dict[str, Pair]
    comp: Dict[Pair, str]
    ids: Dict[str, str]

    _hom: Dict[Pair, Tuple[str, ...]] = field(default_factory=dict, init=False, repr=False)
    _out: Dict[str, Tuple[str, ...]] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        self.cubes = tuple(sorted(self.cubes))
        hom: Dict[Pair, List[str]] = {}
        out: Dict[str, List[str]] = {}
        for f in sorted(self.maps):
            hom.setdefault(self.maps[f], []).append(f)
            out.setdefault(self.maps[f][0], []).append(f)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._out = {k: tuple(v) for k, v in out.items()}

    @property
    def objects(self) -> Tuple[str, ...]:
        return self.cubes

    @property
    def arrows(self) -> Dict[str, Pair]:
        return self.maps

    def src(self, f: str) -> str:
        try:
            return self.maps[f][0]
        except KeyError:
            raise StructuralError(f"{self.name}: unknown map {f!r}") from None

    def tgt(self, f: str) -> str:
        try:
            return self.maps[f][1]
        except KeyError:
            raise StructuralError(f"{self.name}: unknown map {f!r}") from None

    def hom(self, x: str, y: str) -> Tuple[str, ...]:
        return self._hom.get((x, y), ())

    def out_of(self, x: str) -> Tuple[str, ...]:
        return self._out.get(x, ())

    def identity(self, x: str) -> str:
        try:
            return self.ids[x]
        except KeyError:
            raise StructuralError(f"{self.name}: no identity on {x!r}") from None

    def compose(self, g: str, f: str) -> str:
        if self.tgt(f) != self.src(g):
            raise BoundaryError(f"{self.name}: {g} ∘ {f} is not composable")
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise StructuralError(f"{self.name}: no composite for ({g}, {f})") from None

    def then(self, *fs: str) -> str:
        """f_1 +_0 f_2 +_0 ... in diagrammatic order."""
        if not fs:
            raise ArgumentError("empty transversal path")
        out = fs[0]
        for g in fs[1:]:
            out = self.compose(g, out)
        return out

    def inverse(self, f: str) -> Optional[str]:
        x, y = self.src(f), self.tgt(f)
        for g in self.hom(y, x):
            if self.comp.get((g, f)) == self.ids.get(x) and self.comp.get((f, g)) == self.ids.get(y):
                return g
        return None


def validate_transversal(T: TransversalCategory, report: Optional[ValidationReport] = None) -> ValidationReport:
    report = report if report is not None else ValidationReport(structure=T.name)
    bound = report.check("tv.boundary", "composites exist with the composite ends")
    for f in sorted(T.maps):
        for g in T.out_of(T.tgt(f)):
            h = T.comp.get((g, f))
            bound.observe(h is not None and T.maps.get(h) == (T.src(f), T.tgt(g)), (T.name, g, f))
    unit = report.check("tv.unit", "1 f = f = f 1")
    for x in T.cubes:
        e = T.ids.get(x)
        unit.observe(e is not None and T.maps.get(e) == (x, x), (T.name, x))
    if not (bound.passed and unit.passed):
        return report
    for f in sorted(T.maps):
        ok = T.comp[(T.ids[T.tgt(f)], f)] == f and T.comp[(f, T.ids[T.src(f)])] == f
        unit.observe(ok, (T.name, f))
    assoc = report.check("tv.associativity", "h(gf) = (hg)f")
    for f in sorted(T.maps):
        for g in T.out_of(T.tgt(f)):
            for h in T.out_of(T.tgt(g)):
                assoc.observe(T.comp[(h, T.comp[(g, f)])] == T.comp[(T.comp[(h, g)], f)], (T.name, h, g, f))
    return report


# -- chiral multiple categories


@dataclass
class ChiralMC:
    name: str
    degree: int
    tv: Dict[MultiIndex, TransversalCategory]
    faces: Dict[FaceKey, str]
    degeneracies: Dict[Tuple[str, int], str]
    comps: Dict[Tuple[int, str, str], str]
    lam: Dict[Tuple[str, int], str]
    rho: Dict[Tuple[str, int], str]
    kappa: Dict[Tuple[int, str, str, str], str]
    chi: Dict[Tuple[int, int, str, str, str, str], str]
    chi_invertible: bool = True

    level_of: Dict[str, MultiIndex] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ArgumentError(f"{self.name}: degree must be >= 1")
        self.level_of = {}
        for idx, T in self.tv.items():
            if 0 in idx:
                raise StructuralError(f"{self.name}: level {idx} contains the transversal direction")
            for c in list(T.cubes) + list(T.maps):
                if c in self.level_of:
                    raise StructuralError(f"{self.name}: cell {c} declared in two levels")
                self.level_of[c] = idx

    @property
    def directions(self) -> Tuple[int, ...]:
        return tuple(range(1, self.degree))

    def levels(self) -> List[MultiIndex]:
        return indices_up_to(self.directions, self.degree - 1)

    def level(self, c: str) -> MultiIndex:
        try:
            return self.level_of[c]
        except KeyError:
            raise StructuralError(f"{self.name}: unknown cell {c!r}") from None

    def at(self, c: str) -> TransversalCategory:
        return self.tv[self.level(c)]

    def is_map(self, c: str) -> bool:
        return c in self.at(c).maps

    def cubes(self, idx: MultiIndex) -> Tuple[str, ...]:
        T = self.tv.get(idx)
        return T.cubes if T is not None else ()

    def maps(self, idx: MultiIndex) -> List[str]:
        T = self.tv.get(idx)
        return sorted(T.maps) if T is not None else []

    def cells(self, idx: MultiIndex) -> List[str]:
        return list(self.cubes(idx)) + self.maps(idx)

    # -- structure maps

    def face(self, c: str, j: int, alpha: str) -> str:
        try:
            return self.faces[(c, j, alpha)]
        except KeyError:
            raise StructuralError(f"{self.name}: no face ({c}, {j}, {alpha})") from None

    def degen(self, c: str, j: int) -> str:
        try:
            return self.degeneracies[(c, j)]
        except KeyError:
            raise StructuralError(f"{self.name}: no degeneracy ({c}, {j})") from None

    def plus(self, i: int, a: str, b: str) -> str:
        try:
            return self.comps[(i, a, b)]
        except KeyError:
            raise StructuralError(f"{self.name}: no composite {a} +_{i} {b}") from None

    def src(self, f: str) -> str:
        return self.at(f).src(f)

    def tgt(self, f: str) -> str:
        return self.at(f).tgt(f)

    def identity(self, x: str) -> str:
        return self.at(x).identity(x)

    def then(self, *fs: str) -> str:
        return self.at(fs[0]).then(*fs)

    def unitor_left(self, x: str, i: int) -> str:
        try:
            return self.lam[(x, i)]
        except KeyError:
            raise StructuralError(f"{self.name}: no left {i}-unitor at {x}") from None

    def unitor_right(self, x: str, i: int) -> str:
        try:
            return self.rho[(x, i)]
        except KeyError:
            raise StructuralError(f"{self.name}: no right {i}-unitor at {x}") from None

    def associator(self, i: int, x: str, y: str, z: str) -> str:
        try:
            return self.kappa[(i, x, y, z)]
        except KeyError:
            raise StructuralError(f"{self.name}: no {i}-associator at ({x}, {y}, {z})") from None

    def interchanger(self, i: int, j: int, x: str, y: str, z: str, u: str) -> str:
        try:
            return self.chi[(i, j, x, y, z, u)]
        except KeyError:
            raise StructuralError(f"{self.name}: no {i}{j}-interchanger at ({x}, {y}, {z}, {u})") from None

    # -- consecutive configurations

    def _starts(self, cells: Sequence[str], i: int) -> Dict[Optional[str], List[str]]:
        out: Dict[Optional[str], List[str]] = {}
        for c in cells:
            out.setdefault(self.faces.get((c, i, "-")), []).append(c)
        return out

    def chains(self, idx: MultiIndex, i: int, length: int, maps: bool = False) -> List[Tuple[str, ...]]:
        """i-consecutive tuples (c_1, ..., c_length) of cubes or maps of one level."""
        cells = self.maps(idx) if maps else list(self.cubes(idx))
        starts = self._starts(cells, i)
        out: List[Tuple[str, ...]] = [(c,) for c in cells]
        for _ in range(length - 1):
            out = [t + (c,) for t in out for c in starts.get(self.faces.get((t[-1], i, "+")), ())]
        return out

    def pairs(self, idx: MultiIndex, i: int, maps: bool = False) -> List[Pair]:
        return [(a, b) for a, b in self.chains(idx, i, 2, maps)]

    def squares(self, idx: MultiIndex, i: int, j: int, maps: bool = False) -> List[Tuple[str, str, str, str]]:
        """(x, y, z, u) with x, y and z, u i-consecutive, x, z and y, u j-consecutive."""
        cells = self.maps(idx) if maps else list(self.cubes(idx))
        si, sj = self._starts(cells, i), self._starts(cells, j)
        out = []
        for x, y in self.pairs(idx, i, maps):
            for z in sj.get(self.faces.get((x, j, "+")), ()):
                for u in si.get(self.faces.get((z, i, "+")), ()):
                    if self.faces.get((y, j, "+")) == self.faces.get((u, j, "-")):
                        out.append((x, y, z, u))
        return out


def _interchange_source(A: ChiralMC, i: int, j: int, x: str, y: str, z: str, u: str) -> str:
    return A.plus(j, A.plus(i, x, y), A.plus(i, z, u))


def _interchange_target(A: ChiralMC, i: int, j: int, x: str, y: str, z: str, u: str) -> str:
    return A.plus(i, A.plus(j, x, z), A.plus(j, y, u))


def _check_tables(A: ChiralMC, report: ValidationReport) -> bool:
    tot = report.check("tables.total", "every face, degeneracy, composite and comparison is tabulated")
    for idx in A.levels():
        if idx not in A.tv:
            tot.fail(("level", idx.label))
            continue
        for c in A.cells(idx):
            for j in idx:
                for a in SIGNS:
                    f = A.faces.get((c, j, a))
                    tot.observe(f is not None and A.level_of.get(f) == idx.remove(j), ("face", c, j, a))
            for j in A.directions:
                if j not in idx:
                    e = A.degeneracies.get((c, j))
                    tot.observe(e is not None and A.level_of.get(e) == idx.adjoin(j), ("degeneracy", c, j))
        if not tot.passed:
            return False
        for i in idx:
            for maps in (False, True):
                for a, b in A.pairs(idx, i, maps):
                    z = A.comps.get((i, a, b))
                    tot.observe(z is not None and A.level_of.get(z) == idx, ("comp", i, a, b))
            for x in A.cubes(idx):
                tot.observe((x, i) in A.lam and (x, i) in A.rho, ("unitor", x, i))
            for x, y, z in A.chains(idx, i, 3):
                tot.observe((i, x, y, z) in A.kappa, ("associator", i, x, y, z))
            for j in idx:
                if j > i:
                    for sq in A.squares(idx, i, j):
                        tot.observe((i, j) + sq in A.chi, ("interchanger", i, j) + sq)
    return tot.passed


def _check_structure_maps(A: ChiralMC, report: ValidationReport) -> None:
    fun = report.check("faces.functor", "faces and degeneracies are functors of transversal categories")
    rel = report.check("multiple.relations", "faces and degeneracies satisfy the multiple relations")
    for idx in A.levels():
        T = A.tv[idx]
        for j in A.directions:
            ops: List[Callable[[str], str]] = []
            if j in idx:
                ops = [lambda c, j=j, a=a: A.face(c, j, a) for a in SIGNS]
            else:
                ops = [lambda c, j=j: A.degen(c, j)]
            for op in ops:
                for f in T.maps:
                    _attempt(fun, (j, f), lambda: (A.src(op(f)), A.tgt(op(f))) == (op(T.src(f)), op(T.tgt(f))))
                for x in T.cubes:
                    _attempt(fun, (j, x), lambda: op(T.identity(x)) == A.identity(op(x)))
                for f in sorted(T.maps):
                    for g in T.out_of(T.tgt(f)):
                        _attempt(fun, (j, g, f), lambda: op(T.compose(g, f)) == A.then(op(f), op(g)))
        for c in A.cells(idx):
            for i in idx:
                for j in idx:
                    if i < j:
                        for a, b in product(SIGNS, repeat=2):
                            _attempt(rel, ("faces", c, i, a, j, b),
                                     lambda: A.face(A.face(c, j, b), i, a) == A.face(A.face(c, i, a), j, b))
            for j in A.directions:
                if j in idx:
                    continue
                for a in SIGNS:
                    _attempt(rel, ("face.degen", c, j, a), lambda: A.face(A.degen(c, j), j, a) == c)
                for i in idx:
                    for a in SIGNS:
                        _attempt(rel, ("face.degen", c, i, a, j),
                                 lambda: A.face(A.degen(c, j), i, a) == A.degen(A.face(c, i, a), j))
                for k in A.directions:
                    if k > j and k not in idx:
                        _attempt(rel, ("degen.degen", c, j, k),
                                 lambda: A.degen(A.degen(c, j), k) == A.degen(A.degen(c, k), j))


def _check_compositions(A: ChiralMC, report: ValidationReport) -> None:
    bound = report.check("gcomp.boundary", "geometric composites have the composite faces")
    trans = report.check("gcomp.transversal", "+_i is a functor over transversal composition")
    degi = report.check("degeneracy.interchange", "e_j(a +_i b) = e_j a +_i e_j b")
    for idx in A.levels():
        for i in idx:
            for maps in (False, True):
                for a, b in A.pairs(idx, i, maps):
                    _attempt(bound, (i, a, b, "-"), lambda: A.face(A.plus(i, a, b), i, "-") == A.face(a, i, "-"))
                    _attempt(bound, (i, a, b, "+"), lambda: A.face(A.plus(i, a, b), i, "+") == A.face(b, i, "+"))
                    for k in idx:
                        if k == i:
                            continue
                        for s in SIGNS:
                            _attempt(bound, (i, a, b, k, s), lambda: A.face(A.plus(i, a, b), k, s)
                                     == A.plus(i, A.face(a, k, s), A.face(b, k, s)))
                    for j in A.directions:
                        if j not in idx:
                            _attempt(degi, (i, j, a, b), lambda: A.degen(A.plus(i, a, b), j)
                                     == A.plus(i, A.degen(a, j), A.degen(b, j)))
            for x, y in A.pairs(idx, i):
                _attempt(trans, ("identity", i, x, y),
                         lambda: A.plus(i, A.identity(x), A.identity(y)) == A.identity(A.plus(i, x, y)))
            T = A.tv[idx]
            for f, g in A.pairs(idx, i, maps=True):
                _attempt(trans, ("ends", i, f, g), lambda: (A.src(A.plus(i, f, g)), A.tgt(A.plus(i, f, g)))
                         == (A.plus(i, T.src(f), T.src(g)), A.plus(i, T.tgt(f), T.tgt(g))))
                for f2 in T.out_of(T.tgt(f)):
                    for g2 in T.out_of(T.tgt(g)):
                        if A.faces.get((f2, i, "+")) != A.faces.get((g2, i, "-")):
                            continue
                        _attempt(trans, ("interchange", i, f, g, f2, g2),
                                 lambda: A.plus(i, T.compose(f2, f), T.compose(g2, g))
                                 == T.compose(A.plus(i, f2, g2), A.plus(i, f, g)))


def _check_comparisons(A: ChiralMC, report: ValidationReport) -> None:
    bound = report.check("comparisons.boundary", "unitors, associators and interchangers have their boundaries")
    special = report.check("comparisons.special", "comparisons are special in their own directions")
    faces = report.check("comparisons.faces", "comparisons commute with the other faces")
    nat = report.check("comparisons.naturality", "comparisons are natural in transversal maps")
    inv = report.check("comparisons.invertible", "unitors, associators (and interchangers if weak) are invertible")

    def special_in(f: str, i: int) -> bool:
        return all(A.face(f, i, s) == A.identity(A.face(A.src(f), i, s)) for s in SIGNS)

    for idx in A.levels():
        T = A.tv[idx]
        for i in idx:
            others = [k for k in idx if k != i]
            for x in A.cubes(idx):
                lx, rx = A.lam.get((x, i)), A.rho.get((x, i))
                _attempt(bound, ("lambda", i, x), lambda: (A.src(lx), A.tgt(lx))
                         == (A.plus(i, A.degen(A.face(x, i, "-"), i), x), x))
                _attempt(bound, ("rho", i, x), lambda: (A.src(rx), A.tgt(rx))
                         == (A.plus(i, x, A.degen(A.face(x, i, "+"), i)), x))
                _attempt(special, ("lambda", i, x), lambda: special_in(lx, i))
                _attempt(special, ("rho", i, x), lambda: special_in(rx, i))
                for k in others:
                    for s in SIGNS:
                        _attempt(faces, ("lambda", i, x, k, s),
                                 lambda: A.face(lx, k, s) == A.unitor_left(A.face(x, k, s), i))
                        _attempt(faces, ("rho", i, x, k, s),
                                 lambda: A.face(rx, k, s) == A.unitor_right(A.face(x, k, s), i))
                _attempt(inv, ("lambda", i, x), lambda: T.inverse(lx) is not None)
                _attempt(inv, ("rho", i, x), lambda: T.inverse(rx) is not None)
            for f in sorted(T.maps):
                x, y = T.src(f), T.tgt(f)
                _attempt(nat, ("lambda", i, f), lambda: A.then(A.unitor_left(x, i), f)
                         == A.then(A.plus(i, A.degen(A.face(f, i, "-"), i), f), A.unitor_left(y, i)))
                _attempt(nat, ("rho", i, f), lambda: A.then(A.unitor_right(x, i), f)
                         == A.then(A.plus(i, f, A.degen(A.face(f, i, "+"), i)), A.unitor_right(y, i)))
            for x, y, z in A.chains(idx, i, 3):
                k3 = A.kappa.get((i, x, y, z))
                _attempt(bound, ("kappa", i, x, y, z), lambda: (A.src(k3), A.tgt(k3))
                         == (A.plus(i, x, A.plus(i, y, z)), A.plus(i, A.plus(i, x, y), z)))
                _attempt(special, ("kappa", i, x, y, z), lambda: special_in(k3, i))
                for k in others:
                    for s in SIGNS:
                        _attempt(faces, ("kappa", i, x, y, z, k, s), lambda: A.face(k3, k, s)
                                 == A.associator(i, A.face(x, k, s), A.face(y, k, s), A.face(z, k, s)))
                _attempt(inv, ("kappa", i, x, y, z), lambda: T.inverse(k3) is not None)
            for f, g, h in A.chains(idx, i, 3, maps=True):
                _attempt(nat, ("kappa", i, f, g, h), lambda: A.then(
                    A.associator(i, T.src(f), T.src(g), T.src(h)), A.plus(i, A.plus(i, f, g), h))
                    == A.then(A.plus(i, f, A.plus(i, g, h)), A.associator(i, T.tgt(f), T.tgt(g), T.tgt(h))))
            for j in idx:
                if j <= i:
                    continue
                rest = [k for k in idx if k not in (i, j)]
                for sq in A.squares(idx, i, j):
                    c = A.chi.get((i, j) + sq)
                    _attempt(bound, ("chi", i, j) + sq, lambda: (A.src(c), A.tgt(c))
                             == (_interchange_source(A, i, j, *sq), _interchange_target(A, i, j, *sq)))
                    _attempt(special, ("chi", i, j) + sq, lambda: special_in(c, i) and special_in(c, j))
                    for k in rest:
                        for s in SIGNS:
                            _attempt(faces, ("chi", i, j, k, s) + sq, lambda: A.face(c, k, s)
                                     == A.interchanger(i, j, *(A.face(w, k, s) for w in sq)))
                    if A.chi_invertible:
                        _attempt(inv, ("chi", i, j) + sq, lambda: T.inverse(c) is not None)
                for fs in A.squares(idx, i, j, maps=True):
                    srcs = tuple(T.src(f) for f in fs)
                    tgts = tuple(T.tgt(f) for f in fs)
                    _attempt(nat, ("chi", i, j) + fs, lambda: A.then(
                        A.interchanger(i, j, *srcs), _interchange_target(A, i, j, *fs))
                        == A.then(_interchange_source(A, i, j, *fs), A.interchanger(i, j, *tgts)))


def _check_coherence(A: ChiralMC, report: ValidationReport) -> None:
    pent = report.check("coherence.pentagon", "associator pentagon")
    tri = report.check("coherence.triangle", "unitor triangle")
    chk = report.check("coherence.chi_kappa", "interchangers are compatible with associators")
    chu = report.check("coherence.chi_units", "interchangers are compatible with unitors")
    for idx in A.levels():
        for i in idx:
            kap = lambda x, y, z, i=i: A.associator(i, x, y, z)  # noqa: E731
            for w, x, y, z in A.chains(idx, i, 4):
                _attempt(pent, (i, w, x, y, z), lambda: A.then(
                    kap(w, x, A.plus(i, y, z)), kap(A.plus(i, w, x), y, z))
                    == A.then(A.plus(i, A.identity(w), kap(x, y, z)), kap(w, A.plus(i, x, y), z),
                              A.plus(i, kap(w, x, y), A.identity(z))))
            for x, y in A.pairs(idx, i):
                _attempt(tri, (i, x, y), lambda: A.then(
                    kap(x, A.degen(A.face(x, i, "+"), i), y), A.plus(i, A.unitor_right(x, i), A.identity(y)))
                    == A.plus(i, A.identity(x), A.unitor_left(y, i)))
            for j in idx:
                if j <= i:
                    continue
                _check_chi_kappa(A, idx, i, j, chk)
                _check_chi_units(A, idx, i, j, chu)


def _check_chi_kappa(A: ChiralMC, idx: MultiIndex, i: int, j: int, rec: CheckRecord) -> None:
    def chi(x: str, y: str, z: str, u: str) -> str:
        return A.interchanger(i, j, x, y, z, u)

    sj = A._starts(list(A.cubes(idx)), j)
    si = A._starts(list(A.cubes(idx)), i)
    # three columns in direction i, two rows in direction j
    for x1, x2, x3 in A.chains(idx, i, 3):
        for y1 in sj.get(A.faces.get((x1, j, "+")), ()):
            for y2 in si.get(A.faces.get((y1, i, "+")), ()):
                if A.faces.get((y2, j, "-")) != A.faces.get((x2, j, "+")):
                    continue
                for y3 in si.get(A.faces.get((y2, i, "+")), ()):
                    if A.faces.get((y3, j, "-")) != A.faces.get((x3, j, "+")):
                        continue
                    _attempt(rec, ("i", i, j, x1, x2, x3, y1, y2, y3), lambda: A.then(
                        A.plus(j, A.associator(i, x1, x2, x3), A.associator(i, y1, y2, y3)),
                        chi(A.plus(i, x1, x2), x3, A.plus(i, y1, y2), y3),
                        A.plus(i, chi(x1, x2, y1, y2), A.identity(A.plus(j, x3, y3))))
                        == A.then(
                        chi(x1, A.plus(i, x2, x3), y1, A.plus(i, y2, y3)),
                        A.plus(i, A.identity(A.plus(j, x1, y1)), chi(x2, x3, y2, y3)),
                        A.associator(i, A.plus(j, x1, y1), A.plus(j, x2, y2), A.plus(j, x3, y3))))
    # two columns in direction i, three rows in direction j
    for a1, a2, a3 in A.chains(idx, j, 3):
        for b1 in si.get(A.faces.get((a1, i, "+")), ()):
            for b2 in sj.get(A.faces.get((b1, j, "+")), ()):
                if A.faces.get((b2, i, "-")) != A.faces.get((a2, i, "+")):
                    continue
                for b3 in sj.get(A.faces.get((b2, j, "+")), ()):
                    if A.faces.get((b3, i, "-")) != A.faces.get((a3, i, "+")):
                        continue
                    _attempt(rec, ("j", i, j, a1, a2, a3, b1, b2, b3), lambda: A.then(
                        A.associator(j, A.plus(i, a1, b1), A.plus(i, a2, b2), A.plus(i, a3, b3)),
                        A.plus(j, chi(a1, b1, a2, b2), A.identity(A.plus(i, a3, b3))),
                        chi(A.plus(j, a1, a2), A.plus(j, b1, b2), a3, b3))
                        == A.then(
                        A.plus(j, A.identity(A.plus(i, a1, b1)), chi(a2, b2, a3, b3)),
                        chi(a1, b1, A.plus(j, a2, a3), A.plus(j, b2, b3)),
                        A.plus(i, A.associator(j, a1, a2, a3), A.associator(j, b1, b2, b3))))


def _check_chi_units(A: ChiralMC, idx: MultiIndex, i: int, j: int, rec: CheckRecord) -> None:
    def chi(x: str, y: str, z: str, u: str) -> str:
        return A.interchanger(i, j, x, y, z, u)

    def unit(c: str, k: int, s: str) -> str:
        return A.degen(A.face(c, k, s), k)

    for x, z in A.pairs(idx, j):
        _attempt(rec, ("lambda", i, x, z), lambda: A.then(
            chi(unit(x, i, "-"), x, unit(z, i, "-"), z), A.unitor_left(A.plus(j, x, z), i))
            == A.plus(j, A.unitor_left(x, i), A.unitor_left(z, i)))
        _attempt(rec, ("rho", i, x, z), lambda: A.then(
            chi(x, unit(x, i, "+"), z, unit(z, i, "+")), A.unitor_right(A.plus(j, x, z), i))
            == A.plus(j, A.unitor_right(x, i), A.unitor_right(z, i)))
    for x, y in A.pairs(idx, i):
        _attempt(rec, ("lambda", j, x, y), lambda: A.then(
            chi(unit(x, j, "-"), unit(y, j, "-"), x, y), A.plus(i, A.unitor_left(x, j), A.unitor_left(y, j)))
            == A.unitor_left(A.plus(i, x, y), j))
        _attempt(rec, ("rho", j, x, y), lambda: A.then(
            chi(x, y, unit(x, j, "+"), unit(y, j, "+")), A.plus(i, A.unitor_right(x, j), A.unitor_right(y, j)))
            == A.unitor_right(A.plus(i, x, y), j))


def validate_chiral(A: ChiralMC) -> ValidationReport:
    """Every structural law of a chiral multiple category, checked exhaustively on its tables."""
    report = ValidationReport(structure=A.name)
    if not _check_tables(A, report):
        return report
    for idx in A.levels():
        validate_transversal(A.tv[idx], report)
    _check_structure_maps(A, report)
    _check_compositions(A, report)
    _check_comparisons(A, report)
    _check_coherence(A, report)
    logger.debug(f"validate_chiral({A.name}): {report.summary()}")
    return report


def strict_lift(M: TruncatedMultipleCategory, degree: int) -> ChiralMC:
    """
    Read a strict truncated multiple category as a chiral one of the given degree.

    Direction 0 of M becomes the transversal direction: i-cubes are the cells of
    index i, i-maps the cells of index 0i. Every comparison is an identity.
    """
    need = set(range(degree))
    if not need <= set(M.directions) or M.dim_bound < degree:
        raise ArgumentError(f"{M.name} needs directions 0..{degree - 1} and dimension bound >= {degree}")
    A_dirs = tuple(range(1, degree))
    tv: Dict[MultiIndex, TransversalCategory] = {}
    faces: Dict[FaceKey, str] = {}
    degs: Dict[Tuple[str, int], str] = {}
    comps: Dict[Tuple[int, str, str], str] = {}
    for idx in indices_up_to(A_dirs, degree - 1):
        cubes = M.of(idx)
        maps = {f: (M.face(f, 0, "-"), M.face(f, 0, "+")) for f in M.of(idx.adjoin(0))}
        comp: Dict[Pair, str] = {}
        for f, (_, y) in maps.items():
            for g, (y2, _) in maps.items():
                if y == y2 and (0, f, g) in M.comps:
                    comp[(g, f)] = M.comps[(0, f, g)]
        ids = {x: M.degen(x, 0) for x in cubes}
        tv[idx] = TransversalCategory(f"tv{idx.label}({M.name})", cubes, maps, comp, ids)
        for c in list(cubes) + list(maps):
            for j in idx:
                for a in SIGNS:
                    faces[(c, j, a)] = M.face(c, j, a)
            for j in A_dirs:
                if j not in idx and (c, j) in M.degeneracies:
                    degs[(c, j)] = M.degeneracies[(c, j)]
    lifted = _cells_of(tv)
    for (i, x, y), z in M.comps.items():
        if i != 0 and x in lifted:
            comps[(i, x, y)] = z
    lam: Dict[Tuple[str, int], str] = {}
    rho: Dict[Tuple[str, int], str] = {}
    kappa: Dict[Tuple[int, str, str, str], str] = {}
    chi: Dict[Tuple[int, int, str, str, str, str], str] = {}
    A = ChiralMC(f"lift({M.name})", degree, tv, faces, degs, comps, lam, rho, kappa, chi)
    _fill_identity_comparisons(A)
    logger.info(f"{A.name}: strict lift of degree {degree}")
    return A


def _cells_of(tv: Dict[MultiIndex, TransversalCategory]) -> Set[str]:
    return {c for T in tv.values() for c in list(T.cubes) + list(T.maps)}


def _fill_identity_comparisons(A: ChiralMC) -> None:
    """Tabulate every comparison of A as the identity on its target; missing composites are skipped."""
    for idx in A.levels():
        for i in idx:
            for x in A.cubes(idx):
                A.lam.setdefault((x, i), A.identity(x))
                A.rho.setdefault((x, i), A.identity(x))
            for x, y, z in A.chains(idx, i, 3):
                try:
                    A.kappa.setdefault((i, x, y, z), A.identity(A.plus(i, A.plus(i, x, y), z)))
                except StructuralError:
                    continue
            for j in idx:
                if j > i:
                    for sq in A.squares(idx, i, j):
                        try:
                            A.chi.setdefault((i, j) + sq, A.identity(_interchange_target(A, i, j, *sq)))
                        except StructuralError:
                            continue


def _ext(d: int, c: str) -> str:
    return f"e{d}({c})"


def degenerate_extension(A: ChiralMC) -> ChiralMC:
    """
    Add direction d = A.degree whose cubes and maps are all degenerate.

    Every new cell is e_d(c) for a cell c of A; composition in direction d is
    trivial and every comparison involving d is an identity.
    """
    d = A.degree
    E = lambda c: _ext(d, c)  # noqa: E731
    tv = dict(A.tv)
    faces = dict(A.faces)
    degs = dict(A.degeneracies)
    comps = dict(A.comps)
    lam, rho, kappa, chi = dict(A.lam), dict(A.rho), dict(A.kappa), dict(A.chi)
    for idx, T in A.tv.items():
        new = idx.adjoin(d)
        tv[new] = TransversalCategory(
            f"tv{new.label}({A.name})",
            tuple(E(x) for x in T.cubes),
            {E(f): (E(s), E(t)) for f, (s, t) in T.maps.items()},
            {(E(g), E(f)): E(h) for (g, f), h in T.comp.items()},
            {E(x): E(e) for x, e in T.ids.items()},
        )
        for c in list(T.cubes) + list(T.maps):
            degs[(c, d)] = E(c)
            for a in SIGNS:
                faces[(E(c), d, a)] = c
            for j in idx:
                for a in SIGNS:
                    faces[(E(c), j, a)] = E(A.faces[(c, j, a)])
            comps[(d, E(c), E(c))] = E(c)
        for x in T.cubes:
            lam[(E(x), d)] = rho[(E(x), d)] = E(T.identity(x))
            kappa[(d, E(x), E(x), E(x))] = E(T.identity(x))
    for (c, j), e in A.degeneracies.items():
        degs[(E(c), j)] = E(e)
    for (i, a, b), z in A.comps.items():
        comps[(i, E(a), E(b))] = E(z)
    for (x, i), f in A.lam.items():
        lam[(E(x), i)] = E(f)
    for (x, i), f in A.rho.items():
        rho[(E(x), i)] = E(f)
    for (i, x, y, z), f in A.kappa.items():
        kappa[(i, E(x), E(y), E(z))] = E(f)
    for (i, j, x, y, z, u), f in A.chi.items():
        chi[(i, j, E(x), E(y), E(z), E(u))] = E(f)
    for (i, a, b), z in A.comps.items():
        if not A.is_map(a):
            chi[(i, d, E(a), E(b), E(a), E(b))] = E(A.identity(z))
    out = ChiralMC(f"{A.name}+e{d}", d + 1, tv, faces, degs, comps, lam, rho, kappa, chi, A.chi_invertible)
    logger.debug(f"{out.name}: {len(out.level_of)} cells over {len(out.tv)} levels")
    return out


# -- p-morphisms


def regime(p: int, i: int, j: Optional[int] = None) -> str:
    """Which coherence form applies: 'a' all lax, 'b' mixed, 'c' all colax."""
    if j is None:
        return "a" if i >= p else "c"
    if i >= p:
        return "a"
    return "b" if j >= p else "c"


@dataclass
class PMorphism:
    """
    Colax in directions below p, lax from p on.

    unit[(t, i)] compares e_i R(t) with R(e_i t); comp[(i, x, y)] compares
    R(x) +_i R(y) with R(x +_i y). The lax ones run towards R, the colax ones away.
    """
    name: str
    source: ChiralMC
    target: ChiralMC
    p: int
    cell_map: Dict[str, str]
    unit: Dict[Tuple[str, int], str]
    comp: Dict[Tuple[int, str, str], str]

    def lax(self, i: int) -> bool:
        return i >= self.p

    def __call__(self, c: str) -> str:
        try:
            return self.cell_map[c]
        except KeyError:
            raise StructuralError(f"{self.name}: no image for {c!r}") from None

    def unit_at(self, t: str, i: int) -> str:
        try:
            return self.unit[(t, i)]
        except KeyError:
            raise StructuralError(f"{self.name}: no {i}-unit comparison at {t}") from None

    def comp_at(self, i: int, x: str, y: str) -> str:
        try:
            return self.comp[(i, x, y)]
        except KeyError:
            raise StructuralError(f"{self.name}: no {i}-comparison at ({x}, {y})") from None


def same_morphism(R: PMorphism, S: PMorphism) -> bool:
    return (R.source is S.source and R.target is S.target and R.p == S.p
            and R.cell_map == S.cell_map and R.unit == S.unit and R.comp == S.comp)


def _same_data(R: PMorphism, S: PMorphism) -> bool:
    return R.cell_map == S.cell_map and R.unit == S.unit and R.comp == S.comp


def identity_pmorphism(A: ChiralMC, p: int) -> PMorphism:
    return strict_morphism(f"id[{p}]({A.name})", A, A, {c: c for c in A.level_of}, p)


def strict_morphism(name: str, A: ChiralMC, B: ChiralMC, cell_map: Dict[str, str], p: int) -> PMorphism:
    """A cell map with every comparison an identity; validate it to see it is a morphism."""
    unit: Dict[Tuple[str, int], str] = {}
    comp: Dict[Tuple[int, str, str], str] = {}
    for idx in A.levels():
        for i in idx:
            for t in A.cubes(idx.remove(i)):
                unit[(t, i)] = B.identity(B.degen(cell_map[t], i))
            for x, y in A.pairs(idx, i):
                comp[(i, x, y)] = B.identity(B.plus(i, cell_map[x], cell_map[y]))
    return PMorphism(name, A, B, p, dict(cell_map), unit, comp)


def is_strict(R: PMorphism) -> bool:
    B = R.target
    try:
        return (all(f == B.identity(B.src(f)) for f in R.unit.values())
                and all(f == B.identity(B.src(f)) for f in R.comp.values()))
    except StructuralError:
        return False


def _composite(R: PMorphism, R2: PMorphism, p: int, name: Optional[str] = None) -> PMorphism:
    B, C = R.target, R2.target
    cell_map = {c: R2(R(c)) for c in R.cell_map}
    unit: Dict[Tuple[str, int], str] = {}
    comp: Dict[Tuple[int, str, str], str] = {}
    for (t, i), f in R.unit.items():
        outer = R2.unit_at(R(t), i)
        unit[(t, i)] = C.then(outer, R2(f)) if i >= p else C.then(R2(f), outer)
    for (i, x, y), f in R.comp.items():
        outer = R2.comp_at(i, R(x), R(y))
        comp[(i, x, y)] = C.then(outer, R2(f)) if i >= p else C.then(R2(f), outer)
    return PMorphism(name or f"{R2.name}∘{R.name}", R.source, C, p, cell_map, unit, comp)


def compose_pmorphisms(R: PMorphism, R2: PMorphism) -> PMorphism:
    """R2 ∘ R: lax comparisons R2(R_i)∘R2_i(R·), colax ones the reverse."""
    if R.target is not R2.source:
        raise BoundaryError(f"{R2.name} ∘ {R.name}: target and source differ")
    if R.p != R2.p:
        raise ArgumentError(f"{R2.name} ∘ {R.name}: laxity {R2.p} against {R.p}")
    return _composite(R, R2, R.p)


def extend_pmorphism(R: PMorphism, A2: ChiralMC, B2: ChiralMC, p: Optional[int] = None) -> PMorphism:
    """Carry R along degenerate_extension of its source and target; direction d is strict."""
    d = R.source.degree
    B = R.target
    E = lambda c: _ext(d, c)  # noqa: E731
    cell_map = dict(R.cell_map)
    unit = dict(R.unit)
    comp = dict(R.comp)
    for c, c2 in R.cell_map.items():
        cell_map[E(c)] = E(c2)
    for (t, i), f in R.unit.items():
        unit[(E(t), i)] = E(f)
    for (i, x, y), f in R.comp.items():
        comp[(i, E(x), E(y))] = E(f)
    for idx in R.source.levels():
        for t in R.source.cubes(idx):
            identity = E(B.identity(R(t)))
            unit[(t, d)] = identity
            comp[(d, E(t), E(t))] = identity
    out = PMorphism(R.name, A2, B2, R.p if p is None else p, cell_map, unit, comp)
    return out


def validate_pmorphism(R: PMorphism) -> ValidationReport:
    A, B = R.source, R.target
    report = ValidationReport(structure=R.name)
    lax = report.check("pmorph.laxity", "1 <= p <= n and source, target of one degree")
    lax.observe(A.degree == B.degree and 1 <= R.p <= A.degree, (R.p, A.degree, B.degree))
    if not lax.passed:
        return report
    tot = report.check("pmorph.total", "every cell and comparison has an image of the right level")
    for idx in A.levels():
        for c in A.cells(idx):
            img = R.cell_map.get(c)
            tot.observe(img is not None and B.level_of.get(img) == idx and B.is_map(img) == A.is_map(c), (c,))
        for i in idx:
            for t in A.cubes(idx.remove(i)):
                tot.observe((t, i) in R.unit and B.level_of.get(R.unit[(t, i)]) == idx, ("unit", t, i))
            for x, y in A.pairs(idx, i):
                tot.observe((i, x, y) in R.comp and B.level_of.get(R.comp[(i, x, y)]) == idx, ("comp", i, x, y))
    if not tot.passed:
        return report

    fun = report.check("pmorph.functor", "R is a functor on every transversal category")
    faces = report.check("pmorph.faces", "R commutes with faces")
    bound = report.check("pmorph.comparison_boundary", "comparisons run in the lax or colax direction")
    special = report.check("pmorph.special", "comparisons are special in their own direction")
    cfaces = report.check("pmorph.comparison_faces", "comparisons commute with the other faces")
    nat = report.check("pmorph.naturality", "comparisons are natural")
    assoc = report.check("pmorph.associativity", "comparisons are coherent with associators")
    units = report.check("pmorph.unit", "comparisons are coherent with unitors")

    def ends(f: str) -> Pair:
        return B.src(f), B.tgt(f)

    def directed(i: int, lhs: str, rhs: str) -> Pair:
        return (lhs, rhs) if R.lax(i) else (rhs, lhs)

    for idx in A.levels():
        T = A.tv[idx]
        for f in sorted(T.maps):
            _attempt(fun, (f,), lambda: ends(R(f)) == (R(T.src(f)), R(T.tgt(f))))
            for g in T.out_of(T.tgt(f)):
                _attempt(fun, (g, f), lambda: R(T.compose(g, f)) == B.then(R(f), R(g)))
        for x in T.cubes:
            _attempt(fun, (x,), lambda: R(T.identity(x)) == B.identity(R(x)))
        for c in A.cells(idx):
            for j in idx:
                for s in SIGNS:
                    _attempt(faces, (c, j, s), lambda: B.face(R(c), j, s) == R(A.face(c, j, s)))
        for i in idx:
            base = idx.remove(i)
            others = [k for k in idx if k != i]
            for t in A.cubes(base):
                u = R.unit_at(t, i)
                _attempt(bound, ("unit", t, i), lambda: ends(u) == directed(i, B.degen(R(t), i), R(A.degen(t, i))))
                _attempt(special, ("unit", t, i),
                         lambda: all(B.face(u, i, s) == B.identity(R(t)) for s in SIGNS))
                for k in others:
                    for s in SIGNS:
                        _attempt(cfaces, ("unit", t, i, k, s),
                                 lambda: B.face(u, k, s) == R.unit_at(A.face(t, k, s), i))
            for h in A.maps(base):
                t0, t1 = A.src(h), A.tgt(h)
                if R.lax(i):
                    test = lambda: B.then(R.unit_at(t0, i), R(A.degen(h, i))) == B.then(B.degen(R(h), i), R.unit_at(t1, i))  # noqa: E731
                else:
                    test = lambda: B.then(R.unit_at(t0, i), B.degen(R(h), i)) == B.then(R(A.degen(h, i)), R.unit_at(t1, i))  # noqa: E731
                _attempt(nat, ("unit", h, i), test)
            for x, y in A.pairs(idx, i):
                m = R.comp_at(i, x, y)
                _attempt(bound, ("comp", i, x, y),
                         lambda: ends(m) == directed(i, B.plus(i, R(x), R(y)), R(A.plus(i, x, y))))
                _attempt(special, ("comp", i, x, y), lambda: all(
                    B.face(m, i, s) == B.identity(B.face(B.src(m), i, s)) for s in SIGNS))
                for k in others:
                    for s in SIGNS:
                        _attempt(cfaces, ("comp", i, x, y, k, s), lambda: B.face(m, k, s)
                                 == R.comp_at(i, A.face(x, k, s), A.face(y, k, s)))
            for f, g in A.pairs(idx, i, maps=True):
                x0, y0, x1, y1 = T.src(f), T.src(g), T.tgt(f), T.tgt(g)
                top, bottom = B.plus(i, R(f), R(g)), R(A.plus(i, f, g))
                if R.lax(i):
                    test = lambda: B.then(R.comp_at(i, x0, y0), bottom) == B.then(top, R.comp_at(i, x1, y1))  # noqa: E731
                else:
                    test = lambda: B.then(R.comp_at(i, x0, y0), top) == B.then(bottom, R.comp_at(i, x1, y1))  # noqa: E731
                _attempt(nat, ("comp", i, f, g), test)
            _check_pmorph_coherence(R, idx, i, assoc, units)
            for j in idx:
                if j > i:
                    rec = report.check(f"pmorph.interchange.{regime(R.p, i, j)}",
                                       "comparisons are coherent with interchangers")
                    _check_pmorph_interchange(R, idx, i, j, rec)
    logger.debug(f"validate_pmorphism({R.name}): {report.summary()}")
    return report


def _check_pmorph_coherence(R: PMorphism, idx: MultiIndex, i: int, assoc: CheckRecord, units: CheckRecord) -> None:
    A, B = R.source, R.target

    def c(x: str, y: str) -> str:
        return R.comp_at(i, x, y)

    def one(x: str) -> str:
        return B.identity(R(x))

    def associative(x: str, y: str, z: str) -> bool:
        kb, ka = B.associator(i, R(x), R(y), R(z)), R(A.associator(i, x, y, z))
        if R.lax(i):
            return (B.then(kb, B.plus(i, c(x, y), one(z)), c(A.plus(i, x, y), z))
                    == B.then(B.plus(i, one(x), c(y, z)), c(x, A.plus(i, y, z)), ka))
        return (B.then(c(x, A.plus(i, y, z)), B.plus(i, one(x), c(y, z)), kb)
                == B.then(ka, c(A.plus(i, x, y), z), B.plus(i, c(x, y), one(z))))

    def unital(x: str, left: bool) -> bool:
        s = "-" if left else "+"
        t = A.face(x, i, s)
        e = A.degen(t, i)
        pad = B.plus(i, R.unit_at(t, i), one(x)) if left else B.plus(i, one(x), R.unit_at(t, i))
        cmp = c(e, x) if left else c(x, e)
        ua = R(A.unitor_left(x, i) if left else A.unitor_right(x, i))
        ub = B.unitor_left(R(x), i) if left else B.unitor_right(R(x), i)
        if R.lax(i):
            return B.then(pad, cmp, ua) == ub
        return B.then(cmp, pad, ub) == ua

    for x, y, z in A.chains(idx, i, 3):
        _attempt(assoc, (i, x, y, z), lambda: associative(x, y, z))
    for x in A.cubes(idx):
        _attempt(units, ("left", i, x), lambda: unital(x, True))
        _attempt(units, ("right", i, x), lambda: unital(x, False))


def _check_pmorph_interchange(R: PMorphism, idx: MultiIndex, i: int, j: int, rec: CheckRecord) -> None:
    A, B = R.source, R.target
    form = regime(R.p, i, j)

    def coherent(x: str, y: str, z: str, u: str) -> bool:
        chi_b = B.interchanger(i, j, R(x), R(y), R(z), R(u))
        chi_a = R(A.interchanger(i, j, x, y, z, u))
        rows = B.plus(j, R.comp_at(i, x, y), R.comp_at(i, z, u))
        cols = B.plus(i, R.comp_at(j, x, z), R.comp_at(j, y, u))
        outer_j = R.comp_at(j, A.plus(i, x, y), A.plus(i, z, u))
        outer_i = R.comp_at(i, A.plus(j, x, z), A.plus(j, y, u))
        if form == "a":
            return B.then(chi_b, cols, outer_i) == B.then(rows, outer_j, chi_a)
        if form == "b":
            return B.then(rows, chi_b, cols) == B.then(outer_j, chi_a, outer_i)
        return B.then(outer_j, rows, chi_b) == B.then(chi_a, outer_i, cols)

    for sq in A.squares(idx, i, j):
        _attempt(rec, (i, j) + sq, lambda: coherent(*sq))


# -- pq-cubes


@dataclass
class PQCube:
    """
    A cell (U ^R_S V) with R: A -> X, S: Y -> B p-morphisms and U: A -> Y,
    V: X -> B q-morphisms; components[x] runs VR(x) -> SU(x) in B.
    """
    name: str
    R: PMorphism
    S: PMorphism
    U: PMorphism
    V: PMorphism
    components: Dict[str, str]

    @property
    def p(self) -> int:
        return self.R.p

    @property
    def q(self) -> int:
        return self.U.p

    def __call__(self, x: str) -> str:
        try:
            return self.components[x]
        except KeyError:
            raise StructuralError(f"{self.name}: no component at {x!r}") from None

    @property
    def source(self) -> ChiralMC:
        return self.R.source

    @property
    def target(self) -> ChiralMC:
        return self.S.target


def pq_regime(p: int, q: int, i: int) -> str:
    if i >= q:
        return "a"
    return "b" if i >= p else "c"


def _pq_frame_error(R: PMorphism, S: PMorphism, U: PMorphism, V: PMorphism) -> Optional[str]:
    if R.source is not U.source or R.target is not V.source:
        return "R and U, V do not share corners"
    if U.target is not S.source or V.target is not S.target:
        return "S does not close the square"
    if R.p != S.p or U.p != V.p:
        return "horizontal or vertical laxities differ"
    if not R.p < U.p:
        return f"p = {R.p} is not below q = {U.p}"
    return None


def validate_pqcube(phi: PQCube) -> ValidationReport:
    R, S, U, V = phi.R, phi.S, phi.U, phi.V
    report = ValidationReport(structure=phi.name)
    frame = report.check("pq.boundary", "R, S, U, V form a square with p < q")
    problem = _pq_frame_error(R, S, U, V)
    frame.observe(problem is None, (problem or "",))
    if not frame.passed:
        return report
    A, B = phi.source, phi.target
    comps = report.check("pq.components", "phi(x): VR(x) -> SU(x)")
    for idx in A.levels():
        for x in A.cubes(idx):
            _attempt(comps, (x,), lambda: (B.src(phi(x)), B.tgt(phi(x))) == (V(R(x)), S(U(x))))
    if not comps.passed:
        return report
    faces = report.check("pq.faces", "components commute with faces")
    nat = report.check("pq.naturality", "components are natural in transversal maps")
    for idx in A.levels():
        for x in A.cubes(idx):
            for j in idx:
                for s in SIGNS:
                    _attempt(faces, (x, j, s), lambda: B.face(phi(x), j, s) == phi(A.face(x, j, s)))
        for f in A.maps(idx):
            _attempt(nat, (f,), lambda: B.then(phi(A.src(f)), S(U(f))) == B.then(V(R(f)), phi(A.tgt(f))))
        for i in idx:
            rec = report.check(f"pq.coherence.{pq_regime(phi.p, phi.q, i)}",
                               "components are coherent with the boundary comparisons")
            _check_pq_coherence(phi, idx, i, rec)
    logger.debug(f"validate_pqcube({phi.name}): {report.summary()}")
    return report


def _check_pq_coherence(phi: PQCube, idx: MultiIndex, i: int, rec: CheckRecord) -> None:
    R, S, U, V = phi.R, phi.S, phi.U, phi.V
    A, B = phi.source, phi.target
    form = pq_regime(phi.p, phi.q, i)

    def unital(t: str) -> bool:
        et = A.degen(t, i)
        v_i, r_i = V.unit_at(R(t), i), V(R.unit_at(t, i))
        s_i, u_i = S.unit_at(U(t), i), S(U.unit_at(t, i))
        e_phi = B.degen(phi(t), i)
        if form == "a":
            return B.then(v_i, r_i, phi(et)) == B.then(e_phi, s_i, u_i)
        if form == "b":
            return B.then(v_i, e_phi, s_i) == B.then(r_i, phi(et), u_i)
        return B.then(phi(et), u_i, s_i) == B.then(r_i, v_i, e_phi)

    def multiplicative(x: str, y: str) -> bool:
        z = A.plus(i, x, y)
        v_i, r_i = V.comp_at(i, R(x), R(y)), V(R.comp_at(i, x, y))
        s_i, u_i = S.comp_at(i, U(x), U(y)), S(U.comp_at(i, x, y))
        both = B.plus(i, phi(x), phi(y))
        if form == "a":
            return B.then(v_i, r_i, phi(z)) == B.then(both, s_i, u_i)
        if form == "b":
            return B.then(v_i, both, s_i) == B.then(r_i, phi(z), u_i)
        return B.then(phi(z), u_i, s_i) == B.then(r_i, v_i, both)

    for t in A.cubes(idx.remove(i)):
        _attempt(rec, ("unit", i, t), lambda: unital(t))
    for x, y in A.pairs(idx, i):
        _attempt(rec, ("comp", i, x, y), lambda: multiplicative(x, y))


def identity_pqcube(morphism: PMorphism, p: int, q: int, along: str) -> PQCube:
    """
    Unit for +_p (along='p') on a q-morphism U, or for +_q (along='q') on a
    p-morphism R; every component is an identity.
    """
    if along == "p":
        U = morphism
        R, S = identity_pmorphism(U.source, p), identity_pmorphism(U.target, p)
        frame = (R, S, U, U)
    elif along == "q":
        R = morphism
        frame = (R, R, identity_pmorphism(R.source, q), identity_pmorphism(R.target, q))
    else:
        raise ArgumentError(f"unknown direction {along!r}; expected 'p' or 'q'")
    B = morphism.target
    comps = {x: B.identity(morphism(x)) for x in _all_cubes(morphism.source)}
    return PQCube(f"1{along}({morphism.name})", *frame, components=comps)


def _all_cubes(A: ChiralMC) -> List[str]:
    return [x for idx in sorted(A.levels()) for x in A.cubes(idx)]


def compose_pqcubes(direction: str, first: PQCube, second: PQCube) -> PQCube:
    """
    first +_p second shares first.V = second.U; first +_q second shares
    first.S = second.R. Components are pasted transversally in the target.
    """
    if direction == "p":
        if not same_morphism(first.V, second.U):
            raise BoundaryError(f"{first.name} +p {second.name}: right and left edges differ")
        R = compose_pmorphisms(first.R, second.R)
        S = compose_pmorphisms(first.S, second.S)
        C = second.target
        comps = {x: C.then(second(first.R(x)), second.S(first(x))) for x in first.components}
        return PQCube(f"({first.name}+p{second.name})", R, S, first.U, second.V, comps)
    if direction == "q":
        if not same_morphism(first.S, second.R):
            raise BoundaryError(f"{first.name} +q {second.name}: bottom and top edges differ")
        U = compose_pmorphisms(first.U, second.U)
        V = compose_pmorphisms(first.V, second.V)
        C = second.target
        comps = {x: C.then(second.V(first(x)), second(first.U(x))) for x in first.components}
        return PQCube(f"({first.name}+q{second.name})", first.R, second.S, U, V, comps)
    raise ArgumentError(f"unknown direction {direction!r}; expected 'p' or 'q'")


def same_pqcube(a: PQCube, b: PQCube) -> bool:
    return (same_morphism(a.R, b.R) and same_morphism(a.S, b.S) and same_morphism(a.U, b.U)
            and same_morphism(a.V, b.V) and a.components == b.components)


def _same_cell(a: PQCube, b: PQCube) -> bool:
    return (all(_same_data(m, n) for m, n in ((a.R, b.R), (a.S, b.S), (a.U, b.U), (a.V, b.V)))
            and a.components == b.components)


def check_middle_four(phi: PQCube, psi: PQCube, sigma: PQCube, tau: PQCube) -> Tuple[bool, PQCube, PQCube]:
    """(phi +p psi) +q (sigma +p tau) against (phi +q sigma) +p (psi +q tau), compared as data."""
    rows = compose_pqcubes("q", compose_pqcubes("p", phi, psi), compose_pqcubes("p", sigma, tau))
    cols = compose_pqcubes("p", compose_pqcubes("q", phi, sigma), compose_pqcubes("q", psi, tau))
    return _same_cell(rows, cols), rows, cols


def enumerate_pqcubes(
    R: PMorphism,
    S: PMorphism,
    U: PMorphism,
    V: PMorphism,
    name: str = "phi",
    max_candidates: int = 1_000_000,
) -> List[PQCube]:
    """
    Every valid pq-cube on a fixed frame. Components are chosen level by level,
    keeping only families whose faces already agree.
    """
    problem = _pq_frame_error(R, S, U, V)
    if problem is not None:
        raise BoundaryError(f"{name}: {problem}")
    A, B = R.source, S.target
    order = sorted(A.levels(), key=lambda idx: (idx.dimension, idx))
    partial: List[Dict[str, str]] = [{}]
    for idx in order:
        for x in A.cubes(idx):
            hom = B.at(V(R(x))).hom(V(R(x)), S(U(x)))
            grown = []
            for base in partial:
                for f in hom:
                    if all(B.faces.get((f, j, s)) == base.get(A.faces.get((x, j, s)))
                           for j in idx for s in SIGNS):
                        grown.append({**base, x: f})
            if len(grown) > max_candidates:
                raise BudgetExceededError(f"{name}: more than {max_candidates} partial families")
            partial = grown
    out: List[PQCube] = []
    for n, comps in enumerate(partial):
        cube = PQCube(f"{name}#{n}", R, S, U, V, comps)
        if validate_pqcube(cube).ok:
            out.append(cube)
    logger.info(f"enumerate_pqcubes({name}): {len(out)} of {len(partial)} families are cubes")
    return out


# -- higher cells


@dataclass
class PQMap:
    """A map of pq-cubes phi -> phi2 given by strict morphisms on the four corners."""
    name: str
    phi: PQCube
    phi2: PQCube
    F: PMorphism
    G: PMorphism
    F2: PMorphism
    G2: PMorphism


@dataclass
class PQRCube:
    """
    Six faces of a pqr-cube: phi, psi are pq-cubes, pi, rho pr-cubes and
    omega, zeta qr-cubes, glued along their shared edges.
    """
    name: str
    phi: PQCube
    psi: PQCube
    pi: PQCube
    rho: PQCube
    omega: PQCube
    zeta: PQCube


def _validate_pqmap(m: PQMap) -> ValidationReport:
    report = ValidationReport(structure=m.name)
    strict = report.check("pqmap.strict", "corner morphisms are strict")
    for label, F in (("F", m.F), ("G", m.G), ("F2", m.F2), ("G2", m.G2)):
        strict.observe(is_strict(F), (label, F.name))
    sq = report.check("pqmap.squares", "the corner morphisms commute with both frames")
    a, b = m.phi, m.phi2
    pairs = (
        ("R", a.R, b.R, m.F, m.G),
        ("S", a.S, b.S, m.F2, m.G2),
        ("U", a.U, b.U, m.F, m.F2),
        ("V", a.V, b.V, m.G, m.G2),
    )
    for label, edge, edge2, lo, hi in pairs:
        _attempt(sq, (label,), lambda: lo.source is edge.source and _same_data(
            _composite(lo, edge2, edge2.p), _composite(edge, hi, edge.p)))
    if not sq.passed:
        return report
    com = report.check("pqmap.commutes", "G2(phi x) = phi2(F x)")
    for x in _all_cubes(a.source):
        _attempt(com, (x,), lambda: m.G2(a(x)) == b(m.F(x)))
    return report


def _validate_pqrcube(c: PQRCube) -> ValidationReport:
    report = ValidationReport(structure=c.name)
    laxity = report.check("pqr.laxities", "p < q < r across the six faces")
    p, q, r = c.phi.p, c.phi.q, c.pi.q
    laxity.observe(p < q < r and (c.pi.p, c.omega.p, c.omega.q) == (p, q, r), (p, q, r))
    edges = report.check("pqr.faces", "shared edges agree")
    glue = (
        ("phi.R=pi.R", c.phi.R, c.pi.R), ("phi.S=rho.R", c.phi.S, c.rho.R),
        ("phi.U=omega.R", c.phi.U, c.omega.R), ("phi.V=zeta.R", c.phi.V, c.zeta.R),
        ("psi.R=pi.S", c.psi.R, c.pi.S), ("psi.S=rho.S", c.psi.S, c.rho.S),
        ("psi.U=omega.S", c.psi.U, c.omega.S), ("psi.V=zeta.S", c.psi.V, c.zeta.S),
        ("pi.U=omega.U", c.pi.U, c.omega.U), ("pi.V=zeta.U", c.pi.V, c.zeta.U),
        ("rho.U=omega.V", c.rho.U, c.omega.V), ("rho.V=zeta.V", c.rho.V, c.zeta.V),
    )
    for label, m, n in glue:
        edges.observe(same_morphism(m, n), (label,))
    if not (laxity.passed and edges.passed):
        return report
    com = report.check("pqr.commutes", "the two pastings of the six faces agree")
    B = c.psi.target
    X, Y2, V2, S2 = c.pi.U, c.rho.V, c.zeta.S, c.psi.S
    U, R = c.phi.U, c.phi.R
    for x in _all_cubes(c.phi.source):
        _attempt(com, (x,), lambda: B.then(Y2(c.phi(x)), c.rho(U(x)), S2(c.omega(x)))
                 == B.then(c.zeta(R(x)), V2(c.pi(x)), c.psi(X(x))))
    return report


def validate_higher_cell(cell: Union[PQMap, PQRCube]) -> ValidationReport:
    if isinstance(cell, PQMap):
        return _validate_pqmap(cell)
    if isinstance(cell, PQRCube):
        return _validate_pqrcube(cell)
    raise ArgumentError(f"not a higher cell: {type(cell).__name__}")


# -- transversal projection


def tv_projection(obj: Union[ChiralMC, PMorphism, PQCube]) -> Dict[MultiIndex, object]:
    """
    Level-wise transversal part: the categories tv_i of a ChiralMC, the functors
    tv_i(R) of a morphism (as cell maps) or the transformations tv_i(phi) of a cube.
    """
    if isinstance(obj, ChiralMC):
        return dict(obj.tv)
    if isinstance(obj, PMorphism):
        A = obj.source
        return {idx: {c: obj(c) for c in A.cells(idx)} for idx in A.levels()}
    if isinstance(obj, PQCube):
        A = obj.source
        return {idx: {x: obj(x) for x in A.cubes(idx)} for idx in A.levels()}
    raise ArgumentError(f"no transversal projection for {type(obj).__name__}")


def _projection_breaks(phi: PQCube) -> Optional[str]:
    """First cube of A whose projected component misses the projected edges or a face."""
    A, B = phi.source, phi.target
    comps = {x: f for level in tv_projection(phi).values() for x, f in level.items()}  # type: ignore[union-attr]
    for idx in A.levels():
        for x in A.cubes(idx):
            f = comps.get(x)
            try:
                if f is None or (B.src(f), B.tgt(f)) != (phi.V(phi.R(x)), phi.S(phi.U(x))):
                    return x
            except StructuralError:
                return x
            if any(B.faces.get((f, j, s)) != comps.get(A.faces.get((x, j, s)))
                   for j in idx for s in SIGNS):
                return x
    return None


def check_tv_quintet_type(cubes: Sequence[PQCube]) -> Tuple[bool, Tuple[str, ...]]:
    """
    Injectivity with boundary: on one frame a cube is fixed by its transversal
    projection, and that projection runs between the projected edges and
    commutes with faces level by level. The witness names the offending cube
    and cell, or the two cubes sharing a projection.
    """
    seen: Dict[Tuple[int, ...], List[PQCube]] = {}
    for phi in cubes:
        broken = _projection_breaks(phi)
        if broken is not None:
            return False, (phi.name, broken)
        group = seen.setdefault((id(phi.R), id(phi.S), id(phi.U), id(phi.V)), [])
        for other in group:
            if tv_projection(other) == tv_projection(phi) and not same_pqcube(other, phi):
                return False, (other.name, phi.name)
        group.append(phi)
    return True, ()
