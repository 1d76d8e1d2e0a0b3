"""
Pseudo algebras for the free double category monad on graphs of categories.

A CatGraph is a pair of categories A0 (objects, horizontal arrows) and A1
(vertical arrows, cells composed horizontally) with face functors A1 -> A0.
Its free double category TA keeps A0 and takes paths of vertical arrows and
words of cells as A1; the monad unit sends a cell to the one-letter word and
the multiplication concatenates.

A pseudo algebra (A, a, omega, kappa) chooses a vertical composite a(u) for
every path and a cell a(w) for every word, with special invertible comparisons
omega_u: u -> a(u) and kappa_U: a(a(U_1), ..., a(U_n)) -> a(U_1 ... U_n).
Everything is tabulated on words up to a length bound L and checked there.

Weak double categories are read as degree-2 chiral tables: tv_e is A0, tv_1
is A1, +_1 is vertical composition.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .chiralcalc import (
    ChiralMC,
    PMorphism,
    PQCube,
    TransversalCategory,
    _attempt,
    validate_chiral,
    validate_transversal,
)
from .logging_config import get_logger
from .models import (
    ArgumentError,
    BoundaryError,
    RejectedInputError,
    StructuralError,
    ValidationReport,
)
from .multicat import SIGNS, MultiIndex, join_ids, quote_id

logger = get_logger("psalg")

FLAVORS = ("strict", "lax", "colax", "pseudo")
LAX_LIKE = ("strict", "lax", "pseudo")


# -- graphs of categories


@dataclass
class CatGraph:
    """Two finite categories and the face functors d-, d+: A1 -> A0, stored on ids."""
    name: str
    A0: TransversalCategory
    A1: TransversalCategory
    faces: Dict[Tuple[str, str], str]

    def face(self, c: str, alpha: str) -> str:
        try:
            return self.faces[(c, alpha)]
        except KeyError:
            raise StructuralError(f"{self.name}: no {alpha}-face of {c!r}") from None

    def start(self, w: "Word") -> str:
        return self.face(w.items[0], "-") if w.items else w.base

    def end(self, w: "Word") -> str:
        return self.face(w.items[-1], "+") if w.items else w.base


def validate_cat_graph(G: CatGraph, report: Optional[ValidationReport] = None) -> ValidationReport:
    report = report if report is not None else ValidationReport(structure=G.name)
    validate_transversal(G.A0, report)
    validate_transversal(G.A1, report)
    if not report.ok:
        return report
    fun = report.check("graph.faces", "both faces are functors A1 -> A0")
    for s in SIGNS:
        for u in G.A1.objects:
            _attempt(fun, (u, s), lambda: G.face(u, s) in G.A0.objects)
            _attempt(fun, (u, "id", s), lambda: G.face(G.A1.identity(u), s) == G.A0.identity(G.face(u, s)))
        for f in sorted(G.A1.arrows):
            _attempt(fun, (f, s), lambda: (G.A0.src(G.face(f, s)), G.A0.tgt(G.face(f, s)))
                     == (G.face(G.A1.src(f), s), G.face(G.A1.tgt(f), s)))
            for g in G.A1.out_of(G.A1.tgt(f)):
                _attempt(fun, (g, f, s), lambda: G.face(G.A1.compose(g, f), s)
                         == G.A0.compose(G.face(g, s), G.face(f, s)))
    return report


# -- words


@dataclass(frozen=True)
class Word:
    """
    A path (u_1, ..., u_k) of vertical arrows or a word (a_1, ..., a_k) of cells.

    The empty word remembers its base: an object for the empty path, a
    horizontal arrow f for the empty word of cells e(f).
    """
    items: Tuple[str, ...] = ()
    base: Optional[str] = None

    def __post_init__(self) -> None:
        if bool(self.items) == (self.base is not None):
            raise ArgumentError("a word is either non-empty or has a base, not both")

    def __len__(self) -> int:
        return len(self.items)

    @property
    def key(self) -> str:
        return "(" + join_ids("|", self.items) + ")" if self.items else f"()@{quote_id(self.base or '')}"

    def then(self, other: "Word") -> "Word":
        """Vertical concatenation; empty words are units."""
        if not other.items:
            return self
        if not self.items:
            return other
        return Word(self.items + other.items)


Nest = Tuple[Word, ...]


def nest_key(n: Sequence[Word]) -> str:
    return "[" + ",".join(w.key for w in n) + "]"


def _grouped(words: Sequence[str], G: CatGraph) -> Dict[str, List[str]]:
    out: Dict[str, List[str]] = {}
    for c in words:
        out.setdefault(G.face(c, "-"), []).append(c)
    return out


def _words(G: CatGraph, letters: Sequence[str], bases: Sequence[str], bound: int) -> List[Word]:
    out = [Word(base=b) for b in bases]
    starts = _grouped(letters, G)
    layer = [Word((c,)) for c in letters]
    for _ in range(bound):
        out.extend(layer)
        layer = [Word(w.items + (c,)) for w in layer for c in starts.get(G.face(w.items[-1], "+"), ())]
    return out


def paths(G: CatGraph, bound: int) -> List[Word]:
    """Every path of vertical arrows of length <= bound, shortest first."""
    return _words(G, list(G.A1.objects), list(G.A0.objects), bound)


def cell_words(G: CatGraph, bound: int) -> List[Word]:
    """Every composable word of cells of length <= bound, shortest first."""
    return _words(G, sorted(G.A1.arrows), sorted(G.A0.arrows), bound)


def nests(G: CatGraph, words: Sequence[Word], bound: int) -> List[Nest]:
    """Consecutive sequences of 1..bound words whose concatenation has length <= bound."""
    starts: Dict[str, List[Word]] = {}
    for w in words:
        starts.setdefault(G.start(w), []).append(w)
    out: List[Nest] = []
    layer: List[Tuple[Nest, int]] = [((w,), len(w)) for w in words if len(w) <= bound]
    for _ in range(bound):
        out.extend(n for n, _ in layer)
        layer = [(n + (w,), k + len(w)) for n, k in layer
                 for w in starts.get(G.end(n[-1]), ()) if k + len(w) <= bound]
    return out


def _groupings(n: Nest) -> Iterator[Tuple[Nest, ...]]:
    for cuts in product((False, True), repeat=len(n) - 1):
        groups: List[Nest] = []
        cur: List[Word] = [n[0]]
        for k, cut in enumerate(cuts):
            if cut:
                groups.append(tuple(cur))
                cur = []
            cur.append(n[k + 1])
        groups.append(tuple(cur))
        yield tuple(groups)


def nests3(G: CatGraph, words: Sequence[Word], bound: int) -> List[Tuple[Nest, ...]]:
    """Depth-three nests: every way of grouping a depth-two nest into consecutive blocks."""
    return [g for n in nests(G, words, bound) for g in _groupings(n)]


# -- the free double category and its monad


def monad_unit(c: str) -> Word:
    return Word((c,))


def monad_mult(ws: Sequence[Word]) -> Word:
    if not ws:
        raise ArgumentError("cannot flatten an empty nest without a base")
    return reduce(Word.then, ws)


def monad_ops(op: str, data: Union[str, Sequence[Word]]) -> Word:
    """h (unit) on a cell or vertical arrow, m (multiplication) on a nest."""
    if op == "h":
        return monad_unit(data)  # type: ignore[arg-type]
    if op == "m":
        return monad_mult(data)  # type: ignore[arg-type]
    raise ArgumentError(f"unknown monad operation {op!r}")


def source_path(G: CatGraph, w: Word) -> Word:
    return Word(tuple(G.A1.src(a) for a in w.items)) if w.items else Word(base=G.A0.src(w.base))


def target_path(G: CatGraph, w: Word) -> Word:
    return Word(tuple(G.A1.tgt(a) for a in w.items)) if w.items else Word(base=G.A0.tgt(w.base))


def identity_word(G: CatGraph, p: Word) -> Word:
    if p.items:
        return Word(tuple(G.A1.identity(u) for u in p.items))
    return Word(base=G.A0.identity(p.base))


def compose_words(G: CatGraph, w2: Word, w: Word) -> Word:
    """Horizontal composite w2 ∘ w, letter by letter."""
    if target_path(G, w) != source_path(G, w2):
        raise BoundaryError(f"{G.name}: {w2.key} ∘ {w.key} is not composable")
    if w.items:
        return Word(tuple(G.A1.compose(b, a) for a, b in zip(w.items, w2.items)))
    return Word(base=G.A0.compose(w2.base, w.base))


@dataclass
class FreeDouble:
    """TA truncated at word length `bound`; graph.A1 is keyed by Word.key."""
    base: CatGraph
    bound: int
    graph: CatGraph
    words: Dict[str, Word]

    def word(self, key: str) -> Word:
        try:
            return self.words[key]
        except KeyError:
            raise StructuralError(f"{self.graph.name}: unknown word {key!r}") from None

    def horizontal(self, w2: Word, w: Word) -> Word:
        return compose_words(self.base, w2, w)

    def vertical(self, w: Word, w2: Word) -> Word:
        if self.base.end(w) != self.base.start(w2):
            raise BoundaryError(f"{self.graph.name}: {w.key} then {w2.key} is not composable")
        return w.then(w2)


def free_double(A: CatGraph, bound: int) -> FreeDouble:
    ps, ws = paths(A, bound), cell_words(A, bound)
    maps = {w.key: (source_path(A, w).key, target_path(A, w).key) for w in ws}
    by_source: Dict[str, List[Word]] = {}
    for w in ws:
        by_source.setdefault(maps[w.key][0], []).append(w)
    comp = {}
    for w in ws:
        for w2 in by_source.get(maps[w.key][1], ()):
            comp[(w2.key, w.key)] = compose_words(A, w2, w).key
    ids = {p.key: identity_word(A, p).key for p in ps}
    faces: Dict[Tuple[str, str], str] = {}
    for w in ps + ws:
        faces[(w.key, "-")] = A.face(w.items[0], "-") if w.items else w.base
        faces[(w.key, "+")] = A.face(w.items[-1], "+") if w.items else w.base
    name = f"T({A.name})"
    TA1 = TransversalCategory(f"{name}.1", tuple(p.key for p in ps), maps, comp, ids)
    logger.debug(f"free_double({A.name}, {bound}): {len(ps)} paths, {len(ws)} cell words")
    return FreeDouble(A, bound, CatGraph(name, A.A0, TA1, faces), {w.key: w for w in ps + ws})


# -- weak double categories


@dataclass
class WeakDoubleCategory:
    """
    Horizontal composition strict, vertical composition weak. The associator
    runs u ⊙ (v ⊙ w) -> (u ⊙ v) ⊙ w, the unitors e ⊙ u -> u and u ⊙ e -> u.
    """
    core: ChiralMC

    def __post_init__(self) -> None:
        if self.core.degree != 2:
            raise ArgumentError(f"{self.core.name}: a weak double category is chiral data of degree 2")

    @property
    def name(self) -> str:
        return self.core.name

    @property
    def graph(self) -> CatGraph:
        A = self.core
        T1 = A.tv[MultiIndex.of(1)]
        faces = {(c, s): A.faces[(c, 1, s)] for c in list(T1.objects) + list(T1.arrows) for s in SIGNS
                 if (c, 1, s) in A.faces}
        return CatGraph(A.name, A.tv[MultiIndex(())], T1, faces)

    def vert(self, a: str, b: str) -> str:
        return self.core.plus(1, a, b)

    def unit(self, c: str) -> str:
        return self.core.degen(c, 1)

    def start(self, u: str) -> str:
        return self.core.face(u, 1, "-")

    def assoc(self, u: str, v: str, w: str) -> str:
        return self.core.associator(1, u, v, w)

    def lunit(self, u: str) -> str:
        return self.core.unitor_left(u, 1)

    def runit(self, u: str) -> str:
        return self.core.unitor_right(u, 1)

    def bracket(self, letters: Sequence[str], base: str) -> str:
        """Left-bracketed composite ((u_1 ⊙ u_2) ⊙ ...), or the vertical unit at base."""
        return reduce(self.vert, letters) if letters else self.unit(base)


def weak_double_category(
    name: str,
    graph: CatGraph,
    vcomp: Dict[Tuple[str, str], str],
    vid: Dict[str, str],
    assoc: Dict[Tuple[str, str, str], str],
    lunit: Dict[str, str],
    runit: Dict[str, str],
) -> WeakDoubleCategory:
    """Tables keyed the natural way: vid on objects and horizontal arrows, vcomp on cells and vertical arrows."""
    core = ChiralMC(
        name, 2,
        {MultiIndex(()): graph.A0, MultiIndex.of(1): graph.A1},
        {(c, 1, s): f for (c, s), f in graph.faces.items()},
        {(c, 1): e for c, e in vid.items()},
        {(1, a, b): c for (a, b), c in vcomp.items()},
        {(u, 1): f for u, f in lunit.items()},
        {(u, 1): f for u, f in runit.items()},
        {(1,) + k: f for k, f in assoc.items()},
        {},
    )
    return WeakDoubleCategory(core)


def validate_weak_double_category(D: WeakDoubleCategory) -> ValidationReport:
    report = validate_cat_graph(D.graph, ValidationReport(structure=D.name))
    if not report.ok:
        return report
    return report.merge(validate_chiral(D.core))


def same_weak_double(D: WeakDoubleCategory, E: WeakDoubleCategory) -> bool:
    a, b = D.core, E.core
    return all(
        set(a.tv[k].objects) == set(b.tv[k].objects) and a.tv[k].arrows == b.tv[k].arrows
        for k in (MultiIndex(()), MultiIndex.of(1))
    ) and (a.faces, a.degeneracies, a.comps, a.lam, a.rho, a.kappa) == (
        b.faces, b.degeneracies, b.comps, b.lam, b.rho, b.kappa)


def squares_double(name: str, elements: Sequence[int]) -> WeakDoubleCategory:
    """Commutative squares in a finite chain, a strict double category."""
    els = sorted(elements)
    h = lambda a, b: f"h{a}{b}"  # noqa: E731
    v = lambda a, b: f"v{a}{b}"  # noqa: E731
    s = lambda a, b, c, d: f"s{a}{b}{c}{d}"  # noqa: E731
    le = [(a, b) for a, b in product(els, repeat=2) if a <= b]
    A0 = TransversalCategory(
        f"{name}.0", tuple(str(a) for a in els),
        {h(a, b): (str(a), str(b)) for a, b in le},
        {(h(b, c), h(a, b)): h(a, c) for (a, b), (b2, c) in product(le, le) if b == b2},
        {str(a): h(a, a) for a in els},
    )
    sq = [(a, b, c, d) for (a, b), (c, d) in product(le, le) if a <= c and b <= d]
    A1 = TransversalCategory(
        f"{name}.1", tuple(v(a, b) for a, b in le),
        {s(*q): (v(q[0], q[1]), v(q[2], q[3])) for q in sq},
        {(s(c, d, e, f), s(a, b, c, d)): s(a, b, e, f)
         for (a, b, c, d), (c2, d2, e, f) in product(sq, sq) if (c, d) == (c2, d2)},
        {v(a, b): s(a, b, a, b) for a, b in le},
    )
    faces: Dict[Tuple[str, str], str] = {}
    for a, b in le:
        faces[(v(a, b), "-")], faces[(v(a, b), "+")] = str(a), str(b)
    for a, b, c, d in sq:
        faces[(s(a, b, c, d), "-")], faces[(s(a, b, c, d), "+")] = h(a, c), h(b, d)
    vcomp = {(v(a, b), v(b2, c)): v(a, c) for (a, b), (b2, c) in product(le, le) if b == b2}
    vcomp.update({(s(a, b, c, d), s(b2, e, d2, f)): s(a, e, c, f)
                  for (a, b, c, d), (b2, e, d2, f) in product(sq, sq) if (b, d) == (b2, d2)})
    vid = {str(a): v(a, a) for a in els}
    vid.update({h(a, c): s(a, a, c, c) for a, c in le})
    ident = {v(a, b): s(a, b, a, b) for a, b in le}
    assoc = {(v(a, b), v(b, c), v(c, d)): s(a, d, a, d)
             for a, b, c, d in product(els, repeat=4) if a <= b <= c <= d}
    return weak_double_category(name, CatGraph(name, A0, A1, faces), vcomp, vid, assoc, ident, dict(ident))


# -- pseudo algebras


@dataclass
class PseudoAlgebra:
    name: str
    carrier: CatGraph
    bound: int
    structure: Dict[Word, str]
    omega: Dict[str, str]
    kappa: Dict[Nest, str]

    def act(self, w: Word) -> str:
        try:
            return self.structure[w]
        except KeyError:
            raise StructuralError(f"{self.name}: no composite for {w.key}") from None

    def act_all(self, ws: Sequence[Word]) -> Word:
        """The path (a(U_1), ..., a(U_n)) of a nest."""
        return Word(tuple(self.act(w) for w in ws))

    def normaliser(self, u: str) -> str:
        try:
            return self.omega[u]
        except KeyError:
            raise StructuralError(f"{self.name}: no normaliser at {u}") from None

    def associator(self, n: Sequence[Word]) -> str:
        try:
            return self.kappa[tuple(n)]
        except KeyError:
            raise StructuralError(f"{self.name}: no associator at {nest_key(n)}") from None

    def then(self, *fs: str) -> str:
        return self.carrier.A1.then(*fs)


def _special(G: CatGraph, f: str, at: Word) -> bool:
    return (G.face(f, "-"), G.face(f, "+")) == (G.A0.identity(G.start(at)), G.A0.identity(G.end(at)))


def validate_pseudo_algebra(P: PseudoAlgebra, bound: Optional[int] = None) -> ValidationReport:
    L = P.bound if bound is None else bound
    if L > P.bound:
        raise ArgumentError(f"{P.name} is tabulated up to length {P.bound}, not {L}")
    G, C = P.carrier, P.carrier.A1
    report = validate_cat_graph(G, ValidationReport(structure=P.name))
    if not report.ok:
        return report
    ps, ws = paths(G, L), cell_words(G, L)
    pn = nests(G, ps, L)
    objects = set(C.objects)

    tot = report.check("psa.total", "composites, normalisers and associators are tabulated")
    for p in ps:
        tot.observe(P.structure.get(p) in objects, ("path", p.key))
    for w in ws:
        tot.observe(P.structure.get(w) in C.arrows, ("word", w.key))
    for u in C.objects:
        tot.observe(P.omega.get(u) in C.arrows, ("omega", u))
    for n in pn:
        tot.observe(P.kappa.get(n) in C.arrows, ("kappa", nest_key(n)))
    if not tot.passed:
        return report

    a = P.act
    fun = report.check("psa.structure", "a is a map of graphs of categories TA -> A")
    for p in ps:
        _attempt(fun, (p.key,), lambda: (G.face(a(p), "-"), G.face(a(p), "+")) == (G.start(p), G.end(p)))
        _attempt(fun, ("id", p.key), lambda: a(identity_word(G, p)) == C.identity(a(p)))
    by_source: Dict[Word, List[Word]] = {}
    for w in ws:
        by_source.setdefault(source_path(G, w), []).append(w)
    for w in ws:
        _attempt(fun, (w.key,), lambda: (C.src(a(w)), C.tgt(a(w)), G.face(a(w), "-"), G.face(a(w), "+"))
                 == (a(source_path(G, w)), a(target_path(G, w)), G.start(w), G.end(w)))
        for w2 in by_source.get(target_path(G, w), ()):
            _attempt(fun, (w2.key, w.key), lambda: a(compose_words(G, w2, w)) == C.compose(a(w2), a(w)))

    special = report.check("psa.special", "normalisers and associators are special with their boundaries")
    inv = report.check("psa.invertible", "normalisers and associators are invertible")
    for u in C.objects:
        om, one = P.omega[u], Word((u,))
        _attempt(special, ("omega", u), lambda: (C.src(om), C.tgt(om)) == (u, a(one)) and _special(G, om, one))
        inv.observe(C.inverse(om) is not None, ("omega", u))
    for n in pn:
        k, flat = P.kappa[n], monad_mult(n)
        _attempt(special, ("kappa", nest_key(n)), lambda: (C.src(k), C.tgt(k))
                 == (a(P.act_all(n)), a(flat)) and _special(G, k, flat))
        inv.observe(C.inverse(k) is not None, ("kappa", nest_key(n)))
    if not (fun.passed and special.passed):
        return report

    nat = report.check("psa.naturality", "normalisers and associators are natural in cells")
    for f in sorted(C.arrows):
        _attempt(nat, ("omega", f), lambda: P.then(P.omega[C.src(f)], a(Word((f,))))
                 == P.then(f, P.omega[C.tgt(f)]))
    for W in nests(G, ws, L):
        src = tuple(source_path(G, w) for w in W)
        tgt = tuple(target_path(G, w) for w in W)
        _attempt(nat, ("kappa", nest_key(W)), lambda: P.then(P.associator(src), a(monad_mult(W)))
                 == P.then(a(P.act_all(W)), P.associator(tgt)))

    units = report.check("psa.unit_coherence", "a(T omega) then kappa(Th) = 1 = omega(a) then kappa(hT)")
    for p in ps:
        if not p.items:
            continue
        singles = tuple(Word((u,)) for u in p.items)
        ident = C.identity(a(p))
        _attempt(units, ("T", p.key), lambda: P.then(
            a(Word(tuple(P.omega[u] for u in p.items))), P.associator(singles)) == ident)
        _attempt(units, ("h", p.key), lambda: P.then(P.omega[a(p)], P.associator((p,))) == ident)

    assoc = report.check("psa.assoc_coherence", "the two ways of flattening three levels agree")
    for W in nests3(G, ps, L):
        level2 = tuple(P.act_all(Wi) for Wi in W)
        flat2 = tuple(w for Wi in W for w in Wi)
        inner = tuple(monad_mult(Wi) for Wi in W)
        _attempt(assoc, tuple(nest_key(Wi) for Wi in W), lambda: P.then(
            P.associator(level2), P.associator(flat2))
            == P.then(a(Word(tuple(P.associator(Wi) for Wi in W))), P.associator(inner)))
    logger.debug(f"validate_pseudo_algebra({P.name}, L={L}): {report.summary()}")
    return report


def is_normal(P: PseudoAlgebra) -> bool:
    """Unary composition is trivial: a(u) = u with omega the identity."""
    C = P.carrier.A1
    try:
        return all(P.act(Word((u,))) == u and P.normaliser(u) == C.identity(u) for u in C.objects)
    except StructuralError:
        return False


# -- J: weak double categories give normal pseudo algebras

Tree = Tuple  # ("leaf", u) | ("unit", x) | ("node", left, right)


def _word_tree(w: Word) -> Tree:
    if not w.items:
        return ("unit", w.base)
    return reduce(lambda t, u: ("node", t, ("leaf", u)), w.items[1:], ("leaf", w.items[0]))


def _nest_tree(n: Sequence[Word]) -> Tree:
    trees = [_word_tree(w) for w in n]
    return reduce(lambda t, s: ("node", t, s), trees[1:], trees[0])


def _merge(D: WeakDoubleCategory, n1: str, l1: List[str], n2: str, l2: List[str], y: str) -> str:
    """n1 ⊙ n2 -> bracket(l1 + l2) for left-bracketed n1, n2 over the letters l1, l2."""
    if not l2:
        return D.runit(n1)
    if not l1:
        return D.lunit(n2)
    if len(l2) == 1:
        return D.core.identity(D.vert(n1, n2))
    m, u = D.bracket(l2[:-1], y), l2[-1]
    rest = _merge(D, n1, l1, m, l2[:-1], y)
    return D.core.then(D.assoc(n1, m, u), D.vert(rest, D.core.identity(u)))


def _normalize(D: WeakDoubleCategory, t: Tree) -> Tuple[str, List[str], str]:
    """The canonical comparison from the value of t to the left bracketing of its letters."""
    if t[0] == "leaf":
        return D.core.identity(t[1]), [t[1]], D.start(t[1])
    if t[0] == "unit":
        return D.core.identity(D.unit(t[1])), [], t[1]
    c1, l1, x = _normalize(D, t[1])
    c2, l2, y = _normalize(D, t[2])
    step = D.vert(c1, c2)
    return D.core.then(step, _merge(D, D.bracket(l1, x), l1, D.bracket(l2, y), l2, y)), l1 + l2, x


def _j_algebra(D: WeakDoubleCategory, bound: int) -> PseudoAlgebra:
    G = D.graph
    ps = paths(G, bound)
    structure: Dict[Word, str] = {}
    for w in ps + cell_words(G, bound):
        structure[w] = D.bracket(w.items, w.base)
    omega = {u: G.A1.identity(u) for u in G.A1.objects}
    kappa = {n: _normalize(D, _nest_tree(n))[0] for n in nests(G, ps, bound)}
    logger.debug(f"J({D.name}): {len(structure)} composites, {len(kappa)} associators")
    return PseudoAlgebra(f"J({D.name})", G, bound, structure, omega, kappa)


# -- V: normal pseudo algebras give weak double categories


def _v_double(P: PseudoAlgebra) -> WeakDoubleCategory:
    if not is_normal(P):
        raise RejectedInputError(f"{P.name} is not normal")
    if P.bound < 3:
        raise ArgumentError(f"{P.name}: V needs composites of three vertical arrows")
    G, a = P.carrier, P.act
    C = G.A1
    vid = {x: a(Word(base=x)) for x in G.A0.objects}
    vid.update({f: a(Word(base=f)) for f in G.A0.arrows})
    vcomp: Dict[Tuple[str, str], str] = {}
    for w in paths(G, 2) + cell_words(G, 2):
        if len(w) == 2:
            vcomp[w.items] = a(w)
    assoc: Dict[Tuple[str, str, str], str] = {}
    for p in paths(G, 3):
        if len(p) == 3:
            u, w = Word(p.items[:1]), Word(p.items[2:])
            back = C.inverse(P.associator((Word(p.items[:2]), w)))
            if back is None:
                raise StructuralError(f"{P.name}: associator at {p.key} is not invertible")
            assoc[p.items] = P.then(P.associator((u, Word(p.items[1:]))), back)
    lunit = {u: P.associator((Word(base=G.face(u, "-")), Word((u,)))) for u in C.objects}
    runit = {u: P.associator((Word((u,)), Word(base=G.face(u, "+")))) for u in C.objects}
    graph = CatGraph(f"V({P.name})", G.A0, G.A1, dict(G.faces))
    return weak_double_category(f"V({P.name})", graph, vcomp, vid, assoc, lunit, runit)


def transport_algebra(P: PseudoAlgebra, theta: Dict[Word, str], name: Optional[str] = None) -> PseudoAlgebra:
    """
    Move the structure of P along special isos theta[p]: a(p) -> a'(p); paths
    missing from theta keep their composite. Words of cells are conjugated.
    """
    G, C = P.carrier, P.carrier.A1
    ps = paths(G, P.bound)
    th = {p: theta.get(p, C.identity(P.act(p))) for p in ps}
    back: Dict[Word, str] = {}
    for p, f in th.items():
        g = C.inverse(f)
        if g is None or C.src(f) != P.act(p):
            raise ArgumentError(f"theta at {p.key} is not an invertible map out of {P.act(p)}")
        back[p] = g
    structure = {p: C.tgt(f) for p, f in th.items()}
    for w in cell_words(G, P.bound):
        structure[w] = P.then(back[source_path(G, w)], P.act(w), th[target_path(G, w)])
    omega = {u: P.then(P.omega[u], th[Word((u,))]) for u in C.objects}
    kappa = {}
    for n in nests(G, ps, P.bound):
        new = Word(tuple(structure[w] for w in n))
        kappa[n] = P.then(back[new], P.act(Word(tuple(back[w] for w in n))), P.kappa[n], th[monad_mult(n)])
    return PseudoAlgebra(name or f"{P.name}'", G, P.bound, structure, omega, kappa)


# -- morphisms of pseudo algebras


@dataclass
class AlgebraMorphism:
    """
    A map of graphs with comparisons on paths: lax (and strict, pseudo)
    comparison[p] runs b(F p) -> F(a p), colax F(a p) -> b(F p).
    """
    name: str
    flavor: str
    source: PseudoAlgebra
    target: PseudoAlgebra
    cell_map: Dict[str, str]
    comparison: Dict[Word, str]

    def __call__(self, c: str) -> str:
        try:
            return self.cell_map[c]
        except KeyError:
            raise StructuralError(f"{self.name}: no image for {c!r}") from None

    def word(self, w: Word) -> Word:
        return Word(tuple(self(c) for c in w.items)) if w.items else Word(base=self(w.base))

    def at(self, p: Word) -> str:
        try:
            return self.comparison[p]
        except KeyError:
            raise StructuralError(f"{self.name}: no comparison at {p.key}") from None

    @property
    def lax(self) -> bool:
        return self.flavor in LAX_LIKE


def _cells(G: CatGraph) -> List[str]:
    return list(G.A0.objects) + sorted(G.A0.arrows) + list(G.A1.objects) + sorted(G.A1.arrows)


def same_algebra_morphism(F: AlgebraMorphism, H: AlgebraMorphism) -> bool:
    return (F.source is H.source and F.target is H.target and F.flavor == H.flavor
            and F.cell_map == H.cell_map and F.comparison == H.comparison)


def identity_algebra_morphism(P: PseudoAlgebra, flavor: str = "strict") -> AlgebraMorphism:
    C = P.carrier.A1
    comparison = {p: C.identity(P.act(p)) for p in paths(P.carrier, P.bound)}
    return AlgebraMorphism(f"id({P.name})", flavor, P, P, {c: c for c in _cells(P.carrier)}, comparison)


def as_colax(F: AlgebraMorphism) -> AlgebraMorphism:
    """A pseudo (or strict) morphism read with its inverse comparisons."""
    if F.flavor not in ("pseudo", "strict"):
        raise ArgumentError(f"{F.name} is {F.flavor}, only pseudo morphisms turn colax")
    C = F.target.carrier.A1
    inverse = {}
    for p, f in F.comparison.items():
        g = C.inverse(f)
        if g is None:
            raise StructuralError(f"{F.name}: comparison at {p.key} is not invertible")
        inverse[p] = g
    return AlgebraMorphism(F.name, "colax" if F.flavor == "pseudo" else "strict",
                           F.source, F.target, dict(F.cell_map), inverse)


def validate_algebra_morphism(F: AlgebraMorphism, bound: Optional[int] = None) -> ValidationReport:
    A, B = F.source, F.target
    L = min(A.bound, B.bound) if bound is None else bound
    G, H = A.carrier, B.carrier
    C = H.A1
    report = ValidationReport(structure=F.name)
    fl = report.check("morph.flavor", "strict, lax, colax or pseudo")
    fl.observe(F.flavor in FLAVORS, (F.flavor,))
    if not fl.passed:
        return report

    gm = report.check("morph.graph_map", "F is a functor on A0 and A1 and commutes with faces")
    for src, dst in ((G.A0, H.A0), (G.A1, H.A1)):
        for x in src.objects:
            _attempt(gm, (x,), lambda: F(x) in dst.objects and F(src.identity(x)) == dst.identity(F(x)))
        for f in sorted(src.arrows):
            _attempt(gm, (f,), lambda: (dst.src(F(f)), dst.tgt(F(f))) == (F(src.src(f)), F(src.tgt(f))))
            for g in src.out_of(src.tgt(f)):
                _attempt(gm, (g, f), lambda: F(src.compose(g, f)) == dst.compose(F(g), F(f)))
    for c in list(G.A1.objects) + sorted(G.A1.arrows):
        for s in SIGNS:
            _attempt(gm, (c, s), lambda: H.face(F(c), s) == F(G.face(c, s)))
    if not gm.passed:
        return report

    a, b = A.act, B.act
    ps = paths(G, L)
    cmp = report.check("morph.comparison", "comparisons are special maps in the declared direction")
    for p in ps:
        def ok() -> bool:
            f = F.at(p)
            ends = (b(F.word(p)), F(a(p))) if F.lax else (F(a(p)), b(F.word(p)))
            if (C.src(f), C.tgt(f)) != ends or not _special(H, f, F.word(p)):
                return False
            if F.flavor == "strict":
                return f == C.identity(C.src(f))
            return F.flavor != "pseudo" or C.inverse(f) is not None
        _attempt(cmp, (p.key,), ok)
    if not cmp.passed:
        return report

    nat = report.check("morph.naturality", "comparisons are natural in words of cells")
    for w in cell_words(G, L):
        p, p2 = source_path(G, w), target_path(G, w)
        if F.lax:
            test = lambda: B.then(F.at(p), F(a(w))) == B.then(b(F.word(w)), F.at(p2))  # noqa: E731
        else:
            test = lambda: B.then(F.at(p), b(F.word(w))) == B.then(F(a(w)), F.at(p2))  # noqa: E731
        _attempt(nat, (w.key,), test)

    unit = report.check("morph.unit", "comparisons are coherent with the normalisers")
    for u in G.A1.objects:
        one = Word((u,))
        if F.lax:
            test = lambda: B.then(B.normaliser(F(u)), F.at(one)) == F(A.normaliser(u))  # noqa: E731
        else:
            test = lambda: B.then(F(A.normaliser(u)), F.at(one)) == B.normaliser(F(u))  # noqa: E731
        _attempt(unit, (u,), test)

    assoc = report.check("morph.assoc", "comparisons are coherent with the associators")
    for n in nests(G, ps, L):
        image = tuple(F.word(w) for w in n)
        flat, inner = monad_mult(n), A.act_all(n)
        pieces = Word(tuple(F.at(w) for w in n))
        if F.lax:
            test = lambda: B.then(B.associator(image), F.at(flat)) == B.then(  # noqa: E731
                b(pieces), F.at(inner), F(A.associator(n)))
        else:
            test = lambda: B.then(F(A.associator(n)), F.at(flat)) == B.then(  # noqa: E731
                F.at(inner), b(pieces), B.associator(image))
        _attempt(assoc, (nest_key(n),), test)
    logger.debug(f"validate_algebra_morphism({F.name}): {report.summary()}")
    return report


def _composite_flavor(f: str, g: str) -> str:
    if f == g:
        return f
    if "strict" in (f, g):
        return g if f == "strict" else f
    if {f, g} == {"lax", "pseudo"}:
        return "lax"
    raise ArgumentError(f"cannot compose a {f} morphism with a {g} one")


def compose_algebra_morphisms(F: AlgebraMorphism, H: AlgebraMorphism, name: Optional[str] = None) -> AlgebraMorphism:
    """H after F, with comparisons pasted in the common direction."""
    if F.target is not H.source:
        raise BoundaryError(f"{F.name} does not end where {H.name} starts")
    flavor = _composite_flavor(F.flavor, H.flavor)
    T = H.target
    comparison = {}
    for p, f in F.comparison.items():
        q = F.word(p)
        if q not in H.comparison:
            continue
        comparison[p] = T.then(H.at(q), H(f)) if flavor in LAX_LIKE else T.then(H(f), H.at(q))
    cell_map = {c: H(F(c)) for c in F.cell_map}
    return AlgebraMorphism(name or f"{H.name}.{F.name}", flavor, F.source, T, cell_map, comparison)


# -- cells of pseudo algebras


@dataclass
class PsaCell:
    """
    A square with lax f: A -> C on top, lax g: B -> D below, colax r: A -> B
    and s: C -> D on the sides; horizontal[x]: s f x -> g r x in D0 for
    objects x, vertical[u]: s f u -> g r u in D1 for vertical arrows u.
    """
    name: str
    f: AlgebraMorphism
    g: AlgebraMorphism
    r: AlgebraMorphism
    s: AlgebraMorphism
    horizontal: Dict[str, str]
    vertical: Dict[str, str]

    def __call__(self, c: str) -> str:
        try:
            return self.vertical[c] if c in self.vertical else self.horizontal[c]
        except KeyError:
            raise StructuralError(f"{self.name}: no component at {c!r}") from None

    @property
    def source(self) -> PseudoAlgebra:
        return self.f.source

    @property
    def target(self) -> PseudoAlgebra:
        return self.g.target


def _psa_frame_error(pi: PsaCell) -> Optional[str]:
    if pi.f.source is not pi.r.source or pi.f.target is not pi.s.source:
        return "f and r, s do not share corners"
    if pi.r.target is not pi.g.source or pi.s.target is not pi.g.target:
        return "g does not close the square"
    if pi.f.flavor not in LAX_LIKE or pi.g.flavor not in LAX_LIKE:
        return "horizontal edges must be lax"
    if pi.r.flavor not in ("colax", "strict") or pi.s.flavor not in ("colax", "strict"):
        return "vertical edges must be colax"
    return None


def validate_psa_cell(pi: PsaCell, bound: Optional[int] = None) -> ValidationReport:
    report = ValidationReport(structure=pi.name)
    frame = report.check("psa_cell.frame", "lax f, g and colax r, s bound a square")
    problem = _psa_frame_error(pi)
    if problem:
        frame.fail((pi.name,), problem)
        return report
    frame.observe(True)
    f, g, r, s = pi.f, pi.g, pi.r, pi.s
    A, D = pi.source, pi.target
    G, H = A.carrier, D.carrier
    L = min(A.bound, D.bound) if bound is None else bound

    comp = report.check("psa_cell.components", "components run s f -> g r with matching faces")
    for x in G.A0.objects:
        _attempt(comp, (x,), lambda: (H.A0.src(pi(x)), H.A0.tgt(pi(x))) == (s(f(x)), g(r(x))))
    for u in G.A1.objects:
        _attempt(comp, (u,), lambda: (H.A1.src(pi(u)), H.A1.tgt(pi(u))) == (s(f(u)), g(r(u)))
                 and all(H.face(pi(u), a) == pi(G.face(u, a)) for a in SIGNS))
    if not comp.passed:
        return report

    nat = report.check("psa_cell.naturality", "components are natural in both categories")
    for cat, dst in ((G.A0, H.A0), (G.A1, H.A1)):
        for h in sorted(cat.arrows):
            x, y = cat.src(h), cat.tgt(h)
            _attempt(nat, (h,), lambda: dst.then(pi(x), g(r(h))) == dst.then(s(f(h)), pi(y)))

    coh = report.check("psa_cell.coherence", "s(phi) then pi(a) then g(rho) = sigma then d(T pi) then gamma")
    a, d = A.act, D.act
    for p in paths(G, L):
        tp = Word(tuple(pi(u) for u in p.items)) if p.items else Word(base=pi(p.base))
        _attempt(coh, (p.key,), lambda: D.then(s(f.at(p)), pi(a(p)), g(r.at(p)))
                 == D.then(s.at(f.word(p)), d(tp), g.at(r.word(p))))
    logger.debug(f"validate_psa_cell({pi.name}): {report.summary()}")
    return report


def identity_psa_cell(morphism: AlgebraMorphism, along: str) -> PsaCell:
    """Identity on a colax edge ('h', a unit for compose_h) or a lax edge ('v')."""
    if along == "h":
        A, B = morphism.source, morphism.target
        f, g, r, s = identity_algebra_morphism(A), identity_algebra_morphism(B), morphism, morphism
    elif along == "v":
        A, C = morphism.source, morphism.target
        f, g, r, s = morphism, morphism, identity_algebra_morphism(A), identity_algebra_morphism(C)
    else:
        raise ArgumentError(f"along must be 'h' or 'v', not {along!r}")
    D = g.target.carrier
    G = f.source.carrier
    horizontal = {x: D.A0.identity(g(r(x))) for x in G.A0.objects}
    vertical = {u: D.A1.identity(g(r(u))) for u in G.A1.objects}
    return PsaCell(f"1[{along}]({morphism.name})", f, g, r, s, horizontal, vertical)


def _same_edge(F: AlgebraMorphism, H: AlgebraMorphism) -> bool:
    return (F.source is H.source and F.target is H.target
            and F.cell_map == H.cell_map and F.comparison == H.comparison)


def compose_psa_h(pi: PsaCell, theta: PsaCell) -> PsaCell:
    """(pi | theta): theta glued to the right of pi along pi.s = theta.r."""
    if not _same_edge(pi.s, theta.r):
        raise BoundaryError(f"{pi.name} and {theta.name} do not share a vertical edge")
    F = theta.target.carrier
    G = pi.source.carrier
    horizontal = {x: F.A0.then(theta(pi.f(x)), theta.g(pi(x))) for x in G.A0.objects}
    vertical = {u: F.A1.then(theta(pi.f(u)), theta.g(pi(u))) for u in G.A1.objects}
    return PsaCell(
        f"({pi.name}|{theta.name})",
        compose_algebra_morphisms(pi.f, theta.f), compose_algebra_morphisms(pi.g, theta.g),
        pi.r, theta.s, horizontal, vertical,
    )


def compose_psa_v(pi: PsaCell, zeta: PsaCell) -> PsaCell:
    """(pi / zeta): zeta glued below pi along pi.g = zeta.f."""
    if not _same_edge(pi.g, zeta.f):
        raise BoundaryError(f"{pi.name} and {zeta.name} do not share a horizontal edge")
    F = zeta.target.carrier
    G = pi.source.carrier
    horizontal = {x: F.A0.then(zeta.s(pi(x)), zeta(pi.r(x))) for x in G.A0.objects}
    vertical = {u: F.A1.then(zeta.s(pi(u)), zeta(pi.r(u))) for u in G.A1.objects}
    return PsaCell(
        f"({pi.name}/{zeta.name})", pi.f, zeta.g,
        compose_algebra_morphisms(pi.r, zeta.r), compose_algebra_morphisms(pi.s, zeta.s),
        horizontal, vertical,
    )


def same_psa_cell(a: PsaCell, b: PsaCell) -> bool:
    return (all(_same_edge(m, n) for m, n in ((a.f, b.f), (a.g, b.g), (a.r, b.r), (a.s, b.s)))
            and a.horizontal == b.horizontal and a.vertical == b.vertical)


def check_psa_middle_four(pi: PsaCell, theta: PsaCell, zeta: PsaCell, xi: PsaCell) -> Tuple[bool, PsaCell, PsaCell]:
    """(pi|theta)/(zeta|xi) against (pi/zeta)|(theta/xi)."""
    rows = compose_psa_v(compose_psa_h(pi, theta), compose_psa_h(zeta, xi))
    cols = compose_psa_h(compose_psa_v(pi, zeta), compose_psa_v(theta, xi))
    return same_psa_cell(rows, cols), rows, cols


# -- V and J on morphisms and cells

Cache = Dict[int, object]


def _j_of(A: ChiralMC, over: Cache, bound: int) -> PseudoAlgebra:
    if id(A) not in over:
        over[id(A)] = _j_algebra(WeakDoubleCategory(A), bound)
    return over[id(A)]  # type: ignore[return-value]


def _v_of(P: PseudoAlgebra, over: Cache) -> WeakDoubleCategory:
    if id(P) not in over:
        over[id(P)] = _v_double(P)
    return over[id(P)]  # type: ignore[return-value]


def _j_morphism(R: PMorphism, over: Cache, bound: int) -> AlgebraMorphism:
    A, B = _j_of(R.source, over, bound), _j_of(R.target, over, bound)
    T = R.target
    comparison: Dict[Word, str] = {}
    for p in paths(A.carrier, bound):
        if not p.items:
            comparison[p] = R.unit_at(p.base, 1)
            continue
        if len(p) == 1:
            comparison[p] = T.identity(R(p.items[0]))
            continue
        prefix, last = Word(p.items[:-1]), p.items[-1]
        step = T.plus(1, comparison[prefix], T.identity(R(last)))
        link = R.comp_at(1, A.act(prefix), last)
        comparison[p] = T.then(step, link) if R.lax(1) else T.then(link, step)
    return AlgebraMorphism(R.name, "lax" if R.lax(1) else "colax", A, B, dict(R.cell_map), comparison)


def _v_morphism(F: AlgebraMorphism, over: Cache) -> PMorphism:
    VA, VB = _v_of(F.source, over), _v_of(F.target, over)
    G = F.source.carrier
    unit = {(x, 1): F.at(Word(base=x)) for x in G.A0.objects}
    comp = {(1,) + p.items: F.at(p) for p in paths(G, 2) if len(p) == 2}
    return PMorphism(F.name, VA.core, VB.core, 1 if F.lax else 2, dict(F.cell_map), unit, comp)


def functor_J(obj: Union[WeakDoubleCategory, PMorphism, PQCube], bound: int = 4,
              over: Optional[Cache] = None) -> Union[PseudoAlgebra, AlgebraMorphism, PsaCell]:
    """
    Unbiased composition: left bracketing for a weak double category, the
    induced comparisons for a lax or colax double functor, the same
    components for a cell. `over` shares algebras between calls.
    """
    over = {} if over is None else over
    if isinstance(obj, WeakDoubleCategory):
        return _j_of(obj.core, over, bound)
    if isinstance(obj, PMorphism):
        if obj.source.degree != 2:
            raise ArgumentError(f"{obj.name}: J acts on double functors (degree 2)")
        return _j_morphism(obj, over, bound)
    if isinstance(obj, PQCube):
        if (obj.p, obj.q) != (1, 2):
            raise ArgumentError(f"{obj.name}: J acts on cells with lax rows and colax columns")
        f, g, r, s = (_j_morphism(m, over, bound) for m in (obj.R, obj.S, obj.U, obj.V))
        A = obj.source
        horizontal = {x: obj(x) for x in A.cubes(MultiIndex(()))}
        vertical = {u: obj(u) for u in A.cubes(MultiIndex.of(1))}
        return PsaCell(obj.name, f, g, r, s, horizontal, vertical)
    raise ArgumentError(f"J is not defined on {type(obj).__name__}")


def functor_V(obj: Union[PseudoAlgebra, AlgebraMorphism, PsaCell],
              over: Optional[Cache] = None) -> Union[WeakDoubleCategory, PMorphism, PQCube]:
    """Binary and nullary composites of a normal algebra; rejects algebras that are not normal."""
    over = {} if over is None else over
    if isinstance(obj, PseudoAlgebra):
        return _v_of(obj, over)
    if isinstance(obj, AlgebraMorphism):
        return _v_morphism(obj, over)
    if isinstance(obj, PsaCell):
        R, S, U, V = (_v_morphism(m, over) for m in (obj.f, obj.g, obj.r, obj.s))
        return PQCube(obj.name, R, S, U, V, {**obj.horizontal, **obj.vertical})
    raise ArgumentError(f"V is not defined on {type(obj).__name__}")


# -- the counit JV -> 1


def _epsilon_comparisons(P: PseudoAlgebra) -> Dict[Word, str]:
    C = P.carrier.A1
    out: Dict[Word, str] = {}
    for p in paths(P.carrier, P.bound):
        if len(p) <= 1:
            out[p] = C.identity(P.act(p))
            continue
        prefix, last = Word(p.items[:-1]), p.items[-1]
        back = C.inverse(P.associator((prefix, Word((last,)))))
        if back is None:
            raise StructuralError(f"{P.name}: associator at {p.key} is not invertible")
        out[p] = P.then(back, P.act(Word((out[prefix], C.identity(last)))))
    return out


def epsilon(P: PseudoAlgebra, over: Optional[Cache] = None) -> Tuple[AlgebraMorphism, ValidationReport]:
    """The pseudo morphism JV(P) -> P, identity on cells, and a report on its triangle identities."""
    over = {} if over is None else over
    D = _v_of(P, over)
    JV = _j_of(D.core, over, P.bound)
    C = P.carrier.A1
    eps = AlgebraMorphism(f"epsilon({P.name})", "pseudo", JV, P,
                          {c: c for c in _cells(P.carrier)}, _epsilon_comparisons(P))
    report = ValidationReport(structure=eps.name)
    report.merge(validate_algebra_morphism(eps), prefix="epsilon.")
    tv = report.check("epsilon.triangle_V", "V(epsilon) is the identity: trivial on paths of length <= 2")
    for p, f in eps.comparison.items():
        if len(p) <= 2:
            tv.observe(f == C.identity(C.src(f)), (p.key,))
    tj = report.check("epsilon.triangle_J", "epsilon of J(V(P)) is the identity")
    for p, f in _epsilon_comparisons(JV).items():
        tj.observe(f == C.identity(C.src(f)), (p.key,))
    logger.info(f"epsilon({P.name}): {report.summary()}")
    return eps, report


def is_identity_morphism(F: AlgebraMorphism) -> bool:
    C = F.target.carrier.A1
    return (all(c == d for c, d in F.cell_map.items())
            and all(f == C.identity(C.src(f)) for f in F.comparison.values()))


def epsilon_square(F: AlgebraMorphism, over: Optional[Cache] = None) -> PsaCell:
    """Naturality of epsilon at a lax F: A -> B, as a cell with identity components."""
    if not F.lax:
        raise ArgumentError(f"{F.name} is not lax")
    over = {} if over is None else over
    eA, _ = epsilon(F.source, over)
    eB, _ = epsilon(F.target, over)
    top = _j_morphism(_v_morphism(F, over), over, F.source.bound)
    G, H = F.source.carrier, F.target.carrier
    horizontal = {x: H.A0.identity(F(x)) for x in G.A0.objects}
    vertical = {u: H.A1.identity(F(u)) for u in G.A1.objects}
    return PsaCell(f"epsilon[{F.name}]", top, F, as_colax(eA), as_colax(eB), horizontal, vertical)


# -- 012-cells


@dataclass
class Psa012Cell:
    """A map pi -> pi2 of cells given by strict morphisms F, G, F2, G2 on the corners A, C, B, D."""
    name: str
    pi: PsaCell
    pi2: PsaCell
    F: AlgebraMorphism
    G: AlgebraMorphism
    F2: AlgebraMorphism
    G2: AlgebraMorphism


def validate_012_cell(m: Psa012Cell) -> ValidationReport:
    report = ValidationReport(structure=m.name)
    strict = report.check("012.strict", "corner morphisms are strict")
    for label, F in (("F", m.F), ("G", m.G), ("F2", m.F2), ("G2", m.G2)):
        strict.observe(is_strict_morphism(F), (label, F.name))
    sq = report.check("012.squares", "the corner morphisms commute with both frames")
    a, b = m.pi, m.pi2
    pairs = (
        ("f", a.f, b.f, m.F, m.G),
        ("g", a.g, b.g, m.F2, m.G2),
        ("r", a.r, b.r, m.F, m.F2),
        ("s", a.s, b.s, m.G, m.G2),
    )
    for label, edge, edge2, lo, hi in pairs:
        def commutes() -> bool:
            try:
                one, two = compose_algebra_morphisms(lo, edge2), compose_algebra_morphisms(edge, hi)
            except ArgumentError:
                return False
            return one.cell_map == two.cell_map and one.comparison == two.comparison
        _attempt(sq, (label,), commutes)
    if not sq.passed:
        return report
    com = report.check("012.commutes", "G2(pi x) = pi2(F x)")
    G = a.source.carrier
    for x in list(G.A0.objects) + list(G.A1.objects):
        _attempt(com, (x,), lambda: m.G2(a(x)) == b(m.F(x)))
    return report


def is_strict_morphism(F: AlgebraMorphism) -> bool:
    C = F.target.carrier.A1
    try:
        return all(f == C.identity(C.src(f)) for f in F.comparison.values())
    except StructuralError:
        return False
