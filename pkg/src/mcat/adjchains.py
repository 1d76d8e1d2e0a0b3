"""
Adjunction chains, their mates calculus, and arrow bundles.

Adj_i(C) has chains u_0 -| u_1 -| ... -| u_i (with explicit units and counits)
as arrows and mate-coherent families (φ_0, φ_1, ...) as cells; forgetting the
tail of a chain gives the forgetful sequence whose generalised quintets form
Adj(C). Bundles are tuples of parallel arrows; repeating the last component
gives the structural sequence behind Bnd(C).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .core2cat import (
    FORGETFUL,
    STRUCTURAL,
    FiniteTwoCategory,
    StrictTwoFunctor,
    TwoFunctorSequence,
    paste,
    term,
    validate_two_category,
)
from .genquintets import build_GQ
from .logging_config import get_logger
from .models import ArgumentError, BoundaryError, RejectedInputError, StructuralError, ValidationReport
from .multicat import TruncatedMultipleCategory, join_ids, quote_id

logger = get_logger("adjchains")


@dataclass(frozen=True)
class AdjunctionData:
    """left -| right with unit: 1 => right.left and counit: left.right => 1."""
    left: str
    right: str
    unit: str
    counit: str


def validate_adjunction(C: FiniteTwoCategory, adj: AdjunctionData) -> ValidationReport:
    report = ValidationReport(structure=f"{adj.left}-|{adj.right}")
    bound = report.check("adjunction.boundary", "unit and counit have the adjunction boundary")
    f, g = adj.left, adj.right
    x, y = C.src(f), C.tgt(f)
    ok = (C.src(g), C.tgt(g)) == (y, x)
    ok = ok and (C.dom(adj.unit), C.cod(adj.unit)) == (C.identity(x), C.compose(g, f))
    ok = ok and (C.dom(adj.counit), C.cod(adj.counit)) == (C.compose(f, g), C.identity(y))
    if not bound.observe(ok, (f, g, adj.unit, adj.counit)):
        return report
    left = report.check("adjunction.triangle_left", "fη ⊗ εf = 1")
    right = report.check("adjunction.triangle_right", "ηg ⊗ gε = 1")
    t1 = paste(C, [term(adj.unit, left=(f,)), term(adj.counit, right=(f,))])
    left.observe(t1 == C.identity_cell(f), (f, adj.unit, adj.counit, t1))
    t2 = paste(C, [term(adj.unit, right=(g,)), term(adj.counit, left=(g,))])
    right.observe(t2 == C.identity_cell(g), (g, adj.unit, adj.counit, t2))
    return report


def find_adjunctions(C: FiniteTwoCategory, f: str) -> List[AdjunctionData]:
    """Every (g, η, ε) making f -| g, by exhaustive search."""
    x, y = C.src(f), C.tgt(f)
    out: List[AdjunctionData] = []
    for g in C.hom(y, x):
        for eta in C.cells(C.identity(x), C.compose(g, f)):
            for eps in C.cells(C.compose(f, g), C.identity(y)):
                adj = AdjunctionData(f, g, eta, eps)
                if validate_adjunction(C, adj).ok:
                    out.append(adj)
    return out


def mate(C: FiniteTwoCategory, phi: str, a: AdjunctionData, b: AdjunctionData) -> str:
    """
    The mate b.right => a.right of φ: a.left => b.left.

    η_a b' ⊗ a' φ b' ⊗ a' ε_b, pasted in C.
    """
    if (C.dom(phi), C.cod(phi)) != (a.left, b.left):
        raise ArgumentError(f"{phi} does not run from {a.left} to {b.left}")
    return paste(C, [
        term(a.unit, right=(b.right,)),
        term(phi, left=(a.right,), right=(b.right,)),
        term(b.counit, left=(a.right,)),
    ])


def inverse_mate(C: FiniteTwoCategory, psi: str, a: AdjunctionData, b: AdjunctionData) -> str:
    """The cell a.left => b.left whose mate is ψ: b.right => a.right."""
    if (C.dom(psi), C.cod(psi)) != (b.right, a.right):
        raise ArgumentError(f"{psi} does not run from {b.right} to {a.right}")
    return paste(C, [
        term(b.unit, left=(a.left,)),
        term(psi, left=(a.left,), right=(b.left,)),
        term(a.counit, right=(b.left,)),
    ])


def composite_adjunction(C: FiniteTwoCategory, first: AdjunctionData, second: AdjunctionData) -> AdjunctionData:
    """gf -| f'g' for f -| f' followed by g -| g'."""
    f, f2, g, g2 = first.left, first.right, second.left, second.right
    if C.tgt(f) != C.src(g):
        raise BoundaryError(f"cannot compose adjunctions on {f} and {g}")
    unit = paste(C, [first.unit, term(second.unit, left=(f2,), right=(f,))])
    counit = paste(C, [term(first.counit, left=(g,), right=(g2,)), second.counit])
    return AdjunctionData(C.compose(g, f), C.compose(f2, g2), unit, counit)


@dataclass(frozen=True)
class AdjChain:
    arrows: Tuple[str, ...]
    adjunctions: Tuple[AdjunctionData, ...]

    @property
    def length(self) -> int:
        return len(self.arrows) - 1

    @property
    def id(self) -> str:
        data = ";".join(join_ids("/", (a.unit, a.counit)) for a in self.adjunctions)
        return f"({join_ids(',', self.arrows)};{data})" if data else f"({quote_id(self.arrows[0])})"


def identity_chain(C: FiniteTwoCategory, x: str, length: int) -> AdjChain:
    one = C.identity(x)
    cell = C.identity_cell(one)
    return AdjChain((one,) * (length + 1), (AdjunctionData(one, one, cell, cell),) * length)


def validate_chain(C: FiniteTwoCategory, u: AdjChain) -> ValidationReport:
    report = ValidationReport(structure=u.id)
    shape = report.check("chain.shape", "arrows alternate direction and match their adjunctions")
    if not u.arrows:
        shape.fail(("empty",))
        return report
    x, y = C.src(u.arrows[0]), C.tgt(u.arrows[0])
    for k, f in enumerate(u.arrows):
        want = (x, y) if k % 2 == 0 else (y, x)
        shape.observe((C.src(f), C.tgt(f)) == want, (str(k), f))
    shape.observe(len(u.adjunctions) == u.length, ("adjunctions", str(len(u.adjunctions))))
    for k, adj in enumerate(u.adjunctions):
        if k + 1 < len(u.arrows):
            shape.observe((adj.left, adj.right) == u.arrows[k:k + 2], (str(k), adj.left, adj.right))
    if not shape.passed:
        return report
    for adj in u.adjunctions:
        report.merge(validate_adjunction(C, adj), prefix="chain.")
    return report


def enumerate_chains(C: FiniteTwoCategory, length: int) -> List[AdjChain]:
    """All chains of the given length, extending every arrow by every right adjoint."""
    chains = [AdjChain((f,), ()) for f in C.one_cells_sorted()]
    for _ in range(length):
        longer: List[AdjChain] = []
        for u in chains:
            for adj in find_adjunctions(C, u.arrows[-1]):
                longer.append(AdjChain(u.arrows + (adj.right,), u.adjunctions + (adj,)))
        chains = longer
    return chains


def compose_chains(C: FiniteTwoCategory, u: AdjChain, v: AdjChain) -> AdjChain:
    """
    v after u: components v_0u_0, u_1v_1, v_2u_2, ... with composite adjunctions.
    """
    if u.length != v.length:
        raise ArgumentError(f"chains of lengths {u.length} and {v.length} do not compose")
    if C.tgt(u.arrows[0]) != C.src(v.arrows[0]):
        raise BoundaryError(f"{v.id} cannot follow {u.id}")
    arrows = tuple(
        C.compose(v.arrows[k], u.arrows[k]) if k % 2 == 0 else C.compose(u.arrows[k], v.arrows[k])
        for k in range(u.length + 1)
    )
    adjs = tuple(
        composite_adjunction(C, u.adjunctions[k], v.adjunctions[k]) if k % 2 == 0
        else composite_adjunction(C, v.adjunctions[k], u.adjunctions[k])
        for k in range(u.length)
    )
    return AdjChain(arrows, adjs)


@dataclass(frozen=True)
class ChainTwoCell:
    """φ_0: u_0 => v_0, φ_1: v_1 => u_1, φ_2: u_2 => v_2, ..."""
    source: AdjChain
    target: AdjChain
    components: Tuple[str, ...]

    @property
    def id(self) -> str:
        return f"{self.source.id}=[{join_ids(',', self.components)}]=>{self.target.id}"


def _next_mate(C: FiniteTwoCategory, u: AdjChain, v: AdjChain, k: int, phi: str) -> str:
    if k % 2 == 0:
        return mate(C, phi, u.adjunctions[k], v.adjunctions[k])
    return mate(C, phi, v.adjunctions[k], u.adjunctions[k])


def chain_cell(C: FiniteTwoCategory, u: AdjChain, v: AdjChain, phi0: str) -> ChainTwoCell:
    """The unique cell u => v with first component φ_0."""
    comps = [phi0]
    for k in range(u.length):
        comps.append(_next_mate(C, u, v, k, comps[-1]))
    return ChainTwoCell(u, v, tuple(comps))


def validate_chain_cell(C: FiniteTwoCategory, cell: ChainTwoCell) -> ValidationReport:
    u, v = cell.source, cell.target
    report = ValidationReport(structure=cell.id)
    bound = report.check("cell.boundary", "components alternate between the chains")
    ok = len(cell.components) == u.length + 1 == v.length + 1
    bound.observe(ok, ("length", str(len(cell.components))))
    if not ok:
        return report
    for k, a in enumerate(cell.components):
        want = (u.arrows[k], v.arrows[k]) if k % 2 == 0 else (v.arrows[k], u.arrows[k])
        bound.observe((C.dom(a), C.cod(a)) == want, (str(k), a))
    if not bound.passed:
        return report
    mates = report.check("cell.mates", "each component is the mate of the previous one")
    for k in range(u.length):
        got = _next_mate(C, u, v, k, cell.components[k])
        mates.observe(got == cell.components[k + 1], (str(k + 1), cell.components[k + 1], got))
    return report


def compose_chain_cells(
    C: FiniteTwoCategory,
    mode: str,
    phi: ChainTwoCell,
    psi: Optional[ChainTwoCell] = None,
    left: Optional[AdjChain] = None,
    right: Optional[AdjChain] = None,
) -> ChainTwoCell:
    """
    vertical: φ then ψ, components (φ_0⊗ψ_0, ψ_1⊗φ_1, φ_2⊗ψ_2, ...).
    whisker: s φ r for chains s = left, r = right, components (s_0φ_0r_0, r_1φ_1s_1, ...).
    """
    n = len(phi.components)
    if mode == "vertical":
        if psi is None:
            raise ArgumentError("vertical composition needs two cells")
        if phi.target != psi.source:
            raise BoundaryError(f"{psi.id} does not start where {phi.id} ends")
        comps = tuple(
            C.vert(phi.components[k], psi.components[k]) if k % 2 == 0
            else C.vert(psi.components[k], phi.components[k])
            for k in range(n)
        )
        return ChainTwoCell(phi.source, psi.target, comps)
    if mode == "whisker":
        comps = []
        for k, a in enumerate(phi.components):
            outer = left.arrows[k] if left is not None else None
            inner = right.arrows[k] if right is not None else None
            if k % 2 == 1:
                outer, inner = inner, outer
            comps.append(C.whisker(a, left=(outer,) if outer else (), right=(inner,) if inner else ()))
        src, tgt = phi.source, phi.target
        if right is not None:
            src, tgt = compose_chains(C, right, src), compose_chains(C, right, tgt)
        if left is not None:
            src, tgt = compose_chains(C, src, left), compose_chains(C, tgt, left)
        return ChainTwoCell(src, tgt, tuple(comps))
    raise ArgumentError(f"mode must be 'vertical' or 'whisker', got {mode!r}")


@dataclass
class ChainLevel:
    """Adj_i(C) together with the chain and cell objects behind its ids."""
    length: int
    category: FiniteTwoCategory
    chains: Dict[str, AdjChain] = field(default_factory=dict)
    cells: Dict[str, ChainTwoCell] = field(default_factory=dict)


def adj_level(C: FiniteTwoCategory, length: int) -> ChainLevel:
    if length < 1:
        raise ArgumentError("chain levels start at length 1; level 0 is C itself")
    chains = {u.id: u for u in enumerate_chains(C, length)}
    cells: Dict[str, ChainTwoCell] = {}
    for u, v in product(list(chains.values()), repeat=2):
        if (C.src(u.arrows[0]), C.tgt(u.arrows[0])) != (C.src(v.arrows[0]), C.tgt(v.arrows[0])):
            continue
        for phi0 in C.cells(u.arrows[0], v.arrows[0]):
            cell = chain_cell(C, u, v, phi0)
            cells[cell.id] = cell

    def known_chain(u: AdjChain) -> str:
        if u.id not in chains:
            raise StructuralError(f"composite chain {u.id} is missing from Adj_{length}({C.name})")
        return u.id

    def known_cell(a: ChainTwoCell) -> str:
        if a.id not in cells:
            raise StructuralError(f"composite cell {a.id} is missing from Adj_{length}({C.name})")
        return a.id

    objects = C.objects
    category = FiniteTwoCategory.tabulate(
        f"Adj{length}({C.name})", objects,
        [(i, C.src(u.arrows[0]), C.tgt(u.arrows[0])) for i, u in chains.items()],
        [(i, a.source.id, a.target.id) for i, a in cells.items()],
        compose1=lambda g, f: known_chain(compose_chains(C, chains[f], chains[g])),
        vertical=lambda a, b: known_cell(compose_chain_cells(C, "vertical", cells[a], cells[b])),
        left=lambda s, a: known_cell(compose_chain_cells(C, "whisker", cells[a], left=chains[s])),
        right=lambda a, r: known_cell(compose_chain_cells(C, "whisker", cells[a], right=chains[r])),
        id1={x: identity_chain(C, x, length).id for x in objects},
        id2={i: chain_cell(C, u, u, C.identity_cell(u.arrows[0])).id for i, u in chains.items()},
    )
    logger.debug(f"{category.name}: {len(chains)} chains, {len(cells)} cells")
    return ChainLevel(length=length, category=category, chains=chains, cells=cells)


def truncation(C: FiniteTwoCategory, high: ChainLevel, low: Optional[ChainLevel]) -> StrictTwoFunctor:
    """Forget the last arrow and cell component; low=None lands in C itself."""
    one: Dict[str, str] = {}
    two: Dict[str, str] = {}
    k = high.length - 1
    for i, u in high.chains.items():
        one[i] = u.arrows[0] if low is None else AdjChain(u.arrows[:k + 1], u.adjunctions[:k]).id
    for i, a in high.cells.items():
        if low is None:
            two[i] = a.components[0]
        else:
            two[i] = ChainTwoCell(
                AdjChain(a.source.arrows[:k + 1], a.source.adjunctions[:k]),
                AdjChain(a.target.arrows[:k + 1], a.target.adjunctions[:k]),
                a.components[:k + 1],
            ).id
    target = C if low is None else low.category
    return StrictTwoFunctor(
        name=f"U[{high.category.name}->{target.name}]", source=high.category, target=target,
        object_map={x: x for x in C.objects}, one_cell_map=one, two_cell_map=two,
    )


def adj_sequence(C: FiniteTwoCategory, depth: int) -> Tuple[TwoFunctorSequence, List[ChainLevel]]:
    levels = [adj_level(C, k) for k in range(1, depth + 1)]
    links = [truncation(C, lvl, levels[n - 1] if n > 0 else None) for n, lvl in enumerate(levels)]
    seq = TwoFunctorSequence(
        name=f"Adj({C.name})", shape=FORGETFUL,
        levels=[C] + [lvl.category for lvl in levels], links=links,
    )
    return seq, levels


def build_Adj(
    C: FiniteTwoCategory,
    max_len: int,
    up_to: int,
    directions: Optional[Sequence[int]] = None,
    max_cells: int = 200_000,
) -> TruncatedMultipleCategory:
    report = validate_two_category(C)
    if not report.ok:
        raise RejectedInputError(f"{C.name} is not a valid 2-category", report)
    seq, _ = adj_sequence(C, max_len)
    M = build_GQ(seq, up_to, directions=directions, max_cells=max_cells)
    logger.info(f"{M.name}: chains up to length {max_len}, dimension {up_to}, {M.count()} cells")
    return M


def mate_extension(
    C: FiniteTwoCategory, r: str, s: str, u: AdjunctionData, v: AdjunctionData, phi: str
) -> str:
    """
    Complete φ: v_0 r => s u_0 to φ^•: r u_1 => v_1 s.

    η^v r u_1 ⊗ v_1 φ u_1 ⊗ v_1 s ε^u.
    """
    return paste(C, [
        term(v.unit, right=(r, u.right)),
        term(phi, left=(v.right,), right=(u.right,)),
        term(u.counit, left=(v.right, s)),
    ])


def mate_restriction(
    C: FiniteTwoCategory, r: str, s: str, u: AdjunctionData, v: AdjunctionData, theta: str
) -> str:
    """The inverse of mate_extension: θ: r u_1 => v_1 s to v_0 r => s u_0."""
    return paste(C, [
        term(u.unit, left=(v.left, r)),
        term(theta, left=(v.left,), right=(u.left,)),
        term(v.counit, right=(s, u.left)),
    ])


def check_mate_extensions(C: FiniteTwoCategory, chains: Sequence[AdjChain]) -> ValidationReport:
    """Every v_0 r => s u_0 over length-1 chains u, v extends to exactly one r u_1 => v_1 s."""
    report = ValidationReport(structure=f"mate-extension({C.name})")
    section = report.check("mate_extension.section", "restricting the extension gives back φ")
    unique = report.check("mate_extension.unique", "φ^• is the only cell restricting to φ")
    for u, v in product(list(chains), repeat=2):
        ua, va = u.adjunctions[0], v.adjunctions[0]
        for r in C.hom(C.src(ua.left), C.src(va.left)):
            for s in C.hom(C.tgt(ua.left), C.tgt(va.left)):
                for phi in C.cells(C.compose(va.left, r), C.compose(s, ua.left)):
                    ext = mate_extension(C, r, s, ua, va, phi)
                    section.observe(mate_restriction(C, r, s, ua, va, ext) == phi, (r, s, u.id, v.id, phi))
                    lifts = [
                        t for t in C.cells(C.compose(r, ua.right), C.compose(va.right, s))
                        if mate_restriction(C, r, s, ua, va, t) == phi
                    ]
                    unique.observe(lifts == [ext], (r, s, u.id, v.id, phi))
    return report


@dataclass
class BundleLevel:
    """Bundles of a fixed length as a 2-category, with componentwise operations."""
    length: int
    category: FiniteTwoCategory
    bundles: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    cells: Dict[str, Tuple[str, ...]] = field(default_factory=dict)


def bundle_id(arrows: Sequence[str]) -> str:
    return f"({join_ids(',', arrows)})"


def bundle_cell_id(cells: Sequence[str]) -> str:
    return f"[{join_ids(',', cells)}]"


def bundle_level(C: FiniteTwoCategory, length: int) -> BundleLevel:
    """Bundles of ``length`` parallel arrows; level 0 of a bundle sequence is C itself."""
    bundles: Dict[str, Tuple[str, ...]] = {}
    cells: Dict[str, Tuple[str, ...]] = {}
    ends: Dict[str, Tuple[str, str]] = {}
    for x, y in product(C.objects, repeat=2):
        for us in product(C.hom(x, y), repeat=length):
            bundles[bundle_id(us)] = us
            ends[bundle_id(us)] = (x, y)
    edges: List[Tuple[str, str, str]] = []
    for (bu, us), (bv, vs) in product(list(bundles.items()), repeat=2):
        if ends[bu] != ends[bv]:
            continue
        for cs in product(*(C.cells(a, b) for a, b in zip(us, vs))):
            cells[bundle_cell_id(cs)] = cs
            edges.append((bundle_cell_id(cs), bu, bv))

    category = FiniteTwoCategory.tabulate(
        f"Bnd{length}({C.name})", C.objects,
        [(b, ends[b][0], ends[b][1]) for b in bundles],
        edges,
        compose1=lambda g, f: bundle_id([C.compose(a, b) for a, b in zip(bundles[g], bundles[f])]),
        vertical=lambda a, b: bundle_cell_id([C.vert(p, q) for p, q in zip(cells[a], cells[b])]),
        left=lambda s, a: bundle_cell_id([C.lw(f, p) for f, p in zip(bundles[s], cells[a])]),
        right=lambda a, r: bundle_cell_id([C.rw(p, f) for p, f in zip(cells[a], bundles[r])]),
        id1={x: bundle_id([C.identity(x)] * length) for x in C.objects},
        id2={b: bundle_cell_id([C.identity_cell(f) for f in us]) for b, us in bundles.items()},
    )
    logger.debug(f"{category.name}: {len(bundles)} bundles, {len(cells)} cells")
    return BundleLevel(length=length, category=category, bundles=bundles, cells=cells)


def repeat_last(C: FiniteTwoCategory, low: Optional[BundleLevel], high: BundleLevel) -> StrictTwoFunctor:
    """U: C_i -> C_{i+1} repeating the last arrow or cell; low=None starts from C."""
    if low is None:
        one = {f: bundle_id((f,) * high.length) for f in C.one_cells}
        two = {a: bundle_cell_id((a,) * high.length) for a in C.two_cells}
        source = C
    else:
        one = {b: bundle_id(us + (us[-1],)) for b, us in low.bundles.items()}
        two = {c: bundle_cell_id(cs + (cs[-1],)) for c, cs in low.cells.items()}
        source = low.category
    return StrictTwoFunctor(
        name=f"U[{source.name}->{high.category.name}]", source=source, target=high.category,
        object_map={x: x for x in C.objects}, one_cell_map=one, two_cell_map=two,
    )


def bnd_sequence(C: FiniteTwoCategory, depth: int) -> Tuple[TwoFunctorSequence, List[BundleLevel]]:
    levels = [bundle_level(C, k + 1) for k in range(1, depth + 1)]
    links = [repeat_last(C, levels[n - 1] if n > 0 else None, lvl) for n, lvl in enumerate(levels)]
    seq = TwoFunctorSequence(
        name=f"Bnd({C.name})", shape=STRUCTURAL,
        levels=[C] + [lvl.category for lvl in levels], links=links,
    )
    return seq, levels


def build_Bnd(
    C: FiniteTwoCategory,
    max_len: int,
    up_to: int,
    directions: Optional[Sequence[int]] = None,
    max_cells: int = 200_000,
) -> TruncatedMultipleCategory:
    report = validate_two_category(C)
    if not report.ok:
        raise RejectedInputError(f"{C.name} is not a valid 2-category", report)
    seq, _ = bnd_sequence(C, max_len)
    M = build_GQ(seq, up_to, directions=directions, max_cells=max_cells)
    logger.info(f"{M.name}: bundles up to length {max_len + 1}, dimension {up_to}, {M.count()} cells")
    return M
