"""
Multi-indices, truncated multiple categories, truncation and coskeleton.

Cells are string ids; every cell belongs to exactly one multi-index. Faces are
keyed ``(cell, j, alpha)`` with alpha in {"-", "+"}, degeneracies ``(cell, j)``
(from index i|j to i) and compositions ``(i, x, y)`` for i-consecutive pairs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .logging_config import get_logger
from .models import (
    ArgumentError,
    BudgetExceededError,
    RejectedInputError,
    StructuralError,
    ValidationReport,
)

logger = get_logger("multicat")

SIGNS = ("-", "+")
FaceKey = Tuple[str, int, str]
DegKey = Tuple[str, int]
CompKey = Tuple[int, str, str]


@dataclass(frozen=True, order=True)
class MultiIndex:
    elements: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        els = tuple(self.elements)
        if any((not isinstance(e, int)) or e < 0 for e in els):
            raise ArgumentError(f"multi-index entries must be naturals: {els}")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ArgumentError(f"multi-index must be strictly increasing: {els}")
        object.__setattr__(self, "elements", els)

    @staticmethod
    def of(*xs: int) -> "MultiIndex":
        if len(set(xs)) != len(xs):
            raise ArgumentError(f"repeated direction in {xs}")
        return MultiIndex(tuple(sorted(xs)))

    @staticmethod
    def parse(text: str) -> "MultiIndex":
        text = text.strip()
        if text in ("", "e"):
            return MultiIndex(())
        return MultiIndex.of(*(int(p) for p in text.split(".")))

    @property
    def dimension(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return len(self.elements) - (1 if 0 in self.elements else 0)

    def adjoin(self, j: int) -> "MultiIndex":
        if j in self.elements:
            raise ArgumentError(f"{j} already in {self}")
        return MultiIndex.of(*self.elements, j)

    def remove(self, j: int) -> "MultiIndex":
        if j not in self.elements:
            raise ArgumentError(f"{j} not in {self}")
        return MultiIndex(tuple(e for e in self.elements if e != j))

    @property
    def label(self) -> str:
        return ".".join(str(e) for e in self.elements) or "e"

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, j: object) -> bool:
        return j in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


def multi_index_ops(i: MultiIndex, j: int, op: str) -> MultiIndex:
    if op == "adjoin":
        return i.adjoin(j)
    if op == "remove":
        return i.remove(j)
    raise ArgumentError(f"unknown multi-index operation {op!r}")


def indices_up_to(directions: Sequence[int], n: int) -> List[MultiIndex]:
    dirs = sorted(set(directions))
    out: List[MultiIndex] = []
    for k in range(0, min(n, len(dirs)) + 1):
        out.extend(MultiIndex(c) for c in combinations(dirs, k))
    return out


def cell_id(idx: MultiIndex, payload: str) -> str:
    return f"{idx.label}:{payload}"


# Separators of compound ids; a component carrying one gets it backslash-escaped.
RESERVED = frozenset("\\|,;/()[]")


def quote_id(s: str) -> str:
    return "".join("\\" + ch if ch in RESERVED else ch for ch in s)


def join_ids(sep: str, parts: Sequence[str]) -> str:
    return sep.join(quote_id(p) for p in parts)


def split_ids(text: str, sep: str) -> List[str]:
    """Inverse of join_ids: split on unescaped sep and unquote each part."""
    parts: List[str] = []
    buf: List[str] = []
    escaped = False
    for ch in text:
        if escaped:
            buf.append(ch)
            escaped = False
        elif ch == "\\":
            escaped = True
        elif ch == sep:
            parts.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
    if escaped:
        raise ArgumentError(f"dangling escape in {text!r}")
    parts.append("".join(buf))
    return parts


@dataclass
class TruncatedMultipleCategory:
    name: str
    dim_bound: int
    directions: Tuple[int, ...]
    cells: Dict[MultiIndex, Tuple[str, ...]]
    faces: Dict[FaceKey, str]
    degeneracies: Dict[DegKey, str]
    comps: Dict[CompKey, str]
    strict_directions: Optional[Tuple[int, ...]] = None  # None: every direction is strict

    index_of: Dict[str, MultiIndex] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        self.directions = tuple(sorted(set(self.directions)))
        self.index_of = {}
        for idx, cs in self.cells.items():
            for c in cs:
                if c in self.index_of:
                    raise StructuralError(f"{self.name}: cell {c} declared in two indices")
                self.index_of[c] = idx

    # -- lookups

    def indices(self) -> List[MultiIndex]:
        return indices_up_to(self.directions, self.dim_bound)

    def of(self, idx: MultiIndex) -> Tuple[str, ...]:
        return self.cells.get(idx, ())

    def index(self, x: str) -> MultiIndex:
        try:
            return self.index_of[x]
        except KeyError:
            raise StructuralError(f"{self.name}: unknown cell {x!r}") from None

    def face(self, x: str, j: int, alpha: str) -> str:
        try:
            return self.faces[(x, j, alpha)]
        except KeyError:
            raise StructuralError(f"{self.name}: no face ({x}, {j}, {alpha})") from None

    def degen(self, x: str, j: int) -> str:
        return self.degeneracies[(x, j)]

    def comp(self, i: int, x: str, y: str) -> str:
        return self.comps[(i, x, y)]

    def boundary(self, x: str) -> Tuple[str, ...]:
        idx = self.index(x)
        return tuple(self.faces[(x, j, a)] for j in idx for a in SIGNS)

    def is_strict(self, i: int) -> bool:
        return i == 0 or self.strict_directions is None or i in self.strict_directions

    def count(self, dim: Optional[int] = None) -> int:
        return sum(len(cs) for idx, cs in self.cells.items() if dim is None or idx.dimension == dim)

    def counts_by_index(self) -> Dict[str, int]:
        return {idx.label: len(self.of(idx)) for idx in self.indices()}


def _check_declared(M: TruncatedMultipleCategory) -> None:
    for idx, cs in M.cells.items():
        if idx.dimension > M.dim_bound or any(j not in M.directions for j in idx):
            raise StructuralError(f"{M.name}: index {idx} lies outside the declared bound")
        for x in cs:
            for j in idx:
                for a in SIGNS:
                    f = M.faces.get((x, j, a))
                    if f is None or f not in M.index_of:
                        raise StructuralError(f"{M.name}: face ({x}, {j}, {a}) is missing or dangling")
                    if M.index_of[f] != idx.remove(j):
                        raise StructuralError(f"{M.name}: face ({x}, {j}, {a}) = {f} has the wrong index")
    for (x, j), y in M.degeneracies.items():
        if x not in M.index_of or y not in M.index_of:
            raise StructuralError(f"{M.name}: degeneracy ({x}, {j}) -> {y} has a dangling id")
    for (i, x, y), z in M.comps.items():
        if x not in M.index_of or y not in M.index_of or z not in M.index_of:
            raise StructuralError(f"{M.name}: composition ({i}, {x}, {y}) -> {z} has a dangling id")


def _starts(M: TruncatedMultipleCategory, idx: MultiIndex, i: int) -> Dict[str, List[str]]:
    out: Dict[str, List[str]] = {}
    for y in M.of(idx):
        out.setdefault(M.faces[(y, i, "-")], []).append(y)
    return out


def consecutive_pairs(M: TruncatedMultipleCategory, idx: MultiIndex, i: int) -> Iterator[Tuple[str, str]]:
    starts = _starts(M, idx, i)
    for x in M.of(idx):
        for y in starts.get(M.faces[(x, i, "+")], ()):
            yield x, y


def validate_multiple_category(M: TruncatedMultipleCategory) -> ValidationReport:
    """Check the multiple relations, boundary laws, categorical laws and interchange exhaustively."""
    _check_declared(M)
    report = ValidationReport(structure=M.name)
    faces, degs, comps = M.faces, M.degeneracies, M.comps
    indices = M.indices()

    fc = report.check("faces.commute", "faces in distinct directions commute")
    for idx in indices:
        for i, j in combinations(tuple(idx), 2):
            for x in M.of(idx):
                for a in SIGNS:
                    for b in SIGNS:
                        lhs = faces[(faces[(x, j, b)], i, a)]
                        rhs = faces[(faces[(x, i, a)], j, b)]
                        fc.observe(lhs == rhs, (x, i, a, j, b))

    dt = report.check("degeneracies.total", "e_j is defined on every cell of i|j")
    df = report.check("degeneracies.faces", "faces of degenerate cells")
    for idx in indices:
        for j in idx:
            sub = idx.remove(j)
            for c in M.of(sub):
                e = degs.get((c, j))
                if not dt.observe(e is not None and M.index_of.get(e) == idx, (c, j)):
                    continue
                for a in SIGNS:
                    df.observe(faces[(e, j, a)] == c, (c, j, a))
                    for i in sub:
                        want = degs.get((faces[(c, i, a)], j))
                        df.observe(faces[(e, i, a)] == want, (c, j, i, a))
    dc = report.check("degeneracies.commute", "e_i e_j = e_j e_i")
    for idx in indices:
        for i, j in combinations(tuple(idx), 2):
            for c in M.of(idx.remove(i).remove(j)):
                ij = degs.get((degs.get((c, j), ""), i))
                ji = degs.get((degs.get((c, i), ""), j))
                if ij is not None and ji is not None:
                    dc.observe(ij == ji, (c, i, j))

    ct = report.check("composition.total", "i-consecutive cells compose")
    cb = report.check("composition.boundary", "boundary laws of x +_i y")
    for idx in indices:
        for i in idx:
            for x, y in consecutive_pairs(M, idx, i):
                z = comps.get((i, x, y))
                if not ct.observe(z is not None and M.index_of.get(z) == idx, (i, x, y)):
                    continue
                cb.observe(faces[(z, i, "-")] == faces[(x, i, "-")], (i, x, y, "-"))
                cb.observe(faces[(z, i, "+")] == faces[(y, i, "+")], (i, x, y, "+"))
                for j in idx:
                    if j == i:
                        continue
                    for a in SIGNS:
                        want = comps.get((i, faces[(x, j, a)], faces[(y, j, a)]))
                        cb.observe(faces[(z, j, a)] == want, (i, x, y, j, a))
    if not (ct.passed and dt.passed):
        logger.info(f"{M.name}: composition or degeneracy tables incomplete, skipping categorical sweeps")
        return report

    cu = report.check("composition.unit", "e_i faces are units for +_i")
    ca = report.check("composition.associativity", "(x+y)+z = x+(y+z)")
    cd = report.check("composition.degeneracy", "e_j(x +_i y) = e_j x +_i e_j y")
    for idx in indices:
        for i in idx:
            if not M.is_strict(i):
                continue
            starts = _starts(M, idx, i)
            for x in M.of(idx):
                lu = degs[(faces[(x, i, "-")], i)]
                ru = degs[(faces[(x, i, "+")], i)]
                cu.observe(comps.get((i, lu, x)) == x, (i, lu, x))
                cu.observe(comps.get((i, x, ru)) == x, (i, x, ru))
                for y in starts.get(faces[(x, i, "+")], ()):
                    xy = comps[(i, x, y)]
                    for z in starts.get(faces[(y, i, "+")], ()):
                        lhs = comps.get((i, xy, z))
                        rhs = comps.get((i, x, comps[(i, y, z)]))
                        ca.observe(lhs == rhs, (i, x, y, z))
            for j in M.directions:
                if j in idx or idx.dimension + 1 > M.dim_bound:
                    continue
                for x, y in consecutive_pairs(M, idx, i):
                    lhs = degs.get((comps[(i, x, y)], j))
                    rhs = comps.get((i, degs.get((x, j), ""), degs.get((y, j), "")))
                    cd.observe(lhs == rhs, (i, j, x, y))

    ic = report.check("interchange", "(x+_i y)+_j(z+_i w) = (x+_j z)+_i(y+_j w)")
    for idx in indices:
        for i, j in combinations(tuple(idx), 2):
            if not (M.is_strict(i) and M.is_strict(j)):
                continue
            si = _starts(M, idx, i)
            sj = _starts(M, idx, j)
            for x in M.of(idx):
                for y in si.get(faces[(x, i, "+")], ()):
                    for z in sj.get(faces[(x, j, "+")], ()):
                        for w in si.get(faces[(z, i, "+")], ()):
                            if faces[(y, j, "+")] != faces[(w, j, "-")]:
                                continue
                            lhs = comps.get((j, comps[(i, x, y)], comps[(i, z, w)]))
                            rhs = comps.get((i, comps[(j, x, z)], comps[(j, y, w)]))
                            ic.observe(lhs == rhs, (i, j, x, y, z, w))
    logger.debug(f"validate_multiple_category({M.name}): {report.summary()}")
    return report


def terminal_multiple_category(n: int, directions: Sequence[int]) -> TruncatedMultipleCategory:
    idxs = indices_up_to(directions, n)
    cells = {idx: (cell_id(idx, "*"),) for idx in idxs}
    faces: Dict[FaceKey, str] = {}
    degs: Dict[DegKey, str] = {}
    comps: Dict[CompKey, str] = {}
    for idx in idxs:
        x = cells[idx][0]
        for j in idx:
            for a in SIGNS:
                faces[(x, j, a)] = cells[idx.remove(j)][0]
            degs[(cells[idx.remove(j)][0], j)] = x
            comps[(j, x, x)] = x
    return TruncatedMultipleCategory(
        name=f"terminal{n}", dim_bound=n, directions=tuple(directions),
        cells=cells, faces=faces, degeneracies=degs, comps=comps,
    )


def dtrc(M: TruncatedMultipleCategory, n: int) -> TruncatedMultipleCategory:
    if n > M.dim_bound or n < 0:
        raise ArgumentError(f"cannot truncate {M.name} (bound {M.dim_bound}) at {n}")
    cells = {idx: cs for idx, cs in M.cells.items() if idx.dimension <= n}
    keep = {c for cs in cells.values() for c in cs}
    return TruncatedMultipleCategory(
        name=f"trc{n}({M.name})", dim_bound=n, directions=M.directions,
        cells=cells,
        faces={k: v for k, v in M.faces.items() if k[0] in keep},
        degeneracies={k: v for k, v in M.degeneracies.items() if v in keep},
        comps={k: v for k, v in M.comps.items() if v in keep},
        strict_directions=M.strict_directions,
    )


@dataclass(frozen=True)
class FaceConsistentFamily:
    index: MultiIndex
    members: Tuple[str, ...]  # x^-_i, x^+_i for i in index order

    def slot(self, i: int, alpha: str) -> str:
        return self.members[2 * self.index.elements.index(i) + SIGNS.index(alpha)]


class _FaceIndex:
    """Cells of one index grouped by a single face, for candidate filtering."""

    def __init__(self, M: TruncatedMultipleCategory, idx: MultiIndex):
        self.all = tuple(sorted(M.of(idx)))
        self.by: Dict[Tuple[int, str, str], List[str]] = {}
        for c in self.all:
            for j in idx:
                for a in SIGNS:
                    self.by.setdefault((j, a, M.faces[(c, j, a)]), []).append(c)


def face_consistent_families(
    M: TruncatedMultipleCategory, idx: MultiIndex, limit: Optional[int] = None
) -> Iterator[Tuple[str, ...]]:
    """All boundaries (x^-_i, x^+_i)_i over cells of lower index with ∂^β_j x^α_i = ∂^α_i x^β_j."""
    slots = [(i, a) for i in idx for a in SIGNS]
    fidx = {i: _FaceIndex(M, idx.remove(i)) for i in idx}
    faces = M.faces
    chosen: List[str] = []
    produced = 0

    def candidates(k: int) -> Sequence[str]:
        i, a = slots[k]
        cons = []
        for m in range(k):
            j, b = slots[m]
            if j != i:
                # ∂^b_j x^a_i must equal ∂^a_i x^b_j
                cons.append((j, b, faces[(chosen[m], i, a)]))
        if not cons:
            return fidx[i].all
        first = fidx[i].by.get(cons[0], ())
        if len(cons) == 1:
            return first
        return [c for c in first if all(faces[(c, j, b)] == v for j, b, v in cons[1:])]

    def rec(k: int) -> Iterator[Tuple[str, ...]]:
        nonlocal produced
        if k == len(slots):
            produced += 1
            yield tuple(chosen)
            return
        for c in candidates(k):
            chosen.append(c)
            yield from rec(k + 1)
            chosen.pop()
            if limit is not None and produced >= limit:
                return

    yield from rec(0)


def count_families(M: TruncatedMultipleCategory, idx: MultiIndex, cap: Optional[int] = None) -> int:
    n = 0
    for _ in face_consistent_families(M, idx, limit=cap):
        n += 1
    return n


Acceptor = Callable[[MultiIndex, Tuple[str, ...]], bool]


def extend_coskeletal(
    M: TruncatedMultipleCategory,
    up_to: int,
    accept: Optional[Acceptor] = None,
    name: Optional[str] = None,
    max_cells: int = 200_000,
) -> TruncatedMultipleCategory:
    """
    Add every dimension from M.dim_bound + 1 to up_to as face-consistent families.

    Args:
        M: the truncated structure to extend
        up_to: new dimension bound
        accept: optional filter on (index, family); None keeps every family
        name: name of the result
        max_cells: per-index enumeration budget

    Returns:
        A new structure; faces of a new cell are its family, degeneracies and
        compositions are the families forced by the boundary laws.
    """
    if up_to < M.dim_bound:
        raise ArgumentError(f"cannot extend {M.name} from {M.dim_bound} down to {up_to}")
    cells = dict(M.cells)
    faces = dict(M.faces)
    degs = dict(M.degeneracies)
    comps = dict(M.comps)
    out = TruncatedMultipleCategory(
        name=name or f"cosk({M.name},{up_to})", dim_bound=up_to, directions=M.directions,
        cells=cells, faces=faces, degeneracies=degs, comps=comps,
        strict_directions=M.strict_directions,
    )
    for k in range(M.dim_bound + 1, up_to + 1):
        new_idx = [idx for idx in indices_up_to(M.directions, k) if idx.dimension == k]
        by_boundary: Dict[Tuple[str, ...], str] = {}
        for idx in new_idx:
            ids: List[str] = []
            for fam in face_consistent_families(out, idx):
                if accept is not None and not accept(idx, fam):
                    continue
                cid = cell_id(idx, f"#{len(ids)}")
                ids.append(cid)
                if len(ids) > max_cells:
                    raise BudgetExceededError(
                        f"{out.name}: more than {max_cells} cells at index {idx}; raise MCAT_MAX_CELLS"
                    )
                by_boundary[fam] = cid
                for n_slot, (j, a) in enumerate((j, a) for j in idx for a in SIGNS):
                    faces[(cid, j, a)] = fam[n_slot]
            cells[idx] = tuple(ids)
            for c in ids:
                out.index_of[c] = idx
            logger.debug(f"{out.name}: {len(ids)} cells at index {idx.label}")
        for idx in new_idx:
            for j in idx:
                for c in out.of(idx.remove(j)):
                    fam = []
                    for i in idx:
                        for a in SIGNS:
                            fam.append(c if i == j else degs.get((faces[(c, i, a)], j), ""))
                    e = by_boundary.get(tuple(fam))
                    if e is not None:
                        degs[(c, j)] = e
            for i in idx:
                for x, y in consecutive_pairs(out, idx, i):
                    fam = []
                    ok = True
                    for j in idx:
                        for a in SIGNS:
                            if j == i:
                                fam.append(faces[(x, i, "-")] if a == "-" else faces[(y, i, "+")])
                            else:
                                z = comps.get((i, faces[(x, j, a)], faces[(y, j, a)]))
                                ok = ok and z is not None
                                fam.append(z or "")
                    z = by_boundary.get(tuple(fam)) if ok else None
                    if z is not None:
                        comps[(i, x, y)] = z
    logger.info(f"{out.name}: extended to dimension {up_to}, {out.count()} cells")
    return out


def dcosk(
    A: TruncatedMultipleCategory, n: int, up_to: int, validate: bool = True, max_cells: int = 200_000
) -> TruncatedMultipleCategory:
    if A.dim_bound != n:
        raise ArgumentError(f"{A.name} has bound {A.dim_bound}, expected {n}")
    if up_to < n:
        raise ArgumentError(f"coskeleton bound {up_to} is below {n}")
    if validate:
        report = validate_multiple_category(A)
        if not report.ok:
            raise RejectedInputError(f"{A.name} fails validation", report)
    return extend_coskeletal(A, up_to, name=f"cosk{n}({A.name})", max_cells=max_cells)


@dataclass
class CoskeletalResult:
    dimension: int
    dim_bound: int
    witness: Optional[Tuple[str, ...]] = None  # why dimension - 1 does not reconstruct

    @property
    def exact(self) -> bool:
        return self.dimension < self.dim_bound

    def to_dict(self) -> Dict[str, object]:
        return {
            "coskeletal_dimension": self.dimension,
            "dim_bound": self.dim_bound,
            "within_tested_bound": True,
            "exact": self.exact,
            "witness": list(self.witness) if self.witness else None,
        }


def reconstruction_witness(M: TruncatedMultipleCategory, n: int) -> Optional[Tuple[str, ...]]:
    """
    None when M ≅ dcosk(dtrc(M, n), n, M.dim_bound) by boundary fingerprints.

    Otherwise a witness: ("collision", index, x, y) for two cells with the same
    boundary, or ("missing", index, *family) for a boundary with no filler.
    """
    for k in range(n + 1, M.dim_bound + 1):
        for idx in (i for i in M.indices() if i.dimension == k):
            seen: Dict[Tuple[str, ...], str] = {}
            for x in sorted(M.of(idx)):
                b = M.boundary(x)
                if b in seen:
                    return ("collision", idx.label, seen[b], x)
                seen[b] = x
            if count_families(M, idx, cap=len(seen) + 1) != len(seen):
                for fam in face_consistent_families(M, idx):
                    if fam not in seen:
                        return ("missing", idx.label) + fam
    return None


def coskeletal_dimension(M: TruncatedMultipleCategory) -> CoskeletalResult:
    last: Optional[Tuple[str, ...]] = None
    for n in range(0, M.dim_bound + 1):
        w = reconstruction_witness(M, n)
        if w is None:
            logger.info(f"{M.name}: coskeletal dimension {n} within bound {M.dim_bound}")
            return CoskeletalResult(dimension=n, dim_bound=M.dim_bound, witness=last)
        last = w
    raise AssertionError("reconstruction at the dimension bound is vacuous")


@dataclass
class MultipleFunctorData:
    name: str
    source: TruncatedMultipleCategory
    target: TruncatedMultipleCategory
    cell_map: Dict[str, str]


def validate_multiple_functor(U: MultipleFunctorData) -> ValidationReport:
    S, T = U.source, U.target
    report = ValidationReport(structure=U.name)
    tot = report.check("functor.total", "every cell has an image of the same index")
    for idx in S.indices():
        for x in S.of(idx):
            y = U.cell_map.get(x)
            tot.observe(y is not None and T.index_of.get(y) == idx, (x,))
    if not tot.passed:
        return report
    fc = report.check("functor.faces", "U commutes with faces")
    for (x, j, a), f in sorted(S.faces.items()):
        fc.observe(T.faces.get((U.cell_map[x], j, a)) == U.cell_map[f], (x, j, a))
    dg = report.check("functor.degeneracies", "U commutes with degeneracies")
    for (x, j), e in sorted(S.degeneracies.items()):
        dg.observe(T.degeneracies.get((U.cell_map[x], j)) == U.cell_map[e], (x, j))
    cp = report.check("functor.compositions", "U preserves compositions")
    for (i, x, y), z in sorted(S.comps.items()):
        cp.observe(T.comps.get((i, U.cell_map[x], U.cell_map[y])) == U.cell_map[z], (i, x, y))
    return report


def is_isomorphism(U: MultipleFunctorData) -> ValidationReport:
    report = validate_multiple_functor(U)
    bij = report.check("functor.bijective", "cell map is a bijection per index")
    for idx in U.source.indices():
        image = sorted(U.cell_map.get(x, "") for x in U.source.of(idx))
        bij.observe(image == sorted(U.target.of(idx)), (idx.label,))
    return report


def relabel_directions(M: TruncatedMultipleCategory, mapping: Mapping[int, int]) -> TruncatedMultipleCategory:
    """Rename directions by an injective mapping; cell ids are re-anchored to the new indices."""
    if len(set(mapping.values())) != len(mapping) or set(mapping) != set(M.directions):
        raise ArgumentError("relabeling must be a bijection on the directions")

    def move(idx: MultiIndex) -> MultiIndex:
        return MultiIndex.of(*(mapping[j] for j in idx))

    rename: Dict[str, str] = {}
    cells: Dict[MultiIndex, Tuple[str, ...]] = {}
    for idx, cs in M.cells.items():
        new = move(idx)
        ids = []
        for c in cs:
            rename[c] = f"{new.label}|{c}"
            ids.append(rename[c])
        cells[new] = tuple(ids)
    return TruncatedMultipleCategory(
        name=f"relabel({M.name})", dim_bound=M.dim_bound,
        directions=tuple(mapping[j] for j in M.directions),
        cells=cells,
        faces={(rename[x], mapping[j], a): rename[f] for (x, j, a), f in M.faces.items()},
        degeneracies={(rename[x], mapping[j]): rename[e] for (x, j), e in M.degeneracies.items()},
        comps={(mapping[i], rename[x], rename[y]): rename[z] for (i, x, y), z in M.comps.items()},
        strict_directions=None if M.strict_directions is None
        else tuple(mapping[j] for j in M.strict_directions),
    )
