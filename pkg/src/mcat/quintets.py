"""
Q(C): the multiple category of higher quintets over a 2-category.

An ab-cell (a < b) is a quintet (r, s, u, v; φ: vr => su) with r, s a-cells and
u, v b-cells, so that ∂^-_a = u, ∂^+_a = v, ∂^-_b = r, ∂^+_b = s. Cubes are the
face-consistent sextuples of quintets whose two pastings agree; everything
above dimension 3 is coskeletal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .core2cat import FiniteTwoCategory, paste, term, validate_two_category
from .logging_config import get_logger
from .models import ArgumentError, BoundaryError, RejectedInputError
from .multicat import (
    CompKey,
    DegKey,
    FaceKey,
    MultiIndex,
    MultipleFunctorData,
    TruncatedMultipleCategory,
    cell_id,
    extend_coskeletal,
    join_ids,
    split_ids,
    validate_multiple_functor,
)

logger = get_logger("quintets")


@dataclass(frozen=True)
class Quintet:
    r: str
    s: str
    u: str
    v: str
    phi: str

    @property
    def payload(self) -> str:
        return "<" + join_ids("|", (self.r, self.s, self.u, self.v, self.phi)) + ">"


def decode_quintet(cid: str) -> Quintet:
    body = cid.split(":", 1)[1]
    if not (body.startswith("<") and body.endswith(">")):
        raise ArgumentError(f"{cid} is not a quintet cell")
    parts = split_ids(body[1:-1], "|")
    if len(parts) != 5:
        raise ArgumentError(f"{cid} is not a quintet cell")
    return Quintet(*parts)


def is_quintet(C: FiniteTwoCategory, q: Quintet) -> bool:
    try:
        return C.dom(q.phi) == C.compose(q.v, q.r) and C.cod(q.phi) == C.compose(q.s, q.u)
    except BoundaryError:
        return False


@dataclass(frozen=True)
class QuintetCube:
    """Faces: phi/psi = ∂^∓_k (ij), pi/rho = ∂^∓_j (ik), omega/zeta = ∂^∓_i (jk)."""
    phi: Quintet
    psi: Quintet
    pi: Quintet
    rho: Quintet
    omega: Quintet
    zeta: Quintet

    def skeleton_mismatch(self) -> Optional[str]:
        p, q = self.phi, self.psi
        pairs = (
            ("pi.r", self.pi.r, p.r), ("pi.s", self.pi.s, q.r),
            ("rho.r", self.rho.r, p.s), ("rho.s", self.rho.s, q.s),
            ("omega.r", self.omega.r, p.u), ("omega.s", self.omega.s, q.u),
            ("zeta.r", self.zeta.r, p.v), ("zeta.s", self.zeta.s, q.v),
            ("omega.u", self.omega.u, self.pi.u), ("omega.v", self.omega.v, self.rho.u),
            ("zeta.u", self.zeta.u, self.pi.v), ("zeta.v", self.zeta.v, self.rho.v),
        )
        for name, got, want in pairs:
            if got != want:
                return f"{name}={got} but expected {want}"
        return None


def cube_sides(C: FiniteTwoCategory, cube: QuintetCube) -> Tuple[str, str]:
    """Both pastings y'φ ⊗ ρu ⊗ s'ω and ζr ⊗ v'π ⊗ ψx."""
    p, q = cube.phi, cube.psi
    x, y2 = cube.pi.u, cube.rho.v
    lhs = paste(C, [term(p.phi, left=(y2,)), term(cube.rho.phi, right=(p.u,)), term(cube.omega.phi, left=(q.s,))])
    rhs = paste(C, [term(cube.zeta.phi, right=(p.r,)), term(cube.pi.phi, left=(q.v,)), term(q.phi, right=(x,))])
    return lhs, rhs


def check_cube(C: FiniteTwoCategory, cube: QuintetCube) -> Tuple[bool, Tuple[str, ...]]:
    bad = cube.skeleton_mismatch()
    if bad:
        raise ArgumentError(f"cube skeleton does not match: {bad}")
    lhs, rhs = cube_sides(C, cube)
    return lhs == rhs, (lhs, rhs)


def compose_quintets(C: FiniteTwoCategory, direction: str, q1: Quintet, q2: Quintet) -> Quintet:
    """
    direction "i" glues along the b-cells (q1.v = q2.u), "j" along the a-cells (q1.s = q2.r).
    """
    if direction == "i":
        if q1.v != q2.u:
            raise BoundaryError(f"i-composition needs {q1.v} = {q2.u}")
        phi = paste(C, [term(q2.phi, right=(q1.r,)), term(q1.phi, left=(q2.s,))])
        return Quintet(C.compose(q2.r, q1.r), C.compose(q2.s, q1.s), q1.u, q2.v, phi)
    if direction == "j":
        if q1.s != q2.r:
            raise BoundaryError(f"j-composition needs {q1.s} = {q2.r}")
        phi = paste(C, [term(q1.phi, left=(q2.v,)), term(q2.phi, right=(q1.u,))])
        return Quintet(q1.r, q2.s, C.compose(q2.u, q1.u), C.compose(q2.v, q1.v), phi)
    raise ArgumentError(f"direction must be 'i' or 'j', got {direction!r}")


def identity_quintet(C: FiniteTwoCategory, f: str, direction: str) -> Quintet:
    """Unit for composition in the given direction on the edge f."""
    a, b = C.identity(C.src(f)), C.identity(C.tgt(f))
    if direction == "i":  # f is a b-cell
        return Quintet(a, b, f, f, C.identity_cell(f))
    if direction == "j":  # f is an a-cell
        return Quintet(f, f, a, b, C.identity_cell(f))
    raise ArgumentError(f"direction must be 'i' or 'j', got {direction!r}")


def enumerate_quintets(C: FiniteTwoCategory) -> List[Quintet]:
    out: List[Quintet] = []
    ones = C.one_cells_sorted()
    for r in ones:
        for u in ones:
            if C.src(r) != C.src(u):
                continue
            for v in C.one_cells_sorted():
                if C.src(v) != C.tgt(r):
                    continue
                vr = C.compose(v, r)
                for s in C.hom(C.tgt(u), C.tgt(v)):
                    for phi in C.cells(vr, C.compose(s, u)):
                        out.append(Quintet(r, s, u, v, phi))
    return out


def default_directions(up_to: int, count: int = 3) -> Tuple[int, ...]:
    return tuple(range(max(count, up_to)))


def build_Q(
    C: FiniteTwoCategory,
    up_to: int,
    directions: Optional[Sequence[int]] = None,
    validate: bool = True,
    max_cells: int = 200_000,
) -> TruncatedMultipleCategory:
    if up_to < 0:
        raise ArgumentError("dimension bound must be >= 0")
    if validate:
        report = validate_two_category(C)
        if not report.ok:
            raise RejectedInputError(f"{C.name} is not a valid 2-category", report)
    dirs = tuple(sorted(directions)) if directions is not None else default_directions(up_to)
    cells: Dict[MultiIndex, Tuple[str, ...]] = {}
    faces: Dict[FaceKey, str] = {}
    degs: Dict[DegKey, str] = {}
    comps: Dict[CompKey, str] = {}
    e = MultiIndex()
    obj = {x: cell_id(e, x) for x in C.objects}
    cells[e] = tuple(obj[x] for x in C.objects)

    def one(a: int, f: str) -> str:
        return cell_id(MultiIndex.of(a), f)

    if up_to >= 1:
        for a in dirs:
            ia = MultiIndex.of(a)
            cells[ia] = tuple(one(a, f) for f in C.one_cells_sorted())
            for f in C.one_cells_sorted():
                faces[(one(a, f), a, "-")] = obj[C.src(f)]
                faces[(one(a, f), a, "+")] = obj[C.tgt(f)]
            for x in C.objects:
                degs[(obj[x], a)] = one(a, C.identity(x))
            for (g, f), h in C.comp1.items():
                comps[(a, one(a, f), one(a, g))] = one(a, h)

    if up_to >= 2:
        quintets = enumerate_quintets(C)
        logger.debug(f"Q({C.name}): {len(quintets)} quintets per 2-index")
        for ai, a in enumerate(dirs):
            for b in dirs[ai + 1:]:
                iab = MultiIndex.of(a, b)

                def q(qq: Quintet) -> str:
                    return cell_id(iab, qq.payload)

                ids = []
                for qq in quintets:
                    cid = q(qq)
                    ids.append(cid)
                    faces[(cid, a, "-")] = one(b, qq.u)
                    faces[(cid, a, "+")] = one(b, qq.v)
                    faces[(cid, b, "-")] = one(a, qq.r)
                    faces[(cid, b, "+")] = one(a, qq.s)
                cells[iab] = tuple(ids)
                for f in C.one_cells_sorted():
                    degs[(one(a, f), b)] = q(identity_quintet(C, f, "j"))
                    degs[(one(b, f), a)] = q(identity_quintet(C, f, "i"))
                by_u: Dict[str, List[Quintet]] = {}
                by_r: Dict[str, List[Quintet]] = {}
                for qq in quintets:
                    by_u.setdefault(qq.u, []).append(qq)
                    by_r.setdefault(qq.r, []).append(qq)
                for q1 in quintets:
                    for q2 in by_u.get(q1.v, ()):
                        comps[(a, q(q1), q(q2))] = q(compose_quintets(C, "i", q1, q2))
                    for q2 in by_r.get(q1.s, ()):
                        comps[(b, q(q1), q(q2))] = q(compose_quintets(C, "j", q1, q2))

    base = TruncatedMultipleCategory(
        name=f"Q({C.name})", dim_bound=min(up_to, 2), directions=dirs,
        cells=cells, faces=faces, degeneracies=degs, comps=comps,
    )
    if up_to <= 2:
        return base

    def commutes(idx: MultiIndex, fam: Tuple[str, ...]) -> bool:
        omega, zeta, pi, rho, phi, psi = (decode_quintet(c) for c in fam)
        ok, _ = check_cube(C, QuintetCube(phi, psi, pi, rho, omega, zeta))
        return ok

    cubes = extend_coskeletal(base, 3, accept=commutes, name=base.name, max_cells=max_cells)
    if up_to == 3:
        return cubes
    return extend_coskeletal(cubes, up_to, name=base.name, max_cells=max_cells)


def double_category(C: FiniteTwoCategory, i: int = 1, j: int = 2) -> TruncatedMultipleCategory:
    """Ehresmann's quintet double category, placed in directions i < j."""
    if not i < j:
        raise ArgumentError("directions must satisfy i < j")
    return build_Q(C, 2, directions=(i, j))


def cube_from_cell(M: TruncatedMultipleCategory, x: str) -> QuintetCube:
    idx = M.index(x)
    if idx.dimension != 3:
        raise ArgumentError(f"{x} is not a 3-cell")
    i, j, k = idx.elements
    f = M.faces
    return QuintetCube(
        phi=decode_quintet(f[(x, k, "-")]), psi=decode_quintet(f[(x, k, "+")]),
        pi=decode_quintet(f[(x, j, "-")]), rho=decode_quintet(f[(x, j, "+")]),
        omega=decode_quintet(f[(x, i, "-")]), zeta=decode_quintet(f[(x, i, "+")]),
    )


def check_quintet_type(A: TruncatedMultipleCategory, U: MultipleFunctorData) -> Tuple[bool, Tuple[str, ...]]:
    """True iff every cell of dimension >= 2 is determined by its boundary and its image under U."""
    report = validate_multiple_functor(U)
    if not report.ok:
        raise RejectedInputError(f"{U.name} is not a strict multiple functor", report)
    for idx in A.indices():
        if idx.dimension < 2:
            continue
        seen: Dict[Tuple[Tuple[str, ...], str], str] = {}
        for x in sorted(A.of(idx)):
            key = (A.boundary(x), U.cell_map[x])
            if key in seen:
                return False, (seen[key], x)
            seen[key] = x
    return True, ()


def collapse_functor(M: TruncatedMultipleCategory, T: TruncatedMultipleCategory) -> MultipleFunctorData:
    """The unique functor into a structure with one cell per index."""
    cell_map = {}
    for idx, cs in M.cells.items():
        (target,) = T.of(idx)
        for c in cs:
            cell_map[c] = target
    return MultipleFunctorData(name=f"collapse({M.name})", source=M, target=T, cell_map=cell_map)


def identity_multiple_functor(M: TruncatedMultipleCategory) -> MultipleFunctorData:
    return MultipleFunctorData(
        name=f"id({M.name})", source=M, target=M,
        cell_map={c: c for cs in M.cells.values() for c in cs},
    )


