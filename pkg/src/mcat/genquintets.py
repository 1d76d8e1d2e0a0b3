"""
Generalised quintets over a sequence of identity-on-objects 2-functors.

Direction i draws its 1-cells from level C_i. An ij-cell (i < j) is a quintet
whose 2-cell lives in a home level after pushing the boundary there: C_i for
the forgetful shape, where φ: (U_ji v) r => s (U_ji u), and C_j for the
structural shape, where φ: v (U_ij r) => (U_ij s) u. Cubes satisfy the quintet
relation evaluated in C_i (forgetful) or C_k (structural); everything above
dimension 3 is coskeletal. On an identity sequence every cell id coincides
with the one build_Q produces.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .core2cat import (
    FORGETFUL,
    StrictTwoFunctor,
    TwoFunctorSequence,
    paste,
    term,
    validate_sequence,
)
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
    split_ids,
)
from .quintets import Quintet, QuintetCube, build_Q, default_directions

logger = get_logger("genquintets")


@dataclass(frozen=True)
class UQuintet(Quintet):
    """A quintet modulo the links of a sequence; the id payload matches Quintet's."""
    shape: str = FORGETFUL


def decode_uquintet(cid: str, shape: str) -> UQuintet:
    body = cid.split(":", 1)[1]
    if not (body.startswith("<") and body.endswith(">")):
        raise ArgumentError(f"{cid} is not a quintet cell")
    parts = split_ids(body[1:-1], "|")
    if len(parts) != 5:
        raise ArgumentError(f"{cid} is not a quintet cell")
    return UQuintet(*parts, shape)


class _Pushes:
    """Where each cell of an index lives and how it reaches another level."""

    def __init__(self, seq: TwoFunctorSequence):
        self.seq = seq

    def home(self, *directions: int) -> int:
        """Level in which the 2-cells of the given index are evaluated."""
        return min(directions) if self.seq.shape == FORGETFUL else max(directions)

    def functor(self, frm: int, to: int) -> StrictTwoFunctor:
        return self.seq.link(frm, to)

    def one(self, direction: int, f: str, to: int) -> str:
        return self.functor(direction, to).one(f)

    def two(self, frm: int, a: str, to: int) -> str:
        return self.functor(frm, to).two(a)


def is_uquintet(seq: TwoFunctorSequence, i: int, j: int, q: Quintet) -> bool:
    P = _Pushes(seq)
    h = P.home(i, j)
    H = seq.level(h)
    try:
        vr = H.compose(P.one(j, q.v, h), P.one(i, q.r, h))
        su = H.compose(P.one(i, q.s, h), P.one(j, q.u, h))
        return H.dom(q.phi) == vr and H.cod(q.phi) == su
    except (BoundaryError, KeyError):
        return False


def enumerate_uquintets(seq: TwoFunctorSequence, i: int, j: int) -> List[UQuintet]:
    """Every quintet with a- and b-cells from C_i and C_j and its 2-cell in the home level."""
    if not i < j:
        raise ArgumentError(f"need i < j, got {i}, {j}")
    P = _Pushes(seq)
    Ci, Cj = seq.level(i), seq.level(j)
    h = P.home(i, j)
    H = seq.level(h)
    out: List[UQuintet] = []
    for r in Ci.one_cells_sorted():
        for u in Cj.one_cells_sorted():
            if Ci.src(r) != Cj.src(u):
                continue
            for v in Cj.one_cells_sorted():
                if Cj.src(v) != Ci.tgt(r):
                    continue
                vr = H.compose(P.one(j, v, h), P.one(i, r, h))
                for s in Ci.hom(Cj.tgt(u), Cj.tgt(v)):
                    su = H.compose(P.one(i, s, h), P.one(j, u, h))
                    for phi in H.cells(vr, su):
                        out.append(UQuintet(r, s, u, v, phi, seq.shape))
    return out


def compose_uquintets(seq: TwoFunctorSequence, i: int, j: int, along: int, q1: Quintet, q2: Quintet) -> UQuintet:
    """Composite of two ij-cells in direction ``along`` (i glues v to u, j glues s to r)."""
    P = _Pushes(seq)
    h = P.home(i, j)
    H = seq.level(h)
    if along == i:
        if q1.v != q2.u:
            raise BoundaryError(f"{i}-composition needs {q1.v} = {q2.u}")
        Ci = seq.level(i)
        phi = paste(H, [term(q2.phi, right=(P.one(i, q1.r, h),)), term(q1.phi, left=(P.one(i, q2.s, h),))])
        return UQuintet(Ci.compose(q2.r, q1.r), Ci.compose(q2.s, q1.s), q1.u, q2.v, phi, seq.shape)
    if along == j:
        if q1.s != q2.r:
            raise BoundaryError(f"{j}-composition needs {q1.s} = {q2.r}")
        Cj = seq.level(j)
        phi = paste(H, [term(q1.phi, left=(P.one(j, q2.v, h),)), term(q2.phi, right=(P.one(j, q1.u, h),))])
        return UQuintet(q1.r, q2.s, Cj.compose(q2.u, q1.u), Cj.compose(q2.v, q1.v), phi, seq.shape)
    raise ArgumentError(f"direction {along} is not one of {i}, {j}")


def identity_uquintet(seq: TwoFunctorSequence, i: int, j: int, f: str, direction: int) -> UQuintet:
    """e_j of an i-cell (direction == j) or e_i of a j-cell (direction == i)."""
    P = _Pushes(seq)
    h = P.home(i, j)
    H = seq.level(h)
    if direction == j:
        Ci = seq.level(i)
        a, b = seq.level(j).identity(Ci.src(f)), seq.level(j).identity(Ci.tgt(f))
        return UQuintet(f, f, a, b, H.identity_cell(P.one(i, f, h)), seq.shape)
    if direction == i:
        Cj = seq.level(j)
        a, b = seq.level(i).identity(Cj.src(f)), seq.level(i).identity(Cj.tgt(f))
        return UQuintet(a, b, f, f, H.identity_cell(P.one(j, f, h)), seq.shape)
    raise ArgumentError(f"direction {direction} is not one of {i}, {j}")


def check_u_cube(
    seq: TwoFunctorSequence, cube: QuintetCube, directions: Tuple[int, int, int]
) -> Tuple[bool, Tuple[str, ...]]:
    """
    Evaluate both pastings of a cube of generalised quintets.

    Args:
        seq: the sequence the quintets live over
        cube: faces φ, ψ (ij), π, ρ (ik), ω, ζ (jk)
        directions: i < j < k

    Returns:
        (relation holds, (lhs, rhs)) with both sides in C_i or C_k by shape
    """
    i, j, k = directions
    if not i < j < k:
        raise ArgumentError(f"cube directions must be increasing: {directions}")
    for face in (cube.phi, cube.psi, cube.pi, cube.rho, cube.omega, cube.zeta):
        if isinstance(face, UQuintet) and face.shape != seq.shape:
            raise ArgumentError(f"{face.shape} quintet in a {seq.shape} sequence")
    bad = cube.skeleton_mismatch()
    if bad:
        raise ArgumentError(f"cube skeleton does not match: {bad}")
    P = _Pushes(seq)
    t = P.home(i, k)
    C = seq.level(t)
    p, q = cube.phi, cube.psi

    def one(d: int, f: str) -> str:
        return P.one(d, f, t)

    def two(a: str, *index: int) -> str:
        return P.two(P.home(*index), a, t)

    x, y2 = cube.pi.u, cube.rho.v
    lhs = paste(C, [
        term(two(p.phi, i, j), left=(one(k, y2),)),
        term(two(cube.rho.phi, i, k), right=(one(j, p.u),)),
        term(two(cube.omega.phi, j, k), left=(one(i, q.s),)),
    ])
    rhs = paste(C, [
        term(two(cube.zeta.phi, j, k), right=(one(i, p.r),)),
        term(two(cube.pi.phi, i, k), left=(one(j, q.v),)),
        term(two(q.phi, i, j), right=(one(k, x),)),
    ])
    return lhs == rhs, (lhs, rhs)


def build_GQ(
    seq: TwoFunctorSequence,
    up_to: int,
    directions: Optional[Sequence[int]] = None,
    validate: bool = True,
    max_cells: int = 200_000,
) -> TruncatedMultipleCategory:
    if up_to < 0:
        raise ArgumentError("dimension bound must be >= 0")
    if validate:
        report = validate_sequence(seq)
        if not report.ok:
            raise RejectedInputError(f"{seq.name} is not a valid sequence of 2-functors", report)
    dirs = tuple(sorted(directions)) if directions is not None else default_directions(up_to)
    cells: Dict[MultiIndex, Tuple[str, ...]] = {}
    faces: Dict[FaceKey, str] = {}
    degs: Dict[DegKey, str] = {}
    comps: Dict[CompKey, str] = {}
    e = MultiIndex()
    obj = {x: cell_id(e, x) for x in seq.objects}
    cells[e] = tuple(obj[x] for x in seq.objects)

    def one(a: int, f: str) -> str:
        return cell_id(MultiIndex.of(a), f)

    if up_to >= 1:
        for a in dirs:
            C = seq.level(a)
            cells[MultiIndex.of(a)] = tuple(one(a, f) for f in C.one_cells_sorted())
            for f in C.one_cells_sorted():
                faces[(one(a, f), a, "-")] = obj[C.src(f)]
                faces[(one(a, f), a, "+")] = obj[C.tgt(f)]
            for x in seq.objects:
                degs[(obj[x], a)] = one(a, C.identity(x))
            for (g, f), h in C.comp1.items():
                comps[(a, one(a, f), one(a, g))] = one(a, h)

    if up_to >= 2:
        for ai, a in enumerate(dirs):
            for b in dirs[ai + 1:]:
                iab = MultiIndex.of(a, b)

                def q(qq: Quintet) -> str:
                    return cell_id(iab, qq.payload)

                quintets = enumerate_uquintets(seq, a, b)
                logger.debug(f"GQ({seq.name}): {len(quintets)} quintets at {iab.label}")
                ids = []
                for qq in quintets:
                    cid = q(qq)
                    ids.append(cid)
                    faces[(cid, a, "-")] = one(b, qq.u)
                    faces[(cid, a, "+")] = one(b, qq.v)
                    faces[(cid, b, "-")] = one(a, qq.r)
                    faces[(cid, b, "+")] = one(a, qq.s)
                cells[iab] = tuple(ids)
                for f in seq.level(a).one_cells_sorted():
                    degs[(one(a, f), b)] = q(identity_uquintet(seq, a, b, f, b))
                for f in seq.level(b).one_cells_sorted():
                    degs[(one(b, f), a)] = q(identity_uquintet(seq, a, b, f, a))
                by_u: Dict[str, List[UQuintet]] = {}
                by_r: Dict[str, List[UQuintet]] = {}
                for qq in quintets:
                    by_u.setdefault(qq.u, []).append(qq)
                    by_r.setdefault(qq.r, []).append(qq)
                for q1 in quintets:
                    for q2 in by_u.get(q1.v, ()):
                        comps[(a, q(q1), q(q2))] = q(compose_uquintets(seq, a, b, a, q1, q2))
                    for q2 in by_r.get(q1.s, ()):
                        comps[(b, q(q1), q(q2))] = q(compose_uquintets(seq, a, b, b, q1, q2))

    base = TruncatedMultipleCategory(
        name=f"GQ({seq.name})", dim_bound=min(up_to, 2), directions=dirs,
        cells=cells, faces=faces, degeneracies=degs, comps=comps,
    )
    if up_to <= 2:
        return base

    def commutes(idx: MultiIndex, fam: Tuple[str, ...]) -> bool:
        omega, zeta, pi, rho, phi, psi = (decode_uquintet(c, seq.shape) for c in fam)
        ok, _ = check_u_cube(seq, QuintetCube(phi, psi, pi, rho, omega, zeta), idx.elements)
        return ok

    cubes = extend_coskeletal(base, 3, accept=commutes, name=base.name, max_cells=max_cells)
    if up_to == 3:
        return cubes
    return extend_coskeletal(cubes, up_to, name=base.name, max_cells=max_cells)


def comparison_to_Q(
    GQ: TruncatedMultipleCategory, seq: TwoFunctorSequence, level: int, max_cells: int = 200_000
) -> MultipleFunctorData:
    """
    The multiple functor GQ -> Q(C_level) pushing every cell through the links.

    Forgetful sequences map down to level 0, structural ones up to the last
    level. Cells of dimension >= 3 are sent to the cell of Q with the image
    boundary.
    """
    P = _Pushes(seq)
    Q = build_Q(seq.level(level), GQ.dim_bound, directions=GQ.directions, validate=False, max_cells=max_cells)
    cell_map: Dict[str, str] = {}
    for x in GQ.of(MultiIndex()):
        cell_map[x] = x
    for idx in GQ.indices():
        if idx.dimension == 1:
            (a,) = idx.elements
            for x in GQ.of(idx):
                cell_map[x] = cell_id(idx, P.one(a, x.split(":", 1)[1], level))
        elif idx.dimension == 2:
            a, b = idx.elements
            h = P.home(a, b)
            for x in GQ.of(idx):
                qq = decode_uquintet(x, seq.shape)
                image = Quintet(
                    P.one(a, qq.r, level), P.one(a, qq.s, level),
                    P.one(b, qq.u, level), P.one(b, qq.v, level),
                    P.two(h, qq.phi, level),
                )
                cell_map[x] = cell_id(idx, image.payload)
    for k in range(3, GQ.dim_bound + 1):
        for idx in (i for i in GQ.indices() if i.dimension == k):
            by_boundary = {Q.boundary(y): y for y in Q.of(idx)}
            for x in GQ.of(idx):
                image = tuple(cell_map[f] for f in GQ.boundary(x))
                if image in by_boundary:
                    cell_map[x] = by_boundary[image]
    return MultipleFunctorData(name=f"U({GQ.name})", source=GQ, target=Q, cell_map=cell_map)


def forgetful_to_Q(GQ: TruncatedMultipleCategory, seq: TwoFunctorSequence) -> MultipleFunctorData:
    if seq.shape != FORGETFUL:
        raise ArgumentError("forgetful_to_Q needs a forgetful sequence")
    return comparison_to_Q(GQ, seq, 0)


def is_injective(U: MultipleFunctorData) -> Tuple[bool, Tuple[str, ...]]:
    """Cell-wise injectivity per index, with a colliding pair as witness."""
    for idx in U.source.indices():
        seen: Dict[str, str] = {}
        for x in sorted(U.source.of(idx)):
            y = U.cell_map.get(x)
            if y is None:
                continue
            if y in seen:
                return False, (seen[y], x)
            seen[y] = x
    return True, ()
