"""
Verification suites: exhaustive sweeps over the built-in fixtures, or over
structures read from documents. Each suite returns a ValidationReport;
SuiteRunner runs several, isolates crashes and merges the results.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .adjchains import check_mate_extensions, enumerate_chains, find_adjunctions, inverse_mate, mate
from .chiralcalc import (
    ChiralMC,
    PQCube,
    check_middle_four,
    compose_pqcubes,
    enumerate_pqcubes,
    identity_pmorphism,
    same_morphism,
    strict_lift,
    validate_chiral,
    validate_pqcube,
)
from .config import KernelConfig
from .core2cat import FiniteTwoCategory, TwoFunctorSequence, identity_sequence
from .fixtures import (
    TWO_CATEGORIES,
    chain,
    graph_xy,
    invertible_spans,
    iso_double,
    parity_cube_pool,
    parity_double,
    rebracketed,
    signed_parity,
    span_cube_pool,
    spans,
    squares2,
)
from .genquintets import build_GQ, forgetful_to_Q
from .logging_config import get_logger, suite_context
from .models import ArgumentError, BoundaryError, ValidationReport
from .monitoring import SweepMonitor
from .multicat import TruncatedMultipleCategory, coskeletal_dimension, is_isomorphism, validate_multiple_category
from .psalg import (
    CatGraph,
    PseudoAlgebra,
    WeakDoubleCategory,
    cell_words,
    check_psa_middle_four,
    compose_psa_h,
    compose_psa_v,
    epsilon,
    free_double,
    functor_J,
    functor_V,
    is_identity_morphism,
    is_strict_morphism,
    monad_mult,
    monad_unit,
    nests3,
    paths,
    same_weak_double,
    validate_cat_graph,
    validate_psa_cell,
    validate_pseudo_algebra,
    validate_weak_double_category,
)
from .quintets import build_Q

logger = get_logger("suites")


@dataclass(frozen=True)
class SuiteSettings:
    """Bounds shared by every suite"""
    dim_bound: int = 3
    word_length: int = 4
    depth: int = 2
    chiral_degree: int = 3
    max_cells: int = 200_000

    @staticmethod
    def from_config(cfg: KernelConfig) -> "SuiteSettings":
        return SuiteSettings(
            dim_bound=cfg.dim_bound,
            word_length=cfg.word_length,
            depth=cfg.nest_depth,
            chiral_degree=cfg.chiral_degree,
            max_cells=cfg.max_cells,
        )


Inputs = Sequence[object]
Runner = Callable[[SuiteSettings, Inputs], ValidationReport]


def _pick(inputs: Inputs, kind: type, suite: str) -> List[object]:
    wrong = [type(x).__name__ for x in inputs if not isinstance(x, kind)]
    if wrong:
        raise ArgumentError(f"suite {suite} takes {kind.__name__} inputs, got {', '.join(wrong)}")
    return list(inputs)


# -- strict structures


def q_axioms(s: SuiteSettings, inputs: Inputs = ()) -> ValidationReport:
    """Q(C) satisfies the multiple category axioms up to the dimension bound."""
    report = ValidationReport(structure="q_axioms")
    Cs = _pick(inputs, FiniteTwoCategory, "q_axioms") or [TWO_CATEGORIES[n]() for n in ("fix1", "fix3", "poset3")]
    for C in Cs:
        M = build_Q(C, s.dim_bound, max_cells=s.max_cells)
        report.merge(validate_multiple_category(M), prefix=f"{C.name}.")
    return report


# name -> (dimension bound needed, expected coskeletal dimension)
COSKELETAL_EXPECTED: Dict[str, Tuple[int, int]] = {
    "fix3": (3, 0),
    "idem_codiscrete": (2, 1),
    "idem": (3, 2),
    "z2": (3, 3),
    "fix1": (3, 2),
}


def coskdim(s: SuiteSettings, inputs: Inputs = ()) -> ValidationReport:
    """Coskeletal dimensions of Q on the classifying fixtures, or of the given structures."""
    report = ValidationReport(structure="coskdim")
    given = _pick(inputs, TruncatedMultipleCategory, "coskdim")
    if given:
        for M in given:
            res = coskeletal_dimension(M)
            rec = report.check(f"coskdim.{M.name}", f"coskeletal dimension {res.dimension} within {res.dim_bound}")
            rec.observe(True, (M.name, res.dimension))
        return report
    for name, (bound, want) in sorted(COSKELETAL_EXPECTED.items()):
        if bound > s.dim_bound:
            logger.info(f"coskdim: skipping {name}, needs dimension {bound}")
            continue
        res = coskeletal_dimension(build_Q(TWO_CATEGORIES[name](), bound, max_cells=s.max_cells))
        rec = report.check(f"coskdim.{name}", f"Q({name}) has coskeletal dimension {want}")
        rec.observe(res.dimension == want, (name, res.dimension))
    return report


def mates(s: SuiteSettings, inputs: Inputs = ()) -> ValidationReport:
    """Mates are a bijection both ways, identities are self-mates, and 01-cells extend uniquely."""
    Cs = _pick(inputs, FiniteTwoCategory, "mates") or [TWO_CATEGORIES["fix1"]()]
    report = ValidationReport(structure="mates")
    for C in Cs:
        adjs = [a for f in C.one_cells_sorted() for a in find_adjunctions(C, f)]
        ident = report.check(f"{C.name}.mates.identity", "the mate of an identity is an identity")
        twice = report.check(f"{C.name}.mates.double_mate", "mate and inverse mate are mutually inverse")
        for a in adjs:
            ident.observe(mate(C, C.identity_cell(a.left), a, a) == C.identity_cell(a.right), (a.left, a.right))
        for a, b in product(adjs, repeat=2):
            for phi in C.cells(a.left, b.left):
                twice.observe(inverse_mate(C, mate(C, phi, a, b), a, b) == phi, (a.left, b.left, phi))
            for psi in C.cells(b.right, a.right):
                twice.observe(mate(C, inverse_mate(C, psi, a, b), a, b) == psi, (b.right, a.right, psi))
        report.merge(check_mate_extensions(C, enumerate_chains(C, 1)), prefix=f"{C.name}.")
    return report


def gq(s: SuiteSettings, inputs: Inputs = ()) -> ValidationReport:
    """GQ of an identity sequence is Q itself; the forgetful comparison is an isomorphism."""
    report = ValidationReport(structure="gq")
    seqs = _pick(inputs, TwoFunctorSequence, "gq")
    if not seqs:
        seqs = [identity_sequence(TWO_CATEGORIES[n](), s.depth) for n in ("fix3", "fix1")]
    for seq in seqs:
        GQ = build_GQ(seq, s.dim_bound, max_cells=s.max_cells)
        report.merge(validate_multiple_category(GQ), prefix=f"{seq.name}.")
        if seq.shape == "forgetful":
            report.merge(is_isomorphism(forgetful_to_Q(GQ, seq)), prefix=f"{seq.name}.comparison.")
        if all(C is seq.levels[0] for C in seq.levels):
            Q = build_Q(seq.levels[0], s.dim_bound, max_cells=s.max_cells)
            same = report.check(f"{seq.name}.gq.coincides", "GQ of an identity sequence has the tables of Q")
            same.observe(
                (GQ.cells, GQ.faces, GQ.degeneracies, GQ.comps) == (Q.cells, Q.faces, Q.degeneracies, Q.comps),
                (seq.name,),
            )
    return report


# -- chiral composition


def _identity_pool(A: ChiralMC, p: int, q: int) -> List[PQCube]:
    I, J = identity_pmorphism(A, p), identity_pmorphism(A, q)
    return enumerate_pqcubes(I, I, J, J, name=f"{A.name}[{p}{q}]")


def _sweep_cubes(report: ValidationReport, label: str, pool: Sequence[PQCube]) -> None:
    comp = report.check(f"{label}.composites", "composites of pq-cubes are pq-cubes")
    four = report.check(f"{label}.middle_four", "both pastings of a 2x2 matrix agree")
    for a, b in product(pool, repeat=2):
        for d, edge, edge2 in (("p", a.V, b.U), ("q", a.S, b.R)):
            if same_morphism(edge, edge2):
                comp.observe(validate_pqcube(compose_pqcubes(d, a, b)).ok, (a.name, d, b.name))
    for phi, psi, sigma in product(pool, repeat=3):
        if not (same_morphism(phi.V, psi.U) and same_morphism(phi.S, sigma.R)):
            continue
        for tau in pool:
            if same_morphism(psi.S, tau.R) and same_morphism(sigma.V, tau.U):
                ok, _, _ = check_middle_four(phi, psi, sigma, tau)
                four.observe(ok, (phi.name, psi.name, sigma.name, tau.name))


def thm2_8(s: SuiteSettings, inputs: Inputs = ()) -> ValidationReport:
    """pq-cubes compose in both directions and satisfy interchange."""
    report = ValidationReport(structure="thm2.8")
    given = _pick(inputs, ChiralMC, "thm2.8")
    if given:
        for A in given:
            report.merge(validate_chiral(A), prefix=f"{A.name}.")
            for p, q in ((p, q) for p in range(1, A.degree + 1) for q in range(p + 1, A.degree + 1)):
                _sweep_cubes(report, f"{A.name}.{p}{q}", _identity_pool(A, p, q))
        return report
    A = signed_parity(s.chiral_degree)
    for p in range(1, A.degree):
        _sweep_cubes(report, f"parity.{p}{p + 1}", parity_cube_pool(A, p, p + 1))
    F = spans(2)
    report.merge(validate_chiral(F), prefix="fix4.")
    _sweep_cubes(report, "fix4.12", span_cube_pool(F, 1, 2))
    lifted = strict_lift(build_Q(chain("c2", 2), A.degree, max_cells=s.max_cells), A.degree)
    _sweep_cubes(report, "lift.12", _identity_pool(lifted, 1, 2))
    return report


# -- pseudo algebras


def thm5_7(s: SuiteSettings, inputs: Inputs = ()) -> ValidationReport:
    """The free double category monad: graph axioms, unit and associativity laws, strictness of words."""
    report = ValidationReport(structure="thm5.7")
    L = s.word_length
    for G in _pick(inputs, CatGraph, "thm5.7") or [graph_xy()]:
        pre = f"{G.name}."
        report.merge(validate_cat_graph(G), prefix=pre)
        T = free_double(G, L)
        report.merge(validate_cat_graph(T.graph), prefix=f"{pre}free.")
        left = report.check(f"{pre}monad.unit_left", "m after hT is the identity")
        right = report.check(f"{pre}monad.unit_right", "m after Th is the identity")
        assoc = report.check(f"{pre}monad.assoc", "m after mT equals m after Tm")
        strict = report.check(f"{pre}free.strict", "words are equal exactly when identical")
        ws = cell_words(G, L)
        for w in ws:
            left.observe(monad_mult((w,)) == w, (w.key,))
            if w.items:
                right.observe(monad_mult([monad_unit(a) for a in w.items]) == w, (w.key,))
        for W in nests3(G, paths(G, L), L):
            inner = monad_mult([monad_mult(Wi) for Wi in W])
            flat = monad_mult([w for Wi in W for w in Wi])
            assoc.observe(inner == flat, tuple(w.key for Wi in W for w in Wi))
        keys = {}
        for w in ws:
            strict.observe(keys.setdefault(w.key, w) == w, (w.key,))
    return report


def thm5_8(s: SuiteSettings, inputs: Inputs = ()) -> ValidationReport:
    """VJ is the identity, epsilon is a pseudo morphism with identity triangles, non-J algebras are detected."""
    report = ValidationReport(structure="thm5.8")
    L = s.word_length
    given = list(inputs)
    doubles = [x for x in given if isinstance(x, WeakDoubleCategory)]
    algebras = [x for x in given if isinstance(x, PseudoAlgebra)]
    if len(doubles) + len(algebras) != len(given):
        raise ArgumentError("suite thm5.8 takes weak double categories and pseudo algebras")
    if not given:
        doubles = [iso_double(), parity_double(), squares2()]
    over: Dict[int, object] = {}
    for D in doubles:
        pre = f"{D.name}."
        report.merge(validate_weak_double_category(D), prefix=pre)
        P = functor_J(D, L, over)
        report.merge(validate_pseudo_algebra(P), prefix=f"{pre}J.")
        report.check(f"{pre}vj.identity", "V(J(D)) is D").observe(same_weak_double(functor_V(P, over), D), (D.name,))
        eps, eps_report = epsilon(P, over)
        report.merge(eps_report, prefix=pre)
        report.check(f"{pre}epsilon.identity_on_J", "epsilon at J(D) is the identity").observe(
            is_identity_morphism(eps), (D.name,))
    if not given:
        algebras = [rebracketed(functor_J(parity_double(), L, over))]
        expect_non_strict = True
    else:
        expect_non_strict = False
    for P in algebras:
        pre = f"{P.name}."
        report.merge(validate_pseudo_algebra(P), prefix=pre)
        eps, eps_report = epsilon(P, over)
        report.merge(eps_report, prefix=pre)
        if expect_non_strict:
            rec = report.check(f"{pre}epsilon.non_strict", "epsilon at a re-bracketed algebra has a non-identity comparison")
            rec.observe(not is_strict_morphism(eps), (P.name,))
    return report


def psa(s: SuiteSettings, inputs: Inputs = ()) -> ValidationReport:
    """Cells of pseudo algebras: J of cubes are cells, composites are cells, middle four holds."""
    report = ValidationReport(structure="psa")
    given = _pick(inputs, ChiralMC, "psa")
    over: Dict[int, object] = {}
    L = s.word_length
    if given:
        pools = [(A.name, _identity_pool(A, 1, 2)) for A in given]
    else:
        pools = [
            ("parity", parity_cube_pool(signed_parity(2), 1, 2)),
            ("fix4_iso", span_cube_pool(invertible_spans(), 1, 2)),
        ]
    for name, pool in pools:
        cells = [functor_J(c, L, over) for c in pool]
        valid = report.check(f"{name}.psa.cells", "J of a (1,2)-cube is a cell of pseudo algebras")
        comp = report.check(f"{name}.psa.composites", "horizontal and vertical composites satisfy coherence")
        four = report.check(f"{name}.psa.middle_four", "both pastings of a 2x2 matrix of cells agree")
        for pi in cells:
            valid.observe(validate_psa_cell(pi).ok, (pi.name,))
        for a, b in product(cells, repeat=2):
            for d, op in (("h", compose_psa_h), ("v", compose_psa_v)):
                try:
                    c = op(a, b)
                except BoundaryError:
                    continue
                comp.observe(validate_psa_cell(c).ok, (a.name, d, b.name))
        for pi, theta, zeta, xi in product(cells, repeat=4):
            try:
                ok, _, _ = check_psa_middle_four(pi, theta, zeta, xi)
            except BoundaryError:
                continue
            four.observe(ok, (pi.name, theta.name, zeta.name, xi.name))
    return report


@dataclass
class SuiteConfig:
    """Configuration for a suite"""
    name: str
    runner: Runner
    enabled: bool = True


SUITES: Dict[str, Runner] = {
    "q_axioms": q_axioms,
    "coskdim": coskdim,
    "mates": mates,
    "gq": gq,
    "thm2.8": thm2_8,
    "thm5.7": thm5_7,
    "thm5.8": thm5_8,
    "psa": psa,
}


def default_suites() -> List[SuiteConfig]:
    return [SuiteConfig(name, runner) for name, runner in SUITES.items()]


class SuiteRunner:
    """Runs enabled suites and merges their reports"""

    def __init__(
        self,
        suites: List[SuiteConfig],
        settings: Optional[SuiteSettings] = None,
        monitor: Optional[SweepMonitor] = None,
    ):
        self.suites = suites
        self.enabled_suites = [s for s in suites if s.enabled]
        self.settings = settings or SuiteSettings()
        self.monitor = monitor or SweepMonitor()

    def run_one(self, config: SuiteConfig, inputs: Inputs = ()) -> ValidationReport:
        """Run one suite; input errors propagate, crashes become error checks"""
        with suite_context(config.name):
            try:
                with self.monitor.sweep(config.name):
                    report = config.runner(self.settings, inputs)
            except ArgumentError:
                raise
            except Exception as e:
                logger.error(f"Suite {config.name} failed: {e}")
                report = ValidationReport(structure=config.name)
                report.error("suite", f"{type(e).__name__}: {e}")
            self.monitor.observe_report(config.name, report)
            logger.info(f"Suite {config.name}: {report.summary()}")
        return report

    def run(self, names: Optional[Sequence[str]] = None, inputs: Inputs = ()) -> ValidationReport:
        """Run the named suites (all enabled ones by default); check names are prefixed by suite."""
        chosen = self.enabled_suites
        if names is not None:
            unknown = sorted(set(names) - {s.name for s in self.suites})
            if unknown:
                raise ArgumentError(f"unknown suites: {', '.join(unknown)}")
            chosen = [s for s in self.enabled_suites if s.name in names]
        if len(chosen) == 1:
            return self.run_one(chosen[0], inputs)
        merged = ValidationReport(structure="+".join(s.name for s in chosen) or "none")
        for config in chosen:
            merged.merge(self.run_one(config, inputs), prefix=f"{config.name}.")
        return merged
