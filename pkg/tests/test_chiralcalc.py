"""
Unit tests for chiralcalc module.
"""
import unittest
from itertools import product

from mcat.config import KernelConfig
from mcat.chiralcalc import (
    PQCube,
    PQMap,
    PQRCube,
    check_middle_four,
    check_tv_quintet_type,
    compose_pmorphisms,
    compose_pqcubes,
    degenerate_extension,
    enumerate_pqcubes,
    identity_pmorphism,
    identity_pqcube,
    is_strict,
    pq_regime,
    regime,
    same_morphism,
    strict_lift,
    tv_projection,
    validate_chiral,
    validate_higher_cell,
    validate_pmorphism,
    validate_pqcube,
    validate_transversal,
)
from mcat.fixtures import (
    Span,
    chain,
    invertible_spans,
    parity_character,
    parity_cube_pool,
    parity_collapse,
    parity_twist,
    restriction,
    signed_parity,
    span_category,
    span_cube_pool,
    spans,
    unit_whisker,
    unitor_cube,
)
from mcat.models import ArgumentError, BoundaryError, StructuralError
from mcat.multicat import MultiIndex, terminal_multiple_category
from mcat.quintets import build_Q

SLOW = KernelConfig.load().slow_tests


def _same_data(R, S):
    return R.cell_map == S.cell_map and R.unit == S.unit and R.comp == S.comp


class TestChiralCategories(unittest.TestCase):
    """Test chiral multiple categories and their validator"""

    def setUp(self):
        """Set up test fixtures"""
        self.A = signed_parity()

    def test_transversal_category(self):
        """Test signed identities form a category with x1- self-inverse"""
        T = self.A.tv[MultiIndex.of(1)]
        self.assertTrue(validate_transversal(T).ok)
        self.assertEqual(T.inverse("x1-"), "x1-")
        self.assertEqual(T.then("x1-", "x1-", "x1-"), "x1-")
        self.assertEqual(T.hom("x0", "x1"), ())

    def test_broken_transversal_category(self):
        """Test a missing composite is reported with its pair"""
        T = self.A.tv[MultiIndex.of(1)]
        del T.comp[("x1-", "x1+")]
        report = validate_transversal(T)
        self.assertFalse(report.ok)
        self.assertEqual(report.get("tv.boundary").witness, (T.name, "x1-", "x1+"))

    def test_signed_parity_is_chiral(self):
        """Test signed parity passes every check at degree 2 and 3"""
        for degree in (2, 3):
            report = validate_chiral(signed_parity(degree))
            self.assertTrue(report.ok, report.failures())
        report = validate_chiral(self.A)
        self.assertGreater(report.get("coherence.chi_kappa").instances, 0)
        self.assertGreater(report.get("coherence.chi_units").instances, 0)

    def test_faulty_associator_fails_pentagon(self):
        """Test the associator (-1)^(xy) breaks only the pentagon"""
        report = validate_chiral(signed_parity(faulty=True))
        self.assertEqual([r.name for r in report.failures()], ["coherence.pentagon"])
        self.assertEqual(report.get("coherence.pentagon").witness, ("1", "x1", "x1", "x0", "x0"))

    def test_degenerate_extension(self):
        """Test the extension adds direction 2 with degenerate cells only"""
        A2 = signed_parity(2)
        A3 = degenerate_extension(A2)
        self.assertEqual(A3.degree, 3)
        self.assertEqual(len(A3.levels()), 4)
        self.assertEqual(A3.cubes(MultiIndex.of(1, 2)), ("e2(x0)", "e2(x1)"))
        self.assertEqual(A3.face("e2(x1-)", 2, "+"), "x1-")
        self.assertEqual(A3.plus(1, "e2(x1)", "e2(x1)"), "e2(x0)")
        self.assertEqual(A3.interchanger(1, 2, "e2(x1)", "e2(x0)", "e2(x1)", "e2(x0)"), "e2(x1+)")

    def test_strict_lift_of_terminal(self):
        """Test the terminal multiple category lifts to a chiral one"""
        A = strict_lift(terminal_multiple_category(3, (0, 1, 2)), 3)
        self.assertEqual(A.degree, 3)
        self.assertTrue(validate_chiral(A).ok)

    def test_strict_lift_of_quintets(self):
        """Test Q of the chain 0 < 1 lifts with identity comparisons"""
        A = strict_lift(build_Q(chain("c2", 2), 3), 3)
        report = validate_chiral(A)
        self.assertTrue(report.ok, report.failures())
        self.assertTrue(validate_pmorphism(identity_pmorphism(A, 2)).ok)

    def test_strict_lift_needs_room(self):
        """Test lifting needs the transversal direction and enough dimensions"""
        with self.assertRaises(ArgumentError):
            strict_lift(terminal_multiple_category(2, (0, 1, 2)), 3)
        with self.assertRaises(ArgumentError):
            strict_lift(terminal_multiple_category(3, (1, 2, 3)), 3)


class TestPMorphisms(unittest.TestCase):
    """Test p-morphisms, their coherence and composition"""

    def setUp(self):
        """Set up test fixtures"""
        self.A = signed_parity()

    def test_identities_twists_and_collapses(self):
        """Test identity, twist and collapse are p-morphisms for every p"""
        for p in (1, 2, 3):
            for R in (identity_pmorphism(self.A, p), parity_twist(self.A, p), parity_collapse(self.A, p)):
                report = validate_pmorphism(R)
                self.assertTrue(report.ok, (R.name, report.failures()))

    def test_regimes(self):
        """Test the interchange form follows the laxity index"""
        self.assertEqual([regime(p, 1, 2) for p in (1, 2, 3)], ["a", "b", "c"])
        for p, form in ((1, "a"), (2, "b"), (3, "c")):
            checks = validate_pmorphism(parity_twist(self.A, p)).checks
            self.assertIn(f"pmorph.interchange.{form}", checks)
            self.assertEqual(len([k for k in checks if k.startswith("pmorph.interchange")]), 1)

    def test_non_cocycle_twist(self):
        """Test a comparison (-1)^(x(1-y)) breaks the right unit law"""
        R = parity_twist(self.A, 1, cocycle=lambda a, b: a * (1 - b), name="bad")
        report = validate_pmorphism(R)
        self.assertFalse(report.ok)
        self.assertEqual(report.get("pmorph.unit").witness, ("right", "1", "x1"))
        self.assertTrue(report.get("pmorph.comparison_boundary").passed)

    def test_strictness(self):
        """Test collapse is strict and twist is not"""
        self.assertTrue(is_strict(parity_collapse(self.A, 1)))
        self.assertFalse(is_strict(parity_twist(self.A, 1)))

    def test_twist_squares_to_identity(self):
        """Test twist after twist has identity comparisons"""
        for p in (1, 2, 3):
            M = parity_twist(self.A, p)
            MM = compose_pmorphisms(M, M)
            self.assertTrue(_same_data(MM, identity_pmorphism(self.A, p)))
            self.assertTrue(validate_pmorphism(MM).ok)

    def test_unit_and_associativity(self):
        """Test composition is unital and associative on data"""
        M, K, I = parity_twist(self.A, 2), parity_collapse(self.A, 2), identity_pmorphism(self.A, 2)
        self.assertTrue(_same_data(compose_pmorphisms(I, M), M))
        self.assertTrue(_same_data(compose_pmorphisms(M, I), M))
        left = compose_pmorphisms(compose_pmorphisms(M, K), M)
        right = compose_pmorphisms(M, compose_pmorphisms(K, M))
        self.assertTrue(_same_data(left, right))
        self.assertTrue(validate_pmorphism(left).ok)

    def test_composition_errors(self):
        """Test mismatched laxities and endpoints are rejected"""
        with self.assertRaises(ArgumentError):
            compose_pmorphisms(parity_twist(self.A, 1), parity_twist(self.A, 2))
        other = signed_parity()
        with self.assertRaises(BoundaryError):
            compose_pmorphisms(identity_pmorphism(self.A, 1), identity_pmorphism(other, 1))

    def test_same_morphism(self):
        """Test same_morphism compares data and endpoints"""
        self.assertTrue(same_morphism(identity_pmorphism(self.A, 1), identity_pmorphism(self.A, 1)))
        self.assertFalse(same_morphism(identity_pmorphism(self.A, 1), identity_pmorphism(self.A, 2)))
        self.assertFalse(same_morphism(identity_pmorphism(self.A, 1), parity_twist(self.A, 1)))


class TestPQCubes(unittest.TestCase):
    """Test pq-cubes, their enumeration and both compositions"""

    def setUp(self):
        """Set up test fixtures"""
        self.A = signed_parity()
        self.I1 = identity_pmorphism(self.A, 1)
        self.I2 = identity_pmorphism(self.A, 2)
        self.M1 = parity_twist(self.A, 1)
        self.M2 = parity_twist(self.A, 2)

    def test_regime_of_direction(self):
        """Test the pq coherence form by direction"""
        self.assertEqual([pq_regime(1, 2, i) for i in (1, 2)], ["b", "a"])
        self.assertEqual([pq_regime(2, 3, i) for i in (1, 2)], ["c", "b"])

    def test_identity_cubes(self):
        """Test identity cubes along p and q validate"""
        for cube in (identity_pqcube(self.M2, 1, 2, "p"), identity_pqcube(self.M1, 1, 2, "q")):
            report = validate_pqcube(cube)
            self.assertTrue(report.ok, report.failures())
        with self.assertRaises(ArgumentError):
            identity_pqcube(self.M1, 1, 2, "r")

    def test_character_cube(self):
        """Test the character cube validates in the mixed and colax forms"""
        chi = parity_character(self.I1, self.I1, self.I2, self.I2)
        self.assertTrue(validate_pqcube(chi).ok)
        I3 = identity_pmorphism(self.A, 3)
        I2 = identity_pmorphism(self.A, 2)
        report = validate_pqcube(parity_character(I2, I2, I3, I3))
        self.assertTrue(report.ok, report.failures())
        self.assertIn("pq.coherence.c", report.checks)
        self.assertIn("pq.coherence.b", report.checks)

    def test_broken_component(self):
        """Test a negative component at x0 breaks unit coherence"""
        chi = parity_character(self.I1, self.I1, self.I2, self.I2)
        chi.components["x0"] = "x0-"
        chi.components["e2(x0)"] = "e2(x0-)"
        report = validate_pqcube(chi)
        self.assertTrue(report.get("pq.faces").passed)
        self.assertFalse(report.get("pq.coherence.b").passed)

    def test_enumerate(self):
        """Test enumeration on balanced and unbalanced frames"""
        cubes = enumerate_pqcubes(self.I1, self.I1, self.I2, self.I2)
        self.assertEqual(sorted(c.components["x1"] for c in cubes), ["x1+", "x1-"])
        self.assertEqual(enumerate_pqcubes(self.M1, self.I1, self.I2, self.I2), [])
        self.assertEqual(len(enumerate_pqcubes(self.M1, self.M1, self.I2, self.I2)), 2)
        self.assertEqual(len(enumerate_pqcubes(self.M1, self.I1, self.I2, self.M2)), 2)
        with self.assertRaises(BoundaryError):
            enumerate_pqcubes(self.I2, self.I2, self.I1, self.I1)

    def test_pool_size(self):
        """Test eight balanced frames carry two cubes each"""
        self.assertEqual(len(parity_cube_pool(self.A, 1, 2)), 16)

    def test_composites_are_cubes(self):
        """Test every composite of pool cubes validates in both directions"""
        for p, q in ((1, 2), (2, 3)):
            pool = parity_cube_pool(self.A, p, q)
            n = 0
            for a, b in product(pool, repeat=2):
                for d, edge, edge2 in (("p", a.V, b.U), ("q", a.S, b.R)):
                    if same_morphism(edge, edge2):
                        report = validate_pqcube(compose_pqcubes(d, a, b))
                        self.assertTrue(report.ok, (a.name, d, b.name, report.failures()))
                        n += 1
            self.assertGreater(n, 0)

    def test_middle_four(self):
        """Test both pastings of a two-by-two matrix agree"""
        pool = parity_cube_pool(self.A, 1, 2)
        if not SLOW:
            pool = [c for c in pool if c.components["x1"] == "x1-"] + pool[:2]
        n = 0
        for phi, psi, sigma in product(pool, repeat=3):
            if not (same_morphism(phi.V, psi.U) and same_morphism(phi.S, sigma.R)):
                continue
            for tau in pool:
                if same_morphism(psi.S, tau.R) and same_morphism(sigma.V, tau.U):
                    ok, _, _ = check_middle_four(phi, psi, sigma, tau)
                    self.assertTrue(ok, (phi.name, psi.name, sigma.name, tau.name))
                    n += 1
        self.assertGreater(n, 0)

    def test_units_and_associativity(self):
        """Test identity cubes are units and +p is associative"""
        pool = parity_cube_pool(self.A, 1, 2)
        phi = pool[-1]
        left = compose_pqcubes("p", identity_pqcube(phi.U, 1, 2, "p"), phi)
        below = compose_pqcubes("q", phi, identity_pqcube(phi.S, 1, 2, "q"))
        for c in (left, below):
            self.assertEqual(c.components, phi.components)
            self.assertTrue(_same_data(c.R, phi.R) and _same_data(c.V, phi.V))
        chi = parity_character(self.I1, self.I1, self.I2, self.I2)
        one = compose_pqcubes("p", compose_pqcubes("p", chi, chi), chi)
        two = compose_pqcubes("p", chi, compose_pqcubes("p", chi, chi))
        self.assertEqual(one.components, two.components)
        self.assertEqual(one.components["x1"], "x1-")

    def test_composition_errors(self):
        """Test unshared edges and unknown directions are rejected"""
        chi = parity_character(self.I1, self.I1, self.I2, self.I2)
        other = enumerate_pqcubes(self.M1, self.M1, self.I2, self.I2)[0]
        with self.assertRaises(BoundaryError):
            compose_pqcubes("q", chi, other)
        with self.assertRaises(ArgumentError):
            compose_pqcubes("r", chi, chi)


class TestHigherCells(unittest.TestCase):
    """Test maps of pq-cubes and pqr-cubes"""

    def setUp(self):
        """Set up test fixtures"""
        self.A = signed_parity()
        self.I = {p: identity_pmorphism(self.A, p) for p in (1, 2, 3)}

    def _face(self, p, q, character=False):
        frame = (self.I[p], self.I[p], self.I[q], self.I[q])
        if character:
            return parity_character(*frame)
        return identity_pqcube(self.I[q], p, q, "p")

    def test_collapse_map(self):
        """Test collapse maps the character cube onto the identity cube"""
        chi, one = self._face(1, 2, True), self._face(1, 2)
        K = parity_collapse(self.A, 1)
        report = validate_higher_cell(PQMap("k", chi, one, K, K, K, K))
        self.assertTrue(report.ok, report.failures())

    def test_identity_map_needs_equal_components(self):
        """Test the identity does not map the character cube to the identity cube"""
        chi, one = self._face(1, 2, True), self._face(1, 2)
        I = self.I[1]
        report = validate_higher_cell(PQMap("i", chi, one, I, I, I, I))
        self.assertEqual(report.get("pqmap.commutes").witness, ("x1",))
        self.assertTrue(validate_higher_cell(PQMap("i", chi, chi, I, I, I, I)).ok)

    def test_lax_corner_rejected(self):
        """Test a non-strict corner morphism is rejected"""
        one = self._face(1, 2)
        M = parity_twist(self.A, 1)
        report = validate_higher_cell(PQMap("m", one, one, M, M, M, M))
        self.assertFalse(report.get("pqmap.strict").passed)

    def test_identity_pqr_cube(self):
        """Test six identity faces paste to a pqr-cube"""
        faces = [self._face(1, 2), self._face(1, 2), self._face(1, 3), self._face(1, 3),
                 self._face(2, 3), self._face(2, 3)]
        report = validate_higher_cell(PQRCube("c", *faces))
        self.assertTrue(report.ok, report.failures())

    def test_perturbed_pqr_cube(self):
        """Test one character face breaks commutation at x1"""
        faces = [self._face(1, 2, True), self._face(1, 2), self._face(1, 3), self._face(1, 3),
                 self._face(2, 3), self._face(2, 3)]
        report = validate_higher_cell(PQRCube("c", *faces))
        self.assertTrue(report.get("pqr.faces").passed)
        self.assertEqual(report.get("pqr.commutes").witness, ("x1",))

    def test_wrong_laxities(self):
        """Test faces of the wrong types are rejected"""
        f12 = self._face(1, 2)
        report = validate_higher_cell(PQRCube("c", f12, f12, f12, f12, f12, f12))
        self.assertFalse(report.get("pqr.laxities").passed)
        with self.assertRaises(ArgumentError):
            validate_higher_cell("not a cell")


UNIT = "01>01:00.11"
SWAP = "01>01:01.10"


class TestSpans(unittest.TestCase):
    """Test fix4, the spans between the subsets of {0, 1}"""

    def setUp(self):
        """Set up test fixtures"""
        self.A = spans(2)

    def test_spans_are_chiral(self):
        """Test fix4 passes every check with the chosen pullbacks"""
        report = validate_chiral(self.A)
        self.assertTrue(report.ok, report.failures())
        self.assertGreater(report.get("coherence.pentagon").instances, 0)
        self.assertGreater(report.get("coherence.triangle").instances, 0)

    def test_chosen_pullback(self):
        """Test composites list their pairs against the first apex order"""
        S = Span.parse(UNIT)
        self.assertEqual(S.then(Span.parse("01>1:01")).id, "01>1:01")
        self.assertEqual(S.then(S).id, "01>01:11.00")
        self.assertEqual(self.A.plus(1, UNIT, UNIT), "01>01:11.00")
        self.assertEqual(self.A.plus(1, "0>1:01", "1>0:10"), "0>0:00")
        with self.assertRaises(BoundaryError):
            S.then(Span.parse("0>0:00"))

    def test_comparisons_are_not_identities(self):
        """Test the unitors and the associator move the apex order"""
        lam = self.A.unitor_left(UNIT, 1)
        self.assertEqual(lam, "01>01:11.00=>01>01:00.11")
        self.assertNotEqual(lam, self.A.identity(UNIT))
        self.assertEqual(self.A.unitor_right(SWAP, 1), "01>01:10.01=>01>01:01.10")
        self.assertEqual(self.A.associator(1, SWAP, SWAP, SWAP), "01>01:10.01=>01>01:01.10")
        T = self.A.tv[MultiIndex.of(1)]
        self.assertEqual(T.inverse(lam), "01>01:00.11=>01>01:11.00")

    def test_maps_follow_graphs(self):
        """Test a map of spans exists exactly when the graphs are included"""
        T = self.A.tv[MultiIndex.of(1)]
        self.assertEqual(T.hom("01>01:", UNIT), ("01>01:=>01>01:00.11",))
        self.assertEqual(T.hom(UNIT, "01>01:"), ())
        self.assertEqual(T.hom(UNIT, SWAP), ())

    def test_faulty_associator_fails_pentagon(self):
        """Test turning every associator around breaks the pentagon"""
        report = validate_chiral(spans(2, faulty=True))
        pentagon = report.get("coherence.pentagon")
        self.assertFalse(pentagon.passed)
        self.assertEqual(pentagon.witness[0], "1")

    def test_invertible_spans(self):
        """Test the bijective spans on {0, 1} are closed and chiral"""
        A = invertible_spans()
        self.assertEqual(A.cubes(MultiIndex.of(1)), (UNIT, SWAP, "01>01:10.01", "01>01:11.00"))
        self.assertTrue(validate_chiral(A).ok)

    def test_open_family_is_rejected(self):
        """Test a family the chosen pullback leaves"""
        with self.assertRaises(StructuralError):
            span_category("swap", [(0, 1)], keep=lambda S: S.id == SWAP)

    @unittest.skipUnless(SLOW, "set MCAT_SLOW_TESTS for the degree 3 spans")
    def test_degree_three(self):
        """Test fix4 with a degenerate second direction"""
        report = validate_chiral(spans())
        self.assertTrue(report.ok, report.failures())


class TestSpanMorphisms(unittest.TestCase):
    """Test endomorphisms of fix4 built from fixed spans"""

    def setUp(self):
        """Set up test fixtures"""
        self.A = spans(2)

    def test_restriction_is_lax(self):
        """Test composing with the partial identities on {0} is lax, not strict"""
        R = restriction(self.A)
        report = validate_pmorphism(R)
        self.assertTrue(report.ok, report.failures())
        self.assertFalse(is_strict(R))
        self.assertEqual(R("01>01:01.10"), "0>0:")
        self.assertEqual(R.comp_at(1, "0>1:01", "1>0:10"), "0>0:=>0>0:00")

    def test_restriction_is_only_lax(self):
        """Test restriction has no colax form"""
        with self.assertRaises(ArgumentError):
            restriction(self.A, p=2)

    def test_whisker_for_any_laxity(self):
        """Test composing with the unit span is a lax and a colax morphism"""
        for p in (1, 2):
            report = validate_pmorphism(unit_whisker(self.A, p))
            self.assertTrue(report.ok, (p, report.failures()))
        self.assertEqual(unit_whisker(self.A, 1)(SWAP), "01>01:10.01")

    def test_composites(self):
        """Test composites of the lax endomorphisms are lax endomorphisms"""
        R, W = restriction(self.A), unit_whisker(self.A, 1)
        for first, second in ((R, R), (W, R), (R, W)):
            report = validate_pmorphism(compose_pmorphisms(first, second))
            self.assertTrue(report.ok, (first.name, second.name, report.failures()))

    @unittest.skipUnless(SLOW, "set MCAT_SLOW_TESTS for the degree 3 spans")
    def test_lifted(self):
        """Test restriction carried to the degree 3 fix4"""
        A3 = spans()
        self.assertTrue(validate_pmorphism(restriction(A3)).ok)


class TestSpanCubes(unittest.TestCase):
    """Test pq-cubes of fix4"""

    def setUp(self):
        """Set up test fixtures"""
        self.A = spans(2)

    def test_unitor_cube(self):
        """Test the cube with left unitors as components"""
        phi = unitor_cube(self.A)
        report = validate_pqcube(phi)
        self.assertTrue(report.ok, report.failures())
        self.assertEqual(phi(UNIT), "01>01:11.00=>01>01:00.11")
        self.assertEqual(phi("01"), "1_01")

    def test_pool(self):
        """Test the cubes on identity, whisker and restriction rows"""
        pool = span_cube_pool(self.A)
        self.assertEqual(len(pool), 5)
        self.assertTrue(any(_same_data(c.R, restriction(self.A)) for c in pool))

    def test_composites_and_middle_four(self):
        """Test every composable pair and matrix of the pool"""
        pool = span_cube_pool(self.A)
        pairs = 0
        for a, b in product(pool, repeat=2):
            for d, edge, edge2 in (("p", a.V, b.U), ("q", a.S, b.R)):
                if same_morphism(edge, edge2):
                    pairs += 1
                    self.assertTrue(validate_pqcube(compose_pqcubes(d, a, b)).ok, (a.name, d, b.name))
        self.assertGreater(pairs, 0)
        phi = pool[0]
        for psi, sigma, tau in product(pool, repeat=3):
            if (same_morphism(phi.V, psi.U) and same_morphism(phi.S, sigma.R)
                    and same_morphism(psi.S, tau.R) and same_morphism(sigma.V, tau.U)):
                self.assertTrue(check_middle_four(phi, psi, sigma, tau)[0])

    def test_quintet_type(self):
        """Test the pool is of quintet type and a bent component is caught"""
        self.assertEqual(check_tv_quintet_type(span_cube_pool(self.A)), (True, ()))
        phi = unitor_cube(self.A)
        bent = PQCube("bent", phi.R, phi.S, phi.U, phi.V, {**phi.components, UNIT: self.A.identity(UNIT)})
        self.assertEqual(check_tv_quintet_type([phi, bent]), (False, ("bent", UNIT)))


class TestProjection(unittest.TestCase):
    """Test the transversal projection"""

    def setUp(self):
        """Set up test fixtures"""
        self.A = signed_parity()

    def test_levels(self):
        """Test the projection of a chiral category is its transversal categories"""
        self.assertEqual(set(tv_projection(self.A)), set(self.A.levels()))

    def test_functoriality(self):
        """Test the projection of a composite is the composite of projections"""
        M, K = parity_twist(self.A, 1), parity_collapse(self.A, 1)
        pm, pk = tv_projection(M), tv_projection(K)
        composite = tv_projection(compose_pmorphisms(M, K))
        for idx, cells in composite.items():
            self.assertEqual(cells, {c: pk[idx][pm[idx][c]] for c in pm[idx]})
        ident = tv_projection(identity_pmorphism(self.A, 1))
        self.assertEqual(ident[MultiIndex.of(1)]["x1-"], "x1-")

    def test_cube_projection(self):
        """Test a cube projects to its components level by level"""
        I1, I2 = identity_pmorphism(self.A, 1), identity_pmorphism(self.A, 2)
        chi = parity_character(I1, I1, I2, I2)
        proj = tv_projection(chi)
        self.assertEqual(proj[MultiIndex.of(1)], {"x0": "x0+", "x1": "x1-"})
        self.assertEqual(proj[MultiIndex.of(1, 2)]["e2(x1)"], "e2(x1-)")

    def test_quintet_type(self):
        """Test cubes are determined by frame and projection"""
        self.assertEqual(check_tv_quintet_type(parity_cube_pool(self.A, 1, 2)), (True, ()))
        with self.assertRaises(ArgumentError):
            tv_projection(42)


if __name__ == "__main__":
    unittest.main()
