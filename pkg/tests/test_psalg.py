"""
Unit tests for psalg module.
"""
import dataclasses
import unittest
from itertools import product

from mcat.config import KernelConfig
from mcat.chiralcalc import (
    compose_pmorphisms,
    compose_pqcubes,
    enumerate_pqcubes,
    identity_pmorphism,
    identity_pqcube,
)
from mcat.fixtures import (
    graph_xy,
    iso_double,
    parity_character,
    parity_collapse,
    parity_double,
    parity_twist,
    rebracketed,
    renormalised,
    signed_parity,
    spans_double,
    squares2,
)
from mcat.models import ArgumentError, BoundaryError, RejectedInputError
from mcat.psalg import (
    PsaCell,
    Psa012Cell,
    WeakDoubleCategory,
    Word,
    as_colax,
    cell_words,
    check_psa_middle_four,
    compose_algebra_morphisms,
    compose_psa_h,
    compose_psa_v,
    epsilon,
    epsilon_square,
    free_double,
    functor_J,
    functor_V,
    identity_algebra_morphism,
    identity_psa_cell,
    is_identity_morphism,
    is_normal,
    monad_mult,
    monad_ops,
    monad_unit,
    nests3,
    paths,
    same_psa_cell,
    same_weak_double,
    validate_012_cell,
    validate_algebra_morphism,
    validate_cat_graph,
    validate_psa_cell,
    validate_pseudo_algebra,
    validate_weak_double_category,
)

SLOW = KernelConfig.load().slow_tests
L = 3


def _chained(G, letters, k):
    """Brute-force count of composable words of length k."""
    return sum(
        1 for w in product(letters, repeat=k)
        if all(G.face(a, "+") == G.face(b, "-") for a, b in zip(w, w[1:]))
    )


class TestFreeDouble(unittest.TestCase):
    """Test the free double category monad on a graph of categories"""

    def setUp(self):
        """Set up test fixtures"""
        self.G = graph_xy()

    def test_graph_validates(self):
        """Test the two-object graph is a graph of categories"""
        report = validate_cat_graph(self.G)
        self.assertTrue(report.ok, report.failures())

    def test_word_counts(self):
        """Test enumerated paths and cell words match brute force"""
        ps, ws = paths(self.G, L), cell_words(self.G, L)
        for k in range(1, L + 1):
            self.assertEqual(len([p for p in ps if len(p) == k]), _chained(self.G, self.G.A1.objects, k))
            self.assertEqual(len([w for w in ws if len(w) == k]), _chained(self.G, sorted(self.G.A1.arrows), k))
        self.assertEqual(len([p for p in ps if len(p) == 2]), 2)
        self.assertEqual(len([p for p in ps if not p.items]), 2)
        self.assertEqual(len([w for w in ws if not w.items]), 3)

    def test_free_double_is_a_graph(self):
        """Test TA is again a graph of categories"""
        T = free_double(self.G, 2)
        report = validate_cat_graph(T.graph)
        self.assertTrue(report.ok, report.failures())
        self.assertEqual(T.word("(g|h)"), Word(("g", "h")))

    def test_middle_four(self):
        """Test concatenation and letterwise composition interchange"""
        T = free_double(self.G, 2)
        ws = [w for w in cell_words(self.G, 1)]
        checked = 0
        for a, b, c, d in product(ws, repeat=4):
            try:
                lhs = T.vertical(T.horizontal(b, a), T.horizontal(d, c))
                rhs = T.horizontal(T.vertical(b, d), T.vertical(a, c))
            except BoundaryError:
                continue
            self.assertEqual(lhs, rhs)
            checked += 1
        self.assertGreater(checked, 0)

    def test_monad_laws(self):
        """Test m after hT and after Th is the identity, and m is associative"""
        for w in cell_words(self.G, L):
            self.assertEqual(monad_mult((w,)), w)
            if w.items:
                self.assertEqual(monad_mult([monad_unit(a) for a in w.items]), w)
        for W in nests3(self.G, paths(self.G, L), L):
            self.assertEqual(monad_mult([monad_mult(Wi) for Wi in W]),
                             monad_mult([w for Wi in W for w in Wi]))

    def test_monad_ops_and_words_reject_bad_input(self):
        """Test unknown operations and malformed words raise"""
        self.assertEqual(monad_ops("h", "g"), Word(("g",)))
        with self.assertRaises(ArgumentError):
            monad_ops("z", "g")
        with self.assertRaises(ArgumentError):
            monad_mult([])
        with self.assertRaises(ArgumentError):
            Word()
        with self.assertRaises(ArgumentError):
            Word(("g",), base="x")

    def test_word_keys_quote_separators(self):
        """Test a letter containing the separator keeps its own key"""
        self.assertNotEqual(Word(("a|b",)).key, Word(("a", "b")).key)
        self.assertEqual(Word(("a|b",)).key, "(a\\|b)")
        self.assertNotEqual(Word(base="x)").key, Word(base="x").key)


class TestWeakDoubleCategories(unittest.TestCase):
    """Test weak double categories and the functors J and V"""

    def setUp(self):
        """Set up test fixtures"""
        self.D = parity_double()
        self.S = squares2()
        self.F = iso_double()

    def test_fixtures_validate(self):
        """Test the bijective spans, signed parity and commutative squares are weak double categories"""
        for D in (self.F, self.D, self.S):
            report = validate_weak_double_category(D)
            self.assertTrue(report.ok, report.failures())

    def test_faulty_pentagon(self):
        """Test the faulty associator only breaks the pentagon"""
        report = validate_weak_double_category(WeakDoubleCategory(signed_parity(2, faulty=True)))
        self.assertEqual([r.name for r in report.failures()], ["coherence.pentagon"])

    def test_degree_must_be_two(self):
        """Test only degree-2 chiral data reads as a double category"""
        with self.assertRaises(ArgumentError):
            WeakDoubleCategory(signed_parity(3))

    def test_j_gives_normal_algebras(self):
        """Test J(D) is a normal pseudo algebra"""
        for D in (self.F, self.D, self.S):
            P = functor_J(D, L)
            report = validate_pseudo_algebra(P)
            self.assertTrue(report.ok, report.failures())
            self.assertTrue(is_normal(P))

    def test_vj_is_identity(self):
        """Test V(J(D)) recovers the tables of D"""
        for D in (self.F, self.D, self.S):
            self.assertTrue(same_weak_double(functor_V(functor_J(D, L)), D))

    def test_bound_checks(self):
        """Test V needs length three and validation stays within the tables"""
        with self.assertRaises(ArgumentError):
            functor_V(functor_J(self.D, 2))
        with self.assertRaises(ArgumentError):
            validate_pseudo_algebra(functor_J(self.D, 2), bound=3)

    @unittest.skipUnless(SLOW, "set MCAT_SLOW_TESTS to check words of length 4")
    def test_j_at_length_four(self):
        """Test J of the bijective spans and of signed parity at the default length bound"""
        for D in (self.F, self.D):
            P = functor_J(D, 4)
            report = validate_pseudo_algebra(P)
            self.assertTrue(report.ok, report.failures())
            self.assertTrue(same_weak_double(functor_V(P), D))

    def test_span_unitors_reach_j(self):
        """Test the non-identity span unitors survive into J"""
        P = functor_J(self.F, L)
        self.assertEqual(self.F.core.lam[("01>01:00.11", 1)], "01>01:11.00=>01>01:00.11")
        self.assertTrue(same_weak_double(functor_V(P), self.F))

    @unittest.skipUnless(SLOW, "set MCAT_SLOW_TESTS to compose every span word of length 3")
    def test_all_spans(self):
        """Test J and V on the full span double category"""
        D = spans_double()
        P = functor_J(D, L)
        report = validate_pseudo_algebra(P)
        self.assertTrue(report.ok, report.failures())
        self.assertTrue(same_weak_double(functor_V(P), D))


class TestPseudoAlgebras(unittest.TestCase):
    """Test algebras that do not come from J"""

    def setUp(self):
        """Set up test fixtures"""
        self.P = functor_J(parity_double(), L)

    def test_rebracketed_algebra(self):
        """Test a transported normal algebra whose associators differ from J's"""
        Q = rebracketed(self.P)
        report = validate_pseudo_algebra(Q)
        self.assertTrue(report.ok, report.failures())
        self.assertTrue(is_normal(Q))
        self.assertNotEqual(Q.kappa, functor_J(functor_V(Q), L).kappa)

    def test_renormalised_algebra(self):
        """Test a non-trivial normaliser passes but is not normal"""
        Q = renormalised(self.P)
        report = validate_pseudo_algebra(Q)
        self.assertTrue(report.ok, report.failures())
        self.assertFalse(is_normal(Q))
        self.assertEqual(Q.normaliser("x1"), "x1-")
        with self.assertRaises(RejectedInputError):
            functor_V(Q)

    def test_broken_associator(self):
        """Test a wrong sign on kappa breaks the unit coherence"""
        kappa = dict(self.P.kappa)
        kappa[(Word(("x1",)), Word(("x1",)))] = "x0-"
        report = validate_pseudo_algebra(dataclasses.replace(self.P, kappa=kappa))
        rec = report.get("psa.unit_coherence")
        self.assertEqual(rec.status, "fail")
        self.assertEqual(rec.witness, ("T", "(x1|x1)"))

    def test_missing_composite(self):
        """Test an untabulated path stops validation at totality"""
        structure = dict(self.P.structure)
        del structure[Word(("x1", "x0", "x1"))]
        report = validate_pseudo_algebra(dataclasses.replace(self.P, structure=structure))
        self.assertEqual([r.name for r in report.failures()], ["psa.total"])


class TestAlgebraMorphisms(unittest.TestCase):
    """Test lax, colax, strict and pseudo morphisms"""

    def setUp(self):
        """Set up test fixtures"""
        self.A = signed_parity(2)
        self.over = {}
        self.P = functor_J(WeakDoubleCategory(self.A), L, self.over)

    def J(self, obj):
        return functor_J(obj, L, self.over)

    def test_j_of_double_functors(self):
        """Test twists and collapses become valid morphisms of the right flavor"""
        for p, flavor in ((1, "lax"), (2, "colax")):
            for R in (identity_pmorphism(self.A, p), parity_twist(self.A, p), parity_collapse(self.A, p)):
                F = self.J(R)
                self.assertEqual(F.flavor, flavor)
                self.assertIs(F.source, self.P)
                report = validate_algebra_morphism(F)
                self.assertTrue(report.ok, (R.name, report.failures()))

    def test_twist_comparisons(self):
        """Test the lax twist compares x1 x1 x1 with the sign of three pairs"""
        F = self.J(parity_twist(self.A, 1))
        self.assertEqual(F.at(Word(("x1", "x1"))), "x0-")
        self.assertEqual(F.at(Word(("x1", "x1", "x1"))), "x1-")
        self.assertEqual(F.at(Word(("x1", "x0", "x1"))), "x0-")

    def test_v_inverts_j(self):
        """Test V(J(R)) has the data of R"""
        for p in (1, 2):
            R = parity_twist(self.A, p)
            M = functor_V(self.J(R))
            self.assertEqual((M.p, M.cell_map, M.unit, M.comp), (R.p, R.cell_map, R.unit, R.comp))

    def test_composition_matches_j(self):
        """Test J of a composite equals the composite of J's"""
        for p in (1, 2):
            M = parity_twist(self.A, p)
            JM = self.J(M)
            both = compose_algebra_morphisms(JM, JM)
            self.assertEqual(both.comparison, self.J(compose_pmorphisms(M, M)).comparison)
            self.assertTrue(validate_algebra_morphism(both).ok)

    def test_identity_is_a_unit(self):
        """Test composing with the identity keeps the data"""
        JM = self.J(parity_twist(self.A, 1))
        I = identity_algebra_morphism(self.P)
        for F in (compose_algebra_morphisms(I, JM), compose_algebra_morphisms(JM, I)):
            self.assertEqual((F.flavor, F.cell_map, F.comparison), (JM.flavor, JM.cell_map, JM.comparison))

    def test_composition_errors(self):
        """Test mismatched flavors and ends are rejected"""
        lax, colax = self.J(parity_twist(self.A, 1)), self.J(parity_twist(self.A, 2))
        with self.assertRaises(ArgumentError):
            compose_algebra_morphisms(lax, colax)
        other = functor_J(WeakDoubleCategory(signed_parity(2)), L)
        with self.assertRaises(BoundaryError):
            compose_algebra_morphisms(lax, identity_algebra_morphism(other))
        with self.assertRaises(ArgumentError):
            as_colax(lax)

    def test_untwisted_pair_breaks_associativity(self):
        """Test dropping the sign on x1 x1 breaks coherence with the associators"""
        F = self.J(parity_twist(self.A, 1))
        comparison = dict(F.comparison)
        comparison[Word(("x1", "x1"))] = "x0+"
        report = validate_algebra_morphism(dataclasses.replace(F, comparison=comparison))
        self.assertEqual(report.get("morph.assoc").status, "fail")
        self.assertTrue(report.get("morph.naturality").passed)


class TestPsaCells(unittest.TestCase):
    """Test cells of pseudo algebras and their compositions"""

    def setUp(self):
        """Set up test fixtures"""
        self.A = signed_parity(2)
        self.over = {}
        self.I1, self.I2 = identity_pmorphism(self.A, 1), identity_pmorphism(self.A, 2)
        self.M1, self.M2 = parity_twist(self.A, 1), parity_twist(self.A, 2)
        self.chi = parity_character(self.I1, self.I1, self.I2, self.I2)
        self.one = identity_pqcube(self.I2, 1, 2, "p")

    def J(self, obj):
        return functor_J(obj, L, self.over)

    def test_cubes_give_cells(self):
        """Test every cube over identity and twist frames gives a valid cell"""
        hs, vs = [self.I1, self.M1], [self.I2, self.M2]
        count = 0
        for n, (R, S, U, V) in enumerate(product(hs, hs, vs, vs)):
            for cube in enumerate_pqcubes(R, S, U, V, name=f"c{n}"):
                report = validate_psa_cell(self.J(cube))
                self.assertTrue(report.ok, (cube.name, report.failures()))
                count += 1
        self.assertEqual(count, 16)

    def test_character_components(self):
        """Test the character cell carries the sign of x"""
        pi = self.J(self.chi)
        self.assertEqual((pi("*"), pi("x0"), pi("x1")), ("*+", "x0+", "x1-"))

    def test_compositions_match_cubes(self):
        """Test J carries both cube compositions to cell compositions"""
        a, b = self.chi, self.one
        self.assertTrue(same_psa_cell(self.J(compose_pqcubes("p", a, b)), compose_psa_h(self.J(a), self.J(b))))
        self.assertTrue(same_psa_cell(self.J(compose_pqcubes("q", a, b)), compose_psa_v(self.J(a), self.J(b))))
        twice = compose_psa_h(self.J(a), self.J(a))
        self.assertEqual(twice("x1"), "x1+")
        self.assertTrue(validate_psa_cell(twice).ok)

    def test_middle_four(self):
        """Test interchange on every arrangement of the identity-frame cells"""
        cells = [self.J(self.chi), self.J(self.one)]
        for four in product(cells, repeat=4):
            ok, rows, cols = check_psa_middle_four(*four)
            self.assertTrue(ok, (rows.name, cols.name))

    def test_identity_cells_are_units(self):
        """Test identity cells are units for both compositions"""
        pi = self.J(self.chi)
        self.assertTrue(same_psa_cell(compose_psa_h(pi, identity_psa_cell(pi.s, "h")), pi))
        self.assertTrue(same_psa_cell(compose_psa_h(identity_psa_cell(pi.r, "h"), pi), pi))
        self.assertTrue(same_psa_cell(compose_psa_v(pi, identity_psa_cell(pi.g, "v")), pi))
        with self.assertRaises(ArgumentError):
            identity_psa_cell(pi.f, "x")

    def test_compose_errors(self):
        """Test cells that do not share an edge do not compose"""
        pi = self.J(self.chi)
        twisted = self.J(identity_pqcube(self.M2, 1, 2, "p"))
        with self.assertRaises(BoundaryError):
            compose_psa_h(pi, twisted)

    def test_bad_frame_and_component(self):
        """Test a colax top edge and a wrong sign are reported"""
        pi = self.J(self.chi)
        report = validate_psa_cell(dataclasses.replace(pi, f=pi.r))
        self.assertEqual([r.name for r in report.failures()], ["psa_cell.frame"])
        vertical = dict(pi.vertical, x1="x1+", x0="x0-")
        report = validate_psa_cell(dataclasses.replace(pi, vertical=vertical))
        self.assertFalse(report.ok)

    def test_v_of_a_cell(self):
        """Test V sends a cell back to its cube"""
        cube = functor_V(self.J(self.chi))
        self.assertEqual(cube.components, self.chi.components)
        self.assertEqual((cube.p, cube.q), (1, 2))

    def test_j_rejects_other_laxities(self):
        """Test J needs lax rows and colax columns"""
        with self.assertRaises(ArgumentError):
            functor_J(signed_parity(3), L)
        with self.assertRaises(ArgumentError):
            functor_J(parity_twist(signed_parity(3), 1), L)


class TestEpsilon(unittest.TestCase):
    """Test the counit JV -> 1 and its triangle identities"""

    def setUp(self):
        """Set up test fixtures"""
        self.P = functor_J(parity_double(), L)

    def test_epsilon_of_j_is_identity(self):
        """Test epsilon is the identity on J(D)"""
        eps, report = epsilon(self.P)
        self.assertTrue(report.ok, report.failures())
        self.assertTrue(is_identity_morphism(eps))

    def test_epsilon_of_rebracketed(self):
        """Test epsilon is a non-trivial pseudo morphism on a rebracketed algebra"""
        Q = rebracketed(self.P)
        eps, report = epsilon(Q)
        self.assertTrue(report.ok, report.failures())
        self.assertFalse(is_identity_morphism(eps))
        self.assertEqual(eps.at(Word(("x1", "x1", "x0"))), "x0-")
        self.assertEqual(eps.at(Word(("x1", "x1"))), "x0+")
        self.assertEqual(eps.flavor, "pseudo")

    def test_epsilon_rejects_non_normal(self):
        """Test epsilon needs a normal algebra"""
        with self.assertRaises(RejectedInputError):
            epsilon(renormalised(self.P))

    def test_naturality_squares(self):
        """Test the naturality cells of epsilon are valid with identity components"""
        Q = rebracketed(self.P)
        for F in (identity_algebra_morphism(Q), identity_algebra_morphism(self.P, "lax")):
            report = validate_psa_cell(epsilon_square(F))
            self.assertTrue(report.ok, report.failures())
        with self.assertRaises(ArgumentError):
            epsilon_square(dataclasses.replace(identity_algebra_morphism(Q), flavor="colax"))


class TestCells012(unittest.TestCase):
    """Test maps of cells along strict corner morphisms"""

    def setUp(self):
        """Set up test fixtures"""
        self.A = A = signed_parity(2)
        self.over = {}
        I1, I2 = identity_pmorphism(A, 1), identity_pmorphism(A, 2)
        self.chi = functor_J(parity_character(I1, I1, I2, I2), L, self.over)
        self.one = functor_J(identity_pqcube(I2, 1, 2, "p"), L, self.over)
        self.P = self.chi.source
        self.I = identity_algebra_morphism(self.P)
        self.K = dataclasses.replace(functor_J(parity_collapse(A, 1), L, self.over), flavor="strict")

    def test_identity_corners(self):
        """Test the identity map of a cell"""
        report = validate_012_cell(Psa012Cell("id", self.chi, self.chi, self.I, self.I, self.I, self.I))
        self.assertTrue(report.ok, report.failures())

    def test_collapse_kills_the_character(self):
        """Test the collapse maps the character cell onto the identity cell"""
        K = self.K
        report = validate_012_cell(Psa012Cell("k", self.chi, self.one, K, K, K, K))
        self.assertTrue(report.ok, report.failures())

    def test_identity_does_not(self):
        """Test identity corners cannot map the character onto the identity cell"""
        report = validate_012_cell(Psa012Cell("no", self.chi, self.one, self.I, self.I, self.I, self.I))
        self.assertEqual([r.name for r in report.failures()], ["012.commutes"])
        self.assertEqual(report.get("012.commutes").witness, ("x1",))

    def test_lax_corner_rejected(self):
        """Test a non-strict corner fails the strictness check"""
        M = functor_J(parity_twist(self.A, 1), L, self.over)
        report = validate_012_cell(Psa012Cell("lax", self.chi, self.chi, M, self.I, self.I, self.I))
        self.assertEqual(report.get("012.strict").status, "fail")


if __name__ == '__main__':
    unittest.main()
