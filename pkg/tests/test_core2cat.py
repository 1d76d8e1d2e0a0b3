"""
Unit tests for core2cat module.
"""
import unittest
from itertools import product

from mcat.core2cat import (
    FORGETFUL,
    StrictTwoFunctor,
    TwoFunctorSequence,
    identity_functor,
    identity_sequence,
    paste,
    term,
    validate_sequence,
    validate_two_category,
    validate_two_functor,
)
from mcat.fixtures import fix1, fix3, poset3, trivial, z2
from mcat.models import BoundaryError, StructuralError


class TestFiniteTwoCategory(unittest.TestCase):
    """Test tabulated 2-categories and their validation"""

    def setUp(self):
        self.C = fix1()

    def test_fix1_sizes(self):
        """FIX1 has 7 monotone maps and 11 pointwise inequalities"""
        self.assertEqual(len(self.C.one_cells), 7)
        self.assertEqual(len(self.C.two_cells), 11)
        self.assertEqual(len(self.C.hom("2", "2")), 3)

    def test_fixtures_validate(self):
        """Every built-in 2-category passes the axiom sweep"""
        for C in (self.C, fix3(), poset3(), z2(), trivial()):
            report = validate_two_category(C)
            self.assertTrue(report.ok, (C.name, [r.to_dict() for r in report.failures()]))

    def test_composition_matches_pointwise(self):
        """comp1 agrees with composing the underlying monotone maps"""
        self.assertEqual(self.C.compose("t", "c1"), "i1")
        self.assertEqual(self.C.compose("c1", "t"), "k1")
        self.assertEqual(self.C.compose("k0", "k1"), "k0")

    def test_interchange_exhaustive(self):
        """Interchange holds on every horizontally adjacent pair"""
        report = validate_two_category(self.C)
        rec = report.get("interchange")
        self.assertTrue(rec.passed)
        self.assertGreater(rec.instances, 0)

    def test_corrupted_vcomp_reports_witness(self):
        """A corrupted vcomp entry is reported with the offending triple"""
        self.C.vcomp[("k0<=i2", "i2<=k1")] = "k0<=k0"
        report = validate_two_category(self.C)
        self.assertFalse(report.ok)
        failure = report.get("tables.boundary")
        self.assertEqual(failure.status, "fail")
        self.assertEqual(failure.witness, ("vcomp", "k0<=i2", "i2<=k1", "k0<=k0"))

    def test_dangling_id_is_structural(self):
        """A table entry naming an undeclared cell is a structural error"""
        self.C.comp1[("i2", "i2")] = "nope"
        with self.assertRaises(StructuralError):
            validate_two_category(self.C)


class TestPaste(unittest.TestCase):
    """Test the pasting evaluator"""

    def setUp(self):
        self.C = fix1()

    def test_empty_word_is_identity(self):
        """The empty word on f is the identity 2-cell of f"""
        self.assertEqual(paste(self.C, [], unit="c0"), "c0<=c0")

    def test_identity_word(self):
        """A word of identities evaluates to the identity"""
        self.assertEqual(paste(self.C, ["i2<=i2", "i2<=i2", "i2<=i2"]), "i2<=i2")

    def test_whiskered_terms(self):
        """Whiskers are applied before the vertical fold"""
        self.assertEqual(paste(self.C, [term("k0<=i2", left=("t",))]), "t<=t")
        self.assertEqual(paste(self.C, [term("c0<=c1", left=("k1",))]), "c1<=c1")
        self.assertEqual(paste(self.C, [term("k0<=i2", right=("c1",)), "c1<=c1"]), "c0<=c1")

    def test_boundary_error_names_position(self):
        """Non-composable neighbours raise a boundary error at their position"""
        with self.assertRaises(BoundaryError) as ctx:
            paste(self.C, ["c0<=c1", "k0<=i2"])
        self.assertEqual(ctx.exception.position, 1)

    def test_rebracketing_invariance(self):
        """Left and right folds agree on every composable word of length <= 4 in hom(2, 2)"""
        cells = [a for a in self.C.two_cells_sorted() if self.C.src(self.C.dom(a)) == "2"
                 and self.C.tgt(self.C.dom(a)) == "2"]
        for n in range(1, 5):
            for word in product(cells, repeat=n):
                if any(self.C.cod(a) != self.C.dom(b) for a, b in zip(word, word[1:])):
                    continue
                right = word[-1]
                for a in reversed(word[:-1]):
                    right = self.C.vert(a, right)
                self.assertEqual(paste(self.C, list(word)), right)


class TestTwoFunctors(unittest.TestCase):
    """Test strict 2-functors and sequences"""

    def test_identity_functor(self):
        """The identity functor preserves everything"""
        self.assertTrue(validate_two_functor(identity_functor(fix1())).ok)

    def test_constant_functor(self):
        """The functor to the one-object identity-only 2-category is valid"""
        C, T = fix1(), trivial()
        U = StrictTwoFunctor(
            name="const", source=C, target=T,
            object_map={x: "*" for x in C.objects},
            one_cell_map={f: "**" for f in C.one_cells},
            two_cell_map={a: "**<=**" for a in C.two_cells},
        )
        self.assertTrue(validate_two_functor(U).ok)

    def test_swapped_image_fails(self):
        """Swapping one 2-cell image is detected"""
        U = identity_functor(fix1())
        U.two_cell_map["k0<=i2"] = "i2<=k1"
        report = validate_two_functor(U)
        self.assertFalse(report.ok)
        self.assertIn("k0<=i2", report.get("functor.boundary").witness)

    def test_identity_sequence_links(self):
        """Composite links of the identity sequence are identities"""
        seq = identity_sequence(fix1(), 3)
        U = seq.link(3, 0)
        self.assertTrue(all(U.one(f) == f for f in seq.level(0).one_cells))
        self.assertIs(seq.level(7), seq.level(3))
        self.assertTrue(validate_sequence(seq).ok)

    def test_mismatched_objects_rejected(self):
        """Levels with different object sets are a structural error"""
        C = fix1()
        with self.assertRaises(StructuralError):
            TwoFunctorSequence(name="bad", shape=FORGETFUL, levels=[C, fix3()], links=[identity_functor(C)])


if __name__ == "__main__":
    unittest.main()
