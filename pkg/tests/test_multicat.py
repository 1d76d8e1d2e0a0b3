"""
Unit tests for multicat module.
"""
import unittest

from mcat.fixtures import chain, fix3, idem, idem_codiscrete, z2
from mcat.models import ArgumentError, StructuralError
from mcat.multicat import (
    MultiIndex,
    coskeletal_dimension,
    count_families,
    dcosk,
    dtrc,
    indices_up_to,
    join_ids,
    multi_index_ops,
    reconstruction_witness,
    relabel_directions,
    split_ids,
    terminal_multiple_category,
    validate_multiple_category,
)
from mcat.quintets import build_Q


class TestMultiIndex(unittest.TestCase):
    """Test multi-index arithmetic"""

    def test_adjoin_and_remove(self):
        """Adjoining keeps the index sorted and removal drops one entry"""
        self.assertEqual(multi_index_ops(MultiIndex.of(1, 3), 2, "adjoin"), MultiIndex.of(1, 2, 3))
        self.assertEqual(multi_index_ops(MultiIndex.of(0, 2), 0, "remove"), MultiIndex.of(2))

    def test_invalid_operations(self):
        """Adjoining a present direction or removing an absent one is an argument error"""
        with self.assertRaises(ArgumentError):
            MultiIndex.of(1, 3).adjoin(3)
        with self.assertRaises(ArgumentError):
            MultiIndex.of(1, 3).remove(2)
        with self.assertRaises(ArgumentError):
            multi_index_ops(MultiIndex.of(1), 2, "swap")

    def test_dimension_and_degree(self):
        """Direction 0 counts towards dimension but not degree"""
        idx = MultiIndex.of(0, 2, 5)
        self.assertEqual(idx.dimension, 3)
        self.assertEqual(idx.degree, 2)
        self.assertEqual(idx.label, "0.2.5")
        self.assertEqual(MultiIndex.parse("e"), MultiIndex())
        self.assertEqual(MultiIndex.parse("2.0"), MultiIndex.of(0, 2))

    def test_indices_up_to(self):
        """Three directions give 1 + 3 + 3 indices up to dimension 2"""
        self.assertEqual(len(indices_up_to((0, 1, 2), 2)), 7)


class TestTruncatedMultipleCategory(unittest.TestCase):
    """Test validation, truncation and coskeleta"""

    def setUp(self):
        """Set up test fixtures"""
        self.terminal = terminal_multiple_category(3, (0, 1, 2))

    def test_terminal_validates(self):
        """The terminal structure satisfies every law"""
        report = validate_multiple_category(self.terminal)
        self.assertTrue(report.ok)
        self.assertGreater(report.get("interchange").instances, 0)

    def test_terminal_coskeletal_dimension(self):
        """The terminal structure is 0-coskeletal"""
        self.assertEqual(coskeletal_dimension(self.terminal).dimension, 0)

    def test_dtrc_keeps_low_dimensions(self):
        """Truncation keeps exactly the cells of dimension <= n"""
        T = dtrc(self.terminal, 1)
        self.assertEqual(T.dim_bound, 1)
        self.assertEqual(T.count(), 4)
        self.assertTrue(validate_multiple_category(T).ok)
        with self.assertRaises(ArgumentError):
            dtrc(T, 2)

    def test_dtrc_after_dcosk_is_identity(self):
        """Truncating a coskeleton back gives the original cells"""
        A = dtrc(build_Q(fix3(), 2), 1)
        B = dtrc(dcosk(A, 1, 2), 1)
        self.assertEqual(B.counts_by_index(), A.counts_by_index())
        self.assertEqual(B.faces, A.faces)

    def test_dcosk_validates(self):
        """The coskeleton of a valid truncation is a valid multiple category"""
        A = dtrc(build_Q(idem_codiscrete(), 2), 1)
        B = dcosk(A, 1, 2)
        self.assertTrue(validate_multiple_category(B).ok)
        self.assertEqual(len(B.of(MultiIndex.of(0, 1))), 16)

    def test_dangling_face_is_structural(self):
        """A face naming an unknown cell is a structural error"""
        M = terminal_multiple_category(1, (0,))
        x = M.of(MultiIndex.of(0))[0]
        M.faces[(x, 0, "+")] = "nowhere"
        with self.assertRaises(StructuralError):
            validate_multiple_category(M)

    def test_broken_composition_is_reported(self):
        """A composite with the wrong index fails composition.total"""
        M = terminal_multiple_category(2, (0, 1))
        x = M.of(MultiIndex.of(0, 1))[0]
        M.comps[(0, x, x)] = M.of(MultiIndex.of(0))[0]
        report = validate_multiple_category(M)
        self.assertFalse(report.ok)
        self.assertEqual(report.get("composition.total").witness, ("0", x, x))


class TestCoskeletalDimension(unittest.TestCase):
    """Test coskeletal dimension of quintet structures on small fixtures"""

    def test_codiscrete(self):
        """A codiscrete 2-category gives a 0-coskeletal structure"""
        self.assertEqual(coskeletal_dimension(build_Q(fix3(), 3)).dimension, 0)

    def test_locally_codiscrete(self):
        """Locally codiscrete but not codiscrete gives dimension 1"""
        res = coskeletal_dimension(build_Q(idem_codiscrete(), 2))
        self.assertEqual(res.dimension, 1)
        self.assertTrue(res.exact)
        self.assertEqual(res.witness[0], "collision")

    def test_locally_preordered(self):
        """Locally preordered but not locally codiscrete gives dimension 2"""
        res = coskeletal_dimension(build_Q(idem(), 3))
        self.assertEqual(res.dimension, 2)
        self.assertEqual(res.witness[0], "missing")

    def test_not_locally_preordered(self):
        """Z/2 2-cells leave non-commuting cube boundaries unfilled at dimension 2"""
        Q = build_Q(z2(), 3)
        w = reconstruction_witness(Q, 2)
        self.assertIsNotNone(w)
        self.assertEqual(w[0], "missing")
        res = coskeletal_dimension(Q)
        self.assertEqual(res.dimension, 3)
        self.assertFalse(res.exact)
        self.assertEqual(res.to_dict()["coskeletal_dimension"], 3)

    def test_family_count(self):
        """Half of the 64 face-consistent cube boundaries commute in Q(z2)"""
        Q = build_Q(z2(), 3)
        idx = MultiIndex.of(0, 1, 2)
        self.assertEqual(len(Q.of(idx)), 32)
        self.assertEqual(count_families(Q, idx), 64)


class TestRelabel(unittest.TestCase):
    """Test direction relabeling"""

    def test_relabel_preserves_validity(self):
        """Relabeling directions of a valid structure stays valid"""
        M = build_Q(chain("c2", 2), 2)
        R = relabel_directions(M, {0: 3, 1: 5, 2: 7})
        self.assertEqual(R.directions, (3, 5, 7))
        self.assertTrue(validate_multiple_category(R).ok)
        self.assertEqual(len(R.of(MultiIndex.of(3, 7))), len(M.of(MultiIndex.of(0, 2))))

    def test_relabel_needs_bijection(self):
        """A non-injective mapping is rejected"""
        M = terminal_multiple_category(1, (0, 1))
        with self.assertRaises(ArgumentError):
            relabel_directions(M, {0: 2, 1: 2})


class TestCellIds(unittest.TestCase):
    """Test quoting of separators inside cell ids"""

    def test_split_inverts_join(self):
        """Splitting a joined id gives back every part"""
        parts = ["a|b", "c,d", "", "x\\y", "(e)"]
        text = join_ids("|", parts)
        self.assertEqual(split_ids(text, "|"), parts)
        self.assertEqual(split_ids(join_ids(",", parts), ","), parts)

    def test_dangling_escape(self):
        """A trailing backslash is rejected"""
        with self.assertRaises(ArgumentError):
            split_ids("a|b\\", "|")


if __name__ == "__main__":
    unittest.main()
