"""
Unit tests for adjchains module.
"""
import unittest
from itertools import product

from mcat.config import KernelConfig
from mcat.adjchains import (
    AdjChain,
    AdjunctionData,
    ChainTwoCell,
    adj_level,
    bnd_sequence,
    build_Adj,
    build_Bnd,
    bundle_level,
    chain_cell,
    check_mate_extensions,
    compose_chain_cells,
    compose_chains,
    enumerate_chains,
    find_adjunctions,
    identity_chain,
    inverse_mate,
    mate,
    mate_extension,
    mate_restriction,
    validate_adjunction,
    validate_chain,
    validate_chain_cell,
)
from mcat.core2cat import validate_two_category
from mcat.fixtures import fix1, fix3, idem, z2
from mcat.genquintets import enumerate_uquintets
from mcat.models import ArgumentError, BoundaryError
from mcat.multicat import MultiIndex, validate_multiple_category
from mcat.quintets import build_Q

SLOW = KernelConfig.load().slow_tests


def all_adjunctions(C):
    return [a for f in C.one_cells_sorted() for a in find_adjunctions(C, f)]


class TestAdjunctions(unittest.TestCase):
    """Test adjunction search and mates in FIX1"""

    def setUp(self):
        """Set up test fixtures"""
        self.C = fix1()

    def test_constant_terminal_coconstant_chain(self):
        """c0 -| t -| c1 and nothing to the right of c1"""
        self.assertEqual(find_adjunctions(self.C, "c0"), [AdjunctionData("c0", "t", "i1<=i1", "k0<=i2")])
        self.assertEqual(find_adjunctions(self.C, "t"), [AdjunctionData("t", "c1", "i2<=k1", "i1<=i1")])
        self.assertEqual(find_adjunctions(self.C, "c1"), [])
        self.assertEqual(find_adjunctions(self.C, "k0"), [AdjunctionData("k0", "k1", "i2<=k1", "k0<=i2")])

    def test_failed_triangle(self):
        """A unit and counit with the right boundary can still break a triangle identity"""
        report = validate_adjunction(z2(), AdjunctionData("1", "1", "z1", "z0"))
        self.assertTrue(report.get("adjunction.boundary").passed)
        self.assertFalse(report.get("adjunction.triangle_left").passed)

    def test_mate_of_identity(self):
        """The mate of an identity across one adjunction is an identity"""
        for a in all_adjunctions(self.C):
            self.assertEqual(mate(self.C, self.C.identity_cell(a.left), a, a), self.C.identity_cell(a.right))

    def test_double_mate(self):
        """mate and inverse_mate are mutually inverse on every parallel pair of adjunctions"""
        adjs = all_adjunctions(self.C)
        checked = 0
        for a, b in product(adjs, repeat=2):
            for phi in self.C.cells(a.left, b.left):
                self.assertEqual(inverse_mate(self.C, mate(self.C, phi, a, b), a, b), phi)
                checked += 1
            for psi in self.C.cells(b.right, a.right):
                self.assertEqual(mate(self.C, inverse_mate(self.C, psi, a, b), a, b), psi)
        self.assertGreater(checked, 0)

    def test_mate_by_search(self):
        """The formula agrees with a search for the unique cell with the given inverse mate"""
        a, b = find_adjunctions(self.C, "k0")[0], find_adjunctions(self.C, "i2")[0]
        phi = "k0<=i2"
        found = [psi for psi in self.C.cells(b.right, a.right) if inverse_mate(self.C, psi, a, b) == phi]
        self.assertEqual(found, [mate(self.C, phi, a, b)])
        self.assertEqual(found, ["i2<=k1"])

    def test_mate_boundary_error(self):
        """A cell between the wrong arrows has no mate"""
        a = find_adjunctions(self.C, "c0")[0]
        with self.assertRaises(ArgumentError):
            mate(self.C, "k0<=i2", a, a)


class TestChains(unittest.TestCase):
    """Test adjunction chains and their cells"""

    def setUp(self):
        """Set up test fixtures"""
        self.C = fix1()
        self.ones = enumerate_chains(self.C, 1)

    def test_enumeration(self):
        """Five chains of length 1, three of length 2"""
        self.assertEqual(len(self.ones), 5)
        twos = enumerate_chains(self.C, 2)
        self.assertEqual(sorted(u.arrows for u in twos), [("c0", "t", "c1"), ("i1", "i1", "i1"), ("i2", "i2", "i2")])
        starts = [u.arrows for u in self.ones if self.C.src(u.arrows[0]) == "1" and self.C.tgt(u.arrows[0]) == "2"]
        self.assertEqual(starts, [("c0", "t")])

    def test_composites_are_chains(self):
        """Composites of valid chains of length <= 2 pass validate_chain"""
        for n in (1, 2):
            chains = enumerate_chains(self.C, n)
            for u, v in product(chains, repeat=2):
                self.assertTrue(validate_chain(self.C, u).ok)
                if self.C.tgt(u.arrows[0]) != self.C.src(v.arrows[0]):
                    with self.assertRaises(BoundaryError):
                        compose_chains(self.C, u, v)
                    continue
                self.assertTrue(validate_chain(self.C, compose_chains(self.C, u, v)).ok)

    def test_identity_and_associativity(self):
        """Identity chains are units and composition is associative"""
        for u in self.ones:
            x, y = self.C.src(u.arrows[0]), self.C.tgt(u.arrows[0])
            self.assertEqual(compose_chains(self.C, identity_chain(self.C, x, 1), u), u)
            self.assertEqual(compose_chains(self.C, u, identity_chain(self.C, y, 1)), u)
        for u, v, w in product(self.ones, repeat=3):
            if self.C.tgt(u.arrows[0]) != self.C.src(v.arrows[0]) or self.C.tgt(v.arrows[0]) != self.C.src(w.arrows[0]):
                continue
            self.assertEqual(
                compose_chains(self.C, compose_chains(self.C, u, v), w),
                compose_chains(self.C, u, compose_chains(self.C, v, w)),
            )

    def test_vertical_composite_alternates(self):
        """Component 1 of a vertical composite is ψ_1 ⊗ φ_1"""
        u = next(c for c in self.ones if c.arrows == ("k0", "k1"))
        v = next(c for c in self.ones if c.arrows == ("i2", "i2"))
        phi = chain_cell(self.C, u, v, "k0<=i2")
        self.assertEqual(phi.components, ("k0<=i2", "i2<=k1"))
        psi = chain_cell(self.C, v, v, "i2<=i2")
        out = compose_chain_cells(self.C, "vertical", phi, psi)
        self.assertEqual(out.components, ("k0<=i2", self.C.vert("i2<=i2", "i2<=k1")))
        self.assertTrue(validate_chain_cell(self.C, out).ok)

    def test_whiskers_are_mate_coherent(self):
        """Whiskered components equal the mates of the whiskered first component"""
        level = adj_level(self.C, 1)
        for a in level.cells.values():
            for s in self.ones:
                if self.C.src(s.arrows[0]) != self.C.tgt(a.source.arrows[0]):
                    continue
                out = compose_chain_cells(self.C, "whisker", a, left=s)
                self.assertEqual(out, chain_cell(self.C, out.source, out.target, out.components[0]))

    def test_cell_boundary_checked(self):
        """A component between the wrong arrows is reported"""
        u = next(c for c in self.ones if c.arrows == ("k0", "k1"))
        v = next(c for c in self.ones if c.arrows == ("i2", "i2"))
        self.assertTrue(validate_chain_cell(self.C, chain_cell(self.C, u, u, "k0<=k0")).ok)
        wrong = ChainTwoCell(u, v, ("k0<=i2", "k1<=k1"))
        self.assertFalse(validate_chain_cell(self.C, wrong).get("cell.boundary").passed)

    def test_cell_with_wrong_mate(self):
        """In Z/2 the odd unit and counit make the identity's mate the identity, not z1"""
        C = z2()
        adj = AdjunctionData("1", "1", "z1", "z1")
        u = AdjChain(("1", "1"), (adj,))
        self.assertTrue(validate_chain(C, u).ok)
        self.assertEqual(mate(C, "z1", adj, adj), "z1")
        report = validate_chain_cell(C, ChainTwoCell(u, u, ("z0", "z1")))
        self.assertTrue(report.get("cell.boundary").passed)
        self.assertFalse(report.get("cell.mates").passed)
        self.assertEqual(report.get("cell.mates").witness, ("1", "z1", "z0"))


class TestAdjStructures(unittest.TestCase):
    """Test the chain levels and Adj(C)"""

    def test_levels_validate(self):
        """Adj_1 and Adj_2 of FIX1 are 2-categories"""
        for n in (1, 2):
            report = validate_two_category(adj_level(fix1(), n).category)
            self.assertTrue(report.ok, [r.to_dict() for r in report.failures()])

    def test_no_adjunctions(self):
        """Without non-identity adjunctions only identity chains remain"""
        level = adj_level(idem(), 2)
        self.assertEqual([u.arrows for u in level.chains.values()], [("1", "1", "1")])

    def test_adj_fix1_dimension_two(self):
        """Adj(FIX1) with chains up to length 2 is a multiple category through dimension 2"""
        M = build_Adj(fix1(), 2, 2)
        self.assertTrue(validate_multiple_category(M).ok)
        self.assertEqual(len(M.of(MultiIndex.of(1))), 5)
        self.assertEqual(len(M.of(MultiIndex.of(2))), 3)

    def test_adj_idem_dimension_three(self):
        """Adj of a 2-category without adjunctions validates through dimension 3"""
        self.assertTrue(validate_multiple_category(build_Adj(idem(), 2, 3)).ok)

    def test_mate_extension_unique(self):
        """Every 01-cell of Adj(FIX1) completes to exactly one double cell"""
        report = check_mate_extensions(fix1(), enumerate_chains(fix1(), 1))
        self.assertTrue(report.ok)
        self.assertGreater(report.get("mate_extension.unique").instances, 0)

    def test_mate_extension_z2(self):
        """Across identity adjunctions the extension is the cell itself"""
        C = z2()
        a = AdjunctionData("1", "1", "z0", "z0")
        self.assertEqual(mate_extension(C, "1", "1", a, a, "z1"), "z1")
        self.assertEqual(mate_restriction(C, "1", "1", a, a, "z1"), "z1")

    @unittest.skipUnless(SLOW, "set MCAT_SLOW_TESTS=true for Adj(FIX1) at dimension 3")
    def test_adj_fix1_dimension_three(self):
        """Adj(FIX1) validates through dimension 3"""
        self.assertTrue(validate_multiple_category(build_Adj(fix1(), 2, 3)).ok)


class TestBundles(unittest.TestCase):
    """Test bundle levels and Bnd(C)"""

    def test_bundle_level_sizes(self):
        """Bundles of three arrows in FIX1 form a 2-category of the expected size"""
        level = bundle_level(fix1(), 3)
        self.assertEqual(len(level.category.one_cells), 37)
        self.assertEqual(len(level.category.two_cells), 245)
        self.assertTrue(validate_two_category(level.category).ok)

    def test_links_repeat_last(self):
        """The composite link from level 0 to level 2 is constant in the tail"""
        seq, _ = bnd_sequence(fix1(), 2)
        self.assertEqual(seq.link(0, 2).one("c0"), "(c0,c0,c0)")
        self.assertEqual(seq.link(1, 2).one("(c0,c1)"), "(c0,c1,c1)")

    def test_length_one_is_Q(self):
        """Bundles of length one reproduce Q"""
        B = build_Bnd(fix3(), 0, 3)
        Q = build_Q(fix3(), 3)
        self.assertEqual(B.cells, Q.cells)
        self.assertEqual(B.comps, Q.comps)

    def test_fix1_quintet_count(self):
        """12-cells of Bnd(FIX1) match a componentwise count with constant tails"""
        C = fix1()
        seq, _ = bnd_sequence(C, 2)

        def A(x, y, z, w, r, s):
            return sum(
                len(C.cells(C.compose(v, r), C.compose(s, u)))
                for u in C.hom(x, z) for v in C.hom(y, w)
            )

        expected = 0
        for x, y, z, w in product(C.objects, repeat=4):
            head = sum(A(x, y, z, w, r, s) for r in C.hom(x, y) for s in C.hom(z, w))
            tail = sum(A(x, y, z, w, r, s) ** 2 for r in C.hom(x, y) for s in C.hom(z, w))
            expected += head * tail
        self.assertEqual(len(enumerate_uquintets(seq, 1, 2)), expected)

    def test_bnd_validates(self):
        """Bnd structures are multiple categories"""
        self.assertTrue(validate_multiple_category(build_Bnd(fix3(), 2, 3)).ok)
        self.assertTrue(validate_multiple_category(build_Bnd(z2(), 1, 2)).ok)


if __name__ == "__main__":
    unittest.main()
