"""
Unit tests for suites module.
"""
import unittest

from mcat.config import KernelConfig
from mcat.fixtures import fix3, parity_cube_pool, signed_parity, spans
from mcat.logging_config import current_suite
from mcat.models import ArgumentError, ValidationReport
from mcat.monitoring import AlertHandler, SweepMonitor
from mcat.suites import (
    SUITES,
    SuiteConfig,
    SuiteRunner,
    SuiteSettings,
    _sweep_cubes,
    coskdim,
    default_suites,
    gq,
    mates,
    psa,
    q_axioms,
    thm2_8,
    thm5_7,
    thm5_8,
)

SLOW = KernelConfig.load().slow_tests
SMALL = SuiteSettings(dim_bound=2, word_length=3, depth=1)


class _Collect(AlertHandler):
    def __init__(self):
        self.alerts = []

    def handle(self, alert):
        self.alerts.append(alert)


class TestSuites(unittest.TestCase):
    """Test each suite passes on the built-in fixtures at small bounds"""

    def setUp(self):
        """Set up test fixtures"""
        self.s = SMALL

    def assertPasses(self, report):
        self.assertTrue(report.ok, [r.to_dict() for r in report.failures()])
        self.assertGreater(len(report.checks), 0)

    def test_q_axioms(self):
        """Test Q of fix1, fix3 and the 3-chain satisfy the axioms"""
        report = q_axioms(self.s)
        self.assertPasses(report)
        self.assertTrue(any(name.startswith("poset3.") for name in report.checks))

    def test_coskdim_within_bound(self):
        """Test only the fixtures that fit the bound are classified"""
        report = coskdim(self.s)
        self.assertPasses(report)
        self.assertEqual(list(report.checks), ["coskdim.idem_codiscrete"])

    def test_mates(self):
        """Test the mate correspondence and mate extensions on fix1"""
        report = mates(self.s)
        self.assertPasses(report)
        self.assertGreater(report.get("fix1.mates.double_mate").instances, 0)

    def test_gq(self):
        """Test GQ of identity sequences coincides with Q"""
        report = gq(self.s)
        self.assertPasses(report)
        self.assertIn("id-seq[fix1].gq.coincides", report.checks)

    def test_thm2_8_on_a_given_structure(self):
        """Test identity-frame cubes of signed parity compose and interchange"""
        report = thm2_8(self.s, [signed_parity(2)])
        self.assertPasses(report)
        self.assertGreater(report.get("parity.12.middle_four").instances, 0)

    def test_thm2_8_on_spans(self):
        """Test fix4 validates and its identity-frame cubes compose"""
        report = thm2_8(self.s, [spans(2)])
        self.assertPasses(report)
        self.assertGreater(report.get("fix4.coherence.pentagon").instances, 0)
        self.assertGreater(report.get("fix4.12.composites").instances, 0)

    def test_thm2_8_sweep_size(self):
        """Test the default parity pools reach 500 composable pairs and 100 matrices"""
        A = signed_parity(self.s.chiral_degree)
        report = ValidationReport("sweep")
        for p in range(1, A.degree):
            _sweep_cubes(report, f"parity.{p}{p + 1}", parity_cube_pool(A, p, p + 1))
        self.assertPasses(report)
        pairs = sum(r.instances for name, r in report.checks.items() if name.endswith(".composites"))
        matrices = sum(r.instances for name, r in report.checks.items() if name.endswith(".middle_four"))
        self.assertGreaterEqual(pairs, 500)
        self.assertGreaterEqual(matrices, 100)

    @unittest.skipUnless(SLOW, "set MCAT_SLOW_TESTS for the full cube pools")
    def test_thm2_8(self):
        """Test the parity pools, the fix4 pool and the strict lift"""
        self.assertPasses(thm2_8(self.s))

    def test_thm5_7(self):
        """Test the monad laws on the two-object graph"""
        report = thm5_7(self.s)
        self.assertPasses(report)
        self.assertGreater(report.get("gxy.monad.assoc").instances, 0)

    def test_thm5_8(self):
        """Test VJ, epsilon and the re-bracketed algebra"""
        report = thm5_8(self.s)
        self.assertPasses(report)
        for name in (
            "fix4_iso.vj.identity", "parity.vj.identity", "sq2.vj.identity", "J(parity)~.epsilon.non_strict",
        ):
            self.assertIn(name, report.checks)

    def test_psa_on_a_given_structure(self):
        """Test cells from the identity frame of signed parity"""
        report = psa(self.s, [signed_parity(2)])
        self.assertPasses(report)
        self.assertGreater(report.get("parity.psa.middle_four").instances, 0)

    @unittest.skipUnless(SLOW, "set MCAT_SLOW_TESTS for all sixteen cells")
    def test_psa(self):
        """Test cells from identity and twist frames"""
        self.assertPasses(psa(self.s))

    def test_wrong_inputs(self):
        """Test suites reject inputs of the wrong kind"""
        with self.assertRaises(ArgumentError):
            thm5_7(self.s, [fix3()])
        with self.assertRaises(ArgumentError):
            thm5_8(self.s, [fix3()])
        with self.assertRaises(ArgumentError):
            psa(self.s, [signed_parity(3)])


class TestSuiteRunner(unittest.TestCase):
    """Test running, isolating and merging suites"""

    def setUp(self):
        """Set up test fixtures"""
        self.sink = _Collect()
        self.monitor = SweepMonitor(alert_handlers=[self.sink])

    def _boom(self, settings, inputs):
        raise RuntimeError("table exploded")

    def _fine(self, settings, inputs):
        report = ValidationReport("fine")
        report.check("law").observe(True)
        return report

    def test_default_suites(self):
        """Test every named suite is configured and enabled"""
        self.assertEqual([s.name for s in default_suites()], list(SUITES))
        self.assertIn("thm5.8", SUITES)

    def test_crash_is_isolated(self):
        """Test a crashing suite becomes an error check beside the others"""
        runner = SuiteRunner(
            [SuiteConfig("boom", self._boom), SuiteConfig("fine", self._fine)], SMALL, self.monitor,
        )
        report = runner.run()
        self.assertEqual(report.get("boom.suite").status, "error")
        self.assertIn("table exploded", report.get("boom.suite").detail)
        self.assertTrue(report.get("fine.law").passed)
        self.assertEqual([a.level for a in self.sink.alerts], ["critical"])

    def test_records_name_the_running_suite(self):
        """Test log records inside a suite are stamped with its name"""
        seen = []

        def named(settings, inputs):
            seen.append(current_suite())
            return self._fine(settings, inputs)

        runner = SuiteRunner([SuiteConfig("named", named)], SMALL, self.monitor)
        runner.run()
        self.assertEqual(seen, ["named"])
        self.assertEqual(current_suite(), "-")

    def test_single_suite_is_not_prefixed(self):
        """Test running one suite returns its own report"""
        runner = SuiteRunner([SuiteConfig("fine", self._fine)], SMALL, self.monitor)
        self.assertEqual(list(runner.run(["fine"]).checks), ["law"])

    def test_disabled_and_unknown(self):
        """Test disabled suites are skipped and unknown names rejected"""
        runner = SuiteRunner(
            [SuiteConfig("boom", self._boom, enabled=False), SuiteConfig("fine", self._fine)], SMALL, self.monitor,
        )
        self.assertTrue(runner.run().ok)
        with self.assertRaises(ArgumentError):
            runner.run(["nope"])

    def test_input_errors_propagate(self):
        """Test wrong inputs are not swallowed as suite crashes"""
        runner = SuiteRunner(default_suites(), SMALL, self.monitor)
        with self.assertRaises(ArgumentError):
            runner.run(["thm5.7"], [fix3()])

    def test_real_suite(self):
        """Test the runner drives a real suite and times it"""
        runner = SuiteRunner(default_suites(), SMALL, self.monitor)
        report = runner.run(["thm5.7"])
        self.assertTrue(report.ok)
        self.assertEqual(self.monitor.get_metrics_summary()["sweep.seconds"]["count"], 1)


if __name__ == '__main__':
    unittest.main()
