"""
Unit tests for monitoring module.
"""
import unittest

from mcat.database import RunArchive
from mcat.models import ValidationReport
from mcat.monitoring import AlertHandler, SweepMonitor


class _Collect(AlertHandler):
    def __init__(self):
        self.alerts = []

    def handle(self, alert):
        self.alerts.append(alert)


class _Broken(AlertHandler):
    def handle(self, alert):
        raise RuntimeError("handler down")


class TestSweepMonitor(unittest.TestCase):
    """Test sweep timing and alerts"""

    def setUp(self):
        """Set up test fixtures"""
        self.sink = _Collect()
        self.monitor = SweepMonitor(alert_handlers=[_Broken(), self.sink])

    def test_sweep_records_duration(self):
        """Test a fast sweep is timed without alerts"""
        with self.monitor.sweep("q_axioms"):
            pass
        summary = self.monitor.get_metrics_summary()
        self.assertEqual(summary["sweep.seconds"]["count"], 1)
        self.assertEqual(self.sink.alerts, [])

    def test_slow_sweep_warns(self):
        """Test a sweep over the threshold raises a warning"""
        self.monitor.slow_seconds = -1.0
        with self.monitor.sweep("thm2.8"):
            pass
        self.assertEqual([a.level for a in self.sink.alerts], ["warning"])
        self.assertEqual(self.sink.alerts[0].metadata["sweep"], "thm2.8")

    def test_failed_checks_alert(self):
        """Test failures and errors alert while passes only count"""
        report = ValidationReport("fix4")
        report.check("a").observe(True)
        report.check("b").observe(False, ("x1",))
        report.error("c", "suite crashed")
        self.monitor.observe_report("psa", report)
        self.assertEqual([a.level for a in self.sink.alerts], ["error", "critical"])
        self.assertEqual(self.sink.alerts[0].metadata["witness"], ["x1"])
        self.assertEqual(self.monitor.get_metrics_summary()["sweep.instances"]["max"], 2)

    def test_metrics_reach_the_archive(self):
        """Test metrics are stored when an archive is attached"""
        archive = RunArchive("sqlite://")
        try:
            monitor = SweepMonitor(archive=archive, alert_handlers=[self.sink])
            with monitor.sweep("gq"):
                pass
            self.assertEqual(archive.get_metrics("sweep.seconds")[0]["tags"], {"sweep": "gq"})
        finally:
            archive.close()


if __name__ == '__main__':
    unittest.main()
