"""
Unit tests for logging_config module.
"""
import logging
import tempfile
import unittest
from pathlib import Path

from mcat.logging_config import SuiteFilter, current_suite, get_logger, setup_logging, suite_context


class TestLoggingConfig(unittest.TestCase):
    """Test the mcat logger tree and its suite stamp"""

    def setUp(self):
        """Set up test fixtures"""
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def tearDown(self):
        logger = logging.getLogger("mcat")
        for handler in list(logger.handlers):
            handler.close()
        logger.handlers.clear()

    def test_get_logger_names(self):
        """Test child loggers hang under mcat"""
        self.assertEqual(get_logger("suites").name, "mcat.suites")
        self.assertEqual(get_logger().name, "mcat")

    def test_suite_context_nests(self):
        """Test the stamp follows the innermost suite and resets afterwards"""
        with suite_context("q.axioms"):
            with suite_context("psa"):
                self.assertEqual(current_suite(), "psa")
            self.assertEqual(current_suite(), "q.axioms")
        self.assertEqual(current_suite(), "-")

    def test_filter_stamps_records(self):
        """Test the filter adds the running suite to a record"""
        record = logging.LogRecord("mcat.x", logging.INFO, __file__, 1, "msg", None, None)
        with suite_context("gq"):
            self.assertTrue(SuiteFilter().filter(record))
        self.assertEqual(record.suite, "gq")

    def test_file_handlers(self):
        """Test file logging writes debug lines and keeps errors apart"""
        logger = setup_logging(log_dir=self.tmp.name, log_level="WARNING", log_to_file=True, log_to_console=False)
        self.assertEqual(len(logger.handlers), 2)
        with suite_context("mates"):
            get_logger("t").debug("quiet")
            get_logger("t").error("loud")
        for handler in logger.handlers:
            handler.flush()
        everything = (Path(self.tmp.name) / "mcat.log").read_text(encoding="utf-8")
        errors = (Path(self.tmp.name) / "mcat_errors.log").read_text(encoding="utf-8")
        self.assertIn("[mates]", everything)
        self.assertIn("quiet", everything)
        self.assertNotIn("quiet", errors)
        self.assertIn("loud", errors)

    def test_console_only(self):
        """Test the default setup writes no files"""
        logger = setup_logging(log_dir=self.tmp.name)
        self.assertEqual(len(logger.handlers), 1)
        self.assertEqual(list(Path(self.tmp.name).iterdir()), [])


if __name__ == "__main__":
    unittest.main()
