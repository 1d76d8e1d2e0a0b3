"""
Monitoring for verification sweeps.
Times each sweep, counts checked instances, and alerts on slow sweeps and failed checks.
"""
import time
from collections import deque
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, Iterator, List, Optional

from .database import RunArchive
from .logging_config import get_logger
from .models import ValidationReport

logger = get_logger("monitoring")


@dataclass
class Alert:
    """Alert message"""
    level: str  # info, warning, error, critical
    message: str
    timestamp: datetime
    metadata: Dict = field(default_factory=dict)


@dataclass
class Metric:
    """Sweep metric"""
    name: str
    value: float
    timestamp: datetime
    tags: Dict = field(default_factory=dict)


class AlertHandler:
    """Base class for alert handlers"""

    def handle(self, alert: Alert) -> None:
        """Handle an alert"""
        raise NotImplementedError


class LoggingAlertHandler(AlertHandler):
    """Alert handler that logs alerts"""

    def handle(self, alert: Alert) -> None:
        msg = f"[ALERT {alert.level.upper()}] {alert.message}"
        if alert.metadata:
            msg += f" | Metadata: {alert.metadata}"

        if alert.level == "critical":
            logger.critical(msg)
        elif alert.level == "error":
            logger.error(msg)
        elif alert.level == "warning":
            logger.warning(msg)
        else:
            logger.info(msg)


class SweepMonitor:
    """Tracks sweep durations and check outcomes"""

    def __init__(
        self,
        archive: Optional[RunArchive] = None,
        alert_handlers: Optional[List[AlertHandler]] = None,
        slow_seconds: float = 60.0,
    ):
        self.archive = archive
        self.alert_handlers = alert_handlers or [LoggingAlertHandler()]
        self.slow_seconds = slow_seconds
        self.metrics_buffer: deque = deque(maxlen=1000)

    def record_metric(self, name: str, value: float, tags: Optional[Dict] = None) -> None:
        """Record a sweep metric"""
        metric = Metric(name=name, value=value, timestamp=datetime.utcnow(), tags=tags or {})
        self.metrics_buffer.append(metric)
        if self.archive is not None:
            self.archive.save_metric(name, value, tags)

    def send_alert(self, level: str, message: str, metadata: Optional[Dict] = None) -> None:
        """Send an alert"""
        alert = Alert(level=level, message=message, timestamp=datetime.utcnow(), metadata=metadata or {})
        for handler in self.alert_handlers:
            try:
                handler.handle(alert)
            except Exception as e:
                logger.error(f"Alert handler failed: {e}")

    @contextmanager
    def sweep(self, name: str) -> Iterator[None]:
        """Time the enclosed sweep and alert when it exceeds the threshold"""
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed = time.perf_counter() - start
            self.record_metric("sweep.seconds", elapsed, {"sweep": name})
            logger.debug(f"Sweep {name} took {elapsed:.3f}s")
            if elapsed > self.slow_seconds:
                self.send_alert(
                    "warning",
                    f"Slow sweep {name}: {elapsed:.1f}s",
                    {"sweep": name, "seconds": round(elapsed, 3), "threshold": self.slow_seconds},
                )

    def observe_report(self, name: str, report: ValidationReport) -> None:
        """Record instance counts and alert on every check that did not pass"""
        self.record_metric("sweep.instances", sum(r.instances for r in report.checks.values()), {"sweep": name})
        for rec in report.failures():
            level = "critical" if rec.status == "error" else "error"
            self.send_alert(
                level,
                f"{name}: {rec.name} {rec.status}",
                {"witness": list(rec.witness or ()), "detail": rec.detail},
            )

    def get_metrics_summary(self) -> Dict[str, Dict[str, Any]]:
        """Count, min, max and average per metric name"""
        by_name: Dict[str, List[float]] = {}
        for metric in self.metrics_buffer:
            by_name.setdefault(metric.name, []).append(metric.value)
        return {
            name: {"count": len(vs), "min": min(vs), "max": max(vs), "avg": sum(vs) / len(vs)}
            for name, vs in by_name.items()
        }
