"""
Run archive for verification reports.
Uses SQLite by default; any SQLAlchemy URL works.
"""
import json
from dataclasses import dataclass
from datetime import datetime
from typing import Any, Dict, List, Optional

from sqlalchemy import (
    Column,
    DateTime,
    Float,
    ForeignKey,
    Index,
    Integer,
    MetaData,
    String,
    Table,
    Text,
    create_engine,
    desc,
    insert,
    select,
)
from sqlalchemy.engine import Engine

from .logging_config import get_logger
from .models import ValidationReport

logger = get_logger("database")

metadata = MetaData()

runs = Table(
    "runs",
    metadata,
    Column("id", Integer, primary_key=True, autoincrement=True),
    Column("command", String(64), nullable=False),
    Column("structure", String(256), nullable=False),
    Column("status", String(16), nullable=False),  # pass, fail, error
    Column("tool_version", String(32), nullable=False),
    Column("created_at", DateTime, nullable=False),
    Column("summary", Text),  # JSON counts
)

checks = Table(
    "checks",
    metadata,
    Column("id", Integer, primary_key=True, autoincrement=True),
    Column("run_id", Integer, ForeignKey("runs.id"), nullable=False),
    Column("name", String(128), nullable=False),
    Column("anchor", String(256), nullable=False),
    Column("status", String(16), nullable=False),
    Column("witness", Text),  # JSON list of cell ids
    Column("instances", Integer, nullable=False),
    Column("detail", Text),
)

sweep_metrics = Table(
    "sweep_metrics",
    metadata,
    Column("id", Integer, primary_key=True, autoincrement=True),
    Column("timestamp", DateTime, nullable=False),
    Column("metric_name", String(128), nullable=False),
    Column("metric_value", Float, nullable=False),
    Column("tags", Text),  # JSON
)

Index("idx_runs_structure", runs.c.structure)
Index("idx_runs_created", runs.c.created_at)
Index("idx_checks_run_id", checks.c.run_id)
Index("idx_metrics_name", sweep_metrics.c.metric_name)


@dataclass
class RunRecord:
    """Database record for one kernel invocation"""
    id: int
    command: str
    structure: str
    status: str
    tool_version: str
    created_at: datetime
    summary: Dict[str, int]


def run_status(report: ValidationReport) -> str:
    counts = report.summary()
    if counts.get("error"):
        return "error"
    return "pass" if report.ok else "fail"


class RunArchive:
    """Database interface for verification runs"""

    def __init__(self, url: str = "sqlite:///mcat_runs.db"):
        self.url = url
        self.engine: Optional[Engine] = None
        self._init_db()

    def _init_db(self) -> None:
        """Initialize database schema"""
        self.engine = create_engine(self.url, future=True)
        metadata.create_all(self.engine)
        logger.debug(f"Run archive ready at {self.url}")

    def save_report(self, command: str, report: ValidationReport) -> int:
        """Save a report and its check records; returns the run id"""
        with self.engine.begin() as conn:
            result = conn.execute(insert(runs).values(
                command=command,
                structure=report.structure,
                status=run_status(report),
                tool_version=report.tool_version,
                created_at=datetime.utcnow(),
                summary=json.dumps(report.summary(), sort_keys=True),
            ))
            run_id = int(result.inserted_primary_key[0])
            rows = [
                {
                    "run_id": run_id,
                    "name": rec.name,
                    "anchor": rec.anchor,
                    "status": rec.status,
                    "witness": json.dumps(list(rec.witness)) if rec.witness is not None else None,
                    "instances": rec.instances,
                    "detail": rec.detail,
                }
                for rec in (report.checks[k] for k in sorted(report.checks))
            ]
            if rows:
                conn.execute(insert(checks), rows)
        logger.info(f"Archived run {run_id}: {command} on {report.structure} ({run_status(report)})")
        return run_id

    def save_metric(self, metric_name: str, metric_value: float, tags: Optional[Dict[str, Any]] = None) -> None:
        """Save a sweep metric"""
        with self.engine.begin() as conn:
            conn.execute(insert(sweep_metrics).values(
                timestamp=datetime.utcnow(),
                metric_name=metric_name,
                metric_value=float(metric_value),
                tags=json.dumps(tags, sort_keys=True) if tags else None,
            ))

    def get_runs(self, structure: Optional[str] = None, status: Optional[str] = None, limit: int = 100) -> List[RunRecord]:
        """Get runs with optional filters, newest first"""
        query = select(runs)
        if structure:
            query = query.where(runs.c.structure == structure)
        if status:
            query = query.where(runs.c.status == status)
        query = query.order_by(desc(runs.c.id)).limit(limit)
        with self.engine.connect() as conn:
            return [
                RunRecord(
                    id=row.id,
                    command=row.command,
                    structure=row.structure,
                    status=row.status,
                    tool_version=row.tool_version,
                    created_at=row.created_at,
                    summary=json.loads(row.summary) if row.summary else {},
                )
                for row in conn.execute(query)
            ]

    def get_checks(self, run_id: int, status: Optional[str] = None) -> List[Dict[str, Any]]:
        """Get the check records of a run, sorted by name"""
        query = select(checks).where(checks.c.run_id == run_id)
        if status:
            query = query.where(checks.c.status == status)
        query = query.order_by(checks.c.name)
        with self.engine.connect() as conn:
            out = []
            for row in conn.execute(query):
                d = dict(row._mapping)
                d["witness"] = json.loads(d["witness"]) if d["witness"] else None
                out.append(d)
            return out

    def get_metrics(self, metric_name: Optional[str] = None, limit: int = 1000) -> List[Dict[str, Any]]:
        """Get recorded sweep metrics in insertion order"""
        query = select(sweep_metrics)
        if metric_name:
            query = query.where(sweep_metrics.c.metric_name == metric_name)
        query = query.order_by(sweep_metrics.c.id).limit(limit)
        with self.engine.connect() as conn:
            out = []
            for row in conn.execute(query):
                d = dict(row._mapping)
                d["tags"] = json.loads(d["tags"]) if d["tags"] else {}
                out.append(d)
            return out

    def close(self) -> None:
        """Dispose of the engine's connections"""
        if self.engine is not None:
            self.engine.dispose()
            self.engine = None
