"""Report envelopes and their JSON / TSV renderings."""
from src.lefhodge.report.envelope import ReportEnvelope, to_jsonable

__all__ = ["ReportEnvelope", "to_jsonable"]
