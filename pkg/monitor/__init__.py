"""Optional Prometheus instrumentation for the engine."""

__all__ = ["metrics"]
