from __future__ import annotations

from typing import Dict

try:
    from prometheus_client import Counter, Gauge, Histogram
except ImportError:  # pragma: no cover - optional dependency
    Counter = None
    Gauge = None
    Histogram = None


if Histogram:
    COMMAND_RUNTIME = Histogram(
        "charvar_command_runtime_seconds",
        "Runtime of charvar commands",
        ["command"],
    )
else:  # pragma: no cover - fallback
    COMMAND_RUNTIME = None

if Counter:
    ORACLE_POINTS = Counter(
        "charvar_oracle_points_total",
        "Representation points counted by the finite-field oracle",
        ["prime"],
    )
    TUBE_APPLICATIONS = Counter(
        "charvar_tube_applications_total",
        "Tube operator applications during surface assembly",
        ["kind"],
    )
else:  # pragma: no cover - fallback
    ORACLE_POINTS = None
    TUBE_APPLICATIONS = None

if Gauge:
    FIT_PRIMES = Gauge(
        "charvar_fit_primes",
        "Number of primes used by the latest core-matrix fit",
        ["kind"],
    )
else:  # pragma: no cover - fallback
    FIT_PRIMES = None


def _record_histogram(metric: Histogram | None, *, labels: Dict[str, str], value: float) -> None:
    if metric is None:
        return
    metric.labels(**labels).observe(value)


def _record_gauge(metric: Gauge | None, *, labels: Dict[str, str], value: float) -> None:
    if metric is None:
        return
    if labels:
        metric.labels(**labels).set(value)
    else:
        metric.set(value)


def _record_counter(metric: Counter | None, *, labels: Dict[str, str], value: float = 1.0) -> None:
    """Record a counter metric."""
    if metric is None:
        return
    metric.labels(**labels).inc(value)


def record_command_runtime(command: str, runtime_seconds: float) -> None:
    _record_histogram(COMMAND_RUNTIME, labels={"command": command}, value=max(runtime_seconds, 0.0))


def record_tube_application(kind: str, count: int = 1) -> None:
    _record_counter(TUBE_APPLICATIONS, labels={"kind": kind}, value=float(count))


def record_oracle_count(prime: int, points: int) -> None:
    # counters reject negative increments; point counts are never negative
    _record_counter(ORACLE_POINTS, labels={"prime": str(prime)}, value=float(max(points, 0)))


def record_fit(kind: str, n_primes: int) -> None:
    _record_gauge(FIT_PRIMES, labels={"kind": kind}, value=float(n_primes))
