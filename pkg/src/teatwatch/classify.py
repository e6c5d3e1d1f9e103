"""Teat-temperature classification.

Defines the health statuses, the threshold table, the two animal-level
rating modes, and the public classification functions. The numeric work is
delegated to a kernel module chosen at import time: the compiled
``_speedups`` extension when available, otherwise the pure-Python
``_purepy`` twin. Set ``TEATWATCH_PURE_KERNELS=1`` to force the fallback.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum, IntEnum, unique
from typing import Sequence

import numpy as np

from . import _purepy
from .errors import ValidationError

try:
    from . import _speedups
except ImportError:  # extension not built on this interpreter
    _speedups = None

_FORCE_PURE = os.environ.get("TEATWATCH_PURE_KERNELS", "") == "1"
_KERNEL = _purepy if _speedups is None or _FORCE_PURE else _speedups


def kernel_backend() -> str:
    """Name of the kernel implementation selected at import: ``compiled``
    or ``pure``."""
    return "pure" if _KERNEL is _purepy else "compiled"


def available_kernels() -> dict[str, object]:
    """Importable kernel modules keyed by backend name."""
    kernels: dict[str, object] = {"pure": _purepy}
    if _speedups is not None:
        kernels["compiled"] = _speedups
    return kernels


@unique
class HealthStatus(IntEnum):
    """Verdict for a teat or an animal, ordered by severity."""

    INDETERMINATE = 0
    HEALTHY = 1
    ATTENTION = 2
    SICK = 3

    @property
    def label(self) -> str:
        """Human-readable name used on the wire and in reports."""
        return _STATUS_LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> "HealthStatus":
        try:
            return _STATUS_BY_LABEL[label.strip().lower()]
        except KeyError:
            raise ValidationError(f"unknown health status: {label!r}") from None


_STATUS_LABELS = {
    HealthStatus.INDETERMINATE: "Indeterminate",
    HealthStatus.HEALTHY: "Healthy",
    HealthStatus.ATTENTION: "Attention",
    HealthStatus.SICK: "Sick",
}
_STATUS_BY_LABEL = {label.lower(): status for status, label in _STATUS_LABELS.items()}


@unique
class ClassificationMode(Enum):
    """How the four per-teat verdicts combine into one animal verdict.

    ``LEGACY`` reproduces the original device firmware: the three bands are
    tested in fixed order (Healthy, Attention, Sick) and the first band
    containing any teat decides the animal, so one teat in the Healthy band
    masks another in the Sick band. ``WORST_TEAT`` takes the most severe
    per-teat verdict and is the recommended screening behaviour.
    """

    LEGACY = "legacy"
    WORST_TEAT = "worst-teat"

    @classmethod
    def from_name(cls, name: str) -> "ClassificationMode":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValidationError(f"unknown classification mode: {name!r}") from None


@dataclass(frozen=True)
class ThresholdTable:
    """The three cut-offs (degrees Celsius) that carve teat temperature
    into four bands.

    Band semantics, fixed across the package:

    * ``t <= healthy_low``                 -> Indeterminate
    * ``healthy_low < t <= healthy_high``  -> Healthy
    * ``healthy_high < t <= attention_high`` -> Attention
    * ``t > attention_high``               -> Sick
    """

    healthy_low: float = 33.0
    healthy_high: float = 34.5
    attention_high: float = 36.5

    def __post_init__(self):
        values = (self.healthy_low, self.healthy_high, self.attention_high)
        if not all(math.isfinite(v) for v in values):
            raise ValidationError("thresholds must be finite numbers")
        if not self.healthy_low < self.healthy_high < self.attention_high:
            raise ValidationError(
                "thresholds must satisfy healthy_low < healthy_high < attention_high")

    def as_args(self) -> tuple[float, float, float]:
        """Cut-offs in kernel argument order."""
        return (self.healthy_low, self.healthy_high, self.attention_high)


DEFAULT_THRESHOLDS = ThresholdTable()

# Working range and stated accuracy of the infrared thermometer used for
# field readings; the strict JSON API enforces the range, the classifier
# itself accepts any finite value.
THERMOMETER_RANGE = (32.0, 42.9)
THERMOMETER_ACCURACY = 0.3

# Published physiological reference intervals shown alongside diagnoses.
# Display-only: classification uses ThresholdTable exclusively.
REFERENCE_INDICATORS = (
    ("body surface, healthy cow", "35.8 to 36.5 °C"),
    ("rectal, healthy cow", "36.5 to 37.5 °C"),
    ("teat skin, healthy", "33.0 to 34.5 °C"),
    ("teat skin, mastitic", "above 36.5 °C"),
    ("udder skin, healthy", "32.0 to 37.0 °C"),
    ("udder skin, inflamed", "above 38.0 °C"),
)


def reference_ranges(thresholds: ThresholdTable = DEFAULT_THRESHOLDS) -> list[tuple[HealthStatus, str]]:
    """Per-status temperature ranges, rendered from the threshold table so
    the text can never disagree with the classifier."""
    lo, hi, attn = thresholds.as_args()
    return [
        (HealthStatus.HEALTHY, f"{lo:.1f} < t ≤ {hi:.1f} °C"),
        (HealthStatus.ATTENTION, f"{hi:.1f} < t ≤ {attn:.1f} °C"),
        (HealthStatus.SICK, f"t > {attn:.1f} °C"),
    ]


def _checked_temp(value: float, what: str) -> float:
    try:
        t = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{what} is not a number: {value!r}") from None
    if not math.isfinite(t):
        raise ValidationError(f"{what} must be finite, got {value!r}")
    return t


def classify_teat(temperature: float,
                  thresholds: ThresholdTable = DEFAULT_THRESHOLDS) -> HealthStatus:
    """Classify a single teat reading."""
    t = _checked_temp(temperature, "teat temperature")
    return HealthStatus(_KERNEL.teat_code(t, *thresholds.as_args()))


def classify_quartet(teats: Sequence[float],
                     mode: ClassificationMode = ClassificationMode.WORST_TEAT,
                     thresholds: ThresholdTable = DEFAULT_THRESHOLDS) -> HealthStatus:
    """Classify one milking's four teat readings into one animal verdict."""
    teats = tuple(teats)
    if len(teats) != 4:
        raise ValidationError(f"expected 4 teat temperatures, got {len(teats)}")
    t1, t2, t3, t4 = (_checked_temp(t, f"teat {i} temperature")
                      for i, t in enumerate(teats, start=1))
    if mode is ClassificationMode.WORST_TEAT:
        code = _KERNEL.quartet_code_worst(t1, t2, t3, t4, *thresholds.as_args())
    elif mode is ClassificationMode.LEGACY:
        code = _KERNEL.quartet_code_legacy(t1, t2, t3, t4, *thresholds.as_args())
    else:
        raise ValidationError(f"unknown classification mode: {mode!r}")
    return HealthStatus(code)


def classify_batch(temps,
                   mode: ClassificationMode = ClassificationMode.WORST_TEAT,
                   thresholds: ThresholdTable = DEFAULT_THRESHOLDS) -> np.ndarray:
    """Classify many quartets at once.

    ``temps`` is anything convertible to an (n, 4) float array. Returns an
    int8 array of ``HealthStatus`` codes aligned with the input rows.
    """
    arr = np.ascontiguousarray(np.asarray(temps, dtype=np.float64))
    if arr.ndim != 2 or arr.shape[1] != 4:
        raise ValidationError(
            f"expected an (n, 4) temperature array, got shape {arr.shape}")
    if arr.size and not np.isfinite(arr).all():
        raise ValidationError("temperature array contains non-finite values")
    out = np.empty(arr.shape[0], dtype=np.int8)
    if mode is ClassificationMode.WORST_TEAT:
        worst = True
    elif mode is ClassificationMode.LEGACY:
        worst = False
    else:
        raise ValidationError(f"unknown classification mode: {mode!r}")
    _KERNEL.fill_batch_codes(arr, out, worst, *thresholds.as_args())
    return out
