"""Teat-temperature screening for dairy herds.

Classifies milking-time teat temperatures into health statuses, stores the
readings, serves them over HTTP (including the original handheld device's
wire format), and reports how the temperature route compares with the
handler's cup test.
"""

__version__ = "0.1.0"

from .classify import (
    DEFAULT_THRESHOLDS,
    REFERENCE_INDICATORS,
    THERMOMETER_ACCURACY,
    THERMOMETER_RANGE,
    ClassificationMode,
    HealthStatus,
    ThresholdTable,
    available_kernels,
    classify_batch,
    classify_quartet,
    classify_teat,
    kernel_backend,
    reference_ranges,
)
from .dataset import (
    ConcordanceReport,
    ImportResult,
    RowError,
    batch_classify,
    concordance_report,
    export_report,
    import_csv,
    open_field_dataset,
    report_from_json,
)
from .dates import parse_reading_date
from .errors import (
    CsvFormatError,
    EmptyStoreError,
    StorageError,
    TeatwatchError,
    ValidationError,
)
from .service import LEGACY_INSERT_PATH, create_app
from .store import AnimalRecord, RecordStore

__all__ = [
    "__version__",
    "AnimalRecord",
    "ClassificationMode",
    "ConcordanceReport",
    "CsvFormatError",
    "DEFAULT_THRESHOLDS",
    "EmptyStoreError",
    "HealthStatus",
    "ImportResult",
    "LEGACY_INSERT_PATH",
    "RecordStore",
    "REFERENCE_INDICATORS",
    "RowError",
    "StorageError",
    "THERMOMETER_ACCURACY",
    "THERMOMETER_RANGE",
    "TeatwatchError",
    "ThresholdTable",
    "ValidationError",
    "available_kernels",
    "batch_classify",
    "classify_batch",
    "classify_quartet",
    "classify_teat",
    "concordance_report",
    "create_app",
    "export_report",
    "import_csv",
    "kernel_backend",
    "open_field_dataset",
    "parse_reading_date",
    "reference_ranges",
    "report_from_json",
]
