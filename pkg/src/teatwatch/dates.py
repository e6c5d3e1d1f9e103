"""Reading-date parsing.

Canonical form is ISO-8601 (``YYYY-MM-DD``). The handheld-device era used
day-first Brazilian forms, so ``DD/MM/YYYY`` and the bare digit run
``DDMMYYYY`` are accepted on input and converted.
"""

import datetime as dt

from .errors import ValidationError

_FORMATS = ("%Y-%m-%d", "%d/%m/%Y")


def parse_reading_date(value) -> dt.date:
    """Parse a reading date from any accepted form into a ``date``."""
    if isinstance(value, dt.datetime):
        return value.date()
    if isinstance(value, dt.date):
        return value
    text = str(value).strip()
    for fmt in _FORMATS:
        try:
            return dt.datetime.strptime(text, fmt).date()
        except ValueError:
            pass
    if len(text) == 8 and text.isdigit():
        try:
            return dt.datetime.strptime(text, "%d%m%Y").date()
        except ValueError:
            pass
    raise ValidationError(f"unrecognized reading date: {value!r}")
