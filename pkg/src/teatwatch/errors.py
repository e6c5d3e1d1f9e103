"""Exception hierarchy shared across the package."""


class TeatwatchError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(TeatwatchError):
    """Input failed a domain check (temperature, date, id, flag)."""


class EmptyStoreError(TeatwatchError):
    """A query needed at least one stored record and found none."""


class StorageError(TeatwatchError):
    """The underlying database could not complete an operation."""


class CsvFormatError(TeatwatchError):
    """A CSV source is structurally unusable (bad or missing header)."""
