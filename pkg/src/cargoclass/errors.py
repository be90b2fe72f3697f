"""Shared error types for tabular input files."""


class SchemaError(ValueError):
    """A CSV file is missing a required column or has no header."""


class RowError(ValueError):
    """A CSV row violates the file contract. Carries the offending row number."""

    def __init__(self, row: int, message: str):
        super().__init__(f"row {row}: {message}")
        self.row = row
