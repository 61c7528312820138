"""JSON output with a stable layout."""
import json
from typing import Any


class JsonFormatter:
    """Serializes report dictionaries; rationals are already "p/q" strings."""

    def __init__(self, indent: int = 2):
        self.indent = indent

    def format(self, data: Any) -> str:
        # key order is the order the report models build their dicts in
        return json.dumps(data, indent=self.indent, ensure_ascii=False)
