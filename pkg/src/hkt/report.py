"""Verdict objects returned by every check."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    check: str
    verdict: bool
    witness: Any = None
    artifacts: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.verdict)

    def to_json(self) -> dict:
        from .forms import AlternatingForm

        def enc(value):
            if isinstance(value, AlternatingForm):
                return _form_json(value)
            if isinstance(value, dict):
                return {str(k): enc(v) for k, v in value.items()}
            if isinstance(value, (list, tuple)):
                return [enc(v) for v in value]
            if isinstance(value, (bool, int, str, float)) or value is None:
                return value
            return str(value)

        out = {"check": self.check, "verdict": bool(self.verdict),
               "witness": enc(self.witness),
               "artifacts": {k: enc(v) for k, v in self.artifacts.items()}}
        if self.notes:
            out["notes"] = enc(self.notes)
        return out


def _form_json(form) -> dict:
    from fractions import Fraction

    from .forms import form_to_json
    if all(isinstance(v, Fraction) for _, v in form.items()):
        return form_to_json(form)
    from .ratfunc import scalar_to_json
    return form_to_json(form, scalar_to_json)
