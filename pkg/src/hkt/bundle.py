"""Structure bundles: an algebra, a metric and up to three endomorphisms.

JSON schema (indices 1-based, scalars as ``"p/q"`` strings or integers)::

    {"name": "...", "dim": n,
     "brackets": [{"x": 1, "y": 2, "out": {"3": "1"}}, ...],
     "metric": [[...], ...],            # optional, identity by default
     "endos": {"I": [[...]], "J": [[...]], "K": [[...]]}}   # optional

One endomorphism gives a Hermitian structure, ``I`` and ``J`` give a
hyperhermitian one (``K`` is checked against ``IJ`` when present).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ParseError, StructureError
from .exact import identity, matrix_to_json, qmatrix
from .hermitian import HermitianStructure
from .hypercomplex import Hypercomplex, Hyperhermitian
from .lie import LieAlgebra, transport_endomorphism, transport_metric


@dataclass
class Bundle:
    algebra: LieAlgebra
    G: np.ndarray
    structure: Hyperhermitian | HermitianStructure | None = None
    name: str = ""

    @property
    def n(self):
        return self.algebra.n

    @property
    def hyper(self) -> Hyperhermitian | None:
        return self.structure if isinstance(self.structure, Hyperhermitian) else None

    @property
    def hermitian(self) -> HermitianStructure | None:
        """The structure used for single-complex-structure checks (``I`` of a triple)."""
        if isinstance(self.structure, Hyperhermitian):
            return self.structure["I"]
        return self.structure

    @classmethod
    def from_structure(cls, h, name: str = "") -> "Bundle":
        return cls(h.carrier, h.G, h, name or getattr(h, "name", ""))

    def transport(self, P: np.ndarray) -> "Bundle":
        """The same structure written in the basis ``f_j = sum_i P[i, j] e_i``."""
        g = self.algebra.transport(P)
        G = transport_metric(self.G, P)
        if isinstance(self.structure, Hyperhermitian):
            I, J, K = (transport_endomorphism(m, P) for _, m in self.structure.hc.triple())
            structure = Hyperhermitian(g, Hypercomplex(I, J, K), G, self.structure.name)
        elif self.structure is not None:
            structure = HermitianStructure(g, transport_endomorphism(self.structure.J, P), G,
                                           self.structure.name)
        else:
            structure = None
        return Bundle(g, G, structure, self.name)

    def to_json(self) -> dict:
        out = {"name": self.name}
        out.update(self.algebra.to_json())
        out["metric"] = matrix_to_json(self.G)
        if isinstance(self.structure, Hyperhermitian):
            out["endos"] = {k: matrix_to_json(m) for k, m in self.structure.hc.triple()}
        elif self.structure is not None:
            out["endos"] = {self.structure.name: matrix_to_json(self.structure.J)}
        return out


def _matrix(data, n: int, loc: str) -> np.ndarray:
    try:
        m = qmatrix(data)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed matrix: {exc}", loc) from exc
    if m.shape != (n, n):
        raise ParseError(f"expected a {n} x {n} matrix", loc)
    return m


def bundle_from_json(data, name: str = "") -> Bundle:
    if not isinstance(data, dict):
        raise ParseError("a structure bundle must be a JSON object", "$")
    g = LieAlgebra.from_json(data, name=data.get("name", name))
    n = g.n
    G = _matrix(data["metric"], n, "metric") if "metric" in data else identity(n)
    endos = data.get("endos") or {}
    if not isinstance(endos, dict):
        raise ParseError("'endos' must be an object", "endos")
    mats = {key: _matrix(m, n, f"endos.{key}") for key, m in endos.items()}
    unknown = set(mats) - {"I", "J", "K"}
    if unknown:
        raise ParseError(f"unknown endomorphism names {sorted(unknown)}", "endos")
    try:
        if "I" in mats and "J" in mats:
            structure = Hyperhermitian(g, Hypercomplex(mats["I"], mats["J"], mats.get("K")), G,
                                       name=g.name)
        elif len(mats) == 1:
            key, J = next(iter(mats.items()))
            structure = HermitianStructure(g, J, G, key)
        elif mats:
            raise ParseError("give one endomorphism, or I and J", "endos")
        else:
            structure = None
            if not g.is_positive_definite(G):
                raise StructureError("metric is not positive definite")
    except StructureError as exc:
        raise ParseError(str(exc), "endos" if mats else "metric") from exc
    return Bundle(g, G, structure, g.name)


def read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", str(path)) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}") from exc


def load_bundle(path) -> Bundle:
    return bundle_from_json(read_json(path), name=Path(path).stem)


def write_json(data, path) -> None:
    Path(path).write_text(json.dumps(data, indent=2) + "\n")
