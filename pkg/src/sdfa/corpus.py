"""Deterministic ring corpus for the property harness."""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from .errors import InputError
from .ideals import enumerate_ideals
from .rings import (
    FiniteRing,
    ModuleSpec,
    check_order,
    hom_by_name,
    make_galois_field,
    make_idealization,
    make_amalgamation,
    make_poly_quotient,
    make_product,
    make_zn,
)

# irreducible moduli for the non-prime fields of order <= 9
FIELD_MODULI = {4: (2, (1, 1, 1)), 8: (2, (1, 1, 0, 1)), 9: (3, (1, 0, 1))}

# Z_p[X]/(f) for a few shapes of f: squares, cubes and split products
POLY_MODULI = [
    (2, (0, 0, 1)),
    (3, (0, 0, 1)),
    (5, (0, 0, 1)),
    (7, (0, 0, 1)),
    (2, (0, 0, 0, 1)),
    (3, (0, 0, 0, 1)),
    (2, (0, 0, 0, 0, 1)),
    (2, (0, 1, 1)),
    (3, (2, 0, 1)),
    (5, (4, 0, 1)),
    (2, (0, 0, 1, 1)),
    (3, (0, 2, 0, 1)),
    (2, (1, 0, 1)),
]


@dataclass(frozen=True)
class CorpusSpec:
    zn_max: int = 120
    field_orders: tuple[int, ...] = (4, 8, 9)
    product_pool_max: int = 9
    pair_order_cap: int = 144
    triple_order_cap: int = 64
    include_products: bool = True
    include_idealizations: bool = True
    include_amalgamations: bool = True
    include_poly_quotients: bool = True
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.zn_max, int) or self.zn_max < 2:
            raise InputError(f"zn_max must be an integer >= 2, got {self.zn_max!r}")
        bad = [q for q in self.field_orders if q not in FIELD_MODULI]
        if bad:
            raise InputError(f"unsupported field orders {bad}; known: {sorted(FIELD_MODULI)}")

    @classmethod
    def from_dict(cls, data) -> "CorpusSpec":
        if not isinstance(data, dict):
            raise InputError("corpus spec must be a JSON object")
        known = {f.name: f for f in fields(cls)}
        unknown = sorted(set(data) - set(known))
        if unknown:
            raise InputError(f"unknown corpus spec keys: {unknown}")
        kwargs = {}
        for key, value in data.items():
            default = known[key].default
            if isinstance(default, bool):
                if not isinstance(value, bool):
                    raise InputError(f"{key} must be a boolean")
            elif isinstance(default, int):
                if isinstance(value, bool) or not isinstance(value, int):
                    raise InputError(f"{key} must be an integer")
            elif isinstance(default, tuple):
                if not isinstance(value, list) or not all(isinstance(v, int) for v in value):
                    raise InputError(f"{key} must be a list of integers")
                value = tuple(value)
            kwargs[key] = value
        return cls(**kwargs)

    @classmethod
    def from_file(cls, path: str | Path) -> "CorpusSpec":
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read corpus spec {path}: {exc}") from exc
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["field_orders"] = list(self.field_orders)
        return d


def galois_field(q: int) -> FiniteRing:
    p, f = FIELD_MODULI[q]
    return make_galois_field(p, f)


def _pool(spec: CorpusSpec) -> list[FiniteRing]:
    pool = [make_zn(n) for n in range(2, min(spec.product_pool_max, spec.zn_max) + 1)]
    pool += [galois_field(q) for q in spec.field_orders]
    if spec.include_poly_quotients:
        pool += [make_poly_quotient(2, (0, 0, 1)), make_poly_quotient(3, (0, 0, 1))]
    return pool


def _products(spec: CorpusSpec) -> list[FiniteRing]:
    pool = _pool(spec)
    out = []
    for A, B in itertools.combinations_with_replacement(pool, 2):
        if A.order * B.order <= spec.pair_order_cap:
            out.append(make_product([A, B]))
    small = [R for R in pool if R.order <= 5]
    for trio in itertools.combinations_with_replacement(small, 3):
        if trio[0].order * trio[1].order * trio[2].order <= spec.triple_order_cap:
            out.append(make_product(list(trio)))
    two = make_zn(2)
    out.append(make_product([two, two, two, two]))
    return out


def _idealizations(spec: CorpusSpec) -> list[FiniteRing]:
    bases = [make_zn(n) for n in range(2, min(9, spec.zn_max) + 1)]
    bases += [galois_field(q) for q in spec.field_orders if q <= 4]
    if spec.include_poly_quotients:
        bases.append(make_poly_quotient(2, (0, 0, 1)))
    out = [make_idealization(R, ModuleSpec(R)) for R in bases]
    for n in (4, 6, 8, 9, 12):
        if n > spec.zn_max:
            continue
        R = make_zn(n)
        for J in enumerate_ideals(R):
            if J.is_proper and not J.is_zero:
                out.append(make_idealization(R, ModuleSpec(R, J)))
    return out


def _amalgamations(spec: CorpusSpec) -> list[FiniteRing]:
    out = []
    for n in (2, 3, 4, 6, 8, 9):
        if n > spec.zn_max:
            continue
        A = make_zn(n)
        f = hom_by_name(A, A, "id")
        for J in enumerate_ideals(A):
            out.append(make_amalgamation(A, A, f, J))
    for m, d in ((4, 2), (6, 2), (6, 3), (8, 4), (9, 3), (12, 4), (12, 6)):
        if m > spec.zn_max:
            continue
        A, B = make_zn(m), make_zn(d)
        f = hom_by_name(A, B, "canonical")
        for J in enumerate_ideals(B):
            if not J.is_zero:
                out.append(make_amalgamation(A, B, f, J))
    return out


def build_corpus(spec: CorpusSpec | None = None) -> list[FiniteRing]:
    """Rings named by ``spec`` in a fixed order, deduplicated by label."""
    spec = spec or CorpusSpec()
    rings: list[FiniteRing] = [make_zn(n) for n in range(2, spec.zn_max + 1)]
    rings += [galois_field(q) for q in spec.field_orders]
    if spec.include_poly_quotients:
        rings += [make_poly_quotient(p, f) for p, f in POLY_MODULI]
    if spec.include_products:
        rings += _products(spec)
    if spec.include_idealizations:
        rings += _idealizations(spec)
    if spec.include_amalgamations:
        rings += _amalgamations(spec)
    seen: set[str] = set()
    out = []
    for R in rings:
        check_order(R.order)
        if R.label not in seen:
            seen.add(R.label)
            out.append(R)
    return out


def fields_corpus() -> list[FiniteRing]:
    """Finite fields only; most properties have nothing to check here."""
    return [make_zn(p) for p in (2, 3, 5, 7)] + [galois_field(q) for q in sorted(FIELD_MODULI)]


__all__ = ["CorpusSpec", "build_corpus", "fields_corpus", "galois_field"]
