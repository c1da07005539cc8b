"""Finite commutative rings with identity, stored as dense operation tables.

Every ring here is a set of indices ``0..order-1`` with ``add`` and ``mul``
tables.  Each constructor fixes an element encoding so that indices are
stable across runs:

* ``Z_n``: index ``i`` is the residue ``i``.
* products: mixed radix, first factor most significant, so index order is
  the lexicographic order of the component tuples.
* polynomial quotients ``Z_p[X]/(f)``: index ``sum c_k p**k`` for the
  coefficient list ``c_0..c_{d-1}`` (low degree = low digit).
* idealization ``R(+)R/J``: index ``r * |R/J| + m`` with ``m`` a quotient index.
* amalgamation, quotient and localization rings: position in the sorted
  list of underlying parent indices / pairs.

A ring's ``label`` is always a ring-spec DSL expression that rebuilds it.
"""

from __future__ import annotations

import os
from functools import cached_property, reduce
from typing import Any, Iterable, Sequence

import numpy as np
from sympy import isprime

from .errors import ConstructionError, DomainError, InputError, ResourceError

DEFAULT_ORDER_CAP = 4096


def order_cap() -> int:
    """Largest ring order any constructor will build (``SDFA_ORDER_CAP`` overrides)."""
    raw = os.environ.get("SDFA_ORDER_CAP")
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"SDFA_ORDER_CAP must be an integer, got {raw!r}") from None
    if cap < 2:
        raise InputError("SDFA_ORDER_CAP must be at least 2")
    return cap


def check_order(order: int, what: str = "ring") -> None:
    cap = order_cap()
    if order > cap:
        raise ResourceError(f"{what} of order {order} exceeds the order cap {cap}")


def index_dtype(order: int) -> type:
    if order <= np.iinfo(np.int16).max:
        return np.int16
    return np.int32


def normalize_element(value: Any) -> Any:
    """Turn nested lists/tuples into nested tuples so they can be looked up."""
    if isinstance(value, (list, tuple)):
        return tuple(normalize_element(v) for v in value)
    if isinstance(value, (bool, np.bool_)):
        raise InputError(f"not a ring element: {value!r}")
    if isinstance(value, (int, np.integer)):
        return int(value)
    raise InputError(f"not a ring element: {value!r}")


def _jsonable(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class FiniteRing:
    """A finite commutative ring with ``1 != 0`` given by operation tables.

    ``elements[i]`` is the construction-specific representation of index
    ``i`` (an int, or nested tuples).  ``info`` keeps the construction data
    that structural criteria dispatch on (factors, base ring, module, ...).
    """

    def __init__(
        self,
        add: np.ndarray,
        mul: np.ndarray,
        *,
        zero: int,
        one: int,
        label: str,
        name: str | None = None,
        elements: Sequence[Any] | None = None,
        kind: str = "table",
        info: dict[str, Any] | None = None,
    ):
        add = np.asarray(add)
        mul = np.asarray(mul)
        if add.ndim != 2 or add.shape[0] != add.shape[1] or mul.shape != add.shape:
            raise ConstructionError("operation tables must be square and of equal shape")
        n = add.shape[0]
        if n < 2:
            raise ConstructionError("a ring with 1 != 0 has at least two elements")
        check_order(n)
        if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
            raise ConstructionError("operation tables must be total over 0..order-1")
        if not (0 <= zero < n and 0 <= one < n) or zero == one:
            raise ConstructionError("zero and one must be distinct element indices")
        dtype = index_dtype(n)
        self.order = int(n)
        self.zero = int(zero)
        self.one = int(one)
        self.add = _readonly(add.astype(dtype))
        self.mul = _readonly(mul.astype(dtype))
        self.label = label
        self.name = name or label
        self.kind = kind
        self.info = dict(info or {})
        if elements is None:
            elements = list(range(n))
        if len(elements) != n:
            raise ConstructionError("element representation list has the wrong length")
        self.elements = [normalize_element(e) for e in elements]
        self._lookup = {e: i for i, e in enumerate(self.elements)}
        if len(self._lookup) != n:
            raise ConstructionError("element representations are not unique")

    def __repr__(self) -> str:
        return f"FiniteRing({self.label}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    # --- element encoding -------------------------------------------------

    def render(self, index: int) -> Any:
        """JSON-friendly representation of an element index."""
        return _jsonable(self.elements[int(index)])

    def parse_element(self, value: Any) -> int:
        key = normalize_element(value)
        if key in self._lookup:
            return self._lookup[key]
        if self.kind in ("polyq", "gf") and isinstance(key, tuple):
            d = self.info["degree"]
            if len(key) < d:
                padded = key + (0,) * (d - len(key))
                if padded in self._lookup:
                    return self._lookup[padded]
        raise InputError(f"{value!r} is not an element of {self.label}")

    # --- derived tables ---------------------------------------------------

    @cached_property
    def indices(self) -> np.ndarray:
        return _readonly(np.arange(self.order))

    @cached_property
    def neg(self) -> np.ndarray:
        hits = self.add == self.zero
        if not np.all(hits.sum(axis=1) == 1):
            raise ConstructionError("addition table has no unique inverses")
        return _readonly(np.argmax(hits, axis=1).astype(self.add.dtype))

    @cached_property
    def sub(self) -> np.ndarray:
        """``sub[a, b] = a - b``."""
        return _readonly(self.add[:, self.neg])

    @cached_property
    def square(self) -> np.ndarray:
        ix = self.indices
        return _readonly(self.mul[ix, ix])

    @cached_property
    def square_diff(self) -> np.ndarray:
        """``square_diff[a, b] = a^2 - b^2``."""
        sq = self.square
        return _readonly(self.sub[sq[:, None], sq[None, :]])

    @cached_property
    def two(self) -> int:
        return int(self.add[self.one, self.one])

    def multiple(self, k: int) -> int:
        """The element ``k * 1``."""
        x = self.zero
        for _ in range(k % self.characteristic):
            x = int(self.add[x, self.one])
        return x

    # --- exhaustive queries -----------------------------------------------

    @cached_property
    def characteristic(self) -> int:
        x, k = self.one, 1
        while x != self.zero:
            x = int(self.add[x, self.one])
            k += 1
        return k

    @cached_property
    def units(self) -> frozenset[int]:
        rows = np.any(self.mul == self.one, axis=1)
        return frozenset(int(i) for i in np.flatnonzero(rows))

    @cached_property
    def nilpotent_mask(self) -> np.ndarray:
        # a^(2^k) == 0 for 2^k >= order covers every nilpotency index
        p = self.indices.copy()
        steps = max(1, int(np.ceil(np.log2(self.order))))
        for _ in range(steps):
            p = self.mul[p, p]
        return _readonly(p == self.zero)

    @cached_property
    def nilpotents(self) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero(self.nilpotent_mask))

    @cached_property
    def zero_divisors(self) -> frozenset[int]:
        """Elements ``a`` with ``a*b == 0`` for some ``b != 0`` (includes 0)."""
        hit = self.mul == self.zero
        hit[:, self.zero] = False
        return frozenset(int(i) for i in np.flatnonzero(hit.any(axis=1)))

    @cached_property
    def idempotents(self) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero(self.square == self.indices))

    @property
    def is_reduced(self) -> bool:
        return len(self.nilpotents) == 1

    @property
    def is_field(self) -> bool:
        return len(self.units) == self.order - 1

    @property
    def is_boolean(self) -> bool:
        return len(self.idempotents) == self.order

    @property
    def two_status(self) -> str:
        """Where ``2 = 1 + 1`` sits: ``"zero"``, ``"unit"`` or ``"zero-divisor"``."""
        if self.two == self.zero:
            return "zero"
        if self.two in self.units:
            return "unit"
        return "zero-divisor"

    def power(self, a: int, k: int) -> int:
        x = self.one
        for _ in range(k):
            x = int(self.mul[x, a])
        return x


class RingHom:
    """A unital ring homomorphism given by an index table."""

    def __init__(self, source: FiniteRing, target: FiniteRing, mapping: Iterable[int], name: str = "hom"):
        table = np.asarray(list(mapping) if not isinstance(mapping, np.ndarray) else mapping)
        if table.shape != (source.order,):
            raise ConstructionError("hom table length must equal the source order")
        if table.min() < 0 or table.max() >= target.order:
            raise ConstructionError("hom table points outside the target ring")
        self.source = source
        self.target = target
        self.map = _readonly(table.astype(np.int64))
        self.name = name

    def __repr__(self) -> str:
        return f"RingHom({self.name}: {self.source.label} -> {self.target.label})"

    def __call__(self, a: int) -> int:
        return int(self.map[a])

    def axiom_violation(self) -> tuple[str, tuple[int, ...]] | None:
        """First failing hom axiom with its witness, or ``None``."""
        S, T, f = self.source, self.target, self.map
        if f[S.one] != T.one:
            return ("f(1) = 1", (S.one,))
        for op, s_tab, t_tab in (("+", S.add, T.add), ("*", S.mul, T.mul)):
            bad = f[s_tab] != t_tab[f[:, None], f[None, :]]
            if bad.any():
                a, b = np.unravel_index(int(np.argmax(bad)), bad.shape)
                return (f"f(a{op}b) = f(a){op}f(b)", (int(a), int(b)))
        return None

    def validate(self) -> "RingHom":
        bad = self.axiom_violation()
        if bad is not None:
            raise ConstructionError(f"{self.name} is not a ring homomorphism: {bad[0]} fails at {bad[1]}")
        return self

    @cached_property
    def kernel_mask(self) -> np.ndarray:
        return _readonly(self.map == self.target.zero)

    @property
    def is_injective(self) -> bool:
        return len(np.unique(self.map)) == self.source.order

    @property
    def is_surjective(self) -> bool:
        return len(np.unique(self.map)) == self.target.order


class ModuleSpec:
    """The cyclic module ``R/J`` over ``R``; ``quotient_by=None`` means ``J = 0``."""

    def __init__(self, base: FiniteRing, quotient_by=None):
        if quotient_by is not None and quotient_by.ring is not base:
            raise ConstructionError("module ideal must belong to the base ring")
        self.base = base
        self.quotient_by = quotient_by

    @cached_property
    def quotient(self) -> tuple[FiniteRing, RingHom]:
        if self.quotient_by is None:
            R = self.base
            return R, RingHom(R, R, R.indices, name="id")
        return make_quotient(self.base, self.quotient_by)

    @property
    def order(self) -> int:
        return self.quotient[0].order

    @property
    def label(self) -> str:
        return "0" if self.quotient_by is None else self.quotient_by.label


# --- constructions --------------------------------------------------------


def make_zn(n: int) -> FiniteRing:
    """The integers modulo ``n``."""
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ConstructionError(f"invalid order for Z_n: {n!r} (need n >= 2)")
    n = int(n)
    check_order(n)
    a = np.arange(n)
    return FiniteRing(
        (a[:, None] + a[None, :]) % n,
        (a[:, None] * a[None, :]) % n,
        zero=0,
        one=1,
        label=f"zn({n})",
        name=f"Z_{n}",
        kind="zn",
        info={"n": n},
    )


def make_product(factors: Sequence[FiniteRing]) -> FiniteRing:
    factors = list(factors)
    if len(factors) < 2:
        raise ConstructionError("a product needs at least two factors")
    orders = [R.order for R in factors]
    total = int(np.prod(orders))
    check_order(total)
    strides = [int(np.prod(orders[k + 1 :])) for k in range(len(factors))]
    idx = np.arange(total)
    digits = [(idx // s) % n for s, n in zip(strides, orders)]
    add = np.zeros((total, total), dtype=np.int64)
    mul = np.zeros((total, total), dtype=np.int64)
    for R, d, s in zip(factors, digits, strides):
        add += R.add[d[:, None], d[None, :]].astype(np.int64) * s
        mul += R.mul[d[:, None], d[None, :]].astype(np.int64) * s
    zero = sum(R.zero * s for R, s in zip(factors, strides))
    one = sum(R.one * s for R, s in zip(factors, strides))
    elements = [tuple(R.elements[int(d[i])] for R, d in zip(factors, digits)) for i in range(total)]
    return FiniteRing(
        add,
        mul,
        zero=zero,
        one=one,
        label="prod(" + ",".join(R.label for R in factors) + ")",
        name=" x ".join(R.name for R in factors),
        elements=elements,
        kind="product",
        info={"factors": factors, "strides": strides},
    )


def _poly_tables(p: int, f: Sequence[int]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    d = len(f) - 1
    n = p**d
    idx = np.arange(n)
    coeffs = np.stack([(idx // p**k) % p for k in range(d)], axis=1)
    weights = p ** np.arange(d)
    add = ((coeffs[:, None, :] + coeffs[None, :, :]) % p) @ weights
    prod = [np.zeros((n, n), dtype=np.int64) for _ in range(2 * d - 1)]
    for i in range(d):
        for j in range(d):
            prod[i + j] += coeffs[:, i][:, None] * coeffs[:, j][None, :]
    for k in range(2 * d - 2, d - 1, -1):
        c = prod[k] % p
        for t in range(d):
            if f[t]:
                prod[k - d + t] -= c * f[t]
    mul = sum((prod[t] % p) * p**t for t in range(d))
    return add, mul, coeffs


def make_poly_quotient(p: int, f: Sequence[int]) -> FiniteRing:
    """``Z_p[X]/(f)`` for monic ``f`` given by coefficients, low degree first."""
    if not isinstance(p, (int, np.integer)) or p < 2 or not isprime(int(p)):
        raise ConstructionError(f"polynomial quotients need a prime modulus, got {p!r}")
    p = int(p)
    f = [int(c) % p for c in f]
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    if len(f) < 2:
        raise ConstructionError("the modulus polynomial must have degree >= 1")
    if f[-1] != 1:
        raise ConstructionError("the modulus polynomial must be monic")
    d = len(f) - 1
    check_order(p**d)
    add, mul, coeffs = _poly_tables(p, f)
    coeff_text = ",".join(map(str, f))
    return FiniteRing(
        add,
        mul,
        zero=0,
        one=1,
        label=f"polyq({p},[{coeff_text}])",
        name=f"Z_{p}[X]/({_poly_text(f)})",
        elements=[tuple(int(c) for c in row) for row in coeffs],
        kind="polyq",
        info={"p": p, "modulus": tuple(f), "degree": d},
    )


def make_galois_field(p: int, f: Sequence[int]) -> FiniteRing:
    """``F_{p^d}`` as ``Z_p[X]/(f)``; ``f`` must be irreducible."""
    R = make_poly_quotient(p, f)
    if not R.is_field:
        raise ConstructionError(f"{_poly_text(R.info['modulus'])} is not irreducible over Z_{p}")
    coeff_text = ",".join(map(str, R.info["modulus"]))
    R.label = f"gf({R.info['p']},[{coeff_text}])"
    R.name = f"F_{R.order}"
    R.kind = "gf"
    return R


def _poly_text(f: Sequence[int]) -> str:
    terms = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if not c:
            continue
        mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
        if mono and c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}{mono}")
    return "+".join(terms) or "0"


def make_quotient(R: FiniteRing, ideal) -> tuple[FiniteRing, RingHom]:
    """``R/I`` with its projection; each coset is named by its least index."""
    mask = ideal.mask
    if mask[R.one]:
        raise DomainError(f"cannot form the quotient of {R.label} by the whole ring")
    members = np.flatnonzero(mask)
    rep = R.add[:, members].min(axis=1).astype(np.int64)
    reps = np.unique(rep)
    pos = np.searchsorted(reps, rep)
    add = pos[R.add[reps[:, None], reps[None, :]]]
    mul = pos[R.mul[reps[:, None], reps[None, :]]]
    Q = FiniteRing(
        add,
        mul,
        zero=int(pos[R.zero]),
        one=int(pos[R.one]),
        label=f"quot({R.label};gens={ideal.gens_text()})",
        name=f"{R.name}/{ideal.short_name()}",
        elements=[R.elements[int(r)] for r in reps],
        kind="quotient",
        info={"parent": R, "ideal": ideal, "representatives": reps},
    )
    return Q, RingHom(R, Q, pos, name="projection")


def make_idealization(R: FiniteRing, module: ModuleSpec) -> FiniteRing:
    """``R(+)M`` with ``(r,m)(s,n) = (rs, rn + sm)`` for ``M = R/J``."""
    if module.base is not R:
        raise ConstructionError("module base ring does not match the idealized ring")
    Q, proj = module.quotient
    nm = Q.order
    total = R.order * nm
    check_order(total)
    idx = np.arange(total)
    r, m = idx // nm, idx % nm
    pr = proj.map[r]
    rr = (r[:, None], r[None, :])
    mm = (m[:, None], m[None, :])
    add = R.add[rr].astype(np.int64) * nm + Q.add[mm]
    cross = Q.add[Q.mul[pr[:, None], m[None, :]], Q.mul[pr[None, :], m[:, None]]]
    mul = R.mul[rr].astype(np.int64) * nm + cross
    elements = [(R.elements[int(a)], Q.elements[int(b)]) for a, b in zip(r, m)]
    return FiniteRing(
        add,
        mul,
        zero=R.zero * nm + Q.zero,
        one=R.one * nm + Q.zero,
        label=f"idealize({R.label};mod={module.label})",
        name=f"{R.name}(+){Q.name}",
        elements=elements,
        kind="idealization",
        info={"base": R, "module": module, "module_ring": Q, "projection": proj},
    )


def make_amalgamation(A: FiniteRing, B: FiniteRing, f: RingHom, J) -> FiniteRing:
    """The subring ``{(a, f(a) + j)}`` of ``A x B``."""
    if f.source is not A or f.target is not B:
        raise ConstructionError("hom does not map A to B")
    f.validate()
    if J.ring is not B:
        raise ConstructionError("amalgamation ideal must be an ideal of B")
    jm = np.flatnonzero(J.mask)
    nb = B.order
    b = B.add[f.map[:, None], jm[None, :]].astype(np.int64)
    keys = np.arange(A.order)[:, None] * nb + b
    keys = np.unique(keys.ravel())
    # (a, j) -> (a, f(a)+j) is injective since j = b - f(a)
    assert len(keys) == A.order * len(jm)
    check_order(len(keys))
    where = np.full(A.order * nb, -1, dtype=np.int64)
    where[keys] = np.arange(len(keys))
    a_, b_ = keys // nb, keys % nb
    add = where[A.add[a_[:, None], a_[None, :]].astype(np.int64) * nb + B.add[b_[:, None], b_[None, :]]]
    mul = where[A.mul[a_[:, None], a_[None, :]].astype(np.int64) * nb + B.mul[b_[:, None], b_[None, :]]]
    if (add < 0).any() or (mul < 0).any():
        raise ConstructionError("amalgamation is not closed; J is not an ideal of B")
    return FiniteRing(
        add,
        mul,
        zero=int(where[A.zero * nb + B.zero]),
        one=int(where[A.one * nb + B.one]),
        label=f"amalg({A.label},{B.label},hom={f.name},j={J.gens_text()})",
        name=f"{A.name} |x|_{J.short_name()} {B.name}",
        elements=[(A.elements[int(x)], B.elements[int(y)]) for x, y in zip(a_, b_)],
        kind="amalgamation",
        info={"A": A, "B": B, "hom": f, "J": J, "pairs": (a_, b_)},
    )


def hom_by_name(A: FiniteRing, B: FiniteRing, name: str) -> RingHom:
    """Named homs the DSL understands: ``id`` and ``canonical`` (``k -> k*1`` out of ``Z_m``)."""
    if name == "id":
        if A is not B and A.label != B.label:
            raise ConstructionError("hom=id needs A and B to be the same ring")
        return RingHom(A, B, np.arange(A.order), name="id").validate()
    if name == "canonical":
        if A.kind != "zn":
            raise ConstructionError("hom=canonical needs A = Z_m")
        m = A.info["n"]
        if m % B.characteristic:
            raise ConstructionError(f"no unital hom Z_{m} -> {B.label}: char(B) does not divide {m}")
        return RingHom(A, B, [B.multiple(k) for k in range(m)], name="canonical").validate()
    raise ConstructionError(f"unknown hom name {name!r} (known: id, canonical)")


def idempotent_power(R: FiniteRing, t: int) -> int:
    """The unique idempotent among the powers of ``t``."""
    x = t
    for _ in range(2 * R.order):
        if R.mul[x, x] == x:
            return int(x)
        x = int(R.mul[x, t])
    raise AssertionError("powers of an element in a finite ring must reach an idempotent")


def localize(R: FiniteRing, S: Iterable[int]) -> tuple[FiniteRing, RingHom]:
    """``R_S``, realised as ``eR`` for the idempotent power ``e`` of ``prod(S)``."""
    S = sorted({int(s) for s in S})
    if not S or any(s < 0 or s >= R.order for s in S):
        raise InputError("localization set must be a nonempty set of ring elements")
    if R.zero in S:
        raise InputError("degenerate localization: 0 is in S")
    if R.one not in S:
        raise InputError("S is not multiplicatively closed: 1 is missing")
    sset = set(S)
    prods = R.mul[np.ix_(S, S)]
    if not all(int(x) in sset for x in prods.ravel()):
        raise InputError("S is not multiplicatively closed")
    t = reduce(lambda x, y: int(R.mul[x, y]), S, R.one)
    e = idempotent_power(R, t)
    image = R.mul[e, :].astype(np.int64)
    els = np.unique(image)
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[els] = np.arange(len(els))
    add = pos[R.add[els[:, None], els[None, :]]]
    mul = pos[R.mul[els[:, None], els[None, :]]]
    s_text = ",".join(str(R.render(s)).replace(" ", "") for s in S)
    L = FiniteRing(
        add,
        mul,
        zero=int(pos[R.zero]),
        one=int(pos[e]),
        label=f"loc({R.label};s=[{s_text}])",
        name=f"{R.name}_S",
        elements=[R.elements[int(x)] for x in els],
        kind="localization",
        info={"parent": R, "S": tuple(S), "idempotent": e},
    )
    hom = RingHom(R, L, pos[image], name="localization")
    for s in S:
        assert hom(s) in L.units, "image of S must be invertible in eR"
    return L, hom


def check_ring_axioms(
    R: FiniteRing, *, full_limit: int = 64, samples: int = 10_000, seed: int = 0
) -> tuple[str, tuple[int, ...]] | None:
    """First violated ring axiom with a witness, or ``None``.

    Rings up to ``full_limit`` elements are checked on every triple; larger
    ones on ``samples`` random triples plus every pair.
    """
    add, mul, n = R.add, R.mul, R.order
    ix = np.arange(n)

    def first(bad: np.ndarray, name: str):
        if bad.any():
            return name, tuple(int(v) for v in np.unravel_index(int(np.argmax(bad)), bad.shape))
        return None

    checks = [
        (add[R.zero, :] != ix, "0 + a = a"),
        (mul[R.one, :] != ix, "1 * a = a"),
        (add != add.T, "a + b = b + a"),
        (mul != mul.T, "a * b = b * a"),
    ]
    for bad, name in checks:
        hit = first(bad, name)
        if hit:
            return hit
    if not np.all((add == R.zero).sum(axis=1) == 1):
        return first((add == R.zero).sum(axis=1) != 1, "a has a unique additive inverse")
    if n <= full_limit:
        a, b, c = ix[:, None, None], ix[None, :, None], ix[None, None, :]
    else:
        rng = np.random.default_rng(seed)
        a, b, c = (rng.integers(0, n, samples) for _ in range(3))
    triple_checks = [
        (add[add[a, b], c] != add[a, add[b, c]], "(a + b) + c = a + (b + c)"),
        (mul[mul[a, b], c] != mul[a, mul[b, c]], "(a * b) * c = a * (b * c)"),
        (mul[a, add[b, c]] != add[mul[a, b], mul[a, c]], "a * (b + c) = a*b + a*c"),
    ]
    for bad, name in triple_checks:
        if bad.any():
            k = int(np.argmax(bad))
            if n <= full_limit:
                return name, tuple(int(v) for v in np.unravel_index(k, bad.shape))
            return name, (int(a[k]), int(b[k]), int(c[k]))
    return None


def ring_queries(R: FiniteRing) -> dict[str, Any]:
    """Characteristic, unit/nilpotent/zero-divisor sets and the structural flags."""
    from .ideals import jacobson_radical, maximal_ideals, prime_ideals

    maxes = maximal_ideals(R)
    primes = prime_ideals(R)
    every_prime_maximal = all(P in maxes for P in primes)
    return {
        "characteristic": R.characteristic,
        "units": sorted(R.units),
        "nilpotents": sorted(R.nilpotents),
        "zero_divisors": sorted(R.zero_divisors),
        "jacobson_radical": jacobson_radical(R),
        "is_reduced": R.is_reduced,
        "is_field": R.is_field,
        "is_local": len(maxes) == 1,
        "is_von_neumann_regular": R.is_reduced and every_prime_maximal,
        "is_boolean": R.is_boolean,
    }
