"""Ideals of finite rings: generation, the full lattice, radicals and primes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import DomainError, InputError, ResourceError
from .rings import FiniteRing, RingHom, check_order
from .verdict import Verdict

MAX_IDEALS = 100_000


def _compact(value) -> str:
    return json.dumps(value, separators=(",", ":"))


class Ideal:
    """An ideal stored as a membership mask over the ring's indices."""

    def __init__(self, ring: FiniteRing, mask: np.ndarray, generators: Iterable[int] | None = None):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (ring.order,):
            raise InputError("ideal mask has the wrong length")
        mask = mask.copy()
        mask.setflags(write=False)
        self.ring = ring
        self.mask = mask
        self.members = np.flatnonzero(mask)
        self.members.setflags(write=False)
        self._given_generators = None if generators is None else tuple(int(g) for g in generators)
        self._memo: dict = {}

    # --- identity ----------------------------------------------------------

    @cached_property
    def key(self) -> bytes:
        return np.packbits(self.mask).tobytes()

    def __eq__(self, other) -> bool:
        return isinstance(other, Ideal) and other.ring is self.ring and other.key == self.key

    def __hash__(self) -> int:
        return hash((id(self.ring), self.key))

    def __le__(self, other: "Ideal") -> bool:
        return bool(np.all(other.mask[self.members]))

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self.size < other.size

    def __contains__(self, a: int) -> bool:
        return bool(self.mask[int(a)])

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"Ideal({self.ring.name}, {self.short_name()}, size={self.size})"

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_zero(self) -> bool:
        return self.size == 1

    @property
    def is_proper(self) -> bool:
        return not self.mask[self.ring.one]

    def sort_key(self) -> tuple:
        return (self.size, tuple(self.members.tolist()))

    # --- naming ------------------------------------------------------------

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Given generators, or a greedy generating set in index order."""
        if self._given_generators is not None:
            return self._given_generators
        R = self.ring
        gens: list[int] = []
        cur = np.zeros(R.order, dtype=bool)
        cur[R.zero] = True
        for a in self.members:
            if not cur[a]:
                gens.append(int(a))
                cur = _sum_masks(R, cur, principal_mask(R, int(a)))
                if np.array_equal(cur, self.mask):
                    break
        return tuple(gens)

    def gens_text(self) -> str:
        return "[" + ",".join(_compact(self.ring.render(g)) for g in self.generators) + "]"

    def short_name(self) -> str:
        if self.is_zero:
            return "0"
        if not self.is_proper:
            return "R"
        return "(" + ",".join(_compact(self.ring.render(g)) for g in self.generators) + ")"

    @property
    def label(self) -> str:
        return f"ideal({self.ring.label};gens={self.gens_text()})"

    def rendered_members(self, raw: bool = False) -> list:
        if raw:
            return [int(m) for m in self.members]
        return [self.ring.render(m) for m in self.members]


# --- construction -----------------------------------------------------------


def principal_mask(R: FiniteRing, a: int) -> np.ndarray:
    mask = np.zeros(R.order, dtype=bool)
    mask[R.mul[:, a]] = True
    return mask


def _sum_masks(R: FiniteRing, m1: np.ndarray, m2: np.ndarray) -> np.ndarray:
    out = np.zeros(R.order, dtype=bool)
    out[R.add[np.ix_(np.flatnonzero(m1), np.flatnonzero(m2))].ravel()] = True
    return out


def is_ideal_mask(R: FiniteRing, mask: np.ndarray) -> bool:
    mem = np.flatnonzero(mask)
    if not mask[R.zero]:
        return False
    if not np.all(mask[R.add[np.ix_(mem, mem)]]):
        return False
    return bool(np.all(mask[R.mul[:, mem]]))


def ideal_from_mask(R: FiniteRing, mask: np.ndarray, generators: Iterable[int] | None = None) -> Ideal:
    mask = np.asarray(mask, dtype=bool)
    if not is_ideal_mask(R, mask):
        raise InputError("the given subset is not an ideal")
    return Ideal(R, mask, generators)


def ideal_from_members(R: FiniteRing, members: Iterable[int]) -> Ideal:
    mask = np.zeros(R.order, dtype=bool)
    mask[list(members)] = True
    return ideal_from_mask(R, mask)


def ideal_generated(R: FiniteRing, gens: Iterable[int]) -> Ideal:
    """Smallest ideal containing ``gens``: the sum of the principal ideals ``Rg``."""
    gens = [int(g) for g in gens]
    for g in gens:
        if not 0 <= g < R.order:
            raise InputError(f"generator index {g} is outside {R.label}")
    mask = np.zeros(R.order, dtype=bool)
    mask[R.zero] = True
    for g in gens:
        if not mask[g]:
            mask = _sum_masks(R, mask, principal_mask(R, g))
    return Ideal(R, mask, gens)


def zero_ideal(R: FiniteRing) -> Ideal:
    return ideal_generated(R, [])


def unit_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, np.ones(R.order, dtype=bool), [R.one])


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, _sum_masks(I.ring, I.mask, J.mask))


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, I.mask & J.mask)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    R = I.ring
    prods = np.unique(R.mul[np.ix_(I.members, J.members)])
    return ideal_generated(R, prods)


# --- the lattice ------------------------------------------------------------


def enumerate_ideals(R: FiniteRing, max_ideals: int = MAX_IDEALS) -> list[Ideal]:
    """Every ideal of ``R``, sorted by (size, members).

    Starts from ``{0}`` and the principal ideals and closes under ``I + (a)``.
    The result is cached on the ring.
    """
    cached = R.__dict__.get("_ideals")
    if cached is not None:
        return cached
    check_order(R.order)
    principals: dict[bytes, np.ndarray] = {}
    for a in range(R.order):
        m = principal_mask(R, a)
        principals.setdefault(np.packbits(m).tobytes(), m)
    found = dict(principals)
    work = list(principals.values())
    plist = list(principals.values())
    while work:
        I = work.pop()
        for P in plist:
            if np.all(I[P]):
                continue
            S = _sum_masks(R, I, P)
            k = np.packbits(S).tobytes()
            if k not in found:
                found[k] = S
                work.append(S)
                if len(found) > max_ideals:
                    raise ResourceError(f"{R.label} has more than {max_ideals} ideals")
    ideals = sorted((Ideal(R, m) for m in found.values()), key=Ideal.sort_key)
    R.__dict__["_ideals"] = ideals
    return ideals


def canonical_ideal(I: Ideal) -> Ideal:
    """The lattice copy of ``I`` (which carries the shared decision memo)."""
    for J in enumerate_ideals(I.ring):
        if J == I:
            return J
    raise AssertionError("ideal missing from the enumerated lattice")


def proper_ideals(R: FiniteRing) -> list[Ideal]:
    return [I for I in enumerate_ideals(R) if I.is_proper]


def _require_proper(I: Ideal, what: str) -> None:
    if not I.is_proper:
        raise DomainError(f"{what} is only defined for proper ideals")


def is_prime(I: Ideal) -> Verdict:
    """No ``a, b`` outside ``I`` with ``ab`` in ``I``; least such pair otherwise."""
    _require_proper(I, "primality")
    cached = I._memo.get("prime")
    if cached is not None:
        return cached
    R = I.ring
    out = ~I.mask
    bad = I.mask[R.mul] & out[:, None] & out[None, :]
    if bad.any():
        a, b = np.unravel_index(int(np.argmax(bad)), bad.shape)
        v = Verdict(False, (int(a), int(b)), "prime-scan")
    else:
        v = Verdict(True, None, "prime-scan")
    I._memo["prime"] = v
    return v


def is_maximal(I: Ideal) -> Verdict:
    """Decided against the enumerated lattice; witness ``(a,)`` with ``I + (a)`` proper."""
    _require_proper(I, "maximality")
    R = I.ring
    for J in enumerate_ideals(R):
        if J.is_proper and I < J:
            extra = J.members[~I.mask[J.members]]
            return Verdict(False, (int(extra[0]),), "lattice")
    return Verdict(True, None, "lattice")


def is_maximal_via_quotient(I: Ideal) -> bool:
    """Independent route: ``R/I`` is a field."""
    from .rings import make_quotient

    _require_proper(I, "maximality")
    Q, _ = make_quotient(I.ring, I)
    return Q.is_field


def radical(I: Ideal) -> Ideal:
    """``{a : a^k in I for some k <= order}``."""
    cached = I._memo.get("radical")
    if cached is not None:
        return cached
    R = I.ring
    # a^k in I for some k <= order  <=>  a^(2^s) in I once 2^s >= order
    p = R.indices.copy()
    for _ in range(max(1, int(np.ceil(np.log2(R.order))))):
        p = R.mul[p, p]
    rad = Ideal(R, I.mask[p])
    I._memo["radical"] = rad
    return rad


def is_radical(I: Ideal) -> Verdict:
    rad = radical(I)
    if rad == I:
        return Verdict(True, None, "radical")
    extra = rad.members[~I.mask[rad.members]]
    return Verdict(False, (int(extra[0]),), "radical")


def nilradical(R: FiniteRing) -> Ideal:
    return Ideal(R, R.nilpotent_mask)


def prime_ideals(R: FiniteRing) -> list[Ideal]:
    return [I for I in proper_ideals(R) if is_prime(I)]


def maximal_ideals(R: FiniteRing) -> list[Ideal]:
    return [I for I in proper_ideals(R) if is_maximal(I)]


def jacobson_radical(R: FiniteRing) -> Ideal:
    mask = np.ones(R.order, dtype=bool)
    for M in maximal_ideals(R):
        mask &= M.mask
    return Ideal(R, mask)


def quotient_char(R: FiniteRing, I: Ideal) -> int:
    """Least ``n >= 1`` with ``n * 1`` in ``I``."""
    _require_proper(I, "quotient characteristic")
    x, n = R.one, 1
    while not I.mask[x]:
        x = int(R.add[x, R.one])
        n += 1
    return n


def minimal_primes_over(I: Ideal) -> list[Ideal]:
    _require_proper(I, "minimal primes")
    over = [P for P in prime_ideals(I.ring) if I <= P]
    return [P for P in over if not any(Q < P for Q in over)]


@dataclass
class PrimeDecomposition:
    ideal: Ideal
    primes: list[Ideal]
    kind: str  # "comaximal" | "irredundant" | "none"
    chars: list[int] = field(default_factory=list)


def prime_decomposition(I: Ideal) -> PrimeDecomposition:
    """Write ``I`` as the intersection of its minimal primes, when it is one."""
    cached = I._memo.get("decomposition")
    if cached is not None:
        return cached
    R = I.ring
    primes = sorted(minimal_primes_over(I), key=Ideal.sort_key)
    chars = [quotient_char(R, P) for P in primes]
    mask = np.ones(R.order, dtype=bool)
    for P in primes:
        mask &= P.mask
    if not np.array_equal(mask, I.mask):
        kind = "none"
    elif all(not ideal_sum(P, Q).is_proper for i, P in enumerate(primes) for Q in primes[i + 1 :]):
        kind = "comaximal"
    else:
        kind = "irredundant"
        for i in range(len(primes)):
            rest = np.ones(R.order, dtype=bool)
            for j, P in enumerate(primes):
                if j != i:
                    rest &= P.mask
            if np.array_equal(rest, I.mask):
                kind = "none"
                break
    dec = PrimeDecomposition(I, primes, kind, chars)
    I._memo["decomposition"] = dec
    return dec


# --- homomorphisms ----------------------------------------------------------


def hom_preimage_ideal(f: RingHom, J: Ideal) -> Ideal:
    if J.ring is not f.target:
        raise InputError("ideal does not live in the hom's target")
    return Ideal(f.source, J.mask[f.map])


def hom_image_ideal(f: RingHom, I: Ideal) -> Ideal:
    if I.ring is not f.source:
        raise InputError("ideal does not live in the hom's source")
    if not f.is_surjective:
        raise DomainError("the image of an ideal is only guaranteed to be an ideal for surjective homs")
    mask = np.zeros(f.target.order, dtype=bool)
    mask[f.map[I.members]] = True
    assert is_ideal_mask(f.target, mask), "image of an ideal under a surjection must be an ideal"
    return Ideal(f.target, mask)


def kernel(f: RingHom) -> Ideal:
    return Ideal(f.source, f.kernel_mask)
