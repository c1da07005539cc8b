"""Deciders for sdf-absorbing and weakly sdf-absorbing ideals.

The brute-force scans are the oracle.  Every structural criterion below
returns ``None`` when its hypotheses do not cover the instance, and
``classify_ideal`` cross-checks each populated criterion against the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np
from sympy import factorint, isprime

from .errors import DefectError, DomainError, InapplicableError, InputError
from .ideals import (
    Ideal,
    enumerate_ideals,
    ideal_generated,
    is_maximal,
    is_prime,
    is_radical,
    maximal_ideals,
    nilradical,
    prime_decomposition,
    principal_mask,
    proper_ideals,
    quotient_char,
    zero_ideal,
)
from .rings import FiniteRing, ModuleSpec, RingHom, make_idealization, make_product, make_zn
from .verdict import Verdict


def _require_proper(I: Ideal) -> None:
    if not I.is_proper:
        raise DomainError("sdf-type properties are only defined for proper ideals")


def _check_ring(R: FiniteRing, I: Ideal) -> None:
    if I.ring is not R:
        raise InputError("ideal does not belong to the given ring")


def _first(bad: np.ndarray) -> tuple[int, int] | None:
    if not bad.any():
        return None
    a, b = np.unravel_index(int(np.argmax(bad)), bad.shape)
    return int(a), int(b)


# --- brute force ------------------------------------------------------------


def _sdf_failures(R: FiniteRing, I: Ideal, *, weak: bool, guards: bool = True) -> np.ndarray:
    inI = I.mask
    D = R.square_diff
    bad = inI[D]
    if weak:
        bad &= D != R.zero
    bad &= ~inI[R.add]
    bad &= ~inI[R.sub]
    if guards:
        bad[R.zero, :] = False
        bad[:, R.zero] = False
    return bad


def is_sdf_bruteforce(R: FiniteRing, I: Ideal) -> Verdict:
    """Scan all nonzero ``a, b`` with ``a^2 - b^2`` in ``I`` for ``a +- b`` outside ``I``.

    A failure carries the least ``(a, b)`` in index order.
    """
    _check_ring(R, I)
    _require_proper(I)
    v = I._memo.get("sdf")
    if v is None:
        w = _first(_sdf_failures(R, I, weak=False))
        v = Verdict(w is None, w, "brute-force")
        I._memo["sdf"] = v
    return v


def is_weakly_sdf_bruteforce(R: FiniteRing, I: Ideal) -> Verdict:
    _check_ring(R, I)
    _require_proper(I)
    v = I._memo.get("wsdf")
    if v is None:
        w = _first(_sdf_failures(R, I, weak=True))
        v = Verdict(w is None, w, "brute-force-weak")
        I._memo["wsdf"] = v
    return v


def sdf_without_guards(R: FiniteRing, I: Ideal) -> Verdict:
    """The definition with the ``a, b != 0`` restriction dropped."""
    _check_ring(R, I)
    _require_proper(I)
    w = _first(_sdf_failures(R, I, weak=False, guards=False))
    return Verdict(w is None, w, "brute-force-unguarded")


def is_weakly_prime(R: FiniteRing, I: Ideal) -> Verdict:
    """``0 != ab`` in ``I`` forces ``a`` or ``b`` into ``I``."""
    _check_ring(R, I)
    _require_proper(I)
    v = I._memo.get("wprime")
    if v is None:
        out = ~I.mask
        bad = I.mask[R.mul] & (R.mul != R.zero) & out[:, None] & out[None, :]
        w = _first(bad)
        v = Verdict(w is None, w, "weakly-prime-scan")
        I._memo["wprime"] = v
    return v


def is_sdf_counterexample(R: FiniteRing, I: Ideal, a: int, b: int, *, weak: bool = False) -> bool:
    """Does the pair ``(a, b)`` violate the (weakly) sdf condition for ``I``?"""
    if a == R.zero or b == R.zero:
        return False
    d = int(R.square_diff[a, b])
    if d not in I or (weak and d == R.zero):
        return False
    return int(R.add[a, b]) not in I and int(R.sub[a, b]) not in I


def is_weakly_prime_counterexample(R: FiniteRing, I: Ideal, a: int, b: int) -> bool:
    p = int(R.mul[a, b])
    return p != R.zero and p in I and a not in I and b not in I


def sdf_via_linear_system(R: FiniteRing, I: Ideal) -> Verdict:
    """For ``a, b`` outside ``I`` with ``ab`` in ``I``, look for nonzero ``x, y``
    with ``x + y = a`` and ``x - y = b``.

    Solutions are the ``x`` with ``2x = a + b`` (then ``y = a - x``); ``x = 0``
    solves it only when ``a + b = 0`` and ``y = 0`` only when ``a = b``.  The
    witness returned on failure is the solution pair ``(x, y)``.
    """
    _check_ring(R, I)
    _require_proper(I)
    ix = R.indices
    doubles = R.add[ix, ix]
    halves = np.bincount(doubles, minlength=R.order)
    out = ~I.mask
    s = R.add
    nonzero_solutions = halves[s] - (s == R.zero) - np.eye(R.order, dtype=np.int64)
    bad = I.mask[R.mul] & out[:, None] & out[None, :] & (nonzero_solutions > 0)
    hit = _first(bad)
    if hit is None:
        return Verdict(True, None, "linear-system")
    a, b = hit
    target = int(s[a, b])
    for x in np.flatnonzero(doubles == target):
        x = int(x)
        if x != R.zero and x != a:
            return Verdict(False, (x, int(R.sub[a, x])), "linear-system")
    raise AssertionError("solution count and solution search disagree")


# --- integers -----------------------------------------------------------------


def zero_ideal_zn_closed_form(n: int) -> bool:
    """``{0}`` of ``Z_n`` is sdf exactly for n = 4, 9, a prime, or twice an odd prime."""
    if n < 2:
        raise InputError("n must be at least 2")
    if n in (4, 9) or isprime(n):
        return True
    return n % 2 == 0 and n // 2 > 2 and isprime(n // 2)


def sdf_in_Z_closed_form(n: int) -> bool:
    """``nZ`` is sdf in ``Z`` iff n is prime or twice an odd prime."""
    if n < 2:
        raise InputError("n must be at least 2")
    return isprime(n) or (n % 2 == 0 and n // 2 > 2 and isprime(n // 2))


def sdf_in_Z(n: int) -> bool:
    """Decide ``nZ`` in ``Z`` through ``(n)/(4n)`` in ``Z_{4n}``; asserts the closed form."""
    if n < 2:
        raise InputError("n must be at least 2")
    R = make_zn(4 * n)
    verdict = is_sdf_bruteforce(R, ideal_generated(R, [n])).holds
    if verdict != sdf_in_Z_closed_form(n):
        raise DefectError(f"nZ for n={n}: reduction says {verdict}, closed form disagrees")
    return verdict


def nil_zn_classification(n: int) -> dict[str, bool]:
    """Closed forms for ``nil(Z_n)``: ``sdf``, and ``weakly_not_sdf`` meaning
    ``nil(Z_n) = {0}`` is weakly sdf but not sdf."""
    if n < 2:
        raise InputError("n must be at least 2")
    fac = factorint(n)
    primes = sorted(fac)
    sdf = len(primes) == 1 or (len(primes) == 2 and primes[0] == 2)
    squarefree = all(e == 1 for e in fac.values())
    weakly_not_sdf = squarefree and (
        (len(primes) == 2 and primes[0] != 2) or len(primes) >= 3
    )
    return {"sdf": sdf, "weakly_not_sdf": weakly_not_sdf}


# --- decomposition criterion -----------------------------------------------


def fast_sdf_comaximal(R: FiniteRing, I: Ideal) -> bool | None:
    """At most one component prime ``P`` with ``char(R/P) != 2``, when ``I``
    is a comaximal or irredundant intersection of primes."""
    _check_ring(R, I)
    _require_proper(I)
    dec = prime_decomposition(I)
    if dec.kind not in ("comaximal", "irredundant"):
        return None
    return sum(c != 2 for c in dec.chars) <= 1


# --- products -----------------------------------------------------------------


def _shape(I: Ideal) -> str:
    if not I.is_proper:
        return "whole"
    return "zero" if I.is_zero else "nonzero"


def product_sdf(R1: FiniteRing, I1: Ideal, R2: FiniteRing, I2: Ideal) -> bool:
    """sdf status of ``I1 x I2`` from factor data, clause by clause."""
    s1, s2 = _shape(I1), _shape(I2)
    if s1 == "whole" and s2 == "whole":
        raise DomainError("I1 x I2 is the whole ring")

    def sdf(R, I):
        return is_sdf_bruteforce(R, I).holds

    def two_in(R, I):
        return R.two in I

    if s1 == "nonzero" and s2 == "nonzero":
        return sdf(R1, I1) and sdf(R2, I2) and (two_in(R1, I1) or two_in(R2, I2))
    if s1 == "whole" or s2 == "whole":
        # one factor is everything; swap so the other one is (R, I)
        R, I = (R2, I2) if s1 == "whole" else (R1, I1)
        if I.is_zero:
            return R.is_reduced and sdf(R, I)
        return sdf(R, I)
    if s1 == "zero" and s2 == "zero":
        return (
            sdf(R1, I1)
            and sdf(R2, I2)
            and R1.is_reduced
            and R2.is_reduced
            and (R1.characteristic == 2 or R2.characteristic == 2)
        )
    # one zero, one nonzero proper
    (Rz, Iz), (Rn, In) = ((R1, I1), (R2, I2)) if s1 == "zero" else ((R2, I2), (R1, I1))
    return (
        sdf(Rz, Iz)
        and Rz.is_reduced
        and sdf(Rn, In)
        and (Rz.characteristic == 2 or two_in(Rn, In))
    )


def product_halves(R: FiniteRing) -> tuple[FiniteRing, FiniteRing]:
    """``R = R1 x R2`` with ``R2`` the product of the remaining factors."""
    factors = R.info["factors"]
    if "halves" not in R.info:
        tail = factors[1] if len(factors) == 2 else make_product(factors[1:])
        R.info["halves"] = (factors[0], tail)
    return R.info["halves"]


def split_product_ideal(R: FiniteRing, I: Ideal) -> tuple[FiniteRing, Ideal, FiniteRing, Ideal]:
    if R.kind != "product":
        raise InputError("not a product ring")
    R1, R2 = product_halves(R)
    n2 = R2.order
    m1 = np.zeros(R1.order, dtype=bool)
    m2 = np.zeros(R2.order, dtype=bool)
    m1[I.members // n2] = True
    m2[I.members % n2] = True
    I1, I2 = Ideal(R1, m1), Ideal(R2, m2)
    # ideals of a unital product are products of ideals
    assert I1.size * I2.size == I.size
    return R1, _lattice_copy(I1), R2, _lattice_copy(I2)


def product_ideal(R: FiniteRing, I1: Ideal, I2: Ideal) -> Ideal:
    R1, R2 = product_halves(R)
    if I1.ring is not R1 or I2.ring is not R2:
        raise InputError("factor ideals do not match the product's halves")
    idx = (I1.members[:, None] * R2.order + I2.members[None, :]).ravel()
    mask = np.zeros(R.order, dtype=bool)
    mask[idx] = True
    return Ideal(R, mask)


def _lattice_copy(I: Ideal) -> Ideal:
    for J in enumerate_ideals(I.ring):
        if J == I:
            return J
    return I


# --- idealization -------------------------------------------------------------


def idealization_rule(R: FiniteRing, I: Ideal, module: ModuleSpec, N: Ideal) -> bool | None:
    """sdf status of ``I(+)N`` in ``R(+)M`` from data on ``R``.

    ``N`` is a submodule of ``M = R/J``, given as an ideal of the ring ``R/J``.
    Returns ``None`` for ``I = 0, N = 0``, which no clause decides.
    """
    Q, _ = module.quotient
    if I.ring is not R or N.ring is not Q:
        raise InputError("ideal/submodule do not match the idealization data")
    _require_proper(I)
    full = not N.is_proper
    if not I.is_zero:
        return full and is_sdf_bruteforce(R, I).holds
    if full:
        return R.is_reduced and is_sdf_bruteforce(R, I).holds
    if not N.is_zero:
        return False
    return None


def idealization_sdf(R: FiniteRing, I: Ideal, module: ModuleSpec, N: Ideal) -> bool:
    """Like ``idealization_rule`` but settles ``I = N = 0`` by brute force."""
    rule = idealization_rule(R, I, module, N)
    if rule is not None:
        return rule
    T = make_idealization(R, module)
    return is_sdf_bruteforce(T, zero_ideal(T)).holds


def split_idealization_ideal(T: FiniteRing, K: Ideal) -> tuple[Ideal, Ideal] | None:
    """``(I, N)`` with ``K = I(+)N``, or ``None`` when ``K`` is not of that form."""
    R, Q = T.info["base"], T.info["module_ring"]
    nm = Q.order
    r, m = K.members // nm, K.members % nm
    mi = np.zeros(R.order, dtype=bool)
    mi[r] = True
    mn = np.zeros(nm, dtype=bool)
    mn[m[r == R.zero]] = True
    I, N = Ideal(R, mi), Ideal(Q, mn)
    if idealization_ideal(T, I, N) != K:
        return None
    return _lattice_copy(I), _lattice_copy(N)


def idealization_ideal(T: FiniteRing, I: Ideal, N: Ideal) -> Ideal:
    nm = T.info["module_ring"].order
    idx = (I.members[:, None] * nm + N.members[None, :]).ravel()
    mask = np.zeros(T.order, dtype=bool)
    mask[idx] = True
    return Ideal(T, mask)


# --- amalgamation -------------------------------------------------------------


def amalgamation_sdf(A: FiniteRing, B: FiniteRing, f: RingHom, J: Ideal, I: Ideal) -> bool:
    """sdf status of ``I |x|_J B``, which matches ``I`` in ``A`` for nonzero ``I``."""
    if I.ring is not A:
        raise InputError("I must be an ideal of A")
    _require_proper(I)
    if I.is_zero:
        raise InapplicableError("the zero ideal is not covered; use brute force on the amalgamation")
    return is_sdf_bruteforce(A, I).holds


def amalgamation_ideal(T: FiniteRing, I: Ideal) -> Ideal:
    """``I |x|_J B = {(i, f(i) + j)}`` inside ``T = A |x|_J B``."""
    a_, _ = T.info["pairs"]
    return Ideal(T, I.mask[a_])


def split_amalgamation_ideal(T: FiniteRing, K: Ideal) -> Ideal | None:
    """The ideal ``I`` of ``A`` with ``K = I |x|_J B``, if ``K`` has that form."""
    A = T.info["A"]
    a_, _ = T.info["pairs"]
    mask = np.zeros(A.order, dtype=bool)
    mask[a_[K.members]] = True
    I = Ideal(A, mask)
    if amalgamation_ideal(T, I) != K:
        return None
    return _lattice_copy(I)


# --- whole-lattice structure ------------------------------------------------


def all_ideals_sdf_report(R: FiniteRing) -> dict[str, Any]:
    """Exhaustive "every (nonzero) proper ideal is sdf" answers next to the
    prediction of whichever structural clause covers ``R``."""
    props = proper_ideals(R)
    verdicts = {I.key: is_sdf_bruteforce(R, I).holds for I in props}
    all_proper = all(verdicts.values())
    all_nonzero = all(v for I in props if not I.is_zero for v in [verdicts[I.key]])
    maxes = maximal_ideals(R)
    two = R.two_status
    predicted_all_proper: bool | None = None
    if R.is_reduced and two == "unit":
        clause = "vnr-two-unit"
        prediction = R.is_field or len(maxes) == 2
        predicted_all_proper = R.is_field
    elif R.is_reduced and two == "zero":
        clause = "vnr-char-two"
        prediction = predicted_all_proper = True
    elif R.is_reduced:
        clause = "vnr-two-zero-divisor"
        odd = sum(quotient_char(R, M) != 2 for M in maxes)
        prediction = predicted_all_proper = odd == 1
    elif len(maxes) == 1:
        clause = "quasilocal"
        M = maxes[0]
        principal = any(np.array_equal(principal_mask(R, int(m)), M.mask) for m in M.members)
        square_zero = bool(np.all(R.mul[np.ix_(M.members, M.members)] == R.zero))
        prediction = principal and square_zero
    else:
        clause = "nil-necessary"
        nil = nilradical(R)
        nonzero = [I for I in enumerate_ideals(R) if not I.is_zero]
        minimal = [I for I in nonzero if not any(J < I for J in nonzero)]
        unique_min = len(minimal) == 1 and minimal[0] == nil
        prediction = False if not unique_min else None
    consistent = (prediction is None or prediction == all_nonzero) and (
        predicted_all_proper is None or predicted_all_proper == all_proper
    )
    return {
        "all_proper": all_proper,
        "all_nonzero_proper": all_nonzero,
        "structural_prediction": prediction,
        "predicted_all_proper": predicted_all_proper,
        "clause": clause,
        "consistent": consistent,
    }


# --- weakly sdf ---------------------------------------------------------------


def weakly_not_sdf(R: FiniteRing, I: Ideal) -> bool:
    return is_weakly_sdf_bruteforce(R, I).holds and not is_sdf_bruteforce(R, I).holds


def square_diffs_vanish(R: FiniteRing, I: Ideal) -> bool:
    D = R.square_diff
    return bool(np.all(D[I.mask[D]] == R.zero))


def weakly_sdf_fast(R1: FiniteRing, I: Ideal, R2: FiniteRing, J: Ideal) -> bool | None:
    """Weakly-sdf status of ``I x J`` from factor data, when a product rule applies."""
    if not I.is_proper and not J.is_proper:
        raise DomainError("I x J is the whole ring")
    for (Ra, Ia), other in (((R1, I), J), ((R2, J), I)):
        if not other.is_proper and not Ia.is_zero and is_weakly_sdf_bruteforce(Ra, Ia).holds:
            return is_sdf_bruteforce(Ra, Ia).holds
    if I.is_proper and J.is_proper and weakly_not_sdf(R1, I) and weakly_not_sdf(R2, J):
        return square_diffs_vanish(R1, I) and square_diffs_vanish(R2, J)
    return None


def weakly_structure(R: FiniteRing, I: Ideal) -> dict[str, bool]:
    """Evaluate the forced consequences for ``I`` without judging them."""
    nil = R.nilpotent_mask
    mem = I.members
    sq = R.square[mem]
    two_sq = R.mul[R.two, sq]
    checks = {
        "subset_nil": bool(np.all(nil[mem])),
        "two_i_sq_zero": bool(np.all(two_sq == R.zero)),
        "two_i_nilpotent": bool(np.all(nil[R.mul[R.two, mem]])),
        "reduced_forces_zero": (not R.is_reduced) or I.is_zero,
    }
    if R.two_status == "unit" or R.characteristic == 2:
        checks["i_sq_zero"] = bool(np.all(sq == R.zero))
    return checks


def weakly_structure_checks(R: FiniteRing, I: Ideal) -> dict[str, bool]:
    """Consequences that must hold for a weakly-sdf ideal that is not sdf."""
    _require_proper(I)
    if not weakly_not_sdf(R, I):
        raise DomainError("needs an ideal that is weakly sdf but not sdf")
    checks = weakly_structure(R, I)
    if not all(checks.values()):
        raise DefectError(f"weakly-sdf structure violated for {I.label}: {checks}")
    return checks


# --- per-ideal records --------------------------------------------------------


@dataclass
class ClassificationRecord:
    ideal: Ideal
    is_proper: bool
    is_prime: bool | None = None
    is_maximal: bool | None = None
    is_radical: bool | None = None
    is_sdf: bool | None = None
    is_weakly_sdf: bool | None = None
    is_weakly_prime: bool | None = None
    quotient_char: int | None = None
    fast_verdicts: dict[str, bool | None] = field(default_factory=dict)
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)
    disagreements: list[str] = field(default_factory=list)


def fast_criteria(R: FiniteRing, I: Ideal) -> dict[str, bool | None]:
    """Every structural criterion's prediction for ``I`` (``None`` = inapplicable).

    Keys starting with ``weakly:`` predict weak sdf-ness, ``linear_system``
    and the rest predict sdf-ness.
    """
    out: dict[str, bool | None] = {}
    out["linear_system"] = sdf_via_linear_system(R, I).holds
    radical = is_radical(I).holds
    out["nonzero_radical"] = False if (not I.is_zero and not radical) else None
    if R.characteristic == 2:
        out["char_two_radical"] = True if radical else (False if not I.is_zero else None)
    else:
        out["char_two_radical"] = None
    two_unit = R.two_status == "unit"
    out["two_unit_prime"] = is_prime(I).holds if (two_unit and not I.is_zero) else None
    out["comaximal_primes"] = fast_sdf_comaximal(R, I)
    out["zn_zero_ideal"] = None
    out["nil_zn"] = None
    if R.kind == "zn":
        n = R.info["n"]
        if I.is_zero:
            out["zn_zero_ideal"] = zero_ideal_zn_closed_form(n)
        if I == nilradical(R):
            out["nil_zn"] = nil_zn_classification(n)["sdf"]
    out["product"] = None
    out["weakly:product"] = None
    if R.kind == "product":
        R1, I1, R2, I2 = split_product_ideal(R, I)
        out["product"] = product_sdf(R1, I1, R2, I2)
        out["weakly:product"] = weakly_sdf_fast(R1, I1, R2, I2)
    out["idealization"] = None
    if R.kind == "idealization":
        split = split_idealization_ideal(R, I)
        if split is not None:
            out["idealization"] = idealization_rule(R.info["base"], split[0], R.info["module"], split[1])
    out["amalgamation"] = None
    if R.kind == "amalgamation":
        base = split_amalgamation_ideal(R, I)
        if base is not None and not base.is_zero:
            info = R.info
            out["amalgamation"] = amalgamation_sdf(info["A"], info["B"], info["hom"], info["J"], base)
    out["weakly:two_unit"] = is_weakly_prime(R, I).holds if two_unit else None
    return out


def classify_ideal(R: FiniteRing, I: Ideal, *, strict: bool = True) -> ClassificationRecord:
    """Full record for one ideal; a fast criterion disagreeing with brute force
    raises ``DefectError`` (``strict``) or is listed in ``disagreements``."""
    _check_ring(R, I)
    if not I.is_proper:
        return ClassificationRecord(ideal=I, is_proper=False)
    prime = is_prime(I)
    sdf = is_sdf_bruteforce(R, I)
    wsdf = is_weakly_sdf_bruteforce(R, I)
    wprime = is_weakly_prime(R, I)
    rec = ClassificationRecord(
        ideal=I,
        is_proper=True,
        is_prime=prime.holds,
        is_maximal=is_maximal(I).holds,
        is_radical=is_radical(I).holds,
        is_sdf=sdf.holds,
        is_weakly_sdf=wsdf.holds,
        is_weakly_prime=wprime.holds,
        quotient_char=quotient_char(R, I),
    )
    for name, v in (("prime", prime), ("sdf", sdf), ("weakly_sdf", wsdf), ("weakly_prime", wprime)):
        if not v.holds:
            rec.witnesses[name] = v.witness
    rec.fast_verdicts = fast_criteria(R, I)
    for name, value in rec.fast_verdicts.items():
        if value is None:
            continue
        truth = rec.is_weakly_sdf if name.startswith("weakly:") else rec.is_sdf
        if value != truth:
            rec.disagreements.append(name)
    if rec.disagreements and strict:
        raise DefectError(f"{R.label}, ideal {I.short_name()}: criteria {rec.disagreements} disagree with brute force")
    return rec


def classify_ring(R: FiniteRing, *, strict: bool = True) -> list[ClassificationRecord]:
    return [classify_ideal(R, I, strict=strict) for I in enumerate_ideals(R)]
