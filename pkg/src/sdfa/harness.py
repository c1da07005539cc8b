"""Named, individually runnable checks of the sdf theory over a ring corpus.

Each property scans its applicable instances, counts them, and keeps the
first failing instance as a counterexample that ``replay`` can re-verify.
"""

from __future__ import annotations

import itertools
import traceback
from dataclasses import dataclass
from typing import Any, Callable, Iterable

import numpy as np
from sympy import factorint, isprime

from .classify import (
    all_ideals_sdf_report,
    amalgamation_sdf,
    idealization_ideal,
    idealization_rule,
    is_sdf_bruteforce,
    is_sdf_counterexample,
    is_weakly_prime,
    is_weakly_prime_counterexample,
    is_weakly_sdf_bruteforce,
    nil_zn_classification,
    product_ideal,
    product_sdf,
    sdf_via_linear_system,
    sdf_without_guards,
    split_amalgamation_ideal,
    split_idealization_ideal,
    split_product_ideal,
    square_diffs_vanish,
    weakly_not_sdf,
    weakly_sdf_fast,
    weakly_structure,
    zero_ideal_zn_closed_form,
    classify_ideal,
)
from .corpus import CorpusSpec, build_corpus, galois_field
from .errors import InputError
from .ideals import (
    Ideal,
    enumerate_ideals,
    hom_image_ideal,
    hom_preimage_ideal,
    ideal_from_members,
    ideal_generated,
    ideal_intersection,
    is_prime,
    is_radical,
    kernel,
    maximal_ideals,
    nilradical,
    prime_decomposition,
    proper_ideals,
    quotient_char,
    unit_ideal,
    zero_ideal,
)
from .rings import (
    FiniteRing,
    ModuleSpec,
    RingHom,
    check_ring_axioms,
    localize,
    make_amalgamation,
    make_idealization,
    make_poly_quotient,
    make_product,
    make_quotient,
    make_zn,
    hom_by_name,
    ring_queries,
)

STATUSES = ("pass", "fail", "inapplicable")

# Every in-scope result; each tag must be covered by at least one property.
IN_SCOPE = (
    "def-2.1", "def-5.1", "thm-2.2", "rem-2.3", "thm-2.4", "thm-2.5", "thm-2.6", "thm-2.7",
    "ex-2.8a", "ex-2.8b", "ex-2.8d", "ex-2.8f", "thm-2.9", "thm-2.10", "cor-2.11", "ex-2.12",
    "thm-3.1", "ex-3.2", "thm-3.3", "ex-3.4", "thm-3.5", "thm-3.6", "thm-3.7", "ex-3.8",
    "thm-4.1", "cor-4.3", "thm-4.4", "thm-4.6", "thm-4.7", "thm-4.8", "thm-4.10", "thm-4.11",
    "rem-4.12", "thm-4.14", "ex-4.15", "thm-4.16", "rem-4.17",
    "ex-5.2", "thm-5.3", "thm-5.4", "thm-5.5", "cor-5.6", "ex-5.7", "thm-5.8", "cor-5.9",
    "thm-5.11", "thm-5.12", "ex-5.13", "ex-5.14", "thm-5.16",
)


# --- results ----------------------------------------------------------------


@dataclass
class PropertyResult:
    property_id: str
    status: str
    checked_instances: int
    counterexample: dict | None = None
    sampled: bool = False
    description: str = ""

    def to_dict(self) -> dict:
        return {
            "property_id": self.property_id,
            "status": self.status,
            "checked_instances": self.checked_instances,
            "counterexample": self.counterexample,
            "sampled": self.sampled,
            "description": self.description,
        }


class Tally:
    """Instance counter that keeps the first failure."""

    def __init__(self):
        self.count = 0
        self.counterexample: dict | None = None
        self.ring: FiniteRing | None = None

    def check(
        self,
        ok: bool,
        R: FiniteRing,
        I: Ideal | None = None,
        *,
        decider: str,
        expected: Any = True,
        witness: Iterable[int] | None = None,
        detail: str = "",
    ) -> bool:
        self.count += 1
        ok = bool(ok)
        if not ok and self.counterexample is None:
            raw = None if witness is None else [int(w) for w in witness]
            self.counterexample = {
                "ring": R.label,
                "ideal": None if I is None else I.gens_text(),
                "ideal_members": None if I is None else [int(m) for m in I.members],
                "decider": decider,
                "expected": expected,
                "witness": None if raw is None else [R.render(w) for w in raw],
                "witness_raw": raw,
                "detail": detail,
            }
        return ok


# --- replay -------------------------------------------------------------------


def _thm25(R: FiniteRing, I: Ideal) -> bool:
    two_in = R.two in I
    char_two = quotient_char(R, I) == 2
    nz = R.indices != R.zero
    hit = I.mask[R.square_diff] & nz[:, None] & nz[None, :]
    both = bool(np.all(I.mask[R.add][hit] & I.mask[R.sub][hit]))
    return two_in == char_two == both


def _thm31(R: FiniteRing, _I=None) -> bool:
    nil = nilradical(R)
    Q, _ = make_quotient(R, nil)
    if not ring_queries(Q)["is_von_neumann_regular"]:
        return False
    if R.is_reduced:
        return True
    nonzero = [J for J in enumerate_ideals(R) if not J.is_zero]
    minimal = [J for J in nonzero if not any(K < J for K in nonzero)]
    return minimal == [nil]


DECIDERS: dict[str, Callable[[FiniteRing, Ideal | None], Any]] = {
    "ring_axioms": lambda R, I: check_ring_axioms(R) is None,
    "sdf": lambda R, I: is_sdf_bruteforce(R, I).holds,
    "weakly_sdf": lambda R, I: is_weakly_sdf_bruteforce(R, I).holds,
    "weakly_prime": lambda R, I: is_weakly_prime(R, I).holds,
    "prime": lambda R, I: is_prime(I).holds,
    "radical": lambda R, I: is_radical(I).holds,
    "linear_system": lambda R, I: sdf_via_linear_system(R, I).holds,
    "sdf_without_guards": lambda R, I: sdf_without_guards(R, I).holds,
    "weakly_not_sdf": lambda R, I: weakly_not_sdf(R, I),
    "two_in_ideal_equivalence": _thm25,
    "nil_quotient_vnr": _thm31,
    "all_ideals_report": lambda R, I: all_ideals_sdf_report(R)["consistent"],
    "all_proper_sdf": lambda R, I: all_ideals_sdf_report(R)["all_proper"],
    "all_nonzero_proper_sdf": lambda R, I: all_ideals_sdf_report(R)["all_nonzero_proper"],
    "weakly_structure": lambda R, I: all(weakly_structure(R, I).values()),
    "subset_nil": lambda R, I: weakly_structure(R, I)["subset_nil"],
    "square_diffs_vanish": lambda R, I: square_diffs_vanish(R, I),
    "fast_criteria": lambda R, I: not classify_ideal(R, I, strict=False).disagreements,
}


def replay(cex: dict, ring: FiniteRing | None = None) -> bool:
    """Re-run the decider named in ``cex``; true when the failure reproduces.

    ``ring`` defaults to rebuilding the ring from its label.
    """
    if ring is None:
        from .dsl import parse_ring

        ring = parse_ring(cex["ring"])
    decider = cex["decider"]
    if decider == "exception":
        return True
    I = None
    if cex.get("ideal_members") is not None:
        I = ideal_from_members(ring, cex["ideal_members"])
    w = cex.get("witness_raw")
    if decider == "sdf_counterexample":
        return not is_sdf_counterexample(ring, I, *w)
    if decider == "weak_sdf_counterexample":
        return not is_sdf_counterexample(ring, I, *w, weak=True)
    if decider == "weakly_prime_counterexample":
        return not is_weakly_prime_counterexample(ring, I, *w)
    return DECIDERS[decider](ring, I) != cex["expected"]


# --- registry ---------------------------------------------------------------


@dataclass(frozen=True)
class Property:
    property_id: str
    description: str
    covers: tuple[str, ...]
    fn: Callable[["Context", Tally], None]
    sampled: bool = False


REGISTRY: dict[str, Property] = {}


def prop(property_id: str, description: str, covers: Iterable[str], sampled: bool = False):
    def register(fn):
        if property_id in REGISTRY:
            raise ValueError(f"duplicate property id {property_id}")
        REGISTRY[property_id] = Property(property_id, description, tuple(covers), fn, sampled)
        return fn

    return register


class Context:
    """Corpus plus shared caches; properties only read from it."""

    def __init__(self, corpus: list[FiniteRing], seed: int = 0):
        self.corpus = list(corpus)
        self.seed = seed
        self._zn: dict[int, FiniteRing] = {}
        self._homs: dict[int, list] = {}
        for R in self.corpus:
            if R.kind == "zn":
                self._zn.setdefault(R.info["n"], R)

    def zn(self, n: int) -> FiniteRing:
        if n not in self._zn:
            self._zn[n] = make_zn(n)
        return self._zn[n]

    def small(self, max_order: int) -> list[FiniteRing]:
        return [R for R in self.corpus if R.order <= max_order]

    def kind(self, kind: str) -> list[FiniteRing]:
        return [R for R in self.corpus if R.kind == kind]

    def zn_moduli(self) -> list[int]:
        return sorted(R.info["n"] for R in self.corpus if R.kind == "zn")

    def homs(self, R: FiniteRing) -> list[tuple[str, RingHom]]:
        """Quotient projections out of ``R`` and subring inclusions into ``R``."""
        if id(R) not in self._homs:
            self._homs[id(R)] = _homs_for(self, R)
        return self._homs[id(R)]


def _homs_for(ctx: Context, R: FiniteRing) -> list[tuple[str, RingHom]]:
    out = []
    for J in enumerate_ideals(R):
        if J.is_proper and not J.is_zero:
            _, proj = make_quotient(R, J)
            out.append(("projection", proj))
    if R.kind != "zn":
        c = R.characteristic
        Z = ctx.zn(c)
        out.append(("inclusion", RingHom(Z, R, [R.multiple(k) for k in range(c)], name="prime-subring")))
    if R.kind == "idealization":
        base, nm = R.info["base"], R.info["module_ring"].order
        zero_m = R.info["module_ring"].zero
        out.append(("inclusion", RingHom(base, R, np.arange(base.order) * nm + zero_m, name="base")))
    if R.kind == "amalgamation":
        A, f = R.info["A"], R.info["hom"]
        a_, b_ = R.info["pairs"]
        pos = {(int(a), int(b)): k for k, (a, b) in enumerate(zip(a_, b_))}
        out.append(("inclusion", RingHom(A, R, [pos[(a, int(f(a)))] for a in range(A.order)], name="graph")))
    if R.kind == "product" and len(R.info["factors"]) == 2:
        F1, F2 = R.info["factors"]
        if F1.label == F2.label:
            s = R.info["strides"][0]
            out.append(("inclusion", RingHom(F1, R, np.arange(F1.order) * (s + 1), name="diagonal")))
    for _, f in out:
        f.validate()
    return out


def _sdf(R: FiniteRing, I: Ideal) -> bool:
    return is_sdf_bruteforce(R, I).holds


def _wsdf(R: FiniteRing, I: Ideal) -> bool:
    return is_weakly_sdf_bruteforce(R, I).holds


def _odd_count(chars: Iterable[int]) -> int:
    return sum(c != 2 for c in chars)


def _gen(R: FiniteRing, *elements) -> Ideal:
    return ideal_generated(R, [R.parse_element(e) for e in elements])


def _certify(t: Tally, R: FiniteRing, I: Ideal, a, b, *, kind: str = "sdf") -> None:
    a, b = R.parse_element(a), R.parse_element(b)
    if kind == "weakly_prime":
        ok = is_weakly_prime_counterexample(R, I, a, b)
        decider = "weakly_prime_counterexample"
    else:
        ok = is_sdf_counterexample(R, I, a, b, weak=kind == "weak")
        decider = "weak_sdf_counterexample" if kind == "weak" else "sdf_counterexample"
    t.check(ok, R, I, decider=decider, witness=(a, b), detail="stated witness must certify failure")


# --- ring level ---------------------------------------------------------------


@prop("ring-axioms", "every corpus ring satisfies the commutative ring axioms", ["def-2.1"])
def _ring_axioms(ctx, t):
    for R in ctx.corpus:
        t.ring = R
        hit = check_ring_axioms(R, seed=ctx.seed)
        t.check(hit is None, R, decider="ring_axioms", witness=hit[1] if hit else None,
                detail=hit[0] if hit else "")


@prop("hom-axioms", "enumerated projections and inclusions preserve 1, + and *", ["thm-2.10"])
def _hom_axioms(ctx, t):
    for R in ctx.small(32):
        t.ring = R
        for name, f in ctx.homs(R):
            bad = f.axiom_violation()
            t.check(bad is None, R, decider="ring_axioms", detail=f"{name} {f.name}: {bad}")


@prop("fast-criteria-agreement", "every applicable structural criterion matches brute force",
      ["thm-2.7", "thm-4.1", "thm-4.8", "thm-4.10", "thm-4.11", "thm-4.14", "thm-4.16", "thm-5.16"])
def _fast_agreement(ctx, t):
    for R in ctx.corpus:
        t.ring = R
        for I in proper_ideals(R):
            rec = classify_ideal(R, I, strict=False)
            t.check(not rec.disagreements, R, I, decider="fast_criteria",
                    detail=f"disagreeing criteria: {rec.disagreements}")


# --- definitions and basic properties -------------------------------------------


@prop("def-2.1-5.1-hierarchy", "prime => sdf => weakly sdf and prime => weakly prime => weakly sdf",
      ["def-2.1", "def-5.1"])
def _hierarchy(ctx, t):
    for R in ctx.corpus:
        t.ring = R
        for I in proper_ideals(R):
            p, s, w, wp = is_prime(I).holds, _sdf(R, I), _wsdf(R, I), is_weakly_prime(R, I).holds
            if p and not s:
                t.check(False, R, I, decider="sdf", expected=True, detail="prime but not sdf")
            elif s and not w:
                t.check(False, R, I, decider="weakly_sdf", expected=True, detail="sdf but not weakly sdf")
            elif p and not wp:
                t.check(False, R, I, decider="weakly_prime", expected=True, detail="prime but not weakly prime")
            elif wp and not w:
                t.check(False, R, I, decider="weakly_sdf", expected=True, detail="weakly prime but not weakly sdf")
            else:
                t.check(True, R, I, decider="sdf")


@prop("thm-2.2-radical", "nonzero sdf ideals are radical", ["thm-2.2"])
def _thm22(ctx, t):
    for R in ctx.corpus:
        t.ring = R
        for I in proper_ideals(R):
            if not I.is_zero and _sdf(R, I):
                t.check(is_radical(I).holds, R, I, decider="radical")


@prop("rem-2.3a-z4-zero-ideal", "{0} of Z_4 is sdf but not radical", ["rem-2.3"])
def _rem23a(ctx, t):
    R = ctx.zn(4)
    I = zero_ideal(R)
    t.check(_sdf(R, I), R, I, decider="sdf")
    t.check(not is_radical(I).holds, R, I, decider="radical", expected=False)


@prop("rem-2.3b-guards", "for nonzero I the nonzero guards on a, b change nothing", ["rem-2.3"])
def _rem23b(ctx, t):
    for R in ctx.corpus:
        t.ring = R
        for I in proper_ideals(R):
            if not I.is_zero:
                s = _sdf(R, I)
                t.check(sdf_without_guards(R, I).holds == s, R, I, decider="sdf_without_guards", expected=s)


@prop("thm-2.4-char2-radical", "in characteristic 2, radical ideals are sdf", ["thm-2.4"])
def _thm24(ctx, t):
    for R in ctx.corpus:
        if R.characteristic != 2:
            continue
        t.ring = R
        for I in proper_ideals(R):
            if is_radical(I).holds:
                t.check(_sdf(R, I), R, I, decider="sdf")


@prop("thm-2.5-two-in-ideal", "for sdf I: 2 in I iff char(R/I) = 2 iff both a+b and a-b absorb",
      ["thm-2.5"])
def _thm25_prop(ctx, t):
    for R in ctx.corpus:
        t.ring = R
        for I in proper_ideals(R):
            if _sdf(R, I):
                t.check(_thm25(R, I), R, I, decider="two_in_ideal_equivalence")


@prop("thm-2.6-two-unit-prime", "when 2 is a unit, nonzero sdf ideals are prime", ["thm-2.6"])
def _thm26(ctx, t):
    for R in ctx.corpus:
        if R.two_status != "unit":
            continue
        t.ring = R
        for I in proper_ideals(R):
            if not I.is_zero and _sdf(R, I):
                t.check(is_prime(I).holds, R, I, decider="prime")


@prop("thm-2.7-linear-system", "the linear-system criterion equals brute force on every ideal", ["thm-2.7"])
def _thm27(ctx, t):
    for R in ctx.corpus:
        t.ring = R
        for I in proper_ideals(R):
            s = _sdf(R, I)
            lin = sdf_via_linear_system(R, I)
            t.check(lin.holds == s, R, I, decider="linear_system", expected=s, witness=lin.witness)


@prop("ex-2.8a-integers", "nZ is sdf iff n is prime or twice an odd prime (through Z_4n)", ["ex-2.8a"])
def _ex28a(ctx, t):
    for n in ctx.zn_moduli():
        R = make_zn(4 * n)
        t.ring = R
        I = ideal_generated(R, [n])
        expected = isprime(n) or (n % 2 == 0 and n > 4 and isprime(n // 2))
        t.check(_sdf(R, I) == expected, R, I, decider="sdf", expected=expected)


@prop("cor-4.3-integers", "nZ is sdf iff n is squarefree with at most one odd prime factor", ["cor-4.3"])
def _cor43(ctx, t):
    for n in ctx.zn_moduli():
        fac = factorint(n)
        expected = all(e == 1 for e in fac.values()) and sum(p != 2 for p in fac) <= 1
        R = make_zn(4 * n)
        t.ring = R
        I = ideal_generated(R, [n])
        t.check(_sdf(R, I) == expected, R, I, decider="sdf", expected=expected)


@prop("ex-2.8b-boolean", "every proper ideal of a boolean ring is sdf", ["ex-2.8b"])
def _ex28b(ctx, t):
    for R in ctx.corpus:
        if R.is_boolean:
            t.ring = R
            for I in proper_ideals(R):
                t.check(_sdf(R, I), R, I, decider="sdf")


def _box_ideal(R: FiniteRing, tests: list[Callable[[Any], bool]]) -> Ideal:
    mask = np.array([all(ok(x) for ok, x in zip(tests, R.elements[i])) for i in range(R.order)])
    return Ideal(R, mask)


@prop("ex-2.8d-boolean-times-z", "I_1 x .. x I_k x (n) in Z_2^k x Z_4n is sdf iff nZ is", ["ex-2.8d"])
def _ex28d(ctx, t):
    two = make_zn(2)
    for n in [n for n in ctx.zn_moduli() if n <= 16]:
        expected = isprime(n) or (n % 2 == 0 and n > 4 and isprime(n // 2))
        for k in (1, 2):
            R = make_product([two] * k + [make_zn(4 * n)])
            t.ring = R
            for choice in itertools.product((False, True), repeat=k):
                tests = [(lambda x: True) if whole else (lambda x: x == 0) for whole in choice]
                tests.append(lambda y, n=n: y % n == 0)
                I = _box_ideal(R, tests)
                t.check(_sdf(R, I) == expected, R, I, decider="sdf", expected=expected)


def _poly_mul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return out


def _divides(g, f, p) -> bool:
    r = list(f)
    inv = pow(g[-1], -1, p)
    while len(r) >= len(g) and any(r):
        c = r[-1] * inv % p
        shift = len(r) - len(g)
        for i, gi in enumerate(g):
            r[shift + i] = (r[shift + i] - c * gi) % p
        r.pop()
    return not any(r)


def _monics(p, d):
    for low in itertools.product(range(p), repeat=d):
        yield list(low) + [1]


def _irreducible(f, p) -> bool:
    d = len(f) - 1
    return not any(_divides(g, f, p) for k in range(1, d // 2 + 1) for g in _monics(p, k))


def _squarefree(f, p) -> bool:
    d = len(f) - 1
    return not any(_divides(_poly_mul(g, g, p), f, p) for k in range(1, d // 2 + 1) for g in _monics(p, k))


@prop("ex-2.8f-polynomials", "(f) in K[X]/(f^2): radical iff squarefree, prime iff irreducible; "
      "sdf iff radical (char 2) or prime (char != 2)", ["ex-2.8f"])
def _ex28f(ctx, t):
    for p, dmax in ((2, 3), (3, 2), (5, 2)):
        for d in range(1, dmax + 1):
            for f in _monics(p, d):
                R = make_poly_quotient(p, _poly_mul(f, f, p))
                t.ring = R
                I = _gen(R, tuple(f))
                sqf, irr = _squarefree(f, p), _irreducible(f, p)
                t.check(is_radical(I).holds == sqf, R, I, decider="radical", expected=sqf)
                t.check(is_prime(I).holds == irr, R, I, decider="prime", expected=irr)
                expected = sqf if p == 2 else irr
                t.check(_sdf(R, I) == expected, R, I, decider="sdf", expected=expected)


# --- localization and homomorphisms ---------------------------------------------


def _localizations(R: FiniteRing):
    for e in sorted(R.idempotents):
        if e == R.zero:
            continue
        S = {R.one, e}
        L, h = localize(R, S)
        yield S, L, h


@prop("thm-2.9-localization", "sdf I missing S localizes to an sdf ideal", ["thm-2.9"])
def _thm29(ctx, t):
    _localization_check(ctx, t, _sdf, "sdf")


@prop("thm-5.4-localization-weak", "weakly sdf I missing S localizes to a weakly sdf ideal", ["thm-5.4"])
def _thm54(ctx, t):
    _localization_check(ctx, t, _wsdf, "weakly_sdf")


def _localization_check(ctx, t, decide, decider):
    for R in ctx.small(64):
        t.ring = R
        for S, L, h in _localizations(R):
            for I in proper_ideals(R):
                if any(s in I for s in S) or not decide(R, I):
                    continue
                J = hom_image_ideal(h, I)
                t.check(decide(L, J), L, J, decider=decider, detail=f"from {I.label}")


def _hom_scan(ctx, t, body):
    for R in ctx.small(32):
        t.ring = R
        for kind, f in ctx.homs(R):
            body(kind, f)


@prop("thm-2.10a-preimage-nonzero", "preimages of nonzero sdf ideals are sdf", ["thm-2.10"])
def _thm210a(ctx, t):
    def body(kind, f):
        for J in proper_ideals(f.target):
            if not J.is_zero and _sdf(f.target, J):
                P = hom_preimage_ideal(f, J)
                t.check(_sdf(f.source, P), f.source, P, decider="sdf", detail=f"{kind} {f.name}")

    _hom_scan(ctx, t, body)


@prop("thm-2.10b-injective-preimage", "injective homs pull sdf ideals back to sdf ideals", ["thm-2.10"])
def _thm210b(ctx, t):
    _pullback(ctx, t, _sdf, "sdf")


@prop("cor-2.11a-contraction", "contractions of sdf ideals along subring inclusions are sdf", ["cor-2.11"])
def _cor211a(ctx, t):
    _pullback(ctx, t, _sdf, "sdf", inclusions_only=True)


@prop("thm-5.5a-weak-injective-preimage", "injective homs pull weakly sdf ideals back", ["thm-5.5"])
def _thm55a(ctx, t):
    _pullback(ctx, t, _wsdf, "weakly_sdf")


@prop("cor-5.6a-weak-contraction", "contractions of weakly sdf ideals are weakly sdf", ["cor-5.6"])
def _cor56a(ctx, t):
    _pullback(ctx, t, _wsdf, "weakly_sdf", inclusions_only=True)


def _pullback(ctx, t, decide, decider, inclusions_only=False):
    def body(kind, f):
        if not f.is_injective or (inclusions_only and kind != "inclusion"):
            return
        for J in proper_ideals(f.target):
            if decide(f.target, J):
                P = hom_preimage_ideal(f, J)
                t.check(decide(f.source, P), f.source, P, decider=decider, detail=f"{kind} {f.name}")

    _hom_scan(ctx, t, body)


@prop("thm-2.10c-surjective-image", "surjections carry sdf ideals containing the kernel to sdf ideals",
      ["thm-2.10"])
def _thm210c(ctx, t):
    _pushforward(ctx, t, _sdf, "sdf")


@prop("thm-5.5b-weak-surjective-image", "surjections carry weakly sdf ideals containing the kernel",
      ["thm-5.5"])
def _thm55b(ctx, t):
    _pushforward(ctx, t, _wsdf, "weakly_sdf")


def _pushforward(ctx, t, decide, decider):
    def body(kind, f):
        if not f.is_surjective:
            return
        ker = kernel(f)
        for I in proper_ideals(f.source):
            if ker <= I and decide(f.source, I):
                J = hom_image_ideal(f, I)
                t.check(decide(f.target, J), f.target, J, decider=decider, detail=f"{kind} {f.name}")

    _hom_scan(ctx, t, body)


def _quotient_pairs(ctx):
    for R in ctx.small(32):
        for J in enumerate_ideals(R):
            if J.is_proper and not J.is_zero:
                Q, proj = make_quotient(R, J)
                for I in proper_ideals(R):
                    if J <= I:
                        yield R, J, I, Q, hom_image_ideal(proj, I)


@prop("cor-2.11b-quotient", "J inside sdf I gives sdf I/J", ["cor-2.11"])
def _cor211b(ctx, t):
    for R, J, I, Q, IJ in _quotient_pairs(ctx):
        if _sdf(R, I):
            t.check(_sdf(Q, IJ), Q, IJ, decider="sdf", detail=f"from {I.label}")


@prop("cor-2.11c-quotient-iff", "for J strictly inside I, I/J is sdf iff I is", ["cor-2.11"])
def _cor211c(ctx, t):
    for R, J, I, Q, IJ in _quotient_pairs(ctx):
        if J < I:
            s = _sdf(R, I)
            t.check(_sdf(Q, IJ) == s, Q, IJ, decider="sdf", expected=s, detail=f"from {I.label}")


@prop("cor-5.6b-weak-quotient", "J inside weakly sdf I gives weakly sdf I/J", ["cor-5.6"])
def _cor56b(ctx, t):
    for R, J, I, Q, IJ in _quotient_pairs(ctx):
        if _wsdf(R, I):
            t.check(_wsdf(Q, IJ), Q, IJ, decider="weakly_sdf", detail=f"from {I.label}")


@prop("ex-2.12-negative-fixtures", "dropping the nonzero or kernel hypotheses breaks the hom rules",
      ["ex-2.12"])
def _ex212(ctx, t):
    Z4, Z16 = ctx.zn(4), make_zn(16)
    f = hom_by_name(Z16, Z4, "canonical")
    zero = zero_ideal(Z4)
    t.check(_sdf(Z4, zero), Z4, zero, decider="sdf")
    pre = hom_preimage_ideal(f, zero)
    t.check(pre == _gen(Z16, 4), Z16, pre, decider="sdf", expected=False, detail="preimage of {0} is (4)")
    t.check(not _sdf(Z16, pre), Z16, pre, decider="sdf", expected=False)
    # (4) inside Z_16 stands in for 4Z
    _certify(t, Z16, pre, 4, 2)


@prop("ex-5.7-negative-fixtures", "weak analogues of the hom rules fail without their hypotheses",
      ["ex-5.7"])
def _ex57(ctx, t):
    Z4, Z16 = ctx.zn(4), make_zn(16)
    R = make_product([Z16, Z16])
    T = make_product([Z4, Z4])
    f = RingHom(R, T, [T.parse_element((a % 4, b % 4)) for a, b in R.elements], name="reduction").validate()
    J = _gen(T, (0, 2))
    t.check(weakly_not_sdf(T, J), T, J, decider="weakly_not_sdf")
    P = hom_preimage_ideal(f, J)
    t.check(P == _gen(R, (4, 0), (0, 2)), R, P, decider="weakly_sdf", expected=False,
            detail="preimage is (4) x (2)")
    _certify(t, R, P, (2, 2), (0, 2), kind="weak")
    _certify(t, Z16, _gen(Z16, 4), 4, 2, kind="weak")


# --- whole-ring structure ---------------------------------------------------------


@prop("thm-3.1-vnr-reduction", "all nonzero proper ideals sdf => R/nil(R) is vNr and nil(R) is the "
      "unique minimal nonzero ideal when R is not reduced", ["thm-3.1"])
def _thm31_prop(ctx, t):
    for R in ctx.corpus:
        t.ring = R
        if all_ideals_sdf_report(R)["all_nonzero_proper"]:
            t.check(_thm31(R), R, decider="nil_quotient_vnr")


def _clause_check(ctx, t, clause):
    for R in ctx.corpus:
        t.ring = R
        rep = all_ideals_sdf_report(R)
        if rep["clause"] == clause:
            t.check(rep["consistent"], R, decider="all_ideals_report", detail=str(rep))


@prop("thm-3.3-quasilocal", "local non-reduced rings: all nonzero proper ideals sdf iff M principal "
      "with M^2 = 0", ["thm-3.3"])
def _thm33(ctx, t):
    _clause_check(ctx, t, "quasilocal")


@prop("thm-3.5-two-unit-vnr", "vNr with 2 a unit: field or product of two fields", ["thm-3.5"])
def _thm35(ctx, t):
    _clause_check(ctx, t, "vnr-two-unit")


@prop("thm-3.6-char2-vnr", "vNr of characteristic 2: every proper ideal sdf", ["thm-3.6"])
def _thm36(ctx, t):
    _clause_check(ctx, t, "vnr-char-two")


@prop("thm-3.7-two-zero-divisor-vnr", "vNr with 2 a nonzero zero-divisor: one maximal ideal of odd "
      "residue characteristic", ["thm-3.7"])
def _thm37(ctx, t):
    _clause_check(ctx, t, "vnr-two-zero-divisor")


@prop("thm-3.1-nil-necessary", "non-reduced, non-local rings: the necessary condition never "
      "contradicts the exhaustive answer", ["thm-3.1"])
def _thm31_clause(ctx, t):
    _clause_check(ctx, t, "nil-necessary")


def _lattice_fixture(t, R, all_proper, all_nonzero):
    rep = all_ideals_sdf_report(R)
    t.check(rep["all_proper"] == all_proper, R, decider="all_proper_sdf", expected=all_proper)
    t.check(rep["all_nonzero_proper"] == all_nonzero, R, decider="all_nonzero_proper_sdf",
            expected=all_nonzero)


@prop("ex-3.2-fixtures", "Z_4, Z_2^2, F_4^2 all proper; Z_25, Z_3^2 nonzero proper only", ["ex-3.2"])
def _ex32(ctx, t):
    Z2, Z3 = make_zn(2), make_zn(3)
    F4 = galois_field(4)
    _lattice_fixture(t, make_zn(4), True, True)
    _lattice_fixture(t, make_zn(25), False, True)
    _lattice_fixture(t, make_product([Z2, Z2]), True, True)
    _lattice_fixture(t, make_product([Z3, Z3]), False, True)
    _lattice_fixture(t, make_product([F4, F4]), True, True)


@prop("ex-3.2c-counterexample", "0 x 0 x Z_3 in Z_3^3 fails with a = (2,1,0), b = (1,1,0)", ["ex-3.2"])
def _ex32c(ctx, t):
    Z3 = make_zn(3)
    R = make_product([Z3, Z3, Z3])
    I = _gen(R, (0, 0, 1))
    t.check(not _sdf(R, I), R, I, decider="sdf", expected=False)
    _certify(t, R, I, (2, 1, 0), (1, 1, 0))


@prop("ex-3.4a-zp2", "Z_{p^2}: nonzero proper ideals sdf; {0} sdf iff p is 2 or 3", ["ex-3.4"])
def _ex34a(ctx, t):
    for n in ctx.zn_moduli():
        fac = factorint(n)
        if list(fac.values()) != [2]:
            continue
        p = next(iter(fac))
        _lattice_fixture(t, ctx.zn(n), p in (2, 3), True)


@prop("ex-3.4b-dual-numbers", "K[X]/(X^2): nonzero proper ideals sdf; {0} sdf iff K = F_3", ["ex-3.4"])
def _ex34b(ctx, t):
    for K in (make_zn(2), make_zn(3), galois_field(4), make_zn(5), make_zn(7)):
        expected = K.order == 3
        rings = [make_idealization(K, ModuleSpec(K))]
        if K.kind == "zn":
            rings.append(make_poly_quotient(K.order, (0, 0, 1)))
        for R in rings:
            _lattice_fixture(t, R, expected, True)


def _field_factors(R: FiniteRing) -> list[FiniteRing] | None:
    if R.kind != "product":
        return None
    factors = R.info["factors"]
    return factors if all(F.is_field for F in factors) else None


@prop("ex-3.8-field-products", "products of fields: all proper sdf iff at most one odd field; "
      "all nonzero proper sdf iff that or exactly two fields", ["ex-3.8"])
def _ex38(ctx, t):
    for R in ctx.corpus:
        factors = _field_factors(R)
        if factors is None:
            continue
        t.ring = R
        odd = _odd_count(F.characteristic for F in factors)
        _lattice_fixture(t, R, odd <= 1, odd <= 1 or len(factors) == 2)


# --- decompositions ---------------------------------------------------------------


@prop("thm-4.1-comaximal", "comaximal prime intersections are sdf iff at most one residue "
      "characteristic differs from 2", ["thm-4.1"])
def _thm41(ctx, t):
    for R in ctx.corpus:
        t.ring = R
        for I in proper_ideals(R):
            dec = prime_decomposition(I)
            if dec.kind == "comaximal":
                expected = _odd_count(dec.chars) <= 1
                t.check(_sdf(R, I) == expected, R, I, decider="sdf", expected=expected)


@prop("thm-4.7-irredundant", "every irredundant family of primes: the intersection is sdf iff at most "
      "one residue characteristic differs from 2", ["thm-4.7"])
def _thm47(ctx, t):
    for R in ctx.small(128):
        t.ring = R
        primes = maximal_ideals(R)
        for k in range(1, min(len(primes), 4) + 1):
            for family in itertools.combinations(primes, k):
                I = family[0]
                for P in family[1:]:
                    I = ideal_intersection(I, P)
                # distinct maximal ideals are always irredundant; assert it anyway
                for drop in range(k):
                    rest = [P for j, P in enumerate(family) if j != drop]
                    if rest:
                        J = rest[0]
                        for P in rest[1:]:
                            J = ideal_intersection(J, P)
                        assert J != I
                expected = _odd_count(quotient_char(R, P) for P in family) <= 1
                t.check(_sdf(R, I) == expected, R, I, decider="sdf", expected=expected)


@prop("thm-4.8-zn-zero-ideal", "{0} of Z_n is sdf iff n is 4, 9, a prime or twice an odd prime",
      ["thm-4.8"])
def _thm48(ctx, t):
    for n in ctx.zn_moduli():
        R = ctx.zn(n)
        t.ring = R
        I = zero_ideal(R)
        expected = zero_ideal_zn_closed_form(n)
        t.check(_sdf(R, I) == expected, R, I, decider="sdf", expected=expected)


@prop("thm-5.16-nil-zn", "nil(Z_n): sdf and weakly-not-sdf closed forms match brute force", ["thm-5.16"])
def _thm516(ctx, t):
    for n in ctx.zn_moduli():
        R = ctx.zn(n)
        t.ring = R
        nil = nilradical(R)
        cf = nil_zn_classification(n)
        t.check(_sdf(R, nil) == cf["sdf"], R, nil, decider="sdf", expected=cf["sdf"])
        # the second closed form speaks about nil(Z_n) = {0} only
        if nil.is_zero:
            t.check(weakly_not_sdf(R, nil) == cf["weakly_not_sdf"], R, nil, decider="weakly_not_sdf",
                    expected=cf["weakly_not_sdf"])


# --- polynomial extensions (sampled) -------------------------------------------------


def _poly_square_diff(R: FiniteRing, f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Coefficients of f^2 - g^2 for batches of coefficient rows."""
    n, d = f.shape
    out = np.full((n, 2 * d - 1), R.zero, dtype=np.int64)
    for i in range(d):
        for j in range(d):
            term = R.sub[R.mul[f[:, i], f[:, j]], R.mul[g[:, i], g[:, j]]]
            out[:, i + j] = R.add[out[:, i + j], term]
    return out


@prop("thm-4.4-sampled", "sampled falsification: sdf comaximal I gives pairs f, g of degree <= 3 with "
      "f^2 - g^2 in I[X] and f+g or f-g in I[X]", ["thm-4.4"], sampled=True)
def _thm44(ctx, t):
    rng = np.random.default_rng(ctx.seed)
    for R in ctx.small(16):
        t.ring = R
        for I in proper_ideals(R):
            if prime_decomposition(I).kind != "comaximal" or not _sdf(R, I):
                continue
            f = rng.integers(0, R.order, (10_000, 4))
            g = rng.integers(0, R.order, (10_000, 4))
            inside = I.mask[_poly_square_diff(R, f, g)].all(axis=1)
            nonzero = (f != R.zero).any(axis=1) & (g != R.zero).any(axis=1)
            hits = np.flatnonzero(inside & nonzero)
            absorbed = I.mask[R.add[f[hits], g[hits]]].all(axis=1) | I.mask[R.sub[f[hits], g[hits]]].all(axis=1)
            for k in range(len(hits)):
                t.check(absorbed[k], R, I, decider="sdf",
                        detail=f"f={f[hits[k]].tolist()} g={g[hits[k]].tolist()}")


@prop("rem-4.9-z4-polynomial-witness", "{0} is sdf in Z_4 but (1+2X)^2 = 1^2 in Z_4[X] with "
      "neither sum nor difference zero", ["thm-4.4"])
def _rem49(ctx, t):
    R = ctx.zn(4)
    t.check(_sdf(R, zero_ideal(R)), R, zero_ideal(R), decider="sdf")
    f, g = np.array([[1, 2, 0, 0]]), np.array([[1, 0, 0, 0]])
    diff_zero = bool((_poly_square_diff(R, f, g) == 0).all())
    s, d = R.add[f, g], R.sub[f, g]
    t.check(diff_zero and s.any() and d.any(), R, zero_ideal(R), decider="sdf",
            detail="1+2X and 1 must certify that {0}[X] is not sdf")


@prop("thm-4.6-idealization-reduction", "(I,X) and (X) in R[X] via I(+)R and {0}(+)R in R(+)R",
      ["thm-4.6"])
def _thm46(ctx, t):
    for R in ctx.small(32):
        T = make_idealization(R, ModuleSpec(R))
        t.ring = T
        Q = T.info["module_ring"]
        full = unit_ideal(Q)
        for I in proper_ideals(R):
            K = idealization_ideal(T, I, full)
            expected = _sdf(R, I) if not I.is_zero else (R.is_reduced and _sdf(R, I))
            t.check(_sdf(T, K) == expected, T, K, decider="sdf", expected=expected)


# --- products -------------------------------------------------------------------


def _product_instances(ctx):
    for R in ctx.kind("product"):
        for I in proper_ideals(R):
            yield (R, I, *split_product_ideal(R, I))


def _shape(I: Ideal) -> str:
    return "zero" if I.is_zero else ("whole" if not I.is_proper else "nonzero")


@prop("thm-4.10-products-nonzero", "I_1 x I_2 with both nonzero proper: sdf iff both sdf and 2 lies in "
      "one of them", ["thm-4.10"])
def _thm410(ctx, t):
    for R, I, R1, I1, R2, I2 in _product_instances(ctx):
        if _shape(I1) == _shape(I2) == "nonzero":
            t.ring = R
            expected = _sdf(R1, I1) and _sdf(R2, I2) and (R1.two in I1 or R2.two in I2)
            t.check(_sdf(R, I) == expected == product_sdf(R1, I1, R2, I2), R, I, decider="sdf",
                    expected=expected)


@prop("thm-4.11-products-degenerate", "product rule when a factor ideal is zero or the whole ring",
      ["thm-4.11"])
def _thm411(ctx, t):
    for R, I, R1, I1, R2, I2 in _product_instances(ctx):
        if "nonzero" == _shape(I1) == _shape(I2):
            continue
        t.ring = R
        rule = product_sdf(R1, I1, R2, I2)
        t.check(_sdf(R, I) == rule, R, I, decider="sdf", expected=rule)


def _unified(R, I) -> bool:
    # whole ring counts as sdf radical; 2 in {0} means characteristic 2
    return (not I.is_proper) or (_sdf(R, I) and is_radical(I).holds)


@prop("rem-4.12a-unified", "I_1 x I_2 is sdf iff both are sdf radical (whole ring allowed) and 2 lies "
      "in one of them", ["rem-4.12"])
def _rem412a(ctx, t):
    for R, I, R1, I1, R2, I2 in _product_instances(ctx):
        t.ring = R
        expected = _unified(R1, I1) and _unified(R2, I2) and (R1.two in I1 or R2.two in I2)
        t.check(_sdf(R, I) == expected, R, I, decider="sdf", expected=expected)


@prop("rem-4.12b-z4-fixtures", "0x0, 0x(2), 0xZ_4 in Z_4^2 fail with a = (2,1), b = (0,1)", ["rem-4.12"])
def _rem412b(ctx, t):
    Z4 = ctx.zn(4)
    R = make_product([Z4, Z4])
    for I in (zero_ideal(R), _gen(R, (0, 2)), _gen(R, (0, 1))):
        _certify(t, R, I, (2, 1), (0, 1))


# --- idealization ---------------------------------------------------------------


def _idealization_instances(ctx):
    for T in ctx.kind("idealization"):
        for K in proper_ideals(T):
            split = split_idealization_ideal(T, K)
            if split is not None:
                yield T, K, split[0], split[1]


@prop("thm-4.14-idealization", "I(+)N with I nonzero: sdf iff I sdf and N = M", ["thm-4.14"])
def _thm414(ctx, t):
    for T, K, I, N in _idealization_instances(ctx):
        if not I.is_zero:
            t.ring = T
            rule = idealization_rule(T.info["base"], I, T.info["module"], N)
            expected = (not N.is_proper) and _sdf(T.info["base"], I)
            t.check(_sdf(T, K) == expected == rule, T, K, decider="sdf", expected=expected)


@prop("rem-4.17ab-idealization-zero", "{0}(+)N: N proper nonzero never sdf; {0}(+)M sdf iff R reduced "
      "and {0} sdf", ["rem-4.17"])
def _rem417ab(ctx, t):
    for T, K, I, N in _idealization_instances(ctx):
        if I.is_zero and not N.is_zero:
            t.ring = T
            R = T.info["base"]
            expected = (not N.is_proper) and R.is_reduced and _sdf(R, I)
            t.check(_sdf(T, K) == expected, T, K, decider="sdf", expected=expected)


@prop("rem-4.17c-conjecture", "{(0,0)} of R(+)M is not sdf when |M| != 3 (tested conjecture)",
      ["rem-4.17"])
def _rem417c(ctx, t):
    for T in ctx.kind("idealization"):
        if T.info["module_ring"].order != 3:
            t.ring = T
            Z = zero_ideal(T)
            t.check(not _sdf(T, Z), T, Z, decider="sdf", expected=False)


@prop("ex-4.15-idealization-fixtures", "{0}(+)Z_4 in Z_4(+)Z_4 fails with (2,0), (0,2); {(0,0)} of "
      "Z_3(+)Z_3 is sdf", ["ex-4.15", "rem-4.17"])
def _ex415(ctx, t):
    Z4, Z3 = ctx.zn(4), ctx.zn(3)
    T = make_idealization(Z4, ModuleSpec(Z4))
    K = _gen(T, (0, 1))
    _certify(t, T, K, (2, 0), (0, 2))
    S = make_idealization(Z3, ModuleSpec(Z3))
    t.check(_sdf(S, zero_ideal(S)), S, zero_ideal(S), decider="sdf")


# --- amalgamation ---------------------------------------------------------------


@prop("thm-4.16-amalgamation", "I |x|_J B with I nonzero: sdf iff I sdf in A", ["thm-4.16"])
def _thm416(ctx, t):
    for T in ctx.kind("amalgamation"):
        t.ring = T
        info = T.info
        for K in proper_ideals(T):
            I = split_amalgamation_ideal(T, K)
            if I is None or I.is_zero:
                continue
            rule = amalgamation_sdf(info["A"], info["B"], info["hom"], info["J"], I)
            t.check(_sdf(T, K) == rule, T, K, decider="sdf", expected=rule)


@prop("ex-4.16-amalgamation-zero", "{0} |x| Z_4 in Z_4 |x|_{Z_4} Z_4 fails with (2,0), (0,2) although "
      "{0} of Z_4 is sdf", ["thm-4.16"])
def _ex416(ctx, t):
    Z4 = ctx.zn(4)
    T = make_amalgamation(Z4, Z4, hom_by_name(Z4, Z4, "id"), unit_ideal(Z4))
    K = ideal_from_members(T, [i for i, (a, _) in enumerate(T.elements) if a == 0])
    t.check(_sdf(Z4, zero_ideal(Z4)), Z4, zero_ideal(Z4), decider="sdf")
    _certify(t, T, K, (2, 0), (0, 2))


# --- weakly sdf -------------------------------------------------------------------


@prop("ex-5.2-fixture", "0 x (2) in Z_4^2: weakly sdf, not sdf, not weakly prime via (2,2), (0,1)",
      ["ex-5.2"])
def _ex52(ctx, t):
    Z4 = ctx.zn(4)
    R = make_product([Z4, Z4])
    I = _gen(R, (0, 2))
    t.check(_wsdf(R, I), R, I, decider="weakly_sdf")
    t.check(not _sdf(R, I), R, I, decider="sdf", expected=False)
    t.check(not is_weakly_prime(R, I).holds, R, I, decider="weakly_prime", expected=False)
    _certify(t, R, I, (2, 2), (0, 1), kind="weakly_prime")


@prop("thm-5.3-two-unit-weakly-prime", "when 2 is a unit, weakly sdf ideals are weakly prime", ["thm-5.3"])
def _thm53(ctx, t):
    for R in ctx.corpus:
        if R.two_status != "unit":
            continue
        t.ring = R
        for I in proper_ideals(R):
            if _wsdf(R, I):
                t.check(is_weakly_prime(R, I).holds, R, I, decider="weakly_prime")


def _weakly_not_sdf_instances(ctx):
    for R in ctx.corpus:
        for I in proper_ideals(R):
            if weakly_not_sdf(R, I):
                yield R, I


@prop("thm-5.8-nil", "weakly sdf but not sdf ideals consist of nilpotents", ["thm-5.8"])
def _thm58(ctx, t):
    for R, I in _weakly_not_sdf_instances(ctx):
        t.ring = R
        t.check(weakly_structure(R, I)["subset_nil"], R, I, decider="subset_nil")


@prop("cor-5.9-structure", "weakly sdf but not sdf: 2i^2 = 0, 2i nilpotent, i^2 = 0 when 2 is a unit "
      "or char 2, and I = 0 in reduced rings", ["cor-5.9"])
def _cor59(ctx, t):
    for R, I in _weakly_not_sdf_instances(ctx):
        t.ring = R
        checks = weakly_structure(R, I)
        t.check(all(checks.values()), R, I, decider="weakly_structure", detail=str(checks))


@prop("thm-5.11-product-weak", "I nonzero weakly sdf: I x R_2 weakly sdf iff I sdf iff I x R_2 sdf",
      ["thm-5.11"])
def _thm511(ctx, t):
    for R, K, R1, I1, R2, I2 in _product_instances(ctx):
        for (Ra, Ia), other in (((R1, I1), I2), ((R2, I2), I1)):
            if other.is_proper or Ia.is_zero or not _wsdf(Ra, Ia):
                continue
            t.ring = R
            s = _sdf(Ra, Ia)
            ok = _wsdf(R, K) == s == _sdf(R, K) == weakly_sdf_fast(R1, I1, R2, I2)
            t.check(ok, R, K, decider="weakly_sdf", expected=s)


@prop("thm-5.12-product-weak", "I, J weakly sdf not sdf: the four conditions on I x J coincide",
      ["thm-5.12"])
def _thm512(ctx, t):
    for R, K, R1, I1, R2, I2 in _product_instances(ctx):
        if not (I1.is_proper and I2.is_proper and weakly_not_sdf(R1, I1) and weakly_not_sdf(R2, I2)):
            continue
        t.ring = R
        a = weakly_not_sdf(R, K)
        b = _wsdf(R, K)
        c = square_diffs_vanish(R1, I1) and square_diffs_vanish(R2, I2)
        nz = R.indices != R.zero
        D = R.square_diff
        d = bool(np.all(D[K.mask[D] & nz[:, None] & nz[None, :]] == R.zero))
        t.check(a == b == c == d, R, K, decider="weakly_sdf", expected=c, detail=f"(a,b,c,d)={(a, b, c, d)}")


@prop("ex-5.13-fixture", "0 x (2) in Z_4^2 is weakly sdf not sdf while 0 and (2) of Z_4 are sdf",
      ["ex-5.13"])
def _ex513(ctx, t):
    Z4 = ctx.zn(4)
    R = make_product([Z4, Z4])
    K = _gen(R, (0, 2))
    t.check(weakly_not_sdf(R, K), R, K, decider="weakly_not_sdf")
    for I in (zero_ideal(Z4), _gen(Z4, 2)):
        t.check(_sdf(Z4, I), Z4, I, decider="sdf")


@prop("ex-5.14-fixture", "0 x (0 x (2)) in Z_2[X]/(X^2) x Z_4^2 is weakly sdf but not sdf", ["ex-5.14"])
def _ex514(ctx, t):
    Z4 = ctx.zn(4)
    R1 = make_poly_quotient(2, (0, 0, 1))
    R2 = make_product([Z4, Z4])
    R = make_product([R1, R2])
    I, J = zero_ideal(R1), _gen(R2, (0, 2))
    K = product_ideal(R, I, J)
    t.check(weakly_not_sdf(R1, I), R1, I, decider="weakly_not_sdf")
    _certify(t, R1, I, (1, 1), (1, 0))
    t.check(weakly_not_sdf(R2, J), R2, J, decider="weakly_not_sdf")
    t.check(weakly_not_sdf(R, K), R, K, decider="weakly_not_sdf")
    t.check(weakly_sdf_fast(R1, I, R2, J) is True, R, K, decider="weakly_sdf")


# --- running ----------------------------------------------------------------------


def run_property(property_id: str, corpus: list[FiniteRing] | Context, seed: int = 0) -> PropertyResult:
    if property_id not in REGISTRY:
        raise KeyError(f"unknown property {property_id!r}")
    p = REGISTRY[property_id]
    ctx = corpus if isinstance(corpus, Context) else Context(corpus, seed)
    t = Tally()
    try:
        p.fn(ctx, t)
    except Exception as exc:  # a crash on some instance is itself a failure
        where = t.ring.label if t.ring is not None else None
        t.counterexample = t.counterexample or {
            "ring": where,
            "ideal": None,
            "ideal_members": None,
            "decider": "exception",
            "expected": None,
            "witness": None,
            "witness_raw": None,
            "detail": "".join(traceback.format_exception_only(type(exc), exc)).strip(),
        }
    if t.counterexample is not None:
        status = "fail"
    elif t.count == 0:
        status = "inapplicable"
    else:
        status = "pass"
    return PropertyResult(property_id, status, t.count, t.counterexample, p.sampled, p.description)


def run_all(corpus: list[FiniteRing], seed: int = 0, only: Iterable[str] | None = None) -> list[PropertyResult]:
    ids = list(REGISTRY) if only is None else list(only)
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise InputError(f"unknown property ids: {unknown}")
    ctx = Context(corpus, seed)
    return [run_property(i, ctx) for i in ids]


def uncovered() -> list[str]:
    covered = {tag for p in REGISTRY.values() for tag in p.covers}
    return [tag for tag in IN_SCOPE if tag not in covered]


def default_run(spec: CorpusSpec | None = None, only: Iterable[str] | None = None) -> list[PropertyResult]:
    spec = spec or CorpusSpec()
    return run_all(build_corpus(spec), seed=spec.seed, only=only)
