"""Monomial arithmetic and monomial-ideal algebra over a fixed variable list.

All values are immutable and canonically ordered: generators are stored
minimalized and sorted graded-lex, so equal ideals compare equal bit for bit.
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from functools import lru_cache, reduce

from .errors import (
    CapExceededError,
    MalformedInputError,
    RegularityViolationError,
    RingMismatchError,
    UndefinedModuleError,
)

DEFAULT_COLON_SEARCH_CAP = 2 ** 24
_colon_search_cap = DEFAULT_COLON_SEARCH_CAP


def set_colon_search_cap(cap: int) -> None:
    """Override the associated-prime search-space cap (CLI flag hook)."""
    global _colon_search_cap
    _colon_search_cap = cap


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field tag: characteristic 0 (rationals) or a prime field."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise MalformedInputError(
                f"field characteristic must be 0 or prime, got {self.characteristic}"
            )

    @property
    def label(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)
F2 = FieldSpec(2)


@dataclass(frozen=True)
class RingDescriptor:
    names: tuple[str, ...]
    field_spec: FieldSpec = QQ

    def __post_init__(self):
        if len(self.names) < 1:
            raise MalformedInputError("ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise MalformedInputError("variable names must be distinct")

    @property
    def n(self) -> int:
        return len(self.names)


def ring(n: int, field: FieldSpec = QQ, names: tuple[str, ...] | None = None) -> RingDescriptor:
    """Polynomial ring in n variables, default names x1..xn."""
    if names is None:
        names = tuple(f"x{i + 1}" for i in range(n))
    return RingDescriptor(names, field)


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise MalformedInputError("exponents must be non-negative")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_one(self) -> bool:
        return self.degree == 0

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def colon_by(self, u: "Monomial") -> "Monomial":
        """self / gcd(self, u)."""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, u.exponents)))

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def format(self, rng: RingDescriptor) -> str:
        if self.is_one:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(rng.names[i])
            elif e > 1:
                parts.append(f"{rng.names[i]}^{e}")
        return "*".join(parts)


def variable(rng: RingDescriptor, i: int, power: int = 1) -> Monomial:
    exps = [0] * rng.n
    exps[i] = power
    return Monomial(tuple(exps))


@dataclass(frozen=True, order=True)
class PrimeSupport:
    """A monomial prime, given by its generating variables; () is the zero prime."""

    vars: tuple[int, ...]

    @classmethod
    def of(cls, indices) -> "PrimeSupport":
        return cls(tuple(sorted(set(indices))))

    def dim_in(self, rng: RingDescriptor) -> int:
        return rng.n - len(self.vars)

    def contains(self, other: "PrimeSupport") -> bool:
        return set(other.vars) <= set(self.vars)

    def format(self, rng: RingDescriptor) -> str:
        if not self.vars:
            return "(0)"
        return "(" + ", ".join(rng.names[i] for i in self.vars) + ")"


def _graded_lex_key(m: Monomial):
    return (m.degree, m.exponents)


def _minimal_gens(gens: tuple[Monomial, ...]) -> tuple[Monomial, ...]:
    uniq = sorted(set(gens), key=_graded_lex_key)
    if any(g.is_one for g in uniq):
        n = len(uniq[0].exponents)
        return (Monomial((0,) * n),)
    kept: list[Monomial] = []
    for g in uniq:
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    ring: RingDescriptor
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if len(g.exponents) != self.ring.n:
                raise MalformedInputError(
                    f"generator has {len(g.exponents)} exponents, ring has {self.ring.n} variables"
                )
        object.__setattr__(self, "gens", _minimal_gens(tuple(self.gens)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def lcm_of_gens(self) -> Monomial:
        acc = Monomial((0,) * self.ring.n)
        for g in self.gens:
            acc = acc.lcm(g)
        return acc

    def format(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(g.format(self.ring) for g in self.gens) + ")"


def zero_ideal(rng: RingDescriptor) -> MonomialIdeal:
    return MonomialIdeal(rng, ())


def unit_ideal(rng: RingDescriptor) -> MonomialIdeal:
    return MonomialIdeal(rng, (Monomial((0,) * rng.n),))


def minimalize(rng: RingDescriptor, gens) -> MonomialIdeal:
    """Canonical ideal from an arbitrary generator list."""
    return MonomialIdeal(rng, tuple(gens))


def _require_same_ring(I: MonomialIdeal, J: MonomialIdeal):
    if I.ring != J.ring:
        raise RingMismatchError("operands live in different rings")


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Pairwise-lcm intersection of monomial ideals."""
    _require_same_ring(I, J)
    return MonomialIdeal(I.ring, tuple(u.lcm(v) for u in I.gens for v in J.gens))


def intersect_all(rng: RingDescriptor, ideals) -> MonomialIdeal:
    """Intersection of a family; the empty family gives the unit ideal."""
    ideals = list(ideals)
    if not ideals:
        return unit_ideal(rng)
    return reduce(intersect, ideals)


def colon(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """(I : u) for a monomial u."""
    if len(u.exponents) != I.ring.n:
        raise RingMismatchError("monomial has wrong ambient length")
    return MonomialIdeal(I.ring, tuple(g.colon_by(u) for g in I.gens))


def sum_with(I: MonomialIdeal, extra) -> MonomialIdeal:
    return MonomialIdeal(I.ring, I.gens + tuple(extra))


def _as_prime(I: MonomialIdeal) -> PrimeSupport | None:
    """PrimeSupport when I is a monomial prime (incl. the zero ideal), else None."""
    if I.is_unit:
        return None
    if I.is_zero:
        return PrimeSupport(())
    sup = []
    for g in I.gens:
        if g.degree != 1:
            return None
        sup.append(g.support[0])
    return PrimeSupport.of(sup)


def prime_ideal(rng: RingDescriptor, p: PrimeSupport) -> MonomialIdeal:
    return MonomialIdeal(rng, tuple(variable(rng, i) for i in p.vars))


@lru_cache(maxsize=None)
def associated_primes(
    I: MonomialIdeal, search_cap: int | None = None
) -> frozenset[PrimeSupport]:
    """Ass(S/I) by colon search over all monomials below the generator lcm."""
    if search_cap is None:
        search_cap = _colon_search_cap
    if I.is_unit:
        raise UndefinedModuleError("the unit ideal defines the zero module")
    top = I.lcm_of_gens()
    space = 1
    for e in top.exponents:
        space *= e + 1
    if space > search_cap:
        raise CapExceededError(
            f"colon search space {space} exceeds cap {search_cap}"
        )
    found: set[PrimeSupport] = set()
    for exps in itertools.product(*(range(e + 1) for e in top.exponents)):
        p = _as_prime(colon(I, Monomial(exps)))
        if p is not None:
            found.add(p)
    return frozenset(found)


def minimal_primes_of(I: MonomialIdeal) -> frozenset[PrimeSupport]:
    """Inclusion-minimal members of Ass(S/I)."""
    ass = associated_primes(I)
    return frozenset(
        p for p in ass if not any(q != p and p.contains(q) for q in ass)
    )


def irreducible_decomposition(I: MonomialIdeal) -> tuple[MonomialIdeal, ...]:
    """Irredundant decomposition into ideals generated by pure variable powers.

    Splits on the first generator that is not a pure power, at its
    lowest-index variable, so the output order is deterministic.
    """
    if I.is_unit:
        raise UndefinedModuleError("the unit ideal has no decomposition")
    if I.is_zero:
        return (I,)
    comps: set[MonomialIdeal] = set()
    stack = [I]
    while stack:
        J = stack.pop()
        split = None
        for g in J.gens:
            if len(g.support) > 1:
                split = g
                break
        if split is None:
            comps.add(J)
            continue
        v = split.support[0]
        a = split.exponents[v]
        pure = variable(J.ring, v, a)
        rest = split.colon_by(pure)
        stack.append(sum_with(J, (pure,)))
        stack.append(sum_with(J, (rest,)))
    ordered = sorted(comps, key=lambda c: tuple(_graded_lex_key(g) for g in c.gens))
    # drop components not needed for the intersection to equal I
    kept = list(ordered)
    for c in list(ordered):
        others = [k for k in kept if k != c]
        if others and intersect_all(I.ring, others) == I:
            kept = others
    return tuple(kept)


def primary_decomposition(I: MonomialIdeal) -> tuple[tuple[PrimeSupport, MonomialIdeal], ...]:
    """Primary components, by intersecting irreducible components sharing a radical."""
    groups: dict[PrimeSupport, list[MonomialIdeal]] = {}
    for c in irreducible_decomposition(I):
        rad = PrimeSupport.of(i for g in c.gens for i in g.support)
        groups.setdefault(rad, []).append(c)
    out = []
    for rad in sorted(groups):
        out.append((rad, intersect_all(I.ring, groups[rad])))
    return tuple(out)


@dataclass(frozen=True)
class Polarization:
    ideal: MonomialIdeal
    added_vars: int
    slot_owner: tuple[int, ...]  # new variable index -> original variable index


def polarize(I: MonomialIdeal) -> Polarization:
    """Squarefree-ification x_i^k -> x_{i,1}...x_{i,k}; shifts depth by added_vars."""
    if I.is_unit:
        raise UndefinedModuleError("cannot polarize the unit ideal")
    rng = I.ring
    maxexp = [0] * rng.n
    for g in I.gens:
        for i, e in enumerate(g.exponents):
            maxexp[i] = max(maxexp[i], e)
    slots = [max(1, e) for e in maxexp]
    names: list[str] = []
    owner: list[int] = []
    start = [0] * rng.n
    for i, s in enumerate(slots):
        start[i] = len(names)
        if s == 1:
            names.append(rng.names[i])
        else:
            names.extend(f"{rng.names[i]}_{j + 1}" for j in range(s))
        owner.extend([i] * s)
    new_ring = RingDescriptor(tuple(names), rng.field_spec)
    new_gens = []
    for g in I.gens:
        exps = [0] * new_ring.n
        for i, e in enumerate(g.exponents):
            for j in range(e):
                exps[start[i] + j] = 1
        new_gens.append(Monomial(tuple(exps)))
    return Polarization(
        MonomialIdeal(new_ring, tuple(new_gens)),
        new_ring.n - rng.n,
        tuple(owner),
    )


def specialize_polarization(pol: Polarization, original: RingDescriptor) -> MonomialIdeal:
    """Inverse map x_{i,j} -> x_i; recovers the ideal that was polarized."""
    gens = []
    for g in pol.ideal.gens:
        exps = [0] * original.n
        for j, e in enumerate(g.exponents):
            exps[pol.slot_owner[j]] += e
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(original, tuple(gens))


def tensor_join(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Segre-style join S/I tensor T/J: variables of T renumbered after S.

    The joined ring uses fresh canonical names x1..x_{n+m}.
    """
    if I.is_unit or J.is_unit:
        raise UndefinedModuleError("tensor join needs proper ideals")
    if I.ring.field_spec != J.ring.field_spec:
        raise RingMismatchError("tensor join needs a common coefficient field")
    n, m = I.ring.n, J.ring.n
    joined = ring(n + m, I.ring.field_spec)
    gens = [Monomial(g.exponents + (0,) * m) for g in I.gens]
    gens += [Monomial((0,) * n + g.exponents) for g in J.gens]
    return MonomialIdeal(joined, tuple(gens))


def quotient_by_variable(I: MonomialIdeal, v: int) -> MonomialIdeal:
    """Image of I + (x_v) in the remaining variables; x_v must be regular on S/I."""
    if I.is_unit:
        raise UndefinedModuleError("the unit ideal defines the zero module")
    if not 0 <= v < I.ring.n:
        raise MalformedInputError(f"variable index {v} out of range")
    if I.ring.n == 1:
        raise MalformedInputError("cannot remove the last variable")
    for p in sorted(associated_primes(I)):
        if v in p.vars:
            raise RegularityViolationError(
                f"{I.ring.names[v]} lies in the associated prime {p.format(I.ring)}",
                witness=p,
            )
    names = tuple(nm for i, nm in enumerate(I.ring.names) if i != v)
    new_ring = RingDescriptor(names, I.ring.field_spec)
    gens = []
    for g in I.gens:
        if g.exponents[v] == 0:
            gens.append(Monomial(tuple(e for i, e in enumerate(g.exponents) if i != v)))
    return MonomialIdeal(new_ring, tuple(gens))


# ---------------------------------------------------------------------------
# text / JSON interchange

_STRICT_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_CONVENIENCE = re.compile(r"^(?:x\d)+$")


def _parse_monomial_token(token: str) -> dict[int, int]:
    """Token -> {1-based variable index: exponent}."""
    token = token.strip()
    if not token:
        raise MalformedInputError("empty monomial token")
    if token == "1":
        return {}
    exps: dict[int, int] = {}
    if "*" in token or "^" in token:
        for factor in token.split("*"):
            m = _STRICT_FACTOR.match(factor.strip())
            if not m:
                raise MalformedInputError(f"cannot parse monomial factor {factor!r}")
            idx = int(m.group(1))
            exps[idx] = exps.get(idx, 0) + int(m.group(2) or 1)
    elif _CONVENIENCE.match(token):
        # single-digit-index convenience mode: x1x2 means x1*x2
        for pos in range(0, len(token), 2):
            idx = int(token[pos + 1])
            exps[idx] = exps.get(idx, 0) + 1
    else:
        raise MalformedInputError(f"cannot parse monomial {token!r}")
    if 0 in exps:
        raise MalformedInputError("variable indices are 1-based")
    return exps


def parse_generators(
    text: str, nvars: int | None = None, field: FieldSpec = QQ
) -> MonomialIdeal:
    """Ideal text grammar: comma-separated monomials, `x1*x2^2` or `x1x2`."""
    text = text.strip()
    if text in ("", "0"):
        if nvars is None:
            raise MalformedInputError("zero ideal needs an explicit variable count")
        return zero_ideal(ring(nvars, field))
    parsed = [_parse_monomial_token(tok) for tok in text.split(",")]
    needed = max((max(d) for d in parsed if d), default=1)
    n = nvars if nvars is not None else needed
    if needed > n:
        raise MalformedInputError(
            f"monomial uses x{needed} but the ring has {n} variables"
        )
    rng = ring(n, field)
    gens = []
    for d in parsed:
        exps = [0] * n
        for idx, e in d.items():
            exps[idx - 1] = e
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(rng, tuple(gens))


def ideal_from_json(data, field: FieldSpec = QQ) -> MonomialIdeal:
    """JSON form {"vars": [...names...], "gens": [[e1..en], ...]}."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"bad JSON: {exc}") from exc
    try:
        names = tuple(str(v) for v in data["vars"])
        gens = [tuple(int(e) for e in g) for g in data["gens"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad ideal JSON: {exc}") from exc
    rng = RingDescriptor(names, field)
    return MonomialIdeal(rng, tuple(Monomial(g) for g in gens))


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {
        "vars": list(I.ring.names),
        "gens": [list(g.exponents) for g in I.gens],
    }


def parse_field(text: str) -> FieldSpec:
    """Field flag values: q | f2 | fp=P."""
    text = text.strip().lower()
    if text in ("q", "qq", "0"):
        return QQ
    if text == "f2":
        return F2
    if text.startswith("fp="):
        try:
            return FieldSpec(int(text[3:]))
        except ValueError as exc:
            raise MalformedInputError(f"bad field spec {text!r}") from exc
    raise MalformedInputError(f"unknown field spec {text!r}")
