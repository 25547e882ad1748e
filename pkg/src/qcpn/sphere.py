"""The odd quantum sphere as an oriented rewriting system.

The polynomial *-algebra of the (2n+1)-dimensional quantum sphere has
generators ``z_0 .. z_n`` and their stars, with coefficients in the Laurent
ring ``Z[q, q^-1]``.  The defining relations are oriented into four rule
families:

* R1  same-star letters sort: unstarred ascending, ``z_j z_i -> q^-1 z_i z_j``
      for j > i; starred descending, ``z*_i z*_j -> q^-1 z*_j z*_i`` for i < j
* R2  stars move left past different indices: ``z_i z*_j -> q z*_j z_i`` (i != j)
* R3  ``z_i z*_i -> z*_i z_i + (q^-2 - 1) * sum_{m>i} z_m z*_m``
      (empty sum at the top index)
* R4  ``z*_0 z_0 -> 1 - sum_{k>=1} q^-2k z*_k z_k``, the sphere relation
      ``sum_m z_m z*_m = 1`` normal-ordered through R1-R3

Normal words therefore have all starred letters on the left with indices
descending, then unstarred letters ascending.  The opposite sort of the
two blocks is what makes the junction work: a word containing both
``z*_0`` and ``z_0`` always sorts them adjacent, so R4 eliminates the
pair, and normal words never contain both.  (Sorting both blocks
ascending instead leaves e.g. ``z*_0 z*_1 z_0`` irreducible even though
it equals ``q^-1 z*_0 z_0 z*_1``, which reduces; that orientation is
genuinely non-confluent.)  Confluence of the chosen orientation is still
not proven here; ``fuzz_confluence`` compares two reduction strategies on
random words and reports any disagreement instead of repairing it.

Internally a word is a tuple of integer codes (for ambient ``n``: starred
index i is code i, unstarred index i is code n+1+i), so the canonical
generator order is plain integer order.  The ``Generator`` named tuple is
the public face of a letter.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple

from .rings import LaurentQ

DEFAULT_STEP_CAP = 10**6
STEP_CAP_ENV = "QCPN_STEP_CAP"

ALL_RULES = frozenset({"R1", "R2", "R3", "R4"})


class StepBudgetExceeded(RuntimeError):
    """A single normal-form computation ran past its rewrite-step budget."""


class Generator(NamedTuple):
    index: int
    starred: bool

    def __str__(self) -> str:
        return f"z{self.index}s" if self.starred else f"z{self.index}"


def _step_cap() -> int:
    raw = os.environ.get(STEP_CAP_ENV)
    if raw is None:
        return DEFAULT_STEP_CAP
    cap = int(raw)
    if cap <= 0:
        raise ValueError(f"{STEP_CAP_ENV} must be positive, got {cap}")
    return cap


def _encode(g: Generator, n: int) -> int:
    if not 0 <= g.index <= n:
        raise ValueError(f"generator index {g.index} out of range for n={n}")
    return g.index if g.starred else n + 1 + g.index


def _decode(code: int, n: int) -> Generator:
    if code <= n:
        return Generator(code, True)
    return Generator(code - (n + 1), False)


class NCPoly:
    """A formal sum of words in the sphere generators over ``Z[q, q^-1]``.

    Immutable; no relation is applied implicitly.  Multiplication is the
    free concatenation product, and ``normal_form`` is the explicit
    reduction.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms=None):
        if n < 0:
            raise ValueError("ambient index n must be nonnegative")
        clean: dict[tuple[int, ...], LaurentQ] = {}
        if terms:
            top = 2 * n + 1
            for word, coeff in dict(terms).items():
                word = tuple(int(c) for c in word)
                if any(not 0 <= c <= top for c in word):
                    raise ValueError(f"word {word} has codes outside 0..{top}")
                if not isinstance(coeff, LaurentQ):
                    coeff = LaurentQ.from_int(coeff)
                if coeff:
                    clean[word] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("NCPoly is immutable")

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "NCPoly":
        out = object.__new__(cls)
        object.__setattr__(out, "n", n)
        object.__setattr__(out, "_terms", terms)
        return out

    @classmethod
    def zero(cls, n: int) -> "NCPoly":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "NCPoly":
        return cls._raw(n, {(): LaurentQ.one()})

    @classmethod
    def scalar(cls, n: int, c) -> "NCPoly":
        c = c if isinstance(c, LaurentQ) else LaurentQ.from_int(c)
        return cls._raw(n, {(): c} if c else {})

    @classmethod
    def gen(cls, n: int, index: int, starred: bool = False) -> "NCPoly":
        code = _encode(Generator(index, starred), n)
        return cls._raw(n, {(code,): LaurentQ.one()})

    @classmethod
    def from_terms(cls, n: int, terms: Iterable) -> "NCPoly":
        """Build from ``(coefficient, [Generator, ...])`` pairs."""
        acc: dict[tuple[int, ...], LaurentQ] = {}
        for coeff, gens in terms:
            word = tuple(_encode(g, n) for g in gens)
            coeff = coeff if isinstance(coeff, LaurentQ) else LaurentQ.from_int(coeff)
            s = acc.get(word, LaurentQ.zero()) + coeff
            if s:
                acc[word] = s
            else:
                acc.pop(word, None)
        return cls._raw(n, acc)

    # -- inspection ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def term_count(self) -> int:
        return len(self._terms)

    def terms(self):
        """Canonically ordered ``(word of Generators, coefficient)`` pairs."""
        n = self.n
        for word in sorted(self._terms, key=lambda w: (len(w), w)):
            yield tuple(_decode(c, n) for c in word), self._terms[word]

    def coefficient(self, gens: Iterable[Generator]) -> LaurentQ:
        word = tuple(_encode(g, self.n) for g in gens)
        return self._terms.get(word, LaurentQ.zero())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentQ)):
            other = NCPoly.scalar(self.n, other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    # -- ring operations --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, NCPoly):
            if other.n != self.n:
                raise ValueError(f"mixed ambient indices {self.n} and {other.n}")
            return other
        if isinstance(other, (int, LaurentQ)):
            return NCPoly.scalar(self.n, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self._terms)
        for word, coeff in other._terms.items():
            s = merged.get(word)
            s = coeff if s is None else s + coeff
            if s:
                merged[word] = s
            else:
                merged.pop(word, None)
        return NCPoly._raw(self.n, merged)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        prod: dict[tuple[int, ...], LaurentQ] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                word = w1 + w2
                c = c1 * c2
                s = prod.get(word)
                s = c if s is None else s + c
                if s:
                    prod[word] = s
                else:
                    prod.pop(word, None)
        return NCPoly._raw(self.n, prod)

    def __rmul__(self, other):
        # scalars commute; words never reach here
        return self.__mul__(other)

    def __pow__(self, e: int) -> "NCPoly":
        if e < 0:
            raise ValueError("negative powers are not defined in the free algebra")
        acc = NCPoly.one(self.n)
        for _ in range(e):
            acc = acc * self
        return acc

    # -- structure maps ----------------------------------------------------

    def adjoint(self) -> "NCPoly":
        """The *-involution: reverse words, toggle stars, fix coefficients."""
        shift = self.n + 1
        out: dict[tuple[int, ...], LaurentQ] = {}
        for word, coeff in self._terms.items():
            flipped = tuple(
                c - shift if c >= shift else c + shift for c in reversed(word)
            )
            out[flipped] = coeff
        return NCPoly._raw(self.n, out)

    def u1_degree(self) -> int | None:
        """Common circle weight of all words, or None if inhomogeneous.

        Each unstarred letter counts +1 and each starred letter -1.  The
        zero polynomial reports 0 (it lies in every spectral component).
        """
        shift = self.n + 1
        degrees = {
            sum(1 if c >= shift else -1 for c in word) for word in self._terms
        }
        if not degrees:
            return 0
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def spectral_component(self, m: int) -> "NCPoly":
        """Terms of circle weight exactly ``m``; components reassemble the poly."""
        shift = self.n + 1
        kept = {
            word: coeff
            for word, coeff in self._terms.items()
            if sum(1 if c >= shift else -1 for c in word) == m
        }
        return NCPoly._raw(self.n, kept)

    def at_q_one(self) -> "dict[tuple[int, ...], int]":
        """Integer coefficients after the commutative specialisation q = 1."""
        out = {}
        for word, coeff in self._terms.items():
            v = coeff.at_q_one()
            if v:
                out[word] = v
        return out

    def normal_form(self, rules: frozenset = ALL_RULES, step_cap: int | None = None):
        """Reduce to the fixed point of the oriented rules, leftmost first."""
        return normal_form(self, rules=rules, step_cap=step_cap)

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        n = self.n
        for word in sorted(self._terms, key=lambda w: (len(w), w)):
            coeff = self._terms[word]
            word_str = "*".join(str(_decode(c, n)) for c in word)
            cterms = coeff.terms()
            negative = False
            if len(cterms) > 1:
                body = f"({coeff})"
                body = f"{body}*{word_str}" if word_str else body
            else:
                ((e, k),) = cterms.items()
                negative = k < 0
                mag = abs(k)
                if e == 0:
                    coeff_str = str(mag)
                elif e == 1:
                    coeff_str = "q" if mag == 1 else f"{mag}*q"
                else:
                    coeff_str = f"q^{e}" if mag == 1 else f"{mag}*q^{e}"
                if not word_str:
                    body = coeff_str
                elif mag == 1 and e == 0:
                    body = word_str
                else:
                    body = f"{coeff_str}*{word_str}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"NCPoly(n={self.n}, {str(self)!r})"


# -- rule machinery ---------------------------------------------------------


@lru_cache(maxsize=None)
def _rule_constants(n: int):
    q = LaurentQ.q_power(1)
    q_inv = LaurentQ.q_power(-1)
    reorder = LaurentQ({-2: 1, 0: -1})  # q^-2 - 1
    one = LaurentQ.one()
    # R4 coefficients: -q^-2k on z*_k z_k for k = 1..n
    r4 = [LaurentQ.q_power(-2 * k, -1) for k in range(1, n + 1)]
    return q, q_inv, reorder, one, r4


def _redex_rule(a: int, b: int, shift: int) -> str | None:
    """Which rule, if any, rewrites the adjacent pair (a, b) of codes."""
    if a >= shift:
        if b >= shift:
            return "R1" if a > b else None
        return "R3" if a - shift == b else "R2"
    if b < shift:
        return "R1" if a < b else None
    return "R4" if a == 0 and b == shift else None


def _apply_rule(rule: str, a: int, b: int, n: int):
    """Replacement terms for the pair (a, b): list of (factor, subword)."""
    shift = n + 1
    q, q_inv, reorder, one, r4 = _rule_constants(n)
    if rule == "R1":
        return [(q_inv, (b, a))]
    if rule == "R2":
        return [(q, (b, a))]
    if rule == "R3":
        i = b
        out = [(one, (i, shift + i))]
        for m in range(i + 1, n + 1):
            out.append((reorder, (shift + m, m)))
        return out
    # R4
    out = [(one, ())]
    for k in range(1, n + 1):
        out.append((r4[k - 1], (k, shift + k)))
    return out


def _find_redexes(word: tuple[int, ...], shift: int, rules: frozenset):
    found = []
    for p in range(len(word) - 1):
        rule = _redex_rule(word[p], word[p + 1], shift)
        if rule is not None and rule in rules:
            found.append((p, rule))
    return found


def _reduce(
    terms: dict,
    n: int,
    pick,
    rules: frozenset,
    step_cap: int,
) -> tuple[dict, int]:
    """Drive a term multiset to normal form under a redex-picking strategy.

    Equal words are merged as they appear; this is sound because reduction
    is linear over words.  Returns the normal terms and the number of rule
    applications performed.
    """
    shift = n + 1
    pending = dict(terms)
    done: dict[tuple[int, ...], LaurentQ] = {}
    steps = 0
    while pending:
        word, coeff = pending.popitem()
        if not coeff:
            continue
        redexes = _find_redexes(word, shift, rules)
        if not redexes:
            s = done.get(word)
            s = coeff if s is None else s + coeff
            if s:
                done[word] = s
            else:
                done.pop(word, None)
            continue
        pos, rule = pick(redexes)
        steps += 1
        if steps > step_cap:
            raise StepBudgetExceeded(
                f"exceeded {step_cap} rewrite steps (set {STEP_CAP_ENV} to raise the cap)"
            )
        head = word[:pos]
        tail = word[pos + 2 :]
        for factor, repl in _apply_rule(rule, word[pos], word[pos + 1], n):
            new_word = head + repl + tail
            new_coeff = coeff * factor
            s = pending.get(new_word)
            s = new_coeff if s is None else s + new_coeff
            if s:
                pending[new_word] = s
            else:
                pending.pop(new_word, None)
    return done, steps


def _leftmost(redexes):
    return min(redexes)


def normal_form(
    p: NCPoly,
    rules: frozenset = ALL_RULES,
    step_cap: int | None = None,
) -> NCPoly:
    """Normal form under the oriented relations, leftmost-innermost strategy.

    ``rules`` may be restricted (for example to R1-R3) to study the system
    itself; the default is the full set.  Raises ``StepBudgetExceeded`` when
    the per-call budget (default 10^6, override via ``QCPN_STEP_CAP``) runs
    out.
    """
    rules = frozenset(rules)
    unknown = rules - ALL_RULES
    if unknown:
        raise ValueError(f"unknown rules: {sorted(unknown)}")
    cap = _step_cap() if step_cap is None else step_cap
    terms, _ = _reduce(p._terms, p.n, _leftmost, rules, cap)
    return NCPoly._raw(p.n, terms)


def project_to_s3(p: NCPoly) -> NCPoly:
    """The circle-equivariant *-homomorphism onto the 3-sphere algebra.

    Keeps ``z_0`` and ``z_1``, kills every generator of index 2 or more,
    and returns the normal form in the target algebra.
    """
    if p.n < 1:
        raise ValueError("ambient index must be at least 1")
    src_shift = p.n + 1
    out: dict[tuple[int, ...], LaurentQ] = {}
    for word, coeff in p._terms.items():
        image = []
        for c in word:
            starred = c < src_shift
            idx = c if starred else c - src_shift
            if idx >= 2:
                image = None
                break
            image.append(idx if starred else 2 + idx)
        if image is None:
            continue
        key = tuple(image)
        s = out.get(key)
        s = coeff if s is None else s + coeff
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return normal_form(NCPoly._raw(1, out))


def sphere_sum(n: int) -> NCPoly:
    """The left side of the sphere relation: ``sum_m z_m z*_m``."""
    total = NCPoly.zero(n)
    for m in range(n + 1):
        total = total + NCPoly.gen(n, m) * NCPoly.gen(n, m, starred=True)
    return total


def defining_relations(n: int) -> list[tuple[str, NCPoly]]:
    """All defining relations as named polynomials that must reduce to zero."""
    if n < 1:
        raise ValueError("ambient index must be at least 1")
    q = LaurentQ.q_power(1)
    rels: list[tuple[str, NCPoly]] = []
    z = lambda i: NCPoly.gen(n, i)
    zs = lambda i: NCPoly.gen(n, i, starred=True)
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            rels.append((f"z{i} z{j} = q z{j} z{i}", z(i) * z(j) - q * (z(j) * z(i))))
    for i in range(n + 1):
        for j in range(n + 1):
            if i != j:
                rels.append(
                    (f"z{i} z{j}s = q z{j}s z{i}", z(i) * zs(j) - q * (zs(j) * z(i)))
                )
    reorder = LaurentQ({-2: 1, 0: -1})
    for i in range(n + 1):
        rhs = zs(i) * z(i)
        for m in range(i + 1, n + 1):
            rhs = rhs + reorder * (z(m) * zs(m))
        rels.append((f"z{i} z{i}s reordering", z(i) * zs(i) - rhs))
    rels.append(("sphere relation", sphere_sum(n) - 1))
    return rels


@dataclass
class ReductionReport:
    """Outcome of a batch reduction check; empty mismatches means pass."""

    words: int = 0
    max_steps: int = 0
    mismatches: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "words": self.words,
            "max_steps": self.max_steps,
            "mismatches": [list(m) for m in self.mismatches],
            "passed": self.passed,
        }


def verify_defining_relations(n: int, step_cap: int | None = None) -> ReductionReport:
    """Reduce every defining relation to zero, in the source algebra and
    through the 3-sphere projection.

    Failures are recorded in the report, never raised.
    """
    cap = _step_cap() if step_cap is None else step_cap
    report = ReductionReport()
    for name, rel in defining_relations(n):
        terms, steps = _reduce(rel._terms, n, _leftmost, ALL_RULES, cap)
        report.words += 1
        report.max_steps = max(report.max_steps, steps)
        nf = NCPoly._raw(n, terms)
        if not nf.is_zero():
            report.mismatches.append((name, str(nf), "0"))
        image = project_to_s3(rel)
        report.words += 1
        if not image.is_zero():
            report.mismatches.append((f"s3 image of: {name}", str(image), "0"))
    return report


def _random_word(rng: random.Random, n: int, max_len: int) -> tuple[int, ...]:
    length = rng.randint(2, max_len)
    top = 2 * (n + 1)
    return tuple(rng.randrange(top) for _ in range(length))


def fuzz_confluence(
    n: int, max_len: int, trials: int, seed: int, step_cap: int | None = None
) -> ReductionReport:
    """Empirical local-confluence check of the oriented system.

    Each random word is reduced twice, once leftmost-innermost and once
    with seeded random redex selection; differing normal forms, broken
    weight homogeneity, or an exhausted step budget are recorded as
    mismatches.  Deterministic for a fixed seed.
    """
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    cap = _step_cap() if step_cap is None else step_cap
    rng = random.Random(seed)
    report = ReductionReport(words=trials)
    shift = n + 1
    for _ in range(trials):
        word = _random_word(rng, n, max_len)
        degree = sum(1 if c >= shift else -1 for c in word)
        start = {word: LaurentQ.one()}
        rendered = "*".join(str(_decode(c, n)) for c in word)
        try:
            left_terms, left_steps = _reduce(start, n, _leftmost, ALL_RULES, cap)
            rand_terms, rand_steps = _reduce(
                dict(start), n, lambda rs: rng.choice(rs), ALL_RULES, cap
            )
        except StepBudgetExceeded:
            report.mismatches.append((rendered, "step budget exceeded", ""))
            continue
        report.max_steps = max(report.max_steps, left_steps, rand_steps)
        left = NCPoly._raw(n, left_terms)
        rand = NCPoly._raw(n, rand_terms)
        if left != rand:
            report.mismatches.append((rendered, str(left), str(rand)))
            continue
        if not left.is_zero() and left.u1_degree() != degree:
            report.mismatches.append(
                (rendered, f"weight {left.u1_degree()}", f"weight {degree}")
            )
    return report


def exhaustive_pair_check(n: int, step_cap: int | None = None) -> ReductionReport:
    """Reduce every two-letter word under both strategies, exhaustively.

    The random strategy is immaterial on a single redex, so this checks
    agreement of all rule orientations on overlap-free inputs and the
    weight homogeneity of every rule.
    """
    cap = _step_cap() if step_cap is None else step_cap
    top = 2 * (n + 1)
    shift = n + 1
    rng = random.Random(0)
    report = ReductionReport()
    for a in range(top):
        for b in range(top):
            word = (a, b)
            report.words += 1
            degree = sum(1 if c >= shift else -1 for c in word)
            rendered = "*".join(str(_decode(c, n)) for c in word)
            start = {word: LaurentQ.one()}
            left_terms, steps = _reduce(start, n, _leftmost, ALL_RULES, cap)
            rand_terms, _ = _reduce(
                dict(start), n, lambda rs: rng.choice(rs), ALL_RULES, cap
            )
            report.max_steps = max(report.max_steps, steps)
            left = NCPoly._raw(n, left_terms)
            rand = NCPoly._raw(n, rand_terms)
            if left != rand:
                report.mismatches.append((rendered, str(left), str(rand)))
            elif not left.is_zero() and left.u1_degree() != degree:
                report.mismatches.append(
                    (rendered, f"weight {left.u1_degree()}", f"weight {degree}")
                )
    return report
