"""Reduced words of the free product of a finite group with a free group.

A word is an alternating sequence of coefficient syllables (non-identity
group elements) and letter syllables (variable with nonzero integer
exponent).  Word length is letter-weighted: a coefficient syllable counts 1
and a letter syllable X_i^e counts |e|, which keeps bounded enumeration
finite and deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .fingroup import GroupError, GroupTable, Homomorphism

__all__ = [
    "WordContext",
    "Word",
    "WordError",
    "InconclusiveError",
    "reduce_syllables",
    "concat",
    "inverse",
    "power",
    "conjugate",
    "commutator",
    "evaluate",
    "enumerate_words",
    "parse_word",
    "bounded_divisor_witness",
]


class WordError(ValueError):
    """Bad syllables, bad indices, or arity mismatch."""


class InconclusiveError(Exception):
    """A bounded symbolic question could not be decided either way."""


# Syllables: ("g", element_index) or ("x", variable_index_1_based, exponent).


@dataclass(frozen=True)
class WordContext:
    """Coefficient group together with the number of free variables."""

    group: GroupTable
    variable_count: int

    def __post_init__(self):
        if self.variable_count < 0:
            raise WordError("variable_count must be >= 0")

    def constant(self, g: int) -> "Word":
        return reduce_syllables(self, [("g", g)])

    def letter(self, var: int, exp: int = 1) -> "Word":
        return reduce_syllables(self, [("x", var, exp)])

    def identity(self) -> "Word":
        return Word(self, ())


@dataclass(frozen=True)
class Word:
    """A fully reduced free-product word; the empty tuple is the identity."""

    context: WordContext
    syllables: tuple

    def is_identity(self) -> bool:
        return not self.syllables

    def is_constant(self) -> bool:
        return len(self.syllables) == 1 and self.syllables[0][0] == "g"

    def length(self) -> int:
        return sum(1 if s[0] == "g" else abs(s[2]) for s in self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return inverse(self)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for s in self.syllables:
            if s[0] == "g":
                parts.append(f"g{s[1]}")
            else:
                parts.append(f"X{s[1]}" + (f"^{s[2]}" if s[2] != 1 else ""))
        return " * ".join(parts)

    def sort_key(self) -> tuple:
        return (self.length(), tuple(_syllable_key(s) for s in self.syllables))


def _syllable_key(s) -> tuple:
    if s[0] == "g":
        return (0, s[1])
    exp = s[2]
    # exponent order 1, -1, 2, -2, ...
    rank = 2 * (abs(exp) - 1) + (0 if exp > 0 else 1)
    return (1, s[1], rank)


def _check_syllable(ctx: WordContext, s) -> None:
    if s[0] == "g":
        if not 0 <= s[1] < ctx.group.order:
            raise WordError(f"element index {s[1]} out of range")
    elif s[0] == "x":
        if not 1 <= s[1] <= ctx.variable_count:
            raise WordError(f"variable index {s[1]} out of range")
    else:
        raise WordError(f"unknown syllable kind {s[0]!r}")


def reduce_syllables(ctx: WordContext, raw: Iterable) -> Word:
    """Reduce a raw syllable sequence to free-product normal form."""
    G = ctx.group
    stack: list = []
    for s in raw:
        _check_syllable(ctx, s)
        _push(G, stack, s)
    return Word(ctx, tuple(stack))


def _push(G: GroupTable, stack: list, s) -> None:
    if s[0] == "g":
        if s[1] == G.id:
            return
        if stack and stack[-1][0] == "g":
            top = stack.pop()
            _push(G, stack, ("g", G.op(top[1], s[1])))
        else:
            stack.append(s)
    else:
        if s[2] == 0:
            return
        if stack and stack[-1][0] == "x" and stack[-1][1] == s[1]:
            top = stack.pop()
            _push(G, stack, ("x", s[1], top[2] + s[2]))
        else:
            stack.append(s)


def concat(a: Word, b: Word) -> Word:
    if a.context != b.context:
        raise WordError("words from different contexts")
    return reduce_syllables(a.context, a.syllables + b.syllables)


def inverse(w: Word) -> Word:
    G = w.context.group
    out = []
    for s in reversed(w.syllables):
        if s[0] == "g":
            out.append(("g", G.inverse(s[1])))
        else:
            out.append(("x", s[1], -s[2]))
    return Word(w.context, tuple(out))


def power(w: Word, k: int) -> Word:
    if k < 0:
        return power(inverse(w), -k)
    r = w.context.identity()
    for _ in range(k):
        r = concat(r, w)
    return r


def conjugate(u: Word, w: Word) -> Word:
    """u * w * u^-1."""
    return concat(concat(u, w), inverse(u))


def commutator(a: Word, b: Word) -> Word:
    return concat(concat(a, b), concat(inverse(a), inverse(b)))


def evaluate(w: Word, structure: Homomorphism, assignment: Sequence[int]) -> int:
    """Image of w under the morphism g -> structure(g), X_i -> assignment[i-1].

    With the identity structure this is the evaluation of a polynomial
    function at a point of G^n.
    """
    if structure.source is not w.context.group:
        raise WordError("structure map source does not match the word context")
    if len(assignment) != w.context.variable_count:
        raise WordError(
            f"assignment arity {len(assignment)} != {w.context.variable_count}"
        )
    H = structure.target
    acc = H.id
    for s in w.syllables:
        if s[0] == "g":
            acc = H.op(acc, structure(s[1]))
        else:
            acc = H.op(acc, H.power(assignment[s[1] - 1], s[2]))
    return acc


def enumerate_words(ctx: WordContext, max_len: int) -> Iterator[Word]:
    """All reduced words of length 1..max_len in (length, syllable) order."""
    G = ctx.group
    coeffs = [g for g in range(G.order) if g != G.id]

    def extend(prefix: list, remaining: int, target: int):
        used = target - remaining
        if used > 0 and remaining == 0:
            yield Word(ctx, tuple(prefix))
            return
        last = prefix[-1] if prefix else None
        if last is None or last[0] != "g":
            for g in coeffs:
                prefix.append(("g", g))
                yield from extend(prefix, remaining - 1, target)
                prefix.pop()
        for var in range(1, ctx.variable_count + 1):
            if last is not None and last[0] == "x" and last[1] == var:
                continue
            for mag in range(1, remaining + 1):
                for exp in (mag, -mag):
                    prefix.append(("x", var, exp))
                    yield from extend(prefix, remaining - mag, target)
                    prefix.pop()

    for target in range(1, max_len + 1):
        yield from _in_key_order(extend([], target, target))


def _in_key_order(words: Iterator[Word]) -> Iterator[Word]:
    yield from sorted(words, key=Word.sort_key)


@lru_cache(maxsize=32)
def _words_upto(ctx: WordContext, max_len: int) -> tuple:
    return tuple(enumerate_words(ctx, max_len))


_TOKEN = re.compile(r"^(?:(g(\d+))|(X(\d+)(\^(-?\d+))?)|1)$")


def parse_word(ctx: WordContext, text: str) -> Word:
    """Parse literals like ``g3 * X1^2 * g1 * X2^-1`` (``1`` is the identity)."""
    raw = []
    for part in text.split("*"):
        part = part.strip()
        if not part:
            raise WordError(f"empty factor in word literal {text!r}")
        m = _TOKEN.match(part)
        if not m:
            raise WordError(f"bad word factor {part!r}")
        if m.group(1):
            raw.append(("g", int(m.group(2))))
        elif m.group(3):
            exp = int(m.group(6)) if m.group(6) else 1
            raw.append(("x", int(m.group(4)), exp))
        # literal "1" contributes nothing
    return reduce_syllables(ctx, raw)


# -- divisor-of-zero search ------------------------------------------------


def span_generators(w: Word) -> list[Word]:
    """Distinct reduced conjugates c_g * w * c_g^-1 over the coefficients."""
    ctx = w.context
    seen = {}
    for g in range(ctx.group.order):
        c = conjugate(ctx.constant(g), w)
        seen.setdefault(c.syllables, c)
    return list(seen.values())


def _spans_commute(x_gens: Sequence[Word], y_gens: Sequence[Word]) -> bool:
    for a in x_gens:
        for b in y_gens:
            if not commutator(a, b).is_identity():
                return False
    return True


def _cyclically_reduce(w: Word) -> Word:
    """Conjugate w to cyclically reduced form (first/last syllables cannot cancel)."""
    cur = w
    while len(cur.syllables) >= 2:
        first, last = cur.syllables[0], cur.syllables[-1]
        cancels = (
            (first[0] == "g" and last[0] == "g")
            or (first[0] == "x" and last[0] == "x" and first[1] == last[1])
        )
        if not cancels:
            break
        head = Word(cur.context, (first,))
        nxt = concat(concat(inverse(head), cur), head)
        if nxt.length() >= cur.length():
            break
        cur = nxt
    return cur


def _word_order(w: Word) -> Optional[int]:
    """Order of w in the free product, or None if infinite.

    Torsion elements are conjugates of coefficient-group elements, so the
    order is bounded by the coefficient group order.
    """
    if w.is_identity():
        return 1
    core = _cyclically_reduce(w)
    if core.is_constant():
        return w.context.group.element_order(core.syllables[0][1])
    return None


def _recognize_cyclic(gens: Sequence[Word]) -> Optional[tuple[Word, Optional[int]]]:
    """If all generators lie in one cyclic subgroup, return (root, order)."""
    gens = [g for g in gens if not g.is_identity()]
    if not gens:
        return None
    root = min(gens, key=lambda w: w.sort_key())
    order = _word_order(root)
    powers = {}
    if order is not None:
        p = root.context.identity()
        for k in range(order):
            powers[p.syllables] = k
            p = concat(p, root)
    else:
        max_needed = max(g.length() for g in gens)
        p = root.context.identity()
        k = 0
        while True:
            powers[p.syllables] = k
            powers[inverse(p).syllables] = -k
            if p.length() > max_needed:
                break
            p = concat(p, root)
            k += 1
            if k > 4 * max_needed + 8:
                break
    for g in gens:
        if g.syllables not in powers:
            return None
    return root, order


def _cyclic_intersection_trivial(rx: tuple[Word, Optional[int]], ry: tuple[Word, Optional[int]]) -> bool:
    """Whether <root_x> and <root_y> intersect trivially in the free product."""
    (ux, ox), (uy, oy) = rx, ry
    if ox is not None and oy is not None:
        px, p = set(), ux.context.identity()
        for _ in range(ox):
            px.add(p.syllables)
            p = concat(p, ux)
        p = uy.context.identity()
        for _ in range(oy):
            if p.syllables in px and not p.is_identity():
                return False
            p = concat(p, uy)
        return True
    if (ox is None) != (oy is None):
        # a finite and an infinite cyclic group share only the identity
        return True
    # two infinite cyclics share a nontrivial power iff their roots commute
    return not commutator(ux, uy).is_identity()


def bounded_divisor_witness(
    ctx: WordContext,
    x: Word,
    variant: str,
    max_len: int,
):
    """Search reduced words y of length <= max_len witnessing that x divides zero.

    T1: [span(x), span(y)] = 1, checked on the finite conjugate-generator
    sets.  T2: trivial intersection of spans, decided only when both spans
    are recognized cyclic; otherwise InconclusiveError.  A None return is
    bounded evidence of absence, not a proof.
    """
    if variant not in ("t1", "t2"):
        raise WordError(f"unknown variant {variant!r}")
    if x.is_identity():
        raise WordError("the identity is never a divisor of zero")
    if max_len < 1:
        raise WordError("max_len must be >= 1")
    x_gens = span_generators(x)
    x_cyc = _recognize_cyclic(x_gens) if variant == "t2" else None
    if variant == "t2" and x_cyc is None:
        raise InconclusiveError(
            "span of x not recognized cyclic; bounded T2 search unsupported"
        )
    for y in _words_upto(ctx, max_len):
        if y.is_identity():
            continue
        if variant == "t1":
            # necessary quick filter: x and y themselves must commute
            if concat(x, y).syllables != concat(y, x).syllables:
                continue
            y_gens = span_generators(y)
            if _spans_commute(x_gens, y_gens):
                cert = {
                    "variant": "t1",
                    "x_generators": [str(g) for g in x_gens],
                    "y_generators": [str(g) for g in y_gens],
                    "checked_pairs": len(x_gens) * len(y_gens),
                }
                return y, cert
        else:
            y_cyc = _recognize_cyclic(span_generators(y))
            if y_cyc is None:
                raise InconclusiveError(
                    f"span of candidate {y} not recognized cyclic; "
                    "canonical-first witness cannot be certified"
                )
            if _cyclic_intersection_trivial(x_cyc, y_cyc):
                cert = {
                    "variant": "t2",
                    "x_root": str(x_cyc[0]),
                    "x_order": x_cyc[1],
                    "y_root": str(y_cyc[0]),
                    "y_order": y_cyc[1],
                }
                return y, cert
    return None
