"""Exact word algebra for the free group on two generators.

Words are kept in run-length form: a :class:`FreeWord` is a tuple of
terms ``(generator, exponent)`` with ``generator`` in ``{1, 2}``,
nonzero integer exponents, and no two adjacent terms sharing a
generator.  The empty tuple is the identity.  Run-length terms make
exponent merging O(1) per join and let the syllable scan run in one
left-to-right pass.

A syllable is either a single term with ``|exponent| >= 2`` (first
kind) or a maximal run of consecutive terms whose exponents are all
``+1`` or all ``-1`` (second kind).  The degree of a syllable is the
sum of ``|exponent|`` over its terms.  The identity has no syllables.

Text syntax (shared with the command line): whitespace-separated
tokens ``a1`` and ``a2`` with optional caret exponents (``a1^-3``);
uppercase ``A1``/``A2`` denote inverses of single letters; the empty
string is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

GENERATORS = (1, 2)


def other_generator(gen: int) -> int:
    return 3 - gen


class WordSyntaxError(ValueError):
    """Raised on malformed word text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at token {position})")
        self.position = position


def reduce_terms(raw: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Collapse a raw term sequence into the unique reduced form."""
    stack: list[tuple[int, int]] = []
    for gen, exp in raw:
        if gen not in GENERATORS:
            raise ValueError(f"unknown generator {gen!r}")
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged != 0:
                stack.append((gen, merged))
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """A reduced word in the free group on generators 1 and 2."""

    terms: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def identity() -> "FreeWord":
        return FreeWord()

    @staticmethod
    def from_terms(raw: Iterable[tuple[int, int]]) -> "FreeWord":
        return FreeWord(reduce_terms(raw))

    @property
    def is_identity(self) -> bool:
        return not self.terms

    @property
    def num_terms(self) -> int:
        return len(self.terms)

    @property
    def total_degree(self) -> int:
        """Sum of |exponent| over all terms (letter length of the word)."""
        return sum(abs(e) for _, e in self.terms)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(reduce_terms(self.terms + other.terms))

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.terms)))

    def __str__(self) -> str:
        return word_to_text(self)

    def letters(self) -> Iterator[tuple[int, int]]:
        """Yield the word one (generator, +-1) letter at a time."""
        for gen, exp in self.terms:
            sign = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield gen, sign


_WORD_TOKEN = re.compile(r"(?P<shift>[aA])(?P<gen>[12])(?:\^(?P<exp>-?\d+))?\Z")


def parse_word(text: str) -> FreeWord:
    """Parse word text syntax; raises :class:`WordSyntaxError` on bad tokens."""
    raw: list[tuple[int, int]] = []
    for pos, token in enumerate(text.split()):
        match = _WORD_TOKEN.match(token)
        if match is None:
            raise WordSyntaxError(f"bad word token {token!r}", pos)
        gen = int(match.group("gen"))
        exp = 1 if match.group("exp") is None else int(match.group("exp"))
        if match.group("shift") == "A":
            exp = -exp
        raw.append((gen, exp))
    return FreeWord.from_terms(raw)


def word_to_text(w: FreeWord) -> str:
    if w.is_identity:
        return ""
    return " ".join(
        f"a{g}" if e == 1 else f"a{g}^{e}" for g, e in w.terms
    )


FIRST_KIND = "first"
SECOND_KIND = "second"


@dataclass(frozen=True)
class Syllable:
    """One syllable: kind, degree, common sign, and starting generator."""

    kind: str
    degree: int
    sign: int
    start: int

    def __post_init__(self) -> None:
        if self.kind not in (FIRST_KIND, SECOND_KIND):
            raise ValueError(f"unknown syllable kind {self.kind!r}")
        if self.kind == FIRST_KIND and self.degree < 2:
            raise ValueError("first-kind syllables have degree >= 2")
        if self.degree < 1 or self.sign not in (1, -1) or self.start not in GENERATORS:
            raise ValueError("malformed syllable")

    def expand(self) -> tuple[tuple[int, int], ...]:
        """The term run this syllable stands for."""
        if self.kind == FIRST_KIND:
            return ((self.start, self.sign * self.degree),)
        gen = self.start
        out = []
        for _ in range(self.degree):
            out.append((gen, self.sign))
            gen = other_generator(gen)
        return tuple(out)


@dataclass(frozen=True)
class SyllableDecomposition:
    syllables: tuple[Syllable, ...]

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def __len__(self) -> int:
        return len(self.syllables)

    def degrees(self) -> tuple[int, ...]:
        return tuple(s.degree for s in self.syllables)

    def expand(self) -> tuple[tuple[int, int], ...]:
        out: list[tuple[int, int]] = []
        for s in self.syllables:
            out.extend(s.expand())
        return tuple(out)


def syllable_decompose(w: FreeWord) -> SyllableDecomposition:
    """Split a reduced word into its unique syllable sequence."""
    syllables: list[Syllable] = []
    run_start = 0
    run_sign = 0
    run_len = 0

    def close_run() -> None:
        nonlocal run_len
        if run_len:
            syllables.append(Syllable(SECOND_KIND, run_len, run_sign, run_start))
            run_len = 0

    for gen, exp in w.terms:
        if abs(exp) >= 2:
            close_run()
            syllables.append(
                Syllable(FIRST_KIND, abs(exp), 1 if exp > 0 else -1, gen)
            )
        else:
            if run_len and run_sign == exp:
                run_len += 1
            else:
                close_run()
                run_start, run_sign, run_len = gen, exp, 1
    close_run()
    return SyllableDecomposition(tuple(syllables))


def is_cyclically_reduced(w: FreeWord) -> bool:
    """True when the first and last terms use different generators."""
    if len(w.terms) <= 1:
        return True
    return w.terms[0][0] != w.terms[-1][0]


def cyclic_reduce(w: FreeWord) -> tuple[FreeWord, FreeWord]:
    """Return ``(core, c)`` with ``w = c * core * c^-1`` and core cyclically reduced."""
    terms = list(w.terms)
    conj: list[tuple[int, int]] = []
    while len(terms) >= 2 and terms[0][0] == terms[-1][0]:
        gen, head = terms[0]
        tail = terms[-1][1]
        if head + tail == 0:
            conj.append((gen, head))
            terms = terms[1:-1]
        else:
            # conjugating by the full head term leaves a cyclically reduced word
            conj.append((gen, head))
            terms = terms[1:-1] + [(gen, head + tail)]
            break
    return FreeWord(tuple(terms)), FreeWord.from_terms(conj)


def is_cyclically_syllable_reduced(w: FreeWord) -> bool:
    """Decide whether the cyclic word of ``w`` splits cleanly into syllables.

    Requires ``w`` cyclically reduced and not the identity.  True when the
    word is a single term, or all terms enter with exponent +1 (or all with
    -1), or the first and last terms do not both enter with the same
    exponent +1 or -1.  Equivalently, the wrap-around of ``w * w`` does not
    merge the last syllable into the first.
    """
    if w.is_identity:
        raise ValueError("the identity has no syllable structure")
    if not is_cyclically_reduced(w):
        raise ValueError("word is not cyclically reduced")
    if len(w.terms) == 1:
        return True
    exps = [e for _, e in w.terms]
    if all(e == 1 for e in exps) or all(e == -1 for e in exps):
        return True
    first, last = exps[0], exps[-1]
    return not (abs(first) == 1 and first == last)


def _rotation_offsets(core1: FreeWord, core2: FreeWord) -> Iterator[int]:
    n = len(core1.terms)
    if n != len(core2.terms):
        return
    if n == 0:
        yield 0
        return
    doubled = core1.terms + core1.terms
    for r in range(n):
        if doubled[r : r + n] == core2.terms:
            yield r


def free_conjugator(w1: FreeWord, w2: FreeWord) -> FreeWord | None:
    """A witness ``g`` with ``g^-1 * w1 * g == w2``, or None.

    Conjugacy of cyclically reduced words is cyclic rotation of their term
    sequences, so the search reduces to a rotation match of the cores.
    """
    core1, c1 = cyclic_reduce(w1)
    core2, c2 = cyclic_reduce(w2)
    for r in _rotation_offsets(core1, core2):
        u = FreeWord(core1.terms[:r])
        g = c1 * u * c2.inverse()
        return g
    return None


def are_conjugate_free(w1: FreeWord, w2: FreeWord) -> bool:
    return free_conjugator(w1, w2) is not None
