"""Quasi-periodic substitution chains over the alphabet {A, B}.

A rule rewrites every letter of a word in place, e.g. A -> AB, B -> A
grows the Fibonacci chain A, AB, ABA, ABAABA, ...  Symbol counts evolve
by the rule's abelianization matrix, so whenever the image of B is the
single letter A the counts (nA, nB) follow the same two-step recurrence
as the algebra's level pairs (alpha, beta).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CharacteristicFunctions, VacuumState
from .rep_builder import iterate_eigenvalues

__all__ = [
    "SubstitutionRule",
    "InflationTrace",
    "CorrespondenceReport",
    "inflate",
    "rule_matrix",
    "verify_count_correspondence",
    "parse_rule",
]

DEFAULT_WORD_CAP = 10 ** 6

_ALPHABET = frozenset("AB")


def _check_word(name: str, word: str) -> str:
    if not word:
        raise ValueError(f"{name} must be nonempty")
    bad = set(word) - _ALPHABET
    if bad:
        raise ValueError(f"{name} may only use letters A and B, got {sorted(bad)}")
    return word


@dataclass(frozen=True)
class SubstitutionRule:
    image_of_A: str
    image_of_B: str

    def __post_init__(self):
        _check_word("image_of_A", self.image_of_A)
        _check_word("image_of_B", self.image_of_B)

    def apply(self, word: str) -> str:
        return "".join(self.image_of_A if ch == "A" else self.image_of_B
                       for ch in word)


def parse_rule(text: str) -> SubstitutionRule:
    """Parse the CLI grammar 'A:<word>,B:<word>' (either order)."""
    images: dict[str, str] = {}
    for part in text.split(","):
        if ":" not in part:
            raise ValueError(f"bad rule fragment {part!r}, expected 'A:AB,B:A'")
        letter, _, image = part.partition(":")
        letter = letter.strip()
        if letter not in ("A", "B"):
            raise ValueError(f"rule letter must be A or B, got {letter!r}")
        images[letter] = image.strip()
    if set(images) != {"A", "B"}:
        raise ValueError("rule must define images for both A and B")
    return SubstitutionRule(images["A"], images["B"])


def _count(word: str) -> tuple[int, int]:
    n_a = word.count("A")
    return (n_a, len(word) - n_a)


@dataclass(frozen=True)
class InflationTrace:
    """Words and symbol counts per inflation step.

    Counts always cover every step; words stop at the length cap, with
    ``words_truncated_after`` naming the last step whose word is stored.
    """

    rule: SubstitutionRule
    words: tuple[str, ...]
    counts: tuple[tuple[int, int], ...]
    words_truncated_after: int | None = None

    def to_dict(self) -> dict:
        return {
            "rule": {"A": self.rule.image_of_A, "B": self.rule.image_of_B},
            "words": list(self.words),
            "counts": [list(c) for c in self.counts],
            "words_truncated_after": self.words_truncated_after,
        }


def rule_matrix(rule: SubstitutionRule) -> list[list[int]]:
    """Abelianization matrix M with counts[k+1] = M @ counts[k]:
    [[#A in image of A, #A in image of B], [#B in image of A, #B in image of B]]."""
    a_in_a, b_in_a = _count(rule.image_of_A)
    a_in_b, b_in_b = _count(rule.image_of_B)
    return [[a_in_a, a_in_b], [b_in_a, b_in_b]]


def inflate(rule: SubstitutionRule, seed: str, steps: int,
            word_cap: int = DEFAULT_WORD_CAP) -> InflationTrace:
    """Apply the rule ``steps`` times starting from ``seed``.

    Words are materialized while they fit under ``word_cap`` letters;
    beyond that only the exact integer counts propagate, through the
    abelianization matrix.
    """
    _check_word("seed", seed)
    if steps < 0:
        raise ValueError("steps must be >= 0")
    words = [seed]
    counts = [_count(seed)]
    m = rule_matrix(rule)
    truncated_after = None
    for k in range(steps):
        n_a, n_b = counts[k]
        counts.append((m[0][0] * n_a + m[0][1] * n_b,
                       m[1][0] * n_a + m[1][1] * n_b))
        if truncated_after is None:
            next_len = n_a * len(rule.image_of_A) + n_b * len(rule.image_of_B)
            if next_len <= word_cap:
                words.append(rule.apply(words[k]))
            else:
                truncated_after = k
    return InflationTrace(rule, tuple(words), tuple(counts), truncated_after)


@dataclass(frozen=True)
class CorrespondenceReport:
    """Comparison of inflation counts against the eigenvalue recurrence."""

    r: int
    s: int
    matched: bool
    first_mismatch: int | None
    steps: int

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "matched": self.matched,
            "first_mismatch": self.first_mismatch,
            "steps": self.steps,
        }


def verify_count_correspondence(rule: SubstitutionRule, steps: int,
                                seed: str = "A") -> CorrespondenceReport:
    """Check that (nA, nB) per inflation equals (alpha, beta) from the
    linear recurrence with slopes read off the rule matrix.

    Needs the rule matrix in companion form [[r, 1], [s, 0]], i.e. the
    image of B must be exactly 'A'; the seed counts set the vacuum.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    m = rule_matrix(rule)
    if m[0][1] != 1 or m[1][1] != 0:
        raise ValueError("count correspondence needs image_of_B == 'A' so the "
                         "rule matrix is a companion matrix [[r, 1], [s, 0]]")
    r, s = m[0][0], m[1][0]
    trace = inflate(rule, seed, steps)
    n_a0, n_b0 = trace.counts[0]
    seq = iterate_eigenvalues(CharacteristicFunctions.linear(r, s),
                              VacuumState(n_a0, n_b0), steps)
    first_mismatch = None
    for k, (n_a, n_b) in enumerate(trace.counts):
        if float(n_a) != seq.alphas[k] or float(n_b) != seq.betas[k]:
            first_mismatch = k
            break
    return CorrespondenceReport(r, s, first_mismatch is None, first_mismatch, steps)
