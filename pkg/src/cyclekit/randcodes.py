"""Monte Carlo estimators for uniform-random-word events, cross-validating
the exact counts.

Streams are drawn from PCG64 generators seeded through SeedSequence spawn
keys, so every estimate is reproducible from (seed, stream) regardless of
how calls are interleaved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import Sequence

import numpy as np

from .analytic import rooted_hamilton_permutations_general
from .graphs import turan_class_sizes

EVENTS = ("Q", "P", "QP")


def _rng(seed: int, stream: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream,))))


@dataclass(frozen=True)
class CodeSample:
    """One uniform word over {1..k} with its event data."""

    code: tuple[int, ...]
    in_q: bool
    content: tuple[int, ...]


@dataclass(frozen=True)
class ProbEstimate:
    estimate: float
    stderr: float
    hits: int
    samples: int


def _draw_words(n: int, k: int, samples: int, rng: np.random.Generator) -> np.ndarray:
    return rng.integers(1, k + 1, size=(samples, n))


def _in_q(words: np.ndarray) -> np.ndarray:
    return np.all(words != np.roll(words, -1, axis=1), axis=1)


def _has_content(words: np.ndarray, content: Sequence[int], k: int) -> np.ndarray:
    ok = np.ones(words.shape[0], dtype=bool)
    for letter in range(1, k + 1):
        want = content[letter - 1] if letter <= len(content) else 0
        ok &= (words == letter).sum(axis=1) == want
    return ok


def sample_code(n: int, k: int, seed: int) -> CodeSample:
    """A single word with independently uniform letters, plus its event data."""
    if k < 2:
        raise ValueError("k must be >= 2")
    word = _draw_words(n, k, 1, _rng(seed))[0]
    code = tuple(int(x) for x in word)
    in_q = all(code[i] != code[(i + 1) % n] for i in range(n))
    content = tuple(code.count(letter) for letter in range(1, k + 1))
    return CodeSample(code=code, in_q=in_q, content=content)


def estimate_prob(
    n: int,
    k: int,
    event: str,
    samples: int,
    seed: int,
    content: Sequence[int] | None = None,
) -> ProbEstimate:
    """Frequency estimate with standard error for one of the word events:
    "Q" (cyclically adjacent-distinct), "P" (fixed letter content), or "QP"
    (both).  P and QP need ``content``, zero-padded to k letters if shorter.
    """
    if event not in EVENTS:
        raise ValueError(f"event must be one of {EVENTS}")
    if samples < 1:
        raise ValueError("need at least one sample")
    if event in ("P", "QP"):
        if content is None:
            raise ValueError(f"event {event} needs a content vector")
        if sum(content) != n:
            raise ValueError("content must sum to n")
    words = _draw_words(n, k, samples, _rng(seed))
    if event == "Q":
        hits_mask = _in_q(words)
    elif event == "P":
        hits_mask = _has_content(words, content, k)
    else:
        hits_mask = _in_q(words) & _has_content(words, content, k)
    hits = int(hits_mask.sum())
    p = hits / samples
    return ProbEstimate(
        estimate=p, stderr=sqrt(p * (1 - p) / samples), hits=hits, samples=samples
    )


@dataclass(frozen=True)
class WalkShareEstimate:
    estimate: float | None
    stderr: float | None
    accepted: int
    samples: int
    exact: Fraction
    z: float | None


def estimate_second_letter_share(
    n: int, k: int, samples: int, seed: int
) -> WalkShareEstimate:
    """Estimate, via the no-repeat random walk on {1..k}, the probability that
    a uniform rooted cyclic word with balanced content has letter 2 in second
    position.

    The walk starts at 1, never repeats a letter, and is retained when the
    (b_1+1)-th visit to 1 would land exactly at position n+1 and the first n
    letters have balanced content; conditioned on that, the walk is uniform on
    the rooted words, so the acceptance-frequency of (second letter = 2) is an
    unbiased estimate of the exact rooted-count ratio, returned alongside it.
    No acceptances is reported, not fatal.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    if samples < 1:
        raise ValueError("need at least one sample")
    sizes = turan_class_sizes(n, k)
    b1 = sizes[0]
    rng = _rng(seed)
    walks = np.empty((samples, n + 1), dtype=np.int64)
    walks[:, 0] = 1
    for j in range(1, n + 1):
        step = rng.integers(1, k, size=samples)
        walks[:, j] = step + (step >= walks[:, j - 1])
    body = walks[:, :n]
    accept = ((body == 1).sum(axis=1) == b1) & (walks[:, n] == 1)
    accept &= _has_content(body, sizes, k)
    accepted = int(accept.sum())
    numer = rooted_hamilton_permutations_general(sizes, 1, 2)
    denom = sum(
        rooted_hamilton_permutations_general(sizes, 1, j) for j in range(2, k + 1)
    )
    exact = Fraction(numer, denom)
    if accepted == 0:
        return WalkShareEstimate(None, None, 0, samples, exact, None)
    hits = int((walks[accept, 1] == 2).sum())
    p = hits / accepted
    stderr = sqrt(p * (1 - p) / accepted)
    z = None if stderr == 0 else (p - float(exact)) / stderr
    return WalkShareEstimate(p, stderr, accepted, samples, exact, z)


def estimate_to_csv_rows(
    results: dict[str, tuple[ProbEstimate, Fraction | None]], n: int, k: int
) -> list[str]:
    rows = ["event,n,k,estimate,stderr,exact_value_if_known"]
    for event in sorted(results):
        est, exact = results[event]
        exact_str = "" if exact is None else f"{exact.numerator}/{exact.denominator}"
        rows.append(f"{event},{n},{k},{est.estimate!r},{est.stderr!r},{exact_str}")
    return rows
