"""The right-symmetric insertion algebra on words over {A, B}.

The product inserts one word into the gaps of another, each gap weighted by
a sign read off the pair of letters around it.  Positions are 1-based with
x[0] and x[len(x)+1] read as the boundary symbol; the gap weights are the
single most error-prone convention in this corner of the workbench and are
pinned by eight worked products in the test suite.

The algebra is spanned by *nonempty* words.  The empty word is a valid
boundary case for epsilon and the product formula extends to it literally
(x o empty = mass(x) * x, empty o y = 0), but with an empty factor the
right-symmetric identity genuinely fails, so no symmetry claim covers it.
"""

from __future__ import annotations

from typing import Mapping

from .scalars import QQ, ZERO, rat_str

ALPHABET = ("A", "B")

_SUPERSCRIPTS = {"0": "⁰", "1": "¹", "2": "²", "3": "³",
                 "4": "⁴", "5": "⁵", "6": "⁶", "7": "⁷",
                 "8": "⁸", "9": "⁹"}


def parse_word(text: str) -> str:
    for ch in text:
        if ch not in ALPHABET:
            raise ValueError(f"word may only contain A and B, got {text!r}")
    return text


def epsilon(x: str, i: int) -> int:
    """Gap weight at position i of x (0 <= i <= len(x)).

    The weight is decided by the pair (x[i], x[i+1]) with positions outside
    the word read as the boundary symbol: -1 for (A,B); +1 for (B,A),
    (B,boundary) and (boundary,A); 0 otherwise.
    """
    if not 0 <= i <= len(x):
        raise ValueError(f"position {i} out of range for word of length {len(x)}")
    left = x[i - 1] if i >= 1 else None
    right = x[i] if i < len(x) else None
    if left == "A" and right == "B":
        return -1
    if left == "B" and (right == "A" or right is None):
        return 1
    if left is None and right == "A":
        return 1
    return 0


def splice(x: str, i: int, y: str) -> str:
    """x with y inserted between positions i and i+1."""
    return x[:i] + y + x[i:]


class WordSum:
    """Formal rational combination of words; no zero coefficients stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[str, object] | None = None):
        clean = {}
        if terms:
            for w, c in terms.items():
                c = QQ(c)
                if c != 0:
                    clean[parse_word(w)] = c
        self.terms = clean

    @classmethod
    def of(cls, word: str, coeff=1) -> "WordSum":
        return cls({word: coeff})

    def __eq__(self, other):
        return isinstance(other, WordSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "WordSum") -> "WordSum":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return WordSum(out)

    def __sub__(self, other: "WordSum") -> "WordSum":
        return self + other.scale(-1)

    def scale(self, c) -> "WordSum":
        c = QQ(c)
        return WordSum({w: c * v for w, v in self.terms.items()})

    def sorted_terms(self) -> list[tuple[str, object]]:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __repr__(self):
        return f"WordSum({format_word_sum(self)})"


def _as_word_sum(x) -> WordSum:
    if isinstance(x, WordSum):
        return x
    return WordSum.of(parse_word(x))


def insert_product(x, y) -> WordSum:
    """x o y = sum over gaps i of epsilon(i) * (y spliced into x at i),
    extended bilinearly to word sums."""
    xs, ys = _as_word_sum(x), _as_word_sum(y)
    out = WordSum()
    for xw, xc in xs.terms.items():
        for yw, yc in ys.terms.items():
            acc: dict[str, object] = {}
            for i in range(len(xw) + 1):
                e = epsilon(xw, i)
                if e:
                    w = splice(xw, i, yw)
                    acc[w] = acc.get(w, ZERO) + QQ(e)
            out = out + WordSum(acc).scale(xc * yc)
    return out


def word_associator(x, y, z) -> WordSum:
    """(x, y, z) = (x o y) o z - x o (y o z)."""
    return insert_product(insert_product(x, y), z) - insert_product(
        x, insert_product(y, z)
    )


def _format_word(w: str, pretty: bool) -> str:
    if not w:
        return "∅"
    if not pretty:
        return w
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        out.append(w[i])
        if run > 1:
            out.append("".join(_SUPERSCRIPTS[d] for d in str(run)))
        i = j
    return "".join(out)


def format_word_sum(ws: WordSum, pretty: bool = False) -> str:
    if ws.is_zero():
        return "0"
    # Positive terms lead so sums print without a dangling minus sign.
    ordered = [(w, c) for w, c in ws.sorted_terms() if c > 0] + [
        (w, c) for w, c in ws.sorted_terms() if c < 0
    ]
    parts = []
    for idx, (w, c) in enumerate(ordered):
        word = _format_word(w, pretty)
        mag = abs(c)
        body = word if mag == 1 else f"{rat_str(mag)}{word}"
        if idx == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
