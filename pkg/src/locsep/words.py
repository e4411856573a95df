"""Words over a generator alphabet and the combinatorics of iterated commutators.

A letter is a pair ``(base, sign)`` with sign +1 or -1; a word is a tuple of
letters. Bases listed as involutions in an :class:`Alphabet` are written with
sign +1 only, so ``h h`` cancels just like ``h h^-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

from .groups import Group

Letter = tuple[str, int]
Word = tuple[Letter, ...]
WordLike = Union[Letter, Word, str]


@dataclass(frozen=True)
class Alphabet:
    """Involution flags per base, plus an optional evaluation into a group."""

    involutions: frozenset[str] = frozenset()
    evaluation: Optional[Mapping[str, int]] = None
    group: Optional[Group] = field(default=None, repr=False, compare=False)

    def normalize(self, letter: Letter) -> Letter:
        base, sign = letter
        return (base, 1) if base in self.involutions else (base, sign)

    def check_evaluation(self) -> None:
        """Involution bases must be sent to elements of order at most two."""
        if self.evaluation is None or self.group is None:
            return
        g = self.group
        for base in self.involutions:
            x = self.evaluation[base]
            if g.mul[x][x] != g.identity:
                raise ValueError(f"base {base} is flagged as an involution but evaluates to {g.names[x]}")

    def letter_value(self, letter: Letter) -> int:
        if self.evaluation is None or self.group is None:
            raise ValueError("alphabet has no evaluation")
        x = self.evaluation[letter[0]]
        return x if letter[1] > 0 else self.group.inv[x]

    def evaluate(self, w: Iterable[Letter]) -> int:
        g = self.group
        if g is None:
            raise ValueError("alphabet has no evaluation")
        out = g.identity
        for a in w:
            out = g.mul[out][self.letter_value(a)]
        return out


PLAIN = Alphabet()


def as_word(x: WordLike, alphabet: Alphabet = PLAIN) -> Word:
    if isinstance(x, str):
        return parse_word(x, alphabet)
    if len(x) == 2 and isinstance(x[0], str) and isinstance(x[1], int):
        return (alphabet.normalize(x),)  # type: ignore[arg-type]
    return tuple(alphabet.normalize(a) for a in x)  # type: ignore[union-attr]


_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*?)(?:\^(-?\d+))?$")


def parse_word(text: str, alphabet: Alphabet = PLAIN) -> Word:
    """Parse whitespace-separated tokens such as ``g``, ``h^-1`` and ``g^2``."""
    out: list[Letter] = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"cannot parse token {tok!r}")
        base, exp = m.group(1), int(m.group(2) or 1)
        if exp == 0:
            continue
        sign = 1 if exp > 0 else -1
        out.extend(alphabet.normalize((base, sign)) for _ in range(abs(exp)))
    return tuple(out)


def render(w: Sequence[Letter]) -> str:
    return " ".join(b if s > 0 else f"{b}^-1" for b, s in w) if w else "1"


def letter_inverse(a: Letter, alphabet: Alphabet = PLAIN) -> Letter:
    return alphabet.normalize((a[0], -a[1]))


def inverse(w: Sequence[Letter], alphabet: Alphabet = PLAIN) -> Word:
    return tuple(letter_inverse(a, alphabet) for a in reversed(w))


def reduce(w: Iterable[Letter], alphabet: Alphabet = PLAIN) -> Word:
    """Free reduction; with the stack discipline the result is the unique normal form."""
    stack: list[Letter] = []
    for a in w:
        a = alphabet.normalize(a)
        if stack and stack[-1] == letter_inverse(a, alphabet):
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def is_reduced(w: Sequence[Letter], alphabet: Alphabet = PLAIN) -> bool:
    w = tuple(alphabet.normalize(a) for a in w)
    return all(w[i + 1] != letter_inverse(w[i], alphabet) for i in range(len(w) - 1))


def iterated_commutator_word(g: WordLike, h: WordLike, n: int, alphabet: Alphabet = PLAIN) -> Word:
    """Reduced word of [g, h]_n; g and h may be letters or whole words."""
    if n < 1:
        raise ValueError("n must be >= 1")
    gw, hw = as_word(g, alphabet), as_word(h, alphabet)
    gi = inverse(gw, alphabet)
    c = reduce(gw + inverse(hw, alphabet) + gi + hw, alphabet)
    for _ in range(n - 1):
        c = reduce(gw + inverse(c, alphabet) + gi + c, alphabet)
    return c


def truncate_left(w: Sequence[Letter]) -> Word:
    if len(w) < 2:
        raise ValueError("truncation needs a word of length at least 2")
    return tuple(w[1:])


def truncate_right(w: Sequence[Letter]) -> Word:
    if len(w) < 2:
        raise ValueError("truncation needs a word of length at least 2")
    return tuple(w[:-1])


def recursive_form_check(n: int, alphabet: Alphabet = PLAIN, g: Letter = ("g", 1), h: Letter = ("h", 1)) -> bool:
    """u_n equals g . u_{n-1}^-1 . (u_{n-1} without its first letter), with no cancellation needed."""
    if n < 2:
        raise ValueError("n must be >= 2")
    prev = iterated_commutator_word(g, h, n - 1, alphabet)
    glued = (alphabet.normalize(g),) + inverse(prev, alphabet) + truncate_left(prev)
    return is_reduced(glued, alphabet) and glued == iterated_commutator_word(g, h, n, alphabet)


def cyclic_permutations(w: Sequence[Letter]) -> list[Word]:
    w = tuple(w)
    seen: dict[Word, None] = {}
    for k in range(max(len(w), 1)):
        seen.setdefault(w[k:] + w[:k], None)
    return list(seen)


def _contains(hay: Sequence[Letter], needle: Sequence[Letter]) -> bool:
    n, m = len(hay), len(needle)
    if m == 0:
        return True
    needle = tuple(needle)
    return any(tuple(hay[i:i + m]) == needle for i in range(n - m + 1))


def is_subword(u: Sequence[Letter], w: Sequence[Letter]) -> bool:
    """Contiguous (linear) subword test."""
    return _contains(tuple(w), tuple(u))


def is_cyclic_subword(u: WordLike, w: WordLike, alphabet: Alphabet = PLAIN) -> bool:
    """u or u^-1 occurs contiguously in some cyclic permutation of w."""
    u, w = as_word(u, alphabet), as_word(w, alphabet)
    if len(u) > len(w):
        return False
    doubled = w + w[:max(len(u) - 1, 0)]
    return _contains(doubled, u) or _contains(doubled, inverse(u, alphabet))


def _letter(x: WordLike) -> Letter:
    if isinstance(x, str):
        return (x, 1)
    return x  # type: ignore[return-value]


def square_words(g: WordLike = "g", h: WordLike = "h", alphabet: Alphabet = PLAIN) -> frozenset[Word]:
    """The eight cyclic permutations and inversions of ghgh and gh^-1gh^-1."""
    a, b = alphabet.normalize(_letter(g)), alphabet.normalize(_letter(h))
    bi = letter_inverse(b, alphabet)
    out = set()
    for base in ((a, b, a, b), (a, bi, a, bi)):
        for rot in cyclic_permutations(base):
            out.add(rot)
            out.add(inverse(rot, alphabet))
    return frozenset(out)


def is_square_word(u: WordLike, g: WordLike = "g", h: WordLike = "h", alphabet: Alphabet = PLAIN) -> bool:
    return as_word(u, alphabet) in square_words(g, h, alphabet)


def magic_patterns(g: WordLike = "g", h: WordLike = "h", alphabet: Alphabet = PLAIN) -> tuple[Word, ...]:
    a, b = alphabet.normalize(_letter(g)), alphabet.normalize(_letter(h))
    ai = letter_inverse(a, alphabet)
    return ((a, b), (b, a), (ai, b), (b, ai))


def magic_count(u: WordLike, g: WordLike = "g", h: WordLike = "h", alphabet: Alphabet = PLAIN) -> int:
    u = as_word(u, alphabet)
    ui = inverse(u, alphabet)
    return sum(1 for p in magic_patterns(g, h, alphabet) if _contains(u, p) or _contains(ui, p))


def is_magic(u: WordLike, g: WordLike = "g", h: WordLike = "h", alphabet: Alphabet = PLAIN) -> bool:
    return magic_count(u, g, h, alphabet) >= 3


def segments(w: WordLike, alphabet: Alphabet = PLAIN) -> list[tuple[str, int]]:
    """Maximal runs of one base, as (base, signed exponent)."""
    w = as_word(w, alphabet)
    if not is_reduced(w, alphabet):
        raise ValueError("segments are defined for reduced words only")
    out: list[tuple[str, int]] = []
    for base, sign in w:
        if out and out[-1][0] == base:
            out[-1] = (base, out[-1][1] + sign)
        else:
            out.append((base, sign))
    return out


@dataclass(frozen=True)
class Morpheme:
    word: Word
    start: int
    end: int

    def __len__(self) -> int:
        return len(self.word)


def find_morpheme(group: Group, labeling: Mapping[str, int], w: WordLike,
                  involutions: Iterable[str] = ()) -> Morpheme:
    """Leftmost shortest contiguous subword of w that evaluates to the identity."""
    alphabet = Alphabet(frozenset(involutions), dict(labeling), group)
    w = as_word(w, alphabet)
    if not w:
        raise ValueError("empty word has no morpheme")
    if not is_reduced(w, alphabet):
        raise ValueError("word is not reduced")
    prefix = [group.identity]
    for a in w:
        prefix.append(group.mul[prefix[-1]][alphabet.letter_value(a)])
    if prefix[-1] != group.identity:
        raise ValueError("word does not evaluate to the identity")
    last: dict[int, int] = {}
    best: Optional[tuple[int, int]] = None
    for j, p in enumerate(prefix):
        if p in last:
            i = last[p]
            if best is None or j - i < best[1] - best[0]:
                best = (i, j)
        last[p] = j
    assert best is not None
    i, j = best
    return Morpheme(w[i:j], i, j)


def is_morpheme(group: Group, labeling: Mapping[str, int], w: WordLike, involutions: Iterable[str] = ()) -> bool:
    """Evaluates to the identity while no proper nonempty contiguous subword does."""
    alphabet = Alphabet(frozenset(involutions), dict(labeling), group)
    w = as_word(w, alphabet)
    if not w or alphabet.evaluate(w) != group.identity:
        return False
    for i in range(len(w)):
        x = group.identity
        for j in range(i, len(w)):
            x = group.mul[x][alphabet.letter_value(w[j])]
            if x == group.identity and (i, j + 1) != (0, len(w)):
                return False
    return True


# ------------------------------------------------------------ lemma checkers


@dataclass
class WordCheck:
    name: str
    passed: bool
    checked: int = 0
    counterexample: Optional[dict] = None
    detail: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "counterexample": self.counterexample, "detail": self.detail}


def encode(w: Sequence[Letter]) -> str:
    """One character per letter: lower case for +1, upper case for -1 (single-character bases)."""
    return "".join(b if s > 0 else b.upper() for b, s in w)


def _inv_str(s: str, involutions: str = "") -> str:
    return "".join(c if c in involutions else c.swapcase() for c in reversed(s))


def _cyclic_windows(s: str, min_len: int = 1):
    n = len(s)
    doubled = s + s
    for start in range(n):
        for length in range(min_len, n + 1):
            yield start, doubled[start:start + length]


def check_no_squares(n_max: int) -> WordCheck:
    """No cyclic window of length four in u_n is a square word."""
    squares = {encode(w) for w in square_words()}
    checked = 0
    for n in range(1, n_max + 1):
        s = encode(iterated_commutator_word("g", "h", n))
        doubled = s + s[:3]
        for i in range(len(s)):
            checked += 1
            if doubled[i:i + 4] in squares:
                return WordCheck("no-squares", False, checked, {"n": n, "start": i, "word": doubled[i:i + 4]})
    return WordCheck("no-squares", True, checked)


def check_magic_lemma(n_max: int) -> WordCheck:
    """Every cyclic subword of u_n of length at least four is magic.

    Each adjacent pair of the cyclic word contributes the magic patterns it
    realises directly or after inversion; windows grow one pair at a time.
    """
    pats = [encode(p) for p in magic_patterns()]
    checked = 0
    for n in range(1, n_max + 1):
        s = encode(iterated_commutator_word("g", "h", n))
        L = len(s)
        contrib = []
        for i in range(L):
            pair = s[i] + s[(i + 1) % L]
            bits = 0
            for k, p in enumerate(pats):
                if pair == p or _inv_str(pair) == p:
                    bits |= 1 << k
            contrib.append(bits)
        for start in range(L):
            bits = 0
            for length in range(2, L + 1):
                bits |= contrib[(start + length - 2) % L]
                if length >= 4:
                    checked += 1
                    if bin(bits).count("1") < 3:
                        word = (s + s)[start:start + length]
                        return WordCheck("magic", False, checked, {"n": n, "start": start, "word": word})
    return WordCheck("magic", True, checked)


RECTANGLES = ("ghghghg", "ghGhghG", "GhghGhg")


def check_no_rectangles(n_max: int) -> WordCheck:
    """With h an involution, none of the three rectangle words is a cyclic subword of u_n."""
    alph = Alphabet(frozenset({"h"}))
    checked = 0
    for n in range(1, n_max + 1):
        s = encode(iterated_commutator_word("g", "h", n, alph))
        for pat in RECTANGLES:
            checked += 1
            if len(pat) > len(s):
                continue
            doubled = s + s[:len(pat) - 1]
            for p in (pat, _inv_str(pat, "h")):
                i = doubled.find(p)
                if i >= 0:
                    return WordCheck("no-rectangles", False, checked, {"n": n, "start": i, "word": p})
    return WordCheck("no-rectangles", True, checked)


def commutator_square_word(n: int) -> Word:
    """w_n = [g, h^2]_n."""
    return iterated_commutator_word(("g", 1), (("h", 1), ("h", 1)), n)


def _segment_count(s: str) -> int:
    return sum(1 for i in range(len(s)) if i == 0 or s[i].lower() != s[i - 1].lower())


def _cyclic_contains(pattern: str, s: str) -> bool:
    if len(pattern) > len(s):
        return False
    doubled = s + s[:len(pattern) - 1]
    return pattern in doubled or _inv_str(pattern) in doubled


def _cyclic_class(s: str) -> set[str]:
    out = set()
    for k in range(len(s)):
        rot = s[k:] + s[:k]
        out.add(rot)
        out.add(_inv_str(rot))
    return out


def check_ramsey(n_max: int) -> WordCheck:
    """Cyclic subwords of w_n with at least four segments contain gh^2 or h^2g cyclically, or are the exception."""
    exception = _cyclic_class("GhhGH")
    checked = 0
    for n in range(1, n_max + 1):
        s = encode(commutator_square_word(n))
        if len(s) != 3 * 2 ** n:
            return WordCheck("ramsey", False, checked, {"n": n, "length": len(s)})
        for start, win in _cyclic_windows(s, 4):
            if _segment_count(win) < 4:
                continue
            checked += 1
            if _cyclic_contains("ghh", win) or _cyclic_contains("hhg", win) or win in exception:
                continue
            return WordCheck("ramsey", False, checked, {"n": n, "start": start, "word": win})
    return WordCheck("ramsey", True, checked)


# Expected classes for the linear subwords of h k h g h k^-1 h containing g
# (k lower case for +1, K for -1). grey: shorter than three letters; red: first
# letter inverse to last, so not a morpheme; blue: contains ghk or g^-1hk
# cyclically; teal: cyclic permutation of k h g h k^-1 h; none: the leftover
# gkh / g^-1kh forms.
ZIGZAG3_EXPECTED = {
    "hkhghKh": "red", "hkhghK": "teal", "hkhgh": "red", "hkhg": "blue",
    "khghKh": "teal", "khghK": "red", "khgh": "blue", "khg": "none",
    "hghKh": "red", "hghK": "blue", "hgh": "red", "hg": "grey",
    "ghKh": "blue", "ghK": "none", "gh": "grey", "g": "grey",
}


def zigzag3_classify(s: str) -> str:
    inv = "h"
    if len(s) < 3:
        return "grey"
    if s[0] == _inv_str(s[-1], inv):
        return "red"
    doubled_classes = [_inv_str(p, inv) for p in ("ghk", "Ghk")] + ["ghk", "Ghk"]
    if len(s) >= 3 and any(p in s + s[:2] for p in doubled_classes):
        return "blue"
    rots = set()
    for k in range(len("khghKh")):
        r = "khghKh"[k:] + "khghKh"[:k]
        rots |= {r, _inv_str(r, inv)}
    if s in rots:
        return "teal"
    return "none"


def zigzag3_table_check() -> WordCheck:
    host = "hkhghKh"
    subwords = sorted({host[i:j] for i in range(len(host)) for j in range(i + 1, len(host) + 1) if "g" in host[i:j]},
                      key=lambda t: (host.index(t), -len(t)))
    exceptions = set()
    for base in ("khghKh", "gkh", "Gkh"):
        for k in range(len(base)):
            r = base[k:] + base[:k]
            exceptions |= {r, _inv_str(r, "h")}
    table = {}
    for sub in subwords:
        cls = zigzag3_classify(sub)
        table[sub] = cls
        if cls == "none" and sub not in exceptions:
            return WordCheck("zigzag3", False, len(table), {"word": sub, "class": cls})
    if table != ZIGZAG3_EXPECTED:
        diff = {k: (table.get(k), v) for k, v in ZIGZAG3_EXPECTED.items() if table.get(k) != v}
        return WordCheck("zigzag3", False, len(table), {"mismatch": diff})
    return WordCheck("zigzag3", True, len(table), detail={"table": table})


def check_commutator_lengths(n_max: int) -> WordCheck:
    """|[g,h]_n| = 2^(n+1) and |[g,h^2]_n| = 3 * 2^n after free reduction."""
    lengths = {}
    for n in range(1, n_max + 1):
        u = len(iterated_commutator_word("g", "h", n))
        w = len(commutator_square_word(n))
        lengths[n] = [u, w]
        if u != 2 ** (n + 1) or w != 3 * 2 ** n:
            return WordCheck("commutator-lengths", False, n, {"n": n, "u": u, "w": w})
    return WordCheck("commutator-lengths", True, n_max, detail={"lengths": lengths})
