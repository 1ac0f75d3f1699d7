"""Tokenization, stemming glue, n-gram tables and the classifier vocabulary.

Word tokens deliberately exclude hashtags, mentions and URLs: those are
counted separately as entities so word statistics stay purely textual.
"""

import re
from collections import Counter
from dataclasses import dataclass, field

from . import porter

MAX_NGRAM = 4

_URL_RE = re.compile(r"(?:https?://|t\.co/)\S*")
_MENTION_RE = re.compile(r"@[A-Za-z0-9_]+")
_HASHTAG_RE = re.compile(r"#[A-Za-z0-9_]+")
_NON_TOKEN_RE = re.compile(r"[^a-z0-9']+")


@dataclass(frozen=True)
class Document:
    """A cleaned, tokenized tweet ready for scoring and classification."""

    record_id: str
    tokens: tuple
    char_length: int

    def with_tokens(self, tokens):
        return Document(self.record_id, tuple(tokens), self.char_length)


def tokenize(text):
    """Lowercase word tokens of ``text``.

    URLs, @mentions and #hashtags are stripped before splitting; the split
    is on any character outside [a-z0-9'], and leading/trailing apostrophes
    are trimmed. Purely numeric tokens are kept.
    """
    text = _URL_RE.sub(" ", text)
    text = _MENTION_RE.sub(" ", text)
    text = _HASHTAG_RE.sub(" ", text)
    tokens = []
    for raw in _NON_TOKEN_RE.split(text.lower()):
        token = raw.strip("'")
        if token:
            tokens.append(token)
    return tokens


def stem(token):
    """Stem one lowercase token (Porter rules)."""
    return porter.stem(token)


def make_document(record_id, text, char_length=None):
    """Tokenize ``text`` into a Document.

    ``char_length`` defaults to ``len(text)``; pass the original tweet length
    explicitly when ``text`` has already been rewritten (e.g. masked).
    """
    if char_length is None:
        char_length = len(text)
    return Document(str(record_id), tuple(tokenize(text)), char_length)


def stem_document(doc):
    """Copy of ``doc`` with every token stemmed."""
    return doc.with_tokens(porter.stem(t) for t in doc.tokens)


@dataclass
class NGramTable:
    """Sliding-window counts of n-token sequences."""

    n: int
    counts: dict = field(default_factory=dict)

    def total(self):
        return sum(self.counts.values())


def ngrams(tokens, n):
    """Count the n-token windows of a single token list."""
    if not 1 <= n <= MAX_NGRAM:
        raise ValueError(f"n must be in 1..{MAX_NGRAM}, got {n}")
    counts = Counter(
        tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)
    )
    return NGramTable(n, dict(counts))


def top_ngrams(corpus, n, k, min_freq=1):
    """Ranked (sequence, frequency) pairs aggregated over ``corpus``.

    Windows never cross document boundaries. Sorted by descending frequency
    with lexicographic tie-break, entries below ``min_freq`` dropped, at most
    ``k`` results.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if min_freq < 1:
        raise ValueError("min_freq must be >= 1")
    totals = Counter()
    for doc in corpus:
        totals.update(ngrams(doc.tokens, n).counts)
    ranked = sorted(
        ((seq, freq) for seq, freq in totals.items() if freq >= min_freq),
        key=lambda item: (-item[1], item[0]),
    )
    return ranked[:k]


@dataclass(frozen=True)
class Vocabulary:
    """Fixed word list ordered by descending corpus frequency."""

    words: tuple
    index: dict

    def __len__(self):
        return len(self.words)

    def __contains__(self, word):
        return word in self.index

    @classmethod
    def from_words(cls, words):
        words = tuple(words)
        return cls(words, {w: i for i, w in enumerate(words)})


def build_vocabulary(corpus, max_size):
    """Top ``max_size`` tokens of ``corpus`` by frequency (ties lexicographic)."""
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    freq = Counter()
    for doc in corpus:
        freq.update(doc.tokens)
    ranked = sorted(freq.items(), key=lambda item: (-item[1], item[0]))
    return Vocabulary.from_words(w for w, _ in ranked[:max_size])
