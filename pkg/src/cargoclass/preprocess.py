"""Deterministic text-normalisation pipeline.

Turns a raw content string (a cargo manifest line, a taxonomy heading) into a
list of lowercase alphanumeric tokens: lowercase, expand contractions, replace
non-alphanumeric characters with spaces, split on whitespace, drop stopwords,
and optionally reduce word endings with a small rule-based suffix stripper.
Every stage is a pure function, so the pipeline is safe to call from any
number of workers.
"""

import re
from dataclasses import dataclass
from typing import Iterable

# Compact English stopword list. Pinned here (rather than pulled from an NLP
# package) so that identical inputs produce identical tokens on every install;
# override per run via PipelineConfig.stopword_list / load_stopwords().
DEFAULT_STOPWORDS = frozenset("""
a about above after again all am an and any are as at be because been before
being below between both but by cannot could did do does doing down during
each few for from further had has have having he her here hers herself him
himself his how i if in into is it its itself just me more most my myself no
nor not now of off on once only or other our ours ourselves out over own same
she should so some such than that the their theirs them themselves then there
these they this those through to too under until up very was we were what
when where which while who whom why will with would you your yours yourself
yourselves
""".split())

# Ordered contraction table: exact irregular forms first, then suffix rules.
_EXACT_CONTRACTIONS = (
    ("can't", "cannot"),
    ("won't", "will not"),
    ("shan't", "shall not"),
)
_SUFFIX_CONTRACTIONS = (
    ("n't", " not"),
    ("'re", " are"),
    ("'ve", " have"),
    ("'ll", " will"),
    ("'d", " would"),
    ("'m", " am"),
    ("'s", " is"),
)
_EXACT_PATTERNS = tuple(
    (re.compile(r"\b%s\b" % re.escape(src)), dst) for src, dst in _EXACT_CONTRACTIONS
)

_NON_ALNUM = re.compile(r"[^A-Za-z0-9]+")
_WHITESPACE = re.compile(r"\s+")


@dataclass(frozen=True)
class PipelineConfig:
    """Switches and word lists controlling the preprocessing stages."""

    lowercase: bool = True
    decontract: bool = True
    strip_non_alphanumeric: bool = True
    stopword_list: frozenset = DEFAULT_STOPWORDS
    lemmatize: bool = True
    min_token_len: int = 1

    def __post_init__(self):
        if self.min_token_len < 1:
            raise ValueError("min_token_len must be >= 1")
        for word in self.stopword_list:
            if not word or word != word.lower() or word.split() != [word]:
                raise ValueError(
                    f"stopword {word!r} must be lowercase, non-empty and "
                    "contain no whitespace"
                )

    def to_dict(self) -> dict:
        return {
            "lowercase": self.lowercase,
            "decontract": self.decontract,
            "strip_non_alphanumeric": self.strip_non_alphanumeric,
            "stopword_list": sorted(self.stopword_list),
            "lemmatize": self.lemmatize,
            "min_token_len": self.min_token_len,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PipelineConfig":
        return cls(
            lowercase=bool(data["lowercase"]),
            decontract=bool(data["decontract"]),
            strip_non_alphanumeric=bool(data["strip_non_alphanumeric"]),
            stopword_list=frozenset(data["stopword_list"]),
            lemmatize=bool(data["lemmatize"]),
            min_token_len=int(data["min_token_len"]),
        )


DEFAULT_CONFIG = PipelineConfig()


def load_stopwords(path) -> frozenset:
    """Read a stopword override file: one word per line, '#' lines ignored.

    Words are lowercased on the way in; a line with embedded whitespace is an
    error because such an entry could never match a single token.
    """
    words = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            word = line.strip()
            if not word or word.startswith("#"):
                continue
            if word.split() != [word]:
                raise ValueError(
                    f"{path}: line {lineno}: stopword entry {word!r} "
                    "contains whitespace"
                )
            words.add(word.lower())
    return frozenset(words)


def decontract(text: str) -> str:
    """Expand English contractions in lowercase text via a fixed ordered table.

    Exact irregular forms are replaced first ("can't" -> "cannot"), then
    suffix rules ("n't" -> " not", "'re" -> " are", ...). Text without
    contractions passes through unchanged.
    """
    for pattern, replacement in _EXACT_PATTERNS:
        text = pattern.sub(replacement, text)
    for suffix, replacement in _SUFFIX_CONTRACTIONS:
        text = text.replace(suffix, replacement)
    return text


def clean_text(raw: str, cfg: PipelineConfig = DEFAULT_CONFIG) -> str:
    """Normalise raw text: lowercase, expand contractions, drop punctuation.

    Non-alphanumeric characters (including newlines and tabs) become single
    spaces, runs of whitespace collapse to one space, and the result is
    trimmed. Total on any Unicode string; empty input yields empty output.
    """
    text = raw
    if cfg.lowercase:
        text = text.lower()
    if cfg.decontract:
        # Curly apostrophes appear in real manifests; fold them before the
        # contraction table, which is written with straight quotes.
        text = decontract(text.replace("’", "'"))
    if cfg.strip_non_alphanumeric:
        text = _NON_ALNUM.sub(" ", text)
    return _WHITESPACE.sub(" ", text).strip()


def tokenize(text: str, cfg: PipelineConfig = DEFAULT_CONFIG) -> list:
    """Split cleaned text on whitespace into unigram tokens.

    Tokens shorter than cfg.min_token_len are dropped. Empty text gives [].
    """
    return [tok for tok in text.split() if len(tok) >= cfg.min_token_len]


def remove_stopwords(tokens: Iterable[str], cfg: PipelineConfig = DEFAULT_CONFIG) -> list:
    """Drop every token that appears in cfg.stopword_list, keeping order."""
    return [tok for tok in tokens if tok not in cfg.stopword_list]


def lemmatize_token(token: str) -> str:
    """Reduce one lowercase token with ordered suffix rules.

    Rules, applied in sequence to the evolving token:
      1. "...ies" -> "...y"
      2. strip a final "s" when the token is longer than 3 characters and
         does not end in "ss", "us" or "is"
      3. strip a final "ing" or "ed" when the remaining stem has at least 3
         characters (no attempt to restore a doubled consonant)

    This is a deliberately approximate reducer: it maps "blogging" to "blogg",
    not to a dictionary lemma. Query and taxonomy text pass through the same
    rules, so cosine matching sees consistent stems on both sides.
    """
    if token.endswith("ies"):
        token = token[:-3] + "y"
    if (
        token.endswith("s")
        and len(token) > 3
        and not token.endswith(("ss", "us", "is"))
    ):
        token = token[:-1]
    for suffix in ("ing", "ed"):
        if token.endswith(suffix) and len(token) - len(suffix) >= 3:
            token = token[: -len(suffix)]
            break
    return token


def lemmatize(tokens: Iterable[str]) -> list:
    return [lemmatize_token(tok) for tok in tokens]


def preprocess(raw: str, cfg: PipelineConfig = DEFAULT_CONFIG) -> list:
    """Full pipeline: clean_text -> tokenize -> remove_stopwords -> lemmatize.

    Deterministic: identical input and config always produce identical tokens.
    """
    tokens = remove_stopwords(tokenize(clean_text(raw, cfg), cfg), cfg)
    if cfg.lemmatize:
        tokens = lemmatize(tokens)
    return tokens
