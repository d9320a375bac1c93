"""JSON documents for algebra element expansions.

Schema (stable):
    {"k": int,
     "index": [int, ...] | {"rows": int, "cols": int},
     "terms": [{"window": [int, ...], "word": [int, ...], "coeff": int}, ...]}

Terms are sorted by window, lexicographically.  The window is the
authoritative key; the word is carried for readability and must be a
reduced word for it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .affine import AffinePermutation
from .nilcoxeter import AlgebraElement
from .rectangles import Rectangle

Index = Union[tuple[int, ...], Rectangle]


@dataclass(frozen=True)
class Term:
    window: tuple[int, ...]
    word: tuple[int, ...]
    coeff: int


@dataclass(frozen=True)
class ExpansionDocument:
    k: int
    index: Index
    terms: tuple[Term, ...]

    @classmethod
    def from_element(cls, index: Index, element: AlgebraElement) -> "ExpansionDocument":
        terms = tuple(
            Term(window=w.window, word=w.reduced_word(), coeff=c)
            for w, c in element.items()
        )
        return cls(k=element.k, index=index, terms=terms)

    def to_element(self) -> AlgebraElement:
        return AlgebraElement(
            self.k,
            [(AffinePermutation(self.k, t.window), t.coeff) for t in self.terms],
        )

    def to_dict(self) -> dict:
        if isinstance(self.index, Rectangle):
            index = {"rows": self.index.rows, "cols": self.index.cols}
        else:
            index = list(self.index)
        return {
            "k": self.k,
            "index": index,
            "terms": [
                {"window": list(t.window), "word": list(t.word), "coeff": t.coeff}
                for t in self.terms
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "ExpansionDocument":
        k = data["k"]
        raw_index = data["index"]
        if isinstance(raw_index, dict):
            index: Index = Rectangle(k, cols=raw_index["cols"], rows=raw_index["rows"])
        else:
            index = tuple(raw_index)
        terms = []
        for t in data["terms"]:
            window = tuple(t["window"])
            word = tuple(t["word"])
            coeff = t["coeff"]
            w = AffinePermutation(k, window)
            if coeff == 0:
                raise ValueError("zero coefficient in document")
            if AffinePermutation.from_word(k, word) != w or len(word) != w.length():
                raise ValueError(f"word {word} is not reduced for window {window}")
            terms.append(Term(window=window, word=word, coeff=coeff))
        return cls(k=k, index=index, terms=tuple(terms))

    @classmethod
    def from_json(cls, text: str) -> "ExpansionDocument":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        if isinstance(self.index, Rectangle):
            head = f"k={self.k} rectangle cols={self.index.cols} rows={self.index.rows}"
        else:
            head = f"k={self.k} partition=({','.join(map(str, self.index))})"
        lines = [f"{head} terms={len(self.terms)}"]
        for t in self.terms:
            word = " ".join(f"u{i}" for i in t.word) or "1"
            window = ",".join(map(str, t.window))
            lines.append(f"{t.coeff:+d}  {word}  window=[{window}]")
        return "\n".join(lines)
