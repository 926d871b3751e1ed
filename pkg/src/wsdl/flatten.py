"""
Tree flattening: every leaf becomes one sentence made of the tokenized names
on its path. The root is the set's name and is not part of any sentence.
"""

from __future__ import annotations

from typing import Callable

from src.logger import logger
from src.text import tokenize_identifier
from src.wsdl.model import FlattenedParamSet, ParamNode

Tokenizer = Callable[[str], list[str]]


def flatten(tree: ParamNode, tokenizer: Tokenizer = tokenize_identifier) -> FlattenedParamSet:
    """
    Flatten a parameter tree into path sentences.

    Examples:
        root -> temperature                  => [["temperature"]]
        root -> address -> street, zipCode   => [["address", "street"],
                                                 ["address", "zip", "code"]]
    """
    sentences: list[tuple[str, ...]] = []

    def walk(node: ParamNode, prefix: tuple[str, ...]) -> None:
        tokens = prefix + tuple(tokenizer(node.name))
        if node.is_leaf:
            if tokens:
                sentences.append(tokens)
            else:
                logger.debug(f"Skipping leaf {node.name!r}: no word tokens on its path")
            return
        for child in node.children:
            walk(child, tokens)

    for child in tree.children:
        walk(child, ())
    return FlattenedParamSet(tuple(sentences))
