"""
Service model produced by the WSDL parser.

A service is reduced to its portType operations; each operation keeps the
parameter trees of its input and output messages. Values are frozen so parsed
services can be shared between worker processes and used as cache keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator


class NodeKind(str, Enum):
    SIMPLE = "simple"
    COMPLEX = "complex"


@dataclass(frozen=True)
class ParamNode:
    """One element of a parameter tree (leaves are simple-type elements)."""
    name: str
    kind: NodeKind
    children: tuple[ParamNode, ...] = ()

    @classmethod
    def leaf(cls, name: str) -> ParamNode:
        return cls(name, NodeKind.SIMPLE)

    @classmethod
    def complex(cls, name: str, children) -> ParamNode:
        return cls(name, NodeKind.COMPLEX, tuple(children))

    @classmethod
    def empty(cls, name: str = "") -> ParamNode:
        """Root of an operation side with no parameters."""
        return cls(name, NodeKind.COMPLEX, ())

    @property
    def is_leaf(self) -> bool:
        return self.kind is NodeKind.SIMPLE

    def leaves(self) -> Iterator[ParamNode]:
        for child in self.children:
            if child.is_leaf:
                yield child
            else:
                yield from child.leaves()


@dataclass(frozen=True)
class OperationDef:
    """A portType operation, f : D → A."""
    name: str
    input: ParamNode = field(default_factory=ParamNode.empty)
    output: ParamNode = field(default_factory=ParamNode.empty)


@dataclass(frozen=True)
class ServiceDescription:
    name: str
    operations: tuple[OperationDef, ...]
    source_uri: str = ""

    def leaf_count(self) -> int:
        return sum(
            sum(1 for _ in op.input.leaves()) + sum(1 for _ in op.output.leaves())
            for op in self.operations
        )


@dataclass(frozen=True)
class FlattenedParamSet:
    """Root-to-leaf paths of a parameter tree, one token sentence per leaf."""
    sentences: tuple[tuple[str, ...], ...] = ()

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    def __bool__(self) -> bool:
        return bool(self.sentences)

    def tokens(self) -> Iterator[str]:
        for sentence in self.sentences:
            yield from sentence
