"""
Exception hierarchy.

Library modules raise these; ``src.cli`` maps them to exit codes.
"""

from __future__ import annotations


class WsSimError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(WsSimError, ValueError):
    """Invalid configuration value (weights, thresholds, output format)."""


# ── WSDL parsing ──────────────────────────────────────────────────────────

class WsdlError(WsSimError, ValueError):
    """The document could not be reduced to a service description."""


class MalformedXml(WsdlError):
    pass


class NotWsdl(WsdlError):
    pass


class NoOperations(WsdlError):
    pass


class UnresolvableTypeRef(WsdlError):
    def __init__(self, qname: str):
        super().__init__(f"Type or element not found in schema: {qname}")
        self.qname = qname


# ── Lexicon ───────────────────────────────────────────────────────────────

class LexiconError(WsSimError):
    """WordNet database could not be loaded."""


class MissingFile(LexiconError):
    def __init__(self, path):
        super().__init__(f"WordNet file not found: {path}")
        self.path = path


class MalformedRecord(LexiconError):
    def __init__(self, path, line_no: int, detail: str = ""):
        message = f"Malformed record in {path} at line {line_no}"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.path = path
        self.line_no = line_no


class DanglingOffset(LexiconError):
    def __init__(self, pos: str, offset: int, referrer: str = ""):
        message = f"Synset offset {offset:08d} ({pos}) does not exist"
        if referrer:
            message += f" (referenced from {referrer})"
        super().__init__(message)
        self.pos = pos
        self.offset = offset


class HypernymCycle(LexiconError):
    pass


# ── Set similarity ────────────────────────────────────────────────────────

class EmptySet(WsSimError, ValueError):
    pass


class EmptySentence(WsSimError, ValueError):
    pass


# ── Evaluation ────────────────────────────────────────────────────────────

class EvaluationError(WsSimError):
    pass


class OutOfRange(EvaluationError, ValueError):
    pass


class EmptyList(EvaluationError, ValueError):
    pass


class MissingScore(EvaluationError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "missing score"


class UnknownServiceId(EvaluationError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown service id"


class LabelFormatError(EvaluationError, ValueError):
    pass
