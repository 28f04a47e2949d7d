"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed graph, vertex index out of range, unparsable file."""


class ContractViolation(RuntimeError):
    """An internal precondition did not hold (a bug or a misused routine)."""


class ClassViolation(ValueError):
    """The input graph contains a forbidden induced subgraph.

    ``witness`` holds the vertex indices of one occurrence.
    """

    def __init__(self, cls: str, witness: tuple[int, ...]):
        self.cls = cls
        self.witness = tuple(witness)
        super().__init__(f"graph is not {cls}-free: witness {list(self.witness)}")


class OracleCapExceeded(InputError):
    """The brute-force oracle refuses graphs above its vertex cap."""
