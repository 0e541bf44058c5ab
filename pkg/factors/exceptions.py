"""
Error types raised by the path-factor toolkit.

Each type maps to one CLI exit code (see factors.management.reporting).
"""


class GraphError(ValueError):
    """Invalid input: malformed graph text, bad vertex, cap exceeded, bad parameters."""


class InconsistencyError(RuntimeError):
    """Two routes that must agree did not (criterion vs oracle, witness re-check)."""


class BudgetExhausted(RuntimeError):
    """A factor search visited more nodes than its budget allows."""

    def __init__(self, budget: int, nodes: int):
        super().__init__(f"budget exhausted: {nodes} search nodes exceeded budget {budget}")
        self.budget = budget
        self.nodes = nodes
