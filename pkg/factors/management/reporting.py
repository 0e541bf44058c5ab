"""
Shared plumbing for the reporting commands: JSON on stdout, diagnostics on
stderr, and one exit code per error type:

    0  verdict computed
    1  invalid input (GraphError)
    2  internal inconsistency (InconsistencyError)
    3  search budget exhausted (BudgetExhausted)
"""

from django.core.management.base import BaseCommand, CommandError

from factors.exceptions import BudgetExhausted, GraphError, InconsistencyError
from factors.serializers import render_json

EXIT_INVALID_INPUT = 1
EXIT_INCONSISTENT = 2
EXIT_BUDGET = 3


class ReportingMixin:

    def emit(self, data):
        self.stdout.write(render_json(data))

    def guarded(self, fn, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except GraphError as e:
            raise CommandError(f"invalid input: {e}", returncode=EXIT_INVALID_INPUT)
        except InconsistencyError as e:
            raise CommandError(f"internal inconsistency: {e}", returncode=EXIT_INCONSISTENT)
        except BudgetExhausted as e:
            raise CommandError(str(e), returncode=EXIT_BUDGET)


class ReportCommand(ReportingMixin, BaseCommand):
    """Subclasses implement report() and return a serializable dict"""

    def report(self, *args, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        self.emit(self.guarded(self.report, *args, **options))
