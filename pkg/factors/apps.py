from django.apps import AppConfig
import logging

logger = logging.getLogger(__name__)


class FactorsConfig(AppConfig):
    name = 'factors'
    verbose_name = 'Path factors'

    def ready(self):
        from .conf import strict_checks
        logger.debug(f"Factors app ready (strict checks {'on' if strict_checks() else 'off'})")
