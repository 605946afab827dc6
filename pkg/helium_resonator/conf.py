"""Access to the model section of the project settings.

Falls back to the project's own settings module when the library is used
without a configured Django environment.
"""

from typing import Any

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured


def model_setting(name: str) -> Any:
    """Return one entry of ``settings.RESONATOR_MODEL``."""
    try:
        values = settings.RESONATOR_MODEL
    except ImproperlyConfigured:
        from helium_resonator import settings as project_settings
        values = project_settings.RESONATOR_MODEL
    return values[name]
