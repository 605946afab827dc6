"""
Django settings for helium_resonator project.

The project has no database and no HTTP surface: it is a command-line model of a
superfluid helium acoustic resonator, driven through management commands.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from dotenv import load_dotenv

load_dotenv()

# Only management commands are used; the key is never exposed.
SECRET_KEY = os.getenv('HELIUM_SECRET_KEY', 'helium-resonator-offline-key')

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'helium_resonator',
]

# No persistence beyond flat files
DATABASES = {}

USE_I18N = False

USE_TZ = True

TIME_ZONE = 'UTC'


# Logging: diagnostics go to stderr, stdout is reserved for command results

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'helium_resonator': {
            'handlers': ['console'],
            'level': os.getenv('HELIUM_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}


# Model settings

RESONATOR_MODEL = {
    # 3PP model validity: warn above, refuse above
    'VALIDITY_WARN_K': 0.5,
    'VALIDITY_MAX_K': 0.7,
    # Q -> T inversion on the monotonic branch of the 3PP model
    'INVERSION_T_MIN_K': 0.005,
    'INVERSION_T_MAX_K': 0.45,
    'BISECTION_MAX_ITER': 200,
    'BISECTION_RTOL': 1e-4,
    # Self-consistent thermal network
    'FIXED_POINT_MAX_ITER': 100,
    'FIXED_POINT_RTOL': 1e-6,
    'FIXED_POINT_RELAXATION': 0.4,
    # Assumed fridge base temperatures behind the quoted heat-leak budgets
    'HEATLEAK_BASE_40MK': 0.020,
    'HEATLEAK_BASE_10MK': 0.006,
    # CSV float formatting
    'CSV_SIGNIFICANT_DIGITS': 9,
}
