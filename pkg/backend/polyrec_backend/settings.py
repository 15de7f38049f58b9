import os

from fractions import Fraction
from pathlib import Path

from django.core.management.utils import get_random_secret_key
from dotenv import load_dotenv

from core.constans import (DEFAULT_CAP_PLAIN, DEFAULT_CAP_SYMMETRIC,
                           DEFAULT_ROOT_EPS, DEFAULT_RMAX_CAP)

load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent


SECRET_KEY = os.getenv('SECRET_KEY', get_random_secret_key())

DEBUG = os.getenv('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = os.getenv('ALLOWED_HOSTS', '*').split(',')


INSTALLED_APPS = [
    'rest_framework',

    'core.apps.CoreConfig',
    'polynomials.apps.PolynomialsConfig',
    'recurrences.apps.RecurrencesConfig',
    'moments.apps.MomentsConfig',
    'roots.apps.RootsConfig',
    'limits.apps.LimitsConfig',
    'tableaux.apps.TableauxConfig',
    'api.apps.ApiConfig',
    'cli.apps.CliConfig',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'polyrec_backend.urls'

TEMPLATES = []

WSGI_APPLICATION = 'polyrec_backend.wsgi.application'

# Все вычисления чистые, база данных не используется.
DATABASES = {}

LANGUAGE_CODE = 'ru-RU'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


REST_FRAMEWORK = {
    'DEFAULT_PERMISSION_CLASSES': [
        'rest_framework.permissions.AllowAny',
    ],
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'DEFAULT_PARSER_CLASSES': [
        'rest_framework.parsers.JSONParser',
    ],
    'DEFAULT_PAGINATION_CLASS': 'api.paginators.CustomLimitPagination',
    'PAGE_SIZE': 10,
}


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': os.getenv('LOG_LEVEL', 'WARNING'),
    },
}


# Ограничения полного перебора древовидных таблиц.
TABLEAUX_CAP_PLAIN = int(os.getenv('POLYREC_CAP_PLAIN', DEFAULT_CAP_PLAIN))
TABLEAUX_CAP_SYMMETRIC = int(
    os.getenv('POLYREC_CAP_SYMMETRIC', DEFAULT_CAP_SYMMETRIC))

FACTORIAL_MOMENT_RMAX_CAP = int(
    os.getenv('POLYREC_RMAX_CAP', DEFAULT_RMAX_CAP))

ROOT_EPS = Fraction(os.getenv('POLYREC_ROOT_EPS', DEFAULT_ROOT_EPS))
