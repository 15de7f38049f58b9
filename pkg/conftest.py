import os

import django
from django.test.utils import setup_test_environment


def pytest_configure(config):
    os.environ.setdefault('DJANGO_SETTINGS_MODULE',
                          'polyrec_backend.settings')
    django.setup()
    setup_test_environment()
