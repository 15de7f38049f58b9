from django.apps import AppConfig


class PolynomialsConfig(AppConfig):
    name = 'polynomials'
    verbose_name = 'Многочлены'
