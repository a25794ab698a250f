from django.apps import AppConfig


class DecompConfig(AppConfig):
    name = 'decomp'
    verbose_name = 'Functional decomposition'
