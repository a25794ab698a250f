"""forge URL Configuration

Only the JSON API is routed. The command line (``./manage.py decomp``) is the main interface.
"""
from django.urls import path

from .api import api

urlpatterns = [
    path('api/', api.urls),
]
