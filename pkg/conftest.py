"""Wire Django settings so the suite can run under plain pytest."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'cretan_forge.settings')
django.setup()
