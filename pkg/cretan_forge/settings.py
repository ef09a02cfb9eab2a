"""
Django settings for cretan_forge project.
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get('SECRET_KEY', 'cretan-forge-local-only')

DEBUG = os.environ.get('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'matrix_lab',
]

# No models; the test runner still needs a database.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    }
}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Reports
CRETAN_FORGE_JSON = os.environ.get('CRETAN_FORGE_JSON', '').lower() in ('1', 'true', 'yes')
FORGE_REPORT_SCHEMA = 1

# Scan / render defaults
FORGE_SCAN_WORKERS = int(os.environ.get('FORGE_SCAN_WORKERS', '1'))
FORGE_PORTRAIT_SCALE = int(os.environ.get('FORGE_PORTRAIT_SCALE', '1'))

# Logging
FORGE_LOG_LEVEL = os.environ.get('FORGE_LOG_LEVEL', 'WARNING').upper()

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
        'matrix_lab': {
            'handlers': ['console'],
            'level': FORGE_LOG_LEVEL,
            'propagate': False,
        },
    },
}
