import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'helium_resonator.settings')
django.setup()
