from django.apps import AppConfig


class MatrixLabConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'matrix_lab'
    verbose_name = 'Cretan / Hadamard matrix lab'
