"""
Repositories - file formats and portrait images
"""
from .matrix_repositories import LoadedMatrix, MatrixFileRepository
from .portrait_repository import PortraitRepository, gray_level

__all__ = [
    'LoadedMatrix',
    'MatrixFileRepository',
    'PortraitRepository',
    'gray_level',
]
