"""
Error hierarchy shared by services, repositories and the forge command
"""


class ForgeError(Exception):
    """Base class for every failure raised by matrix_lab"""


class RadicandMismatchError(ForgeError, ValueError):
    """Two quadratic numbers adjoin different square roots"""

    def __init__(self, left: int, right: int):
        super().__init__(f"radicand mismatch: sqrt({left}) vs sqrt({right})")
        self.left = left
        self.right = right


class CertificateError(ForgeError):
    """An exact verification failed; `certificate` names the broken check"""

    def __init__(self, certificate: str):
        super().__init__(certificate)
        self.certificate = certificate


class InfeasibleError(ForgeError):
    """A construction has no admissible input or no admissible solution"""


class MatrixFormatError(ForgeError, ValueError):
    """Input text could not be parsed as any known matrix format"""
