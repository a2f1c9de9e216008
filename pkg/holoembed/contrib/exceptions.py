"""
Error Hierarchy

Every failure raised by the library derives from HoloEmbedError. Each class
carries the process exit status the CLI reports for it, the same way an HTTP
API maps exceptions to status codes.

Exit statuses:
- 0 EXIT_OK: every certificate holds
- 1 EXIT_CERTIFICATE_FAILED: a certificate came back false
- 2 EXIT_USAGE: bad command line (argparse errors use the same status)
- 3 EXIT_DOMAIN_ERROR: an operation rejected its input
- 4 EXIT_CONFIG_INVALID: a config or input document could not be read
"""

from typing import Optional

EXIT_OK = 0
EXIT_CERTIFICATE_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN_ERROR = 3
EXIT_CONFIG_INVALID = 4


class HoloEmbedError(Exception):
    """
    Base class for all library errors

    Attributes:
        detail: Human readable description
        path: Dotted config path of the section that failed (set by run_suite)
    """

    exit_status: int = EXIT_DOMAIN_ERROR

    def __init__(self, detail: str, *, path: Optional[str] = None):
        super().__init__(detail)
        self.detail = detail
        self.path = path

    def at(self, section: str) -> 'HoloEmbedError':
        """Prefix the config path with the enclosing section and return self"""
        self.path = f'{section}.{self.path}' if self.path else section
        return self

    def __str__(self) -> str:
        if self.path:
            return f'{self.path}: {self.detail}'
        return self.detail


class NonPositiveWeight(HoloEmbedError):
    """A Köthe weight a(j,n) is not strictly positive"""


class LadderViolation(HoloEmbedError):
    """a(j,n) > a(j+1,n): the seminorms are not increasing"""


class WindowExceeded(HoloEmbedError):
    """A sequence has support outside the materialized window"""


class ZeroFunctional(HoloEmbedError):
    """The dual bound of the zero functional was requested"""


class ExhaustedWithoutPivot(HoloEmbedError):
    """Biorthogonalization ran out of pairs with nonzero residual pairing"""


class InvalidParameter(HoloEmbedError):
    """A family parameter is outside its admissible range"""


class CertificationUnavailable(HoloEmbedError):
    """No certified tail bound exists for the requested (stage, k)"""


class OutsideDomain(HoloEmbedError):
    """An evaluation point or radius leaves the domain"""


class StageMismatch(HoloEmbedError):
    """Objects built at incompatible stages were combined"""


class UsageError(HoloEmbedError):
    """Command line misuse; the message names the flag"""

    exit_status = EXIT_USAGE

    def __init__(self, flag: str, detail: str):
        super().__init__(f'{flag}: {detail}')
        self.flag = flag


class ConfigError(HoloEmbedError):
    """A config or input document is missing or fails validation"""

    exit_status = EXIT_CONFIG_INVALID
