"""This module defines the error codes and the exceptions raised by the
   restheory package.

   Property checks which are expected to fail on some inputs (validation,
   order preservation, monotonicity) return Verdict objects instead. The
   exceptions here are reserved for broken preconditions.
"""


class ErrorCode:
    """Constants for the error codes carried by a TheoryError."""

    NONE = 0x00
    AXIOM = 0x01                    # Resource theory axiom violated
    NOT_A_PREORDER = 0x02           # Relation not reflexive or not transitive
    D_NOT_DOWNWARD_CLOSED = 0x03
    CARRIER_TOO_LARGE = 0x04        # Materialization would exceed a cap
    BASE_NOT_DETERMINISTIC = 0x05   # Some r (x) s is not a singleton
    F_NOT_MONOTONE_ON_DOMAIN = 0x06
    UNCERTIFIED_MEDIATING_MAP = 0x07
    UNCERTIFIED_INPUT = 0x08        # Missing contraction/commuting certificate
    CLOSURE_MISMATCH = 0x09         # Domain not up/down closed as required
    WINDOW_CLOSURE_MISMATCH = 0x0a
    WDC_NOT_DOWNWARD_CLOSED = 0x0b
    S_NOT_DOWNWARD_CLOSED = 0x0c
    AXIS_WINDOW_MISMATCH = 0x0d
    DIMENSION_MISMATCH = 0x0e
    W_NOT_A_CHAIN = 0x0f
    BAD_PARAMETERS = 0x10
    NOT_ORDER_PRESERVING = 0x11
    NOT_MONOTONE = 0x12
    FORMAT = 0x20                   # Malformed input file

    code_str = {
        NONE:                       'None',
        AXIOM:                      'AxiomViolation',
        NOT_A_PREORDER:             'NotAPreorder',
        D_NOT_DOWNWARD_CLOSED:      'DNotDownwardClosed',
        CARRIER_TOO_LARGE:          'CarrierTooLarge',
        BASE_NOT_DETERMINISTIC:     'BaseNotDeterministic',
        F_NOT_MONOTONE_ON_DOMAIN:   'FNotMonotoneOnDomain',
        UNCERTIFIED_MEDIATING_MAP:  'UncertifiedMediatingMap',
        UNCERTIFIED_INPUT:          'UncertifiedInput',
        CLOSURE_MISMATCH:           'ClosureMismatch',
        WINDOW_CLOSURE_MISMATCH:    'WindowClosureMismatch',
        WDC_NOT_DOWNWARD_CLOSED:    'WdcNotDownwardClosed',
        S_NOT_DOWNWARD_CLOSED:      'SNotDownwardClosed',
        AXIS_WINDOW_MISMATCH:       'AxisWindowMismatch',
        DIMENSION_MISMATCH:         'DimensionMismatch',
        W_NOT_A_CHAIN:              'WNotAChain',
        BAD_PARAMETERS:             'BadParameters',
        NOT_ORDER_PRESERVING:       'NotOrderPreserving',
        NOT_MONOTONE:               'NotMonotone',
        FORMAT:                     'FormatError',
    }

    def __init__(self, error_code):
        self.error_code = error_code

    def __repr__(self):
        """Return a python parsable representation of ourselves."""
        return 'ErrorCode(0x{:02x})'.format(self.error_code)

    def __str__(self):
        """Return a human readable representation of ourselves."""
        if self.error_code in ErrorCode.code_str:
            return ErrorCode.code_str[self.error_code]
        return '0x{:02x}'.format(self.error_code)


class TheoryError(Exception):
    """Base class for the exceptions raised when a precondition fails."""

    error_code = ErrorCode.NONE

    def __init__(self, message='', witness=None):
        super(TheoryError, self).__init__(message)
        self.message = message
        self.witness = witness

    def __str__(self):
        result = str(ErrorCode(self.error_code))
        if self.message:
            result += ': ' + self.message
        if self.witness is not None:
            result += ' (witness: {})'.format(self.witness)
        return result


class AxiomViolation(TheoryError):
    error_code = ErrorCode.AXIOM


class NotAPreorder(TheoryError):
    error_code = ErrorCode.NOT_A_PREORDER


class DNotDownwardClosed(TheoryError):
    error_code = ErrorCode.D_NOT_DOWNWARD_CLOSED


class CarrierTooLarge(TheoryError):
    error_code = ErrorCode.CARRIER_TOO_LARGE


class BaseNotDeterministic(TheoryError):
    error_code = ErrorCode.BASE_NOT_DETERMINISTIC


class FNotMonotoneOnDomain(TheoryError):
    error_code = ErrorCode.F_NOT_MONOTONE_ON_DOMAIN


class UncertifiedMediatingMap(TheoryError):
    error_code = ErrorCode.UNCERTIFIED_MEDIATING_MAP


class UncertifiedInput(TheoryError):
    error_code = ErrorCode.UNCERTIFIED_INPUT


class ClosureMismatch(TheoryError):
    error_code = ErrorCode.CLOSURE_MISMATCH


class WindowClosureMismatch(TheoryError):
    error_code = ErrorCode.WINDOW_CLOSURE_MISMATCH


class WdcNotDownwardClosed(TheoryError):
    error_code = ErrorCode.WDC_NOT_DOWNWARD_CLOSED


class SNotDownwardClosed(TheoryError):
    error_code = ErrorCode.S_NOT_DOWNWARD_CLOSED


class AxisWindowMismatch(TheoryError):
    error_code = ErrorCode.AXIS_WINDOW_MISMATCH


class DimensionMismatch(TheoryError):
    error_code = ErrorCode.DIMENSION_MISMATCH


class WNotAChain(TheoryError):
    error_code = ErrorCode.W_NOT_A_CHAIN


class BadParameters(TheoryError):
    error_code = ErrorCode.BAD_PARAMETERS


class NotOrderPreserving(TheoryError):
    error_code = ErrorCode.NOT_ORDER_PRESERVING


class NotMonotone(TheoryError):
    error_code = ErrorCode.NOT_MONOTONE


class FormatError(TheoryError):
    """Raised for malformed input files. The field is a path like
       'combine["a,b"][1]' locating the offending value.
    """
    error_code = ErrorCode.FORMAT

    def __init__(self, message='', field=None):
        super(FormatError, self).__init__(message)
        self.field = field

    def __str__(self):
        result = str(ErrorCode(self.error_code))
        if self.field:
            result += ' at ' + self.field
        return result + ': ' + self.message
