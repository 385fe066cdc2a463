class CharLociError(Exception):
    """ Base class for all exceptions raised by charloci. """
    exit_code = 1

    def __str__(self):
        if self.args:
            return str(self.args[0])

        return ' '.join(self.__doc__.split())


class ParseError(CharLociError):
    """ Input could not be parsed. """
    exit_code = 1

    def __init__(self, message=None, line=None, column=None):
        super(ParseError, self).__init__(*([message] if message else []))
        self.line = line
        self.column = column

    def __str__(self):
        msg = super(ParseError, self).__str__()
        if self.line is not None:
            return '{0} (line {1}, column {2})'.format(msg, self.line,
                                                      self.column)

        return msg


class RingMismatch(CharLociError):
    """ Operands live in different polynomial rings. """
    exit_code = 1


class TorusMismatch(CharLociError):
    """ Objects live on different character tori. """
    exit_code = 1


class ZeroValue(CharLociError):
    """ A character coordinate or subtorus value is zero. """
    exit_code = 1


class NotSurjective(CharLociError):
    """ Lattice map is not surjective over the integers. """
    exit_code = 1


class NonCommuting(CharLociError):
    """ Monodromy matrices do not commute. """
    exit_code = 1


class NonInvertible(CharLociError):
    """ Monodromy matrix is not invertible. """
    exit_code = 1


class InvalidComplex(CharLociError):
    """ Differentials have wrong shapes or do not square to zero. """
    exit_code = 1


class NotAChainMap(CharLociError):
    """ Map does not commute with the differentials. """
    exit_code = 1


class NotReflexive(CharLociError):
    """ Module is not isomorphic to its double dual. """
    exit_code = 1


class PreconditionFailed(CharLociError):
    """ Input does not satisfy the precondition of the operation. """
    exit_code = 1


class ResolutionTooLong(CharLociError):
    """ Kernel is still nonzero at the maximal resolution length. """
    exit_code = 1


class UnknownExample(CharLociError):
    """ No bundled example with this name. """
    exit_code = 1


class VerificationFailed(CharLociError):
    """ One or more verification checks failed. """
    exit_code = 2

    def __init__(self, failures=None):
        super(VerificationFailed, self).__init__()
        self.failures = list(failures or [])

    def __str__(self):
        return '{0} check(s) failed.'.format(len(self.failures))


error_name_to_exception_map = dict(
    (cls.__name__, cls) for cls in [
        CharLociError, ParseError, RingMismatch, TorusMismatch, ZeroValue,
        NotSurjective, NonCommuting, NonInvertible, InvalidComplex,
        NotAChainMap, NotReflexive, PreconditionFailed, ResolutionTooLong,
        UnknownExample, VerificationFailed,
    ]
)
