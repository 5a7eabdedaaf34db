"""Exception hierarchy shared by all modules."""


class CyclocodeError(Exception):
    """Base class for every error raised by the package."""


# finite fields

class FieldError(CyclocodeError):
    pass


class NotPrimeError(FieldError):
    pass


class NotIrreducibleError(FieldError):
    pass


class NotPrimitiveError(FieldError):
    pass


class FieldTooLargeError(FieldError):
    pass


class FieldDivisionByZero(FieldError, ZeroDivisionError):
    pass


class ZeroInputError(CyclocodeError, ValueError):
    pass


# character sums

class LNotDivisorError(CyclocodeError, ValueError):
    pass


class FormulaNotApplicableError(CyclocodeError):
    pass


class UnsupportedCharacterOrderError(CyclocodeError):
    pass


class NonRationalValueError(CyclocodeError, ValueError):
    """A cyclotomic value was expected to be a rational integer but is not."""


class MinusOneNotSquareError(CyclocodeError):
    pass


class NonIntegerResultError(CyclocodeError, ArithmeticError):
    pass


class BudgetExceededError(CyclocodeError):
    pass


# code parameters

class ConditionError(CyclocodeError, ValueError):
    """A code parameter condition failed.

    ``condition`` is one of ``"i"``, ``"ii"``, ``"iii"`` or ``"t"`` (the
    ``2 <= t <= e`` range), and ``datum`` holds the offending value.
    """

    condition = "?"

    def __init__(self, message, datum=None):
        super().__init__(f"condition {self.condition}: {message}")
        self.datum = datum


class ConditionIError(ConditionError):
    condition = "i"


class ConditionIIError(ConditionError):
    condition = "ii"


class ConditionIIIError(ConditionError):
    condition = "iii"


class TRangeError(ConditionError):
    condition = "t"


class RankDeficientError(CyclocodeError):
    pass


class PreconditionsNotMetError(CyclocodeError):
    """A closed-form evaluator was called outside its hypotheses."""

    def __init__(self, failed):
        self.failed = list(failed)
        super().__init__("theorem preconditions not met: " + "; ".join(self.failed))


class NonIntegerWeightError(NonIntegerResultError):
    pass
