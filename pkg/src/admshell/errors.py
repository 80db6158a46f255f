"""Exception hierarchy.

Budget-style errors (caps, search limits) are kept apart from theory
violations so the CLI can map them onto different exit codes.
"""


class AdmShellError(Exception):
    pass


class ConfigError(AdmShellError):
    """Malformed input: unknown Cartan type, bad lattice, bad element text."""


class UnknownType(ConfigError):
    pass


class InvalidLattice(ConfigError):
    pass


class NotDominant(ConfigError):
    pass


class MixedDatum(AdmShellError):
    pass


class IncomparableCosets(AdmShellError):
    pass


class NotAcute(AdmShellError):
    pass


class NotInAdm(AdmShellError):
    pass


class NotACover(AdmShellError):
    pass


class NotSpherical(ConfigError):
    pass


class BudgetError(AdmShellError):
    pass


class GroupTooLarge(BudgetError):
    pass


class CapExceeded(BudgetError):
    pass


class ChainCapExceeded(BudgetError):
    pass


class SearchBudgetExceeded(BudgetError):
    pass


class TheoryViolation(AdmShellError):
    """A statement proved in the literature failed on concrete data.

    Never swallowed: these indicate either a bug here or a counterexample.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotUnique(TheoryViolation):
    pass


class NoWitness(TheoryViolation):
    pass


class MinNotUnique(TheoryViolation):
    pass


class WitnessMismatch(TheoryViolation):
    pass


class CaseClassificationFailed(TheoryViolation):
    pass
