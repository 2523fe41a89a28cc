"""Exception hierarchy shared by every module."""


class SeqSavageError(Exception):
    """Base class for all library errors."""


class ParseError(SeqSavageError, ValueError):
    def __init__(self, message, text="", pos=None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class UnknownProposition(ParseError):
    pass


class ValidationError(SeqSavageError, ValueError):
    """An action or model breaks a well-formedness constraint."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class BudgetExceeded(SeqSavageError):
    """An enumeration would produce more objects than the configured budget."""

    def __init__(self, what, count, budget):
        self.what = what
        self.count = count
        self.budget = budget
        super().__init__(f"{what}: {count} objects exceeds budget {budget}")


class MissingSelection(SeqSavageError, KeyError):
    def __init__(self, state, effect_atoms):
        self.state = state
        self.effect_atoms = effect_atoms
        super().__init__(f"selection undefined for state {state!r} and effect atoms {list(effect_atoms)}")

    def __str__(self):
        return self.args[0]


class DepthError(SeqSavageError, ValueError):
    pass


class ProvenanceError(SeqSavageError, ValueError):
    """A progress function was not produced by a known action."""


class NotRepresentable(SeqSavageError):
    """No utility table orders the pool correctly; ``certificate`` holds Farkas multipliers."""

    def __init__(self, message, certificate=None):
        self.certificate = certificate
        super().__init__(message)
