"""Exception types shared across the library."""


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class ParseError(ValueError):
    """Input text does not match the documented grammar.

    The ``rule`` attribute names the grammar production that failed, so
    front ends can report which kind of literal was malformed.
    """

    def __init__(self, rule: str, text: str, reason: str = ""):
        self.rule = rule
        self.text = text
        self.reason = reason
        msg = f"cannot parse {rule!r} from {text!r}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)
