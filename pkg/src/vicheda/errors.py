"""Exception hierarchy shared across the package."""


class VichedaError(Exception):
    """Base class for all errors raised by this package."""


class NonDevanagariInput(VichedaError):
    """Input contains codepoints outside the Devanagari block."""


class MalformedSequence(VichedaError):
    """Input is Devanagari but not a well-formed letter sequence."""


class InputTooShort(VichedaError):
    """Word has fewer than two aksharas and cannot be split."""


class VariantInapplicable(VichedaError):
    """A left-ending transform produced a malformed word; the variant is skipped."""


class NotComposable(VichedaError):
    """A candidate's parts do not fit the rule's composition pattern."""


class FileUnreadable(VichedaError):
    """A lexicon or corpus file could not be read."""


class EmptyLexicon(VichedaError):
    """A lexicon file yielded zero valid entries."""


class EmptyCorpus(VichedaError):
    """A gold corpus file yielded zero valid entries."""
