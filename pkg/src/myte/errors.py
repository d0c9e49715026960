"""Exception and warning types shared across the package."""


class MyteError(Exception):
    """Base class for every error raised by this package."""


class FormatError(MyteError):
    """A model, table, or lexicon file does not parse as its declared version."""


# --- codepage ---------------------------------------------------------------

class RankOverflow(MyteError):
    """Rank beyond the 64 + 4096 + 262,144 codepoint slots of a script group."""


class GroupOverflow(MyteError):
    """A script group was handed more morphemes than it has codepoint slots."""

    def __init__(self, group: int, count: int):
        super().__init__(
            f"script group {group} holds {count} morphemes, capacity is 266304"
        )
        self.group = group
        self.count = count


# --- morphology -------------------------------------------------------------

class EmptyModel(MyteError):
    """Loss evaluation on a model with no morphemes."""


class EmptyLexicon(MyteError):
    """Training requested on a lexicon with no entries."""


class UnreachableTargetWarning(UserWarning):
    """Even the extreme loss weights cannot bracket the morpheme-count target."""


# --- corpus -----------------------------------------------------------------

class EmptyCorpus(MyteError):
    """The corpus stream yielded no tokens."""


# --- transcoder -------------------------------------------------------------

class InvalidUtf8(MyteError):
    """Input handed to the encoder is not well-formed UTF-8."""


class TranscodeError(MyteError):
    """Structural error in a byte stream, with the offending offset."""

    message = "transcode error"

    def __init__(self, offset: int):
        super().__init__(f"{self.message} at offset {offset}")
        self.offset = offset


class UnknownCodepoint(TranscodeError):
    message = "morpheme codepoint not present in the codec table"


class TruncatedCodepoint(TranscodeError):
    message = "stream ends inside a multibyte codepoint"


class MalformedContinuation(TranscodeError):
    message = "byte outside 80-BF where a continuation byte is required"


class DanglingMarker(TranscodeError):
    message = "capitalization marker not followed by an uppercasable codepoint"


# --- metrics ----------------------------------------------------------------

class MissingPivot(MyteError):
    """The parallel corpus does not contain the pivot language."""


class UnlabeledLanguage(MyteError):
    """A report language has no entry in the language-group labels."""


class LengthMismatch(MyteError):
    """Parallel inputs disagree on the number of sentences."""


class PositiveLogProb(MyteError):
    """A log-probability stream contains a value greater than zero."""
