"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class TdtError(Exception):
    """Base class for all errors raised by this package."""


class LengthNotMultipleOfWidth(TdtError):
    """Raw byte length is not divisible by the word width."""


class PositionOutOfRange(TdtError):
    """Byte position outside 1..n for the view's width."""


class EmptyInput(TdtError):
    """Operation requires at least one byte of input."""


class KTooLargeForData(TdtError):
    """Context order k leaves no (context, symbol) pairs in the data."""


class TooFewGroups(TdtError):
    """Clustering needs at least two byte groups."""


class KOutOfRange(TdtError):
    """Requested cluster count outside 1..n."""


class WidthMismatch(TdtError):
    """Word width disagrees between two objects that must share it."""


class InconsistentLengths(TdtError):
    """Packed stream lengths do not match the plan and value count."""


class UnknownCodec(TdtError):
    """Codec id or name is not present in the registry."""


class DuplicateId(TdtError):
    """Codec id or name is already registered."""


class CorruptStream(TdtError):
    """Compressed stream failed validation during decoding.

    Carries optional ``offset`` (byte position inside the stream where the
    problem was detected) and ``block``/``cluster`` coordinates when the
    stream came out of a container.
    """

    def __init__(self, message: str, *, offset: int | None = None,
                 block: int | None = None, cluster: int | None = None):
        parts = [message]
        if offset is not None:
            parts.append(f"offset={offset}")
        if block is not None:
            parts.append(f"block={block}")
        if cluster is not None:
            parts.append(f"cluster={cluster}")
        super().__init__(", ".join(parts))
        self.offset = offset
        self.block = block
        self.cluster = cluster


class BadMagic(TdtError):
    """Input is not a container (magic bytes missing)."""


class UnsupportedVersion(TdtError):
    """Container version is newer than this implementation understands."""


class MissingProfile(TdtError):
    """Static mode requested a (category, width) with no registered profile."""
