"""Exception types shared across the toolkit."""


class EbmError(Exception):
    """Base class for all ebmkit errors."""


class ShapeError(EbmError):
    """An operation received tensors with incompatible dimensions."""


class TapeError(EbmError):
    """Misuse of the gradient tape (non-scalar output, reuse, off-tape tensor)."""


class CheckpointError(EbmError):
    """A checkpoint file is missing, corrupt, truncated, or of an unknown version."""


class SamplingError(EbmError):
    """A Langevin chain produced a non-finite gradient or an out-of-range sample.

    ``batch_index`` identifies the first offending sample in the batch, when known.
    """

    def __init__(self, message: str, batch_index: int | None = None):
        super().__init__(message)
        self.batch_index = batch_index


class DivergenceError(EbmError):
    """Training produced a non-finite loss.  Carries a diagnostic snapshot of
    the real/fake energies of the offending batch."""

    def __init__(self, message: str, real_energies=None, fake_energies=None):
        super().__init__(message)
        self.real_energies = real_energies
        self.fake_energies = fake_energies


class DatasetError(EbmError):
    """Dataset files and manifest disagree, or an image file is malformed."""
