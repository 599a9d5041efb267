"""Deterministic, counter-based random streams.

A stream is a Philox4x64-10 key derived from (master_seed, stream_id). Each
replication r of a simulation reads its uniforms from counter block
r * blocks_per_replication, so a replication's variates never depend on how
the replications were split between workers.
"""

import hashlib
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from intervallum.errors import DomainError

RNG_ALGORITHM = "philox4x64-10"

# Philox emits four 64-bit words per counter increment
_WORDS_PER_COUNTER = 4

_U64 = 2**64


def _hash_to_int(text: str, n_bytes: int) -> int:
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:n_bytes], "big", signed=False)


def derive_stream_id(*labels: object) -> int:
    """Map an ordered tuple of labels to a stable 64-bit stream id.

    >>> derive_stream_id("cell", "A:1.5", 100) == derive_stream_id("cell", "A:1.5", 100)
    True
    """
    if not labels:
        raise DomainError("at least one label is required to derive a stream id")
    return _hash_to_int(":".join(str(label) for label in labels), 8)


@dataclass(frozen=True)
class RngStream:
    """A reproducible substream of one master seed.

    Attributes:
        master_seed: 64-bit master seed
        stream_id: 64-bit substream identifier (see derive_stream_id)
    """

    master_seed: int
    stream_id: int = 0

    def __post_init__(self) -> None:
        """Validate seed ranges."""
        if not 0 <= self.master_seed < _U64:
            raise DomainError("master_seed must be a 64-bit unsigned integer", {"master_seed": self.master_seed})
        if not 0 <= self.stream_id < _U64:
            raise DomainError("stream_id must be a 64-bit unsigned integer", {"stream_id": self.stream_id})

    @property
    def algorithm(self) -> str:
        return RNG_ALGORITHM

    @property
    def key(self) -> int:
        """128-bit Philox key of this stream."""
        return _hash_to_int(f"{self.master_seed}:{self.stream_id}", 16)

    def substream(self, *labels: object) -> "RngStream":
        """Derive a child stream of the same master seed."""
        return RngStream(self.master_seed, derive_stream_id(self.stream_id, *labels))

    def generator(self, counter: int = 0) -> np.random.Generator:
        """A numpy Generator positioned at the given Philox counter."""
        return np.random.Generator(np.random.Philox(key=self.key, counter=counter))

    def uniforms(self, n: int) -> NDArray[np.float64]:
        """The first n uniforms of the stream; identical on every call."""
        return self.generator().random(n)

    def replication_block(self, n: int, start: int, count: int) -> NDArray[np.float64]:
        """Uniforms for replications start .. start+count-1, one row of n per replication.

        Row j equals what a fresh generator at counter (start + j) * blocks would
        produce, with blocks = ceil(n / 4); any partition of the replication range
        yields the same rows.

        Raises:
            DomainError: If n < 1, start < 0 or count < 0
        """
        if n < 1 or start < 0 or count < 0:
            raise DomainError(
                "invalid replication block",
                {"n": n, "start": start, "count": count},
            )
        blocks = -(-n // _WORDS_PER_COUNTER)
        width = blocks * _WORDS_PER_COUNTER
        draws = self.generator(counter=start * blocks).random(count * width)
        return draws.reshape(count, width)[:, :n]

    def metadata(self) -> dict[str, object]:
        return {
            "algorithm": RNG_ALGORITHM,
            "master_seed": self.master_seed,
            "stream_id": self.stream_id,
        }
