"""Enumerations shared across the domain."""

from enum import Enum


class Polarity(str, Enum):
    """Sentiment polarity of an aspect mention.

    Declaration order is the class order used everywhere: in the joint
    label vector the classes are 1/2/3 (0 is N/A), in the pipeline
    polarity head they are 0/1/2.
    """

    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"

    @property
    def joint_index(self) -> int:
        """Class index in the joint {N/A, positive, negative, neutral} encoding."""
        return POLARITY_ORDER.index(self) + 1

    @property
    def pipeline_index(self) -> int:
        """Class index in the 3-way pipeline polarity head."""
        return POLARITY_ORDER.index(self)

    @classmethod
    def from_joint_index(cls, index: int) -> "Polarity":
        return POLARITY_ORDER[index - 1]

    @classmethod
    def from_pipeline_index(cls, index: int) -> "Polarity":
        return POLARITY_ORDER[index]


POLARITY_ORDER: tuple[Polarity, ...] = (
    Polarity.POSITIVE,
    Polarity.NEGATIVE,
    Polarity.NEUTRAL,
)

# Index 0 of the joint encoding
NOT_APPLICABLE = 0
JOINT_CLASSES = 1 + len(POLARITY_ORDER)


class Split(str, Enum):
    """Dataset split a document belongs to."""

    TRAIN = "train"
    DEV = "dev"
    TEST_SYN = "test-syn"
    TEST_DIA = "test-dia"


class TaskMode(str, Enum):
    """Evaluation task: triples (aspect + polarity) or pairs (aspect only)."""

    ASPECT_SENTIMENT = "aspect+sentiment"
    ASPECT_ONLY = "aspect-only"


class Mode(str, Enum):
    """Forward-pass mode; dropout is active only in TRAIN."""

    TRAIN = "train"
    INFER = "infer"


class Architecture(str, Enum):
    """The four model architectures."""

    E2E_CNN = "e2e-cnn"
    E2E_LSTM = "e2e-lstm"
    PIPE_CNN = "pipe-cnn"
    PIPE_LSTM = "pipe-lstm"

    @property
    def encoder(self) -> "EncoderKind":
        if self in (Architecture.E2E_CNN, Architecture.PIPE_CNN):
            return EncoderKind.CNN
        return EncoderKind.LSTM

    @property
    def is_pipeline(self) -> bool:
        return self in (Architecture.PIPE_CNN, Architecture.PIPE_LSTM)


class EncoderKind(str, Enum):
    """Document encoder family."""

    CNN = "cnn"
    LSTM = "lstm"


class EmbeddingSource(str, Enum):
    """Algorithm that produced the pretrained embedding file."""

    WORD2VEC = "word2vec"
    GLOVE = "glove"
    FASTTEXT = "fasttext"
    OTHER = "other"
