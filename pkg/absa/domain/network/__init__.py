"""The four architectures and their building blocks."""

from absa.domain.network.base import Instance, Network
from absa.domain.network.bundle import ModelBundle
from absa.domain.network.detector import AspectDetector, LogisticAspectDetector, detect_aspects
from absa.domain.network.embedding_layer import EmbeddingLayer
from absa.domain.network.encoder import BiLstmEncoder, CnnEncoder, bilstm_encode, cnn_encode
from absa.domain.network.factory import build_network, restore_network
from absa.domain.network.joint import JointNetwork, aspect_scores, decode, joint_loss, one_hot
from absa.domain.network.params import ParamStore
from absa.domain.network.pipeline import PipelineNetwork, pipeline_classify, polarity_scores

__all__ = [
    "AspectDetector",
    "BiLstmEncoder",
    "CnnEncoder",
    "EmbeddingLayer",
    "Instance",
    "JointNetwork",
    "LogisticAspectDetector",
    "ModelBundle",
    "Network",
    "ParamStore",
    "PipelineNetwork",
    "aspect_scores",
    "bilstm_encode",
    "build_network",
    "cnn_encode",
    "decode",
    "detect_aspects",
    "joint_loss",
    "one_hot",
    "pipeline_classify",
    "polarity_scores",
    "restore_network",
]
