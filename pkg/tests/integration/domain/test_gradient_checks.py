"""Finite-difference checks of every architecture's exact gradients."""

import numpy as np
import pytest

from absa.application.usecase.workspace import network_config
from absa.config import NetworkSettings
from absa.domain.network import PipelineNetwork, build_network
from absa.domain.tensor import finite_diff_gradient, ops
from absa.domain.value import Architecture, Mode, Polarity, Split
from tests.conftest import synthetic_splits, toy_catalog, toy_network, toy_settings, toy_table

TOKENS = ("heute", "zug", "gut", "personal", "schlecht", "neuwort")
LABELS = {"Zugfahrt": Polarity.POSITIVE, "Service": Polarity.NEGATIVE}


@pytest.mark.parametrize("architecture", list(Architecture))
def test_network_gradients_match_central_differences(architecture):
    """Every parameter, embedding tables included, agrees with the numeric estimate."""
    # Arrange
    network = toy_network(architecture, table=toy_table(buckets=16), seed=4)
    instances = network.instances([(TOKENS, LABELS)])
    if isinstance(network, PipelineNetwork):
        assert len(instances) == 2

    def loss_value() -> float:
        return sum(network.instance_loss(i, Mode.TRAIN, np.random.default_rng(0)).item() for i in instances)

    # Act
    tape = network.new_tape()
    terms = [network.instance_loss(i, Mode.TRAIN, np.random.default_rng(0), tape) for i in instances]
    grads = network.backward(tape, ops.total(terms, tape))
    params = network.parameters()
    numeric = finite_diff_gradient(lambda ps: loss_value(), params)

    # Assert
    for p, estimate in zip(params, numeric, strict=True):
        analytic = grads.dense(p)
        np.testing.assert_allclose(analytic, estimate, rtol=1e-4, atol=1e-6, err_msg=f"{architecture}: {p.name}")


@pytest.mark.parametrize("architecture", list(Architecture))
def test_gradients_match_with_dropout_masks_held_fixed(architecture):
    """With dropout active, each evaluation redraws the same masks from an identically seeded generator."""
    # Arrange
    settings = toy_settings(
        network=NetworkSettings(filter_widths=(1, 2), filters=4, hidden_size=6, aspect_embedding_dim=3, dropout=0.3)
    )
    table = toy_table(buckets=16)
    train_tokens = [t for doc in synthetic_splits()[Split.TRAIN] for t in doc.tokens]
    network = build_network(
        architecture, toy_catalog(), table, [*train_tokens, *TOKENS], network_config(settings, table.dim), seed=4
    )
    instances = network.instances([(TOKENS, LABELS)])

    def loss_value(seed: int = 0) -> float:
        return sum(network.instance_loss(i, Mode.TRAIN, np.random.default_rng(seed)).item() for i in instances)

    # Act
    tape = network.new_tape()
    terms = [network.instance_loss(i, Mode.TRAIN, np.random.default_rng(0), tape) for i in instances]
    grads = network.backward(tape, ops.total(terms, tape))
    params = network.parameters()
    numeric = finite_diff_gradient(lambda ps: loss_value(), params)

    # Assert
    assert network.embedding.buckets.shape[0] > 0
    assert loss_value(0) != loss_value(1)
    for p, estimate in zip(params, numeric, strict=True):
        analytic = grads.dense(p)
        np.testing.assert_allclose(analytic, estimate, rtol=1e-4, atol=1e-6, err_msg=f"{architecture}: {p.name}")
