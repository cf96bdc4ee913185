"""Differentiable operations.

Every operation is a pure function of its inputs. When a ``tape`` is given
and some input requires a gradient, the operation records a closure over
the values its backward rule needs.
"""

from collections.abc import Sequence
from typing import NamedTuple

import numpy as np

from absa.domain.error import DimensionError, InvalidConfigurationError
from absa.domain.tensor.tensor import Grad, GradTape, RowSparse, Tensor
from absa.domain.value import Mode

# Log clamp for cross-entropy
EPSILON = 1e-12


def _emit(
    op: str,
    inputs: Sequence[Tensor],
    data: np.ndarray,
    tape: GradTape | None,
    backward,
) -> Tensor:
    out = Tensor(data, name=op)
    if tape is not None and any(t.requires_grad for t in inputs):
        tape.record(op, inputs, out, backward)
    return out


def matmul(a: Tensor, b: Tensor, tape: GradTape | None = None) -> Tensor:
    """Matrix product of an (m, k) matrix with a (k, n) matrix or a (k,) vector."""
    if a.data.ndim != 2 or b.data.ndim not in (1, 2) or a.shape[1] != b.shape[0]:
        raise DimensionError("matmul", a.shape, b.shape)
    A, B = a.data, b.data

    def backward(g: np.ndarray) -> tuple[Grad, Grad]:
        if B.ndim == 1:
            return np.outer(g, B), A.T @ g
        return g @ B.T, A.T @ g

    return _emit("matmul", (a, b), A @ B, tape, backward)


def add(a: Tensor, b: Tensor, tape: GradTape | None = None) -> Tensor:
    """Elementwise sum; ``b`` may also be a bias broadcast along the last axis."""
    if a.shape != b.shape and not (b.data.ndim == 1 and a.shape[-1:] == b.shape):
        raise DimensionError("add", a.shape, b.shape)
    broadcast = a.shape != b.shape

    def backward(g: np.ndarray) -> tuple[Grad, Grad]:
        if broadcast:
            return g, g.reshape(-1, g.shape[-1]).sum(axis=0)
        return g, g

    return _emit("add", (a, b), a.data + b.data, tape, backward)


def mul(a: Tensor, b: Tensor, tape: GradTape | None = None) -> Tensor:
    """Elementwise product of equally shaped tensors."""
    if a.shape != b.shape:
        raise DimensionError("mul", a.shape, b.shape)
    A, B = a.data, b.data
    return _emit("mul", (a, b), A * B, tape, lambda g: (g * B, g * A))


def scale(x: Tensor, factor: float, tape: GradTape | None = None) -> Tensor:
    return _emit("scale", (x,), x.data * factor, tape, lambda g: (g * factor,))


def total(terms: Sequence[Tensor], tape: GradTape | None = None) -> Tensor:
    """Sum of scalar tensors, added in the given order."""
    if not terms:
        return Tensor(0.0)
    out = np.zeros(())
    for t in terms:
        if t.size != 1:
            raise DimensionError("total", t.shape, ())
        out = out + t.data.reshape(())
    return _emit("total", tuple(terms), out, tape, lambda g: tuple(np.full(t.shape, float(g)) for t in terms))


def relu(x: Tensor, tape: GradTape | None = None) -> Tensor:
    """max(0, x); the gradient at exactly 0 is 0."""
    active = x.data > 0
    return _emit("relu", (x,), np.where(active, x.data, 0.0), tape, lambda g: (g * active,))


def sigmoid(x: Tensor, tape: GradTape | None = None) -> Tensor:
    y = _sigmoid(x.data)
    return _emit("sigmoid", (x,), y, tape, lambda g: (g * y * (1.0 - y),))


def tanh(x: Tensor, tape: GradTape | None = None) -> Tensor:
    y = np.tanh(x.data)
    return _emit("tanh", (x,), y, tape, lambda g: (g * (1.0 - y * y),))


def softmax(x: Tensor, tape: GradTape | None = None) -> Tensor:
    """Softmax over the last axis, computed after subtracting the row maximum."""
    y = softmax_array(x.data)

    def backward(g: np.ndarray) -> tuple[Grad]:
        return (y * (g - np.sum(g * y, axis=-1, keepdims=True)),)

    return _emit("softmax", (x,), y, tape, backward)


def cross_entropy(target: Tensor | np.ndarray, probs: Tensor, tape: GradTape | None = None) -> Tensor:
    """-sum(y * log(p)) over all entries.

    ``target`` holds one-hot rows; several rows are summed, which gives
    the joint loss over all aspects in a single call. Probabilities below
    ``EPSILON`` are clamped inside the logarithm.
    """
    y = target.data if isinstance(target, Tensor) else np.asarray(target, dtype=np.float64)
    if y.shape != probs.shape:
        raise DimensionError("cross_entropy", y.shape, probs.shape)
    p = probs.data
    clamped = np.maximum(p, EPSILON)
    loss = -np.sum(y * np.log(clamped))

    def backward(g: np.ndarray) -> tuple[Grad]:
        return (np.where(p >= EPSILON, -float(g) * y / clamped, 0.0),)

    return _emit("cross_entropy", (probs,), np.asarray(loss), tape, backward)


def dropout(
    x: Tensor,
    rate: float,
    mode: Mode,
    rng: np.random.Generator | None,
    tape: GradTape | None = None,
) -> Tensor:
    """Inverted dropout: zero with probability ``rate``, scale survivors by 1/(1-rate).

    In infer mode, or at rate 0, the input tensor itself is returned.
    """
    if not 0.0 <= rate < 1.0:
        raise InvalidConfigurationError(f"Dropout rate must be in [0, 1), got {rate}")
    if mode is Mode.INFER or rate == 0.0:
        return x
    if rng is None:
        raise InvalidConfigurationError("Dropout in train mode needs a random generator")
    mask = (rng.random(x.shape) >= rate) / (1.0 - rate)
    return _emit("dropout", (x,), x.data * mask, tape, lambda g: (g * mask,))


def concat(parts: Sequence[Tensor], tape: GradTape | None = None) -> Tensor:
    """Concatenate vectors."""
    if any(p.data.ndim != 1 for p in parts):
        raise DimensionError("concat", *(p.shape for p in parts))
    bounds = np.cumsum([0, *(p.size for p in parts)])

    def backward(g: np.ndarray) -> tuple[Grad, ...]:
        return tuple(g[bounds[i] : bounds[i + 1]] for i in range(len(parts)))

    return _emit("concat", tuple(parts), np.concatenate([p.data for p in parts]), tape, backward)


def reshape(x: Tensor, shape: tuple[int, ...], tape: GradTape | None = None) -> Tensor:
    if int(np.prod(shape)) != x.size:
        raise DimensionError("reshape", x.shape, shape)
    original = x.shape
    return _emit("reshape", (x,), x.data.reshape(shape), tape, lambda g: (g.reshape(original),))


def gather_row(table: Tensor, index: int, tape: GradTape | None = None) -> Tensor:
    """Row ``index`` of a matrix; the gradient touches that row only."""
    if table.data.ndim != 2 or not 0 <= index < table.shape[0]:
        raise DimensionError("gather_row", table.shape, (index,))
    shape = table.shape

    def backward(g: np.ndarray) -> tuple[Grad]:
        return (RowSparse(np.array([index]), g[None, :], shape),)

    return _emit("gather_row", (table,), table.data[index].copy(), tape, backward)


class Lookup(NamedTuple):
    """How one token position is embedded.

    Precedence: a word row, else bucket rows, else a constant vector, else
    the zero vector (padding). Bucket rows are summed and divided by
    ``share`` (their count when zero); a constant given alongside them is
    added on top, holding the part of the mean that lies outside ``buckets``.
    """

    word: int | None = None
    buckets: tuple[int, ...] = ()
    constant: np.ndarray | None = None
    share: int = 0


PAD = Lookup()


def embed(
    words: Tensor,
    buckets: Tensor | None,
    lookups: Sequence[Lookup],
    tape: GradTape | None = None,
) -> Tensor:
    """Embed a token sequence into a (T, d) matrix.

    Word rows receive their position's gradient, bucket rows an equal share
    of it. Padding and constant rows receive nothing.
    """
    dim = words.shape[1]
    out = np.zeros((len(lookups), dim))
    word_pos: list[int] = []
    word_rows: list[int] = []
    bucket_pos: list[int] = []
    bucket_rows: list[int] = []
    bucket_weight: list[float] = []
    for t, lookup in enumerate(lookups):
        if lookup.word is not None:
            out[t] = words.data[lookup.word]
            word_pos.append(t)
            word_rows.append(lookup.word)
        elif lookup.buckets:
            if buckets is None:
                raise DimensionError("embed", words.shape, (0, dim))
            ids = list(lookup.buckets)
            share = lookup.share or len(ids)
            out[t] = buckets.data[ids].sum(axis=0) / share
            if lookup.constant is not None:
                out[t] += lookup.constant
            bucket_pos.extend([t] * len(ids))
            bucket_rows.extend(ids)
            bucket_weight.extend([1.0 / share] * len(ids))
        elif lookup.constant is not None:
            out[t] = lookup.constant

    def backward(g: np.ndarray) -> tuple[Grad | None, ...]:
        word_grad = RowSparse(np.array(word_rows, dtype=np.int64), g[word_pos], words.shape)
        if buckets is None:
            return (word_grad,)
        bucket_grad = RowSparse(
            np.array(bucket_rows, dtype=np.int64),
            g[bucket_pos] * np.array(bucket_weight)[:, None],
            buckets.shape,
        )
        return word_grad, bucket_grad

    inputs = (words,) if buckets is None else (words, buckets)
    return _emit("embed", inputs, out, tape, backward)


def conv1d(x: Tensor, filters: Tensor, bias: Tensor, tape: GradTape | None = None) -> Tensor:
    """Valid 1-D convolution over time.

    ``x`` is (T, d), ``filters`` is (F, w, d), ``bias`` is (F,); the result is
    (T - w + 1, F) with one row per window position.
    """
    length, dim = x.shape
    count, width, fdim = filters.shape
    if fdim != dim or bias.shape != (count,) or length < width:
        raise DimensionError("conv1d", x.shape, filters.shape, bias.shape)
    positions = length - width + 1
    # (P, w, d) windows flattened to (P, w*d)
    windows = np.lib.stride_tricks.sliding_window_view(x.data, width, axis=0)
    windows = windows.transpose(0, 2, 1).reshape(positions, width * dim)
    kernel = filters.data.reshape(count, width * dim)
    out = windows @ kernel.T + bias.data

    def backward(g: np.ndarray) -> tuple[Grad, Grad, Grad]:
        grad_kernel = (g.T @ windows).reshape(filters.shape)
        grad_windows = (g @ kernel).reshape(positions, width, dim)
        grad_x = np.zeros((length, dim))
        for k in range(width):
            grad_x[k : k + positions] += grad_windows[:, k, :]
        return grad_x, grad_kernel, g.sum(axis=0)

    return _emit("conv1d", (x, filters, bias), out, tape, backward)


def max_over_time(x: Tensor, tape: GradTape | None = None) -> Tensor:
    """Column maxima of a (P, F) matrix; the first maximal position wins."""
    if x.data.ndim != 2 or x.shape[0] == 0:
        raise DimensionError("max_over_time", x.shape)
    winners = np.argmax(x.data, axis=0)
    columns = np.arange(x.shape[1])

    def backward(g: np.ndarray) -> tuple[Grad]:
        grad = np.zeros(x.shape)
        grad[winners, columns] = g
        return (grad,)

    return _emit("max_over_time", (x,), x.data[winners, columns], tape, backward)


def lstm(
    x: Tensor,
    w_input: Tensor,
    w_hidden: Tensor,
    bias: Tensor,
    reverse: bool = False,
    tape: GradTape | None = None,
) -> Tensor:
    """Final hidden state of an LSTM run over the rows of ``x``.

    Gates are stacked input, forget, candidate, output in ``w_input`` (4H, d),
    ``w_hidden`` (4H, H) and ``bias`` (4H,). The state starts at zero. With
    ``reverse`` the sequence is read right to left.
    """
    length, dim = x.shape
    hidden = w_hidden.shape[1]
    if w_input.shape != (4 * hidden, dim) or w_hidden.shape != (4 * hidden, hidden) or bias.shape != (4 * hidden,):
        raise DimensionError("lstm", x.shape, w_input.shape, w_hidden.shape, bias.shape)
    Wx, Wh, b = w_input.data, w_hidden.data, bias.data
    order = range(length - 1, -1, -1) if reverse else range(length)

    h = np.zeros(hidden)
    c = np.zeros(hidden)
    steps = []
    for t in order:
        z = Wx @ x.data[t] + Wh @ h + b
        i = _sigmoid(z[:hidden])
        f = _sigmoid(z[hidden : 2 * hidden])
        g = np.tanh(z[2 * hidden : 3 * hidden])
        o = _sigmoid(z[3 * hidden :])
        c_next = f * c + i * g
        tc = np.tanh(c_next)
        steps.append((t, i, f, g, o, c, h, tc))
        h = o * tc
        c = c_next

    def backward(grad_h: np.ndarray) -> tuple[Grad, Grad, Grad, Grad]:
        grad_x = np.zeros_like(x.data)
        grad_wx = np.zeros_like(Wx)
        grad_wh = np.zeros_like(Wh)
        grad_b = np.zeros_like(b)
        dh = grad_h
        dc = np.zeros(hidden)
        for t, i, f, g, o, c_prev, h_prev, tc in reversed(steps):
            do = dh * tc
            dc = dc + dh * o * (1.0 - tc * tc)
            dz = np.concatenate(
                [
                    dc * g * i * (1.0 - i),
                    dc * c_prev * f * (1.0 - f),
                    dc * i * (1.0 - g * g),
                    do * o * (1.0 - o),
                ]
            )
            grad_wx += np.outer(dz, x.data[t])
            grad_wh += np.outer(dz, h_prev)
            grad_b += dz
            grad_x[t] = Wx.T @ dz
            dh = Wh.T @ dz
            dc = dc * f
        return grad_x, grad_wx, grad_wh, grad_b

    return _emit("lstm", (x, w_input, w_hidden, bias), h, tape, backward)


def softmax_array(x: np.ndarray) -> np.ndarray:
    shifted = x - np.max(x, axis=-1, keepdims=True)
    e = np.exp(shifted)
    return e / np.sum(e, axis=-1, keepdims=True)


def _sigmoid(x: np.ndarray) -> np.ndarray:
    return 0.5 * (1.0 + np.tanh(0.5 * x))
