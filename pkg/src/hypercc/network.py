"""Instantaneously trained corner-classification networks.

One hidden unit is created per training sample, in a single pass and with
no iterative optimization: the weights are read straight off the sample.
For a stored symbol vector a over a dim-channel alphabet, each input weight
is conjugate(2 * a_i - u) with u the all-ones symbol of the alphabet
(u = 1, 1+i, or 1+i+j+k), and the bias weight is r - s + 1 where s counts
the unit components of a and r is the radius of generalization.

This makes the hidden activation on an input x exactly r + 1 - d, where d
is the channel Hamming distance between x and a, so a unit fires (strict
step at zero) precisely when d <= r.  Output neurons add +1/-1 votes from
the firing units; ties and the no-fire case both yield 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quaternion import ONE, Quaternion, is_symbol, mask_from_symbol

__all__ = [
    "TrainingSample",
    "HiddenUnit",
    "CornerNetwork",
    "unit_sum",
    "weight_for_symbol",
    "s_value",
    "channel_distance",
    "step",
    "train",
    "hidden_net",
    "hidden_fires",
    "infer",
    "predict_batch",
    "dump_network",
    "load_network",
]

_UNIT_SUMS = {
    1: Quaternion(1, 0, 0, 0),
    2: Quaternion(1, 1, 0, 0),
    4: Quaternion(1, 1, 1, 1),
}

_POPCOUNT = np.array([bin(m).count("1") for m in range(16)], dtype=np.uint8)


def unit_sum(dim: int) -> Quaternion:
    """The all-ones symbol of a dim-channel alphabet."""
    try:
        return _UNIT_SUMS[dim]
    except KeyError:
        raise ValueError(f"dim must be 1, 2, or 4, got {dim}") from None


@dataclass(frozen=True)
class TrainingSample:
    """One memorized pattern: a symbol vector (no bias element) and its output bits."""

    input: tuple[Quaternion, ...]
    outputs: tuple[int, ...]

    def __init__(self, input, outputs):
        object.__setattr__(self, "input", tuple(input))
        object.__setattr__(self, "outputs", tuple(outputs))
        if any(bit not in (0, 1) for bit in self.outputs):
            raise ValueError(f"outputs must be 0/1 bits, got {self.outputs}")


@dataclass(frozen=True)
class HiddenUnit:
    """Weights memorizing one training sample.

    weights holds one quaternion per non-bias input, bias_weight is the
    integer r - s + 1, and output_weights holds one +1/-1 vote per output
    neuron.
    """

    weights: tuple[Quaternion, ...]
    bias_weight: int
    output_weights: tuple[int, ...]

    def stored_masks(self) -> tuple[int, ...]:
        """Recover the memorized symbol masks from the weights."""
        masks = []
        for w in self.weights:
            v = w.conjugate()  # 2a - u
            mask = 0
            for bit, component in enumerate(v.components()):
                if component == 1:
                    mask |= 1 << bit
                elif component not in (0, -1):
                    raise ValueError(f"weight {w} is not a prescriptive weight")
            masks.append(mask)
        return tuple(masks)


@dataclass(frozen=True)
class CornerNetwork:
    """An instantaneously trained network; immutable once built."""

    radius: int
    dim: int
    input_len: int
    output_count: int
    units: tuple[HiddenUnit, ...]


def weight_for_symbol(symbol: Quaternion, dim: int) -> Quaternion:
    """Prescriptive input weight: conjugate(2 * symbol - u).

    Reduces to +1 for an input of 1 and -1 for an input of 0 when dim is 1.
    """
    u = unit_sum(dim)
    if not is_symbol(symbol) or mask_from_symbol(symbol) >= (1 << dim):
        raise ValueError(f"{symbol!r} is not in the {dim}-channel alphabet")
    return (2 * symbol - u).conjugate()


def s_value(input) -> int:
    """Count of unit components across a symbol vector (sum of squared norms)."""
    return sum(q.norm_sq() for q in input)


def channel_distance(x, y) -> int:
    """Bit differences summed over the 4-bit masks of corresponding symbols."""
    x, y = tuple(x), tuple(y)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")
    return sum((mask_from_symbol(p) ^ mask_from_symbol(q)).bit_count()
               for p, q in zip(x, y))


def step(v: int) -> int:
    """Strict binary step: 1 for positive net input, else 0."""
    return 1 if v > 0 else 0


def train(samples, radius: int, dim: int) -> CornerNetwork:
    """Build the network in one pass over the samples.

    Samples are consumed once and not retained; everything the network
    needs lives in the per-unit weights.
    """
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    unit_sum(dim)  # validates dim
    units = []
    input_len = output_count = None
    for sample in samples:
        if input_len is None:
            input_len, output_count = len(sample.input), len(sample.outputs)
        elif (len(sample.input), len(sample.outputs)) != (input_len, output_count):
            raise ValueError("training samples disagree on input/output lengths")
        weights = tuple(weight_for_symbol(sym, dim) for sym in sample.input)
        bias_weight = radius - s_value(sample.input) + 1
        output_weights = tuple(1 if bit else -1 for bit in sample.outputs)
        units.append(HiddenUnit(weights, bias_weight, output_weights))
    if not units:
        raise ValueError("cannot train on an empty sample list")
    return CornerNetwork(radius=radius, dim=dim, input_len=input_len,
                         output_count=output_count, units=tuple(units))


def hidden_net(unit: HiddenUnit, input_with_bias) -> int:
    """Net input of one hidden unit: sum of Re(w_i * x_i) plus the bias weight."""
    x = tuple(input_with_bias)
    if len(x) != len(unit.weights) + 1:
        raise ValueError(f"expected {len(unit.weights) + 1} symbols "
                         f"(including bias), got {len(x)}")
    if x[-1] != ONE:
        raise ValueError("bias element must be the symbol 1")
    total = unit.bias_weight
    for w, sym in zip(unit.weights, x):
        total += (w * sym).a
    return total


def _with_bias(net: CornerNetwork, input) -> tuple[Quaternion, ...]:
    x = tuple(input)
    if len(x) != net.input_len:
        raise ValueError(f"expected {net.input_len} input symbols, got {len(x)}")
    return x + (ONE,)


def hidden_fires(net: CornerNetwork, input) -> tuple[int, ...]:
    """Per-unit fire flags for a bias-free input vector."""
    x = _with_bias(net, input)
    return tuple(step(hidden_net(unit, x)) for unit in net.units)


def infer(net: CornerNetwork, input) -> tuple[int, ...]:
    """Classify one bias-free input vector.

    Each firing unit votes with its +1/-1 output weights; an output bit is
    1 only when its vote total is strictly positive, so a tie or an empty
    fire set yields 0.
    """
    fires = hidden_fires(net, input)
    votes = [0] * net.output_count
    for fire, unit in zip(fires, net.units):
        if fire:
            for j, vote in enumerate(unit.output_weights):
                votes[j] += vote
    return tuple(step(v) for v in votes)


def predict_batch(net: CornerNetwork, masks) -> np.ndarray:
    """Classify many inputs given as rows of symbol masks.

    Vectorized equivalent of infer: a unit fires when the summed mask
    Hamming distance to its stored vector is within the radius.  Returns
    an array of output bits with shape (n_inputs, output_count).
    """
    x = np.asarray(masks, dtype=np.uint8)
    if x.ndim != 2 or x.shape[1] != net.input_len:
        raise ValueError(f"mask array must have shape (n, {net.input_len})")
    if x.size and (x >> net.dim).any():
        raise ValueError(f"mask outside the {net.dim}-channel alphabet")
    stored = np.array([unit.stored_masks() for unit in net.units], dtype=np.uint8)
    votes_w = np.array([unit.output_weights for unit in net.units], dtype=np.int64)
    distances = _POPCOUNT[stored[np.newaxis, :, :] ^ x[:, np.newaxis, :]].sum(
        axis=2, dtype=np.int64)
    fires = distances <= net.radius
    votes = fires.astype(np.int64) @ votes_w
    return (votes > 0).astype(np.int64)


_DUMP_HEADER = "corner-network v1"


def dump_network(net: CornerNetwork) -> str:
    """Line-oriented text dump; round-trips through load_network."""
    lines = [
        _DUMP_HEADER,
        f"radius {net.radius}",
        f"dim {net.dim}",
        f"inputs {net.input_len}",
        f"outputs {net.output_count}",
    ]
    for unit in net.units:
        weights = ",".join(str(w) for w in unit.weights)
        outs = ",".join(f"{w:+d}" for w in unit.output_weights)
        lines.append(f"unit {weights} ; {unit.bias_weight} ; {outs}")
    return "\n".join(lines) + "\n"


def load_network(text: str) -> CornerNetwork:
    lines = text.splitlines()
    if not lines or lines[0] != _DUMP_HEADER:
        raise ValueError("not a corner-network dump")
    fields = {}
    for line in lines[1:5]:
        key, _, value = line.partition(" ")
        fields[key] = int(value)
    units = []
    for line in lines[5:]:
        if not line.strip():
            continue
        if not line.startswith("unit "):
            raise ValueError(f"unexpected line in network dump: {line!r}")
        weights_part, bias_part, outs_part = line[len("unit "):].split(" ; ")
        weights = tuple(Quaternion.parse(t) for t in weights_part.split(","))
        output_weights = tuple(int(t) for t in outs_part.split(","))
        units.append(HiddenUnit(weights, int(bias_part), output_weights))
    return CornerNetwork(radius=fields["radius"], dim=fields["dim"],
                         input_len=fields["inputs"], output_count=fields["outputs"],
                         units=tuple(units))
