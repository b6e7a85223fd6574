"""Corner-classification networks with real, complex, and quaternion inputs.

The package splits into small layers: exact quaternion algebra and the
16-symbol alphabet, coordinate encoding schemes, the instantaneously
trained network itself, scikit-learn estimator wrappers, pattern grids
with seeded sampling, and the experiment harness behind the CLI.
"""

from .encoding import (
    QUATERNARY,
    QUATERNION,
    SCHEMES,
    UNARY,
    DecodeError,
    Scheme,
    build_input,
    codeword_length,
    codeword_to_text,
    decode_value,
    encode,
    encode_unary,
    encode_value,
    get_scheme,
    parse_codeword,
)
from .estimators import CoordinateEncoder, CornerClassifier
from .experiments import (
    CSV_HEADER,
    CsvParseError,
    RunResult,
    efficiency,
    error_coefficient,
    export_csv,
    mean_errors,
    optimal_ratio,
    parse_csv,
    render_map,
    run_experiment,
    sweep,
)
from .network import (
    CornerNetwork,
    HiddenUnit,
    TrainingSample,
    channel_distance,
    dump_network,
    hidden_fires,
    hidden_net,
    infer,
    load_network,
    predict_batch,
    s_value,
    step,
    train,
    weight_for_symbol,
)
from .patterns import (
    PatternGrid,
    PatternParseError,
    SplitMix64,
    generate_box,
    generate_spiral,
    load_pattern,
    sample_training_points,
    save_pattern,
)
from .quaternion import (
    Quaternion,
    SYMBOLS,
    is_symbol,
    mask_from_symbol,
    parse_symbol,
    symbol_from_mask,
    symbol_to_text,
)

__version__ = "0.1.0"
